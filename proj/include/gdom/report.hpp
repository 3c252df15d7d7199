#pragma once

// JSON renderings of certificates and classification results, and the plain
// text table view derived from them.

#include <sstream>
#include <string>

#include "json.hpp"

#include "gdom/construct.hpp"
#include "gdom/domination.hpp"

namespace gdom {

using Json = nlohmann::ordered_json;

inline Json members_json(const VertexSet& s) { return s.members(); }

inline Json to_json(const DominationCertificate& c) {
  return Json{{"family", to_string(c.graph.family())},
              {"n", c.graph.n()},
              {"d", c.graph.d()},
              {"k", c.k},
              {"set", members_json(c.set)},
              {"valid", c.valid},
              {"uncovered", members_json(c.uncovered)}};
}

inline Json to_json(const ConditionReport& c) {
  Json j = Json::object();
  auto put = [&](const char* key, const std::optional<bool>& v) {
    if (v) j[key] = *v;
  };
  put("thm2_2", c.thm2_2);
  put("thm2_3_i", c.thm2_3_i);
  put("thm2_3_ii", c.thm2_3_ii);
  put("thm2_4", c.thm2_4);
  put("thm3_2", c.thm3_2);
  put("cor3_1", c.cor3_1);
  return j;
}

inline Json to_json(const GammaResult& r) {
  Json j{{"family", to_string(r.graph.family())},
         {"n", r.graph.n()},
         {"d", r.graph.d()},
         {"k", r.k},
         {"lower", r.bounds.lower},
         {"upper", r.bounds.upper()}};
  j["gamma"] = r.gamma ? Json(*r.gamma) : Json(nullptr);
  j["bracket"] = {r.bracket_lo, r.bracket_hi};
  j["method"] = to_string(r.method);
  if (r.witness)
    j["witness"] = members_json(*r.witness);
  else
    j["witness"] = nullptr;
  if (r.witness_run) j["witness_run"] = {{"start", r.witness_run->start()}, {"length", r.witness_run->length()}};
  j["conditions"] = to_json(r.conditions);
  j["oracle_nodes"] = r.oracle_nodes;
  return j;
}

namespace detail {

inline std::string scalar_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array()) {
    std::string s;
    for (const auto& e : v) s += (s.empty() ? "" : " ") + scalar_text(e);
    return "[" + s + "]";
  }
  if (v.is_object()) {
    std::string s;
    for (auto it = v.begin(); it != v.end(); ++it) s += (s.empty() ? "" : " ") + it.key() + "=" + scalar_text(*it);
    return s;
  }
  return v.dump();
}

}  // namespace detail

// Two-column "key  value" table of a JSON object's top level.
inline std::string render_table(const Json& j) {
  std::size_t width = 0;
  for (auto it = j.begin(); it != j.end(); ++it) width = std::max(width, it.key().size());
  std::ostringstream os;
  for (auto it = j.begin(); it != j.end(); ++it)
    os << it.key() << std::string(width - it.key().size() + 2, ' ') << detail::scalar_text(*it) << '\n';
  return os.str();
}

}  // namespace gdom
