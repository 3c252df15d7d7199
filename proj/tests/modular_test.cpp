#include "gdom/modular.hpp"

#include <numeric>
#include <set>

#include <gtest/gtest.h>

#include "reference.hpp"

namespace gdom {
namespace {

TEST(GeometricSum, KnownValues) {
  EXPECT_EQ(geometric_sum(3, 3), WideInt{40});
  EXPECT_EQ(geometric_sum(2, 4), WideInt{31});
  for (std::uint64_t d = 2; d <= 10; ++d) EXPECT_EQ(geometric_sum(d, 0), WideInt{1});
}

TEST(GeometricSum, ClosedFormIdentity) {
  for (std::uint64_t d = 2; d <= 10; ++d)
    for (std::uint64_t k = 0; k <= 20; ++k)
      EXPECT_EQ(geometric_sum(d, k) * WideInt{d - 1}, checked_pow(d, k + 1) - WideInt{1}) << d << "," << k;
}

TEST(GeometricSum, OverflowIsSignalled) {
  EXPECT_THROW(geometric_sum(10, 40), RangeError);
  EXPECT_THROW(checked_pow(2, 128), RangeError);
  EXPECT_NO_THROW(checked_pow(2, 127));
  EXPECT_THROW(geometric_sum(1, 3), std::invalid_argument);
}

TEST(WideInt, CheckedArithmetic) {
  const WideInt big = WideInt::from_raw(~WideInt::rep{0});
  EXPECT_THROW(big + WideInt{1}, RangeError);
  EXPECT_THROW(WideInt{3} - WideInt{4}, RangeError);
  EXPECT_THROW(big.to_u64(), RangeError);
  EXPECT_EQ(ceil_div(WideInt{7}, WideInt{3}), WideInt{3});
  EXPECT_EQ(ceil_div(WideInt{6}, WideInt{3}), WideInt{2});
  EXPECT_EQ(checked_pow(10, 30).to_string(), "1000000000000000000000000000000");
}

TEST(ModInterval, ExamplesFromDefinition) {
  EXPECT_EQ(mod_interval(6, 8, 6).enumerate(), (std::vector<std::uint64_t>{0, 1, 2}));
  EXPECT_EQ(mod_interval(4, 1, 6).enumerate(), (std::vector<std::uint64_t>{4, 5, 0, 1}));
  for (std::uint64_t n = 1; n <= 20; ++n) EXPECT_TRUE(mod_interval(0, static_cast<std::int64_t>(n) - 1, n).is_full());
  EXPECT_EQ(mod_interval(-1, 0, 5).enumerate(), (std::vector<std::uint64_t>{4, 0}));
}

TEST(ModInterval, FullAndEmptyAreCanonical) {
  EXPECT_EQ(ModInterval(3, 7, 7), ModInterval::full(7));
  EXPECT_EQ(ModInterval(5, 0, 7), ModInterval::empty(7));
  EXPECT_THROW(ModInterval(7, 1, 7), std::invalid_argument);
  EXPECT_THROW(ModInterval(0, 8, 7), std::invalid_argument);
  EXPECT_THROW(mod_interval(0, 1, 0), std::invalid_argument);
}

// Exhaustive agreement with the literal two-branch definition.
TEST(ModInterval, MatchesLiteralDefinition) {
  for (long long n = 1; n <= 200; n += (n < 40 ? 1 : 7)) {
    for (long long i = -n; i <= 2 * n; i += (n < 40 ? 1 : 5)) {
      for (long long j = -n; j <= 2 * n; j += (n < 40 ? 1 : 3)) {
        const auto run = mod_interval(i, j, static_cast<std::uint64_t>(n));
        const auto got = run.enumerate();
        std::set<long long> as_set(got.begin(), got.end());
        ASSERT_EQ(as_set.size(), got.size());
        ASSERT_EQ(as_set, ref::literal_interval(i, j, n)) << i << " " << j << " " << n;
      }
    }
  }
}

TEST(ModInterval, MembershipMatchesEnumeration) {
  for (std::uint64_t n = 1; n <= 50; ++n)
    for (std::uint64_t s = 0; s < n; ++s)
      for (std::uint64_t len = 0; len <= n; ++len) {
        const ModInterval run(s, len, n);
        const auto members = run.enumerate();
        ASSERT_EQ(members.size(), len);
        std::set<std::uint64_t> m(members.begin(), members.end());
        for (std::uint64_t v = 0; v < n; ++v) ASSERT_EQ(run.contains(v), m.count(v) == 1);
      }
}

TEST(IntervalUnion, Examples) {
  EXPECT_TRUE(interval_union_is_consecutive(mod_interval(0, 3, 10), mod_interval(4, 6, 10)));
  EXPECT_FALSE(interval_union_is_consecutive(mod_interval(0, 3, 10), mod_interval(5, 6, 10)));
  EXPECT_TRUE(interval_union_is_consecutive(mod_interval(8, 2, 10), mod_interval(1, 5, 10)));
  EXPECT_THROW(interval_union_is_consecutive(mod_interval(0, 1, 10), mod_interval(0, 1, 11)), std::invalid_argument);
}

TEST(IntervalUnion, MatchesEnumeratedRunProperty) {
  auto is_run = [](const std::set<std::uint64_t>& s, std::uint64_t n) {
    if (s.empty() || s.size() == n) return true;
    std::size_t starts = 0;
    for (auto v : s)
      if (!s.count((v + n - 1) % n)) ++starts;
    return starts == 1;
  };
  for (std::uint64_t n = 1; n <= 9; ++n)
    for (std::uint64_t a = 0; a < n; ++a)
      for (std::uint64_t la = 0; la <= n; ++la)
        for (std::uint64_t b = 0; b < n; ++b)
          for (std::uint64_t lb = 0; lb <= n; ++lb) {
            const ModInterval x(a, la, n), y(b, lb, n);
            std::set<std::uint64_t> u;
            for (auto v : x.enumerate()) u.insert(v);
            for (auto v : y.enumerate()) u.insert(v);
            ASSERT_EQ(interval_union_is_consecutive(x, y), is_run(u, n));
            std::vector<ModInterval> runs{x, y};
            ASSERT_EQ(union_size(runs), u.size());
          }
}

TEST(LinearCongruence, Examples) {
  EXPECT_TRUE(solve_linear_congruence(2, 1, 40).empty());
  EXPECT_EQ(solve_linear_congruence(2, 6, 40), (std::vector<std::uint64_t>{3, 23}));
  for (std::uint64_t n = 1; n <= 30; ++n)
    for (std::int64_t b = -5; b < 40; ++b)
      EXPECT_EQ(solve_linear_congruence(1, b, n), (std::vector<std::uint64_t>{reduce(b, n)}));
}

TEST(LinearCongruence, MatchesScan) {
  for (long long n = 1; n <= 100; ++n)
    for (long long a = 0; a <= 100; ++a)
      for (long long b = 0; b <= 100; ++b) {
        const auto got = solve_linear_congruence(a, b, static_cast<std::uint64_t>(n));
        ASSERT_EQ(got, ref::congruence_scan(a, b, n)) << a << "x = " << b << " mod " << n;
        if (!got.empty()) {
          ASSERT_EQ(got.size(), std::gcd(static_cast<std::uint64_t>(a % n), static_cast<std::uint64_t>(n)));
        }
      }
}

TEST(LinearCongruence, NegativeAndLargeOperands) {
  const std::uint64_t n = (std::uint64_t{1} << 61) - 1;  // prime
  const auto xs = solve_linear_congruence(-3, 7, n);
  ASSERT_EQ(xs.size(), 1U);
  EXPECT_EQ(mul_mod(reduce(-3, n), xs[0], n), 7U);
}

}  // namespace
}  // namespace gdom
