#include <doctest.h>

#include <numeric>

#include "grasscoh/gclassify.hpp"
#include "grasscoh/grassmann.hpp"
#include "oracles/oracle_data.hpp"

using namespace grasscoh;

TEST_CASE("g_n is the first relation of I_{n,2}") {
  for (int n = 2; n <= 16; ++n) CHECK(g_poly(n) == presentation(n, 2).relations[0]);
}

TEST_CASE("classification by n mod 12") {
  using F = GFamily;
  using V = std::vector<GFamily>;
  CHECK(classify_g_rational(12) == V{F::A, F::B, F::C, F::D});
  CHECK(classify_g_rational(2) == V{F::A});
  CHECK(classify_g_rational(3) == V{F::D});
  CHECK(classify_g_rational(8) == V{F::A, F::B});
  CHECK(classify_g_rational(18) == V{F::A, F::C, F::D});
  for (int n = 2; n <= 40; ++n) CHECK(classify_g_rational(n).empty() == (std::gcd(n, 6) == 1));
}

TEST_CASE("family membership") {
  CHECK(in_family(GFamily::A, 0, 5));
  CHECK_FALSE(in_family(GFamily::A, 0, 0));
  CHECK(in_family(GFamily::B, 2, 2));
  CHECK(in_family(GFamily::B, -Rational(4), 8));
  CHECK(in_family(GFamily::C, 3, 3));
  CHECK(in_family(GFamily::D, Rational(-1, 2), Rational(1, 4)));
  CHECK_FALSE(in_family(GFamily::D, 0, 0));
  CHECK_FALSE(in_family(GFamily::C, 1, 1));
}

TEST_CASE("rationals of bounded height") {
  auto qs = rationals_of_height(2);
  CHECK(qs.size() == 7);
  CHECK(std::is_sorted(qs.begin(), qs.end()));
  for (const auto& q : rationals_of_height(6)) CHECK(height(q) <= 6);
}

TEST_CASE("brute force matches the independent scan") {
  for (const auto& c : oracle::kGZeros) {
    auto got = brute_force_g(c.n, 6);
    REQUIRE(got.size() == c.zeros.size());
    for (std::size_t i = 0; i < got.size(); ++i) {
      CHECK(got[i].first == parse_rational(c.zeros[i][0]));
      CHECK(got[i].second == parse_rational(c.zeros[i][1]));
    }
  }
}

TEST_CASE("binomial identity behind the classification") {
  for (int n = 2; n <= 30; ++n) CHECK(sury_identity_check(n));
}
