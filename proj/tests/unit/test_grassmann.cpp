#include <doctest.h>

#include "grasscoh/grassmann.hpp"
#include "grasscoh/slices.hpp"
#include "oracles/oracle_data.hpp"

using namespace grasscoh;

TEST_CASE("relations match the power-series oracle") {
  for (const auto& c : oracle::kRelations) {
    auto a = relations_multinomial(c.n, c.k);
    auto b = relations_inverse(c.n, c.k);
    REQUIRE(a.size() == c.relations.size());
    for (std::size_t j = 0; j < a.size(); ++j) {
      auto want = parse_polynomial(c.relations[j], static_cast<std::size_t>(c.k));
      CHECK(a[j] == want);
      CHECK(b[j] == want);
      CHECK(a[j].is_homogeneous_of(c.n - c.k + static_cast<long>(j) + 1));
    }
  }
}

TEST_CASE("I_{6,3} first relation") {
  auto r = presentation(6, 3).relations[0];
  CHECK(r.to_string() == "x1^4 - 3*x1^2*x2 + 2*x1*x3 + x2^2");
}

TEST_CASE("formal inverse pieces multiply the total class to 1") {
  for (int k = 1; k <= 5; ++k) {
    auto inv = inverse_total_class(k, 9);
    REQUIRE(inv.size() == 10);
    Polynomial c = Polynomial::constant(static_cast<std::size_t>(k), 1);
    for (std::size_t i = 0; i < static_cast<std::size_t>(k); ++i) c += Polynomial::variable(static_cast<std::size_t>(k), i);
    Polynomial total(static_cast<std::size_t>(k));
    for (const auto& p : inv) total += p;
    Polynomial prod = c * total;
    CHECK(prod.homogeneous_part(0) == Polynomial::constant(static_cast<std::size_t>(k), 1));
    for (long w = 1; w <= 9; ++w) CHECK(prod.homogeneous_part(w).is_zero());
  }
}

TEST_CASE("restriction maps are well defined in both directions") {
  for (int n = 3; n <= 9; ++n) {
    for (int k = 1; k < n; ++k) {
      auto ri = restriction_i(n, k);
      CHECK(ri.source.n == n + 1);
      CHECK(ri.target.n == n);
      for (const auto& r : ri.source.relations) CHECK(is_member(ri.target, r.substitute(ri.images)));
      auto rj = restriction_j(n, k);
      CHECK(rj.source.k == k + 1);
      CHECK(rj.images.back().is_zero());
      for (const auto& r : rj.source.relations) CHECK(is_member(rj.target, r.substitute(rj.images)));
    }
  }
}

TEST_CASE("invalid indices are rejected") {
  CHECK_THROWS_AS(presentation(3, 4), InvalidArgument);
  CHECK_THROWS_AS(presentation(0, 0), InvalidArgument);
  CHECK_THROWS_AS(relations_multinomial(5, 0), InvalidArgument);
  CHECK_NOTHROW(presentation(4, 4));
}
