#include <doctest.h>

#include "grasscoh/gclassify.hpp"
#include "grasscoh/homsearch.hpp"
#include "grasscoh/slices.hpp"
#include "grasscoh/solver.hpp"
#include "oracles/oracle_data.hpp"
#include "scanner.hpp"

using namespace grasscoh;

TEST_CASE("general ansatz shape") {
  auto a = build_ansatz(presentation(6, 3), presentation(6, 2), AnsatzMode::General);
  CHECK(a.param_names == std::vector<std::string>{"a10", "a20", "a01", "a30", "a11"});
  CHECK(a.param_weights == std::vector<int>{1, 2, 2, 3, 3});
  CHECK(ansatz_parameter_count(presentation(6, 3), presentation(6, 2), AnsatzMode::General) == 5);
  for (std::size_t r = 0; r < a.images.size(); ++r) CHECK(a.images[r].is_homogeneous_of(static_cast<long>(r) + 1));
  // Monomials already in the target ideal carry no parameter: y^3 vanishes in Q[y]/(y^3).
  auto small = build_ansatz(presentation(6, 4), presentation(3, 1), AnsatzMode::General);
  CHECK(small.param_names.size() == 2);
}

TEST_CASE("projective and divisible ansatz") {
  auto p = build_ansatz(presentation(5, 2), presentation(5, 1), AnsatzMode::Projective);
  CHECK(p.param_names == std::vector<std::string>{"t1", "t2"});
  auto sys = generate_constraints(p);
  REQUIRE(sys.equations.size() == 1);
  CHECK(sys.equations[0] == parse_polynomial("t1^4 - 3*t1^2*t2 + t2^2", 2));
  CHECK(sys.origins[0] == "coefficient of y1^4 in phi(R_1)");
  auto d = build_ansatz(presentation(6, 3), presentation(6, 1), AnsatzMode::Divisible);
  CHECK(d.param_names.size() == 1);
  CHECK_THROWS_AS(build_ansatz(presentation(7, 3), presentation(7, 1), AnsatzMode::Divisible), InvalidArgument);
  CHECK_THROWS_AS(build_ansatz(presentation(6, 3), presentation(6, 2), AnsatzMode::Projective), InvalidArgument);
}

TEST_CASE("divisible family is a homomorphism with phi(R_k) = (-1)^q c^q y^n") {
  for (int n = 2; n <= 12; ++n) {
    for (int k = 2; k <= n; ++k) {
      if (n % k != 0) continue;
      auto src = presentation(n, k);
      auto tgt = presentation(n, 1);
      auto a = build_ansatz(src, tgt, AnsatzMode::Divisible);
      for (int c = 1; c <= 3; ++c) {
        auto img = specialize_images(a, {Rational(c)});
        CHECK(verify_hom(src, tgt, img));
        const int q = n / k;
        Rational want = 1;
        for (int i = 0; i < q; ++i) want *= -c;
        CHECK(src.relations.back().substitute(img) == Polynomial::monomial(Exponents{n}, want));
      }
    }
  }
}

TEST_CASE("constraint system and verify_hom agree on scanned points") {
  // (n,2) -> (n,1) has two parameters; the constraint is g_n(a1, a2) = 0.
  for (int n = 4; n <= 8; ++n) {
    auto src = presentation(n, 2);
    auto tgt = presentation(n, 1);
    auto a = build_ansatz(src, tgt, AnsatzMode::General);
    auto sys = generate_constraints(a);
    scan::for_each_point(2, 4, [&](const std::vector<Rational>& pt) {
      bool eq = scan::satisfies(sys, pt);
      CHECK(eq == verify_hom(src, tgt, specialize_images(a, pt)));
      CHECK(eq == (g_poly(n).evaluate(pt) == 0));
    });
  }
}

TEST_CASE("rho reduction counts relations of weight divisible by l") {
  auto red = rho_reduction(build_ansatz(presentation(12, 6), presentation(12, 4), AnsatzMode::General));
  CHECK(red.e == 1);
  CHECK(red.f == 2);
  CHECK(red.e1 == 3);
  CHECK(red.f1 == 0);
  CHECK(red.relation_indices == std::vector<int>{2, 6});
  CHECK(red.q == std::vector<int>{2, 3});
  CHECK(red.s == red.e + 1);
  REQUIRE(red.tau_params.size() == 1);
  CHECK(red.tau_params[0] >= 0);
  auto red2 = rho_reduction(build_ansatz(presentation(12, 4), presentation(12, 3), AnsatzMode::General));
  // f = 1 > f1 = 0 again; relations of weight 9 and 12
  CHECK(red2.s == red2.e + 1);
}

TEST_CASE("the (7,3) -> (7,2) coefficient matches the sympy expansion") {
  auto a = build_ansatz(presentation(7, 3), presentation(7, 2), AnsatzMode::General);
  // a10, a20, a01, a30, a11 are a, b, c, d, e.
  ParamPolynomial r2 = substitute_hom(a.source.relations[1], a.images);
  Polynomial coeff(5);
  for (const auto& [e, c] : param_coefficients(r2)) {
    if (e == Exponents{4, 1}) coeff = c;
  }
  CHECK(coeff == parse_polynomial(oracle::kSevenThreeCoefficient, 5));
}
