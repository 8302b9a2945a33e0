#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "grasscoh/exactmath.hpp"
#include "oracles/oracle_data.hpp"

using namespace grasscoh;

TEST_CASE("rational text round trip is canonical") {
  for (const char* s : {"0/1", "-7/3", "5/1", "123456789012345678901234567891/2"}) {
    CHECK(to_string(parse_rational(s)) == s);
  }
  CHECK(to_string(parse_rational("6/-4")) == "-3/2");
  CHECK(to_string(parse_rational("12")) == "12/1");
  CHECK_THROWS_AS(parse_rational("1/0"), InvalidArgument);
  CHECK_THROWS_AS(parse_rational("x"), InvalidArgument);
  CHECK(height(Rational(-9, 4)) == 9);
  CHECK(height(Rational(2, 7)) == 7);
}

TEST_CASE("multinomial equals the factorial quotient") {
  for (int a = 0; a <= 6; ++a) {
    for (int b = 0; b <= 6; ++b) {
      for (int c = 0; c <= 6; ++c) {
        BigInt expect = factorial(static_cast<unsigned long>(a + b + c)) /
                        (factorial(static_cast<unsigned long>(a)) * factorial(static_cast<unsigned long>(b)) *
                         factorial(static_cast<unsigned long>(c)));
        CHECK(multinomial(Exponents{a, b, c}) == expect);
      }
    }
  }
  CHECK(multinomial(Exponents{}) == 1);
  CHECK(weight(Exponents{2, 1, 1}) == 7);
  CHECK(total_degree(Exponents{2, 1, 1}) == 4);
}

TEST_CASE("binomial matches Pascal's rule") {
  for (long n = 1; n <= 30; ++n) {
    for (long k = 1; k < n; ++k) CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
  }
  CHECK(binomial(5, 7) == 0);
  CHECK(binomial(5, -1) == 0);
}

TEST_CASE("represent agrees with an exhaustive scan") {
  for (long p = 2; p <= 6; ++p) {
    for (long m0 = 0; m0 <= 2; ++m0) {
      for (long n0 = 0; n0 <= 2; ++n0) {
        for (long N = 0; N <= 60; ++N) {
          std::optional<Representation> scan;
          for (long m = m0; m * (p - 1) <= N && !scan; ++m) {
            long rest = N - m * (p - 1);
            if (rest % p == 0 && rest / p >= n0) scan = Representation{m, rest / p};
          }
          CHECK(represent(N, p, m0, n0) == scan);
          if (N > represent_bound(p, m0, n0)) CHECK(scan.has_value());
        }
      }
    }
  }
  // Minimal m wins: 1*2 + 6*3 = 20.
  CHECK(represent(20, 3, 1, 1) == Representation{1, 6});
}

TEST_CASE("rational roots of polynomials built from their roots") {
  const std::vector<std::vector<Rational>> root_sets = {
      {Rational(1, 2), Rational(-3)}, {Rational(0), Rational(5, 7), Rational(-2, 3)}, {Rational(4)}};
  for (const auto& roots : root_sets) {
    std::vector<Rational> coeffs{1};
    for (const auto& r : roots) {
      // multiply by (3x - 3r) to keep content nontrivial
      std::vector<Rational> next(coeffs.size() + 1, 0);
      for (std::size_t i = 0; i < coeffs.size(); ++i) {
        next[i] -= 3 * r * coeffs[i];
        next[i + 1] += 3 * coeffs[i];
      }
      coeffs = next;
    }
    // An irreducible quadratic factor contributes nothing.
    std::vector<Rational> with_quad(coeffs.size() + 2, 0);
    const Rational q[3] = {1, -3, 1};
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      for (std::size_t j = 0; j < 3; ++j) with_quad[i + j] += coeffs[i] * q[j];
    }
    auto expect = roots;
    std::sort(expect.begin(), expect.end());
    CHECK(rational_roots(coeffs) == expect);
    CHECK(rational_roots(with_quad) == expect);
    for (const auto& r : expect) CHECK(evaluate_univariate(with_quad, r) == 0);
  }
  CHECK_THROWS_AS(rational_roots(std::vector<Rational>{0, 0}), InvalidArgument);
}

TEST_CASE("quadratic irreducibility is the square class of the discriminant") {
  CHECK(quadratic_irreducible(1, -3, 1));        // discriminant 5
  CHECK(quadratic_irreducible(91, 364, 189));    // 63700 = 70^2 * 13
  CHECK_FALSE(quadratic_irreducible(1, -3, 2));  // (x - 1)(x - 2)
  CHECK_FALSE(quadratic_irreducible(Rational(1, 4), 1, 1));
  CHECK(is_square(BigInt(144)));
  CHECK_FALSE(is_square(BigInt(-4)));
  CHECK(is_rational_square(Rational(9, 49)));
}

TEST_CASE("quotient Hilbert dimensions are Gaussian binomial coefficients") {
  for (const auto& c : oracle::kHilbert) {
    for (std::size_t w = 0; w < c.dims.size(); ++w) CHECK(quotient_hilbert_dim(c.n, c.k, static_cast<long>(w)) == c.dims[w]);
    CHECK(quotient_hilbert_dim(c.n, c.k, static_cast<long>(c.dims.size())) == 0);
  }
}

TEST_CASE("factor and divisors") {
  CHECK(factor(BigInt(360)) == std::vector<BigInt>{2, 2, 2, 3, 3, 5});
  CHECK(factor(BigInt(-13)) == std::vector<BigInt>{13});
  CHECK(divisors(BigInt(12)) == std::vector<BigInt>{1, 2, 3, 4, 6, 12});
  for (long v = 1; v <= 200; ++v) {
    auto f = factor(BigInt(v));
    BigInt prod = std::accumulate(f.begin(), f.end(), BigInt(1), [](BigInt a, const BigInt& b) { return a * b; });
    CHECK(prod == v);
    long count = 0;
    for (long d = 1; d <= v; ++d) count += v % d == 0 ? 1 : 0;
    CHECK(static_cast<long>(divisors(BigInt(v)).size()) == count);
  }
}
