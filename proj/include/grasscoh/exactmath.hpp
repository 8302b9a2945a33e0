#pragma once

// Exact scalars and small combinatorial / number-theoretic helpers.
//
// Every other module works over Q; the scalar types are GMP's, kept in
// canonical form (gcd(num, den) = 1, den > 0, zero is 0/1).

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace grasscoh {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Exponent vector (n_1, ..., n_k) of a monomial x_1^{n_1} ... x_k^{n_k}.
using Exponents = std::vector<int>;

/// Raised when a precondition on an argument is violated.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A self-check inside the library failed. Always a bug, never user error.
class InternalConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

Rational make_rational(const BigInt& num, const BigInt& den);

/// "p/q" with q > 0; integers are written "p/1".
std::string to_string(const Rational& r);
/// Inverse of to_string; also accepts a plain integer "p".
Rational parse_rational(std::string_view text);

/// max(|num|, den).
BigInt height(const Rational& r);

bool is_square(const BigInt& v);
bool is_rational_square(const Rational& r);

BigInt factorial(unsigned long n);
BigInt binomial(long n, long k);

/// Algebraic weight sum_i i * n_i (variable i, 1-based, has weight i).
long weight(std::span<const int> e);
/// |n| = sum_i n_i.
long total_degree(std::span<const int> e);

/// |n|! / (n_1! ... n_k!). Empty vector gives 1.
BigInt multinomial(std::span<const int> e);

struct Representation {
  long m = 0;
  long n = 0;
  friend bool operator==(const Representation&, const Representation&) = default;
};

/// Smallest-m solution of m(p-1) + n p = N with m >= m0, n >= n0.
std::optional<Representation> represent(long N, long p, long m0, long n0);

/// The threshold p(p-1) + n0 p + m0(p-1) above which represent never fails.
long represent_bound(long p, long m0, long n0);

/// All rational roots of sum_i coeffs[i] x^i, ascending and without repeats.
/// coeffs is in ascending degree order; the zero polynomial is rejected.
std::vector<Rational> rational_roots(std::span<const Rational> coeffs);

/// Evaluates sum_i coeffs[i] x^i exactly.
Rational evaluate_univariate(std::span<const Rational> coeffs, const Rational& x);

/// True iff a x^2 + b x + c has no rational root, i.e. b^2 - 4ac is not a
/// rational square. Requires a != 0.
bool quadratic_irreducible(const Rational& a, const Rational& b, const Rational& c);

/// Number of partitions of w with at most k parts, each part at most n - k.
std::int64_t quotient_hilbert_dim(int n, int k, long w);

/// Prime factorisation of |v| (v != 0), ascending with multiplicity.
std::vector<BigInt> factor(const BigInt& v);
/// Positive divisors of |v| (v != 0), ascending.
std::vector<BigInt> divisors(const BigInt& v);

}  // namespace grasscoh
