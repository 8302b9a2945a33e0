#pragma once

// Sparse multivariate polynomials over Q.
//
// Variable i (0-based) carries algebraic weight i + 1, so x_1 has weight 1,
// x_2 weight 2 and so on. Terms are kept in the lexicographic order where m
// precedes n when the first nonzero entry of m - n is positive; iteration
// therefore starts at the lex-largest monomial (x_1^4 before x_1^2 x_2).

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "grasscoh/exactmath.hpp"

namespace grasscoh {

/// Strict weak order: a before b iff the first nonzero entry of a - b is > 0.
struct LexGreater {
  bool operator()(const Exponents& a, const Exponents& b) const {
    for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
      if (a[i] != b[i]) return a[i] > b[i];
    }
    return a.size() > b.size();
  }
};

/// All exponent vectors of the given weight, canonical order. weights[i] is
/// the weight of variable i and must be positive.
std::vector<Exponents> monomials_of_weight(std::span<const int> weights, long w);
/// Same with the standard weights 1, 2, ..., nvars.
std::vector<Exponents> monomials_of_weight(std::size_t nvars, long w);

class Polynomial {
 public:
  using Terms = std::map<Exponents, Rational, LexGreater>;

  Polynomial() = default;
  explicit Polynomial(std::size_t nvars) : nvars_(nvars) {}

  static Polynomial constant(std::size_t nvars, const Rational& c);
  static Polynomial variable(std::size_t nvars, std::size_t index);
  static Polynomial monomial(Exponents e, const Rational& c = 1);

  std::size_t nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  Rational coefficient(const Exponents& e) const;
  /// Adds c x^e, dropping the term if it cancels.
  void add_term(const Exponents& e, const Rational& c);

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial operator-() const { return *this * Rational(-1); }
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  Polynomial pow(unsigned e) const;

  /// Weight of every term if homogeneous, nullopt otherwise. Zero is
  /// homogeneous of every weight and reports nullopt as well; use
  /// is_homogeneous_of for a definite answer.
  std::optional<long> homogeneous_weight() const;
  bool is_homogeneous_of(long w) const;
  /// Sum of the terms of weight exactly w.
  Polynomial homogeneous_part(long w) const;
  /// Distinct term weights, ascending.
  std::vector<long> weights() const;
  long max_total_degree() const;

  Rational evaluate(std::span<const Rational> values) const;
  /// Replace x_i by images[i] (all images must share one variable count).
  Polynomial substitute(std::span<const Polynomial> images) const;
  /// Image under the map that sends x_i to x_i for i < keep and to 0 otherwise.
  Polynomial truncate_variables(std::size_t keep) const;

  /// e.g. "x1^4 - 3*x1^2*x2 + x2^2 + 2*x1*x3" with the default prefix.
  std::string to_string(std::string_view prefix = "x") const;
  std::string to_string(std::span<const std::string> names) const;

 private:
  std::size_t nvars_ = 0;
  Terms terms_;
};

enum class ArithOp { Add, Sub, Mul, Scale };

/// Exact p (op) q. Scale multiplies p by q, which must be a constant.
Polynomial arith(const Polynomial& p, const Polynomial& q, ArithOp op);

/// Parses text such as "x1^6 - 3*x1^4*x2 + 2/3*x2^3". Variables are a letter
/// prefix followed by a 1-based index not exceeding nvars.
Polynomial parse_polynomial(std::string_view text, std::size_t nvars);

}  // namespace grasscoh
