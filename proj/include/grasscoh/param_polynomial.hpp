#pragma once

// Polynomials in geometry variables y_1..y_l whose coefficients are
// polynomials in separate parameter variables a_1..a_p.

#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "grasscoh/polynomial.hpp"

namespace grasscoh {

class ParamPolynomial {
 public:
  using Terms = std::map<Exponents, Polynomial, LexGreater>;

  ParamPolynomial() = default;
  ParamPolynomial(std::size_t geometry_vars, std::size_t params) : nvars_(geometry_vars), nparams_(params) {}

  static ParamPolynomial constant(std::size_t geometry_vars, std::size_t params, const Rational& c);
  /// coeff * y^e where coeff lives in the parameter ring.
  static ParamPolynomial term(Exponents e, Polynomial coeff);
  /// Lifts a plain polynomial to constant parameter coefficients.
  static ParamPolynomial lift(const Polynomial& p, std::size_t params);

  std::size_t nvars() const { return nvars_; }
  std::size_t nparams() const { return nparams_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Exponents& e, const Polynomial& coeff);

  ParamPolynomial& operator+=(const ParamPolynomial& o);
  ParamPolynomial& operator-=(const ParamPolynomial& o);
  friend ParamPolynomial operator+(ParamPolynomial a, const ParamPolynomial& b) { return a += b; }
  friend ParamPolynomial operator-(ParamPolynomial a, const ParamPolynomial& b) { return a -= b; }
  friend ParamPolynomial operator*(const ParamPolynomial& a, const ParamPolynomial& b);
  ParamPolynomial scaled(const Rational& c) const;
  friend bool operator==(const ParamPolynomial& a, const ParamPolynomial& b) {
    return a.nvars_ == b.nvars_ && a.nparams_ == b.nparams_ && a.terms_ == b.terms_;
  }

  /// Geometry-weight homogeneity; zero counts as homogeneous of every weight.
  bool is_homogeneous_of(long w) const;

  /// Fixes every parameter to a rational value.
  Polynomial specialize(std::span<const Rational> params) const;

  std::string to_string(std::span<const std::string> param_names, std::string_view prefix = "y") const;

 private:
  std::size_t nvars_ = 0;
  std::size_t nparams_ = 0;
  Terms terms_;
};

/// p(x_1 -> images[0], ..., x_k -> images[k-1]). images[i] must be
/// homogeneous of geometry weight i + 1.
ParamPolynomial substitute_hom(const Polynomial& p, std::span<const ParamPolynomial> images);

/// Geometry monomials with their parameter coefficients, canonical order.
std::vector<std::pair<Exponents, Polynomial>> param_coefficients(const ParamPolynomial& p);

}  // namespace grasscoh
