#include "grasscoh/param_polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace grasscoh {

namespace {

void check_shape(const ParamPolynomial& a, const ParamPolynomial& b) {
  if (a.nvars() != b.nvars() || a.nparams() != b.nparams()) {
    throw InvalidArgument("parametrised polynomials have different shapes");
  }
}

}  // namespace

ParamPolynomial ParamPolynomial::constant(std::size_t geometry_vars, std::size_t params, const Rational& c) {
  ParamPolynomial p(geometry_vars, params);
  p.add_term(Exponents(geometry_vars, 0), Polynomial::constant(params, c));
  return p;
}

ParamPolynomial ParamPolynomial::term(Exponents e, Polynomial coeff) {
  ParamPolynomial p(e.size(), coeff.nvars());
  p.add_term(e, coeff);
  return p;
}

ParamPolynomial ParamPolynomial::lift(const Polynomial& p, std::size_t params) {
  ParamPolynomial out(p.nvars(), params);
  for (const auto& [e, c] : p.terms()) out.add_term(e, Polynomial::constant(params, c));
  return out;
}

void ParamPolynomial::add_term(const Exponents& e, const Polynomial& coeff) {
  if (e.size() != nvars_) throw InvalidArgument("geometry exponent length does not match");
  if (coeff.nvars() != nparams_) throw InvalidArgument("coefficient parameter count does not match");
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

ParamPolynomial& ParamPolynomial::operator+=(const ParamPolynomial& o) {
  check_shape(*this, o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

ParamPolynomial& ParamPolynomial::operator-=(const ParamPolynomial& o) {
  check_shape(*this, o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

ParamPolynomial operator*(const ParamPolynomial& a, const ParamPolynomial& b) {
  check_shape(a, b);
  ParamPolynomial out(a.nvars_, a.nparams_);
  Exponents e(a.nvars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

ParamPolynomial ParamPolynomial::scaled(const Rational& c) const {
  ParamPolynomial out(nvars_, nparams_);
  if (c == 0) return out;
  out.terms_ = terms_;
  for (auto& [e, coeff] : out.terms_) coeff *= c;
  return out;
}

bool ParamPolynomial::is_homogeneous_of(long w) const {
  return std::all_of(terms_.begin(), terms_.end(), [w](const auto& t) { return weight(t.first) == w; });
}

Polynomial ParamPolynomial::specialize(std::span<const Rational> params) const {
  Polynomial out(nvars_);
  for (const auto& [e, c] : terms_) out.add_term(e, c.evaluate(params));
  return out;
}

std::string ParamPolynomial::to_string(std::span<const std::string> param_names, std::string_view prefix) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.to_string(param_names) << ")";
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      os << "*" << prefix << (i + 1);
      if (e[i] != 1) os << "^" << e[i];
    }
  }
  return os.str();
}

ParamPolynomial substitute_hom(const Polynomial& p, std::span<const ParamPolynomial> images) {
  if (images.size() != p.nvars()) throw InvalidArgument("substitute_hom: need one image per generator");
  if (images.empty()) throw InvalidArgument("substitute_hom: no generators");
  const std::size_t l = images.front().nvars();
  const std::size_t np = images.front().nparams();
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (images[i].nvars() != l || images[i].nparams() != np) {
      throw InvalidArgument("substitute_hom: images have different shapes");
    }
    if (!images[i].is_homogeneous_of(static_cast<long>(i + 1))) {
      throw InvalidArgument("substitute_hom: image of x" + std::to_string(i + 1) + " is not homogeneous of weight " +
                            std::to_string(i + 1));
    }
  }
  std::vector<std::vector<ParamPolynomial>> powers(images.size());
  ParamPolynomial out(l, np);
  for (const auto& [e, c] : p.terms()) {
    ParamPolynomial t = ParamPolynomial::constant(l, np, c);
    for (std::size_t i = 0; i < e.size() && !t.is_zero(); ++i) {
      if (e[i] == 0) continue;
      auto& cache = powers[i];
      if (cache.empty()) cache.push_back(ParamPolynomial::constant(l, np, 1));
      while (cache.size() <= static_cast<std::size_t>(e[i])) cache.push_back(cache.back() * images[i]);
      t = t * cache[static_cast<std::size_t>(e[i])];
    }
    out += t;
  }
  return out;
}

std::vector<std::pair<Exponents, Polynomial>> param_coefficients(const ParamPolynomial& p) {
  return {p.terms().begin(), p.terms().end()};
}

}  // namespace grasscoh
