#include "grasscoh/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace grasscoh {

namespace {

void check_same_vars(const Polynomial& a, const Polynomial& b) {
  if (a.nvars() != b.nvars()) {
    throw InvalidArgument("polynomial variable counts differ (" + std::to_string(a.nvars()) +
                          " vs " + std::to_string(b.nvars()) + ")");
  }
}

void enumerate(std::span<const int> weights, std::size_t index, long remaining, Exponents& cur,
               std::vector<Exponents>& out) {
  if (index + 1 == weights.size()) {
    if (remaining % weights[index] == 0) {
      cur[index] = static_cast<int>(remaining / weights[index]);
      out.push_back(cur);
      cur[index] = 0;
    }
    return;
  }
  for (long e = remaining / weights[index]; e >= 0; --e) {
    cur[index] = static_cast<int>(e);
    enumerate(weights, index + 1, remaining - e * weights[index], cur, out);
  }
  cur[index] = 0;
}

}  // namespace

std::vector<Exponents> monomials_of_weight(std::span<const int> weights, long w) {
  std::vector<Exponents> out;
  if (w < 0) return out;
  if (weights.empty()) {
    if (w == 0) out.emplace_back();
    return out;
  }
  for (int wt : weights) {
    if (wt <= 0) throw InvalidArgument("monomials_of_weight: weights must be positive");
  }
  Exponents cur(weights.size(), 0);
  enumerate(weights, 0, w, cur, out);
  return out;
}

std::vector<Exponents> monomials_of_weight(std::size_t nvars, long w) {
  std::vector<int> weights(nvars);
  for (std::size_t i = 0; i < nvars; ++i) weights[i] = static_cast<int>(i + 1);
  return monomials_of_weight(weights, w);
}

Polynomial Polynomial::constant(std::size_t nvars, const Rational& c) {
  Polynomial p(nvars);
  p.add_term(Exponents(nvars, 0), c);
  return p;
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t index) {
  if (index >= nvars) throw InvalidArgument("variable index out of range");
  Exponents e(nvars, 0);
  e[index] = 1;
  return monomial(std::move(e));
}

Polynomial Polynomial::monomial(Exponents e, const Rational& c) {
  Polynomial p(e.size());
  p.add_term(e, c);
  return p;
}

Rational Polynomial::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const Exponents& e, const Rational& c) {
  if (e.size() != nvars_) throw InvalidArgument("exponent vector length does not match variable count");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  check_same_vars(*this, o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  check_same_vars(*this, o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  check_same_vars(a, b);
  Polynomial out(a.nvars_);
  Exponents e(a.nvars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result = constant(nvars_, 1);
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e > 0) base = base * base;
  }
  return result;
}

std::optional<long> Polynomial::homogeneous_weight() const {
  std::optional<long> w;
  for (const auto& [e, c] : terms_) {
    long we = weight(e);
    if (w && *w != we) return std::nullopt;
    w = we;
  }
  return w;
}

bool Polynomial::is_homogeneous_of(long w) const {
  return std::all_of(terms_.begin(), terms_.end(), [w](const auto& t) { return weight(t.first) == w; });
}

Polynomial Polynomial::homogeneous_part(long w) const {
  Polynomial out(nvars_);
  for (const auto& [e, c] : terms_) {
    if (weight(e) == w) out.terms_.emplace_hint(out.terms_.end(), e, c);
  }
  return out;
}

std::vector<long> Polynomial::weights() const {
  std::set<long> ws;
  for (const auto& [e, c] : terms_) ws.insert(weight(e));
  return {ws.begin(), ws.end()};
}

long Polynomial::max_total_degree() const {
  long d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, total_degree(e));
  return d;
}

Rational Polynomial::evaluate(std::span<const Rational> values) const {
  if (values.size() != nvars_) throw InvalidArgument("evaluate: wrong number of values");
  Rational acc = 0;
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (e[i] == 0) continue;
      Rational pw;
      mpz_pow_ui(pw.get_num_mpz_t(), values[i].get_num_mpz_t(), static_cast<unsigned long>(e[i]));
      mpz_pow_ui(pw.get_den_mpz_t(), values[i].get_den_mpz_t(), static_cast<unsigned long>(e[i]));
      t *= pw;
    }
    acc += t;
  }
  return acc;
}

Polynomial Polynomial::substitute(std::span<const Polynomial> images) const {
  if (images.size() != nvars_) throw InvalidArgument("substitute: need one image per variable");
  std::size_t target = images.empty() ? 0 : images.front().nvars();
  for (const auto& im : images) check_same_vars(im, images.front());
  std::vector<std::vector<Polynomial>> powers(nvars_);
  Polynomial out(target);
  for (const auto& [e, c] : terms_) {
    Polynomial t = constant(target, c);
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (e[i] == 0) continue;
      auto& cache = powers[i];
      if (cache.empty()) cache.push_back(constant(target, 1));
      while (cache.size() <= static_cast<std::size_t>(e[i])) cache.push_back(cache.back() * images[i]);
      t = t * cache[static_cast<std::size_t>(e[i])];
    }
    out += t;
  }
  return out;
}

Polynomial Polynomial::truncate_variables(std::size_t keep) const {
  Polynomial out(keep);
  for (const auto& [e, c] : terms_) {
    bool survives = std::all_of(e.begin() + static_cast<long>(std::min(keep, e.size())), e.end(),
                                [](int v) { return v == 0; });
    if (!survives) continue;
    Exponents f(keep, 0);
    std::copy_n(e.begin(), std::min(keep, e.size()), f.begin());
    out.add_term(f, c);
  }
  return out;
}

std::string Polynomial::to_string(std::string_view prefix) const {
  std::vector<std::string> names(nvars_);
  for (std::size_t i = 0; i < nvars_; ++i) names[i] = std::string(prefix) + std::to_string(i + 1);
  return to_string(names);
}

std::string Polynomial::to_string(std::span<const std::string> names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool constant_term = std::all_of(e.begin(), e.end(), [](int v) { return v == 0; });
    bool need_star = false;
    if (mag != 1 || constant_term) {
      os << mag.get_str();
      need_star = true;
    }
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (need_star) os << "*";
      os << names[i];
      if (e[i] != 1) os << "^" << e[i];
      need_star = true;
    }
  }
  return os.str();
}

Polynomial arith(const Polynomial& p, const Polynomial& q, ArithOp op) {
  switch (op) {
    case ArithOp::Add: return p + q;
    case ArithOp::Sub: return p - q;
    case ArithOp::Mul: return p * q;
    case ArithOp::Scale: {
      if (q.is_zero()) return Polynomial(p.nvars());
      if (q.size() != 1 || q.max_total_degree() != 0) throw InvalidArgument("arith: scale factor must be a constant");
      return p * q.terms().begin()->second;
    }
  }
  throw InvalidArgument("arith: unknown operation");
}

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, std::size_t nvars) : text_(text), nvars_(nvars) {}

  Polynomial parse() {
    Polynomial out(nvars_);
    skip_ws();
    if (at_end()) fail("empty polynomial");
    bool first = true;
    while (!at_end()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip_ws();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      auto [e, c] = term();
      out.add_term(e, c * sign);
      skip_ws();
    }
    return out;
  }

 private:
  std::pair<Exponents, Rational> term() {
    Rational c = 1;
    Exponents e(nvars_, 0);
    bool any = false;
    while (true) {
      skip_ws();
      if (at_end()) break;
      char ch = peek();
      if (std::isdigit(static_cast<unsigned char>(ch))) {
        c *= number();
      } else if (std::isalpha(static_cast<unsigned char>(ch))) {
        std::size_t idx = variable();
        int power = 1;
        skip_ws();
        if (!at_end() && peek() == '^') {
          ++pos_;
          skip_ws();
          power = static_cast<int>(integer());
        }
        e[idx] += power;
      } else {
        fail(std::string("unexpected character '") + ch + "'");
      }
      any = true;
      skip_ws();
      if (!at_end() && peek() == '*') {
        ++pos_;
        continue;
      }
      break;
    }
    if (!any) fail("empty term");
    return {e, c};
  }

  Rational number() {
    long start = static_cast<long>(pos_);
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (!at_end() && peek() == '/') {
      ++pos_;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    }
    return parse_rational(text_.substr(static_cast<std::size_t>(start), pos_ - static_cast<std::size_t>(start)));
  }

  long integer() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected an integer");
    return std::stol(std::string(text_.substr(start, pos_ - start)));
  }

  std::size_t variable() {
    while (!at_end() && std::isalpha(static_cast<unsigned char>(peek()))) ++pos_;
    long idx = integer();
    if (idx < 1 || static_cast<std::size_t>(idx) > nvars_) fail("variable index " + std::to_string(idx) + " out of range");
    return static_cast<std::size_t>(idx - 1);
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  [[noreturn]] void fail(const std::string& what) const {
    throw InvalidArgument("cannot parse polynomial at offset " + std::to_string(pos_) + ": " + what);
  }

  std::string_view text_;
  std::size_t nvars_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, std::size_t nvars) { return PolyParser(text, nvars).parse(); }

}  // namespace grasscoh
