#pragma once

// Sparse Laurent polynomials over Q on a growing variable set. Exponent
// vectors are dense, may be negative, and all share one length per branch.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "grasscoh/polynomial.hpp"

namespace grasscoh::detail {

using LMono = std::vector<int>;

/// Thrown once an OpBudget runs dry; the caller abandons the whole search.
struct OpBudgetExhausted {};

inline std::uint64_t limbs(const Rational& c) {
  return mpz_size(c.get_num_mpz_t()) + mpz_size(c.get_den_mpz_t());
}

/// Counts coefficient work in limbs; deterministic, unlike a clock.
struct OpBudget {
  std::uint64_t left = 0;
  void charge(std::uint64_t n) {
    if (n > left) {
      left = 0;
      throw OpBudgetExhausted{};
    }
    left -= n;
  }
};

class LPoly {
 public:
  using Terms = std::map<LMono, Rational>;

  LPoly() = default;
  explicit LPoly(std::size_t nv) : nv_(nv) {}
  static LPoly constant(std::size_t nv, const Rational& c) {
    LPoly p(nv);
    p.add(LMono(nv, 0), c);
    return p;
  }
  static LPoly variable(std::size_t nv, std::size_t v) {
    LMono e(nv, 0);
    e[v] = 1;
    LPoly p(nv);
    p.add(e, 1);
    return p;
  }
  static LPoly monomial(LMono e, const Rational& c) {
    LPoly p(e.size());
    p.add(e, c);
    return p;
  }
  static LPoly from_polynomial(const Polynomial& q) {
    LPoly p(q.nvars());
    for (const auto& [e, c] : q.terms()) p.add(e, c);
    return p;
  }

  std::size_t nvars() const { return nv_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.size() == 1 && std::all_of(terms_.begin()->first.begin(), terms_.begin()->first.end(),
                                             [](int v) { return v == 0; });
  }

  void add(const LMono& e, const Rational& c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.emplace(e, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  LPoly& operator+=(const LPoly& o) {
    for (const auto& [e, c] : o.terms_) add(e, c);
    return *this;
  }
  LPoly& operator-=(const LPoly& o) {
    for (const auto& [e, c] : o.terms_) add(e, -c);
    return *this;
  }
  LPoly& operator*=(const Rational& c) {
    if (c == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
  }
  friend LPoly operator+(LPoly a, const LPoly& b) { return a += b; }
  friend LPoly operator-(LPoly a, const LPoly& b) { return a -= b; }
  friend LPoly operator*(LPoly a, const Rational& c) { return a *= c; }
  friend LPoly operator*(const LPoly& a, const LPoly& b) {
    LPoly out(a.nv_);
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        LMono e(ea.size());
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
        out.add(e, ca * cb);
      }
    }
    return out;
  }
  friend bool operator==(const LPoly& a, const LPoly& b) { return a.nv_ == b.nv_ && a.terms_ == b.terms_; }

  LPoly pow(unsigned e, OpBudget* ops = nullptr) const {
    LPoly result = constant(nv_, 1), base = *this;
    while (e > 0) {
      if (e & 1U) {
        if (ops) ops->charge(result.size() * base.size());
        result = result * base;
      }
      e >>= 1U;
      if (e > 0) {
        if (ops) ops->charge(base.size() * base.size());
        base = base * base;
      }
    }
    return result;
  }

  /// Inverse of a single term.
  LPoly monomial_inverse() const {
    const auto& [e, c] = *terms_.begin();
    LMono neg(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) neg[i] = -e[i];
    return monomial(neg, 1 / c);
  }

  /// Appends fresh variables with exponent zero.
  void pad(std::size_t nv) {
    if (nv == nv_) return;
    Terms next;
    for (const auto& [e, c] : terms_) {
      LMono x = e;
      x.resize(nv, 0);
      next.emplace(std::move(x), c);
    }
    terms_ = std::move(next);
    nv_ = nv;
  }

  bool contains_var(std::size_t v) const {
    return std::any_of(terms_.begin(), terms_.end(), [v](const auto& t) { return t.first[v] != 0; });
  }
  int min_exponent(std::size_t v) const {
    int m = 0;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      if (first || e[v] < m) m = e[v];
      first = false;
    }
    return m;
  }
  int max_exponent(std::size_t v) const {
    int m = 0;
    for (const auto& [e, c] : terms_) m = std::max(m, e[v]);
    return m;
  }
  std::vector<std::size_t> variables() const {
    std::vector<std::size_t> out;
    for (std::size_t v = 0; v < nv_; ++v) {
      if (contains_var(v)) out.push_back(v);
    }
    return out;
  }
  long total_degree() const {
    long d = 0;
    for (const auto& [e, c] : terms_) {
      long s = 0;
      for (int x : e) s += x;
      d = std::max(d, s);
    }
    return d;
  }

  /// Replaces variable v by q. Negative powers of v need q to be a single term.
  LPoly substitute(std::size_t v, const LPoly& q, OpBudget* ops = nullptr) const {
    LPoly out(nv_);
    std::map<int, LPoly> powers;
    LMono sum(nv_);
    for (const auto& [e, c] : terms_) {
      int k = e[v];
      auto it = powers.find(k);
      if (it == powers.end()) {
        LPoly p = k >= 0 ? q.pow(static_cast<unsigned>(k), ops)
                         : q.monomial_inverse().pow(static_cast<unsigned>(-k), ops);
        it = powers.emplace(k, std::move(p)).first;
      }
      for (const auto& [ep, cp] : it->second.terms_) {
        if (ops) ops->charge(limbs(c) + limbs(cp));
        for (std::size_t i = 0; i < nv_; ++i) sum[i] = (i == v ? 0 : e[i]) + ep[i];
        out.add(sum, c * cp);
      }
    }
    return out;
  }

  Rational evaluate(std::span<const Rational> values) const {
    Rational acc = 0;
    for (const auto& [e, c] : terms_) {
      Rational t = c;
      for (std::size_t i = 0; i < e.size(); ++i) {
        for (int j = 0; j < std::abs(e[i]); ++j) t = e[i] > 0 ? Rational(t * values[i]) : Rational(t / values[i]);
      }
      acc += t;
    }
    return acc;
  }

  /// Plain polynomial; all exponents must be non-negative.
  Polynomial to_polynomial() const {
    Polynomial p(nv_);
    for (const auto& [e, c] : terms_) p.add_term(e, c);
    return p;
  }

  std::string to_string(std::span<const std::string> names) const {
    if (terms_.empty()) return "0";
    std::string out;
    // Highest total degree first, then the reverse of the map order, so
    // leading terms print first.
    std::vector<std::pair<LMono, Rational>> sorted(terms_.begin(), terms_.end());
    std::stable_sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
      long da = 0, db = 0;
      for (int x : a.first) da += x;
      for (int x : b.first) db += x;
      if (da != db) return da > db;
      return a.first > b.first;
    });
    bool first = true;
    for (const auto& [e, c] : sorted) {
      Rational mag = abs(c);
      if (first) {
        if (c < 0) out += "-";
      } else {
        out += c < 0 ? " - " : " + ";
      }
      first = false;
      std::string mono;
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!mono.empty()) mono += "*";
        mono += names[i];
        if (e[i] != 1) mono += "^" + (e[i] < 0 ? "(" + std::to_string(e[i]) + ")" : std::to_string(e[i]));
      }
      if (mono.empty()) {
        out += mag.get_str();
      } else {
        if (mag != 1) out += mag.get_str() + "*";
        out += mono;
      }
    }
    return out;
  }

 private:
  std::size_t nv_ = 0;
  Terms terms_;
};

}  // namespace grasscoh::detail
