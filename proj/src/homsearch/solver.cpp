#include "grasscoh/solver.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

#include "grasscoh/slices.hpp"
#include "laurent.hpp"

namespace grasscoh {

std::string to_string(VerdictKind kind) {
  switch (kind) {
    case VerdictKind::OnlyTrivial: return "OnlyTrivial";
    case VerdictKind::Solutions: return "Solutions";
    case VerdictKind::Undecided: return "Undecided";
  }
  return "Undecided";
}

VerdictKind parse_verdict_kind(const std::string& text) {
  if (text == "OnlyTrivial") return VerdictKind::OnlyTrivial;
  if (text == "Solutions") return VerdictKind::Solutions;
  if (text == "Undecided") return VerdictKind::Undecided;
  throw InvalidArgument("unknown verdict kind '" + text + "'");
}

namespace {

using detail::LMono;
using detail::LPoly;
using detail::OpBudget;
using detail::OpBudgetExhausted;

Rational rational_pow(const Rational& r, long e) {
  Rational out = 1;
  for (long i = 0; i < std::abs(e); ++i) out *= r;
  return e >= 0 ? out : Rational(1 / out);
}

// Squarefree integer s with q = s * (rational square).
BigInt square_class(const Rational& q) {
  BigInt v = q.get_num() * q.get_den();
  if (v == 0) return 0;
  BigInt out = v < 0 ? -1 : 1;
  auto primes = factor(v);
  for (std::size_t i = 0; i < primes.size();) {
    std::size_t j = i;
    while (j < primes.size() && primes[j] == primes[i]) ++j;
    if ((j - i) % 2 == 1) out *= primes[i];
    i = j;
  }
  return out;
}

// Extended Euclid: returns (x, y) with x a + y b = gcd(a, b) = 1.
std::pair<long, long> bezout(long a, long b) {
  long old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    long qq = old_r / r;
    std::tie(old_r, r) = std::make_pair(r, old_r - qq * r);
    std::tie(old_s, s) = std::make_pair(s, old_s - qq * s);
    std::tie(old_t, t) = std::make_pair(t, old_t - qq * t);
  }
  return {old_s, old_t};
}

struct Branch {
  std::string id;
  std::vector<std::string> names;
  std::vector<Rational> weights;
  std::vector<bool> nonzero;
  std::vector<LPoly> eqs;
  std::vector<LPoly> assign;
  std::size_t fresh = 0;

  std::size_t nv() const { return names.size(); }

  std::string show(const LPoly& p) const { return p.to_string(names); }
  std::string eq_text(const LPoly& p) const { return show(p) + " = 0"; }

  OpBudget* ops = nullptr;

  void substitute(std::size_t v, const LPoly& q) {
    for (auto& e : eqs) e = e.substitute(v, q, ops);
    for (auto& a : assign) a = a.substitute(v, q, ops);
  }

  bool negative_somewhere(std::size_t v) const {
    auto neg = [v](const LPoly& p) { return p.min_exponent(v) < 0; };
    return std::any_of(eqs.begin(), eqs.end(), neg) || std::any_of(assign.begin(), assign.end(), neg);
  }

  std::size_t add_var(const std::string& prefix, const Rational& weight) {
    std::size_t v = nv();
    names.push_back(prefix + std::to_string(++fresh));
    weights.push_back(weight);
    nonzero.push_back(true);
    for (auto& e : eqs) e.pad(v + 1);
    for (auto& a : assign) a.pad(v + 1);
    return v;
  }

  std::string nonzero_text(const std::vector<std::size_t>& vars) const {
    std::string out;
    for (auto v : vars) out += (out.empty() ? "" : ", ") + names[v] + " != 0";
    return out;
  }
};

// Print order: higher total degree first, then larger exponent vector.
const std::pair<const LMono, Rational>& leading(const LPoly& p) {
  auto deg = [](const LMono& e) { return std::accumulate(e.begin(), e.end(), 0L); };
  auto best = p.terms().begin();
  for (auto it = p.terms().begin(); it != p.terms().end(); ++it) {
    long a = deg(it->first), b = deg(best->first);
    if (a > b || (a == b && it->first > best->first)) best = it;
  }
  return *best;
}

LPoly primitive(LPoly p) {
  BigInt num_gcd = 0, den_lcm = 1;
  for (const auto& [e, c] : p.terms()) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  }
  Rational scale = make_rational(den_lcm, num_gcd);
  if (leading(p).second < 0) scale = -scale;
  return p * scale;
}

bool equation_less(const LPoly& a, const LPoly& b) {
  if (a.total_degree() != b.total_degree()) return a.total_degree() < b.total_degree();
  if (a.size() != b.size()) return a.size() < b.size();
  return a.terms() < b.terms();
}

std::vector<Rational> univariate_coefficients(const LPoly& p, std::size_t v) {
  std::vector<Rational> coeffs(static_cast<std::size_t>(p.max_exponent(v)) + 1, Rational(0));
  for (const auto& [e, c] : p.terms()) coeffs[static_cast<std::size_t>(e[v])] += c;
  return coeffs;
}

std::string univariate_text(const std::vector<Rational>& coeffs, const std::string& var) {
  LPoly p(1);
  for (std::size_t i = 0; i < coeffs.size(); ++i) p.add(LMono{static_cast<int>(i)}, coeffs[i]);
  return p.to_string(std::vector<std::string>{var});
}

std::string no_root_text(const std::vector<Rational>& coeffs, const std::string& var) {
  std::string out = univariate_text(coeffs, var) + " has no rational root";
  if (coeffs.size() == 3) {
    Rational disc = coeffs[1] * coeffs[1] - 4 * coeffs[2] * coeffs[0];
    bool irreducible = quadratic_irreducible(coeffs[2], coeffs[1], coeffs[0]);
    if (!irreducible) throw InternalConsistencyError("quadratic without rational roots has a square discriminant");
    out += "; irreducible quadratic, discriminant " + disc.get_str() + ", square class " +
           square_class(disc).get_str();
  }
  return out;
}

class Solver {
 public:
  Solver(const ConstraintSystem& sys, const SolverBudget& budget, const SolutionCheck& check)
      : sys_(sys), budget_(budget), check_(check), work_left_(budget.max_work) {
    ops_.left = budget.max_terms;
  }

  Verdict run() {
    const std::size_t np = sys_.params.size();
    if (np > budget_.max_params) {
      log("0", "budget", std::to_string(np) + " parameters exceed the limit of " + std::to_string(budget_.max_params));
      undecided_ = true;
      return finish();
    }
    Branch root;
    root.id = "0";
    root.ops = &ops_;
    root.names = sys_.params;
    for (int w : sys_.param_weights) root.weights.emplace_back(w);
    root.nonzero.assign(np, false);
    for (std::size_t i = 0; i < np; ++i) root.assign.push_back(LPoly::variable(np, i));
    for (const auto& e : sys_.equations) {
      if (e.nvars() != np) throw InvalidArgument("solve_system: equation has the wrong number of variables");
      root.eqs.push_back(LPoly::from_polynomial(e));
    }
    std::vector<Branch> stack{std::move(root)};
    branches_ = 1;
    while (!stack.empty()) {
      Branch b = std::move(stack.back());
      stack.pop_back();
      std::vector<Branch> children;
      try {
        children = advance(b);
      } catch (const OpBudgetExhausted&) {
        log(b.id, "budget", "term product limit " + std::to_string(budget_.max_terms) + " reached");
        undecided_ = true;
        break;
      }
      if (children.size() + branches_ > budget_.max_branches) {
        log(b.id, "budget", "branch limit " + std::to_string(budget_.max_branches) + " reached");
        undecided_ = true;
        break;
      }
      branches_ += children.size();
      for (auto it = children.rbegin(); it != children.rend(); ++it) stack.push_back(std::move(*it));
    }
    return finish();
  }

 private:
  void log(const std::string& branch, std::string move, std::string detail) {
    verdict_.log.push_back(LogStep{branch, std::move(move), std::move(detail)});
  }

  Verdict finish() {
    verdict_.complete = !undecided_;
    if (!verdict_.solutions.empty()) {
      verdict_.kind = VerdictKind::Solutions;
    } else {
      verdict_.kind = undecided_ ? VerdictKind::Undecided : VerdictKind::OnlyTrivial;
    }
    return std::move(verdict_);
  }

  // Runs in-place moves until the branch closes, splits or gets stuck.
  // Returns the child branches still to explore.
  std::vector<Branch> advance(Branch& b) {
    for (;;) {
      if (!normalize(b)) return {};
      if (b.eqs.empty()) {
        leaf(b);
        return {};
      }
      for (const auto& e : b.eqs) {
        if (e.total_degree() > budget_.max_degree) {
          log(b.id, "stuck", "degree budget exceeded by " + b.eq_text(e));
          undecided_ = true;
          return {};
        }
      }
      std::optional<std::vector<Branch>> out;
      if (force(b) || univariate(b, out) || linear(b)) {
        if (out) return std::move(*out);
        continue;
      }
      if (split(b, out) || ratio(b, out)) return std::move(*out);
      bool dead = false;
      if (nilpotent(b, dead)) {
        if (dead) return {};
        continue;
      }
      if (monomial_linear(b, out)) return std::move(*out);
      std::string eqs;
      for (const auto& e : b.eqs) eqs += (eqs.empty() ? "" : "; ") + b.eq_text(e);
      log(b.id, "stuck", "no move applies to " + eqs);
      undecided_ = true;
      return {};
    }
  }

  Branch child(const Branch& b, std::size_t index) const {
    Branch c = b;
    c.id = b.id + "." + std::to_string(index);
    return c;
  }

  bool normalize(Branch& b) {
    std::vector<LPoly> next;
    for (auto& e : b.eqs) {
      if (e.is_zero()) continue;
      const std::string before = b.eq_text(e);
      LMono shift(b.nv(), 0);
      for (std::size_t v = 0; v < b.nv(); ++v) {
        if (!e.contains_var(v)) continue;
        int m = e.min_exponent(v);
        if (b.nonzero[v]) {
          shift[v] = -m;
        } else if (m < 0) {
          throw InternalConsistencyError("negative power of a variable not known to be nonzero");
        }
      }
      LPoly p = e * LPoly::monomial(shift, 1);
      if (p.is_constant()) {
        std::vector<std::size_t> nz;
        for (auto v : e.variables()) nz.push_back(v);
        log(b.id, "contradiction",
            before + (nz.empty() ? "" : " with " + b.nonzero_text(nz)) + " has no solution");
        return false;
      }
      next.push_back(primitive(std::move(p)));
    }
    std::sort(next.begin(), next.end(), equation_less);
    next.erase(std::unique(next.begin(), next.end()), next.end());
    b.eqs = std::move(next);
    return true;
  }

  void leaf(const Branch& b) {
    bool trivial = std::all_of(b.assign.begin(), b.assign.end(), [](const LPoly& p) { return p.is_zero(); });
    if (trivial) {
      log(b.id, "trivial", "all parameters vanish");
      return;
    }
    // Exact check of the original system on the family.
    for (std::size_t j = 0; j < sys_.equations.size(); ++j) {
      LPoly acc(b.nv());
      for (const auto& [e, c] : sys_.equations[j].terms()) {
        LPoly t = LPoly::constant(b.nv(), c);
        for (std::size_t i = 0; i < e.size(); ++i) {
          if (e[i] != 0) t = t * b.assign[i].pow(static_cast<unsigned>(e[i]));
        }
        acc += t;
      }
      if (!acc.is_zero()) {
        throw InternalConsistencyError("solution family of branch " + b.id + " violates equation " +
                                       std::to_string(j + 1));
      }
    }
    std::vector<std::size_t> free;
    for (std::size_t v = 0; v < b.nv(); ++v) {
      if (std::any_of(b.assign.begin(), b.assign.end(), [v](const LPoly& p) { return p.contains_var(v); })) {
        free.push_back(v);
      }
    }
    SolutionFamily fam;
    fam.branch = b.id;
    for (auto v : free) {
      fam.free_vars.push_back(b.names[v]);
      if (b.nonzero[v]) fam.nonzero.push_back(b.names[v]);
    }
    for (const auto& a : b.assign) fam.assignment.push_back(b.show(a));
    // Free variables are sampled at small nonzero integers, which keeps every
    // Laurent denominator nonzero.
    for (int attempt = 0; attempt < 64 && fam.sample.empty(); ++attempt) {
      std::vector<Rational> values(b.nv(), Rational(1));
      for (std::size_t j = 0; j < free.size(); ++j) {
        values[free[j]] = Rational((attempt * 7 + static_cast<int>(j) * 3) % 11 + 1);
      }
      std::vector<Rational> point;
      for (const auto& a : b.assign) point.push_back(a.evaluate(values));
      if (std::all_of(point.begin(), point.end(), [](const Rational& r) { return r == 0; })) continue;
      if (check_ && !check_(point)) {
        throw InternalConsistencyError("sample of branch " + b.id + " fails the homomorphism check");
      }
      fam.sample = std::move(point);
    }
    if (fam.sample.empty()) throw InternalConsistencyError("no nonzero sample found on branch " + b.id);
    std::string text;
    for (std::size_t i = 0; i < fam.assignment.size(); ++i) {
      text += (i ? ", " : "") + sys_.params[i] + " = " + fam.assignment[i];
    }
    if (!fam.nonzero.empty()) {
      std::string nz;
      for (const auto& n : fam.nonzero) nz += (nz.empty() ? "" : ", ") + n + " != 0";
      text += " (" + nz + ")";
    }
    log(b.id, "solution", text);
    verdict_.solutions.push_back(std::move(fam));
  }

  // A single power of a single variable: that variable is zero.
  bool force(Branch& b) {
    for (const auto& e : b.eqs) {
      auto vars = e.variables();
      if (e.size() != 1 || vars.size() != 1) continue;
      std::size_t v = vars[0];
      log(b.id, "force", b.eq_text(e) + " forces " + b.names[v] + " = 0");
      b.substitute(v, LPoly(b.nv()));
      return true;
    }
    return false;
  }

  bool univariate(Branch& b, std::optional<std::vector<Branch>>& out) {
    for (const auto& e : b.eqs) {
      auto vars = e.variables();
      if (vars.size() != 1) continue;
      std::size_t v = vars[0];
      auto coeffs = univariate_coefficients(e, v);
      auto roots = rational_roots(coeffs);
      if (b.nonzero[v]) roots.erase(std::remove(roots.begin(), roots.end(), Rational(0)), roots.end());
      if (roots.empty()) {
        log(b.id, "no-root", no_root_text(coeffs, b.names[v]));
        out.emplace();
        return true;
      }
      std::string list;
      for (const auto& r : roots) list += (list.empty() ? "" : ", ") + r.get_str();
      log(b.id, "roots", b.eq_text(e) + " gives " + b.names[v] + " in {" + list + "}");
      if (roots.size() == 1) {
        b.substitute(v, LPoly::constant(b.nv(), roots[0]));
        return true;
      }
      out.emplace();
      for (std::size_t i = 0; i < roots.size(); ++i) {
        Branch c = child(b, i + 1);
        log(c.id, "branch", b.names[v] + " = " + roots[i].get_str());
        c.substitute(v, LPoly::constant(c.nv(), roots[i]));
        out->push_back(std::move(c));
      }
      return true;
    }
    return false;
  }

  // Coefficient of v in e when v occurs only in a single term c * m * v, with
  // m free of v; the rest of e is returned through rest.
  static std::optional<std::pair<LMono, Rational>> linear_term(const LPoly& e, std::size_t v, LPoly& rest) {
    std::optional<std::pair<LMono, Rational>> found;
    rest = LPoly(e.nvars());
    for (const auto& [m, c] : e.terms()) {
      if (m[v] == 0) {
        rest.add(m, c);
        continue;
      }
      if (m[v] != 1 || found) return std::nullopt;
      LMono mono = m;
      mono[v] = 0;
      found.emplace(std::move(mono), c);
    }
    return found;
  }

  static bool is_unit(const LMono& m) {
    return std::all_of(m.begin(), m.end(), [](int x) { return x == 0; });
  }

  bool substitution_allowed(const Branch& b, std::size_t v, const LPoly& value) const {
    return value.size() <= 1 || !b.negative_somewhere(v);
  }

  bool linear(Branch& b) {
    for (const auto& e : b.eqs) {
      std::optional<std::size_t> pick;
      LPoly pick_value;
      for (auto v : e.variables()) {
        LPoly rest;
        auto term = linear_term(e, v, rest);
        if (!term || !is_unit(term->first)) continue;
        LPoly value = rest * Rational(-1 / term->second);
        if (!substitution_allowed(b, v, value)) continue;
        if (!pick || b.weights[v] > b.weights[*pick]) {
          pick = v;
          pick_value = std::move(value);
        }
      }
      if (!pick) continue;
      log(b.id, "linear", b.eq_text(e) + " gives " + b.names[*pick] + " = " + b.show(pick_value));
      b.substitute(*pick, pick_value);
      return true;
    }
    return false;
  }

  // Monomial content in variables that may vanish: branch on which one does.
  bool split(Branch& b, std::optional<std::vector<Branch>>& out) {
    for (const auto& e : b.eqs) {
      std::vector<std::size_t> content;
      for (auto v : e.variables()) {
        if (!b.nonzero[v] && e.min_exponent(v) > 0) content.push_back(v);
      }
      if (content.empty()) continue;
      std::string names;
      for (auto v : content) names += (names.empty() ? "" : ", ") + b.names[v];
      log(b.id, "split", b.eq_text(e) + " has monomial content in " + names);
      out.emplace();
      for (std::size_t i = 0; i <= content.size(); ++i) {
        Branch c = child(b, i + 1);
        std::vector<std::size_t> nz(content.begin(), content.begin() + static_cast<long>(i));
        for (auto v : nz) c.nonzero[v] = true;
        std::string what = i < content.size() ? c.names[content[i]] + " = 0" : "";
        if (!nz.empty()) what += (what.empty() ? "" : " with ") + c.nonzero_text(nz);
        log(c.id, "branch", what);
        if (i < content.size()) c.substitute(content[i], LPoly(c.nv()));
        out->push_back(std::move(c));
      }
      return true;
    }
    return false;
  }

  // Two-variable equation whose terms a^i b^j lie on i p + j q = D.
  bool ratio(Branch& b, std::optional<std::vector<Branch>>& out) {
    for (const auto& e : b.eqs) {
      auto vars = e.variables();
      if (vars.size() != 2) continue;
      const std::size_t va = vars[0], vb = vars[1];
      std::vector<std::tuple<int, int, Rational>> terms;
      for (const auto& [m, c] : e.terms()) terms.emplace_back(m[va], m[vb], c);
      std::sort(terms.begin(), terms.end(), [](const auto& x, const auto& y) { return std::get<0>(x) < std::get<0>(y); });
      auto [i0, j0, c0] = terms.front();
      auto [i1, j1, c1] = terms.back();
      (void)c0;
      (void)c1;
      int di = i1 - i0, dj = j1 - j0;
      if (i0 != 0 || di <= 0 || dj >= 0) continue;
      int g = std::gcd(di, -dj);
      int q = di / g, p = -dj / g;
      std::vector<Rational> poly(static_cast<std::size_t>(g) + 1, Rational(0));
      bool collinear = true;
      for (const auto& [i, j, c] : terms) {
        if (i % q != 0 || (j0 - j) != (i / q) * p) {
          collinear = false;
          break;
        }
        poly[static_cast<std::size_t>(i / q)] += c;
      }
      if (!collinear) continue;
      const std::string& na = b.names[va];
      const std::string& nb = b.names[vb];
      std::string tdef = "t = " + (q == 1 ? na : na + "^" + std::to_string(q)) + "/" +
                         (p == 1 ? nb : nb + "^" + std::to_string(p));
      auto roots = rational_roots(poly);
      log(b.id, "ratio", b.eq_text(e) + " with " + tdef + " becomes " + univariate_text(poly, "t") + " = 0");
      out.emplace();
      std::size_t index = 0;
      if (!b.nonzero[vb]) {
        Branch c = child(b, ++index);
        log(c.id, "branch", nb + " = 0");
        c.substitute(vb, LPoly(c.nv()));
        out->push_back(std::move(c));
      }
      if (roots.empty()) {
        log(b.id, "no-root", "on " + nb + " != 0: " + no_root_text(poly, "t"));
        return true;
      }
      for (const auto& r : roots) {
        Branch c = child(b, ++index);
        std::string how;
        if (p == 1) {
          LPoly value = LPoly::variable(c.nv(), va).pow(static_cast<unsigned>(q)) * Rational(1 / r);
          c.nonzero[va] = true;
          how = nb + " = " + c.show(value);
          c.substitute(vb, value);
        } else if (q == 1) {
          LPoly value = LPoly::variable(c.nv(), vb).pow(static_cast<unsigned>(p)) * r;
          c.nonzero[vb] = true;
          how = na + " = " + c.show(value);
          c.substitute(va, value);
        } else {
          // a = r^alpha s^p, b = r^beta s^q with alpha q - beta p = 1 covers
          // every nonzero rational point of a^q = r b^p (s = b^alpha a^-beta).
          auto [x, y] = bezout(q, p);
          long alpha = x, beta = -y;
          std::size_t s = c.add_var("s", Rational(b.weights[va] / p));
          LPoly sv = LPoly::variable(c.nv(), s);
          LPoly av = sv.pow(static_cast<unsigned>(p)) * rational_pow(r, alpha);
          LPoly bv = sv.pow(static_cast<unsigned>(q)) * rational_pow(r, beta);
          how = na + " = " + c.show(av) + ", " + nb + " = " + c.show(bv);
          c.substitute(va, av);
          c.substitute(vb, bv);
        }
        log(c.id, "branch", "t = " + r.get_str() + ": " + how);
        out->push_back(std::move(c));
      }
      return true;
    }
    return false;
  }

  // Weighted-homogeneous system in which every variable is nilpotent modulo
  // the equations: the only common zero is the origin.
  bool nilpotent(Branch& b, bool& dead) {
    std::vector<std::size_t> vars;
    for (std::size_t v = 0; v < b.nv(); ++v) {
      if (std::any_of(b.eqs.begin(), b.eqs.end(), [v](const LPoly& e) { return e.contains_var(v); })) vars.push_back(v);
    }
    if (b.eqs.size() < vars.size()) return false;
    BigInt den = 1;
    for (auto v : vars) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), b.weights[v].get_den_mpz_t());
    std::vector<int> w;
    for (auto v : vars) {
      Rational scaled = b.weights[v] * den;
      if (scaled <= 0 || scaled > budget_.max_weight) return false;
      w.push_back(static_cast<int>(scaled.get_num().get_si()));
    }
    std::vector<Polynomial> gens;
    for (const auto& e : b.eqs) {
      Polynomial g(vars.size());
      std::optional<long> deg;
      for (const auto& [m, c] : e.terms()) {
        Exponents x(vars.size());
        long d = 0;
        for (std::size_t i = 0; i < vars.size(); ++i) {
          x[i] = m[vars[i]];
          d += static_cast<long>(x[i]) * w[i];
        }
        if (deg && *deg != d) return false;
        deg = d;
        g.add_term(x, c);
      }
      if (*deg > budget_.max_weight) return false;
      gens.push_back(std::move(g));
    }
    GradedIdeal ideal(w, gens);
    std::string detail;
    for (std::size_t i = 0; i < vars.size(); ++i) {
      auto N = nilpotency_witness(ideal, i + 1, budget_.max_weight / w[i], kColumnCap, work_left_);
      if (work_left_ == 0 && !work_logged_) {
        log(b.id, "budget", "nilpotency work limit " + std::to_string(budget_.max_work) + " reached");
        work_logged_ = true;
      }
      if (!N) return false;
      detail += (detail.empty() ? "" : ", ") + b.names[vars[i]] + "^" + std::to_string(*N);
    }
    log(b.id, "nilpotent", detail + " lie in the ideal of the remaining equations");
    for (auto v : vars) {
      if (b.nonzero[v]) {
        log(b.id, "contradiction", b.names[v] + " must vanish but is nonzero on this branch");
        dead = true;
        return true;
      }
    }
    for (auto v : vars) b.substitute(v, LPoly(b.nv()));
    return true;
  }

  // c * m * v + rest = 0 with m a monomial in other variables.
  bool monomial_linear(Branch& b, std::optional<std::vector<Branch>>& out) {
    struct Pick {
      const LPoly* eq;
      std::size_t v;
      LMono m;
      Rational c;
      LPoly rest;
      std::vector<std::size_t> zeroable;
    };
    std::optional<Pick> best;
    for (const auto& e : b.eqs) {
      for (auto v : e.variables()) {
        LPoly rest;
        auto term = linear_term(e, v, rest);
        if (!term) continue;
        if (b.negative_somewhere(v) && rest.size() > 1) continue;
        std::vector<std::size_t> zeroable;
        for (std::size_t u = 0; u < b.nv(); ++u) {
          if (term->first[u] != 0 && !b.nonzero[u]) zeroable.push_back(u);
        }
        if (!best || zeroable.size() < best->zeroable.size()) {
          best = Pick{&e, v, term->first, term->second, std::move(rest), std::move(zeroable)};
        }
      }
    }
    if (!best) return false;
    LPoly coeff = LPoly::monomial(best->m, best->c);
    LPoly value = best->rest * coeff.monomial_inverse() * Rational(-1);
    log(b.id, "linear", b.eq_text(*best->eq) + " is linear in " + b.names[best->v] + " with coefficient " +
                            b.show(coeff));
    out.emplace();
    const auto& zs = best->zeroable;
    for (std::size_t i = 0; i <= zs.size(); ++i) {
      Branch c = child(b, i + 1);
      std::vector<std::size_t> nz(zs.begin(), zs.begin() + static_cast<long>(i));
      for (auto u : nz) c.nonzero[u] = true;
      if (i < zs.size()) {
        std::string what = c.names[zs[i]] + " = 0";
        if (!nz.empty()) what += " with " + c.nonzero_text(nz);
        log(c.id, "branch", what);
        c.substitute(zs[i], LPoly(c.nv()));
      } else {
        for (std::size_t u = 0; u < c.nv(); ++u) {
          if (best->m[u] != 0) c.nonzero[u] = true;
        }
        log(c.id, "branch", c.names[best->v] + " = " + c.show(value));
        c.substitute(best->v, value);
      }
      out->push_back(std::move(c));
    }
    return true;
  }

  static constexpr std::size_t kColumnCap = 1000;

  const ConstraintSystem& sys_;
  SolverBudget budget_;
  SolutionCheck check_;
  std::uint64_t work_left_ = 0;
  bool work_logged_ = false;
  OpBudget ops_;
  Verdict verdict_;
  std::size_t branches_ = 0;
  bool undecided_ = false;
};

}  // namespace

Verdict solve_system(const ConstraintSystem& sys, const SolverBudget& budget, const SolutionCheck& check) {
  return Solver(sys, budget, check).run();
}

Verdict solve_hom(const HomAnsatz& ansatz, const SolverBudget& budget) {
  long top = 0;
  for (int j = 1; j <= ansatz.source.k; ++j) top = std::max(top, ansatz.source.relation_weight(j));
  if (top > budget.max_weight || ansatz.param_names.size() > budget.max_params) {
    Verdict v;
    v.kind = VerdictKind::Undecided;
    v.log.push_back(LogStep{"0", "budget",
                            top > budget.max_weight
                                ? "relation weight " + std::to_string(top) + " exceeds the slice limit " +
                                      std::to_string(budget.max_weight)
                                : std::to_string(ansatz.param_names.size()) + " parameters exceed the limit of " +
                                      std::to_string(budget.max_params)});
    return v;
  }
  ConstraintSystem sys = generate_constraints(ansatz);
  auto check = [&ansatz](const std::vector<Rational>& point) {
    return verify_hom(ansatz.source, ansatz.target, specialize_images(ansatz, point));
  };
  return solve_system(sys, budget, check);
}

}  // namespace grasscoh
