#include "grasscoh/homsearch.hpp"

#include <algorithm>

#include "grasscoh/slices.hpp"

namespace grasscoh {

std::string to_string(AnsatzMode mode) {
  switch (mode) {
    case AnsatzMode::General: return "general";
    case AnsatzMode::Projective: return "projective";
    case AnsatzMode::Divisible: return "divisible";
  }
  return "general";
}

AnsatzMode parse_ansatz_mode(const std::string& text) {
  if (text == "general") return AnsatzMode::General;
  if (text == "projective") return AnsatzMode::Projective;
  if (text == "divisible") return AnsatzMode::Divisible;
  throw InvalidArgument("unknown ansatz mode '" + text + "' (expected general, projective or divisible)");
}

namespace {

std::string exponent_name(const Exponents& e) {
  bool wide = std::any_of(e.begin(), e.end(), [](int v) { return v > 9; });
  std::string out = "a";
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (wide && i > 0) out += "_";
    out += std::to_string(e[i]);
  }
  return out;
}

// Weight-r monomials of the target that survive in the quotient basis.
std::vector<Exponents> free_monomials(const Presentation& tgt, long r) {
  auto slice = default_slice_cache().get(tgt, r);
  std::vector<bool> pivot(slice->monomial_count(), false);
  for (auto p : slice->pivots()) pivot[p] = true;
  std::vector<Exponents> out;
  for (std::size_t j = 0; j < slice->monomial_count(); ++j) {
    if (!pivot[j]) out.push_back(slice->columns()[j]);
  }
  return out;
}

void require_projective_target(const Presentation& tgt, AnsatzMode mode) {
  if (tgt.k != 1) {
    throw InvalidArgument(to_string(mode) + " ansatz needs a projective target (target k = 1, got " +
                          std::to_string(tgt.k) + ")");
  }
}

}  // namespace

std::size_t ansatz_parameter_count(const Presentation& src, const Presentation& tgt, AnsatzMode mode) {
  switch (mode) {
    case AnsatzMode::General: {
      std::size_t count = 0;
      for (int r = 1; r <= src.k; ++r) count += free_monomials(tgt, r).size();
      return count;
    }
    case AnsatzMode::Projective: return static_cast<std::size_t>(src.k);
    case AnsatzMode::Divisible: return 1;
  }
  return 0;
}

HomAnsatz build_ansatz(const Presentation& src, const Presentation& tgt, AnsatzMode mode) {
  validate_nk(src.n, src.k);
  validate_nk(tgt.n, tgt.k);
  HomAnsatz a{src, tgt, mode, {}, {}, {}};
  const auto l = static_cast<std::size_t>(tgt.k);
  std::vector<std::vector<Exponents>> monos(static_cast<std::size_t>(src.k));
  switch (mode) {
    case AnsatzMode::General:
      for (int r = 1; r <= src.k; ++r) {
        for (auto& e : free_monomials(tgt, r)) {
          a.param_names.push_back(exponent_name(e));
          a.param_weights.push_back(r);
          monos[static_cast<std::size_t>(r - 1)].push_back(std::move(e));
        }
      }
      break;
    case AnsatzMode::Projective:
      require_projective_target(tgt, mode);
      for (int r = 1; r <= src.k; ++r) {
        a.param_names.push_back("t" + std::to_string(r));
        a.param_weights.push_back(r);
        monos[static_cast<std::size_t>(r - 1)].push_back(Exponents{r});
      }
      break;
    case AnsatzMode::Divisible:
      require_projective_target(tgt, mode);
      if (src.n % src.k != 0) {
        throw InvalidArgument("divisible ansatz needs k | n (got n=" + std::to_string(src.n) +
                              ", k=" + std::to_string(src.k) + ")");
      }
      a.param_names.push_back("c");
      a.param_weights.push_back(src.k);
      monos.back().push_back(Exponents{src.k});
      break;
  }
  const std::size_t np = a.param_names.size();
  std::size_t next = 0;
  for (int r = 1; r <= src.k; ++r) {
    ParamPolynomial img(l, np);
    for (const auto& e : monos[static_cast<std::size_t>(r - 1)]) {
      img.add_term(e, Polynomial::variable(np, next++));
    }
    a.images.push_back(std::move(img));
  }
  return a;
}

ConstraintSystem generate_constraints(const HomAnsatz& ansatz) {
  ConstraintSystem sys;
  sys.params = ansatz.param_names;
  sys.param_weights = ansatz.param_weights;
  const std::size_t np = sys.params.size();
  for (int j = 1; j <= ansatz.source.k; ++j) {
    const auto& rel = ansatz.source.relations[static_cast<std::size_t>(j - 1)];
    ParamPolynomial img = substitute_hom(rel, ansatz.images);
    if (img.is_zero()) continue;
    const long w = ansatz.source.relation_weight(j);
    auto slice = default_slice_cache().get(ansatz.target, w);
    // The slice projection has rational entries, so it acts on each
    // coefficient bundle independently.
    std::vector<Polynomial> coords(slice->monomial_count(), Polynomial(np));
    for (const auto& [e, c] : img.terms()) coords[*slice->column_of(e)] = c;
    for (std::size_t r = 0; r < slice->rank(); ++r) {
      Polynomial f = coords[slice->pivots()[r]];
      if (f.is_zero()) continue;
      for (const auto& [col, v] : slice->rows()[r]) coords[col] -= f * v;
    }
    for (std::size_t col = 0; col < coords.size(); ++col) {
      if (coords[col].is_zero()) continue;
      sys.equations.push_back(coords[col]);
      sys.origins.push_back("coefficient of " + Polynomial::monomial(slice->columns()[col]).to_string("y") +
                            " in phi(R_" + std::to_string(j) + ")");
    }
  }
  return sys;
}

bool verify_hom(const Presentation& src, const Presentation& tgt, const std::vector<Polynomial>& images) {
  if (images.size() != static_cast<std::size_t>(src.k)) throw InvalidArgument("verify_hom: need one image per generator");
  for (std::size_t r = 0; r < images.size(); ++r) {
    if (images[r].nvars() != static_cast<std::size_t>(tgt.k)) throw InvalidArgument("verify_hom: image lives in the wrong ring");
    if (!images[r].is_homogeneous_of(static_cast<long>(r + 1))) {
      throw InvalidArgument("verify_hom: image of x" + std::to_string(r + 1) + " is not homogeneous of weight " +
                            std::to_string(r + 1));
    }
  }
  for (const auto& rel : src.relations) {
    if (!is_member(tgt, rel.substitute(images))) return false;
  }
  return true;
}

std::vector<Polynomial> specialize_images(const HomAnsatz& ansatz, const std::vector<Rational>& point) {
  std::vector<Polynomial> out;
  for (const auto& img : ansatz.images) out.push_back(img.specialize(point));
  return out;
}

RhoReduction rho_reduction(const HomAnsatz& ansatz) {
  const int k = ansatz.source.k;
  const int n = ansatz.source.n;
  const int l = ansatz.target.k;
  const int m = ansatz.target.n;
  RhoReduction red;
  red.e = k / l;
  red.f = k % l;
  red.e1 = m / l;
  red.f1 = m % l;
  for (int j = 1; j <= k; ++j) {
    long w = ansatz.source.relation_weight(j);
    if (w % l == 0) {
      red.relation_indices.push_back(j);
      red.q.push_back(static_cast<int>(w / l));
    }
  }
  red.s = static_cast<int>(red.relation_indices.size());

  // tau_i: coefficient of y_l^i in the image of x_{il}.
  for (int i = 1; i <= red.e; ++i) {
    Exponents pure(static_cast<std::size_t>(l), 0);
    pure[static_cast<std::size_t>(l - 1)] = i;
    const auto& img = ansatz.images[static_cast<std::size_t>(i * l - 1)];
    int found = -1;
    auto it = img.terms().find(pure);
    if (it != img.terms().end() && it->second.size() == 1) {
      const auto& [pe, pc] = *it->second.terms().begin();
      auto nz = std::count_if(pe.begin(), pe.end(), [](int v) { return v != 0; });
      if (pc == 1 && nz == 1 && total_degree(pe) == 1) {
        found = static_cast<int>(std::find(pe.begin(), pe.end(), 1) - pe.begin());
      }
    }
    red.tau_params.push_back(found);
    red.system.params.push_back("tau" + std::to_string(i));
    red.system.param_weights.push_back(i);
  }

  // Reduced images live in Q[Y] with x_{il} -> tau_i Y^{il}; then
  // phi(R_j) = S'_j Y^{l q_j} and Y^{l e1} generates the reduced target ideal.
  const auto ne = static_cast<std::size_t>(red.e);
  std::vector<ParamPolynomial> images;
  for (int r = 1; r <= k; ++r) {
    ParamPolynomial img(1, ne);
    if (r % l == 0) img.add_term(Exponents{r}, Polynomial::variable(ne, static_cast<std::size_t>(r / l - 1)));
    images.push_back(std::move(img));
  }
  for (std::size_t t = 0; t < red.relation_indices.size(); ++t) {
    if (red.q[t] >= red.e1) continue;
    const int j = red.relation_indices[t];
    ParamPolynomial img = substitute_hom(ansatz.source.relations[static_cast<std::size_t>(j - 1)], images);
    Polynomial coeff(ne);
    auto it = img.terms().find(Exponents{static_cast<int>(ansatz.source.relation_weight(j))});
    if (it != img.terms().end()) coeff = it->second;
    if (coeff.is_zero()) continue;
    red.system.equations.push_back(coeff);
    red.system.origins.push_back("S'_" + std::to_string(t + 1) + " from R_" + std::to_string(j) + " (q = " +
                                 std::to_string(red.q[t]) + ")");
  }
  (void)n;
  return red;
}

}  // namespace grasscoh
