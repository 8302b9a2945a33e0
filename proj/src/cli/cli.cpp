#include "grasscoh/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <set>
#include <sstream>

#include "grasscoh/gclassify.hpp"

namespace grasscoh {

namespace {

// Raised for argument combinations CLI11 cannot check by itself.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Common {
  std::string format = "text";
  std::string cache_dir;
};

void require(bool ok, const std::string& flag, const std::string& what) {
  if (!ok) throw UsageError(flag + ": " + what);
}

void check_nk(int n, int k, const std::string& kflag = "--k") {
  require(n >= 1, "--n", "must be at least 1");
  require(k >= 1 && k <= n, kflag, "must satisfy 1 <= " + kflag.substr(2) + " <= n");
}

Polynomial parse_flag_poly(const std::string& text, std::size_t nvars, const std::string& flag) {
  try {
    return parse_polynomial(text, nvars);
  } catch (const InvalidArgument& e) {
    throw UsageError(flag + ": " + e.what());
  }
}

std::string families_text(const std::vector<GFamily>& fams) {
  std::string out;
  for (auto f : fams) out += (out.empty() ? "" : ", ") + to_string(f);
  return out.empty() ? "none" : out;
}

Json families_json(const std::vector<GFamily>& fams) {
  Json arr = Json::array();
  for (auto f : fams) arr.push_back(Json{{"family", to_string(f)}, {"description", family_description(f)}});
  return arr;
}

void write_verdict_text(std::ostream& out, const Verdict& v) {
  out << "verdict: " << to_string(v.kind) << (v.complete ? " (complete)" : " (incomplete)") << "\n";
  for (const auto& s : v.solutions) {
    out << "family [" << s.branch << "]:";
    for (const auto& a : s.assignment) out << " " << a << ";";
    if (!s.nonzero.empty()) {
      out << " nonzero:";
      for (const auto& z : s.nonzero) out << " " << z;
    }
    out << "\n";
  }
  out << "derivation:\n";
  for (const auto& step : v.log) out << "  [" << step.branch << "] " << step.move << ": " << step.detail << "\n";
}

struct GsolveResult {
  std::vector<GFamily> families;
  std::vector<RationalPair> solutions;
  std::vector<RationalPair> missing;
  std::vector<RationalPair> extra;
};

// Both directions: every scanned zero lies in a family, and every family
// member of bounded height was found by the scan.
GsolveResult gsolve(int n, long H) {
  GsolveResult r;
  r.families = classify_g_rational(n);
  r.solutions = brute_force_g(n, H);
  auto member = [&](const RationalPair& p) {
    return std::any_of(r.families.begin(), r.families.end(), [&](GFamily f) { return in_family(f, p.first, p.second); });
  };
  std::set<RationalPair> found(r.solutions.begin(), r.solutions.end());
  for (const auto& p : r.solutions) {
    if (!member(p)) r.extra.push_back(p);
  }
  const auto qs = rationals_of_height(H);
  for (const auto& u : qs) {
    for (const auto& v : qs) {
      RationalPair p{u, v};
      if ((u != 0 || v != 0) && member(p) && !found.count(p)) r.missing.push_back(p);
    }
  }
  return r;
}

Json pairs_json(const std::vector<RationalPair>& ps) {
  Json arr = Json::array();
  for (const auto& [u, v] : ps) arr.push_back(Json::array({to_string(u), to_string(v)}));
  return arr;
}

class Runner {
 public:
  Runner(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}

  int run(const std::vector<std::string>& args);

 private:
  bool json() const { return common_.format == "json"; }
  void emit(const Json& j) { out_ << dump(j); }

  int relations();
  int hilbert();
  int member();
  int express_cmd();
  int avoid();
  int nilpotent();
  int homsearch();
  int gsolve_cmd();
  int theorems();
  int regress();

  std::ostream& out_;
  std::ostream& err_;
  Common common_;
  int n_ = 0, k_ = 0, l_ = 0, m_ = 0, i_ = 0;
  long weight_ = 0, height_ = 0;
  std::string method_ = "both", poly_, divisible_by_, mode_ = "general";
  SolverBudget budget_;
};

int Runner::run(const std::vector<std::string>& args) {
  CLI::App app{"Exact cohomology of complex Grassmannians and graded homomorphisms between them", "grasscoh"};
  app.require_subcommand(1);
  // Global flags may follow the subcommand as well.
  app.fallthrough();
  app.add_option("--format", common_.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--cache-dir", common_.cache_dir, "Directory of the on-disk slice cache");

  auto nk = [&](CLI::App* sub) {
    sub->add_option("--n", n_, "Ambient dimension n")->required();
    sub->add_option("--k", k_, "Subspace dimension k")->required();
  };
  auto* rel = app.add_subcommand("relations", "Generators R_1..R_k of I_{n,k}");
  nk(rel);
  rel->add_option("--method", method_, "Construction")->check(CLI::IsMember({"multinomial", "inverse", "both"}));
  auto* hil = app.add_subcommand("hilbert", "Certify that R_1..R_k is a regular sequence");
  nk(hil);
  auto* mem = app.add_subcommand("member", "Decide membership of a polynomial in I_{n,k}");
  nk(mem);
  mem->add_option("--poly", poly_, "Polynomial in x1..xk")->required();
  auto* exp = app.add_subcommand("express", "Write a polynomial as a combination of R_1..R_k");
  nk(exp);
  exp->add_option("--poly", poly_, "Polynomial in x1..xk")->required();
  auto* avo = app.add_subcommand("avoid", "Check that every nonzero element of weight w has a divisible monomial");
  nk(avo);
  avo->add_option("--weight", weight_, "Weight w")->required();
  avo->add_option("--divisible-by", divisible_by_, "Monomial such as x3 or x1*x2")->required();
  auto* nil = app.add_subcommand("nilpotent", "Least e with x_i^e in I_{n,k}");
  nk(nil);
  nil->add_option("--i", i_, "Variable index")->required();
  auto* hom = app.add_subcommand("homsearch", "Classify graded homomorphisms H*(G_{n,k}) -> H*(G_{m,l})");
  nk(hom);
  hom->add_option("--l", l_, "Target subspace dimension l")->required();
  hom->add_option("--m", m_, "Target ambient dimension (default n)");
  hom->add_option("--mode", mode_, "Ansatz")->check(CLI::IsMember({"general", "projective", "divisible"}));
  hom->add_option("--budget-branches", budget_.max_branches, "Maximum solver branches");
  hom->add_option("--max-params", budget_.max_params, "Maximum ansatz parameters");
  hom->add_option("--max-weight", budget_.max_weight, "Maximum relation weight");
  hom->add_option("--max-degree", budget_.max_degree, "Maximum equation degree");
  hom->add_option("--budget-terms", budget_.max_terms, "Coefficient work (GMP limbs) spent on substitutions");
  hom->add_option("--budget-work", budget_.max_work, "Elimination work spent on nilpotency screening");
  auto* gs = app.add_subcommand("gsolve", "Rational zeros of g_n: classification against a bounded scan");
  gs->add_option("--n", n_, "Index n")->required();
  gs->add_option("--height", height_, "Height bound of the scan")->required();
  auto* thm = app.add_subcommand("theorems", "Apply the triviality rules to (n, k, l)");
  nk(thm);
  thm->add_option("--l", l_, "Target subspace dimension l")->required();
  auto* reg = app.add_subcommand("paper-regress", "Run every worked example as a named case");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out_ << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    out_ << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err_ << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    std::optional<std::filesystem::path> dir;
    if (const char* env = std::getenv("GRASSCOH_CACHE"); env != nullptr && *env != '\0') {
      dir = env;
    } else if (!common_.cache_dir.empty()) {
      dir = common_.cache_dir;
    }
    if (dir) configure_default_slice_cache(dir);

    if (rel->parsed()) return relations();
    if (hil->parsed()) return hilbert();
    if (mem->parsed()) return member();
    if (exp->parsed()) return express_cmd();
    if (avo->parsed()) return avoid();
    if (nil->parsed()) return nilpotent();
    if (hom->parsed()) return homsearch();
    if (gs->parsed()) return gsolve_cmd();
    if (thm->parsed()) return theorems();
    if (reg->parsed()) return regress();
    throw UsageError("no command given");
  } catch (const UsageError& e) {
    err_ << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InvalidArgument& e) {
    err_ << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err_ << "internal failure: " << e.what() << "\n";
    return kExitFailure;
  }
}

int Runner::relations() {
  check_nk(n_, k_);
  std::vector<Polynomial> rels;
  if (method_ == "multinomial") {
    rels = relations_multinomial(n_, k_);
  } else if (method_ == "inverse") {
    rels = relations_inverse(n_, k_);
  } else {
    rels = relations_multinomial(n_, k_);
    if (rels != relations_inverse(n_, k_)) throw InternalConsistencyError("relations: the two constructions disagree");
  }
  Presentation pres{n_, k_, rels};
  if (json()) {
    Json j = to_json(pres);
    j["method"] = method_;
    emit(j);
  } else {
    for (int j = 1; j <= k_; ++j) {
      out_ << "R_" << j << " (weight " << pres.relation_weight(j) << ") = " << rels[static_cast<std::size_t>(j - 1)].to_string()
           << "\n";
    }
  }
  return kExitOk;
}

int Runner::hilbert() {
  check_nk(n_, k_);
  auto cert = hilbert_certificate(presentation(n_, k_));
  if (json()) {
    Json j = to_json(cert);
    j = Json{{"n", n_}, {"k", k_}, {"certificate", j}};
    emit(j);
  } else {
    out_ << "regular sequence: " << (cert.holds ? "yes" : "no") << " (" << cert.method << ")\n";
    out_ << "quotient dims:";
    for (auto d : cert.quotient_dims) out_ << " " << d;
    out_ << "\nexpected dims:";
    for (auto d : cert.expected_dims) out_ << " " << d;
    out_ << "\n";
  }
  return cert.holds ? kExitOk : kExitFailure;
}

int Runner::member() {
  check_nk(n_, k_);
  const auto pres = presentation(n_, k_);
  Polynomial p = parse_flag_poly(poly_, static_cast<std::size_t>(k_), "--poly");
  bool in = is_member(pres, p);
  Polynomial nf = normal_form(pres, p);
  if (json()) {
    emit(Json{{"n", n_}, {"k", k_}, {"poly", to_json(p)}, {"member", in}, {"normal_form", to_json(nf)}});
  } else {
    out_ << (in ? "member" : "not a member") << "\nnormal form: " << nf.to_string() << "\n";
  }
  return kExitOk;
}

int Runner::express_cmd() {
  check_nk(n_, k_);
  const auto pres = presentation(n_, k_);
  Polynomial p = parse_flag_poly(poly_, static_cast<std::size_t>(k_), "--poly");
  auto cof = express(pres, p);
  bool verified = false;
  if (cof) {
    Polynomial back(static_cast<std::size_t>(k_));
    for (std::size_t j = 0; j < cof->size(); ++j) back += (*cof)[j] * pres.relations[j];
    verified = back == p;
    if (!verified) throw InternalConsistencyError("express: cofactors do not reproduce the input");
  }
  if (json()) {
    Json cj = nullptr;
    if (cof) {
      cj = Json::array();
      for (const auto& c : *cof) cj.push_back(to_json(c));
    }
    emit(Json{{"n", n_}, {"k", k_}, {"poly", to_json(p)}, {"member", cof.has_value()}, {"cofactors", cj}, {"verified", verified}});
  } else if (cof) {
    for (std::size_t j = 0; j < cof->size(); ++j) out_ << "c_" << j + 1 << " = " << (*cof)[j].to_string() << "\n";
    out_ << "re-multiplication matches\n";
  } else {
    out_ << "not a member\n";
  }
  return kExitOk;
}

int Runner::avoid() {
  check_nk(n_, k_);
  require(weight_ >= 0, "--weight", "must be nonnegative");
  Polynomial mono = parse_flag_poly(divisible_by_, static_cast<std::size_t>(k_), "--divisible-by");
  require(mono.size() == 1, "--divisible-by", "must be a single monomial");
  Exponents e = mono.terms().begin()->first;
  bool holds = avoidance_check(presentation(n_, k_), weight_, divisible_by(e));
  if (json()) {
    emit(Json{{"n", n_}, {"k", k_}, {"weight", weight_}, {"divisible_by", e}, {"holds", holds}});
  } else {
    out_ << "every nonzero element of weight " << weight_ << " has a monomial divisible by "
         << Polynomial::monomial(e).to_string() << ": " << (holds ? "true" : "false") << "\n";
  }
  return kExitOk;
}

int Runner::nilpotent() {
  check_nk(n_, k_);
  require(i_ >= 1 && i_ <= k_, "--i", "must satisfy 1 <= i <= k");
  long e = nilpotency_exponent(presentation(n_, k_), static_cast<std::size_t>(i_));
  if (json()) {
    emit(Json{{"n", n_}, {"k", k_}, {"i", i_}, {"exponent", e}});
  } else {
    out_ << "x" << i_ << "^" << e << " is the least power in I_{" << n_ << "," << k_ << "}\n";
  }
  return kExitOk;
}

int Runner::homsearch() {
  if (m_ == 0) m_ = n_;
  check_nk(n_, k_);
  require(m_ >= 1, "--m", "must be at least 1");
  require(l_ >= 1 && l_ <= m_, "--l", "must satisfy 1 <= l <= m");
  require(budget_.max_branches >= 1, "--budget-branches", "must be positive");
  require(budget_.max_params >= 1, "--max-params", "must be positive");
  require(budget_.max_weight >= 1, "--max-weight", "must be positive");
  require(budget_.max_degree >= 1, "--max-degree", "must be positive");
  const AnsatzMode mode = parse_ansatz_mode(mode_);
  if (mode == AnsatzMode::Projective) require(l_ == 1, "--mode", "projective needs l = 1");
  if (mode == AnsatzMode::Divisible) require(l_ == 1 && n_ % k_ == 0, "--mode", "divisible needs l = 1 and k | n");

  Verdict v;
  ConstraintSystem sys;
  std::vector<std::string> params;
  // Over-budget inputs are not even presented: building them is the expensive part.
  if (n_ > budget_.max_weight || m_ > budget_.max_weight ||
      ansatz_parameter_count(presentation(n_, k_), presentation(m_, l_), mode) > budget_.max_params) {
    v.kind = VerdictKind::Undecided;
    v.log.push_back(LogStep{"0", "budget", "relation weight or parameter count exceeds the budget"});
  } else {
    auto ansatz = build_ansatz(presentation(n_, k_), presentation(m_, l_), mode);
    params = ansatz.param_names;
    sys = generate_constraints(ansatz);
    v = solve_hom(ansatz, budget_);
  }
  const std::string direction = "homomorphisms H*(G_{" + std::to_string(n_) + "," + std::to_string(k_) + "}) -> H*(G_{" +
                                std::to_string(m_) + "," + std::to_string(l_) + "}), i.e. maps G_{" + std::to_string(m_) +
                                "," + std::to_string(l_) + "} -> G_{" + std::to_string(n_) + "," + std::to_string(k_) + "}";
  const bool g_case = k_ == 2 && l_ == 1 && m_ == n_;
  if (json()) {
    Json j{{"n", n_}, {"k", k_}, {"m", m_}, {"l", l_}, {"mode", mode_}, {"direction", direction},
           {"system", to_json(sys)}, {"verdict", to_json(v)}};
    if (g_case) j["g_families"] = families_json(classify_g_rational(n_));
    emit(j);
  } else {
    out_ << direction << "\nparameters:";
    for (const auto& p : params) out_ << " " << p;
    out_ << "\nequations:\n";
    for (std::size_t i = 0; i < sys.equations.size(); ++i) {
      out_ << "  " << sys.equations[i].to_string(sys.params) << " = 0   [" << sys.origins[i] << "]\n";
    }
    write_verdict_text(out_, v);
    if (g_case) {
      out_ << "rational zero families of g_" << n_ << ":\n";
      auto families = classify_g_rational(n_);
      if (families.empty()) out_ << "  none\n";
      for (auto f : families) out_ << "  " << family_description(f) << "\n";
    }
  }
  return v.kind == VerdictKind::Undecided ? kExitUndecided : kExitOk;
}

int Runner::gsolve_cmd() {
  require(n_ >= 2, "--n", "must be at least 2");
  require(height_ >= 1, "--height", "must be at least 1");
  auto r = gsolve(n_, height_);
  const bool agree = r.missing.empty() && r.extra.empty();
  if (json()) {
    emit(Json{{"n", n_},
              {"height", height_},
              {"g", to_json(g_poly(n_))},
              {"classification", families_json(r.families)},
              {"brute_force", pairs_json(r.solutions)},
              {"missing", pairs_json(r.missing)},
              {"extra", pairs_json(r.extra)},
              {"agree", agree}});
  } else {
    out_ << "g_" << n_ << " = " << g_poly(n_).to_string("c") << "\n";
    out_ << "classification: " << families_text(r.families) << "\n";
    out_ << "brute force (height <= " << height_ << "): " << r.solutions.size() << " nonzero zeros\n";
    out_ << "agreement: " << (agree ? "yes" : "no") << "\n";
  }
  return agree ? kExitOk : kExitFailure;
}

int Runner::theorems() {
  check_nk(n_, k_);
  require(l_ >= 1 && l_ <= n_, "--l", "must satisfy 1 <= l <= n");
  auto v = theorem_verdict(n_, k_, l_);
  if (json()) {
    Json j = to_json(v);
    j = Json{{"n", n_}, {"k", k_}, {"l", l_}, {"direction", induced_map_direction(n_, k_, l_)}, {"verdict", j}};
    emit(j);
  } else {
    out_ << to_string(v.conclusion);
    if (!v.rule.empty()) out_ << ", rule " << v.rule;
    out_ << "\n" << v.note << "\n";
    for (const auto& h : v.trace) {
      out_ << "  " << h.text << " (" << h.lhs << " vs " << h.rhs << "): " << (h.holds ? "holds" : "fails") << "\n";
    }
  }
  return kExitOk;
}

int Runner::regress() {
  auto cases = paper_regress();
  bool all = std::all_of(cases.begin(), cases.end(), [](const RegressCase& c) { return c.pass; });
  if (json()) {
    emit(to_json(cases));
  } else {
    for (const auto& c : cases) {
      out_ << (c.pass ? "PASS " : "FAIL ") << c.name << " -- " << c.anchor << "\n     " << c.detail << "\n";
    }
    out_ << std::count_if(cases.begin(), cases.end(), [](const RegressCase& c) { return c.pass; }) << "/" << cases.size()
         << " cases pass\n";
  }
  return all ? kExitOk : kExitFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Runner r(out, err);
  return r.run(args);
}

}  // namespace grasscoh
