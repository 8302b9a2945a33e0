#include "grasscoh/serialize.hpp"

namespace grasscoh {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InvalidArgument(std::string("JSON: missing field '") + key + "'");
  return j.at(key);
}

std::vector<std::string> strings(const Json& j) {
  std::vector<std::string> out;
  for (const auto& s : j) out.push_back(s.get<std::string>());
  return out;
}

}  // namespace

Json to_json(const Polynomial& p) {
  Json arr = Json::array();
  for (const auto& [e, c] : p.terms()) arr.push_back(Json{{"c", to_string(c)}, {"e", e}});
  return arr;
}

Polynomial polynomial_from_json(const Json& j, std::size_t nvars) {
  if (!j.is_array()) throw InvalidArgument("JSON: polynomial must be an array of terms");
  Polynomial p(nvars);
  for (const auto& t : j) {
    auto e = field(t, "e").get<Exponents>();
    if (e.size() != nvars) throw InvalidArgument("JSON: exponent vector has the wrong length");
    if (std::any_of(e.begin(), e.end(), [](int v) { return v < 0; })) throw InvalidArgument("JSON: negative exponent");
    Rational c = parse_rational(field(t, "c").get<std::string>());
    if (c == 0) throw InvalidArgument("JSON: zero coefficient stored");
    if (p.coefficient(e) != 0) throw InvalidArgument("JSON: repeated monomial");
    p.add_term(e, c);
  }
  return p;
}

Json to_json(const Presentation& pres) {
  Json rels = Json::array();
  for (const auto& r : pres.relations) rels.push_back(to_json(r));
  return Json{{"n", pres.n}, {"k", pres.k}, {"relations", rels}};
}

Presentation presentation_from_json(const Json& j) {
  Presentation p;
  p.n = field(j, "n").get<int>();
  p.k = field(j, "k").get<int>();
  validate_nk(p.n, p.k);
  for (const auto& r : field(j, "relations")) p.relations.push_back(polynomial_from_json(r, static_cast<std::size_t>(p.k)));
  if (p.relations.size() != static_cast<std::size_t>(p.k)) throw InvalidArgument("JSON: need k relations");
  return p;
}

Json to_json(const ConstraintSystem& sys) {
  Json eqs = Json::array();
  for (std::size_t i = 0; i < sys.equations.size(); ++i) {
    eqs.push_back(Json{{"origin", sys.origins[i]},
                       {"text", sys.equations[i].to_string(sys.params)},
                       {"poly", to_json(sys.equations[i])}});
  }
  return Json{{"params", sys.params}, {"weights", sys.param_weights}, {"equations", eqs}};
}

ConstraintSystem constraint_system_from_json(const Json& j) {
  ConstraintSystem sys;
  sys.params = strings(field(j, "params"));
  sys.param_weights = field(j, "weights").get<std::vector<int>>();
  for (const auto& e : field(j, "equations")) {
    sys.origins.push_back(field(e, "origin").get<std::string>());
    sys.equations.push_back(polynomial_from_json(field(e, "poly"), sys.params.size()));
  }
  return sys;
}

Json to_json(const Verdict& v) {
  Json sols = Json::array();
  for (const auto& s : v.solutions) {
    Json sample = Json::array();
    for (const auto& r : s.sample) sample.push_back(to_string(r));
    sols.push_back(Json{{"branch", s.branch},
                        {"free", s.free_vars},
                        {"nonzero", s.nonzero},
                        {"assignment", s.assignment},
                        {"sample", sample}});
  }
  Json log = Json::array();
  for (const auto& step : v.log) log.push_back(Json{{"branch", step.branch}, {"move", step.move}, {"detail", step.detail}});
  return Json{{"kind", to_string(v.kind)}, {"complete", v.complete}, {"solutions", sols}, {"log", log}};
}

Verdict verdict_from_json(const Json& j) {
  Verdict v;
  v.kind = parse_verdict_kind(field(j, "kind").get<std::string>());
  v.complete = field(j, "complete").get<bool>();
  for (const auto& s : field(j, "solutions")) {
    SolutionFamily f;
    f.branch = field(s, "branch").get<std::string>();
    f.free_vars = strings(field(s, "free"));
    f.nonzero = strings(field(s, "nonzero"));
    f.assignment = strings(field(s, "assignment"));
    for (const auto& r : field(s, "sample")) f.sample.push_back(parse_rational(r.get<std::string>()));
    v.solutions.push_back(std::move(f));
  }
  for (const auto& step : field(j, "log")) {
    v.log.push_back(LogStep{field(step, "branch").get<std::string>(), field(step, "move").get<std::string>(),
                            field(step, "detail").get<std::string>()});
  }
  return v;
}

Json to_json(const TheoremVerdict& v) {
  Json trace = Json::array();
  for (const auto& h : v.trace) trace.push_back(Json{{"hypothesis", h.text}, {"lhs", h.lhs}, {"rhs", h.rhs}, {"holds", h.holds}});
  return Json{{"conclusion", to_string(v.conclusion)}, {"rule", v.rule}, {"trace", trace}, {"note", v.note}};
}

TheoremVerdict theorem_verdict_from_json(const Json& j) {
  TheoremVerdict v;
  v.conclusion = parse_conclusion(field(j, "conclusion").get<std::string>());
  v.rule = field(j, "rule").get<std::string>();
  v.note = field(j, "note").get<std::string>();
  for (const auto& h : field(j, "trace")) {
    v.trace.push_back(Hypothesis{field(h, "hypothesis").get<std::string>(), field(h, "lhs").get<long>(),
                                 field(h, "rhs").get<long>(), field(h, "holds").get<bool>()});
  }
  return v;
}

Json to_json(const HilbertCertificate& c) {
  return Json{{"holds", c.holds}, {"method", c.method}, {"quotient_dims", c.quotient_dims}, {"expected_dims", c.expected_dims}};
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace grasscoh
