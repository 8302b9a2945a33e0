#include "grasscoh/theorems.hpp"

#include <functional>

#include "grasscoh/exactmath.hpp"

namespace grasscoh {

std::string to_string(Conclusion c) { return c == Conclusion::Trivial ? "Trivial" : "Unknown"; }

Conclusion parse_conclusion(const std::string& text) {
  if (text == "Trivial") return Conclusion::Trivial;
  if (text == "Unknown") return Conclusion::Unknown;
  throw InvalidArgument("unknown conclusion '" + text + "'");
}

std::string induced_map_direction(int n, int k, int l) {
  return "homomorphisms H*(G_{" + std::to_string(n) + "," + std::to_string(k) + "}) -> H*(G_{" +
         std::to_string(n) + "," + std::to_string(l) + "}), i.e. maps G_{" + std::to_string(n) + "," +
         std::to_string(l) + "} -> G_{" + std::to_string(n) + "," + std::to_string(k) + "}";
}

namespace {

class Rule {
 public:
  Rule(std::string id, std::vector<Hypothesis>& trace) : id_(std::move(id)), trace_(trace) {}

  bool lt(const char* lhs, const char* rhs, long a, long b) { return record(lhs, "<", rhs, a, b, a < b); }
  bool ge(const char* lhs, const char* rhs, long a, long b) { return record(lhs, ">=", rhs, a, b, a >= b); }
  bool gt(const char* lhs, const char* rhs, long a, long b) { return record(lhs, ">", rhs, a, b, a > b); }
  bool eq(const char* lhs, const char* rhs, long a, long b) { return record(lhs, "=", rhs, a, b, a == b); }

 private:
  bool record(const char* lhs, const char* op, const char* rhs, long a, long b, bool holds) {
    trace_.push_back(Hypothesis{id_ + ": " + lhs + " " + op + " " + rhs, a, b, holds});
    return holds;
  }

  std::string id_;
  std::vector<Hypothesis>& trace_;
};

}  // namespace

TheoremVerdict theorem_verdict(int n, int k, int l) {
  if (n < 1 || k < 1 || l < 1 || k > n || l > n) {
    throw InvalidArgument("theorem_verdict: need 1 <= k, l <= n (got n=" + std::to_string(n) + ", k=" +
                          std::to_string(k) + ", l=" + std::to_string(l) + ")");
  }
  TheoremVerdict v;
  const std::string direction = induced_map_direction(n, k, l);
  if (2 * k > n || 2 * l > n) {
    v.note = "outside the range k, l <= floor(n/2) covered by the rules; " + direction;
    return v;
  }
  if (k == l) {
    v.note = "k = l: the identity is a nontrivial homomorphism; " + direction;
    return v;
  }
  const long N = n, K = k, L = l;
  using Check = std::function<bool(Rule&)>;
  const std::vector<std::pair<std::string, Check>> rules = {
      {"R1",
       [&](Rule& r) {
         bool a = r.ge("k", "1", K, 1);
         bool b = r.lt("k", "l", K, L);
         bool c = r.ge("n", "2l^2+l-2", N, 2 * L * L + L - 2);
         return a && b && c;
       }},
      {"R2",
       [&](Rule& r) {
         bool a = r.lt("2", "l", 2, L);
         bool b = r.lt("l", "k", L, K);
         bool c = r.lt("k", "2(l-1)", K, 2 * (L - 1));
         bool d = r.ge("n", "3k^2-2", N, 3 * K * K - 2);
         return a && b && c && d;
       }},
      {"R3",
       [&](Rule& r) {
         bool a = r.lt("1", "l", 1, L);
         bool b = r.lt("l", "k", L, K);
         bool c = r.gt("f = k mod l", "f1 = n mod l", K % L, N % L);
         bool d = r.ge("n", "3k^2-2", N, 3 * K * K - 2);
         return a && b && c && d;
       }},
      {"R4",
       [&](Rule& r) {
         bool a = r.eq("k", "1", K, 1);
         bool b = r.ge("l", "2", L, 2);
         return a && b;
       }},
      {"R5",
       [&](Rule& r) {
         bool a = r.eq("k", "3", K, 3);
         bool b = r.eq("l", "2", L, 2);
         bool even = r.eq("n mod 2", "0", N % 2, 0);
         bool big = r.ge("n", "6", N, 6);
         bool seven = r.eq("n", "7", N, 7);
         return a && b && ((even && big) || seven);
       }},
  };
  for (const auto& [id, check] : rules) {
    Rule rule(id, v.trace);
    if (check(rule)) {
      v.conclusion = Conclusion::Trivial;
      v.rule = id;
      v.note = "all " + direction + " are trivial (rationally null homotopic maps)";
      return v;
    }
  }
  v.note = "no rule applies; " + direction;
  return v;
}

}  // namespace grasscoh
