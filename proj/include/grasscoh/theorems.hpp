#pragma once

// Triviality rules for graded homomorphisms H*(G_{n,k};Q) -> H*(G_{n,l};Q),
// equivalently for maps G_{n,l} -> G_{n,k} up to rational homotopy.
//
//   R1  1 <= k < l,              n >= 2l^2 + l - 2
//   R2  2 < l < k < 2(l - 1),    n >= 3k^2 - 2
//   R3  1 < l < k, f > f1,       n >= 3k^2 - 2   (k = e l + f, n = e1 l + f1)
//   R4  k = 1, l >= 2
//   R5  k = 3, l = 2,            n even and n >= 6, or n = 7
//
// Rules are tried in this order and the first one whose hypotheses all hold
// is cited; the trace lists every hypothesis that was evaluated.

#include <string>
#include <vector>

#include "grasscoh/exactmath.hpp"

namespace grasscoh {

enum class Conclusion { Trivial, Unknown };

std::string to_string(Conclusion c);
Conclusion parse_conclusion(const std::string& text);

struct Hypothesis {
  /// e.g. "R1: n >= 2l^2+l-2".
  std::string text;
  long lhs = 0;
  long rhs = 0;
  bool holds = false;
  friend bool operator==(const Hypothesis&, const Hypothesis&) = default;
};

struct TheoremVerdict {
  Conclusion conclusion = Conclusion::Unknown;
  /// "R1".."R5", or empty when no rule fires.
  std::string rule;
  std::vector<Hypothesis> trace;
  std::string note;
  friend bool operator==(const TheoremVerdict&, const TheoremVerdict&) = default;
};

/// Requires 1 <= k, l <= n. Outside 1 <= k, l <= n/2 the answer is Unknown.
TheoremVerdict theorem_verdict(int n, int k, int l);

/// "maps G_{n,l} -> G_{n,k}" for the given indices.
std::string induced_map_direction(int n, int k, int l);

}  // namespace grasscoh
