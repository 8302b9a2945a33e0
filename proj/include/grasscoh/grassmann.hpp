#pragma once

// Presentations Q[x_1..x_k] / (R_1..R_k) of the rational cohomology of the
// Grassmannian G_{n,k}, and the restriction maps between them.

#include <vector>

#include "grasscoh/polynomial.hpp"

namespace grasscoh {

struct Presentation {
  int n = 0;
  int k = 0;
  /// relations[j-1] = R_j, homogeneous of weight n - k + j.
  std::vector<Polynomial> relations;

  long relation_weight(int j) const { return n - k + j; }
  friend bool operator==(const Presentation&, const Presentation&) = default;
};

/// R_j = sum over wt(m) = n-k+j of (-1)^{|m|} multinomial(m) x^m.
std::vector<Polynomial> relations_multinomial(int n, int k);
/// Tail pieces of the formal inverse of 1 + x_1 + ... + x_k via the recursion
/// (c^-1)_j = -sum_{i<=min(j,k)} x_i (c^-1)_{j-i}.
std::vector<Polynomial> relations_inverse(int n, int k);
/// Homogeneous pieces (c^-1)_0 .. (c^-1)_top in k variables.
std::vector<Polynomial> inverse_total_class(int k, int top);

/// Uses the recursion.
Presentation presentation(int n, int k);

/// A graded map Q[x_1..x_k]/I_src -> Q[y_1..y_l]/I_tgt given by generator images.
struct RingMap {
  Presentation source;
  Presentation target;
  std::vector<Polynomial> images;
};

/// x_r -> x_r from (n+1, k) to (n, k). Certified well defined by membership.
RingMap restriction_i(int n, int k);
/// x_r -> x_r for r <= k, x_{k+1} -> 0, from (n+1, k+1) to (n, k). Certified.
RingMap restriction_j(int n, int k);

void validate_nk(int n, int k);

}  // namespace grasscoh
