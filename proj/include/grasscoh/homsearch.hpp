#pragma once

// Graded homomorphisms Q[x_1..x_k]/I_{n,k} -> Q[y_1..y_l]/I_{m,l} with
// unknown coefficients, and the polynomial systems those unknowns satisfy.

#include <string>
#include <vector>

#include "grasscoh/grassmann.hpp"
#include "grasscoh/param_polynomial.hpp"

namespace grasscoh {

enum class AnsatzMode { General, Projective, Divisible };

std::string to_string(AnsatzMode mode);
AnsatzMode parse_ansatz_mode(const std::string& text);

struct HomAnsatz {
  Presentation source;
  Presentation target;
  AnsatzMode mode = AnsatzMode::General;
  std::vector<std::string> param_names;
  /// Weight of each parameter: r when it multiplies a monomial in the image of x_r.
  std::vector<int> param_weights;
  /// images[r-1] is the template for x_r, homogeneous of weight r.
  std::vector<ParamPolynomial> images;
};

/// General: every monomial of weight r outside the target ideal gets its own
/// parameter (named a<exponents>, e.g. a10, a01). Projective: target index 1,
/// x_r -> t_r y^r. Divisible: target index 1, x_r -> 0 for r < k, x_k -> c y^k.
HomAnsatz build_ansatz(const Presentation& src, const Presentation& tgt, AnsatzMode mode);

/// Number of parameters build_ansatz would create, without building it.
std::size_t ansatz_parameter_count(const Presentation& src, const Presentation& tgt, AnsatzMode mode);

struct ConstraintSystem {
  std::vector<std::string> params;
  std::vector<int> param_weights;
  /// Each equation must vanish; polynomials in params.size() variables.
  std::vector<Polynomial> equations;
  /// origins[i] says which coefficient produced equations[i].
  std::vector<std::string> origins;
};

/// Normal-form coefficients of phi(R_j) modulo the target ideal, all j.
ConstraintSystem generate_constraints(const HomAnsatz& ansatz);

/// True iff x_r -> images[r-1] maps every source relation into the target ideal.
bool verify_hom(const Presentation& src, const Presentation& tgt, const std::vector<Polynomial>& images);

/// Images of an ansatz at a rational parameter point.
std::vector<Polynomial> specialize_images(const HomAnsatz& ansatz, const std::vector<Rational>& point);

struct RhoReduction {
  int e = 0, f = 0, e1 = 0, f1 = 0;
  /// Number of relations whose weight is a multiple of l.
  int s = 0;
  /// Indices t_j (1-based) of those relations and their weights / l.
  std::vector<int> relation_indices;
  std::vector<int> q;
  /// tau_i is the parameter of y_l^i in the image of x_{il}; index into the
  /// ansatz parameters, or -1 when the ansatz has no such parameter.
  std::vector<int> tau_params;
  /// System in the tau_i alone: S'_j = 0 for every j with q_j < e1.
  ConstraintSystem system;
};

/// Composes the ansatz with y_1..y_{l-1} -> 0 and extracts the reduced system.
RhoReduction rho_reduction(const HomAnsatz& ansatz);

}  // namespace grasscoh
