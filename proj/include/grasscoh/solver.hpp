#pragma once

// Branching elimination over Q for the constraint systems of homsearch.
//
// A semi-decision procedure: every branch either closes (contradiction, or
// all parameters forced to zero), ends in a verified family of solutions, or
// gets stuck. Stuck branches and budget exhaustion make the answer Undecided.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "grasscoh/homsearch.hpp"

namespace grasscoh {

struct SolverBudget {
  std::size_t max_branches = 10000;
  /// Largest slice weight the search may touch (relation weights included).
  long max_weight = 64;
  std::size_t max_params = 12;
  long max_degree = 64;
  /// Elimination work (rows * columns * rank, summed) spent on nilpotency
  /// screening over the whole search.
  std::uint64_t max_work = 300000000;
  /// Coefficient work (GMP limbs of every term product) spent on
  /// substitutions over the whole search.
  std::uint64_t max_terms = 10000000;
  friend bool operator==(const SolverBudget&, const SolverBudget&) = default;
};

enum class VerdictKind { OnlyTrivial, Solutions, Undecided };

std::string to_string(VerdictKind kind);
VerdictKind parse_verdict_kind(const std::string& text);

struct LogStep {
  /// Dotted path from the root branch "0".
  std::string branch;
  std::string move;
  std::string detail;
  friend bool operator==(const LogStep&, const LogStep&) = default;
};

/// One surviving branch: the original parameters as Laurent expressions in
/// the free variables, valid wherever the listed variables are nonzero.
struct SolutionFamily {
  std::string branch;
  std::vector<std::string> free_vars;
  std::vector<std::string> nonzero;
  /// assignment[i] is the value of parameter i, e.g. "a1^2".
  std::vector<std::string> assignment;
  /// A nonzero parameter point of the family that passed every check.
  std::vector<Rational> sample;
  friend bool operator==(const SolutionFamily&, const SolutionFamily&) = default;
};

struct Verdict {
  VerdictKind kind = VerdictKind::Undecided;
  std::vector<SolutionFamily> solutions;
  std::vector<LogStep> log;
  /// True iff every branch closed, so solutions lists all of them.
  bool complete = false;
  friend bool operator==(const Verdict&, const Verdict&) = default;
};

/// Extra acceptance test for sample points (e.g. verify_hom); must return true.
using SolutionCheck = std::function<bool(const std::vector<Rational>&)>;

Verdict solve_system(const ConstraintSystem& sys, const SolverBudget& budget = {}, const SolutionCheck& check = {});

/// generate_constraints + solve_system, with samples checked by verify_hom.
Verdict solve_hom(const HomAnsatz& ansatz, const SolverBudget& budget = {});

}  // namespace grasscoh
