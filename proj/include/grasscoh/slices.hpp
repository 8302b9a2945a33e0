#pragma once

// Weight-graded exact linear algebra on homogeneous ideals.
//
// A weight-w slice is the span of all products x^s * g (g a generator,
// wt(s) + wt(g) = w) written as rows over the canonical list of weight-w
// monomials. Rows are kept in reduced row-echelon form with pivots at the
// first nonzero column in canonical order, so reductions are unique.

#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "grasscoh/grassmann.hpp"
#include "grasscoh/polynomial.hpp"

namespace grasscoh {

/// Homogeneous generators in variables of arbitrary positive weights.
class GradedIdeal {
 public:
  GradedIdeal(std::vector<int> weights, std::vector<Polynomial> generators);
  explicit GradedIdeal(const Presentation& pres);

  const std::vector<int>& variable_weights() const { return weights_; }
  const std::vector<Polynomial>& generators() const { return generators_; }
  long generator_weight(std::size_t j) const { return generator_weights_[j]; }
  std::size_t nvars() const { return weights_.size(); }
  long weight_of(const Exponents& e) const;

 private:
  std::vector<int> weights_;
  std::vector<Polynomial> generators_;
  std::vector<long> generator_weights_;
};

using SparseRow = std::vector<std::pair<std::size_t, Rational>>;
using MonomialPredicate = std::function<bool(const Exponents&)>;

class SliceBasis {
 public:
  /// Cofactor tracking is needed only by express().
  static SliceBasis build(const GradedIdeal& ideal, long w, bool track_cofactors = false);
  /// Reassembles a basis from stored rows (used by the on-disk cache).
  static SliceBasis from_rows(long w, std::vector<Exponents> columns, std::vector<SparseRow> rows);

  long weight() const { return weight_; }
  const std::vector<Exponents>& columns() const { return columns_; }
  /// RREF rows ordered by pivot column; leading entry 1.
  const std::vector<SparseRow>& rows() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  std::size_t rank() const { return rows_.size(); }
  std::size_t monomial_count() const { return columns_.size(); }
  std::size_t quotient_dim() const { return columns_.size() - rows_.size(); }
  std::optional<std::size_t> column_of(const Exponents& e) const;

  /// Dense coordinates of a polynomial homogeneous of this slice's weight.
  std::vector<Rational> coordinates(const Polynomial& p) const;
  /// Reduces coordinates in place; afterwards support avoids pivot columns.
  void reduce(std::vector<Rational>& coords) const;
  Polynomial normal_form(const Polynomial& p) const;
  bool contains(const Polynomial& p) const;
  /// Cofactors Q_j with p = sum_j Q_j g_j when p lies in the slice.
  std::optional<std::vector<Polynomial>> express(const Polynomial& p) const;

  /// Rank of the row space projected onto the columns satisfying pred.
  std::size_t restricted_rank(const MonomialPredicate& pred) const;
  /// True iff every nonzero slice element has a pred-satisfying monomial.
  bool every_element_meets(const MonomialPredicate& pred) const;

 private:
  long weight_ = 0;
  std::size_t nvars_ = 0;
  std::vector<Exponents> columns_;
  std::map<Exponents, std::size_t, LexGreater> index_;
  std::vector<SparseRow> rows_;
  std::vector<std::size_t> pivots_;
  // Cofactor data: for each RREF row, its combination of generator products.
  std::vector<std::pair<std::size_t, Exponents>> products_;
  std::vector<SparseRow> combos_;
  std::size_t ngens_ = 0;
  bool tracked_ = false;

  void index_columns();
};

/// Rank of a list of rational rows of the given width, fraction free.
std::size_t matrix_rank(const std::vector<std::vector<Rational>>& rows, std::size_t width);

/// Thread-safe store of slices keyed by (n, k, w), optionally mirrored to
/// one JSON file per key in a directory.
class SliceCache {
 public:
  SliceCache() = default;
  explicit SliceCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

  std::shared_ptr<const SliceBasis> get(const Presentation& pres, long w);
  std::size_t size() const;
  void clear();
  const std::optional<std::filesystem::path>& directory() const { return dir_; }

  /// File the slice for (n, k, w) is stored under.
  static std::string file_name(int n, int k, long w);

 private:
  using Key = std::tuple<int, int, long>;
  mutable std::shared_mutex mutex_;
  std::map<Key, std::shared_ptr<const SliceBasis>> slices_;
  std::optional<std::filesystem::path> dir_;
};

/// Process-wide cache; GRASSCOH_CACHE, when set, names its directory.
SliceCache& default_slice_cache();
/// Replaces the process-wide cache (directory may be empty for memory-only).
void configure_default_slice_cache(const std::optional<std::filesystem::path>& dir);

SliceBasis ideal_slice(const Presentation& pres, long w);
bool is_member(const Presentation& pres, const Polynomial& p);
std::optional<std::vector<Polynomial>> express(const Presentation& pres, const Polynomial& p);
Polynomial normal_form(const Presentation& pres, const Polynomial& p);
bool avoidance_check(const Presentation& pres, long w, const MonomialPredicate& pred);

/// Monomial predicate: divisible by x^e.
MonomialPredicate divisible_by(Exponents e);
/// Monomial predicate: divisible by x_i (1-based) in nvars variables.
MonomialPredicate divisible_by_variable(std::size_t nvars, std::size_t i);

/// Least N with x_i^N in the ideal (i is 1-based).
long nilpotency_exponent(const Presentation& pres, std::size_t i);
/// Same for a general graded ideal, searching exponents up to max_exponent.
std::optional<long> nilpotency_exponent(const GradedIdeal& ideal, std::size_t i, long max_exponent,
                                        std::size_t column_cap);
/// Some N <= max_exponent with x_i^N in the ideal, verified exactly. Each N
/// is screened modulo 2^61 - 1 first, so a witness may be missed (nullopt)
/// but is never wrong, and the returned N need not be the least one.
/// work is an elimination budget (rows * columns * rank per slice), charged
/// before each slice; the search gives up once it would go negative.
std::optional<long> nilpotency_witness(const GradedIdeal& ideal, std::size_t i, long max_exponent,
                                       std::size_t column_cap, std::uint64_t& work);

struct HilbertCertificate {
  bool holds = false;
  /// "modular" (GF(2^61-1) recursion, exact over Q by semicontinuity) or
  /// "rational" (exact recursion over Q).
  std::string method;
  std::vector<std::int64_t> quotient_dims;
  std::vector<std::int64_t> expected_dims;
};

/// Quotient dimensions of Q[x]/I_{n,k} in weights 0..top, computed by the
/// Koszul quotient recursion over Q.
std::vector<std::int64_t> quotient_dims_rational(const Presentation& pres, long top);
/// Same over GF(2^61 - 1); each entry bounds the rational one from above.
std::vector<std::int64_t> quotient_dims_modular(const Presentation& pres, long top);
/// Quotient dimensions from monomial slices, weights 0..top.
std::vector<std::int64_t> quotient_dims_by_slices(const Presentation& pres, long top);

HilbertCertificate hilbert_certificate(const Presentation& pres);
bool regular_sequence_certificate(const Presentation& pres);

struct LambdaSets {
  int i = 0;
  /// Q(i): exponent vectors in l variables of weight 1..i-1, canonical order.
  std::vector<Exponents> q;
  std::vector<Exponents> d;
  /// d_s[t] is D_{i, q[t]}.
  std::vector<std::vector<Exponents>> d_s;
  /// Union of d and every d_s, canonical order without repeats.
  std::vector<Exponents> lambda;
};

LambdaSets lambda_sets(int i, int c1, int c2, int n, int l);

}  // namespace grasscoh
