#include "grasscoh/slices.hpp"
#include "field.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <mutex>
#include <set>
#include <sstream>

#include "json.hpp"

namespace grasscoh {

namespace {

using IntMatrix = std::vector<std::vector<BigInt>>;

// Row-echelon form by fraction-free (Bareiss) elimination. Pivots are sought
// only in columns [0, pivot_width); later columns ride along. Rows are
// permuted so that rows [0, rank) carry the pivots. Returns the pivot columns.
std::vector<std::size_t> bareiss_echelon(IntMatrix& m, std::size_t pivot_width) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  const std::size_t width = m.front().size();
  BigInt prev = 1;
  std::size_t r = 0;
  BigInt t;
  for (std::size_t c = 0; c < pivot_width && r < m.size(); ++c) {
    std::size_t found = r;
    while (found < m.size() && m[found][c] == 0) ++found;
    if (found == m.size()) continue;
    std::swap(m[r], m[found]);
    const BigInt& piv = m[r][c];
    for (std::size_t i = r + 1; i < m.size(); ++i) {
      auto& row = m[i];
      if (row[c] == 0) {
        // Entries still need the common scaling to keep every entry a minor.
        for (std::size_t j = c + 1; j < width; ++j) {
          if (row[j] == 0) continue;
          row[j] *= piv;
          if (!mpz_divisible_p(row[j].get_mpz_t(), prev.get_mpz_t())) {
            throw InternalConsistencyError("fraction-free elimination lost exactness");
          }
          mpz_divexact(row[j].get_mpz_t(), row[j].get_mpz_t(), prev.get_mpz_t());
        }
        continue;
      }
      const BigInt lead = row[c];
      for (std::size_t j = c + 1; j < width; ++j) {
        t = piv * row[j];
        t -= lead * m[r][j];
        if (t != 0) {
          if (!mpz_divisible_p(t.get_mpz_t(), prev.get_mpz_t())) {
            throw InternalConsistencyError("fraction-free elimination lost exactness");
          }
          mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        }
        row[j] = t;
      }
      row[c] = 0;
    }
    prev = m[r][c];
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::vector<BigInt> clear_denominators(const std::vector<Rational>& row) {
  BigInt lcm = 1;
  for (const auto& v : row) {
    if (v != 0) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), v.get_den().get_mpz_t());
  }
  std::vector<BigInt> out(row.size());
  for (std::size_t j = 0; j < row.size(); ++j) {
    if (row[j] != 0) out[j] = row[j].get_num() * (lcm / row[j].get_den());
  }
  return out;
}

Exponents add_exponents(const Exponents& a, const Exponents& b) {
  Exponents out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

}  // namespace

GradedIdeal::GradedIdeal(std::vector<int> weights, std::vector<Polynomial> generators)
    : weights_(std::move(weights)), generators_(std::move(generators)) {
  for (int w : weights_) {
    if (w <= 0) throw InvalidArgument("GradedIdeal: variable weights must be positive");
  }
  for (const auto& g : generators_) {
    if (g.nvars() != weights_.size()) throw InvalidArgument("GradedIdeal: generator variable count mismatch");
    long gw = -1;
    for (const auto& [e, c] : g.terms()) {
      long we = weight_of(e);
      if (gw >= 0 && we != gw) throw InvalidArgument("GradedIdeal: generators must be homogeneous");
      gw = we;
    }
    generator_weights_.push_back(gw);
  }
}

GradedIdeal::GradedIdeal(const Presentation& pres) : GradedIdeal([&] {
    std::vector<int> w(static_cast<std::size_t>(pres.k));
    for (int i = 0; i < pres.k; ++i) w[static_cast<std::size_t>(i)] = i + 1;
    return w;
  }(), pres.relations) {}

long GradedIdeal::weight_of(const Exponents& e) const {
  long w = 0;
  for (std::size_t i = 0; i < e.size(); ++i) w += static_cast<long>(weights_[i]) * e[i];
  return w;
}

void SliceBasis::index_columns() {
  index_.clear();
  for (std::size_t j = 0; j < columns_.size(); ++j) index_.emplace(columns_[j], j);
}

SliceBasis SliceBasis::build(const GradedIdeal& ideal, long w, bool track_cofactors) {
  SliceBasis s;
  s.weight_ = w;
  s.nvars_ = ideal.nvars();
  s.columns_ = monomials_of_weight(ideal.variable_weights(), w);
  s.index_columns();
  s.ngens_ = ideal.generators().size();
  s.tracked_ = track_cofactors;
  const std::size_t ncols = s.columns_.size();

  std::vector<std::pair<std::size_t, Exponents>> products;
  std::vector<std::vector<Rational>> raw;
  for (std::size_t j = 0; j < ideal.generators().size(); ++j) {
    long gw = ideal.generator_weight(j);
    if (gw < 0 || gw > w) continue;
    for (const auto& sexp : monomials_of_weight(ideal.variable_weights(), w - gw)) {
      std::vector<Rational> row(ncols);
      for (const auto& [e, c] : ideal.generators()[j].terms()) {
        row[s.index_.at(add_exponents(e, sexp))] = c;
      }
      raw.push_back(std::move(row));
      products.emplace_back(j, sexp);
    }
  }

  const std::size_t nrows = raw.size();
  const std::size_t width = ncols + (track_cofactors ? nrows : 0);
  IntMatrix m(nrows);
  for (std::size_t r = 0; r < nrows; ++r) {
    BigInt lcm = 1;
    for (const auto& v : raw[r]) {
      if (v != 0) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), v.get_den().get_mpz_t());
    }
    m[r].resize(width);
    for (std::size_t c = 0; c < ncols; ++c) {
      if (raw[r][c] != 0) m[r][c] = raw[r][c].get_num() * (lcm / raw[r][c].get_den());
    }
    if (track_cofactors) m[r][ncols + r] = lcm;
  }
  raw.clear();

  auto piv = bareiss_echelon(m, ncols);
  const std::size_t rank = piv.size();

  // Back substitution over Q to reduced form.
  std::vector<std::vector<Rational>> q(rank, std::vector<Rational>(width));
  for (std::size_t r = 0; r < rank; ++r) {
    const BigInt& lead = m[r][piv[r]];
    for (std::size_t j = 0; j < width; ++j) {
      if (m[r][j] != 0) q[r][j] = make_rational(m[r][j], lead);
    }
  }
  m.clear();
  for (std::size_t r = rank; r-- > 0;) {
    for (std::size_t above = 0; above < r; ++above) {
      Rational f = q[above][piv[r]];
      if (f == 0) continue;
      for (std::size_t j = piv[r]; j < width; ++j) {
        if (q[r][j] != 0) q[above][j] -= f * q[r][j];
      }
    }
  }

  s.pivots_ = piv;
  s.rows_.resize(rank);
  if (track_cofactors) {
    s.combos_.resize(rank);
    s.products_ = std::move(products);
  }
  for (std::size_t r = 0; r < rank; ++r) {
    for (std::size_t j = 0; j < ncols; ++j) {
      if (q[r][j] != 0) s.rows_[r].emplace_back(j, q[r][j]);
    }
    for (std::size_t j = ncols; j < width; ++j) {
      if (q[r][j] != 0) s.combos_[r].emplace_back(j - ncols, q[r][j]);
    }
  }
  return s;
}

SliceBasis SliceBasis::from_rows(long w, std::vector<Exponents> columns, std::vector<SparseRow> rows) {
  SliceBasis s;
  s.weight_ = w;
  s.nvars_ = columns.empty() ? 0 : columns.front().size();
  s.columns_ = std::move(columns);
  s.index_columns();
  for (const auto& row : rows) {
    if (row.empty() || row.front().second != 1) throw InvalidArgument("slice rows must be reduced with unit leads");
    if (!s.pivots_.empty() && row.front().first <= s.pivots_.back()) {
      throw InvalidArgument("slice rows must be ordered by pivot");
    }
    s.pivots_.push_back(row.front().first);
  }
  s.rows_ = std::move(rows);
  return s;
}

std::optional<std::size_t> SliceBasis::column_of(const Exponents& e) const {
  auto it = index_.find(e);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<Rational> SliceBasis::coordinates(const Polynomial& p) const {
  std::vector<Rational> v(columns_.size());
  for (const auto& [e, c] : p.terms()) {
    auto col = column_of(e);
    if (!col) throw InvalidArgument("polynomial has a term outside weight " + std::to_string(weight_));
    v[*col] = c;
  }
  return v;
}

void SliceBasis::reduce(std::vector<Rational>& coords) const {
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    Rational f = coords[pivots_[r]];
    if (f == 0) continue;
    for (const auto& [j, v] : rows_[r]) coords[j] -= f * v;
  }
}

Polynomial SliceBasis::normal_form(const Polynomial& p) const {
  auto v = coordinates(p);
  reduce(v);
  Polynomial out(p.nvars());
  for (std::size_t j = 0; j < v.size(); ++j) {
    if (v[j] != 0) out.add_term(columns_[j], v[j]);
  }
  return out;
}

bool SliceBasis::contains(const Polynomial& p) const {
  auto v = coordinates(p);
  reduce(v);
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
}

std::optional<std::vector<Polynomial>> SliceBasis::express(const Polynomial& p) const {
  if (!tracked_) throw InvalidArgument("express needs a slice built with cofactor tracking");
  auto v = coordinates(p);
  std::vector<Rational> alpha(rows_.size());
  for (std::size_t r = 0; r < rows_.size(); ++r) alpha[r] = v[pivots_[r]];
  reduce(v);
  if (!std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; })) return std::nullopt;
  std::vector<Polynomial> cof(ngens_, Polynomial(nvars_));
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (alpha[r] == 0) continue;
    for (const auto& [t, c] : combos_[r]) {
      const auto& [gen, sexp] = products_[t];
      cof[gen].add_term(sexp, alpha[r] * c);
    }
  }
  return cof;
}

std::size_t matrix_rank(const std::vector<std::vector<Rational>>& rows, std::size_t width) {
  IntMatrix m;
  m.reserve(rows.size());
  for (const auto& r : rows) {
    if (r.size() != width) throw InvalidArgument("matrix_rank: ragged rows");
    m.push_back(clear_denominators(r));
  }
  return bareiss_echelon(m, width).size();
}

std::size_t SliceBasis::restricted_rank(const MonomialPredicate& pred) const {
  std::vector<std::size_t> keep;
  std::vector<long> remap(columns_.size(), -1);
  for (std::size_t j = 0; j < columns_.size(); ++j) {
    if (pred(columns_[j])) {
      remap[j] = static_cast<long>(keep.size());
      keep.push_back(j);
    }
  }
  std::vector<std::vector<Rational>> sub(rows_.size(), std::vector<Rational>(keep.size()));
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    for (const auto& [j, v] : rows_[r]) {
      if (remap[j] >= 0) sub[r][static_cast<std::size_t>(remap[j])] = v;
    }
  }
  return matrix_rank(sub, keep.size());
}

bool SliceBasis::every_element_meets(const MonomialPredicate& pred) const {
  // Projection onto the satisfying columns is injective on the row space.
  return restricted_rank(pred) == rank();
}

// ---------------------------------------------------------------- cache

std::string SliceCache::file_name(int n, int k, long w) {
  return "slice_n" + std::to_string(n) + "_k" + std::to_string(k) + "_w" + std::to_string(w) + ".json";
}

namespace {

nlohmann::json slice_to_json(int n, int k, const SliceBasis& s) {
  nlohmann::json cols = nlohmann::json::array();
  for (const auto& e : s.columns()) cols.push_back(e);
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : s.rows()) {
    nlohmann::json r = nlohmann::json::array();
    for (const auto& [j, v] : row) r.push_back(nlohmann::json::array({j, to_string(v)}));
    rows.push_back(std::move(r));
  }
  return {{"n", n}, {"k", k}, {"w", s.weight()}, {"columns", cols}, {"rows", rows}};
}

std::optional<SliceBasis> slice_from_file(const std::filesystem::path& path, int n, int k, long w) {
  std::ifstream in(path);
  if (!in) return std::nullopt;
  try {
    auto j = nlohmann::json::parse(in);
    if (j.at("n") != n || j.at("k") != k || j.at("w") != w) return std::nullopt;
    std::vector<Exponents> cols = j.at("columns").get<std::vector<Exponents>>();
    std::vector<SparseRow> rows;
    for (const auto& r : j.at("rows")) {
      SparseRow row;
      for (const auto& entry : r) row.emplace_back(entry.at(0).get<std::size_t>(), parse_rational(entry.at(1).get<std::string>()));
      rows.push_back(std::move(row));
    }
    return SliceBasis::from_rows(w, std::move(cols), std::move(rows));
  } catch (const std::exception&) {
    // Unreadable cache entries are rebuilt.
    return std::nullopt;
  }
}

bool is_standard(const Presentation& pres) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::vector<Polynomial>> known;
  std::lock_guard lock(mu);
  auto key = std::make_pair(pres.n, pres.k);
  auto it = known.find(key);
  if (it == known.end()) it = known.emplace(key, relations_inverse(pres.n, pres.k)).first;
  return it->second == pres.relations;
}

}  // namespace

std::shared_ptr<const SliceBasis> SliceCache::get(const Presentation& pres, long w) {
  if (!is_standard(pres)) return std::make_shared<const SliceBasis>(SliceBasis::build(GradedIdeal(pres), w));
  Key key{pres.n, pres.k, w};
  {
    std::shared_lock lock(mutex_);
    auto it = slices_.find(key);
    if (it != slices_.end()) return it->second;
  }
  std::optional<SliceBasis> loaded;
  std::filesystem::path path;
  if (dir_) {
    path = *dir_ / file_name(pres.n, pres.k, w);
    loaded = slice_from_file(path, pres.n, pres.k, w);
  }
  bool built = !loaded;
  auto made = std::make_shared<const SliceBasis>(built ? SliceBasis::build(GradedIdeal(pres), w) : std::move(*loaded));
  if (built && dir_) {
    std::error_code ec;
    std::filesystem::create_directories(*dir_, ec);
    auto tmp = path;
    tmp += ".tmp";
    {
      std::ofstream out(tmp);
      out << slice_to_json(pres.n, pres.k, *made).dump() << "\n";
    }
    std::filesystem::rename(tmp, path, ec);
  }
  std::unique_lock lock(mutex_);
  auto [it, inserted] = slices_.emplace(key, made);
  return it->second;
}

std::size_t SliceCache::size() const {
  std::shared_lock lock(mutex_);
  return slices_.size();
}

void SliceCache::clear() {
  std::unique_lock lock(mutex_);
  slices_.clear();
}

namespace {

std::mutex& default_cache_mutex() {
  static std::mutex mu;
  return mu;
}

std::unique_ptr<SliceCache>& default_cache_slot() {
  static std::unique_ptr<SliceCache> slot;
  return slot;
}

}  // namespace

SliceCache& default_slice_cache() {
  std::lock_guard lock(default_cache_mutex());
  auto& slot = default_cache_slot();
  if (!slot) {
    const char* env = std::getenv("GRASSCOH_CACHE");
    if (env != nullptr && *env != '\0') {
      slot = std::make_unique<SliceCache>(std::filesystem::path(env));
    } else {
      slot = std::make_unique<SliceCache>();
    }
  }
  return *slot;
}

void configure_default_slice_cache(const std::optional<std::filesystem::path>& dir) {
  std::lock_guard lock(default_cache_mutex());
  auto& slot = default_cache_slot();
  slot = dir ? std::make_unique<SliceCache>(*dir) : std::make_unique<SliceCache>();
}

// ------------------------------------------------------ presentation API

namespace {

std::map<long, Polynomial> split_by_weight(const Polynomial& p) {
  std::map<long, Polynomial> parts;
  for (const auto& [e, c] : p.terms()) {
    auto [it, inserted] = parts.try_emplace(weight(e), p.nvars());
    it->second.add_term(e, c);
  }
  return parts;
}

void check_pres_vars(const Presentation& pres, const Polynomial& p) {
  if (p.nvars() != static_cast<std::size_t>(pres.k)) {
    throw InvalidArgument("polynomial has " + std::to_string(p.nvars()) + " variables, presentation has " +
                          std::to_string(pres.k));
  }
}

}  // namespace

SliceBasis ideal_slice(const Presentation& pres, long w) {
  if (w < 0) throw InvalidArgument("ideal_slice: negative weight");
  return *default_slice_cache().get(pres, w);
}

bool is_member(const Presentation& pres, const Polynomial& p) {
  check_pres_vars(pres, p);
  for (const auto& [w, part] : split_by_weight(p)) {
    if (!default_slice_cache().get(pres, w)->contains(part)) return false;
  }
  return true;
}

std::optional<std::vector<Polynomial>> express(const Presentation& pres, const Polynomial& p) {
  check_pres_vars(pres, p);
  std::vector<Polynomial> total(static_cast<std::size_t>(pres.k), Polynomial(p.nvars()));
  GradedIdeal ideal(pres);
  for (const auto& [w, part] : split_by_weight(p)) {
    auto cof = SliceBasis::build(ideal, w, true).express(part);
    if (!cof) return std::nullopt;
    for (std::size_t j = 0; j < total.size(); ++j) total[j] += (*cof)[j];
  }
  return total;
}

Polynomial normal_form(const Presentation& pres, const Polynomial& p) {
  check_pres_vars(pres, p);
  Polynomial out(p.nvars());
  for (const auto& [w, part] : split_by_weight(p)) out += default_slice_cache().get(pres, w)->normal_form(part);
  return out;
}

bool avoidance_check(const Presentation& pres, long w, const MonomialPredicate& pred) {
  if (w < 0) throw InvalidArgument("avoidance_check: negative weight");
  return default_slice_cache().get(pres, w)->every_element_meets(pred);
}

MonomialPredicate divisible_by(Exponents e) {
  return [e = std::move(e)](const Exponents& m) {
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (m[i] < e[i]) return false;
    }
    return true;
  };
}

MonomialPredicate divisible_by_variable(std::size_t nvars, std::size_t i) {
  if (i < 1 || i > nvars) throw InvalidArgument("divisible_by_variable: index out of range");
  Exponents e(nvars, 0);
  e[i - 1] = 1;
  return divisible_by(std::move(e));
}

long nilpotency_exponent(const Presentation& pres, std::size_t i) {
  if (i < 1 || i > static_cast<std::size_t>(pres.k)) throw InvalidArgument("nilpotency_exponent: index out of range");
  const long bound = static_cast<long>(pres.k) * (pres.n - pres.k) + 1;
  for (long N = 1; N <= bound; ++N) {
    Exponents e(static_cast<std::size_t>(pres.k), 0);
    e[i - 1] = static_cast<int>(N);
    if (is_member(pres, Polynomial::monomial(e))) return N;
  }
  throw InternalConsistencyError("generator power escaped the top weight of the quotient");
}

std::optional<long> nilpotency_exponent(const GradedIdeal& ideal, std::size_t i, long max_exponent,
                                        std::size_t column_cap) {
  if (i < 1 || i > ideal.nvars()) throw InvalidArgument("nilpotency_exponent: index out of range");
  for (long N = 1; N <= max_exponent; ++N) {
    long w = N * ideal.variable_weights()[i - 1];
    if (monomials_of_weight(ideal.variable_weights(), w).size() > column_cap) return std::nullopt;
    Exponents e(ideal.nvars(), 0);
    e[i - 1] = static_cast<int>(N);
    if (SliceBasis::build(ideal, w).contains(Polynomial::monomial(e))) return N;
  }
  return std::nullopt;
}

namespace {

// x^e in the weight-w slice over GF(2^61 - 1).
bool contains_monomial_mod_p(const GradedIdeal& ideal, long w, const Exponents& e) {
  using detail::ModP;
  const auto columns = monomials_of_weight(ideal.variable_weights(), w);
  std::map<Exponents, std::size_t, LexGreater> index;
  for (std::size_t j = 0; j < columns.size(); ++j) index.emplace(columns[j], j);
  detail::Mat<ModP> m;
  for (std::size_t j = 0; j < ideal.generators().size(); ++j) {
    long gw = ideal.generator_weight(j);
    if (gw < 0 || gw > w) continue;
    for (const auto& sexp : monomials_of_weight(ideal.variable_weights(), w - gw)) {
      std::vector<ModP> row(columns.size());
      for (const auto& [ge, c] : ideal.generators()[j].terms()) row[index.at(add_exponents(ge, sexp))] = ModP::from_rational(c);
      m.push_back(std::move(row));
    }
  }
  const std::size_t before = detail::rref(m, columns.size()).size();
  std::vector<ModP> target(columns.size());
  target[index.at(e)] = ModP(1);
  m.push_back(std::move(target));
  return detail::rref(m, columns.size()).size() == before;
}

}  // namespace

std::optional<long> nilpotency_witness(const GradedIdeal& ideal, std::size_t i, long max_exponent,
                                       std::size_t column_cap, std::uint64_t& work) {
  if (i < 1 || i > ideal.nvars()) throw InvalidArgument("nilpotency_witness: index out of range");
  for (long N = 1; N <= max_exponent; ++N) {
    long w = N * ideal.variable_weights()[i - 1];
    const std::uint64_t cols = monomials_of_weight(ideal.variable_weights(), w).size();
    if (cols > column_cap) return std::nullopt;
    std::uint64_t rows = 0;
    for (std::size_t j = 0; j < ideal.generators().size(); ++j) {
      long gw = ideal.generator_weight(j);
      if (gw >= 0 && gw <= w) rows += monomials_of_weight(ideal.variable_weights(), w - gw).size();
    }
    const std::uint64_t cost = rows * cols * std::min(rows, cols) + 1;
    if (cost > work) {
      work = 0;
      return std::nullopt;
    }
    work -= cost;
    Exponents e(ideal.nvars(), 0);
    e[i - 1] = static_cast<int>(N);
    bool screened = false;
    try {
      screened = contains_monomial_mod_p(ideal, w, e);
    } catch (const InvalidArgument&) {
      screened = true;  // a denominator vanishes mod p: decide exactly
    }
    if (screened && SliceBasis::build(ideal, w).contains(Polynomial::monomial(e))) return N;
  }
  return std::nullopt;
}

// --------------------------------------------------------- Λ-sets

LambdaSets lambda_sets(int i, int c1, int c2, int n, int l) {
  if (l < 2) throw InvalidArgument("lambda_sets: need l >= 2 (the sets use x_{l-1} and x_l)");
  if (i < 1 || i > l) throw InvalidArgument("lambda_sets: need 1 <= i <= l");
  if (c1 < 1 || c2 < 1) throw InvalidArgument("lambda_sets: need c1, c2 >= 1");
  const std::size_t L = static_cast<std::size_t>(l);
  auto tail = [&](long target, const Exponents& s) {
    std::vector<Exponents> out;
    // m1 descending gives canonical order for fixed s.
    for (long m1 = target / (l - 1); m1 >= c1; --m1) {
      long rest = target - m1 * (l - 1);
      if (rest < static_cast<long>(c2) * l || rest % l != 0) continue;
      Exponents e = s;
      e[L - 2] += static_cast<int>(m1);
      e[L - 1] += static_cast<int>(rest / l);
      out.push_back(std::move(e));
    }
    return out;
  };
  LambdaSets out;
  out.i = i;
  const long top = n - l + i;
  out.d = tail(top, Exponents(L, 0));
  for (long ws = 1; ws <= i - 1; ++ws) {
    for (auto& s : monomials_of_weight(L, ws)) out.q.push_back(std::move(s));
  }
  std::sort(out.q.begin(), out.q.end(), LexGreater{});
  std::set<Exponents, LexGreater> all(out.d.begin(), out.d.end());
  for (const auto& s : out.q) {
    out.d_s.push_back(tail(top - weight(s), s));
    all.insert(out.d_s.back().begin(), out.d_s.back().end());
  }
  out.lambda.assign(all.begin(), all.end());
  return out;
}

}  // namespace grasscoh
