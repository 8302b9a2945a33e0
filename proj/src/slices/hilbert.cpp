// Hilbert function of Q[x_1..x_k]/(R_1..R_k) without monomial-sized matrices.
//
// For w >= 1 multiplication by the variables is onto A_w:
//     A_w = (A_{w-1} + ... + A_{w-k}) / K_w,
// and K_w is spanned by the Koszul vectors (x_j b in block i, -x_i b in block
// j; b in A_{w-i-j}) together with one vector per relation of weight w,
// obtained by splitting every monomial m = x_{i(m)} (m / x_{i(m)}) with i(m)
// the smallest variable dividing m. Each A_w is recorded as the non-pivot
// coordinates of a reduced echelon form of K_w, and the maps
// mu_i : A_{w-i} -> A_w are read off the same echelon form.

#include <map>

#include "grasscoh/slices.hpp"
#include "field.hpp"

namespace grasscoh {

namespace {

using detail::Mat;
using detail::ModP;
using detail::QField;
using detail::rref;

template <class F>
class QuotientRecursion {
 public:
  explicit QuotientRecursion(const Presentation& pres) : pres_(pres), k_(static_cast<std::size_t>(pres.k)) {
    dims_.push_back(1);
    mu_.emplace_back();
  }

  std::vector<std::int64_t> run(long top) {
    for (long w = 1; w <= top; ++w) step(w);
    return dims_;
  }

 private:
  std::size_t dim(long w) const { return w < 0 ? 0 : dims_[static_cast<std::size_t>(w)]; }

  // Image of basis vector b of A_{w-i} under multiplication by x_i.
  const std::vector<F>& mu(long w, std::size_t i, std::size_t b) const {
    return mu_[static_cast<std::size_t>(w)][i - 1][b];
  }

  std::vector<F> class_of(const Exponents& m) {
    long w = weight(m);
    if (w == 0) return {F(1)};
    auto it = classes_.find(m);
    if (it != classes_.end()) return it->second;
    std::size_t i = 0;
    while (m[i] == 0) ++i;
    Exponents rest = m;
    --rest[i];
    auto base = class_of(rest);
    std::vector<F> out(dim(w));
    for (std::size_t b = 0; b < base.size(); ++b) {
      if (base[b].is_zero()) continue;
      const auto& img = mu(w, i + 1, b);
      for (std::size_t t = 0; t < out.size(); ++t) {
        if (!img[t].is_zero()) out[t] = out[t] + base[b] * img[t];
      }
    }
    classes_.emplace(m, out);
    return out;
  }

  void step(long w) {
    std::vector<std::size_t> offset(k_ + 2, 0);
    for (std::size_t i = 1; i <= k_; ++i) offset[i + 1] = offset[i] + dim(w - static_cast<long>(i));
    const std::size_t width = offset[k_ + 1];
    Mat<F> rows;
    for (std::size_t i = 1; i <= k_; ++i) {
      for (std::size_t j = i + 1; j <= k_; ++j) {
        long base_w = w - static_cast<long>(i + j);
        if (base_w < 0) continue;
        for (std::size_t b = 0; b < dim(base_w); ++b) {
          std::vector<F> row(width);
          const auto& a = mu(w - static_cast<long>(i), j, b);
          const auto& c = mu(w - static_cast<long>(j), i, b);
          for (std::size_t t = 0; t < a.size(); ++t) row[offset[i] + t] = a[t];
          for (std::size_t t = 0; t < c.size(); ++t) row[offset[j] + t] = row[offset[j] + t] - c[t];
          rows.push_back(std::move(row));
        }
      }
    }
    for (int j = 1; j <= pres_.k; ++j) {
      if (pres_.relation_weight(j) != w) continue;
      std::vector<F> row(width);
      for (const auto& [m, coeff] : pres_.relations[static_cast<std::size_t>(j - 1)].terms()) {
        std::size_t i = 0;
        while (m[i] == 0) ++i;
        Exponents rest = m;
        --rest[i];
        auto cls = class_of(rest);
        F c = F::from_rational(coeff);
        for (std::size_t t = 0; t < cls.size(); ++t) {
          if (!cls[t].is_zero()) row[offset[i + 1] + t] = row[offset[i + 1] + t] + c * cls[t];
        }
      }
      rows.push_back(std::move(row));
    }

    auto piv = rref(rows, width);
    std::vector<long> pivot_row(width, -1);
    for (std::size_t r = 0; r < piv.size(); ++r) pivot_row[piv[r]] = static_cast<long>(r);
    std::vector<long> basis_index(width, -1);
    std::size_t d = 0;
    for (std::size_t c = 0; c < width; ++c) {
      if (pivot_row[c] < 0) basis_index[c] = static_cast<long>(d++);
    }
    dims_.push_back(static_cast<std::int64_t>(d));

    std::vector<std::vector<std::vector<F>>> maps(k_);
    for (std::size_t i = 1; i <= k_; ++i) {
      std::size_t src = dim(w - static_cast<long>(i));
      maps[i - 1].resize(src);
      for (std::size_t b = 0; b < src; ++b) {
        std::vector<F> img(d);
        std::size_t c = offset[i] + b;
        if (pivot_row[c] < 0) {
          img[static_cast<std::size_t>(basis_index[c])] = F(1);
        } else {
          const auto& row = rows[static_cast<std::size_t>(pivot_row[c])];
          for (std::size_t t = 0; t < width; ++t) {
            if (basis_index[t] >= 0 && !row[t].is_zero()) img[static_cast<std::size_t>(basis_index[t])] = -row[t];
          }
        }
        maps[i - 1][b] = std::move(img);
      }
    }
    mu_.push_back(std::move(maps));
  }

  const Presentation& pres_;
  std::size_t k_;
  std::vector<std::int64_t> dims_;
  // mu_[w][i-1][b]: coordinates in A_w of x_i times basis vector b of A_{w-i}.
  std::vector<std::vector<std::vector<std::vector<F>>>> mu_;
  std::map<Exponents, std::vector<F>, LexGreater> classes_;
};

long certificate_top(const Presentation& pres) {
  long top = static_cast<long>(pres.k) * (pres.n - pres.k);
  long max_rel = 0;
  for (int j = 1; j <= pres.k; ++j) max_rel = std::max(max_rel, pres.relation_weight(j));
  return top + max_rel;
}

}  // namespace

std::vector<std::int64_t> quotient_dims_rational(const Presentation& pres, long top) {
  return QuotientRecursion<QField>(pres).run(top);
}

std::vector<std::int64_t> quotient_dims_modular(const Presentation& pres, long top) {
  return QuotientRecursion<ModP>(pres).run(top);
}

std::vector<std::int64_t> quotient_dims_by_slices(const Presentation& pres, long top) {
  std::vector<std::int64_t> out;
  GradedIdeal ideal(pres);
  for (long w = 0; w <= top; ++w) out.push_back(static_cast<std::int64_t>(SliceBasis::build(ideal, w).quotient_dim()));
  return out;
}

HilbertCertificate hilbert_certificate(const Presentation& pres) {
  validate_nk(pres.n, pres.k);
  HilbertCertificate cert;
  const long top = certificate_top(pres);
  for (long w = 0; w <= top; ++w) cert.expected_dims.push_back(quotient_hilbert_dim(pres.n, pres.k, w));
  // Reduction mod p can only raise quotient dimensions. If they already match
  // the partition counts they vanish past k(n-k), so the rational quotient is
  // finite dimensional, the relations form a regular sequence, and the
  // rational dimensions are the same partition counts.
  cert.quotient_dims = quotient_dims_modular(pres, top);
  cert.method = "modular";
  if (cert.quotient_dims != cert.expected_dims) {
    cert.quotient_dims = quotient_dims_rational(pres, top);
    cert.method = "rational";
  }
  cert.holds = cert.quotient_dims == cert.expected_dims;
  return cert;
}

bool regular_sequence_certificate(const Presentation& pres) { return hilbert_certificate(pres).holds; }

}  // namespace grasscoh
