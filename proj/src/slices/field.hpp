#pragma once

// Scalar fields for dense elimination: GF(2^61 - 1) and Q.

#include <cstdint>
#include <vector>

#include "grasscoh/exactmath.hpp"

namespace grasscoh::detail {

struct ModP {
  static constexpr std::uint64_t P = (std::uint64_t{1} << 61) - 1;
  std::uint64_t v = 0;

  ModP() = default;
  explicit ModP(std::uint64_t x) : v(x % P) {}
  static ModP from_rational(const Rational& q) {
    auto reduce = [](const BigInt& z) {
      ModP r;
      r.v = mpz_fdiv_ui(z.get_mpz_t(), P);
      return r;
    };
    ModP num = reduce(q.get_num());
    ModP den = reduce(q.get_den());
    if (den.v == 0) throw InvalidArgument("rational denominator vanishes modulo the working prime");
    return num * den.inverse();
  }
  friend ModP operator+(ModP a, ModP b) {
    std::uint64_t s = a.v + b.v;
    if (s >= P) s -= P;
    ModP r;
    r.v = s;
    return r;
  }
  friend ModP operator-(ModP a, ModP b) {
    ModP r;
    r.v = a.v >= b.v ? a.v - b.v : a.v + P - b.v;
    return r;
  }
  friend ModP operator*(ModP a, ModP b) {
    unsigned __int128 t = static_cast<unsigned __int128>(a.v) * b.v;
    std::uint64_t lo = static_cast<std::uint64_t>(t & P);
    std::uint64_t hi = static_cast<std::uint64_t>(t >> 61);
    std::uint64_t s = lo + hi;
    if (s >= P) s -= P;
    ModP r;
    r.v = s;
    return r;
  }
  ModP operator-() const { return ModP() - *this; }
  ModP& operator-=(ModP o) { return *this = *this - o; }
  bool is_zero() const { return v == 0; }
  ModP inverse() const {
    ModP base = *this, result(1);
    std::uint64_t e = P - 2;
    while (e > 0) {
      if (e & 1U) result = result * base;
      base = base * base;
      e >>= 1U;
    }
    return result;
  }
};

struct QField {
  Rational v;
  QField() = default;
  explicit QField(long x) : v(x) {}
  explicit QField(Rational x) : v(std::move(x)) {}
  static QField from_rational(const Rational& q) { return QField(q); }
  friend QField operator+(const QField& a, const QField& b) { return QField(Rational(a.v + b.v)); }
  friend QField operator-(const QField& a, const QField& b) { return QField(Rational(a.v - b.v)); }
  friend QField operator*(const QField& a, const QField& b) { return QField(Rational(a.v * b.v)); }
  QField operator-() const { return QField(Rational(-v)); }
  QField& operator-=(const QField& o) {
    v -= o.v;
    return *this;
  }
  bool is_zero() const { return v == 0; }
  QField inverse() const { return QField(Rational(1 / v)); }
};

template <class F>
using Mat = std::vector<std::vector<F>>;

// In-place reduced echelon form; returns pivot columns, rows beyond rank dropped.
template <class F>
std::vector<std::size_t> rref(Mat<F>& m, std::size_t width) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < width && r < m.size(); ++c) {
    std::size_t found = r;
    while (found < m.size() && m[found][c].is_zero()) ++found;
    if (found == m.size()) continue;
    std::swap(m[r], m[found]);
    F inv = m[r][c].inverse();
    for (std::size_t j = c; j < width; ++j) {
      if (!m[r][j].is_zero()) m[r][j] = m[r][j] * inv;
    }
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c].is_zero()) continue;
      F f = m[i][c];
      for (std::size_t j = c; j < width; ++j) {
        if (!m[r][j].is_zero()) m[i][j] -= f * m[r][j];
      }
    }
    pivots.push_back(c);
    ++r;
  }
  m.resize(r);
  return pivots;
}

}  // namespace grasscoh::detail
