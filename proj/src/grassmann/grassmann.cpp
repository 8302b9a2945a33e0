#include "grasscoh/grassmann.hpp"

#include <algorithm>

#include "grasscoh/slices.hpp"

namespace grasscoh {

void validate_nk(int n, int k) {
  if (k < 1 || k > n) {
    throw InvalidArgument("need 1 <= k <= n (got n=" + std::to_string(n) + ", k=" + std::to_string(k) + ")");
  }
}

std::vector<Polynomial> relations_multinomial(int n, int k) {
  validate_nk(n, k);
  const auto nv = static_cast<std::size_t>(k);
  std::vector<Polynomial> out;
  for (int j = 1; j <= k; ++j) {
    Polynomial r(nv);
    for (const auto& e : monomials_of_weight(nv, n - k + j)) {
      BigInt c = multinomial(e);
      if (total_degree(e) % 2 != 0) c = -c;
      r.add_term(e, Rational(c));
    }
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<Polynomial> inverse_total_class(int k, int top) {
  if (k < 1) throw InvalidArgument("inverse_total_class: need k >= 1");
  const auto nv = static_cast<std::size_t>(k);
  std::vector<Polynomial> inv;
  inv.push_back(Polynomial::constant(nv, 1));
  for (int j = 1; j <= top; ++j) {
    Polynomial acc(nv);
    for (int i = 1; i <= std::min(j, k); ++i) {
      acc -= Polynomial::variable(nv, static_cast<std::size_t>(i - 1)) * inv[static_cast<std::size_t>(j - i)];
    }
    inv.push_back(std::move(acc));
  }
  return inv;
}

std::vector<Polynomial> relations_inverse(int n, int k) {
  validate_nk(n, k);
  auto inv = inverse_total_class(k, n);
  return {inv.begin() + (n - k + 1), inv.end()};
}

Presentation presentation(int n, int k) { return Presentation{n, k, relations_inverse(n, k)}; }

namespace {

RingMap certify(RingMap map) {
  for (std::size_t j = 0; j < map.source.relations.size(); ++j) {
    Polynomial img = map.source.relations[j].substitute(map.images);
    if (!is_member(map.target, img)) {
      throw InternalConsistencyError("image of R_" + std::to_string(j + 1) + " of I_{" +
                                     std::to_string(map.source.n) + "," + std::to_string(map.source.k) +
                                     "} is not in the target ideal");
    }
  }
  return map;
}

}  // namespace

RingMap restriction_i(int n, int k) {
  validate_nk(n, k);
  RingMap map{presentation(n + 1, k), presentation(n, k), {}};
  for (int r = 0; r < k; ++r) map.images.push_back(Polynomial::variable(static_cast<std::size_t>(k), static_cast<std::size_t>(r)));
  return certify(std::move(map));
}

RingMap restriction_j(int n, int k) {
  validate_nk(n, k);
  RingMap map{presentation(n + 1, k + 1), presentation(n, k), {}};
  const auto nv = static_cast<std::size_t>(k);
  for (int r = 0; r < k; ++r) map.images.push_back(Polynomial::variable(nv, static_cast<std::size_t>(r)));
  map.images.emplace_back(nv);
  return certify(std::move(map));
}

}  // namespace grasscoh
