#pragma once

// Rational zeros of g(c1, c2) = sum_{r+2s=n-1} (-1)^{r+s} C(r+s, s) c1^r c2^s,
// which is +-R_1 of I_{n,2}; its zeros are the homomorphisms
// H*(G_{n,2}) -> H*(G_{n,1}) with x1 -> u y, x2 -> v y^2.

#include <string>
#include <utility>
#include <vector>

#include "grasscoh/polynomial.hpp"

namespace grasscoh {

/// With u ranging over Q \ {0}:
///   A = {(0, u)}, B = {(+-2u, 2u^2)}, C = {(+-3u, 3u^2)}, D = {(+-u, u^2)}.
enum class GFamily { A, B, C, D };

std::string to_string(GFamily f);
/// e.g. "A = {(0, u) : u != 0}".
std::string family_description(GFamily f);
bool in_family(GFamily f, const Rational& u, const Rational& v);

/// Two variables c1 (weight 1) and c2 (weight 2). Requires n >= 2.
Polynomial g_poly(int n);

/// Families whose union is the nonzero rational zero set, by n mod 12.
std::vector<GFamily> classify_g_rational(int n);

using RationalPair = std::pair<Rational, Rational>;

/// All rationals of height at most H, ascending.
std::vector<Rational> rationals_of_height(long H);

/// Every (u, v) != (0, 0) with height(u), height(v) <= H and g(u, v) = 0,
/// ordered by u then v. A modular prefilter discards most pairs; survivors
/// are confirmed exactly.
std::vector<RationalPair> brute_force_g(int n, long H);

/// Expands both sides of
///   sum_s (-1)^s C(n-1-s, s) (c1+c2)^{n-1-2s} (c1 c2)^s = sum_i c1^i c2^{n-1-i}.
bool sury_identity_check(int n);

}  // namespace grasscoh
