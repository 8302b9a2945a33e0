#include "grasscoh/gclassify.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>

namespace grasscoh {

std::string to_string(GFamily f) {
  switch (f) {
    case GFamily::A: return "A";
    case GFamily::B: return "B";
    case GFamily::C: return "C";
    case GFamily::D: return "D";
  }
  return "A";
}

std::string family_description(GFamily f) {
  switch (f) {
    case GFamily::A: return "A = {(0, u) : u != 0}";
    case GFamily::B: return "B = {(+-2u, 2u^2) : u != 0}";
    case GFamily::C: return "C = {(+-3u, 3u^2) : u != 0}";
    case GFamily::D: return "D = {(+-u, u^2) : u != 0}";
  }
  return "";
}

bool in_family(GFamily f, const Rational& u, const Rational& v) {
  if (f == GFamily::A) return u == 0 && v != 0;
  if (u == 0) return false;
  Rational sq = u * u;
  switch (f) {
    case GFamily::B: return v * 2 == sq;
    case GFamily::C: return v * 3 == sq;
    case GFamily::D: return v == sq;
    default: return false;
  }
}

Polynomial g_poly(int n) {
  if (n < 2) throw InvalidArgument("g_poly: need n >= 2");
  Polynomial g(2);
  for (int s = 0; 2 * s <= n - 1; ++s) {
    int r = n - 1 - 2 * s;
    BigInt c = binomial(r + s, s);
    if ((r + s) % 2 != 0) c = -c;
    g.add_term(Exponents{r, s}, Rational(c));
  }
  return g;
}

std::vector<GFamily> classify_g_rational(int n) {
  if (n < 2) throw InvalidArgument("classify_g_rational: need n >= 2");
  switch (n % 12) {
    case 2:
    case 10: return {GFamily::A};
    case 3:
    case 9: return {GFamily::D};
    case 4:
    case 8: return {GFamily::A, GFamily::B};
    case 6: return {GFamily::A, GFamily::C, GFamily::D};
    case 0: return {GFamily::A, GFamily::B, GFamily::C, GFamily::D};
    default: return {};
  }
}

std::vector<Rational> rationals_of_height(long H) {
  if (H < 1) throw InvalidArgument("rationals_of_height: need H >= 1");
  std::vector<Rational> out{Rational(0)};
  for (long q = 1; q <= H; ++q) {
    for (long p = 1; p <= H; ++p) {
      if (std::gcd(p, q) != 1) continue;
      out.push_back(make_rational(p, q));
      out.push_back(make_rational(-p, q));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

constexpr std::uint64_t kPrime = (std::uint64_t{1} << 61) - 1;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) {
  unsigned __int128 t = static_cast<unsigned __int128>(a) * b;
  std::uint64_t s = static_cast<std::uint64_t>(t & kPrime) + static_cast<std::uint64_t>(t >> 61);
  return s >= kPrime ? s - kPrime : s;
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e > 0) {
    if (e & 1U) r = mulmod(r, a);
    a = mulmod(a, a);
    e >>= 1U;
  }
  return r;
}

// Heights here are far below the prime, so no denominator vanishes.
std::uint64_t reduce(const Rational& q) {
  std::uint64_t num = mpz_fdiv_ui(q.get_num_mpz_t(), kPrime);
  std::uint64_t den = mpz_fdiv_ui(q.get_den_mpz_t(), kPrime);
  return mulmod(num, powmod(den, kPrime - 2));
}

}  // namespace

std::vector<RationalPair> brute_force_g(int n, long H) {
  const Polynomial g = g_poly(n);
  std::vector<std::pair<std::uint64_t, Exponents>> terms;
  for (const auto& [e, c] : g.terms()) terms.emplace_back(reduce(c), e);
  const auto values = rationals_of_height(H);
  std::vector<std::uint64_t> residues;
  for (const auto& r : values) residues.push_back(reduce(r));
  // powers[i][d] = residues[i]^d
  const int top = n;
  std::vector<std::vector<std::uint64_t>> powers(values.size(), std::vector<std::uint64_t>(static_cast<std::size_t>(top) + 1));
  for (std::size_t i = 0; i < values.size(); ++i) {
    powers[i][0] = 1;
    for (int d = 1; d <= top; ++d) powers[i][static_cast<std::size_t>(d)] = mulmod(powers[i][static_cast<std::size_t>(d - 1)], residues[i]);
  }
  std::vector<RationalPair> out;
  for (std::size_t iu = 0; iu < values.size(); ++iu) {
    for (std::size_t iv = 0; iv < values.size(); ++iv) {
      if (values[iu] == 0 && values[iv] == 0) continue;
      std::uint64_t acc = 0;
      for (const auto& [c, e] : terms) {
        std::uint64_t t = mulmod(c, mulmod(powers[iu][static_cast<std::size_t>(e[0])], powers[iv][static_cast<std::size_t>(e[1])]));
        acc += t;
        if (acc >= kPrime) acc -= kPrime;
      }
      if (acc != 0) continue;
      std::vector<Rational> point{values[iu], values[iv]};
      if (g.evaluate(point) == 0) out.emplace_back(values[iu], values[iv]);
    }
  }
  return out;
}

bool sury_identity_check(int n) {
  if (n < 2) throw InvalidArgument("sury_identity_check: need n >= 2");
  const Polynomial c1 = Polynomial::variable(2, 0);
  const Polynomial c2 = Polynomial::variable(2, 1);
  const Polynomial sum = c1 + c2;
  const Polynomial prod = c1 * c2;
  Polynomial lhs(2);
  for (int s = 0; 2 * s <= n - 1; ++s) {
    Polynomial t = sum.pow(static_cast<unsigned>(n - 1 - 2 * s)) * prod.pow(static_cast<unsigned>(s));
    BigInt c = binomial(n - 1 - s, s);
    if (s % 2 != 0) c = -c;
    lhs += t * Rational(c);
  }
  Polynomial rhs(2);
  for (int i = 0; i <= n - 1; ++i) rhs.add_term(Exponents{i, n - 1 - i}, 1);
  return lhs == rhs;
}

}  // namespace grasscoh
