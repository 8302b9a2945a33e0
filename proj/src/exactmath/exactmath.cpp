#include "grasscoh/exactmath.hpp"

#include <algorithm>
#include <numeric>

namespace grasscoh {

Rational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw InvalidArgument("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(BigInt(s));
    return make_rational(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
  } catch (const std::invalid_argument&) {
    throw InvalidArgument("malformed rational '" + s + "'");
  }
}

BigInt height(const Rational& r) {
  BigInt num = abs(r.get_num());
  return num > r.get_den() ? num : BigInt(r.get_den());
}

bool is_square(const BigInt& v) {
  if (v < 0) return false;
  return mpz_perfect_square_p(v.get_mpz_t()) != 0;
}

bool is_rational_square(const Rational& r) {
  return is_square(r.get_num()) && is_square(r.get_den());
}

BigInt factorial(unsigned long n) {
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

BigInt binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

long weight(std::span<const int> e) {
  long w = 0;
  for (std::size_t i = 0; i < e.size(); ++i) w += static_cast<long>(i + 1) * e[i];
  return w;
}

long total_degree(std::span<const int> e) {
  return std::accumulate(e.begin(), e.end(), 0L);
}

BigInt multinomial(std::span<const int> e) {
  BigInt out = factorial(static_cast<unsigned long>(total_degree(e)));
  for (int v : e) out /= factorial(static_cast<unsigned long>(v));
  return out;
}

std::optional<Representation> represent(long N, long p, long m0, long n0) {
  if (p < 2) throw InvalidArgument("represent: p must be at least 2");
  if (N < 0 || m0 < 0 || n0 < 0) throw InvalidArgument("represent: negative argument");
  // p - 1 = -1 mod p, so m(p-1) + np = N forces m = -N (mod p).
  long residue = ((-N) % p + p) % p;
  long m = m0 + ((residue - m0 % p) % p + p) % p;
  long rest = N - m * (p - 1);
  if (rest < n0 * p) return std::nullopt;
  return Representation{m, rest / p};
}

long represent_bound(long p, long m0, long n0) { return p * (p - 1) + n0 * p + m0 * (p - 1); }

Rational evaluate_univariate(std::span<const Rational> coeffs, const Rational& x) {
  Rational acc = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
  return acc;
}

namespace {

BigInt pollard_brent(const BigInt& n) {
  if (n % 2 == 0) return 2;
  for (unsigned long c = 1;; ++c) {
    BigInt y = 2, x, g = 1, q = 1, ys;
    unsigned long r = 1;
    const unsigned long m = 64;
    auto f = [&](const BigInt& v) { return BigInt((v * v + c) % n); };
    do {
      x = y;
      for (unsigned long i = 0; i < r; ++i) y = f(y);
      unsigned long k = 0;
      while (k < r && g == 1) {
        ys = y;
        for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
          y = f(y);
          q = (q * abs(BigInt(x - y))) % n;
        }
        mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        k += m;
      }
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        ys = f(ys);
        BigInt d = abs(BigInt(x - ys));
        mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void factor_into(BigInt n, std::vector<BigInt>& out) {
  for (unsigned long p : {2UL, 3UL, 5UL, 7UL, 11UL, 13UL, 17UL, 19UL, 23UL, 29UL, 31UL, 37UL}) {
    while (n % p == 0) {
      out.emplace_back(p);
      n /= p;
    }
  }
  if (n == 1) return;
  if (mpz_probab_prime_p(n.get_mpz_t(), 30) != 0) {
    out.push_back(n);
    return;
  }
  BigInt d = pollard_brent(n);
  factor_into(d, out);
  factor_into(BigInt(n / d), out);
}

}  // namespace

std::vector<BigInt> factor(const BigInt& v) {
  if (v == 0) throw InvalidArgument("factor: zero has no factorisation");
  std::vector<BigInt> out;
  factor_into(abs(v), out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<BigInt> divisors(const BigInt& v) {
  std::vector<BigInt> out{1};
  auto primes = factor(v);
  for (std::size_t i = 0; i < primes.size();) {
    std::size_t j = i;
    while (j < primes.size() && primes[j] == primes[i]) ++j;
    std::size_t base = out.size();
    BigInt power = 1;
    for (std::size_t e = i; e < j; ++e) {
      power *= primes[i];
      for (std::size_t t = 0; t < base; ++t) out.push_back(out[t] * power);
    }
    i = j;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Rational> rational_roots(std::span<const Rational> coeffs) {
  std::vector<Rational> c(coeffs.begin(), coeffs.end());
  while (!c.empty() && c.back() == 0) c.pop_back();
  if (c.empty()) throw InvalidArgument("rational_roots: zero polynomial has no finite root set");

  std::vector<Rational> roots;
  std::size_t low = 0;
  while (c[low] == 0) ++low;
  if (low > 0) roots.emplace_back(0);
  c.erase(c.begin(), c.begin() + static_cast<long>(low));
  if (c.size() == 1) return roots;

  // Clear denominators so the rational-root theorem applies.
  BigInt lcm = 1;
  for (const auto& v : c) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), v.get_den().get_mpz_t());
  std::vector<BigInt> z;
  z.reserve(c.size());
  for (const auto& v : c) z.emplace_back(v.get_num() * (lcm / v.get_den()));

  std::vector<Rational> zq(z.begin(), z.end());
  for (const auto& p : divisors(z.front())) {
    for (const auto& q : divisors(z.back())) {
      BigInt g;
      mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
      if (g != 1) continue;
      for (int sign : {1, -1}) {
        Rational cand = make_rational(sign * p, q);
        if (evaluate_univariate(zq, cand) == 0) roots.push_back(cand);
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

bool quadratic_irreducible(const Rational& a, const Rational& b, const Rational& c) {
  if (a == 0) throw InvalidArgument("quadratic_irreducible: leading coefficient is zero");
  Rational disc = b * b - 4 * a * c;
  return !is_rational_square(disc);
}

std::int64_t quotient_hilbert_dim(int n, int k, long w) {
  if (k < 1 || k > n) throw InvalidArgument("quotient_hilbert_dim: need 1 <= k <= n");
  if (w < 0) throw InvalidArgument("quotient_hilbert_dim: negative weight");
  const long cols = n - k;
  if (w > static_cast<long>(k) * cols) return 0;
  // table[p][s]: partitions of s into at most p parts with each part <= cols.
  // Built one allowed part size at a time.
  std::vector<std::vector<std::int64_t>> ways(k + 1, std::vector<std::int64_t>(w + 1, 0));
  ways[0][0] = 1;
  for (long part = 1; part <= cols; ++part) {
    for (int p = 1; p <= k; ++p) {
      for (long s = part; s <= w; ++s) ways[p][s] += ways[p - 1][s - part];
    }
  }
  std::int64_t total = 0;
  for (int p = 0; p <= k; ++p) total += ways[p][w];
  return total;
}

}  // namespace grasscoh
