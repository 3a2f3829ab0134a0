#include "gl3/arith.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "gl3/reduction.hpp"

namespace gl3 {

Factorization factorize(long long n) {
  if (n < 1) throw std::invalid_argument("factorize: n must be >= 1");
  Factorization f;
  f.n = n;
  long long m = n;
  auto strip = [&](long long p) {
    int e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    if (e > 0) f.factors.emplace_back(p, e);
  };
  strip(2);
  strip(3);
  // 6k +/- 1 wheel
  for (long long p = 5; p <= m / p; p += 6) {
    strip(p);
    strip(p + 2);
  }
  if (m > 1) f.factors.emplace_back(m, 1);
  return f;
}

int mobius(long long n) {
  Factorization f = factorize(n);
  for (const auto& [p, e] : f.factors)
    if (e > 1) return 0;
  return (f.factors.size() % 2 == 0) ? 1 : -1;
}

long long euler_phi(long long n) {
  long long phi = n;
  for (const auto& [p, e] : factorize(n).factors) phi -= phi / p;
  return phi;
}

long long mod_inverse(long long H, long long K) {
  if (K < 1) throw std::invalid_argument("mod_inverse: K must be >= 1");
  long long a = H % K;
  if (a < 0) a += K;
  if (K == 1) return 1;
  // extended Euclid on (a, K)
  long long r0 = K, r1 = a, t0 = 0, t1 = 1;
  while (r1 != 0) {
    long long q = r0 / r1;
    long long r2 = r0 - q * r1;
    long long t2 = t0 - q * t1;
    r0 = r1;
    r1 = r2;
    t0 = t1;
    t1 = t2;
  }
  if (r0 != 1) throw std::invalid_argument("mod_inverse: gcd(H,K) != 1");
  long long inv = t0 % K;
  if (inv <= 0) inv += K;
  return inv;
}

std::vector<long long> divisors(long long n) {
  std::vector<long long> d{1};
  for (const auto& [p, e] : factorize(n).factors) {
    const std::size_t len = d.size();
    long long pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < len; ++i) d.push_back(d[i] * pk);
    }
  }
  std::sort(d.begin(), d.end());
  return d;
}

UnitRoots::UnitRoots(long long K) : K_(K) {
  if (K < 1) throw std::invalid_argument("UnitRoots: K must be >= 1");
  table_.resize(static_cast<std::size_t>(K));
  for (long long k = 0; k < K; ++k) {
    double arg = kTwoPi * static_cast<double>(k) / static_cast<double>(K);
    table_[static_cast<std::size_t>(k)] = {std::cos(arg), std::sin(arg)};
  }
}

cdouble divisor_tau_prime_power(std::span<const cdouble> shifts, long long p,
                                int e) {
  // dp over compositions: after shift i, dp[j] = sum over e_1+..+e_i = j of
  // p^{-A_1 e_1 - ... - A_i e_i}.
  const double lp = std::log(static_cast<double>(p));
  std::vector<cdouble> dp(static_cast<std::size_t>(e) + 1, cdouble(0.0));
  dp[0] = 1.0;
  for (const cdouble& a : shifts) {
    // w = p^{-a}
    const cdouble w = std::exp(-a * lp);
    std::vector<cdouble> next(dp.size(), cdouble(0.0));
    for (std::size_t j = 0; j < dp.size(); ++j) {
      cdouble wk = 1.0;
      for (std::size_t k = 0; j + k < dp.size(); ++k) {
        next[j + k] += dp[j] * wk;
        wk *= w;
      }
    }
    dp.swap(next);
  }
  return dp[static_cast<std::size_t>(e)];
}

cdouble divisor_tau(std::span<const cdouble> shifts, long long n) {
  if (n < 1) throw std::invalid_argument("divisor_tau: n must be >= 1");
  cdouble out = 1.0;
  for (const auto& [p, e] : factorize(n).factors)
    out *= divisor_tau_prime_power(shifts, p, e);
  return out;
}

cdouble divisor_tau(const ShiftTriple& shifts, long long n) {
  const std::array<cdouble, 3> a{shifts.alpha, shifts.beta, shifts.gamma};
  return divisor_tau(std::span<const cdouble>(a.data(), a.size()), n);
}

std::vector<double> tau3_sieve(long long N) {
  // tau3 = 1 * 1 * 1 by two divisor-sum passes
  std::vector<double> d2(static_cast<std::size_t>(N) + 1, 0.0);
  for (long long a = 1; a <= N; ++a)
    for (long long b = a; b <= N; b += a) d2[static_cast<std::size_t>(b)] += 1.0;
  std::vector<double> d3(static_cast<std::size_t>(N) + 1, 0.0);
  for (long long a = 1; a <= N; ++a) {
    const double w = d2[static_cast<std::size_t>(a)];
    for (long long b = a; b <= N; b += a) d3[static_cast<std::size_t>(b)] += w;
  }
  return d3;
}

double ramanujan_closed(long long K, long long n) {
  if (K < 1 || n < 1)
    throw std::invalid_argument("ramanujan_closed: K,n must be >= 1");
  const long long g = std::gcd(n % K == 0 ? K : n % K, K);
  const long long q = K / g;
  return static_cast<double>(mobius(q)) * static_cast<double>(euler_phi(K)) /
         static_cast<double>(euler_phi(q));
}

cdouble ramanujan_direct(long long K, long long n) {
  const UnitRoots e(K);
  CNeumaier acc;
  for (long long a = 1; a <= K; ++a)
    if (std::gcd(a, K) == 1) acc.add(e(a * (n % K)));
  return acc.result();
}

cdouble kloosterman(long long a, long long b, long long c) {
  if (c < 1) throw std::invalid_argument("kloosterman: c must be >= 1");
  const UnitRoots e(c);
  long long ar = a % c, br = b % c;
  if (ar < 0) ar += c;
  if (br < 0) br += c;
  CNeumaier acc;
  for (long long x = 1; x <= c; ++x) {
    if (std::gcd(x, c) != 1) continue;
    const long long xbar = mod_inverse(x, c);
    acc.add(e(ar * x % c + br * xbar % c));
  }
  return acc.result();
}

IdentityPair selberg_identity(long long a, long long b, long long q) {
  if (q < 1) throw std::invalid_argument("selberg_identity: q must be >= 1");
  IdentityPair out;
  out.lhs = kloosterman(a, b, q);
  long long g0 = std::gcd(std::llabs(a), std::llabs(b));
  g0 = std::gcd(g0, q);  // gcd(0, q) = q, so a=b=0 works out
  CNeumaier acc;
  for (long long g : divisors(g0)) {
    const long long ab = (a / g) * (b / g);
    acc.add(static_cast<double>(g) * kloosterman(1, ab, q / g));
  }
  out.rhs = acc.result();
  return out;
}

IdentityPair tau_multiplicativity(cdouble beta, cdouble gamma, long long r,
                                  long long g) {
  const std::array<cdouble, 2> shifts{-beta, -gamma};
  const std::span<const cdouble> A(shifts.data(), shifts.size());
  IdentityPair out;
  out.lhs = divisor_tau(A, r * g);
  cdouble rhs = 0.0;
  for (long long h : divisors(std::gcd(r, g))) {
    const double lh = std::log(static_cast<double>(h));
    rhs += static_cast<double>(mobius(h)) * std::exp((beta + gamma) * lh) *
           divisor_tau(A, r / h) * divisor_tau(A, g / h);
  }
  out.rhs = rhs;
  return out;
}

cdouble triple_exp_sum_direct(long long H, long long K, long long l,
                              long long m, long long n,
                              const std::array<int, 3>& eps) {
  if (K < 1) throw std::invalid_argument("triple_exp_sum: K must be >= 1");
  if (std::gcd(((H % K) + K) % K == 0 ? K : ((H % K) + K) % K, K) != 1)
    throw std::invalid_argument("triple_exp_sum: gcd(H,K) != 1");
  if (l < 1 || m < 1 || n < 1)
    throw std::invalid_argument("triple_exp_sum: l,m,n must be >= 1");
  const UnitRoots e(K);
  auto red = [K](long long v) {
    long long r = v % K;
    return r < 0 ? r + K : r;
  };
  const long long Hr = red(H);
  const long long le = red(eps[0] * l), me = red(eps[1] * m),
                  ne = red(eps[2] * n);
  // Flattened (L,M) loop; the N-sum steps the phase index additively.
  const std::size_t total = static_cast<std::size_t>(K) * static_cast<std::size_t>(K);
  return block_sum(total, [&](std::size_t i) {
    const long long L = static_cast<long long>(i) / K + 1;
    const long long M = static_cast<long long>(i) % K + 1;
    const long long base = red(Hr * red(L * M));      // coefficient of N
    const long long fixed = red(le * L + me * M);     // L,M phase
    CNeumaier acc;
    long long idx = fixed;
    for (long long N = 1; N <= K; ++N) {
      idx += base + ne;
      if (idx >= K) idx %= K;
      acc.add(e(idx));
    }
    return acc.result();
  });
}

cdouble triple_exp_sum_closed(long long H, long long K, long long l,
                              long long m, long long n,
                              const std::array<int, 3>& eps) {
  if (K < 1) throw std::invalid_argument("triple_exp_sum: K must be >= 1");
  const long long Hbar = mod_inverse(H, K);
  const int sign = eps[0] * eps[1] * eps[2];
  long long gmn = std::gcd(std::gcd(K, m), n);
  cdouble out = 0.0;
  for (long long delta : divisors(gmn)) {
    const long long q = K / delta;
    const long long arg = -sign * ((Hbar % q) * ((m / delta) % q) % q) *
                          ((n / delta) % q);
    out += static_cast<double>(delta) * kloosterman(l, arg, q);
  }
  return static_cast<double>(K) * out;
}

}  // namespace gl3
