#include "gl3/estermann.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <numeric>

#include "gl3/arith.hpp"
#include "gl3/reduction.hpp"
#include "gl3/special.hpp"

namespace gl3 {

namespace {

cdouble cpow(double base, cdouble expo) {
  return std::exp(expo * std::log(base));
}

// Bernoulli B_2..B_12 over (2k)! for the elementary tails.
constexpr std::array<double, 6> kBernOverFact = {
    1.0 / 6.0 / 2.0,        -1.0 / 30.0 / 24.0,      1.0 / 42.0 / 720.0,
    -1.0 / 30.0 / 40320.0,  5.0 / 66.0 / 3628800.0,  -691.0 / 2730.0 / 479001600.0,
};

}  // namespace

cdouble ap_zeta_convergent(cdouble w, long long u, long long K) {
  if (K < 1 || u < 1 || u > K)
    throw std::invalid_argument("ap_zeta_convergent: need 1 <= u <= K");
  if (w.real() <= 1.0)
    throw std::invalid_argument("ap_zeta_convergent: need Re w > 1");
  const double x_tail = 240.0 + 8.0 * std::abs(w.imag());
  const long long J = static_cast<long long>(
      std::ceil((x_tail - static_cast<double>(u)) / static_cast<double>(K))) + 1;
  CNeumaier head;
  for (long long j = 0; j < J; ++j)
    head.add(std::exp(-w * std::log(static_cast<double>(u + j * K))));
  const double x0 = static_cast<double>(u + J * K);
  const double lx = std::log(x0);
  cdouble tail = std::exp((1.0 - w) * lx) / (static_cast<double>(K) * (w - 1.0));
  const cdouble fJ = std::exp(-w * lx);
  tail += 0.5 * fJ;
  cdouble rising = w;                 // (w)_1
  cdouble power = fJ * x0;            // x0^{-w+1}
  const double kk = static_cast<double>(K);
  double kpow = kk;                   // K^{2k-1}
  const double inv2 = 1.0 / (x0 * x0);
  for (std::size_t k = 0; k < kBernOverFact.size(); ++k) {
    power *= inv2;
    tail += kBernOverFact[k] * kpow * rising * power;
    const double j2 = 2.0 * static_cast<double>(k);
    rising *= (w + (j2 + 1.0)) * (w + (j2 + 2.0));
    kpow *= kk * kk;
  }
  return head.result() + tail;
}

cdouble twisted_zeta_convergent(cdouble w, long long j, long long K) {
  if (K < 2 || j < 1 || j >= K)
    throw std::invalid_argument("twisted_zeta_convergent: need 0 < j < K");
  if (w.real() <= 0.0)
    throw std::invalid_argument("twisted_zeta_convergent: need Re w > 0");
  const UnitRoots e(K);
  const long long M = std::max<long long>(
      256, std::max(30 * K, static_cast<long long>(24.0 * std::abs(w.imag()))));
  CNeumaier head;
  for (long long n = 1; n < M; ++n)
    head.add(e(j * (n % K)) * std::exp(-w * std::log(static_cast<double>(n))));
  // Iterated Abel summation of the tail sum_{n >= M} z^n n^{-w}:
  //   S(M, a) = z^M a_M / (1-z) - S(M+1, Delta a) / (1-z),
  // (Delta a)_{c} = a_{c-1} - a_c. Each level gains one order of decay.
  constexpr int W = 48;
  std::array<cdouble, W> a;
  for (int i = 0; i < W; ++i)
    a[static_cast<std::size_t>(i)] =
        std::exp(-w * std::log(static_cast<double>(M + i)));
  const cdouble inv = 1.0 / (1.0 - e(j));
  const double head_scale = std::abs(head.result()) + 1.0;
  cdouble tail = 0.0;
  cdouble coef = inv;
  int quiet = 0;
  for (int level = 0; level < W - 1; ++level) {
    const cdouble term = coef * e(j * ((M + level) % K)) * a[0];
    tail += term;
    if (std::abs(term) < 1e-17 * (head_scale + std::abs(tail))) {
      if (++quiet >= 2) break;
    } else {
      quiet = 0;
    }
    if (level == W - 2)
      throw convergence_error("twisted_zeta_convergent: Abel tail stalled");
    for (int i = 0; i + level + 1 < W; ++i) a[static_cast<std::size_t>(i)] =
        a[static_cast<std::size_t>(i)] - a[static_cast<std::size_t>(i + 1)];
    coef *= -inv;
  }
  return head.result() + tail;
}

cdouble estermann_direct(cdouble s, const AdditiveTwist& twist,
                         const ShiftTriple& shifts, double /*tol*/) {
  if (s.real() < 1.25)
    throw std::invalid_argument("estermann_direct: need Re s >= 1.25");
  const std::array<cdouble, 3> w = {s + shifts.alpha, s + shifts.beta,
                                    s + shifts.gamma};
  for (const cdouble& wi : w)
    if (wi.real() <= 1.02)
      throw std::invalid_argument(
          "estermann_direct: need Re(s + shift) > 1.02 for every shift");
  const long long K = twist.K, H = twist.H;
  // Product-order evaluation of sum_{a,b,c} a^{-w1} b^{-w2} c^{-w3} e(abcH/K):
  // the innermost sum depends only on (ab H) mod K, the next on residues of b,
  // so everything reduces to K complete twisted sums and 2K progression sums.
  std::vector<cdouble> V(static_cast<std::size_t>(K));
  V[0] = ap_zeta_convergent(w[2], K, K) * 0.0;  // placeholder, set below
  for (long long jj = 1; jj < K; ++jj)
    V[static_cast<std::size_t>(jj)] = twisted_zeta_convergent(w[2], jj, K);
  {
    CNeumaier all;  // zeta(w3) = sum over all residue classes
    for (long long u = 1; u <= K; ++u) all.add(ap_zeta_convergent(w[2], u, K));
    V[0] = all.result();
  }
  std::vector<cdouble> Z2(static_cast<std::size_t>(K) + 1);
  std::vector<cdouble> Z1(static_cast<std::size_t>(K) + 1);
  for (long long u = 1; u <= K; ++u) {
    Z2[static_cast<std::size_t>(u)] = ap_zeta_convergent(w[1], u, K);
    Z1[static_cast<std::size_t>(u)] = ap_zeta_convergent(w[0], u, K);
  }
  std::vector<cdouble> U(static_cast<std::size_t>(K));
  for (long long r = 0; r < K; ++r) {
    CNeumaier acc;
    for (long long u = 1; u <= K; ++u)
      acc.add(Z2[static_cast<std::size_t>(u)] *
              V[static_cast<std::size_t>((r * u) % K)]);
    U[static_cast<std::size_t>(r)] = acc.result();
  }
  CNeumaier out;
  for (long long v = 1; v <= K; ++v)
    out.add(Z1[static_cast<std::size_t>(v)] *
            U[static_cast<std::size_t>((v * H) % K)]);
  return out.result();
}

cdouble estermann_truncated(cdouble s, const AdditiveTwist& twist,
                            const ShiftTriple& shifts, long long N) {
  if (N < 1) throw std::invalid_argument("estermann_truncated: N >= 1");
  const std::size_t n = static_cast<std::size_t>(N);
  auto powers = [N](cdouble w) {
    std::vector<cdouble> f(static_cast<std::size_t>(N) + 1);
    f[0] = 0.0;
    for (long long k = 1; k <= N; ++k)
      f[static_cast<std::size_t>(k)] =
          std::exp(-w * std::log(static_cast<double>(k)));
    return f;
  };
  std::vector<cdouble> f1 = powers(s + shifts.alpha);
  const std::vector<cdouble> f2 = powers(s + shifts.beta);
  const std::vector<cdouble> f3 = powers(s + shifts.gamma);
  // two Dirichlet convolution passes
  std::vector<cdouble> g(n + 1, cdouble(0.0));
  for (long long a = 1; a <= N; ++a)
    for (long long b = 1; a * b <= N; ++b)
      g[static_cast<std::size_t>(a * b)] +=
          f1[static_cast<std::size_t>(a)] * f2[static_cast<std::size_t>(b)];
  std::vector<cdouble> t(n + 1, cdouble(0.0));
  for (long long a = 1; a <= N; ++a)
    for (long long b = 1; a * b <= N; ++b)
      t[static_cast<std::size_t>(a * b)] +=
          g[static_cast<std::size_t>(a)] * f3[static_cast<std::size_t>(b)];
  const UnitRoots e(twist.K);
  CNeumaier acc;
  for (long long k = 1; k <= N; ++k)
    acc.add(t[static_cast<std::size_t>(k)] * e(k * (twist.H % twist.K)));
  return acc.result();
}

cdouble estermann_hurwitz(cdouble s, const AdditiveTwist& twist,
                          const ShiftTriple& shifts) {
  const std::array<cdouble, 3> w = {s + shifts.alpha, s + shifts.beta,
                                    s + shifts.gamma};
  for (const cdouble& wi : w) {
    if (std::abs(wi - 1.0) < 1e-6)
      throw pole_error("estermann_hurwitz: s within 1e-6 of a pole 1-shift");
    if (wi.real() <= -3.0)
      throw std::invalid_argument("estermann_hurwitz: outside Hurwitz strip");
  }
  const long long K = twist.K, H = twist.H;
  std::vector<cdouble> zA(static_cast<std::size_t>(K) + 1),
      zB(static_cast<std::size_t>(K) + 1), zC(static_cast<std::size_t>(K) + 1);
  for (long long r = 1; r <= K; ++r) {
    zA[static_cast<std::size_t>(r)] = hurwitz_zeta_arith(w[0], r, K);
    zB[static_cast<std::size_t>(r)] = hurwitz_zeta_arith(w[1], r, K);
    zC[static_cast<std::size_t>(r)] = hurwitz_zeta_arith(w[2], r, K);
  }
  const UnitRoots e(K);
  // W[r] = sum_N e(rN/K) zC[N]
  std::vector<cdouble> W(static_cast<std::size_t>(K));
  for (long long r = 0; r < K; ++r) {
    CNeumaier acc;
    for (long long nn = 1; nn <= K; ++nn)
      acc.add(e(r * nn) * zC[static_cast<std::size_t>(nn)]);
    W[static_cast<std::size_t>(r)] = acc.result();
  }
  const std::size_t total =
      static_cast<std::size_t>(K) * static_cast<std::size_t>(K);
  return block_sum(total, [&](std::size_t idx) {
    const long long L = static_cast<long long>(idx) / K + 1;
    const long long M = static_cast<long long>(idx) % K + 1;
    const long long r = (H % K) * ((L * M) % K) % K;
    return zA[static_cast<std::size_t>(L)] * zB[static_cast<std::size_t>(M)] *
           W[static_cast<std::size_t>(r)];
  });
}

cdouble g_factor(cdouble s, long long K, std::span<const cdouble> shifts) {
  if (K < 1) throw std::invalid_argument("g_factor: K >= 1");
  for (const cdouble& a : shifts)
    if ((s + a).real() <= 0.05)
      throw decay_error("g_factor: j-series requires Re(s + shift) > 0.05");
  cdouble out = 1.0;
  for (const auto& [p, e] : factorize(K).factors) {
    const double lp = std::log(static_cast<double>(p));
    cdouble euler = 1.0;
    for (const cdouble& a : shifts) euler *= 1.0 - std::exp(-(s + a) * lp);
    const cdouble ps = std::exp(-s * lp);  // p^{-s}
    cdouble series = 0.0;
    cdouble pjs = 1.0;
    int quiet = 0;
    for (int j = 0; j < 4000; ++j) {
      const cdouble term = divisor_tau_prime_power(shifts, p, e + j) * pjs;
      series += term;
      if (std::abs(term) < 1e-18 * (1.0 + std::abs(series))) {
        if (++quiet >= 3) break;
      } else {
        quiet = 0;
      }
      pjs *= ps;
      if (j == 3999)
        throw convergence_error("g_factor: j-series did not converge");
    }
    out *= euler * series;
  }
  return out;
}

cdouble G_factor(cdouble s, long long K, std::span<const cdouble> shifts) {
  if (K < 1) throw std::invalid_argument("G_factor: K >= 1");
  std::map<long long, cdouble> g_cache;
  auto g_of = [&](long long m) {
    auto it = g_cache.find(m);
    if (it != g_cache.end()) return it->second;
    const cdouble v = g_factor(s, m, shifts);
    g_cache.emplace(m, v);
    return v;
  };
  cdouble out = 0.0;
  for (long long d : divisors(K)) {
    const int mu_d = mobius(d);
    if (mu_d == 0) continue;
    cdouble inner = 0.0;
    for (long long e : divisors(d)) {
      const int mu_e = mobius(e);
      if (mu_e == 0) continue;
      inner += static_cast<double>(mu_e) *
               cpow(static_cast<double>(e), -s) * g_of(K * e / d);
    }
    out += static_cast<double>(mu_d) / static_cast<double>(euler_phi(d)) *
           cpow(static_cast<double>(d), s) * inner;
  }
  return out;
}

cdouble g_factor(cdouble s, long long K, const ShiftTriple& shifts) {
  const std::array<cdouble, 3> a{shifts.alpha, shifts.beta, shifts.gamma};
  return g_factor(s, K, std::span<const cdouble>(a.data(), a.size()));
}

cdouble G_factor(cdouble s, long long K, const ShiftTriple& shifts) {
  const std::array<cdouble, 3> a{shifts.alpha, shifts.beta, shifts.gamma};
  return G_factor(s, K, std::span<const cdouble>(a.data(), a.size()));
}

cdouble G_factor_prime_closed(cdouble s, long long p,
                              const ShiftTriple& shifts) {
  const double lp = std::log(static_cast<double>(p));
  const cdouble pr = 1.0 / (1.0 - 1.0 / static_cast<double>(p));
  cdouble prod = 1.0;
  for (const cdouble& a : shifts.as_vector())
    prod *= 1.0 - std::exp(-(s + a) * lp);
  return std::exp(s * lp) * (1.0 - pr * prod);
}

std::vector<PolarDatum> polar_data(const AdditiveTwist& twist,
                                   const ShiftTriple& shifts) {
  const std::vector<cdouble> a = shifts.as_vector();
  const long long K = twist.K;
  std::vector<PolarDatum> out;
  // cluster coincident shifts
  std::vector<bool> used(3, false);
  for (int i = 0; i < 3; ++i) {
    if (used[static_cast<std::size_t>(i)]) continue;
    std::vector<int> cluster{i};
    for (int j = i + 1; j < 3; ++j)
      if (!used[static_cast<std::size_t>(j)] &&
          std::abs(a[static_cast<std::size_t>(j)] -
                   a[static_cast<std::size_t>(i)]) < 1e-9)
        cluster.push_back(j);
    for (int j : cluster) used[static_cast<std::size_t>(j)] = true;
    const cdouble pole = 1.0 - a[static_cast<std::size_t>(i)];
    // radius: clear of every pole outside the cluster
    double gap = 0.45;
    for (int j = 0; j < 3; ++j) {
      if (std::find(cluster.begin(), cluster.end(), j) != cluster.end())
        continue;
      gap = std::min(gap, std::abs(a[static_cast<std::size_t>(j)] -
                                   a[static_cast<std::size_t>(i)]));
    }
    const double radius = std::min(0.15, gap / 3.0);
    const cdouble res_contour = contour_residue(
        [&](cdouble z) { return estermann_hurwitz(z, twist, shifts); }, pole,
        radius);
    if (cluster.size() == 1) {
      cdouble res_formula = cpow(static_cast<double>(K), -pole);
      for (int j = 0; j < 3; ++j)
        if (j != i)
          res_formula *= riemann_zeta(pole + a[static_cast<std::size_t>(j)]);
      res_formula *= G_factor(pole, K, shifts);
      out.push_back({pole, res_formula, PolarDatum::Source::formula});
    }
    out.push_back({pole, res_contour, PolarDatum::Source::contour});
  }
  return out;
}

cdouble functional_equation_rhs(cdouble s, const AdditiveTwist& twist,
                                const ShiftTriple& shifts) {
  const long long K = twist.K;
  const long long Hbar = mod_inverse(twist.H, K);
  const ShiftTriple neg = shifts.negated();
  const std::vector<cdouble> pair = shifts.pair_sums();
  const std::span<const cdouble> pair_span(pair.data(), pair.size());
  const cdouble sumA = shifts.alpha + shifts.beta + shifts.gamma;
  const cdouble i{0.0, 1.0};

  // inner Estermann values are shared across the (eps,d,h,x) sum
  std::map<std::pair<long long, long long>, cdouble> inner_cache;
  auto inner = [&](long long num, long long q) {
    const AdditiveTwist t = AdditiveTwist::reduced(num, q);
    const auto key = std::make_pair(t.K, t.H);
    auto it = inner_cache.find(key);
    if (it != inner_cache.end()) return it->second;
    const cdouble v = estermann_hurwitz(1.0 - s, t, neg);
    inner_cache.emplace(key, v);
    return v;
  };

  CNeumaier total;
  for (int mask = 0; mask < 8; ++mask) {
    const int e1 = (mask & 1) ? 1 : -1;
    const int e2 = (mask & 2) ? 1 : -1;
    const int e3 = (mask & 4) ? 1 : -1;
    const int sgn = e1 * e2 * e3;
    const cdouble phase =
        std::exp(kPi / 2.0 * i *
                 (static_cast<double>(e1) * (s + shifts.alpha) +
                  static_cast<double>(e2) * (s + shifts.beta) +
                  static_cast<double>(e3) * (s + shifts.gamma)));
    for (long long d : divisors(K)) {
      const long long q = K / d;
      const cdouble d_pow = cpow(static_cast<double>(d), 2.0 * s - 1.0);
      for (long long h : divisors(d)) {
        const int mu_h = mobius(h);
        if (mu_h == 0) continue;
        const cdouble coeff = static_cast<double>(mu_h) *
                              divisor_tau(pair_span, d / h) *
                              cpow(static_cast<double>(h), s - 1.0 + sumA);
        const UnitRoots e(q);
        CNeumaier asum;
        for (long long x = 1; x <= q; ++x) {
          if (std::gcd(x, q) != 1) continue;
          const long long xbar = mod_inverse(x, q);
          asum.add(e(xbar) * inner(-sgn * ((Hbar % q) * (h % q) % q) * x, q));
        }
        total.add(static_cast<double>(sgn) * phase * d_pow * coeff *
                  asum.result());
      }
    }
  }
  return cpow(static_cast<double>(K), 1.0) *
         std::exp((1.0 - 3.0 * s - sumA) * std::log(static_cast<double>(K))) /
         static_cast<double>(K) * gamma_factor3(s, shifts) * total.result() *
         static_cast<double>(K);
}

}  // namespace gl3
