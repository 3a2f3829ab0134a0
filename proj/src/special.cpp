#include "gl3/special.hpp"

#include <array>
#include <cmath>
#include <vector>

#include "gl3/arith.hpp"
#include "gl3/reduction.hpp"

namespace gl3 {

namespace {

constexpr double kSqrtTwoPi = 2.506628274631000502415765284811;

// Lanczos, g = 607/128, 15 terms. Gives ~1e-14 relative accuracy on the
// right half plane at double precision.
constexpr double kLanczosG = 607.0 / 128.0;
constexpr std::array<double, 15> kLanczos = {
    0.99999999999999709182,     57.156235665862923517,
    -59.597960355475491248,     14.136097974741747174,
    -0.49191381609762019978,    0.33994649984811888699e-4,
    0.46523628927048575665e-4,  -0.98374475304879564677e-4,
    0.15808870322491248884e-3,  -0.21026444172410488319e-3,
    0.21743961811521264320e-3,  -0.16431810653676389022e-3,
    0.84418223983852743293e-4,  -0.26190838401581408670e-4,
    0.36899182659531622704e-5,
};

bool near_nonpositive_integer(cdouble z, double tol = 1e-13) {
  if (z.real() > 0.5) return false;
  const double r = std::round(z.real());
  return r <= 0.0 && std::abs(z.real() - r) < tol && std::abs(z.imag()) < tol;
}

cdouble gamma_right(cdouble z) {
  // valid for Re z >= 1/2
  cdouble acc = kLanczos[0];
  for (std::size_t k = 1; k < kLanczos.size(); ++k)
    acc += kLanczos[k] / (z + static_cast<double>(k - 1));
  const cdouble t = z + (kLanczosG - 0.5);
  return kSqrtTwoPi * std::pow(t, z - 0.5) * std::exp(-t) * acc;
}

// Bernoulli numbers B_2 .. B_20.
constexpr std::array<double, 10> kBernoulli = {
    1.0 / 6.0,      -1.0 / 30.0,     1.0 / 42.0,      -1.0 / 30.0,
    5.0 / 66.0,     -691.0 / 2730.0, 7.0 / 6.0,       -3617.0 / 510.0,
    43867.0 / 798.0, -174611.0 / 330.0,
};

// Factorials (2k)! for k = 1..10.
constexpr std::array<double, 10> kFact2k = {
    2.0,           24.0,           720.0,          40320.0,
    3628800.0,     479001600.0,    87178291200.0,  20922789888000.0,
    6402373705728000.0, 2432902008176640000.0,
};

// Euler-Maclaurin core: returns zeta(s, a) with the 1/(s-1) pole kept
// (subtract_pole = false) or removed (true).
cdouble hurwitz_em(cdouble s, double a, bool subtract_pole) {
  const long long N =
      std::max<long long>(15, static_cast<long long>(std::ceil(std::abs(s.imag()))) + 10);
  CNeumaier head;
  for (long long n = 0; n < N; ++n)
    head.add(std::exp(-s * std::log(static_cast<double>(n) + a)));
  const double Na = static_cast<double>(N) + a;
  const double logNa = std::log(Na);
  cdouble out = head.result();
  // (N+a)^{1-s}/(s-1), with the pole removed via expm1 when requested
  if (subtract_pole) {
    // ((N+a)^{1-s} - 1)/(s-1)
    const cdouble w = (1.0 - s) * logNa;
    // expm1 for complex w: e^w - 1; compute stably for small |w|
    cdouble em1;
    if (std::abs(w) < 1e-8) {
      em1 = w * (1.0 + 0.5 * w);
    } else {
      em1 = std::exp(w) - 1.0;
    }
    out += em1 / (s - 1.0);
  } else {
    out += std::exp((1.0 - s) * logNa) / (s - 1.0);
  }
  const cdouble Nams = std::exp(-s * logNa);  // (N+a)^{-s}
  out += 0.5 * Nams;
  // correction terms B_{2k}/(2k)! * (s)_{2k-1} * (N+a)^{-s-2k+1}
  cdouble rising = s;             // (s)_1
  cdouble power = Nams * Na;      // (N+a)^{-s+1}
  const double inv2 = 1.0 / (Na * Na);
  for (std::size_t k = 0; k < kBernoulli.size(); ++k) {
    power *= inv2;  // (N+a)^{-s-2k+1}
    out += kBernoulli[k] / kFact2k[k] * rising * power;
    // advance rising factorial by two: (s)_{2k+1} from (s)_{2k-1}
    const double j = 2.0 * static_cast<double>(k);
    rising *= (s + (j + 1.0)) * (s + (j + 2.0));
  }
  return out;
}

}  // namespace

cdouble gamma(cdouble s) {
  if (near_nonpositive_integer(s))
    throw pole_error("gamma: pole at non-positive integer");
  if (s.real() >= 0.5) return gamma_right(s);
  // reflection: Gamma(s) = pi / (sin(pi s) Gamma(1-s))
  const cdouble sinpis = std::sin(kPi * s);
  return kPi / (sinpis * gamma_right(1.0 - s));
}

cdouble gamma_factor(cdouble s) {
  const cdouble i{0.0, 1.0};
  return -i * std::exp((s - 1.0) * std::log(kTwoPi)) * gamma(1.0 - s);
}

cdouble gamma_factor3(cdouble s, const ShiftTriple& shifts) {
  return gamma_factor(s + shifts.alpha) * gamma_factor(s + shifts.beta) *
         gamma_factor(s + shifts.gamma);
}

cdouble hurwitz_zeta(cdouble s, double a) {
  if (a <= 0.0 || a > 1.0)
    throw std::invalid_argument("hurwitz_zeta: need 0 < a <= 1");
  if (std::abs(s - 1.0) < 1e-10)
    throw pole_error("hurwitz_zeta: pole at s = 1");
  return hurwitz_em(s, a, /*subtract_pole=*/false);
}

cdouble hurwitz_zeta_reg(cdouble s, double a) {
  if (a <= 0.0 || a > 1.0)
    throw std::invalid_argument("hurwitz_zeta_reg: need 0 < a <= 1");
  return hurwitz_em(s, a, /*subtract_pole=*/true);
}

cdouble riemann_zeta(cdouble s) { return hurwitz_zeta(s, 1.0); }

cdouble hurwitz_zeta_arith(cdouble s, long long H, long long K) {
  if (K < 1 || H < 1 || H > K)
    throw std::invalid_argument("hurwitz_zeta_arith: need 1 <= H <= K");
  const double a = static_cast<double>(H) / static_cast<double>(K);
  return std::exp(-s * std::log(static_cast<double>(K))) * hurwitz_zeta(s, a);
}

cdouble lerch_zeta(cdouble s, const AdditiveTwist& twist) {
  if (twist.trivial()) return riemann_zeta(s);
  const long long K = twist.K;
  const UnitRoots e(K);
  // sum_a e(aH/K) zeta(s, a/K); the root-of-unity sum kills the shared
  // 1/(s-1) pole, so use the regularized values throughout.
  CNeumaier acc;
  for (long long a = 1; a <= K; ++a) {
    const cdouble z =
        hurwitz_zeta_reg(s, static_cast<double>(a) / static_cast<double>(K));
    acc.add(e(a * twist.H) * z);
  }
  return std::exp(-s * std::log(static_cast<double>(K))) * acc.result();
}

cdouble chi_factor(cdouble s) {
  if (s.real() >= 0.5) {
    return 2.0 * std::exp(-s * std::log(kTwoPi)) * std::cos(kPi * s / 2.0) *
           gamma(s);
  }
  // chi(1-s) = pi (2 pi)^{-s} / (sin(pi s/2) Gamma(1-s)); poles at
  // s = 0, -2, -4, ... are genuine.
  const cdouble sn = std::sin(kPi * s / 2.0);
  if (std::abs(sn) < 1e-13) throw pole_error("chi_factor: pole");
  return kPi * std::exp(-s * std::log(kTwoPi)) / (sn * gamma(1.0 - s));
}

TwoSided hurwitz_functional_equation(cdouble s, long long H, long long K) {
  TwoSided out;
  out.lhs = hurwitz_zeta_arith(s, H, K);
  const cdouble i{0.0, 1.0};
  const cdouble rot = std::exp(i * kPi * s / 2.0);
  const cdouble plus = lerch_zeta(1.0 - s, AdditiveTwist(H, K));
  const cdouble minus = lerch_zeta(1.0 - s, AdditiveTwist(K - H == 0 ? 1 : K - H, K));
  out.rhs = std::exp(-s * std::log(static_cast<double>(K))) * gamma_factor(s) *
            (rot * plus - minus / rot);
  return out;
}

// ---------------------------------------------------------------------------
// quadrature
// ---------------------------------------------------------------------------

namespace {

double tail_estimate(const std::vector<double>& mags, double h) {
  // geometric extrapolation from the trailing magnitudes
  const std::size_t n = mags.size();
  if (n < 4) return 0.0;
  const std::size_t w = std::min<std::size_t>(20, n / 2);
  double first = 0.0, last = 0.0;
  for (std::size_t i = 0; i < w; ++i) {
    first += mags[n - 2 * w + i];
    last += mags[n - w + i];
  }
  double r = (first > 0.0) ? last / first : 0.0;
  r = std::min(std::pow(std::max(r, 0.0), 1.0 / static_cast<double>(w)), 0.999);
  const double edge = mags[n - 1];
  return h / kTwoPi * edge * r / (1.0 - r) + h / kTwoPi * edge;
}

}  // namespace

QuadResult mellin_barnes(const std::function<cdouble(cdouble)>& f,
                         const ContourSpec& contour) {
  const long long N = contour.half_count();
  const double h = contour.h;
  const cdouble i{0.0, 1.0};
  const std::size_t total = static_cast<std::size_t>(2 * N + 1);
  const cdouble sum = block_sum(total, [&](std::size_t idx) {
    const long long k = static_cast<long long>(idx) - N;
    return f(contour.sigma + i * (static_cast<double>(k) * h));
  });
  QuadResult out;
  out.value = sum * (h / kTwoPi);
  std::vector<double> up, down;
  const long long probe = std::min<long long>(N, 60);
  up.reserve(static_cast<std::size_t>(probe));
  down.reserve(static_cast<std::size_t>(probe));
  for (long long k = N - probe + 1; k <= N; ++k) {
    up.push_back(std::abs(f(contour.sigma + i * (static_cast<double>(k) * h))));
    down.push_back(
        std::abs(f(contour.sigma - i * (static_cast<double>(k) * h))));
  }
  out.tail_bound = tail_estimate(up, h) + tail_estimate(down, h);
  return out;
}

QuadResult mellin_barnes_adaptive(const std::function<cdouble(cdouble)>& f,
                                  double sigma, double h, double tol,
                                  double t_start, double t_max) {
  const cdouble i{0.0, 1.0};
  const double threshold = tol * h / kTwoPi;
  // Discover the truncation index per side: 20 consecutive nodes below
  // threshold. The discovery is deterministic, the sum is a second pass.
  auto discover = [&](int side) -> long long {
    long long k = static_cast<long long>(t_start / h);
    int streak = 0;
    const long long k_max = static_cast<long long>(t_max / h);
    for (long long j = 1; j <= k_max; ++j) {
      const double mag =
          std::abs(f(sigma + i * (side * static_cast<double>(j) * h)));
      if (mag < threshold) {
        if (++streak >= 20 && j >= k) return j;
      } else {
        streak = 0;
      }
    }
    throw decay_error("mellin_barnes_adaptive: integrand not decaying");
  };
  const long long up = discover(+1);
  const long long down = discover(-1);
  const std::size_t total = static_cast<std::size_t>(up + down + 1);
  const cdouble sum = block_sum(total, [&](std::size_t idx) {
    const long long k = static_cast<long long>(idx) - down;
    return f(sigma + i * (static_cast<double>(k) * h));
  });
  QuadResult out;
  out.value = sum * (h / kTwoPi);
  out.tail_bound = 40.0 * threshold;  // 20 sub-threshold nodes per side
  return out;
}

cdouble contour_residue(const std::function<cdouble(cdouble)>& f,
                        cdouble center, double radius) {
  cdouble prev{0.0, 0.0};
  bool have_prev = false;
  for (int M = 32; M <= (1 << 14); M *= 2) {
    CNeumaier acc;
    for (int j = 0; j < M; ++j) {
      const double th = kTwoPi * static_cast<double>(j) / M;
      const cdouble dir{std::cos(th), std::sin(th)};
      acc.add(f(center + radius * dir) * dir);
    }
    const cdouble res = acc.result() * (radius / static_cast<double>(M));
    if (have_prev &&
        std::abs(res - prev) < 1e-12 * std::max(1.0, std::abs(res)))
      return res;
    prev = res;
    have_prev = true;
  }
  throw convergence_error("contour_residue: no convergence by M = 2^14");
}

}  // namespace gl3
