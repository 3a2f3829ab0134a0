#ifndef GL3_TYPES_HPP
#define GL3_TYPES_HPP

#include <complex>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace gl3 {

using cdouble = std::complex<double>;

inline constexpr double kPi = 3.141592653589793238462643383279502884;
inline constexpr double kTwoPi = 2.0 * kPi;

// ---------------------------------------------------------------------------
// Error taxonomy. Numerical guards are distinct from plain argument errors so
// the CLI can map them to exit codes.
// ---------------------------------------------------------------------------

// Evaluation requested at (or too close to) a pole.
class pole_error : public std::runtime_error {
 public:
  explicit pole_error(const std::string& what) : std::runtime_error(what) {}
};

// A contour integrand failed its decay monitor, or a series truncation
// never found a decaying regime.
class decay_error : public std::runtime_error {
 public:
  explicit decay_error(const std::string& what) : std::runtime_error(what) {}
};

// An adaptive scheme ran out of refinement budget.
class convergence_error : public std::runtime_error {
 public:
  explicit convergence_error(const std::string& what)
      : std::runtime_error(what) {}
};

// ---------------------------------------------------------------------------
// ShiftTriple: the ordered complex shifts (alpha, beta, gamma) of the shifted
// triple divisor function. Real parts are capped at 1/2; that is the regime
// all series and continuations in this library are validated for.
// ---------------------------------------------------------------------------
struct ShiftTriple {
  cdouble alpha{0.0, 0.0};
  cdouble beta{0.0, 0.0};
  cdouble gamma{0.0, 0.0};

  ShiftTriple() = default;
  ShiftTriple(cdouble a, cdouble b, cdouble g) : alpha(a), beta(b), gamma(g) {
    for (const cdouble& z : {a, b, g}) {
      if (std::abs(z.real()) > 0.5 + 1e-12)
        throw std::invalid_argument("ShiftTriple: |Re shift| must be <= 1/2");
    }
  }

  // (-alpha, -beta, -gamma), the dual triple of the functional equation.
  ShiftTriple negated() const { return ShiftTriple(-alpha, -beta, -gamma); }

  // (-beta-gamma, -alpha-gamma, -alpha-beta), the pair-sum triple weighting
  // the d/h divisor coefficient of the functional equation.
  std::vector<cdouble> pair_sums() const {
    return {-beta - gamma, -alpha - gamma, -alpha - beta};
  }

  std::vector<cdouble> as_vector() const { return {alpha, beta, gamma}; }

  double max_re() const {
    return std::max(alpha.real(), std::max(beta.real(), gamma.real()));
  }

  // Smallest pairwise distance; zero means coincident shifts.
  double min_gap() const {
    return std::min({std::abs(alpha - beta), std::abs(alpha - gamma),
                     std::abs(beta - gamma)});
  }

  bool pairwise_distinct(double eps = 1e-9) const { return min_gap() > eps; }
};

// ---------------------------------------------------------------------------
// AdditiveTwist: the additive character n -> e(nH/K), gcd(H,K)=1, held with
// canonical representative 1 <= H <= K. (H=K=1 is the trivial twist.)
// ---------------------------------------------------------------------------
struct AdditiveTwist {
  long long H = 1;
  long long K = 1;

  AdditiveTwist() = default;
  AdditiveTwist(long long h, long long k) : H(h), K(k) {
    if (K < 1) throw std::invalid_argument("AdditiveTwist: K must be >= 1");
    H %= K;
    if (H <= 0) H += K;  // 1..K, with H = K meaning the residue 0 only if K=1
    if (std::gcd(H, K) != 1)
      throw std::invalid_argument("AdditiveTwist: gcd(H,K) must be 1");
  }

  // Builds the twist num/K in lowest terms: divides out gcd(num mod K, K).
  // Used for the inner twists -eps*Hbar*h*a/(K/d) of the functional equation,
  // which are not presented in lowest terms.
  static AdditiveTwist reduced(long long num, long long K) {
    if (K < 1) throw std::invalid_argument("AdditiveTwist: K must be >= 1");
    long long r = num % K;
    if (r < 0) r += K;
    if (r == 0) return AdditiveTwist(1, 1);
    long long g = std::gcd(r, K);
    return AdditiveTwist(r / g, K / g);
  }

  bool trivial() const { return K == 1; }

  bool operator==(const AdditiveTwist& o) const { return H == o.H && K == o.K; }
};

// ---------------------------------------------------------------------------
// ContourSpec: a vertical line Re s = sigma, truncated at |Im s| <= T and
// sampled with step h. Nodes are sigma + i*k*h, k = -T/h .. T/h.
// ---------------------------------------------------------------------------
struct ContourSpec {
  double sigma = 2.0;
  double T = 30.0;
  double h = 0.05;

  ContourSpec() = default;
  ContourSpec(double s, double t, double step) : sigma(s), T(t), h(step) {
    if (T <= 0 || h <= 0) throw std::invalid_argument("ContourSpec: T,h > 0");
    if (h > T / 50.0 + 1e-15)
      throw std::invalid_argument("ContourSpec: require h <= T/50");
  }

  long long half_count() const {
    return static_cast<long long>(std::floor(T / h + 1e-9));
  }
};

}  // namespace gl3

#endif  // GL3_TYPES_HPP
