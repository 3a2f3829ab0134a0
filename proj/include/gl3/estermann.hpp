#ifndef GL3_ESTERMANN_HPP
#define GL3_ESTERMANN_HPP

#include <span>
#include <vector>

#include "gl3/types.hpp"

namespace gl3 {

// ---------------------------------------------------------------------------
// The shifted GL(3) Estermann function
//   D_{alpha,beta,gamma}(s, H/K) = sum_n tau_{alpha,beta,gamma}(n) e(nH/K) n^{-s},
// its direct-series oracle, the Hurwitz-grid continuation, the polar data
// g_A / G_A, and the functional equation.
// ---------------------------------------------------------------------------

// Elementary 1-D evaluators (convergent region only). These are the direct
// summation layer: head sums plus Euler-Maclaurin (smooth) or iterated-Abel
// (oscillatory) tails. No analytic continuation involved.

// sum_{n >= 1, n = u (mod K)} n^{-w}, Re w > 1.
cdouble ap_zeta_convergent(cdouble w, long long u, long long K);

// sum_{n >= 1} e(jn/K) n^{-w}, 0 < j < K, Re w > 0.
cdouble twisted_zeta_convergent(cdouble w, long long j, long long K);

// Direct evaluation of D in the region of absolute convergence, exact to
// ~1e-13: the series is summed in product order over n = abc with the three
// one-dimensional sums completed by their elementary tails. Requires
// Re(s + shift) > 1.02 for every shift (and Re s >= 1.25).
cdouble estermann_direct(cdouble s, const AdditiveTwist& twist,
                         const ShiftTriple& shifts, double tol = 1e-12);

// Literal truncated partial sum over n <= N (divisor-convolution sieve).
// Kept as the plain-truncation reference for the direct evaluator.
cdouble estermann_truncated(cdouble s, const AdditiveTwist& twist,
                            const ShiftTriple& shifts, long long N);

// Analytic continuation through the Hurwitz grid:
//   D(s,H/K) = sum_{L,M,N=1}^{K} e(HLMN/K) zeta(s+a,L,K) zeta(s+b,M,K)
//              zeta(s+c,N,K).
// Throws pole_error when s is within 1e-6 of a pole 1 - shift.
cdouble estermann_hurwitz(cdouble s, const AdditiveTwist& twist,
                          const ShiftTriple& shifts);

// Local factors of the polar structure. For K = prod p^{K_p}:
//   g_A(s,K) = prod_{p|K} ( prod_i (1 - p^{-s-a_i})
//                           * sum_j tau_A(p^{j+K_p}) p^{-js} )
//   G_A(s,K) = sum_{d|K} mu(d)/phi(d) d^s sum_{e|d} mu(e) e^{-s} g_A(s,Ke/d)
cdouble g_factor(cdouble s, long long K, std::span<const cdouble> shifts);
cdouble G_factor(cdouble s, long long K, std::span<const cdouble> shifts);
cdouble g_factor(cdouble s, long long K, const ShiftTriple& shifts);
cdouble G_factor(cdouble s, long long K, const ShiftTriple& shifts);

// Closed form of G_{a,b,g}(s,p) at prime p.
cdouble G_factor_prime_closed(cdouble s, long long p, const ShiftTriple& shifts);

// Polar data of D(., H/K). Every pole gets a contour-extracted residue; a
// pole that is simple (its shift is isolated) also gets the closed-form
// residue K^{-(1-a)} zeta(1-a+b) zeta(1-a+g) G_A(1-a, K). The polar part
// does not depend on H.
struct PolarDatum {
  enum class Source { formula, contour };
  cdouble pole;
  cdouble residue;
  Source source;
};
std::vector<PolarDatum> polar_data(const AdditiveTwist& twist,
                                   const ShiftTriple& shifts);

// Right-hand side of the functional equation:
//   D_A(s,H/K) = K^{1-3s-a-b-g} G_A(s) sum_{eps} e1e2e3
//     e^{(pi/2) i (e1(s+a)+e2(s+b)+e3(s+g))}
//     sum_{d|K} d^{2s-1} sum_{h|d} mu(h) tau'(d/h) h^{s-1+a+b+g}
//     sum'_{x mod K/d} e(xbar/(K/d)) D_{-A}(1-s, -e1e2e3 Hbar h x / (K/d)),
// with tau' the pair-sum-shift divisor function and inner twists reduced to
// lowest terms before evaluation.
cdouble functional_equation_rhs(cdouble s, const AdditiveTwist& twist,
                                const ShiftTriple& shifts);

}  // namespace gl3

#endif  // GL3_ESTERMANN_HPP
