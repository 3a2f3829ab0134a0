#ifndef GL3_SPECIAL_HPP
#define GL3_SPECIAL_HPP

#include <functional>

#include "gl3/types.hpp"

namespace gl3 {

// ---------------------------------------------------------------------------
// Complex special functions and contour machinery.
//
// Validated regimes (enforced by tests, not by assertions):
//   gamma:        -10 <= Re s <= 10, |Im s| <= 100, relative error < 1e-12
//   hurwitz zeta: Re s > -5, |Im s| <= 100, relative error < 1e-11
// ---------------------------------------------------------------------------

// Gamma by Lanczos approximation, reflection for Re s < 1/2.
// Throws pole_error at non-positive integers.
cdouble gamma(cdouble s);

// G(s) = -i (2 pi)^{s-1} Gamma(1-s), the Hurwitz functional-equation factor.
cdouble gamma_factor(cdouble s);
// G(s+alpha) G(s+beta) G(s+gamma).
cdouble gamma_factor3(cdouble s, const ShiftTriple& shifts);

// Riemann zeta by Euler-Maclaurin continuation (valid Re s > -5).
cdouble riemann_zeta(cdouble s);

// Hurwitz zeta(s, a) for 0 < a <= 1, same continuation.
cdouble hurwitz_zeta(cdouble s, double a);
// zeta(s, a) - 1/(s-1): regular at s = 1, stable for |s-1| small.
cdouble hurwitz_zeta_reg(cdouble s, double a);

// Arithmetic-progression form: sum over n = H (mod K) of n^{-s}
// = K^{-s} zeta(s, H/K), 1 <= H <= K.
cdouble hurwitz_zeta_arith(cdouble s, long long H, long long K);

// Lerch zeta: sum_n e(nH/K) n^{-s}. Entire in s for K > 1; for K = 1 it is
// riemann_zeta (pole at s = 1).
cdouble lerch_zeta(cdouble s, const AdditiveTwist& twist);

// chi(1-s) = 2 (2 pi)^{-s} cos(pi s / 2) Gamma(s), computed through the
// reflected form for Re s < 1/2 so half-integers and the Gamma poles
// cancelled by cosine zeros are safe.
cdouble chi_factor(cdouble s);

// Both sides of the Hurwitz functional equation
//   zeta(s,H,K) = K^{-s} G(s) (e^{i pi s/2} zeta(1-s, e(H/K))
//                              - e^{-i pi s/2} zeta(1-s, e(-H/K))).
struct TwoSided {
  cdouble lhs;
  cdouble rhs;
  double abs_dev() const { return std::abs(lhs - rhs); }
  double rel_dev() const {
    const double scale = std::max(std::abs(lhs), std::abs(rhs));
    return scale > 0 ? abs_dev() / scale : abs_dev();
  }
};
TwoSided hurwitz_functional_equation(cdouble s, long long H, long long K);

// ---------------------------------------------------------------------------
// Vertical-line quadrature (1/2 pi i) int_{(sigma)} f(s) ds.
// ---------------------------------------------------------------------------

struct QuadResult {
  cdouble value{0.0, 0.0};
  double tail_bound = 0.0;  // estimated truncation error
};

// Fixed window: trapezoid over the nodes of `contour`, compensated and
// deterministic. tail_bound extrapolates the last-decade magnitudes.
QuadResult mellin_barnes(const std::function<cdouble(cdouble)>& f,
                         const ContourSpec& contour);

// Adaptive window: extends T until |f| stays below tol*h/(2 pi) for 20
// consecutive nodes on each side. Throws decay_error if no decay is found
// by T = t_max.
QuadResult mellin_barnes_adaptive(const std::function<cdouble(cdouble)>& f,
                                  double sigma, double h, double tol,
                                  double t_start = 10.0, double t_max = 400.0);

// Residue of f at `center` (any pole order) by trapezoid on the circle of
// radius `radius`; node count doubles until the value settles. Throws
// convergence_error past 2^14 nodes.
cdouble contour_residue(const std::function<cdouble(cdouble)>& f,
                        cdouble center, double radius);

}  // namespace gl3

#endif  // GL3_SPECIAL_HPP
