#ifndef GL3_ARITH_HPP
#define GL3_ARITH_HPP

#include <array>
#include <span>
#include <utility>
#include <vector>

#include "gl3/types.hpp"

namespace gl3 {

// ---------------------------------------------------------------------------
// Exact integer arithmetic: factorization, multiplicative functions, shifted
// divisor functions, Ramanujan and Kloosterman sums, and the combinatorial
// identities (Selberg, triple exponential sum) they satisfy.
// ---------------------------------------------------------------------------

struct Factorization {
  long long n = 1;
  std::vector<std::pair<long long, int>> factors;  // (p, e), p increasing
};

Factorization factorize(long long n);

int mobius(long long n);
long long euler_phi(long long n);

// Inverse of H modulo K, returned in [1, K]. Throws if gcd(H,K) != 1.
long long mod_inverse(long long H, long long K);

std::vector<long long> divisors(long long n);  // ascending

// e(k/K) from a per-modulus table; k is reduced mod K first so that long
// exponential sums stay phase-coherent.
class UnitRoots {
 public:
  explicit UnitRoots(long long K);
  long long modulus() const { return K_; }
  cdouble operator()(long long k) const {
    long long r = k % K_;
    if (r < 0) r += K_;
    return table_[static_cast<std::size_t>(r)];
  }

 private:
  long long K_;
  std::vector<cdouble> table_;
};

// Shifted divisor function tau_A(n) = sum over ordered factorizations
// n = n_1 ... n_r of prod n_i^{-A_i}. Multiplicative in n; each prime power
// is evaluated by dynamic programming over compositions of the exponent, so
// coincident shifts need no special casing.
cdouble divisor_tau(std::span<const cdouble> shifts, long long n);
cdouble divisor_tau(const ShiftTriple& shifts, long long n);

// tau_A(p^e) alone (used by the local factors g_A).
cdouble divisor_tau_prime_power(std::span<const cdouble> shifts, long long p,
                                int e);

// Unshifted tau_3 sieve: values for n = 1..N.
std::vector<double> tau3_sieve(long long N);

// Ramanujan sum R_K(n): closed form mu(K/(n,K)) * phi(K) / phi(K/(n,K)),
// and the direct sum over residues coprime to K.
double ramanujan_closed(long long K, long long n);
cdouble ramanujan_direct(long long K, long long n);

// Kloosterman sum S(a,b;c) by direct summation over x coprime to c.
cdouble kloosterman(long long a, long long b, long long c);

// Both sides of Selberg's identity S(a,b;q) = sum_{g|(a,b,q)} g S(1,ab/g^2;q/g).
struct IdentityPair {
  cdouble lhs;
  cdouble rhs;
  double abs_dev() const { return std::abs(lhs - rhs); }
};
IdentityPair selberg_identity(long long a, long long b, long long q);

// tau multiplicativity: tau_{-b,-g}(rg) vs
// sum_{h|(r,g)} mu(h) h^{b+g} tau_{-b,-g}(r/h) tau_{-b,-g}(g/h).
IdentityPair tau_multiplicativity(cdouble beta, cdouble gamma, long long r,
                                  long long g);

// Triple exponential sum sum_{L,M,N=1..K} e((H LMN + e1 lL + e2 mM + e3 nN)/K),
// direct triple loop, and the closed divisor-sum form
// K sum_{delta | (K,m,n)} delta S(l, -e1 e2 e3 Hbar (m/delta)(n/delta); K/delta).
cdouble triple_exp_sum_direct(long long H, long long K, long long l,
                              long long m, long long n,
                              const std::array<int, 3>& eps);
cdouble triple_exp_sum_closed(long long H, long long K, long long l,
                              long long m, long long n,
                              const std::array<int, 3>& eps);

}  // namespace gl3

#endif  // GL3_ARITH_HPP
