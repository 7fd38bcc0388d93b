#ifndef CHEBKIT_CLOSED_FORMS_HPP
#define CHEBKIT_CLOSED_FORMS_HPP

#include "cheb/poly.hpp"
#include "cheb/sets.hpp"

namespace cheb {

enum class Exactness { exact, asymptotic };

struct ClosedFormResult {
    MonicPolynomial poly;
    double norm = 0.0;
    Exactness exactness = Exactness::exact;
    int degree = 0;
};

/// Monic Chebyshev polynomial of the first kind on [-1,1]; norm 2^{1-n}.
ClosedFormResult interval_cheb(int n);

enum class JacobiKind { second, third, fourth };

/// Monic Chebyshev polynomials for the kind-normalized Jacobi weights
/// sin(t), cos(t/2), sin(t/2) (x = cos t); weighted norm is exactly 2^{-n}.
ClosedFormResult jacobi_kind_cheb(JacobiKind kind, int n);

/// Markov's weighted Chebyshev polynomial for w = [prod(1-x/a_k)]^{-1/2}:
/// exact norm 2^{1-n} prod sqrt(1+rho_k^2) and the monic polynomial recovered
/// by dividing the explicit w*T values at n+1 Chebyshev nodes.
ClosedFormResult markov_cheb(int n, const MarkovWeight& poles);

/// rho_k with |rho_k| < 1 solving a = (rho + 1/rho)/2 (0 for a pole at
/// infinity). Throws BranchError when |rho| = 1 within 1e-12.
std::vector<Complex> markov_rho(const MarkovWeight& poles);

/// Explicit value of w(x) T_n^w(x) at x = cos(theta), theta in [0, pi].
double markov_weighted_value(int n, const MarkovWeight& poles, double theta);

struct AchieserNorms {
    double even_norm = 0.0; // t_{2n}(E(a)), exact
    double odd_norm = 0.0;  // t_{2n+1}(E(a)), asymptotic in n
};

/// Two-interval norms on E(a) = [-1,-a] u [a,1].
AchieserNorms achieser_norms(double a, int n);

/// T_{n m} of P^{-1}(base set) as base_poly composed with P; same norm.
ClosedFormResult preimage_cheb(const MonicPolynomial& P, const ClosedFormResult& base);

/// 2^{1-n} exp{(1/pi) int log w / sqrt(1-x^2)}: the asymptotic weighted norm
/// on [-1,1]. Jacobi and power-zero factors use the closed log-integral; the
/// markov weight is integrated by Gauss-Chebyshev quadrature with doubling.
double bernstein_rhs(const WeightDescriptor& w, int n);

/// Asymptotic Widom factor 2 cos^2(alpha/4) of the circular arc Gamma_alpha.
double thiran_detaille_limit(double alpha);

} // namespace cheb

#endif
