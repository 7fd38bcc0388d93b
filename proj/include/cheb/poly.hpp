#ifndef CHEBKIT_POLY_HPP
#define CHEBKIT_POLY_HPP

#include <complex>
#include <vector>

#include "cheb/errors.hpp"

namespace cheb {

using Complex = std::complex<double>;
using CoeffList = std::vector<Complex>; // ascending powers

/// Monic polynomial z^n + a_{n-1} z^{n-1} + ... + a_0, stored by its low-order
/// coefficients a_0..a_{n-1}. Degree 0 is the constant 1 (empty product).
/// Immutable after construction; finite coefficients enforced.
class MonicPolynomial {
public:
    MonicPolynomial() = default; // degree 0, the constant 1

    explicit MonicPolynomial(CoeffList low_coeffs);

    /// Monic polynomial with the given roots, expanded to coefficients.
    static MonicPolynomial from_roots(const std::vector<Complex>& roots);

    int degree() const { return static_cast<int>(low_.size()); }
    const CoeffList& low_coeffs() const { return low_; }

    /// Full ascending coefficient list a_0..a_{n-1},1.
    CoeffList coeffs() const;

    bool operator==(const MonicPolynomial& other) const { return low_ == other.low_; }

private:
    CoeffList low_;
};

/// Horner evaluation of p at z.
Complex eval(const MonicPolynomial& p, Complex z);

/// Horner evaluation of a general ascending coefficient list.
Complex eval(const CoeffList& coeffs, Complex z);

/// Derivative as a general (non-monic) ascending coefficient list; degree n-1
/// with leading coefficient n. Requires degree >= 1.
CoeffList derivative(const MonicPolynomial& p);
CoeffList derivative(const CoeffList& coeffs);

/// Composition p(q(z)); the result is monic of degree deg(p)*deg(q).
MonicPolynomial compose(const MonicPolynomial& p, const MonicPolynomial& q);

struct RootOptions {
    int max_iterations = 500;
    double tolerance = 1e-12; // convergence when max update < tol*(1+|root|)
    std::vector<Complex> initial{}; // warm-start guesses (size must equal degree)
    bool sorted = true;             // sort output by (re, im); disable to keep warm-start order
};

/// All n roots counted with multiplicity, by Aberth-Ehrlich simultaneous
/// iteration from perturbed-circle initial guesses. Sorted by (re, im).
/// Throws NonConvergence if the iteration cap is hit.
std::vector<Complex> roots(const MonicPolynomial& p, const RootOptions& opts = {});

/// Roots of a general polynomial given by ascending coefficients (leading
/// coefficient must be nonzero); normalizes to monic internally.
std::vector<Complex> roots(const CoeffList& coeffs, const RootOptions& opts = {});

} // namespace cheb

#endif
