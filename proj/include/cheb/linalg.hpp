#ifndef CHEBKIT_LINALG_HPP
#define CHEBKIT_LINALG_HPP

#include <complex>
#include <functional>
#include <vector>

#include "cheb/errors.hpp"

namespace cheb {

/// Dense row-major real matrix, minimal.
struct RealMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<double> a;
    RealMatrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, 0.0) {}
    double& operator()(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
    double operator()(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }
};

struct ComplexMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<std::complex<double>> a;
    ComplexMatrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, 0.0) {}
    std::complex<double>& operator()(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
    std::complex<double> operator()(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }
};

/// Solve A x = b by Gaussian elimination with partial pivoting (A destroyed).
/// Throws RankDeficient when a pivot degenerates.
std::vector<double> solve_gepp(RealMatrix A, std::vector<double> b);

/// Least squares min ||A x - b||_2 via Householder QR (A, b destroyed).
/// Throws LSQFailure when R has a negligible diagonal entry.
std::vector<std::complex<double>> lsq_householder(ComplexMatrix A,
                                                  std::vector<std::complex<double>> b);

/// Maximum of a unimodal function on [a, b] by golden-section search.
/// Returns the abscissa of the maximum.
double golden_section_max(const std::function<double(double)>& f, double a, double b,
                          double xtol);

} // namespace cheb

#endif
