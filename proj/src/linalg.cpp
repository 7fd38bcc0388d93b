#include "cheb/linalg.hpp"

#include <algorithm>
#include <cmath>

namespace cheb {

std::vector<double> solve_gepp(RealMatrix A, std::vector<double> b) {
    const int n = A.rows;
    if (A.cols != n || static_cast<int>(b.size()) != n)
        fail(ErrorCode::validation_error, "solve_gepp requires a square system");

    double scale = 0.0;
    for (double v : A.a)
        scale = std::max(scale, std::abs(v));
    if (scale == 0.0)
        fail(ErrorCode::rank_deficient, "zero matrix");

    for (int k = 0; k < n; ++k) {
        int piv = k;
        for (int i = k + 1; i < n; ++i)
            if (std::abs(A(i, k)) > std::abs(A(piv, k)))
                piv = i;
        if (std::abs(A(piv, k)) < 1e-14 * scale)
            fail(ErrorCode::rank_deficient, "negligible pivot in leveled system");
        if (piv != k) {
            for (int j = k; j < n; ++j)
                std::swap(A(piv, j), A(k, j));
            std::swap(b[piv], b[k]);
        }
        for (int i = k + 1; i < n; ++i) {
            const double m = A(i, k) / A(k, k);
            if (m == 0.0)
                continue;
            for (int j = k + 1; j < n; ++j)
                A(i, j) -= m * A(k, j);
            b[i] -= m * b[k];
        }
    }
    std::vector<double> x(n);
    for (int i = n - 1; i >= 0; --i) {
        double s = b[i];
        for (int j = i + 1; j < n; ++j)
            s -= A(i, j) * x[j];
        x[i] = s / A(i, i);
    }
    return x;
}

std::vector<std::complex<double>> lsq_householder(ComplexMatrix A,
                                                  std::vector<std::complex<double>> b) {
    using C = std::complex<double>;
    const int m = A.rows, n = A.cols;
    if (m < n || static_cast<int>(b.size()) != m)
        fail(ErrorCode::lsq_failure, "underdetermined least-squares block");

    double scale = 0.0;
    for (const C& v : A.a)
        scale = std::max(scale, std::abs(v));
    if (scale == 0.0)
        fail(ErrorCode::lsq_failure, "zero design matrix");

    for (int k = 0; k < n; ++k) {
        double norm = 0.0;
        for (int i = k; i < m; ++i)
            norm += std::norm(A(i, k));
        norm = std::sqrt(norm);
        if (norm < 1e-14 * scale)
            fail(ErrorCode::lsq_failure, "rank-deficient least-squares block");

        // Householder vector v = x + sign(x_k)*norm*e_k, applied as I - 2 v v*/v*v.
        C alpha = A(k, k);
        const double aa = std::abs(alpha);
        const C phase = aa > 0.0 ? alpha / aa : C(1.0, 0.0);
        const C beta = phase * norm;
        A(k, k) += beta;
        double vv = 0.0;
        for (int i = k; i < m; ++i)
            vv += std::norm(A(i, k));
        if (vv == 0.0)
            fail(ErrorCode::lsq_failure, "degenerate Householder step");

        for (int j = k + 1; j < n; ++j) {
            C dot = 0.0;
            for (int i = k; i < m; ++i)
                dot += std::conj(A(i, k)) * A(i, j);
            const C f = 2.0 * dot / vv;
            for (int i = k; i < m; ++i)
                A(i, j) -= f * A(i, k);
        }
        {
            C dot = 0.0;
            for (int i = k; i < m; ++i)
                dot += std::conj(A(i, k)) * b[i];
            const C f = 2.0 * dot / vv;
            for (int i = k; i < m; ++i)
                b[i] -= f * A(i, k);
        }
        A(k, k) = -beta; // R diagonal
    }

    std::vector<C> x(n);
    for (int i = n - 1; i >= 0; --i) {
        C s = b[i];
        for (int j = i + 1; j < n; ++j)
            s -= A(i, j) * x[j];
        if (std::abs(A(i, i)) < 1e-300)
            fail(ErrorCode::lsq_failure, "singular R factor");
        x[i] = s / A(i, i);
    }
    return x;
}

double golden_section_max(const std::function<double(double)>& f, double a, double b,
                          double xtol) {
    constexpr double invphi = 0.6180339887498949;
    double x1 = b - invphi * (b - a);
    double x2 = a + invphi * (b - a);
    double f1 = f(x1), f2 = f(x2);
    while (b - a > xtol) {
        if (f1 < f2) {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + invphi * (b - a);
            f2 = f(x2);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - invphi * (b - a);
            f1 = f(x1);
        }
    }
    return 0.5 * (a + b);
}

} // namespace cheb
