#include "cheb/poly.hpp"

#include <algorithm>
#include <cmath>

namespace cheb {

namespace {

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

} // namespace

MonicPolynomial::MonicPolynomial(CoeffList low_coeffs) : low_(std::move(low_coeffs)) {
    for (const Complex& c : low_) {
        if (!finite(c))
            fail(ErrorCode::validation_error, "non-finite polynomial coefficient");
    }
}

MonicPolynomial MonicPolynomial::from_roots(const std::vector<Complex>& rts) {
    CoeffList c{1.0};
    for (Complex r : rts) {
        c.push_back(0.0);
        for (int k = static_cast<int>(c.size()) - 1; k >= 1; --k)
            c[k] = c[k - 1] - r * c[k];
        c[0] = -r * c[0];
    }
    c.pop_back(); // drop the implied leading 1
    return MonicPolynomial(std::move(c));
}

CoeffList MonicPolynomial::coeffs() const {
    CoeffList full = low_;
    full.push_back(1.0);
    return full;
}

Complex eval(const MonicPolynomial& p, Complex z) {
    Complex acc = 1.0;
    for (int k = p.degree() - 1; k >= 0; --k)
        acc = acc * z + p.low_coeffs()[k];
    return acc;
}

Complex eval(const CoeffList& coeffs, Complex z) {
    if (coeffs.empty())
        return 0.0;
    Complex acc = coeffs.back();
    for (int k = static_cast<int>(coeffs.size()) - 2; k >= 0; --k)
        acc = acc * z + coeffs[k];
    return acc;
}

CoeffList derivative(const MonicPolynomial& p) { return derivative(p.coeffs()); }

CoeffList derivative(const CoeffList& coeffs) {
    if (coeffs.size() <= 1)
        fail(ErrorCode::domain_error, "derivative requires degree >= 1");
    CoeffList d(coeffs.size() - 1);
    for (size_t k = 1; k < coeffs.size(); ++k)
        d[k - 1] = static_cast<double>(k) * coeffs[k];
    return d;
}

MonicPolynomial compose(const MonicPolynomial& p, const MonicPolynomial& q) {
    const CoeffList qc = q.coeffs();
    // Horner in polynomial arithmetic: acc <- acc*q + a_k.
    CoeffList acc{1.0};
    for (int k = p.degree() - 1; k >= 0; --k) {
        CoeffList next(acc.size() + qc.size() - 1, 0.0);
        for (size_t i = 0; i < acc.size(); ++i)
            for (size_t j = 0; j < qc.size(); ++j)
                next[i + j] += acc[i] * qc[j];
        next[0] += p.low_coeffs()[k];
        acc = std::move(next);
    }
    acc.pop_back(); // leading coefficient is exactly 1 for monic p, q
    return MonicPolynomial(std::move(acc));
}

std::vector<Complex> roots(const MonicPolynomial& p, const RootOptions& opts) {
    const int n = p.degree();
    if (n < 1)
        fail(ErrorCode::domain_error, "roots requires degree >= 1");
    const CoeffList full = p.coeffs();
    const CoeffList der = derivative(full);

    // Perturbed circle around the root centroid, radius from the Cauchy bound.
    const Complex centroid = -p.low_coeffs()[n - 1] / static_cast<double>(n);
    double radius = 0.0;
    for (const Complex& c : p.low_coeffs())
        radius = std::max(radius, std::abs(c));
    radius = 1.0 + radius;

    std::vector<Complex> z(n);
    if (static_cast<int>(opts.initial.size()) == n) {
        z = opts.initial;
    } else {
        for (int j = 0; j < n; ++j) {
            const double phi = 2.0 * M_PI * j / n + 0.3 + 0.7 / n;
            const double rj = radius * (0.8 + 0.01 * std::cos(7.0 * phi));
            z[j] = centroid + rj * Complex(std::cos(phi), std::sin(phi));
        }
    }

    for (int it = 0; it < opts.max_iterations; ++it) {
        double worst = 0.0;
        for (int j = 0; j < n; ++j) {
            const Complex pj = eval(full, z[j]);
            if (pj == Complex(0.0, 0.0))
                continue;
            const Complex dj = eval(der, z[j]);
            Complex sum = 0.0;
            for (int k = 0; k < n; ++k) {
                if (k == j)
                    continue;
                Complex diff = z[j] - z[k];
                if (std::abs(diff) < 1e-300)
                    diff = Complex(1e-300, 0.0);
                sum += 1.0 / diff;
            }
            const Complex newton = dj == Complex(0.0, 0.0) ? Complex(0.0, 0.0) : pj / dj;
            Complex step;
            if (newton == Complex(0.0, 0.0)) {
                // Stationary point of p: nudge off it deterministically.
                step = -Complex(1.0, 1.0) * (1e-8 * (1.0 + std::abs(z[j])));
            } else {
                const Complex denom = 1.0 - newton * sum;
                step = std::abs(denom) < 1e-300 ? newton : newton / denom;
            }
            z[j] -= step;
            worst = std::max(worst, std::abs(step) / (1.0 + std::abs(z[j])));
        }
        if (worst < opts.tolerance) {
            // Newton polish pushes simple-root residuals to the noise floor;
            // on root clusters the steps are tiny and harmless.
            for (int sweep = 0; sweep < 3; ++sweep)
                for (int j = 0; j < n; ++j) {
                    const Complex dj = eval(der, z[j]);
                    if (std::abs(dj) > 1e-300)
                        z[j] -= eval(full, z[j]) / dj;
                }
            if (opts.sorted)
                std::sort(z.begin(), z.end(), [](Complex a, Complex b) {
                    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
                });
            return z;
        }
    }
    fail(ErrorCode::non_convergence, "Aberth iteration did not converge within cap");
}

std::vector<Complex> roots(const CoeffList& coeffs, const RootOptions& opts) {
    if (coeffs.size() < 2)
        fail(ErrorCode::domain_error, "roots requires degree >= 1");
    const Complex lead = coeffs.back();
    if (std::abs(lead) == 0.0)
        fail(ErrorCode::validation_error, "zero leading coefficient");
    CoeffList low(coeffs.begin(), coeffs.end() - 1);
    for (Complex& c : low)
        c /= lead;
    return roots(MonicPolynomial(std::move(low)), opts);
}

const char* error_code_name(ErrorCode c) {
    switch (c) {
    case ErrorCode::parse_error: return "ParseError";
    case ErrorCode::validation_error: return "ValidationError";
    case ErrorCode::non_convergence: return "NonConvergence";
    case ErrorCode::trace_error: return "TraceError";
    case ErrorCode::domain_error: return "DomainError";
    case ErrorCode::degree_error: return "DegreeError";
    case ErrorCode::branch_error: return "BranchError";
    case ErrorCode::rank_deficient: return "RankDeficient";
    case ErrorCode::stalled: return "Stalled";
    case ErrorCode::bad_reference: return "BadReference";
    case ErrorCode::lsq_failure: return "LSQFailure";
    case ErrorCode::no_progress: return "NoProgress";
    case ErrorCode::integral_diverged: return "IntegralDiverged";
    case ErrorCode::quadrature_diverged: return "QuadratureDiverged";
    case ErrorCode::estimate_unstable: return "EstimateUnstable";
    case ErrorCode::series_unstable: return "SeriesUnstable";
    case ErrorCode::unsupported_series: return "UnsupportedSeries";
    case ErrorCode::io_error: return "IOError";
    }
    return "UnknownError";
}

} // namespace cheb
