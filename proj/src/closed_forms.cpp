#include "cheb/closed_forms.hpp"

#include <algorithm>
#include <cmath>

#include "cheb/chebbasis.hpp"

namespace cheb {

namespace {

// Classical three-term recurrence X_{k+1} = 2x X_k - X_{k-1} from the given
// first two members; integer coefficients, exact in doubles for n <= ~45.
std::vector<double> recurrence_poly(int n, std::vector<double> x0, std::vector<double> x1) {
    if (n == 0)
        return x0;
    std::vector<double> prev = std::move(x0), cur = std::move(x1);
    for (int k = 2; k <= n; ++k) {
        std::vector<double> next(k + 1, 0.0);
        for (size_t i = 0; i < cur.size(); ++i)
            next[i + 1] += 2.0 * cur[i];
        for (size_t i = 0; i < prev.size(); ++i)
            next[i] -= prev[i];
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

MonicPolynomial scaled_monic(const std::vector<double>& coeffs, double scale) {
    CoeffList low(coeffs.size() - 1);
    for (size_t i = 0; i + 1 < coeffs.size(); ++i)
        low[i] = coeffs[i] * scale;
    return MonicPolynomial(std::move(low));
}

} // namespace

ClosedFormResult interval_cheb(int n) {
    if (n < 1)
        fail(ErrorCode::degree_error, "interval_cheb requires n >= 1");
    const auto t = recurrence_poly(n, {1.0}, {0.0, 1.0});
    const double scale = std::ldexp(1.0, 1 - n); // leading coeff of T_n is 2^{n-1}
    return {scaled_monic(t, scale), scale, Exactness::exact, n};
}

ClosedFormResult jacobi_kind_cheb(JacobiKind kind, int n) {
    if (n < 1)
        fail(ErrorCode::degree_error, "jacobi_kind_cheb requires n >= 1");
    std::vector<double> first;
    switch (kind) {
    case JacobiKind::second: first = {0.0, 2.0}; break; // sin 2t / sin t
    case JacobiKind::third: first = {-1.0, 2.0}; break; // cos(3t/2)/cos(t/2)
    case JacobiKind::fourth: first = {1.0, 2.0}; break; // sin(3t/2)/sin(t/2)
    }
    const auto p = recurrence_poly(n, {1.0}, std::move(first));
    const double scale = std::ldexp(1.0, -n); // leading coefficient is 2^n
    return {scaled_monic(p, scale), scale, Exactness::exact, n};
}

std::vector<Complex> markov_rho(const MarkovWeight& w) {
    std::vector<Complex> rho;
    for (Complex a : w.poles) {
        const Complex s = std::sqrt(a * a - 1.0);
        Complex r = a - s;
        if (std::abs(r) > 1.0)
            r = a + s;
        if (std::abs(std::abs(r) - 1.0) < 1e-12)
            fail(ErrorCode::branch_error, "pole maps to the unit circle");
        rho.push_back(r);
    }
    if (w.pole_at_infinity)
        rho.push_back(Complex(0.0, 0.0));
    return rho;
}

namespace {

int markov_half_count(const MarkovWeight& w) {
    const size_t total = w.poles.size() + (w.pole_at_infinity ? 1 : 0);
    if (total == 0 || total % 2 != 0)
        fail(ErrorCode::validation_error, "markov weight needs an even pole count");
    return static_cast<int>(total / 2);
}

// prod sqrt(1 + rho_k^2): positive real for a conjugation-closed pole set.
double markov_amplitude(const std::vector<Complex>& rho) {
    Complex prod = 1.0;
    for (Complex r : rho)
        prod *= (1.0 + r * r);
    if (std::abs(prod.imag()) > 1e-9 * std::max(1.0, std::abs(prod.real())) || prod.real() <= 0.0)
        fail(ErrorCode::branch_error, "pole set is not conjugation-closed");
    return std::sqrt(prod.real());
}

// Continuous argument of the Blaschke-type factor (e^{it}-rho)/(1-e^{it}rho)
// from t = 0 (where it equals 1) to t = theta, by stepwise accumulation.
double factor_arg(Complex rho, double theta) {
    const double closeness = 1.0 - std::abs(rho);
    const int steps = std::max(8, static_cast<int>(std::ceil(theta / (0.01 * closeness))));
    auto factor = [&](double t) {
        const Complex z(std::cos(t), std::sin(t));
        return (z - rho) / (1.0 - z * rho);
    };
    double acc = 0.0;
    Complex prev = factor(0.0);
    for (int s = 1; s <= steps; ++s) {
        const Complex cur = factor(theta * s / steps);
        acc += std::arg(cur / prev);
        prev = cur;
    }
    return acc;
}

double markov_weight_value(const MarkovWeight& w, double x) {
    Complex prod = 1.0;
    for (Complex a : w.poles)
        prod *= (1.0 - x / a);
    return 1.0 / std::sqrt(prod.real());
}

} // namespace

double markov_weighted_value(int n, const MarkovWeight& w, double theta) {
    const int m = markov_half_count(w);
    const auto rho = markov_rho(w);
    double phase = (n - m) * theta;
    for (Complex r : rho)
        phase += 0.5 * factor_arg(r, theta);
    return std::ldexp(markov_amplitude(rho), 1 - n) * std::cos(phase);
}

ClosedFormResult markov_cheb(int n, const MarkovWeight& w) {
    const int m = markov_half_count(w);
    if (n <= m)
        fail(ErrorCode::degree_error, "markov_cheb requires n > m");
    const auto rho = markov_rho(w);
    const double norm = std::ldexp(markov_amplitude(rho), 1 - n);

    // Recover T_n by dividing w out of the explicit values at n+1 nodes.
    const int N = n + 1;
    std::vector<double> values(N);
    const auto nodes = first_kind_nodes(N);
    for (int j = 0; j < N; ++j) {
        const double theta = (2 * j + 1) * M_PI / (2.0 * N);
        values[j] = markov_weighted_value(n, w, theta) / markov_weight_value(w, nodes[j]);
    }
    auto cheb = values_to_chebyshev(values);
    auto power = chebyshev_to_power(cheb);
    const double lead = power[n];
    if (std::abs(lead - 1.0) > 1e-6)
        fail(ErrorCode::branch_error, "markov interpolation lost monicity");
    CoeffList low(n);
    for (int k = 0; k < n; ++k)
        low[k] = power[k] / lead;
    return {MonicPolynomial(std::move(low)), norm, Exactness::exact, n};
}

AchieserNorms achieser_norms(double a, int n) {
    if (!(a > 0.0 && a < 1.0))
        fail(ErrorCode::domain_error, "achieser gap parameter must lie in (0,1)");
    if (n < 1)
        fail(ErrorCode::degree_error, "achieser_norms requires n >= 1");
    const double q = 1.0 - a * a;
    AchieserNorms out;
    out.even_norm = std::ldexp(std::pow(q, n), 1 - 2 * n);
    out.odd_norm = std::ldexp(std::pow(q, n + 0.5) * std::sqrt((1.0 + a) / (1.0 - a)), -2 * n);
    return out;
}

ClosedFormResult preimage_cheb(const MonicPolynomial& P, const ClosedFormResult& base) {
    if (P.degree() < 1)
        fail(ErrorCode::degree_error, "preimage map needs degree >= 1");
    ClosedFormResult out;
    out.poly = compose(base.poly, P);
    out.norm = base.norm;
    out.exactness = base.exactness;
    out.degree = base.degree * P.degree();
    return out;
}

namespace {

// log(|b + sqrt(b^2-1)| / 2): the arcsine-weighted mean of log|x - b|.
double log_mean_distance(double b) {
    const Complex s = std::sqrt(Complex(b * b - 1.0, 0.0));
    double mag = std::abs(Complex(b, 0.0) + s);
    if (mag < 1.0)
        mag = 1.0 / mag;
    return std::log(0.5 * mag);
}

double log_integral(const WeightDescriptor& w);

double quadrature_log_integral(const MarkovWeight& w) {
    double prev = 0.0;
    bool have_prev = false;
    for (int N = 64; N <= (1 << 20); N *= 2) {
        double s = 0.0;
        for (int j = 0; j < N; ++j) {
            const double x = std::cos((2 * j + 1) * M_PI / (2.0 * N));
            s += std::log(markov_weight_value(w, x));
        }
        s /= N;
        if (!std::isfinite(s))
            fail(ErrorCode::integral_diverged, "log integrand is not integrable");
        if (have_prev && std::abs(s - prev) < 1e-9 * std::max(1.0, std::abs(s)))
            return s;
        prev = s;
        have_prev = true;
    }
    fail(ErrorCode::integral_diverged, "log-integral doubling test failed");
}

double log_integral(const WeightDescriptor& w) {
    if (w.is<OneWeight>())
        return 0.0;
    if (const auto* jac = w.get_if<JacobiWeight>())
        return -(jac->alpha + jac->beta) * std::log(2.0);
    if (const auto* m = w.get_if<MarkovWeight>())
        return quadrature_log_integral(*m);
    if (w.is_power_zeros()) {
        const PowerZerosWeight& pz = w.power_zeros();
        double s = log_integral(pz.base);
        for (const auto& [b, alpha] : pz.factors)
            s += alpha * log_mean_distance(b);
        return s;
    }
    fail(ErrorCode::domain_error, "bernstein_rhs needs a weight defined on [-1,1]");
}

} // namespace

double bernstein_rhs(const WeightDescriptor& w, int n) {
    if (n < 1)
        fail(ErrorCode::degree_error, "bernstein_rhs requires n >= 1");
    const double I = log_integral(w);
    if (!std::isfinite(I))
        fail(ErrorCode::integral_diverged, "log integral diverged");
    return std::ldexp(std::exp(I), 1 - n);
}

double thiran_detaille_limit(double alpha) {
    if (!(alpha > 0.0 && alpha <= M_PI))
        fail(ErrorCode::domain_error, "arc half-angle must lie in (0, pi]");
    const double c = std::cos(alpha / 4.0);
    return 2.0 * c * c;
}

} // namespace cheb
