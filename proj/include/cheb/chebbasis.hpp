#ifndef CHEBKIT_CHEBBASIS_HPP
#define CHEBKIT_CHEBBASIS_HPP

#include <cmath>
#include <vector>

namespace cheb {

/// First-kind Chebyshev nodes cos((2j+1)pi/2N), j = 0..N-1 (descending in x).
inline std::vector<double> first_kind_nodes(int N) {
    std::vector<double> x(N);
    for (int j = 0; j < N; ++j)
        x[j] = std::cos((2 * j + 1) * M_PI / (2.0 * N));
    return x;
}

/// Chebyshev coefficients c_k with f(x) = sum c_k T_k(x) from values at the
/// first-kind nodes (same order as first_kind_nodes).
inline std::vector<double> values_to_chebyshev(const std::vector<double>& f) {
    const int N = static_cast<int>(f.size());
    std::vector<double> c(N, 0.0);
    for (int k = 0; k < N; ++k) {
        double s = 0.0;
        for (int j = 0; j < N; ++j)
            s += f[j] * std::cos(k * (2 * j + 1) * M_PI / (2.0 * N));
        c[k] = 2.0 * s / N;
    }
    c[0] *= 0.5;
    return c;
}

/// Power-basis coefficients (ascending) of sum c_k T_k.
inline std::vector<double> chebyshev_to_power(const std::vector<double>& c) {
    const int N = static_cast<int>(c.size());
    std::vector<double> out(N, 0.0);
    std::vector<double> tkm1{1.0}, tk{0.0, 1.0};
    if (N > 0)
        out[0] += c[0];
    if (N > 1)
        out[1] += c[1];
    for (int k = 2; k < N; ++k) {
        std::vector<double> tkp1(k + 1, 0.0);
        for (int i = 0; i < k; ++i)
            tkp1[i + 1] += 2.0 * tk[i];
        for (size_t i = 0; i < tkm1.size(); ++i)
            tkp1[i] -= tkm1[i];
        for (int i = 0; i <= k; ++i)
            out[i] += c[k] * tkp1[i];
        tkm1 = std::move(tk);
        tk = std::move(tkp1);
    }
    return out;
}

/// Coefficients of p(a x + b) for ascending-coefficient p.
inline std::vector<double> substitute_affine(const std::vector<double>& p, double a, double b) {
    if (p.empty())
        return {};
    std::vector<double> acc{p.back()};
    for (int k = static_cast<int>(p.size()) - 2; k >= 0; --k) {
        std::vector<double> next(acc.size() + 1, 0.0);
        for (size_t i = 0; i < acc.size(); ++i) {
            next[i + 1] += acc[i] * a;
            next[i] += acc[i] * b;
        }
        next[0] += p[k];
        acc = std::move(next);
    }
    return acc;
}

} // namespace cheb

#endif
