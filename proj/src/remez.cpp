#include "cheb/remez.hpp"

#include <algorithm>
#include <cmath>

#include "cheb/chebbasis.hpp"
#include "cheb/linalg.hpp"

namespace cheb {

namespace {

// Leveled polynomial on a reference, kept in barycentric form. With nodes
// ascending, beta_j = |beta_j| (-1)^{n-j}, so the alternation values
// v_j = (-1)^{n-j} h / w_j give the monic leading coefficient
// sum beta_j v_j = h * sum |beta_j| / w_j = 1, i.e. h = 1/sum(|beta_j|/w_j).
// All-positive sums keep full relative accuracy even for h ~ 2^{1-n}.
struct Leveled {
    std::vector<double> x;        // reference, ascending
    std::vector<double> w;        // weight at the reference
    std::vector<double> beta_abs; // |1 / prod_{k!=j} (x_j - x_k)|
    double h = 0.0;
    int n = 0;

    double value(double t) const { // T(t)
        double num = 0.0, den = 0.0;
        const int m = static_cast<int>(x.size());
        for (int j = 0; j < m; ++j) {
            const double d = t - x[j];
            if (d == 0.0)
                return sign(j) * h / w[j];
            const double base = beta_abs[j] / d;
            num += base * (h / w[j]); // beta_j v_j = |beta_j| h / w_j
            den += base * sign(j);    // beta_j = |beta_j| (-1)^{n-j}
        }
        return num / den;
    }
    double sign(int j) const { return ((n - j) % 2) ? -1.0 : 1.0; }
};

Leveled make_leveled(const std::vector<double>& ref, const std::vector<double>& wref, int n) {
    Leveled lv;
    lv.x = ref;
    lv.w = wref;
    lv.n = n;
    const int m = static_cast<int>(ref.size());
    lv.beta_abs.resize(m);
    double inv_h = 0.0;
    for (int j = 0; j < m; ++j) {
        double prod = 1.0;
        for (int k = 0; k < m; ++k)
            if (k != j)
                prod *= (ref[j] - ref[k]);
        if (prod == 0.0)
            fail(ErrorCode::bad_reference, "repeated reference point");
        lv.beta_abs[j] = 1.0 / std::abs(prod);
        if (!(wref[j] > 0.0))
            fail(ErrorCode::rank_deficient, "weight vanishes at a reference point");
        inv_h += lv.beta_abs[j] / wref[j];
    }
    if (!(inv_h > 0.0) || !std::isfinite(inv_h))
        fail(ErrorCode::rank_deficient, "leveled system degenerate");
    lv.h = 1.0 / inv_h;
    return lv;
}

struct Segment {
    size_t begin = 0, end = 0; // grid index range [begin, end)
    double lo = 0.0, hi = 0.0;
};

struct WorkGrid {
    std::vector<double> x;
    std::vector<double> w;
    std::vector<Segment> segments;
};

WorkGrid build_grid(const IntervalUnion& set, const WeightDescriptor& weight, int budget) {
    SetDescriptor desc{set};
    Grid g = discretize(desc, budget);
    WorkGrid out;
    out.x.reserve(g.points.size());
    for (Complex z : g.points)
        out.x.push_back(z.real());
    out.w = weights_on_grid(weight, g);

    size_t pos = 0;
    for (const auto& [l, r] : set.intervals) {
        Segment s;
        s.begin = pos;
        s.lo = l;
        s.hi = r;
        while (pos < out.x.size() && out.x[pos] <= r + 1e-15 * (1.0 + std::abs(r)))
            ++pos;
        s.end = pos;
        out.segments.push_back(s);
    }
    return out;
}

bool weight_is_pointwise(const WeightDescriptor& w) { return !w.is<SamplesWeight>(); }

// Candidate local maxima of |err| per segment (segment ends included).
std::vector<size_t> local_maxima(const WorkGrid& grid, const std::vector<double>& err) {
    std::vector<size_t> out;
    for (const Segment& s : grid.segments) {
        for (size_t i = s.begin; i < s.end; ++i) {
            const double v = std::abs(err[i]);
            const bool left_ok = (i == s.begin) || std::abs(err[i - 1]) <= v;
            const bool right_ok = (i + 1 == s.end) || std::abs(err[i + 1]) < v;
            if (left_ok && right_ok && v > 0.0)
                out.push_back(i);
        }
    }
    return out;
}

std::vector<size_t> alternating_chain(const std::vector<size_t>& cand,
                                      const std::vector<double>& err, int n) {
    std::vector<size_t> chain;
    for (size_t i : cand) {
        const double e = err[i];
        if (e == 0.0)
            continue;
        if (chain.empty() || (e > 0.0) != (err[chain.back()] > 0.0)) {
            chain.push_back(i);
        } else if (std::abs(e) > std::abs(err[chain.back()])) {
            chain.back() = i; // strict improvement keeps the leftmost on ties
        }
    }
    const size_t want = static_cast<size_t>(n) + 1;
    if (chain.size() < want)
        fail(ErrorCode::stalled, "no alternating selection of n+1 extrema on the grid");
    size_t gmax = chain[0];
    for (size_t i : chain)
        if (std::abs(err[i]) > std::abs(err[gmax]))
            gmax = i;
    while (chain.size() > want) {
        const bool drop_front = chain.front() != gmax &&
                                (chain.back() == gmax ||
                                 std::abs(err[chain.front()]) <= std::abs(err[chain.back()]));
        if (drop_front)
            chain.erase(chain.begin());
        else
            chain.pop_back();
    }
    return chain;
}

} // namespace

std::pair<CoeffList, double> leveled_system_solve(const std::vector<double>& reference,
                                                  const WeightDescriptor& w, int n) {
    const int m = static_cast<int>(reference.size());
    if (m != n + 1)
        fail(ErrorCode::bad_reference, "leveled system needs an n+1 point reference");
    for (int j = 1; j < m; ++j)
        if (!(reference[j] > reference[j - 1]))
            fail(ErrorCode::bad_reference, "reference must be strictly increasing");

    RealMatrix A(m, m);
    std::vector<double> b(m);
    for (int j = 0; j < m; ++j) {
        const double wj = weight_eval(w, reference[j]);
        double xp = 1.0;
        for (int k = 0; k < n; ++k) {
            A(j, k) = wj * xp;
            xp *= reference[j];
        }
        A(j, n) = ((n - j) % 2) ? 1.0 : -1.0; // moves (-1)^{n-j} h to the left side
        b[j] = -wj * xp;
    }
    auto u = solve_gepp(std::move(A), std::move(b));
    double h = u[n];
    CoeffList low(n);
    for (int k = 0; k < n; ++k)
        low[k] = u[k];
    if (h < 0.0)
        h = -h; // parity flip of the sign pattern
    return {std::move(low), h};
}

std::vector<double> exchange_step(const std::vector<double>& grid_x,
                                  const std::vector<double>& grid_err, int n) {
    if (grid_x.size() != grid_err.size() || grid_x.size() < static_cast<size_t>(n) + 2)
        fail(ErrorCode::bad_reference, "exchange needs at least n+2 grid points");
    WorkGrid g;
    g.x = grid_x;
    Segment s;
    s.begin = 0;
    s.end = grid_x.size();
    g.segments.push_back(s);
    auto cand = local_maxima(g, grid_err);
    auto chain = alternating_chain(cand, grid_err, n);
    std::vector<double> out;
    out.reserve(chain.size());
    for (size_t i : chain)
        out.push_back(grid_x[i]);
    return out;
}

namespace {

std::vector<double> initial_reference(const WorkGrid& grid, int n) {
    const double lo = grid.segments.front().lo, hi = grid.segments.back().hi;
    const double mid = 0.5 * (lo + hi), half = 0.5 * (hi - lo);
    std::vector<double> ref;
    std::vector<char> used(grid.x.size(), 0);
    for (int j = 0; j <= n; ++j) {
        const double target = mid - half * std::cos(M_PI * j / n);
        auto it = std::lower_bound(grid.x.begin(), grid.x.end(), target);
        size_t idx = static_cast<size_t>(it - grid.x.begin());
        if (idx == grid.x.size())
            --idx;
        if (idx > 0 && std::abs(grid.x[idx - 1] - target) < std::abs(grid.x[idx] - target))
            --idx;
        // snap to the nearest unused grid point with nonzero weight
        size_t lo_i = idx, hi_i = idx;
        while (true) {
            if (hi_i < grid.x.size() && !used[hi_i] && grid.w[hi_i] > 0.0) {
                idx = hi_i;
                break;
            }
            if (lo_i > 0 && !used[lo_i - 1] && grid.w[lo_i - 1] > 0.0) {
                idx = lo_i - 1;
                --lo_i;
                break;
            }
            if (hi_i < grid.x.size())
                ++hi_i;
            else if (lo_i == 0)
                fail(ErrorCode::bad_reference, "not enough usable grid points for a reference");
        }
        used[idx] = 1;
        ref.push_back(grid.x[idx]);
    }
    std::sort(ref.begin(), ref.end());
    return ref;
}

} // namespace

ChebSolution solve_real(const IntervalUnion& set, const WeightDescriptor& weight, int n,
                        const RemezOptions& opts) {
    if (n < 1 || n > 48)
        fail(ErrorCode::degree_error, "solve_real supports degrees 1..48");
    const double tol = opts.tol > 0.0 ? opts.tol : 1e-10;
    int budget = opts.grid_budget > 0 ? opts.grid_budget : 64 * (n + 2);
    const bool pointwise = weight_is_pointwise(weight);

    WorkGrid grid = build_grid(set, weight, budget);
    if (grid.x.size() < static_cast<size_t>(n) + 2)
        fail(ErrorCode::bad_reference, "grid has fewer than n+2 candidate points");
    {
        size_t nonzero = 0;
        for (double wv : grid.w)
            nonzero += wv > 0.0;
        if (nonzero < static_cast<size_t>(n) + 1)
            fail(ErrorCode::rank_deficient, "weight vanishes on all but fewer than n+1 points");
    }

    std::vector<double> ref =
        opts.initial_reference.empty() ? initial_reference(grid, n) : opts.initial_reference;

    Leveled lv;
    double h_prev = 0.0;
    int iterations = 0;
    int doublings = 0;
    bool certified = false;

    while (!certified) {
        bool converged = false;
        for (; iterations < opts.max_iterations; ++iterations) {
            std::vector<double> wref(ref.size());
            for (size_t j = 0; j < ref.size(); ++j) {
                double wv = pointwise ? weight_eval(weight, ref[j]) : 0.0;
                if (!pointwise) {
                    auto it = std::lower_bound(grid.x.begin(), grid.x.end(), ref[j]);
                    wv = grid.w[std::min<size_t>(it - grid.x.begin(), grid.x.size() - 1)];
                }
                wref[j] = wv;
            }
            lv = make_leveled(ref, wref, n);
            if (lv.h < h_prev * (1.0 - 1e-9))
                fail(ErrorCode::stalled, "leveled error decreased across an exchange");
            h_prev = lv.h;

            std::vector<double> err(grid.x.size());
            double sup = 0.0;
            for (size_t i = 0; i < grid.x.size(); ++i) {
                err[i] = grid.w[i] == 0.0 ? 0.0 : grid.w[i] * lv.value(grid.x[i]);
                sup = std::max(sup, std::abs(err[i]));
            }
            if (sup <= (1.0 + tol) * lv.h) {
                converged = true;
                break;
            }

            auto cand = local_maxima(grid, err);
            auto chain = alternating_chain(cand, err, n);
            std::vector<double> next;
            next.reserve(chain.size());
            for (size_t ci : chain) {
                double x = grid.x[ci];
                if (pointwise) {
                    // polish the extremum off-grid inside its segment
                    const Segment* seg = nullptr;
                    for (const Segment& s : grid.segments)
                        if (ci >= s.begin && ci < s.end)
                            seg = &s;
                    double a = ci > seg->begin ? grid.x[ci - 1] : seg->lo;
                    double b = ci + 1 < seg->end ? grid.x[ci + 1] : seg->hi;
                    a = std::max(a, seg->lo);
                    b = std::min(b, seg->hi);
                    if (b > a) {
                        const double span = grid.segments.back().hi - grid.segments.front().lo;
                        x = golden_section_max(
                            [&](double t) {
                                return weight_eval(weight, t) * std::abs(lv.value(t));
                            },
                            a, b, 1e-13 * std::max(1.0, span));
                        const double polished = weight_eval(weight, x) * std::abs(lv.value(x));
                        if (polished < std::abs(err[ci]))
                            x = grid.x[ci];
                    }
                }
                next.push_back(x);
            }
            std::sort(next.begin(), next.end());
            next.erase(std::unique(next.begin(), next.end()), next.end());
            if (next.size() != static_cast<size_t>(n) + 1)
                fail(ErrorCode::stalled, "exchange produced a degenerate reference");

            double moved = 0.0;
            for (size_t j = 0; j < next.size(); ++j)
                moved = std::max(moved, std::abs(next[j] - ref[j]));
            ref = std::move(next);
            if (moved <= 1e-15 * std::max(1.0, std::abs(grid.segments.back().hi))) {
                ++iterations;
                converged = true;
                break;
            }
        }
        if (!converged)
            fail(ErrorCode::stalled, "exchange cycled beyond the iteration cap");

        // off-grid certificate on a 4x finer verification grid
        if (!pointwise) {
            certified = true;
            break;
        }
        WorkGrid fine = build_grid(set, weight, 4 * budget);
        double fine_sup = 0.0;
        for (size_t i = 0; i < fine.x.size(); ++i)
            fine_sup = std::max(fine_sup, fine.w[i] * std::abs(lv.value(fine.x[i])));
        if (fine_sup <= (1.0 + tol) * lv.h) {
            certified = true;
        } else if (doublings < opts.max_grid_doublings) {
            ++doublings;
            budget *= 2;
            grid = build_grid(set, weight, budget);
        } else {
            fail(ErrorCode::stalled, "certificate failed off-grid after refinement");
        }
    }

    ChebSolution sol;
    sol.reference = ref;
    sol.signs.resize(ref.size());
    sol.reference_values.resize(ref.size());
    for (size_t j = 0; j < ref.size(); ++j) {
        sol.signs[j] = ((n - static_cast<int>(j)) % 2) ? -1 : 1;
        sol.reference_values[j] = sol.signs[j] * lv.h;
    }
    sol.iterations = iterations;

    // final grid = working grid plus the refined reference points
    double grid_sup = lv.h;
    for (size_t i = 0; i < grid.x.size(); ++i)
        if (grid.w[i] > 0.0)
            grid_sup = std::max(grid_sup, grid.w[i] * std::abs(lv.value(grid.x[i])));
    sol.grid_norm = grid_sup;
    sol.norm = grid_sup;
    sol.equioscillation_defect = std::abs(lv.h - sol.norm) / sol.norm;

    // power coefficients by Chebyshev interpolation on the bounding interval
    const double lo = set.intervals.front().first, hi = set.intervals.back().second;
    const double mid = 0.5 * (lo + hi), half = 0.5 * (hi - lo);
    const auto nodes = first_kind_nodes(n + 1);
    std::vector<double> vals(n + 1);
    for (int j = 0; j <= n; ++j)
        vals[j] = lv.value(mid + half * nodes[j]);
    auto cheb_c = values_to_chebyshev(vals);
    auto pow_std = chebyshev_to_power(cheb_c);
    auto pow_phys = half == 0.0 ? pow_std : substitute_affine(pow_std, 1.0 / half, -mid / half);
    const double lead = pow_phys[n];
    CoeffList low(n);
    for (int k = 0; k < n; ++k)
        low[k] = pow_phys[k] / lead;
    sol.poly = MonicPolynomial(std::move(low));
    return sol;
}

} // namespace cheb
