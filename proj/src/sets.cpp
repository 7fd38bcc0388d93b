#include "cheb/sets.hpp"

#include <algorithm>
#include <cmath>

#include "json.hpp"

namespace cheb {

using nlohmann::ordered_json;

namespace {

Complex parse_complex(const ordered_json& j, const char* what) {
    if (j.is_number())
        return Complex(j.get<double>(), 0.0);
    if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
        return Complex(j[0].get<double>(), j[1].get<double>());
    fail(ErrorCode::parse_error, std::string(what) + " must be a number or [re, im]");
}

MonicPolynomial parse_poly(const ordered_json& j, const char* what) {
    if (!j.is_array())
        fail(ErrorCode::parse_error, std::string(what) + " must be a coefficient array");
    CoeffList low;
    low.reserve(j.size());
    for (const auto& c : j)
        low.push_back(parse_complex(c, what));
    return MonicPolynomial(std::move(low));
}

ordered_json complex_to_json(Complex z) { return ordered_json::array({z.real(), z.imag()}); }

ordered_json poly_to_json(const MonicPolynomial& p) {
    ordered_json arr = ordered_json::array();
    for (Complex c : p.low_coeffs())
        arr.push_back(complex_to_json(c));
    return arr;
}

SetDescriptor parse_set_json(const ordered_json& j, int depth);

void validate_intervals(const std::vector<std::pair<double, double>>& iv) {
    if (iv.empty())
        fail(ErrorCode::validation_error, "interval union needs at least one interval");
    for (const auto& [l, r] : iv) {
        if (!std::isfinite(l) || !std::isfinite(r))
            fail(ErrorCode::validation_error, "non-finite interval endpoint");
        if (l > r)
            fail(ErrorCode::validation_error, "interval with l > r");
    }
    for (size_t i = 1; i < iv.size(); ++i)
        if (!(iv[i - 1].second < iv[i].first))
            fail(ErrorCode::validation_error, "intervals must be strictly ordered and disjoint");
}

void validate_curve(const SampledCurve& c) {
    if (c.points.size() < 16)
        fail(ErrorCode::validation_error, "sampled curve needs at least 16 points");
    for (size_t i = 1; i < c.points.size(); ++i)
        if (c.points[i] == c.points[i - 1])
            fail(ErrorCode::validation_error, "repeated consecutive curve points");
}

SetDescriptor parse_set_json(const ordered_json& j, int depth) {
    if (!j.is_object() || !j.contains("type") || !j["type"].is_string())
        fail(ErrorCode::parse_error, "set descriptor needs a \"type\" string");
    const std::string type = j["type"].get<std::string>();

    if (type == "interval_union") {
        if (!j.contains("intervals") || !j["intervals"].is_array())
            fail(ErrorCode::parse_error, "interval_union needs \"intervals\"");
        IntervalUnion iu;
        for (const auto& e : j["intervals"]) {
            if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number())
                fail(ErrorCode::parse_error, "interval must be [l, r]");
            iu.intervals.emplace_back(e[0].get<double>(), e[1].get<double>());
        }
        validate_intervals(iu.intervals);
        return SetDescriptor(std::move(iu));
    }
    if (type == "circle") {
        Circle c;
        c.center = parse_complex(j.at("center"), "circle center");
        c.radius = j.at("radius").get<double>();
        if (!(c.radius > 0.0) || !std::isfinite(c.radius))
            fail(ErrorCode::validation_error, "circle radius must be positive");
        return SetDescriptor(c);
    }
    if (type == "arc") {
        CircularArc a;
        a.center = parse_complex(j.at("center"), "arc center");
        a.radius = j.at("radius").get<double>();
        a.half_angle = j.at("half_angle").get<double>();
        if (!(a.radius > 0.0))
            fail(ErrorCode::validation_error, "arc radius must be positive");
        if (!(a.half_angle > 0.0 && a.half_angle < M_PI))
            fail(ErrorCode::validation_error, "arc half-angle must lie in (0, pi)");
        return SetDescriptor(a);
    }
    if (type == "lemniscate") {
        Lemniscate l{parse_poly(j.at("generator"), "lemniscate generator"),
                     j.at("level").get<double>()};
        if (!(l.level > 0.0))
            fail(ErrorCode::validation_error, "lemniscate level must be positive");
        if (l.generator.degree() < 1)
            fail(ErrorCode::validation_error, "lemniscate generator needs degree >= 1");
        return SetDescriptor(std::move(l));
    }
    if (type == "preimage") {
        if (depth >= 3)
            fail(ErrorCode::validation_error, "preimage nesting depth exceeds 3");
        Preimage p;
        p.map = parse_poly(j.at("p"), "preimage polynomial");
        if (p.map.degree() < 1)
            fail(ErrorCode::validation_error, "preimage polynomial needs degree >= 1");
        p.base = std::make_shared<SetDescriptor>(parse_set_json(j.at("base"), depth + 1));
        return SetDescriptor(std::move(p));
    }
    if (type == "curve_samples") {
        SampledCurve c;
        for (const auto& e : j.at("points"))
            c.points.push_back(parse_complex(e, "curve point"));
        c.closed = j.value("closed", false);
        validate_curve(c);
        return SetDescriptor(std::move(c));
    }
    fail(ErrorCode::parse_error, "unknown set type \"" + type + "\"");
}

// Positivity of prod (1 - x/a_k) is required on [-1,1]; checked on a fixed
// 1000-point grid.
void validate_markov(const MarkovWeight& w) {
    size_t finite_count = w.poles.size();
    const size_t total = finite_count + (w.pole_at_infinity ? 1 : 0);
    if (total == 0 || total % 2 != 0)
        fail(ErrorCode::validation_error, "markov weight needs an even pole count (infinity allowed once)");
    for (Complex a : w.poles) {
        if (std::abs(a.imag()) < 1e-12 && a.real() >= -1.0 - 1e-12 && a.real() <= 1.0 + 1e-12)
            fail(ErrorCode::validation_error, "markov pole lies on [-1,1]");
        bool paired = false;
        for (Complex b : w.poles)
            if (std::abs(b - std::conj(a)) <= 1e-12 * (1.0 + std::abs(a)))
                paired = true;
        if (!paired)
            fail(ErrorCode::validation_error, "markov poles must be closed under conjugation");
    }
    for (int i = 0; i < 1000; ++i) {
        const double x = -1.0 + 2.0 * i / 999.0;
        Complex prod = 1.0;
        for (Complex a : w.poles)
            prod *= (1.0 - x / a);
        if (!(prod.real() > 0.0))
            fail(ErrorCode::validation_error, "markov weight product must stay positive on [-1,1]");
    }
}

WeightDescriptor parse_weight_json(const ordered_json& j, int depth) {
    if (!j.is_object() || !j.contains("type") || !j["type"].is_string())
        fail(ErrorCode::parse_error, "weight descriptor needs a \"type\" string");
    const std::string type = j["type"].get<std::string>();

    if (type == "one")
        return WeightDescriptor(OneWeight{});
    if (type == "jacobi") {
        JacobiWeight w{j.at("alpha").get<double>(), j.at("beta").get<double>()};
        if (w.alpha < 0.0 || w.beta < 0.0)
            fail(ErrorCode::validation_error, "jacobi exponents must be nonnegative");
        return WeightDescriptor(w);
    }
    if (type == "markov") {
        MarkovWeight w;
        for (const auto& e : j.at("poles")) {
            if (e.is_string() && e.get<std::string>() == "inf") {
                if (w.pole_at_infinity)
                    fail(ErrorCode::validation_error, "at most one pole at infinity");
                w.pole_at_infinity = true;
            } else {
                w.poles.push_back(parse_complex(e, "markov pole"));
            }
        }
        validate_markov(w);
        return WeightDescriptor(std::move(w));
    }
    if (type == "power_zeros") {
        if (depth >= 2)
            fail(ErrorCode::validation_error, "power_zeros nesting too deep");
        auto pz = std::make_shared<PowerZerosWeight>();
        pz->base = parse_weight_json(j.at("base"), depth + 1);
        for (const auto& e : j.at("factors")) {
            if (!e.is_array() || e.size() != 2)
                fail(ErrorCode::parse_error, "power_zeros factor must be [b, alpha]");
            pz->factors.emplace_back(e[0].get<double>(), e[1].get<double>());
        }
        pz->bound = j.value("M", 1000.0);
        if (pz->bound < 1.0)
            fail(ErrorCode::validation_error, "power_zeros bound M must be >= 1");
        if (pz->base.is<SamplesWeight>())
            fail(ErrorCode::validation_error, "power_zeros base cannot be a samples weight");
        for (int i = 0; i < 1000; ++i) {
            const double x = -1.0 + 2.0 * i / 999.0;
            const double v = weight_eval(pz->base, x);
            if (!(v >= 1.0 / pz->bound && v <= pz->bound))
                fail(ErrorCode::validation_error, "power_zeros base leaves [1/M, M] on [-1,1]");
        }
        return WeightDescriptor(WeightDescriptor::Variant(std::shared_ptr<const PowerZerosWeight>(pz)));
    }
    if (type == "samples") {
        SamplesWeight w;
        for (const auto& e : j.at("values")) {
            const double v = e.get<double>();
            if (!(v >= 0.0) || !std::isfinite(v))
                fail(ErrorCode::validation_error, "sample weights must be finite and nonnegative");
            w.values.push_back(v);
        }
        return WeightDescriptor(std::move(w));
    }
    fail(ErrorCode::parse_error, "unknown weight type \"" + type + "\"");
}

ordered_json parse_text(const std::string& text) {
    ordered_json j = ordered_json::parse(text, nullptr, false);
    if (j.is_discarded())
        fail(ErrorCode::parse_error, "malformed JSON document");
    return j;
}

} // namespace

SetDescriptor parse_set(const std::string& text) {
    try {
        return parse_set_json(parse_text(text), 0);
    } catch (const ordered_json::exception& e) {
        fail(ErrorCode::parse_error, e.what());
    }
}

WeightDescriptor parse_weight(const std::string& text) {
    try {
        return parse_weight_json(parse_text(text), 0);
    } catch (const ordered_json::exception& e) {
        fail(ErrorCode::parse_error, e.what());
    }
}

namespace {

ordered_json set_json(const SetDescriptor& set) {
    ordered_json j;
    if (const auto* iu = set.get_if<IntervalUnion>()) {
        j["type"] = "interval_union";
        ordered_json arr = ordered_json::array();
        for (const auto& [l, r] : iu->intervals)
            arr.push_back(ordered_json::array({l, r}));
        j["intervals"] = arr;
    } else if (const auto* c = set.get_if<Circle>()) {
        j["type"] = "circle";
        j["center"] = complex_to_json(c->center);
        j["radius"] = c->radius;
    } else if (const auto* a = set.get_if<CircularArc>()) {
        j["type"] = "arc";
        j["center"] = complex_to_json(a->center);
        j["radius"] = a->radius;
        j["half_angle"] = a->half_angle;
    } else if (const auto* l = set.get_if<Lemniscate>()) {
        j["type"] = "lemniscate";
        j["generator"] = poly_to_json(l->generator);
        j["level"] = l->level;
    } else if (const auto* p = set.get_if<Preimage>()) {
        j["type"] = "preimage";
        j["p"] = poly_to_json(p->map);
        j["base"] = set_json(*p->base);
    } else if (const auto* s = set.get_if<SampledCurve>()) {
        j["type"] = "curve_samples";
        ordered_json arr = ordered_json::array();
        for (Complex z : s->points)
            arr.push_back(complex_to_json(z));
        j["points"] = arr;
        j["closed"] = s->closed;
    }
    return j;
}

ordered_json weight_json(const WeightDescriptor& w) {
    ordered_json j;
    if (w.is<OneWeight>()) {
        j["type"] = "one";
    } else if (const auto* jac = w.get_if<JacobiWeight>()) {
        j["type"] = "jacobi";
        j["alpha"] = jac->alpha;
        j["beta"] = jac->beta;
    } else if (const auto* m = w.get_if<MarkovWeight>()) {
        j["type"] = "markov";
        ordered_json poles = ordered_json::array();
        for (Complex a : m->poles)
            poles.push_back(complex_to_json(a));
        if (m->pole_at_infinity)
            poles.push_back("inf");
        j["poles"] = poles;
    } else if (w.is_power_zeros()) {
        const PowerZerosWeight& pz = w.power_zeros();
        j["type"] = "power_zeros";
        j["base"] = weight_json(pz.base);
        ordered_json factors = ordered_json::array();
        for (const auto& [b, a] : pz.factors)
            factors.push_back(ordered_json::array({b, a}));
        j["factors"] = factors;
        j["M"] = pz.bound;
    } else if (const auto* s = w.get_if<SamplesWeight>()) {
        j["type"] = "samples";
        j["values"] = s->values;
    }
    return j;
}

} // namespace

std::string set_to_json(const SetDescriptor& set) { return set_json(set).dump(); }
std::string weight_to_json(const WeightDescriptor& w) { return weight_json(w).dump(); }

namespace {

// Chebyshev-extrema points of [l, r], ascending; exchange solvers rely on the
// endpoint clustering.
void interval_points(double l, double r, int count, std::vector<Complex>& out) {
    if (l == r || count <= 1) {
        out.push_back(Complex(0.5 * (l + r), 0.0));
        return;
    }
    const double mid = 0.5 * (l + r), half = 0.5 * (r - l);
    for (int j = 0; j < count; ++j)
        out.push_back(Complex(mid - half * std::cos(M_PI * j / (count - 1)), 0.0));
}

std::vector<Complex> trace_targets(const MonicPolynomial& p, Complex target,
                                   std::vector<Complex>& warm) {
    MonicPolynomial shifted = [&] {
        CoeffList low = p.low_coeffs();
        low[0] -= target;
        return MonicPolynomial(std::move(low));
    }();
    RootOptions opts;
    opts.sorted = warm.empty();
    opts.initial = warm;
    std::vector<Complex> rts;
    try {
        rts = roots(shifted, opts);
    } catch (const ChebError&) {
        fail(ErrorCode::trace_error, "root tracking failed along the level curve");
    }
    // Two Newton polish steps push the level residual to ~1e-14 relative.
    const CoeffList full = shifted.coeffs();
    const CoeffList der = derivative(full);
    for (Complex& z : rts)
        for (int s = 0; s < 2; ++s) {
            const Complex d = eval(der, z);
            if (std::abs(d) > 1e-300)
                z -= eval(full, z) / d;
        }
    warm = rts;
    return rts;
}

} // namespace

Grid discretize(const SetDescriptor& set, int m) {
    if (m < 1)
        fail(ErrorCode::validation_error, "point budget must be positive");
    Grid g;

    if (const auto* iu = set.get_if<IntervalUnion>()) {
        double total = 0.0;
        for (const auto& [l, r] : iu->intervals)
            total += r - l;
        const size_t k = iu->intervals.size();
        for (size_t i = 0; i < k; ++i) {
            const auto& [l, r] = iu->intervals[i];
            int count = static_cast<int>(m);
            if (k > 1)
                count = std::max(8, total > 0.0
                                        ? static_cast<int>(std::lround(m * (r - l) / total))
                                        : static_cast<int>(m / k));
            interval_points(l, r, count, g.points);
        }
    } else if (const auto* c = set.get_if<Circle>()) {
        for (int k = 0; k < m; ++k) {
            const double t = 2.0 * M_PI * k / m;
            g.points.push_back(c->center + c->radius * Complex(std::cos(t), std::sin(t)));
        }
    } else if (const auto* a = set.get_if<CircularArc>()) {
        const int count = std::max(2, m);
        for (int k = 0; k < count; ++k) {
            const double t = -a->half_angle + 2.0 * a->half_angle * k / (count - 1);
            g.points.push_back(a->center + a->radius * Complex(std::cos(t), std::sin(t)));
        }
    } else if (const auto* l = set.get_if<Lemniscate>()) {
        const int d = l->generator.degree();
        const int n_ang = std::max(2, (m + d - 1) / d);
        const double level = std::pow(l->level, d);
        std::vector<Complex> warm;
        for (int k = 0; k < n_ang; ++k) {
            const double t = 2.0 * M_PI * k / n_ang;
            const Complex target = level * Complex(std::cos(t), std::sin(t));
            for (Complex z : trace_targets(l->generator, target, warm)) {
                if (std::abs(std::abs(eval(l->generator, z)) - level) > 1e-10 * level)
                    fail(ErrorCode::trace_error, "lemniscate point misses the level set");
                g.points.push_back(z);
            }
        }
    } else if (const auto* p = set.get_if<Preimage>()) {
        const int d = p->map.degree();
        const Grid base = discretize(*p->base, std::max(2, (m + d - 1) / d));
        std::vector<Complex> warm;
        for (Complex s : base.points)
            for (Complex z : trace_targets(p->map, s, warm))
                g.points.push_back(z);
    } else if (const auto* s = set.get_if<SampledCurve>()) {
        const auto& pts = s->points;
        const size_t nseg = s->closed ? pts.size() : pts.size() - 1;
        if (static_cast<int>(pts.size()) >= m) {
            g.points = pts;
        } else {
            std::vector<double> seglen(nseg);
            double total = 0.0;
            for (size_t i = 0; i < nseg; ++i) {
                seglen[i] = std::abs(pts[(i + 1) % pts.size()] - pts[i]);
                total += seglen[i];
            }
            const int extra = m - static_cast<int>(pts.size());
            // Largest-remainder apportionment of the extra points.
            std::vector<int> add(nseg, 0);
            std::vector<std::pair<double, size_t>> rem(nseg);
            int assigned = 0;
            for (size_t i = 0; i < nseg; ++i) {
                const double ideal = extra * seglen[i] / total;
                add[i] = static_cast<int>(ideal);
                assigned += add[i];
                rem[i] = {ideal - add[i], i};
            }
            std::stable_sort(rem.begin(), rem.end(), [](const auto& a, const auto& b) {
                return a.first > b.first;
            });
            for (int i = 0; i < extra - assigned; ++i)
                add[rem[i].second] += 1;
            for (size_t i = 0; i < nseg; ++i) {
                const Complex a = pts[i], b = pts[(i + 1) % pts.size()];
                g.points.push_back(a);
                for (int j = 1; j <= add[i]; ++j)
                    g.points.push_back(a + (b - a) * (static_cast<double>(j) / (add[i] + 1)));
            }
            if (!s->closed)
                g.points.push_back(pts.back());
        }
    }

    g.weights.assign(g.points.size(), 1.0);
    return g;
}

namespace {

double real_on_interval(Complex x, const char* what) {
    if (std::abs(x.imag()) > 1e-9 || x.real() < -1.0 - 1e-12 || x.real() > 1.0 + 1e-12)
        fail(ErrorCode::domain_error, std::string(what) + " weight needs x in [-1,1]");
    return std::clamp(x.real(), -1.0, 1.0);
}

} // namespace

double weight_eval(const WeightDescriptor& w, Complex z) {
    if (w.is<OneWeight>())
        return 1.0;
    if (const auto* jac = w.get_if<JacobiWeight>()) {
        const double x = real_on_interval(z, "jacobi");
        return std::pow(std::max(0.0, 1.0 - x), jac->alpha) *
               std::pow(std::max(0.0, 1.0 + x), jac->beta);
    }
    if (const auto* m = w.get_if<MarkovWeight>()) {
        const double x = real_on_interval(z, "markov");
        Complex prod = 1.0;
        for (Complex a : m->poles)
            prod *= (1.0 - x / a);
        const double v = prod.real();
        if (!(v > 0.0))
            fail(ErrorCode::domain_error, "markov weight product nonpositive");
        return 1.0 / std::sqrt(v);
    }
    if (w.is_power_zeros()) {
        const PowerZerosWeight& pz = w.power_zeros();
        const double x = real_on_interval(z, "power_zeros");
        double v = weight_eval(pz.base, x);
        for (const auto& [b, a] : pz.factors)
            v *= std::pow(std::abs(x - b), a);
        return v;
    }
    fail(ErrorCode::domain_error, "samples weight is grid-bound; cannot evaluate pointwise");
}

std::vector<double> weights_on_grid(const WeightDescriptor& w, const Grid& grid) {
    if (const auto* s = w.get_if<SamplesWeight>()) {
        if (s->values.size() != grid.points.size())
            fail(ErrorCode::validation_error, "samples weight length does not match the grid");
        return s->values;
    }
    std::vector<double> out;
    out.reserve(grid.points.size());
    for (Complex z : grid.points)
        out.push_back(weight_eval(w, z));
    return out;
}

namespace {

double cross(Complex o, Complex a, Complex b) {
    return (a.real() - o.real()) * (b.imag() - o.imag()) -
           (a.imag() - o.imag()) * (b.real() - o.real());
}

} // namespace

std::vector<Complex> convex_hull(std::vector<Complex> pts) {
    if (pts.empty())
        fail(ErrorCode::validation_error, "convex hull of an empty set");
    std::sort(pts.begin(), pts.end(), [](Complex a, Complex b) {
        return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
    });
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    const size_t n = pts.size();
    if (n <= 2)
        return pts;

    std::vector<Complex> hull(2 * n);
    size_t k = 0;
    for (size_t i = 0; i < n; ++i) { // lower
        while (k >= 2 && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0.0)
            --k;
        hull[k++] = pts[i];
    }
    for (size_t i = n - 1, lo = k + 1; i-- > 0;) { // upper
        while (k >= lo && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0.0)
            --k;
        hull[k++] = pts[i];
    }
    hull.resize(k - 1);
    return hull;
}

namespace {

double dist_segment(Complex a, Complex b, Complex z) {
    const Complex d = b - a;
    const double len2 = std::norm(d);
    if (len2 == 0.0)
        return std::abs(z - a);
    double t = ((z.real() - a.real()) * d.real() + (z.imag() - a.imag()) * d.imag()) / len2;
    t = std::clamp(t, 0.0, 1.0);
    return std::abs(z - (a + t * d));
}

} // namespace

double distance_to_hull(const std::vector<Complex>& hull, Complex z) {
    if (hull.empty())
        fail(ErrorCode::validation_error, "empty hull");
    if (hull.size() == 1)
        return std::abs(z - hull[0]);
    if (hull.size() == 2)
        return dist_segment(hull[0], hull[1], z);
    bool inside = true;
    for (size_t i = 0; i < hull.size(); ++i)
        if (cross(hull[i], hull[(i + 1) % hull.size()], z) < 0.0)
            inside = false;
    if (inside)
        return 0.0;
    double best = std::numeric_limits<double>::infinity();
    for (size_t i = 0; i < hull.size(); ++i)
        best = std::min(best, dist_segment(hull[i], hull[(i + 1) % hull.size()], z));
    return best;
}

namespace {

// Monic Q(w) = alpha^d P((w - b)/alpha) for monic P of degree d.
MonicPolynomial precompose_inverse_affine(const MonicPolynomial& p, Complex alpha, Complex b) {
    const int d = p.degree();
    const CoeffList full = p.coeffs();
    CoeffList acc{full.back()};
    for (int k = d - 1; k >= 0; --k) {
        CoeffList next(acc.size() + 1, 0.0);
        for (size_t i = 0; i < acc.size(); ++i) {
            next[i + 1] += acc[i] / alpha;
            next[i] += acc[i] * (-b / alpha);
        }
        next[0] += full[k];
        acc = std::move(next);
    }
    const Complex scale = std::pow(alpha, static_cast<double>(d));
    for (auto& c : acc)
        c *= scale;
    acc.pop_back();
    return MonicPolynomial(std::move(acc));
}

} // namespace

SetDescriptor affine_image(const SetDescriptor& set, Complex alpha, Complex b) {
    if (alpha == Complex(0.0, 0.0))
        fail(ErrorCode::validation_error, "affine map needs alpha != 0");

    if (const auto* iu = set.get_if<IntervalUnion>()) {
        if (std::abs(alpha.imag()) > 0.0 || std::abs(b.imag()) > 0.0)
            fail(ErrorCode::validation_error, "interval unions require a real affine map");
        IntervalUnion out;
        for (const auto& [l, r] : iu->intervals) {
            const double u = alpha.real() * l + b.real(), v = alpha.real() * r + b.real();
            out.intervals.emplace_back(std::min(u, v), std::max(u, v));
        }
        std::sort(out.intervals.begin(), out.intervals.end());
        validate_intervals(out.intervals);
        return SetDescriptor(std::move(out));
    }
    if (const auto* c = set.get_if<Circle>())
        return SetDescriptor(Circle{alpha * c->center + b, std::abs(alpha) * c->radius});
    if (const auto* a = set.get_if<CircularArc>()) {
        if (std::abs(alpha.imag()) == 0.0 && alpha.real() > 0.0)
            return SetDescriptor(
                CircularArc{alpha * a->center + b, alpha.real() * a->radius, a->half_angle});
        // Rotated arcs leave the variant family; fall back to samples.
        SampledCurve sc;
        const Grid grid = discretize(set, 256);
        for (Complex z : grid.points)
            sc.points.push_back(alpha * z + b);
        return SetDescriptor(std::move(sc));
    }
    if (const auto* l = set.get_if<Lemniscate>()) {
        // Q(w) = alpha^d P((w-b)/alpha) is monic with |Q| = (|alpha| level)^d on the image.
        return SetDescriptor(Lemniscate{precompose_inverse_affine(l->generator, alpha, b),
                                        std::abs(alpha) * l->level});
    }
    if (const auto* p = set.get_if<Preimage>()) {
        // P((w-b)/alpha) in base  <=>  Q(w) in alpha^d * base.
        Preimage out;
        out.map = precompose_inverse_affine(p->map, alpha, b);
        const Complex scale = std::pow(alpha, static_cast<double>(p->map.degree()));
        out.base = std::make_shared<SetDescriptor>(affine_image(*p->base, scale, Complex(0.0)));
        return SetDescriptor(std::move(out));
    }
    const auto* s = set.get_if<SampledCurve>();
    SampledCurve out;
    out.closed = s->closed;
    for (Complex z : s->points)
        out.points.push_back(alpha * z + b);
    return SetDescriptor(std::move(out));
}

bool is_real_set(const SetDescriptor& set) { return set.is<IntervalUnion>(); }

} // namespace cheb
