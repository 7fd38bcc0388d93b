#ifndef CHEBKIT_SETS_HPP
#define CHEBKIT_SETS_HPP

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "cheb/poly.hpp"

namespace cheb {

class SetDescriptor;

/// Ordered disjoint closed intervals [l_i, r_i].
struct IntervalUnion {
    std::vector<std::pair<double, double>> intervals;
};

struct Circle {
    Complex center;
    double radius = 1.0;
};

/// Arc {center + radius*e^{i t} : |t| <= half_angle}, half_angle in (0, pi).
struct CircularArc {
    Complex center;
    double radius = 1.0;
    double half_angle = M_PI / 2;
};

/// Level set {z : |P(z)| = level^deg(P)} of a monic generator P.
struct Lemniscate {
    MonicPolynomial generator;
    double level = 1.0;
};

/// P^{-1}(base) for a monic polynomial P; nesting depth <= 3.
struct Preimage {
    MonicPolynomial map;
    std::shared_ptr<const SetDescriptor> base;
};

struct SampledCurve {
    std::vector<Complex> points;
    bool closed = false;
};

class SetDescriptor {
public:
    using Variant = std::variant<IntervalUnion, Circle, CircularArc, Lemniscate, Preimage, SampledCurve>;

    SetDescriptor(Variant v) : v_(std::move(v)) {}

    const Variant& variant() const { return v_; }

    template <class T> const T* get_if() const { return std::get_if<T>(&v_); }
    template <class T> bool is() const { return std::holds_alternative<T>(v_); }

private:
    Variant v_;
};

struct JacobiWeight {
    double alpha = 0.0;
    double beta = 0.0;
};

/// Poles a_k outside [-1,1], closed under conjugation; at most one pole at
/// infinity (for the odd finite-count case). Weight [prod (1-x/a_k)]^{-1/2}.
struct MarkovWeight {
    std::vector<Complex> poles;
    bool pole_at_infinity = false;
};

struct OneWeight {};

struct PowerZerosWeight;
struct SamplesWeight {
    std::vector<double> values;
};

class WeightDescriptor {
public:
    using Variant = std::variant<OneWeight, JacobiWeight, MarkovWeight,
                                 std::shared_ptr<const PowerZerosWeight>, SamplesWeight>;

    WeightDescriptor() : v_(OneWeight{}) {}
    WeightDescriptor(Variant v) : v_(std::move(v)) {}

    const Variant& variant() const { return v_; }
    template <class T> const T* get_if() const { return std::get_if<T>(&v_); }
    template <class T> bool is() const { return std::holds_alternative<T>(v_); }
    bool is_power_zeros() const {
        return std::holds_alternative<std::shared_ptr<const PowerZerosWeight>>(v_);
    }
    const PowerZerosWeight& power_zeros() const {
        return *std::get<std::shared_ptr<const PowerZerosWeight>>(v_);
    }

private:
    Variant v_;
};

/// Base weight times prod |x - b_k|^{alpha_k}; base bounded in [1/M, M].
struct PowerZerosWeight {
    WeightDescriptor base;
    std::vector<std::pair<double, double>> factors; // (b_k, alpha_k)
    double bound = 1000.0;                          // declared M
};

enum class GridProvenance { uniform, refined };

/// Discretization of a set: points with parallel nonnegative values slot
/// (filled with 1 by discretize; solvers overwrite with sampled weights).
struct Grid {
    std::vector<Complex> points;
    std::vector<double> weights;
    GridProvenance provenance = GridProvenance::uniform;
};

/// Parse and validate a set descriptor document (JSON text).
SetDescriptor parse_set(const std::string& text);

/// Parse and validate a weight descriptor document (JSON text).
WeightDescriptor parse_weight(const std::string& text);

/// Serialize back to the document format.
std::string set_to_json(const SetDescriptor& set);
std::string weight_to_json(const WeightDescriptor& w);

/// Discretize a set into roughly m points (variant-specific layout; see docs).
Grid discretize(const SetDescriptor& set, int m);

/// Evaluate a weight at a point. Interval-family weights (jacobi, markov,
/// power_zeros) require x in [-1,1] on the real line.
double weight_eval(const WeightDescriptor& w, Complex x);

/// Weight values over a grid (handles the samples variant, which must match
/// the grid length).
std::vector<double> weights_on_grid(const WeightDescriptor& w, const Grid& grid);

/// Counterclockwise convex hull; collinear input degenerates to the extreme
/// segment endpoints, a single point to itself.
std::vector<Complex> convex_hull(std::vector<Complex> points);

/// Distance from a point to the convex hull (0 inside).
double distance_to_hull(const std::vector<Complex>& hull, Complex z);

/// Descriptor of alpha*E + b, staying in the same variant family where the
/// image is representable and falling back to a sampled curve otherwise.
SetDescriptor affine_image(const SetDescriptor& set, Complex alpha, Complex b);

/// True when the set lives on the real line (interval unions).
bool is_real_set(const SetDescriptor& set);

} // namespace cheb

#endif
