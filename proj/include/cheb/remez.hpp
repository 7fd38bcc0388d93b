#ifndef CHEBKIT_REMEZ_HPP
#define CHEBKIT_REMEZ_HPP

#include <optional>

#include "cheb/poly.hpp"
#include "cheb/sets.hpp"

namespace cheb {

/// Certified weighted Chebyshev polynomial on a union of real intervals.
struct ChebSolution {
    MonicPolynomial poly;
    double norm = 0.0;                     // sup of w|T| over the final (refined) grid
    std::vector<double> reference;         // n+1 strictly increasing extremal points
    std::vector<int> signs;                // sign of w*T at each reference point
    std::vector<double> reference_values;  // w(x_j) T(x_j), the alternation certificate
    double equioscillation_defect = 0.0;   // relative spread of |w*T| over the reference
    int iterations = 0;
    double grid_norm = 0.0;
};

struct RemezOptions {
    double tol = 1e-10;
    int grid_budget = 0;      // 0: default 64*(n+2)
    int max_iterations = 200; // exchange cap per grid
    int max_grid_doublings = 3;
    std::vector<double> initial_reference{}; // override the default start (testing hook)
};

/// Exchange (second Remez algorithm) solve of the weighted monic minimax
/// problem on an interval union. The error curve is handled in barycentric
/// form through the reference, so tiny leveled errors (2^{1-n} at large n)
/// keep full relative accuracy.
ChebSolution solve_real(const IntervalUnion& set, const WeightDescriptor& w, int n,
                        const RemezOptions& opts = {});

/// One leveled solve: given a strictly increasing reference of n+1 points,
/// returns (a_0..a_{n-1}, h) from the alternation conditions
/// w(x_j) T(x_j) = (-1)^{n-j} h, by Gaussian elimination with partial
/// pivoting. h is sign-normalized to be positive.
std::pair<CoeffList, double> leveled_system_solve(const std::vector<double>& reference,
                                                  const WeightDescriptor& w, int n);

/// Multi-point exchange: pick n+1 alternating-sign local maxima of w|T| from
/// the grid (global maximum always kept, leftmost tie wins).
std::vector<double> exchange_step(const std::vector<double>& grid_x,
                                  const std::vector<double>& grid_err, int n);

} // namespace cheb

#endif
