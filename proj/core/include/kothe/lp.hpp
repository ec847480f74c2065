#pragma once

#include "kothe/counterexample.hpp"
#include "kothe/fin_seq.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace kothe::lp {

// Exact lower-bound oracle for the staircase weight family: the minimum of
// max_{1<=k<=K} <p^(k), x> over x >= 0 with total mass delta and support
// pushed past a floor. Any element with mass >= delta supported past the
// floor already costs this much in some seminorm, so a growing sweep of
// these values is a finite-scale obstruction to a bounded a.i.
//
// Everything is exact: the solver is a dense tableau simplex over rationals
// with Bland's anti-cycling pivot rule, and each optimum is re-certified by
// an exact dual feasibility + strong duality check that does not trust the
// pivoting.

enum class WindowKind {
    Diagonals,  // support set is i+j >= lo; window truncates at diagonal hi
    IndexRange, // support set is n >= lo; window truncates at index hi
    Explicit,   // support set is exactly the listed window; nothing omitted
};

struct LowerBoundInstance {
    Rational delta; // mass floor, > 0
    Index kmax = 1; // weights p^(1)..p^(kmax)
    WindowKind kind = WindowKind::Explicit;
    Index lo = 0;
    Index hi = 0;
    std::vector<Index> window; // explicit coordinates, strictly increasing
};

// Window covering the full diagonals D..Dmax, support constraint i+j >= D.
// Requires delta > 0, D >= 2, Dmax >= D, K >= 1.
LowerBoundInstance diagonal_instance(Rational delta, Index D, Index Dmax, Index K);

// Window covering the raw index range [m, M], support constraint n >= m.
// Requires delta > 0, m >= 1, M >= m, K >= 1.
LowerBoundInstance index_instance(Rational delta, Index m, Index M, Index K);

// Arbitrary coordinate list; the support constraint is the window itself.
// Requires delta > 0, coords strictly increasing and >= 1, K >= 1.
LowerBoundInstance explicit_instance(Rational delta, std::vector<Index> coords, Index K);

struct SimplexResult {
    enum class Status { Optimal, Unbounded };
    Status status = Status::Optimal;
    Rational objective;
    std::vector<Rational> x;     // one per column
    std::vector<Rational> duals; // one per row; solves y^T B = c_B^T
    int iterations = 0;
};

// min c.z subject to A z = b, z >= 0, starting from a feasible basis
// (one column index per row). Throws std::invalid_argument on a singular
// basis and std::logic_error if the starting basic point is infeasible.
SimplexResult simplex_solve(const std::vector<std::vector<Rational>>& A,
                            const std::vector<Rational>& b, const std::vector<Rational>& c,
                            std::vector<std::size_t> basis);

struct LowerBoundCertificate {
    LowerBoundInstance instance; // window after any widening
    Rational value;              // L
    FinSeq optimizer;            // x*, mass delta, supported in the window
    std::vector<Index> active_weights; // k with seminorm(x*, p^(k)) == L
    std::vector<Rational> duals;

    bool primal_feasible = false; // x* >= 0, mass, support, objective: re-checked
                                  // against the seminorms, not the tableau
    bool dual_certified = false;  // exact dual feasibility + strong duality

    // delta * min over the window of max_k p^(k)_n: the best point-mass
    // placement, enumerated directly. Equals the LP value for this family
    // because the weights increase pointwise in k.
    Rational pointmass_bound;
    bool matches_pointmass = false;

    // Unit-mass cost floor over every coordinate in the support set that the
    // window omits (truncated kinds only). The window value is the true
    // optimum over the whole support set when delta * omitted_floor >= value;
    // otherwise the window is widened and re-solved.
    std::optional<Rational> omitted_floor;
    bool window_sound = false;
    int widenings = 0;

    // delta * min(K+1, D-1) for diagonal windows with D >= 3
    std::optional<Rational> closed_form;

    // records why dropping the sign of x loses nothing
    std::string reduction_note;
};

LowerBoundCertificate solve_minimax(LowerBoundInstance instance);

// delta * min(K+1, D-1). Lower bound: mass on diagonals >= D costs at least
// min(K+1, D-1) per unit under p^(K) alone. Upper bound: a point mass at
// (K+1, D-K-1) costs K+1 under every k <= K when D >= K+2, and one at
// (1, D-1) costs D-1 under every k. Requires D >= 3, K >= 1, delta > 0.
Rational closed_form_bound(const Rational& delta, Index D, Index K);

struct GrowthRow {
    Index D = 0;
    Index K = 0;
    Rational value;
    Rational floor; // delta * min(K+1, D-1)
    std::optional<Rational> closed_form;
    bool matches_closed_form = false;
};

struct GrowthCertificate {
    Rational delta;
    std::vector<GrowthRow> rows;
    bool nondecreasing = false;
    bool meets_floor = false;
    bool pass = false;
};

// L(D) for each D in d_list with K = k_rule(D), on full-diagonal windows
// D..D+3. The verdict passes when the values are nondecreasing and each
// meets its analytic floor. Instances are solved concurrently; assembly
// order is fixed by d_list.
GrowthCertificate growth_certificate(const Rational& delta, const std::vector<Index>& d_list,
                                     const std::function<Index(Index)>& k_rule);

} // namespace kothe::lp
