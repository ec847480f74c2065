#include "kothe/lp.hpp"

#include "kothe/weight.hpp"

#include <algorithm>
#include <future>
#include <stdexcept>
#include <utility>

namespace kothe::lp {

namespace {

std::vector<Index> build_window(WindowKind kind, Index lo, Index hi) {
    std::vector<Index> window;
    if (kind == WindowKind::Diagonals) {
        for (Index d = lo; d <= hi; ++d)
            for (Index i = 1; i < d; ++i) window.push_back(phi(i, d - i));
    } else {
        for (Index n = lo; n <= hi; ++n) window.push_back(n);
    }
    return window;
}

Rational weight_value(Index k, Index n) {
    const auto [i, j] = phi_inv(n);
    return Rational(alpha(k, i, j));
}

Rational max_weight_value(Index kmax, Index n) {
    const auto [i, j] = phi_inv(n);
    Int best = alpha(1, i, j);
    for (Index k = 2; k <= kmax; ++k) best = std::max(best, alpha(k, i, j));
    return Rational(best);
}

void validate(const LowerBoundInstance& inst) {
    if (!(inst.delta > 0)) throw std::invalid_argument("lower-bound instance requires delta > 0");
    if (inst.kmax < 1)
        throw std::invalid_argument("lower-bound instance requires at least one weight");
    if (inst.window.empty())
        throw std::invalid_argument("lower-bound instance requires a nonempty window");
    Index prev = 0;
    for (Index n : inst.window) {
        if (n <= prev)
            throw std::invalid_argument("window coordinates must be strictly increasing and >= 1");
        prev = n;
    }
}

// Columns of the epigraph program: one per window coordinate, then the
// epigraph variable t, then one surplus per weight. Rows: the mass
// constraint, then <p^(k), x> - t + s_k = 0 for each k. Minimizing t under
// these equalities with everything nonnegative is the minimax.
struct Program {
    std::vector<std::vector<Rational>> A;
    std::vector<Rational> b;
    std::vector<Rational> c;
    std::vector<std::size_t> basis;
};

Program build_program(const LowerBoundInstance& inst) {
    const std::size_t W = inst.window.size();
    const auto K = static_cast<std::size_t>(inst.kmax);
    Program p;
    p.A.assign(1 + K, std::vector<Rational>(W + 1 + K, Rational(0)));
    p.b.assign(1 + K, Rational(0));
    p.c.assign(W + 1 + K, Rational(0));
    for (std::size_t i = 0; i < W; ++i) p.A[0][i] = 1;
    p.b[0] = inst.delta;
    for (std::size_t k = 1; k <= K; ++k) {
        for (std::size_t i = 0; i < W; ++i)
            p.A[k][i] = weight_value(static_cast<Index>(k), inst.window[i]);
        p.A[k][W] = -1;
        p.A[k][W + k] = 1;
    }
    p.c[W] = 1;

    // Feasible starting basis: all mass on the first window coordinate, t at
    // the largest weight there, surpluses taking up the slack everywhere
    // else. The surplus of the weight attaining that largest value is the
    // one left out, which keeps the basis matrix nonsingular.
    std::size_t kstar = 1;
    for (std::size_t k = 2; k <= K; ++k)
        if (p.A[k][0] > p.A[kstar][0]) kstar = k;
    p.basis.push_back(0);
    p.basis.push_back(W);
    for (std::size_t k = 1; k <= K; ++k)
        if (k != kstar) p.basis.push_back(W + k);
    return p;
}

void pivot(std::vector<std::vector<Rational>>& T, std::size_t r, std::size_t col) {
    const std::size_t cols = T[r].size();
    const Rational piv = T[r][col];
    for (std::size_t j = 0; j < cols; ++j) T[r][j] /= piv;
    for (std::size_t s = 0; s < T.size(); ++s) {
        if (s == r || T[s][col] == 0) continue;
        const Rational f = T[s][col];
        for (std::size_t j = 0; j < cols; ++j) T[s][j] -= f * T[r][j];
    }
}

std::vector<Rational> solve_linear(std::vector<std::vector<Rational>> M,
                                   std::vector<Rational> rhs) {
    const std::size_t n = M.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && M[piv][col] == 0) ++piv;
        if (piv == n) throw std::invalid_argument("linear solve: singular matrix");
        std::swap(M[col], M[piv]);
        std::swap(rhs[col], rhs[piv]);
        for (std::size_t r = col + 1; r < n; ++r) {
            if (M[r][col] == 0) continue;
            const Rational f = M[r][col] / M[col][col];
            for (std::size_t j = col; j < n; ++j) M[r][j] -= f * M[col][j];
            rhs[r] -= f * rhs[col];
        }
    }
    std::vector<Rational> y(n, Rational(0));
    for (std::size_t r = n; r-- > 0;) {
        Rational acc = std::move(rhs[r]);
        for (std::size_t j = r + 1; j < n; ++j) acc -= M[r][j] * y[j];
        y[r] = acc / M[r][r];
    }
    return y;
}

// Cheapest unit mass over everything the support set allows but the window
// omits. For a diagonal window the omitted set is the diagonals past hi;
// the cheapest coordinate on diagonal d costs min(d-1, K+1), nondecreasing
// in d, so scanning the first omitted diagonal decides. For an index window
// the omitted set is the indices past hi; a coordinate cheaper than K+1
// needs i*j <= K with i <= K, which pins its diagonal at or below K+1 and
// hence its index at or below K(K+1)/2, while row K+1 keeps the value K+1
// available past every finite index.
Rational omitted_floor_of(const LowerBoundInstance& inst) {
    const Index K = inst.kmax;
    if (inst.kind == WindowKind::Diagonals) {
        const Index d = inst.hi + 1;
        Rational best = max_weight_value(K, phi(1, d - 1));
        for (Index i = 2; i < d; ++i) best = std::min(best, max_weight_value(K, phi(i, d - i)));
        return best;
    }
    Rational best(K + 1);
    const Index cutoff = K * (K + 1) / 2;
    for (Index n = inst.hi + 1; n <= cutoff; ++n) best = std::min(best, max_weight_value(K, n));
    return best;
}

} // namespace

LowerBoundInstance diagonal_instance(Rational delta, Index D, Index Dmax, Index K) {
    if (!(delta > 0)) throw std::invalid_argument("lower-bound instance requires delta > 0");
    if (D < 2) throw std::invalid_argument("diagonal window requires a starting diagonal >= 2");
    if (Dmax < D) throw std::invalid_argument("diagonal window must reach its starting diagonal");
    if (K < 1) throw std::invalid_argument("lower-bound instance requires at least one weight");
    LowerBoundInstance inst;
    inst.delta = std::move(delta);
    inst.kmax = K;
    inst.kind = WindowKind::Diagonals;
    inst.lo = D;
    inst.hi = Dmax;
    inst.window = build_window(inst.kind, inst.lo, inst.hi);
    return inst;
}

LowerBoundInstance index_instance(Rational delta, Index m, Index M, Index K) {
    if (!(delta > 0)) throw std::invalid_argument("lower-bound instance requires delta > 0");
    if (m < 1) throw std::invalid_argument("index window requires a floor >= 1");
    if (M < m) throw std::invalid_argument("index window must reach its floor");
    if (K < 1) throw std::invalid_argument("lower-bound instance requires at least one weight");
    LowerBoundInstance inst;
    inst.delta = std::move(delta);
    inst.kmax = K;
    inst.kind = WindowKind::IndexRange;
    inst.lo = m;
    inst.hi = M;
    inst.window = build_window(inst.kind, inst.lo, inst.hi);
    return inst;
}

LowerBoundInstance explicit_instance(Rational delta, std::vector<Index> coords, Index K) {
    LowerBoundInstance inst;
    inst.delta = std::move(delta);
    inst.kmax = K;
    inst.kind = WindowKind::Explicit;
    inst.window = std::move(coords);
    validate(inst);
    inst.lo = inst.window.front();
    inst.hi = inst.window.back();
    return inst;
}

SimplexResult simplex_solve(const std::vector<std::vector<Rational>>& A,
                            const std::vector<Rational>& b, const std::vector<Rational>& c,
                            std::vector<std::size_t> basis) {
    const std::size_t m = A.size();
    if (m == 0 || basis.size() != m || b.size() != m)
        throw std::invalid_argument("simplex: basis and right-hand side must match the row count");
    const std::size_t n = c.size();

    // tableau rows 0..m-1 hold [A | b]; row m holds the reduced costs and
    // the negated objective
    std::vector<std::vector<Rational>> T(m + 1, std::vector<Rational>(n + 1, Rational(0)));
    for (std::size_t r = 0; r < m; ++r) {
        if (A[r].size() != n) throw std::invalid_argument("simplex: ragged constraint matrix");
        for (std::size_t j = 0; j < n; ++j) T[r][j] = A[r][j];
        T[r][n] = b[r];
    }
    for (std::size_t j = 0; j < n; ++j) T[m][j] = c[j];

    // Gauss-Jordan on the basis columns, cost row included; running out of
    // pivot rows means the columns are dependent
    for (std::size_t r = 0; r < m; ++r) {
        const std::size_t col = basis[r];
        if (col >= n) throw std::invalid_argument("simplex: basis column out of range");
        std::size_t piv = r;
        while (piv < m && T[piv][col] == 0) ++piv;
        if (piv == m) throw std::invalid_argument("simplex: singular starting basis");
        std::swap(T[r], T[piv]);
        pivot(T, r, col);
    }
    for (std::size_t r = 0; r < m; ++r)
        if (T[r][n] < 0) throw std::logic_error("simplex: starting basis is infeasible");

    SimplexResult res;
    constexpr int kIterationCap = 100000;
    for (;;) {
        // Bland's rule: lowest-index improving column enters, lowest-index
        // basic variable leaves among the minimum ratios
        std::size_t enter = n;
        for (std::size_t j = 0; j < n; ++j) {
            if (T[m][j] < 0) {
                enter = j;
                break;
            }
        }
        if (enter == n) break;
        std::size_t leave = m;
        Rational best;
        for (std::size_t r = 0; r < m; ++r) {
            if (T[r][enter] <= 0) continue;
            Rational ratio = T[r][n] / T[r][enter];
            if (leave == m || ratio < best || (ratio == best && basis[r] < basis[leave])) {
                leave = r;
                best = std::move(ratio);
            }
        }
        if (leave == m) {
            res.status = SimplexResult::Status::Unbounded;
            return res;
        }
        pivot(T, leave, enter);
        basis[leave] = enter;
        if (++res.iterations > kIterationCap)
            throw std::runtime_error("simplex: iteration cap exceeded");
    }

    res.status = SimplexResult::Status::Optimal;
    res.x.assign(n, Rational(0));
    for (std::size_t r = 0; r < m; ++r) res.x[basis[r]] = T[r][n];
    res.objective = -T[m][n];

    // duals from the original data, not the tableau: solve B^T y = c_B
    std::vector<std::vector<Rational>> Bt(m, std::vector<Rational>(m));
    std::vector<Rational> cb(m);
    for (std::size_t r = 0; r < m; ++r) {
        for (std::size_t s = 0; s < m; ++s) Bt[r][s] = A[s][basis[r]];
        cb[r] = c[basis[r]];
    }
    res.duals = solve_linear(std::move(Bt), std::move(cb));
    return res;
}

LowerBoundCertificate solve_minimax(LowerBoundInstance instance) {
    validate(instance);
    if (instance.kind != WindowKind::Explicit && instance.window != build_window(instance.kind, instance.lo, instance.hi))
        throw std::invalid_argument("window does not match its declared range");

    LowerBoundCertificate cert;
    cert.reduction_note =
        "restriction to x >= 0 is lossless: the mass and every seminorm depend on x "
        "only through |x_i|, so replacing an optimizer by its absolute value preserves "
        "feasibility and cost";
    for (;;) {
        Program p = build_program(instance);
        SimplexResult sol = simplex_solve(p.A, p.b, p.c, p.basis);
        if (sol.status != SimplexResult::Status::Optimal)
            throw std::logic_error("minimax program cannot be unbounded");

        const std::size_t W = instance.window.size();
        const Index K = instance.kmax;
        cert.value = sol.objective;
        cert.duals = sol.duals;

        std::vector<FinSeq::Term> terms;
        for (std::size_t i = 0; i < W; ++i)
            if (sol.x[i] != 0) terms.emplace_back(instance.window[i], sol.x[i]);
        cert.optimizer = FinSeq::from_terms(std::move(terms));

        // primal re-check against the seminorms themselves
        std::vector<Rational> norms;
        Rational best_norm(0);
        for (Index k = 1; k <= K; ++k) {
            norms.push_back(seminorm(cert.optimizer, cex_weight(k)));
            if (norms.back() > best_norm) best_norm = norms.back();
        }
        cert.active_weights.clear();
        for (Index k = 1; k <= K; ++k)
            if (norms[static_cast<std::size_t>(k - 1)] == best_norm)
                cert.active_weights.push_back(k);

        bool feasible = true;
        for (std::size_t i = 0; i < W; ++i)
            if (sol.x[i] < 0) feasible = false;
        feasible = feasible && weight_of(cert.optimizer) == instance.delta;
        for (const FinSeq::Term& term : cert.optimizer.terms())
            feasible = feasible && std::binary_search(instance.window.begin(),
                                                      instance.window.end(), term.first);
        feasible = feasible && best_norm == cert.value;
        cert.primal_feasible = feasible;

        // dual certificate: y feasible for max <b, y> s.t. A^T y <= c, with
        // objective matching the primal exactly
        bool dual_ok = sol.duals.size() == p.b.size();
        for (std::size_t j = 0; dual_ok && j < p.c.size(); ++j) {
            Rational dot(0);
            for (std::size_t r = 0; r < p.b.size(); ++r) dot += sol.duals[r] * p.A[r][j];
            dual_ok = dot <= p.c[j];
        }
        if (dual_ok) {
            Rational yb(0);
            for (std::size_t r = 0; r < p.b.size(); ++r) yb += sol.duals[r] * p.b[r];
            dual_ok = yb == cert.value;
        }
        cert.dual_certified = dual_ok;

        Rational minmax;
        for (std::size_t i = 0; i < W; ++i) {
            Rational colmax = p.A[1][i];
            for (std::size_t k = 2; k <= static_cast<std::size_t>(K); ++k)
                if (p.A[k][i] > colmax) colmax = p.A[k][i];
            if (i == 0 || colmax < minmax) minmax = std::move(colmax);
        }
        cert.pointmass_bound = instance.delta * minmax;
        cert.matches_pointmass = cert.value == cert.pointmass_bound;

        if (instance.kind == WindowKind::Explicit) {
            cert.window_sound = true;
            break;
        }
        cert.omitted_floor = omitted_floor_of(instance);
        if (instance.delta * *cert.omitted_floor >= cert.value) {
            cert.window_sound = true;
            break;
        }
        if (cert.widenings >= 16) {
            cert.window_sound = false;
            break;
        }
        ++cert.widenings;
        instance.hi = instance.kind == WindowKind::Diagonals ? instance.hi + 4 : instance.hi * 2;
        instance.window = build_window(instance.kind, instance.lo, instance.hi);
    }
    if (instance.kind == WindowKind::Diagonals && instance.lo >= 3)
        cert.closed_form = closed_form_bound(instance.delta, instance.lo, instance.kmax);
    cert.instance = std::move(instance);
    return cert;
}

Rational closed_form_bound(const Rational& delta, Index D, Index K) {
    if (!(delta > 0)) throw std::invalid_argument("closed form requires delta > 0");
    if (D < 3) throw std::invalid_argument("closed form requires D >= 3");
    if (K < 1) throw std::invalid_argument("closed form requires K >= 1");
    return delta * Rational(std::min<Index>(K + 1, D - 1));
}

GrowthCertificate growth_certificate(const Rational& delta, const std::vector<Index>& d_list,
                                     const std::function<Index(Index)>& k_rule) {
    if (!(delta > 0)) throw std::invalid_argument("growth sweep requires delta > 0");
    if (d_list.empty()) throw std::invalid_argument("growth sweep requires at least one diagonal");
    for (std::size_t i = 1; i < d_list.size(); ++i)
        if (d_list[i] <= d_list[i - 1])
            throw std::invalid_argument("growth sweep diagonals must be increasing");
    if (!k_rule) throw std::invalid_argument("growth sweep requires a K rule");

    GrowthCertificate out;
    out.delta = delta;
    std::vector<std::future<LowerBoundCertificate>> jobs;
    jobs.reserve(d_list.size());
    for (Index D : d_list) {
        const Index K = k_rule(D);
        jobs.push_back(std::async(std::launch::async, [delta, D, K] {
            return solve_minimax(diagonal_instance(delta, D, D + 3, K));
        }));
    }

    out.nondecreasing = true;
    out.meets_floor = true;
    for (std::size_t i = 0; i < jobs.size(); ++i) {
        LowerBoundCertificate cert = jobs[i].get();
        GrowthRow row;
        row.D = d_list[i];
        row.K = cert.instance.kmax;
        row.value = cert.value;
        row.floor = delta * Rational(std::min<Index>(row.K + 1, row.D - 1));
        if (row.D >= 3) {
            row.closed_form = closed_form_bound(delta, row.D, row.K);
            row.matches_closed_form = row.value == *row.closed_form;
        }
        if (row.value < row.floor) out.meets_floor = false;
        if (i > 0 && row.value < out.rows.back().value) out.nondecreasing = false;
        out.rows.push_back(std::move(row));
    }
    out.pass = out.nondecreasing && out.meets_floor;
    return out;
}

} // namespace kothe::lp
