// Weight inference: a small exact integer program.
//
// Variables y_a = weight(a) - 1 >= 0. Each word u of d(a) gives the equation
// weight(a) = weight(u). We minimise sum(y) with a two-phase simplex over Q
// (Bland's rule) and branch-and-bound for integrality.

#include "cyq/errors.hpp"
#include "cyq/homology.hpp"

#include <algorithm>
#include <set>

namespace cyq {

namespace {

enum class Sense { le, eq, ge };

struct LinearRow {
    std::vector<Rational> coeffs;
    Sense sense = Sense::eq;
    Rational rhs;
};

struct LpResult {
    bool feasible = false;
    Rational objective;
    std::vector<Rational> x;
};

// minimise c.x subject to rows, x >= 0. c >= 0 so the problem is bounded.
LpResult solve_lp(const std::vector<Rational>& cost, const std::vector<LinearRow>& rows)
{
    const std::size_t n = cost.size();
    const std::size_t m = rows.size();

    // Column layout: structural [0,n), slack/surplus, artificial.
    std::vector<LinearRow> norm = rows;
    for (auto& r : norm) {
        if (r.rhs < 0) {
            for (auto& c : r.coeffs)
                c = -c;
            r.rhs = -r.rhs;
            if (r.sense == Sense::le)
                r.sense = Sense::ge;
            else if (r.sense == Sense::ge)
                r.sense = Sense::le;
        }
    }
    std::size_t slack_count = 0, art_count = 0;
    for (const auto& r : norm) {
        if (r.sense != Sense::eq)
            ++slack_count;
        if (r.sense != Sense::le)
            ++art_count;
    }
    const std::size_t total = n + slack_count + art_count;
    const std::size_t art_begin = n + slack_count;

    std::vector<std::vector<Rational>> tab(m, std::vector<Rational>(total + 1));
    std::vector<std::size_t> basis(m);
    std::size_t s = n, a = art_begin;
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            tab[i][j] = norm[i].coeffs[j];
        tab[i][total] = norm[i].rhs;
        if (norm[i].sense == Sense::le) {
            tab[i][s] = 1;
            basis[i] = s++;
        } else if (norm[i].sense == Sense::ge) {
            tab[i][s++] = -1;
            tab[i][a] = 1;
            basis[i] = a++;
        } else {
            tab[i][a] = 1;
            basis[i] = a++;
        }
    }

    auto pivot = [&](std::size_t r, std::size_t c) {
        Rational inv = 1 / tab[r][c];
        for (auto& v : tab[r])
            v *= inv;
        for (std::size_t i = 0; i < tab.size(); ++i) {
            if (i == r || tab[i][c] == 0)
                continue;
            Rational f = tab[i][c];
            for (std::size_t j = 0; j <= total; ++j)
                if (tab[r][j] != 0)
                    tab[i][j] -= f * tab[r][j];
        }
        basis[r] = c;
    };

    // Primal simplex with Bland's rule over columns [0, allowed).
    auto iterate = [&](const std::vector<Rational>& c, std::size_t allowed) {
        for (;;) {
            std::optional<std::size_t> enter;
            for (std::size_t j = 0; j < allowed && !enter; ++j) {
                if (std::find(basis.begin(), basis.end(), j) != basis.end())
                    continue;
                Rational rc = c[j];
                for (std::size_t i = 0; i < tab.size(); ++i)
                    if (tab[i][j] != 0)
                        rc -= c[basis[i]] * tab[i][j];
                if (rc < 0)
                    enter = j;
            }
            if (!enter)
                return;
            std::optional<std::size_t> leave;
            Rational best;
            for (std::size_t i = 0; i < tab.size(); ++i) {
                if (tab[i][*enter] <= 0)
                    continue;
                Rational ratio = tab[i][total] / tab[i][*enter];
                if (!leave || ratio < best || (ratio == best && basis[i] < basis[*leave])) {
                    leave = i;
                    best = ratio;
                }
            }
            if (!leave)
                throw InvariantViolation("weight LP unbounded");
            pivot(*leave, *enter);
        }
    };

    std::vector<Rational> phase1(total, Rational(0));
    for (std::size_t j = art_begin; j < total; ++j)
        phase1[j] = 1;
    iterate(phase1, total);
    Rational infeas = 0;
    for (std::size_t i = 0; i < m; ++i)
        if (basis[i] >= art_begin)
            infeas += tab[i][total];
    if (infeas != 0)
        return {};

    // Drive remaining zero-valued artificials out of the basis; rows where
    // that is impossible are redundant and dropped.
    std::vector<std::vector<Rational>> kept;
    std::vector<std::size_t> kept_basis;
    for (std::size_t i = 0; i < m; ++i) {
        if (basis[i] >= art_begin) {
            for (std::size_t j = 0; j < art_begin; ++j) {
                if (tab[i][j] != 0 && std::find(basis.begin(), basis.end(), j) == basis.end()) {
                    pivot(i, j);
                    break;
                }
            }
        }
    }
    for (std::size_t i = 0; i < m; ++i) {
        if (basis[i] < art_begin) {
            kept.push_back(std::move(tab[i]));
            kept_basis.push_back(basis[i]);
        }
    }
    tab = std::move(kept);
    basis = std::move(kept_basis);

    std::vector<Rational> phase2(total, Rational(0));
    for (std::size_t j = 0; j < n; ++j)
        phase2[j] = cost[j];
    iterate(phase2, art_begin);

    LpResult res;
    res.feasible = true;
    res.x.assign(n, Rational(0));
    for (std::size_t i = 0; i < tab.size(); ++i)
        if (basis[i] < n)
            res.x[basis[i]] = tab[i][total];
    res.objective = 0;
    for (std::size_t j = 0; j < n; ++j)
        res.objective += cost[j] * res.x[j];
    return res;
}

struct Constraint {
    std::vector<long> coeffs; // per arrow: weight(a) - weight(u)
    std::string text;
};

std::vector<Constraint> weight_constraints(const DgPresentation& p)
{
    const GradedQuiver& q = p.graph();
    const std::size_t n = q.arrow_count();
    std::vector<Constraint> out;
    std::set<std::vector<long>> seen;
    for (std::size_t i = 0; i < n; ++i) {
        const auto a = static_cast<ArrowIndex>(i);
        for (const auto& [w, c] : p.diff(a).terms()) {
            std::vector<long> row(n, 0);
            row[i] += 1;
            for (auto b : w.arrows())
                row[b] -= 1;
            if (std::all_of(row.begin(), row.end(), [](long v) { return v == 0; }))
                continue;
            if (!seen.insert(row).second)
                continue;
            std::string text = "wt(" + q.arrow(a).id + ") = ";
            if (w.is_lazy()) {
                text += "0";
            } else {
                for (std::size_t k = 0; k < w.length(); ++k)
                    text += (k ? " + wt(" : "wt(") + q.arrow(w.arrows()[k]).id + ")";
            }
            out.push_back({std::move(row), std::move(text)});
        }
    }
    return out;
}

std::vector<LinearRow> to_rows(const std::vector<Constraint>& cs, const std::vector<std::size_t>& pick)
{
    std::vector<LinearRow> rows;
    for (auto k : pick) {
        LinearRow r;
        long rhs = 0;
        for (long v : cs[k].coeffs) {
            r.coeffs.emplace_back(v);
            rhs -= v;
        }
        r.rhs = rhs;
        rows.push_back(std::move(r));
    }
    return rows;
}

bool feasible(const std::vector<Constraint>& cs, const std::vector<std::size_t>& pick, std::size_t n)
{
    std::vector<Rational> cost(n, Rational(1));
    return solve_lp(cost, to_rows(cs, pick)).feasible;
}

} // namespace

WeightAssignment infer_weights(const DgPresentation& p)
{
    const std::size_t n = p.graph().arrow_count();
    const auto cs = weight_constraints(p);
    std::vector<std::size_t> all(cs.size());
    for (std::size_t i = 0; i < all.size(); ++i)
        all[i] = i;

    std::vector<Rational> cost(n, Rational(1));
    const auto base_rows = to_rows(cs, all);
    LpResult root = solve_lp(cost, base_rows);
    if (!root.feasible) {
        // Deletion filter down to a minimal infeasible subset.
        std::vector<std::size_t> core = all;
        for (std::size_t k = 0; k < core.size();) {
            std::vector<std::size_t> trial = core;
            trial.erase(trial.begin() + static_cast<std::ptrdiff_t>(k));
            if (!feasible(cs, trial, n))
                core = std::move(trial);
            else
                ++k;
        }
        std::vector<std::string> texts;
        for (auto k : core)
            texts.push_back(cs[k].text);
        std::string msg = "no admissible weight grading; conflicting constraints:";
        for (const auto& t : texts)
            msg += " [" + t + "]";
        throw WeightGradingError(msg, std::move(texts));
    }

    // Incumbent: scale the LP optimum (in weight space) to integers.
    auto to_weights = [](const std::vector<Rational>& y) {
        std::vector<Rational> w;
        for (const auto& v : y)
            w.push_back(v + 1);
        return w;
    };
    std::vector<long> best;
    Rational best_total;
    {
        auto w = to_weights(root.x);
        Integer l = 1;
        for (const auto& v : w)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
        Rational total = 0;
        for (const auto& v : w) {
            Rational s = v * Rational(l);
            best.push_back(s.get_num().get_si());
            total += s;
        }
        best_total = total;
    }

    struct Node {
        std::vector<std::optional<long>> lo, hi; // bounds on y
    };
    std::vector<Node> stack;
    stack.push_back({std::vector<std::optional<long>>(n), std::vector<std::optional<long>>(n)});
    std::size_t visited = 0;
    while (!stack.empty()) {
        if (++visited > 200000)
            throw ResourceError("weight inference: branch-and-bound node limit exceeded");
        Node node = std::move(stack.back());
        stack.pop_back();
        auto rows = base_rows;
        for (std::size_t j = 0; j < n; ++j) {
            if (node.lo[j]) {
                LinearRow r{std::vector<Rational>(n, Rational(0)), Sense::ge, Rational(*node.lo[j])};
                r.coeffs[j] = 1;
                rows.push_back(std::move(r));
            }
            if (node.hi[j]) {
                LinearRow r{std::vector<Rational>(n, Rational(0)), Sense::le, Rational(*node.hi[j])};
                r.coeffs[j] = 1;
                rows.push_back(std::move(r));
            }
        }
        LpResult lp = solve_lp(cost, rows);
        if (!lp.feasible)
            continue;
        // total weight = objective + n
        if (lp.objective + Rational(static_cast<long>(n)) >= best_total)
            continue;
        std::optional<std::size_t> frac;
        for (std::size_t j = 0; j < n && !frac; ++j)
            if (lp.x[j].get_den() != 1)
                frac = j;
        if (!frac) {
            best.clear();
            for (const auto& v : lp.x)
                best.push_back(v.get_num().get_si() + 1);
            best_total = lp.objective + Rational(static_cast<long>(n));
            continue;
        }
        const std::size_t j = *frac;
        Integer fl;
        mpz_fdiv_q(fl.get_mpz_t(), lp.x[j].get_num_mpz_t(), lp.x[j].get_den_mpz_t());
        Node up = node, down = node;
        up.lo[j] = fl.get_si() + 1;
        down.hi[j] = fl.get_si();
        // explore the lower branch first
        stack.push_back(std::move(up));
        stack.push_back(std::move(down));
    }
    return WeightAssignment(p.quiver(), std::move(best));
}

} // namespace cyq
