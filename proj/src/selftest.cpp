#include "cyq/selftest.hpp"

#include "cyq/completions.hpp"
#include "cyq/errors.hpp"

#include <set>

namespace cyq {

QuiverPtr random_quiver(std::mt19937_64& rng, int max_v, int max_a, double frozen_rate)
{
    std::uniform_int_distribution<int> nv(1, max_v), na(0, max_a);
    std::bernoulli_distribution freeze(frozen_rate);
    const int v = nv(rng), a = na(rng);
    GradedQuiver q;
    for (int i = 0; i < v; ++i)
        q.add_vertex("v" + std::to_string(i), freeze(rng));
    std::uniform_int_distribution<int> pick(0, v - 1);
    for (int i = 0; i < a; ++i) {
        const auto s = static_cast<VertexIndex>(pick(rng));
        const auto t = static_cast<VertexIndex>(pick(rng));
        const bool frozen = q.vertex(s).frozen && q.vertex(t).frozen && freeze(rng);
        q.add_arrow("x" + std::to_string(i), s, t, 0, frozen);
    }
    return share(std::move(q));
}

Potential random_cubic_potential(std::mt19937_64& rng, const QuiverPtr& qp, int max_terms)
{
    const GradedQuiver& q = *qp;
    std::vector<PathWord> cycles;
    for (ArrowIndex x = 0; x < q.arrow_count(); ++x)
        for (ArrowIndex y = 0; y < q.arrow_count(); ++y)
            for (ArrowIndex z = 0; z < q.arrow_count(); ++z)
                if (q.arrow(x).source == q.arrow(y).target && q.arrow(y).source == q.arrow(z).target &&
                    q.arrow(z).source == q.arrow(x).target)
                    cycles.push_back(PathWord::from_arrows(q, {x, y, z}));
    AlgebraElement w(qp);
    if (cycles.empty())
        return cyclic_normalize(w);
    std::uniform_int_distribution<std::size_t> pick(0, cycles.size() - 1);
    std::uniform_int_distribution<int> coef(-3, 3);
    std::uniform_int_distribution<int> count(1, max_terms);
    for (int k = count(rng); k > 0; --k)
        w.add_term(cycles[pick(rng)], coef(rng));
    return cyclic_normalize(w);
}

namespace {

std::vector<AlgebraElement> random_relations(std::mt19937_64& rng, const QuiverPtr& qp)
{
    const GradedQuiver& q = *qp;
    std::vector<AlgebraElement> rels;
    for (ArrowIndex x = 0; x < q.arrow_count(); ++x)
        for (ArrowIndex y = 0; y < q.arrow_count(); ++y)
            if (q.arrow(x).source == q.arrow(y).target && rng() % 3 == 0)
                rels.push_back(AlgebraElement::word(qp, PathWord::from_arrows(q, {x, y})));
    return rels;
}

} // namespace

SelfTestReport constructor_self_test(std::uint64_t seed, std::size_t trials)
{
    SelfTestReport r;
    r.seed = seed;
    r.trials = trials;
    std::mt19937_64 rng(seed);
    for (std::size_t t = 0; t < trials; ++t) {
        auto q = random_quiver(rng, 6, 10, 0.3);
        auto w = random_cubic_potential(rng, q);
        std::set<std::string> frozen;
        for (const auto& v : q->vertices())
            if (v.frozen)
                frozen.insert(v.id);
        auto check = [&](const std::string& name, auto make) {
            ++r.checks;
            try {
                DgPresentation p = make();
                auto cert = check_d_squared(p);
                if (!cert.ok())
                    r.failures.push_back("trial " + std::to_string(t) + ": " + name + ": d^2(" +
                                         p.graph().arrow(cert.failures.front().arrow).id +
                                         ") = " + cert.failures.front().value.to_string());
            } catch (const std::exception& e) {
                r.failures.push_back("trial " + std::to_string(t) + ": " + name + ": " + e.what());
            }
        };
        check("ginzburg3", [&] { return ginzburg3(q, w); });
        check("relative_ginzburg3", [&] { return relative_ginzburg3({q, w}); });
        for (int n = 2; n <= 4; ++n)
            check("cy_complete_hereditary n=" + std::to_string(n), [&] { return cy_complete_hereditary(q, n); });
        check("relative_preprojective2", [&] { return relative_preprojective2(q, frozen); });
        auto rels = random_relations(rng, q);
        check("partial_resolution", [&] { return partial_resolution(q, rels); });
    }
    return r;
}

} // namespace cyq
