#pragma once

#include "cyq/completions.hpp"
#include "cyq/dg.hpp"
#include "cyq/element.hpp"
#include "cyq/quiver.hpp"

#include <random>
#include <string>
#include <tuple>
#include <vector>

namespace fx {

using namespace cyq;

struct ArrowSpec {
    std::string id, source, target;
    int degree = 0;
    bool frozen = false;
};

inline QuiverPtr quiver(const std::vector<std::pair<std::string, bool>>& vertices, const std::vector<ArrowSpec>& arrows)
{
    GradedQuiver q;
    for (const auto& [id, frozen] : vertices)
        q.add_vertex(id, frozen);
    for (const auto& a : arrows)
        q.add_arrow(a.id, a.source, a.target, a.degree, a.frozen);
    return share(std::move(q));
}

inline AlgebraElement path(const QuiverPtr& q, const std::vector<std::string>& ids)
{
    return AlgebraElement::path(q, ids);
}

// b: 1 -> 3, a: 3 -> 2, c: 2 -> 1; abc is a 3-cycle at 2.
inline QuiverPtr triangle(bool ice = false)
{
    return quiver({{"1", ice}, {"2", false}, {"3", ice}},
                  {{"a", "3", "2"}, {"b", "1", "3", 0, ice}, {"c", "2", "1"}});
}

inline Potential abc(const QuiverPtr& q) { return cyclic_normalize(path(q, {"a", "b", "c"})); }

// 1 -b-> 2 -a-> 3
inline QuiverPtr a3(bool frozen3 = false)
{
    return quiver({{"1", false}, {"2", false}, {"3", frozen3}}, {{"a", "2", "3"}, {"b", "1", "2"}});
}

// 1 -a-> 2
inline QuiverPtr a2() { return quiver({{"1", false}, {"2", false}}, {{"a", "1", "2"}}); }

inline QuiverPtr kronecker()
{
    return quiver({{"1", false}, {"2", false}}, {{"x", "1", "2"}, {"y", "1", "2"}});
}

inline QuiverPtr point() { return quiver({{"1", false}}, {}); }

// Resolution example: 1 -b-> 2 -a-> 3 with c: 1 -> 3 of degree -1, d(c) = ab.
inline DgPresentation resolution_a3()
{
    auto q = a3();
    return partial_resolution(q, {path(q, {"a", "b"})}, {"c"});
}

// Random ungraded quiver: up to max_v vertices, up to max_a arrows.
inline QuiverPtr random_quiver(std::mt19937_64& rng, int max_v = 6, int max_a = 10)
{
    std::uniform_int_distribution<int> nv(1, max_v), na(0, max_a);
    const int v = nv(rng), a = na(rng);
    GradedQuiver q;
    for (int i = 0; i < v; ++i)
        q.add_vertex("v" + std::to_string(i));
    std::uniform_int_distribution<int> pick(0, v - 1);
    for (int i = 0; i < a; ++i)
        q.add_arrow("x" + std::to_string(i), static_cast<VertexIndex>(pick(rng)), static_cast<VertexIndex>(pick(rng)));
    return share(std::move(q));
}

// Random combination of closed paths of length 3 (cubic potential).
inline Potential random_cubic_potential(std::mt19937_64& rng, const QuiverPtr& qp, int max_terms = 4)
{
    const GradedQuiver& q = *qp;
    std::vector<PathWord> cycles;
    for (ArrowIndex x = 0; x < q.arrow_count(); ++x)
        for (ArrowIndex y = 0; y < q.arrow_count(); ++y)
            for (ArrowIndex z = 0; z < q.arrow_count(); ++z) {
                if (q.arrow(x).source != q.arrow(y).target || q.arrow(y).source != q.arrow(z).target ||
                    q.arrow(z).source != q.arrow(x).target)
                    continue;
                cycles.push_back(PathWord::from_arrows(q, {x, y, z}));
            }
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

} // namespace fx
