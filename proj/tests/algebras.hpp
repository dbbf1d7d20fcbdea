#pragma once

#include "fixtures.hpp"
#include "oracles.hpp"

#include "cyq/cyclic.hpp"

#include <random>

namespace fx {

using namespace cyq;

inline oracle::Alg to_dense(const FiniteDimAlgebra& a)
{
    oracle::Alg d;
    d.dim = a.dim();
    d.mult.assign(d.dim, std::vector<std::vector<Rational>>(d.dim, std::vector<Rational>(d.dim)));
    for (std::size_t i = 0; i < d.dim; ++i)
        for (std::size_t j = 0; j < d.dim; ++j)
            for (const auto& [k, c] : a.mul(i, j))
                d.mult[i][j][k] = c;
    d.unit.assign(d.dim, 0);
    for (const auto& [k, c] : a.unit())
        d.unit[k] = c;
    return d;
}

inline FiniteDimAlgebra dual_numbers()
{
    std::vector<std::vector<SparseVector>> m(2, std::vector<SparseVector>(2));
    m[0][0] = {{0, 1}};
    m[0][1] = {{1, 1}};
    m[1][0] = {{1, 1}};
    return FiniteDimAlgebra::build({"1", "x"}, m, {{{0, 1}}});
}

inline Presentation path_algebra(const QuiverPtr& q) { return Presentation{q, {}}; }

// Acyclic quiver on up to 3 vertices with up to 3 arrows, optionally killing
// one length-2 path; always finite-dimensional.
inline FiniteDimAlgebra random_algebra(std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> nv(1, 3), na(0, 3);
    const int v = nv(rng);
    std::vector<std::pair<std::string, bool>> verts;
    for (int i = 0; i < v; ++i)
        verts.push_back({"v" + std::to_string(i), false});
    std::vector<fx::ArrowSpec> arrows;
    const int a = v == 1 ? 0 : na(rng);
    for (int i = 0; i < a; ++i) {
        std::uniform_int_distribution<int> s(0, v - 2);
        const int src = s(rng);
        std::uniform_int_distribution<int> t(src + 1, v - 1);
        arrows.push_back({"x" + std::to_string(i), "v" + std::to_string(src), "v" + std::to_string(t(rng))});
    }
    auto q = fx::quiver(verts, arrows);
    Presentation p{q, {}};
    for (std::size_t i = 0; i < q->arrow_count(); ++i)
        for (std::size_t j = 0; j < q->arrow_count(); ++j) {
            auto w = concat(PathWord::from_arrows(*q, {static_cast<ArrowIndex>(i)}),
                            PathWord::from_arrows(*q, {static_cast<ArrowIndex>(j)}));
            if (w && rng() % 2 == 0 && p.relations.empty())
                p.relations.push_back(AlgebraElement::word(q, *w));
        }
    auto alg = FiniteDimAlgebra::from_presentation(p);
    if (alg.dim() <= 2 && rng() % 2 == 0)
        return FiniteDimAlgebra::product(alg, dual_numbers());
    return alg;
}

} // namespace fx
