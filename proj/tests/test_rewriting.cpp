#include "doctest.h"

#include "cyq/errors.hpp"
#include "cyq/rewriting.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

#include <random>

using namespace cyq;

namespace {

Presentation preprojective_a2()
{
    return h0_presentation(cy_complete_hereditary(fx::a2(), 2));
}

Presentation jacobian_triangle()
{
    auto t = fx::triangle();
    return h0_presentation(ginzburg3(t, fx::abc(t)));
}

Presentation relative_a3() { return h0_presentation(relative_preprojective2(fx::a3(), {"3"})); }

// Auslander algebra of k[x]/(x^3), entered by hand.
Presentation auslander_kx3()
{
    auto q = fx::quiver({{"1", false}, {"2", false}, {"3", false}},
                        {{"i1", "1", "2"}, {"i2", "2", "3"}, {"p1", "2", "1"}, {"p2", "3", "2"}});
    return {q, {fx::path(q, {"p1", "i1"}), fx::path(q, {"i1", "p1"}) - fx::path(q, {"p2", "i2"})}};
}

std::vector<std::size_t> oracle_profile(const Presentation& p, std::size_t max_len)
{
    std::vector<std::size_t> out;
    for (std::size_t l = 0; l <= max_len; ++l)
        out.push_back(oracle::quotient_dim_at_length(p.quiver, p.relations, l));
    return out;
}

} // namespace

TEST_CASE("complete: small examples")
{
    auto pa = complete(preprojective_a2(), 6);
    CHECK(pa.stable());
    CHECK(pa.rules().size() == 2);

    auto jt = complete(jacobian_triangle(), 6);
    CHECK(jt.stable());
    CHECK(jt.rules().size() == 3);

    auto free = complete(Presentation{fx::kronecker(), {}}, 4);
    CHECK(free.stable());
    CHECK(free.rules().empty());
}

TEST_CASE("rules are oriented and interreduced")
{
    auto rs = complete(relative_a3(), 8);
    for (const auto& r : rs.rules()) {
        for (const auto& [w, c] : r.rhs.terms())
            CHECK(w < r.lead);
        CHECK(!rs.irreducible(r.lead));
    }
    // no lead contains another lead
    for (std::size_t i = 0; i < rs.rules().size(); ++i)
        for (std::size_t j = 0; j < rs.rules().size(); ++j) {
            if (i == j)
                continue;
            const auto& a = rs.rules()[i].lead.arrows();
            const auto& b = rs.rules()[j].lead.arrows();
            CHECK(std::search(a.begin(), a.end(), b.begin(), b.end()) == a.end());
        }
}

TEST_CASE("dimension profiles of the named examples")
{
    auto rel = dimension_profile(relative_a3(), 10);
    CHECK(rel.stable);
    CHECK(rel.finite);
    CHECK(rel.total == 14);
    CHECK(rel.per_length == oracle_profile(relative_a3(), 10));

    auto jac = dimension_profile(jacobian_triangle(), 6);
    CHECK(jac.finite);
    CHECK(jac.total == 6);
    CHECK(jac.per_length == oracle_profile(jacobian_triangle(), 6));

    auto pre = dimension_profile(preprojective_a2(), 6);
    CHECK(pre.finite);
    CHECK(pre.total == 4);
    CHECK(pre.per_length == oracle_profile(preprojective_a2(), 6));

    auto free = dimension_profile(Presentation{fx::quiver({{"1", false}}, {{"x", "1", "1"}}), {}}, 5);
    CHECK(free.stable);
    CHECK(!free.finite);
    CHECK(free.total == 6);
}

TEST_CASE("dims_equal")
{
    auto v = dims_equal(relative_a3(), auslander_kx3(), 12);
    CHECK(v.agree);
    CHECK(v.label() == "dimension profiles agree up to length 12");
    CHECK(v.left.total == 14);

    CHECK(dims_equal(jacobian_triangle(), jacobian_triangle(), 5).agree);

    auto double_a2 = preprojective_a2();
    double_a2.relations.clear();
    auto d = dims_equal(preprojective_a2(), double_a2, 6);
    CHECK(!d.agree);
    CHECK(d.first_difference == 2);
    CHECK(d.label() == "dimension profiles differ at length 2");
}

TEST_CASE("non-homogeneous and lazy relations")
{
    auto q = fx::quiver({{"1", false}}, {{"x", "1", "1"}});
    auto x2 = fx::path(q, {"x", "x"}) - AlgebraElement::idempotent(q, "1");
    auto prof = dimension_profile(Presentation{q, {x2}}, 6);
    CHECK(prof.finite);
    CHECK(prof.total == 2);

    auto rs = complete(Presentation{q, {x2}}, 6);
    CHECK(rs.reduce(fx::path(q, {"x", "x", "x"})).to_string() == "x");

    // e_2 = 0 kills every path through 2
    auto a3 = fx::a3();
    auto kill = dimension_profile(Presentation{a3, {AlgebraElement::idempotent(a3, "2")}}, 4);
    CHECK(kill.finite);
    CHECK(kill.total == 2);
}

TEST_CASE("per-length counts match the linear-algebra oracle (random)")
{
    std::mt19937_64 rng(271828);
    for (int trial = 0; trial < 40; ++trial) {
        auto q = fx::random_quiver(rng, 3, 4);
        // random homogeneous length-2 relations
        std::vector<AlgebraElement> rels;
        auto len2 = oracle::paths_of_length(*q, 2);
        if (len2.empty())
            continue;
        std::uniform_int_distribution<std::size_t> pick(0, len2.size() - 1);
        std::uniform_int_distribution<int> coef(-2, 2);
        for (int k = 0; k < 2; ++k) {
            auto w0 = len2[pick(rng)];
            AlgebraElement r = AlgebraElement::word(q, w0);
            for (const auto& w : len2)
                if (w.source() == w0.source() && w.target() == w0.target() && !(w == w0) && rng() % 2)
                    r.add_term(w, coef(rng));
            rels.push_back(r);
        }
        Presentation p{q, rels};
        const std::size_t L = 4;
        auto prof = dimension_profile(p, L);
        CHECK(prof.per_length == oracle_profile(p, L));
    }
}

TEST_CASE("reduction is confluent on stable systems and idempotent")
{
    std::vector<Presentation> cases{relative_a3(), jacobian_triangle(), preprojective_a2(), auslander_kx3()};
    std::mt19937_64 rng(11);
    for (const auto& p : cases) {
        auto rs = complete(p, 10);
        REQUIRE(rs.stable());
        for (std::size_t len = 0; len <= 6; ++len)
            for (const auto& w : oracle::paths_of_length(*p.quiver, len)) {
                auto x = AlgebraElement::word(p.quiver, w);
                auto l = rs.reduce(x, ReductionStrategy::leftmost);
                auto r = rs.reduce(x, ReductionStrategy::rightmost);
                auto z = rs.reduce(x, ReductionStrategy::random, rng());
                CHECK(l == r);
                CHECK(l == z);
                CHECK(rs.reduce(l) == l);
            }
    }
}

TEST_CASE("rule cap")
{
    CompletionOptions opt;
    opt.rule_cap = 1;
    CHECK_THROWS_AS(complete(relative_a3(), 8, opt), ResourceError);
}

TEST_CASE("truncated completion is reported")
{
    // One loop with x y x = y x y style relation on two loops: its Groebner
    // basis is infinite, so no bound certifies stability.
    auto q = fx::quiver({{"1", false}}, {{"x", "1", "1"}, {"y", "1", "1"}});
    auto r = fx::path(q, {"y", "x", "y"}) - fx::path(q, {"x", "y", "x"});
    auto rs = complete(Presentation{q, {r}}, 6);
    CHECK(!rs.stable());
    auto prof = dimension_profile(rs);
    CHECK(!prof.finite);
    CHECK(prof.per_length == oracle_profile(Presentation{q, {r}}, 6));
}
