#include "doctest.h"

#include "cyq/errors.hpp"
#include "cyq/homology.hpp"
#include "fixtures.hpp"

#include <random>

using namespace cyq;

namespace {

std::string d(const DgPresentation& p, const std::string& arrow) { return p.diff(arrow).to_string(); }

std::vector<std::string> arrow_ids(const DgPresentation& p)
{
    std::vector<std::string> out;
    for (const auto& a : p.graph().arrows())
        out.push_back(a.id);
    return out;
}

bool same_presentation(const DgPresentation& x, const DgPresentation& y)
{
    if (!(x.graph().arrows() == y.graph().arrows()) || x.graph().vertex_count() != y.graph().vertex_count())
        return false;
    for (std::size_t i = 0; i < x.graph().arrow_count(); ++i)
        if (x.diff(static_cast<ArrowIndex>(i)).to_string() != y.diff(static_cast<ArrowIndex>(i)).to_string())
            return false;
    return true;
}

} // namespace

TEST_CASE("ginzburg3 of the triangle with W = abc")
{
    auto q = fx::triangle();
    auto g = ginzburg3(q, fx::abc(q));
    CHECK(g.certified());
    CHECK(arrow_ids(g) == std::vector<std::string>{"a", "b", "c", "bar_a", "bar_b", "bar_c", "t_1", "t_2", "t_3"});
    CHECK(d(g, "t_1") == "c*bar_c - bar_b*b");
    CHECK(d(g, "t_2") == "a*bar_a - bar_c*c");
    CHECK(d(g, "t_3") == "b*bar_b - bar_a*a");
    CHECK(d(g, "bar_a") == "b*c");
    CHECK(d(g, "bar_b") == "c*a");
    CHECK(d(g, "bar_c") == "a*b");
    CHECK(g.graph().arrow(g.graph().arrow_index("bar_a")).degree == -1);
    CHECK(g.graph().arrow(g.graph().arrow_index("t_1")).degree == -2);
    // bar_a : 2 -> 3 reverses a : 3 -> 2
    const auto& ba = g.graph().arrow(g.graph().arrow_index("bar_a"));
    CHECK(g.graph().vertex(ba.source).id == "2");
    CHECK(g.graph().vertex(ba.target).id == "3");
}

TEST_CASE("ginzburg3 degenerate inputs")
{
    auto pt = ginzburg3(fx::point(), Potential());
    REQUIRE(pt.graph().arrow_count() == 1);
    CHECK(pt.graph().arrow(0).id == "t_1");
    CHECK(pt.graph().arrow(0).degree == -2);
    CHECK(pt.diff(0).is_zero());

    auto q = fx::triangle();
    auto g0 = ginzburg3(q, cyclic_normalize(AlgebraElement(q)));
    for (const char* a : {"bar_a", "bar_b", "bar_c"})
        CHECK(g0.diff(a).is_zero());
    CHECK(d(g0, "t_2") == "a*bar_a - bar_c*c");

    auto other = fx::a3();
    CHECK_THROWS_AS(ginzburg3(other, fx::abc(q)), StructuralError);
    auto clash = fx::quiver({{"1", false}}, {{"x", "1", "1"}, {"bar_x", "1", "1"}});
    try {
        ginzburg3(clash, Potential());
        FAIL("expected a name collision");
    } catch (const ValidationError& e) {
        CHECK(e.code() == "name-collision");
    }
    auto graded = fx::quiver({{"1", false}}, {{"t", "1", "1", -1}});
    CHECK_THROWS_AS(ginzburg3(graded, Potential()), UnsupportedInput);
}

TEST_CASE("relative_ginzburg3")
{
    auto q = fx::triangle(true);
    auto r = relative_ginzburg3({q, fx::abc(q)});
    CHECK(arrow_ids(r) == std::vector<std::string>{"a", "b", "c", "bar_a", "bar_c", "t_2"});
    CHECK(d(r, "bar_a") == "b*c");
    CHECK(d(r, "bar_c") == "a*b");
    CHECK(d(r, "t_2") == "a*bar_a - bar_c*c");
    CHECK(r.certified());

    auto all = fx::quiver({{"1", true}, {"2", true}}, {{"x", "1", "2", 0, true}});
    auto ra = relative_ginzburg3({all, cyclic_normalize(AlgebraElement(all))});
    CHECK(arrow_ids(ra) == std::vector<std::string>{"x"});
    CHECK(ra.diff(0).is_zero());

    auto plain = fx::triangle();
    CHECK(same_presentation(relative_ginzburg3({plain, fx::abc(plain)}), ginzburg3(plain, fx::abc(plain))));
}

TEST_CASE("cy_complete_hereditary")
{
    for (int n = 1; n <= 5; ++n) {
        auto p = cy_complete_hereditary(fx::point(), n);
        REQUIRE(p.graph().arrow_count() == 1);
        CHECK(p.graph().arrow(0).degree == 1 - n);
        CHECK(p.diff(0).is_zero());
    }
    auto p = cy_complete_hereditary(fx::a3(), 2);
    CHECK(d(p, "t_1") == "-bar_b*b");
    CHECK(d(p, "t_2") == "b*bar_b - bar_a*a");
    CHECK(d(p, "t_3") == "a*bar_a");

    auto k = cy_complete_hereditary(fx::kronecker(), 2);
    CHECK(k.graph().arrow_count() == 6);
    CHECK(check_d_squared(k).ok());

    // n = 3 is the Ginzburg algebra with zero potential.
    auto t = fx::triangle();
    CHECK(same_presentation(cy_complete_hereditary(t, 3), ginzburg3(t, cyclic_normalize(AlgebraElement(t)))));

    for (int n = 1; n <= 5; ++n) {
        auto c = cy_complete_hereditary(fx::kronecker(), n);
        for (std::size_t i = 2; i < c.graph().arrow_count(); ++i) {
            const int deg = c.graph().arrow(static_cast<ArrowIndex>(i)).degree;
            CHECK((deg == 2 - n || deg == 1 - n));
        }
    }
    CHECK_THROWS_AS(cy_complete_hereditary(fx::a2(), 0), ValidationError);
}

TEST_CASE("relative_preprojective2")
{
    auto p = relative_preprojective2(fx::a3(), {"3"});
    CHECK(arrow_ids(p) == std::vector<std::string>{"a", "b", "bar_a", "bar_b", "t_1", "t_2"});
    CHECK(d(p, "t_1") == "-bar_b*b");
    CHECK(d(p, "t_2") == "b*bar_b - bar_a*a");
    CHECK(p.graph().vertex(2).frozen);

    auto all = relative_preprojective2(fx::a3(), {"1", "2", "3"});
    CHECK(arrow_ids(all) == std::vector<std::string>{"a", "b", "bar_a", "bar_b"});
    for (const auto& x : all.differentials())
        CHECK(x.is_zero());

    CHECK(same_presentation(relative_preprojective2(fx::a3(), {}), cy_complete_hereditary(fx::a3(), 2)));
    CHECK_THROWS_AS(relative_preprojective2(fx::a3(), {"9"}), ValidationError);
}

TEST_CASE("relation_completion")
{
    auto q = fx::a3();
    auto rc = relation_completion(q, {fx::path(q, {"a", "b"})}, {"c"});
    const auto& c = rc.quiver->arrow(rc.quiver->arrow_index("c"));
    CHECK(rc.quiver->vertex(c.source).id == "3");
    CHECK(rc.quiver->vertex(c.target).id == "1");
    CHECK(rc.potential.to_string() == "a*b*c");

    auto empty = relation_completion(q, {});
    CHECK(empty.potential.is_zero());
    CHECK(*empty.quiver == *q);

    auto a4 = fx::quiver({{"1", false}, {"2", false}, {"3", false}, {"4", false}},
                         {{"a", "3", "4"}, {"b", "2", "3"}, {"c", "1", "2"}});
    auto two = relation_completion(a4, {fx::path(a4, {"a", "b"}), fx::path(a4, {"b", "c"})});
    CHECK(two.potential.cycles().size() == 2);
    CHECK(two.potential.to_string() == "a*b*rho_1 + b*c*rho_2");

    auto mixed = fx::path(q, {"a", "b"}) + AlgebraElement::arrow(q, "a");
    try {
        relation_completion(q, {mixed});
        FAIL("expected endpoint error");
    } catch (const ValidationError& e) {
        CHECK(e.code() == "relation-endpoints");
    }
}

TEST_CASE("partial_resolution")
{
    auto p = fx::resolution_a3();
    const auto& c = p.graph().arrow(p.graph().arrow_index("c"));
    CHECK(c.degree == -1);
    CHECK(p.graph().vertex(c.source).id == "1");
    CHECK(p.graph().vertex(c.target).id == "3");
    CHECK(d(p, "c") == "a*b");
    CHECK(partial_resolution(fx::a3(), {}).graph().arrow_count() == 2);

    // commutative square 1 -> 2 -> 4, 1 -> 3 -> 4
    auto sq = fx::quiver({{"1", false}, {"2", false}, {"3", false}, {"4", false}},
                         {{"x", "1", "2"}, {"y", "2", "4"}, {"u", "1", "3"}, {"v", "3", "4"}});
    auto r = partial_resolution(sq, {fx::path(sq, {"y", "x"}) - fx::path(sq, {"v", "u"})});
    CHECK(r.graph().arrow_count() == 5);
    CHECK(d(r, "c_1") == "y*x - v*u");
}

TEST_CASE("every constructor output satisfies d^2 = 0 (random)")
{
    std::mt19937_64 rng(31337);
    for (int trial = 0; trial < 30; ++trial) {
        auto q = fx::random_quiver(rng);
        auto w = fx::random_cubic_potential(rng, q);
        CHECK(check_d_squared(ginzburg3(q, w)).ok());
        for (int n = 2; n <= 4; ++n)
            CHECK(check_d_squared(cy_complete_hereditary(q, n)).ok());
        std::set<std::string> f;
        for (const auto& v : q->vertices())
            if (rng() % 2)
                f.insert(v.id);
        CHECK(check_d_squared(relative_preprojective2(q, f)).ok());
    }
}

TEST_CASE("H0 of a Ginzburg algebra is the Jacobian presentation")
{
    std::mt19937_64 rng(4242);
    for (int trial = 0; trial < 20; ++trial) {
        auto q = fx::random_quiver(rng, 4, 8);
        auto w = fx::random_cubic_potential(rng, q);
        auto h0 = h0_presentation(ginzburg3(q, w));
        std::vector<std::string> expect;
        for (ArrowIndex a = 0; a < q->arrow_count(); ++a) {
            auto r = cyclic_derivative(w, a);
            if (!r.is_zero())
                expect.push_back(r.to_string());
        }
        std::vector<std::string> got;
        for (const auto& r : h0.relations)
            got.push_back(r.to_string());
        CHECK(got == expect);
        CHECK(*h0.quiver == *q);
    }
}
