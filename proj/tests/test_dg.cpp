#include "doctest.h"

#include "cyq/errors.hpp"
#include "fixtures.hpp"

#include <random>

using namespace cyq;

TEST_CASE("extend_leibniz on the resolution example")
{
    auto p = fx::resolution_a3();
    auto q = p.quiver();
    CHECK(extend_leibniz(p, AlgebraElement::arrow(q, "c")).to_string() == "a*b");
    CHECK(extend_leibniz(p, AlgebraElement::arrow(q, "a")).is_zero());
    CHECK(extend_leibniz(p, AlgebraElement::idempotent(q, "2")).is_zero());
    // c a is not composable here (source(c) = 1, target(a) = 3), so it is 0.
    auto ca = AlgebraElement::arrow(q, "c") * AlgebraElement::arrow(q, "a");
    CHECK(ca.is_zero());
    CHECK(extend_leibniz(p, ca).is_zero());
}

TEST_CASE("extend_leibniz on a composable product with a degree -1 factor")
{
    // 0 -x-> 1 -b-> 2 -a-> 3, c : 1 -> 3 of degree -1, d(c) = ab.
    auto base = fx::quiver({{"0", false}, {"1", false}, {"2", false}, {"3", false}},
                           {{"x", "0", "1"}, {"b", "1", "2"}, {"a", "2", "3"}});
    auto p = partial_resolution(base, {fx::path(base, {"a", "b"})}, {"c"});
    auto q = p.quiver();
    // d(c x) = d(c) x + (-1)^{-1} c d(x) = a b x
    auto cx = fx::path(q, {"c", "x"});
    CHECK(extend_leibniz(p, cx).to_string() == "a*b*x");
    // a sign appears when the degree -1 arrow is on the right: d(y c) for y : 3 -> 4
    auto base2 = fx::quiver({{"1", false}, {"2", false}, {"3", false}, {"4", false}},
                            {{"b", "1", "2"}, {"a", "2", "3"}, {"y", "3", "4"}});
    auto p2 = partial_resolution(base2, {fx::path(base2, {"a", "b"})}, {"c"});
    auto q2 = p2.quiver();
    CHECK(extend_leibniz(p2, fx::path(q2, {"y", "c"})).to_string() == "y*a*b");
}

TEST_CASE("check_d_squared")
{
    CHECK(check_d_squared(fx::resolution_a3()).ok());
    CHECK(check_d_squared(DgPresentation::zero(fx::triangle())).ok());

    // Ginzburg triangle with the c bar_c term dropped from d(t_1):
    // d(t_1) = -bar_b b, so d^2(t_1) = -d(bar_b) b = -c a b.
    auto g = ginzburg3(fx::triangle(), fx::abc(fx::triangle()));
    auto diff = g.differentials();
    auto q = g.quiver();
    const auto t1 = q->arrow_index("t_1");
    CHECK(diff[t1].to_string() == "c*bar_c - bar_b*b");
    diff[t1] = -fx::path(q, {"bar_b", "b"});
    auto broken = DgPresentation::unverified(q, diff);
    auto cert = check_d_squared(broken);
    REQUIRE(cert.failures.size() == 1);
    CHECK(cert.failures[0].arrow == t1);
    CHECK(cert.failures[0].value.to_string() == "-c*a*b");
    CHECK_THROWS_AS(DgPresentation::build(q, diff), InvariantViolation);
}

TEST_CASE("structural checks on differentials")
{
    auto q = fx::quiver({{"1", false}, {"2", false}}, {{"a", "1", "2"}, {"h", "1", "2", -1}, {"u", "1", "2", 1}});
    std::vector<AlgebraElement> diff(3, AlgebraElement(q));
    diff[1] = AlgebraElement::arrow(q, "h"); // wrong degree
    CHECK_THROWS_AS(DgPresentation::unverified(q, diff), ValidationError);
    diff[1] = AlgebraElement::idempotent(q, "1"); // wrong endpoints
    CHECK_THROWS_AS(DgPresentation::unverified(q, diff), ValidationError);
    diff[1] = AlgebraElement::arrow(q, "a");
    auto p = DgPresentation::build(q, diff);
    CHECK(p.certified());
    CHECK(p.warnings().size() == 1); // positive-degree arrow u
}

TEST_CASE("graded Leibniz rule on random products")
{
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 25; ++trial) {
        auto base = fx::random_quiver(rng, 4, 6);
        auto p = ginzburg3(base, fx::random_cubic_potential(rng, base));
        const auto& q = p.graph();
        auto qp = p.quiver();
        // all words of length <= 3 as homogeneous test elements
        std::vector<PathWord> words;
        for (VertexIndex v = 0; v < q.vertex_count(); ++v)
            words.push_back(PathWord::lazy(q, v));
        for (std::size_t len = 1; len <= 2; ++len) {
            std::vector<PathWord> next;
            for (const auto& w : words) {
                if (w.length() != len - 1)
                    continue;
                for (ArrowIndex a = 0; a < q.arrow_count(); ++a) {
                    auto aw = concat(PathWord::of_arrow(q, a), w);
                    if (aw)
                        next.push_back(*aw);
                }
            }
            words.insert(words.end(), next.begin(), next.end());
        }
        std::uniform_int_distribution<std::size_t> pick(0, words.size() - 1);
        for (int k = 0; k < 30; ++k) {
            auto x = AlgebraElement::word(qp, words[pick(rng)], 2);
            auto y = AlgebraElement::word(qp, words[pick(rng)], -1) + AlgebraElement::word(qp, words[pick(rng)]);
            auto yh = decompose_by_degree(y);
            if (yh.empty())
                continue;
            y = yh.begin()->second;
            const int dx = *x.degree();
            auto lhs = extend_leibniz(p, x * y);
            auto rhs = extend_leibniz(p, x) * y + Rational(dx % 2 == 0 ? 1 : -1) * (x * extend_leibniz(p, y));
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("cyclic derivatives")
{
    auto tq = fx::triangle();
    auto w = fx::abc(tq);
    CHECK(cyclic_derivative(w, "a").to_string() == "b*c");
    CHECK(cyclic_derivative(w, "b").to_string() == "c*a");
    CHECK(cyclic_derivative(w, "c").to_string() == "a*b");

    // d_a(W) = 0 when a does not occur
    auto q2 = fx::quiver({{"1", false}}, {{"x", "1", "1"}, {"y", "1", "1"}});
    auto wx = cyclic_normalize(fx::path(q2, {"x", "x", "x"}));
    CHECK(cyclic_derivative(wx, "y").is_zero());
    CHECK(cyclic_derivative(wx, "x").to_string() == "3*x*x");
    CHECK_THROWS_AS(cyclic_derivative(wx, "z"), ValidationError);

    // a : u -> v, b, c : v -> u; abac has two occurrences of a.
    auto q3 = fx::quiver({{"u", false}, {"v", false}}, {{"a", "u", "v"}, {"b", "v", "u"}, {"c", "v", "u"}});
    auto abac = fx::path(q3, {"a", "b", "a", "c"});
    auto expect = fx::path(q3, {"b", "a", "c"}) + fx::path(q3, {"c", "a", "b"});
    CHECK(cyclic_derivative(abac, q3->arrow_index("a")) == expect);
    CHECK(cyclic_derivative(cyclic_normalize(abac), "a") == expect);
}

TEST_CASE("cyclic derivative is rotation invariant (random)")
{
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 40; ++trial) {
        auto q = fx::random_quiver(rng, 3, 6);
        auto w = fx::random_cubic_potential(rng, q);
        for (const auto& [word, c] : w.cycles().terms()) {
            auto rotated = word.slice(*q, 1, word.length());
            auto rot = concat(rotated, word.slice(*q, 0, 1));
            REQUIRE(rot);
            for (ArrowIndex a = 0; a < q->arrow_count(); ++a)
                CHECK(cyclic_derivative(AlgebraElement::word(q, word), a) ==
                      cyclic_derivative(AlgebraElement::word(q, *rot), a));
        }
    }
}

TEST_CASE("cyclic normal form")
{
    auto q = fx::triangle();
    CHECK(cyclic_normalize(fx::path(q, {"a", "b", "c"})) == cyclic_normalize(fx::path(q, {"b", "c", "a"})));
    CHECK(cyclic_normalize(fx::path(q, {"a", "b", "c"}) - fx::path(q, {"c", "a", "b"})).is_zero());
    auto w = cyclic_normalize(fx::path(q, {"b", "c", "a"}));
    CHECK(w.to_string() == "a*b*c");
    CHECK(cyclic_normalize(w.cycles()) == w);
    CHECK_THROWS_AS(cyclic_normalize(fx::path(q, {"a", "b"})), ValidationError);

    // two disjoint triangles
    auto q2 = fx::quiver({{"1", false}, {"2", false}, {"3", false}, {"4", false}, {"5", false}, {"6", false}},
                         {{"a", "3", "2"}, {"b", "1", "3"}, {"c", "2", "1"},
                          {"a2", "6", "5"}, {"b2", "4", "6"}, {"c2", "5", "4"}});
    auto w2 = cyclic_normalize(fx::path(q2, {"a", "b", "c"}) - fx::path(q2, {"b2", "c2", "a2"}));
    REQUIRE(w2.cycles().size() == 2);
    CHECK(w2.to_string() == "a*b*c - a2*b2*c2");

    auto graded = fx::quiver({{"1", false}}, {{"t", "1", "1", -1}});
    CHECK_THROWS_AS(cyclic_normalize(AlgebraElement::arrow(graded, "t")), ValidationError);
}
