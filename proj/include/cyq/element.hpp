#pragma once

#include "cyq/quiver.hpp"
#include "cyq/rational.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace cyq {

// Exact-rational linear combination of paths over one quiver.
// Terms are kept in path order with no zero coefficients.
class AlgebraElement {
public:
    using Terms = std::map<PathWord, Rational>;

    AlgebraElement() = default;
    explicit AlgebraElement(QuiverPtr quiver) : quiver_(std::move(quiver)) {}

    static AlgebraElement word(QuiverPtr quiver, PathWord w, const Rational& c = 1);
    static AlgebraElement arrow(QuiverPtr quiver, std::string_view id);
    static AlgebraElement idempotent(QuiverPtr quiver, std::string_view vertex);
    // Arrow ids, read left to right ("a", "b" -> the path ab).
    static AlgebraElement path(QuiverPtr quiver, const std::vector<std::string>& arrow_ids);

    const QuiverPtr& quiver() const noexcept { return quiver_; }
    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }

    // Degree if all words share one degree; nullopt for 0 and mixed elements.
    std::optional<int> degree() const;
    bool is_homogeneous() const;

    Rational coefficient(const PathWord& w) const;
    void add_term(const PathWord& w, const Rational& c);

    AlgebraElement& operator+=(const AlgebraElement& other);
    AlgebraElement& operator-=(const AlgebraElement& other);
    AlgebraElement& operator*=(const Rational& c);

    friend AlgebraElement operator+(AlgebraElement x, const AlgebraElement& y) { return x += y; }
    friend AlgebraElement operator-(AlgebraElement x, const AlgebraElement& y) { return x -= y; }
    friend AlgebraElement operator-(AlgebraElement x) { return x *= Rational(-1); }
    friend AlgebraElement operator*(AlgebraElement x, const Rational& c) { return x *= c; }
    friend AlgebraElement operator*(const Rational& c, AlgebraElement x) { return x *= c; }
    friend AlgebraElement operator*(const AlgebraElement& x, const AlgebraElement& y);

    // Equal terms over the same quiver; the zero element compares equal to
    // any other zero.
    friend bool operator==(const AlgebraElement& x, const AlgebraElement& y);

    // Terms in ascending path order, "p/q*" coefficients, "0" for zero.
    std::string to_string() const;

private:
    void require_same_quiver(const AlgebraElement& other) const;

    QuiverPtr quiver_;
    Terms terms_;
};

// Bilinear extension of path concatenation. No Koszul sign in the product.
AlgebraElement multiply(const AlgebraElement& x, const AlgebraElement& y);

// Homogeneous components keyed by cohomological degree.
std::map<int, AlgebraElement> decompose_by_degree(const AlgebraElement& x);

// Positive integer weights on arrows; the weight of a path is the sum.
class WeightAssignment {
public:
    WeightAssignment() = default;
    WeightAssignment(QuiverPtr quiver, std::vector<long> weights);

    const QuiverPtr& quiver() const noexcept { return quiver_; }
    const std::vector<long>& values() const noexcept { return weights_; }
    long of_arrow(ArrowIndex a) const { return weights_.at(a); }
    long of_word(const PathWord& w) const;
    // Weight if all words share one weight; nullopt otherwise (and for 0).
    std::optional<long> of_element(const AlgebraElement& x) const;

    friend bool operator==(const WeightAssignment& x, const WeightAssignment& y)
    {
        return same_quiver(x.quiver_, y.quiver_) && x.weights_ == y.weights_;
    }

private:
    QuiverPtr quiver_;
    std::vector<long> weights_;
};

} // namespace cyq
