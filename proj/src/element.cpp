#include "cyq/element.hpp"

#include "cyq/errors.hpp"

namespace cyq {

AlgebraElement AlgebraElement::word(QuiverPtr quiver, PathWord w, const Rational& c)
{
    AlgebraElement x(std::move(quiver));
    x.add_term(w, c);
    return x;
}

AlgebraElement AlgebraElement::arrow(QuiverPtr quiver, std::string_view id)
{
    auto a = quiver->arrow_index(id);
    auto w = PathWord::of_arrow(*quiver, a);
    return word(std::move(quiver), std::move(w));
}

AlgebraElement AlgebraElement::idempotent(QuiverPtr quiver, std::string_view vertex)
{
    auto v = quiver->vertex_index(vertex);
    auto w = PathWord::lazy(*quiver, v);
    return word(std::move(quiver), std::move(w));
}

AlgebraElement AlgebraElement::path(QuiverPtr quiver, const std::vector<std::string>& arrow_ids)
{
    std::vector<ArrowIndex> seq;
    for (const auto& id : arrow_ids)
        seq.push_back(quiver->arrow_index(id));
    auto w = PathWord::from_arrows(*quiver, std::move(seq));
    return word(std::move(quiver), std::move(w));
}

std::optional<int> AlgebraElement::degree() const
{
    if (terms_.empty())
        return std::nullopt;
    int d = terms_.begin()->first.degree();
    for (const auto& [w, c] : terms_)
        if (w.degree() != d)
            return std::nullopt;
    return d;
}

bool AlgebraElement::is_homogeneous() const
{
    return terms_.empty() || degree().has_value();
}

Rational AlgebraElement::coefficient(const PathWord& w) const
{
    auto it = terms_.find(w);
    return it == terms_.end() ? Rational(0) : it->second;
}

void AlgebraElement::add_term(const PathWord& w, const Rational& c)
{
    if (c == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

void AlgebraElement::require_same_quiver(const AlgebraElement& other) const
{
    if (!quiver_ || !other.quiver_ || same_quiver(quiver_, other.quiver_))
        return;
    throw StructuralError("operands live over different quivers");
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& other)
{
    require_same_quiver(other);
    if (!quiver_)
        quiver_ = other.quiver_;
    for (const auto& [w, c] : other.terms_)
        add_term(w, c);
    return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& other)
{
    require_same_quiver(other);
    if (!quiver_)
        quiver_ = other.quiver_;
    for (const auto& [w, c] : other.terms_)
        add_term(w, -c);
    return *this;
}

AlgebraElement& AlgebraElement::operator*=(const Rational& c)
{
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [w, coeff] : terms_)
        coeff *= c;
    return *this;
}

AlgebraElement operator*(const AlgebraElement& x, const AlgebraElement& y)
{
    return multiply(x, y);
}

bool operator==(const AlgebraElement& x, const AlgebraElement& y)
{
    if (x.terms_ != y.terms_)
        return false;
    if (x.terms_.empty())
        return true;
    return same_quiver(x.quiver_, y.quiver_);
}

std::string AlgebraElement::to_string() const
{
    if (terms_.empty())
        return "0";
    std::string s;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        Rational mag = abs(c);
        if (c < 0)
            s += first ? "-" : " - ";
        else if (!first)
            s += " + ";
        if (mag != 1)
            s += cyq::to_string(mag) + "*";
        s += w.to_string(*quiver_);
        first = false;
    }
    return s;
}

AlgebraElement multiply(const AlgebraElement& x, const AlgebraElement& y)
{
    if (x.quiver() && y.quiver() && !same_quiver(x.quiver(), y.quiver()))
        throw StructuralError("cannot multiply elements over different quivers");
    AlgebraElement out(x.quiver() ? x.quiver() : y.quiver());
    for (const auto& [u, cu] : x.terms())
        for (const auto& [v, cv] : y.terms())
            if (auto uv = concat(u, v))
                out.add_term(*uv, cu * cv);
    return out;
}

std::map<int, AlgebraElement> decompose_by_degree(const AlgebraElement& x)
{
    std::map<int, AlgebraElement> parts;
    for (const auto& [w, c] : x.terms()) {
        auto [it, inserted] = parts.try_emplace(w.degree(), x.quiver());
        it->second.add_term(w, c);
    }
    return parts;
}

WeightAssignment::WeightAssignment(QuiverPtr quiver, std::vector<long> weights)
    : quiver_(std::move(quiver)), weights_(std::move(weights))
{
    if (!quiver_ || weights_.size() != quiver_->arrow_count())
        throw ValidationError("weights", "weight vector does not match the arrow count");
    for (std::size_t i = 0; i < weights_.size(); ++i)
        if (weights_[i] <= 0)
            throw ValidationError("weights", "weight of '" + quiver_->arrow(static_cast<ArrowIndex>(i)).id +
                                                 "' is not positive");
}

long WeightAssignment::of_word(const PathWord& w) const
{
    long total = 0;
    for (auto a : w.arrows())
        total += weights_.at(a);
    return total;
}

std::optional<long> WeightAssignment::of_element(const AlgebraElement& x) const
{
    if (x.is_zero())
        return std::nullopt;
    long wt = of_word(x.terms().begin()->first);
    for (const auto& [w, c] : x.terms())
        if (of_word(w) != wt)
            return std::nullopt;
    return wt;
}

} // namespace cyq
