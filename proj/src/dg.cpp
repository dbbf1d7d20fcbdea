#include "cyq/dg.hpp"

#include "cyq/errors.hpp"

#include <algorithm>

namespace cyq {

DgPresentation::DgPresentation(QuiverPtr quiver, std::vector<AlgebraElement> diff)
    : quiver_(std::move(quiver)), diff_(std::move(diff))
{
    if (!quiver_)
        throw StructuralError("presentation without a quiver");
    if (diff_.size() != quiver_->arrow_count())
        throw ValidationError("differential", "differential must be assigned on every arrow");
    for (std::size_t i = 0; i < diff_.size(); ++i) {
        const Arrow& a = quiver_->arrow(static_cast<ArrowIndex>(i));
        AlgebraElement& da = diff_[i];
        if (!da.quiver())
            da = AlgebraElement(quiver_);
        if (!same_quiver(da.quiver(), quiver_))
            throw StructuralError("d(" + a.id + ") lives over a different quiver");
        for (const auto& [w, c] : da.terms()) {
            if (w.degree() != a.degree + 1)
                throw ValidationError("differential", "d(" + a.id + ") has a term of degree " +
                                                          std::to_string(w.degree()) + ", expected " +
                                                          std::to_string(a.degree + 1));
            if (w.source() != a.source || w.target() != a.target)
                throw ValidationError("differential",
                                      "d(" + a.id + ") has a term with the wrong endpoints: " + w.to_string(*quiver_));
        }
        if (a.degree > 0)
            warnings_.push_back("arrow '" + a.id + "' has positive degree " + std::to_string(a.degree));
    }
}

DgPresentation DgPresentation::unverified(QuiverPtr quiver, std::vector<AlgebraElement> diff)
{
    return DgPresentation(std::move(quiver), std::move(diff));
}

DgPresentation DgPresentation::build(QuiverPtr quiver, std::vector<AlgebraElement> diff)
{
    DgPresentation p(std::move(quiver), std::move(diff));
    auto cert = check_d_squared(p);
    if (!cert.ok()) {
        const auto& f = cert.failures.front();
        throw InvariantViolation("d^2 != 0 on arrow '" + p.quiver_->arrow(f.arrow).id + "': " + f.value.to_string());
    }
    p.certified_ = true;
    return p;
}

DgPresentation DgPresentation::zero(QuiverPtr quiver)
{
    std::vector<AlgebraElement> diff(quiver->arrow_count(), AlgebraElement(quiver));
    return build(quiver, std::move(diff));
}

DgPresentation DgPresentation::with_weights(WeightAssignment w) const
{
    if (!same_quiver(w.quiver(), quiver_))
        throw StructuralError("weight assignment over a different quiver");
    for (std::size_t i = 0; i < diff_.size(); ++i) {
        const auto a = static_cast<ArrowIndex>(i);
        for (const auto& [word, c] : diff_[i].terms())
            if (w.of_word(word) != w.of_arrow(a))
                throw ValidationError("weights", "d(" + quiver_->arrow(a).id + ") is not homogeneous of weight " +
                                                     std::to_string(w.of_arrow(a)));
    }
    DgPresentation p = *this;
    p.weights_ = std::move(w);
    return p;
}

void leibniz_terms(const DgPresentation& p, const PathWord& w, const Rational& scale,
                   std::vector<std::pair<PathWord, Rational>>& out)
{
    const GradedQuiver& q = p.graph();
    const auto& arrows = w.arrows();
    int prefix_degree = 0;
    for (std::size_t i = 0; i < arrows.size(); ++i) {
        const AlgebraElement& dx = p.diff(arrows[i]);
        if (!dx.is_zero()) {
            const Rational sign = (prefix_degree % 2 == 0) ? scale : Rational(-scale);
            for (const auto& [mid, c] : dx.terms()) {
                std::vector<ArrowIndex> seq;
                seq.reserve(arrows.size() - 1 + mid.length());
                seq.insert(seq.end(), arrows.begin(), arrows.begin() + static_cast<std::ptrdiff_t>(i));
                seq.insert(seq.end(), mid.arrows().begin(), mid.arrows().end());
                seq.insert(seq.end(), arrows.begin() + static_cast<std::ptrdiff_t>(i) + 1, arrows.end());
                // mid runs between the same endpoints as arrows[i], so the
                // result is composable whenever w is.
                PathWord r = seq.empty() ? PathWord::lazy(q, mid.source()) : PathWord::from_arrows(q, std::move(seq));
                out.emplace_back(std::move(r), sign * c);
            }
        }
        prefix_degree += q.arrow(arrows[i]).degree;
    }
}

AlgebraElement extend_leibniz(const DgPresentation& p, const AlgebraElement& x)
{
    if (x.quiver() && !same_quiver(x.quiver(), p.quiver()))
        throw StructuralError("element does not live over the presentation's quiver");
    AlgebraElement out(p.quiver());
    std::vector<std::pair<PathWord, Rational>> buf;
    for (const auto& [w, c] : x.terms()) {
        buf.clear();
        leibniz_terms(p, w, c, buf);
        for (const auto& [word, coeff] : buf)
            out.add_term(word, coeff);
    }
    return out;
}

DSquaredCertificate check_d_squared(const DgPresentation& p)
{
    DSquaredCertificate cert;
    for (std::size_t i = 0; i < p.graph().arrow_count(); ++i) {
        const auto a = static_cast<ArrowIndex>(i);
        AlgebraElement dd = extend_leibniz(p, p.diff(a));
        if (!dd.is_zero())
            cert.failures.push_back({a, std::move(dd)});
    }
    return cert;
}

PathWord minimal_rotation(const GradedQuiver& q, const PathWord& w)
{
    if (w.is_lazy())
        return w;
    if (!w.is_closed())
        throw ValidationError("potential", "word " + w.to_string(q) + " is not a cycle");
    const auto& seq = w.arrows();
    const std::size_t n = seq.size();
    std::size_t best = 0;
    for (std::size_t r = 1; r < n; ++r) {
        for (std::size_t k = 0; k < n; ++k) {
            auto x = seq[(r + k) % n];
            auto y = seq[(best + k) % n];
            if (x != y) {
                if (x < y)
                    best = r;
                break;
            }
        }
    }
    if (best == 0)
        return w;
    std::vector<ArrowIndex> rotated;
    rotated.reserve(n);
    for (std::size_t k = 0; k < n; ++k)
        rotated.push_back(seq[(best + k) % n]);
    return PathWord::from_arrows(q, std::move(rotated));
}

Potential cyclic_normalize(const AlgebraElement& x)
{
    Potential pot(x.quiver());
    if (x.is_zero())
        return pot;
    const GradedQuiver& q = *x.quiver();
    for (const auto& [w, c] : x.terms()) {
        if (!w.is_closed())
            throw ValidationError("potential", "potential word " + w.to_string(q) + " is not a cycle");
        if (w.degree() != 0)
            throw ValidationError("potential", "potential word " + w.to_string(q) + " has degree " +
                                                   std::to_string(w.degree()) + ", expected 0");
        pot.cycles_.add_term(minimal_rotation(q, w), c);
    }
    return pot;
}

AlgebraElement cyclic_derivative(const AlgebraElement& cycles, ArrowIndex a)
{
    const QuiverPtr& qp = cycles.quiver();
    AlgebraElement out(qp);
    if (cycles.is_zero())
        return out;
    const GradedQuiver& q = *qp;
    if (a >= q.arrow_count())
        throw StructuralError("unknown arrow index for cyclic derivative");
    for (const auto& [w, c] : cycles.terms()) {
        if (!w.is_closed())
            throw ValidationError("potential", "cyclic derivative of non-cycle " + w.to_string(q));
        const auto& seq = w.arrows();
        for (std::size_t i = 0; i < seq.size(); ++i) {
            if (seq[i] != a)
                continue;
            // p = u a v  ->  v u
            std::vector<ArrowIndex> vu(seq.begin() + static_cast<std::ptrdiff_t>(i) + 1, seq.end());
            vu.insert(vu.end(), seq.begin(), seq.begin() + static_cast<std::ptrdiff_t>(i));
            PathWord r = vu.empty() ? PathWord::lazy(q, q.arrow(a).target) : PathWord::from_arrows(q, std::move(vu));
            out.add_term(r, c);
        }
    }
    return out;
}

AlgebraElement cyclic_derivative(const Potential& w, ArrowIndex a)
{
    if (w.quiver() && a >= w.quiver()->arrow_count())
        throw StructuralError("unknown arrow index for cyclic derivative");
    return cyclic_derivative(w.cycles(), a);
}

AlgebraElement cyclic_derivative(const Potential& w, std::string_view arrow_id)
{
    if (!w.quiver())
        throw StructuralError("potential without a quiver");
    auto a = w.quiver()->find_arrow(arrow_id);
    if (!a)
        throw StructuralError("unknown arrow '" + std::string(arrow_id) + "'");
    return cyclic_derivative(w.cycles(), *a);
}

} // namespace cyq
