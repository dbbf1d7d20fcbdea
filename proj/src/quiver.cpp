#include "cyq/quiver.hpp"

#include "cyq/errors.hpp"

#include <algorithm>

namespace cyq {

VertexIndex GradedQuiver::add_vertex(std::string id, bool frozen)
{
    if (id.empty())
        throw ValidationError("syntax", "empty vertex id");
    if (has_id(id))
        throw ValidationError("duplicate-id", "duplicate id '" + id + "'");
    vertices_.push_back({std::move(id), frozen});
    return static_cast<VertexIndex>(vertices_.size() - 1);
}

ArrowIndex GradedQuiver::add_arrow(std::string id, std::string_view source, std::string_view target, int degree,
                                   bool frozen)
{
    auto s = find_vertex(source);
    auto t = find_vertex(target);
    if (!s)
        throw ValidationError("unknown-vertex", "unknown vertex '" + std::string(source) + "'");
    if (!t)
        throw ValidationError("unknown-vertex", "unknown vertex '" + std::string(target) + "'");
    return add_arrow(std::move(id), *s, *t, degree, frozen);
}

ArrowIndex GradedQuiver::add_arrow(std::string id, VertexIndex source, VertexIndex target, int degree, bool frozen)
{
    if (id.empty())
        throw ValidationError("syntax", "empty arrow id");
    if (has_id(id))
        throw ValidationError("duplicate-id", "duplicate id '" + id + "'");
    if (source >= vertices_.size() || target >= vertices_.size())
        throw ValidationError("unknown-vertex", "arrow '" + id + "' has an undeclared endpoint");
    if (frozen && !(vertices_[source].frozen && vertices_[target].frozen))
        throw ValidationError("frozen-endpoint",
                              "frozen arrow '" + id + "' must have frozen source and target");
    arrows_.push_back({std::move(id), source, target, degree, frozen});
    return static_cast<ArrowIndex>(arrows_.size() - 1);
}

std::optional<VertexIndex> GradedQuiver::find_vertex(std::string_view id) const
{
    for (std::size_t i = 0; i < vertices_.size(); ++i)
        if (vertices_[i].id == id)
            return static_cast<VertexIndex>(i);
    return std::nullopt;
}

std::optional<ArrowIndex> GradedQuiver::find_arrow(std::string_view id) const
{
    for (std::size_t i = 0; i < arrows_.size(); ++i)
        if (arrows_[i].id == id)
            return static_cast<ArrowIndex>(i);
    return std::nullopt;
}

VertexIndex GradedQuiver::vertex_index(std::string_view id) const
{
    if (auto v = find_vertex(id))
        return *v;
    throw ValidationError("unknown-vertex", "unknown vertex '" + std::string(id) + "'");
}

ArrowIndex GradedQuiver::arrow_index(std::string_view id) const
{
    if (auto a = find_arrow(id))
        return *a;
    throw ValidationError("unknown-arrow", "unknown arrow '" + std::string(id) + "'");
}

bool same_quiver(const QuiverPtr& a, const QuiverPtr& b)
{
    if (a == b)
        return true;
    return a && b && *a == *b;
}

PathWord PathWord::lazy(const GradedQuiver& q, VertexIndex v)
{
    if (v >= q.vertex_count())
        throw ValidationError("unknown-vertex", "vertex index out of range");
    PathWord w;
    w.source_ = w.target_ = v;
    return w;
}

PathWord PathWord::of_arrow(const GradedQuiver& q, ArrowIndex a)
{
    const Arrow& arr = q.arrow(a);
    PathWord w;
    w.arrows_ = {a};
    w.source_ = arr.source;
    w.target_ = arr.target;
    w.degree_ = arr.degree;
    return w;
}

PathWord PathWord::from_arrows(const GradedQuiver& q, std::vector<ArrowIndex> arrows)
{
    if (arrows.empty())
        throw ValidationError("syntax", "empty arrow sequence");
    int degree = 0;
    for (std::size_t i = 0; i < arrows.size(); ++i) {
        if (arrows[i] >= q.arrow_count())
            throw ValidationError("unknown-arrow", "arrow index out of range");
        degree += q.arrow(arrows[i]).degree;
        if (i + 1 < arrows.size() && q.arrow(arrows[i]).source != q.arrow(arrows[i + 1]).target)
            throw ValidationError("non-composable", "'" + q.arrow(arrows[i]).id + "' cannot follow '" +
                                                        q.arrow(arrows[i + 1]).id + "'");
    }
    PathWord w;
    w.source_ = q.arrow(arrows.back()).source;
    w.target_ = q.arrow(arrows.front()).target;
    w.degree_ = degree;
    w.arrows_ = std::move(arrows);
    return w;
}

std::optional<PathWord> concat(const PathWord& x, const PathWord& y)
{
    if (x.source_ != y.target_)
        return std::nullopt;
    if (x.is_lazy())
        return y;
    if (y.is_lazy())
        return x;
    PathWord w;
    w.arrows_.reserve(x.arrows_.size() + y.arrows_.size());
    w.arrows_ = x.arrows_;
    w.arrows_.insert(w.arrows_.end(), y.arrows_.begin(), y.arrows_.end());
    w.source_ = y.source_;
    w.target_ = x.target_;
    w.degree_ = x.degree_ + y.degree_;
    return w;
}

PathWord PathWord::slice(const GradedQuiver& q, std::size_t begin, std::size_t end) const
{
    if (begin > end || end > arrows_.size())
        throw std::out_of_range("PathWord::slice");
    if (begin == end) {
        // Vertex between arrow begin-1 and arrow begin.
        VertexIndex v = begin < arrows_.size() ? q.arrow(arrows_[begin]).target
                                               : (arrows_.empty() ? source_ : q.arrow(arrows_.back()).source);
        return lazy(q, v);
    }
    return from_arrows(q, std::vector<ArrowIndex>(arrows_.begin() + static_cast<std::ptrdiff_t>(begin),
                                                  arrows_.begin() + static_cast<std::ptrdiff_t>(end)));
}

std::string PathWord::to_string(const GradedQuiver& q) const
{
    if (is_lazy())
        return "e[" + q.vertex(source_).id + "]";
    std::string s;
    for (std::size_t i = 0; i < arrows_.size(); ++i) {
        if (i)
            s += '*';
        s += q.arrow(arrows_[i]).id;
    }
    return s;
}

std::strong_ordering operator<=>(const PathWord& x, const PathWord& y)
{
    if (auto c = x.arrows_.size() <=> y.arrows_.size(); c != 0)
        return c;
    if (x.arrows_.empty())
        return x.source_ <=> y.source_;
    return std::lexicographical_compare_three_way(x.arrows_.begin(), x.arrows_.end(), y.arrows_.begin(),
                                                  y.arrows_.end());
}

} // namespace cyq
