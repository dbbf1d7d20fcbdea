#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cyq {

using VertexIndex = std::uint32_t;
using ArrowIndex = std::uint32_t;

struct Vertex {
    std::string id;
    bool frozen = false;

    friend bool operator==(const Vertex&, const Vertex&) = default;
};

struct Arrow {
    std::string id;
    VertexIndex source = 0;
    VertexIndex target = 0;
    int degree = 0;
    bool frozen = false;

    friend bool operator==(const Arrow&, const Arrow&) = default;
};

// Finite quiver with integer (cohomological) arrow degrees and optional
// frozen vertices/arrows. Arrow indices follow declaration order; that order
// is also the precedence used by path orders downstream.
//
// Composition convention: the word "xy" means x after y, so it requires
// source(x) == target(y). For 1 -b-> 2 -a-> 3 the composite path is "ab".
class GradedQuiver {
public:
    VertexIndex add_vertex(std::string id, bool frozen = false);
    ArrowIndex add_arrow(std::string id, std::string_view source, std::string_view target, int degree = 0,
                         bool frozen = false);
    ArrowIndex add_arrow(std::string id, VertexIndex source, VertexIndex target, int degree = 0,
                         bool frozen = false);

    std::size_t vertex_count() const noexcept { return vertices_.size(); }
    std::size_t arrow_count() const noexcept { return arrows_.size(); }
    const std::vector<Vertex>& vertices() const noexcept { return vertices_; }
    const std::vector<Arrow>& arrows() const noexcept { return arrows_; }
    const Vertex& vertex(VertexIndex v) const { return vertices_.at(v); }
    const Arrow& arrow(ArrowIndex a) const { return arrows_.at(a); }

    std::optional<VertexIndex> find_vertex(std::string_view id) const;
    std::optional<ArrowIndex> find_arrow(std::string_view id) const;
    VertexIndex vertex_index(std::string_view id) const;
    ArrowIndex arrow_index(std::string_view id) const;

    bool has_id(std::string_view id) const { return find_vertex(id) || find_arrow(id); }

    friend bool operator==(const GradedQuiver&, const GradedQuiver&) = default;

private:
    std::vector<Vertex> vertices_;
    std::vector<Arrow> arrows_;
};

using QuiverPtr = std::shared_ptr<const GradedQuiver>;

inline QuiverPtr share(GradedQuiver q) { return std::make_shared<const GradedQuiver>(std::move(q)); }

bool same_quiver(const QuiverPtr& a, const QuiverPtr& b);

class PathWord;
std::optional<PathWord> concat(const PathWord& x, const PathWord& y);

// A path e_i (no arrows) or a composable arrow sequence x_1 ... x_n, read
// "x_1 after ... after x_n". Source is source(x_n), target is target(x_1).
class PathWord {
public:
    PathWord() = default;

    static PathWord lazy(const GradedQuiver& q, VertexIndex v);
    static PathWord of_arrow(const GradedQuiver& q, ArrowIndex a);
    // Throws ValidationError if the sequence is empty or not composable.
    static PathWord from_arrows(const GradedQuiver& q, std::vector<ArrowIndex> arrows);

    bool is_lazy() const noexcept { return arrows_.empty(); }
    std::size_t length() const noexcept { return arrows_.size(); }
    const std::vector<ArrowIndex>& arrows() const noexcept { return arrows_; }
    VertexIndex source() const noexcept { return source_; }
    VertexIndex target() const noexcept { return target_; }
    int degree() const noexcept { return degree_; }
    bool is_closed() const noexcept { return source_ == target_; }

    // x*y; empty when source(x) != target(y).
    friend std::optional<PathWord> concat(const PathWord& x, const PathWord& y);

    // Sub-word [begin, end) of the arrow sequence; an empty range yields the
    // lazy path at the vertex between the two halves.
    PathWord slice(const GradedQuiver& q, std::size_t begin, std::size_t end) const;

    std::string to_string(const GradedQuiver& q) const;

    // Degree-lexicographic path order: length first, then arrow indices left
    // to right; lazy paths are ordered by vertex.
    friend std::strong_ordering operator<=>(const PathWord& x, const PathWord& y);
    friend bool operator==(const PathWord& x, const PathWord& y)
    {
        return x.arrows_ == y.arrows_ && x.source_ == y.source_ && x.target_ == y.target_;
    }

private:
    std::vector<ArrowIndex> arrows_;
    VertexIndex source_ = 0;
    VertexIndex target_ = 0;
    int degree_ = 0;
};

} // namespace cyq
