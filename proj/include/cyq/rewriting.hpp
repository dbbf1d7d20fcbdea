#pragma once

#include "cyq/homology.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <vector>

namespace cyq {

// Oriented relation lead -> rhs with rhs strictly below lead in the
// degree-lexicographic path order. Rules are monic.
struct RewriteRule {
    PathWord lead;
    AlgebraElement rhs;
};

enum class ReductionStrategy { leftmost, rightmost, random };

struct CompletionOptions {
    std::size_t rule_cap = 5000;
};

namespace detail {
class Completer;
}

// Bounded noncommutative Groebner basis for a presentation.
//
// A rule whose lead is a lazy path e_i kills every path through vertex i.
class RewriteSystem {
public:
    const QuiverPtr& quiver() const noexcept { return quiver_; }
    const std::vector<RewriteRule>& rules() const noexcept { return rules_; }
    std::size_t completion_bound() const noexcept { return bound_; }

    // All overlaps resolve and every lead is shorter than the completion bound.
    bool stable() const noexcept { return stable_; }
    // Every overlap, of any length, reduces to zero.
    bool overlaps_resolved() const noexcept { return resolved_; }

    AlgebraElement reduce(const AlgebraElement& x, ReductionStrategy s = ReductionStrategy::leftmost,
                          std::uint64_t seed = 0) const;
    bool irreducible(const PathWord& w) const;

private:
    friend class detail::Completer;

    struct Match {
        std::size_t rule;
        std::size_t pos;
    };
    std::vector<Match> matches(const PathWord& w, bool first_only = false) const;
    void reindex();

    QuiverPtr quiver_;
    std::vector<RewriteRule> rules_;
    std::size_t bound_ = 0;
    bool stable_ = false;
    bool resolved_ = false;
    std::map<std::vector<ArrowIndex>, std::size_t> index_;
    std::set<std::size_t> lengths_;
};

// Resolves every overlap of length <= max_len; throws ResourceError past the rule cap.
RewriteSystem complete(const Presentation& p, std::size_t max_len, const CompletionOptions& options = {});

struct DimensionProfile {
    std::size_t max_len = 0;
    std::vector<std::size_t> per_length; // index = path length, 0..max_len
    std::size_t total = 0;               // sum of per_length
    bool stable = false;
    // Stable system and no irreducible path at max_len: total is the dimension.
    bool finite = false;
};

DimensionProfile dimension_profile(const Presentation& p, std::size_t max_len, const CompletionOptions& options = {});
DimensionProfile dimension_profile(const RewriteSystem& rs);

// Irreducible paths of length <= rs.completion_bound(), in path order.
std::vector<PathWord> normal_words(const RewriteSystem& rs);

struct DimsVerdict {
    bool agree = false;
    std::size_t max_len = 0;
    std::optional<std::size_t> first_difference; // path length
    DimensionProfile left, right;
    // Human-readable: this compares dimension profiles only.
    std::string label() const;
};

DimsVerdict dims_equal(const Presentation& p, const Presentation& q, std::size_t max_len);

} // namespace cyq
