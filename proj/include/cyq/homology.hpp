#pragma once

#include "cyq/dg.hpp"
#include "cyq/linalg.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace cyq {

// Positive integer arrow weights making every d(a) weight-homogeneous of
// weight(a), with minimal total weight. Throws WeightGradingError carrying a
// minimal infeasible set of constraints when no positive grading exists.
WeightAssignment infer_weights(const DgPresentation& p);

struct CohomologyOptions {
    std::size_t basis_cap = 400000; // per (weight, degree) component
    Field field = Field::rational();
    // Shuffle each component basis before assembling matrices (test hook).
    std::optional<std::uint64_t> shuffle_seed;
};

// dim H^p of the weight-w part for 0 <= w <= max_weight, min_degree <= p <= 0.
// Entries outside those bounds are absent, not zero.
struct CohomologyTable {
    long max_weight = 0;
    int min_degree = 0;
    std::map<std::pair<long, int>, std::size_t> entries;
    // Dimensions of the chain components that were assembled, for degrees
    // min_degree - 1 ... 1.
    std::map<std::pair<long, int>, std::size_t> chain_dims;

    std::optional<std::size_t> at(long w, int p) const;

    friend bool operator==(const CohomologyTable&, const CohomologyTable&) = default;
};

// Requires p.weights(); throws ValidationError("missing-weights") otherwise
// and ResourceError when a component exceeds options.basis_cap.
CohomologyTable cohomology(const DgPresentation& p, long max_weight, int min_degree,
                           const CohomologyOptions& options = {});

struct StalkCounterexample {
    long weight = 0;
    int degree = 0;
    std::size_t dim = 0;
};

struct StalkVerdict {
    long max_weight = 0;
    int min_degree = 0;
    std::optional<StalkCounterexample> counterexample;
    CohomologyTable table;

    bool stalk() const noexcept { return !counterexample.has_value(); }
};

StalkVerdict stalk_check(const DgPresentation& p, long max_weight, int min_degree,
                         const CohomologyOptions& options = {});

// A quiver with degree-0 arrows and degree-0 relations.
struct Presentation {
    QuiverPtr quiver;
    std::vector<AlgebraElement> relations;

    // Throws unless relations are degree 0, over `quiver`, with common endpoints.
    void validate() const;
};

// Degree-0 subquiver of p and the degree-0 parts of d(alpha) for the arrows
// alpha of degree -1 (nonzero ones only, in arrow order).
Presentation h0_presentation(const DgPresentation& p);

} // namespace cyq
