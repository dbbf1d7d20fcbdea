#pragma once

#include "cyq/element.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace cyq {

class DgPresentation;

// Graded Leibniz extension of the arrow differential:
//   d(x_1 ... x_n) = sum_i (-1)^{|x_1|+...+|x_{i-1}|} x_1..x_{i-1} d(x_i) x_{i+1}..x_n,
// d(e_i) = 0.
AlgebraElement extend_leibniz(const DgPresentation& p, const AlgebraElement& x);

// d applied to a single path; appends (word, coefficient) pairs.
void leibniz_terms(const DgPresentation& p, const PathWord& w, const Rational& scale,
                   std::vector<std::pair<PathWord, Rational>>& out);

struct DSquaredFailure {
    ArrowIndex arrow = 0;
    AlgebraElement value; // d(d(arrow)), nonzero
};

struct DSquaredCertificate {
    std::vector<DSquaredFailure> failures;
    bool ok() const noexcept { return failures.empty(); }
};

// Graded quiver plus an assignment arrow -> d(arrow), extended by Leibniz.
// Structural checks (homogeneity, degree |a|+1, endpoints) always run.
// build() additionally certifies d^2 = 0; unverified() leaves that to
// check_d_squared so broken differentials can be inspected as data.
class DgPresentation {
public:
    DgPresentation() = default;

    // Throws InvariantViolation if d^2 != 0.
    static DgPresentation build(QuiverPtr quiver, std::vector<AlgebraElement> diff);
    static DgPresentation unverified(QuiverPtr quiver, std::vector<AlgebraElement> diff);
    // Zero differential on every arrow.
    static DgPresentation zero(QuiverPtr quiver);

    const QuiverPtr& quiver() const noexcept { return quiver_; }
    const GradedQuiver& graph() const noexcept { return *quiver_; }
    const AlgebraElement& diff(ArrowIndex a) const { return diff_.at(a); }
    const AlgebraElement& diff(std::string_view arrow_id) const { return diff_.at(quiver_->arrow_index(arrow_id)); }
    const std::vector<AlgebraElement>& differentials() const noexcept { return diff_; }
    bool certified() const noexcept { return certified_; }

    const std::optional<WeightAssignment>& weights() const noexcept { return weights_; }
    // Throws ValidationError unless every d(a) is weight-homogeneous of weight(a).
    DgPresentation with_weights(WeightAssignment w) const;

    // Non-fatal findings, e.g. positive-degree arrows.
    const std::vector<std::string>& warnings() const noexcept { return warnings_; }

private:
    DgPresentation(QuiverPtr quiver, std::vector<AlgebraElement> diff);

    QuiverPtr quiver_;
    std::vector<AlgebraElement> diff_;
    std::optional<WeightAssignment> weights_;
    std::vector<std::string> warnings_;
    bool certified_ = false;
};

DSquaredCertificate check_d_squared(const DgPresentation& p);

// Closed degree-0 cycles, each word stored as its lexicographically minimal
// rotation (by arrow declaration order), rotation-equivalent words merged.
class Potential {
public:
    Potential() = default;
    explicit Potential(QuiverPtr quiver) : cycles_(std::move(quiver)) {}

    const AlgebraElement& cycles() const noexcept { return cycles_; }
    const QuiverPtr& quiver() const noexcept { return cycles_.quiver(); }
    bool is_zero() const noexcept { return cycles_.is_zero(); }
    std::string to_string() const { return cycles_.to_string(); }

    friend bool operator==(const Potential& x, const Potential& y) { return x.cycles_ == y.cycles_; }

private:
    friend Potential cyclic_normalize(const AlgebraElement& x);
    AlgebraElement cycles_;
};

// Throws ValidationError("potential") for non-closed or nonzero-degree words.
Potential cyclic_normalize(const AlgebraElement& x);

// Minimal rotation of a closed path (identity on lazy paths).
PathWord minimal_rotation(const GradedQuiver& q, const PathWord& w);

// d_a p = sum over decompositions p = u a v of v u, extended linearly.
// Accepts any element whose words are closed.
AlgebraElement cyclic_derivative(const AlgebraElement& cycles, ArrowIndex a);
AlgebraElement cyclic_derivative(const Potential& w, ArrowIndex a);
AlgebraElement cyclic_derivative(const Potential& w, std::string_view arrow_id);

} // namespace cyq
