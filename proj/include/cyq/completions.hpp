#pragma once

#include "cyq/dg.hpp"

#include <set>
#include <string>
#include <vector>

namespace cyq {

// Quiver with degree-0 arrows, frozen data carried by the quiver, and a
// potential in cyclic normal form.
struct IceQuiverWithPotential {
    QuiverPtr quiver;
    Potential potential;

    // Throws ValidationError / StructuralError if the data is inconsistent.
    void validate() const;
};

// Added arrows are named bar_<a> and t_<i>; a clash with an existing id is a
// ValidationError("name-collision"). All constructors certify d^2 = 0.

// 3-dimensional Ginzburg algebra: bar_a of degree -1, loops t_i of degree -2,
// d(bar_a) = d_a W, d(t_i) = e_i sum_a (a bar_a - bar_a a) e_i.
DgPresentation ginzburg3(const QuiverPtr& quiver, const Potential& w);

// As ginzburg3, but no bar_b for frozen arrows b and no t_i at frozen vertices.
DgPresentation relative_ginzburg3(const IceQuiverWithPotential& q);

// n-CY completion of the path algebra of an ungraded quiver: bar_a of degree
// 2-n, loops t_i of degree 1-n, d(bar_a) = 0, d(t_i) = e_i sum_a (a bar_a - bar_a a) e_i.
DgPresentation cy_complete_hereditary(const QuiverPtr& quiver, int n);

// Relative 2-CY completion of kF -> kQ: every arrow doubled, loops of degree
// -1 only at vertices outside F. The output quiver marks F as frozen.
DgPresentation relative_preprojective2(const QuiverPtr& quiver, const std::set<std::string>& frozen);

struct RelationCompletion {
    QuiverPtr quiver;
    Potential potential;
};

// Adds rho_k : target(r_k) -> source(r_k) per relation and returns
// W = sum_k rho_k r_k in cyclic normal form. `names` overrides rho_k.
RelationCompletion relation_completion(const QuiverPtr& quiver, const std::vector<AlgebraElement>& relations,
                                       const std::vector<std::string>& names = {});

// Adds a degree -1 arrow c_k : source(r_k) -> target(r_k) with d(c_k) = r_k.
// H^0 is kQ/(relations); lower cohomology is only correct as far as the
// homology engine certifies it.
DgPresentation partial_resolution(const QuiverPtr& quiver, const std::vector<AlgebraElement>& relations,
                                  const std::vector<std::string>& names = {});

// Re-express an element over a quiver whose arrows extend `x`'s quiver with
// the same leading indices.
AlgebraElement transport(const AlgebraElement& x, const QuiverPtr& target);

} // namespace cyq
