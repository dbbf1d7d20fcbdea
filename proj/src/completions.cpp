#include "cyq/completions.hpp"

#include "cyq/errors.hpp"

namespace cyq {

namespace {

void require_ungraded(const GradedQuiver& q, const char* what)
{
    for (const auto& a : q.arrows())
        if (a.degree != 0)
            throw UnsupportedInput(std::string(what) + " needs all arrows in degree 0; '" + a.id + "' has degree " +
                                   std::to_string(a.degree));
}

std::string fresh_name(const GradedQuiver& q, std::string name)
{
    if (q.has_id(name))
        throw ValidationError("name-collision", "generated name '" + name + "' collides with an existing id");
    return name;
}

// Shared doubling scheme for the Ginzburg-type constructions.
struct Doubling {
    std::vector<bool> double_arrow;  // per original arrow
    std::vector<bool> loop_at;       // per vertex
    int bar_degree = 0;
    int loop_degree = 0;
    const Potential* potential = nullptr;
    std::vector<bool> frozen_vertex; // frozen flags for the output quiver
};

DgPresentation build_doubled(const GradedQuiver& base, const Doubling& spec)
{
    GradedQuiver out;
    for (std::size_t v = 0; v < base.vertex_count(); ++v)
        out.add_vertex(base.vertex(static_cast<VertexIndex>(v)).id, spec.frozen_vertex[v]);
    for (const auto& a : base.arrows())
        out.add_arrow(a.id, a.source, a.target, a.degree, a.frozen && spec.frozen_vertex[a.source] &&
                                                              spec.frozen_vertex[a.target]);

    std::vector<std::optional<ArrowIndex>> bar(base.arrow_count());
    for (std::size_t i = 0; i < base.arrow_count(); ++i) {
        if (!spec.double_arrow[i])
            continue;
        const Arrow& a = base.arrow(static_cast<ArrowIndex>(i));
        bar[i] = out.add_arrow(fresh_name(out, "bar_" + a.id), a.target, a.source, spec.bar_degree);
    }
    std::vector<std::optional<ArrowIndex>> loop(base.vertex_count());
    for (std::size_t v = 0; v < base.vertex_count(); ++v) {
        if (!spec.loop_at[v])
            continue;
        const auto vi = static_cast<VertexIndex>(v);
        loop[v] = out.add_arrow(fresh_name(out, "t_" + base.vertex(vi).id), vi, vi, spec.loop_degree);
    }

    QuiverPtr qp = share(std::move(out));
    const GradedQuiver& q = *qp;
    std::vector<AlgebraElement> diff(q.arrow_count(), AlgebraElement(qp));

    for (std::size_t i = 0; i < base.arrow_count(); ++i) {
        if (!bar[i] || !spec.potential || spec.potential->is_zero())
            continue;
        diff[*bar[i]] = transport(cyclic_derivative(*spec.potential, static_cast<ArrowIndex>(i)), qp);
    }
    for (std::size_t i = 0; i < base.arrow_count(); ++i) {
        if (!bar[i])
            continue;
        const auto a = static_cast<ArrowIndex>(i);
        const Arrow& arr = q.arrow(a);
        // a bar_a is a loop at target(a); bar_a a is a loop at source(a).
        if (loop[arr.target])
            diff[*loop[arr.target]].add_term(PathWord::from_arrows(q, {a, *bar[i]}), 1);
        if (loop[arr.source])
            diff[*loop[arr.source]].add_term(PathWord::from_arrows(q, {*bar[i], a}), -1);
    }
    return DgPresentation::build(qp, std::move(diff));
}

std::vector<bool> frozen_flags(const GradedQuiver& q)
{
    std::vector<bool> f;
    for (const auto& v : q.vertices())
        f.push_back(v.frozen);
    return f;
}

struct RelationEndpoints {
    VertexIndex source;
    VertexIndex target;
};

RelationEndpoints relation_endpoints(const QuiverPtr& quiver, const AlgebraElement& r, std::size_t k)
{
    if (r.is_zero())
        throw ValidationError("relation", "relation " + std::to_string(k + 1) + " is zero");
    if (!same_quiver(r.quiver(), quiver))
        throw StructuralError("relation " + std::to_string(k + 1) + " lives over a different quiver");
    const PathWord& first = r.terms().begin()->first;
    for (const auto& [w, c] : r.terms()) {
        if (w.source() != first.source() || w.target() != first.target())
            throw ValidationError("relation-endpoints",
                                  "relation " + std::to_string(k + 1) + " mixes paths with different endpoints");
        if (w.degree() != 0)
            throw ValidationError("relation", "relation " + std::to_string(k + 1) + " is not of degree 0");
    }
    return {first.source(), first.target()};
}

GradedQuiver copy_quiver(const GradedQuiver& q)
{
    return q;
}

} // namespace

void IceQuiverWithPotential::validate() const
{
    if (!quiver)
        throw StructuralError("ice quiver without a quiver");
    require_ungraded(*quiver, "an ice quiver with potential");
    if (potential.quiver() && !same_quiver(potential.quiver(), quiver))
        throw StructuralError("potential does not live over the ice quiver");
    if (!(cyclic_normalize(potential.cycles()) == potential))
        throw ValidationError("potential", "potential is not in cyclic normal form");
}

AlgebraElement transport(const AlgebraElement& x, const QuiverPtr& target)
{
    AlgebraElement out(target);
    if (x.is_zero())
        return out;
    const GradedQuiver& src = *x.quiver();
    if (src.vertex_count() > target->vertex_count() || src.arrow_count() > target->arrow_count())
        throw StructuralError("transport target does not extend the source quiver");
    for (const auto& [w, c] : x.terms()) {
        PathWord tw = w.is_lazy() ? PathWord::lazy(*target, w.source()) : PathWord::from_arrows(*target, w.arrows());
        out.add_term(tw, c);
    }
    return out;
}

DgPresentation ginzburg3(const QuiverPtr& quiver, const Potential& w)
{
    if (!quiver)
        throw StructuralError("ginzburg3 without a quiver");
    require_ungraded(*quiver, "ginzburg3");
    if (w.quiver() && !w.is_zero() && !same_quiver(w.quiver(), quiver))
        throw StructuralError("potential does not live over the quiver");
    Doubling spec;
    spec.double_arrow.assign(quiver->arrow_count(), true);
    spec.loop_at.assign(quiver->vertex_count(), true);
    spec.bar_degree = -1;
    spec.loop_degree = -2;
    spec.potential = &w;
    spec.frozen_vertex = frozen_flags(*quiver);
    return build_doubled(*quiver, spec);
}

DgPresentation relative_ginzburg3(const IceQuiverWithPotential& ice)
{
    ice.validate();
    const GradedQuiver& q = *ice.quiver;
    Doubling spec;
    for (const auto& a : q.arrows())
        spec.double_arrow.push_back(!a.frozen);
    for (const auto& v : q.vertices())
        spec.loop_at.push_back(!v.frozen);
    spec.bar_degree = -1;
    spec.loop_degree = -2;
    spec.potential = &ice.potential;
    spec.frozen_vertex = frozen_flags(q);
    return build_doubled(q, spec);
}

DgPresentation cy_complete_hereditary(const QuiverPtr& quiver, int n)
{
    if (!quiver)
        throw StructuralError("cy_complete_hereditary without a quiver");
    if (n < 1)
        throw ValidationError("parameter", "CY dimension must be >= 1");
    require_ungraded(*quiver, "cy_complete_hereditary");
    Doubling spec;
    spec.double_arrow.assign(quiver->arrow_count(), true);
    spec.loop_at.assign(quiver->vertex_count(), true);
    spec.bar_degree = 2 - n;
    spec.loop_degree = 1 - n;
    spec.frozen_vertex = frozen_flags(*quiver);
    return build_doubled(*quiver, spec);
}

DgPresentation relative_preprojective2(const QuiverPtr& quiver, const std::set<std::string>& frozen)
{
    if (!quiver)
        throw StructuralError("relative_preprojective2 without a quiver");
    require_ungraded(*quiver, "relative_preprojective2");
    for (const auto& id : frozen)
        if (!quiver->find_vertex(id))
            throw ValidationError("unknown-vertex", "frozen vertex '" + id + "' is not a vertex of the quiver");
    Doubling spec;
    spec.double_arrow.assign(quiver->arrow_count(), true);
    for (const auto& v : quiver->vertices()) {
        const bool f = frozen.count(v.id) > 0;
        spec.loop_at.push_back(!f);
        spec.frozen_vertex.push_back(f);
    }
    spec.bar_degree = 0;
    spec.loop_degree = -1;
    return build_doubled(*quiver, spec);
}

RelationCompletion relation_completion(const QuiverPtr& quiver, const std::vector<AlgebraElement>& relations,
                                       const std::vector<std::string>& names)
{
    if (!quiver)
        throw StructuralError("relation_completion without a quiver");
    require_ungraded(*quiver, "relation_completion");
    if (!names.empty() && names.size() != relations.size())
        throw ValidationError("parameter", "one name per relation expected");
    GradedQuiver out = copy_quiver(*quiver);
    std::vector<ArrowIndex> rho;
    for (std::size_t k = 0; k < relations.size(); ++k) {
        auto ends = relation_endpoints(quiver, relations[k], k);
        std::string name = names.empty() ? "rho_" + std::to_string(k + 1) : names[k];
        rho.push_back(out.add_arrow(fresh_name(out, name), ends.target, ends.source, 0));
    }
    QuiverPtr qp = share(std::move(out));
    AlgebraElement w(qp);
    for (std::size_t k = 0; k < relations.size(); ++k)
        w += multiply(AlgebraElement::word(qp, PathWord::of_arrow(*qp, rho[k])), transport(relations[k], qp));
    return {qp, cyclic_normalize(w)};
}

DgPresentation partial_resolution(const QuiverPtr& quiver, const std::vector<AlgebraElement>& relations,
                                  const std::vector<std::string>& names)
{
    if (!quiver)
        throw StructuralError("partial_resolution without a quiver");
    require_ungraded(*quiver, "partial_resolution");
    if (!names.empty() && names.size() != relations.size())
        throw ValidationError("parameter", "one name per relation expected");
    GradedQuiver out = copy_quiver(*quiver);
    std::vector<ArrowIndex> added;
    for (std::size_t k = 0; k < relations.size(); ++k) {
        auto ends = relation_endpoints(quiver, relations[k], k);
        std::string name = names.empty() ? "c_" + std::to_string(k + 1) : names[k];
        added.push_back(out.add_arrow(fresh_name(out, name), ends.source, ends.target, -1));
    }
    QuiverPtr qp = share(std::move(out));
    std::vector<AlgebraElement> diff(qp->arrow_count(), AlgebraElement(qp));
    for (std::size_t k = 0; k < relations.size(); ++k)
        diff[added[k]] = transport(relations[k], qp);
    return DgPresentation::build(qp, std::move(diff));
}

} // namespace cyq
