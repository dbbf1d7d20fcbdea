#include "cyq/homology.hpp"

#include "cyq/errors.hpp"

#include <algorithm>
#include <random>

namespace cyq {

std::optional<std::size_t> CohomologyTable::at(long w, int p) const
{
    auto it = entries.find({w, p});
    if (it == entries.end())
        return std::nullopt;
    return it->second;
}

namespace {

// Paths bucketed by (weight, degree) for degrees in [lo, hi].
class ComponentEnumerator {
public:
    ComponentEnumerator(const GradedQuiver& q, const WeightAssignment& wt, long max_weight, int lo, int hi,
                        std::size_t cap)
        : q_(q), wt_(wt), max_weight_(max_weight), lo_(lo), hi_(hi), cap_(cap)
    {
        prune_by_degree_ = std::all_of(q.arrows().begin(), q.arrows().end(),
                                       [](const Arrow& a) { return a.degree <= 0; });
        out_by_target_.resize(q.vertex_count());
        for (std::size_t a = 0; a < q.arrow_count(); ++a)
            out_by_target_[q.arrow(static_cast<ArrowIndex>(a)).source].push_back(static_cast<ArrowIndex>(a));
    }

    std::map<std::pair<long, int>, std::vector<PathWord>> run()
    {
        for (std::size_t v = 0; v < q_.vertex_count(); ++v) {
            const auto vi = static_cast<VertexIndex>(v);
            PathWord e = PathWord::lazy(q_, vi);
            record(e, 0);
            std::vector<ArrowIndex> rev; // arrows in traversal order
            extend(vi, rev, 0, 0);
        }
        return std::move(buckets_);
    }

private:
    void record(const PathWord& w, long weight)
    {
        if (w.degree() < lo_ || w.degree() > hi_)
            return;
        auto& b = buckets_[{weight, w.degree()}];
        if (b.size() >= cap_)
            throw ResourceError("component (weight " + std::to_string(weight) + ", degree " +
                                std::to_string(w.degree()) + ") exceeds the basis cap of " + std::to_string(cap_));
        b.push_back(w);
    }

    // `rev` lists arrows in traversal order; the word reads them reversed.
    void extend(VertexIndex at, std::vector<ArrowIndex>& rev, long weight, int degree)
    {
        for (ArrowIndex a : out_by_target_[at]) {
            const Arrow& arr = q_.arrow(a);
            const long nw = weight + wt_.of_arrow(a);
            const int nd = degree + arr.degree;
            if (nw > max_weight_)
                continue;
            if (prune_by_degree_ && nd < lo_)
                continue;
            rev.push_back(a);
            record(PathWord::from_arrows(q_, std::vector<ArrowIndex>(rev.rbegin(), rev.rend())), nw);
            extend(arr.target, rev, nw, nd);
            rev.pop_back();
        }
    }

    const GradedQuiver& q_;
    const WeightAssignment& wt_;
    long max_weight_;
    int lo_, hi_;
    std::size_t cap_;
    bool prune_by_degree_ = true;
    std::vector<std::vector<ArrowIndex>> out_by_target_;
    std::map<std::pair<long, int>, std::vector<PathWord>> buckets_;
};

} // namespace

CohomologyTable cohomology(const DgPresentation& p, long max_weight, int min_degree, const CohomologyOptions& options)
{
    if (!p.weights())
        throw ValidationError("missing-weights", "presentation has no weight grading; run infer_weights first");
    if (max_weight < 0)
        throw ValidationError("parameter", "max weight must be >= 0");
    if (min_degree > 0)
        throw ValidationError("parameter", "min degree must be <= 0");
    const GradedQuiver& q = p.graph();
    const WeightAssignment& wt = *p.weights();

    const int lo = min_degree - 1;
    const int hi = 1;
    auto buckets = ComponentEnumerator(q, wt, max_weight, lo, hi, options.basis_cap).run();

    CohomologyTable table;
    table.max_weight = max_weight;
    table.min_degree = min_degree;

    std::vector<std::pair<PathWord, Rational>> buf;
    for (long w = 0; w <= max_weight; ++w) {
        std::map<int, std::vector<PathWord>*> comp;
        std::vector<PathWord> empty;
        for (int d = lo; d <= hi; ++d) {
            auto it = buckets.find({w, d});
            comp[d] = it == buckets.end() ? &empty : &it->second;
            if (options.shuffle_seed) {
                std::mt19937_64 rng(*options.shuffle_seed ^ (static_cast<std::uint64_t>(w) * 0x9E3779B97F4A7C15ULL) ^
                                    static_cast<std::uint64_t>(d + 1000));
                std::shuffle(comp[d]->begin(), comp[d]->end(), rng);
            }
            table.chain_dims[{w, d}] = comp[d]->size();
        }
        // rank of d : C^{w,d} -> C^{w,d+1} for d in [lo, hi-1]
        std::map<int, std::size_t> ranks;
        for (int d = lo; d < hi; ++d) {
            const auto& src = *comp[d];
            const auto& dst = *comp[d + 1];
            if (src.empty() || dst.empty()) {
                ranks[d] = 0;
                continue;
            }
            std::map<PathWord, std::size_t> index;
            for (std::size_t i = 0; i < dst.size(); ++i)
                index.emplace(dst[i], i);
            std::vector<SparseVector> cols;
            cols.reserve(src.size());
            for (const auto& word : src) {
                buf.clear();
                leibniz_terms(p, word, Rational(1), buf);
                SparseVector col;
                for (auto& [img, c] : buf) {
                    auto it = index.find(img);
                    if (it == index.end())
                        throw InvariantViolation("differential leaves the (weight, degree) component of " +
                                                 word.to_string(q));
                    col.emplace_back(it->second, c);
                }
                normalize(col);
                if (!col.empty())
                    cols.push_back(std::move(col));
            }
            ranks[d] = rank(cols, options.field);
        }
        for (int d = min_degree; d <= 0; ++d) {
            const std::size_t dim = comp[d]->size();
            const std::size_t out_rank = ranks[d];
            const std::size_t in_rank = ranks[d - 1];
            if (out_rank + in_rank > dim)
                throw InvariantViolation("rank bookkeeping exceeds component dimension");
            table.entries[{w, d}] = dim - out_rank - in_rank;
        }
    }
    return table;
}

StalkVerdict stalk_check(const DgPresentation& p, long max_weight, int min_degree, const CohomologyOptions& options)
{
    StalkVerdict v;
    v.max_weight = max_weight;
    v.min_degree = min_degree;
    v.table = cohomology(p, max_weight, min_degree, options);
    for (long w = 0; w <= max_weight && !v.counterexample; ++w)
        for (int d = -1; d >= min_degree; --d) {
            auto dim = v.table.at(w, d).value_or(0);
            if (dim != 0) {
                v.counterexample = StalkCounterexample{w, d, dim};
                break;
            }
        }
    return v;
}

void Presentation::validate() const
{
    if (!quiver)
        throw StructuralError("presentation without a quiver");
    for (const auto& a : quiver->arrows())
        if (a.degree != 0)
            throw ValidationError("presentation", "presentation arrow '" + a.id + "' is not of degree 0");
    for (std::size_t k = 0; k < relations.size(); ++k) {
        const auto& r = relations[k];
        if (r.is_zero())
            continue;
        if (!same_quiver(r.quiver(), quiver))
            throw StructuralError("relation " + std::to_string(k + 1) + " lives over a different quiver");
        const PathWord& first = r.terms().begin()->first;
        for (const auto& [w, c] : r.terms())
            if (w.source() != first.source() || w.target() != first.target())
                throw ValidationError("relation-endpoints", "relation " + std::to_string(k + 1) +
                                                                " mixes paths with different endpoints");
    }
}

Presentation h0_presentation(const DgPresentation& p)
{
    const GradedQuiver& src = p.graph();
    GradedQuiver q;
    for (const auto& v : src.vertices())
        q.add_vertex(v.id, v.frozen);
    std::vector<std::optional<ArrowIndex>> remap(src.arrow_count());
    for (std::size_t i = 0; i < src.arrow_count(); ++i) {
        const Arrow& a = src.arrow(static_cast<ArrowIndex>(i));
        if (a.degree == 0)
            remap[i] = q.add_arrow(a.id, a.source, a.target, 0, a.frozen);
    }
    Presentation out;
    out.quiver = share(std::move(q));
    for (std::size_t i = 0; i < src.arrow_count(); ++i) {
        const auto a = static_cast<ArrowIndex>(i);
        if (src.arrow(a).degree != -1)
            continue;
        AlgebraElement rel(out.quiver);
        for (const auto& [w, c] : p.diff(a).terms()) {
            if (w.degree() != 0)
                continue;
            if (w.is_lazy()) {
                rel.add_term(PathWord::lazy(*out.quiver, w.source()), c);
                continue;
            }
            std::vector<ArrowIndex> seq;
            bool inside = true;
            for (auto b : w.arrows()) {
                if (!remap[b]) {
                    inside = false;
                    break;
                }
                seq.push_back(*remap[b]);
            }
            // Degree-0 words through nonzero-degree arrows have no image in
            // the degree-0 subquiver.
            if (inside)
                rel.add_term(PathWord::from_arrows(*out.quiver, std::move(seq)), c);
        }
        if (!rel.is_zero())
            out.relations.push_back(std::move(rel));
    }
    return out;
}

} // namespace cyq
