#include "cyq/rewriting.hpp"

#include "cyq/completions.hpp"
#include "cyq/errors.hpp"

#include <algorithm>
#include <deque>
#include <random>
#include <functional>
#include <limits>
#include <set>
#include <tuple>

namespace cyq {

namespace {

PathWord splice(const GradedQuiver& q, const PathWord& w, std::size_t pos, std::size_t len, const PathWord& mid)
{
    if (w.length() == len && pos == 0)
        return mid;
    const auto& a = w.arrows();
    std::vector<ArrowIndex> out(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(pos));
    out.insert(out.end(), mid.arrows().begin(), mid.arrows().end());
    out.insert(out.end(), a.begin() + static_cast<std::ptrdiff_t>(pos + len), a.end());
    if (out.empty()) {
        // only reachable when w == lead and mid is lazy
        return mid;
    }
    return PathWord::from_arrows(q, std::move(out));
}

bool passes_through(const GradedQuiver& q, const PathWord& w, VertexIndex v)
{
    if (w.source() == v)
        return true;
    for (auto a : w.arrows())
        if (q.arrow(a).target == v)
            return true;
    return false;
}

// Monic normalisation: divide by the coefficient of the leading term.
std::optional<RewriteRule> orient(const AlgebraElement& x)
{
    if (x.is_zero())
        return std::nullopt;
    auto it = x.terms().rbegin();
    RewriteRule r{it->first, AlgebraElement(x.quiver())};
    const Rational lc = it->second;
    for (const auto& [w, c] : x.terms())
        if (!(w == r.lead))
            r.rhs.add_term(w, -c / lc);
    return r;
}

} // namespace

void RewriteSystem::reindex()
{
    index_.clear();
    lengths_.clear();
    for (std::size_t k = 0; k < rules_.size(); ++k) {
        const PathWord& lead = rules_[k].lead;
        if (lead.is_lazy())
            continue;
        index_.emplace(lead.arrows(), k);
        lengths_.insert(lead.length());
    }
}

std::vector<RewriteSystem::Match> RewriteSystem::matches(const PathWord& w, bool first_only) const
{
    std::vector<Match> out;
    const GradedQuiver& q = *quiver_;
    for (std::size_t k = 0; k < rules_.size(); ++k)
        if (rules_[k].lead.is_lazy() && passes_through(q, w, rules_[k].lead.source())) {
            out.push_back({k, 0});
            if (first_only)
                return out;
        }
    const auto& a = w.arrows();
    std::vector<ArrowIndex> key;
    for (std::size_t pos = 0; pos < a.size(); ++pos)
        for (std::size_t l : lengths_) {
            if (pos + l > a.size())
                break;
            key.assign(a.begin() + static_cast<std::ptrdiff_t>(pos), a.begin() + static_cast<std::ptrdiff_t>(pos + l));
            auto it = index_.find(key);
            if (it == index_.end())
                continue;
            out.push_back({it->second, pos});
            if (first_only)
                return out;
        }
    return out;
}

bool RewriteSystem::irreducible(const PathWord& w) const { return matches(w, true).empty(); }

AlgebraElement RewriteSystem::reduce(const AlgebraElement& x, ReductionStrategy s, std::uint64_t seed) const
{
    AlgebraElement out(quiver_);
    if (x.is_zero())
        return out;
    const GradedQuiver& q = *quiver_;
    std::mt19937_64 rng(seed);
    std::map<PathWord, Rational> todo(x.terms().begin(), x.terms().end());
    // Largest word first: every rewrite produces strictly smaller words, so each
    // word is visited once.
    while (!todo.empty()) {
        auto node = todo.extract(std::prev(todo.end()));
        const PathWord& w = node.key();
        const Rational& c = node.mapped();
        auto ms = matches(w, s == ReductionStrategy::leftmost);
        if (ms.empty()) {
            out.add_term(w, c);
            continue;
        }
        Match m = ms.front();
        if (s == ReductionStrategy::rightmost) {
            m = *std::max_element(ms.begin(), ms.end(), [](const Match& x, const Match& y) {
                return std::tie(x.pos, y.rule) < std::tie(y.pos, x.rule);
            });
        } else if (s == ReductionStrategy::random) {
            m = ms[std::uniform_int_distribution<std::size_t>(0, ms.size() - 1)(rng)];
        }
        const RewriteRule& r = rules_[m.rule];
        if (r.lead.is_lazy())
            continue; // killed
        for (const auto& [rw, rc] : r.rhs.terms()) {
            PathWord nw = splice(q, w, m.pos, r.lead.length(), rw);
            auto [it, inserted] = todo.try_emplace(nw, c * rc);
            if (!inserted) {
                it->second += c * rc;
                if (it->second == 0)
                    todo.erase(it);
            }
        }
    }
    return out;
}

namespace detail {

// Buchberger-style completion with a queue of rule pairs keyed by lead.
class Completer {
public:
    Completer(QuiverPtr q, std::size_t bound, std::size_t cap) : q_(std::move(q)), bound_(bound), cap_(cap)
    {
        rs_.quiver_ = q_;
        rs_.bound_ = bound;
        rs_.reindex();
    }

    void add(const AlgebraElement& x) { pending_.push_back(x); }

    RewriteSystem run()
    {
        drain();
        while (!pairs_.empty()) {
            auto [l1, l2] = pairs_.front();
            pairs_.pop_front();
            auto r1 = find(l1), r2 = find(l2);
            if (!r1 || !r2)
                continue; // a rule was retired since the pair was queued
            for (auto& sel : overlaps(*r1, *r2, bound_)) {
                auto red = rs_.reduce(sel);
                if (!red.is_zero()) {
                    add(red);
                    drain();
                }
            }
        }
        for (auto& rule : rs_.rules_) {
            auto red = rs_.reduce(rule.rhs);
            rule.rhs = std::move(red);
        }
        std::sort(rs_.rules_.begin(), rs_.rules_.end(),
                  [](const RewriteRule& x, const RewriteRule& y) { return x.lead < y.lead; });
        rs_.reindex();
        // Overlaps up to the bound are resolved; look for a longer one that is not.
        bool resolved = true;
        for (std::size_t i = 0; i < rs_.rules_.size() && resolved; ++i)
            for (std::size_t j = 0; j < rs_.rules_.size() && resolved; ++j)
                for (auto& sel : overlaps(rs_.rules_[i], rs_.rules_[j], std::numeric_limits<std::size_t>::max()))
                    if (!rs_.reduce(sel).is_zero()) {
                        resolved = false;
                        break;
                    }
        rs_.resolved_ = resolved;
        const bool short_leads = std::all_of(rs_.rules_.begin(), rs_.rules_.end(),
                                             [&](const RewriteRule& r) { return r.lead.length() < bound_; });
        rs_.stable_ = resolved && short_leads;
        return std::move(rs_);
    }

private:
    const RewriteRule* find(const PathWord& lead) const
    {
        for (const auto& r : rs_.rules_)
            if (r.lead == lead)
                return &r;
        return nullptr;
    }

    // Turn pending elements into rules, keeping leads interreduced.
    void drain()
    {
        while (!pending_.empty()) {
            AlgebraElement x = std::move(pending_.front());
            pending_.pop_front();
            auto r = orient(rs_.reduce(x));
            if (!r)
                continue;
            // Rules whose lead contains the new lead go back to the queue.
            RewriteSystem probe;
            probe.quiver_ = q_;
            probe.rules_ = {*r};
            probe.reindex();
            std::vector<RewriteRule> keep;
            for (auto& old : rs_.rules_) {
                if (!probe.irreducible(old.lead))
                    pending_.push_back(AlgebraElement::word(q_, old.lead) - old.rhs);
                else
                    keep.push_back(std::move(old));
            }
            for (const auto& k : keep) {
                pairs_.emplace_back(r->lead, k.lead);
                pairs_.emplace_back(k.lead, r->lead);
            }
            pairs_.emplace_back(r->lead, r->lead);
            keep.push_back(std::move(*r));
            rs_.rules_ = std::move(keep);
            rs_.reindex();
            if (rs_.rules_.size() > cap_)
                throw ResourceError("rewriting: rule count exceeds the cap of " + std::to_string(cap_));
        }
    }

    // S-elements of the proper overlaps lead1 = p s, lead2 = s q with |p s q| <= max_len.
    std::vector<AlgebraElement> overlaps(const RewriteRule& r1, const RewriteRule& r2, std::size_t max_len) const
    {
        std::vector<AlgebraElement> out;
        if (r1.lead.is_lazy() || r2.lead.is_lazy())
            return out;
        const GradedQuiver& q = *q_;
        const auto& l1 = r1.lead.arrows();
        const auto& l2 = r2.lead.arrows();
        for (std::size_t s = 1; s < l1.size() && s < l2.size(); ++s) {
            if (!std::equal(l1.end() - static_cast<std::ptrdiff_t>(s), l1.end(), l2.begin()))
                continue;
            if (l1.size() + l2.size() - s > max_len)
                continue;
            PathWord p = r1.lead.slice(q, 0, l1.size() - s);
            PathWord tail = r2.lead.slice(q, s, l2.size());
            // lead1 tail = p lead2
            AlgebraElement a(q_), b(q_);
            for (const auto& [w, c] : r1.rhs.terms())
                if (auto x = concat(w, tail))
                    a.add_term(*x, c);
            for (const auto& [w, c] : r2.rhs.terms())
                if (auto x = concat(p, w))
                    b.add_term(*x, c);
            out.push_back(a - b);
        }
        return out;
    }

    QuiverPtr q_;
    std::size_t bound_;
    std::size_t cap_;
    RewriteSystem rs_;
    std::deque<AlgebraElement> pending_;
    std::deque<std::pair<PathWord, PathWord>> pairs_;
};

} // namespace detail

RewriteSystem complete(const Presentation& p, std::size_t max_len, const CompletionOptions& options)
{
    p.validate();
    if (max_len < 1)
        throw ValidationError("parameter", "max length must be >= 1");
    detail::Completer c(p.quiver, max_len, options.rule_cap);
    for (const auto& r : p.relations)
        if (!r.is_zero())
            c.add(transport(r, p.quiver));
    return c.run();
}

namespace {

template <class Visit>
void walk_irreducible(const RewriteSystem& rs, Visit&& visit)
{
    const GradedQuiver& q = *rs.quiver();
    const std::size_t max_len = rs.completion_bound();
    std::set<std::vector<ArrowIndex>> leads;
    std::set<std::size_t> lead_lengths;
    std::vector<bool> dead(q.vertex_count(), false);
    for (const auto& r : rs.rules()) {
        if (r.lead.is_lazy()) {
            dead[r.lead.source()] = true;
            continue;
        }
        leads.insert(r.lead.arrows());
        lead_lengths.insert(r.lead.length());
    }
    std::vector<std::vector<ArrowIndex>> into(q.vertex_count());
    for (ArrowIndex a = 0; a < q.arrow_count(); ++a)
        into[q.arrow(a).source].push_back(a);

    // Words grow on the left: a new leftmost arrow only creates new matches
    // that start at position 0.
    std::vector<ArrowIndex> word;
    std::function<void(VertexIndex)> extend = [&](VertexIndex at) {
        if (word.size() == max_len)
            return;
        for (ArrowIndex a : into[at]) {
            const VertexIndex next = q.arrow(a).target;
            if (dead[next])
                continue;
            word.insert(word.begin(), a);
            bool ok = true;
            for (std::size_t l : lead_lengths) {
                if (l > word.size())
                    break;
                if (leads.count(std::vector<ArrowIndex>(word.begin(), word.begin() + static_cast<std::ptrdiff_t>(l)))) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                visit(word, next);
                extend(next);
            }
            word.erase(word.begin());
        }
    };
    for (VertexIndex v = 0; v < q.vertex_count(); ++v) {
        if (dead[v])
            continue;
        visit(word, v);
        extend(v);
    }
}

} // namespace

DimensionProfile dimension_profile(const RewriteSystem& rs)
{
    DimensionProfile prof;
    prof.max_len = rs.completion_bound();
    prof.per_length.assign(prof.max_len + 1, 0);
    walk_irreducible(rs, [&](const std::vector<ArrowIndex>& w, VertexIndex) { ++prof.per_length[w.size()]; });
    for (auto c : prof.per_length)
        prof.total += c;
    prof.stable = rs.stable();
    prof.finite = prof.stable && prof.per_length.back() == 0;
    return prof;
}

DimensionProfile dimension_profile(const Presentation& p, std::size_t max_len, const CompletionOptions& options)
{
    return dimension_profile(complete(p, max_len, options));
}

std::vector<PathWord> normal_words(const RewriteSystem& rs)
{
    const GradedQuiver& q = *rs.quiver();
    std::vector<PathWord> out;
    walk_irreducible(rs, [&](const std::vector<ArrowIndex>& w, VertexIndex v) {
        out.push_back(w.empty() ? PathWord::lazy(q, v) : PathWord::from_arrows(q, w));
    });
    std::sort(out.begin(), out.end());
    return out;
}

std::string DimsVerdict::label() const
{
    std::string s = agree ? "dimension profiles agree up to length " : "dimension profiles differ";
    if (agree)
        s += std::to_string(max_len);
    else if (first_difference)
        s += " at length " + std::to_string(*first_difference);
    return s;
}

DimsVerdict dims_equal(const Presentation& p, const Presentation& q, std::size_t max_len)
{
    DimsVerdict v;
    v.max_len = max_len;
    v.left = dimension_profile(p, max_len);
    v.right = dimension_profile(q, max_len);
    for (std::size_t l = 0; l <= max_len; ++l)
        if (v.left.per_length[l] != v.right.per_length[l]) {
            v.first_difference = l;
            break;
        }
    v.agree = !v.first_difference;
    return v;
}

} // namespace cyq
