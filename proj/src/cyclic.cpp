#include "cyq/cyclic.hpp"

#include "cyq/completions.hpp"
#include "cyq/errors.hpp"
#include "cyq/rewriting.hpp"

#include <algorithm>
#include <map>

namespace cyq {

namespace {

bool vec_equal(SparseVector x, SparseVector y)
{
    normalize(x);
    normalize(y);
    return x == y;
}

SparseVector unit_vector(std::size_t i) { return {{i, Rational(1)}}; }

} // namespace

SparseVector FiniteDimAlgebra::multiply(const SparseVector& x, const SparseVector& y) const
{
    SparseVector out;
    for (const auto& [i, a] : x)
        for (const auto& [j, b] : y)
            for (const auto& [k, c] : product_[i][j])
                out.emplace_back(k, a * b * c);
    normalize(out);
    return out;
}

SparseVector FiniteDimAlgebra::unit() const
{
    SparseVector u;
    for (const auto& e : idempotents_)
        u.insert(u.end(), e.begin(), e.end());
    normalize(u);
    return u;
}

FiniteDimAlgebra FiniteDimAlgebra::build(std::vector<std::string> labels, std::vector<std::vector<SparseVector>> product,
                                         std::vector<SparseVector> idempotents)
{
    const std::size_t n = labels.size();
    if (product.size() != n)
        throw ValidationError("algebra", "structure constants have the wrong shape");
    for (auto& row : product) {
        if (row.size() != n)
            throw ValidationError("algebra", "structure constants have the wrong shape");
        for (auto& v : row) {
            normalize(v);
            if (!v.empty() && v.back().first >= n)
                throw ValidationError("algebra", "structure constant index out of range");
        }
    }
    FiniteDimAlgebra a;
    a.labels_ = std::move(labels);
    a.product_ = std::move(product);
    for (auto& e : idempotents) {
        normalize(e);
        if (!e.empty() && e.back().first >= n)
            throw ValidationError("algebra", "idempotent index out of range");
    }
    a.idempotents_ = std::move(idempotents);

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const auto ij = a.product_[i][j];
            for (std::size_t k = 0; k < n; ++k) {
                auto left = a.multiply(ij, unit_vector(k));
                auto right = a.multiply(unit_vector(i), a.product_[j][k]);
                if (left != right)
                    throw ValidationError("algebra", "multiplication is not associative on (" + a.labels_[i] + ", " +
                                                         a.labels_[j] + ", " + a.labels_[k] + ")");
            }
        }
    for (std::size_t i = 0; i < a.idempotents_.size(); ++i)
        for (std::size_t j = 0; j < a.idempotents_.size(); ++j) {
            auto p = a.multiply(a.idempotents_[i], a.idempotents_[j]);
            if (i == j ? p != a.idempotents_[i] : !p.empty())
                throw ValidationError("algebra", "idempotents are not orthogonal idempotents");
        }
    const auto u = a.unit();
    for (std::size_t i = 0; i < n; ++i)
        if (a.multiply(u, unit_vector(i)) != unit_vector(i) || a.multiply(unit_vector(i), u) != unit_vector(i))
            throw ValidationError("algebra", "idempotents do not sum to the unit");
    return a;
}

FiniteDimAlgebra FiniteDimAlgebra::from_presentation(const Presentation& p, std::size_t max_len)
{
    auto rs = complete(p, max_len);
    auto prof = dimension_profile(rs);
    if (!prof.finite)
        throw ValidationError("uncertified", "presentation is not certified finite-dimensional at length " +
                                                 std::to_string(max_len));
    const auto basis = normal_words(rs);
    const GradedQuiver& q = *p.quiver;
    std::map<PathWord, std::size_t> index;
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        index.emplace(basis[i], i);
        labels.push_back(basis[i].to_string(q));
    }
    std::vector<std::vector<SparseVector>> prod(basis.size(), std::vector<SparseVector>(basis.size()));
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = 0; j < basis.size(); ++j) {
            auto w = concat(basis[i], basis[j]);
            if (!w)
                continue;
            const auto r = rs.reduce(AlgebraElement::word(p.quiver, *w));
            for (const auto& [nw, c] : r.terms())
                prod[i][j].emplace_back(index.at(nw), c);
        }
    std::vector<SparseVector> idem;
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (basis[i].is_lazy())
            idem.push_back(unit_vector(i));
    return build(std::move(labels), std::move(prod), std::move(idem));
}

FiniteDimAlgebra FiniteDimAlgebra::ground_field()
{
    return build({"1"}, {{unit_vector(0)}}, {unit_vector(0)});
}

FiniteDimAlgebra FiniteDimAlgebra::zero() { return build({}, {}, {}); }

FiniteDimAlgebra FiniteDimAlgebra::matrices(std::size_t n)
{
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            labels.push_back("E" + std::to_string(i + 1) + std::to_string(j + 1));
    const std::size_t d = n * n;
    std::vector<std::vector<SparseVector>> prod(d, std::vector<SparseVector>(d));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t l = 0; l < n; ++l)
                prod[i * n + j][j * n + l] = unit_vector(i * n + l);
    std::vector<SparseVector> idem;
    for (std::size_t i = 0; i < n; ++i)
        idem.push_back(unit_vector(i * n + i));
    return build(std::move(labels), std::move(prod), std::move(idem));
}

FiniteDimAlgebra FiniteDimAlgebra::product(const FiniteDimAlgebra& a, const FiniteDimAlgebra& b)
{
    const std::size_t da = a.dim(), d = a.dim() + b.dim();
    std::vector<std::string> labels;
    for (const auto& l : a.labels())
        labels.push_back("(" + l + ",0)");
    for (const auto& l : b.labels())
        labels.push_back("(0," + l + ")");
    std::vector<std::vector<SparseVector>> prod(d, std::vector<SparseVector>(d));
    for (std::size_t i = 0; i < da; ++i)
        for (std::size_t j = 0; j < da; ++j)
            prod[i][j] = a.mul(i, j);
    for (std::size_t i = 0; i < b.dim(); ++i)
        for (std::size_t j = 0; j < b.dim(); ++j)
            for (const auto& [k, c] : b.mul(i, j))
                prod[da + i][da + j].emplace_back(da + k, c);
    std::vector<SparseVector> idem = a.idempotents();
    for (const auto& e : b.idempotents()) {
        SparseVector s;
        for (const auto& [k, c] : e)
            s.emplace_back(da + k, c);
        idem.push_back(std::move(s));
    }
    return build(std::move(labels), std::move(prod), std::move(idem));
}

AlgebraMorphism AlgebraMorphism::build(FiniteDimAlgebra source, FiniteDimAlgebra target, SparseMatrix matrix)
{
    if (matrix.rows() != target.dim() || matrix.cols() != source.dim())
        throw ValidationError("morphism", "morphism matrix has the wrong shape");
    for (std::size_t i = 0; i < source.dim(); ++i)
        for (std::size_t j = 0; j < source.dim(); ++j) {
            auto lhs = matrix.apply(source.mul(i, j));
            auto rhs = target.multiply(matrix.column(i), matrix.column(j));
            if (!vec_equal(lhs, rhs))
                throw ValidationError("morphism", "map is not multiplicative on (" + source.labels()[i] + ", " +
                                                      source.labels()[j] + ")");
        }
    AlgebraMorphism f;
    f.source_ = std::move(source);
    f.target_ = std::move(target);
    f.matrix_ = std::move(matrix);
    return f;
}

AlgebraMorphism AlgebraMorphism::identity(const FiniteDimAlgebra& a)
{
    return build(a, a, SparseMatrix::identity(a.dim()));
}

AlgebraMorphism AlgebraMorphism::from_zero(const FiniteDimAlgebra& a)
{
    return build(FiniteDimAlgebra::zero(), a, SparseMatrix(a.dim(), 0));
}

AlgebraMorphism frozen_inclusion(const Presentation& p, std::size_t max_len)
{
    p.validate();
    const GradedQuiver& q = *p.quiver;
    GradedQuiver sub;
    std::vector<std::optional<VertexIndex>> vmap(q.vertex_count());
    std::vector<std::optional<ArrowIndex>> amap(q.arrow_count());
    std::vector<ArrowIndex> back;
    for (VertexIndex v = 0; v < q.vertex_count(); ++v)
        if (q.vertex(v).frozen)
            vmap[v] = sub.add_vertex(q.vertex(v).id, true);
    for (ArrowIndex a = 0; a < q.arrow_count(); ++a) {
        const Arrow& arr = q.arrow(a);
        if (arr.frozen) {
            amap[a] = sub.add_arrow(arr.id, *vmap[arr.source], *vmap[arr.target], 0, true);
            back.push_back(a);
        }
    }
    QuiverPtr sp = share(std::move(sub));
    Presentation fp{sp, {}};
    for (const auto& r : p.relations) {
        AlgebraElement x(sp);
        bool inside = !r.is_zero();
        for (const auto& [w, c] : r.terms()) {
            if (w.is_lazy()) {
                if (!vmap[w.source()]) {
                    inside = false;
                    break;
                }
                x.add_term(PathWord::lazy(*sp, *vmap[w.source()]), c);
                continue;
            }
            std::vector<ArrowIndex> seq;
            for (auto a : w.arrows()) {
                if (!amap[a]) {
                    inside = false;
                    break;
                }
                seq.push_back(*amap[a]);
            }
            if (!inside)
                break;
            x.add_term(PathWord::from_arrows(*sp, std::move(seq)), c);
        }
        if (inside)
            fp.relations.push_back(std::move(x));
    }

    auto b = FiniteDimAlgebra::from_presentation(fp, max_len);
    auto a = FiniteDimAlgebra::from_presentation(p, max_len);
    auto rs_a = complete(p, max_len);
    auto rs_b = complete(fp, max_len);
    const auto basis_a = normal_words(rs_a);
    const auto basis_b = normal_words(rs_b);
    std::map<PathWord, std::size_t> index_a;
    for (std::size_t i = 0; i < basis_a.size(); ++i)
        index_a.emplace(basis_a[i], i);
    std::vector<VertexIndex> vback(sp->vertex_count());
    for (VertexIndex v = 0; v < q.vertex_count(); ++v)
        if (vmap[v])
            vback[*vmap[v]] = v;

    SparseMatrix m(a.dim(), b.dim());
    for (std::size_t j = 0; j < basis_b.size(); ++j) {
        const PathWord& w = basis_b[j];
        PathWord img;
        if (w.is_lazy()) {
            img = PathWord::lazy(q, vback[w.source()]);
        } else {
            std::vector<ArrowIndex> seq;
            for (auto x : w.arrows())
                seq.push_back(back[x]);
            img = PathWord::from_arrows(q, std::move(seq));
        }
        SparseVector col;
        const auto r = rs_a.reduce(AlgebraElement::word(p.quiver, img));
        for (const auto& [nw, c] : r.terms())
            col.emplace_back(index_a.at(nw), c);
        m.set_column(j, std::move(col));
    }
    return AlgebraMorphism::build(std::move(b), std::move(a), std::move(m));
}

namespace {

std::size_t checked_power(std::size_t d, std::size_t len, std::size_t cap)
{
    std::size_t r = 1;
    for (std::size_t i = 0; i < len; ++i) {
        if (d != 0 && r > cap / d)
            throw ResourceError("tensor power A^(x)" + std::to_string(len) + " exceeds the basis cap of " +
                                std::to_string(cap));
        r *= d;
    }
    if (r > cap)
        throw ResourceError("tensor power A^(x)" + std::to_string(len) + " exceeds the basis cap of " +
                            std::to_string(cap));
    return r;
}

void decode(std::size_t idx, std::size_t d, std::vector<std::size_t>& digits)
{
    for (std::size_t k = digits.size(); k-- > 0;) {
        digits[k] = idx % d;
        idx /= d;
    }
}

std::size_t encode(const std::vector<std::size_t>& digits, std::size_t d)
{
    std::size_t v = 0;
    for (auto x : digits)
        v = v * d + x;
    return v;
}

SparseMatrix boundary(const FiniteDimAlgebra& a, std::size_t len, bool cyclic_face, const CyclicOptions& o)
{
    if (len < 2)
        throw ValidationError("parameter", "b and b' need at least two tensor factors");
    const std::size_t d = a.dim();
    const std::size_t cols = checked_power(d, len, o.basis_cap);
    const std::size_t rows = checked_power(d, len - 1, o.basis_cap);
    SparseMatrix m(rows, cols);
    const std::size_t n = len - 1;
    std::vector<std::size_t> dg(len), t(len - 1);
    for (std::size_t col = 0; col < cols; ++col) {
        decode(col, d, dg);
        SparseVector out;
        for (std::size_t i = 0; i < n; ++i) {
            const Rational sign = (i % 2 == 0) ? 1 : -1;
            for (const auto& [k, c] : a.mul(dg[i], dg[i + 1])) {
                std::size_t w = 0;
                for (std::size_t j = 0; j < i; ++j)
                    t[w++] = dg[j];
                t[w++] = k;
                for (std::size_t j = i + 2; j < len; ++j)
                    t[w++] = dg[j];
                out.emplace_back(encode(t, d), sign * c);
            }
        }
        if (cyclic_face) {
            const Rational sign = (n % 2 == 0) ? 1 : -1;
            for (const auto& [k, c] : a.mul(dg[n], dg[0])) {
                t[0] = k;
                for (std::size_t j = 1; j < n; ++j)
                    t[j] = dg[j];
                out.emplace_back(encode(t, d), sign * c);
            }
        }
        m.set_column(col, std::move(out));
    }
    return m;
}

// t^k on a single basis tensor: (sign, index).
std::pair<int, std::size_t> rotate(const std::vector<std::size_t>& dg, std::size_t k, std::size_t d,
                                   std::vector<std::size_t>& scratch)
{
    const std::size_t len = dg.size();
    const std::size_t n = len - 1;
    for (std::size_t j = 0; j < len; ++j)
        scratch[(j + k) % len] = dg[j];
    const int sign = ((n % 2 == 1) && (k % 2 == 1)) ? -1 : 1;
    return {sign, encode(scratch, d)};
}

SparseMatrix rotation_sum(const FiniteDimAlgebra& a, std::size_t len, bool full_norm, const CyclicOptions& o)
{
    if (len < 1)
        throw ValidationError("parameter", "t and N need at least one tensor factor");
    const std::size_t d = a.dim();
    const std::size_t size = checked_power(d, len, o.basis_cap);
    SparseMatrix m(size, size);
    std::vector<std::size_t> dg(len), scratch(len);
    for (std::size_t col = 0; col < size; ++col) {
        decode(col, d, dg);
        SparseVector out;
        if (full_norm) {
            for (std::size_t k = 0; k < len; ++k) {
                auto [s, idx] = rotate(dg, k, d, scratch);
                out.emplace_back(idx, Rational(s));
            }
        } else {
            auto [s, idx] = rotate(dg, 1, d, scratch);
            out.emplace_back(idx, Rational(s));
        }
        m.set_column(col, std::move(out));
    }
    return m;
}

// Lazily built b, b', t, N per tensor length.
class TensorOps {
public:
    TensorOps(const FiniteDimAlgebra& a, const CyclicOptions& o) : a_(a), o_(o) {}

    std::size_t dim(std::size_t len) { return checked_power(a_.dim(), len, o_.basis_cap); }
    const SparseMatrix& b(std::size_t len) { return get(b_, len, [&] { return hochschild_b(a_, len, o_); }); }
    const SparseMatrix& bp(std::size_t len) { return get(bp_, len, [&] { return bar_b_prime(a_, len, o_); }); }
    const SparseMatrix& t(std::size_t len) { return get(t_, len, [&] { return cyclic_t(a_, len, o_); }); }
    const SparseMatrix& n(std::size_t len) { return get(n_, len, [&] { return cyclic_norm(a_, len, o_); }); }
    const SparseMatrix& one_minus_t(std::size_t len)
    {
        return get(omt_, len, [&] { return SparseMatrix::identity(dim(len)) - t(len); });
    }

private:
    template <class F>
    const SparseMatrix& get(std::map<std::size_t, SparseMatrix>& cache, std::size_t len, F make)
    {
        auto it = cache.find(len);
        if (it == cache.end())
            it = cache.emplace(len, make()).first;
        return it->second;
    }

    const FiniteDimAlgebra& a_;
    const CyclicOptions& o_;
    std::map<std::size_t, SparseMatrix> b_, bp_, t_, n_, omt_;
};

std::size_t homology_dim(std::size_t dim, const SparseMatrix& out, const SparseMatrix& in, const Field& f)
{
    const std::size_t r1 = rank(out, f), r2 = rank(in, f);
    if (r1 + r2 > dim)
        throw InvariantViolation("boundary ranks exceed the chain dimension");
    return dim - r1 - r2;
}

std::vector<std::size_t> offsets(const std::vector<std::size_t>& sizes)
{
    std::vector<std::size_t> off(sizes.size() + 1, 0);
    for (std::size_t i = 0; i < sizes.size(); ++i)
        off[i + 1] = off[i] + sizes[i];
    return off;
}

// Sum complex Tot_n = sum_{j >= 0, n - 2j >= 0} M_{n-2j}.
struct SumTotal {
    const MixedComplexData& m;

    std::vector<std::size_t> parts(long n) const
    {
        std::vector<std::size_t> p;
        for (long k = n; k >= 0; k -= 2)
            p.push_back(m.dims.at(static_cast<std::size_t>(k)));
        return p;
    }
    std::size_t dim(long n) const
    {
        std::size_t s = 0;
        for (auto x : parts(n))
            s += x;
        return s;
    }
    SparseMatrix diff(long n) const
    {
        const auto src = offsets(parts(n));
        const auto dst = offsets(parts(n - 1));
        SparseMatrix out(dst.back(), src.back());
        for (std::size_t j = 0; j + 1 < src.size(); ++j) {
            const long deg = n - 2 * static_cast<long>(j);
            if (deg >= 1)
                out.add_block(dst[j], src[j], m.d.at(static_cast<std::size_t>(deg)));
            if (j >= 1)
                out.add_block(dst[j - 1], src[j], m.dual.at(static_cast<std::size_t>(deg)));
        }
        return out;
    }
};

// Product complex T_n = prod_{j < cols, n + 2j >= 0} M_{n+2j}.
struct ProductTotal {
    const MixedComplexData& m;
    std::size_t cols;

    std::vector<std::pair<std::size_t, std::size_t>> parts(long n) const // (j, degree)
    {
        std::vector<std::pair<std::size_t, std::size_t>> p;
        for (std::size_t j = 0; j < cols; ++j) {
            const long deg = n + 2 * static_cast<long>(j);
            if (deg >= 0)
                p.emplace_back(j, static_cast<std::size_t>(deg));
        }
        return p;
    }
    std::vector<std::size_t> sizes(long n) const
    {
        std::vector<std::size_t> s;
        for (auto [j, deg] : parts(n))
            s.push_back(m.dims.at(deg));
        return s;
    }
    std::size_t dim(long n) const
    {
        std::size_t s = 0;
        for (auto x : sizes(n))
            s += x;
        return s;
    }
    SparseMatrix diff(long n) const
    {
        const auto sp = parts(n), dp = parts(n - 1);
        const auto src = offsets(sizes(n)), dst = offsets(sizes(n - 1));
        auto slot = [&](std::size_t j) -> std::optional<std::size_t> {
            for (std::size_t i = 0; i < dp.size(); ++i)
                if (dp[i].first == j)
                    return i;
            return std::nullopt;
        };
        SparseMatrix out(dst.back(), src.back());
        for (std::size_t i = 0; i < sp.size(); ++i) {
            auto [j, deg] = sp[i];
            if (deg >= 1)
                if (auto s = slot(j))
                    out.add_block(dst[*s], src[i], m.d.at(deg));
            if (auto s = slot(j + 1))
                out.add_block(dst[*s], src[i], m.dual.at(deg));
        }
        return out;
    }
};

std::size_t need_trunc_for_hn(std::size_t n_max, std::size_t cols) { return n_max + 2 * cols + 1; }

} // namespace

SparseMatrix hochschild_b(const FiniteDimAlgebra& a, std::size_t len, const CyclicOptions& o)
{
    return boundary(a, len, true, o);
}

SparseMatrix bar_b_prime(const FiniteDimAlgebra& a, std::size_t len, const CyclicOptions& o)
{
    return boundary(a, len, false, o);
}

SparseMatrix cyclic_t(const FiniteDimAlgebra& a, std::size_t len, const CyclicOptions& o)
{
    return rotation_sum(a, len, false, o);
}

SparseMatrix cyclic_norm(const FiniteDimAlgebra& a, std::size_t len, const CyclicOptions& o)
{
    return rotation_sum(a, len, true, o);
}

bool MixedComplexData::identities_hold() const
{
    for (std::size_t n = 2; n <= trunc; ++n)
        if (!(d[n - 1] * d[n]).is_zero())
            return false;
    for (std::size_t n = 0; n + 2 <= trunc; ++n)
        if (!(dual[n + 1] * dual[n]).is_zero())
            return false;
    for (std::size_t n = 0; n + 1 <= trunc; ++n) {
        // d d' + d' d on M_n lands in M_n
        SparseMatrix s = d[n + 1] * dual[n];
        if (n >= 1)
            s = s + dual[n - 1] * d[n];
        if (!s.is_zero())
            return false;
    }
    return true;
}

MixedComplexData mixed_complex(const FiniteDimAlgebra& a, std::size_t trunc, const CyclicOptions& o)
{
    if (trunc < 1)
        throw ValidationError("parameter", "mixed complex truncation must be >= 1");
    TensorOps ops(a, o);
    MixedComplexData m;
    m.trunc = trunc;
    m.dims.push_back(ops.dim(1));
    for (std::size_t n = 1; n <= trunc; ++n)
        m.dims.push_back(ops.dim(n + 1) + ops.dim(n));
    m.d.push_back(SparseMatrix(0, m.dims[0]));
    for (std::size_t n = 1; n <= trunc; ++n) {
        SparseMatrix dn(m.dims[n - 1], m.dims[n]);
        const std::size_t x = ops.dim(n + 1);
        dn.add_block(0, 0, ops.b(n + 1));
        dn.add_block(0, x, ops.one_minus_t(n));
        if (n >= 2)
            dn.add_block(ops.dim(n), x, ops.bp(n), Rational(-1));
        m.d.push_back(std::move(dn));
    }
    for (std::size_t n = 0; n < trunc; ++n) {
        SparseMatrix dp(m.dims[n + 1], m.dims[n]);
        dp.add_block(ops.dim(n + 2), 0, ops.n(n + 1));
        m.dual.push_back(std::move(dp));
    }
    return m;
}

std::vector<std::size_t> mixed_homology(const MixedComplexData& m, std::size_t n_max, const Field& f)
{
    if (m.trunc <= n_max)
        throw ValidationError("parameter", "mixed complex truncated below the requested degree");
    std::vector<std::size_t> out;
    for (std::size_t n = 0; n <= n_max; ++n)
        out.push_back(homology_dim(m.dims[n], m.d[n], m.d[n + 1], f));
    return out;
}

std::vector<std::size_t> hochschild(const FiniteDimAlgebra& a, std::size_t n_max, const CyclicOptions& o)
{
    TensorOps ops(a, o);
    std::vector<std::size_t> out;
    std::vector<std::size_t> ranks(n_max + 3, 0); // ranks[len] = rank b on A^{(x) len}
    for (std::size_t len = 2; len <= n_max + 2; ++len)
        ranks[len] = rank(ops.b(len), o.field);
    for (std::size_t n = 0; n <= n_max; ++n) {
        const std::size_t dim = ops.dim(n + 1);
        out.push_back(dim - ranks[n + 1] - ranks[n + 2]);
    }
    return out;
}

std::size_t commutator_quotient(const FiniteDimAlgebra& a, const Field& f)
{
    std::vector<SparseVector> comm;
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = i + 1; j < a.dim(); ++j) {
            SparseVector v = a.mul(i, j);
            for (const auto& [k, c] : a.mul(j, i))
                v.emplace_back(k, -c);
            normalize(v);
            if (!v.empty())
                comm.push_back(std::move(v));
        }
    return a.dim() - rank(comm, f);
}

std::vector<std::size_t> cyclic(const FiniteDimAlgebra& a, std::size_t n_max, const CyclicOptions& o)
{
    TensorOps ops(a, o);
    // Column p, row q holds A^{(x) q+1}; Tot_n = sum_{p+q=n}.
    auto sizes = [&](long n) {
        std::vector<std::size_t> s;
        for (long p = 0; p <= n; ++p)
            s.push_back(ops.dim(static_cast<std::size_t>(n - p + 1)));
        return s;
    };
    auto diff = [&](long n) {
        const auto src = offsets(sizes(n));
        const auto dst = offsets(sizes(n - 1));
        SparseMatrix out(dst.back(), src.back());
        for (long p = 0; p <= n; ++p) {
            const std::size_t q = static_cast<std::size_t>(n - p);
            const std::size_t len = q + 1;
            if (q >= 1) {
                if (p % 2 == 0)
                    out.add_block(dst[p], src[p], ops.b(len));
                else
                    out.add_block(dst[p], src[p], ops.bp(len), Rational(-1));
            }
            if (p >= 1) {
                if (p % 2 == 1)
                    out.add_block(dst[p - 1], src[p], ops.one_minus_t(len));
                else
                    out.add_block(dst[p - 1], src[p], ops.n(len));
            }
        }
        return out;
    };
    std::vector<std::size_t> out;
    std::vector<SparseMatrix> d;
    d.push_back(SparseMatrix(0, offsets(sizes(0)).back()));
    for (long n = 1; n <= static_cast<long>(n_max) + 1; ++n)
        d.push_back(diff(n));
    for (std::size_t n = 0; n <= n_max; ++n)
        out.push_back(homology_dim(d[n].cols(), d[n], d[n + 1], o.field));
    return out;
}

std::vector<std::size_t> cyclic_from_mixed(const MixedComplexData& m, std::size_t n_max, const Field& f)
{
    if (m.trunc <= n_max)
        throw ValidationError("parameter", "mixed complex truncated below the requested degree");
    SumTotal tot{m};
    std::vector<std::size_t> out;
    for (long n = 0; n <= static_cast<long>(n_max); ++n) {
        SparseMatrix out_d = n == 0 ? SparseMatrix(0, tot.dim(0)) : tot.diff(n);
        out.push_back(homology_dim(tot.dim(n), out_d, tot.diff(n + 1), f));
    }
    return out;
}

NegativeCyclicResult negative_cyclic_from_mixed(const MixedComplexData& m, std::size_t n_max, std::size_t columns,
                                                const Field& f)
{
    if (columns < 1)
        throw ValidationError("parameter", "column truncation must be >= 1");
    if (m.trunc < need_trunc_for_hn(n_max, columns))
        throw ValidationError("parameter", "mixed complex too short for the requested columns");
    auto dims_at = [&](std::size_t c) {
        ProductTotal tot{m, c};
        std::vector<std::size_t> out;
        for (long n = 0; n <= static_cast<long>(n_max); ++n)
            out.push_back(homology_dim(tot.dim(n), tot.diff(n), tot.diff(n + 1), f));
        return out;
    };
    NegativeCyclicResult r;
    r.columns = columns;
    r.dims = dims_at(columns);
    r.next_dims = dims_at(columns + 1);
    r.stabilized = r.dims == r.next_dims;
    ProductTotal lo{m, columns}, hi{m, columns + 1};
    for (long n = 0; n <= static_cast<long>(n_max); ++n) {
        const std::size_t rows = lo.dim(n);
        SparseMatrix proj(rows, hi.dim(n));
        for (std::size_t i = 0; i < rows; ++i)
            proj.set_column(i, unit_vector(i));
        r.surviving.push_back(induced_rank(hi.diff(n), lo.diff(n + 1), proj, f));
    }
    return r;
}

NegativeCyclicResult negative_cyclic(const FiniteDimAlgebra& a, std::size_t n_max, std::size_t columns,
                                     const CyclicOptions& o)
{
    if (columns < 2)
        throw ValidationError("parameter", "negative cyclic homology needs at least 2 columns");
    auto m = mixed_complex(a, need_trunc_for_hn(n_max, columns), o);
    return negative_cyclic_from_mixed(m, n_max, columns, o.field);
}

std::size_t induced_rank(const SparseMatrix& dx, const SparseMatrix& dy, const SparseMatrix& phi, const Field& f)
{
    auto cycles = kernel_basis(dx, f);
    std::vector<SparseVector> vecs;
    for (std::size_t j = 0; j < dy.cols(); ++j)
        if (!dy.column(j).empty())
            vecs.push_back(dy.column(j));
    const std::size_t base = rank(vecs, f);
    for (const auto& z : cycles) {
        auto img = phi.apply(z);
        if (!img.empty())
            vecs.push_back(std::move(img));
    }
    return rank(vecs, f) - base;
}

CanonicalMaps canonical_maps(const FiniteDimAlgebra& a, std::size_t n_max, std::size_t columns,
                             const CyclicOptions& o)
{
    auto m = mixed_complex(a, need_trunc_for_hn(n_max, columns), o);
    // Classes lifting to columns + 1 columns, so top-column artifacts drop out.
    ProductTotal hn{m, columns + 1};
    SumTotal hc{m};
    CanonicalMaps out;
    out.columns = columns;
    for (long n = 0; n <= static_cast<long>(n_max); ++n) {
        const std::size_t mn = m.dims[static_cast<std::size_t>(n)];
        // HN -> HH: projection onto the j = 0 factor.
        SparseMatrix proj(mn, hn.dim(n));
        for (std::size_t i = 0; i < mn; ++i)
            proj.set_column(i, unit_vector(i));
        // HH -> HC: inclusion as the j = 0 summand.
        SparseMatrix incl(hc.dim(n), mn);
        for (std::size_t i = 0; i < mn; ++i)
            incl.set_column(i, unit_vector(i));
        const SparseMatrix dm = m.d[static_cast<std::size_t>(n)];
        const SparseMatrix dm1 = m.d[static_cast<std::size_t>(n) + 1];
        out.hn_to_hh.push_back(induced_rank(hn.diff(n), dm1, proj, o.field));
        out.hh_to_hc.push_back(induced_rank(dm, hc.diff(n + 1), incl, o.field));
        out.hn_to_hc.push_back(induced_rank(hn.diff(n), hc.diff(n + 1), incl * proj, o.field));
    }
    return out;
}

namespace {

SparseMatrix tensor_power(const SparseMatrix& f, std::size_t len, std::size_t src_dim, std::size_t dst_dim,
                          const CyclicOptions& o)
{
    const std::size_t cols = checked_power(src_dim, len, o.basis_cap);
    const std::size_t rows = checked_power(dst_dim, len, o.basis_cap);
    SparseMatrix m(rows, cols);
    std::vector<std::size_t> dg(len);
    for (std::size_t col = 0; col < cols; ++col) {
        decode(col, src_dim, dg);
        SparseVector acc{{0, Rational(1)}};
        for (std::size_t k = 0; k < len; ++k) {
            SparseVector next;
            for (const auto& [i, c] : acc)
                for (const auto& [r, x] : f.column(dg[k]))
                    next.emplace_back(i * dst_dim + r, c * x);
            acc = std::move(next);
        }
        m.set_column(col, std::move(acc));
    }
    return m;
}

// M(f) : MB_n -> MA_n, block diagonal f^{(x) n+1} + f^{(x) n}.
std::vector<SparseMatrix> mixed_map(const AlgebraMorphism& f, std::size_t trunc, const MixedComplexData& ma,
                                    const MixedComplexData& mb, const CyclicOptions& o)
{
    const std::size_t da = f.target().dim(), db = f.source().dim();
    std::vector<SparseMatrix> out;
    for (std::size_t n = 0; n <= trunc; ++n) {
        SparseMatrix m(ma.dims[n], mb.dims[n]);
        m.add_block(0, 0, tensor_power(f.matrix(), n + 1, db, da, o));
        if (n >= 1)
            m.add_block(checked_power(da, n + 1, o.basis_cap), checked_power(db, n + 1, o.basis_cap),
                        tensor_power(f.matrix(), n, db, da, o));
        out.push_back(std::move(m));
    }
    return out;
}

MixedComplexData cone(const MixedComplexData& ma, const MixedComplexData& mb, const std::vector<SparseMatrix>& fm)
{
    const std::size_t trunc = std::min(ma.trunc, mb.trunc);
    MixedComplexData c;
    c.trunc = trunc;
    for (std::size_t n = 0; n <= trunc; ++n)
        c.dims.push_back(ma.dims[n] + (n >= 1 ? mb.dims[n - 1] : 0));
    c.d.push_back(SparseMatrix(0, c.dims[0]));
    for (std::size_t n = 1; n <= trunc; ++n) {
        SparseMatrix dn(c.dims[n - 1], c.dims[n]);
        dn.add_block(0, 0, ma.d[n]);
        dn.add_block(0, ma.dims[n], fm[n - 1]);
        if (n >= 2)
            dn.add_block(ma.dims[n - 1], ma.dims[n], mb.d[n - 1], Rational(-1));
        c.d.push_back(std::move(dn));
    }
    for (std::size_t n = 0; n < trunc; ++n) {
        SparseMatrix dp(c.dims[n + 1], c.dims[n]);
        dp.add_block(0, 0, ma.dual[n]);
        if (n >= 1)
            dp.add_block(ma.dims[n + 1], ma.dims[n], mb.dual[n - 1], Rational(-1));
        c.dual.push_back(std::move(dp));
    }
    return c;
}

} // namespace

bool RelativeCyclicResult::les_exact() const
{
    return std::all_of(les.begin(), les.end(), [](const LesSpot& s) { return s.exact(); });
}

RelativeCyclicResult relative_cyclic(const AlgebraMorphism& f, std::size_t n_max, const CyclicOptions& o)
{
    const std::size_t trunc = n_max + 2;
    auto ma = mixed_complex(f.target(), trunc, o);
    auto mb = mixed_complex(f.source(), trunc, o);
    auto fm = mixed_map(f, trunc, ma, mb, o);
    auto c = cone(ma, mb, fm);

    RelativeCyclicResult r;
    r.hh = mixed_homology(c, n_max, o.field);
    r.hc = cyclic_from_mixed(c, n_max, o.field);
    r.hh_source = mixed_homology(mb, n_max, o.field);
    r.hh_target = mixed_homology(ma, n_max, o.field);

    // f_n : HH_n(B) -> HH_n(A); i_n : HH_n(A) -> HH_n(A,B); p_n : HH_n(A,B) -> HH_{n-1}(B)
    std::vector<std::size_t> rf, ri, rp;
    for (std::size_t n = 0; n <= n_max + 1; ++n) {
        rf.push_back(induced_rank(mb.d[n], ma.d[n + 1], fm[n], o.field));
        SparseMatrix incl(c.dims[n], ma.dims[n]);
        for (std::size_t i = 0; i < ma.dims[n]; ++i)
            incl.set_column(i, unit_vector(i));
        ri.push_back(induced_rank(ma.d[n], c.d[n + 1], incl, o.field));
        if (n == 0) {
            rp.push_back(0);
        } else {
            SparseMatrix proj(mb.dims[n - 1], c.dims[n]);
            for (std::size_t i = 0; i < mb.dims[n - 1]; ++i)
                proj.set_column(ma.dims[n] + i, unit_vector(i));
            rp.push_back(induced_rank(c.d[n], mb.d[n], proj, o.field));
        }
    }
    for (std::size_t n = 0; n <= n_max; ++n) {
        const std::string k = std::to_string(n);
        r.les.push_back({"HH_" + k + "(B)", n, r.hh_source[n], rp[n + 1], rf[n]});
        r.les.push_back({"HH_" + k + "(A)", n, r.hh_target[n], rf[n], ri[n]});
        r.les.push_back({"HH_" + k + "(A,B)", n, r.hh[n], ri[n], rp[n]});
    }
    return r;
}

} // namespace cyq
