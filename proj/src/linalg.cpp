#include "cyq/linalg.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace cyq {

void normalize(SparseVector& v)
{
    std::sort(v.begin(), v.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    std::size_t out = 0;
    for (std::size_t i = 0; i < v.size();) {
        std::size_t idx = v[i].first;
        Rational sum = v[i].second;
        std::size_t j = i + 1;
        for (; j < v.size() && v[j].first == idx; ++j)
            sum += v[j].second;
        if (sum != 0)
            v[out++] = {idx, sum};
        i = j;
    }
    v.resize(out);
}

SparseMatrix SparseMatrix::identity(std::size_t n)
{
    SparseMatrix m(n, n);
    for (std::size_t j = 0; j < n; ++j)
        m.columns_[j] = {{j, Rational(1)}};
    return m;
}

std::size_t SparseMatrix::nonzeros() const
{
    std::size_t n = 0;
    for (const auto& c : columns_)
        n += c.size();
    return n;
}

void SparseMatrix::set_column(std::size_t j, SparseVector entries)
{
    normalize(entries);
    if (!entries.empty() && entries.back().first >= rows_)
        throw std::out_of_range("SparseMatrix::set_column row index");
    columns_.at(j) = std::move(entries);
}

Rational SparseMatrix::at(std::size_t i, std::size_t j) const
{
    const auto& col = columns_.at(j);
    auto it = std::lower_bound(col.begin(), col.end(), i, [](const auto& e, std::size_t k) { return e.first < k; });
    return (it != col.end() && it->first == i) ? it->second : Rational(0);
}

SparseVector SparseMatrix::apply(const SparseVector& x) const
{
    SparseVector out;
    for (const auto& [j, c] : x)
        for (const auto& [i, a] : columns_.at(j))
            out.emplace_back(i, a * c);
    normalize(out);
    return out;
}

SparseMatrix SparseMatrix::transpose() const
{
    SparseMatrix t(cols(), rows_);
    for (std::size_t j = 0; j < columns_.size(); ++j)
        for (const auto& [i, a] : columns_[j])
            t.columns_[i].emplace_back(j, a);
    return t;
}

SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b)
{
    if (a.cols() != b.rows())
        throw std::invalid_argument("matrix product dimension mismatch");
    SparseMatrix m(a.rows(), b.cols());
    for (std::size_t j = 0; j < b.cols(); ++j)
        m.columns_[j] = a.apply(b.columns_[j]);
    return m;
}

SparseMatrix operator+(const SparseMatrix& a, const SparseMatrix& b)
{
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("matrix sum dimension mismatch");
    SparseMatrix m = a;
    m.add_block(0, 0, b);
    return m;
}

SparseMatrix operator-(const SparseMatrix& a, const SparseMatrix& b)
{
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("matrix difference dimension mismatch");
    SparseMatrix m = a;
    m.add_block(0, 0, b, Rational(-1));
    return m;
}

SparseMatrix operator*(const Rational& c, const SparseMatrix& a)
{
    SparseMatrix m(a.rows(), a.cols());
    m.add_block(0, 0, a, c);
    return m;
}

void SparseMatrix::add_block(std::size_t row_offset, std::size_t col_offset, const SparseMatrix& block,
                             const Rational& scale)
{
    if (row_offset + block.rows() > rows_ || col_offset + block.cols() > cols())
        throw std::out_of_range("SparseMatrix::add_block");
    for (std::size_t j = 0; j < block.cols(); ++j) {
        if (block.columns_[j].empty())
            continue;
        auto& col = columns_[col_offset + j];
        for (const auto& [i, a] : block.columns_[j])
            col.emplace_back(row_offset + i, a * scale);
        normalize(col);
    }
}

namespace {

// Echelon reduction keyed by leading (smallest) index. A vector whose lead
// index reaches `stop` is reported as reduced-to-zero in the prefix [0, stop).
template <class Policy>
class Eliminator {
public:
    using Vec = typename Policy::Vec;

    explicit Eliminator(Policy policy) : policy_(std::move(policy)) {}

    // Returns true if v became a new pivot; otherwise v holds the residue.
    bool insert(Vec& v, std::size_t stop)
    {
        while (!v.empty() && v.front().first < stop) {
            auto it = pivots_.find(v.front().first);
            if (it == pivots_.end()) {
                policy_.tidy(v);
                pivots_.emplace(v.front().first, v);
                return true;
            }
            policy_.eliminate(v, it->second);
        }
        return false;
    }

private:
    Policy policy_;
    std::unordered_map<std::size_t, Vec> pivots_;
};

struct IntegerPolicy {
    using Vec = std::vector<std::pair<std::size_t, Integer>>;

    static Vec from(const SparseVector& v)
    {
        Integer l = 1;
        for (const auto& [i, q] : v)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
        Vec out;
        out.reserve(v.size());
        for (const auto& [i, q] : v)
            out.emplace_back(i, Integer(q.get_num() * (l / q.get_den())));
        return out;
    }

    void tidy(Vec& v) const
    {
        Integer g = 0;
        for (const auto& [i, x] : v) {
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
            if (g == 1)
                return;
        }
        if (g > 1)
            for (auto& [i, x] : v)
                mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    }

    // v <- a v - b p, with a = lead(p), b = lead(v), then remove content.
    void eliminate(Vec& v, const Vec& p)
    {
        Integer a = p.front().second;
        Integer b = v.front().second;
        Integer g;
        mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        mpz_divexact(a.get_mpz_t(), a.get_mpz_t(), g.get_mpz_t());
        mpz_divexact(b.get_mpz_t(), b.get_mpz_t(), g.get_mpz_t());
        scratch_.clear();
        std::size_t i = 0, j = 0;
        while (i < v.size() || j < p.size()) {
            if (j == p.size() || (i < v.size() && v[i].first < p[j].first)) {
                scratch_.emplace_back(v[i].first, a * v[i].second);
                ++i;
            } else if (i == v.size() || p[j].first < v[i].first) {
                scratch_.emplace_back(p[j].first, -b * p[j].second);
                ++j;
            } else {
                Integer x = a * v[i].second - b * p[j].second;
                if (x != 0)
                    scratch_.emplace_back(v[i].first, std::move(x));
                ++i;
                ++j;
            }
        }
        v.swap(scratch_);
        tidy(v);
    }

    Vec scratch_;
};

struct ModPolicy {
    using Vec = std::vector<std::pair<std::size_t, std::uint64_t>>;
    std::uint64_t p;

    std::uint64_t mul(std::uint64_t x, std::uint64_t y) const
    {
        return static_cast<std::uint64_t>((static_cast<unsigned __int128>(x) * y) % p);
    }
    std::uint64_t inv(std::uint64_t x) const
    {
        std::uint64_t r = 1, e = p - 2;
        while (e) {
            if (e & 1)
                r = mul(r, x);
            x = mul(x, x);
            e >>= 1;
        }
        return r;
    }

    Vec from(const SparseVector& v, const Field& f) const
    {
        Vec out;
        for (const auto& [i, q] : v)
            if (auto r = f.reduce(q))
                out.emplace_back(i, r);
        return out;
    }

    // Make the lead 1.
    void tidy(Vec& v) const
    {
        std::uint64_t s = inv(v.front().second);
        for (auto& [i, x] : v)
            x = mul(x, s);
    }

    void eliminate(Vec& v, const Vec& piv)
    {
        // piv is monic
        std::uint64_t f = v.front().second;
        scratch_.clear();
        std::size_t i = 0, j = 0;
        while (i < v.size() || j < piv.size()) {
            if (j == piv.size() || (i < v.size() && v[i].first < piv[j].first)) {
                scratch_.push_back(v[i++]);
            } else if (i == v.size() || piv[j].first < v[i].first) {
                scratch_.emplace_back(piv[j].first, (p - mul(f, piv[j].second)) % p);
                ++j;
            } else {
                std::uint64_t x = (v[i].second + p - mul(f, piv[j].second)) % p;
                if (x)
                    scratch_.emplace_back(v[i].first, x);
                ++i;
                ++j;
            }
        }
        v.swap(scratch_);
    }

    Vec scratch_;
};

std::size_t vectors_dim_bound(const std::vector<SparseVector>& vs)
{
    std::size_t d = 0;
    for (const auto& v : vs)
        if (!v.empty())
            d = std::max(d, v.back().first + 1);
    return d;
}

} // namespace

std::size_t rank(const std::vector<SparseVector>& vectors, const Field& field)
{
    const std::size_t stop = vectors_dim_bound(vectors);
    std::size_t r = 0;
    if (field.is_rational()) {
        Eliminator<IntegerPolicy> e{IntegerPolicy{}};
        for (const auto& v : vectors) {
            auto iv = IntegerPolicy::from(v);
            r += e.insert(iv, stop) ? 1 : 0;
        }
    } else {
        ModPolicy pol{field.characteristic(), {}};
        Eliminator<ModPolicy> e{pol};
        for (const auto& v : vectors) {
            auto mv = pol.from(v, field);
            r += e.insert(mv, stop) ? 1 : 0;
        }
    }
    return r;
}

std::size_t rank(const SparseMatrix& m, const Field& field)
{
    std::vector<SparseVector> cols;
    cols.reserve(m.cols());
    for (std::size_t j = 0; j < m.cols(); ++j)
        if (!m.column(j).empty())
            cols.push_back(m.column(j));
    return rank(cols, field);
}

std::vector<SparseVector> kernel_basis(const SparseMatrix& m, const Field& field)
{
    // Augment column j with the unit vector at m.rows() + j; the tracked part of
    // every column that reduces to zero is a kernel vector.
    const std::size_t stop = m.rows();
    std::vector<SparseVector> kernel;
    if (field.is_rational()) {
        Eliminator<IntegerPolicy> e{IntegerPolicy{}};
        for (std::size_t j = 0; j < m.cols(); ++j) {
            SparseVector aug = m.column(j);
            aug.emplace_back(stop + j, Rational(1));
            auto iv = IntegerPolicy::from(aug);
            if (!e.insert(iv, stop)) {
                IntegerPolicy{}.tidy(iv);
                SparseVector k;
                for (auto& [i, x] : iv)
                    k.emplace_back(i - stop, Rational(x));
                kernel.push_back(std::move(k));
            }
        }
    } else {
        ModPolicy pol{field.characteristic(), {}};
        Eliminator<ModPolicy> e{pol};
        for (std::size_t j = 0; j < m.cols(); ++j) {
            SparseVector aug = m.column(j);
            aug.emplace_back(stop + j, Rational(1));
            auto mv = pol.from(aug, field);
            if (!e.insert(mv, stop)) {
                SparseVector k;
                for (auto& [i, x] : mv)
                    k.emplace_back(i - stop, Rational(static_cast<unsigned long>(x)));
                kernel.push_back(std::move(k));
            }
        }
    }
    return kernel;
}

} // namespace cyq
