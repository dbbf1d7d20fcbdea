#pragma once

// Independent reference computations for the test suites. Everything here is
// deliberately naive: dense matrices, plain Gaussian elimination, explicit
// enumeration. None of it calls into the library's linear algebra.

#include "cyq/element.hpp"
#include "cyq/quiver.hpp"
#include "cyq/rational.hpp"

#include <functional>
#include <map>
#include <set>
#include <vector>

namespace oracle {

using cyq::Rational;
using Dense = std::vector<std::vector<Rational>>; // row-major

inline std::size_t dense_rank(Dense m)
{
    std::size_t r = 0;
    const std::size_t rows = m.size();
    const std::size_t cols = rows ? m[0].size() : 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && m[piv][c] == 0)
            ++piv;
        if (piv == rows)
            continue;
        std::swap(m[piv], m[r]);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0)
                continue;
            Rational f = m[i][c] / m[r][c];
            for (std::size_t j = c; j < cols; ++j)
                m[i][j] -= f * m[r][j];
        }
        ++r;
    }
    return r;
}

inline Dense zeros(std::size_t rows, std::size_t cols) { return Dense(rows, std::vector<Rational>(cols)); }

inline Dense mul(const Dense& a, const Dense& b)
{
    const std::size_t n = a.size(), k = b.size(), m = k ? b[0].size() : 0;
    Dense c = zeros(n, m);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t l = 0; l < k; ++l)
            if (a[i][l] != 0)
                for (std::size_t j = 0; j < m; ++j)
                    c[i][j] += a[i][l] * b[l][j];
    return c;
}

inline bool is_zero(const Dense& a)
{
    for (const auto& row : a)
        for (const auto& x : row)
            if (x != 0)
                return false;
    return true;
}

// All paths of a given length (all lazy paths for length 0).
inline std::vector<cyq::PathWord> paths_of_length(const cyq::GradedQuiver& q, std::size_t len)
{
    std::vector<cyq::PathWord> out;
    if (len == 0) {
        for (cyq::VertexIndex v = 0; v < q.vertex_count(); ++v)
            out.push_back(cyq::PathWord::lazy(q, v));
        return out;
    }
    std::vector<std::vector<cyq::ArrowIndex>> cur;
    for (cyq::ArrowIndex a = 0; a < q.arrow_count(); ++a)
        cur.push_back({a});
    for (std::size_t l = 1; l < len; ++l) {
        std::vector<std::vector<cyq::ArrowIndex>> next;
        for (const auto& w : cur)
            for (cyq::ArrowIndex a = 0; a < q.arrow_count(); ++a)
                if (q.arrow(a).source == q.arrow(w.front()).target) {
                    auto x = w;
                    x.insert(x.begin(), a);
                    next.push_back(std::move(x));
                }
        cur = std::move(next);
    }
    for (auto& w : cur)
        out.push_back(cyq::PathWord::from_arrows(q, w));
    return out;
}

// dim of (kQ/(R))_len for relations homogeneous in path length:
// #paths of length len minus rank of the span of all u r v of that length.
inline std::size_t quotient_dim_at_length(const cyq::QuiverPtr& qp, const std::vector<cyq::AlgebraElement>& rels,
                                          std::size_t len)
{
    const auto& q = *qp;
    const auto basis = paths_of_length(q, len);
    std::map<cyq::PathWord, std::size_t> index;
    for (std::size_t i = 0; i < basis.size(); ++i)
        index.emplace(basis[i], i);
    Dense rows;
    for (const auto& r : rels) {
        const std::size_t rl = r.terms().begin()->first.length();
        if (rl > len)
            continue;
        for (std::size_t ul = 0; ul + rl <= len; ++ul) {
            const std::size_t vl = len - rl - ul;
            for (const auto& u : paths_of_length(q, ul))
                for (const auto& v : paths_of_length(q, vl)) {
                    std::vector<Rational> row(basis.size());
                    bool any = false;
                    for (const auto& [w, c] : r.terms()) {
                        auto uw = cyq::concat(u, w);
                        if (!uw)
                            continue;
                        auto uwv = cyq::concat(*uw, v);
                        if (!uwv)
                            continue;
                        row[index.at(*uwv)] += c;
                        any = true;
                    }
                    if (any)
                        rows.push_back(std::move(row));
                }
        }
    }
    return basis.size() - dense_rank(rows);
}

// A finite-dimensional algebra given by dense structure constants:
// e_i e_j = sum_k mult[i][j][k] e_k, and unit coordinates.
struct Alg {
    std::size_t dim = 0;
    std::vector<std::vector<std::vector<Rational>>> mult;
    std::vector<Rational> unit;
};

inline std::size_t ipow(std::size_t b, std::size_t e)
{
    std::size_t r = 1;
    while (e--)
        r *= b;
    return r;
}

// Hochschild boundary b: A^{(n+1)} -> A^{(n)} (n >= 1), dense, via explicit
// index arithmetic on tensors a_0 (x) ... (x) a_n (a_0 most significant).
// With cyclic = false this is b', i.e. the last face is omitted.
inline Dense hochschild_boundary(const Alg& a, std::size_t n, bool cyclic = true)
{
    const std::size_t d = a.dim;
    const std::size_t src_len = n + 1, dst_len = n;
    Dense m = zeros(ipow(d, dst_len), ipow(d, src_len));
    std::vector<std::size_t> digits(src_len);
    for (std::size_t col = 0; col < ipow(d, src_len); ++col) {
        std::size_t x = col;
        for (std::size_t i = src_len; i-- > 0;) {
            digits[i] = x % d;
            x /= d;
        }
        auto encode = [&](const std::vector<std::size_t>& t) {
            std::size_t v = 0;
            for (auto e : t)
                v = v * d + e;
            return v;
        };
        for (std::size_t i = 0; i < n; ++i) {
            const Rational sign = (i % 2 == 0) ? 1 : -1;
            for (std::size_t k = 0; k < d; ++k) {
                const Rational& c = a.mult[digits[i]][digits[i + 1]][k];
                if (c == 0)
                    continue;
                std::vector<std::size_t> t;
                for (std::size_t j = 0; j < i; ++j)
                    t.push_back(digits[j]);
                t.push_back(k);
                for (std::size_t j = i + 2; j < src_len; ++j)
                    t.push_back(digits[j]);
                m[encode(t)][col] += sign * c;
            }
        }
        if (cyclic) {
            const Rational sign = (n % 2 == 0) ? 1 : -1;
            for (std::size_t k = 0; k < d; ++k) {
                const Rational& c = a.mult[digits[n]][digits[0]][k];
                if (c == 0)
                    continue;
                std::vector<std::size_t> t{k};
                for (std::size_t j = 1; j < n; ++j)
                    t.push_back(digits[j]);
                m[encode(t)][col] += sign * c;
            }
        }
    }
    return m;
}

// HH_0 .. HH_nmax by brute-force rank-nullity on the dense Hochschild complex.
inline std::vector<std::size_t> hochschild_dims(const Alg& a, std::size_t nmax)
{
    std::vector<std::size_t> ranks(nmax + 2, 0); // ranks[n] = rank of b: C_n -> C_{n-1}
    for (std::size_t n = 1; n <= nmax + 1; ++n)
        ranks[n] = dense_rank(hochschild_boundary(a, n));
    std::vector<std::size_t> out;
    for (std::size_t n = 0; n <= nmax; ++n)
        out.push_back(ipow(a.dim, n + 1) - ranks[n] - ranks[n + 1]);
    return out;
}

inline Alg ground_field()
{
    Alg a;
    a.dim = 1;
    a.mult = {{{Rational(1)}}};
    a.unit = {1};
    return a;
}

// k[x]/(x^2) on the basis 1, x.
inline Alg dual_numbers()
{
    Alg a;
    a.dim = 2;
    a.mult.assign(2, std::vector<std::vector<Rational>>(2, std::vector<Rational>(2)));
    a.mult[0][0][0] = 1;
    a.mult[0][1][1] = 1;
    a.mult[1][0][1] = 1;
    a.unit = {1, 0};
    return a;
}

} // namespace oracle
