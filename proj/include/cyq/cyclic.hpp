#pragma once

#include "cyq/homology.hpp"
#include "cyq/linalg.hpp"

#include <string>
#include <vector>

namespace cyq {

// Finite-dimensional unital algebra given by structure constants on a basis.
class FiniteDimAlgebra {
public:
    FiniteDimAlgebra() = default;

    // product[i][j] = e_i e_j. Throws ValidationError unless the product is
    // associative and `idempotents` are orthogonal idempotents summing to a
    // two-sided unit.
    static FiniteDimAlgebra build(std::vector<std::string> labels, std::vector<std::vector<SparseVector>> product,
                                  std::vector<SparseVector> idempotents);

    // Basis of normal words. Requires a stable, finite rewriting certificate
    // at max_len; throws ValidationError("uncertified") otherwise.
    static FiniteDimAlgebra from_presentation(const Presentation& p, std::size_t max_len = 24);

    static FiniteDimAlgebra ground_field();
    static FiniteDimAlgebra zero();
    static FiniteDimAlgebra matrices(std::size_t n);
    static FiniteDimAlgebra product(const FiniteDimAlgebra& a, const FiniteDimAlgebra& b);

    std::size_t dim() const noexcept { return labels_.size(); }
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    const SparseVector& mul(std::size_t i, std::size_t j) const { return product_.at(i).at(j); }
    SparseVector multiply(const SparseVector& x, const SparseVector& y) const;
    const std::vector<SparseVector>& idempotents() const noexcept { return idempotents_; }
    SparseVector unit() const;

private:
    std::vector<std::string> labels_;
    std::vector<std::vector<SparseVector>> product_;
    std::vector<SparseVector> idempotents_;
};

// Multiplicative linear map source -> target; the unit need not be preserved.
class AlgebraMorphism {
public:
    // matrix is target.dim() x source.dim(). Throws ValidationError if not multiplicative.
    static AlgebraMorphism build(FiniteDimAlgebra source, FiniteDimAlgebra target, SparseMatrix matrix);
    static AlgebraMorphism identity(const FiniteDimAlgebra& a);
    static AlgebraMorphism from_zero(const FiniteDimAlgebra& a);

    const FiniteDimAlgebra& source() const noexcept { return source_; }
    const FiniteDimAlgebra& target() const noexcept { return target_; }
    const SparseMatrix& matrix() const noexcept { return matrix_; }

private:
    FiniteDimAlgebra source_, target_;
    SparseMatrix matrix_;
};

// kF -> kQ/I for the frozen part F of the presentation's quiver: frozen
// vertices, frozen arrows, and the relations supported on frozen arrows.
AlgebraMorphism frozen_inclusion(const Presentation& p, std::size_t max_len = 24);

struct CyclicOptions {
    std::size_t basis_cap = 250000; // largest tensor power assembled
    Field field = Field::rational();
};

// Matrices on A^{(x) len}, basis in lexicographic order of basis indices.
// b and b' map A^{(x) len} -> A^{(x) len-1} (len >= 2); t is the signed
// cyclic shift a_0..a_n -> (-1)^n a_n a_0..a_{n-1}; N = 1 + t + ... + t^n.
SparseMatrix hochschild_b(const FiniteDimAlgebra& a, std::size_t len, const CyclicOptions& o = {});
SparseMatrix bar_b_prime(const FiniteDimAlgebra& a, std::size_t len, const CyclicOptions& o = {});
SparseMatrix cyclic_t(const FiniteDimAlgebra& a, std::size_t len, const CyclicOptions& o = {});
SparseMatrix cyclic_norm(const FiniteDimAlgebra& a, std::size_t len, const CyclicOptions& o = {});

// Mixed complex (M, d, d') truncated at degree `trunc`:
// M_0 = A, M_n = A^{(x) n+1} + A^{(x) n}, d(x, y) = (b x + (1-t) y, -b' y),
// d'(x, y) = (0, N x).
struct MixedComplexData {
    std::size_t trunc = 0;
    std::vector<std::size_t> dims;  // dims[n], n = 0..trunc
    std::vector<SparseMatrix> d;    // d[n] : M_n -> M_{n-1}; d[0] is 0 x dims[0]
    std::vector<SparseMatrix> dual; // dual[n] : M_n -> M_{n+1}, n < trunc

    // d^2 = 0, d'^2 = 0 and d d' + d' d = 0 wherever all maps are defined.
    bool identities_hold() const;
};

MixedComplexData mixed_complex(const FiniteDimAlgebra& a, std::size_t trunc, const CyclicOptions& o = {});

// Homology of (M, d) in degrees 0..n_max (needs trunc > n_max).
std::vector<std::size_t> mixed_homology(const MixedComplexData& m, std::size_t n_max, const Field& f);

std::vector<std::size_t> hochschild(const FiniteDimAlgebra& a, std::size_t n_max, const CyclicOptions& o = {});
std::size_t commutator_quotient(const FiniteDimAlgebra& a, const Field& f = Field::rational());

// HC_0..HC_{n_max} from the Connes-Quillen bicomplex (columns b, -b', b, ...;
// horizontal maps 1-t and N).
std::vector<std::size_t> cyclic(const FiniteDimAlgebra& a, std::size_t n_max, const CyclicOptions& o = {});
// HC via the total complex sum_j M_{n-2j} of the mixed complex (needs trunc > n_max).
std::vector<std::size_t> cyclic_from_mixed(const MixedComplexData& m, std::size_t n_max, const Field& f);

struct NegativeCyclicResult {
    std::size_t columns = 0;
    std::vector<std::size_t> dims;      // HN_0..HN_{n_max} at `columns`
    std::vector<std::size_t> next_dims; // same at columns + 1
    bool stabilized = false;            // dims == next_dims
    // Rank of H_n(columns + 1) -> H_n(columns): classes of the truncation
    // that lift one column further. The top column of a bare truncation
    // carries spurious HH classes; these do not survive.
    std::vector<std::size_t> surviving;
};

// Product total complex prod_{j < columns} M_{n+2j}.
NegativeCyclicResult negative_cyclic(const FiniteDimAlgebra& a, std::size_t n_max, std::size_t columns,
                                     const CyclicOptions& o = {});
NegativeCyclicResult negative_cyclic_from_mixed(const MixedComplexData& m, std::size_t n_max, std::size_t columns,
                                                const Field& f);

// Ranks of the canonical maps HN_n -> HH_n -> HC_n and of the composite.
struct CanonicalMaps {
    std::size_t columns = 0;
    std::vector<std::size_t> hn_to_hh, hh_to_hc, hn_to_hc;
};

CanonicalMaps canonical_maps(const FiniteDimAlgebra& a, std::size_t n_max, std::size_t columns,
                             const CyclicOptions& o = {});

// One spot of the long exact sequence with the ranks of the incoming and
// outgoing maps; exact iff dim == rank_in + rank_out.
struct LesSpot {
    std::string group; // "HH_n(B)", "HH_n(A)" or "HH_n(A,B)"
    std::size_t n = 0;
    std::size_t dim = 0;
    std::size_t rank_in = 0;
    std::size_t rank_out = 0;
    bool exact() const noexcept { return dim == rank_in + rank_out; }
};

struct RelativeCyclicResult {
    std::vector<std::size_t> hh, hc;               // relative groups
    std::vector<std::size_t> hh_source, hh_target; // HH(B), HH(A)
    std::vector<LesSpot> les;                      // degrees 0..n_max
    bool les_exact() const;
};

// Relative groups of f : B -> A from the cone of M(f) : MB -> MA.
RelativeCyclicResult relative_cyclic(const AlgebraMorphism& f, std::size_t n_max, const CyclicOptions& o = {});

// Rank of the map induced on H_n by a chain map phi_n : X_n -> Y_n, given
// dx : X_n -> X_{n-1} and dy : Y_{n+1} -> Y_n.
std::size_t induced_rank(const SparseMatrix& dx, const SparseMatrix& dy, const SparseMatrix& phi, const Field& f);

} // namespace cyq
