#pragma once

// Weight-graded relative Chevalley-Eilenberg complexes of formal Hamiltonian
// vector fields on the plane, restricted to Sp(2,R)-invariant cochains.
//
// A degree-d cochain is a functional on Lambda^d(g/sp(2)), realized on the
// complement m = sum_{k != 2} S^k H (HAM) or sum_{k >= 3} S^k H (HAM0). Its
// coboundary is phi o boundary, with
//   boundary(X_1 ^ ... ^ X_{q+1}) = sum_{i<j} (-1)^{i+j} [X_i, X_j] ^ X_1 ^ ..^X_i^..^X_j^.. ^ X_{q+1},
// so that (delta phi)(X_1..X_{q+1}) = sum_{i<j} (-1)^{i+j} phi([X_i,X_j], ...).
// Brackets landing in S^2 H (the sp(2) part) or in constants are discarded.

#include "gfc/exact_linalg.hpp"
#include "gfc/invariants.hpp"

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace gfc {

enum class AlgebraVariant {
    Ham,   // slots k in {1, 3, 4, 5, ...}
    Ham0,  // slots k in {3, 4, 5, ...}; same as Sp-invariant cochains of ham^1
};

std::string to_string(AlgebraVariant v);
// Accepts "ham" and "ham0".
AlgebraVariant parse_variant(const std::string& s);

// All valid profiles of the given weight (and degree, if set), sorted by their
// expanded slot lists, e.g. (3^2 4 8) < (3^2 5 7) < (3 4^2 7).
std::vector<IrrepProfile> enumerate_profiles(AlgebraVariant variant, int weight,
                                             std::optional<int> degree = std::nullopt,
                                             bool include_sp2_slots = false);

struct SliceOptions {
    // Highest degree to build. Unset means every degree carrying a profile.
    std::optional<int> max_degree;
    // Largest admissible wedge-monomial space of a single profile.
    std::size_t budget_dim = 200000;
    // Ablation only: keep S^2 H slots in the chains and do not discard
    // brackets landing in S^2 H. This produces the absolute sl2-invariant
    // complex instead of the relative one.
    bool include_sp2_slots = false;
};

struct DegreeBlock {
    int degree = 0;
    std::vector<InvariantBasis> profiles;
    std::vector<std::size_t> offsets;  // start of each profile in the degree basis
    std::size_t dim = 0;
};

class WeightSlice {
public:
    AlgebraVariant variant() const { return variant_; }
    int weight() const { return weight_; }
    int max_degree() const { return static_cast<int>(blocks_.size()) - 1; }
    // True when no profile exists above max_degree, so the top coboundary is zero.
    bool complete() const { return complete_; }
    bool include_sp2_slots() const { return include_sp2_; }

    std::size_t dim(int degree) const;
    const DegreeBlock& block(int degree) const { return blocks_.at(static_cast<std::size_t>(degree)); }
    const std::vector<DegreeBlock>& blocks() const { return blocks_; }

    // delta_d : C^d -> C^{d+1}; rows index the degree-(d+1) basis.
    const RatMatrix& coboundary(int degree) const { return coboundaries_.at(static_cast<std::size_t>(degree)); }
    std::size_t coboundary_count() const { return coboundaries_.size(); }

    // Locates a weight-zero wedge monomial: (profile index, support position).
    std::optional<std::pair<std::size_t, std::size_t>> locate(int degree, const WedgeMonomial& w) const;

    // Profile owning the given degree-d basis index; writes the index inside
    // that profile's basis to *local_index when non-null.
    const InvariantBasis& profile_of(int degree, std::size_t basis_index, std::size_t* local_index = nullptr) const;

private:
    friend WeightSlice build_slice(AlgebraVariant, int, const SliceOptions&);

    AlgebraVariant variant_ = AlgebraVariant::Ham0;
    int weight_ = 0;
    bool complete_ = true;
    bool include_sp2_ = false;
    std::vector<DegreeBlock> blocks_;
    std::vector<RatMatrix> coboundaries_;
    std::vector<std::map<std::vector<int>, std::size_t>> profile_lookup_;
};

WeightSlice build_slice(AlgebraVariant variant, int weight, const SliceOptions& options = {});

// Boundary of a chain-level wedge monomial, with canonicalized terms.
std::vector<std::pair<WedgeMonomial, Rational>> chain_boundary(const WedgeMonomial& w, bool include_sp2_slots = false);

const RatMatrix& coboundary_matrix(const WeightSlice& slice, int degree);

// dim H^d for every degree where it is determined (all degrees of a complete
// slice; degrees below max_degree otherwise).
std::map<int, std::size_t> cohomology_dims(const WeightSlice& slice);
long euler_characteristic(const WeightSlice& slice);

// Recomputes delta on every weight-zero support monomial (not only pivots) and
// checks it matches the matrix expansion. Returns false on any mismatch.
bool verify_coboundary_expansion(const WeightSlice& slice, int degree);

// Per-degree dimensions from invariant dimensions alone (no coboundaries).
std::map<int, std::size_t> slice_dimensions(AlgebraVariant variant, int weight, std::size_t budget_dim = 200000);

struct Cochain {
    AlgebraVariant variant = AlgebraVariant::Ham0;
    int weight = 0;
    int degree = 0;
    RationalVector coordinates;
};

RationalVector apply_coboundary(const WeightSlice& slice, const Cochain& c);
bool is_cocycle(const WeightSlice& slice, const Cochain& c);
bool is_coboundary(const WeightSlice& slice, const Cochain& c);

// Evaluates a cochain given by its values on weight-zero wedge monomials
// (a callback) in the invariant basis of `degree`. Throws InconsistencyError
// if the functional is not in the span of the invariant basis.
RationalVector express_in_basis(const WeightSlice& slice, int degree,
                                const std::function<Rational(const WedgeMonomial&)>& values);

// Distinct profile symbols carrying a nonzero coordinate of the vector.
std::vector<std::string> support_profiles(const WeightSlice& slice, int degree, const RationalVector& coords);

}  // namespace gfc
