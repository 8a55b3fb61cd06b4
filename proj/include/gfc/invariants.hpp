#pragma once

// Sp(2,R)-invariant cochains on products of exterior powers of symmetric
// powers S^k H, H = R^2.
//
// A cochain of profile {k: m_k} is a functional on the chain space
//   Lambda^{m_k1} S^k1 H (x) Lambda^{m_k2} S^k2 H (x) ...
// written in the basis dual to wedge monomials. A wedge monomial is a strictly
// increasing list of generators, ordered by (k, index) where index is the
// position of x^{k-i} y^i in S^k H. Group blocks are ordered by ascending k,
// so concatenation order is also the canonical sign convention: moving a
// generator past another in the wedge flips the sign.
//
// sl2 acts on chains as a derivation (Leibniz rule, each generator replaced in
// place, then re-sorted with the Koszul sign). A functional phi is invariant
// iff phi(X.c) = 0 for X in {e, f, h}. Since h is diagonal, invariant
// functionals live on h-weight-zero wedge monomials, and the conditions
// phi(e.c) = 0 for weight -2 chains c and phi(f.c) = 0 for weight +2 chains c
// cut out the invariants exactly.

#include "gfc/exact_linalg.hpp"
#include "gfc/rational.hpp"

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace gfc {

// Basis monomial x^{k-index} y^{index} of S^k H.
struct Generator {
    int k = 0;
    int index = 0;

    int sl2_weight() const { return k - 2 * index; }
    auto operator<=>(const Generator&) const = default;
};

using WedgeMonomial = std::vector<Generator>;

int sl2_weight(const WedgeMonomial& w);
std::string to_string(const WedgeMonomial& w);

// Sorts a list of generators into canonical order. Returns the sign of the
// permutation, or 0 if some generator repeats (the wedge vanishes).
int canonicalize(WedgeMonomial& w);

class IrrepProfile {
public:
    IrrepProfile() = default;
    explicit IrrepProfile(std::map<int, int> multiplicities);

    // Parses "3^2 4 6" (also accepts "()" / "" for the empty profile).
    static IrrepProfile parse(const std::string& symbol);
    static IrrepProfile of(const WedgeMonomial& w);

    const std::map<int, int>& multiplicities() const { return mult_; }
    int multiplicity(int k) const;
    int degree() const;
    int weight() const;
    int polynomial_degree() const;
    // m_k <= dim S^k H = k + 1 for every k.
    bool valid() const;
    // Expanded slot list, e.g. {3,3,5,5}.
    std::vector<int> slots() const;
    std::string symbol() const;

    auto operator<=>(const IrrepProfile& o) const { return slots() <=> o.slots(); }
    bool operator==(const IrrepProfile& o) const { return mult_ == o.mult_; }

private:
    std::map<int, int> mult_;
};

std::size_t wedge_basis_size(const IrrepProfile& p);
// All wedge monomials of the profile in canonical (lexicographic) order.
// Throws BudgetExceeded if the space is larger than `budget`.
std::vector<WedgeMonomial> wedge_basis(const IrrepProfile& p, std::size_t budget = 200000);

struct InvariantBasis {
    IrrepProfile profile;
    // h-weight-zero wedge monomials, sorted; coordinates refer to these.
    std::vector<WedgeMonomial> support;
    // Reduced echelon basis: vectors[i][pivots[i]] == 1 and vectors[j][pivots[i]] == 0 for j != i.
    std::vector<RationalVector> vectors;
    std::vector<std::size_t> pivots;

    std::size_t dim() const { return vectors.size(); }
    std::optional<std::size_t> position(const WedgeMonomial& w) const;
};

InvariantBasis invariant_basis(const IrrepProfile& p, std::size_t budget = 200000);
std::size_t invariant_dim(const IrrepProfile& p, std::size_t budget = 200000);

// Multiplicity of the trivial representation in the product of the
// exterior-power characters, computed from q-characters alone.
std::size_t character_dim_oracle(const IrrepProfile& p);

// Applies e (raising) or f (lowering) to a wedge monomial, returning the
// canonical terms with integer coefficients.
std::vector<std::pair<WedgeMonomial, std::int64_t>> apply_raising(const WedgeMonomial& w);
std::vector<std::pair<WedgeMonomial, std::int64_t>> apply_lowering(const WedgeMonomial& w);

// Invariant symplectic pairing on S^k H induced by omega(x, y) = 1:
// <x^a y^b, x^b y^a> = (-1)^b a! b! / k!, zero otherwise.
Rational symplectic_pairing(const Generator& u, const Generator& v);
// det[<u_i, v_j>] for equal-length wedges.
Rational wedge_pairing(const WedgeMonomial& u, const WedgeMonomial& v);
// The functional c -> <T, c> restricted to `support`, for a chain-level tensor
// T given as a linear combination of wedge monomials.
RationalVector cochain_from_tensor(const std::vector<std::pair<Rational, WedgeMonomial>>& tensor,
                                   const std::vector<WedgeMonomial>& support);

}  // namespace gfc
