#pragma once

// Distinguished cochains (omega, gamma_1, p_1, eta, GKF), the cochain map
// "wedge with omega" from the ham^0 complex into the ham complex, and the
// cohomology-level checks around it.
//
// Named classes carry no canonical scalar; every class is stored with unit
// leading coefficient in the echelon order of its degree basis, and equality
// claims are "up to a nonzero rational scalar modulo coboundaries".

#include "gfc/complex.hpp"

#include <optional>
#include <string>
#include <vector>

namespace gfc {

// delta^i_{j_1..j_k}(X) = (-1)^k d^k f_i / dx_{j_1}..dx_{j_k} (0) for
// X = f_1 d/dx + f_2 d/dy. Indices are 1 (x) and 2 (y). For the Hamiltonian
// field of H, f_1 = -dH/dy and f_2 = dH/dx, so delta^i_J pairs with S^{|J|+1} H.
struct TautologicalForm {
    int upper = 1;
    std::vector<int> lower;  // kept sorted; the form is symmetric in these

    TautologicalForm() = default;
    TautologicalForm(int i, std::vector<int> js);

    int slot_degree() const { return static_cast<int>(lower.size()) + 1; }
    Rational evaluate(const Generator& g) const;
    std::string to_string() const;
};

// Linear combination of wedge products of tautological 1-forms.
struct FormExpression {
    std::vector<std::pair<Rational, std::vector<TautologicalForm>>> terms;

    static FormExpression single(const TautologicalForm& a);
    FormExpression& operator+=(const FormExpression& o);
    friend FormExpression operator*(const Rational& c, FormExpression e);
    // Value on a chain-level wedge monomial: sum of coef * det[alpha_r(g_s)].
    Rational evaluate(const WedgeMonomial& w) const;
};

FormExpression wedge(const FormExpression& a, const FormExpression& b);

// omega = delta^1 ^ delta^2.
FormExpression omega_form();
// Curvature Omega^i_j = sum_k delta^k ^ delta^i_{jk}.
FormExpression curvature_form(int i, int j);
// tr(Omega^2) = sum_{i,j} Omega^i_j ^ Omega^j_i, proportional to p_1.
FormExpression p1_form();
// -delta^1_{22} ^ delta^2_{11} - 3 delta^1_{11} ^ delta^2_{22}.
FormExpression gamma1_form();

struct NamedClass {
    std::string name;
    Cochain cochain;
    std::string normalization;
};

// The slice constructors below build exactly the slices they need.
NamedClass build_omega();
NamedClass build_gamma1();
NamedClass build_p1();

// Lambda_d : C^d(ham0)_w -> C^{d+2}(ham)_{w-2}, for every degree of the
// source. Requires target.weight() == source.weight() - 2.
std::vector<RatMatrix> wedge_omega_map(const WeightSlice& source, const WeightSlice& target);

// delta o Lambda_d == Lambda_{d+1} o delta wherever both sides are built.
bool chain_map_holds(const WeightSlice& source, const WeightSlice& target, const std::vector<RatMatrix>& maps);
bool injective_on_cochains(const WeightSlice& source, const std::vector<RatMatrix>& maps);

// Cocycles spanning H^d: kernel basis vectors of delta_d, greedily kept when
// independent of the image of delta_{d-1} and of the ones kept before.
std::vector<RationalVector> cohomology_representatives(const WeightSlice& slice, int degree);

struct IsoReport {
    int source_weight = 0;
    int degree = 0;
    std::size_t source_dim = 0;  // dim H^d(ham0)_w
    std::size_t target_dim = 0;  // dim H^{d+2}(ham)_{w-2}
    std::size_t image_rank = 0;  // rank of the induced map on cohomology
    bool images_closed = false;
    bool iso = false;
};

// Checks that wedge with omega induces H^d(ham0)_w -> H^{d+2}(ham)_{w-2}
// isomorphically at every degree with nonzero source cohomology.
std::vector<IsoReport> verify_iso_in_cohomology(int source_weight, const SliceOptions& options = {});

struct EtaResult {
    NamedClass eta;
    NamedClass gkf;
    std::vector<std::string> support_profiles;
    bool support_restricted = false;  // representative found on the preferred profiles
    std::optional<std::string> obstruction;
    bool closed = false;
    bool non_exact = false;
};

// Profiles a representative of eta is preferably supported on.
std::vector<IrrepProfile> eta_preferred_profiles();

EtaResult extract_eta(const WeightSlice& ham0_w10, const WeightSlice& ham_w8);
EtaResult extract_eta();

struct FactorizationReport {
    EtaResult eta;
    bool chain_map = false;
    bool injective = false;
    bool iso = false;
    bool p1_line = false;  // gamma_1 ^ omega spans the p_1 line in H^4_0
    bool all_passed() const;
};

FactorizationReport factorize(const SliceOptions& options = {});

// gamma_1 ^ omega is a nonzero multiple of p_1 modulo coboundaries.
bool gamma1_omega_spans_p1();

}  // namespace gfc
