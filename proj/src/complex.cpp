#include "gfc/complex.hpp"

#include "gfc/errors.hpp"
#include "gfc/parallel.hpp"
#include "gfc/poisson.hpp"

#include <algorithm>
#include <stdexcept>

namespace gfc {
namespace {

std::vector<int> slot_signature(const WedgeMonomial& w) {
    std::vector<int> ks;
    ks.reserve(w.size());
    for (const auto& g : w) ks.push_back(g.k);
    return ks;
}

void collect_upper_slots(int k, int k_max, int remaining, std::map<int, int>& current, std::vector<IrrepProfile>& out) {
    if (remaining == 0) {
        out.emplace_back(current);
        return;
    }
    if (k > k_max) return;
    const int step = k - 2;
    const int max_m = std::min(k + 1, remaining / step);
    for (int m = max_m; m >= 0; --m) {
        if (m > 0)
            current[k] = m;
        else
            current.erase(k);
        collect_upper_slots(k + 1, k_max, remaining - m * step, current, out);
    }
    current.erase(k);
}

}  // namespace

std::string to_string(AlgebraVariant v) { return v == AlgebraVariant::Ham ? "ham" : "ham0"; }

AlgebraVariant parse_variant(const std::string& s) {
    if (s == "ham") return AlgebraVariant::Ham;
    if (s == "ham0") return AlgebraVariant::Ham0;
    throw std::invalid_argument("unknown algebra variant: " + s + " (expected ham or ham0)");
}

std::vector<IrrepProfile> enumerate_profiles(AlgebraVariant variant, int weight, std::optional<int> degree,
                                             bool include_sp2_slots) {
    std::vector<IrrepProfile> out;
    const int max_m1 = variant == AlgebraVariant::Ham ? 2 : 0;
    const int max_m2 = include_sp2_slots ? 3 : 0;
    for (int m1 = 0; m1 <= max_m1; ++m1) {
        const int upper = weight + m1;  // weight carried by slots k >= 3
        if (upper < 0) continue;
        for (int m2 = 0; m2 <= max_m2; ++m2) {
            std::map<int, int> current;
            if (m1) current[1] = m1;
            if (m2) current[2] = m2;
            collect_upper_slots(3, upper + 2, upper, current, out);
        }
    }
    if (degree) std::erase_if(out, [&](const IrrepProfile& p) { return p.degree() != *degree; });
    std::sort(out.begin(), out.end());
    return out;
}

std::size_t WeightSlice::dim(int degree) const {
    if (degree < 0 || degree > max_degree()) return 0;
    return blocks_[static_cast<std::size_t>(degree)].dim;
}

std::optional<std::pair<std::size_t, std::size_t>> WeightSlice::locate(int degree, const WedgeMonomial& w) const {
    if (degree < 0 || degree > max_degree()) return std::nullopt;
    const auto& lookup = profile_lookup_[static_cast<std::size_t>(degree)];
    auto it = lookup.find(slot_signature(w));
    if (it == lookup.end()) return std::nullopt;
    auto pos = blocks_[static_cast<std::size_t>(degree)].profiles[it->second].position(w);
    if (!pos) return std::nullopt;
    return std::make_pair(it->second, *pos);
}

const InvariantBasis& WeightSlice::profile_of(int degree, std::size_t basis_index, std::size_t* local_index) const {
    const auto& b = block(degree);
    for (std::size_t p = 0; p < b.profiles.size(); ++p) {
        if (basis_index < b.offsets[p] + b.profiles[p].dim()) {
            if (local_index) *local_index = basis_index - b.offsets[p];
            return b.profiles[p];
        }
    }
    throw std::out_of_range("WeightSlice::profile_of: basis index out of range");
}

std::vector<std::pair<WedgeMonomial, Rational>> chain_boundary(const WedgeMonomial& w, bool include_sp2_slots) {
    std::map<WedgeMonomial, Rational> acc;
    const std::size_t q = w.size();
    for (std::size_t i = 0; i < q; ++i) {
        for (std::size_t j = i + 1; j < q; ++j) {
            const int target = w[i].k + w[j].k - 2;
            if (target == 0) continue;                        // constants are zero in ham
            if (target == 2 && !include_sp2_slots) continue;  // projection away from sp(2)
            const auto& table = plane_bracket_table(w[i].k, w[j].k);
            const auto& bracket = table.entry(static_cast<std::size_t>(w[i].index), static_cast<std::size_t>(w[j].index));
            if (bracket.empty()) continue;
            const int position_sign = ((i + j) % 2 == 0) ? 1 : -1;
            for (const auto& [u, c] : bracket) {
                WedgeMonomial term;
                term.reserve(q - 1);
                term.push_back(Generator{target, static_cast<int>(u)});
                for (std::size_t r = 0; r < q; ++r)
                    if (r != i && r != j) term.push_back(w[r]);
                const int sign = canonicalize(term);
                if (sign == 0) continue;
                acc[std::move(term)] += Rational(static_cast<long>(position_sign * sign * c));
            }
        }
    }
    std::vector<std::pair<WedgeMonomial, Rational>> out;
    for (auto& [term, c] : acc)
        if (c != 0) out.emplace_back(term, c);
    return out;
}

WeightSlice build_slice(AlgebraVariant variant, int weight, const SliceOptions& options) {
    WeightSlice slice;
    slice.variant_ = variant;
    slice.weight_ = weight;
    slice.include_sp2_ = options.include_sp2_slots;

    const auto profiles = enumerate_profiles(variant, weight, std::nullopt, options.include_sp2_slots);
    int top = 0;
    for (const auto& p : profiles) top = std::max(top, p.degree());
    const int max_degree = options.max_degree.value_or(top);
    if (max_degree < 0) throw std::invalid_argument("build_slice: negative max_degree");
    slice.complete_ = top <= max_degree;

    std::vector<IrrepProfile> kept;
    for (const auto& p : profiles)
        if (p.degree() <= max_degree) kept.push_back(p);
    for (const auto& p : kept)
        if (wedge_basis_size(p) > options.budget_dim)
            throw BudgetExceeded("slice " + to_string(variant) + " w=" + std::to_string(weight) + ": profile (" +
                                 p.symbol() + ") has " + std::to_string(wedge_basis_size(p)) +
                                 " wedge monomials, budget is " + std::to_string(options.budget_dim));

    std::vector<InvariantBasis> bases(kept.size());
    parallel_for(kept.size(), [&](std::size_t i) { bases[i] = invariant_basis(kept[i], options.budget_dim); });

    slice.blocks_.resize(static_cast<std::size_t>(max_degree) + 1);
    slice.profile_lookup_.resize(slice.blocks_.size());
    for (int d = 0; d <= max_degree; ++d) slice.blocks_[static_cast<std::size_t>(d)].degree = d;
    for (std::size_t i = 0; i < kept.size(); ++i) {
        auto& block = slice.blocks_[static_cast<std::size_t>(kept[i].degree())];
        slice.profile_lookup_[static_cast<std::size_t>(kept[i].degree())][kept[i].slots()] = block.profiles.size();
        block.offsets.push_back(block.dim);
        block.dim += bases[i].dim();
        block.profiles.push_back(std::move(bases[i]));
    }

    slice.coboundaries_.resize(static_cast<std::size_t>(max_degree));
    for (int d = 0; d < max_degree; ++d) {
        const auto& source = slice.blocks_[static_cast<std::size_t>(d)];
        const auto& target = slice.blocks_[static_cast<std::size_t>(d) + 1];
        std::vector<std::pair<std::size_t, std::size_t>> rows;  // (profile, local basis index)
        for (std::size_t p = 0; p < target.profiles.size(); ++p)
            for (std::size_t i = 0; i < target.profiles[p].dim(); ++i) rows.emplace_back(p, i);

        std::vector<std::map<std::size_t, Rational>> row_values(rows.size());
        parallel_for(rows.size(), [&](std::size_t r) {
            const auto& tp = target.profiles[rows[r].first];
            const auto& pivot = tp.support[tp.pivots[rows[r].second]];
            auto& out = row_values[r];
            for (const auto& [chain, coef] : chain_boundary(pivot, options.include_sp2_slots)) {
                const auto loc = slice.locate(d, chain);
                if (!loc) {
                    // Only possible if the term has an sl2-weight other than zero or
                    // a profile outside the slice, both of which contradict invariance.
                    throw std::logic_error("coboundary: boundary term " + to_string(chain) + " outside degree " +
                                           std::to_string(d) + " support");
                }
                const auto& sp = source.profiles[loc->first];
                for (std::size_t j = 0; j < sp.dim(); ++j) {
                    const Rational& v = sp.vectors[j][loc->second];
                    if (v != 0) out[source.offsets[loc->first] + j] += coef * v;
                }
            }
        });

        RatMatrix delta(target.dim, source.dim);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            const std::size_t global = target.offsets[rows[r].first] + rows[r].second;
            for (const auto& [col, v] : row_values[r]) delta.set(global, col, v);
        }
        slice.coboundaries_[static_cast<std::size_t>(d)] = std::move(delta);
    }
    return slice;
}

const RatMatrix& coboundary_matrix(const WeightSlice& slice, int degree) {
    if (degree < 0 || static_cast<std::size_t>(degree) >= slice.coboundary_count())
        throw std::out_of_range("coboundary_matrix: degree " + std::to_string(degree) + " not built");
    return slice.coboundary(degree);
}

std::map<int, std::size_t> cohomology_dims(const WeightSlice& slice) {
    const int top = slice.max_degree();
    std::vector<std::size_t> ranks(static_cast<std::size_t>(top) + 1, 0);
    parallel_for(slice.coboundary_count(), [&](std::size_t d) { ranks[d] = rank(slice.coboundary(static_cast<int>(d))); });

    std::map<int, std::size_t> out;
    const int last = slice.complete() ? top : top - 1;
    for (int d = 0; d <= last; ++d) {
        const std::size_t kernel = slice.dim(d) - ranks[static_cast<std::size_t>(d)];
        const std::size_t image = d > 0 ? ranks[static_cast<std::size_t>(d) - 1] : 0;
        out[d] = kernel - image;
    }
    return out;
}

long euler_characteristic(const WeightSlice& slice) {
    long chi = 0;
    for (int d = 0; d <= slice.max_degree(); ++d) chi += (d % 2 == 0 ? 1 : -1) * static_cast<long>(slice.dim(d));
    return chi;
}

bool verify_coboundary_expansion(const WeightSlice& slice, int degree) {
    const auto& delta = coboundary_matrix(slice, degree);
    const auto& source = slice.block(degree);
    const auto& target = slice.block(degree + 1);
    for (std::size_t tp = 0; tp < target.profiles.size(); ++tp) {
        const auto& tprof = target.profiles[tp];
        for (std::size_t c = 0; c < tprof.support.size(); ++c) {
            RationalVector direct(source.dim);
            for (const auto& [chain, coef] : chain_boundary(tprof.support[c], slice.include_sp2_slots())) {
                const auto loc = slice.locate(degree, chain);
                if (!loc) return false;
                const auto& sp = source.profiles[loc->first];
                for (std::size_t j = 0; j < sp.dim(); ++j) direct[source.offsets[loc->first] + j] += coef * sp.vectors[j][loc->second];
            }
            for (std::size_t col = 0; col < source.dim; ++col) {
                Rational expanded(0);
                for (std::size_t i = 0; i < tprof.dim(); ++i)
                    expanded += delta.at(target.offsets[tp] + i, col) * tprof.vectors[i][c];
                if (expanded != direct[col]) return false;
            }
        }
    }
    return true;
}

std::map<int, std::size_t> slice_dimensions(AlgebraVariant variant, int weight, std::size_t budget_dim) {
    const auto profiles = enumerate_profiles(variant, weight);
    std::vector<std::size_t> dims(profiles.size());
    parallel_for(profiles.size(), [&](std::size_t i) { dims[i] = invariant_dim(profiles[i], budget_dim); });
    std::map<int, std::size_t> out;
    for (std::size_t i = 0; i < profiles.size(); ++i) out[profiles[i].degree()] += dims[i];
    return out;
}

RationalVector apply_coboundary(const WeightSlice& slice, const Cochain& c) {
    if (c.degree < 0 || c.coordinates.size() != slice.dim(c.degree))
        throw std::invalid_argument("apply_coboundary: cochain does not match the slice");
    if (static_cast<std::size_t>(c.degree) < slice.coboundary_count()) return slice.coboundary(c.degree).apply(c.coordinates);
    if (slice.complete()) return {};
    throw std::out_of_range("apply_coboundary: coboundary of degree " + std::to_string(c.degree) + " not built");
}

bool is_cocycle(const WeightSlice& slice, const Cochain& c) { return is_zero_vector(apply_coboundary(slice, c)); }

bool is_coboundary(const WeightSlice& slice, const Cochain& c) {
    if (c.degree < 0 || c.coordinates.size() != slice.dim(c.degree))
        throw std::invalid_argument("is_coboundary: cochain does not match the slice");
    if (c.degree == 0) return is_zero_vector(c.coordinates);
    return in_column_span(slice.coboundary(c.degree - 1), c.coordinates).has_value();
}

RationalVector express_in_basis(const WeightSlice& slice, int degree,
                                const std::function<Rational(const WedgeMonomial&)>& values) {
    const auto& block = slice.block(degree);
    RationalVector coords(block.dim);
    for (std::size_t p = 0; p < block.profiles.size(); ++p) {
        const auto& prof = block.profiles[p];
        RationalVector local(prof.support.size());
        for (std::size_t c = 0; c < prof.support.size(); ++c) local[c] = values(prof.support[c]);
        for (std::size_t i = 0; i < prof.dim(); ++i) coords[block.offsets[p] + i] = local[prof.pivots[i]];
        for (std::size_t c = 0; c < prof.support.size(); ++c) {
            Rational expanded(0);
            for (std::size_t i = 0; i < prof.dim(); ++i) expanded += coords[block.offsets[p] + i] * prof.vectors[i][c];
            if (expanded != local[c])
                throw InconsistencyError("express_in_basis: functional is not Sp-invariant on profile (" +
                                         prof.profile.symbol() + ")");
        }
    }
    return coords;
}

std::vector<std::string> support_profiles(const WeightSlice& slice, int degree, const RationalVector& coords) {
    const auto& block = slice.block(degree);
    std::vector<std::string> out;
    for (std::size_t p = 0; p < block.profiles.size(); ++p) {
        for (std::size_t i = 0; i < block.profiles[p].dim(); ++i) {
            if (coords.at(block.offsets[p] + i) != 0) {
                out.push_back(block.profiles[p].profile.symbol());
                break;
            }
        }
    }
    return out;
}

}  // namespace gfc
