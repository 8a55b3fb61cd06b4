#pragma once

// JSON and text renderings shared by the CLI and the Python bindings.

#include "gfc/characteristic.hpp"
#include "gfc/complex.hpp"
#include "gfc/genfun.hpp"

#include "json.hpp"

#include <map>
#include <string>

namespace gfc {

using Json = nlohmann::ordered_json;

// "3:4 4:5 5:1"; zero degrees are left out, so an acyclic or empty map gives "".
std::string degree_map_text(const std::map<int, std::size_t>& dims);
std::map<int, std::size_t> slice_degree_dims(const WeightSlice& slice);

// Nonzero profiles of one degree: "(3 4 7) (3^2 5^2)_2", multiplicity shown when > 1.
std::string generator_list(const WeightSlice& slice, int degree);

Json rational_vector_json(const RationalVector& v);
Json matrix_json(const RatMatrix& m);
Json slice_json(const WeightSlice& slice, bool with_coboundaries = true);
Json cohomology_json(const WeightSlice& slice);
Json named_class_json(const NamedClass& c, const WeightSlice* slice = nullptr);
Json factorization_json(const FactorizationReport& report);
Json series_json(const LaurentSeries& s);
Json stabilization_json(const StabilizationReport& r);

}  // namespace gfc
