#pragma once

#include <json.hpp>

#include "steklov/ball_quotients.hpp"
#include "steklov/bounds.hpp"
#include "steklov/inverse.hpp"
#include "steklov/spectra.hpp"
#include "steklov/sunada.hpp"

namespace steklov::io {

using nlohmann::json;

// Every parser throws DomainError with a message naming the offending field.

Rational rational_from(const json& j, const char* what);
json rational_to(const Rational& value);

BoundaryData boundary_from_json(const json& j);
json to_json(const BoundaryData& data);

SpectrumUnit unit_from_json(const json& j);

ArithmeticSpectrum spectrum_from_json(const json& j);
json to_json(const ArithmeticSpectrum& spectrum);

SpectrumView view_from_json(const json& j);
/// `with_decimals` adds an "approx" array of doubles next to the exact values.
json to_json(const SpectrumView& view, bool with_decimals = false);

json to_json(const BoundaryDataClass& cls);
json to_json(const ApproxDecomposition& dec);

/// {"dim": n, "mode": "rational"|"float", "generators": [[row-major entries]],
///  "max_order": N, "tolerance": t}; the last two are optional.
OrthogonalGroup group_from_json(const json& j);
json to_json(const HarmonicDimensionTable& table);
json to_json(const FourierDTN& dtn);

/// {"order": n, "table": [[...]], "labels": [...]}.
FiniteGroup finite_group_from_json(const json& j);
json to_json(const FiniteGroup& group);
SubgroupCollection collection_from_json(const FiniteGroup& group, const json& j);

/// {"dim": n, "mode": ..., "images": [[entries of the image of element 0], ...]}.
MatrixRealization realization_from_json(const FiniteGroup& group, const json& j);

json to_json(const SunadaReport& report, const FiniteGroup& group);
json to_json(const PermutationCharacterReport& report);
json to_json(const BallCheckReport& report);

/// {"cells": [{"dim": 0|1|2, "isotropy": k}, ...]}.
CellComplex cells_from_json(const json& j);
json to_json(const BoundReport& report);

}  // namespace steklov::io
