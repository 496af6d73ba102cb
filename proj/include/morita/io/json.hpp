#pragma once

// JSON encodings. Rationals are strings "p/q" (or "p"), polynomials are
// coefficient arrays lowest degree first, partitions are arrays of parts.

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "morita/classify.hpp"
#include "morita/exact/linalg.hpp"
#include "morita/exact/rational_function.hpp"
#include "morita/partitions.hpp"
#include "morita/poisson/homology.hpp"

namespace morita::io {

using nlohmann::json;

json to_json(const Rational& r);
json to_json(const Integer& z);
json to_json(const Poly& p);
json to_json(const Partition& p);
json to_json(const RationalFunction& f);
json to_json(const RMatrix& m);
json to_json(const Relation& r);
json to_json(const Rejection& r);
json to_json(const KTheoryVector& v);
json to_json(const poisson::GradedDims& g);

/// Strings "p/q" / "p" and JSON integers. Floats and anything else raise
/// Error(MalformedFile).
Rational rational_from_json(const json& j);
Poly poly_from_json(const json& j);
Partition partition_from_json(const json& j);
RMatrix matrix_from_json(const json& j, const std::string& what);

/// Contents of a group-action file:
///   { "dim": 2d, "form": [[...]], "generators": [[[...]], ...] }
struct GroupSpec {
  int dim = 0;
  RMatrix form;
  std::vector<RMatrix> generators;
};

/// Shapes are validated before any closure is attempted. Errors:
/// MalformedFile (bad JSON, ragged or missized matrices, non-rational
/// entries), DimensionOdd (odd dim or odd-sized form).
GroupSpec parse_group_json(const json& j);
GroupSpec parse_group_file(const std::filesystem::path& path);

}  // namespace morita::io
