#include "morita/io/json.hpp"

#include <fstream>

#include "morita/error.hpp"

namespace morita::io {

json to_json(const Rational& r) { return to_string(r); }
json to_json(const Integer& z) { return z.str(); }

json to_json(const Poly& p) {
  json a = json::array();
  for (const auto& c : p.coefficients()) a.push_back(to_json(c));
  return a;
}

json to_json(const Partition& p) {
  json a = json::array();
  for (int part : p.parts()) a.push_back(part);
  return a;
}

json to_json(const RationalFunction& f) {
  return {{"num", to_json(f.num())}, {"den", to_json(f.den())}, {"text", to_string(f)}};
}

json to_json(const RMatrix& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json to_json(const Relation& r) {
  return {{"q", r.q}, {"s", to_json(r.s)}, {"relation", to_string(r)}};
}

json to_json(const Rejection& r) {
  json roots = json::array(), diffs = json::array();
  for (const auto& x : r.roots) roots.push_back(to_json(x));
  for (const auto& d : r.differences) diffs.push_back(to_json(d));
  return {{"reason", std::string(to_string(r.reason))},
          {"roots", roots},
          {"differences", diffs},
          {"remainder", to_json(r.remainder)}};
}

json to_json(const KTheoryVector& v) {
  json coords = json::array();
  for (std::size_t i = 0; i < v.coords().size(); ++i)
    coords.push_back({{"partition", to_json(v.basis()[i])}, {"n", to_json(v.coords()[i])}});
  return {{"n", v.n()}, {"coords", coords}};
}

json to_json(const poisson::GradedDims& g) {
  json dims = json::object();
  for (std::size_t d = 0; d < g.dims.size(); ++d) dims[std::to_string(d)] = g.dims[d];
  return {{"max_degree", g.max_degree},
          {"dims", dims},
          {"invariant_dims", g.invariant_dims},
          {"total", g.total()},
          {"stabilized", g.stabilized()}};
}

// ---------------------------------------------------------------------------

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(Integer(j.dump()));
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const Error& e) {
      throw Error(Errc::MalformedFile, e.what());
    }
  }
  throw Error(Errc::MalformedFile, "expected a rational string or integer, got " + j.dump());
}

Poly poly_from_json(const json& j) {
  if (!j.is_array()) throw Error(Errc::MalformedFile, "polynomial must be a coefficient array");
  std::vector<Rational> c;
  for (const auto& x : j) c.push_back(rational_from_json(x));
  return Poly(std::move(c));
}

Partition partition_from_json(const json& j) {
  if (!j.is_array()) throw Error(Errc::MalformedFile, "partition must be an array of parts");
  std::vector<int> parts;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw Error(Errc::MalformedFile, "partition parts must be integers");
    parts.push_back(x.get<int>());
  }
  try {
    return Partition(std::move(parts));
  } catch (const Error& e) {
    throw Error(Errc::MalformedFile, e.what());
  }
}

RMatrix matrix_from_json(const json& j, const std::string& what) {
  if (!j.is_array() || j.empty()) throw Error(Errc::MalformedFile, what + " must be a nonempty array of rows");
  const std::size_t cols = j.front().is_array() ? j.front().size() : 0;
  if (cols == 0) throw Error(Errc::MalformedFile, what + " rows must be nonempty arrays");
  RMatrix m(static_cast<Eigen::Index>(j.size()), static_cast<Eigen::Index>(cols));
  for (std::size_t r = 0; r < j.size(); ++r) {
    if (!j[r].is_array() || j[r].size() != cols) throw Error(Errc::MalformedFile, what + " is ragged");
    for (std::size_t c = 0; c < cols; ++c)
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = rational_from_json(j[r][c]);
  }
  return m;
}

GroupSpec parse_group_json(const json& j) {
  if (!j.is_object()) throw Error(Errc::MalformedFile, "group file must be a JSON object");
  for (const char* key : {"dim", "form", "generators"})
    if (!j.contains(key)) throw Error(Errc::MalformedFile, std::string("missing key '") + key + "'");
  if (!j["dim"].is_number_integer() || j["dim"].get<long>() <= 0)
    throw Error(Errc::MalformedFile, "'dim' must be a positive integer");

  GroupSpec g;
  g.dim = j["dim"].get<int>();
  if (g.dim % 2 != 0) throw Error(Errc::DimensionOdd, "dim " + std::to_string(g.dim) + " is odd");
  g.form = matrix_from_json(j["form"], "form");
  if (g.form.rows() != g.form.cols()) throw Error(Errc::MalformedFile, "form is not square");
  if (g.form.rows() % 2 != 0)
    throw Error(Errc::DimensionOdd, "form has odd size " + std::to_string(g.form.rows()));
  if (g.form.rows() != g.dim) throw Error(Errc::MalformedFile, "form size does not match dim");

  if (!j["generators"].is_array()) throw Error(Errc::MalformedFile, "'generators' must be an array");
  for (std::size_t i = 0; i < j["generators"].size(); ++i) {
    auto m = matrix_from_json(j["generators"][i], "generator " + std::to_string(i));
    if (m.rows() != g.dim || m.cols() != g.dim)
      throw Error(Errc::MalformedFile, "generator " + std::to_string(i) + " is not dim x dim");
    g.generators.push_back(std::move(m));
  }
  return g;
}

GroupSpec parse_group_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::MalformedFile, "cannot open " + path.string());
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw Error(Errc::MalformedFile, path.string() + ": " + e.what());
  }
  return parse_group_json(j);
}

}  // namespace morita::io
