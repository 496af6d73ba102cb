#include <doctest.h>

#include <string>

#include "morita/error.hpp"
#include "morita/io/json.hpp"
#include "morita/traces.hpp"
#include "oracles.hpp"

using namespace morita;
using morita::io::json;

namespace {

const std::string kData = MORITA_TEST_DATA_DIR;

Errc code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return Errc::InternalDisagreement;
}

}  // namespace

TEST_CASE("scalar encodings") {
  CHECK(io::to_json(Rational(-3, 4)) == "-3/4");
  CHECK(io::to_json(Rational(5)) == "5");
  CHECK(io::to_json(Integer(-12)) == "-12");
  CHECK(io::rational_from_json(json("6/4")) == Rational(3, 2));
  CHECK(io::rational_from_json(json(-7)) == Rational(-7));
  CHECK(code_of([] { io::rational_from_json(json(0.5)); }) == Errc::MalformedFile);
  CHECK(code_of([] { io::rational_from_json(json("x")); }) == Errc::MalformedFile);
  CHECK(code_of([] { io::rational_from_json(json::array()); }) == Errc::MalformedFile);
}

TEST_CASE("round trips") {
  for (int t = 0; t < 100; ++t) {
    const Rational r = oracle::small_rational(50);
    CHECK(io::rational_from_json(json::parse(io::to_json(r).dump())) == r);
    const Poly p = oracle::random_poly(6);
    CHECK(io::poly_from_json(json::parse(io::to_json(p).dump())) == p);
    const Partition lambda = oracle::random_partition(oracle::uniform(1, 12));
    CHECK(io::partition_from_json(json::parse(io::to_json(lambda).dump())) == lambda);
  }
  const auto g = g_function(Partition({1, 1, 1}));
  const json j = io::to_json(g);
  CHECK(io::poly_from_json(j["num"]) == g.num());
  CHECK(io::poly_from_json(j["den"]) == g.den());
  CHECK(io::to_json(Poly{}) == json::array());
  CHECK(code_of([] { io::partition_from_json(json::parse("[1,2]")); }) == Errc::MalformedFile);
}

TEST_CASE("relation and rejection encodings") {
  const json r = io::to_json(Relation{-1, 1});
  CHECK(r["q"] == -1);
  CHECK(r["s"] == "1");
  CHECK(r["relation"] == "c = -c' - 2");
  const auto d = derive_relation(KTheoryVector::from_coords(3, {1, 0}));
  const json rej = io::to_json(std::get<Rejection>(d));
  CHECK(rej["reason"] == "CommonDifferenceNotUnit");
  CHECK(rej["roots"] == json::parse(R"(["-8", "-1"])"));
  CHECK(rej["differences"] == json::parse(R"(["7"])"));
}

TEST_CASE("graded dims encoding") {
  poisson::GradedDims g;
  g.max_degree = 2;
  g.dims = {1, 0, 0};
  g.invariant_dims = {1, 0, 3};
  const json j = io::to_json(g);
  CHECK(j["dims"]["0"] == 1);
  CHECK(j["total"] == 1);
  CHECK(j["stabilized"] == true);
}

TEST_CASE("parse_group_file") {
  const auto pm = io::parse_group_file(kData + "/plus_minus_identity.json");
  CHECK(pm.dim == 2);
  CHECK(pm.generators.size() == 1);
  CHECK(pm.generators[0] == -RMatrix::Identity(2, 2));
  CHECK(pm.form(0, 1) == 1);

  const auto third = io::parse_group_file(kData + "/third_form.json");
  CHECK(third.form(0, 1) == Rational(1, 3));
  CHECK(third.form(1, 0) == Rational(-1, 3));

  CHECK(io::parse_group_file(kData + "/trivial.json").generators.empty());
  CHECK(code_of([] { io::parse_group_file(kData + "/odd_dimension.json"); }) == Errc::DimensionOdd);
  CHECK(code_of([] { io::parse_group_file(kData + "/malformed.json"); }) == Errc::MalformedFile);
  CHECK(code_of([] { io::parse_group_file(kData + "/ragged.json"); }) == Errc::MalformedFile);
  CHECK(code_of([] { io::parse_group_file(kData + "/float_entry.json"); }) == Errc::MalformedFile);
  CHECK(code_of([] { io::parse_group_file(kData + "/does_not_exist.json"); }) == Errc::MalformedFile);
}

TEST_CASE("parse_group_json shape checks") {
  auto code = [](const char* text) { return code_of([&] { io::parse_group_json(json::parse(text)); }); };
  CHECK(code(R"({"form": [[0,1],[-1,0]], "generators": []})") == Errc::MalformedFile);
  CHECK(code(R"({"dim": 2, "form": [[0,1,0],[-1,0,0],[0,0,0]], "generators": []})") == Errc::DimensionOdd);
  CHECK(code(R"({"dim": 4, "form": [[0,1],[-1,0]], "generators": []})") == Errc::MalformedFile);
  CHECK(code(R"({"dim": 2, "form": [[0,1],[-1,0]], "generators": [[[1,0,0],[0,1,0],[0,0,1]]]})") ==
        Errc::MalformedFile);
  CHECK(code(R"({"dim": -2, "form": [[0,1],[-1,0]], "generators": []})") == Errc::MalformedFile);
  CHECK(code(R"([1, 2])") == Errc::MalformedFile);
}
