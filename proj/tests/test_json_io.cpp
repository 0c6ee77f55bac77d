#include "sheafbn/json_io.hpp"

#include "doctest.h"
#include "fixtures.hpp"
#include "sheafbn/bncheck.hpp"
#include "sheafbn/errors.hpp"
#include "sheafbn/localsys.hpp"

using namespace sheafbn;

namespace {

const RingSpec kZ = RingSpec::integers();
const RingSpec kQ = RingSpec::rationals();

Matrix scalar(const RingSpec& ring, const Rat& v) {
  return Matrix::from_rows(ring, {{v}});
}

}  // namespace

TEST_CASE("matrices survive the json round trip") {
  SUBCASE("integers and rationals") {
    const Matrix m = Matrix::from_rows(kQ, {{Rat(1, 2), 3}, {-4, Rat(-5, 6)}});
    const Json j = to_json(m);
    CHECK(j[0][0] == "1/2");
    CHECK(j[0][1] == 3);
    CHECK(matrix_from_json(kQ, j) == m);
  }
  SUBCASE("entries too large for a json number become strings") {
    Rat big("123456789012345678901234567890");
    const Matrix m = Matrix::from_rows(kZ, {{big}});
    const Json j = to_json(m);
    CHECK(j[0][0].is_string());
    CHECK(matrix_from_json(kZ, j) == m);
  }
  SUBCASE("the empty matrix") {
    CHECK(matrix_from_json(kZ, Json::array()) == Matrix(kZ, 0, 0));
  }
  SUBCASE("garbage entries are refused") {
    CHECK_THROWS_WITH_AS(matrix_from_json(kZ, Json::parse(R"([["x"]])")),
                         doctest::Contains("BadInput"), Error);
    CHECK_THROWS_WITH_AS(matrix_from_json(kZ, Json::parse(R"([[1],[2,3]])")),
                         doctest::Contains("BadInput"), Error);
    CHECK_THROWS_WITH_AS(matrix_from_json(kZ, Json::parse("{}")),
                         doctest::Contains("BadInput"), Error);
  }
}

TEST_CASE("complexes serialize through their maximal simplices") {
  SUBCASE("round trips preserve every fixture") {
    for (const SimplicialComplex& x :
         {fixtures::circle(), fixtures::sphere(), fixtures::projective_plane(),
          fixtures::torus(), fixtures::wedge(), fixtures::filled_face()}) {
      CHECK(complex_from_json(to_json(x)) == x);
    }
  }
  SUBCASE("only maximal simplices are written") {
    const Json j = to_json(fixtures::circle());
    CHECK(j["vertices"] == 3);
    CHECK(j["maximal_simplices"].size() == 3);
    for (const Json& s : j["maximal_simplices"]) CHECK(s.size() == 2);
  }
  SUBCASE("a maximal vertex inside a larger complex is kept") {
    const SimplicialComplex x =
        SimplicialComplex::from_maximal(3, {{0, 1}, {2}});
    CHECK(complex_from_json(to_json(x)) == x);
  }
  SUBCASE("malformed documents are refused") {
    CHECK_THROWS_WITH_AS(complex_from_json(Json::parse(R"({"vertices": 2})")),
                         doctest::Contains("BadInput"), Error);
    CHECK_THROWS_WITH_AS(
        complex_from_json(Json::parse(
            R"({"vertices": 2, "maximal_simplices": [[0, "a"]]})")),
        doctest::Contains("BadInput"), Error);
  }
}

TEST_CASE("modules and presentations have stable json shapes") {
  CHECK(dump_canonical(to_json(FpModule(kZ, 2, {Int(2), Int(6)}))) ==
        R"({"free_rank":2,"ring":"Z","torsion":[2,6]})");
  CHECK(dump_canonical(to_json(FpModule::zero(kQ))) ==
        R"({"free_rank":0,"ring":"Q","torsion":[]})");
  const auto [p, l] = presentation(fixtures::circle(), 0);
  CHECK(dump_canonical(to_json(p)) == R"({"generators":1,"relators":[]})");
}

TEST_CASE("sheaves round trip with nonzero restrictions only") {
  const auto [p, l] = presentation(fixtures::circle(), 0);
  const Representation rho =
      make_representation(kQ, 1, p, {scalar(kQ, Rat(2, 3))});
  const CellularSheaf f = rep_to_sheaf(l, rho);
  CHECK(sheaf_from_json(f.complex(), to_json(f)) == f);

  const CellularSheaf c = constant_sheaf(fixtures::projective_plane(), kZ, 2);
  CHECK(sheaf_from_json(c.complex(), to_json(c)) == c);

  SUBCASE("omitted stalks and restrictions default to zero") {
    const CellularSheaf g = sheaf_from_json(
        fixtures::circle(),
        Json::parse(R"({"ring": "Z", "stalks": {"0": 2}})"));
    CHECK(g.stalk({0}) == 2);
    CHECK(g.stalk({1}) == 0);
    CHECK(g.stalk({0, 1}) == 0);
  }
  SUBCASE("restriction keys must point at incident simplices") {
    CHECK_THROWS_AS(
        sheaf_from_json(
            fixtures::circle(),
            Json::parse(
                R"({"ring": "Z", "stalks": {"0": 1}, "restrictions": {"0>1": [[1]]}})")),
        Error);
    CHECK_THROWS_AS(
        sheaf_from_json(
            fixtures::circle(),
            Json::parse(
                R"({"ring": "Z", "stalks": {"0": 1}, "restrictions": {"0->1-2": [[1]]}})")),
        Error);
  }
}

TEST_CASE("representations round trip against their presentation") {
  const auto [p, l] = presentation(fixtures::circle(), 0);
  const Representation rho =
      make_representation(kQ, 2, p,
                          {Matrix::from_rows(kQ, {{0, -1}, {1, 0}})});
  const Json j = to_json(rho);
  CHECK(representation_from_json(p, j) == rho);
  SUBCASE("the generator count is enforced") {
    Json two = j;
    two["matrices"].push_back(two["matrices"][0]);
    CHECK_THROWS_AS(representation_from_json(p, two), Error);
  }
  SUBCASE("singular matrices are refused") {
    Json bad = j;
    bad["matrices"][0] = Json::parse("[[1, 0], [2, 0]]");
    CHECK_THROWS_AS(representation_from_json(p, bad), Error);
  }
}

TEST_CASE("covers serialize their sheet bookkeeping") {
  const auto [p, l] = presentation(fixtures::projective_plane(), 0);
  const Cover c = build_cover(l, todd_coxeter(p, {}, 100));
  const Json j = to_json(c);
  CHECK(j["sheets"] == 2);
  CHECK(j["projection"].size() == 12);
  CHECK(j["vertex_sheet"].size() == 12);
  CHECK(complex_from_json(j["total"]) == c.total);
  for (int v = 0; v < c.total.vertex_count(); ++v)
    CHECK(j["projection"][static_cast<size_t>(v)] == c.projection.apply(v));
}

TEST_CASE("verdict json carries only the fields that apply") {
  CHECK(dump_canonical(to_json(asphericity_check(fixtures::circle(), kZ))) ==
        R"({"certificate":"dimension-1","status":"aspherical"})");
  const Json sphere = to_json(asphericity_check(fixtures::sphere(), kZ));
  CHECK(sphere["status"] == "not-aspherical");
  CHECK(sphere["witness_degree"] == 2);
  CHECK(sphere["witness"]["free_rank"] == 1);
  CHECK_FALSE(sphere.contains("certificate"));
  const Json torus =
      to_json(asphericity_check(fixtures::torus(), kZ, 200));
  CHECK(torus["status"] == "unknown");
  CHECK(torus["reason"].get<std::string>().find("200") != std::string::npos);
}

TEST_CASE("reports and pages dump deterministically") {
  const auto [p, l] = presentation(fixtures::projective_plane(), 0);
  const CellularSheaf f = constant_sheaf(fixtures::projective_plane(), kZ, 1);
  const BNReport r = bn_verdict(l, kZ, {}, {f}, 2);
  const Json j = to_json(r);
  CHECK(j.contains("asphericity"));
  CHECK(j.contains("condition3"));
  CHECK(j.contains("consistent"));
  CHECK(j["condition3"].size() == 2);
  CHECK(j["condition3"][1]["vanished"] == false);
  CHECK(dump_canonical(j) == dump_canonical(to_json(bn_verdict(l, kZ, {}, {f}, 2))));

  const RingSpec f2 = RingSpec::prime_field(2);
  const E2Page page =
      e2_page(l, constant_sheaf(fixtures::projective_plane(), f2, 1), 2, 1);
  const Json pj = to_json(page);
  CHECK(pj["pmax"] == 2);
  CHECK(pj["entries"].size() == 3);
  CHECK(pj["entries"][0].size() == 2);
  CHECK(pj["checks"].is_array());
  CHECK(dump_canonical(pj).find(' ') == std::string::npos);
}
