#include "sheafbn/simplicial.hpp"

#include "doctest.h"
#include "fixtures.hpp"
#include "sheafbn/errors.hpp"
#include "sheafbn/linalg.hpp"

using namespace sheafbn;

namespace {
const RingSpec kZ = RingSpec::integers();
const RingSpec kQ = RingSpec::rationals();
}  // namespace

TEST_CASE("closure and face counts") {
  SimplicialComplex circle = fixtures::circle();
  CHECK(circle.vertex_count() == 3);
  CHECK(circle.dimension() == 1);
  CHECK(circle.count(0) == 3);
  CHECK(circle.count(1) == 3);

  SimplicialComplex sphere = fixtures::sphere();
  CHECK(sphere.count(0) == 4);
  CHECK(sphere.count(1) == 6);
  CHECK(sphere.count(2) == 4);
  CHECK(sphere.euler_characteristic() == 2);

  SimplicialComplex rp2 = fixtures::projective_plane();
  CHECK(rp2.count(0) == 6);
  CHECK(rp2.count(1) == 15);
  CHECK(rp2.count(2) == 10);
  CHECK(rp2.euler_characteristic() == 1);

  SimplicialComplex t7 = fixtures::torus();
  CHECK(t7.count(0) == 7);
  CHECK(t7.count(1) == 21);
  CHECK(t7.count(2) == 14);
  CHECK(t7.euler_characteristic() == 0);

  CHECK(fixtures::wedge().euler_characteristic() == -1);
}

TEST_CASE("construction validation") {
  CHECK_THROWS_WITH_AS(SimplicialComplex::from_maximal(1, {}),
                       doctest::Contains("EmptyInput"), Error);
  CHECK_THROWS_WITH_AS(SimplicialComplex::from_maximal(2, {{0, 2}}),
                       doctest::Contains("InvalidVertexIndex"), Error);
  CHECK_THROWS_WITH_AS(SimplicialComplex::from_maximal(2, {{0, 0}}),
                       doctest::Contains("InvalidSimplex"), Error);
  // vertex 2 appears in no simplex
  CHECK_THROWS_WITH_AS(SimplicialComplex::from_maximal(3, {{0, 1}}),
                       doctest::Contains("InvalidVertexIndex"), Error);
  // an edge without its endpoints is not a complex
  CHECK_THROWS_WITH_AS(SimplicialComplex::from_all(2, {{0, 1}}),
                       doctest::Contains("NotClosed"), Error);
  // unsorted input is normalized
  CHECK(SimplicialComplex::from_maximal(3, {{2, 0, 1}}) ==
        SimplicialComplex::from_maximal(3, {{0, 1, 2}}));
}

TEST_CASE("simplex lookup") {
  SimplicialComplex sphere = fixtures::sphere();
  CHECK(sphere.has({1, 3}));
  CHECK(!sphere.has({0, 1, 2, 3}));
  CHECK(sphere.index_of({0, 1}) == 0);
  CHECK(sphere.index_of({2, 3}) == 5);
  CHECK_THROWS_WITH_AS(sphere.index_of({0, 1, 2, 3}),
                       doctest::Contains("NotASimplex"), Error);
}

TEST_CASE("boundary of boundary vanishes") {
  for (const SimplicialComplex& x :
       {fixtures::sphere(), fixtures::projective_plane(), fixtures::torus()}) {
    Matrix d1 = x.boundary_matrix(1, kZ);
    Matrix d2 = x.boundary_matrix(2, kZ);
    CHECK((d1 * d2).is_zero());
    // every edge column sums to zero
    for (Index j = 0; j < d1.cols(); ++j) {
      Rat sum = 0;
      for (Index i = 0; i < d1.rows(); ++i) sum += d1(i, j);
      CHECK(sum == 0);
    }
  }
  CHECK_THROWS_WITH_AS(fixtures::circle().boundary_matrix(2, kZ),
                       doctest::Contains("DegreeOutOfRange"), Error);
  CHECK_THROWS_WITH_AS(fixtures::circle().boundary_matrix(0, kZ),
                       doctest::Contains("DegreeOutOfRange"), Error);
}

TEST_CASE("homology of the classical fixtures") {
  SimplicialComplex circle = fixtures::circle();
  CHECK(homology(circle, 0, kZ) == FpModule(kZ, 1, {}));
  CHECK(homology(circle, 1, kZ) == FpModule(kZ, 1, {}));

  SimplicialComplex sphere = fixtures::sphere();
  CHECK(homology(sphere, 0, kZ) == FpModule(kZ, 1, {}));
  CHECK(homology(sphere, 1, kZ) == FpModule::zero(kZ));
  CHECK(homology(sphere, 2, kZ) == FpModule(kZ, 1, {}));

  SimplicialComplex rp2 = fixtures::projective_plane();
  CHECK(homology(rp2, 0, kZ) == FpModule(kZ, 1, {}));
  CHECK(homology(rp2, 1, kZ) == FpModule(kZ, 0, {2}));
  CHECK(homology(rp2, 2, kZ) == FpModule::zero(kZ));
  // over a field of characteristic 2 the torsion becomes visible everywhere
  const RingSpec f2 = RingSpec::prime_field(2);
  CHECK(homology(rp2, 1, f2) == FpModule(f2, 1, {}));
  CHECK(homology(rp2, 2, f2) == FpModule(f2, 1, {}));

  SimplicialComplex t7 = fixtures::torus();
  CHECK(homology(t7, 0, kZ) == FpModule(kZ, 1, {}));
  CHECK(homology(t7, 1, kZ) == FpModule(kZ, 2, {}));
  CHECK(homology(t7, 2, kZ) == FpModule(kZ, 1, {}));
  CHECK(homology(t7, 1, kQ) == FpModule(kQ, 2, {}));

  SimplicialComplex wedge = fixtures::wedge();
  CHECK(homology(wedge, 0, kZ) == FpModule(kZ, 1, {}));
  CHECK(homology(wedge, 1, kZ) == FpModule(kZ, 2, {}));

  CHECK_THROWS_WITH_AS(homology(circle, 2, kZ),
                       doctest::Contains("DegreeOutOfRange"), Error);
}

TEST_CASE("euler characteristic equals the alternating betti sum") {
  for (const SimplicialComplex& x :
       {fixtures::circle(), fixtures::sphere(), fixtures::projective_plane(),
        fixtures::torus(), fixtures::wedge()}) {
    Index betti = 0;
    for (int n = 0; n <= x.dimension(); ++n) {
      Index b = homology(x, n, kQ).free_rank();
      betti += (n % 2 == 0) ? b : -b;
    }
    CHECK(betti == x.euler_characteristic());
  }
}

TEST_CASE("connectivity") {
  CHECK(fixtures::projective_plane().is_connected());
  SimplicialComplex two_edges =
      SimplicialComplex::from_maximal(4, {{0, 1}, {2, 3}});
  CHECK(!two_edges.is_connected());
  CHECK(homology(two_edges, 0, kZ) == FpModule(kZ, 2, {}));
  CHECK(two_edges.vertex_components() == std::vector<int>{0, 0, 1, 1});
}

TEST_CASE("simplicial maps") {
  SimplicialComplex circle = fixtures::circle();
  SimplicialMap id(circle, circle, {0, 1, 2});
  CHECK(id.image({0, 1}) == Simplex{0, 1});

  // collapsing a circle to one vertex is simplicial (images degenerate)
  SimplicialComplex point = SimplicialComplex::from_maximal(1, {{0}});
  SimplicialMap collapse(circle, point, {0, 0, 0});
  CHECK(collapse.image({1, 2}) == Simplex{0});

  SimplicialComplex two_points =
      SimplicialComplex::from_all(2, {{0}, {1}});
  CHECK_THROWS_WITH_AS(
      SimplicialMap(SimplicialComplex::from_maximal(2, {{0, 1}}), two_points,
                    {0, 1}),
      doctest::Contains("NotSimplicial"), Error);
  CHECK_THROWS_WITH_AS(SimplicialMap(circle, point, {0, 0}),
                       doctest::Contains("InvalidVertexIndex"), Error);
}
