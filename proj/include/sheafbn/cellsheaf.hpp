#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "sheafbn/cochain.hpp"
#include "sheafbn/simplicial.hpp"

namespace sheafbn {

/**
 * A cellular sheaf: a free-module stalk on every simplex and a restriction
 * matrix along every codimension-1 face incidence.
 *
 * The container itself is permissive; whether the data actually forms a sheaf
 * (shapes line up, the two composites around every codimension-2 square
 * agree) is the job of validate_sheaf, and the computing operations reject
 * invalid data with Error("InvalidSheaf"). Restrictions never set explicitly
 * default to zero matrices of the right shape, so sparse descriptions stay
 * short.
 */
class CellularSheaf {
 public:
  CellularSheaf(SimplicialComplex complex, RingSpec ring);

  const SimplicialComplex& complex() const { return complex_; }
  const RingSpec& ring() const { return ring_; }

  Index stalk(int d, Index i) const;
  Index stalk(const Simplex& s) const;
  void set_stalk(const Simplex& s, Index rank);

  // Restriction from the d-dimensional face to its (d+1)-dimensional coface;
  // pairs must be incident. Returns the zero matrix when unset.
  Matrix restriction(int d, Index face, Index coface) const;
  Matrix restriction(const Simplex& face, const Simplex& coface) const;
  void set_restriction(const Simplex& face, const Simplex& coface, Matrix m);

  // Effective equality: same complex, ring, stalks, and restriction values.
  bool operator==(const CellularSheaf& other) const;
  bool operator!=(const CellularSheaf& other) const {
    return !(*this == other);
  }

 private:
  void check_incident(const Simplex& face, const Simplex& coface) const;

  SimplicialComplex complex_;
  RingSpec ring_;
  std::vector<std::vector<Index>> stalk_;
  // keyed by (face index, coface index), one map per face dimension
  std::vector<std::map<std::pair<Index, Index>, Matrix>> restr_;
};

struct SheafViolation {
  Simplex face;
  Simplex coface;
  std::string reason;
};

CellularSheaf constant_sheaf(const SimplicialComplex& x, const RingSpec& ring,
                             Index rank);

// Shape mismatches and every codimension-2 square whose two composites
// differ. An empty list means the data is a sheaf.
std::vector<SheafViolation> validate_sheaf(const CellularSheaf& f);

// True when stalk ranks are constant on every connected component and every
// restriction matrix is invertible over the ring.
bool is_locally_constant(const CellularSheaf& f);

// The cochain complex of stalk sums with the alternating-sign coboundary.
CochainComplex sheaf_cochain_complex(const CellularSheaf& f);

// H^n(X, F); zero above the dimension of the complex.
FpModule sheaf_cohomology(const CellularSheaf& f, int n);

CellularSheaf direct_sum(const CellularSheaf& f, const CellularSheaf& g);

}  // namespace sheafbn
