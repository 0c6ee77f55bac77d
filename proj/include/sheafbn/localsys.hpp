#pragma once

#include <cstddef>
#include <vector>

#include "sheafbn/cellsheaf.hpp"
#include "sheafbn/fundgroup.hpp"
#include "sheafbn/matrix.hpp"

namespace sheafbn {

/**
 * A representation of a finitely presented group on a free module: one
 * invertible matrix per generator. The presentation travels with the
 * matrices so relator checks and sheaf constructions need no extra context.
 */
struct Representation {
  RingSpec ring;
  Index dimension = 0;
  GroupPresentation presentation;
  std::vector<Matrix> matrices;

  bool operator==(const Representation& other) const;
  bool operator!=(const Representation& other) const {
    return !(*this == other);
  }
};

// Checks ring, shape, and invertibility of each generator matrix
// (Error("InvalidRepresentation") on failure). Relator satisfaction is the
// job of validate_representation.
Representation make_representation(const RingSpec& ring, Index dimension,
                                   GroupPresentation presentation,
                                   std::vector<Matrix> matrices);

// Indices of relators r with rho(r) != identity; empty means rho is an
// actual representation of the presented group.
std::vector<std::size_t> validate_representation(const Representation& rho);

// rho(w) as a product of generator matrices and their inverses.
Matrix evaluate_word(const Representation& rho, const Word& w);

/**
 * The locally constant sheaf with monodromy rho, relative to the spanning
 * tree in l. Every stalk is free of rank rho.dimension; the restriction from
 * a face t to a coface s is rho evaluated on the edge path from min(s) to
 * min(t). Tree edges get identity restrictions, so the sheaf is "aligned"
 * with l: sheaf_to_rep inverts this construction on the nose.
 */
CellularSheaf rep_to_sheaf(const EdgeLabeling& l, const Representation& rho);

// Monodromy of a locally constant sheaf: transport stalks to the basepoint
// along the spanning tree of l, then read off each generator's holonomy.
// Error("NotLocallyConstant") when f is not locally constant.
Representation sheaf_to_rep(const EdgeLabeling& l, const CellularSheaf& f);

struct InvariantsReport {
  FpModule invariants;  // joint kernel of rho(g) - id over all generators
  FpModule h0;          // H^0 of the associated sheaf
  bool equal = false;
};

// Compares the fixed submodule of rho with H^0(X, rep_to_sheaf(l, rho)).
InvariantsReport invariants_match(const EdgeLabeling& l,
                                  const Representation& rho);

// Restricts rho along a homomorphism given by generator images: generator g
// of source maps to images[g] in rho's group. Error("RelatorViolation") when
// some source relator fails in the target representation.
Representation pullback_rep(const GroupPresentation& source,
                            const std::vector<Word>& images,
                            const Representation& rho);

}  // namespace sheafbn
