#pragma once

#include <vector>

#include "sheafbn/cellsheaf.hpp"
#include "sheafbn/fundgroup.hpp"
#include "sheafbn/simplicial.hpp"

namespace sheafbn {

/**
 * A covering space assembled from a complete coset table over an edge
 * labeling of the base: one sheet per coset, and the lift of an edge from
 * its lower endpoint on sheet s lands on sheet s acted on by the edge word.
 *
 * Total-space vertex ids are sheet * V + v over base vertex v, so the
 * projection is id % V and the fiber over v is {v, V + v, 2V + v, ...}.
 */
struct Cover {
  SimplicialComplex total;
  SimplicialMap projection;  // total -> base
  EdgeLabeling labeling;     // base labeling the construction used
  CosetTable table;          // sheet bookkeeping

  Index sheets() const { return table.coset_count; }
  Index total_vertex(Index sheet, int base_vertex) const;
  Index sheet_of(Index total_vertex) const;

  // The lift of a base simplex whose minimal vertex lies on the given sheet.
  Simplex lift(const Simplex& base_simplex, Index sheet) const;
};

// Error("IncompleteTable") unless t is complete; Error("PresentationMismatch")
// unless t enumerates cosets in the presentation attached to l.
Cover build_cover(const EdgeLabeling& l, const CosetTable& t);

// One automorphism of the total space per generator of the base group,
// acting on sheets by left multiplication. Only regular covers (normal
// subgroups) admit this; Error("NotRegularCover") otherwise.
std::vector<SimplicialMap> deck_generators(const Cover& c);

// Stalks and restrictions copied along the projection.
CellularSheaf pullback_sheaf(const Cover& c, const CellularSheaf& f);

// Stalk at a base simplex is the direct sum over its lifts in sheet order;
// restrictions route each lift to the matching face lift.
CellularSheaf pushforward_sheaf(const Cover& c, const CellularSheaf& g);

}  // namespace sheafbn
