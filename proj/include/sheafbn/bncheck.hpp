#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sheafbn/cellsheaf.hpp"
#include "sheafbn/covers.hpp"
#include "sheafbn/fundgroup.hpp"
#include "sheafbn/groupcoh.hpp"
#include "sheafbn/localsys.hpp"

namespace sheafbn {

/**
 * A module over the group ring of the fundamental group: the isomorphism
 * class of the underlying module plus, when a concrete basis is available,
 * one matrix per presentation generator giving the action on that basis.
 * Global sections always come with an action; higher derived functors carry
 * one over fields only, since torsion quotients over Z have no preferred
 * basis to act on.
 */
struct GModule {
  RingSpec ring;
  FpModule underlying;
  std::optional<std::vector<Matrix>> action;
};

/**
 * The matrix of s -> s o phi on degree-n sheaf cochains, for a simplicial
 * automorphism phi of the sheaf's complex that preserves stalk sizes. The
 * block for a simplex routes to the block of its (sorted) image, signed by
 * the parity of the sort. Commutes with the coboundary.
 */
Matrix cochain_pullback(const CellularSheaf& f, const SimplicialMap& phi,
                        int n);

/**
 * Global sections of the pullback of f to the universal cover, as a module
 * over the deck group = fundamental group. Needs the group to enumerate
 * within `budget` cosets (Error("InfiniteOrUnknownGroup") otherwise). For a
 * locally constant sheaf this recovers the monodromy representation up to
 * conjugacy; it is defined, and generally smaller than a stalk, for any
 * sheaf.
 */
GModule quasicoherator(const EdgeLabeling& l, const CellularSheaf& f,
                       Index budget = 10000);

/**
 * Degree-i derived functor: H^i of the pullback to the universal cover.
 * Degree 0 is quasicoherator. The deck action is attached over fields; over
 * Z only the isomorphism class is reported. On a 1-complex with a locally
 * constant sheaf the positive degrees vanish (the cover is a tree), and
 * that case skips coset enumeration, so infinite groups are fine there.
 */
GModule derived_quasicoherator(const EdgeLabeling& l, const CellularSheaf& f,
                               int degree, Index budget = 10000);

struct AsphericityVerdict {
  enum class Status { aspherical, not_aspherical, unknown };
  enum class Certificate { dimension_one, finite_cover_vanishing };

  Status status;
  // Which argument backs an aspherical verdict.
  std::optional<Certificate> certificate;
  // Degrees whose cover homology was checked (finite_cover_vanishing only).
  std::vector<int> checked_degrees;
  // First degree with nonzero cover homology, and the module found there.
  int witness_degree = 0;
  std::optional<FpModule> witness;
  // Why the check could not decide.
  std::string reason;

  bool aspherical() const { return status == Status::aspherical; }
};

/**
 * Decides asphericity where the machine can: complexes of dimension <= 1
 * are aspherical outright, and when the fundamental group enumerates within
 * budget the universal cover's homology in degrees 1..dim settles the
 * question (vanishing is equivalent to asphericity for a simply connected
 * complex of that dimension). Anything else is unknown, never guessed.
 * Error("NotConnected") for disconnected input.
 */
AsphericityVerdict asphericity_check(const SimplicialComplex& x,
                                     const RingSpec& ring,
                                     Index budget = 10000);

// One vanishing test of a derived functor on a sample sheaf.
struct Condition3Entry {
  size_t sheaf;
  int degree;
  FpModule module;
  bool vanished;
};

// One comparison of group cohomology of a monodromy representation against
// sheaf cohomology of the corresponding local system. `scope` records
// whether the group side is honest group cohomology or only the cohomology
// of the presentation complex (Fox calculus in degree 2 for groups that did
// not enumerate).
struct Condition4Entry {
  size_t rep;
  int degree;
  FpModule group_side;
  FpModule sheaf_side;
  FoxScope scope;
  bool agree;
};

struct BNReport {
  AsphericityVerdict asphericity;
  // Set when the derived-functor condition could not be evaluated.
  std::optional<std::string> condition3_skipped;
  std::vector<Condition3Entry> condition3;
  std::vector<Condition4Entry> condition4;
  // No contradiction among the three conditions: an aspherical verdict with
  // a failing exact row, or a non-aspherical verdict with every exact row
  // passing, clears this flag.
  bool consistent;
};

/**
 * Runs the full equivalence on one complex: the asphericity verdict, the
 * vanishing of derived functors on the sample sheaves in degrees
 * 1..max_degree, and the group-vs-sheaf cohomology comparison for the
 * sample representations in degrees 0..max_degree. Groups that do not
 * enumerate get partial output: condition 3 is skipped and the group side
 * of condition 4 comes from Fox calculus through degree 2, with its degree-2
 * rows flagged. Samples must live over `ring` and on l's complex.
 */
BNReport bn_verdict(const EdgeLabeling& l, const RingSpec& ring,
                    const std::vector<Representation>& sample_reps,
                    const std::vector<CellularSheaf>& sample_sheaves,
                    int max_degree, Index budget = 10000,
                    Index size_cap = 20000);

/**
 * The E2 page H^p(G, R^q(f)) over a field, for a base with finite
 * fundamental group, together with the abutment H^n(X, f) and one row of
 * bookkeeping per total degree the window fully covers: the antidiagonal
 * dimension sum always dominates the abutment dimension, with equality
 * exactly when nothing dies on later pages.
 */
struct E2Page {
  int pmax = 0;
  int qmax = 0;
  std::vector<std::vector<FpModule>> entries;  // entries[p][q]
  std::vector<FpModule> abutment;              // degree n = 0..pmax+qmax

  struct Check {
    int degree;
    Index entry_sum;
    Index abutment_dim;
    bool dominates;  // entry_sum >= abutment_dim
    bool collapsed;  // entry_sum == abutment_dim
  };
  std::vector<Check> checks;
};

// Error("NonFieldRing") over Z; Error("InfiniteOrUnknownGroup") when the
// group does not enumerate within budget.
E2Page e2_page(const EdgeLabeling& l, const CellularSheaf& f, int pmax,
               int qmax, Index budget = 10000, Index size_cap = 20000);

}  // namespace sheafbn
