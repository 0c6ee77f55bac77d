#pragma once

#include <vector>

#include "sheafbn/cochain.hpp"
#include "sheafbn/fundgroup.hpp"
#include "sheafbn/localsys.hpp"

namespace sheafbn {

/**
 * A finite group made concrete: element indices 0..order-1 with a full
 * multiplication table and a representative word per element. Index 0 is the
 * identity. Obtained from a complete coset enumeration over the trivial
 * subgroup, where cosets are exactly the group elements.
 */
struct FiniteGroup {
  GroupPresentation presentation;
  Index order = 0;
  std::vector<std::vector<Index>> product;  // product[a][b] = index of a*b
  std::vector<Word> words;                  // shortest word per element

  Index inverse(Index a) const;
};

// Error("IncompleteTable") for partial tables, Error("NotTrivialSubgroupTable")
// when the table quotiented by a nontrivial subgroup.
FiniteGroup multiplication_table(const CosetTable& t);

// rho evaluated on every element's representative word, element order.
std::vector<Matrix> element_matrices(const FiniteGroup& g,
                                     const Representation& rho);

/**
 * The inhomogeneous bar cochain complex of G with coefficients in rho, up to
 * the given degree: C^n is one copy of the module per n-tuple of elements,
 * tuples ordered lexicographically with the first element most significant.
 * Any term larger than size_cap raises Error("SizeCapExceeded").
 */
CochainComplex bar_complex(const FiniteGroup& g, const Representation& rho,
                           int max_degree, Index size_cap = 20000);

// H^n(G; rho) computed from the bar complex through degree n+1.
FpModule group_cohomology(const FiniteGroup& g, const Representation& rho,
                          int n, Index size_cap = 20000);

enum class FoxScope {
  exact,                      // degrees 0 and 1: true group cohomology
  presentation_complex_only,  // degree 2: cohomology of the 2-complex
};

struct FoxCohomology {
  FpModule value;
  FoxScope scope;
};

/**
 * Cohomology of the presentation 2-complex with coefficients in rho, via Fox
 * derivatives. Works for infinite groups. Degrees 0 and 1 agree with group
 * cohomology for every presentation; degree 2 depends on the presentation
 * and is flagged accordingly.
 */
FoxCohomology fox_cohomology(const Representation& rho, int n);

}  // namespace sheafbn
