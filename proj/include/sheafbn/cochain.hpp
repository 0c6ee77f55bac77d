#pragma once

#include <vector>

#include "sheafbn/fpmodule.hpp"
#include "sheafbn/matrix.hpp"

namespace sheafbn {

/**
 * A bounded cochain complex of finitely generated free modules.
 *
 * Degrees run from `min_degree` to `min_degree + dims.size() - 1`; the
 * differential in degree n maps the degree-n term to the degree-(n+1) term,
 * so `diffs[k]` has shape dims[k+1] x dims[k]. Construction checks the
 * shapes, the ring tags, and that consecutive differentials compose to
 * zero, throwing Error("NotAComplex") otherwise.
 */
class CochainComplex {
 public:
  CochainComplex(RingSpec ring, int min_degree, std::vector<Index> dims,
                 std::vector<Matrix> diffs);

  const RingSpec& ring() const { return ring_; }
  int min_degree() const { return min_; }
  int max_degree() const { return min_ + static_cast<int>(dims_.size()) - 1; }

  // Dimension of the degree-n term; zero outside the stored range.
  Index dim(int n) const;

  // The differential out of degree n, as a dim(n+1) x dim(n) matrix.
  // Degenerate (zero-sized) outside the stored range.
  Matrix differential(int n) const;

 private:
  RingSpec ring_;
  int min_;
  std::vector<Index> dims_;
  std::vector<Matrix> diffs_;
};

// Cohomology of the complex in degree n, as ker/im in canonical form.
// Degrees more than one step outside the support raise
// Error("DegreeOutOfRange"); the two adjacent degrees report zero modules.
FpModule cohomology_at(const CochainComplex& complex, int n);

}  // namespace sheafbn
