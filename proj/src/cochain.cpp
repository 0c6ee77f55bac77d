#include "sheafbn/cochain.hpp"

#include <string>
#include <utility>

#include "sheafbn/errors.hpp"
#include "sheafbn/linalg.hpp"

namespace sheafbn {

CochainComplex::CochainComplex(RingSpec ring, int min_degree,
                               std::vector<Index> dims,
                               std::vector<Matrix> diffs)
    : ring_(std::move(ring)),
      min_(min_degree),
      dims_(std::move(dims)),
      diffs_(std::move(diffs)) {
  require(!dims_.empty(), "NotAComplex", "complex needs at least one degree");
  for (Index d : dims_)
    require(d >= 0, "NotAComplex", "negative dimension");
  require(diffs_.size() + 1 == dims_.size(), "NotAComplex",
          "expected one differential per consecutive pair of degrees");
  for (size_t k = 0; k < diffs_.size(); ++k) {
    const Matrix& d = diffs_[k];
    require(d.ring() == ring_, "RingMismatch", "differential ring mismatch");
    require(d.rows() == dims_[k + 1] && d.cols() == dims_[k], "NotAComplex",
            "differential shape mismatch at degree " +
                std::to_string(min_ + static_cast<int>(k)));
  }
  for (size_t k = 0; k + 1 < diffs_.size(); ++k)
    require((diffs_[k + 1] * diffs_[k]).is_zero(), "NotAComplex",
            "differentials do not compose to zero at degree " +
                std::to_string(min_ + static_cast<int>(k)));
}

Index CochainComplex::dim(int n) const {
  if (n < min_ || n > max_degree()) return 0;
  return dims_[static_cast<size_t>(n - min_)];
}

Matrix CochainComplex::differential(int n) const {
  if (n >= min_ && n < max_degree())
    return diffs_[static_cast<size_t>(n - min_)];
  return Matrix(ring_, dim(n + 1), dim(n));
}

FpModule cohomology_at(const CochainComplex& complex, int n) {
  require(n >= complex.min_degree() - 1 && n <= complex.max_degree() + 1,
          "DegreeOutOfRange",
          "degree " + std::to_string(n) + " outside complex support");
  return subquotient(complex.differential(n), complex.differential(n - 1));
}

}  // namespace sheafbn
