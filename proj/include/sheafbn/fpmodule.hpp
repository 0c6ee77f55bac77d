#pragma once

#include <string>
#include <vector>

#include "sheafbn/ring.hpp"

namespace sheafbn {

// Isomorphism class of a finitely presented module in canonical form: a free
// rank plus invariant factors d_1 | d_2 | ... with every d_i > 1. Over a field
// the torsion list is empty and the class is just a dimension.
class FpModule {
 public:
  FpModule(const RingSpec& ring, Index free_rank, std::vector<Int> torsion);

  static FpModule zero(const RingSpec& ring) { return FpModule(ring, 0, {}); }

  const RingSpec& ring() const { return ring_; }
  Index free_rank() const { return free_rank_; }
  const std::vector<Int>& torsion() const { return torsion_; }

  bool is_zero() const { return free_rank_ == 0 && torsion_.empty(); }

  // "Z^2 ⊕ Z/2 ⊕ Z/6", "Q^3", "(Z/5)^2", or "0".
  std::string to_string() const;

  bool operator==(const FpModule& other) const;
  bool operator!=(const FpModule& other) const { return !(*this == other); }

 private:
  RingSpec ring_;
  Index free_rank_;
  std::vector<Int> torsion_;
};

// Equality of canonical forms; rejects comparisons across rings.
bool modules_isomorphic(const FpModule& a, const FpModule& b);

}  // namespace sheafbn
