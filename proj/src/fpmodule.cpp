#include "sheafbn/fpmodule.hpp"

#include "sheafbn/errors.hpp"

namespace sheafbn {

FpModule::FpModule(const RingSpec& ring, Index free_rank,
                   std::vector<Int> torsion)
    : ring_(ring), free_rank_(free_rank), torsion_(std::move(torsion)) {
  require(free_rank_ >= 0, "BadModule", "negative free rank");
  if (ring_.is_field())
    require(torsion_.empty(), "BadModule", "torsion over a field");
  for (size_t i = 0; i < torsion_.size(); ++i) {
    require(torsion_[i] > 1, "BadModule",
            "invariant factor must exceed 1, got " + torsion_[i].get_str());
    if (i > 0)
      require(torsion_[i] % torsion_[i - 1] == 0, "BadModule",
              "invariant factors must form a divisibility chain");
  }
}

std::string FpModule::to_string() const {
  if (is_zero()) return "0";
  std::string free_name;
  switch (ring_.kind()) {
    case RingSpec::Kind::integers:
      free_name = "Z";
      break;
    case RingSpec::Kind::rationals:
      free_name = "Q";
      break;
    case RingSpec::Kind::prime_field:
      free_name = "(Z/" + ring_.modulus().get_str() + ")";
      break;
  }
  std::string out;
  if (free_rank_ == 1) {
    out = free_name;
  } else if (free_rank_ > 1) {
    out = free_name + "^" + std::to_string(free_rank_);
  }
  for (const Int& d : torsion_) {
    if (!out.empty()) out += " ⊕ ";
    out += "Z/" + d.get_str();
  }
  return out;
}

bool FpModule::operator==(const FpModule& other) const {
  return ring_ == other.ring_ && free_rank_ == other.free_rank_ &&
         torsion_ == other.torsion_;
}

bool modules_isomorphic(const FpModule& a, const FpModule& b) {
  require(a.ring() == b.ring(), "RingMismatch",
          a.ring().name() + " vs " + b.ring().name());
  return a == b;
}

}  // namespace sheafbn
