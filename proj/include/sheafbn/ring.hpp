#pragma once

#include <string>

#include "sheafbn/scalars.hpp"

namespace sheafbn {

// Coefficient ring: the integers, the rationals, or a prime field Z/p.
// A value of this type tags every matrix, module, and complex in the library.
class RingSpec {
 public:
  enum class Kind { integers, rationals, prime_field };

  static RingSpec integers() { return RingSpec(Kind::integers, 0); }
  static RingSpec rationals() { return RingSpec(Kind::rationals, 0); }
  static RingSpec prime_field(const Int& p);

  // Accepts "Z", "Q", or "Z/p" with p a prime literal.
  static RingSpec parse(const std::string& text);

  Kind kind() const { return kind_; }
  bool is_field() const { return kind_ != Kind::integers; }
  const Int& modulus() const;

  std::string name() const;

  bool operator==(const RingSpec& other) const {
    return kind_ == other.kind_ && p_ == other.p_;
  }
  bool operator!=(const RingSpec& other) const { return !(*this == other); }

 private:
  RingSpec(Kind kind, Int p) : kind_(kind), p_(std::move(p)) {}

  Kind kind_;
  Int p_;
};

}  // namespace sheafbn
