#include "sheafbn/ring.hpp"

#include "sheafbn/errors.hpp"

namespace sheafbn {

RingSpec RingSpec::prime_field(const Int& p) {
  require(p > 1, "NotPrime", "modulus must exceed 1, got " + p.get_str());
  if (mpz_probab_prime_p(p.get_mpz_t(), 32) == 0)
    fail("NotPrime", p.get_str() + " is not prime");
  return RingSpec(Kind::prime_field, p);
}

RingSpec RingSpec::parse(const std::string& text) {
  if (text == "Z") return integers();
  if (text == "Q") return rationals();
  if (text.rfind("Z/", 0) == 0 && text.size() > 2) {
    const std::string digits = text.substr(2);
    if (digits.find_first_not_of("0123456789") == std::string::npos)
      return prime_field(Int(digits));
  }
  fail("BadRing", "expected Z, Q, or Z/p; got \"" + text + "\"");
}

const Int& RingSpec::modulus() const {
  require(kind_ == Kind::prime_field, "BadRing", "ring has no modulus");
  return p_;
}

std::string RingSpec::name() const {
  switch (kind_) {
    case Kind::integers:
      return "Z";
    case Kind::rationals:
      return "Q";
    case Kind::prime_field:
      return "Z/" + p_.get_str();
  }
  return "?";
}

}  // namespace sheafbn
