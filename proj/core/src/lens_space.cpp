#include "lenscontact/lens_space.hpp"

#include <boost/multiprecision/integer.hpp>

#include <stdexcept>
#include <utility>

namespace lenscontact {

LensSpace::LensSpace(Integer p, Integer q) : p_(std::move(p)), q_(std::move(q)) {
  if (!(p_ > q_ && q_ > 0) || boost::multiprecision::gcd(p_, q_) != 1) {
    throw std::domain_error("lens space L(p,q) needs coprime p > q > 0, got (" + p_.str() + "," +
                            q_.str() + ")");
  }
}

bool LensSpace::q_is_minus_one() const { return (q_ + 1) % p_ == 0; }

bool LensSpace::q_is_one() const { return (q_ - 1) % p_ == 0; }

bool LensSpace::q_squared_is_one() const { return (q_ * q_ - 1) % p_ == 0; }

}  // namespace lenscontact
