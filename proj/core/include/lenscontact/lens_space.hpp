#pragma once

#include "lenscontact/rational.hpp"

#include <string>

namespace lenscontact {

/// L(p, q) = -p/q surgery on the unknot, with coprime p > q > 0.
class LensSpace {
 public:
  // Throws std::domain_error unless p > q > 0 are coprime.
  LensSpace(Integer p, Integer q);

  const Integer& p() const { return p_; }
  const Integer& q() const { return q_; }

  // q and its square reduced into [0, p).
  bool q_is_minus_one() const;
  bool q_is_one() const;
  bool q_squared_is_one() const;

  // -p/q, the starting slope of every decorated path.
  ExtRat meridian_slope() const { return ExtRat(-p_, q_); }

  std::string str() const { return "L(" + p_.str() + "," + q_.str() + ")"; }

 private:
  Integer p_;
  Integer q_;
};

}  // namespace lenscontact
