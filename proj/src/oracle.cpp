#include "capa/oracle.hpp"

#include <boost/math/constants/constants.hpp>

namespace capa {

Real to_real(const Int& n) { return Real(n); }

Real to_real(const Rat& q) {
  return Real(numerator(q)) / Real(denominator(q));
}

Real pi_real() { return boost::math::constants::pi<Real>(); }

Int round_real(const Real& x) {
  return round(x).convert_to<Int>();
}

Real oracle_jya(const Int& arc_thirds, const Radius& r) {
  const Real rr = to_real(r.thirds);
  return rr * sin(to_real(arc_thirds) / rr);
}

Real oracle_arc(const Int& jya_thirds, const Radius& r) {
  const Real rr = to_real(r.thirds);
  return rr * asin(to_real(jya_thirds) / rr);
}

}  // namespace capa
