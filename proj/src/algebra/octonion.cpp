#include "mavals/algebra/octonion.hpp"

namespace mav {

Octonion oct_mul(const Octonion& p, const Octonion& q) {
  const Quaternion a = p.low(), b = p.high();
  const Quaternion c = q.low(), d = q.high();
  return Octonion::from_pair(a * c - d.conj() * b, d * a + b * c.conj());
}

}  // namespace mav
