#include <stdexcept>

#include "uff/dplusm.hpp"

namespace uff::dplusm {

std::string QuadraticSurd::str() const {
  return a.get_str() + (sgn(b) < 0 ? " - " : " + ") + mpq_class(abs(b)).get_str() + "*sqrt(2)";
}

QuadraticSurd QuadraticSurd::operator*(const QuadraticSurd& o) const {
  return {a * o.a + 2 * b * o.b, a * o.b + b * o.a};
}

QuadraticSurd QuadraticSurd::inverse() const {
  mpq_class norm = a * a - 2 * b * b;
  if (norm == 0) throw std::domain_error("QuadraticSurd: zero has no inverse");
  return {a / norm, -b / norm};
}

bool same_rational_coset(const QuadraticSurd& u, const QuadraticSurd& v) {
  if ((u.a == 0 && u.b == 0) || (v.a == 0 && v.b == 0)) throw std::invalid_argument("same_rational_coset: zero");
  return (u * v.conjugate()).b == 0;
}

std::vector<QuadraticSurd> quadratic_twists(std::size_t count) {
  std::vector<QuadraticSurd> out;
  for (std::size_t j = 1; j <= count; ++j) out.push_back({1, static_cast<long>(j)});
  return out;
}

} // namespace uff::dplusm
