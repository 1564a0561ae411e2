#include "lenscontact/farey_graph.hpp"

#include <stdexcept>

namespace lenscontact {
namespace {

// Ceiling and floor of n/d for any nonzero d.
Integer ceil_div(const Integer& n, const Integer& d) {
  Integer q = n / d;
  if ((n % d != 0) && ((n < 0) == (d < 0))) ++q;
  return q;
}

Integer floor_div_any(const Integer& n, const Integer& d) {
  Integer q = n / d;
  if ((n % d != 0) && ((n < 0) != (d < 0))) --q;
  return q;
}

}  // namespace

bool in_arc(const ExtRat& x, const ExtRat& from, const ExtRat& to) {
  if (from == to) throw std::domain_error("degenerate arc: endpoints coincide");
  const int fx = compare_linear(from, x);
  const int xt = compare_linear(x, to);
  const int tf = compare_linear(to, from);
  // Strict cyclic order (from, x, to) on the circle cut at infinity.
  return (fx < 0 && xt < 0) || (xt < 0 && tf < 0) || (tf < 0 && fx < 0);
}

bool is_farey_edge(const ExtRat& a, const ExtRat& b) {
  const Integer m = farey_mul(a, b);
  return m == 1 || m == -1;
}

ExtRat farthest_neighbor(const ExtRat& s, const ExtRat& bound, Rotation direction) {
  if (s == bound) throw std::domain_error("farthest_neighbor: s equals bound");
  const Integer& a = s.num();
  const Integer& b = s.den();
  // v0 = (c0, d0) with det(v0, s) = c0*b - d0*a = 1.
  Integer x, y;
  extended_gcd(a, b, x, y);
  const Integer c0 = y;
  const Integer d0 = -x;
  // bound ~ v0 + t*s with t = det(v0, bound) / det(bound, s). The neighbors
  // of s are v0 + k*s at integer k, and increasing t runs counterclockwise.
  const Integer beta = c0 * bound.den() - d0 * bound.num();
  const Integer alpha = farey_mul(bound, s);
  const Integer k = direction == Rotation::kClockwise ? ceil_div(beta, alpha)
                                                      : floor_div_any(beta, alpha);
  return ExtRat(c0 + k * a, d0 + k * b);
}

FareyPath geodesic(const ExtRat& from, const ExtRat& to) {
  if (from == to) throw std::domain_error("geodesic: endpoints coincide");
  FareyPath path;
  path.vertices.push_back(from);
  ExtRat current = from;
  while (!(current == to)) {
    current = farthest_neighbor(current, to, Rotation::kClockwise);
    path.vertices.push_back(current);
  }
  return path;
}

}  // namespace lenscontact
