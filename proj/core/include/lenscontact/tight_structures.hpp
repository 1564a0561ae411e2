#pragma once

// Tight contact structures on lens spaces as sign-decorated Farey geodesics
// from -p/q to 0, modulo shuffling signs inside continued-fraction blocks.

#include "lenscontact/farey_graph.hpp"
#include "lenscontact/lens_space.hpp"

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace lenscontact {

/// A geodesic -p/q = s_0, ..., s_n = 0 with one sign per decorated edge.
/// Edge (s_i, s_{i+1}) for 1 <= i <= n-2 is decorated; signs[i-1] is its sign.
struct DecoratedPath {
  FareyPath path;
  std::string signs;  // '+' or '-', size == vertices - 3

  std::size_t decorated_edges() const { return signs.size(); }
};

/// A maximal run of decorated edges whose signs may be permuted freely.
/// Edges k and k+1 of a run satisfy |s_{k} . s_{k+2}| = 2 on the path.
struct ShuffleBlock {
  std::size_t first = 0;   // index into DecoratedPath::signs
  std::size_t length = 0;
  std::size_t minus_count = 0;

  friend bool operator==(const ShuffleBlock&, const ShuffleBlock&) = default;
};

/// Normal form of a shuffle class: each block lists '+' before '-'.
struct ShuffleClass {
  DecoratedPath representative;
  std::vector<ShuffleBlock> blocks;

  const std::string& signs() const { return representative.signs; }
};

/// The geodesic from -p/q to 0; its last two vertices are -1 and 0.
FareyPath lens_geodesic(const LensSpace& lens);

/// Partition of the decorated edges of a lens geodesic into shuffle blocks.
std::vector<ShuffleBlock> shuffle_blocks(const FareyPath& path);

/// Validates a sign string for L(p,q) and returns its shuffle class.
/// Throws std::invalid_argument on a wrong length or characters other than
/// '+' and '-'.
ShuffleClass classify_signs(const LensSpace& lens, std::string_view signs);

/// One normal-form representative per isotopy class, deterministic order
/// (the all-plus class first).
std::vector<ShuffleClass> enumerate_tight(const LensSpace& lens);

/// |(r_0+1)...(r_n+1)| for -p/q = [r_0, ..., r_n].
Integer count_tight_lens(const LensSpace& lens);

/// |(r_0+1)...(r_{n-1}+1) r_n| for a solid torus with boundary slope p/q,
/// after shifting to q/(p+kq) with (p+kq)/q in [-1, 0).
/// Throws std::domain_error for an infinite slope.
Integer count_tight_solid(const ExtRat& slope);

/// Constant-sign classes are exactly the universally tight ones.
bool is_universally_tight(const ShuffleClass& ts);

/// The standard structures xi_std^+ (all '+') and xi_std^- (all '-'); a
/// single class when q = -1 (mod p).
std::vector<ShuffleClass> standard_structures(const LensSpace& lens);

}  // namespace lenscontact
