#include "lenscontact/tight_structures.hpp"

#include <algorithm>
#include <stdexcept>

namespace lenscontact {
namespace {

Integer abs_int(const Integer& x) { return x < 0 ? Integer(-x) : x; }

std::string normal_signs(const std::vector<ShuffleBlock>& blocks, std::size_t size) {
  std::string signs(size, '+');
  for (const ShuffleBlock& b : blocks) {
    std::fill_n(signs.begin() + static_cast<std::ptrdiff_t>(b.first + b.length - b.minus_count),
                b.minus_count, '-');
  }
  return signs;
}

ShuffleClass make_class(const FareyPath& path, std::vector<ShuffleBlock> blocks) {
  ShuffleClass ts;
  ts.representative.path = path;
  ts.representative.signs = normal_signs(blocks, path.vertices.size() - 3);
  ts.blocks = std::move(blocks);
  return ts;
}

}  // namespace

FareyPath lens_geodesic(const LensSpace& lens) { return geodesic(lens.meridian_slope(), ExtRat(0)); }

std::vector<ShuffleBlock> shuffle_blocks(const FareyPath& path) {
  const auto& v = path.vertices;
  if (v.size() < 3) throw std::invalid_argument("decorated path needs at least two edges");
  const std::size_t decorated = v.size() - 3;
  std::vector<ShuffleBlock> blocks;
  for (std::size_t k = 0; k < decorated; ++k) {
    // Decorated edge k runs from v[k+1] to v[k+2].
    const bool joins_previous = k > 0 && abs_int(farey_mul(v[k], v[k + 2])) == 2;
    if (joins_previous) {
      ++blocks.back().length;
    } else {
      blocks.push_back({k, 1, 0});
    }
  }
  return blocks;
}

ShuffleClass classify_signs(const LensSpace& lens, std::string_view signs) {
  const FareyPath path = lens_geodesic(lens);
  const std::size_t expected = path.vertices.size() - 3;
  if (signs.size() != expected) {
    throw std::invalid_argument("sign string for " + lens.str() + " must have " +
                                std::to_string(expected) + " characters, got " +
                                std::to_string(signs.size()));
  }
  if (signs.find_first_not_of("+-") != std::string_view::npos) {
    throw std::invalid_argument("sign string may only contain '+' and '-'");
  }
  std::vector<ShuffleBlock> blocks = shuffle_blocks(path);
  for (ShuffleBlock& b : blocks) {
    b.minus_count = static_cast<std::size_t>(
        std::count(signs.begin() + static_cast<std::ptrdiff_t>(b.first),
                   signs.begin() + static_cast<std::ptrdiff_t>(b.first + b.length), '-'));
  }
  return make_class(path, std::move(blocks));
}

std::vector<ShuffleClass> enumerate_tight(const LensSpace& lens) {
  const FareyPath path = lens_geodesic(lens);
  std::vector<ShuffleBlock> blocks = shuffle_blocks(path);
  std::vector<ShuffleClass> classes;
  // Mixed-radix counter over the minus count of every block.
  while (true) {
    classes.push_back(make_class(path, blocks));
    std::size_t i = 0;
    for (; i < blocks.size(); ++i) {
      if (blocks[i].minus_count < blocks[i].length) {
        ++blocks[i].minus_count;
        break;
      }
      blocks[i].minus_count = 0;
    }
    if (i == blocks.size()) break;
  }
  return classes;
}

Integer count_tight_lens(const LensSpace& lens) {
  Integer product = 1;
  for (const Integer& r : neg_cf(lens.meridian_slope(), CfForm::kLens).coeffs) product *= r + 1;
  return abs_int(product);
}

Integer count_tight_solid(const ExtRat& slope) {
  if (slope.is_infinite()) throw std::domain_error("solid torus count needs a finite slope");
  const Integer& p = slope.num();
  const Integer& q = slope.den();
  // Unique k with (p + k q)/q in [-1, 0): p + k q in [-q, 0).
  const Integer k = floor_div(-p - 1, q);
  const NegCF cf = neg_cf(ExtRat(q, p + k * q), CfForm::kSolid);
  Integer product = 1;
  for (std::size_t i = 0; i + 1 < cf.coeffs.size(); ++i) product *= cf.coeffs[i] + 1;
  product *= cf.coeffs.back();
  return abs_int(product);
}

bool is_universally_tight(const ShuffleClass& ts) {
  const std::string& s = ts.signs();
  return s.find('+') == std::string::npos || s.find('-') == std::string::npos;
}

std::vector<ShuffleClass> standard_structures(const LensSpace& lens) {
  const FareyPath path = lens_geodesic(lens);
  const std::size_t decorated = path.vertices.size() - 3;
  std::vector<ShuffleClass> result{classify_signs(lens, std::string(decorated, '+'))};
  if (decorated > 0) result.push_back(classify_signs(lens, std::string(decorated, '-')));
  return result;
}

}  // namespace lenscontact
