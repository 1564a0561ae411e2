#include "lenscontact/farey_oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace lenscontact {
namespace {

struct Vertex {
  std::int64_t num;
  std::int64_t den;  // 0 only for infinity (num = 1)
  bool operator==(const Vertex&) const = default;
};

struct VertexHash {
  std::size_t operator()(const Vertex& v) const noexcept {
    const auto h1 = std::hash<std::int64_t>{}(v.num);
    const auto h2 = std::hash<std::int64_t>{}(v.den);
    return h1 ^ (h2 + 0x9e3779b97f4a7c15ULL + (h1 << 6) + (h1 >> 2));
  }
};

std::int64_t to_i64(const Integer& x) {
  if (x > std::numeric_limits<std::int64_t>::max() / 4 ||
      x < std::numeric_limits<std::int64_t>::min() / 4) {
    throw std::out_of_range("bfs_oracle: endpoint exceeds 64-bit range");
  }
  return static_cast<std::int64_t>(x);
}

// Real order with infinity on top.
int cmp(const Vertex& x, const Vertex& y) {
  if (x.den == 0 || y.den == 0) return (x.den == 0) - (y.den == 0);
  const __int128 l = static_cast<__int128>(x.num) * y.den;
  const __int128 r = static_cast<__int128>(y.num) * x.den;
  return l < r ? -1 : (l > r ? 1 : 0);
}

bool strictly_between_cw(const Vertex& from, const Vertex& x, const Vertex& to) {
  const int fx = cmp(from, x), xt = cmp(x, to), tf = cmp(to, from);
  return (fx < 0 && xt < 0) || (xt < 0 && tf < 0) || (tf < 0 && fx < 0);
}

bool adjacent(const Vertex& x, const Vertex& y) {
  const __int128 det = static_cast<__int128>(x.num) * y.den - static_cast<__int128>(x.den) * y.num;
  return det == 1 || det == -1;
}

std::int64_t floor_div64(std::int64_t n, std::int64_t d) {
  std::int64_t q = n / d;
  if ((n % d != 0) && ((n < 0) != (d < 0))) --q;
  return q;
}

std::int64_t mod_inverse(std::int64_t a, std::int64_t m) {
  std::int64_t old_r = ((a % m) + m) % m, r = m, old_s = 1, s = 0;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    std::int64_t t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_s - q * s;
    old_s = s;
    s = t;
  }
  return ((old_s % m) + m) % m;
}

}  // namespace

OracleResult bfs_oracle(const ExtRat& from_q, const ExtRat& to_q, int den_bound) {
  if (from_q == to_q) throw std::domain_error("bfs_oracle: endpoints coincide");
  if (den_bound < 1) throw std::domain_error("bfs_oracle: den_bound must be positive");
  const Vertex from{to_i64(from_q.num()), to_i64(from_q.den())};
  const Vertex to{to_i64(to_q.num()), to_i64(to_q.den())};
  const std::int64_t bound = den_bound;
  const Vertex inf{1, 0};

  // Collect the vertex set.
  std::vector<Vertex> vertices{from, to};
  const bool finite_interval = from.den != 0 && to.den != 0 && cmp(from, to) < 0;
  const std::int64_t height =
      std::max<std::int64_t>({1, std::abs(from.num), std::abs(to.num)});
  const std::int64_t num_bound = bound * (height + 1);
  for (std::int64_t b = 1; b <= bound; ++b) {
    std::int64_t lo = -num_bound, hi = num_bound;
    if (finite_interval) {
      lo = floor_div64(from.num * b, from.den);
      hi = floor_div64(to.num * b, to.den) + 1;
    }
    for (std::int64_t a = lo; a <= hi; ++a) {
      if (std::gcd(a, b) != 1) continue;
      const Vertex v{a, b};
      if (strictly_between_cw(from, v, to)) vertices.push_back(v);
    }
  }
  if (strictly_between_cw(from, inf, to)) vertices.push_back(inf);

  std::unordered_map<Vertex, std::size_t, VertexHash> index;
  index.reserve(vertices.size() * 2);
  std::vector<std::size_t> integer_vertices;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    index.emplace(vertices[i], i);
    if (vertices[i].den == 1) integer_vertices.push_back(i);
  }
  const std::size_t source = 0, target = 1;

  constexpr std::size_t kUnseen = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> dist(vertices.size(), kUnseen), parent(vertices.size(), kUnseen);
  std::vector<std::uint64_t> count(vertices.size(), 0);
  dist[source] = 0;
  count[source] = 1;
  std::deque<std::size_t> queue{source};

  std::vector<std::size_t> nbrs;
  auto collect_neighbors = [&](const Vertex& v) {
    nbrs.clear();
    auto consider = [&](const Vertex& w) {
      auto it = index.find(w);
      if (it != index.end()) nbrs.push_back(it->second);
    };
    if (v.den == 0) {
      for (std::size_t i : integer_vertices) nbrs.push_back(i);
    } else if (v.den == 1) {
      consider(inf);
      for (std::int64_t d = 1; d <= bound; ++d) {
        consider({v.num * d - 1, d});
        consider({v.num * d + 1, d});
      }
    } else {
      const std::int64_t inv = mod_inverse(v.num, v.den);
      for (std::int64_t sign : {1, -1}) {
        // a*d = sign (mod b)  =>  c = (a*d - sign) / b
        std::int64_t d = sign == 1 ? inv : (v.den - inv) % v.den;
        for (; d <= bound; d += v.den) {
          consider({(v.num * d - sign) / v.den, d});
        }
      }
    }
    if (adjacent(v, to)) nbrs.push_back(target);
    std::sort(nbrs.begin(), nbrs.end());
    nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
  };

  while (!queue.empty()) {
    const std::size_t u = queue.front();
    queue.pop_front();
    if (dist[target] != kUnseen && dist[u] >= dist[target]) break;
    collect_neighbors(vertices[u]);
    for (std::size_t w : nbrs) {
      if (dist[w] == kUnseen) {
        dist[w] = dist[u] + 1;
        parent[w] = u;
        count[w] = count[u];
        queue.push_back(w);
      } else if (dist[w] == dist[u] + 1) {
        const std::uint64_t sum = count[w] + count[u];
        count[w] = sum < count[w] ? std::numeric_limits<std::uint64_t>::max() : sum;
      }
    }
  }
  if (dist[target] == kUnseen) {
    throw std::domain_error("bfs_oracle: target unreachable; den_bound too small");
  }

  OracleResult result;
  result.shortest_path_count = count[target];
  std::vector<ExtRat> reversed;
  for (std::size_t v = target; v != kUnseen; v = parent[v]) {
    reversed.emplace_back(vertices[v].num, vertices[v].den);
  }
  result.path.vertices.assign(reversed.rbegin(), reversed.rend());
  return result;
}

}  // namespace lenscontact
