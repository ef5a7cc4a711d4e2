#pragma once

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "patdyn/markov_graph.hpp"
#include "patdyn/pattern.hpp"
#include "patdyn/plmap.hpp"
#include "patdyn/rational.hpp"

namespace patdyn {

// A closed cycle of signed arrows: vertices[i] -> vertices[(i+1) mod m] must
// all be arrows of the graph; signs[i] is the sign of the i-th arrow (always
// the sign of its source vertex).
struct Loop {
  std::vector<int> vertices;
  std::vector<Sign> signs;

  int length() const { return static_cast<int>(vertices.size()); }

  friend bool operator==(const Loop& a, const Loop& b) { return a.vertices == b.vertices; }
  friend bool operator<(const Loop& a, const Loop& b) {
    if (a.vertices.size() != b.vertices.size()) return a.vertices.size() < b.vertices.size();
    return a.vertices < b.vertices;
  }
};

// Validates closedness against the graph and fills in the arrow signs.
inline Loop make_loop(const SignedGraph& g, std::vector<int> vertices) {
  if (vertices.empty()) throw std::invalid_argument("empty loop");
  const int m = static_cast<int>(vertices.size());
  Loop loop;
  loop.signs.reserve(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    const int from = vertices[static_cast<std::size_t>(i)];
    const int to = vertices[static_cast<std::size_t>((i + 1) % m)];
    if (!g.has_arrow(from, to)) {
      throw std::invalid_argument("BrokenChain: no arrow " + std::to_string(from) + " -> " +
                                  std::to_string(to));
    }
    loop.signs.push_back(g.vertex_sign(from));
  }
  loop.vertices = std::move(vertices);
  return loop;
}

// Rotation by i: the loop read starting from its i-th vertex.
inline Loop shift(const Loop& loop, int i) {
  const int m = loop.length();
  Loop out;
  out.vertices.reserve(static_cast<std::size_t>(m));
  out.signs.reserve(static_cast<std::size_t>(m));
  i %= m;
  if (i < 0) i += m;
  for (int t = 0; t < m; ++t) {
    out.vertices.push_back(loop.vertices[static_cast<std::size_t>((t + i) % m)]);
    out.signs.push_back(loop.signs[static_cast<std::size_t>((t + i) % m)]);
  }
  return out;
}

// Product of the arrow signs.
inline Sign loop_sign(const Loop& loop) {
  Sign s = Sign::Plus;
  for (Sign a : loop.signs) s = s * a;
  return s;
}

// A loop is simple when it is not the k-fold repetition of a shorter loop.
inline bool is_simple(const Loop& loop) {
  const int m = loop.length();
  for (int d = 1; d < m; ++d) {
    if (m % d != 0) continue;
    bool repeats = true;
    for (int t = 0; t < m && repeats; ++t) {
      repeats = loop.vertices[static_cast<std::size_t>(t)] ==
                loop.vertices[static_cast<std::size_t>((t + d) % m)];
    }
    if (repeats) return false;
  }
  return true;
}

// Lexicographically least rotation of the vertex sequence.
inline Loop canonical_rotation(const Loop& loop) {
  Loop best = loop;
  for (int i = 1; i < loop.length(); ++i) {
    Loop cand = shift(loop, i);
    if (cand.vertices < best.vertices) best = std::move(cand);
  }
  return best;
}

enum class LoopOrder { Less, Equal, Greater };

// Lexicographic order on finite paths sharing a first divergence index: at
// the divergence the vertex order decides, reversed when the sign of the
// common prefix is negative. Identical paths have no divergence to compare.
inline LoopOrder lex_compare_paths(const std::vector<int>& va, const std::vector<Sign>& sa,
                                   const std::vector<int>& vb, const std::vector<Sign>& sb) {
  const std::size_t upto = std::min(va.size(), vb.size());
  Sign prefix = Sign::Plus;
  for (std::size_t k = 0; k < upto; ++k) {
    if (va[k] != vb[k]) {
      const bool a_less = va[k] < vb[k];
      return (a_less == (prefix == Sign::Plus)) ? LoopOrder::Less : LoopOrder::Greater;
    }
    if (k < sa.size() && k < sb.size()) prefix = prefix * sa[k];
  }
  throw std::invalid_argument("NoDivergence: paths share no divergence index");
}

// Order on loops as the infinite paths alpha^inf. Two eventually periodic
// words of periods p and q that agree on p+q letters agree everywhere.
inline LoopOrder lex_compare(const Loop& a, const Loop& b) {
  const int ma = a.length();
  const int mb = b.length();
  Sign prefix = Sign::Plus;
  for (int k = 0; k < ma + mb; ++k) {
    const int va = a.vertices[static_cast<std::size_t>(k % ma)];
    const int vb = b.vertices[static_cast<std::size_t>(k % mb)];
    if (va != vb) {
      const bool a_less = va < vb;
      return (a_less == (prefix == Sign::Plus)) ? LoopOrder::Less : LoopOrder::Greater;
    }
    prefix = prefix * a.signs[static_cast<std::size_t>(k % ma)];
  }
  return LoopOrder::Equal;
}

// Visits every loop of length exactly m once per rotation class, in
// canonical rotation (least vertex sequence). The visitor returns false to
// stop the enumeration early.
inline void for_each_loop(const SignedGraph& g, int m,
                          const std::function<bool(const Loop&)>& visit) {
  if (m < 1) throw std::invalid_argument("loop length must be >= 1");
  const int n = g.vertex_count();
  std::set<std::vector<int>> seen;
  std::vector<int> walk;
  bool stop = false;

  // Walks never dip below their start vertex, so each rotation class is
  // produced from its minimal vertex; duplicates (minimal vertex repeated)
  // are filtered through the canonical form.
  const auto dfs = [&](auto&& self, int start, int at, int depth) -> void {
    if (stop) return;
    if (depth == m) {
      if (!g.has_arrow(at, start)) return;
      Loop loop = canonical_rotation(make_loop(g, walk));
      if (seen.insert(loop.vertices).second) {
        if (!visit(loop)) stop = true;
      }
      return;
    }
    for (int j : g.targets(at)) {
      if (j < start || stop) continue;
      walk.push_back(j);
      self(self, start, j, depth + 1);
      walk.pop_back();
    }
  };

  for (int start = 1; start <= n && !stop; ++start) {
    walk.assign(1, start);
    dfs(dfs, start, start, 1);
  }
}

// All loops of length exactly m, canonical rotations, sorted by vertex
// sequence. Deterministic.
inline std::vector<Loop> enumerate_loops(const SignedGraph& g, int m) {
  std::vector<Loop> out;
  for_each_loop(g, m, [&out](const Loop& loop) {
    out.push_back(loop);
    return true;
  });
  std::sort(out.begin(), out.end());
  return out;
}

// An exact periodic orbit extracted from a loop: the unique (or, for an
// identity branch, representative) fixed point of the branch of f^m that
// follows the loop's basic intervals.
struct LoopOrbit {
  Rational base_point;
  std::vector<Rational> points;  // f^i(base_point), i = 0..m-1
  int least_period = 0;
  Pattern pattern;
};

// A loop whose branch fixed point collapses: it lands on the marked orbit
// (so its pattern is the pattern of the map itself), the solution set is
// empty, or the honest least period falls short of the loop length.
struct Degenerate {
  std::string reason;
};

using LoopOrbitResult = std::variant<LoopOrbit, Degenerate>;

inline LoopOrbitResult loop_orbit(const PLMap& f, const Loop& alpha) {
  const int m = alpha.length();
  if (!covers(f.pattern(), alpha.vertices.back(), alpha.vertices.front())) {
    throw std::invalid_argument("BrokenChain: loop does not close");
  }
  const ChainBranch branch = compose_along_chain(f, alpha.vertices);

  Rational base;
  const FixedPointResult fp = fixed_point(branch.map, branch.domain);
  if (std::holds_alternative<NoFixedPoint>(fp)) {
    return Degenerate{"no fixed point of the branch inside its domain"};
  }
  if (std::holds_alternative<WholeInterval>(fp)) {
    // Identity branch: the whole domain is fixed under f^m. The midpoint is
    // the representative; its least period is computed honestly below, so a
    // collapsed loop never fabricates an orbit.
    base = branch.domain.midpoint();
  } else {
    base = std::get<UniquePoint>(fp).x;
  }

  if (is_integer(base)) {
    return Degenerate{"branch fixed point " + rational_string(base) +
                      " lies on the marked orbit"};
  }

  std::vector<Rational> points;
  points.reserve(static_cast<std::size_t>(m));
  Rational x = base;
  for (int i = 0; i < m; ++i) {
    if (!(Rational(alpha.vertices[static_cast<std::size_t>(i)]) <= x &&
          x <= Rational(alpha.vertices[static_cast<std::size_t>(i)] + 1))) {
      throw std::logic_error("orbit point escaped its basic interval");
    }
    points.push_back(x);
    x = f.eval(x);
  }
  if (x != base) throw std::logic_error("branch fixed point is not f^m-periodic");

  int least = m;
  for (int d = 1; d < m; ++d) {
    if (m % d != 0) continue;
    if (points[static_cast<std::size_t>(d)] == base) {
      least = d;
      break;
    }
  }
  if (least < m) {
    return Degenerate{"least period " + std::to_string(least) + " below loop length " +
                      std::to_string(m)};
  }

  // Spatial sort gives the pattern of the extracted orbit.
  std::vector<int> idx(static_cast<std::size_t>(m));
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(),
            [&points](int i, int j) {
              return points[static_cast<std::size_t>(i)] < points[static_cast<std::size_t>(j)];
            });
  std::vector<int> rank(static_cast<std::size_t>(m));
  for (int r = 0; r < m; ++r) rank[static_cast<std::size_t>(idx[static_cast<std::size_t>(r)])] = r + 1;
  std::vector<int> images(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    images[static_cast<std::size_t>(rank[static_cast<std::size_t>(i)] - 1)] =
        rank[static_cast<std::size_t>((i + 1) % m)];
  }

  LoopOrbit orbit{std::move(base), std::move(points), m, Pattern::validate(std::move(images))};
  return orbit;
}

// The pattern carried by a simple loop, when its orbit does not collapse.
// Two independent routes must agree: the spatial sort of the exact orbit,
// and the lexicographic sort of the loop's shifts (the i-th orbit point is
// associated with the i-th shift, and point order matches shift order).
inline std::variant<Pattern, Degenerate> induced_pattern(const PLMap& f, const Loop& alpha) {
  if (!is_simple(alpha)) throw std::invalid_argument("induced pattern needs a simple loop");
  LoopOrbitResult res = loop_orbit(f, alpha);
  if (std::holds_alternative<Degenerate>(res)) return std::get<Degenerate>(std::move(res));
  const LoopOrbit& orbit = std::get<LoopOrbit>(res);

  const int m = alpha.length();
  std::vector<Loop> shifts;
  shifts.reserve(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) shifts.push_back(shift(alpha, i));
  std::vector<int> idx(static_cast<std::size_t>(m));
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&shifts](int i, int j) {
    return lex_compare(shifts[static_cast<std::size_t>(i)],
                       shifts[static_cast<std::size_t>(j)]) == LoopOrder::Less;
  });
  std::vector<int> rank(static_cast<std::size_t>(m));
  for (int r = 0; r < m; ++r) rank[static_cast<std::size_t>(idx[static_cast<std::size_t>(r)])] = r + 1;
  std::vector<int> images(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    images[static_cast<std::size_t>(rank[static_cast<std::size_t>(i)] - 1)] =
        rank[static_cast<std::size_t>((i + 1) % m)];
  }
  const Pattern by_shifts = Pattern::validate(std::move(images));
  if (by_shifts != orbit.pattern) {
    throw std::logic_error("shift order and orbit order disagree on the induced pattern");
  }
  return orbit.pattern;
}

}  // namespace patdyn
