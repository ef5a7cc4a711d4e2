#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "patdyn/pattern.hpp"
#include "patdyn/rational.hpp"

namespace patdyn {

enum class Sign : int { Plus = +1, Minus = -1 };

inline Sign operator*(Sign a, Sign b) {
  return a == b ? Sign::Plus : Sign::Minus;
}

inline char sign_char(Sign s) { return s == Sign::Plus ? '+' : '-'; }

// Vertex k stands for the basic interval [k, k+1] (equivalently, the basic
// band between consecutive strips k and k+1), 1 <= k <= n-1.
struct SignedArrow {
  int from;
  int to;
  Sign sign;

  friend bool operator==(const SignedArrow& a, const SignedArrow& b) {
    return a.from == b.from && a.to == b.to && a.sign == b.sign;
  }
};

// The signed Markov graph of a pattern. An arrow k -> j means the image of
// [k, k+1] spans [j, j+1]; its sign is the orientation of the map on
// [k, k+1], so all arrows out of one vertex share a sign. The graph is a
// pattern invariant: it depends only on the endpoint images, never on the
// concrete orbit realizing the pattern.
class SignedGraph {
 public:
  static SignedGraph build(const Pattern& tau) {
    SignedGraph g(tau);
    const int n = tau.period();
    for (int k = 1; k <= n - 1; ++k) {
      const int a = tau.image_of(k);
      const int b = tau.image_of(k + 1);
      const int lo = a < b ? a : b;
      const int hi = a < b ? b : a;
      g.sign_.push_back(b > a ? Sign::Plus : Sign::Minus);
      g.cover_lo_.push_back(lo);
      g.cover_hi_.push_back(hi - 1);
    }
    return g;
  }

  const Pattern& pattern() const { return tau_; }

  // Number of basic intervals; zero for the period-1 pattern.
  int vertex_count() const { return static_cast<int>(sign_.size()); }

  // Orientation of the map on [k, k+1]; sign of every arrow out of k.
  Sign vertex_sign(int k) const {
    check_vertex(k);
    return sign_[static_cast<std::size_t>(k - 1)];
  }

  bool has_arrow(int from, int to) const {
    check_vertex(from);
    check_vertex(to);
    return cover_lo_[static_cast<std::size_t>(from - 1)] <= to &&
           to <= cover_hi_[static_cast<std::size_t>(from - 1)];
  }

  // Targets of vertex k in ascending order.
  std::vector<int> targets(int k) const {
    check_vertex(k);
    std::vector<int> out;
    for (int j = cover_lo_[static_cast<std::size_t>(k - 1)];
         j <= cover_hi_[static_cast<std::size_t>(k - 1)]; ++j) {
      out.push_back(j);
    }
    return out;
  }

  int out_degree(int k) const {
    check_vertex(k);
    return cover_hi_[static_cast<std::size_t>(k - 1)] -
           cover_lo_[static_cast<std::size_t>(k - 1)] + 1;
  }

  // All arrows, ordered by (from, to).
  std::vector<SignedArrow> arrows() const {
    std::vector<SignedArrow> out;
    for (int k = 1; k <= vertex_count(); ++k) {
      for (int j : targets(k)) out.push_back(SignedArrow{k, j, vertex_sign(k)});
    }
    return out;
  }

  friend bool operator==(const SignedGraph& a, const SignedGraph& b) {
    return a.sign_ == b.sign_ && a.cover_lo_ == b.cover_lo_ && a.cover_hi_ == b.cover_hi_;
  }

 private:
  explicit SignedGraph(Pattern tau) : tau_(std::move(tau)) {}

  void check_vertex(int k) const {
    if (k < 1 || k > vertex_count()) {
      throw std::out_of_range("graph vertex " + std::to_string(k) + " out of range");
    }
  }

  Pattern tau_;
  std::vector<Sign> sign_;
  std::vector<int> cover_lo_;
  std::vector<int> cover_hi_;
};

inline SignedGraph build_graph(const Pattern& tau) { return SignedGraph::build(tau); }

// 0/1 adjacency matrix of a signed graph, vertex-ordered.
class TransitionMatrix {
 public:
  explicit TransitionMatrix(std::vector<std::vector<int>> cells) : cells_(std::move(cells)) {
    const std::size_t n = cells_.size();
    for (const auto& row : cells_) {
      if (row.size() != n) throw std::invalid_argument("transition matrix must be square");
      for (int v : row) {
        if (v != 0 && v != 1) throw std::invalid_argument("transition matrix entries must be 0/1");
      }
    }
  }

  int size() const { return static_cast<int>(cells_.size()); }

  // 1-based vertex indices, matching the graph.
  int entry(int i, int j) const {
    if (i < 1 || i > size() || j < 1 || j > size()) {
      throw std::out_of_range("matrix index out of range");
    }
    return cells_[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
  }

  const std::vector<std::vector<int>>& cells() const { return cells_; }

  // Exact integer matrix power, n >= 0.
  std::vector<std::vector<BigInt>> power(int n) const {
    if (n < 0) throw std::invalid_argument("matrix power needs n >= 0");
    const std::size_t k = cells_.size();
    std::vector<std::vector<BigInt>> acc(k, std::vector<BigInt>(k, 0));
    for (std::size_t i = 0; i < k; ++i) acc[i][i] = 1;
    std::vector<std::vector<BigInt>> base(k, std::vector<BigInt>(k));
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) base[i][j] = cells_[i][j];
    }
    for (int s = 0; s < n; ++s) {
      std::vector<std::vector<BigInt>> next(k, std::vector<BigInt>(k, 0));
      for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t l = 0; l < k; ++l) {
          if (acc[i][l] == 0) continue;
          for (std::size_t j = 0; j < k; ++j) next[i][j] += acc[i][l] * base[l][j];
        }
      }
      acc = std::move(next);
    }
    return acc;
  }

 private:
  std::vector<std::vector<int>> cells_;
};

// Every basic interval covers at least one basic interval, so a zero row
// signals a broken graph, not bad input.
inline TransitionMatrix transition_matrix(const SignedGraph& g) {
  const int n = g.vertex_count();
  std::vector<std::vector<int>> cells(static_cast<std::size_t>(n),
                                      std::vector<int>(static_cast<std::size_t>(n), 0));
  for (int k = 1; k <= n; ++k) {
    if (g.out_degree(k) < 1) throw std::logic_error("graph vertex with empty cover");
    for (int j : g.targets(k)) {
      cells[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(j - 1)] = 1;
    }
  }
  return TransitionMatrix(std::move(cells));
}

// DOT rendering; vertices named "[k,k+1]", edges labelled with their sign.
inline std::string export_dot(const SignedGraph& g) {
  std::string out = "digraph markov {\n";
  for (int k = 1; k <= g.vertex_count(); ++k) {
    out += "  \"[" + std::to_string(k) + "," + std::to_string(k + 1) + "]\";\n";
  }
  for (const SignedArrow& a : g.arrows()) {
    out += "  \"[" + std::to_string(a.from) + "," + std::to_string(a.from + 1) + "]\" -> \"[" +
           std::to_string(a.to) + "," + std::to_string(a.to + 1) + "]\" [label=\"" +
           sign_char(a.sign) + "\"];\n";
  }
  out += "}\n";
  return out;
}

}  // namespace patdyn
