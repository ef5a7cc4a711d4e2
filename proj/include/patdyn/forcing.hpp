#pragma once

#include <algorithm>
#include <set>
#include <stdexcept>
#include <vector>

#include "patdyn/loops.hpp"
#include "patdyn/markov_graph.hpp"
#include "patdyn/pattern.hpp"
#include "patdyn/plmap.hpp"
#include "patdyn/sharkovskii.hpp"

namespace patdyn {

// All cyclic patterns of period m, ascending by image sequence. There are
// exactly (m-1)! of them: one per arrangement of {2..m} as the orbit of 1.
inline std::vector<Pattern> all_patterns(int m) {
  if (m < 1) throw std::invalid_argument("period must be >= 1");
  std::vector<int> rest;
  for (int v = 2; v <= m; ++v) rest.push_back(v);
  std::vector<Pattern> out;
  do {
    std::vector<int> images(static_cast<std::size_t>(m));
    int at = 1;
    for (int v : rest) {
      images[static_cast<std::size_t>(at - 1)] = v;
      at = v;
    }
    images[static_cast<std::size_t>(at - 1)] = 1;
    out.push_back(Pattern::validate(std::move(images)));
  } while (std::next_permutation(rest.begin(), rest.end()));
  std::sort(out.begin(), out.end());
  return out;
}

// Decides whether tau forces nu: every interval map (equivalently, every
// quasiperiodically forced skew-product on the cylinder) exhibiting tau also
// exhibits nu. Besides the reflexive case, this holds exactly when some
// simple loop of length period(nu) in the signed Markov graph of tau carries
// a non-collapsed orbit with pattern nu.
inline bool forces(const Pattern& tau, const Pattern& nu) {
  if (tau == nu) return true;
  if (tau.period() == 1) return false;
  const SignedGraph g = build_graph(tau);
  const PLMap f(tau);
  bool found = false;
  for_each_loop(g, nu.period(), [&](const Loop& loop) {
    if (!is_simple(loop)) return true;
    auto res = induced_pattern(f, loop);
    if (std::holds_alternative<Pattern>(res) && std::get<Pattern>(res) == nu) {
      found = true;
      return false;
    }
    return true;
  });
  return found;
}

// All patterns of period m forced by tau.
inline std::set<Pattern> forced_patterns(const Pattern& tau, int m) {
  if (m < 1) throw std::invalid_argument("period must be >= 1");
  std::set<Pattern> out;
  if (m == tau.period()) out.insert(tau);
  if (tau.period() == 1) return out;
  const SignedGraph g = build_graph(tau);
  const PLMap f(tau);
  for_each_loop(g, m, [&](const Loop& loop) {
    if (!is_simple(loop)) return true;
    auto res = induced_pattern(f, loop);
    if (std::holds_alternative<Pattern>(res)) out.insert(std::get<Pattern>(std::move(res)));
    return true;
  });
  return out;
}

// The periods m <= max_period realized by every map exhibiting tau, plus
// tau's own period. Stops at the first witness orbit per period.
inline std::set<int> periods(const Pattern& tau, int max_period) {
  if (max_period < 1) throw std::invalid_argument("max period must be >= 1");
  std::set<int> out{tau.period()};
  if (tau.period() == 1) {
    if (max_period >= 1) out.insert(1);
    return out;
  }
  const SignedGraph g = build_graph(tau);
  const PLMap f(tau);
  for (int m = 1; m <= max_period; ++m) {
    if (m == tau.period()) continue;
    bool found = false;
    for_each_loop(g, m, [&](const Loop& loop) {
      if (!is_simple(loop)) return true;
      if (std::holds_alternative<LoopOrbit>(loop_orbit(f, loop))) {
        found = true;
        return false;
      }
      return true;
    });
    if (found) out.insert(m);
  }
  return out;
}

// The realized period set must be a lower set of the Sharkovskii order:
// whenever m is realized, so is every q strictly below m.
inline bool check_sharkovskii_tail(const Pattern& tau, int max_period) {
  const std::set<int> got = periods(tau, max_period);
  for (int m : got) {
    if (m > max_period) continue;
    for (int q = 1; q <= max_period; ++q) {
      if (sharkovskii_below(static_cast<std::uint64_t>(q), static_cast<std::uint64_t>(m)) &&
          got.count(q) == 0) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace patdyn
