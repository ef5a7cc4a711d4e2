// Acceptance suite: runs the pinned end-to-end checks and prints one
// PASS/FAIL line per criterion. Exits nonzero if any criterion fails.
//
// Usage: acceptance [path-to-cli]
// The first criterion drives the CLI binary when a path is supplied.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "patdyn/patdyn.hpp"

using namespace patdyn;

namespace {

int g_failures = 0;

void criterion(int id, const std::string& label, const std::function<bool()>& body) {
  bool ok = false;
  std::string note;
  try {
    ok = body();
  } catch (const std::exception& e) {
    note = std::string(" (") + e.what() + ")";
  }
  std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << id << ": " << label << note
            << std::endl;
  if (!ok) ++g_failures;
}

std::string run_command(const std::string& cmd) {
  std::array<char, 4096> buf{};
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) throw std::runtime_error("failed to launch: " + cmd);
  while (fgets(buf.data(), buf.size(), pipe) != nullptr) out += buf.data();
  if (pclose(pipe) != 0) throw std::runtime_error("nonzero exit: " + cmd);
  return out;
}

std::vector<Pattern> patterns_up_to(int max_period) {
  std::vector<Pattern> out;
  for (int m = 1; m <= max_period; ++m) {
    for (const Pattern& tau : all_patterns(m)) out.push_back(tau);
  }
  return out;
}

const double kLogGolden = std::log((1.0 + std::sqrt(5.0)) / 2.0);

}  // namespace

int main(int argc, char** argv) {
  const std::string cli = argc > 1 ? argv[1] : "";

  criterion(1, "golden-ratio entropy of 2,3,1 to 1e-12", [&] {
    EntropyReport rep;
    if (!cli.empty()) {
      const auto j = nlohmann::json::parse(run_command(cli + " entropy 2,3,1"));
      const double lo = j.at("rho").at(0).get<double>();
      const double hi = j.at("rho").at(1).get<double>();
      const double h = j.at("h").get<double>();
      return hi - lo <= 1e-12 && std::abs(h - kLogGolden) <= 1e-12;
    }
    rep = pattern_entropy(Pattern::validate({2, 3, 1}), 1e-12);
    return rep.width() <= 1e-12 && std::abs(rep.entropy - kLogGolden) <= 1e-12;
  });

  criterion(2, "lambda_q enclosures for q = 3,5,7", [] {
    const auto l3 = lambda_root(3, 1e-12);
    const auto l5 = lambda_root(5, 1e-12);
    const auto l7 = lambda_root(7, 1e-12);
    if (to_double(l3.width()) > 1e-12) return false;
    if (to_double(l5.width()) > 1e-12) return false;
    if (to_double(l7.width()) > 1e-12) return false;
    if (std::abs(to_double(l3.midpoint()) - (1.0 + std::sqrt(5.0)) / 2.0) > 1e-12) return false;
    return l7.hi < l5.lo && l5.hi < l3.lo;  // certified strict decrease
  });

  criterion(3, "entropy equality witnesses for m in {3,6,12,5,10}", [] {
    const std::vector<std::uint64_t> cases{3, 6, 12, 5, 10};
    for (std::uint64_t m : cases) {
      const auto key = sharkovskii_decompose(m);
      Pattern tau = stefan_pattern(static_cast<int>(key.odd));
      for (int i = 0; i < key.exp2; ++i) tau = double_pattern(tau);
      if (static_cast<std::uint64_t>(tau.period()) != m) return false;
      const double target =
          std::log(to_double(lambda_root(static_cast<int>(key.odd)).midpoint())) /
          std::ldexp(1.0, key.exp2);
      if (std::abs(pattern_entropy(tau).entropy - target) > 1e-6) return false;
    }
    return true;
  });

  criterion(4, "entropy >= period lower bound for all 154 patterns of period <= 6", [] {
    const auto pats = patterns_up_to(6);
    if (pats.size() != 154) return false;
    for (const Pattern& tau : pats) {
      const double bound = entropy_lower_bound(static_cast<std::uint64_t>(tau.period()));
      if (pattern_entropy(tau).entropy < bound - 1e-9) return false;
    }
    return true;
  });

  criterion(5, "Sharkovskii tails up to 12 for all 154 patterns of period <= 6", [] {
    const auto pats = patterns_up_to(6);
    if (pats.size() != 154) return false;
    for (const Pattern& tau : pats) {
      if (!check_sharkovskii_tail(tau, 12)) return false;
    }
    return true;
  });

  criterion(6, "forcing is a partial order on the 10 patterns of period <= 4", [] {
    const auto pats = patterns_up_to(4);
    if (pats.size() != 10) return false;
    std::vector<std::vector<bool>> rel(pats.size(), std::vector<bool>(pats.size()));
    for (std::size_t i = 0; i < pats.size(); ++i) {
      for (std::size_t j = 0; j < pats.size(); ++j) rel[i][j] = forces(pats[i], pats[j]);
    }
    for (std::size_t i = 0; i < pats.size(); ++i) {
      if (!rel[i][i]) return false;
      for (std::size_t j = 0; j < pats.size(); ++j) {
        if (i != j && rel[i][j] && rel[j][i]) return false;
        for (std::size_t k = 0; k < pats.size(); ++k) {
          if (rel[i][j] && rel[j][k] && !rel[i][k]) return false;
        }
      }
    }
    return true;
  });

  criterion(7, "base points sort exactly like loops, periods <= 5, loops <= 6", [] {
    for (int m = 2; m <= 5; ++m) {
      for (const Pattern& tau : all_patterns(m)) {
        const PLMap f(tau);
        const SignedGraph g = build_graph(tau);
        std::vector<std::pair<Rational, Loop>> items;
        for (int len = 1; len <= 6; ++len) {
          for (const Loop& loop : enumerate_loops(g, len)) {
            if (!is_simple(loop)) continue;
            const auto res = loop_orbit(f, loop);
            if (!std::holds_alternative<LoopOrbit>(res)) continue;
            const auto& orb = std::get<LoopOrbit>(res);
            for (int i = 0; i < len; ++i) {
              items.emplace_back(orb.points[static_cast<std::size_t>(i)], shift(loop, i));
            }
          }
        }
        std::sort(items.begin(), items.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        for (std::size_t i = 0; i + 1 < items.size(); ++i) {
          if (!(items[i].first < items[i + 1].first)) return false;  // distinct points
          if (lex_compare(items[i].second, items[i + 1].second) != LoopOrder::Less) return false;
        }
      }
    }
    return true;
  });

  criterion(8, "lap growth at n = 20 tracks the entropy within 0.08", [] {
    for (int m = 2; m <= 5; ++m) {
      for (const Pattern& tau : all_patterns(m)) {
        const double h = pattern_entropy(tau).entropy;
        if (h <= 1e-9) continue;
        const double rate = std::log(lap_count(tau, 20).convert_to<double>()) / 20.0;
        if (std::abs(rate - h) > 0.08) return false;
      }
    }
    return true;
  });

  criterion(9, "diagonal walk growth never exceeds the entropy", [] {
    for (int m = 2; m <= 5; ++m) {
      for (const Pattern& tau : all_patterns(m)) {
        const double h = pattern_entropy(tau).entropy;
        const auto t = transition_matrix(build_graph(tau));
        for (int n = 1; n <= 6; ++n) {
          const auto tn = t.power(n);
          for (int v = 0; v < t.size(); ++v) {
            const auto& diag = tn[static_cast<std::size_t>(v)][static_cast<std::size_t>(v)];
            if (diag == 0) continue;
            const double rate = std::log(diag.convert_to<double>()) / n;
            if (rate > h + 1e-9) return false;
          }
        }
      }
    }
    return true;
  });

  criterion(10, "cylinder round-trip and band graph equality, periods <= 6", [] {
    for (int m = 1; m <= 6; ++m) {
      for (const Pattern& tau : all_patterns(m)) {
        const UncoupledSkewProduct F(tau);
        const auto bands = horizontal_orbit(tau);
        if (!(extract_pattern_from_bands(F, bands) == tau)) return false;
        if (m >= 2) {
          if (!(band_markov_graph(F, bands) == build_graph(tau).arrows())) return false;
        }
      }
    }
    return true;
  });

  if (g_failures == 0) {
    std::cout << "all criteria passed" << std::endl;
    return 0;
  }
  std::cout << g_failures << " criteria failed" << std::endl;
  return 1;
}
