// Command-line front end: pattern validation, Sharkovskii comparisons,
// forcing queries, entropy reports and cylinder trajectories, all emitted as
// JSON unless --format selects text, dot or csv.

#include <cstdint>
#include <iostream>
#include <string>
#include <tuple>
#include <vector>

#include "CLI11.hpp"
#include "patdyn/patdyn.hpp"
#include "patdyn/serialize.hpp"

namespace {

using patdyn::Json;

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

std::string ordering_name(patdyn::Ordering o) {
  switch (o) {
    case patdyn::Ordering::Less: return "Less";
    case patdyn::Ordering::Equal: return "Equal";
    default: return "Greater";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"pattern forcing, Sharkovskii order and entropy toolkit"};
  app.require_subcommand(1);

  std::string format = "json";
  app.add_option("--format", format, "output format: json, text, dot or csv")
      ->check(CLI::IsMember({"json", "text", "dot", "csv"}));

  std::string pattern_arg, second_pattern_arg, theta_arg = "0", x_arg = "1";
  int q_arg = 3;
  std::uint64_t p_arg = 1, q2_arg = 1, m_arg = 1;
  int period_arg = 1, max_arg = 1, vertex_arg = 1, n_arg = 1, steps_arg = 0;
  double tol_arg = 1e-12;
  bool dot_flag = false;

  auto* pattern_cmd = app.add_subcommand("pattern", "pattern utilities");
  auto* validate_cmd = pattern_cmd->add_subcommand("validate", "check an image list");
  validate_cmd->add_option("images", pattern_arg, "comma-separated images")->required();

  auto* shark_cmd = app.add_subcommand("sharkovskii", "Sharkovskii ordering");
  auto* cmp_cmd = shark_cmd->add_subcommand("cmp", "compare two periods");
  cmp_cmd->add_option("p", p_arg, "first period")->required();
  cmp_cmd->add_option("q", q2_arg, "second period")->required();

  auto* stefan_cmd = app.add_subcommand("stefan", "minimal odd-period cycle");
  stefan_cmd->add_option("q", q_arg, "odd period >= 3")->required();

  auto* double_cmd = app.add_subcommand("double", "period-doubled pattern");
  double_cmd->add_option("pattern", pattern_arg, "comma-separated images")->required();

  auto* graph_cmd = app.add_subcommand("graph", "signed Markov graph");
  graph_cmd->add_option("pattern", pattern_arg)->required();
  graph_cmd->add_flag("--dot", dot_flag, "emit DOT instead of JSON");

  auto* entropy_cmd = app.add_subcommand("entropy", "pattern entropy");
  entropy_cmd->add_option("pattern", pattern_arg)->required();
  entropy_cmd->add_option("--tol", tol_arg, "enclosure width bound");

  auto* lambda_cmd = app.add_subcommand("lambda", "largest root of x^q - 2x^(q-2) - 1");
  lambda_cmd->add_option("q", q_arg, "odd q >= 3")->required();
  lambda_cmd->add_option("--tol", tol_arg, "enclosure width bound");

  auto* forces_cmd = app.add_subcommand("forces", "does tau force nu");
  forces_cmd->add_option("tau", pattern_arg)->required();
  forces_cmd->add_option("nu", second_pattern_arg)->required();

  auto* forced_cmd = app.add_subcommand("forced-set", "patterns of one period forced by tau");
  forced_cmd->add_option("tau", pattern_arg)->required();
  forced_cmd->add_option("--period", period_arg, "period of the forced patterns")->required();

  auto* periods_cmd = app.add_subcommand("periods", "realized periods up to a bound");
  periods_cmd->add_option("tau", pattern_arg)->required();
  periods_cmd->add_option("--max", max_arg, "largest period to probe")->required();

  auto* tail_cmd = app.add_subcommand("tail-check", "periods form a Sharkovskii tail");
  tail_cmd->add_option("tau", pattern_arg)->required();
  tail_cmd->add_option("--max", max_arg, "largest period to probe")->required();

  auto* minent_cmd = app.add_subcommand("min-entropy-pattern",
                                        "pattern of minimal entropy for a period");
  minent_cmd->add_option("m", m_arg, "period")->required();

  auto* horse_cmd = app.add_subcommand("horseshoes", "closed-walk horseshoe certificate");
  horse_cmd->add_option("pattern", pattern_arg)->required();
  horse_cmd->add_option("--vertex", vertex_arg, "basic interval index")->required();
  horse_cmd->add_option("--n", n_arg, "iterate")->required();

  auto* cyl_cmd = app.add_subcommand("cylinder", "uncoupled skew-product layer");
  auto* orbit_cmd = cyl_cmd->add_subcommand("orbit", "horizontal periodic orbit of circles");
  orbit_cmd->add_option("pattern", pattern_arg)->required();
  auto* iter_cmd = cyl_cmd->add_subcommand("iterate", "trajectory of a point");
  iter_cmd->add_option("pattern", pattern_arg)->required();
  iter_cmd->add_option("--theta", theta_arg, "starting circle coordinate");
  iter_cmd->add_option("--x", x_arg, "starting fiber point, exact rational")->required();
  iter_cmd->add_option("--steps", steps_arg, "iterates to report")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*validate_cmd) {
      const auto tau = patdyn::Pattern::parse(pattern_arg);
      if (format == "text") {
        std::cout << "valid period-" << tau.period() << " pattern\n";
      } else {
        emit(patdyn::encode(tau));
      }
    } else if (*cmp_cmd) {
      const auto o = patdyn::sharkovskii_compare(p_arg, q2_arg);
      if (format == "text") {
        std::cout << ordering_name(o) << "\n";
      } else {
        Json j;
        j["p"] = p_arg;
        j["q"] = q2_arg;
        j["order"] = ordering_name(o);
        emit(j);
      }
    } else if (*stefan_cmd) {
      emit(patdyn::encode(patdyn::stefan_pattern(q_arg)));
    } else if (*double_cmd) {
      emit(patdyn::encode(patdyn::double_pattern(patdyn::Pattern::parse(pattern_arg))));
    } else if (*graph_cmd) {
      const auto g = patdyn::build_graph(patdyn::Pattern::parse(pattern_arg));
      if (dot_flag || format == "dot") {
        std::cout << patdyn::export_dot(g);
      } else {
        emit(patdyn::encode(g));
      }
    } else if (*entropy_cmd) {
      const auto rep = patdyn::pattern_entropy(patdyn::Pattern::parse(pattern_arg), tol_arg);
      if (format == "text") {
        std::cout << rep.entropy << "\n";
      } else {
        emit(patdyn::encode(rep));
      }
    } else if (*lambda_cmd) {
      const auto enc = patdyn::lambda_root(q_arg, tol_arg);
      Json j;
      j["q"] = q_arg;
      j["lambda"] = patdyn::encode(enc);
      emit(j);
    } else if (*forces_cmd) {
      const bool ans = patdyn::forces(patdyn::Pattern::parse(pattern_arg),
                                      patdyn::Pattern::parse(second_pattern_arg));
      if (format == "text") {
        std::cout << (ans ? "true" : "false") << "\n";
      } else {
        Json j;
        j["forces"] = ans;
        emit(j);
      }
    } else if (*forced_cmd) {
      const auto set = patdyn::forced_patterns(patdyn::Pattern::parse(pattern_arg), period_arg);
      Json j;
      j["period"] = period_arg;
      Json arr = Json::array();
      for (const auto& nu : set) arr.push_back(patdyn::encode(nu));
      j["patterns"] = std::move(arr);
      emit(j);
    } else if (*periods_cmd) {
      const auto set = patdyn::periods(patdyn::Pattern::parse(pattern_arg), max_arg);
      Json j;
      j["max"] = max_arg;
      j["periods"] = std::vector<int>(set.begin(), set.end());
      emit(j);
    } else if (*tail_cmd) {
      const bool ok = patdyn::check_sharkovskii_tail(patdyn::Pattern::parse(pattern_arg), max_arg);
      if (format == "text") {
        std::cout << (ok ? "true" : "false") << "\n";
      } else {
        Json j;
        j["max"] = max_arg;
        j["tail"] = ok;
        emit(j);
      }
    } else if (*minent_cmd) {
      const auto key = patdyn::sharkovskii_decompose(m_arg);
      auto tau = key.odd == 1 ? patdyn::Pattern::validate({1})
                              : patdyn::stefan_pattern(static_cast<int>(key.odd));
      for (int i = 0; i < key.exp2; ++i) tau = patdyn::double_pattern(tau);
      Json j;
      j["pattern"] = patdyn::encode(tau);
      j["entropy"] = patdyn::encode(patdyn::pattern_entropy(tau));
      j["bound"] = patdyn::entropy_lower_bound(m_arg);
      emit(j);
    } else if (*horse_cmd) {
      const auto g = patdyn::build_graph(patdyn::Pattern::parse(pattern_arg));
      emit(patdyn::encode(patdyn::horseshoe_count(g, vertex_arg, n_arg)));
    } else if (*orbit_cmd) {
      const auto tau = patdyn::Pattern::parse(pattern_arg);
      const patdyn::UncoupledSkewProduct F(tau);
      const auto bands = patdyn::horizontal_orbit(tau);
      Json j;
      j["omega"] = F.omega().str(25);
      j["bands"] = patdyn::encode(bands);
      j["pattern"] = patdyn::encode(patdyn::extract_pattern_from_bands(F, bands));
      emit(j);
    } else if (*iter_cmd) {
      const auto tau = patdyn::Pattern::parse(pattern_arg);
      const patdyn::UncoupledSkewProduct F(tau);
      patdyn::Theta theta = patdyn::wrap_unit(patdyn::Theta(theta_arg));
      patdyn::Rational x = patdyn::parse_rational(x_arg);
      if (!F.fiber().domain().contains(x)) {
        throw std::domain_error("OutOfDomain: x outside [1," + std::to_string(tau.period()) + "]");
      }
      if (format == "csv") {
        std::cout << "k,theta,x\n";
        for (int k = 0; k <= steps_arg; ++k) {
          std::cout << k << "," << theta.str(25) << "," << patdyn::rational_string(x) << "\n";
          std::tie(theta, x) = F.iterate(theta, x, 1);
        }
      } else {
        Json arr = Json::array();
        for (int k = 0; k <= steps_arg; ++k) {
          Json row;
          row["k"] = k;
          row["theta"] = theta.str(25);
          row["x"] = patdyn::rational_string(x);
          arr.push_back(std::move(row));
          std::tie(theta, x) = F.iterate(theta, x, 1);
        }
        Json j;
        j["trajectory"] = std::move(arr);
        emit(j);
      }
    }
  } catch (const patdyn::InvalidPattern& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
