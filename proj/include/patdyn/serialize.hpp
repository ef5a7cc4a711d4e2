#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "json.hpp"
#include "patdyn/cylinder.hpp"
#include "patdyn/entropy.hpp"
#include "patdyn/loops.hpp"
#include "patdyn/markov_graph.hpp"
#include "patdyn/pattern.hpp"
#include "patdyn/rational.hpp"

namespace patdyn {

// Insertion-ordered JSON keeps the CLI output byte-deterministic.
using Json = nlohmann::ordered_json;

inline Json encode(const Pattern& tau) {
  Json j;
  j["period"] = tau.period();
  j["images"] = tau.images();
  return j;
}

inline Pattern decode_pattern(const Json& j) {
  return Pattern::validate(j.at("images").get<std::vector<int>>());
}

inline Json encode(const SignedGraph& g) {
  Json j;
  j["vertices"] = g.vertex_count();
  Json arrows = Json::array();
  for (const SignedArrow& a : g.arrows()) {
    Json e;
    e["from"] = a.from;
    e["to"] = a.to;
    e["sign"] = std::string(1, sign_char(a.sign));
    arrows.push_back(std::move(e));
  }
  j["arrows"] = std::move(arrows);
  return j;
}

inline Json encode(const Loop& loop) {
  Json j;
  j["vertices"] = loop.vertices;
  Json signs = Json::array();
  for (Sign s : loop.signs) signs.push_back(std::string(1, sign_char(s)));
  j["signs"] = std::move(signs);
  return j;
}

inline Json encode(const EntropyReport& rep) {
  Json j;
  j["rho"] = Json::array({rep.rho_lo_d(), rep.rho_hi_d()});
  j["h"] = rep.entropy;
  j["method"] = rep.method;
  return j;
}

inline Json encode(const RootEnclosure& enc) {
  Json j;
  j["lo"] = to_double(enc.lo);
  j["hi"] = to_double(enc.hi);
  j["exact"] = enc.exact;
  return j;
}

inline Json encode(const HorseshoeCertificate& cert) {
  Json j;
  j["vertex"] = cert.vertex;
  j["n"] = cert.steps;
  if (cert.count <= BigInt(std::numeric_limits<std::int64_t>::max())) {
    j["s"] = cert.count.convert_to<std::int64_t>();
  } else {
    j["s"] = cert.count.str();
  }
  Json walks = Json::array();
  for (std::size_t i = 0; i < cert.walks.size(); ++i) {
    Json w;
    w["walk"] = cert.walks[i];
    w["domain"] = Json::array({rational_string(cert.branch_domains[i].lo),
                               rational_string(cert.branch_domains[i].hi)});
    walks.push_back(std::move(w));
  }
  j["branches"] = std::move(walks);
  return j;
}

inline Json encode(const std::vector<HorizontalBand>& bands) {
  Json arr = Json::array();
  for (const HorizontalBand& b : bands) {
    Json e;
    e["lo"] = rational_string(b.x.lo);
    e["hi"] = rational_string(b.x.hi);
    e["circle"] = b.is_circle();
    arr.push_back(std::move(e));
  }
  return arr;
}

}  // namespace patdyn
