#pragma once

#include <random>
#include <string>

#include "ghostchar/cover.hpp"
#include "ghostchar/ghost.hpp"
#include "ghostchar/repcheck.hpp"

namespace corpus {

inline const char* const kTorus45 = "torus 4 5";
inline const char* const kTrefoil = "2: 1 1 1";
inline const char* const kFigureEight = "3: 1 -2 1 -2";
inline const char* const kFiveTwo = "3: 1 1 1 2 -1 2";
inline const char* const kPretzel = "3: 1 1 1 1 1 1 1 2 1 1 1 2";

inline const ghostchar::GhostReport& torus45() {
  static const ghostchar::GhostReport r = ghostchar::find_ghosts(ghostchar::parse_braid(kTorus45));
  return r;
}

inline const ghostchar::GhostReport& report(const std::string& braid) {
  static std::map<std::string, ghostchar::GhostReport> cache;
  auto it = cache.find(braid);
  if (it == cache.end()) it = cache.emplace(braid, ghostchar::find_ghosts(ghostchar::parse_braid(braid))).first;
  return it->second;
}

// Cover relators of the torus(4,5) knot group on x, y, z, as written by hand.
inline std::vector<std::string> torus45_relators() {
  return {"z^-1 x^-1 y z^-1 x z^-1 y x^-1 z^-1",  "z^-1 x^-1 y z^-1 y z^-1 y x^-1 z^-1 x",
          "z^-1 x^-1 y z^-1 y x^-1 z^-1 y",       "z x y^-1 z x^-1 z y^-1 x z",
          "z x y^-1 z y^-1 z y^-1 x z x^-1",      "z x y^-1 z y^-1 x z y^-1"};
}

// Coordinates (x12, x13) of a base point as doubles.
inline std::pair<double, double> base_xy(const ghostchar::SolutionPoint& p) {
  return {p.at(ghostchar::PairVar(1, 2)).approx().to_double().real(),
          p.at(ghostchar::PairVar(1, 3)).approx().to_double().real()};
}

inline std::mt19937_64& rng() {
  static std::mt19937_64 g(20240611);
  return g;
}

inline std::complex<double> random_complex(double scale = 1.5) {
  std::uniform_real_distribution<double> u(-scale, scale);
  return {u(rng()), u(rng())};
}

// Random braid on 2 to 4 strands whose closure is a knot.
inline ghostchar::BraidWord random_knot_braid(int max_length = 14) {
  std::uniform_int_distribution<int> strands(2, 4), length(1, max_length), sign(0, 1);
  while (true) {
    ghostchar::BraidWord b;
    b.strands = strands(rng());
    std::uniform_int_distribution<int> gen(1, b.strands - 1);
    const int len = length(rng());
    for (int k = 0; k < len; ++k) b.letters.push_back(gen(rng()) * (sign(rng()) ? 1 : -1));
    try {
      return ghostchar::parse_braid(b.to_string());
    } catch (const std::invalid_argument&) {
    }
  }
}

// Random SL2 matrix.
inline ghostchar::Mat2d random_sl2() {
  using ghostchar::Complex;
  Complex a = random_complex(), b = random_complex(), c = random_complex();
  while (std::abs(a) < 0.2) a = random_complex();
  return {a, b, c, (1.0 + b * c) / a};
}

// Random trace-free SL2 matrix: [[p, q], [r, -p]] with -p^2 - q r = 1.
inline ghostchar::Mat2d random_trace_free() {
  using ghostchar::Complex;
  Complex p = random_complex(), q = random_complex();
  while (std::abs(q) < 0.2) q = random_complex();
  return {p, q, (-1.0 - p * p) / q, -p};
}

}  // namespace corpus
