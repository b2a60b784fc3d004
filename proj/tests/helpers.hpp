#pragma once

#include <random>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "sgring/sgring.hpp"

namespace th {

using sgring::Int;
using sgring::IntVector;

inline oracle::Vec vec(const IntVector &v) { return v.values(); }

inline std::vector<oracle::Vec> vecs(const std::vector<IntVector> &vs) {
  std::vector<oracle::Vec> out;
  for (const IntVector &v : vs)
    out.push_back(v.values());
  return out;
}

inline std::vector<IntVector> ivs(const std::vector<std::vector<Int>> &vs) {
  std::vector<IntVector> out;
  for (const auto &v : vs)
    out.emplace_back(v);
  return out;
}

struct Pipeline {
  sgring::OrthogonalPresentation op;
  sgring::AperyData a;
};

/// Matrix rows; columns are generators.
inline Pipeline run(const std::vector<std::vector<Int>> &rows,
                    const sgring::Limits &limits = {}) {
  auto op = sgring::orthogonalize(sgring::Presentation::from_matrix(rows),
                                  limits);
  auto a = sgring::apery_set(op, limits);
  return {std::move(op), std::move(a)};
}

inline Pipeline run_generators(std::size_t dim,
                               const std::vector<std::vector<Int>> &gens) {
  auto op = sgring::orthogonalize(sgring::Presentation(dim, ivs(gens)));
  auto a = sgring::apery_set(op);
  return {std::move(op), std::move(a)};
}

inline std::string fixture_dir() { return SGRING_FIXTURE_DIR; }

struct Fixture {
  std::string name;
  std::vector<std::vector<Int>> rows;
};

/// The worked examples, as matrices whose columns generate H.
inline std::vector<Fixture> worked_fixtures() {
  return {
      {"ex2_6", {{2, 0, 0, 1, 1}, {0, 2, 0, 1, 0}, {0, 0, 2, 0, 1}}},
      {"ex2_8", {{5, 1, 8, 2, 2}, {3, 5, 3, 1, 2}, {1, 2, 5, 1, 1}}},
      {"gtt", {{1, 3, 3, 3}, {0, 3, 1, 2}}},
      {"hjs", {{11, 5, 4, 3}, {13, 6, 5, 4}}},
      {"rank3_normal", {{5, 0, 0, 2, 1}, {0, 5, 0, 1, 3}, {0, 0, 5, 1, 3}}},
      {"curve_0457", {{0, 4, 5, 7}, {7, 3, 2, 0}}},
      {"curve_0137", {{0, 1, 3, 7}, {7, 6, 4, 0}}},
      {"type3", {{8, 0, 9, 22, 31}, {0, 8, 7, 18, 17}}},
      {"notmonomial", {{0, 1, 3, 8}, {8, 3, 1, 0}}},
      {"nonslim", {{5, 0, 0, 1, 2}, {0, 5, 0, 3, 1}, {0, 0, 5, 0, 0}}},
      {"numerical_6_7_16_17", {{6, 7, 16, 17}}},
      {"numerical_8_9_22", {{8, 9, 22}}},
      {"non_cm_curve", {{4, 3, 1, 0}, {0, 1, 3, 4}}},
  };
}

/// Random generator lists in [0, 6]^d for d = 1..3 that are simplicial;
/// deterministic for a given seed.
inline std::vector<std::vector<std::vector<Int>>>
random_simplicial(std::uint64_t seed, std::size_t count) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Int> entry(0, 6);
  std::vector<std::vector<std::vector<Int>>> out;
  while (out.size() < count) {
    const std::size_t d = 1 + out.size() % 3;
    std::uniform_int_distribution<std::size_t> ngen(d, d + 3);
    std::vector<IntVector> gens;
    const std::size_t k = ngen(rng);
    for (std::size_t j = 0; j < k; ++j) {
      std::vector<Int> g(d);
      for (Int &x : g)
        x = entry(rng);
      if (std::any_of(g.begin(), g.end(), [](Int x) { return x != 0; }))
        gens.emplace_back(g);
    }
    if (gens.empty())
      continue;
    try {
      sgring::Presentation p(d, gens);
      if (p.rank() != d || !sgring::is_simplicial(p))
        continue;
    } catch (const sgring::Error &) {
      continue;
    }
    std::vector<std::vector<Int>> raw;
    for (const IntVector &g : gens)
      raw.push_back(g.values());
    out.push_back(std::move(raw));
  }
  return out;
}

} // namespace th
