#pragma once

// Deterministic random fixtures for property tests. Level surfaces are
// generated the way the knot setting produces them: every level's
// boundary-bearing component has positive genus, closed pieces have positive
// genus, and consecutive thin surfaces share a common thick successor by
// construction.

#include <algorithm>
#include <map>
#include <random>
#include <vector>

#include "circal/decomposition.hpp"
#include "circal/surface.hpp"

namespace gen {

using Rng = std::mt19937;

inline int uniform(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

struct LevelOptions {
  int max_genus = 5;
  int max_closed_components = 2;
};

inline circal::SurfaceClass random_exterior_level(Rng& rng, const LevelOptions& opt) {
  std::vector<circal::SurfaceComponent> comps;
  comps.push_back({uniform(rng, 1, opt.max_genus), 1});
  int closed = uniform(rng, 0, opt.max_closed_components);
  for (int i = 0; i < closed; ++i) comps.push_back({uniform(rng, 1, opt.max_genus), 0});
  return circal::SurfaceClass(std::move(comps));
}

// A thick surface lying above two given thin surfaces: a randomly chosen
// sub-multiset of the closed components the two share survives; everything
// else merges into the boundary-bearing component, whose genus is padded so
// both transitions stay realizable.
inline circal::SurfaceClass common_thick(Rng& rng, const circal::SurfaceClass& lower,
                                         const circal::SurfaceClass& upper, int extra_genus) {
  std::map<circal::SurfaceComponent, int> lo_closed, hi_closed;
  for (const auto& c : lower.components())
    if (c.is_closed()) ++lo_closed[c];
  for (const auto& c : upper.components())
    if (c.is_closed()) ++hi_closed[c];

  std::vector<circal::SurfaceComponent> shared;
  for (const auto& [comp, count] : lo_closed) {
    auto it = hi_closed.find(comp);
    if (it == hi_closed.end()) continue;
    int keep = uniform(rng, 0, std::min(count, it->second));
    for (int i = 0; i < keep; ++i) shared.push_back(comp);
  }

  int shared_genus = 0;
  for (const auto& c : shared) shared_genus += c.genus;
  int need = std::max(lower.total_genus(), upper.total_genus()) - shared_genus;

  std::vector<circal::SurfaceComponent> comps = shared;
  comps.push_back({need + extra_genus, 1});
  return circal::SurfaceClass(std::move(comps));
}

struct DecompositionOptions {
  int min_stages = 0;
  int max_stages = 4;
  LevelOptions level;
  int max_extra_genus = 3;  // padding on thick surfaces; drives handle counts
  bool connected_base = false;  // keep the base a plain Seifert surface
};

inline circal::CircularDecomposition random_exterior_decomposition(
    Rng& rng, const DecompositionOptions& opt) {
  int k = uniform(rng, opt.min_stages, opt.max_stages);
  auto level = [&](bool base) {
    if (base && opt.connected_base)
      return circal::SurfaceClass({{uniform(rng, 1, opt.level.max_genus), 1}});
    return random_exterior_level(rng, opt.level);
  };
  if (k == 0)
    return circal::CircularDecomposition::fibered(circal::Mode::exterior, level(true));
  circal::CircularDecomposition d;
  d.mode = circal::Mode::exterior;
  for (int i = 0; i < k; ++i) d.thin.push_back(level(i == 0));
  for (int i = 0; i < k; ++i)
    d.thick.push_back(common_thick(rng, d.thin[static_cast<size_t>(i)], d.thin_after(i),
                                   uniform(rng, 0, opt.max_extra_genus)));
  return d;
}

inline circal::WidthMultiset random_width(Rng& rng, int max_len = 6, int max_entry = 9) {
  int len = uniform(rng, 0, max_len);
  std::vector<int> entries;
  for (int i = 0; i < len; ++i) entries.push_back(uniform(rng, 0, max_entry));
  return circal::WidthMultiset(std::move(entries));
}

}  // namespace gen
