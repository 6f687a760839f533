#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "circal/decomposition.hpp"

namespace circal {

// A pair of compatible essential compressions of a thick surface: move_a
// acts from the 1-handle side, move_b from the 2-handle side. Applying the
// rewrite splits the stage in two, trading the width entry c(S_i) for the
// strictly smaller pair {c(thick_a), c(thick_b)}, with thin_between (both
// compressions applied) as the new thin surface between them.
struct WeakReduction {
  int stage = 0;
  TwoHandleMove move_a;
  TwoHandleMove move_b;
  SurfaceClass thick_a;
  SurfaceClass thick_b;
  SurfaceClass thin_between;

  friend bool operator==(const WeakReduction&, const WeakReduction&) = default;
};

std::string to_string(const WeakReduction& wr);

// All weak reductions applicable at the given stage, in a fixed
// deterministic order. A candidate must leave every handle block of the
// rewritten stages nonempty (so stages with fewer than two 1-handles or two
// 2-handles admit none) and every new transition must be realizable.
std::vector<WeakReduction> enumerate_weak_reductions(const CircularDecomposition& d, int stage);

// Replace stage i by the two stages (F_i, thick_a), (thin_between, thick_b).
// wr must come from enumerate_weak_reductions on d; anything else is
// rejected. The result validates and has strictly smaller width.
CircularDecomposition apply_weak_reduction(const CircularDecomposition& d, const WeakReduction& wr);

// Delete a stage with no handles at all (F_i = S_i = F_{i+1}). A k=1
// decomposition collapses to the fibered form.
CircularDecomposition remove_trivial_stage(const CircularDecomposition& d, int stage);

// Delete the stages from thin surface thin_from forward (cyclically) to the
// equal thin surface thin_to, merging the two. Isotopy of the two thin
// surfaces in the underlying manifold is not decidable from surface data, so
// the caller must pass a nonempty assertion token; it is recorded in the
// result's provenance log.
CircularDecomposition remove_parallel_region(const CircularDecomposition& d, int thin_from,
                                             int thin_to, std::string_view isotopy_assertion);

struct ThinSearchResult {
  CircularDecomposition best;      // canonical form of the least-width node reached
  std::vector<std::string> trace;  // one rewrite per line: "WR i a b" or "RT i"
  long nodes_expanded = 0;
  bool exhausted = false;  // the whole rewrite graph fit within the budget
};

// Breadth-first search of the graph generated by apply_weak_reduction and
// remove_trivial_stage, memoized on canonical forms, expanding at most
// `budget` nodes. Returns the minimum-width node reached, breaking width
// ties by least canonical serialization, plus the rewrite path to it (each
// step applies to the canonical form of the previous one).
//
// The rewrite graph is a formal over-approximation: its moves need not all
// be realizable by isotopies of the underlying manifold, so the result
// bounds the formal graph only.
ThinSearchResult thin_search(const CircularDecomposition& d, long budget);

enum class DecompositionForm { fibered, almost_fibered, multi_stage };

const char* to_string(DecompositionForm form);

struct Classification {
  DecompositionForm form = DecompositionForm::fibered;
  // some thin surface has a closed component
  bool closed_thin_component = false;
  // at least two stages and every thin surface connected
  bool multiple_thin_surfaces = false;
  // echoed caller assertion; the indicators only carry their usual meaning
  // for decompositions asserted to be locally thin
  bool locally_thin_asserted = false;

  friend bool operator==(const Classification&, const Classification&) = default;
};

// Exterior mode only; rotation-invariant.
Classification classify(const CircularDecomposition& d, bool assert_locally_thin = false);

}  // namespace circal
