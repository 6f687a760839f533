#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "circal/surface.hpp"

namespace circal {

enum class Mode { exterior, closed };

// Optional per-stage witness data: explicit handle moves realizing the
// thin -> thick (ups) and thick -> next-thin (downs) transitions.
struct TransitionWitness {
  std::vector<OneHandleMove> ups;
  std::vector<TwoHandleMove> downs;
};

// A circular handle decomposition as its cyclic sequence of level surfaces
//
//   F_1, S_1, F_2, S_2, ..., F_k, S_k   (closing back to F_1)
//
// thin[i] is F_{i+1}, thick[i] is S_{i+1}. The fibered form has no stages:
// thick is empty and thin holds only the base surface. In closed mode a
// terminal block of three_handles sphere caps sits after the last 2-handle
// block, just before the wrap back to the base.
//
// provenance and witnesses are carried metadata; they do not take part in
// equality.
struct CircularDecomposition {
  Mode mode = Mode::exterior;
  std::vector<SurfaceClass> thin;
  std::vector<SurfaceClass> thick;
  int three_handles = 0;
  std::vector<std::string> provenance;
  std::vector<TransitionWitness> witnesses;  // empty, or one entry per stage

  int stage_count() const noexcept { return static_cast<int>(thick.size()); }
  bool fibered_form() const noexcept { return thick.empty(); }

  const SurfaceClass& base() const;
  const SurfaceClass& thin_after(int stage) const;  // F_{i+2}, wrapping to the base

  static CircularDecomposition fibered(Mode mode, SurfaceClass base);
  static CircularDecomposition single_stage(Mode mode, SurfaceClass base, SurfaceClass thick);

  friend bool operator==(const CircularDecomposition& a, const CircularDecomposition& b) {
    return a.mode == b.mode && a.thin == b.thin && a.thick == b.thick &&
           a.three_handles == b.three_handles;
  }
};

struct ValidationIssue {
  std::string where;
  std::string message;
  std::string text() const { return where.empty() ? message : where + ": " + message; }
};

// errors make the decomposition invalid; warnings flag accepted oddities
// (empty handle blocks, sphere components, capped-sphere pieces).
struct ValidationReport {
  std::vector<ValidationIssue> errors;
  std::vector<ValidationIssue> warnings;
  bool valid() const noexcept { return errors.empty(); }
};

ValidationReport validate(const CircularDecomposition& d);

// Throws DomainError with the first validation error when d is invalid.
void require_valid(const CircularDecomposition& d);

enum class HandleKind { one_handles, two_handles };

struct TransitionCheck {
  bool ok = false;
  int handles = 0;      // meaningful when ok
  std::string reason;   // meaningful when !ok
};

// Decide whether `to` is reachable from `from` by a block of handles of the
// given kind, and how many handles the block needs.
//
// 1-handles: some partition of from's components into one nonempty group per
// to-component must match boundary counts exactly and genus sums from below.
// 2-handles: the same with the roles of from and to reversed.
TransitionCheck transition_realizable(const SurfaceClass& from, const SurfaceClass& to,
                                      HandleKind kind);

// What the 2-handle block of stage i must reach: F_{i+2}, except that at the
// wrap of a closed decomposition the terminal sphere caps have not happened
// yet, so the base gains one sphere per 3-handle.
SurfaceClass down_transition_target(const CircularDecomposition& d, int stage);

// A non-increasing multiset of thick-surface complexities, compared
// lexicographically; a proper prefix sorts below anything extending it, so
// the empty multiset (the fibered convention) is the unique minimum.
class WidthMultiset {
public:
  WidthMultiset() = default;
  explicit WidthMultiset(std::vector<int> entries);

  const std::vector<int>& entries() const noexcept { return entries_; }
  bool empty() const noexcept { return entries_.empty(); }
  int size() const noexcept { return static_cast<int>(entries_.size()); }

  friend bool operator==(const WidthMultiset&, const WidthMultiset&) = default;

private:
  std::vector<int> entries_;
};

std::strong_ordering compare_width(const WidthMultiset& a, const WidthMultiset& b);
std::string to_string(const WidthMultiset& w);

WidthMultiset width(const CircularDecomposition& d);

struct MorseStats {
  int one_handles = 0;    // total across N blocks
  int two_handles = 0;    // total across T blocks
  int three_handles = 0;  // terminal caps (closed mode)
  int total() const noexcept { return one_handles + two_handles + three_handles; }
  friend bool operator==(const MorseStats&, const MorseStats&) = default;
};

MorseStats morse_stats(const CircularDecomposition& d);

// Stage i splits into compression bodies A_i (below the thick surface,
// built from 1-handles) and B_i (above it, dual to the 2-handles).
struct CompressionBodyView {
  int stage = 0;
  SurfaceClass thin_below;   // lower boundary of A_i
  SurfaceClass thick;        // common upper boundary of A_i and B_i
  SurfaceClass thin_above;   // lower boundary of B_i (sphere caps excluded)
  int a_one_handles = 0;     // h(A_i)
  int b_two_handles = 0;     // dual handle count of B_i
};

std::vector<CompressionBodyView> compression_body_views(const CircularDecomposition& d);

// Rotate the cyclic stage sequence so that old stage `shift` becomes stage 0.
// Closed decompositions with a terminal 3-handle block only admit the
// identity rotation.
CircularDecomposition rotate_stages(const CircularDecomposition& d, int shift);

// The lexicographically minimal rotation of the stage sequence; idempotent
// and shared by all rotations of d.
CircularDecomposition canonical_form(const CircularDecomposition& d);

// Line-oriented text format:
//
//   mode exterior          # or: mode closed
//   F (1,1)
//   S (2,1)
//   three-handles 1        # optional, closed mode only
//   end
//
// '#' starts a comment; "# provenance:" comment lines are preserved in the
// decomposition's provenance log and re-emitted by the serializer.
CircularDecomposition parse_decomposition(std::string_view text);
std::string serialize(const CircularDecomposition& d);

}  // namespace circal
