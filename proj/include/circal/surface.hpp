#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "circal/errors.hpp"

namespace circal {

// One component of a compact orientable surface: its genus and the number
// of boundary circles.
struct SurfaceComponent {
  int genus = 0;
  int boundary = 0;

  friend constexpr auto operator<=>(const SurfaceComponent&, const SurfaceComponent&) = default;

  constexpr int euler() const noexcept { return 2 - 2 * genus - boundary; }

  // Complexity of the component with its boundary circles capped off with
  // disks: 0 when the capped surface is a sphere, otherwise 2*genus - 1.
  constexpr int complexity() const noexcept { return genus == 0 ? 0 : 2 * genus - 1; }

  constexpr bool is_sphere() const noexcept { return genus == 0 && boundary == 0; }
  constexpr bool is_closed() const noexcept { return boundary == 0; }
};

// A compact orientable surface as a multiset of components, kept sorted by
// (genus, boundary). Moves address components by index into this order.
class SurfaceClass {
public:
  SurfaceClass() = default;
  explicit SurfaceClass(std::vector<SurfaceComponent> components);

  // Whitespace-separated "(g,b)" pairs in any order, e.g. "(2,1) (1,0)".
  static SurfaceClass parse(std::string_view text);

  const std::vector<SurfaceComponent>& components() const noexcept { return components_; }
  const SurfaceComponent& component(int index) const;
  int size() const noexcept { return static_cast<int>(components_.size()); }
  bool empty() const noexcept { return components_.empty(); }

  int total_boundary() const noexcept;
  int total_genus() const noexcept;
  // Index of the unique component with boundary, or -1 when there is no such
  // component or more than one.
  int unique_boundary_component() const noexcept;
  bool connected() const noexcept { return components_.size() == 1; }

  friend auto operator<=>(const SurfaceClass&, const SurfaceClass&) = default;

private:
  std::vector<SurfaceComponent> components_;
};

// 1-handle surgeries on a level surface.
struct Tube {  // (g,b) -> (g+1,b)
  int component = 0;
  friend constexpr bool operator==(const Tube&, const Tube&) = default;
};
struct Join {  // merge two components: genus and boundary add
  int first = 0;
  int second = 0;
  friend constexpr bool operator==(const Join&, const Join&) = default;
};
using OneHandleMove = std::variant<Tube, Join>;

// 2-handle surgeries (compressions).
struct CompressNonSep {  // (g,b) -> (g-1,b)
  int component = 0;
  friend constexpr bool operator==(const CompressNonSep&, const CompressNonSep&) = default;
};
struct CompressSep {  // (g,b) -> (g1,b1) + (g-g1, b-b1)
  int component = 0;
  int genus_first = 0;
  int boundary_first = 0;
  friend constexpr bool operator==(const CompressSep&, const CompressSep&) = default;
};
using TwoHandleMove = std::variant<CompressNonSep, CompressSep>;

// Total complexity: sum of component complexities.
int complexity(const SurfaceClass& s);

// Total Euler characteristic: sum of 2 - 2g - b over components.
int euler(const SurfaceClass& s);

// Apply an index-1 surgery. Euler characteristic drops by exactly 2 and the
// total boundary count is unchanged. Throws DomainError on a bad move.
SurfaceClass apply_one_handle(const SurfaceClass& s, const OneHandleMove& move);

// Apply an index-2 surgery (compression). Euler characteristic rises by
// exactly 2 and the total boundary count is unchanged.
SurfaceClass apply_two_handle(const SurfaceClass& s, const TwoHandleMove& move);

// A compression is essential when it splits off no capped-sphere piece:
// a CompressNonSep on genus >= 1, or a CompressSep whose two pieces both
// have capped genus >= 1. Essential compressions strictly decrease
// complexity; inessential ones leave it unchanged.
bool is_essential(const SurfaceClass& s, const TwoHandleMove& move);

// Remove a (0,0) component (a 3-handle cap). Euler characteristic drops by 2.
SurfaceClass cap_sphere(const SurfaceClass& s, int index);

// Attach a once-bounded summand to the unique boundary-bearing component by
// a band at the boundary: genus adds, boundary count is unchanged.
SurfaceClass boundary_connected_sum(const SurfaceClass& s, SurfaceComponent summand);

// Glue a once-bounded summand to the unique boundary-bearing component
// (which must have exactly one boundary circle) along the boundary,
// producing a closed component of the combined genus.
SurfaceClass boundary_sum_close(const SurfaceClass& s, SurfaceComponent summand);

std::string to_string(const SurfaceComponent& c);
std::string to_string(const SurfaceClass& s);
std::string to_string(const OneHandleMove& m);
std::string to_string(const TwoHandleMove& m);

}  // namespace circal
