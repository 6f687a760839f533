#include "circal/surface.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>
#include <utility>

namespace circal {

SurfaceClass::SurfaceClass(std::vector<SurfaceComponent> components)
    : components_(std::move(components)) {
  for (const auto& c : components_) {
    if (c.genus < 0 || c.boundary < 0)
      throw DomainError("surface component with negative genus or boundary: " + to_string(c));
  }
  std::sort(components_.begin(), components_.end());
}

const SurfaceComponent& SurfaceClass::component(int index) const {
  if (index < 0 || index >= size())
    throw DomainError("component index " + std::to_string(index) + " out of range (surface has " +
                      std::to_string(size()) + " components)");
  return components_[static_cast<size_t>(index)];
}

int SurfaceClass::total_boundary() const noexcept {
  int b = 0;
  for (const auto& c : components_) b += c.boundary;
  return b;
}

int SurfaceClass::total_genus() const noexcept {
  int g = 0;
  for (const auto& c : components_) g += c.genus;
  return g;
}

int SurfaceClass::unique_boundary_component() const noexcept {
  int found = -1;
  for (int i = 0; i < size(); ++i) {
    if (components_[static_cast<size_t>(i)].boundary > 0) {
      if (found >= 0) return -1;
      found = i;
    }
  }
  return found;
}

namespace {

void skip_space(std::string_view text, size_t& pos) {
  while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
}

int parse_int(std::string_view text, size_t& pos) {
  skip_space(text, pos);
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
  if (ec != std::errc())
    throw ParseError(0, "expected an integer in surface literal");
  pos = static_cast<size_t>(ptr - text.data());
  return value;
}

void expect(std::string_view text, size_t& pos, char ch) {
  skip_space(text, pos);
  if (pos >= text.size() || text[pos] != ch)
    throw ParseError(0, std::string("expected '") + ch + "' in surface literal");
  ++pos;
}

}  // namespace

SurfaceClass SurfaceClass::parse(std::string_view text) {
  std::vector<SurfaceComponent> comps;
  size_t pos = 0;
  for (;;) {
    skip_space(text, pos);
    if (pos >= text.size()) break;
    expect(text, pos, '(');
    int genus = parse_int(text, pos);
    expect(text, pos, ',');
    int boundary = parse_int(text, pos);
    expect(text, pos, ')');
    if (genus < 0 || boundary < 0)
      throw ParseError(0, "surface component with negative genus or boundary");
    comps.push_back({genus, boundary});
  }
  return SurfaceClass(std::move(comps));
}

int complexity(const SurfaceClass& s) {
  int total = 0;
  for (const auto& c : s.components()) total += c.complexity();
  return total;
}

int euler(const SurfaceClass& s) {
  int total = 0;
  for (const auto& c : s.components()) total += c.euler();
  return total;
}

SurfaceClass apply_one_handle(const SurfaceClass& s, const OneHandleMove& move) {
  auto comps = s.components();
  if (const auto* tube = std::get_if<Tube>(&move)) {
    s.component(tube->component);  // range check
    comps[static_cast<size_t>(tube->component)].genus += 1;
  } else {
    const auto& join = std::get<Join>(move);
    if (join.first == join.second)
      throw DomainError("join requires two distinct components");
    const auto& a = s.component(join.first);
    const auto& b = s.component(join.second);
    SurfaceComponent merged{a.genus + b.genus, a.boundary + b.boundary};
    size_t hi = static_cast<size_t>(std::max(join.first, join.second));
    size_t lo = static_cast<size_t>(std::min(join.first, join.second));
    comps.erase(comps.begin() + static_cast<long>(hi));
    comps.erase(comps.begin() + static_cast<long>(lo));
    comps.push_back(merged);
  }
  return SurfaceClass(std::move(comps));
}

namespace {

// Shared applicability check; returns the two resulting pieces of a sep,
// or the single piece of a nonsep in `first` with second.genus < 0.
struct CompressionPieces {
  SurfaceComponent first;
  SurfaceComponent second{-1, -1};
  bool separating = false;
};

CompressionPieces check_two_handle(const SurfaceClass& s, const TwoHandleMove& move) {
  if (const auto* nonsep = std::get_if<CompressNonSep>(&move)) {
    const auto& c = s.component(nonsep->component);
    if (c.genus < 1)
      throw DomainError("non-separating compression on a genus-0 component " + to_string(c));
    return {{c.genus - 1, c.boundary}, {-1, -1}, false};
  }
  const auto& sep = std::get<CompressSep>(move);
  const auto& c = s.component(sep.component);
  if (sep.genus_first < 0 || sep.genus_first > c.genus || sep.boundary_first < 0 ||
      sep.boundary_first > c.boundary)
    throw DomainError("separating compression split (" + std::to_string(sep.genus_first) + "," +
                      std::to_string(sep.boundary_first) + ") out of range on component " +
                      to_string(c));
  return {{sep.genus_first, sep.boundary_first},
          {c.genus - sep.genus_first, c.boundary - sep.boundary_first},
          true};
}

int move_component(const TwoHandleMove& move) {
  if (const auto* nonsep = std::get_if<CompressNonSep>(&move)) return nonsep->component;
  return std::get<CompressSep>(move).component;
}

}  // namespace

SurfaceClass apply_two_handle(const SurfaceClass& s, const TwoHandleMove& move) {
  CompressionPieces pieces = check_two_handle(s, move);
  auto comps = s.components();
  size_t target = static_cast<size_t>(move_component(move));
  comps[target] = pieces.first;
  if (pieces.separating) comps.push_back(pieces.second);
  return SurfaceClass(std::move(comps));
}

bool is_essential(const SurfaceClass& s, const TwoHandleMove& move) {
  CompressionPieces pieces = check_two_handle(s, move);
  if (!pieces.separating) return true;  // applicable nonsep already has genus >= 1
  return pieces.first.genus >= 1 && pieces.second.genus >= 1;
}

SurfaceClass cap_sphere(const SurfaceClass& s, int index) {
  const auto& c = s.component(index);
  if (!c.is_sphere())
    throw DomainError("3-handle cap requires a sphere component, got " + to_string(c));
  auto comps = s.components();
  comps.erase(comps.begin() + index);
  return SurfaceClass(std::move(comps));
}

namespace {

int require_boundary_component(const SurfaceClass& s, const SurfaceComponent& summand) {
  if (summand.genus < 0 || summand.boundary != 1)
    throw DomainError("summand must have exactly one boundary circle, got " + to_string(summand));
  int idx = s.unique_boundary_component();
  if (idx < 0)
    throw DomainError("surface must have exactly one boundary-bearing component: " + to_string(s));
  return idx;
}

}  // namespace

SurfaceClass boundary_connected_sum(const SurfaceClass& s, SurfaceComponent summand) {
  int idx = require_boundary_component(s, summand);
  auto comps = s.components();
  comps[static_cast<size_t>(idx)].genus += summand.genus;
  return SurfaceClass(std::move(comps));
}

SurfaceClass boundary_sum_close(const SurfaceClass& s, SurfaceComponent summand) {
  int idx = require_boundary_component(s, summand);
  auto comps = s.components();
  auto& target = comps[static_cast<size_t>(idx)];
  if (target.boundary != 1)
    throw DomainError("boundary sum needs a single boundary circle, component is " +
                      to_string(target));
  target = {target.genus + summand.genus, 0};
  return SurfaceClass(std::move(comps));
}

std::string to_string(const SurfaceComponent& c) {
  return "(" + std::to_string(c.genus) + "," + std::to_string(c.boundary) + ")";
}

std::string to_string(const SurfaceClass& s) {
  std::string out;
  for (const auto& c : s.components()) {
    if (!out.empty()) out += ' ';
    out += to_string(c);
  }
  return out;
}

std::string to_string(const OneHandleMove& m) {
  if (const auto* tube = std::get_if<Tube>(&m)) return "tube(" + std::to_string(tube->component) + ")";
  const auto& join = std::get<Join>(m);
  return "join(" + std::to_string(join.first) + "," + std::to_string(join.second) + ")";
}

std::string to_string(const TwoHandleMove& m) {
  if (const auto* nonsep = std::get_if<CompressNonSep>(&m))
    return "nonsep(" + std::to_string(nonsep->component) + ")";
  const auto& sep = std::get<CompressSep>(m);
  return "sep(" + std::to_string(sep.component) + "," + std::to_string(sep.genus_first) + "," +
         std::to_string(sep.boundary_first) + ")";
}

}  // namespace circal
