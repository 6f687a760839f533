#include "circal/knot_ops.hpp"

#include <algorithm>

namespace circal {

namespace {

int base_genus(const CircularDecomposition& d) {
  int idx = d.base().unique_boundary_component();
  if (idx < 0)
    throw DomainError("operand base has no unique boundary-bearing component");
  return d.base().component(idx).genus;
}

void check_operand(const CircularDecomposition& d, std::string_view name) {
  if (d.mode != Mode::exterior)
    throw DomainError("operand " + std::string(name) + " must be a knot-exterior decomposition");
  require_valid(d);
  // the construction attaches handles along the two base summands; a closed
  // piece in a base would have to ride through the opposite operand's levels
  if (!d.base().connected())
    throw DomainError("operand " + std::string(name) +
                      " must have a connected base Seifert surface, got " + to_string(d.base()));
}

}  // namespace

std::string SumProvenance::text() const {
  return op + " left=" + left_name + " right=" + right_name +
         " genus-left=" + std::to_string(left_genus) +
         " genus-right=" + std::to_string(right_genus) +
         " shift-left=+" + std::to_string(2 * right_genus) +
         " shift-right=+" + std::to_string(2 * left_genus);
}

namespace {

// Shared stage assembly for both sums; `lift` attaches the opposite base to
// one level surface.
template <class LiftLeft, class LiftRight>
CircularDecomposition assemble_sum(const CircularDecomposition& left,
                                   const CircularDecomposition& right, Mode mode,
                                   const SumProvenance& prov, LiftLeft lift_left,
                                   LiftRight lift_right) {
  CircularDecomposition out;
  out.mode = mode;
  if (left.stage_count() > 0)
    for (const auto& f : left.thin) out.thin.push_back(lift_left(f));
  if (right.stage_count() > 0)
    for (const auto& f : right.thin) out.thin.push_back(lift_right(f));
  if (out.thin.empty()) out.thin.push_back(lift_left(left.base()));
  for (const auto& s : left.thick) out.thick.push_back(lift_left(s));
  for (const auto& s : right.thick) out.thick.push_back(lift_right(s));

  out.provenance = left.provenance;
  out.provenance.insert(out.provenance.end(), right.provenance.begin(), right.provenance.end());
  out.provenance.push_back(prov.text());
  return out;
}

}  // namespace

CircularDecomposition connected_sum(const CircularDecomposition& left,
                                    const CircularDecomposition& right,
                                    std::string_view left_name, std::string_view right_name) {
  check_operand(left, left_name);
  check_operand(right, right_name);
  SumProvenance prov{"csum", std::string(left_name), std::string(right_name), base_genus(left),
                     base_genus(right)};
  SurfaceComponent left_base{prov.left_genus, 1};
  SurfaceComponent right_base{prov.right_genus, 1};
  auto lift_left = [&](const SurfaceClass& s) { return boundary_connected_sum(s, right_base); };
  auto lift_right = [&](const SurfaceClass& s) { return boundary_connected_sum(s, left_base); };
  CircularDecomposition out =
      assemble_sum(left, right, Mode::exterior, prov, lift_left, lift_right);
  require_valid(out);
  return out;
}

CircularDecomposition boundary_sum(const CircularDecomposition& left,
                                   const CircularDecomposition& right, std::string_view left_name,
                                   std::string_view right_name, int three_handles) {
  check_operand(left, left_name);
  check_operand(right, right_name);
  if (three_handles < 0) throw DomainError("three-handle count must be non-negative");
  SumProvenance prov{"bsum", std::string(left_name), std::string(right_name), base_genus(left),
                     base_genus(right)};
  SurfaceComponent left_base{prov.left_genus, 1};
  SurfaceComponent right_base{prov.right_genus, 1};
  auto lift_left = [&](const SurfaceClass& s) { return boundary_sum_close(s, right_base); };
  auto lift_right = [&](const SurfaceClass& s) { return boundary_sum_close(s, left_base); };
  CircularDecomposition out = assemble_sum(left, right, Mode::closed, prov, lift_left, lift_right);
  if (three_handles > 0) {
    if (out.stage_count() == 0)
      throw DomainError("three-handle caps need at least one stage");
    // each cap costs one extra 2-handle in the final block (splitting the
    // sphere off) before capping it; the wrap transition absorbs both
    out.three_handles = three_handles;
  }
  require_valid(out);
  return out;
}

namespace {

WidthMultiset shifted_merge(const CircularDecomposition& left, const CircularDecomposition& right) {
  int shift_left = 2 * base_genus(right);
  int shift_right = 2 * base_genus(left);
  WidthMultiset left_width = width(left);
  WidthMultiset right_width = width(right);
  std::vector<int> entries;
  for (int c : left_width.entries()) entries.push_back(c + shift_left);
  for (int c : right_width.entries()) entries.push_back(c + shift_right);
  return WidthMultiset(std::move(entries));
}

}  // namespace

WidthMultiset cw_upper_bound_csum(const CircularDecomposition& left,
                                  const CircularDecomposition& right) {
  check_operand(left, "K1");
  check_operand(right, "K2");
  return shifted_merge(left, right);
}

WidthMultiset cw_upper_bound_bsum(const CircularDecomposition& left,
                                  const CircularDecomposition& right) {
  check_operand(left, "K1");
  check_operand(right, "K2");
  return shifted_merge(left, right);
}

}  // namespace circal
