#pragma once

#include <string>
#include <string_view>

#include "circal/decomposition.hpp"

namespace circal {

// Operand bookkeeping for an induced sum decomposition: the base Seifert
// genera read from the operands and the per-level complexity shifts they
// cause on the opposite side.
struct SumProvenance {
  std::string op;  // "csum" or "bsum"
  std::string left_name;
  std::string right_name;
  int left_genus = 0;
  int right_genus = 0;

  std::string text() const;
};

// Induced decomposition of the connected-sum exterior: the base becomes the
// boundary connected sum of the operand bases, the left operand's stages run
// first with the right base attached to every level, then the right
// operand's stages with the left base attached. Both operands must be valid
// exterior decompositions.
CircularDecomposition connected_sum(const CircularDecomposition& left,
                                    const CircularDecomposition& right,
                                    std::string_view left_name = "K1",
                                    std::string_view right_name = "K2");

// Induced decomposition of the closed manifold glued from the two exteriors:
// every level closes up via the boundary sum with the opposite base. An
// optional terminal block of 3-handle caps may be requested; the default is
// none, since the cyclic closure already balances.
CircularDecomposition boundary_sum(const CircularDecomposition& left,
                                   const CircularDecomposition& right,
                                   std::string_view left_name = "K1",
                                   std::string_view right_name = "K2", int three_handles = 0);

// Width upper bound for the connected sum: the merge of width(left) shifted
// by +2*genus(right base) and width(right) shifted by +2*genus(left base).
// The induced construction realizes this bound exactly.
WidthMultiset cw_upper_bound_csum(const CircularDecomposition& left,
                                  const CircularDecomposition& right);

// Same arithmetic for the boundary sum of the two exteriors.
WidthMultiset cw_upper_bound_bsum(const CircularDecomposition& left,
                                  const CircularDecomposition& right);

}  // namespace circal
