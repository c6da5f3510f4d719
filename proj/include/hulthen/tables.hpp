#pragma once

// Reference bound-state tables used by the table/verify commands and the
// acceptance gate.  All presets use D = 3, alpha = 1 and the unshifted
// barrier scheme (c0 = 0); rows are indexed from n = 1.  Reference energies
// are stored to six decimals; rows without a real pair carry NaN and
// real_pair = false.

#include <vector>

namespace hulthen {

struct TableRowRef {
  int n = 0;
  int l = 0;
  bool real_pair = false;
  double e_plus = 0.0;  // NaN when !real_pair
  double e_minus = 0.0; // NaN when !real_pair
};

struct TableBlock {
  double v0 = 0.0;
  double s0 = 0.0;
  double m0 = 1.0;
  double m1 = 0.0;
  std::vector<TableRowRef> rows;
};

struct TablePreset {
  const char* name = "";
  double alpha = 1.0;
  int d = 3;
  std::vector<TableBlock> blocks;
};

// which = 1, 2 or 3; throws InvalidInput otherwise
const TablePreset& table_preset(int which);

} // namespace hulthen
