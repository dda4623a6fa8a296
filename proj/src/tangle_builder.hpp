// Internal helper shared by the twist and braid builders: emits PD tuples
// for elementary crossings in a column grid where strands may run up or
// down.  Not installed; include from src/ only.

#ifndef TKT_SRC_TANGLE_BUILDER_HPP
#define TKT_SRC_TANGLE_BUILDER_HPP

#include <array>
#include <vector>

#include "tkt/diagram.hpp"

namespace tkt::detail {

struct ColumnGrid {
  std::vector<int> arc;   // current arc label per column
  std::vector<int> dir;   // +1 flows up the grid, -1 flows down
  int next_label = 1;
  std::vector<CrossingTuple> tuples;

  // One crossing between columns j and j+1.  When positive_pattern is set
  // the strand entering at the lower left passes over; that is the positive
  // braid generator for upward strands.
  void emit(int j, bool positive_pattern) {
    int b_left = arc[j], b_right = arc[j + 1];
    int t_left = next_label++, t_right = next_label++;
    // strand A runs lower-left <-> upper-right, strand B the other diagonal
    int a_in = dir[j] > 0 ? b_left : t_right;
    int b_in = dir[j + 1] > 0 ? b_right : t_left;
    int under_in = positive_pattern ? b_in : a_in;
    // corner order fixed by the sign convention (see diagram.hpp); column
    // labels are pairwise distinct, so the lookup is unambiguous
    const std::array<int, 4> cycle{b_right, b_left, t_left, t_right};
    int start = 0;
    while (cycle[start] != under_in) ++start;
    CrossingTuple t;
    for (int k = 0; k < 4; ++k) t[k] = cycle[(start + k) % 4];
    tuples.push_back(t);
    arc[j] = t_left;
    arc[j + 1] = t_right;
    std::swap(dir[j], dir[j + 1]);
  }
};

}  // namespace tkt::detail

#endif
