// Braid words, closures, and twisted-family words.
//
// A family is supplied in the normal form (beta1, beta2, p, q): the base
// knot is the closure of beta1 beta2, the twisting disk sits between the two
// boxes and is crossed by the rightmost p braid strands going up and the q
// innermost closure returns coming down.  braid_family_word realizes the
// n-twisted knot on N + n q strands; its correctness contract is semantic,
// homfly(closure(word)) = homfly of the diagram-side twist, which the test
// suite enforces on the packaged families.

#ifndef TKT_BRAID_HPP
#define TKT_BRAID_HPP

#include <vector>

#include "tkt/diagram.hpp"
#include "tkt/twist.hpp"

namespace tkt {

struct BraidWord {
  int strands = 1;
  std::vector<int> word;  // entry +-i is the i-th generator or its inverse

  void validate() const;
};

// PD diagram of the braid closure; crossing count = word length, component
// count = cycle count of the induced permutation.
LinkDiagram closure(const BraidWord& b);

// cycle count of the permutation induced by the word
int permutation_cycle_count(const BraidWord& b);

struct BraidTwistFamily {
  BraidWord beta1;
  BraidWord beta2;
  int p = 0;  // strands through the disk going up, (eta + omega) / 2
  int q = 0;  // strands through the disk coming down, (eta - omega) / 2

  void validate() const;
  int strand_count() const { return beta1.strands; }
};

// Word on N + n q strands whose closure is the n-twisted knot.  Verified
// constructions exist for the coherent shape (q = 0, any p) and the clasp
// shape (p = q = 1); other shapes are accepted only at n = 0.
BraidWord braid_family_word(const BraidTwistFamily& f, int n);

// The same family as a marked diagram, for the diagram-side operations.
TwistFamily braid_family_diagram(const BraidTwistFamily& f);

// Strand counts N + n q for n = 0..n_max.
std::vector<int> braid_index_ub_sequence(const BraidTwistFamily& f, int n_max);

}  // namespace tkt

#endif
