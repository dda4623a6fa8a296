// Oriented link diagrams as PD codes.
//
// A crossing is a 4-tuple of arc labels read around the crossing starting at
// the incoming under-strand, so slot 0 is the incoming under-arc, slot 2 the
// outgoing under-arc, and slots 1/3 carry the over-strand.  Orientations are
// not stored: they are recovered by propagating in/out constraints, and a
// crossing is positive exactly when the over-strand enters at slot 1.  With
// this convention the closure of sigma_1^3 and the standard-table trefoil
// code both have writhe +3.
//
// Crossingless unknot components cannot be expressed by PD tuples, so the
// diagram carries an explicit counter for them; skein smoothings produce
// such circles routinely.
//
// Diagrams are immutable after construction.  Every operation returns a new
// diagram whose arcs are renumbered 1..2c in traversal order.

#ifndef TKT_DIAGRAM_HPP
#define TKT_DIAGRAM_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace tkt {

using CrossingTuple = std::array<int, 4>;

class LinkDiagram {
 public:
  // Validates, orients and normalizes.  Throws ValidationError.
  static LinkDiagram make(std::vector<CrossingTuple> crossings,
                          int unknot_components);
  // make() plus the old-label -> new-label map for callers that track arcs
  // through the renumbering.
  static std::pair<LinkDiagram, std::vector<int>> make_tracked(
      std::vector<CrossingTuple> crossings, int unknot_components,
      const std::vector<int>& tracked_arcs);

  static LinkDiagram unknot() { return make({}, 1); }

  // "PD[X(a,b,c,d),...]" with optional ";U=k" suffix.  Throws ParseError.
  static LinkDiagram parse_pd(const std::string& text);
  std::string to_pd() const;

  int crossing_count() const { return static_cast<int>(xs_.size()); }
  int arc_count() const { return arc_count_; }
  int unknot_components() const { return unknots_; }
  int component_count() const { return r_; }
  const std::vector<CrossingTuple>& crossings() const { return xs_; }

  // component index of an arc, 0-based; arcs are 1-based
  int arc_component(int arc) const { return arc_comp_[arc]; }
  // arcs of each component in orientation order, components in label order
  const std::vector<std::vector<int>>& component_cycles() const {
    return cycles_;
  }

  int sign(int crossing) const { return sign_[crossing]; }
  int over_in_slot(int crossing) const { return over_in_slot_[crossing]; }
  int writhe() const;

  // next arc along the link after `arc`
  int next_arc(int arc) const { return succ_[arc]; }
  // (crossing, slot) where the arc terminates
  std::pair<int, int> arc_head(int arc) const { return head_[arc]; }

  LinkDiagram mirrored() const;
  LinkDiagram switched(int crossing) const;
  LinkDiagram smoothed(int crossing) const;

  // Exhaustive Reidemeister I / II reduction; deterministic move order.
  LinkDiagram simplified() const;

  // Index of the first crossing, in basepoint traversal order, whose first
  // passage is on the under-strand; nullopt when the diagram is descending.
  std::optional<int> first_non_descending_crossing() const;

  // Relabeling-invariant key; distinct keys for distinct diagrams.
  std::string canonical_key() const;

  // cycles of the orientation-preserving smoothing of every crossing,
  // including crossingless circles (the Seifert circle count)
  int seifert_circle_count() const;

  bool operator==(const LinkDiagram& o) const {
    return xs_ == o.xs_ && unknots_ == o.unknots_;
  }

 private:
  LinkDiagram() = default;

  std::vector<CrossingTuple> xs_;
  int unknots_ = 0;

  // derived
  int arc_count_ = 0;
  int r_ = 0;
  std::vector<std::int8_t> over_in_slot_;            // per crossing, 1 or 3
  std::vector<std::int8_t> sign_;                    // per crossing, +-1
  std::vector<int> succ_;                            // arc -> following arc
  std::vector<int> arc_comp_;                        // arc -> component
  std::vector<std::pair<int, int>> head_;            // arc -> (crossing, slot)
  std::vector<std::vector<int>> cycles_;

  friend LinkDiagram disjoint_union(const LinkDiagram&, const LinkDiagram&);
};

LinkDiagram disjoint_union(const LinkDiagram& d1, const LinkDiagram& d2);

// component count and per-arc component assignment (arcs are 1-based)
std::pair<int, std::vector<int>> components(const LinkDiagram& d);

}  // namespace tkt

#endif
