// Marked twist regions and the twist family they generate.
//
// A region records, in order along a chord of the twisting disk, which arcs
// of the diagram cross the disk and in which direction.  Twisting inserts
// full-twist tangles on those arcs; resolving an eta=2, omega=0 region
// performs the oriented band smoothing of its two strands.

#ifndef TKT_TWIST_HPP
#define TKT_TWIST_HPP

#include <vector>

#include "tkt/diagram.hpp"

namespace tkt {

struct TwistStrand {
  int arc;
  int dir;  // +1 with the disk co-orientation, -1 against
};

struct RegionStats {
  int eta;       // strand count through the disk
  int omega;     // |algebraic sum of directions|
  bool coherent; // all directions equal
};

class TwistRegion {
 public:
  explicit TwistRegion(std::vector<TwistStrand> strands);
  const std::vector<TwistStrand>& strands() const { return strands_; }
  RegionStats stats() const;
  // arcs present, distinct, eta >= 2
  void validate_against(const LinkDiagram& d) const;

 private:
  std::vector<TwistStrand> strands_;
};

class TwistFamily {
 public:
  // base must be a knot diagram (one component)
  static TwistFamily make(LinkDiagram base, TwistRegion region);
  // link bases allowed (used by smoothing fixtures)
  static TwistFamily make_link_family(LinkDiagram base, TwistRegion region);

  const LinkDiagram& base() const { return base_; }
  const TwistRegion& region() const { return region_; }

 private:
  TwistFamily(LinkDiagram base, TwistRegion region)
      : base_(std::move(base)), region_(std::move(region)) {}
  LinkDiagram base_;
  TwistRegion region_;
};

RegionStats region_stats(const TwistFamily& f);

// Diagram of the n-twisted knot; n < 0 inserts left-handed twists.
// c(result) = c(base) + |n| * eta * (eta - 1).
LinkDiagram twist(const TwistFamily& f, int n);

// Same, but also returns the family re-marked at the inserted region so the
// result can be twisted again.
TwistFamily twisted_family(const TwistFamily& f, int n);

// Oriented band smoothing of an eta = 2, omega = 0 region.
LinkDiagram resolve(const TwistFamily& f);

// c(D_n) for n = 0..N: the arithmetic progression c0 + n eta (eta - 1).
std::vector<long long> crossing_ub_sequence(const TwistFamily& f, int N);

}  // namespace tkt

#endif
