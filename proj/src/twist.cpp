#include "tkt/twist.hpp"

#include <algorithm>
#include <set>

#include "tkt/errors.hpp"
#include "tangle_builder.hpp"

namespace tkt {

TwistRegion::TwistRegion(std::vector<TwistStrand> strands)
    : strands_(std::move(strands)) {
  if (strands_.size() < 2)
    throw ValidationError("twist region needs at least two strands");
  std::set<int> seen;
  for (const auto& s : strands_) {
    if (s.dir != 1 && s.dir != -1)
      throw ValidationError("strand direction must be +1 or -1");
    if (!seen.insert(s.arc).second)
      throw ValidationError("twist region lists arc " + std::to_string(s.arc) +
                            " twice");
  }
}

RegionStats TwistRegion::stats() const {
  int sum = 0;
  bool coherent = true;
  for (const auto& s : strands_) {
    sum += s.dir;
    if (s.dir != strands_[0].dir) coherent = false;
  }
  return {static_cast<int>(strands_.size()), std::abs(sum), coherent};
}

void TwistRegion::validate_against(const LinkDiagram& d) const {
  for (const auto& s : strands_)
    if (s.arc < 1 || s.arc > d.arc_count())
      throw ValidationError("region arc " + std::to_string(s.arc) +
                            " is not present in the diagram");
}

TwistFamily TwistFamily::make(LinkDiagram base, TwistRegion region) {
  region.validate_against(base);
  if (base.component_count() != 1)
    throw ValidationError("twist family base must be a knot diagram");
  return TwistFamily(std::move(base), std::move(region));
}

TwistFamily TwistFamily::make_link_family(LinkDiagram base,
                                          TwistRegion region) {
  region.validate_against(base);
  return TwistFamily(std::move(base), std::move(region));
}

RegionStats region_stats(const TwistFamily& f) { return f.region().stats(); }

TwistFamily twisted_family(const TwistFamily& f, int n) {
  if (n == 0) return f;
  const LinkDiagram& base = f.base();
  const auto& strands = f.region().strands();
  int eta = static_cast<int>(strands.size());

  detail::ColumnGrid grid;
  grid.next_label = base.arc_count() + 1;
  grid.arc.resize(eta);
  grid.dir.resize(eta);
  std::vector<int> bottom_stub(eta);  // label below the tangle per column
  for (int i = 0; i < eta; ++i) {
    grid.dir[i] = strands[i].dir;
    bottom_stub[i] = strands[i].dir > 0 ? strands[i].arc : grid.next_label++;
    grid.arc[i] = bottom_stub[i];
  }

  // |n| full twists; each is eta sweeps of adjacent transpositions
  int sweeps = std::abs(n) * eta;
  for (int rep = 0; rep < sweeps; ++rep)
    for (int j = 0; j + 1 < eta; ++j) grid.emit(j, n > 0);

  // a full twist is a pure braid, so directions must return to the input
  for (int i = 0; i < eta; ++i)
    if (grid.dir[i] != strands[i].dir)
      throw ValidationError("internal: twist tangle permuted strands");

  std::vector<CrossingTuple> xs = base.crossings();
  // reconnect the tangle boundary to the cut arcs
  for (int i = 0; i < eta; ++i) {
    int a = strands[i].arc;
    auto [hx, hs] = base.arc_head(a);
    if (strands[i].dir > 0) {
      // strand flows up: the tangle top continues to the old head of a
      xs[hx][hs] = grid.arc[i];
    } else {
      // strand flows down: the tangle top is the tail side and keeps the
      // label a; the bottom stub continues to the old head of a
      int top = grid.arc[i];
      for (auto& t : grid.tuples)
        for (int s = 0; s < 4; ++s)
          if (t[s] == top) t[s] = a;
      xs[hx][hs] = bottom_stub[i];
    }
  }
  for (const auto& t : grid.tuples) xs.push_back(t);

  // the re-marked region sits just above the inserted tangle
  std::vector<int> tracked;
  for (int i = 0; i < eta; ++i)
    tracked.push_back(strands[i].dir > 0 ? grid.arc[i] : strands[i].arc);

  auto [diagram, mapped] =
      LinkDiagram::make_tracked(std::move(xs), base.unknot_components(),
                                tracked);
  std::vector<TwistStrand> new_strands;
  for (int i = 0; i < eta; ++i)
    new_strands.push_back({mapped[i], strands[i].dir});
  return TwistFamily::make_link_family(std::move(diagram),
                                       TwistRegion(std::move(new_strands)));
}

LinkDiagram twist(const TwistFamily& f, int n) {
  return twisted_family(f, n).base();
}

LinkDiagram resolve(const TwistFamily& f) {
  RegionStats st = region_stats(f);
  if (st.eta != 2 || st.omega != 0)
    throw ValidationError(
        "resolution is defined only for eta = 2, omega = 0 regions");
  const LinkDiagram& base = f.base();
  int u = f.region().strands()[0].arc;
  int v = f.region().strands()[1].arc;
  auto [ux, us] = base.arc_head(u);
  auto [vx, vs] = base.arc_head(v);
  // band smoothing: the strand arriving along u departs along v's tail end
  // and vice versa, i.e. the two arcs trade heads
  std::vector<CrossingTuple> xs = base.crossings();
  xs[ux][us] = v;
  xs[vx][vs] = u;
  return LinkDiagram::make(std::move(xs), base.unknot_components());
}

std::vector<long long> crossing_ub_sequence(const TwistFamily& f, int N) {
  if (N < 0) throw ValidationError("crossing_ub_sequence needs N >= 0");
  RegionStats st = region_stats(f);
  std::vector<long long> out;
  long long c0 = f.base().crossing_count();
  long long step = static_cast<long long>(st.eta) * (st.eta - 1);
  for (int n = 0; n <= N; ++n) out.push_back(c0 + n * step);
  return out;
}

}  // namespace tkt
