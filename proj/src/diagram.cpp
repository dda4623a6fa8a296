#include "tkt/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <map>
#include <set>
#include <sstream>

#include "tkt/errors.hpp"

namespace tkt {

namespace {

constexpr int kIn = 1;
constexpr int kOut = -1;

// Union-find over arc labels used by the surgery operations.  unite()
// reports when the two ends were already connected, i.e. a strand chain
// closed into a crossingless circle.
class ArcUF {
 public:
  int find(int a) {
    auto it = parent_.find(a);
    if (it == parent_.end()) {
      parent_[a] = a;
      return a;
    }
    int root = a;
    while (parent_[root] != root) root = parent_[root];
    while (parent_[a] != root) {
      int next = parent_[a];
      parent_[a] = root;
      a = next;
    }
    return root;
  }

  bool unite(int a, int b) {
    int ra = find(a), rb = find(b);
    if (ra == rb) return true;
    parent_[ra] = rb;
    return false;
  }

 private:
  std::map<int, int> parent_;
};

struct OccurrenceTable {
  // label -> up to two (crossing, slot) occurrences
  std::map<int, std::vector<std::pair<int, int>>> occ;
};

OccurrenceTable collect_occurrences(const std::vector<CrossingTuple>& xs) {
  OccurrenceTable t;
  for (int x = 0; x < static_cast<int>(xs.size()); ++x) {
    for (int s = 0; s < 4; ++s) {
      if (xs[x][s] <= 0)
        throw ValidationError("arc labels must be positive integers");
      t.occ[xs[x][s]].push_back({x, s});
    }
  }
  for (const auto& [label, places] : t.occ) {
    if (places.size() != 2)
      throw ValidationError("arc " + std::to_string(label) + " appears " +
                            std::to_string(places.size()) +
                            " time(s), expected exactly 2");
  }
  return t;
}

// Assigns an in/out status to every crossing slot.  Under slots are fixed by
// the PD convention; over slots and arc directions propagate from them.
// Components that never pass under anything are left free and get oriented
// by the first unassigned slot in (crossing, slot) order.
std::vector<std::array<int, 4>> solve_orientation(
    const std::vector<CrossingTuple>& xs, const OccurrenceTable& occ) {
  std::vector<std::array<int, 4>> status(xs.size(), {0, 0, 0, 0});
  std::deque<std::pair<int, int>> queue;

  auto assign = [&](int x, int s, int v) {
    if (status[x][s] == v) return;
    if (status[x][s] != 0)
      throw ValidationError("inconsistent orientation: arc " +
                            std::to_string(xs[x][s]) +
                            " is forced to run in two directions");
    status[x][s] = v;
    queue.push_back({x, s});
  };

  for (int x = 0; x < static_cast<int>(xs.size()); ++x) {
    assign(x, 0, kIn);
    assign(x, 2, kOut);
  }

  auto drain = [&] {
    while (!queue.empty()) {
      auto [x, s] = queue.front();
      queue.pop_front();
      int v = status[x][s];
      // the over-strand enters on one of slots 1/3 and leaves on the other
      if (s == 1 || s == 3) assign(x, 4 - s, -v);
      // an arc leaves one crossing and enters another
      const auto& places = occ.occ.at(xs[x][s]);
      for (const auto& [ox, os] : places) {
        if (ox == x && os == s) continue;
        assign(ox, os, -v);
      }
    }
  };

  drain();
  for (int x = 0; x < static_cast<int>(xs.size()); ++x) {
    for (int s = 1; s < 4; s += 2) {
      if (status[x][s] == 0) {
        assign(x, s, kIn);
        drain();
      }
    }
  }
  return status;
}

std::string tuple_str(const CrossingTuple& t) {
  return "X(" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," +
         std::to_string(t[2]) + "," + std::to_string(t[3]) + ")";
}

CrossingTuple rotate_over_under(const CrossingTuple& t, int over_in_slot) {
  // swapping over/under keeps the cyclic order and starts the tuple at the
  // new incoming under-strand, which is the old incoming over-strand
  if (over_in_slot == 1) return {t[1], t[2], t[3], t[0]};
  return {t[3], t[0], t[1], t[2]};
}

}  // namespace

LinkDiagram LinkDiagram::make(std::vector<CrossingTuple> crossings,
                              int unknot_components) {
  return make_tracked(std::move(crossings), unknot_components, {}).first;
}

std::pair<LinkDiagram, std::vector<int>> LinkDiagram::make_tracked(
    std::vector<CrossingTuple> crossings, int unknot_components,
    const std::vector<int>& tracked_arcs) {
  if (unknot_components < 0)
    throw ValidationError("negative unknot-component count");

  LinkDiagram d;
  d.unknots_ = unknot_components;

  auto occ = collect_occurrences(crossings);
  auto status = solve_orientation(crossings, occ);

  // head of each arc = its unique incoming occurrence
  std::map<int, std::pair<int, int>> head;
  for (const auto& [label, places] : occ.occ) {
    int ins = 0;
    for (const auto& [x, s] : places)
      if (status[x][s] == kIn) {
        ++ins;
        head[label] = {x, s};
      }
    if (ins != 1)
      throw ValidationError("inconsistent orientation at arc " +
                            std::to_string(label));
  }

  // successor along the link
  std::map<int, int> succ;
  for (const auto& [label, hd] : head) {
    auto [x, s] = hd;
    succ[label] = (s == 0) ? crossings[x][2] : crossings[x][4 - s];
  }

  // oriented cycles, ordered by smallest member label
  std::map<int, int> new_label;
  std::set<int> seen;
  std::vector<std::vector<int>> raw_cycles;
  for (const auto& [label, hd] : head) {
    if (seen.count(label)) continue;
    std::vector<int> cyc;
    int a = label;
    do {
      cyc.push_back(a);
      seen.insert(a);
      a = succ.at(a);
    } while (a != label);
    raw_cycles.push_back(std::move(cyc));
  }
  int next = 1;
  for (const auto& cyc : raw_cycles)
    for (int a : cyc) new_label[a] = next++;
  d.arc_count_ = next - 1;

  for (auto& t : crossings)
    for (int s = 0; s < 4; ++s) t[s] = new_label.at(t[s]);
  std::sort(crossings.begin(), crossings.end());
  d.xs_ = std::move(crossings);

  // re-derive everything on the renumbered, sorted tuples
  auto occ2 = collect_occurrences(d.xs_);
  auto status2 = solve_orientation(d.xs_, occ2);
  int c = static_cast<int>(d.xs_.size());
  d.over_in_slot_.resize(c);
  d.sign_.resize(c);
  for (int x = 0; x < c; ++x) {
    d.over_in_slot_[x] = (status2[x][1] == kIn) ? 1 : 3;
    d.sign_[x] = (d.over_in_slot_[x] == 1) ? 1 : -1;
  }
  d.head_.assign(d.arc_count_ + 1, {-1, -1});
  d.succ_.assign(d.arc_count_ + 1, 0);
  for (const auto& [label, places] : occ2.occ)
    for (const auto& [x, s] : places)
      if (status2[x][s] == kIn) {
        d.head_[label] = {x, s};
        d.succ_[label] = (s == 0) ? d.xs_[x][2] : d.xs_[x][4 - s];
      }

  d.arc_comp_.assign(d.arc_count_ + 1, -1);
  for (int a = 1; a <= d.arc_count_; ++a) {
    if (d.arc_comp_[a] >= 0) continue;
    int comp = static_cast<int>(d.cycles_.size());
    std::vector<int> cyc;
    int cur = a;
    do {
      d.arc_comp_[cur] = comp;
      cyc.push_back(cur);
      cur = d.succ_[cur];
    } while (cur != a);
    d.cycles_.push_back(std::move(cyc));
  }

  d.r_ = static_cast<int>(d.cycles_.size()) + d.unknots_;
  if (d.r_ < 1) throw ValidationError("diagram has no components");

  std::vector<int> mapped;
  mapped.reserve(tracked_arcs.size());
  for (int a : tracked_arcs) {
    auto it = new_label.find(a);
    if (it == new_label.end())
      throw ValidationError("tracked arc " + std::to_string(a) +
                            " not present in diagram");
    mapped.push_back(it->second);
  }
  return {std::move(d), std::move(mapped)};
}

int LinkDiagram::writhe() const {
  int w = 0;
  for (int x = 0; x < crossing_count(); ++x) w += sign_[x];
  return w;
}

LinkDiagram LinkDiagram::mirrored() const {
  std::vector<CrossingTuple> xs;
  xs.reserve(xs_.size());
  for (int x = 0; x < crossing_count(); ++x)
    xs.push_back(rotate_over_under(xs_[x], over_in_slot_[x]));
  return make(std::move(xs), unknots_);
}

LinkDiagram LinkDiagram::switched(int crossing) const {
  std::vector<CrossingTuple> xs = xs_;
  xs[crossing] = rotate_over_under(xs_[crossing], over_in_slot_[crossing]);
  return make(std::move(xs), unknots_);
}

LinkDiagram LinkDiagram::smoothed(int crossing) const {
  const CrossingTuple& t = xs_[crossing];
  int oi = over_in_slot_[crossing];
  int under_in = t[0], under_out = t[2], over_in = t[oi], over_out = t[4 - oi];

  std::vector<CrossingTuple> xs;
  xs.reserve(xs_.size() - 1);
  for (int x = 0; x < crossing_count(); ++x)
    if (x != crossing) xs.push_back(xs_[x]);

  ArcUF uf;
  int circles = 0;
  if (uf.unite(under_in, over_out)) ++circles;
  if (uf.unite(over_in, under_out)) ++circles;
  for (auto& tt : xs)
    for (int s = 0; s < 4; ++s) tt[s] = uf.find(tt[s]);
  return make(std::move(xs), unknots_ + circles);
}

LinkDiagram LinkDiagram::simplified() const {
  std::vector<CrossingTuple> xs = xs_;
  int circles = 0;

  auto splice = [&](ArcUF& uf, std::vector<int>& dead) {
    std::vector<CrossingTuple> kept;
    kept.reserve(xs.size());
    std::sort(dead.begin(), dead.end());
    for (int x = 0; x < static_cast<int>(xs.size()); ++x)
      if (!std::binary_search(dead.begin(), dead.end(), x))
        kept.push_back(xs[x]);
    for (auto& t : kept)
      for (int s = 0; s < 4; ++s) t[s] = uf.find(t[s]);
    xs = std::move(kept);
  };

  bool progress = true;
  while (progress) {
    progress = false;

    // Reidemeister I: an arc occupying two adjacent slots is a kink
    for (int x = 0; x < static_cast<int>(xs.size()) && !progress; ++x) {
      for (int i = 0; i < 4; ++i) {
        if (xs[x][i] != xs[x][(i + 1) % 4]) continue;
        int loop = xs[x][i];
        int y = xs[x][(i + 2) % 4], z = xs[x][(i + 3) % 4];
        ArcUF uf;
        if (uf.unite(y, loop)) ++circles;
        if (uf.unite(loop, z)) ++circles;
        std::vector<int> dead{x};
        splice(uf, dead);
        progress = true;
        break;
      }
    }
    if (progress) continue;

    // Reidemeister II: two arcs joining the same pair of crossings, one
    // strand over at both crossings and the other under at both
    auto over = [](int slot) { return slot == 1 || slot == 3; };
    int n = static_cast<int>(xs.size());
    std::map<int, std::vector<std::pair<int, int>>> occ;
    for (int x = 0; x < n; ++x)
      for (int s = 0; s < 4; ++s) occ[xs[x][s]].push_back({x, s});

    for (int x = 0; x < n && !progress; ++x) {
      for (int y = x + 1; y < n && !progress; ++y) {
        std::vector<std::pair<int, std::pair<int, int>>> joins;  // arc, slots
        for (const auto& [label, places] : occ) {
          if (places.size() != 2) continue;
          if (places[0].first == x && places[1].first == y)
            joins.push_back({label, {places[0].second, places[1].second}});
          else if (places[0].first == y && places[1].first == x)
            joins.push_back({label, {places[1].second, places[0].second}});
        }
        for (std::size_t i = 0; i < joins.size() && !progress; ++i) {
          for (std::size_t j = i + 1; j < joins.size() && !progress; ++j) {
            auto [u, us] = joins[i];
            auto [v, vs] = joins[j];
            bool u_over = over(us.first);
            if (over(us.second) != u_over) continue;
            bool v_over = over(vs.first);
            if (over(vs.second) != v_over) continue;
            if (u_over == v_over) continue;
            int pu_x = xs[x][(us.first + 2) % 4];
            int pu_y = xs[y][(us.second + 2) % 4];
            int pv_x = xs[x][(vs.first + 2) % 4];
            int pv_y = xs[y][(vs.second + 2) % 4];
            ArcUF uf;
            if (uf.unite(pu_x, u)) ++circles;
            if (uf.unite(u, pu_y)) ++circles;
            if (uf.unite(pv_x, v)) ++circles;
            if (uf.unite(v, pv_y)) ++circles;
            std::vector<int> dead{x, y};
            splice(uf, dead);
            progress = true;
          }
        }
      }
    }
  }

  return make(std::move(xs), unknots_ + circles);
}

std::optional<int> LinkDiagram::first_non_descending_crossing() const {
  std::vector<bool> visited(xs_.size(), false);
  for (const auto& cyc : cycles_) {
    for (int arc : cyc) {
      auto [x, s] = head_[arc];
      if (visited[x]) continue;
      visited[x] = true;
      if (s == 0) return x;  // first passage is on the under-strand
    }
  }
  return std::nullopt;
}

int LinkDiagram::seifert_circle_count() const {
  // orientation-preserving smoothing: under-in flows to over-out, over-in
  // flows to under-out
  std::vector<int> snext(arc_count_ + 1, 0);
  for (int a = 1; a <= arc_count_; ++a) {
    auto [x, s] = head_[a];
    snext[a] = (s == 0) ? xs_[x][4 - over_in_slot_[x]] : xs_[x][2];
  }
  std::vector<bool> seen(arc_count_ + 1, false);
  int circles = 0;
  for (int a = 1; a <= arc_count_; ++a) {
    if (seen[a]) continue;
    ++circles;
    int cur = a;
    while (!seen[cur]) {
      seen[cur] = true;
      cur = snext[cur];
    }
  }
  return circles + unknots_;
}

std::string LinkDiagram::canonical_key() const {
  if (xs_.empty()) return "U" + std::to_string(unknots_);

  // split into crossing-connected parts
  int n = crossing_count();
  std::vector<int> part(n, -1);
  std::map<int, std::vector<int>> arc_to_xs;
  for (int x = 0; x < n; ++x)
    for (int s = 0; s < 4; ++s) arc_to_xs[xs_[x][s]].push_back(x);
  int parts = 0;
  for (int x0 = 0; x0 < n; ++x0) {
    if (part[x0] >= 0) continue;
    std::deque<int> queue{x0};
    part[x0] = parts;
    while (!queue.empty()) {
      int x = queue.front();
      queue.pop_front();
      for (int s = 0; s < 4; ++s)
        for (int y : arc_to_xs[xs_[x][s]])
          if (part[y] < 0) {
            part[y] = parts;
            queue.push_back(y);
          }
    }
    ++parts;
  }

  std::vector<std::string> part_keys;
  for (int p = 0; p < parts; ++p) {
    std::vector<int> part_arcs;
    {
      std::set<int> s;
      for (int x = 0; x < n; ++x)
        if (part[x] == p)
          for (int k = 0; k < 4; ++k) s.insert(xs_[x][k]);
      part_arcs.assign(s.begin(), s.end());
    }

    // encode the part starting from `start`: arcs are renumbered in walk
    // order, continuing at the earliest-encountered unvisited arc when a
    // component closes up
    std::vector<int> id(arc_count_ + 1, 0);
    std::vector<int> enc_order;
    std::vector<char> enc_seen(arc_count_ + 1, 0);
    auto encode = [&](int start) {
      std::fill(id.begin(), id.end(), 0);
      std::fill(enc_seen.begin(), enc_seen.end(), 0);
      enc_order.clear();
      auto encounter = [&](int a) {
        if (!enc_seen[a]) {
          enc_seen[a] = 1;
          enc_order.push_back(a);
        }
      };
      int next_id = 1;
      std::size_t scan = 0;
      int comp_start = start;
      int cur = start;
      while (true) {
        id[cur] = next_id++;
        auto [x, s] = head_[cur];
        for (int k = 0; k < 4; ++k) encounter(xs_[x][k]);
        cur = succ_[cur];
        if (cur == comp_start) {
          // component finished; pick the next start, if any arcs remain
          int nxt = -1;
          for (; scan < enc_order.size(); ++scan)
            if (!id[enc_order[scan]]) {
              nxt = enc_order[scan];
              break;
            }
          if (nxt < 0) break;
          comp_start = cur = nxt;
        }
      }
      std::vector<CrossingTuple> renamed;
      for (int x = 0; x < n; ++x) {
        if (part[x] != p) continue;
        CrossingTuple t = xs_[x];
        for (int k = 0; k < 4; ++k) t[k] = id[t[k]];
        renamed.push_back(t);
      }
      std::sort(renamed.begin(), renamed.end());
      return renamed;
    };

    std::vector<CrossingTuple> best;
    for (int start : part_arcs) {
      std::vector<CrossingTuple> e = encode(start);
      if (best.empty() || e < best) best = std::move(e);
    }
    std::string key;
    for (const auto& t : best) key += tuple_str(t);
    part_keys.push_back(std::move(key));
  }

  std::sort(part_keys.begin(), part_keys.end());
  std::string key;
  for (const auto& k : part_keys) key += k + "|";
  key += "U" + std::to_string(unknots_);
  return key;
}

LinkDiagram disjoint_union(const LinkDiagram& d1, const LinkDiagram& d2) {
  std::vector<CrossingTuple> xs = d1.xs_;
  int shift = d1.arc_count_;
  for (CrossingTuple t : d2.xs_) {
    for (int s = 0; s < 4; ++s) t[s] += shift;
    xs.push_back(t);
  }
  return LinkDiagram::make(std::move(xs), d1.unknots_ + d2.unknots_);
}

std::pair<int, std::vector<int>> components(const LinkDiagram& d) {
  std::vector<int> assign(d.arc_count() + 1, -1);
  for (int a = 1; a <= d.arc_count(); ++a) assign[a] = d.arc_component(a);
  return {d.component_count(), std::move(assign)};
}

LinkDiagram LinkDiagram::parse_pd(const std::string& text) {
  std::string s;
  s.reserve(text.size());
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);

  std::size_t pos = 0;
  auto expect = [&](const std::string& tok) {
    if (s.compare(pos, tok.size(), tok) != 0)
      throw ParseError("expected '" + tok + "' at position " +
                       std::to_string(pos) + " of PD code");
    pos += tok.size();
  };
  auto read_int = [&]() {
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
      ++pos;
    if (pos == start) throw ParseError("expected an integer at position " +
                                       std::to_string(pos) + " of PD code");
    return std::stoi(s.substr(start, pos - start));
  };

  expect("PD[");
  std::vector<CrossingTuple> xs;
  if (pos < s.size() && s[pos] == ']') {
    ++pos;
  } else {
    while (true) {
      expect("X(");
      CrossingTuple t;
      for (int k = 0; k < 4; ++k) {
        t[k] = read_int();
        if (k < 3) expect(",");
      }
      expect(")");
      xs.push_back(t);
      if (pos < s.size() && s[pos] == ',') {
        ++pos;
        continue;
      }
      expect("]");
      break;
    }
  }
  int unknots = 0;
  if (pos < s.size()) {
    expect(";U=");
    unknots = read_int();
  }
  if (pos != s.size()) throw ParseError("trailing input after PD code");
  return make(std::move(xs), unknots);
}

std::string LinkDiagram::to_pd() const {
  std::string out = "PD[";
  for (std::size_t i = 0; i < xs_.size(); ++i) {
    if (i) out += ",";
    out += tuple_str(xs_[i]);
  }
  out += "]";
  if (unknots_ > 0) out += ";U=" + std::to_string(unknots_);
  return out;
}

}  // namespace tkt
