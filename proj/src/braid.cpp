#include "tkt/braid.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "tkt/errors.hpp"
#include "tangle_builder.hpp"

namespace tkt {

void BraidWord::validate() const {
  if (strands < 1) throw ValidationError("braid needs at least one strand");
  for (int e : word)
    if (e == 0 || std::abs(e) >= strands)
      throw ValidationError("braid letter " + std::to_string(e) +
                            " out of range for " + std::to_string(strands) +
                            " strands");
}

namespace {

struct ClosureBuild {
  LinkDiagram diagram;
  std::vector<int> tracked;  // mapped labels of requested raw arcs
};

// Builds the closure; track_mid = columns whose arc label right after the
// first `mid_letters` letters should be tracked, track_return = columns
// whose merged return arc should be tracked.
ClosureBuild build_closure(const BraidWord& b, int mid_letters,
                           const std::vector<int>& track_mid,
                           const std::vector<int>& track_return) {
  b.validate();
  detail::ColumnGrid grid;
  int n = b.strands;
  grid.arc.resize(n);
  grid.dir.assign(n, 1);
  std::iota(grid.arc.begin(), grid.arc.end(), 1);
  grid.next_label = n + 1;

  std::vector<int> mid_arcs;
  for (int i = 0; i < static_cast<int>(b.word.size()); ++i) {
    if (i == mid_letters)
      for (int col : track_mid) mid_arcs.push_back(grid.arc[col]);
    int e = b.word[i];
    grid.emit(std::abs(e) - 1, e > 0);
  }
  if (static_cast<int>(b.word.size()) == mid_letters)
    for (int col : track_mid) mid_arcs.push_back(grid.arc[col]);

  // close up: the top of column j joins the bottom arc j+1
  struct UF {
    std::map<int, int> p;
    int find(int a) {
      if (!p.count(a)) p[a] = a;
      while (p[a] != a) a = p[a] = p[p[a]];
      return a;
    }
    bool unite(int a, int b) {
      a = find(a);
      b = find(b);
      if (a == b) return true;
      p[a] = b;
      return false;
    }
  } uf;
  int circles = 0;
  for (int j = 0; j < n; ++j)
    if (uf.unite(j + 1, grid.arc[j])) ++circles;

  std::vector<CrossingTuple> xs = grid.tuples;
  for (auto& t : xs)
    for (int s = 0; s < 4; ++s) t[s] = uf.find(t[s]);

  std::vector<int> raw_tracked;
  for (int a : mid_arcs) raw_tracked.push_back(uf.find(a));
  for (int col : track_return) raw_tracked.push_back(uf.find(col + 1));

  auto [diagram, mapped] =
      LinkDiagram::make_tracked(std::move(xs), circles, raw_tracked);
  return {std::move(diagram), std::move(mapped)};
}

}  // namespace

LinkDiagram closure(const BraidWord& b) {
  return build_closure(b, 0, {}, {}).diagram;
}

int permutation_cycle_count(const BraidWord& b) {
  b.validate();
  std::vector<int> perm(b.strands);
  std::iota(perm.begin(), perm.end(), 0);
  for (int e : b.word) std::swap(perm[std::abs(e) - 1], perm[std::abs(e)]);
  std::vector<bool> seen(b.strands, false);
  int cycles = 0;
  for (int i = 0; i < b.strands; ++i) {
    if (seen[i]) continue;
    ++cycles;
    for (int j = i; !seen[j]; j = perm[j]) seen[j] = true;
  }
  return cycles;
}

void BraidTwistFamily::validate() const {
  beta1.validate();
  beta2.validate();
  if (beta1.strands != beta2.strands)
    throw ValidationError("beta1 and beta2 must share a strand count");
  if (p < 0 || q < 0 || p + q < 2)
    throw ValidationError("twist disk needs p, q >= 0 with p + q >= 2");
  if (p > beta1.strands || q > beta1.strands)
    throw ValidationError("p + q exceeds the available strands");
}

namespace {

// full positive twist on braid positions [lo, hi], as generator letters
void append_full_twist(std::vector<int>& out, int lo, int hi) {
  int width = hi - lo + 1;
  if (width < 2) return;
  for (int rep = 0; rep < width; ++rep)
    for (int j = lo; j < hi; ++j) out.push_back(j);
}

}  // namespace

// The two supported shapes carry verified word constructions, checked
// against the diagram-side twist by polynomial equality on several families
// and twist parameters:
//   q = 0:      beta1 . FT_p^n . beta2 on N strands.
//   p = q = 1:  on N + n strands, the marked strand walks out across the n
//               fresh strands between the boxes, and after beta2 the fresh
//               strands wrap back in a nested negative descent/ascent:
//                 beta1 . s_N s_{N+1} .. s_{N+n-1} . beta2
//                       . s_N^-1 .. s_{N+n-1}^-1 . s_{N+n-1}^-1 .. s_N^-1
// Other (p, q) shapes in this flat normal form pair the rightmost strand
// with its own closure return, which degenerates the region; no verified
// word construction exists for them here, so they are rejected for n >= 1.
BraidWord braid_family_word(const BraidTwistFamily& f, int n) {
  f.validate();
  if (n < 0)
    throw ValidationError("braid_family_word needs n >= 0; run the mirrored "
                          "family for negative twists");
  int N = f.strand_count();
  BraidWord out;
  out.strands = N + n * f.q;
  out.word = f.beta1.word;
  if (n == 0 || f.q == 0) {
    for (int k = 1; k <= n; ++k)
      append_full_twist(out.word, N - f.p + 1, N);
    out.word.insert(out.word.end(), f.beta2.word.begin(), f.beta2.word.end());
  } else if (f.p == 1 && f.q == 1) {
    for (int k = 1; k <= n; ++k) out.word.push_back(N + k - 1);
    out.word.insert(out.word.end(), f.beta2.word.begin(), f.beta2.word.end());
    for (int k = 1; k <= n; ++k) out.word.push_back(-(N + k - 1));
    for (int k = n; k >= 1; --k) out.word.push_back(-(N + k - 1));
  } else {
    throw ValidationError(
        "braid word synthesis supports the coherent (q = 0) and p = q = 1 "
        "normal forms; other shapes have no verified word construction");
  }
  out.validate();
  return out;
}

TwistFamily braid_family_diagram(const BraidTwistFamily& f) {
  f.validate();
  int N = f.strand_count();
  BraidWord whole;
  whole.strands = N;
  whole.word = f.beta1.word;
  whole.word.insert(whole.word.end(), f.beta2.word.begin(),
                    f.beta2.word.end());

  std::vector<int> mid_cols, ret_cols;
  for (int i = 0; i < f.p; ++i) mid_cols.push_back(N - f.p + i);
  for (int i = 0; i < f.q; ++i) ret_cols.push_back(N - 1 - i);

  auto built = build_closure(whole, static_cast<int>(f.beta1.word.size()),
                             mid_cols, ret_cols);

  std::vector<TwistStrand> strands;
  for (int i = 0; i < f.p; ++i) strands.push_back({built.tracked[i], +1});
  for (int i = 0; i < f.q; ++i)
    strands.push_back({built.tracked[f.p + i], -1});
  return TwistFamily::make(std::move(built.diagram),
                           TwistRegion(std::move(strands)));
}

std::vector<int> braid_index_ub_sequence(const BraidTwistFamily& f,
                                         int n_max) {
  f.validate();
  if (n_max < 0) throw ValidationError("braid_index_ub_sequence needs N >= 0");
  std::vector<int> out;
  for (int n = 0; n <= n_max; ++n) out.push_back(f.strand_count() + n * f.q);
  return out;
}

}  // namespace tkt
