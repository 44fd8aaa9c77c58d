#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "knotwork/braid.hpp"

namespace knotwork {

// Slot layout of a crossing. Each crossing carries four arc ids; every
// arc id appears exactly once in an IN slot and once in an OUT slot
// somewhere in the diagram. Orientation runs UNDER_IN -> UNDER_OUT and
// OVER_IN -> OVER_OUT.
enum Slot : int { UNDER_IN = 0, OVER_IN = 1, UNDER_OUT = 2, OVER_OUT = 3 };

inline bool is_in_slot(int s) { return s == UNDER_IN || s == OVER_IN; }
inline int matching_out(int s) { return s == UNDER_IN ? UNDER_OUT : OVER_OUT; }

struct CrossingRecord {
  std::array<int, 4> arc{};  // indexed by Slot
  int sign = 1;              // +1 or -1, right-hand convention
};

struct ArcEnd {
  int crossing = -1;
  int slot = -1;
};

// An oriented link diagram in PD form: signed crossings joined by
// oriented arcs, plus an explicit count of crossing-free circle
// components. Instances are immutable; rewrites build new diagrams.
class LinkDiagram {
 public:
  LinkDiagram() : free_loops_(0) { reindex(); }

  LinkDiagram(std::vector<CrossingRecord> crossings, int free_loops)
      : crossings_(std::move(crossings)), free_loops_(free_loops) {
    reindex();
    validate();
  }

  static LinkDiagram unknot() { return unlink(1); }
  static LinkDiagram unlink(int circles) {
    LinkDiagram d;
    d.free_loops_ = circles;
    return d;
  }

  const std::vector<CrossingRecord>& crossings() const { return crossings_; }
  int crossing_count() const { return static_cast<int>(crossings_.size()); }
  int free_loops() const { return free_loops_; }
  int arc_count() const { return 2 * crossing_count(); }

  ArcEnd arc_head(int arc) const { return heads_[arc]; }
  ArcEnd arc_tail(int arc) const { return tails_[arc]; }

  // Follow the strand through the crossing the arc runs into.
  int next_arc(int arc) const {
    ArcEnd h = heads_[arc];
    return crossings_[h.crossing].arc[matching_out(h.slot)];
  }

  int writhe() const {
    int w = 0;
    for (const auto& c : crossings_) w += c.sign;
    return w;
  }

  // Component index per arc (crossing-free circles are not represented
  // by arcs and are counted separately by free_loops()).
  std::vector<int> arc_components() const {
    std::vector<int> comp(arc_count(), -1);
    int n = 0;
    for (int a = 0; a < arc_count(); ++a) {
      if (comp[a] >= 0) continue;
      for (int b = a; comp[b] < 0; b = next_arc(b)) comp[b] = n;
      ++n;
    }
    return comp;
  }

  int component_count() const {
    const auto comp = arc_components();
    int n = comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
    return n + free_loops_;
  }

  void validate() const {
    std::vector<int> in_seen(arc_count(), 0), out_seen(arc_count(), 0);
    for (const auto& c : crossings_) {
      if (c.sign != 1 && c.sign != -1)
        throw std::invalid_argument("diagram: bad crossing sign");
      for (int s = 0; s < 4; ++s) {
        int a = c.arc[s];
        if (a < 0 || a >= arc_count())
          throw std::invalid_argument("diagram: arc id out of range");
        (is_in_slot(s) ? in_seen : out_seen)[a] += 1;
      }
    }
    for (int a = 0; a < arc_count(); ++a)
      if (in_seen[a] != 1 || out_seen[a] != 1)
        throw std::invalid_argument("diagram: arc " + std::to_string(a) +
                                    " is not used exactly once per direction");
    if (free_loops_ < 0) throw std::invalid_argument("diagram: negative loops");
  }

 private:
  std::vector<CrossingRecord> crossings_;
  int free_loops_ = 0;
  std::vector<ArcEnd> heads_, tails_;

  void reindex() {
    heads_.assign(arc_count(), ArcEnd{});
    tails_.assign(arc_count(), ArcEnd{});
    for (int c = 0; c < crossing_count(); ++c)
      for (int s = 0; s < 4; ++s) {
        int a = crossings_[c].arc[s];
        if (a < 0 || a >= arc_count()) continue;  // caught by validate()
        (is_in_slot(s) ? heads_ : tails_)[a] = ArcEnd{c, s};
      }
  }
};

// ---------------------------------------------------------------------
// Diagram construction helpers. DiagramBuilder keeps arcs in a union-find
// so that surgeries can glue arc ends together and circles that lose all
// their crossings are swept into the free-loop count.
// ---------------------------------------------------------------------

class DiagramBuilder {
 public:
  explicit DiagramBuilder(int initial_arcs = 0) : parent_(initial_arcs) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  static DiagramBuilder from(const LinkDiagram& d) {
    DiagramBuilder b(d.arc_count());
    b.crossings_ = d.crossings();
    b.free_loops_ = d.free_loops();
    return b;
  }

  int new_arc() {
    parent_.push_back(static_cast<int>(parent_.size()));
    return parent_.back();
  }

  int add_crossing(const CrossingRecord& c) {
    crossings_.push_back(c);
    return static_cast<int>(crossings_.size()) - 1;
  }

  CrossingRecord& crossing(int i) { return crossings_[i]; }

  void add_free_loops(int n) { free_loops_ += n; }

  int find(int a) {
    while (parent_[a] != a) a = parent_[a] = parent_[parent_[a]];
    return a;
  }

  // Glue two arc ends into a single arc. Gluing an arc to itself closes
  // a circle that no longer meets any crossing; it becomes a free loop.
  void glue(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b)
      ++free_loops_;
    else
      parent_[a] = b;
  }

  void drop_crossing(int i) {
    crossings_.erase(crossings_.begin() + i);
  }

  // Resolve unions and renumber surviving arcs densely.
  LinkDiagram build() {
    std::map<int, int> dense;
    for (auto& c : crossings_)
      for (int s = 0; s < 4; ++s) {
        int root = find(c.arc[s]);
        auto [it, fresh] = dense.try_emplace(root, static_cast<int>(dense.size()));
        c.arc[s] = it->second;
      }
    return LinkDiagram(crossings_, free_loops_);
  }

 private:
  std::vector<CrossingRecord> crossings_;
  std::vector<int> parent_;
  int free_loops_ = 0;
};

// Closure of a braid word. Crossing k corresponds to letter k in order;
// crossing signs equal letter signs; strand positions untouched by any
// letter close into free loops.
inline LinkDiagram closure_to_diagram(const BraidWord& w) {
  DiagramBuilder b;
  const int n = w.strands;
  std::vector<int> top(n), cur(n);
  for (int p = 0; p < n; ++p) top[p] = cur[p] = b.new_arc();
  std::vector<bool> touched(n, false);
  for (int k : w.letters) {
    const int i = letter_index(k) - 1;
    touched[i] = touched[i + 1] = true;
    const int in_lo = cur[i], in_hi = cur[i + 1];
    const int out_lo = b.new_arc(), out_hi = b.new_arc();
    CrossingRecord c;
    c.sign = letter_sign(k);
    if (k > 0) {
      // Strand at position i passes over and exits at position i+1.
      c.arc[OVER_IN] = in_lo;
      c.arc[OVER_OUT] = out_hi;
      c.arc[UNDER_IN] = in_hi;
      c.arc[UNDER_OUT] = out_lo;
    } else {
      c.arc[UNDER_IN] = in_lo;
      c.arc[UNDER_OUT] = out_hi;
      c.arc[OVER_IN] = in_hi;
      c.arc[OVER_OUT] = out_lo;
    }
    b.add_crossing(c);
    cur[i] = out_lo;
    cur[i + 1] = out_hi;
  }
  for (int p = 0; p < n; ++p) {
    if (touched[p])
      b.glue(cur[p], top[p]);
    else
      b.add_free_loops(1);
  }
  return b.build();
}

enum class ResolveMode { crossing_switch, smooth_oriented };

// Switch flips over/under at one crossing (K+ <-> K-); smooth_oriented
// replaces it by the orientation-respecting non-crossing (K0).
inline LinkDiagram resolve_crossing(const LinkDiagram& d, int crossing,
                                    ResolveMode mode) {
  if (crossing < 0 || crossing >= d.crossing_count())
    throw std::invalid_argument("resolve_crossing: bad crossing id");
  if (mode == ResolveMode::crossing_switch) {
    auto crossings = d.crossings();
    auto& c = crossings[crossing];
    std::swap(c.arc[UNDER_IN], c.arc[OVER_IN]);
    std::swap(c.arc[UNDER_OUT], c.arc[OVER_OUT]);
    c.sign = -c.sign;
    return LinkDiagram(std::move(crossings), d.free_loops());
  }
  DiagramBuilder b = DiagramBuilder::from(d);
  const auto& c = d.crossings()[crossing];
  b.glue(c.arc[OVER_IN], c.arc[UNDER_OUT]);
  b.glue(c.arc[UNDER_IN], c.arc[OVER_OUT]);
  b.drop_crossing(crossing);
  return b.build();
}

// Mirror image: every crossing switched. Writhe negates.
inline LinkDiagram mirror(const LinkDiagram& d) {
  auto crossings = d.crossings();
  for (auto& c : crossings) {
    std::swap(c.arc[UNDER_IN], c.arc[OVER_IN]);
    std::swap(c.arc[UNDER_OUT], c.arc[OVER_OUT]);
    c.sign = -c.sign;
  }
  return LinkDiagram(std::move(crossings), d.free_loops());
}

// Number of closed loops after smoothing every crossing the
// orientation-respecting way (the circles of the Seifert algorithm).
inline int seifert_circle_count(const LinkDiagram& d) {
  DiagramBuilder b(d.arc_count());
  for (const auto& c : d.crossings()) {
    b.glue(c.arc[OVER_IN], c.arc[UNDER_OUT]);
    b.glue(c.arc[UNDER_IN], c.arc[OVER_OUT]);
  }
  std::vector<char> seen(d.arc_count(), 0);
  int circles = 0;
  for (int a = 0; a < d.arc_count(); ++a) {
    int r = b.find(a);
    if (!seen[r]) {
      seen[r] = 1;
      ++circles;
    }
  }
  return circles + d.free_loops();
}

// ---------------------------------------------------------------------
// Canonical code: a string that is identical for any relabeling of the
// same diagram. The traversal code over one starting-arc choice lists,
// per arc step, the crossing met (numbered by first appearance), the
// strand role there, and the crossing sign; the canonical form minimizes
// over all component orders and starting arcs.
// ---------------------------------------------------------------------

namespace detail {

struct CodeState {
  std::vector<int> crossing_id;  // -1 until first visit
  int next_id = 0;
  std::vector<int> tokens;
};

inline void emit_component_code(const LinkDiagram& d, int start, CodeState& st) {
  int a = start;
  do {
    ArcEnd h = d.arc_head(a);
    int& id = st.crossing_id[h.crossing];
    if (id < 0) id = st.next_id++;
    const auto& c = d.crossings()[h.crossing];
    st.tokens.push_back(id * 8 + (h.slot == UNDER_IN ? 0 : 1) * 2 +
                        (c.sign > 0 ? 1 : 0));
    a = d.next_arc(a);
  } while (a != start);
  st.tokens.push_back(-1);  // component separator
}

// Depth-first minimization over the remaining components' start arcs.
inline void minimize_code(const LinkDiagram& d,
                          const std::vector<std::vector<int>>& comp_arcs,
                          std::vector<bool>& used, const CodeState& st,
                          std::vector<int>& best, bool& have_best) {
  bool all_used = true;
  for (size_t i = 0; i < comp_arcs.size(); ++i) all_used &= used[i];
  if (all_used) {
    if (!have_best || st.tokens < best) {
      best = st.tokens;
      have_best = true;
    }
    return;
  }
  // Candidate segments from every unused component and start arc; only
  // the minimal segment extensions are worth recursing into.
  std::vector<std::pair<size_t, int>> arg_min;
  CodeState best_ext;
  for (size_t i = 0; i < comp_arcs.size(); ++i) {
    if (used[i]) continue;
    for (int start : comp_arcs[i]) {
      CodeState ext = st;
      emit_component_code(d, start, ext);
      if (arg_min.empty() || ext.tokens < best_ext.tokens) {
        best_ext = ext;
        arg_min.assign(1, {i, start});
      } else if (ext.tokens == best_ext.tokens) {
        arg_min.push_back({i, start});
      }
    }
  }
  for (auto [i, start] : arg_min) {
    CodeState ext = st;
    emit_component_code(d, start, ext);
    used[i] = true;
    minimize_code(d, comp_arcs, used, ext, best, have_best);
    used[i] = false;
  }
}

}  // namespace detail

inline std::string canonical_code(const LinkDiagram& d) {
  std::ostringstream os;
  os << "U" << d.free_loops() << "|";
  if (d.crossing_count() == 0) return os.str();

  const auto comp = d.arc_components();
  const int ncomp = *std::max_element(comp.begin(), comp.end()) + 1;
  std::vector<std::vector<int>> comp_arcs(ncomp);
  for (int a = 0; a < d.arc_count(); ++a) comp_arcs[comp[a]].push_back(a);

  detail::CodeState st;
  st.crossing_id.assign(d.crossing_count(), -1);
  std::vector<bool> used(ncomp, false);
  std::vector<int> best;
  bool have_best = false;
  detail::minimize_code(d, comp_arcs, used, st, best, have_best);

  for (int tok : best) {
    if (tok < 0) {
      os << "/";
      continue;
    }
    os << (tok / 8) << ((tok & 2) ? 'o' : 'u') << ((tok & 1) ? '+' : '-');
  }
  return os.str();
}

}  // namespace knotwork
