#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

#include "knotwork/diagram.hpp"

namespace knotwork {

// ---------------------------------------------------------------------
// Embedding data. The counterclockwise slot order around a crossing is
// forced by the crossing sign (strand ends alternate between the two
// lines):
//   sign +1: UNDER_IN, OVER_OUT, UNDER_OUT, OVER_IN
//   sign -1: UNDER_IN, OVER_IN, UNDER_OUT, OVER_OUT
// Faces of the sphere embedding are the orbits of next_dart below; a
// dart is an arc end pointing away from its crossing, encoded as
// crossing*4 + slot.
// ---------------------------------------------------------------------

inline const std::array<int, 4>& ccw_order(int sign) {
  static const std::array<int, 4> pos{UNDER_IN, OVER_OUT, UNDER_OUT, OVER_IN};
  static const std::array<int, 4> neg{UNDER_IN, OVER_IN, UNDER_OUT, OVER_OUT};
  return sign > 0 ? pos : neg;
}

inline int ccw_next_slot(int sign, int slot) {
  const auto& order = ccw_order(sign);
  for (int k = 0; k < 4; ++k)
    if (order[k] == slot) return order[(k + 1) % 4];
  throw std::logic_error("bad slot");
}

struct Dart {
  int crossing;
  int slot;
  int encode() const { return crossing * 4 + slot; }
};

inline Dart opposite_end(const LinkDiagram& d, Dart dart) {
  const int arc = d.crossings()[dart.crossing].arc[dart.slot];
  ArcEnd head = d.arc_head(arc);
  ArcEnd tail = d.arc_tail(arc);
  if (is_in_slot(dart.slot))
    return Dart{tail.crossing, tail.slot};
  return Dart{head.crossing, head.slot};
}

inline Dart next_dart(const LinkDiagram& d, Dart dart) {
  Dart o = opposite_end(d, dart);
  const int sign = d.crossings()[o.crossing].sign;
  return Dart{o.crossing, ccw_next_slot(sign, o.slot)};
}

// All faces of the embedding, each listed as its boundary darts.
inline std::vector<std::vector<Dart>> faces(const LinkDiagram& d) {
  std::vector<char> seen(d.crossing_count() * 4, 0);
  std::vector<std::vector<Dart>> out;
  for (int c = 0; c < d.crossing_count(); ++c)
    for (int s = 0; s < 4; ++s) {
      if (seen[c * 4 + s]) continue;
      std::vector<Dart> face;
      Dart cur{c, s};
      while (!seen[cur.encode()]) {
        seen[cur.encode()] = 1;
        face.push_back(cur);
        cur = next_dart(d, cur);
      }
      out.push_back(std::move(face));
    }
  return out;
}

enum class ReidemeisterMove { R1_add, R1_remove, R2_add, R2_remove, R3 };

// Site of a move: arcs for insertions, crossings or a face for removals.
struct MoveSite {
  int arc_a = -1;
  int arc_b = -1;
  int crossing = -1;
  std::vector<Dart> face;  // for R2_remove / R3 (validated bigon/triangle)
};

namespace detail {

inline bool on_over_line(int slot) { return slot == OVER_IN || slot == OVER_OUT; }

inline int line_in_slot(bool over) { return over ? OVER_IN : UNDER_IN; }
inline int line_out_slot(bool over) { return over ? OVER_OUT : UNDER_OUT; }

}  // namespace detail

// R1: add a kink with the given sign in the middle of an arc. Writhe
// changes by exactly `sign`.
inline LinkDiagram reidemeister_r1_add(const LinkDiagram& d, int arc, int sign) {
  if (arc < 0 || arc >= d.arc_count())
    throw std::invalid_argument("R1_add: bad arc");
  if (sign != 1 && sign != -1) throw std::invalid_argument("R1_add: bad sign");
  ArcEnd old_head = d.arc_head(arc);
  DiagramBuilder b = DiagramBuilder::from(d);
  const int loop = b.new_arc();
  const int tail_out = b.new_arc();
  CrossingRecord kink;
  kink.sign = sign;
  kink.arc[UNDER_IN] = arc;
  kink.arc[UNDER_OUT] = loop;
  kink.arc[OVER_IN] = loop;
  kink.arc[OVER_OUT] = tail_out;
  b.add_crossing(kink);
  b.crossing(old_head.crossing).arc[old_head.slot] = tail_out;
  return b.build();
}

inline bool is_r1_site(const LinkDiagram& d, int crossing) {
  if (crossing < 0 || crossing >= d.crossing_count()) return false;
  const auto& c = d.crossings()[crossing];
  return c.arc[UNDER_OUT] == c.arc[OVER_IN] || c.arc[OVER_OUT] == c.arc[UNDER_IN];
}

inline LinkDiagram reidemeister_r1_remove(const LinkDiagram& d, int crossing) {
  if (!is_r1_site(d, crossing))
    throw std::invalid_argument("R1_remove: crossing is not a kink");
  const auto& c = d.crossings()[crossing];
  DiagramBuilder b = DiagramBuilder::from(d);
  if (c.arc[UNDER_OUT] == c.arc[OVER_IN])
    b.glue(c.arc[UNDER_IN], c.arc[OVER_OUT]);
  else
    b.glue(c.arc[OVER_IN], c.arc[UNDER_OUT]);
  b.drop_crossing(crossing);
  return b.build();
}

// R2: push arc_a over arc_b across a face both arcs bound. Creates one
// positive and one negative crossing.
inline LinkDiagram reidemeister_r2_add(const LinkDiagram& d, int arc_a,
                                       int arc_b) {
  if (arc_a == arc_b || arc_a < 0 || arc_b < 0 || arc_a >= d.arc_count() ||
      arc_b >= d.arc_count())
    throw std::invalid_argument("R2_add: bad arc pair");

  // Find a face whose boundary carries both arcs and record the travel
  // direction of each (with or against the arc's orientation).
  std::optional<bool> fa, fb;
  for (const auto& face : faces(d)) {
    std::optional<bool> da, db;
    for (const Dart& dart : face) {
      const int arc = d.crossings()[dart.crossing].arc[dart.slot];
      const bool with_orientation = !is_in_slot(dart.slot);
      if (arc == arc_a && !da) da = with_orientation;
      if (arc == arc_b && !db) db = with_orientation;
    }
    if (da && db) {
      fa = da;
      fb = db;
      break;
    }
  }
  if (!fa) throw std::invalid_argument("R2_add: arcs do not share a face");

  ArcEnd head_a = d.arc_head(arc_a);
  ArcEnd head_b = d.arc_head(arc_b);
  DiagramBuilder b = DiagramBuilder::from(d);
  const int mid_a = b.new_arc();
  const int end_a = b.new_arc();
  const int mid_b = b.new_arc();
  const int end_b = b.new_arc();

  const int first_sign = *fb ? 1 : -1;
  const bool same_order = (*fa != *fb);  // meeting order along a vs along b

  CrossingRecord first, second;
  first.sign = first_sign;
  second.sign = -first_sign;
  // Along a: arc_a -> [first] -> mid_a -> [second] -> end_a.
  first.arc[OVER_IN] = arc_a;
  first.arc[OVER_OUT] = mid_a;
  second.arc[OVER_IN] = mid_a;
  second.arc[OVER_OUT] = end_a;
  // Along b: through [first, second] when same_order, else reversed.
  CrossingRecord& b_first = same_order ? first : second;
  CrossingRecord& b_second = same_order ? second : first;
  b_first.arc[UNDER_IN] = arc_b;
  b_first.arc[UNDER_OUT] = mid_b;
  b_second.arc[UNDER_IN] = mid_b;
  b_second.arc[UNDER_OUT] = end_b;

  b.add_crossing(first);
  b.add_crossing(second);
  b.crossing(head_a.crossing).arc[head_a.slot] = end_a;
  b.crossing(head_b.crossing).arc[head_b.slot] = end_b;
  return b.build();
}

// A bigon face is an R2_remove site when one strand passes over the
// other at both crossings (their signs are then opposite).
inline bool is_r2_site(const LinkDiagram& d, const std::vector<Dart>& face) {
  if (face.size() != 2) return false;
  const Dart d1 = face[0], d2 = face[1];
  if (d1.crossing == d2.crossing) return false;
  const auto& c1 = d.crossings()[d1.crossing];
  const auto& c2 = d.crossings()[d2.crossing];
  const int arc1 = c1.arc[d1.slot];
  const int arc2 = c2.arc[d2.slot];
  if (arc1 == arc2) return false;
  // Each bigon arc must run on the same line (over/over or under/under)
  // at both of its endpoints, and the two arcs on opposite lines.
  auto other_slot = [&](int arc, int crossing) {
    ArcEnd h = d.arc_head(arc), t = d.arc_tail(arc);
    return h.crossing == crossing ? t.slot : h.slot;
  };
  const bool a1_over = detail::on_over_line(d1.slot);
  const bool a2_over = detail::on_over_line(d2.slot);
  if (a1_over != detail::on_over_line(other_slot(arc1, d1.crossing))) return false;
  if (a2_over != detail::on_over_line(other_slot(arc2, d2.crossing))) return false;
  if (a1_over == a2_over) return false;
  return c1.sign == -c2.sign;
}

inline std::vector<std::vector<Dart>> r2_remove_sites(const LinkDiagram& d) {
  std::vector<std::vector<Dart>> out;
  for (auto& f : faces(d))
    if (is_r2_site(d, f)) out.push_back(f);
  return out;
}

inline LinkDiagram reidemeister_r2_remove(const LinkDiagram& d,
                                          const std::vector<Dart>& face) {
  if (!is_r2_site(d, face))
    throw std::invalid_argument("R2_remove: face is not a removable bigon");
  const int cx = face[0].crossing, cy = face[1].crossing;
  DiagramBuilder b = DiagramBuilder::from(d);
  // Reconnect each strand across its bigon arc: the arc entering at the
  // tail crossing continues as the arc leaving at the head crossing.
  for (const Dart& dart : face) {
    const int mid = d.crossings()[dart.crossing].arc[dart.slot];
    ArcEnd h = d.arc_head(mid), t = d.arc_tail(mid);
    const int in_arc =
        d.crossings()[t.crossing].arc[detail::line_in_slot(detail::on_over_line(t.slot))];
    const int out_arc =
        d.crossings()[h.crossing].arc[detail::line_out_slot(detail::on_over_line(h.slot))];
    b.glue(in_arc, out_arc);
  }
  // Drop the higher index first so the lower one stays valid.
  b.drop_crossing(std::max(cx, cy));
  b.drop_crossing(std::min(cx, cy));
  return b.build();
}

// A triangle face admits R3 when one of its three strands runs on the
// same line (over or under) at both of its triangle crossings.
inline bool is_r3_site(const LinkDiagram& d, const std::vector<Dart>& face) {
  if (face.size() != 3) return false;
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (face[i].crossing == face[j].crossing) return false;
  for (const Dart& dart : face) {
    const int arc = d.crossings()[dart.crossing].arc[dart.slot];
    ArcEnd h = d.arc_head(arc), t = d.arc_tail(arc);
    if (detail::on_over_line(h.slot) == detail::on_over_line(t.slot))
      return true;  // movable strand found
  }
  return false;
}

inline std::vector<std::vector<Dart>> r3_sites(const LinkDiagram& d) {
  std::vector<std::vector<Dart>> out;
  for (auto& f : faces(d))
    if (is_r3_site(d, f)) out.push_back(f);
  return out;
}

// Slide the triangle: each of the three strands swaps the order in which
// it passes through its two triangle crossings. Signs, over/under
// assignments and all external connections are preserved.
inline LinkDiagram reidemeister_r3(const LinkDiagram& d,
                                   const std::vector<Dart>& face) {
  if (!is_r3_site(d, face))
    throw std::invalid_argument("R3: face is not a movable triangle");
  DiagramBuilder b = DiagramBuilder::from(d);
  for (const Dart& dart : face) {
    const int arc = d.crossings()[dart.crossing].arc[dart.slot];
    ArcEnd h = d.arc_head(arc), t = d.arc_tail(arc);
    const bool over_at_head = detail::on_over_line(h.slot);
    const bool over_at_tail = detail::on_over_line(t.slot);
    auto& ch = b.crossing(h.crossing);
    auto& ct = b.crossing(t.crossing);
    std::swap(ch.arc[detail::line_in_slot(over_at_head)],
              ct.arc[detail::line_in_slot(over_at_tail)]);
    std::swap(ch.arc[detail::line_out_slot(over_at_head)],
              ct.arc[detail::line_out_slot(over_at_tail)]);
  }
  return b.build();
}

}  // namespace knotwork
