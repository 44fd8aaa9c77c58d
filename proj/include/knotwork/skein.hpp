#pragma once

#include <cstdlib>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "knotwork/diagram.hpp"
#include "knotwork/laurent.hpp"

namespace knotwork {

// A three-term crossing relation, solved for the diagram at hand:
//   value(K+) = switch_pos * value(K-) + smooth_pos * value(K0)
//   value(K-) = switch_neg * value(K+) + smooth_neg * value(K0)
// together with the unknot value and the factor picked up by each extra
// unlinked component.
template <typename Poly>
struct SkeinRelation {
  std::string name;
  Poly switch_pos, smooth_pos;
  Poly switch_neg, smooth_neg;
  Poly unknot_value;
  Poly unlink_factor;
};

// Conway: D(K+) - D(K-) = w D(K0), D(unknot) = 1, split component -> 0.
inline SkeinRelation<Laurent1> conway_relation() {
  return {"conway",
          Laurent1::constant(1),  laurent1_term(1, 2),
          Laurent1::constant(1),  laurent1_term(-1, 2),
          Laurent1::constant(1),  Laurent1::zero()};
}

// Jones: t^-1 V(K+) - t V(K-) = (t^(1/2) - t^(-1/2)) V(K0), V(unknot) = 1,
// split component -> -(t^(1/2) + t^(-1/2)).
inline SkeinRelation<Laurent1> jones_relation() {
  Laurent1 tz = laurent1_term(1, 3) + laurent1_term(-1, 1);       // t^(3/2)-t^(1/2)
  Laurent1 tz_inv = laurent1_term(1, -3) + laurent1_term(-1, -1); // t^(-3/2)-t^(-1/2)
  return {"jones",
          laurent1_term(1, 4),  tz,
          laurent1_term(1, -4), tz_inv,
          Laurent1::constant(1),
          laurent1_term(-1, 1) + laurent1_term(-1, -1)};
}

// HOMFLY: a P(K+) - a^-1 P(K-) = w P(K0), P(unknot) = 1, split
// component -> (a - a^-1) / w.
inline SkeinRelation<Laurent2> homfly_relation() {
  return {"homfly",
          laurent2_term(1, -4, 0), laurent2_term(1, -2, 2),
          laurent2_term(1, 4, 0),  laurent2_term(-1, 2, 2),
          Laurent2::constant(1),
          laurent2_term(1, 2, -2) + laurent2_term(-1, -2, -2)};
}

// Memoized skein-recursion engine. Strategy: walk the diagram in a fixed
// traversal; the first crossing met on its under-strand obstructs the
// diagram from being descending. Branch on switching it (fewer bad
// crossings, same size) and smoothing it (one crossing fewer); descending
// diagrams are unlinks and are read off directly. The memo table maps
// canonical codes to values; one evaluator owns one table, so concurrent
// use wants one evaluator per thread.
template <typename Poly>
class SkeinEvaluator {
 public:
  explicit SkeinEvaluator(SkeinRelation<Poly> relation, bool memoize = true,
                          int max_crossings = default_crossing_cap())
      : rel_(std::move(relation)), memoize_(memoize), cap_(max_crossings) {}

  // Crossing cap for one evaluation, overridable through the
  // KNOTWORK_SKEIN_MAX_CROSSINGS environment variable.
  static int default_crossing_cap() {
    if (const char* env = std::getenv("KNOTWORK_SKEIN_MAX_CROSSINGS")) {
      int v = std::atoi(env);
      if (v > 0) return v;
    }
    return 24;
  }

  const SkeinRelation<Poly>& relation() const { return rel_; }
  std::size_t memo_size() const { return memo_.size(); }

  Poly evaluate(const LinkDiagram& d) {
    if (d.component_count() == 0)
      throw std::invalid_argument("skein: empty diagram");
    if (d.crossing_count() > cap_)
      throw std::invalid_argument("skein: crossing count " +
                                  std::to_string(d.crossing_count()) +
                                  " exceeds cap " + std::to_string(cap_));
    return eval_rec(d);
  }

 private:
  SkeinRelation<Poly> rel_;
  bool memoize_;
  int cap_;
  std::unordered_map<std::string, Poly> memo_;

  Poly unlink_value(int components) const {
    Poly v = rel_.unknot_value;
    for (int i = 1; i < components; ++i) v = v * rel_.unlink_factor;
    return v;
  }

  // First crossing whose first visit arrives on the under-strand, in the
  // fixed traversal (components ordered by least arc id, each started at
  // its least arc). Returns -1 for a descending diagram.
  static int first_bad_crossing(const LinkDiagram& d) {
    std::vector<char> visited(d.crossing_count(), 0);
    std::vector<char> arc_seen(d.arc_count(), 0);
    for (int start = 0; start < d.arc_count(); ++start) {
      if (arc_seen[start]) continue;
      int a = start;
      do {
        arc_seen[a] = 1;
        ArcEnd h = d.arc_head(a);
        if (!visited[h.crossing]) {
          visited[h.crossing] = 1;
          if (h.slot == UNDER_IN) return h.crossing;
        }
        a = d.next_arc(a);
      } while (a != start);
    }
    return -1;
  }

  Poly eval_rec(const LinkDiagram& d) {
    if (d.crossing_count() == 0) return unlink_value(d.free_loops());

    std::string key;
    if (memoize_) {
      key = canonical_code(d);
      auto it = memo_.find(key);
      if (it != memo_.end()) return it->second;
    }

    Poly result;
    const int bad = first_bad_crossing(d);
    if (bad < 0) {
      result = unlink_value(d.component_count());
    } else {
      const int sign = d.crossings()[bad].sign;
      Poly switched =
          eval_rec(resolve_crossing(d, bad, ResolveMode::crossing_switch));
      Poly smoothed =
          eval_rec(resolve_crossing(d, bad, ResolveMode::smooth_oriented));
      if (sign > 0)
        result = rel_.switch_pos * switched + rel_.smooth_pos * smoothed;
      else
        result = rel_.switch_neg * switched + rel_.smooth_neg * smoothed;
    }
    if (memoize_) memo_.emplace(std::move(key), result);
    return result;
  }
};

inline Laurent1 skein_conway(const LinkDiagram& d) {
  SkeinEvaluator<Laurent1> ev(conway_relation());
  return ev.evaluate(d);
}
inline Laurent1 skein_jones(const LinkDiagram& d) {
  SkeinEvaluator<Laurent1> ev(jones_relation());
  return ev.evaluate(d);
}
inline Laurent2 skein_homfly(const LinkDiagram& d) {
  SkeinEvaluator<Laurent2> ev(homfly_relation());
  return ev.evaluate(d);
}

// ---------------------------------------------------------------------
// Kauffman bracket state sum: an independent route to the Jones
// polynomial used as an oracle for the skein engine. The 2^c states make
// the cap mandatory.
// ---------------------------------------------------------------------

inline Laurent1 kauffman_bracket_jones(const LinkDiagram& d,
                                       int max_crossings = 20) {
  const int c = d.crossing_count();
  if (c > max_crossings)
    throw std::invalid_argument("kauffman bracket: crossing cap exceeded");
  if (d.component_count() == 0)
    throw std::invalid_argument("kauffman bracket: empty diagram");

  // Bracket in the variable A (doubled exponents as usual).
  const Laurent1 loop_value = laurent1_term(-1, 4) + laurent1_term(-1, -4);
  Laurent1 bracket;

  std::vector<int> parent(d.arc_count());
  for (std::uint32_t state = 0; state < (1u << c); ++state) {
    for (int a = 0; a < d.arc_count(); ++a) parent[a] = a;
    auto find = [&](int a) {
      while (parent[a] != a) a = parent[a] = parent[parent[a]];
      return a;
    };
    auto unite = [&](int a, int b) { parent[find(a)] = find(b); };

    int exponent = 0;  // (#A - #B) smoothings
    for (int i = 0; i < c; ++i) {
      const auto& cr = d.crossings()[i];
      // For a positive crossing the A-smoothing is the oriented one; for
      // a negative crossing it is the other way around.
      const bool a_smoothing = ((state >> i) & 1) == 0;
      exponent += a_smoothing ? 1 : -1;
      const bool oriented = (cr.sign > 0) == a_smoothing;
      if (oriented) {
        unite(cr.arc[OVER_IN], cr.arc[UNDER_OUT]);
        unite(cr.arc[UNDER_IN], cr.arc[OVER_OUT]);
      } else {
        unite(cr.arc[OVER_IN], cr.arc[UNDER_IN]);
        unite(cr.arc[OVER_OUT], cr.arc[UNDER_OUT]);
      }
    }
    int loops = d.free_loops();
    for (int a = 0; a < d.arc_count(); ++a)
      if (find(a) == a) ++loops;
    bracket += laurent1_term(1, 2 * exponent) * loop_value.pow(loops - 1);
  }

  // Normalize by (-A)^(-3 writhe) and substitute t = A^(-4).
  const int w = d.writhe();
  Laurent1 f = bracket.shifted({-6 * w});
  if (w % 2 != 0) f = -f;
  Laurent1 jones;
  for (const auto& [e, coeff] : f.terms()) {
    // A-power k becomes t^(-k/4); stored doubled exponents make that
    // -e/4, which is integral exactly when the result lies in
    // Z[t^(1/2), t^(-1/2)].
    if (e[0] % 4 != 0)
      throw std::logic_error("kauffman bracket: stray A-power after normalization");
    jones.add_term({-e[0] / 4}, coeff);
  }
  return jones;
}

// ---------------------------------------------------------------------
// HOMFLY specializations.
// ---------------------------------------------------------------------

enum class HomflySpecial { conway, jones };

// a = 1 recovers Conway; a = t^-1, w = t^(1/2) - t^(-1/2) recovers Jones.
// Negative w-powers must cancel (Conway) or divide out exactly (Jones);
// anything left over signals a convention mismatch and throws.
inline Laurent1 specialize_homfly(const Laurent2& p, HomflySpecial target) {
  if (target == HomflySpecial::conway) {
    Laurent1 out;
    for (const auto& [e, coeff] : p.terms()) out.add_term({e[1]}, coeff);
    if (!out.is_zero() && lowest_exponent(out) < 0)
      throw std::logic_error("homfly->conway: negative w-powers remain");
    return out;
  }
  const Laurent1 z = laurent1_term(1, 1) + laurent1_term(-1, -1);
  DoubledExp min_w = 0;
  for (const auto& [e, coeff] : p.terms()) min_w = std::min(min_w, e[1]);
  const int lift = (-min_w) / 2;  // w-exponents are whole powers
  Laurent1 lifted;
  for (const auto& [e, coeff] : p.terms()) {
    if (e[1] % 2 != 0)
      throw std::logic_error("homfly->jones: fractional w-power");
    Laurent1 term = laurent1_term(coeff, -e[0]) * z.pow(e[1] / 2 + lift);
    lifted += term;
  }
  auto q = exact_divide(lifted, z.pow(lift));
  if (!q) throw std::logic_error("homfly->jones: substitution is not Laurent");
  return *q;
}

// Conway -> Alexander: substitute w = t^(1/2) - t^(-1/2). The result is
// left unnormalized so a zero polynomial (split links) passes through.
inline Laurent1 conway_to_alexander(const Laurent1& conway) {
  const Laurent1 z = laurent1_term(1, 1) + laurent1_term(-1, -1);
  Laurent1 out;
  for (const auto& [e, coeff] : conway.terms()) {
    if (e[0] < 0 || e[0] % 2 != 0)
      throw std::invalid_argument("conway_to_alexander: not a polynomial in w");
    out += Laurent1::constant(coeff) * z.pow(e[0] / 2);
  }
  return out;
}

enum class ChiralityVerdict { chiral_evidence, inconclusive };

// Jones distinguishes many knots from their mirrors; equality proves
// nothing, hence "inconclusive".
inline ChiralityVerdict detect_chirality(const LinkDiagram& d) {
  SkeinEvaluator<Laurent1> ev(jones_relation());
  return ev.evaluate(d) != ev.evaluate(mirror(d))
             ? ChiralityVerdict::chiral_evidence
             : ChiralityVerdict::inconclusive;
}

}  // namespace knotwork
