#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "knotwork/braid.hpp"
#include "knotwork/diagram.hpp"
#include "knotwork/matrix.hpp"

namespace knotwork {

// Data of the Seifert surface built from a diagram (or from the
// disk-and-band surface of a braid word): circle count s, crossing count
// c, boundary components mu, Euler characteristic chi = s - c, genus.
struct SeifertSurfaceData {
  int circles = 0;
  int crossings = 0;
  int boundary_components = 0;
  int euler = 0;
  int genus = 0;
  std::optional<Matrix<std::int64_t>> matrix;  // braid-derived surfaces only
};

inline int seifert_circles(const LinkDiagram& d) {
  return seifert_circle_count(d);
}

// chi = s - c and g = (2 - mu - chi)/2. An odd value of 2 - mu - chi
// signals a disconnected surface, which the caller must split first.
inline std::pair<int, int> euler_genus(int circles, int crossings,
                                       int boundary_components) {
  const int chi = circles - crossings;
  const int twice_genus = 2 - boundary_components - chi;
  if (twice_genus % 2 != 0 || twice_genus < 0)
    throw std::domain_error("euler_genus: surface is not connected");
  return {chi, twice_genus / 2};
}

// The disk-and-band surface of a braid word: one disk per strand, one
// half-twisted band per letter. Connected exactly when every generator
// index occurs. First homology is generated by one loop per pair of
// consecutive same-index letters, giving a (c - n + 1) square Seifert
// matrix of pairwise linking numbers.
//
// The local linking rules below (diagonal from the two band signs, one
// one-sided entry per shared band, one unit entry per interleaved
// adjacent-index pair) fix a sign convention the source material leaves
// open; the choice here is pinned by the cross-check against the Burau
// route over the whole test catalog.
inline Matrix<std::int64_t> seifert_matrix_from_braid(const BraidWord& w) {
  const int n = w.strands;
  std::vector<std::vector<int>> position(n);  // letter positions per index
  for (int k = 0; k < w.length(); ++k)
    position[letter_index(w.letters[k]) - 1].push_back(k);
  for (int i = 0; i + 1 < n; ++i)
    if (position[i].empty())
      throw std::invalid_argument(
          "seifert_matrix_from_braid: generator " + std::to_string(i + 1) +
          " never occurs (disconnected surface)");

  // Loop (i, j) spans letters position[i][j] and position[i][j+1].
  std::vector<std::pair<int, int>> span_of;  // row -> (first, second) letter
  std::vector<int> index_of;                 // row -> generator index i
  for (int i = 0; i + 1 < n; ++i) {
    for (size_t j = 0; j + 1 < position[i].size(); ++j) {
      span_of.push_back({position[i][j], position[i][j + 1]});
      index_of.push_back(i);
    }
  }
  const std::size_t m = span_of.size();
  Matrix<std::int64_t> mat(m, m);

  auto sign_at = [&](int letter_pos) {
    return letter_sign(w.letters[letter_pos]);
  };

  for (std::size_t r = 0; r < m; ++r) {
    const auto [p1, p2] = span_of[r];
    mat(r, r) = -(sign_at(p1) + sign_at(p2)) / 2;
    // Consecutive loop on the same index, sharing the middle band p2.
    if (r + 1 < m && index_of[r + 1] == index_of[r]) {
      const int eps = sign_at(p2);
      if (eps > 0)
        mat(r, r + 1) = 1;
      else
        mat(r + 1, r) = -1;
    }
  }
  // Loops on adjacent indices link once when their spans interleave.
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t s = 0; s < m; ++s) {
      if (index_of[s] != index_of[r] + 1) continue;
      const auto [p1, p2] = span_of[r];
      const auto [q1, q2] = span_of[s];
      if (p1 < q1 && q1 < p2 && p2 < q2)
        mat(r, s) = -1;  // lower-index loop starts first
      else if (q1 < p1 && p1 < q2 && q2 < p2)
        mat(r, s) = 1;  // higher-index loop starts first
    }
  return mat;
}

// Alexander polynomial from a Seifert matrix: det(M - t M^T), normalized.
// The empty matrix gives the unknot polynomial 1.
inline Laurent1 alexander_from_seifert(const Matrix<std::int64_t>& m) {
  if (m.rows() != m.cols())
    throw std::invalid_argument("alexander_from_seifert: matrix not square");
  Matrix<Laurent1> a(m.rows(), m.rows());
  const Laurent1 t = laurent1_term(1, 2);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      a(i, j) = Laurent1::constant(m(i, j)) - t * Laurent1::constant(m(j, i));
  Laurent1 det = determinant(a);
  return det.is_zero() ? det : normalize_units(det);
}

// Alexander polynomial from the reduced Burau representation:
//   det(burau(w) - I) * (1 - t) / (1 - t^n), normalized.
// The division is exact in the Laurent ring whenever the conventions are
// consistent; an inexact division is a bug, not bad input. A zero
// determinant (split closure) passes through as the zero polynomial.
inline Laurent1 alexander_from_burau(const BraidWord& w) {
  if (w.strands < 2)
    throw std::invalid_argument("alexander_from_burau: needs >= 2 strands");
  Matrix<Laurent1> b = burau_reduced(w);
  for (std::size_t i = 0; i < b.rows(); ++i)
    b(i, i) -= Laurent1::constant(1);
  Laurent1 det = determinant(b);
  if (det.is_zero()) return det;
  const Laurent1 one = Laurent1::constant(1);
  Laurent1 numerator = det * (one - laurent1_term(1, 2));
  Laurent1 denominator = one - laurent1_term(1, 2 * w.strands);
  auto q = exact_divide(numerator, denominator);
  if (!q)
    throw std::logic_error("alexander_from_burau: inexact division by 1-t^n");
  return normalize_units(*q);
}

// Half the exponent span of the Alexander polynomial bounds the genus of
// every Seifert surface of the knot from below.
inline HalfInt genus_lower_bound(const Laurent1& alexander) {
  HalfInt span = degree_span(alexander);
  return HalfInt(span.twice / 2);
}

// Surface data for a braid closure: circles = strand count, crossings =
// word length. The Seifert matrix is attached when the surface is
// connected.
inline SeifertSurfaceData seifert_data_from_braid(const BraidWord& w) {
  SeifertSurfaceData data;
  data.circles = w.strands;
  data.crossings = w.length();
  data.boundary_components = permutation_and_components(w).second;
  auto [chi, g] = euler_genus(data.circles, data.crossings,
                              data.boundary_components);
  data.euler = chi;
  data.genus = g;
  bool connected = true;
  std::vector<bool> seen(w.strands, false);
  for (int k : w.letters) seen[letter_index(k) - 1] = true;
  for (int i = 0; i + 1 < w.strands; ++i) connected = connected && seen[i];
  if (connected) data.matrix = seifert_matrix_from_braid(w);
  return data;
}

// ---------------------------------------------------------------------
// Fibrability screening for braid closures that are knots.
// ---------------------------------------------------------------------

enum class FibrabilityVerdict {
  fibred_by_homogeneity,  // homogeneous braid word
  braidable_open_book,    // at most 3 strands
  not_fibred,             // non-monic Alexander rules fibredness out
  inconclusive
};

inline const char* to_string(FibrabilityVerdict v) {
  switch (v) {
    case FibrabilityVerdict::fibred_by_homogeneity:
      return "fibred-by-homogeneity";
    case FibrabilityVerdict::braidable_open_book:
      return "braidable-open-book";
    case FibrabilityVerdict::not_fibred:
      return "not-fibred";
    default:
      return "inconclusive";
  }
}

struct FibrabilityReport {
  bool homogeneous = false;
  bool strands_leq_3 = false;
  bool monic_alexander = false;
  Laurent1 alexander;
  FibrabilityVerdict verdict = FibrabilityVerdict::inconclusive;
};

inline FibrabilityReport fibrability_report(const BraidWord& w) {
  if (permutation_and_components(w).second != 1)
    throw std::invalid_argument("fibrability_report: closure is not a knot");
  FibrabilityReport report;
  report.homogeneous = is_homogeneous(w);
  report.strands_leq_3 = w.strands <= 3;
  report.alexander = w.strands >= 2 ? alexander_from_burau(w)
                                    : Laurent1::constant(1);
  report.monic_alexander = is_monic(report.alexander);
  if (report.homogeneous)
    report.verdict = FibrabilityVerdict::fibred_by_homogeneity;
  else if (report.strands_leq_3)
    report.verdict = FibrabilityVerdict::braidable_open_book;
  else if (!report.monic_alexander)
    report.verdict = FibrabilityVerdict::not_fibred;
  else
    report.verdict = FibrabilityVerdict::inconclusive;
  return report;
}

}  // namespace knotwork
