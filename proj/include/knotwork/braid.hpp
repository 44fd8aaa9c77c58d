#pragma once

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "knotwork/matrix.hpp"

namespace knotwork {

// A word in the Artin generators of the braid group on `strands` strands.
// Letters are nonzero integers: +i stands for sigma_i, -i for its inverse.
// Letters act left to right, top to bottom in the diagram.
struct BraidWord {
  int strands = 1;
  std::vector<int> letters;

  BraidWord() = default;
  BraidWord(int n, std::vector<int> word) : strands(n), letters(std::move(word)) {
    validate();
  }

  void validate() const {
    if (strands < 1) throw std::invalid_argument("braid: strands must be >= 1");
    for (int k : letters) {
      if (k == 0) throw std::invalid_argument("braid: zero letter");
      if (std::abs(k) >= strands)
        throw std::invalid_argument("braid: letter index " +
                                    std::to_string(std::abs(k)) +
                                    " out of range for " +
                                    std::to_string(strands) + " strands");
    }
  }

  int length() const { return static_cast<int>(letters.size()); }

  friend bool operator==(const BraidWord& a, const BraidWord& b) {
    return a.strands == b.strands && a.letters == b.letters;
  }

  std::string str() const {
    std::ostringstream os;
    os << "n=" << strands;
    for (int k : letters) os << ' ' << k;
    return os.str();
  }
};

inline int letter_index(int k) { return std::abs(k); }
inline int letter_sign(int k) { return k > 0 ? 1 : -1; }

// Whitespace-separated nonzero integers; an optional "n=<k>" prefix pins
// the strand count, otherwise n = 1 + max |letter|.
inline BraidWord parse_braid(const std::string& text) {
  std::istringstream is(text);
  std::string tok;
  std::vector<int> letters;
  int strands = -1;
  bool first = true;
  while (is >> tok) {
    if (first && tok.rfind("n=", 0) == 0) {
      first = false;
      try {
        strands = std::stoi(tok.substr(2));
      } catch (const std::exception&) {
        throw std::invalid_argument("braid parse: bad strand count '" + tok + "'");
      }
      continue;
    }
    first = false;
    int v;
    try {
      size_t pos = 0;
      v = std::stoi(tok, &pos);
      if (pos != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw std::invalid_argument("braid parse: bad token '" + tok + "'");
    }
    if (v == 0) throw std::invalid_argument("braid parse: zero token");
    letters.push_back(v);
  }
  if (strands < 0) {
    int max_index = 0;
    for (int k : letters) max_index = std::max(max_index, std::abs(k));
    strands = max_index + 1;
  }
  return BraidWord(strands, std::move(letters));
}

// Permutation of strand positions induced by the word: images[i] is where
// the strand entering at position i (0-based) exits at the bottom.
struct StrandPermutation {
  std::vector<int> images;

  int size() const { return static_cast<int>(images.size()); }

  int cycle_count() const {
    std::vector<char> seen(images.size(), 0);
    int cycles = 0;
    for (size_t i = 0; i < images.size(); ++i) {
      if (seen[i]) continue;
      ++cycles;
      for (size_t j = i; !seen[j]; j = images[j]) seen[j] = 1;
    }
    return cycles;
  }
};

inline StrandPermutation strand_permutation(const BraidWord& w) {
  std::vector<int> pos(w.strands);
  std::iota(pos.begin(), pos.end(), 0);
  for (int k : w.letters) {
    int i = letter_index(k) - 1;
    std::swap(pos[i], pos[i + 1]);
  }
  // pos[p] = strand that ends at position p; invert to get images.
  StrandPermutation perm;
  perm.images.assign(w.strands, 0);
  for (int p = 0; p < w.strands; ++p) perm.images[pos[p]] = p;
  return perm;
}

// Components of the closure = cycles of the strand permutation.
inline std::pair<StrandPermutation, int> permutation_and_components(
    const BraidWord& w) {
  StrandPermutation perm = strand_permutation(w);
  return {perm, perm.cycle_count()};
}

inline int exponent_sum(const BraidWord& w) {
  int s = 0;
  for (int k : w.letters) s += letter_sign(k);
  return s;
}

// Every generator index occurs, and each index occurs with one sign only.
inline bool is_homogeneous(const BraidWord& w) {
  std::vector<int> sign_seen(w.strands, 0);  // index i at slot i-1
  for (int k : w.letters) {
    int i = letter_index(k) - 1;
    int s = letter_sign(k);
    if (sign_seen[i] == 0)
      sign_seen[i] = s;
    else if (sign_seen[i] != s)
      return false;
  }
  for (int i = 0; i + 1 < w.strands; ++i)
    if (sign_seen[i] == 0) return false;
  return true;
}

// (sigma_1 sigma_2 ... sigma_{p-1})^q on p strands; q < 0 emits inverses.
// Closure is the (p,q) torus knot when gcd(p,|q|) = 1, a link otherwise.
inline BraidWord torus_braid(int p, int q) {
  if (p < 2) throw std::invalid_argument("torus_braid: p must be >= 2");
  if (q == 0) throw std::invalid_argument("torus_braid: q must be nonzero");
  std::vector<int> letters;
  const int reps = std::abs(q);
  const int sign = q > 0 ? 1 : -1;
  letters.reserve(static_cast<size_t>(reps) * (p - 1));
  for (int r = 0; r < reps; ++r)
    for (int i = 1; i < p; ++i) letters.push_back(sign * i);
  return BraidWord(p, std::move(letters));
}

enum class BraidRelation { far_commute, yang_baxter };

// Rewrites the local pattern at `position` by a defining relation of the
// braid group: sigma_i sigma_j -> sigma_j sigma_i for |i-j| >= 2, or
// sigma_i sigma_{i+1} sigma_i -> sigma_{i+1} sigma_i sigma_{i+1} (same
// signs, either adjacent order). The element presented is unchanged.
inline BraidWord braid_relation_rewrite(const BraidWord& w, int position,
                                        BraidRelation which) {
  BraidWord r = w;
  auto& L = r.letters;
  const int n = r.length();
  if (which == BraidRelation::far_commute) {
    if (position < 0 || position + 1 >= n)
      throw std::invalid_argument("far_commute: position out of range");
    int a = L[position], b = L[position + 1];
    if (std::abs(letter_index(a) - letter_index(b)) < 2)
      throw std::invalid_argument("far_commute: indices are adjacent");
    std::swap(L[position], L[position + 1]);
    return r;
  }
  if (position < 0 || position + 2 >= n)
    throw std::invalid_argument("yang_baxter: position out of range");
  int a = L[position], b = L[position + 1], c = L[position + 2];
  int s = letter_sign(a);
  if (letter_sign(b) != s || letter_sign(c) != s || a != c ||
      std::abs(letter_index(a) - letter_index(b)) != 1)
    throw std::invalid_argument("yang_baxter: pattern mismatch");
  L[position] = b;
  L[position + 1] = a;
  L[position + 2] = b;
  return r;
}

// Markov moves. Conjugation and (de)stabilization preserve the closure's
// isotopy class.
inline BraidWord markov_conjugate(const BraidWord& w, int g) {
  if (g == 0 || std::abs(g) >= w.strands)
    throw std::invalid_argument("conjugate: bad generator");
  BraidWord r = w;
  r.letters.insert(r.letters.begin(), g);
  r.letters.push_back(-g);
  return r;
}

inline BraidWord markov_stabilize(const BraidWord& w, int sign) {
  if (sign != 1 && sign != -1)
    throw std::invalid_argument("stabilize: sign must be +1 or -1");
  BraidWord r = w;
  r.strands += 1;
  r.letters.push_back(sign * (r.strands - 1));
  return r;
}

// Inverse of stabilization: the word must end with sigma_{n-1}^{+-1} and
// that index must occur nowhere else.
inline BraidWord markov_destabilize(const BraidWord& w) {
  if (w.strands < 2 || w.letters.empty())
    throw std::invalid_argument("destabilize: word too small");
  const int top = w.strands - 1;
  if (letter_index(w.letters.back()) != top)
    throw std::invalid_argument("destabilize: last letter is not sigma_{n-1}");
  int occurrences = 0;
  for (int k : w.letters)
    if (letter_index(k) == top) ++occurrences;
  if (occurrences != 1)
    throw std::invalid_argument("destabilize: sigma_{n-1} occurs more than once");
  BraidWord r = w;
  r.letters.pop_back();
  r.strands -= 1;
  return r;
}

// Cancels adjacent sigma sigma^{-1} pairs until none remain.
inline BraidWord free_reduce(const BraidWord& w) {
  std::vector<int> out;
  out.reserve(w.letters.size());
  for (int k : w.letters) {
    if (!out.empty() && out.back() == -k)
      out.pop_back();
    else
      out.push_back(k);
  }
  return BraidWord(w.strands, std::move(out));
}

// Reduced Burau representation over Z[t, t^(-1)]: the product over the
// word of the standard (n-1)x(n-1) generator blocks. Inverse letters use
// the exact inverse blocks, so entries stay Laurent.
//
// For sigma_i the block rows are identity except row i (1-based):
//   row i: t at column i-1, -t at column i, 1 at column i+1,
// truncated at the matrix edge. For sigma_i^{-1}:
//   row i: 1 at column i-1, -t^(-1) at column i, t^(-1) at column i+1.
inline Matrix<Laurent1> burau_generator(int n, int letter) {
  const std::size_t m = static_cast<std::size_t>(n - 1);
  Matrix<Laurent1> g = Matrix<Laurent1>::identity(m, Laurent1::constant(1));
  const std::size_t row = static_cast<std::size_t>(letter_index(letter) - 1);
  const Laurent1 t = laurent1_term(1, 2);
  const Laurent1 t_inv = laurent1_term(1, -2);
  if (letter > 0) {
    if (row > 0) g(row, row - 1) = t;
    g(row, row) = -t;
    if (row + 1 < m) g(row, row + 1) = Laurent1::constant(1);
  } else {
    if (row > 0) g(row, row - 1) = Laurent1::constant(1);
    g(row, row) = -t_inv;
    if (row + 1 < m) g(row, row + 1) = t_inv;
  }
  return g;
}

inline Matrix<Laurent1> burau_reduced(const BraidWord& w) {
  if (w.strands < 2)
    throw std::invalid_argument("burau_reduced: needs at least 2 strands");
  const std::size_t m = static_cast<std::size_t>(w.strands - 1);
  Matrix<Laurent1> acc = Matrix<Laurent1>::identity(m, Laurent1::constant(1));
  for (int k : w.letters) acc = acc * burau_generator(w.strands, k);
  return acc;
}

}  // namespace knotwork
