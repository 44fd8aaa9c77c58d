#pragma once

#include <array>
#include <cctype>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

namespace knotwork {

// Exponents are kept as doubled integers so that half-integer powers
// (t^(1/2) and friends) stay exact. An exponent key of 3 means t^(3/2).
using DoubledExp = int;

// A value that is an integer multiple of 1/2, used for degree spans and
// genus bounds.
struct HalfInt {
  int twice = 0;

  constexpr HalfInt() = default;
  constexpr explicit HalfInt(int doubled) : twice(doubled) {}
  static constexpr HalfInt whole(int n) { return HalfInt(2 * n); }

  bool is_integer() const { return twice % 2 == 0; }
  double value() const { return twice / 2.0; }

  friend bool operator==(HalfInt a, HalfInt b) { return a.twice == b.twice; }
  friend bool operator!=(HalfInt a, HalfInt b) { return a.twice != b.twice; }
  friend bool operator<(HalfInt a, HalfInt b) { return a.twice < b.twice; }

  std::string str() const {
    if (twice % 2 == 0) return std::to_string(twice / 2);
    return std::to_string(twice) + "/2";
  }
};

// Sparse Laurent polynomial with exact 64-bit integer coefficients in
// `Vars` variables. Zero coefficients are never stored, so operator== on
// the term maps is structural equality of polynomials.
template <int Vars>
class Laurent {
  static_assert(Vars == 1 || Vars == 2, "one or two variables supported");

 public:
  using Exp = std::array<DoubledExp, Vars>;
  using Coeff = std::int64_t;
  using Terms = std::map<Exp, Coeff>;

  Laurent() = default;

  static Laurent zero() { return Laurent(); }

  static Laurent constant(Coeff c) {
    Laurent p;
    if (c != 0) p.terms_[Exp{}] = c;
    return p;
  }

  // Single term c * x^(e/2) (or c * x^(e1/2) * y^(e2/2)).
  static Laurent monomial(Coeff c, Exp doubled_exp) {
    Laurent p;
    if (c != 0) p.terms_[doubled_exp] = c;
    return p;
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  bool is_constant() const {
    return terms_.empty() ||
           (terms_.size() == 1 && terms_.begin()->first == Exp{});
  }

  Coeff constant_term() const {
    auto it = terms_.find(Exp{});
    return it == terms_.end() ? 0 : it->second;
  }

  friend bool operator==(const Laurent& a, const Laurent& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const Laurent& a, const Laurent& b) {
    return !(a == b);
  }
  friend bool operator<(const Laurent& a, const Laurent& b) {
    return a.terms_ < b.terms_;
  }

  Laurent operator-() const {
    Laurent r;
    for (const auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
  }

  Laurent& operator+=(const Laurent& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  Laurent& operator-=(const Laurent& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }

  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
  friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }

  friend Laurent operator*(const Laurent& a, const Laurent& b) {
    Laurent r;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        Exp e;
        for (int i = 0; i < Vars; ++i) e[i] = ea[i] + eb[i];
        r.add_term(e, ca * cb);
      }
    return r;
  }

  Laurent& operator*=(const Laurent& o) { return *this = *this * o; }

  Laurent pow(int n) const {
    if (n < 0) throw std::invalid_argument("Laurent::pow: negative power");
    Laurent r = constant(1);
    Laurent base = *this;
    for (; n > 0; n >>= 1) {
      if (n & 1) r *= base;
      base *= base;
    }
    return r;
  }

  // Multiply by the monomial x^(e/2).
  Laurent shifted(Exp doubled_exp) const {
    Laurent r;
    for (const auto& [e, c] : terms_) {
      Exp ne;
      for (int i = 0; i < Vars; ++i) ne[i] = e[i] + doubled_exp[i];
      r.terms_[ne] = c;
    }
    return r;
  }

  void add_term(Exp e, Coeff c) {
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

 private:
  Terms terms_;
};

using Laurent1 = Laurent<1>;
using Laurent2 = Laurent<2>;

inline Laurent1 laurent1_term(std::int64_t c, DoubledExp doubled) {
  return Laurent1::monomial(c, {doubled});
}
inline Laurent2 laurent2_term(std::int64_t c, DoubledExp d1, DoubledExp d2) {
  return Laurent2::monomial(c, {d1, d2});
}

inline DoubledExp lowest_exponent(const Laurent1& p) {
  if (p.is_zero()) throw std::domain_error("zero polynomial has no degree");
  return p.terms().begin()->first[0];
}
inline DoubledExp highest_exponent(const Laurent1& p) {
  if (p.is_zero()) throw std::domain_error("zero polynomial has no degree");
  return p.terms().rbegin()->first[0];
}

// Highest minus lowest exponent.
inline HalfInt degree_span(const Laurent1& p) {
  return HalfInt(highest_exponent(p) - lowest_exponent(p));
}

// Unique representative of { +/- t^k * p } with lowest exponent 0 and a
// positive trailing coefficient. Turns "equal up to units" into plain ==.
inline Laurent1 normalize_units(const Laurent1& p) {
  if (p.is_zero())
    throw std::domain_error("normalize_units: zero polynomial");
  Laurent1 r = p.shifted({-lowest_exponent(p)});
  if (r.terms().begin()->second < 0) r = -r;
  return r;
}

// True iff both extreme coefficients are +/-1 (checked on the normalized
// representative, so unit factors do not matter).
inline bool is_monic(const Laurent1& p) {
  if (p.is_zero()) throw std::domain_error("is_monic: zero polynomial");
  auto lo = p.terms().begin()->second;
  auto hi = p.terms().rbegin()->second;
  return (lo == 1 || lo == -1) && (hi == 1 || hi == -1);
}

// Substitute t -> t^(-1).
inline Laurent1 invert_variable(const Laurent1& p) {
  Laurent1 r;
  for (const auto& [e, c] : p.terms()) r.add_term({-e[0]}, c);
  return r;
}

// Exact division in Z[t^(1/2), t^(-1/2)]. Returns nullopt when the
// quotient does not exist in the ring (non-integer coefficients or a
// nonzero remainder).
inline std::optional<Laurent1> exact_divide(const Laurent1& num,
                                            const Laurent1& den) {
  if (den.is_zero()) throw std::invalid_argument("division by zero");
  if (num.is_zero()) return Laurent1::zero();
  Laurent1 rem = num;
  Laurent1 quot;
  const DoubledExp den_hi = highest_exponent(den);
  const std::int64_t den_lead = den.terms().rbegin()->second;
  // Eliminate the top term of the remainder at every step; degree is
  // strictly decreasing so this terminates.
  while (!rem.is_zero()) {
    const DoubledExp rem_hi = highest_exponent(rem);
    const std::int64_t rem_lead = rem.terms().rbegin()->second;
    if (rem_lead % den_lead != 0) return std::nullopt;
    const std::int64_t q = rem_lead / den_lead;
    const DoubledExp shift = rem_hi - den_hi;
    Laurent1 m = laurent1_term(q, shift);
    quot += m;
    rem -= m * den;
    if (!rem.is_zero() && highest_exponent(rem) >= rem_hi) return std::nullopt;
  }
  return quot;
}

// ---------------------------------------------------------------------
// Text format: "1 - 3*t + t^2", "t^(1/2) - t^(-1/2)", "a^(-2)*w + w^3".
// Terms are printed in ascending exponent order; the same format parses
// back. Integer exponents >= 2 print bare (t^2), negative or fractional
// exponents are parenthesized (t^(-1), t^(1/2)).
// ---------------------------------------------------------------------

namespace detail {

inline std::string exponent_str(DoubledExp doubled) {
  if (doubled % 2 == 0) {
    int e = doubled / 2;
    if (e < 0) return "(" + std::to_string(e) + ")";
    return std::to_string(e);
  }
  std::string s = std::to_string(std::abs(doubled)) + "/2";
  if (doubled < 0) s = "-" + s;
  return "(" + s + ")";
}

inline void append_var_power(std::string& out, const char* var,
                             DoubledExp doubled, bool& first_factor) {
  if (doubled == 0) return;
  if (!first_factor) out += "*";
  first_factor = false;
  out += var;
  if (doubled == 2) return;  // plain "t"
  out += "^";
  out += exponent_str(doubled);
}

}  // namespace detail

template <int Vars>
std::string to_string(const Laurent<Vars>& p,
                      const std::array<const char*, Vars>& vars) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first_term = true;
  for (const auto& [e, c] : p.terms()) {
    std::int64_t coeff = c;
    if (first_term) {
      if (coeff < 0) {
        out += "-";
        coeff = -coeff;
      }
    } else {
      out += coeff < 0 ? " - " : " + ";
      coeff = std::llabs(coeff);
    }
    first_term = false;
    bool all_zero = true;
    for (int i = 0; i < Vars; ++i) all_zero = all_zero && e[i] == 0;
    bool first_factor = true;
    if (coeff != 1 || all_zero) {
      out += std::to_string(coeff);
      first_factor = false;
    }
    for (int i = 0; i < Vars; ++i)
      detail::append_var_power(out, vars[i], e[i], first_factor);
  }
  return out;
}

inline std::string to_string(const Laurent1& p, const char* var = "t") {
  return to_string<1>(p, {var});
}
inline std::string to_string(const Laurent2& p, const char* v1 = "a",
                             const char* v2 = "w") {
  return to_string<2>(p, {v1, v2});
}

namespace detail {

struct PolyScanner {
  const std::string& s;
  size_t i = 0;

  explicit PolyScanner(const std::string& text) : s(text) {}

  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool eof() {
    skip_ws();
    return i >= s.size();
  }
  char peek() {
    skip_ws();
    return i < s.size() ? s[i] : '\0';
  }
  bool accept(char c) {
    if (peek() == c) {
      ++i;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& what) {
    throw std::invalid_argument("polynomial parse error at offset " +
                                std::to_string(i) + ": " + what);
  }

  std::int64_t integer() {
    skip_ws();
    bool neg = accept('-');
    if (!neg) accept('+');
    skip_ws();
    if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
      fail("expected digits");
    std::int64_t v = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
      v = v * 10 + (s[i++] - '0');
    return neg ? -v : v;
  }

  // "2", "(-1)", "(1/2)", "(-3/2)". Returns the doubled exponent.
  DoubledExp exponent() {
    if (accept('(')) {
      std::int64_t num = integer();
      DoubledExp doubled;
      if (accept('/')) {
        std::int64_t den = integer();
        if (den != 2) fail("only halves are supported");
        doubled = static_cast<DoubledExp>(num);
      } else {
        doubled = static_cast<DoubledExp>(2 * num);
      }
      if (!accept(')')) fail("expected ')'");
      return doubled;
    }
    return static_cast<DoubledExp>(2 * integer());
  }
};

}  // namespace detail

// Parses the format produced by to_string. Variable names must be single
// characters (the defaults are "t" for one variable, "a","w" for two).
template <int Vars>
Laurent<Vars> parse_laurent(const std::string& text,
                            const std::array<const char*, Vars>& vars) {
  detail::PolyScanner sc(text);
  Laurent<Vars> result;
  bool first = true;
  while (!sc.eof()) {
    std::int64_t sign = 1;
    if (sc.accept('-'))
      sign = -1;
    else if (sc.accept('+')) {
      if (first) sc.fail("unexpected leading '+'");
    } else if (!first) {
      sc.fail("expected '+' or '-' between terms");
    }
    first = false;

    std::int64_t coeff = 1;
    bool have_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(sc.peek()))) {
      coeff = sc.integer();
      have_coeff = true;
    }

    auto try_factor = [&](typename Laurent<Vars>::Exp& exp) {
      char c = sc.peek();
      for (int v = 0; v < Vars; ++v) {
        if (c == vars[v][0]) {
          ++sc.i;
          DoubledExp d = 2;
          if (sc.accept('^')) d = sc.exponent();
          exp[v] += d;
          return true;
        }
      }
      return false;
    };

    typename Laurent<Vars>::Exp exp{};
    bool have_factor = false;
    if (have_coeff && sc.accept('*')) {
      if (!try_factor(exp)) sc.fail("expected variable after '*'");
      have_factor = true;
    } else {
      have_factor = try_factor(exp);
      if (!have_coeff && !have_factor) sc.fail("empty term");
    }
    while (have_factor && sc.accept('*')) {
      if (!try_factor(exp)) sc.fail("expected variable after '*'");
    }
    result.add_term(exp, sign * coeff);
  }
  return result;
}

inline Laurent1 parse_laurent1(const std::string& text, const char* var = "t") {
  return parse_laurent<1>(text, {var});
}
inline Laurent2 parse_laurent2(const std::string& text, const char* v1 = "a",
                               const char* v2 = "w") {
  return parse_laurent<2>(text, {v1, v2});
}

}  // namespace knotwork
