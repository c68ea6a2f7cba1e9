#include "hermite/cubic_poly.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <numeric>
#include <vector>

#include "hermite/errors.hpp"

namespace hermite {

Rat CubicPoly::operator()(const Rat& x) const { return ((x - p) * x - q) * x - r; }

Rat CubicPoly::derivative(const Rat& x) const { return (3 * x - 2 * p) * x - q; }

namespace {

class PolyParser {
 public:
  explicit PolyParser(std::string_view text) {
    for (char c : text)
      if (!std::isspace(static_cast<unsigned char>(c))) s_.push_back(c);
  }

  // coefficients a0..a3
  std::array<Rat, 4> parse() {
    if (s_.empty()) throw ParseError("empty polynomial");
    std::array<Rat, 4> coeffs{};
    bool first = true;
    while (pos_ < s_.size()) {
      int sgn = 1;
      if (peek() == '+' || peek() == '-') {
        sgn = peek() == '-' ? -1 : 1;
        ++pos_;
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      auto [coeff, power] = term();
      coeffs[power] += sgn * coeff;
    }
    return coeffs;
  }

 private:
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("cannot parse polynomial '" + s_ + "' at column " + std::to_string(pos_) +
                     ": " + why);
  }

  Integer digits() {
    std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected digits");
    return Integer(s_.substr(start, pos_ - start), 10);
  }

  std::pair<Rat, std::size_t> term() {
    Rat coeff = 1;
    bool has_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      Integer num = digits();
      Integer den = 1;
      if (peek() == '/') {
        ++pos_;
        den = digits();
        if (den == 0) fail("zero denominator");
      }
      coeff = make_rat(num, den);
      has_coeff = true;
      if (peek() == '*') ++pos_;
    }
    if (peek() != 'x') {
      if (!has_coeff) fail("expected coefficient or 'x'");
      return {coeff, 0};
    }
    ++pos_;
    std::size_t power = 1;
    if (peek() == '^') {
      ++pos_;
      Integer e = digits();
      if (e > 3) throw ParseError("polynomial degree exceeds 3 in '" + s_ + "'");
      power = e.get_ui();
    }
    return {coeff, power};
  }

  std::string s_;
  std::size_t pos_ = 0;
};

std::string render_term(const Rat& c, const char* mono, bool leading) {
  std::string out;
  Rat a = abs(c);
  if (leading) {
    if (c < 0) out += "-";
  } else {
    out += c < 0 ? " - " : " + ";
  }
  if (a != 1 || mono[0] == '\0') out += to_string(a);
  out += mono;
  return out;
}

Integer isqrt(const Integer& n) {
  Integer s;
  mpz_sqrt(s.get_mpz_t(), n.get_mpz_t());
  return s;
}

Integer fdiv(const Integer& a, long b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), Integer(b).get_mpz_t());
  return q;
}

// g(y) = y^3 + e2 y^2 + e1 y + e0 with integer coefficients.
struct MonicIntCubic {
  Integer e2, e1, e0;
  Integer operator()(const Integer& y) const { return ((y + e2) * y + e1) * y + e0; }
};

std::optional<Integer> root_in_monotone_range(const MonicIntCubic& g, Integer lo, Integer hi) {
  if (lo > hi) return std::nullopt;
  Integer glo = g(lo), ghi = g(hi);
  if (glo == 0) return lo;
  if (ghi == 0) return hi;
  if (sgn(glo) == sgn(ghi)) return std::nullopt;
  const int s_lo = sgn(glo);
  while (hi - lo > 1) {
    Integer mid = fdiv(lo + hi, 2);
    Integer gm = g(mid);
    if (gm == 0) return mid;
    if (sgn(gm) == s_lo) lo = mid;
    else hi = mid;
  }
  return std::nullopt;
}

// Integer roots of a monic integer cubic, found by splitting Z into monotone
// pieces at the critical points and binary-searching each piece.
std::optional<Integer> integer_root(const MonicIntCubic& g) {
  Integer bound = 1 + std::max({abs(g.e2), abs(g.e1), abs(g.e0)});
  // g'(y) = 3y^2 + 2 e2 y + e1; critical points (-e2 +- sqrt(D)) / 3
  Integer disc = g.e2 * g.e2 - 3 * g.e1;
  if (disc <= 0) return root_in_monotone_range(g, -bound, bound);

  Integer s = isqrt(disc);
  Integer lo_crit, hi_crit;  // floor of each critical point
  if (s * s == disc) {
    lo_crit = fdiv(-g.e2 - s, 3);
    hi_crit = fdiv(-g.e2 + s, 3);
  } else {
    lo_crit = fdiv(-g.e2 - s - 1, 3);
    hi_crit = fdiv(-g.e2 + s, 3);
  }
  if (auto y = root_in_monotone_range(g, -bound, lo_crit)) return y;
  if (auto y = root_in_monotone_range(g, lo_crit + 1, hi_crit)) return y;
  return root_in_monotone_range(g, hi_crit + 1, bound);
}

}  // namespace

CubicPoly parse_cubic(std::string_view text) {
  auto a = PolyParser(text).parse();
  if (a[3] == 0) {
    throw ParseError("not a cubic: the coefficient of x^3 is zero in '" + std::string(text) + "'");
  }
  return CubicPoly{-a[2] / a[3], -a[1] / a[3], -a[0] / a[3]};
}

std::string to_string(const CubicPoly& f) {
  std::string out = "x^3";
  if (f.p != 0) out += render_term(-f.p, "x^2", false);
  if (f.q != 0) out += render_term(-f.q, "x", false);
  if (f.r != 0) out += render_term(-f.r, "", false);
  return out;
}

namespace {

std::optional<Rat> any_rational_root(const CubicPoly& f) {
  if (f.r == 0) return Rat(0);
  // Clear denominators: L x^3 + c2 x^2 + c1 x + c0, then y = L x turns it
  // into the monic integer cubic y^3 + c2 y^2 + L c1 y + L^2 c0, whose
  // rational roots are integers.
  Integer lcm;
  mpz_lcm(lcm.get_mpz_t(), f.p.get_den_mpz_t(), f.q.get_den_mpz_t());
  mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), f.r.get_den_mpz_t());
  Rat L(lcm);
  Integer c2 = Rat(-f.p * L).get_num();
  Integer c1 = Rat(-f.q * L).get_num();
  Integer c0 = Rat(-f.r * L).get_num();
  MonicIntCubic g{c2, lcm * c1, lcm * lcm * c0};
  if (auto y = integer_root(g)) return make_rat(*y, lcm);
  return std::nullopt;
}

std::optional<Rat> rational_sqrt(const Rat& x) {
  if (x < 0) return std::nullopt;
  Integer n = x.get_num(), d = x.get_den();
  Integer sn = sqrt(n), sd = sqrt(d);
  if (sn * sn != n || sd * sd != d) return std::nullopt;
  return make_rat(sn, sd);
}

}  // namespace

std::vector<Rat> rational_roots(const CubicPoly& f) {
  auto root = any_rational_root(f);
  if (!root) return {};
  // f = (x - root)(x^2 + b x + c)
  Rat b = *root - f.p;
  Rat c = *root * b - f.q;
  std::vector<Rat> out{*root};
  if (auto s = rational_sqrt(b * b - 4 * c)) {
    out.push_back((-b - *s) / 2);
    out.push_back((-b + *s) / 2);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::optional<Rat> rational_root_check(const CubicPoly& f) {
  auto roots = rational_roots(f);
  if (roots.empty()) return std::nullopt;
  return *std::min_element(roots.begin(), roots.end(), [](const Rat& x, const Rat& y) {
    if (abs(x) != abs(y)) return abs(x) < abs(y);
    return x > y;
  });
}

void require_irreducible(const CubicPoly& f) {
  if (auto root = rational_root_check(f)) {
    throw ReducibleError("polynomial " + to_string(f) + " is reducible: rational root " +
                         to_string(*root));
  }
}

CubicPoly reflect(const CubicPoly& f) {
  if (f.r == 0) {
    throw ReducibleError("cannot reflect " + to_string(f) + ": 0 is a root");
  }
  return CubicPoly{-f.q / f.r, -f.p / f.r, 1 / f.r};
}

CubicPoly shift(const CubicPoly& f, const Rat& k) {
  // f(x - k) expanded and read back in the minus convention.
  Rat k2 = k * k;
  return CubicPoly{f.p + 3 * k, f.q - 3 * k2 - 2 * f.p * k, f.r - f.q * k + f.p * k2 + k2 * k};
}

}  // namespace hermite
