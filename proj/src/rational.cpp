#include "hermite/rational.hpp"

#include <cctype>
#include <cmath>

#include "hermite/errors.hpp"

namespace hermite {

Rat make_rat(const Integer& num, const Integer& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rat x(num, den);
  x.canonicalize();
  return x;
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

Integer parse_integer(std::string_view s) {
  bool neg = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    neg = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) throw ParseError("invalid integer '" + std::string(s) + "'");
  Integer v(std::string(s), 10);
  return neg ? Integer(-v) : v;
}

}  // namespace

Rat parse_rat(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw ParseError("empty rational");

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    Integer num = parse_integer(text.substr(0, slash));
    Integer den = parse_integer(text.substr(slash + 1));
    if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    return make_rat(num, den);
  }

  // Decimal: [sign] digits [. digits] [e [sign] digits]
  std::string_view s = text;
  bool neg = false;
  if (s.front() == '+' || s.front() == '-') {
    neg = s.front() == '-';
    s.remove_prefix(1);
  }
  long exponent = 0;
  if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    Integer ev = parse_integer(s.substr(e + 1));
    if (!ev.fits_slong_p() || abs(ev) > 100000) throw ParseError("exponent out of range");
    exponent = ev.get_si();
    s = s.substr(0, e);
  }
  std::string digits;
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view ip = s.substr(0, dot), fp = s.substr(dot + 1);
    if (ip.empty() && fp.empty()) throw ParseError("invalid number '" + std::string(text) + "'");
    if ((!ip.empty() && !all_digits(ip)) || (!fp.empty() && !all_digits(fp)))
      throw ParseError("invalid number '" + std::string(text) + "'");
    digits = std::string(ip) + std::string(fp);
    exponent -= static_cast<long>(fp.size());
  } else {
    if (!all_digits(s)) throw ParseError("invalid number '" + std::string(text) + "'");
    digits = std::string(s);
  }
  Integer mant(digits, 10);
  if (neg) mant = -mant;
  Integer scale = pow(Integer(10), static_cast<unsigned>(std::labs(exponent)));
  return exponent >= 0 ? Rat(mant * scale) : make_rat(mant, scale);
}

std::string to_string(const Rat& x) { return x.get_str(); }
std::string to_string(const Integer& x) { return x.get_str(); }

std::string to_decimal(const Rat& x, int significant) {
  if (significant < 1) significant = 1;
  if (x == 0) return "0";
  Rat a = abs(x);

  long e = static_cast<long>(std::floor(
      (static_cast<double>(mpz_sizeinbase(a.get_num_mpz_t(), 2)) -
       static_cast<double>(mpz_sizeinbase(a.get_den_mpz_t(), 2))) * 0.30102999566398120));
  auto ten_pow = [](long k) {
    return k >= 0 ? Rat(pow(Integer(10), static_cast<unsigned>(k)))
                  : make_rat(1, pow(Integer(10), static_cast<unsigned>(-k)));
  };
  while (ten_pow(e) > a) --e;
  while (ten_pow(e + 1) <= a) ++e;

  Rat scaled = a * ten_pow(significant - 1 - e);
  Integer digits = floor(scaled + Rat(1, 2));
  if (digits == pow(Integer(10), static_cast<unsigned>(significant))) {
    digits /= 10;
    ++e;
  }
  std::string d = digits.get_str();

  std::string out = x < 0 ? "-" : "";
  auto strip = [](std::string s) {
    if (s.find('.') == std::string::npos) return s;
    while (!s.empty() && s.back() == '0') s.pop_back();
    if (!s.empty() && s.back() == '.') s.pop_back();
    return s;
  };
  if (e >= -6 && e < significant + 6) {
    std::string body;
    if (e >= 0) {
      auto int_len = static_cast<std::size_t>(e + 1);
      if (int_len >= d.size()) {
        body = d + std::string(int_len - d.size(), '0');
      } else {
        body = d.substr(0, int_len) + "." + d.substr(int_len);
      }
    } else {
      body = "0." + std::string(static_cast<std::size_t>(-e - 1), '0') + d;
    }
    return out + strip(body);
  }
  std::string mant = d.size() > 1 ? d.substr(0, 1) + "." + d.substr(1) : d;
  return out + strip(mant) + "e" + (e < 0 ? "-" : "+") + std::to_string(std::labs(e));
}

Integer floor(const Rat& x) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return q;
}

Integer ceil(const Rat& x) {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return q;
}

int sign(const Rat& x) { return sgn(x); }
int sign(const Integer& x) { return sgn(x); }

Rat pow(const Rat& x, unsigned n) {
  Integer num, den;
  mpz_pow_ui(num.get_mpz_t(), x.get_num_mpz_t(), n);
  mpz_pow_ui(den.get_mpz_t(), x.get_den_mpz_t(), n);
  return make_rat(num, den);
}

Integer pow(const Integer& x, unsigned n) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), x.get_mpz_t(), n);
  return out;
}

}  // namespace hermite
