#include "hrq/rational.hpp"

#include <cctype>

namespace hrq {

Rational parse_rational(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw std::invalid_argument("parse_rational: empty input");

  auto slash = s.find('/');
  if (slash != std::string::npos) {
    std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    if (num.empty() || den.empty())
      throw std::invalid_argument("parse_rational: malformed fraction '" + text + "'");
    try {
      Int n(num), d(den);
      return Rational(n, d);
    } catch (const std::exception&) {
      throw std::invalid_argument("parse_rational: malformed fraction '" + text + "'");
    }
  }

  bool negative = false;
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
    negative = s[i] == '-';
    ++i;
  }
  std::string int_part, frac_part;
  long exp10 = 0;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) int_part += s[i++];
  if (i < s.size() && s[i] == '.') {
    ++i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) frac_part += s[i++];
  }
  if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
    ++i;
    bool eneg = false;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
      eneg = s[i] == '-';
      ++i;
    }
    std::string edig;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) edig += s[i++];
    if (edig.empty()) throw std::invalid_argument("parse_rational: malformed exponent '" + text + "'");
    exp10 = std::stol(edig);
    if (eneg) exp10 = -exp10;
  }
  if (i != s.size() || (int_part.empty() && frac_part.empty()))
    throw std::invalid_argument("parse_rational: cannot parse '" + text + "'");

  Int mantissa(int_part.empty() ? "0" : int_part);
  for (char c : frac_part) {
    mantissa *= 10;
    mantissa += static_cast<int>(c - '0');
  }
  long shift = exp10 - static_cast<long>(frac_part.size());
  Rational r(mantissa);
  if (shift > 0)
    r *= Rational(pow_int(Int(10), static_cast<unsigned long>(shift)));
  else if (shift < 0)
    r /= Rational(pow_int(Int(10), static_cast<unsigned long>(-shift)));
  return negative ? -r : r;
}

std::string format_significant(const BigFloat& x, unsigned digits) {
  if (digits == 0) digits = 1;
  if (mpfr_zero_p(x.backend().data())) {
    std::string r = "0.";
    r.append(digits, '0');
    return r;
  }
  mpfr_exp_t expo = 0;
  char* raw = mpfr_get_str(nullptr, &expo, 10, digits, x.backend().data(), MPFR_RNDN);
  std::string s(raw);
  mpfr_free_str(raw);
  bool negative = !s.empty() && s[0] == '-';
  if (negative) s.erase(0, 1);
  // s holds exactly `digits` digits; value = 0.s * 10^expo.
  std::string body;
  long e = static_cast<long>(expo);
  if (e > static_cast<long>(digits) + 6 || e < -6) {
    body = s.substr(0, 1);
    if (s.size() > 1) body += "." + s.substr(1);
    body += "e" + std::to_string(e - 1);
  } else if (e <= 0) {
    body = "0.";
    body.append(static_cast<std::size_t>(-e), '0');
    body += s;
  } else if (static_cast<std::size_t>(e) >= s.size()) {
    body = s;
    body.append(static_cast<std::size_t>(e) - s.size(), '0');
  } else {
    body = s.substr(0, static_cast<std::size_t>(e)) + "." + s.substr(static_cast<std::size_t>(e));
  }
  return negative ? "-" + body : body;
}

}  // namespace hrq
