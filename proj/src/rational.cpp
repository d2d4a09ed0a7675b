#include "lll/rational.hpp"

#include <cctype>

#include "lll/errors.hpp"

namespace lll {

namespace {

bool valid_fraction_chars(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c)) && c != '/' && c != '-' && c != '+') {
      return false;
    }
  }
  return true;
}

Rational parse_decimal(const std::string& s) {
  const auto dot = s.find('.');
  std::string digits = s.substr(0, dot) + s.substr(dot + 1);
  const std::size_t frac_len = s.size() - dot - 1;
  if (digits.empty() || frac_len == 0) throw ParseError("bad rational: '" + s + "'");
  for (std::size_t i = 0; i < digits.size(); ++i) {
    char c = digits[i];
    bool sign_ok = (i == 0 && (c == '-' || c == '+'));
    if (!std::isdigit(static_cast<unsigned char>(c)) && !sign_ok) {
      throw ParseError("bad rational: '" + s + "'");
    }
  }
  BigInt num(digits, 10);
  BigInt den;
  mpz_ui_pow_ui(den.get_mpz_t(), 10, frac_len);
  Rational q(num, den);
  q.canonicalize();
  return q;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  if (text.find('.') != std::string::npos) return parse_decimal(text);
  if (!valid_fraction_chars(text)) throw ParseError("bad rational: '" + text + "'");
  Rational q;
  if (mpq_set_str(q.get_mpq_t(), text.c_str(), 10) != 0) {
    throw ParseError("bad rational: '" + text + "'");
  }
  if (mpz_sgn(mpq_denref(q.get_mpq_t())) == 0) {
    throw ParseError("zero denominator in rational: '" + text + "'");
  }
  q.canonicalize();
  return q;
}

std::string format_rational(const Rational& q) {
  return q.get_str();
}

double to_double(const Rational& q) {
  return q.get_d();
}

}  // namespace lll
