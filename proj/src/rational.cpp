#include "polyassoc/rational.hpp"

#include <cctype>
#include <string>

#include "polyassoc/error.hpp"

namespace polyassoc {
namespace {

[[noreturn]] void bad_number(std::string_view text) {
  throw Error(ErrorCode::InvalidNumber,
              "not an exact number: '" + std::string(text) + "'");
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

Integer pow10(unsigned k) {
  Integer r = 1;
  for (unsigned i = 0; i < k; ++i) r *= 10;
  return r;
}

// Unsigned decimal with optional fraction and exponent.
Rational parse_decimal(std::string_view s, std::string_view whole_text) {
  long exponent = 0;
  if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    std::string_view exp_text = s.substr(e + 1);
    bool neg = false;
    if (!exp_text.empty() && (exp_text[0] == '+' || exp_text[0] == '-')) {
      neg = exp_text[0] == '-';
      exp_text.remove_prefix(1);
    }
    if (!all_digits(exp_text) || exp_text.size() > 6) bad_number(whole_text);
    exponent = std::stol(std::string(exp_text));
    if (neg) exponent = -exponent;
    s = s.substr(0, e);
  }
  std::string digits;
  std::size_t frac_len = 0;
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = s.substr(0, dot);
    std::string_view frac_part = s.substr(dot + 1);
    if (int_part.empty() && frac_part.empty()) bad_number(whole_text);
    if (!int_part.empty() && !all_digits(int_part)) bad_number(whole_text);
    if (!frac_part.empty() && !all_digits(frac_part)) bad_number(whole_text);
    digits = std::string(int_part) + std::string(frac_part);
    frac_len = frac_part.size();
  } else {
    if (!all_digits(s)) bad_number(whole_text);
    digits = std::string(s);
  }
  Rational value{Integer(digits)};
  long scale = exponent - static_cast<long>(frac_len);
  if (scale >= 0) {
    value *= Rational(pow10(static_cast<unsigned>(scale)));
  } else {
    value /= Rational(pow10(static_cast<unsigned>(-scale)));
  }
  return value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  if (s.empty()) bad_number(text);

  bool negative = false;
  if (s.front() == '+' || s.front() == '-') {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  Rational value;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    std::string_view num = s.substr(0, slash);
    std::string_view den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) bad_number(text);
    Integer d{std::string(den)};
    if (d == 0) bad_number(text);
    value = Rational(Integer(std::string(num)), d);
  } else {
    value = parse_decimal(s, text);
  }
  return negative ? Rational(-value) : value;
}

std::string to_string(const Rational& value) {
  if (denominator(value) == 1) return numerator(value).str();
  return numerator(value).str() + "/" + denominator(value).str();
}

std::string to_string(const Integer& value) { return value.str(); }

Integer pow3(unsigned exponent) {
  Integer r = 1;
  for (unsigned i = 0; i < exponent; ++i) r *= 3;
  return r;
}

Rational sqrt_lower(const Rational& value, unsigned bits) {
  if (value.sign() <= 0) return Rational(0);
  Integer scale = Integer(1) << (2 * bits);
  Integer scaled = numerator(value) * scale / denominator(value);
  Integer root = boost::multiprecision::sqrt(scaled);
  return Rational(root, Integer(1) << bits);
}

Rational simplest_between(const Rational& lo, const Rational& hi) {
  // Stern-Brocot descent on the open interval; handles negative bounds by
  // shifting with the floor of lo.
  Integer fl = numerator(lo) / denominator(lo);
  if (Rational(fl) > lo) fl -= 1;
  Rational shift{fl};
  Rational a = lo - shift;
  Rational b = hi - shift;
  // 0 <= a < b here.
  if (b > 1) return shift + 1;
  Integer ln = 0, ld = 1, rn = 1, rd = 0;  // 0/1 and 1/0
  while (true) {
    Integer mn = ln + rn;
    Integer md = ld + rd;
    Rational m(mn, md);
    if (m <= a) {
      // Move right in bulk.
      Integer k = 1;
      // largest k with (ln + k rn)/(ld + k rd) <= a
      // solve by doubling then stepping.
      while (Rational(ln + (k * 2) * rn, ld + (k * 2) * rd) <= a) k *= 2;
      Integer step = k;
      while (step > 1) {
        step /= 2;
        if (Rational(ln + (k + step) * rn, ld + (k + step) * rd) <= a) k += step;
      }
      ln += k * rn;
      ld += k * rd;
    } else if (m >= b) {
      Integer k = 1;
      while (Rational(rn + (k * 2) * ln, rd + (k * 2) * ld) >= b) k *= 2;
      Integer step = k;
      while (step > 1) {
        step /= 2;
        if (Rational(rn + (k + step) * ln, rd + (k + step) * ld) >= b) k += step;
      }
      rn += k * ln;
      rd += k * ld;
    } else {
      return shift + m;
    }
  }
}

}  // namespace polyassoc
