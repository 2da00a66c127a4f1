#include "homcolor/rational.hpp"

#include <cctype>

#include "homcolor/error.hpp"

namespace homcolor {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string s(text);
  // Accept the typographic minus sign (U+2212) as well as ASCII '-'.
  static constexpr std::string_view kUnicodeMinus = "\xE2\x88\x92";
  if (s.rfind(kUnicodeMinus, 0) == 0) s = "-" + s.substr(kUnicodeMinus.size());

  std::string_view body = s;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{} : body.substr(slash + 1);
  if (!all_digits(num) || (slash != std::string_view::npos && !all_digits(den)))
    throw StructuralError("invalid rational literal '" + std::string(text) + "'");

  mpz_class n(std::string(num), 10);
  mpz_class d = slash == std::string_view::npos ? mpz_class(1) : mpz_class(std::string(den), 10);
  if (d == 0) throw StructuralError("zero denominator in '" + std::string(text) + "'");
  Rational r(n, d);
  r.canonicalize();
  if (negative) r = -r;
  return r;
}

std::string to_string(const Rational& value) {
  Rational c = value;
  c.canonicalize();
  return c.get_str();
}

}  // namespace homcolor
