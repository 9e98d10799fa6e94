#include "ospbi/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace ospbi {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

} // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  const auto bad = [&] { return std::invalid_argument("malformed rational '" + std::string(text) + "'"); };

  Rational q;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    const auto num = s.substr(0, slash), den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) throw bad();
    const boost::multiprecision::mpz_int d{std::string(den)};
    if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    q = Rational(boost::multiprecision::mpz_int(std::string(num)), d);
  } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
    const auto ip = s.substr(0, dot), fp = s.substr(dot + 1);
    if ((ip.empty() && fp.empty()) || (!ip.empty() && !all_digits(ip)) || (!fp.empty() && !all_digits(fp)))
      throw bad();
    boost::multiprecision::mpz_int scale = 1;
    for (std::size_t i = 0; i < fp.size(); ++i) scale *= 10;
    const std::string digits = std::string(ip.empty() ? "0" : ip) + std::string(fp);
    q = Rational(boost::multiprecision::mpz_int(digits), scale);
  } else {
    if (!all_digits(s)) throw bad();
    q = Rational(boost::multiprecision::mpz_int(std::string(s)));
  }
  return negative ? Rational(-q) : q;
}

std::string to_string(const Rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

} // namespace ospbi
