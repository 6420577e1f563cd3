#include "orbirr/rat.hpp"

#include <stdexcept>

namespace orbirr {

Rat make_rat(long num, long den) {
  if (den == 0) throw std::domain_error("make_rat: zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

Rat parse_rat(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty rational");
  auto valid_int = [](std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
      if (c < '0' || c > '9') return false;
    return true;
  };
  const auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{} : text.substr(slash + 1);
  if (!valid_int(num) || (slash != std::string_view::npos && (!valid_int(den) || den.front() == '-' || den.front() == '+')))
    throw std::invalid_argument("malformed rational '" + std::string(text) + "'");

  auto strip_plus = [](std::string_view s) {
    return std::string(!s.empty() && s.front() == '+' ? s.substr(1) : s);
  };
  mpz_class n(strip_plus(num), 10);
  mpz_class d = 1;
  if (slash != std::string_view::npos) d = mpz_class(std::string(den), 10);
  if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  Rat r(n, d);
  r.canonicalize();
  return r;
}

std::string to_string(const Rat& x) { return x.get_str(10); }

bool is_integer(const Rat& x) { return x.get_den() == 1; }

long to_long(const Rat& x) {
  if (!is_integer(x)) throw std::domain_error("not an integer: " + to_string(x));
  if (!x.get_num().fits_slong_p()) throw std::domain_error("integer out of range: " + to_string(x));
  return x.get_num().get_si();
}

}  // namespace orbirr
