#include "carrymix/rational.hpp"

#include "carrymix/errors.hpp"

#include <cctype>

namespace carrymix {

Rational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw ValidationError("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

BigInt big_pow(unsigned long base, unsigned long exponent) {
  BigInt out;
  mpz_ui_pow_ui(out.get_mpz_t(), base, exponent);
  return out;
}

std::string to_string(const Rational& value) {
  // mpq_get_str already omits "/1" for integers.
  return value.get_str();
}

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && s.front() == '-') s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto first = text.find_first_not_of(" \t");
  text = first == std::string_view::npos ? std::string_view{} : text.substr(first, text.find_last_not_of(" \t") - first + 1);
  const auto slash = text.find('/');
  const auto num_text = text.substr(0, slash);
  const auto den_text = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_integer_literal(num_text) || !is_integer_literal(den_text) || den_text.front() == '-') {
    throw ValidationError("malformed rational: '" + std::string(text) + "'");
  }
  return make_rational(BigInt(std::string(num_text)), BigInt(std::string(den_text)));
}

std::string to_decimal(const Rational& value, int digits) {
  if (digits < 0) digits = 0;
  const BigInt scale = big_pow(10, static_cast<unsigned long>(digits));
  BigInt scaled_num = abs(value.get_num()) * scale * 2 + value.get_den();
  BigInt q = scaled_num / (value.get_den() * 2);

  std::string body = q.get_str();
  if (digits > 0) {
    if (body.size() <= static_cast<std::size_t>(digits)) {
      body.insert(0, static_cast<std::size_t>(digits) + 1 - body.size(), '0');
    }
    body.insert(body.size() - static_cast<std::size_t>(digits), 1, '.');
  }
  const bool negative = sgn(value) < 0 && q != 0;
  return negative ? "-" + body : body;
}

}  // namespace carrymix
