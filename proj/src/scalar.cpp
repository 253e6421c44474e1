#include "modvol/scalar.hpp"

#include <cctype>
#include <stdexcept>

namespace modvol {

namespace {

bool digits_only(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

bool is_rational_literal(std::string_view text) {
  if (text.empty()) return false;
  std::string_view body = text;
  if (body.front() == '-' || body.front() == '+') body.remove_prefix(1);
  auto slash = body.find('/');
  if (slash == std::string_view::npos) return digits_only(body);
  std::string_view den = body.substr(slash + 1);
  if (!digits_only(body.substr(0, slash)) || !digits_only(den)) return false;
  return den.find_first_not_of('0') != std::string_view::npos;
}

Scalar parse_rational(std::string_view text) {
  if (!is_rational_literal(text))
    throw std::invalid_argument("not a rational literal: '" + std::string(text) + "'");
  std::string s(text);
  if (s.front() == '+') s.erase(0, 1);
  Scalar out(s, 10);
  out.canonicalize();
  return out;
}

std::string to_string(const Scalar& s) { return s.get_str(); }

double to_double(const Scalar& s) { return s.get_d(); }

bool all_zero(const std::vector<Scalar>& v) {
  for (const auto& x : v)
    if (!is_zero(x)) return false;
  return true;
}

}  // namespace modvol
