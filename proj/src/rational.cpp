#include "milnorinf/rational.hpp"

#include <cctype>

#include "milnorinf/error.hpp"

namespace milnorinf {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Structural: return "StructuralError";
    case ErrorKind::DegenerateInput: return "DegenerateInput";
    case ErrorKind::NotMixed: return "NotMixed";
    case ErrorKind::NotCurve: return "NotCurve";
    case ErrorKind::NonRationalBranch: return "NonRationalBranch";
    case ErrorKind::NonIsolatedGerm: return "NonIsolatedGerm";
    case ErrorKind::NonInvariantJacobian: return "NonInvariantJacobian";
    case ErrorKind::NotApplicable: return "NotApplicable";
    case ErrorKind::DegenerateWeights: return "DegenerateWeights";
    case ErrorKind::HypothesisFailure: return "HypothesisFailure";
    case ErrorKind::Parse: return "ParseError";
    case ErrorKind::Internal: return "InternalError";
  }
  return "Error";
}

std::string to_string(const Rational& q) { return q.get_str(); }

std::string to_string(const Integer& z) { return z.get_str(); }

bool is_integer(const Rational& q) { return q.get_den() == 1; }

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = trim(text);
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  auto slash = s.find('/');
  std::string_view num = s.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : s.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den))
    throw ParseError("malformed rational '" + std::string(text) + "'", 1, 1);
  Integer n{std::string(num)}, d{std::string(den)};
  if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'", 1, slash + 2);
  Rational q(n, d);
  q.canonicalize();
  return negative ? Rational(-q) : q;
}

std::vector<Rational> parse_rational_list(std::string_view text) {
  std::vector<Rational> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto comma = text.find(',', start);
    auto piece = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    out.push_back(parse_rational(piece));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::vector<int> parse_int_list(std::string_view text) {
  std::vector<int> out;
  for (const auto& q : parse_rational_list(text)) {
    if (!is_integer(q) || !q.get_num().fits_sint_p())
      throw ParseError("expected an integer list, got '" + std::string(text) + "'", 1, 1);
    out.push_back(static_cast<int>(q.get_num().get_si()));
  }
  return out;
}

}  // namespace milnorinf
