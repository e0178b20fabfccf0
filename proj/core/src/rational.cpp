#include "segeuler/rational.hpp"

#include <cctype>

#include "segeuler/errors.hpp"

namespace segeuler {

const char* to_string(DomainCode code) noexcept {
  switch (code) {
    case DomainCode::kNotRealRooted: return "not_real_rooted";
    case DomainCode::kDegreeGap: return "degree_gap";
    case DomainCode::kNonPositiveLeading: return "nonpositive_leading_coefficient";
    case DomainCode::kNotMultiaffine: return "not_multiaffine";
    case DomainCode::kUnresolved: return "unresolved";
  }
  return "unknown";
}

Rat make_rat(const Int& num, const Int& den) {
  if (sgn(den) == 0) throw UndefinedInputError("rational with zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

std::string to_string(const Int& value) { return value.get_str(); }

std::string to_string(const Rat& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

bool is_integer(const Rat& value) { return value.get_den() == 1; }

namespace {

Int parse_int(std::string_view text, std::string_view whole) {
  std::size_t i = 0;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) ++i;
  if (i == text.size()) throw ParseError("malformed rational '" + std::string(whole) + "'");
  for (std::size_t k = i; k < text.size(); ++k) {
    if (!std::isdigit(static_cast<unsigned char>(text[k])))
      throw ParseError("malformed rational '" + std::string(whole) + "'");
  }
  std::string digits(text[0] == '+' ? text.substr(1) : text);
  return Int(digits, 10);
}

std::string_view strip(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Rat parse_rat(std::string_view text) {
  const std::string_view body = strip(text);
  const auto slash = body.find('/');
  if (slash == std::string_view::npos) return Rat(parse_int(body, text));
  const Int num = parse_int(body.substr(0, slash), text);
  const Int den = parse_int(body.substr(slash + 1), text);
  if (sgn(den) == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  return make_rat(num, den);
}

std::string to_string(const GaussRat& value) {
  std::string out = to_string(value.re);
  out += sgn(value.im) < 0 ? "-" : "+";
  out += to_string(Rat(abs(value.im)));
  out += "*i";
  return out;
}

}  // namespace segeuler
