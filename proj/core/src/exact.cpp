#include <latloc/exact.hpp>

#include <sstream>

namespace latloc {

Int rat_floor(const Rat& q) {
  Int n = rat_num(q), d = rat_den(q);  // d > 0, canonical
  Int t = n / d;
  if (n % d != 0 && n < 0) --t;
  return t;
}

Int rat_ceil(const Rat& q) { return -rat_floor(-q); }

Rat parse_rational(const std::string& text) {
  auto bad = [&]() -> parse_error {
    return parse_error("invalid rational '" + text + "' (expected p or p/q)");
  };
  std::string s = text;
  // trim whitespace
  auto is_space = [](char c) { return c == ' ' || c == '\t'; };
  while (!s.empty() && is_space(s.front())) s.erase(s.begin());
  while (!s.empty() && is_space(s.back())) s.pop_back();
  if (s.empty()) throw bad();
  auto slash = s.find('/');
  auto parse_int = [&](const std::string& part) {
    if (part.empty()) throw bad();
    std::size_t i = (part[0] == '+' || part[0] == '-') ? 1 : 0;
    if (i == part.size()) throw bad();
    for (; i < part.size(); ++i)
      if (part[i] < '0' || part[i] > '9') throw bad();
    return Int(part);
  };
  if (slash == std::string::npos) return Rat(parse_int(s));
  Int num = parse_int(s.substr(0, slash));
  Int den = parse_int(s.substr(slash + 1));
  if (den == 0) throw bad();
  return Rat(num, den);
}

std::string rational_to_string(const Rat& q) {
  std::ostringstream out;
  if (rat_den(q) == 1) {
    out << rat_num(q);
  } else {
    out << rat_num(q) << "/" << rat_den(q);
  }
  return out.str();
}

std::string weight_to_string(const Weight& w) {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out << ",";
    out << w[i];
  }
  out << ")";
  return out.str();
}

}  // namespace latloc
