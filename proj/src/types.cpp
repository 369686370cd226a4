#include "pp/types.hpp"

namespace pp {

std::vector<int> subset_elements(Subset s) {
  std::vector<int> out;
  while (s) {
    int i = __builtin_ctz(s);
    out.push_back(i);
    s &= s - 1;
  }
  return out;
}

bool subset_lex_less(Subset a, Subset b) {
  while (a && b) {
    int ea = __builtin_ctz(a);
    int eb = __builtin_ctz(b);
    if (ea != eb) return ea < eb;
    a &= a - 1;
    b &= b - 1;
  }
  return a == 0 && b != 0;  // proper prefix is smaller
}

bool subset_family_less(Subset a, Subset b) {
  int ca = subset_card(a), cb = subset_card(b);
  if (ca != cb) return ca < cb;
  return subset_lex_less(a, b);
}

std::string subset_to_string(Subset s) {
  std::string out = "{";
  bool first = true;
  for (int i : subset_elements(s)) {
    if (!first) out += ",";
    out += std::to_string(i + 1);
    first = false;
  }
  out += "}";
  return out;
}

std::string rational_to_string(const Rational& q) { return q.str(); }

}  // namespace pp
