#include "hankel/rat.hpp"

#include <stdexcept>

namespace hankel {

Rat make_rat(const Int& p, const Int& q) {
  if (q == 0) throw std::domain_error("rational with zero denominator");
  Rat r(p, q);
  r.canonicalize();
  return r;
}

Rat rat_div(const Rat& a, const Rat& b) {
  if (b == 0) throw std::domain_error("division by zero");
  return a / b;
}

std::string to_string(const Int& z) { return z.get_str(); }

std::string to_string(const Rat& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

namespace {
Int parse_int(std::string_view s) {
  std::string_view body = s;
  if (!body.empty() && (body[0] == '-' || body[0] == '+')) body.remove_prefix(1);
  if (body.empty()) throw std::invalid_argument("empty integer");
  for (char c : body)
    if (c < '0' || c > '9') throw std::invalid_argument("bad integer: " + std::string(s));
  std::string t(s);
  if (t[0] == '+') t.erase(0, 1);
  return Int(t, 10);
}
}  // namespace

Rat parse_rat(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  auto slash = s.find('/');
  if (slash == std::string_view::npos) return Rat(parse_int(s));
  Int q = parse_int(s.substr(slash + 1));
  if (q < 0) throw std::invalid_argument("negative denominator: " + std::string(s));
  return make_rat(parse_int(s.substr(0, slash)), q);
}

bool is_integer(const Rat& r) { return r.get_den() == 1; }

}  // namespace hankel
