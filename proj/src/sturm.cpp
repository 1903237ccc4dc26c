#include "hankel/sturm.hpp"

#include <stdexcept>

namespace hankel {

namespace {

Poly squarefree(const Poly& p) {
  Poly g = gcd(p, p.derivative());
  return g.degree() > 0 ? exact_div(p, g) : p;
}

std::vector<Poly> sturm_chain(const Poly& p) {
  std::vector<Poly> chain{p, p.derivative()};
  while (!chain.back().is_zero()) {
    Poly r = divmod(chain[chain.size() - 2], chain.back()).remainder;
    chain.push_back(-r);
  }
  chain.pop_back();
  return chain;
}

int variations(const std::vector<Poly>& chain, const Rat& at) {
  int v = 0, last = 0;
  for (const auto& q : chain) {
    int s = sgn(q.eval(at));
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

void bisect(const std::vector<Poly>& chain, const Rat& lo, const Rat& hi, int count,
            std::vector<std::pair<Rat, Rat>>& out) {
  if (count == 0) return;
  if (count == 1) {
    out.emplace_back(lo, hi);
    return;
  }
  Rat mid = (lo + hi) / 2;
  int left = variations(chain, lo) - variations(chain, mid);
  bisect(chain, lo, mid, left, out);
  bisect(chain, mid, hi, count - left, out);
}

}  // namespace

Rat cauchy_bound(const Poly& p) {
  if (p.is_zero()) throw std::domain_error("root bound of zero polynomial");
  Rat m(0);
  for (int i = 0; i < p.degree(); ++i) {
    Rat r = abs(p.coeff(i) / p.lead());
    if (r > m) m = r;
  }
  return m + 1;
}

int sturm_count(const Poly& p, const Rat& a, const Rat& b) {
  if (p.is_zero()) throw std::domain_error("Sturm count of zero polynomial");
  if (!(a < b)) return 0;
  auto chain = sturm_chain(squarefree(p));
  return variations(chain, a) - variations(chain, b);
}

std::vector<std::pair<Rat, Rat>> isolate_real_roots(const Poly& p) {
  if (p.is_zero()) throw std::domain_error("root isolation of zero polynomial");
  std::vector<std::pair<Rat, Rat>> out;
  if (p.degree() == 0) return out;
  Poly q = squarefree(p);
  auto chain = sturm_chain(q);
  Rat bound = cauchy_bound(q);
  Rat lo = -bound, hi = bound;
  bisect(chain, lo, hi, variations(chain, lo) - variations(chain, hi), out);
  return out;
}

}  // namespace hankel
