#include "msc/sturm.hpp"

#include <stdexcept>

#include "msc/errors.hpp"

namespace msc::exactalg {

SturmChain sturm_chain(const UPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("sturm_chain: zero polynomial");
  SturmChain chain;
  chain.elems.push_back(p);
  if (p.degree() < 1) return chain;
  UPoly dp = derivative(p);
  chain.elems.push_back(dp);

  std::vector<Integer> a = detail::to_primitive_int(p);
  std::vector<Integer> b = detail::to_primitive_int(dp);
  while (static_cast<int>(b.size()) - 1 >= 1) {
    int steps = 0;
    std::vector<Integer> r = detail::int_prem(a, b, &steps);
    if (r.empty()) break;  // positive-degree gcd, not square-free
    // int_prem returns lc(b)^steps * rem(a, b); the chain wants -rem up to a
    // positive factor, so flip by the sign of the accumulated multiplier.
    bool mult_negative = (sgn(b.back()) < 0) && (steps % 2 == 1);
    if (!mult_negative)
      for (auto& v : r) v = -v;
    detail::make_primitive(r);
    chain.elems.push_back(detail::from_int(r));
    a = std::move(b);
    b = detail::to_primitive_int(chain.elems.back());
  }
  return chain;
}

static unsigned variations(const std::vector<int>& signs) {
  unsigned v = 0;
  int prev = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++v;
    prev = s;
  }
  return v;
}

unsigned sign_variations_at_pos_inf(const SturmChain& chain) {
  std::vector<int> signs;
  signs.reserve(chain.elems.size());
  for (const auto& e : chain.elems) signs.push_back(sgn(e.lc()));
  return variations(signs);
}

unsigned sign_variations_at_neg_inf(const SturmChain& chain) {
  std::vector<int> signs;
  signs.reserve(chain.elems.size());
  for (const auto& e : chain.elems) {
    int s = sgn(e.lc());
    if (e.degree() % 2 == 1) s = -s;
    signs.push_back(s);
  }
  return variations(signs);
}

unsigned sturm_count(const UPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("sturm_count: zero polynomial");
  if (p.degree() == 0) return 0;
  SturmChain chain = sturm_chain(p);
  if (chain.elems.back().degree() != 0)
    throw ContractViolation("sturm_count: polynomial is not square-free");
  unsigned neg = sign_variations_at_neg_inf(chain);
  unsigned pos = sign_variations_at_pos_inf(chain);
  return neg - pos;
}

}  // namespace msc::exactalg
