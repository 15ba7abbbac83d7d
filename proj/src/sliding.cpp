#include "garside/sliding.hpp"

#include <unordered_map>
#include <unordered_set>

namespace garside {

namespace {

// Whether iterating f from x returns to x.
template <class Step>
bool recurrent(const Element& x, Step f, std::size_t max_states) {
  std::unordered_set<Element> seen{x};
  Element                     y = f(x);
  while (!(y == x)) {
    if (!seen.insert(y).second) return false;
    if (seen.size() > max_states) {
      throw BudgetExceeded("orbit exceeded " + std::to_string(max_states) +
                           " states");
    }
    y = f(y);
  }
  return true;
}

}  // namespace

Simple initial_factor(const Element& x) {
  const auto& g = x.structure();
  if (x.canonical_length() == 0) return g.identity();
  return g.tau_power(x.factors().front(), -x.inf());
}

Simple final_factor(const Element& x) {
  const auto& g = x.structure();
  if (x.canonical_length() == 0) return g.delta();
  return x.factors().back();
}

Simple preferred_prefix(const Element& x) {
  const auto& g = x.structure();
  if (x.canonical_length() == 0) return g.identity();
  return g.meet(initial_factor(x), g.right_complement(final_factor(x)));
}

Simple preferred_prefix_by_definition(const Element& x) {
  return x.structure().meet(initial_factor(x), initial_factor(inverse(x)));
}

Element cyclic_sliding(const Element& x) {
  return conjugate_by_simple(x, preferred_prefix(x));
}

Element cyclic_sliding(const Element& x, long k) {
  Element y = x;
  for (long i = 0; i < k; ++i) y = cyclic_sliding(y);
  return y;
}

Element cycling(const Element& x) {
  return conjugate_by_simple(x, initial_factor(x));
}

Element decycling(const Element& x) {
  if (x.canonical_length() == 0) return x;
  const auto f = x.factors();
  return Element::from_factors(x.structure(), x.inf(), f.first(f.size() - 1))
      .simple_times(f.back());
}

Simple preferred_suffix(const Element& x) {
  const auto&   g = x.structure();
  const Element a = x.delta_power_times(-x.inf());
  const Element b = inverse(x).delta_power_times(x.sup());
  const Element s = right_meet(right_meet(a, b), Element::delta_power(g, 1));
  return s.as_simple();
}

Element cyclic_right_sliding(const Element& x) {
  const Simple s = preferred_suffix(x);
  return x.simple_times(s).times_simple_inverse(s);
}

Element transport(const Element& alpha, const Element& x) {
  const auto&   g = x.structure();
  const Element y = conjugate(x, alpha);
  return inverse(Element::from_simple(g, preferred_prefix(x))) * alpha *
         Element::from_simple(g, preferred_prefix(y));
}

Element transport(const Element& alpha, const Element& x, long i) {
  Element a = alpha;
  Element y = x;
  for (long k = 0; k < i; ++k) {
    a = transport(a, y);
    y = cyclic_sliding(y);
  }
  return a;
}

Element right_transport(const Element& alpha, const Element& x) {
  const auto&   g = x.structure();
  const Element y = conjugate(x, inverse(alpha));
  return Element::from_simple(g, preferred_suffix(y)) * alpha *
         inverse(Element::from_simple(g, preferred_suffix(x)));
}

Element prefix_product(const Element& x, long i) {
  Element p(x.structure());
  Element y = x;
  for (long k = 0; k < i; ++k) {
    const Simple s = preferred_prefix(y);
    p              = p.times_simple(s);
    y              = conjugate_by_simple(y, s);
  }
  return p;
}

bool is_rigid(const Element& x) {
  return x.structure().is_trivial(preferred_prefix(x));
}

SlidingTrajectory sliding_trajectory(const Element& x, std::size_t max_states) {
  SlidingTrajectory                                 t;
  std::unordered_map<Element, std::size_t>          index;
  t.states.push_back(x);
  index.emplace(x, 0);
  while (true) {
    const Element& cur = t.states.back();
    const Simple   p   = preferred_prefix(cur);
    Element        next = conjugate_by_simple(cur, p);
    t.prefixes.push_back(p);
    auto [it, fresh] = index.emplace(next, t.states.size());
    t.states.push_back(std::move(next));
    if (!fresh) {
      t.entry  = it->second;
      t.period = t.states.size() - 1 - t.entry;
      return t;
    }
    if (index.size() > max_states) {
      throw BudgetExceeded("sliding trajectory exceeded " +
                           std::to_string(max_states) + " states");
    }
  }
}

CircuitResult slide_to_circuit(const Element& x, std::size_t max_states) {
  SlidingTrajectory t = sliding_trajectory(x, max_states);
  Element           w(x.structure());
  for (std::size_t i = 0; i < t.entry; ++i) w = w.times_simple(t.prefixes[i]);
  Element rep = t.states[t.entry];
  return {std::move(rep), std::move(w), std::move(t)};
}

SummitInvariants summit_invariants(const Element& x) {
  const Element rep = slide_to_circuit(x).representative;
  return {rep.inf(), rep.sup(), rep.canonical_length()};
}

bool in_sss(const Element& x) {
  const SummitInvariants s = summit_invariants(x);
  return x.inf() == s.inf_s && x.sup() == s.sup_s;
}

bool in_uss(const Element& x, std::size_t max_states) {
  return in_sss(x) &&
         recurrent(x, [](const Element& y) { return cycling(y); }, max_states);
}

bool in_rsss(const Element& x, std::size_t max_states) {
  return in_uss(x, max_states) &&
         recurrent(x, [](const Element& y) { return decycling(y); }, max_states);
}

bool in_sc(const Element& x, std::size_t max_states) {
  return sliding_trajectory(x, max_states).entry == 0;
}

}  // namespace garside
