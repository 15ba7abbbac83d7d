#include "garside/element.hpp"

#include <cassert>
#include <stdexcept>

namespace garside {

namespace {

void require_same(const Element& a, const Element& b) {
  if (&a.structure() != &b.structure()) {
    throw std::invalid_argument("elements belong to different structures");
  }
}

// a * s with s = d(a) ^ b slid across; returns the slid prefix.
inline Simple slid_prefix(const GarsideStructure& g, const Simple& a,
                          const Simple& b) {
  return g.meet(g.right_complement(a), b);
}

// Initial factor of a positive element: Delta if inf >= 1, else x_1.
Simple head(const Element& positive) {
  const auto& g = positive.structure();
  if (positive.inf() >= 1) return g.delta();
  if (positive.factors().empty()) return g.identity();
  return positive.factors().front();
}

// s^{-1} x.
Element strip_prefix(const Element& x, const Simple& s) {
  const auto& g = x.structure();
  return x.simple_times(g.left_complement(s)).delta_power_times(-1);
}

// A v s for positive A and simple s.
Element join_with_simple(const Element& a, Simple s) {
  const auto& g      = a.structure();
  Element     prefix(g);
  Element     rest = a;
  while (true) {
    if (g.is_trivial(s) || rest.inf() >= 1) return prefix * rest;
    if (rest.is_identity()) return prefix.times_simple(s);
    const Simple t = rest.factors().front();
    const Simple u = g.join(t, s);
    prefix         = prefix.times_simple(t);
    rest           = strip_prefix(rest, t);
    s              = g.left_quotient(t, u);
  }
}

// Least common multiple of two positive elements.
Element positive_join(const Element& a, const Element& b) {
  const auto&         g = a.structure();
  std::vector<Simple> letters(static_cast<std::size_t>(b.inf()), g.delta());
  letters.insert(letters.end(), b.factors().begin(), b.factors().end());
  Element prefix(g);
  Element x = a;
  for (const auto& s : letters) {
    const Element e = join_with_simple(x, s);
    x               = strip_prefix(e, s);
    prefix          = prefix.times_simple(s);
  }
  return prefix * x;
}

Element word_image(const Element& x, const GarsideStructure& target) {
  // Delta^p x_1 ... x_r read in the structure whose simples are the inverses
  // of the source simples: Delta^p = (Delta')^{-p}, x_i = (x_i')^{-1}.
  std::vector<Letter> word;
  const long          p = x.inf();
  for (long i = 0; i < (p < 0 ? -p : p); ++i) {
    word.push_back({target.delta(), p > 0 ? -1 : 1});
  }
  for (const auto& f : x.factors()) word.push_back({f, -1});
  return left_normal_form(target, word);
}

}  // namespace

Element Element::delta_power(const GarsideStructure& structure, long k) {
  Element x(structure);
  x.power_ = k;
  return x;
}

Element Element::from_simple(const GarsideStructure& structure,
                             const Simple&           s) {
  Element x(structure);
  if (structure.is_delta(s)) {
    x.power_ = 1;
  } else if (!structure.is_trivial(s)) {
    x.factors_.push_back(s);
  }
  return x;
}

Element Element::from_factors(const GarsideStructure& structure, long p,
                              std::span<const Simple> factors) {
  Element x = delta_power(structure, p);
  for (const auto& s : factors) x.push_back_simple(s);
  return x;
}

Simple Element::as_simple() const {
  if (!is_simple()) throw std::logic_error("element is not simple");
  if (power_ == 1) return structure_->delta();
  if (factors_.empty()) return structure_->identity();
  return factors_.front();
}

void Element::push_back_simple(const Simple& s) {
  const auto& g = *structure_;
  if (g.is_trivial(s)) return;
  if (g.is_delta(s)) {
    *this = times_delta_power(1);
    return;
  }
  factors_.push_back(s);
  for (std::size_t i = factors_.size() - 1; i-- > 0;) {
    const Simple t = slid_prefix(g, factors_[i], factors_[i + 1]);
    if (g.is_trivial(t)) break;
    factors_[i + 1] = g.left_quotient(t, factors_[i + 1]);
    factors_[i]     = g.product(factors_[i], t);
  }
  normalize_ends();
}

void Element::push_front_simple(const Simple& s) {
  const auto&  g = *structure_;
  const Simple a = g.tau_power(s, power_);
  if (g.is_trivial(a)) return;
  if (g.is_delta(a)) {
    ++power_;
    return;
  }
  factors_.insert(factors_.begin(), a);
  for (std::size_t i = 0; i + 1 < factors_.size(); ++i) {
    const Simple t = slid_prefix(g, factors_[i], factors_[i + 1]);
    if (g.is_trivial(t)) break;
    factors_[i + 1] = g.left_quotient(t, factors_[i + 1]);
    factors_[i]     = g.product(factors_[i], t);
  }
  normalize_ends();
}

void Element::normalize_ends() {
  const auto& g     = *structure_;
  std::size_t front = 0;
  while (front < factors_.size() && g.is_delta(factors_[front])) ++front;
  std::size_t back = factors_.size();
  while (back > front && g.is_trivial(factors_[back - 1])) --back;
  power_ += static_cast<long>(front);
  if (front != 0 || back != factors_.size()) {
    factors_ = std::vector<Simple>(factors_.begin() + front,
                                   factors_.begin() + back);
  }
#ifndef NDEBUG
  for (const auto& f : factors_) {
    assert(!g.is_trivial(f) && !g.is_delta(f));
  }
#endif
}

Element Element::times_simple(const Simple& s) const {
  Element x = *this;
  x.push_back_simple(s);
  return x;
}

Element Element::simple_times(const Simple& s) const {
  Element x = *this;
  x.push_front_simple(s);
  return x;
}

Element Element::times_simple_inverse(const Simple& s) const {
  // s^{-1} = d(s) Delta^{-1}
  return times_simple(structure_->right_complement(s)).times_delta_power(-1);
}

Element Element::times_delta_power(long k) const {
  Element x = *this;
  x.power_ += k;
  if (k != 0) {
    for (auto& f : x.factors_) f = structure_->tau_power(f, k);
  }
  return x;
}

Element Element::delta_power_times(long k) const {
  Element x = *this;
  x.power_ += k;
  return x;
}

std::size_t Element::hash() const noexcept {
  std::size_t h = std::hash<long>{}(power_) ^ 0x51ED270B27AB1E23ull;
  SimpleHash  sh;
  for (const auto& f : factors_) {
    h ^= sh(f) + 0x9E3779B97F4A7C15ull + (h << 6) + (h >> 2);
  }
  return h;
}

std::pair<Simple, Simple> local_sliding(const GarsideStructure& g,
                                        const Simple& a, const Simple& b) {
  const Simple s = slid_prefix(g, a, b);
  return {g.product(a, s), g.left_quotient(s, b)};
}

Element left_normal_form(const GarsideStructure& structure,
                         std::span<const Letter> word) {
  Element x(structure);
  for (const auto& letter : word) {
    if (letter.exponent == 1) {
      x = x.times_simple(letter.simple);
    } else if (letter.exponent == -1) {
      x = x.times_simple_inverse(letter.simple);
    } else {
      throw std::invalid_argument("letter exponent must be +1 or -1");
    }
  }
  return x;
}

Element operator*(const Element& x, const Element& y) {
  require_same(x, y);
  if (x.canonical_length() <= y.canonical_length()) {
    Element r    = y;
    const auto f = x.factors();
    for (std::size_t i = f.size(); i-- > 0;) r = r.simple_times(f[i]);
    return r.delta_power_times(x.inf());
  }
  Element r = x.times_delta_power(y.inf());
  for (const auto& s : y.factors()) r = r.times_simple(s);
  return r;
}

Element inverse(const Element& x) {
  const auto& g = x.structure();
  const long  p = x.inf();
  const long  r = x.canonical_length();
  const auto  f = x.factors();
  std::vector<Simple> factors;
  factors.reserve(f.size());
  for (long j = r; j >= 1; --j) {
    factors.push_back(
        g.tau_power(g.right_complement(f[static_cast<std::size_t>(j - 1)]),
                    -(p + j)));
  }
  // Already left weighted; from_factors re-checks each pair in O(1) slidings.
  return Element::from_factors(g, -(p + r), factors);
}

Element power(const Element& x, long k) {
  if (k < 0) return power(inverse(x), -k);
  Element result(x.structure());
  Element base = x;
  while (k > 0) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return result;
}

Element tau(const Element& x, long k) {
  return x.times_delta_power(k).delta_power_times(-k);
}

Element conjugate(const Element& x, const Element& c) {
  require_same(x, c);
  return inverse(c) * x * c;
}

Element conjugate_by_simple(const Element& x, const Simple& s) {
  const auto& g = x.structure();
  return x.times_simple(s).simple_times(g.left_complement(s)).delta_power_times(
      -1);
}

bool prefix_leq(const Element& a, const Element& b) {
  require_same(a, b);
  return (inverse(a) * b).is_positive();
}

bool suffix_geq(const Element& a, const Element& b) {
  require_same(a, b);
  return (a * inverse(b)).is_positive();
}

Element meet(const Element& a, const Element& b) {
  require_same(a, b);
  const auto& g = a.structure();
  const long  m = std::min(a.inf(), b.inf());
  Element     x = a.delta_power_times(-m);
  Element     y = b.delta_power_times(-m);
  Element     gcd(g);
  while (true) {
    const Simple s = g.meet(head(x), head(y));
    if (g.is_trivial(s)) break;
    gcd = gcd.times_simple(s);
    x   = strip_prefix(x, s);
    y   = strip_prefix(y, s);
  }
  return gcd.delta_power_times(m);
}

Element join(const Element& a, const Element& b) {
  require_same(a, b);
  const long m = std::min(a.inf(), b.inf());
  return positive_join(a.delta_power_times(-m), b.delta_power_times(-m))
      .delta_power_times(m);
}

Element meet_by_atoms(const Element& a, const Element& b) {
  require_same(a, b);
  const auto& g = a.structure();
  Element     u = Element::delta_power(g, std::min(a.inf(), b.inf()));
  bool        extended = true;
  while (extended) {
    extended = false;
    for (const auto& t : g.atoms()) {
      Element v = u.times_simple(t);
      if (prefix_leq(v, a) && prefix_leq(v, b)) {
        u        = std::move(v);
        extended = true;
        break;
      }
    }
  }
  return u;
}

Element right_meet(const Element& a, const Element& b) {
  return inverse(join(inverse(a), inverse(b)));
}

Element right_join(const Element& a, const Element& b) {
  return inverse(meet(inverse(a), inverse(b)));
}

long norm(const Element& x) {
  if (!x.is_positive()) {
    throw std::invalid_argument("norm is defined on positive elements only");
  }
  const auto& g = x.structure();
  long        n = x.inf() * g.norm_of_delta();
  for (const auto& f : x.factors()) n += g.norm(f);
  return n;
}

Element to_reverse(const Element& x, const ReverseStructure& reverse) {
  if (&x.structure() != &reverse.base()) {
    throw std::invalid_argument("element does not belong to the base structure");
  }
  return word_image(x, reverse);
}

Element from_reverse(const Element& x, const ReverseStructure& reverse) {
  if (&x.structure() != &reverse) {
    throw std::invalid_argument("element does not belong to this reverse");
  }
  return word_image(x, reverse.base());
}

}  // namespace garside
