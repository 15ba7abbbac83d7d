#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "garside/simple.hpp"
#include "garside/structure.hpp"

namespace garside {

/// One letter of a word over simple elements: s or s^{-1}.
struct Letter {
  Simple simple;
  int    exponent = 1;  // +1 or -1
};

/// An element of a Garside group, always held in left normal form
/// Delta^p x_1 ... x_r with every x_i outside {1, Delta} and every adjacent
/// pair left weighted.
///
/// Elements are immutable values. They refer to their structure by pointer;
/// the structure must outlive them. Equality and hashing are by normal form.
class Element {
 public:
  explicit Element(const GarsideStructure& structure)
      : structure_(&structure) {}

  static Element delta_power(const GarsideStructure& structure, long k);
  static Element from_simple(const GarsideStructure& structure,
                             const Simple&           s);
  /// Normal form of the product of the given factors; each must be simple.
  static Element from_factors(const GarsideStructure& structure, long p,
                              std::span<const Simple> factors);

  const GarsideStructure& structure() const { return *structure_; }

  long inf() const { return power_; }
  long sup() const { return power_ + static_cast<long>(factors_.size()); }
  int  canonical_length() const { return static_cast<int>(factors_.size()); }
  std::span<const Simple> factors() const { return factors_; }

  bool is_identity() const { return power_ == 0 && factors_.empty(); }
  bool is_delta_power() const { return factors_.empty(); }
  /// inf >= 0.
  bool is_positive() const { return power_ >= 0; }
  /// 1 <= x <= Delta.
  bool is_simple() const {
    return (power_ == 0 && factors_.size() <= 1) ||
           (power_ == 1 && factors_.empty());
  }
  /// The simple element this element equals; requires is_simple().
  Simple as_simple() const;

  /// x * s for simple s.
  Element times_simple(const Simple& s) const;
  /// s * x for simple s.
  Element simple_times(const Simple& s) const;
  /// x * s^{-1} for simple s.
  Element times_simple_inverse(const Simple& s) const;
  /// x * Delta^k.
  Element times_delta_power(long k) const;
  /// Delta^k * x.
  Element delta_power_times(long k) const;

  friend bool operator==(const Element& a, const Element& b) {
    return a.structure_ == b.structure_ && a.power_ == b.power_ &&
           a.factors_ == b.factors_;
  }
  /// Canonical order: (delta power, factors lexicographically).
  friend bool operator<(const Element& a, const Element& b) {
    if (a.power_ != b.power_) return a.power_ < b.power_;
    return a.factors_ < b.factors_;
  }

  std::size_t hash() const noexcept;

 private:
  void push_back_simple(const Simple& s);
  void push_front_simple(const Simple& s);
  void normalize_ends();

  const GarsideStructure* structure_;
  long                    power_ = 0;
  std::vector<Simple>     factors_;
};

struct ElementHash {
  std::size_t operator()(const Element& x) const noexcept { return x.hash(); }
};

// Arithmetic -----------------------------------------------------------------

/// Left weighted decomposition (a s, s^{-1} b) of a b with s = d(a) ^ b.
std::pair<Simple, Simple> local_sliding(const GarsideStructure& structure,
                                        const Simple& a, const Simple& b);

Element left_normal_form(const GarsideStructure& structure,
                         std::span<const Letter> word);

Element operator*(const Element& x, const Element& y);
Element inverse(const Element& x);
Element power(const Element& x, long k);
/// tau^k(x) = Delta^{-k} x Delta^k.
Element tau(const Element& x, long k = 1);
/// c^{-1} x c.
Element conjugate(const Element& x, const Element& c);
Element conjugate_by_simple(const Element& x, const Simple& s);

// Orders and lattice operations ---------------------------------------------

/// a is a prefix of b.
bool prefix_leq(const Element& a, const Element& b);
/// b is a suffix of a.
bool suffix_geq(const Element& a, const Element& b);

Element meet(const Element& a, const Element& b);
Element join(const Element& a, const Element& b);
/// Greedy atom-extension gcd. Slow; kept as the reference implementation
/// that meet() is validated against.
Element meet_by_atoms(const Element& a, const Element& b);
/// Largest common suffix: (a^{-1} v b^{-1})^{-1}.
Element right_meet(const Element& a, const Element& b);
/// Smallest common multiple for the suffix order: (a^{-1} ^ b^{-1})^{-1}.
Element right_join(const Element& a, const Element& b);

/// Sum of factor norms plus inf * ||Delta||; requires a positive element.
long norm(const Element& x);

/// Re-expresses x in the reverse structure built over x's structure, and
/// back again.
Element to_reverse(const Element& x, const ReverseStructure& reverse);
Element from_reverse(const Element& x, const ReverseStructure& reverse);

}  // namespace garside

template <>
struct std::hash<garside::Element> : garside::ElementHash {};
