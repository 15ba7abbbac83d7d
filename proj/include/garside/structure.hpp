#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "garside/simple.hpp"

namespace garside {

/// The contract a concrete Garside structure of finite type implements.
///
/// Every operation works on the structure's own canonical encoding of simple
/// elements. Operations documented with a guarantee (product, left_quotient)
/// assume the caller has established it; implementations are free to return
/// garbage otherwise. Instances are immutable after construction and may be
/// shared across threads.
class GarsideStructure {
 public:
  virtual ~GarsideStructure() = default;

  virtual std::string_view name() const = 0;
  /// Strand count (or rank) the structure was built for.
  virtual int rank() const = 0;

  virtual const std::vector<Simple>& atoms() const = 0;
  virtual Simple identity() const = 0;
  virtual Simple delta() const = 0;
  /// Letter length of the Garside element.
  virtual int norm_of_delta() const = 0;
  /// Smallest k > 0 with tau^k = id on simples.
  virtual int tau_order() const = 0;

  /// a is a prefix of b.
  virtual bool prefix_leq(const Simple& a, const Simple& b) const = 0;
  virtual Simple meet(const Simple& a, const Simple& b) const = 0;
  virtual Simple join(const Simple& a, const Simple& b) const = 0;

  /// s^{-1} Delta.
  virtual Simple right_complement(const Simple& s) const = 0;
  /// Delta s^{-1}.
  virtual Simple left_complement(const Simple& s) const = 0;
  /// Delta^{-1} s Delta.
  virtual Simple tau(const Simple& s) const = 0;
  virtual Simple tau_inverse(const Simple& s) const = 0;

  /// a * b; requires b to be a prefix of right_complement(a).
  virtual Simple product(const Simple& a, const Simple& b) const = 0;
  /// a^{-1} b; requires a to be a prefix of b.
  virtual Simple left_quotient(const Simple& a, const Simple& b) const = 0;

  virtual int norm(const Simple& s) const = 0;
  /// All simple elements, sorted by the canonical total order.
  virtual const std::vector<Simple>& simples() const = 0;
  /// True if the bytes are a valid encoding of a simple element.
  virtual bool is_valid(const Simple& s) const = 0;

  virtual std::string describe(const Simple& s) const = 0;

  bool is_trivial(const Simple& s) const { return s == identity(); }
  bool is_delta(const Simple& s) const { return s == delta(); }

  /// tau^k(s) for any integer k.
  Simple tau_power(Simple s, long k) const;

  /// b is a suffix of a (a >= b in the suffix order).
  bool suffix_geq(const Simple& a, const Simple& b) const {
    return prefix_leq(right_complement(a), right_complement(b));
  }
  /// Largest common suffix.
  Simple right_meet(const Simple& a, const Simple& b) const {
    return left_complement(join(right_complement(a), right_complement(b)));
  }
  /// a b^{-1}; requires b to be a suffix of a.
  Simple right_quotient(const Simple& a, const Simple& b) const {
    return left_quotient(left_complement(a), left_complement(b));
  }
};

/// The reverse structure (G, P^{-1}, Delta^{-1}) of a base structure.
///
/// A simple element u^{-1} of the reverse structure is encoded by the base
/// encoding of u. Prefixes in the reverse order are suffixes in the base
/// order, so every operation is expressed through base complements.
class ReverseStructure final : public GarsideStructure {
 public:
  explicit ReverseStructure(const GarsideStructure& base);

  const GarsideStructure& base() const { return base_; }

  std::string_view name() const override { return name_; }
  int rank() const override { return base_.rank(); }
  const std::vector<Simple>& atoms() const override { return base_.atoms(); }
  Simple identity() const override { return base_.identity(); }
  Simple delta() const override { return base_.delta(); }
  int norm_of_delta() const override { return base_.norm_of_delta(); }
  int tau_order() const override { return base_.tau_order(); }

  bool prefix_leq(const Simple& a, const Simple& b) const override {
    return base_.suffix_geq(b, a);
  }
  Simple meet(const Simple& a, const Simple& b) const override {
    return base_.right_meet(a, b);
  }
  Simple join(const Simple& a, const Simple& b) const override {
    return base_.left_complement(
        base_.meet(base_.right_complement(a), base_.right_complement(b)));
  }
  Simple right_complement(const Simple& s) const override {
    return base_.left_complement(s);
  }
  Simple left_complement(const Simple& s) const override {
    return base_.right_complement(s);
  }
  Simple tau(const Simple& s) const override { return base_.tau_inverse(s); }
  Simple tau_inverse(const Simple& s) const override { return base_.tau(s); }
  Simple product(const Simple& a, const Simple& b) const override {
    return base_.product(b, a);
  }
  Simple left_quotient(const Simple& a, const Simple& b) const override {
    return base_.right_quotient(b, a);
  }
  int norm(const Simple& s) const override { return base_.norm(s); }
  const std::vector<Simple>& simples() const override {
    return base_.simples();
  }
  bool is_valid(const Simple& s) const override { return base_.is_valid(s); }
  std::string describe(const Simple& s) const override {
    return "(" + base_.describe(s) + ")^-1";
  }

 private:
  const GarsideStructure& base_;
  std::string             name_;
};

}  // namespace garside
