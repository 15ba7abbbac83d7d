#pragma once

#include <memory>
#include <mutex>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "garside/element.hpp"
#include "garside/structure.hpp"

namespace garside {

enum class BraidKind { artin, bkl };

/// Common surface of the two Garside structures on the braid group B_n:
/// translation between braid words and simple elements.
class BraidStructure : public GarsideStructure {
 public:
  explicit BraidStructure(int n);

  int rank() const override { return n_; }
  int strands() const { return n_; }
  virtual BraidKind kind() const = 0;

  /// sigma_k^e (1 <= k < n, e = +-1) as letters over this structure's simples.
  virtual std::vector<Letter> sigma_letters(int k, int e) const = 0;
  /// a_{t,s}^e (1 <= s < t <= n).
  virtual std::vector<Letter> band_letters(int t, int s, int e) const = 0;

  /// Bracket literal: 1-based one-line permutation (Artin) or 1-based block
  /// labels (BKL). Throws std::invalid_argument if it encodes no simple.
  virtual Simple from_literal(std::span<const int> values) const = 0;
  virtual std::vector<int> to_literal(const Simple& s) const = 0;

  /// Canonical word of a simple as space separated generator tokens, "1" for
  /// the identity.
  virtual std::string word(const Simple& s) const = 0;

  std::string describe(const Simple& s) const override;

 protected:
  const std::vector<Simple>& cached_simples() const;
  virtual std::vector<Simple> enumerate_simples() const = 0;

  int n_;

 private:
  mutable std::once_flag      simples_once_;
  mutable std::vector<Simple> simples_;
};

/// Artin structure: simples are permutation braids, encoded in one-line
/// notation (0-based), s[i] = final position of the strand starting at i.
class ArtinStructure final : public BraidStructure {
 public:
  explicit ArtinStructure(int n);

  BraidKind        kind() const override { return BraidKind::artin; }
  std::string_view name() const override { return "artin"; }

  const std::vector<Simple>& atoms() const override { return atoms_; }
  Simple identity() const override { return identity_; }
  Simple delta() const override { return delta_; }
  int    norm_of_delta() const override { return n_ * (n_ - 1) / 2; }
  int    tau_order() const override { return 2; }

  bool   prefix_leq(const Simple& a, const Simple& b) const override;
  Simple meet(const Simple& a, const Simple& b) const override;
  Simple join(const Simple& a, const Simple& b) const override;
  Simple right_complement(const Simple& s) const override;
  Simple left_complement(const Simple& s) const override;
  Simple tau(const Simple& s) const override;
  Simple tau_inverse(const Simple& s) const override { return tau(s); }
  Simple product(const Simple& a, const Simple& b) const override;
  Simple left_quotient(const Simple& a, const Simple& b) const override;
  int    norm(const Simple& s) const override;
  const std::vector<Simple>& simples() const override {
    return cached_simples();
  }
  bool is_valid(const Simple& s) const override;

  std::vector<Letter> sigma_letters(int k, int e) const override;
  std::vector<Letter> band_letters(int t, int s, int e) const override;
  Simple              from_literal(std::span<const int> values) const override;
  std::vector<int>    to_literal(const Simple& s) const override;
  std::string         word(const Simple& s) const override;

  /// sigma_k as a simple, 1-based k.
  Simple sigma(int k) const;
  /// Lexicographically least reduced word (1-based generator indices).
  std::vector<int> reduced_word(const Simple& s) const;
  /// Normal form of a positive sigma word.
  Simple simple_from_word(std::span<const int> word) const;

 protected:
  std::vector<Simple> enumerate_simples() const override;

 private:
  std::vector<Simple> atoms_;
  Simple              identity_;
  Simple              delta_;
};

/// Birman-Ko-Lee structure: simples are non-crossing partitions of the
/// strands, encoded as block labels (label = smallest member, 0-based).
class BklStructure final : public BraidStructure {
 public:
  explicit BklStructure(int n);

  BraidKind        kind() const override { return BraidKind::bkl; }
  std::string_view name() const override { return "bkl"; }

  const std::vector<Simple>& atoms() const override { return atoms_; }
  Simple identity() const override { return identity_; }
  Simple delta() const override { return delta_; }
  int    norm_of_delta() const override { return n_ - 1; }
  int    tau_order() const override { return n_; }

  bool   prefix_leq(const Simple& a, const Simple& b) const override;
  Simple meet(const Simple& a, const Simple& b) const override;
  Simple join(const Simple& a, const Simple& b) const override;
  Simple right_complement(const Simple& s) const override;
  Simple left_complement(const Simple& s) const override;
  Simple tau(const Simple& s) const override;
  Simple tau_inverse(const Simple& s) const override;
  Simple product(const Simple& a, const Simple& b) const override;
  Simple left_quotient(const Simple& a, const Simple& b) const override;
  int    norm(const Simple& s) const override;
  const std::vector<Simple>& simples() const override {
    return cached_simples();
  }
  bool is_valid(const Simple& s) const override;

  std::vector<Letter> sigma_letters(int k, int e) const override;
  std::vector<Letter> band_letters(int t, int s, int e) const override;
  Simple              from_literal(std::span<const int> values) const override;
  std::vector<int>    to_literal(const Simple& s) const override;
  std::string         word(const Simple& s) const override;

  /// Band generator a_{t,s}, 1-based, s < t.
  Simple band(int t, int s) const;
  /// Descending-cycle band word: for each block b_1 < ... < b_k (blocks by
  /// smallest member) the pairs (b_k, b_{k-1}), ..., (b_2, b_1).
  std::vector<std::pair<int, int>> band_word(const Simple& s) const;
  /// Strand permutation of a simple, same convention as ArtinStructure.
  std::vector<int> permutation(const Simple& s) const;
  /// Non-crossing partition whose block cycles form the permutation; throws
  /// std::invalid_argument if a cycle is not cyclically increasing or the
  /// blocks cross.
  Simple from_permutation(std::span<const int> perm) const;

 protected:
  std::vector<Simple> enumerate_simples() const override;

 private:
  Simple rotate(const Simple& s, int shift) const;
  Simple canonical(std::span<const int> labels) const;

  std::vector<Simple> atoms_;
  Simple              identity_;
  Simple              delta_;
  int                 tau_shift_ = 1;
};

std::unique_ptr<BraidStructure> make_braid_structure(BraidKind kind, int n);

/// Element of a braid word: (sigma index k, exponent), 1-based k.
Element element_from_sigma_word(const BraidStructure&              structure,
                                std::span<const std::pair<int, int>> word);

/// sigma word (1-based generators, exponent +-1) of the band generator
/// a_{t,s}^e: (s_{t-1}...s_{s+1}) s_s^e (s_{s+1}^{-1}...s_{t-1}^{-1}).
std::vector<std::pair<int, int>> band_sigma_word(int t, int s, int e);

}  // namespace garside
