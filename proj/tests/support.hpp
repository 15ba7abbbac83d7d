#pragma once

// Shared helpers for the test binaries: deterministic random words and
// independent oracles (permutation arithmetic, Burau matrices, naive
// normal forms) that do not go through the code under test.

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "garside/braid.hpp"
#include "garside/element.hpp"

namespace testing_support {

using garside::BraidStructure;
using garside::Element;
using garside::GarsideStructure;
using garside::Letter;
using garside::Simple;

using Perm = std::vector<int>;

inline Perm compose(const Perm& a, const Perm& b) {  // apply a then b
  Perm c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = b[a[i]];
  return c;
}

inline Perm invert(const Perm& a) {
  Perm c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[a[i]] = static_cast<int>(i);
  return c;
}

inline int inversions(const Perm& a) {
  int k = 0;
  for (std::size_t u = 0; u < a.size(); ++u)
    for (std::size_t v = u + 1; v < a.size(); ++v) k += a[u] > a[v];
  return k;
}

inline int reflection_length(const Perm& a) {
  std::vector<bool> seen(a.size());
  int               cycles = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (seen[i]) continue;
    ++cycles;
    for (std::size_t j = i; !seen[j]; j = a[j]) seen[j] = true;
  }
  return static_cast<int>(a.size()) - cycles;
}

/// Strand permutation of a simple, computed without the structure's product.
inline Perm strand_perm(const BraidStructure& g, const Simple& s) {
  const int n = g.strands();
  Perm      p(n);
  if (g.kind() == garside::BraidKind::artin) {
    for (int i = 0; i < n; ++i) p[i] = s[i];
    return p;
  }
  // Cycle each block upward.
  for (int i = 0; i < n; ++i) {
    int next = -1;
    for (int j = i + 1; j < n && next < 0; ++j)
      if (s[j] == s[i]) next = j;
    p[i] = next >= 0 ? next : s[i];
  }
  return p;
}

/// Length of a simple in its own generators, from the permutation alone.
inline int perm_length(const BraidStructure& g, const Perm& p) {
  return g.kind() == garside::BraidKind::artin ? inversions(p)
                                               : reflection_length(p);
}

/// a * c = b as simples, decided by permutations and additive length.
inline bool oracle_product_is(const BraidStructure& g, const Simple& a,
                              const Simple& c, const Simple& b) {
  const Perm pa = strand_perm(g, a), pc = strand_perm(g, c),
             pb = strand_perm(g, b);
  return compose(pa, pc) == pb &&
         perm_length(g, pa) + perm_length(g, pc) == perm_length(g, pb);
}

inline bool oracle_prefix(const BraidStructure& g, const Simple& a,
                          const Simple& b) {
  for (const auto& c : g.simples())
    if (oracle_product_is(g, a, c, b)) return true;
  return false;
}

// Burau representation modulo a prime ---------------------------------------

constexpr std::uint64_t kPrime = 1000000007ull;

inline std::uint64_t mod_pow(std::uint64_t b, std::uint64_t e) {
  std::uint64_t r = 1;
  b %= kPrime;
  while (e) {
    if (e & 1) r = r * b % kPrime;
    b = b * b % kPrime;
    e >>= 1;
  }
  return r;
}

struct Matrix {
  int                        n = 0;
  std::vector<std::uint64_t> a;
  explicit Matrix(int n_) : n(n_), a(n_ * n_, 0) {
    for (int i = 0; i < n; ++i) at(i, i) = 1;
  }
  std::uint64_t&       at(int i, int j) { return a[i * n + j]; }
  std::uint64_t        at(int i, int j) const { return a[i * n + j]; }
  friend bool          operator==(const Matrix&, const Matrix&) = default;
  friend Matrix operator*(const Matrix& x, const Matrix& y) {
    Matrix z(x.n);
    for (int i = 0; i < x.n; ++i)
      for (int j = 0; j < x.n; ++j) {
        std::uint64_t s = 0;
        for (int k = 0; k < x.n; ++k) s = (s + x.at(i, k) * y.at(k, j)) % kPrime;
        z.at(i, j) = s;
      }
    return z;
  }
};

/// Unreduced Burau matrix of sigma_k^e at the parameter t.
inline Matrix burau_generator(int n, int k, int e, std::uint64_t t) {
  Matrix m(n);
  const int i = k - 1;
  if (e == 1) {
    m.at(i, i)         = (1 + kPrime - t) % kPrime;
    m.at(i, i + 1)     = t;
    m.at(i + 1, i)     = 1;
    m.at(i + 1, i + 1) = 0;
  } else {
    const std::uint64_t ti = mod_pow(t, kPrime - 2);
    m.at(i, i)             = 0;
    m.at(i, i + 1)         = 1;
    m.at(i + 1, i)         = ti;
    m.at(i + 1, i + 1)     = (1 + kPrime - ti) % kPrime;
  }
  return m;
}

inline Matrix burau_word(int n, const std::vector<std::pair<int, int>>& w,
                         std::uint64_t t) {
  Matrix m(n);
  for (const auto& [k, e] : w) m = m * burau_generator(n, k, e, t);
  return m;
}

/// A positive sigma word for a simple, built from its permutation only.
inline std::vector<std::pair<int, int>> oracle_sigma_word(
    const BraidStructure& g, const Simple& s) {
  std::vector<std::pair<int, int>> w;
  if (g.kind() == garside::BraidKind::artin) {
    Perm p = strand_perm(g, s);
    // Bubble sort from the left: each adjacent crossing is a left divisor.
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t i = 0; i + 1 < p.size(); ++i)
        if (p[i] > p[i + 1]) {
          w.emplace_back(static_cast<int>(i) + 1, 1);
          std::swap(p[i], p[i + 1]);
          changed = true;
          break;
        }
    }
    return w;
  }
  const int n = g.strands();
  for (int m = 0; m < n; ++m) {
    if (s[m] != m) continue;
    std::vector<int> block;
    for (int i = m; i < n; ++i)
      if (s[i] == m) block.push_back(i + 1);
    for (std::size_t j = block.size(); j-- > 1;) {
      const auto b = garside::band_sigma_word(block[j], block[j - 1], 1);
      w.insert(w.end(), b.begin(), b.end());
    }
  }
  return w;
}

inline Matrix burau_simple(const BraidStructure& g, const Simple& s, int e,
                           std::uint64_t t) {
  auto w = oracle_sigma_word(g, s);
  if (e == -1) {
    std::reverse(w.begin(), w.end());
    for (auto& l : w) l.second = -l.second;
  }
  return burau_word(g.strands(), w, t);
}

inline Matrix burau_letters(const BraidStructure& g,
                            const std::vector<Letter>& word, std::uint64_t t) {
  Matrix m(g.strands());
  for (const auto& l : word) m = m * burau_simple(g, l.simple, l.exponent, t);
  return m;
}

inline Matrix burau_element(const BraidStructure& g, const Element& x,
                            std::uint64_t t) {
  Matrix       m(g.strands());
  const Matrix d = burau_simple(g, g.delta(), 1, t);
  const Matrix di = burau_simple(g, g.delta(), -1, t);
  for (long i = 0; i < (x.inf() < 0 ? -x.inf() : x.inf()); ++i)
    m = m * (x.inf() > 0 ? d : di);
  for (const auto& f : x.factors()) m = m * burau_simple(g, f, 1, t);
  return m;
}

// Random material ------------------------------------------------------------

inline std::vector<Letter> random_word(const GarsideStructure& g,
                                       std::mt19937_64& rng, int length,
                                       bool positive = false) {
  const auto&         atoms = g.atoms();
  std::vector<Letter> w;
  std::uniform_int_distribution<std::size_t> pick(0, atoms.size() - 1);
  std::bernoulli_distribution                 inv(0.5);
  for (int i = 0; i < length; ++i) {
    w.push_back({atoms[pick(rng)], (!positive && inv(rng)) ? -1 : 1});
  }
  return w;
}

inline Simple random_simple(const GarsideStructure& g, std::mt19937_64& rng) {
  const auto& all = g.simples();
  return all[std::uniform_int_distribution<std::size_t>(0, all.size() - 1)(rng)];
}

inline Element random_element(const GarsideStructure& g, std::mt19937_64& rng,
                              int length, bool positive = false) {
  const auto w = random_word(g, rng, length, positive);
  return garside::left_normal_form(g, w);
}

/// Random element given directly by random simple factors and a Delta power.
inline Element random_factors(const GarsideStructure& g, std::mt19937_64& rng,
                              int factors, long p) {
  std::vector<Simple> f;
  for (int i = 0; i < factors; ++i) f.push_back(random_simple(g, rng));
  return Element::from_factors(g, p, f);
}

/// Normal form by repeated passes of local slidings over a whole factor list,
/// starting from Delta^p s_1 ... s_k with Delta powers already collected.
inline Element naive_normal_form(const GarsideStructure&    g,
                                 const std::vector<Letter>& word) {
  long                p = 0;
  std::vector<Simple> f;
  // s^{-1} = d(s) Delta^{-1}; moving Delta^{-1} left across the prefix twists
  // the factors already collected.
  for (const auto& l : word) {
    if (l.exponent == 1) {
      f.push_back(l.simple);
    } else {
      f.push_back(g.right_complement(l.simple));
      for (auto& s : f) s = g.tau_inverse(s);
      --p;
    }
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < f.size(); ++i) {
      const Simple t = g.meet(g.right_complement(f[i]), f[i + 1]);
      if (g.is_trivial(t)) continue;
      f[i]     = g.product(f[i], t);
      f[i + 1] = g.left_quotient(t, f[i + 1]);
      changed  = true;
    }
  }
  std::vector<Simple> rest;
  for (const auto& s : f) {
    if (g.is_delta(s)) {
      ++p;
    } else if (!g.is_trivial(s)) {
      rest.push_back(s);
    }
  }
  Element x = Element::delta_power(g, p);
  // Delta factors sit at the front after sliding, trivial ones at the back,
  // so what remains is already left weighted.
  for (const auto& s : rest) x = x.times_simple(s);
  return x;
}

}  // namespace testing_support
