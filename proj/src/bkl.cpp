#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "garside/braid.hpp"

namespace garside {

namespace {

int find(std::array<int, kMaxStrands>& parent, int i) {
  while (parent[i] != i) i = parent[i] = parent[parent[i]];
  return i;
}

bool crossing(std::span<const int> label) {
  const int n = static_cast<int>(label.size());
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (label[b] == label[a]) continue;
      for (int c = b + 1; c < n; ++c) {
        if (label[c] != label[a]) continue;
        for (int d = c + 1; d < n; ++d) {
          if (label[d] == label[b]) return true;
        }
      }
    }
  }
  return false;
}

}  // namespace

BklStructure::BklStructure(int n) : BraidStructure(n) {
  for (int i = 0; i < n; ++i) identity_[i] = static_cast<std::uint8_t>(i);
  for (int t = 2; t <= n; ++t) {
    for (int s = 1; s < t; ++s) atoms_.push_back(band(t, s));
  }
  // tau is conjugation by delta; pick the rotation direction that agrees
  // with it on the atoms.
  auto conjugated = [&](const Simple& a) {
    const auto       p = permutation(a);
    std::vector<int> x(n);
    for (int i = 0; i < n; ++i) x[i] = (p[(i - 1 + n) % n] + 1) % n;
    return from_permutation(x);
  };
  for (int shift : {1, n - 1}) {
    if (std::all_of(atoms_.begin(), atoms_.end(), [&](const Simple& a) {
          return rotate(a, shift) == conjugated(a);
        })) {
      tau_shift_ = shift;
      return;
    }
  }
  throw std::logic_error("no label rotation realizes conjugation by delta");
}

Simple BklStructure::canonical(std::span<const int> labels) const {
  Simple s{};
  for (int i = 0; i < n_; ++i) {
    int j = 0;
    while (labels[j] != labels[i]) ++j;
    s[i] = static_cast<std::uint8_t>(j);
  }
  return s;
}

Simple BklStructure::band(int t, int s) const {
  if (s < 1 || t <= s || t > n_) {
    throw std::invalid_argument("band generator a(" + std::to_string(t) + "," +
                                std::to_string(s) + ") out of range for n = " +
                                std::to_string(n_));
  }
  Simple x    = identity_;
  x[t - 1]    = static_cast<std::uint8_t>(s - 1);
  return x;
}

std::vector<int> BklStructure::permutation(const Simple& s) const {
  std::vector<int> p(n_);
  std::vector<int> last(n_, -1);  // last member seen per block
  for (int i = 0; i < n_; ++i) {
    const int b = s[i];
    if (last[b] >= 0) p[last[b]] = i;
    last[b] = i;
  }
  for (int b = 0; b < n_; ++b) {
    if (last[b] >= 0) p[last[b]] = b;
  }
  return p;
}

Simple BklStructure::from_permutation(std::span<const int> perm) const {
  std::vector<int> label(n_, -1);
  for (int m = 0; m < n_; ++m) {
    if (label[m] >= 0) continue;
    int i = m;
    do {
      if (i < 0 || i >= n_ || label[i] >= 0) {
        throw std::invalid_argument("not a permutation");
      }
      label[i]   = m;
      const int j = perm[i];
      if (j != m && j <= i) {
        throw std::invalid_argument("cycle is not increasing");
      }
      i = j;
    } while (i != m);
  }
  if (crossing(label)) throw std::invalid_argument("blocks cross");
  Simple s{};
  for (int i = 0; i < n_; ++i) s[i] = static_cast<std::uint8_t>(label[i]);
  return s;
}

Simple BklStructure::rotate(const Simple& s, int shift) const {
  std::vector<int> label(n_);
  for (int i = 0; i < n_; ++i) label[(i + shift) % n_] = s[i];
  return canonical(label);
}

bool BklStructure::prefix_leq(const Simple& a, const Simple& b) const {
  for (int i = 0; i < n_; ++i) {
    if (b[i] != b[a[i]]) return false;
  }
  return true;
}

Simple BklStructure::meet(const Simple& a, const Simple& b) const {
  std::vector<int> label(n_);
  for (int i = 0; i < n_; ++i) label[i] = a[i] * kMaxStrands + b[i];
  return canonical(label);
}

Simple BklStructure::join(const Simple& a, const Simple& b) const {
  std::array<int, kMaxStrands> parent{};
  std::iota(parent.begin(), parent.end(), 0);
  auto unite = [&](int i, int j) {
    i = find(parent, i);
    j = find(parent, j);
    if (i == j) return false;
    parent[std::max(i, j)] = std::min(i, j);
    return true;
  };
  for (int i = 0; i < n_; ++i) {
    unite(i, a[i]);
    unite(i, b[i]);
  }
  bool merged = true;
  while (merged) {
    merged = false;
    for (int p = 0; p < n_ && !merged; ++p) {
      for (int q = p + 1; q < n_ && !merged; ++q) {
        if (find(parent, p) == find(parent, q)) continue;
        for (int r = q + 1; r < n_ && !merged; ++r) {
          if (find(parent, r) != find(parent, p)) continue;
          for (int t = r + 1; t < n_ && !merged; ++t) {
            if (find(parent, t) == find(parent, q)) merged = unite(p, q);
          }
        }
      }
    }
  }
  std::vector<int> label(n_);
  for (int i = 0; i < n_; ++i) label[i] = find(parent, i);
  return canonical(label);
}

Simple BklStructure::right_complement(const Simple& s) const {
  const auto       p = permutation(s);
  std::vector<int> x(n_);
  for (int i = 0; i < n_; ++i) x[p[i]] = (i + 1) % n_;
  return from_permutation(x);
}

Simple BklStructure::left_complement(const Simple& s) const {
  const auto       p = permutation(s);
  std::vector<int> inv(n_), x(n_);
  for (int i = 0; i < n_; ++i) inv[p[i]] = i;
  for (int i = 0; i < n_; ++i) x[i] = inv[(i + 1) % n_];
  return from_permutation(x);
}

Simple BklStructure::tau(const Simple& s) const { return rotate(s, tau_shift_); }

Simple BklStructure::tau_inverse(const Simple& s) const {
  return rotate(s, n_ - tau_shift_);
}

Simple BklStructure::product(const Simple& a, const Simple& b) const {
  const auto       pa = permutation(a);
  const auto       pb = permutation(b);
  std::vector<int> x(n_);
  for (int i = 0; i < n_; ++i) x[i] = pb[pa[i]];
  return from_permutation(x);
}

Simple BklStructure::left_quotient(const Simple& a, const Simple& b) const {
  const auto       pa = permutation(a);
  const auto       pb = permutation(b);
  std::vector<int> x(n_);
  for (int i = 0; i < n_; ++i) x[pa[i]] = pb[i];
  return from_permutation(x);
}

int BklStructure::norm(const Simple& s) const {
  int blocks = 0;
  for (int i = 0; i < n_; ++i) blocks += s[i] == i;
  return n_ - blocks;
}

bool BklStructure::is_valid(const Simple& s) const {
  std::vector<int> label(n_);
  for (int i = 0; i < n_; ++i) {
    if (s[i] > i || s[s[i]] != s[i]) return false;
    label[i] = s[i];
  }
  for (int i = n_; i < kMaxStrands; ++i) {
    if (s[i] != 0) return false;
  }
  return !crossing(label);
}

std::vector<Simple> BklStructure::enumerate_simples() const {
  if (n_ > 12) {
    throw std::length_error("refusing to enumerate non-crossing partitions of " +
                            std::to_string(n_) + " points");
  }
  // Restricted growth strings, kept when non-crossing.
  std::vector<Simple> all;
  std::vector<int>    label(n_, 0);
  auto rec = [&](auto&& self, int i, int blocks) -> void {
    if (i == n_) {
      if (!crossing(label)) all.push_back(canonical(label));
      return;
    }
    for (int b = 0; b <= blocks; ++b) {
      label[i] = b;
      self(self, i + 1, std::max(blocks, b + 1));
    }
  };
  label[0] = 0;
  rec(rec, 1, 1);
  return all;
}

std::vector<Letter> BklStructure::sigma_letters(int k, int e) const {
  if (k < 1 || k >= n_) {
    throw std::invalid_argument("generator s" + std::to_string(k) +
                                " out of range for n = " + std::to_string(n_));
  }
  return {{band(k + 1, k), e}};
}

std::vector<Letter> BklStructure::band_letters(int t, int s, int e) const {
  return {{band(t, s), e}};
}

Simple BklStructure::from_literal(std::span<const int> values) const {
  if (static_cast<int>(values.size()) != n_) {
    throw std::invalid_argument("block-label literal must have " +
                                std::to_string(n_) + " entries");
  }
  if (crossing(values)) throw std::invalid_argument("blocks cross");
  return canonical(values);
}

std::vector<int> BklStructure::to_literal(const Simple& s) const {
  std::vector<int> v(n_);
  for (int i = 0; i < n_; ++i) v[i] = s[i] + 1;
  return v;
}

std::vector<std::pair<int, int>> BklStructure::band_word(const Simple& s) const {
  std::vector<std::pair<int, int>> w;
  for (int m = 0; m < n_; ++m) {
    if (s[m] != m) continue;
    std::vector<int> members;
    for (int i = m; i < n_; ++i) {
      if (s[i] == m) members.push_back(i + 1);
    }
    for (std::size_t j = members.size(); j-- > 1;) {
      w.emplace_back(members[j], members[j - 1]);
    }
  }
  return w;
}

std::string BklStructure::word(const Simple& s) const {
  const auto w = band_word(s);
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += "a(" + std::to_string(w[i].first) + "," +
           std::to_string(w[i].second) + ")";
  }
  return out;
}

}  // namespace garside
