#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "garside/braid.hpp"

namespace garside {

namespace {

std::array<std::uint8_t, kMaxStrands> inverse_of(const Simple& s, int n) {
  std::array<std::uint8_t, kMaxStrands> inv{};
  for (int i = 0; i < n; ++i) inv[s[i]] = static_cast<std::uint8_t>(i);
  return inv;
}

}  // namespace

// BraidStructure --------------------------------------------------------------

BraidStructure::BraidStructure(int n) : n_(n) {
  if (n < 2 || n > kMaxStrands) {
    throw std::invalid_argument("strand count must be in [2, " +
                                std::to_string(kMaxStrands) + "], got " +
                                std::to_string(n));
  }
}

const std::vector<Simple>& BraidStructure::cached_simples() const {
  std::call_once(simples_once_, [this] {
    simples_ = enumerate_simples();
    std::sort(simples_.begin(), simples_.end());
  });
  return simples_;
}

std::string BraidStructure::describe(const Simple& s) const {
  std::string out = "[";
  const auto  lit = to_literal(s);
  for (std::size_t i = 0; i < lit.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(lit[i]);
  }
  return out + "]";
}

std::unique_ptr<BraidStructure> make_braid_structure(BraidKind kind, int n) {
  if (kind == BraidKind::artin) return std::make_unique<ArtinStructure>(n);
  return std::make_unique<BklStructure>(n);
}

std::vector<std::pair<int, int>> band_sigma_word(int t, int s, int e) {
  std::vector<std::pair<int, int>> w;
  for (int j = t - 1; j > s; --j) w.emplace_back(j, 1);
  w.emplace_back(s, e);
  for (int j = s + 1; j < t; ++j) w.emplace_back(j, -1);
  return w;
}

Element element_from_sigma_word(const BraidStructure&                structure,
                                std::span<const std::pair<int, int>> word) {
  std::vector<Letter> letters;
  for (const auto& [k, e] : word) {
    const auto l = structure.sigma_letters(k, e);
    letters.insert(letters.end(), l.begin(), l.end());
  }
  return left_normal_form(structure, letters);
}

// ArtinStructure --------------------------------------------------------------

ArtinStructure::ArtinStructure(int n) : BraidStructure(n) {
  for (int i = 0; i < n; ++i) {
    identity_[i] = static_cast<std::uint8_t>(i);
    delta_[i]    = static_cast<std::uint8_t>(n - 1 - i);
  }
  for (int k = 1; k < n; ++k) atoms_.push_back(sigma(k));
}

Simple ArtinStructure::sigma(int k) const {
  if (k < 1 || k >= n_) {
    throw std::invalid_argument("generator s" + std::to_string(k) +
                                " out of range for n = " + std::to_string(n_));
  }
  Simple s    = identity_;
  s[k - 1]    = static_cast<std::uint8_t>(k);
  s[k]        = static_cast<std::uint8_t>(k - 1);
  return s;
}

bool ArtinStructure::prefix_leq(const Simple& a, const Simple& b) const {
  for (int u = 0; u < n_; ++u) {
    for (int v = u + 1; v < n_; ++v) {
      if (a[u] > a[v] && b[u] < b[v]) return false;
    }
  }
  return true;
}

Simple ArtinStructure::meet(const Simple& a, const Simple& b) const {
  Simple c   = identity_;
  Simple pos = identity_;  // strand at each position
  bool   extended = true;
  while (extended) {
    extended = false;
    for (int i = 0; i + 1 < n_; ++i) {
      const int u = pos[i], v = pos[i + 1];
      if (u < v && a[u] > a[v] && b[u] > b[v]) {
        std::swap(pos[i], pos[i + 1]);
        c[u]     = static_cast<std::uint8_t>(i + 1);
        c[v]     = static_cast<std::uint8_t>(i);
        extended = true;
      }
    }
  }
  return c;
}

Simple ArtinStructure::join(const Simple& a, const Simple& b) const {
  bool cross[kMaxStrands][kMaxStrands] = {};
  for (int u = 0; u < n_; ++u) {
    for (int v = u + 1; v < n_; ++v) {
      cross[u][v] = a[u] > a[v] || b[u] > b[v];
    }
  }
  for (int v = 0; v < n_; ++v) {
    for (int u = 0; u < v; ++u) {
      if (!cross[u][v]) continue;
      for (int w = v + 1; w < n_; ++w) {
        if (cross[v][w]) cross[u][w] = true;
      }
    }
  }
  Simple j{};
  for (int u = 0; u < n_; ++u) {
    int p = u;
    for (int w = u + 1; w < n_; ++w) p += cross[u][w];
    for (int w = 0; w < u; ++w) p -= cross[w][u];
    j[u] = static_cast<std::uint8_t>(p);
  }
  return j;
}

Simple ArtinStructure::right_complement(const Simple& s) const {
  Simple x{};
  for (int i = 0; i < n_; ++i) x[s[i]] = static_cast<std::uint8_t>(n_ - 1 - i);
  return x;
}

Simple ArtinStructure::left_complement(const Simple& s) const {
  const auto inv = inverse_of(s, n_);
  Simple     x{};
  for (int i = 0; i < n_; ++i) x[i] = inv[n_ - 1 - i];
  return x;
}

Simple ArtinStructure::tau(const Simple& s) const {
  Simple x{};
  for (int i = 0; i < n_; ++i) {
    x[i] = static_cast<std::uint8_t>(n_ - 1 - s[n_ - 1 - i]);
  }
  return x;
}

Simple ArtinStructure::product(const Simple& a, const Simple& b) const {
  Simple x{};
  for (int i = 0; i < n_; ++i) x[i] = b[a[i]];
  return x;
}

Simple ArtinStructure::left_quotient(const Simple& a, const Simple& b) const {
  Simple x{};
  for (int i = 0; i < n_; ++i) x[a[i]] = b[i];
  return x;
}

int ArtinStructure::norm(const Simple& s) const {
  int inv = 0;
  for (int u = 0; u < n_; ++u) {
    for (int v = u + 1; v < n_; ++v) inv += s[u] > s[v];
  }
  return inv;
}

bool ArtinStructure::is_valid(const Simple& s) const {
  bool seen[kMaxStrands] = {};
  for (int i = 0; i < n_; ++i) {
    if (s[i] >= n_ || seen[s[i]]) return false;
    seen[s[i]] = true;
  }
  for (int i = n_; i < kMaxStrands; ++i) {
    if (s[i] != 0) return false;
  }
  return true;
}

std::vector<Simple> ArtinStructure::enumerate_simples() const {
  if (n_ > 9) {
    throw std::length_error("refusing to enumerate " + std::to_string(n_) +
                            "! permutation braids");
  }
  std::vector<Simple> all;
  Simple              s = identity_;
  do {
    all.push_back(s);
  } while (std::next_permutation(s.bytes.begin(), s.bytes.begin() + n_));
  return all;
}

std::vector<Letter> ArtinStructure::sigma_letters(int k, int e) const {
  return {{sigma(k), e}};
}

std::vector<Letter> ArtinStructure::band_letters(int t, int s, int e) const {
  if (s < 1 || t <= s || t > n_) {
    throw std::invalid_argument("band generator a(" + std::to_string(t) + "," +
                                std::to_string(s) + ") out of range");
  }
  std::vector<Letter> letters;
  for (const auto& [k, x] : band_sigma_word(t, s, e)) {
    letters.push_back({sigma(k), x});
  }
  return letters;
}

Simple ArtinStructure::from_literal(std::span<const int> values) const {
  if (static_cast<int>(values.size()) != n_) {
    throw std::invalid_argument("permutation literal must have " +
                                std::to_string(n_) + " entries");
  }
  Simple s{};
  for (int i = 0; i < n_; ++i) {
    if (values[i] < 1 || values[i] > n_) {
      throw std::invalid_argument("permutation entry out of range");
    }
    s[i] = static_cast<std::uint8_t>(values[i] - 1);
  }
  if (!is_valid(s)) throw std::invalid_argument("literal is not a permutation");
  return s;
}

std::vector<int> ArtinStructure::to_literal(const Simple& s) const {
  std::vector<int> v(n_);
  for (int i = 0; i < n_; ++i) v[i] = s[i] + 1;
  return v;
}

std::vector<int> ArtinStructure::reduced_word(const Simple& s) const {
  std::vector<int> w;
  Simple           x = s;
  for (int i = 0; i + 1 < n_;) {
    if (x[i] > x[i + 1]) {
      w.push_back(i + 1);
      std::swap(x[i], x[i + 1]);
      i = 0;
    } else {
      ++i;
    }
  }
  return w;
}

Simple ArtinStructure::simple_from_word(std::span<const int> word) const {
  Simple s = identity_;
  for (int k : word) {
    const Simple t = sigma(k);
    if (!prefix_leq(t, right_complement(s))) {
      throw std::invalid_argument("word is not a permutation braid");
    }
    s = product(s, t);
  }
  return s;
}

std::string ArtinStructure::word(const Simple& s) const {
  const auto w = reduced_word(s);
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += 's' + std::to_string(w[i]);
  }
  return out;
}

}  // namespace garside
