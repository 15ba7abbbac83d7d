#pragma once

#include <cstddef>
#include <optional>
#include <unordered_map>
#include <vector>

#include "garside/element.hpp"
#include "garside/sliding.hpp"

namespace garside {

/// Work limits for the graph and set computations. Exhaustion throws
/// BudgetExceeded; nothing is silently truncated.
struct Budget {
  std::size_t max_vertices   = 1'000'000;
  std::size_t max_trajectory = kDefaultTrajectoryCap;
  /// Positive candidates examined by the minimal-conjugator searches.
  std::size_t max_candidates = 1'000'000;
  /// Worker threads for arrow computation; 1 runs everything inline.
  unsigned threads = 1;
};

/// Memoized test "y in SC" for conjugates y sharing the given summit
/// invariants. Not thread safe; use one instance per thread.
class ScMembership {
 public:
  explicit ScMembership(SummitInvariants summit,
                        std::size_t      max_trajectory = kDefaultTrajectoryCap)
      : summit_(summit), max_trajectory_(max_trajectory) {}

  bool contains(const Element& y);
  const SummitInvariants& summit() const { return summit_; }
  std::size_t memo_size() const { return memo_.size(); }

 private:
  SummitInvariants                  summit_;
  std::size_t                       max_trajectory_;
  std::unordered_map<Element, bool> memo_;
};

/// The minimal nontrivial simple s with y^s in SC, one per atom they lie
/// above, sorted by the canonical order. Requires y in SC.
std::vector<Simple> indecomposable_conjugators(const Element& y,
                                               ScMembership&  sc);

struct Arrow {
  std::size_t source;
  Simple      conjugator;
  std::size_t target;
};

struct SlidingCircuitsGraph {
  Element              base;
  /// SC(base) in breadth-first discovery order.
  std::vector<Element> vertices;
  std::vector<Arrow>   arrows;
  /// base^{witness_to_base[i]} == vertices[i].
  std::vector<Element> witness_to_base;
  std::unordered_map<Element, std::size_t> index;

  std::optional<std::size_t> find(const Element& y) const {
    const auto it = index.find(y);
    if (it == index.end()) return std::nullopt;
    return it->second;
  }
};

SlidingCircuitsGraph compute_scg(const Element& x, const Budget& budget = {});

struct ConjugatorWitness {
  Element from;
  Element to;
  Element conjugator;  // from^conjugator == to
};

bool solve_cdp(const Element& x, const Element& y, const Budget& budget = {});
std::optional<ConjugatorWitness> solve_csp(const Element& x, const Element& y,
                                           const Budget& budget = {});

/// SSS(x), sorted by the canonical order.
std::vector<Element> compute_sss(const Element& x, const Budget& budget = {});

/// c(x): the smallest positive element conjugating x into SC(x).
Element minimal_sc_conjugator(const Element& x, const Budget& budget = {});
/// rho(x): the smallest positive element conjugating x into SSS(x).
Element minimal_sss_conjugator(const Element& x, const Budget& budget = {});

}  // namespace garside
