#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "garside/element.hpp"

namespace garside {

/// Thrown when an explicit work budget (states, vertices, candidates) runs out.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kDefaultTrajectoryCap = 1'000'000;

/// iota(x) = tau^{-p}(x_1); 1 when l(x) = 0.
Simple initial_factor(const Element& x);
/// phi(x) = x_r; Delta when l(x) = 0.
Simple final_factor(const Element& x);

/// p(x) = iota(x) ^ d(phi(x)), read off the normal form.
Simple preferred_prefix(const Element& x);
/// p(x) = iota(x) ^ iota(x^{-1}), the defining formula.
Simple preferred_prefix_by_definition(const Element& x);

/// s(x) = x^{p(x)}.
Element cyclic_sliding(const Element& x);
Element cyclic_sliding(const Element& x, long k);
/// c(x) = x^{iota(x)}.
Element cycling(const Element& x);
/// d(x) = x^{phi(x)^{-1}}.
Element decycling(const Element& x);

/// Largest simple suffix shared by Delta^{-inf} x and Delta^{sup} x^{-1}.
Simple preferred_suffix(const Element& x);
/// p_r(x) x p_r(x)^{-1}.
Element cyclic_right_sliding(const Element& x);

/// alpha^{(1)} = p(x)^{-1} alpha p(x^alpha).
Element transport(const Element& alpha, const Element& x);
/// alpha^{(i)}, transporting i times along the sliding orbit of x.
Element transport(const Element& alpha, const Element& x, long i);
/// p_r(x^{alpha^{-1}}) alpha p_r(x)^{-1}.
Element right_transport(const Element& alpha, const Element& x);

/// P_i(x) = p(x) p(s(x)) ... p(s^{i-1}(x)).
Element prefix_product(const Element& x, long i);

bool is_rigid(const Element& x);

struct SlidingTrajectory {
  /// states[0] = x, states[i + 1] = s(states[i]); the last state repeats
  /// states[entry], so states.size() == entry + period + 1.
  std::vector<Element> states;
  /// prefixes[i] = p(states[i]).
  std::vector<Simple> prefixes;
  std::size_t         entry  = 0;
  std::size_t         period = 0;

  const Element& start() const { return states.front(); }
};

/// Iterates cyclic sliding until a state repeats. Throws BudgetExceeded after
/// max_states distinct states.
SlidingTrajectory sliding_trajectory(const Element& x,
                                     std::size_t max_states = kDefaultTrajectoryCap);

struct CircuitResult {
  Element           representative;  // s^N(x), an element of SC(x)
  Element           witness;         // P_N(x): x^witness == representative
  SlidingTrajectory trajectory;
};

CircuitResult slide_to_circuit(const Element& x,
                               std::size_t max_states = kDefaultTrajectoryCap);

struct SummitInvariants {
  long inf_s = 0;
  long sup_s = 0;
  long ell_s = 0;
  friend bool operator==(const SummitInvariants&, const SummitInvariants&) = default;
};

SummitInvariants summit_invariants(const Element& x);

bool in_sss(const Element& x);
bool in_uss(const Element& x, std::size_t max_states = kDefaultTrajectoryCap);
bool in_rsss(const Element& x, std::size_t max_states = kDefaultTrajectoryCap);
/// x lies on its own sliding circuit.
bool in_sc(const Element& x, std::size_t max_states = kDefaultTrajectoryCap);

}  // namespace garside
