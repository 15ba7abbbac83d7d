#include "garside/circuits.hpp"

#include <algorithm>
#include <atomic>
#include <deque>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <unordered_set>

namespace garside {

namespace {

void check_vertex_budget(std::size_t count, const Budget& budget) {
  if (count > budget.max_vertices) {
    throw BudgetExceeded("vertex budget of " +
                         std::to_string(budget.max_vertices) + " exhausted");
  }
}

// Arrow lists for vertices[begin, end), computed by budget.threads workers.
std::vector<std::vector<Simple>> arrows_for(
    const std::vector<Element>& vertices, std::size_t begin, std::size_t end,
    std::vector<ScMembership>& memos) {
  std::vector<std::vector<Simple>> out(end - begin);
  if (memos.size() == 1 || end - begin < 2) {
    for (std::size_t i = begin; i < end; ++i) {
      out[i - begin] = indecomposable_conjugators(vertices[i], memos.front());
    }
    return out;
  }
  std::atomic<std::size_t> next{begin};
  std::exception_ptr       failure;
  std::mutex               failure_mutex;
  std::vector<std::thread> workers;
  for (auto& memo : memos) {
    workers.emplace_back([&, memo_ptr = &memo] {
      try {
        for (std::size_t i = next++; i < end; i = next++) {
          out[i - begin] = indecomposable_conjugators(vertices[i], *memo_ptr);
        }
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    });
  }
  for (auto& w : workers) w.join();
  if (failure) std::rethrow_exception(failure);
  return out;
}

template <class Accept>
Element minimal_positive_conjugator(const Element& x, const Element& bound,
                                    Accept accept, const Budget& budget) {
  const auto&                 g = x.structure();
  std::vector<Element>        level{Element(g)};
  std::unordered_set<Element> seen{Element(g)};
  while (!level.empty()) {
    std::vector<Element> hits;
    for (const auto& u : level) {
      if (accept(conjugate(x, u))) hits.push_back(u);
    }
    if (!hits.empty()) {
      Element m = hits.front();
      for (const auto& h : hits) m = meet(m, h);
      if (!accept(conjugate(x, m))) {
        throw std::logic_error("successful conjugators are not gcd closed");
      }
      return m;
    }
    std::vector<Element> next;
    for (const auto& u : level) {
      for (const auto& a : g.atoms()) {
        Element v = u.times_simple(a);
        if (!prefix_leq(v, bound) || !seen.insert(v).second) continue;
        if (seen.size() > budget.max_candidates) {
          throw BudgetExceeded("candidate budget of " +
                               std::to_string(budget.max_candidates) +
                               " exhausted");
        }
        next.push_back(std::move(v));
      }
    }
    level = std::move(next);
  }
  throw std::logic_error("no prefix of a successful conjugator succeeds");
}

}  // namespace

bool ScMembership::contains(const Element& y) {
  if (y.inf() != summit_.inf_s || y.canonical_length() != summit_.ell_s) {
    return false;
  }
  if (const auto it = memo_.find(y); it != memo_.end()) return it->second;
  std::vector<Element>                     path;
  std::unordered_map<Element, std::size_t> on_path;
  Element                                  z = y;
  while (true) {
    if (memo_.count(z)) {
      // Runs into a known trajectory without closing a loop through y.
      for (auto& p : path) memo_.emplace(std::move(p), false);
      return false;
    }
    const auto [it, fresh] = on_path.emplace(z, path.size());
    if (!fresh) {
      const std::size_t k = it->second;
      for (std::size_t i = 0; i < path.size(); ++i) {
        memo_.emplace(std::move(path[i]), i >= k);
      }
      return k == 0;
    }
    path.push_back(z);
    if (path.size() > max_trajectory_) {
      throw BudgetExceeded("sliding trajectory exceeded " +
                           std::to_string(max_trajectory_) + " states");
    }
    z = cyclic_sliding(z);
  }
}

std::vector<Simple> indecomposable_conjugators(const Element& y,
                                               ScMembership&  sc) {
  const auto& g = y.structure();
  if (!sc.contains(y)) {
    throw std::invalid_argument("indecomposable conjugators need y in SC");
  }
  std::vector<Simple> candidates;  // sorted, as simples() is
  for (const auto& s : g.simples()) {
    if (g.is_trivial(s)) continue;
    if (sc.contains(conjugate_by_simple(y, s))) candidates.push_back(s);
  }
  std::vector<Simple> minima;
  for (const auto& a : g.atoms()) {
    Simple m     = g.delta();
    bool   above = false;
    for (const auto& s : candidates) {
      if (g.prefix_leq(a, s)) {
        m     = g.meet(m, s);
        above = true;
      }
    }
    if (!above) continue;
    if (!std::binary_search(candidates.begin(), candidates.end(), m)) {
      throw std::logic_error("SC conjugators are not gcd closed");
    }
    if (std::find(minima.begin(), minima.end(), m) == minima.end()) {
      minima.push_back(m);
    }
  }
  std::vector<Simple> result;
  for (const auto& m : minima) {
    const bool dominated = std::any_of(minima.begin(), minima.end(), [&](const Simple& o) {
      return o != m && g.prefix_leq(o, m);
    });
    if (!dominated) result.push_back(m);
  }
  std::sort(result.begin(), result.end());
  return result;
}

SlidingCircuitsGraph compute_scg(const Element& x, const Budget& budget) {
  const CircuitResult    seed = slide_to_circuit(x, budget.max_trajectory);
  const Element&         rep  = seed.representative;
  const SummitInvariants summit{rep.inf(), rep.sup(), rep.canonical_length()};
  std::vector<ScMembership> memos(std::max(1u, budget.threads),
                                  ScMembership(summit, budget.max_trajectory));

  SlidingCircuitsGraph graph{x, {}, {}, {}, {}};
  graph.vertices.push_back(rep);
  graph.witness_to_base.push_back(seed.witness);
  graph.index.emplace(rep, 0);

  std::size_t begin = 0;
  while (begin < graph.vertices.size()) {
    const std::size_t end = graph.vertices.size();
    const auto out = arrows_for(graph.vertices, begin, end, memos);
    for (std::size_t i = begin; i < end; ++i) {
      for (const auto& s : out[i - begin]) {
        Element target = conjugate_by_simple(graph.vertices[i], s);
        auto [it, fresh] = graph.index.emplace(target, graph.vertices.size());
        if (fresh) {
          check_vertex_budget(graph.vertices.size() + 1, budget);
          graph.vertices.push_back(std::move(target));
          graph.witness_to_base.push_back(graph.witness_to_base[i].times_simple(s));
        }
        graph.arrows.push_back({i, s, it->second});
      }
    }
    begin = end;
  }
  return graph;
}

std::optional<ConjugatorWitness> solve_csp(const Element& x, const Element& y,
                                           const Budget& budget) {
  if (&x.structure() != &y.structure()) {
    throw std::invalid_argument("elements belong to different structures");
  }
  const CircuitResult cy = slide_to_circuit(y, budget.max_trajectory);
  const CircuitResult cx = slide_to_circuit(x, budget.max_trajectory);
  const Element&      ry = cy.representative;
  const Element&      rx = cx.representative;
  if (ry.inf() != rx.inf() || ry.sup() != rx.sup()) return std::nullopt;
  const SlidingCircuitsGraph graph = compute_scg(x, budget);
  const auto                 at    = graph.find(ry);
  if (!at) return std::nullopt;
  Element c = graph.witness_to_base[*at] * inverse(cy.witness);
  if (!(conjugate(x, c) == y)) {
    throw std::logic_error("conjugator failed verification");
  }
  return ConjugatorWitness{x, y, std::move(c)};
}

bool solve_cdp(const Element& x, const Element& y, const Budget& budget) {
  return solve_csp(x, y, budget).has_value();
}

std::vector<Element> compute_sss(const Element& x, const Budget& budget) {
  const Element rep = slide_to_circuit(x, budget.max_trajectory).representative;
  const auto&   g   = x.structure();
  std::unordered_set<Element> seen{rep};
  std::deque<Element>         queue{rep};
  while (!queue.empty()) {
    const Element y = std::move(queue.front());
    queue.pop_front();
    for (const auto& s : g.simples()) {
      if (g.is_trivial(s)) continue;
      Element z = conjugate_by_simple(y, s);
      if (z.inf() != rep.inf() || z.canonical_length() != rep.canonical_length()) {
        continue;
      }
      if (seen.insert(z).second) {
        check_vertex_budget(seen.size(), budget);
        queue.push_back(std::move(z));
      }
    }
  }
  std::vector<Element> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

Element minimal_sc_conjugator(const Element& x, const Budget& budget) {
  const CircuitResult c   = slide_to_circuit(x, budget.max_trajectory);
  const Element&      rep = c.representative;
  ScMembership sc({rep.inf(), rep.sup(), rep.canonical_length()},
                  budget.max_trajectory);
  return minimal_positive_conjugator(
      x, c.witness, [&](const Element& z) { return sc.contains(z); }, budget);
}

Element minimal_sss_conjugator(const Element& x, const Budget& budget) {
  const CircuitResult c   = slide_to_circuit(x, budget.max_trajectory);
  const Element&      rep = c.representative;
  return minimal_positive_conjugator(
      x, c.witness,
      [&](const Element& z) {
        return z.inf() == rep.inf() && z.sup() == rep.sup();
      },
      budget);
}

}  // namespace garside
