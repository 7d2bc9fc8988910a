#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>

#include "setcat/function.hpp"

namespace setcat {

inline constexpr std::uint64_t kDefaultEnumerationBudget = 1'000'000;

/// A distinct parallel pair that the tested arrow fails to cancel.
struct CancellationWitness {
  FunctionV f;
  FunctionV g;
};

namespace detail {

/// Probe objects are built from the reserved • family so they can never
/// collide with user labels: {•} for size 1, {•1,...,•k} otherwise.
inline FinSetObj probe_object(std::size_t size) {
  if (size == 1) return point_object();
  std::vector<Label> labels;
  for (std::size_t i = 1; i <= size; ++i)
    labels.emplace_back(kPointText + std::to_string(i));
  return FinSetObj(std::move(labels));
}

template <typename Check>
std::optional<CancellationWitness> first_uncancelled_pair(const FinSetObj& dom,
                                                          const FinSetObj& cod,
                                                          Check&& collapses) {
  std::optional<CancellationWitness> hit;
  enumerate_functions(dom, cod, [&](const FunctionV& f) {
    enumerate_functions(dom, cod, [&](const FunctionV& g) {
      if (!(f == g) && collapses(f, g)) {
        hit = CancellationWitness{f, g};
        return false;
      }
      return true;
    });
    return !hit.has_value();
  });
  return hit;
}

inline void check_probe_budget(std::size_t fan, std::size_t probe_sizes_from,
                               std::size_t probe_sizes_to, std::uint64_t budget) {
  std::uint64_t total = 0;
  for (std::size_t k = probe_sizes_from; k <= probe_sizes_to; ++k) {
    std::uint64_t per = count_functions(k, fan, budget);
    bool over = (per != 0 && per > budget / per);  // per² would overflow budget
    if (over || per * per > budget - total)
      throw EnumerationBudgetExceeded("cancellation probe space exceeds budget " +
                                      std::to_string(budget));
    total += per * per;
  }
}

}  // namespace detail

/// Left-cancellation oracle for h: Y -> Z. Enumerates parallel pairs
/// f,g: P -> Y over probe domains P of size 1..probe_bound and reports the
/// first pair with h∘f = h∘g but f ≠ g. In Set a one-point probe already
/// decides the question, so any bound ≥ 1 is exact for monomorphisms.
inline std::optional<CancellationWitness> mono_counterexample(
    const FunctionV& h, std::size_t probe_bound,
    std::uint64_t budget = kDefaultEnumerationBudget) {
  if (probe_bound < 1) throw MalformedValue("probe bound must be >= 1");
  detail::check_probe_budget(h.dom().size(), 1, probe_bound, budget);
  for (std::size_t k = 1; k <= probe_bound; ++k) {
    FinSetObj probe = detail::probe_object(k);
    auto hit = detail::first_uncancelled_pair(
        probe, h.dom(),
        [&](const FunctionV& f, const FunctionV& g) {
          return compose(f, h) == compose(g, h);
        });
    if (hit) return hit;
  }
  return std::nullopt;
}

inline bool mono_check(const FunctionV& h, std::size_t probe_bound,
                       std::uint64_t budget = kDefaultEnumerationBudget) {
  return !mono_counterexample(h, probe_bound, budget).has_value();
}

/// Right-cancellation oracle for h: W -> X, dual to mono_check: enumerates
/// parallel pairs f,g: X -> Q over probe codomains Q. The bound counts the
/// probe's splitting capacity rather than raw size, so probe codomains range
/// over 2..probe_bound+1 points; a two-point probe (bound 1) already decides
/// the question for epimorphisms in Set.
inline std::optional<CancellationWitness> epi_counterexample(
    const FunctionV& h, std::size_t probe_bound,
    std::uint64_t budget = kDefaultEnumerationBudget) {
  if (probe_bound < 1) throw MalformedValue("probe bound must be >= 1");
  detail::check_probe_budget(h.cod().size(), 2, probe_bound + 1, budget);
  for (std::size_t k = 2; k <= probe_bound + 1; ++k) {
    FinSetObj probe = detail::probe_object(k);
    auto hit = detail::first_uncancelled_pair(
        h.cod(), probe,
        [&](const FunctionV& f, const FunctionV& g) {
          return compose(h, f) == compose(h, g);
        });
    if (hit) return hit;
  }
  return std::nullopt;
}

inline bool epi_check(const FunctionV& h, std::size_t probe_bound,
                      std::uint64_t budget = kDefaultEnumerationBudget) {
  return !epi_counterexample(h, probe_bound, budget).has_value();
}

}  // namespace setcat
