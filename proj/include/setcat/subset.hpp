#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "setcat/function.hpp"
#include "setcat/rational.hpp"

namespace setcat {

/// A subset of a fixed universe, the carrier of the inclusion order ⊆ on
/// ℘(U). Members are kept sorted.
class SubsetV {
 public:
  SubsetV(FinSetObj universe, std::vector<Label> members)
      : universe_(std::move(universe)), members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
    for (const auto& l : members_)
      if (!universe_.contains(l))
        throw MalformedValue("member '" + l.text + "' not in universe");
  }

  const FinSetObj& universe() const { return universe_; }
  const std::vector<Label>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }

  bool contains(const Label& l) const {
    return std::binary_search(members_.begin(), members_.end(), l);
  }

  /// The subset as a standalone object (for use as a function dom/cod).
  FinSetObj as_object() const { return FinSetObj(members_); }

  bool operator==(const SubsetV&) const = default;

 private:
  FinSetObj universe_;
  std::vector<Label> members_;
};

inline bool is_subset(const SubsetV& s, const SubsetV& t) {
  if (s.universe() != t.universe())
    throw UniverseMismatch("subsets live on different universes");
  return std::includes(t.members().begin(), t.members().end(),
                       s.members().begin(), s.members().end());
}

/// The inclusion-induced canonical injection S -> T, s ↦ s. Identity when
/// S = T; the initial-object map when S = ∅.
inline FunctionV canonical_injection(const SubsetV& s, const SubsetV& t) {
  if (!is_subset(s, t))
    throw NotASubset("the first subset is not included in the second");
  FunctionV::Assignment m;
  for (const auto& l : s.members()) m.emplace(l, l);
  return FunctionV(s.as_object(), t.as_object(), std::move(m));
}

/// The unique function ∅ -> X.
inline FunctionV initial_map(const FinSetObj& x) {
  return FunctionV(FinSetObj(), x, {});
}

/// Laplace-Boole probability Pr(S) = |S| / |U|, in lowest terms.
inline Rational laplace_probability(const SubsetV& s) {
  if (s.universe().empty())
    throw EmptyUniverse("probability needs a nonempty universe");
  return Rational(static_cast<long long>(s.size()),
                  static_cast<long long>(s.universe().size()));
}

// Boolean conveniences for building test fixtures; the canonicity story
// itself uses only the inclusion order.
inline SubsetV subset_union(const SubsetV& s, const SubsetV& t) {
  if (s.universe() != t.universe())
    throw UniverseMismatch("subsets live on different universes");
  std::vector<Label> m(s.members());
  m.insert(m.end(), t.members().begin(), t.members().end());
  return SubsetV(s.universe(), std::move(m));
}

inline SubsetV subset_intersection(const SubsetV& s, const SubsetV& t) {
  if (s.universe() != t.universe())
    throw UniverseMismatch("subsets live on different universes");
  std::vector<Label> m;
  std::set_intersection(s.members().begin(), s.members().end(),
                        t.members().begin(), t.members().end(),
                        std::back_inserter(m));
  return SubsetV(s.universe(), std::move(m));
}

inline SubsetV subset_complement(const SubsetV& s) {
  std::vector<Label> m;
  for (const auto& l : s.universe().elements())
    if (!s.contains(l)) m.push_back(l);
  return SubsetV(s.universe(), std::move(m));
}

inline std::string render(const SubsetV& s) {
  return render(s.as_object());
}

}  // namespace setcat
