#pragma once

#include <set>
#include <string>
#include <utility>

#include "setcat/label.hpp"

namespace setcat {

/// A binary relation between two objects: a set of ordered pairs drawn from
/// dom × cod. Pairs are kept in a sorted set, so iteration order (and hence
/// every derived rendering) is deterministic.
class RelationV {
 public:
  using Pair = std::pair<Label, Label>;
  using PairSet = std::set<Pair>;

  RelationV(FinSetObj dom, FinSetObj cod, PairSet pairs)
      : dom_(std::move(dom)), cod_(std::move(cod)), pairs_(std::move(pairs)) {
    for (const auto& [x, y] : pairs_) {
      if (!dom_.contains(x) || !cod_.contains(y))
        throw MalformedValue("pair (" + x.text + "," + y.text +
                             ") lies outside dom x cod");
    }
  }

  const FinSetObj& dom() const { return dom_; }
  const FinSetObj& cod() const { return cod_; }
  const PairSet& pairs() const { return pairs_; }

  bool operator==(const RelationV&) const = default;

 private:
  FinSetObj dom_;
  FinSetObj cod_;
  PairSet pairs_;
};

/// The four element/distinction predicates of a relation, each evaluated by
/// direct quantifier enumeration over the pairs.
struct RelationProfile {
  bool transmits_elements;
  bool reflects_elements;
  bool transmits_distinctions;
  bool reflects_distinctions;

  bool operator==(const RelationProfile&) const = default;
};

inline RelationProfile classify_relation(const RelationV& r) {
  RelationProfile p{true, true, true, true};
  for (const auto& x : r.dom().elements()) {
    bool hit = false;
    for (const auto& [a, b] : r.pairs())
      if (a == x) hit = true;
    if (!hit) p.transmits_elements = false;
  }
  for (const auto& y : r.cod().elements()) {
    bool hit = false;
    for (const auto& [a, b] : r.pairs())
      if (b == y) hit = true;
    if (!hit) p.reflects_elements = false;
  }
  for (const auto& [x, y] : r.pairs()) {
    for (const auto& [x2, y2] : r.pairs()) {
      if (x != x2 && y == y2) p.transmits_distinctions = false;
      if (y != y2 && x == x2) p.reflects_distinctions = false;
    }
  }
  return p;
}

/// Reverses every pair and swaps dom/cod. An involution.
inline RelationV opposite(const RelationV& r) {
  RelationV::PairSet swapped;
  for (const auto& [x, y] : r.pairs()) swapped.emplace(y, x);
  return RelationV(r.cod(), r.dom(), std::move(swapped));
}

/// A cofunction is the shape a function's graph takes when read backwards:
/// it transmits distinctions and reflects elements.
inline bool is_cofunction(const RelationV& r) {
  RelationProfile p = classify_relation(r);
  return p.transmits_distinctions && p.reflects_elements;
}

inline std::string render(const RelationProfile& p) {
  auto flag = [](bool b) { return b ? std::string("T") : std::string("F"); };
  return "TE=" + flag(p.transmits_elements) + " RE=" + flag(p.reflects_elements) +
         " TD=" + flag(p.transmits_distinctions) +
         " RD=" + flag(p.reflects_distinctions);
}

}  // namespace setcat
