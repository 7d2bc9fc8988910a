#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "setcat/relation.hpp"

namespace setcat {

/// A total single-valued assignment dom -> cod. Construction validates
/// totality and membership; a FunctionV that exists is a function.
/// The empty assignment with empty dom is a valid function to any cod.
class FunctionV {
 public:
  using Assignment = std::map<Label, Label>;

  FunctionV(FinSetObj dom, FinSetObj cod, Assignment assignment)
      : dom_(std::move(dom)), cod_(std::move(cod)), map_(std::move(assignment)) {
    for (const auto& [x, y] : map_) {
      if (!dom_.contains(x))
        throw MalformedValue("assignment key '" + x.text + "' not in dom");
      if (!cod_.contains(y))
        throw MalformedValue("assignment value '" + y.text + "' not in cod");
    }
    if (map_.size() != dom_.size())
      throw MalformedValue("assignment is not total over dom");
  }

  const FinSetObj& dom() const { return dom_; }
  const FinSetObj& cod() const { return cod_; }
  const Assignment& assignment() const { return map_; }

  const Label& operator()(const Label& x) const {
    auto it = map_.find(x);
    if (it == map_.end())
      throw MalformedValue("'" + x.text + "' is not in the domain");
    return it->second;
  }

  bool operator==(const FunctionV&) const = default;

 private:
  FinSetObj dom_;
  FinSetObj cod_;
  Assignment map_;
};

inline FunctionV identity(const FinSetObj& x) {
  FunctionV::Assignment m;
  for (const auto& l : x.elements()) m.emplace(l, l);
  return FunctionV(x, x, std::move(m));
}

inline RelationV graph_of(const FunctionV& f) {
  RelationV::PairSet pairs;
  for (const auto& [x, y] : f.assignment()) pairs.emplace(x, y);
  return RelationV(f.dom(), f.cod(), std::move(pairs));
}

/// A relation is a function exactly when it transmits elements and reflects
/// distinctions. On failure the error names the predicate that failed and a
/// witness.
inline FunctionV as_function(const RelationV& r) {
  for (const auto& x : r.dom().elements()) {
    bool hit = false;
    for (const auto& [a, b] : r.pairs())
      if (a == x) hit = true;
    if (!hit) throw NotAFunction("transmits-elements fails at " + x.text);
  }
  for (const auto& [x, y] : r.pairs()) {
    for (const auto& [x2, y2] : r.pairs()) {
      if (x == x2 && y != y2)
        throw NotAFunction("reflects-distinctions fails at (" + x.text + "," +
                           y.text + ") vs (" + x2.text + "," + y2.text + ")");
    }
  }
  FunctionV::Assignment m;
  for (const auto& [x, y] : r.pairs()) m.emplace(x, y);
  return FunctionV(r.dom(), r.cod(), std::move(m));
}

// Injective = the graph transmits distinctions; surjective = it reflects
// elements.
inline bool is_injective(const FunctionV& f) {
  return classify_relation(graph_of(f)).transmits_distinctions;
}

inline bool is_surjective(const FunctionV& f) {
  return classify_relation(graph_of(f)).reflects_elements;
}

/// The attained codomain labels, as a sub-object of cod.
inline FinSetObj image(const FunctionV& f) {
  std::set<Label> hit;
  for (const auto& [x, y] : f.assignment()) hit.insert(y);
  return FinSetObj(std::vector<Label>(hit.begin(), hit.end()));
}

/// f followed by g. Requires f.cod = g.dom as objects.
inline FunctionV compose(const FunctionV& f, const FunctionV& g) {
  if (f.cod() != g.dom())
    throw CompositionMismatch("cod " + render(f.cod()) + " != dom " +
                              render(g.dom()));
  FunctionV::Assignment m;
  for (const auto& [x, y] : f.assignment()) m.emplace(x, g(y));
  return FunctionV(f.dom(), g.cod(), std::move(m));
}

/// |cod|^|dom| with 0^0 = 1, saturating at `cap`.
inline std::uint64_t count_functions(std::size_t dom_size, std::size_t cod_size,
                                     std::uint64_t cap = UINT64_MAX) {
  std::uint64_t n = 1;
  for (std::size_t i = 0; i < dom_size; ++i) {
    if (cod_size != 0 && n > cap / cod_size) return cap;
    n *= static_cast<std::uint64_t>(cod_size);
  }
  return n;
}

/// Calls `visit` once per function dom -> cod, in lexicographic order of the
/// assignment (domain labels ascending, codomain choices odometer-style).
/// A false return from `visit` stops the enumeration early.
template <typename Visitor>
void enumerate_functions(const FinSetObj& dom, const FinSetObj& cod,
                         Visitor&& visit) {
  if (dom.empty()) {
    visit(FunctionV(dom, cod, {}));
    return;
  }
  if (cod.empty()) return;  // no functions from a nonempty set into nothing
  const auto& xs = dom.elements();
  const auto& ys = cod.elements();
  std::vector<std::size_t> pick(xs.size(), 0);
  while (true) {
    FunctionV::Assignment m;
    for (std::size_t i = 0; i < xs.size(); ++i) m.emplace(xs[i], ys[pick[i]]);
    if constexpr (std::is_void_v<decltype(visit(std::declval<const FunctionV&>()))>) {
      visit(FunctionV(dom, cod, std::move(m)));
    } else {
      if (!visit(FunctionV(dom, cod, std::move(m)))) return;
    }
    std::size_t i = xs.size();
    while (i > 0) {
      --i;
      if (++pick[i] < ys.size()) break;
      pick[i] = 0;
      if (i == 0) return;
    }
  }
}

inline std::vector<FunctionV> all_functions(const FinSetObj& dom,
                                            const FinSetObj& cod) {
  std::vector<FunctionV> out;
  enumerate_functions(dom, cod, [&](const FunctionV& f) { out.push_back(f); });
  return out;
}

/// Canonical rendering: `dom -> cod { x->y, ... }`, entries sorted by domain
/// label. Pass a name to prefix `name: `.
inline std::string render(const FunctionV& f, const std::string& dom_name = "",
                          const std::string& cod_name = "") {
  std::string out = (dom_name.empty() ? render(f.dom()) : dom_name) + " -> " +
                    (cod_name.empty() ? render(f.cod()) : cod_name) + " { ";
  bool first = true;
  for (const auto& [x, y] : f.assignment()) {
    if (!first) out += ", ";
    first = false;
    out += x.text + "->" + y.text;
  }
  out += first ? "}" : " }";
  return out;
}

}  // namespace setcat
