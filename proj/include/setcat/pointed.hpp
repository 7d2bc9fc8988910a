#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "setcat/constructions.hpp"

namespace setcat {

/// A nonempty set with a designated basepoint.
class PointedObj {
 public:
  PointedObj(FinSetObj carrier, Label basepoint)
      : carrier_(std::move(carrier)), base_(std::move(basepoint)) {
    if (!carrier_.contains(base_))
      throw BasepointNotInCarrier("'" + base_.text + "' not in " + render(carrier_));
  }

  const FinSetObj& carrier() const { return carrier_; }
  const Label& basepoint() const { return base_; }

  bool operator==(const PointedObj&) const = default;

 private:
  FinSetObj carrier_;
  Label base_;
};

inline PointedObj make_pointed(const FinSetObj& x, const Label& x0) {
  return PointedObj(x, x0);
}

/// The null object 1 = ({•}, •).
inline PointedObj null_object() { return PointedObj(point_object(), point_label()); }

/// The basepoint designation map 1 -> X.
inline FunctionV basepoint_map(const PointedObj& x) {
  FunctionV::Assignment m;
  m.emplace(point_label(), x.basepoint());
  return FunctionV(point_object(), x.carrier(), std::move(m));
}

inline bool is_pointed_map(const FunctionV& f, const PointedObj& dom,
                           const PointedObj& cod) {
  return f.dom() == dom.carrier() && f.cod() == cod.carrier() &&
         f(dom.basepoint()) == cod.basepoint();
}

/// A basepoint-preserving map between pointed objects.
class PointedMap {
 public:
  PointedMap(PointedObj dom, PointedObj cod, FunctionV fn)
      : dom_(std::move(dom)), cod_(std::move(cod)), fn_(std::move(fn)) {
    if (!is_pointed_map(fn_, dom_, cod_))
      throw MalformedValue("map does not preserve the basepoint");
  }

  const PointedObj& dom() const { return dom_; }
  const PointedObj& cod() const { return cod_; }
  const FunctionV& fn() const { return fn_; }

  bool operator==(const PointedMap&) const = default;

 private:
  PointedObj dom_;
  PointedObj cod_;
  FunctionV fn_;
};

inline PointedMap pointed_identity(const PointedObj& x) {
  return PointedMap(x, x, identity(x.carrier()));
}

inline PointedMap compose(const PointedMap& f, const PointedMap& g) {
  return PointedMap(f.dom(), g.cod(), compose(f.fn(), g.fn()));
}

/// The composite X -> 1 -> Y: everything to the target basepoint. Absorbing
/// under composition on both sides.
inline PointedMap zero_arrow(const PointedObj& x, const PointedObj& y) {
  return PointedMap(x, y, compose(terminal_map(x.carrier()), basepoint_map(y)));
}

/// Calls `visit` for every basepoint-preserving map dom -> cod, in
/// lexicographic order of the non-basepoint assignments.
template <typename Visitor>
void enumerate_pointed_maps(const PointedObj& dom, const PointedObj& cod,
                            Visitor&& visit) {
  std::vector<Label> rest;
  for (const auto& l : dom.carrier().elements())
    if (l != dom.basepoint()) rest.push_back(l);
  FinSetObj free_part(std::move(rest));
  enumerate_functions(free_part, cod.carrier(), [&](const FunctionV& partial) {
    FunctionV::Assignment m = partial.assignment();
    m.emplace(dom.basepoint(), cod.basepoint());
    visit(PointedMap(dom, cod,
                     FunctionV(dom.carrier(), cod.carrier(), std::move(m))));
  });
}

inline std::uint64_t count_pointed_maps(const PointedObj& dom, const PointedObj& cod,
                                        std::uint64_t cap = UINT64_MAX) {
  return count_functions(dom.carrier().size() - 1, cod.carrier().size(), cap);
}

using NamedPointedMaps = std::vector<std::pair<std::string, PointedMap>>;

/// A universal construction in the pointed category.
struct PointedConstructionResult {
  Kind kind;  // Coproduct (wedge) or Product
  PointedObj apex;
  NamedPointedMaps legs;

  const PointedMap& leg(const std::string& name) const {
    for (const auto& [n, f] : legs)
      if (n == name) return f;
    throw ShapeMismatch("no leg named '" + name + "'");
  }
};

/// The wedge X⊔*Y: the pushout in plain sets of the two basepoint maps
/// 1 -> X and 1 -> Y, which identifies exactly the basepoints. The merged
/// block is the basepoint of the apex.
inline PointedConstructionResult wedge_coproduct(const PointedObj& x,
                                                 const PointedObj& y) {
  ConstructionResult po = pushout(basepoint_map(x), basepoint_map(y));
  Label base = po.leg("can_X")(x.basepoint());
  PointedObj apex(po.apex, base);
  return {Kind::Coproduct, apex,
          {{"i_X", PointedMap(x, apex, po.leg("can_X"))},
           {"i_Y", PointedMap(y, apex, po.leg("can_Y"))}}};
}

/// The pointed product: the plain product with (x0,y0) as basepoint.
inline PointedConstructionResult pointed_product(const PointedObj& x,
                                                 const PointedObj& y) {
  ConstructionResult pr = product(x.carrier(), y.carrier());
  PointedObj apex(pr.apex, pair_label(x.basepoint(), y.basepoint()));
  return {Kind::Product, apex,
          {{"p_X", PointedMap(apex, x, pr.leg("p_X"))},
           {"p_Y", PointedMap(apex, y, pr.leg("p_Y"))}}};
}

/// Exhaustive mediating-map verification in the pointed category: only
/// basepoint-preserving candidates are enumerated.
inline UmpReport verify_pointed_ump(const PointedConstructionResult& c,
                                    const NamedPointedMaps& cone,
                                    std::uint64_t budget = kDefaultEnumerationBudget) {
  if (cone.size() != c.legs.size())
    throw ShapeMismatch("cone and construction leg counts differ");
  const bool limit = is_limit(c.kind);
  const PointedMap& first = cone.front().second;
  PointedObj z = limit ? first.dom() : first.cod();
  for (const auto& [name, pm] : cone) {
    const PointedMap& leg = c.leg(name);
    if (limit) {
      if (!(pm.dom() == z) || !(pm.cod() == leg.cod()))
        throw ShapeMismatch("pointed cone leg '" + name + "' has the wrong shape");
    } else {
      if (!(pm.cod() == z) || !(pm.dom() == leg.dom()))
        throw ShapeMismatch("pointed cocone leg '" + name + "' has the wrong shape");
    }
  }
  const PointedObj& m_dom = limit ? z : c.apex;
  const PointedObj& m_cod = limit ? c.apex : z;
  if (count_pointed_maps(m_dom, m_cod, budget + 1) > budget)
    throw EnumerationBudgetExceeded("pointed candidate space exceeds budget " +
                                    std::to_string(budget));
  UmpReport report;
  constexpr std::size_t kWitnessCap = 4;
  enumerate_pointed_maps(m_dom, m_cod, [&](const PointedMap& cand) {
    bool ok = true;
    for (const auto& [name, pm] : cone) {
      const PointedMap& leg = c.leg(name);
      const FunctionV side =
          limit ? compose(cand.fn(), leg.fn()) : compose(leg.fn(), cand.fn());
      if (!(side == pm.fn())) {
        ok = false;
        break;
      }
    }
    if (ok) {
      ++report.mediating_count;
      if (report.witnesses.size() < kWitnessCap)
        report.witnesses.push_back(cand.fn());
    }
  });
  report.commutes = report.mediating_count >= 1;
  if (report.mediating_count == 1) {
    report.mediator = report.witnesses.front();
    report.witnesses.clear();
  }
  return report;
}

/// The canonical map X⊔*Y -> X×*Y, built exactly from the two UMP recipes:
/// the product cones (id_X, zero) and (zero, id_Y) give the cocone legs
/// X -> X×*Y and Y -> X×*Y, and the wedge's coproduct UMP factors them.
inline PointedMap canonical_wedge_to_product(const PointedObj& x,
                                             const PointedObj& y) {
  PointedConstructionResult prod = pointed_product(x, y);
  FunctionV leg_x = product_factor(identity(x.carrier()), zero_arrow(x, y).fn());
  FunctionV leg_y = product_factor(zero_arrow(y, x).fn(), identity(y.carrier()));
  PointedConstructionResult wedge = wedge_coproduct(x, y);
  FunctionV mediator =
      pushout_factor(leg_x, leg_y, basepoint_map(x), basepoint_map(y));
  return PointedMap(wedge.apex, prod.apex, mediator);
}

inline std::string render(const PointedObj& x) {
  return render(x.carrier()) + " base " + x.basepoint().text;
}

inline std::string render(const PointedMap& f) { return render(f.fn()); }

}  // namespace setcat
