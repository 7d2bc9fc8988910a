#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "setcat/cancellation.hpp"
#include "setcat/partition.hpp"
#include "setcat/subset.hpp"

namespace setcat {

enum class Kind { Coproduct, Product, Equalizer, Coequalizer, Pushout, Pullback };

inline std::string render(Kind k) {
  switch (k) {
    case Kind::Coproduct: return "coproduct";
    case Kind::Product: return "product";
    case Kind::Equalizer: return "equalizer";
    case Kind::Coequalizer: return "coequalizer";
    case Kind::Pushout: return "pushout";
    case Kind::Pullback: return "pullback";
  }
  return "?";
}

inline bool is_limit(Kind k) {
  return k == Kind::Product || k == Kind::Equalizer || k == Kind::Pullback;
}

using NamedMaps = std::vector<std::pair<std::string, FunctionV>>;

/// A universal construction: the apex object together with its canonical
/// legs (named i_X/i_Y, p_X/p_Y, can, or can_X/can_Y by kind).
struct ConstructionResult {
  Kind kind;
  FinSetObj apex;
  NamedMaps legs;

  const FunctionV& leg(const std::string& name) const {
    for (const auto& [n, f] : legs)
      if (n == name) return f;
    throw ShapeMismatch("no leg named '" + name + "'");
  }
};

/// Outcome of exhaustive mediating-map verification. `mediating_count` is
/// the exact number of maps making every required triangle commute;
/// `mediator` is set when that count is 1, and `witnesses` lists the
/// commuting maps (capped) when uniqueness fails.
struct UmpReport {
  bool commutes = false;
  std::uint64_t mediating_count = 0;
  std::optional<FunctionV> mediator;
  std::vector<FunctionV> witnesses;
};

/// The inclusion-induced injection of one object into a larger one.
inline FunctionV inclusion_into(const FinSetObj& sub, const FinSetObj& super) {
  return canonical_injection(SubsetV(super, sub.elements()),
                             SubsetV(super, super.elements()));
}

/// f = (X ↠ f(X)) then (f(X) ↣ Y): the refinement-induced surjection onto
/// the image followed by the inclusion-induced injection.
struct EpiMonoFactorization {
  FunctionV epi;   // X -> f(X)
  FunctionV mono;  // f(X) -> Y
};

inline EpiMonoFactorization epi_mono_factorize(const FunctionV& f) {
  FinSetObj im = image(f);
  FunctionV::Assignment m;
  for (const auto& [x, y] : f.assignment()) m.emplace(x, y);
  return {FunctionV(f.dom(), im, std::move(m)), inclusion_into(im, f.cod())};
}

// ---------------------------------------------------------------------------
// Coproduct

inline ConstructionResult coproduct(const FinSetObj& x, const FinSetObj& y) {
  std::vector<Label> labels;
  FunctionV::Assignment mx, my;
  for (const auto& l : x.elements()) {
    labels.push_back(tag_left(l));
    mx.emplace(l, tag_left(l));
  }
  for (const auto& l : y.elements()) {
    labels.push_back(tag_right(l));
    my.emplace(l, tag_right(l));
  }
  FinSetObj apex(std::move(labels));
  return {Kind::Coproduct, apex,
          {{"i_X", FunctionV(x, apex, std::move(mx))},
           {"i_Y", FunctionV(y, apex, std::move(my))}}};
}

/// The unique map X⊔Y -> Z for a cocone f: X -> Z, g: Y -> Z. Each element
/// of the disjoint-union partition f⁻¹⊔g⁻¹ sits in one fiber; its block is
/// sent to that fiber's value, onto f(X)∪g(Y), then included into Z.
inline FunctionV coproduct_factor(const FunctionV& f, const FunctionV& g) {
  if (f.cod() != g.cod())
    throw CodomainMismatch("cocone legs target different objects");
  PartitionV fibers = disjoint_union_partition(coimage(f), coimage(g));
  ConstructionResult cp = coproduct(f.dom(), g.dom());
  FunctionV::Assignment m;
  for (const auto& block : fibers.blocks()) {
    const Label& w = block.front();
    Label z = has_left_tag(w) ? f(untag(w)) : g(untag(w));
    for (const auto& member : block) m.emplace(member, z);
  }
  FinSetObj im_union = FinSetObj([&] {
    std::set<Label> hit;
    for (const auto& [w, z] : m) hit.insert(z);
    return std::vector<Label>(hit.begin(), hit.end());
  }());
  FunctionV onto(cp.apex, im_union, std::move(m));
  return compose(onto, inclusion_into(im_union, f.cod()));
}

// ---------------------------------------------------------------------------
// Product

inline ConstructionResult product(const FinSetObj& x, const FinSetObj& y) {
  std::vector<Label> labels;
  FunctionV::Assignment px, py;
  for (const auto& a : x.elements()) {
    for (const auto& b : y.elements()) {
      Label p = pair_label(a, b);
      labels.push_back(p);
      px.emplace(p, a);
      py.emplace(p, b);
    }
  }
  FinSetObj apex(std::move(labels));
  return {Kind::Product, apex,
          {{"p_X", FunctionV(apex, x, std::move(px))},
           {"p_Y", FunctionV(apex, y, std::move(py))}}};
}

/// The unordered-pair realization of the product: elements are two-element
/// sets {L.x,R.y}, with the bijection onto the Cartesian apex.
struct BoxtimesResult {
  FinSetObj apex;
  FunctionV iso;  // apex -> X×Y, {L.x,R.y} ↦ (x,y)
};

inline BoxtimesResult boxtimes_product(const FinSetObj& x, const FinSetObj& y) {
  std::vector<Label> labels;
  FunctionV::Assignment iso;
  for (const auto& a : x.elements()) {
    for (const auto& b : y.elements()) {
      Label u = unordered_pair_label(tag_left(a), tag_right(b));
      labels.push_back(u);
      iso.emplace(u, pair_label(a, b));
    }
  }
  FinSetObj apex(std::move(labels));
  FinSetObj prod_apex = product(x, y).apex;
  return {apex, FunctionV(apex, prod_apex, std::move(iso))};
}

/// The unique map Z -> X×Y for a cone f: Z -> X, g: Z -> Y. Each z sits in
/// one block f⁻¹(x)∩g⁻¹(y) of the join f⁻¹∨g⁻¹; z goes to (x,y), onto the
/// rectangle f(Z)×g(Z), then included into X×Y.
inline FunctionV product_factor(const FunctionV& f, const FunctionV& g) {
  if (f.dom() != g.dom())
    throw DomainMismatch("cone legs start from different objects");
  PartitionV blocks = join(coimage(f), coimage(g));
  FunctionV::Assignment m;
  for (const auto& block : blocks.blocks()) {
    Label target = pair_label(f(block.front()), g(block.front()));
    for (const auto& member : block) m.emplace(member, target);
  }
  FinSetObj rectangle = product(image(f), image(g)).apex;
  FinSetObj full = product(f.cod(), g.cod()).apex;
  FunctionV into_rect(f.dom(), rectangle, std::move(m));
  return compose(into_rect, inclusion_into(rectangle, full));
}

// ---------------------------------------------------------------------------
// Equalizer

inline void require_parallel(const FunctionV& f, const FunctionV& g) {
  if (f.dom() != g.dom() || f.cod() != g.cod())
    throw NotParallel("the two maps do not form a parallel pair");
}

inline ConstructionResult equalizer(const FunctionV& f, const FunctionV& g) {
  require_parallel(f, g);
  std::vector<Label> agree;
  for (const auto& x : f.dom().elements())
    if (f(x) == g(x)) agree.push_back(x);
  FinSetObj apex(std::move(agree));
  return {Kind::Equalizer, apex, {{"can", inclusion_into(apex, f.dom())}}};
}

/// The unique map Z -> E for h: Z -> X with f∘h = g∘h: the epi part of h
/// onto h(Z), then the inclusion h(Z) ⊆ E.
inline FunctionV equalizer_factor(const FunctionV& h, const FunctionV& f,
                                  const FunctionV& g) {
  require_parallel(f, g);
  for (const auto& z : h.dom().elements())
    if (f(h(z)) != g(h(z)))
      throw ConeConditionViolated("f∘h ≠ g∘h at " + z.text);
  ConstructionResult eq = equalizer(f, g);
  EpiMonoFactorization hf = epi_mono_factorize(h);
  return compose(hf.epi, inclusion_into(image(h), eq.apex));
}

// ---------------------------------------------------------------------------
// Coequalizer

/// Quotient of Y by the least equivalence relation with f(x) ~ g(x) for all
/// x, computed by union-find over Y seeded with those pairs.
inline ConstructionResult coequalizer(const FunctionV& f, const FunctionV& g) {
  require_parallel(f, g);
  const FinSetObj& y = f.cod();
  const auto& ys = y.elements();
  std::map<Label, std::size_t> index;
  for (std::size_t i = 0; i < ys.size(); ++i) index.emplace(ys[i], i);
  UnionFind uf(ys.size());
  for (const auto& x : f.dom().elements()) uf.unite(index.at(f(x)), index.at(g(x)));
  std::map<std::size_t, PartitionV::Block> groups;
  for (std::size_t i = 0; i < ys.size(); ++i) groups[uf.find(i)].push_back(ys[i]);
  std::vector<PartitionV::Block> blocks;
  for (auto& [root, b] : groups) blocks.push_back(std::move(b));
  PartitionV sim(y, std::move(blocks));
  FinSetObj apex = quotient_object(sim);
  FunctionV::Assignment m;
  for (const auto& l : ys) m.emplace(l, quotient_label_of(sim, l));
  return {Kind::Coequalizer, apex, {{"can", FunctionV(y, apex, std::move(m))}}};
}

/// The unique map Y/~ -> Z for h: Y -> Z with h∘f = h∘g: each ~-block sits
/// in one h-fiber; the block goes to that fiber's value, onto h(Y), then
/// included into Z.
inline FunctionV coequalizer_factor(const FunctionV& h, const FunctionV& f,
                                    const FunctionV& g) {
  require_parallel(f, g);
  for (const auto& x : f.dom().elements())
    if (h(f(x)) != h(g(x)))
      throw ConeConditionViolated("h∘f ≠ h∘g at " + x.text);
  ConstructionResult ce = coequalizer(f, g);
  PartitionV sim = coimage(ce.leg("can"));
  FunctionV::Assignment m;
  for (const auto& block : sim.blocks()) m.emplace(block_label(block), h(block.front()));
  FinSetObj im = image(h);
  FunctionV onto(ce.apex, im, std::move(m));
  return compose(onto, inclusion_into(im, h.cod()));
}

// ---------------------------------------------------------------------------
// Pushout / pullback

/// Coequalizer of Z ⇉ X⊔Y (the cospan legs after the coproduct injections).
inline ConstructionResult pushout(const FunctionV& f, const FunctionV& g) {
  if (f.dom() != g.dom())
    throw DomainMismatch("pushout needs a common domain");
  ConstructionResult cp = coproduct(f.cod(), g.cod());
  ConstructionResult ce =
      coequalizer(compose(f, cp.leg("i_X")), compose(g, cp.leg("i_Y")));
  return {Kind::Pushout, ce.apex,
          {{"can_X", compose(cp.leg("i_X"), ce.leg("can"))},
           {"can_Y", compose(cp.leg("i_Y"), ce.leg("can"))}}};
}

/// The unique map X⊔Y/~ -> U for h: X -> U, h′: Y -> U with h∘f = h′∘g.
/// h⁻¹⊔h′⁻¹ is refined by ~, so each ~-block sits in one fiber; the block
/// goes to that fiber's value, onto h(X)∪h′(Y), then included into U.
inline FunctionV pushout_factor(const FunctionV& h, const FunctionV& h2,
                                const FunctionV& f, const FunctionV& g) {
  if (f.dom() != g.dom())
    throw DomainMismatch("pushout needs a common domain");
  if (h.cod() != h2.cod())
    throw CodomainMismatch("cocone legs target different objects");
  for (const auto& z : f.dom().elements())
    if (h(f(z)) != h2(g(z)))
      throw ConeConditionViolated("h∘f ≠ h′∘g at " + z.text);
  ConstructionResult cp = coproduct(f.cod(), g.cod());
  ConstructionResult ce =
      coequalizer(compose(f, cp.leg("i_X")), compose(g, cp.leg("i_Y")));
  PartitionV sim = coimage(ce.leg("can"));
  FunctionV::Assignment m;
  for (const auto& block : sim.blocks()) {
    const Label& w = block.front();
    Label u = has_left_tag(w) ? h(untag(w)) : h2(untag(w));
    m.emplace(block_label(block), u);
  }
  FinSetObj im_union = FinSetObj([&] {
    std::set<Label> hit;
    for (const auto& [b, u] : m) hit.insert(u);
    return std::vector<Label>(hit.begin(), hit.end());
  }());
  FunctionV onto(ce.apex, im_union, std::move(m));
  return compose(onto, inclusion_into(im_union, h.cod()));
}

/// Equalizer of X×Y ⇉ Z (the projections followed by the span legs);
/// elementwise E = {(x,y) : f(x) = g(y)}.
inline ConstructionResult pullback(const FunctionV& f, const FunctionV& g) {
  if (f.cod() != g.cod())
    throw CodomainMismatch("pullback needs a common codomain");
  ConstructionResult pr = product(f.dom(), g.dom());
  ConstructionResult eq =
      equalizer(compose(pr.leg("p_X"), f), compose(pr.leg("p_Y"), g));
  return {Kind::Pullback, eq.apex,
          {{"can_X", compose(eq.leg("can"), pr.leg("p_X"))},
           {"can_Y", compose(eq.leg("can"), pr.leg("p_Y"))}}};
}

/// The unique map U -> E for h: U -> X, h′: U -> Y with f∘h = g∘h′. Each u
/// sits in one block of the join h⁻¹∨h′⁻¹ and goes to its pair (x,y), onto
/// the attained pairs (all of which equalize), then included into E.
inline FunctionV pullback_factor(const FunctionV& h, const FunctionV& h2,
                                 const FunctionV& f, const FunctionV& g) {
  if (h.dom() != h2.dom())
    throw DomainMismatch("cone legs start from different objects");
  if (f.cod() != g.cod())
    throw CodomainMismatch("pullback needs a common codomain");
  for (const auto& u : h.dom().elements())
    if (f(h(u)) != g(h2(u)))
      throw ConeConditionViolated("f∘h ≠ g∘h′ at " + u.text);
  ConstructionResult pb = pullback(f, g);
  PartitionV blocks = join(coimage(h), coimage(h2));
  FunctionV::Assignment m;
  for (const auto& block : blocks.blocks()) {
    Label target = pair_label(h(block.front()), h2(block.front()));
    for (const auto& member : block) m.emplace(member, target);
  }
  FinSetObj attained = FinSetObj([&] {
    std::set<Label> hit;
    for (const auto& [u, p] : m) hit.insert(p);
    return std::vector<Label>(hit.begin(), hit.end());
  }());
  FunctionV onto(h.dom(), attained, std::move(m));
  return compose(onto, inclusion_into(attained, pb.apex));
}

// ---------------------------------------------------------------------------
// UMP verification

/// Exhaustively enumerates every candidate mediating map for the given cone
/// (limits) or cocone (colimits) and counts the ones making all triangles
/// commute.
inline UmpReport verify_ump(const ConstructionResult& c, const NamedMaps& cone,
                            std::uint64_t budget = kDefaultEnumerationBudget) {
  if (cone.size() != c.legs.size())
    throw ShapeMismatch("cone has " + std::to_string(cone.size()) + " legs, construction has " +
                        std::to_string(c.legs.size()));
  for (const auto& [name, fn] : cone) {
    (void)fn;
    c.leg(name);  // throws ShapeMismatch on unknown names
  }
  const bool limit = is_limit(c.kind);
  // The cone's common endpoint away from the diagram.
  const FunctionV& first = cone.front().second;
  FinSetObj z = limit ? first.dom() : first.cod();
  for (const auto& [name, fn] : cone) {
    const FunctionV& leg = c.leg(name);
    if (limit) {
      if (fn.dom() != z) throw ShapeMismatch("cone legs start from different objects");
      if (fn.cod() != leg.cod())
        throw ShapeMismatch("cone leg '" + name + "' targets the wrong object");
    } else {
      if (fn.cod() != z) throw ShapeMismatch("cocone legs target different objects");
      if (fn.dom() != leg.dom())
        throw ShapeMismatch("cocone leg '" + name + "' starts from the wrong object");
    }
  }
  const FinSetObj& m_dom = limit ? z : c.apex;
  const FinSetObj& m_cod = limit ? c.apex : z;
  if (count_functions(m_dom.size(), m_cod.size(), budget + 1) > budget)
    throw EnumerationBudgetExceeded("candidate space " + std::to_string(m_cod.size()) +
                                    "^" + std::to_string(m_dom.size()) +
                                    " exceeds budget " + std::to_string(budget));
  UmpReport report;
  constexpr std::size_t kWitnessCap = 4;
  enumerate_functions(m_dom, m_cod, [&](const FunctionV& cand) {
    bool ok = true;
    for (const auto& [name, fn] : cone) {
      const FunctionV& leg = c.leg(name);
      const FunctionV side = limit ? compose(cand, leg) : compose(leg, cand);
      if (!(side == fn)) {
        ok = false;
        break;
      }
    }
    if (ok) {
      ++report.mediating_count;
      if (report.witnesses.size() < kWitnessCap) report.witnesses.push_back(cand);
    }
  });
  report.commutes = report.mediating_count >= 1;
  if (report.mediating_count == 1) {
    report.mediator = report.witnesses.front();
    report.witnesses.clear();
  }
  return report;
}

/// The canonical isomorphism between two candidates for the same universal
/// construction: apply each one's UMP to the other's legs, demand a unique
/// mediator both ways, and check the round trips are identities.
inline FunctionV unique_iso_between_candidates(
    const ConstructionResult& a, const ConstructionResult& b,
    std::uint64_t budget = kDefaultEnumerationBudget) {
  if (a.kind != b.kind)
    throw ShapeMismatch("candidates are for different construction kinds");
  UmpReport via_b = verify_ump(b, a.legs, budget);
  UmpReport via_a = verify_ump(a, b.legs, budget);
  if (via_b.mediating_count != 1 || via_a.mediating_count != 1)
    throw NotBothUniversal("a candidate fails the other's universal property");
  // For limits b's UMP mediates a.apex -> b.apex; for colimits it is a's.
  const FunctionV& m_ab = is_limit(a.kind) ? *via_b.mediator : *via_a.mediator;
  const FunctionV& m_ba = is_limit(a.kind) ? *via_a.mediator : *via_b.mediator;
  if (!(compose(m_ab, m_ba) == identity(a.apex)) ||
      !(compose(m_ba, m_ab) == identity(b.apex)) || !is_injective(m_ab) ||
      !is_surjective(m_ab))
    throw NotBothUniversal("mediators do not invert each other");
  return m_ab;
}

inline std::string render(const UmpReport& r) {
  std::string out = "{ commutes: " + std::string(r.commutes ? "true" : "false") +
                    ", mediating_count: " + std::to_string(r.mediating_count);
  if (r.mediator) out += ", mediator: " + render(*r.mediator);
  out += " }";
  return out;
}

}  // namespace setcat
