#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "setcat/function.hpp"
#include "setcat/rational.hpp"
#include "setcat/union_find.hpp"

namespace setcat {

/// A partition of a universe: nonempty, pairwise disjoint blocks whose union
/// is the universe. Blocks are normalized (sorted within, blocks ordered by
/// least element). The empty universe has exactly one partition, the empty
/// partition, which is its own discrete and indiscrete partition.
class PartitionV {
 public:
  using Block = std::vector<Label>;

  PartitionV() = default;  // the empty partition on the empty universe

  PartitionV(FinSetObj universe, std::vector<Block> blocks)
      : universe_(std::move(universe)), blocks_(std::move(blocks)) {
    std::size_t covered = 0;
    std::set<Label> seen;
    for (auto& b : blocks_) {
      if (b.empty()) throw MalformedValue("partition block is empty");
      std::sort(b.begin(), b.end());
      b.erase(std::unique(b.begin(), b.end()), b.end());
      for (const auto& l : b) {
        if (!universe_.contains(l))
          throw MalformedValue("block label '" + l.text + "' not in universe");
        if (!seen.insert(l).second)
          throw MalformedValue("blocks overlap at '" + l.text + "'");
        ++covered;
      }
    }
    if (covered != universe_.size())
      throw MalformedValue("blocks do not cover the universe");
    std::sort(blocks_.begin(), blocks_.end(),
              [](const Block& a, const Block& b) { return a.front() < b.front(); });
  }

  const FinSetObj& universe() const { return universe_; }
  const std::vector<Block>& blocks() const { return blocks_; }
  std::size_t block_count() const { return blocks_.size(); }

  std::size_t block_index_of(const Label& l) const {
    for (std::size_t i = 0; i < blocks_.size(); ++i)
      if (std::binary_search(blocks_[i].begin(), blocks_[i].end(), l)) return i;
    throw MalformedValue("'" + l.text + "' is not in the universe");
  }

  const Block& block_of(const Label& l) const { return blocks_[block_index_of(l)]; }

  bool operator==(const PartitionV&) const = default;

 private:
  FinSetObj universe_;
  std::vector<Block> blocks_;
};

/// The set of distinctions of a partition: ordered pairs of elements lying
/// in different blocks. Irreflexive and closed under swapping.
class DitSet {
 public:
  using Pair = std::pair<Label, Label>;

  DitSet(FinSetObj universe, std::set<Pair> dits)
      : universe_(std::move(universe)), dits_(std::move(dits)) {
    for (const auto& [u, v] : dits_) {
      if (u == v) throw MalformedValue("diagonal pair in ditset");
      if (!universe_.contains(u) || !universe_.contains(v))
        throw MalformedValue("dit outside universe");
      if (!dits_.count({v, u})) throw MalformedValue("ditset not symmetric");
    }
  }

  const FinSetObj& universe() const { return universe_; }
  const std::set<Pair>& dits() const { return dits_; }
  std::size_t size() const { return dits_.size(); }

  bool contains(const Label& u, const Label& v) const {
    return dits_.count({u, v}) > 0;
  }

  bool subset_of(const DitSet& other) const {
    if (universe_ != other.universe_)
      throw UniverseMismatch("ditsets live on different universes");
    return std::includes(other.dits_.begin(), other.dits_.end(), dits_.begin(),
                         dits_.end());
  }

  bool operator==(const DitSet&) const = default;

 private:
  FinSetObj universe_;
  std::set<Pair> dits_;
};

/// All ordered pairs of elements in distinct blocks; U×U minus the block
/// equivalence. |dit(p)| = n² − Σ|B|².
inline DitSet ditset(const PartitionV& p) {
  std::set<DitSet::Pair> dits;
  const auto& us = p.universe().elements();
  std::vector<std::size_t> block(us.size());
  for (std::size_t i = 0; i < us.size(); ++i) block[i] = p.block_index_of(us[i]);
  for (std::size_t i = 0; i < us.size(); ++i)
    for (std::size_t j = 0; j < us.size(); ++j)
      if (block[i] != block[j]) dits.emplace(us[i], us[j]);
  return DitSet(p.universe(), std::move(dits));
}

/// σ ≾ π: σ is refined by π. Block-containment route: every block of pi
/// sits inside a (necessarily unique) block of sigma.
inline bool refines(const PartitionV& sigma, const PartitionV& pi) {
  if (sigma.universe() != pi.universe())
    throw UniverseMismatch("partitions live on different universes");
  for (const auto& b : pi.blocks()) {
    if (b.empty()) continue;
    const auto& host = sigma.block_of(b.front());
    for (const auto& l : b)
      if (!std::binary_search(host.begin(), host.end(), l)) return false;
  }
  return true;
}

/// σ ≾ π via the other characterization: inclusion of distinctions.
/// Must agree with `refines` on every input; the test suites check this.
inline bool refines_by_ditsets(const PartitionV& sigma, const PartitionV& pi) {
  return ditset(sigma).subset_of(ditset(pi));
}

/// The partition of all singletons (top of the refinement order).
inline PartitionV discrete(const FinSetObj& u) {
  std::vector<PartitionV::Block> blocks;
  for (const auto& l : u.elements()) blocks.push_back({l});
  return PartitionV(u, std::move(blocks));
}

/// The single-block partition (bottom; the "blob"). Empty universe gives the
/// empty partition, same as discrete.
inline PartitionV indiscrete(const FinSetObj& u) {
  if (u.empty()) return PartitionV(u, {});
  return PartitionV(u, {u.elements()});
}

/// A partition seen as a quotient set: one label per block, named by the
/// sorted members joined with '+'.
inline FinSetObj quotient_object(const PartitionV& p) {
  std::vector<Label> labels;
  for (const auto& b : p.blocks()) labels.push_back(block_label(b));
  return FinSetObj(std::move(labels));
}

inline Label quotient_label_of(const PartitionV& p, const Label& l) {
  return block_label(p.block_of(l));
}

/// The refinement-induced canonical surjection blocks(pi) -> blocks(sigma),
/// taking each pi-block to the unique sigma-block containing it. Requires
/// sigma ≾ pi.
inline FunctionV canonical_surjection(const PartitionV& pi, const PartitionV& sigma) {
  if (sigma.universe() != pi.universe())
    throw UniverseMismatch("partitions live on different universes");
  if (!refines(sigma, pi))
    throw NotARefinement("the first partition does not refine the second");
  FunctionV::Assignment m;
  for (const auto& b : pi.blocks())
    m.emplace(block_label(b), quotient_label_of(sigma, b.front()));
  return FunctionV(quotient_object(pi), quotient_object(sigma), std::move(m));
}

/// The unique map X -> {•}, the quotient of X by its indiscrete partition.
inline FunctionV terminal_map(const FinSetObj& x) {
  FunctionV::Assignment m;
  for (const auto& l : x.elements()) m.emplace(l, point_label());
  return FunctionV(x, point_object(), std::move(m));
}

/// Least upper bound in refinement order: blocks are the nonempty pairwise
/// intersections, so dit(join) = dit(pi) ∪ dit(rho).
inline PartitionV join(const PartitionV& pi, const PartitionV& rho) {
  if (pi.universe() != rho.universe())
    throw UniverseMismatch("partitions live on different universes");
  std::vector<PartitionV::Block> blocks;
  for (const auto& b : pi.blocks()) {
    for (const auto& c : rho.blocks()) {
      PartitionV::Block cut;
      std::set_intersection(b.begin(), b.end(), c.begin(), c.end(),
                            std::back_inserter(cut));
      if (!cut.empty()) blocks.push_back(std::move(cut));
    }
  }
  return PartitionV(pi.universe(), std::move(blocks));
}

/// Greatest lower bound in refinement order: connected components of the
/// block-overlap graph.
inline PartitionV meet(const PartitionV& pi, const PartitionV& rho) {
  if (pi.universe() != rho.universe())
    throw UniverseMismatch("partitions live on different universes");
  const auto& us = pi.universe().elements();
  std::map<Label, std::size_t> index;
  for (std::size_t i = 0; i < us.size(); ++i) index.emplace(us[i], i);
  UnionFind uf(us.size());
  for (const auto* part : {&pi, &rho})
    for (const auto& b : part->blocks())
      for (std::size_t k = 1; k < b.size(); ++k)
        uf.unite(index.at(b[0]), index.at(b[k]));
  std::map<std::size_t, PartitionV::Block> groups;
  for (std::size_t i = 0; i < us.size(); ++i) groups[uf.find(i)].push_back(us[i]);
  std::vector<PartitionV::Block> blocks;
  for (auto& [root, b] : groups) blocks.push_back(std::move(b));
  return PartitionV(pi.universe(), std::move(blocks));
}

/// Tags the first universe with L. and the second with R., keeping each
/// partition's blocks; a partition on the tagged disjoint union.
inline PartitionV disjoint_union_partition(const PartitionV& pi, const PartitionV& rho) {
  std::vector<Label> labels;
  std::vector<PartitionV::Block> blocks;
  for (const auto& l : pi.universe().elements()) labels.push_back(tag_left(l));
  for (const auto& l : rho.universe().elements()) labels.push_back(tag_right(l));
  for (const auto& b : pi.blocks()) {
    PartitionV::Block tb;
    for (const auto& l : b) tb.push_back(tag_left(l));
    blocks.push_back(std::move(tb));
  }
  for (const auto& b : rho.blocks()) {
    PartitionV::Block tb;
    for (const auto& l : b) tb.push_back(tag_right(l));
    blocks.push_back(std::move(tb));
  }
  return PartitionV(FinSetObj(std::move(labels)), std::move(blocks));
}

/// The coimage (inverse-image) partition of the domain into nonempty fibers.
/// The empty function yields the empty partition.
inline PartitionV coimage(const FunctionV& f) {
  std::map<Label, PartitionV::Block> fibers;
  for (const auto& [x, y] : f.assignment()) fibers[y].push_back(x);
  std::vector<PartitionV::Block> blocks;
  for (auto& [y, b] : fibers) blocks.push_back(std::move(b));
  return PartitionV(f.dom(), std::move(blocks));
}

/// Logical entropy h(p) = |dit(p)| / |U×U|, the probability that two
/// independent draws from U land in distinct blocks.
inline Rational logical_entropy(const PartitionV& p) {
  if (p.universe().empty())
    throw EmptyUniverse("logical entropy needs a nonempty universe");
  long long n = static_cast<long long>(p.universe().size());
  long long same = 0;
  for (const auto& b : p.blocks()) {
    long long s = static_cast<long long>(b.size());
    same += s * s;
  }
  return Rational(n * n - same, n * n);
}

inline constexpr std::size_t kDefaultPartitionBound = 6;

/// All partitions of U exactly once, in restricted-growth-string order.
/// The count is the Bell number of |U|.
inline std::vector<PartitionV> enumerate_partitions(
    const FinSetObj& u, std::size_t bound = kDefaultPartitionBound) {
  if (u.size() > bound)
    throw EnumerationBudgetExceeded("universe of size " + std::to_string(u.size()) +
                                    " exceeds the partition bound " +
                                    std::to_string(bound));
  std::vector<PartitionV> out;
  const auto& us = u.elements();
  if (us.empty()) {
    out.emplace_back(u, std::vector<PartitionV::Block>{});
    return out;
  }
  std::vector<std::size_t> rgs(us.size(), 0);
  auto emit = [&]() {
    std::size_t groups = 1 + *std::max_element(rgs.begin(), rgs.end());
    std::vector<PartitionV::Block> blocks(groups);
    for (std::size_t i = 0; i < us.size(); ++i) blocks[rgs[i]].push_back(us[i]);
    out.emplace_back(u, std::move(blocks));
  };
  // Lexicographic successor of a restricted growth string: bump the last
  // position that may still grow, reset the tail to zeros.
  while (true) {
    emit();
    std::size_t i = us.size();
    bool advanced = false;
    while (i > 1) {
      --i;
      std::size_t maxPrefix = *std::max_element(rgs.begin(), rgs.begin() + i);
      if (rgs[i] <= maxPrefix) {
        ++rgs[i];
        std::fill(rgs.begin() + i + 1, rgs.end(), 0);
        advanced = true;
        break;
      }
    }
    if (!advanced) break;
  }
  return out;
}

inline std::string render(const PartitionV& p) {
  std::string out = "{";
  for (std::size_t i = 0; i < p.blocks().size(); ++i) {
    if (i > 0) out += ",";
    out += "{";
    const auto& b = p.blocks()[i];
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (j > 0) out += ",";
      out += b[j].text;
    }
    out += "}";
  }
  out += "}";
  return out;
}

inline std::string render(const DitSet& d) {
  std::string out = "{";
  bool first = true;
  for (const auto& [u, v] : d.dits()) {
    if (!first) out += ",";
    first = false;
    out += "(" + u.text + "," + v.text + ")";
  }
  out += "}";
  return out;
}

}  // namespace setcat
