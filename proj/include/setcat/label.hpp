#pragma once

#include <algorithm>
#include <compare>
#include <initializer_list>
#include <string>
#include <vector>

#include "setcat/errors.hpp"

namespace setcat {

/// An element name. Equality is exact token equality; ordering is
/// lexicographic byte order, which fixes the order of all rendered output.
struct Label {
  std::string text;

  Label() = default;
  explicit Label(std::string t) : text(std::move(t)) {}

  auto operator<=>(const Label&) const = default;
};

/// The reserved one-point label. Used for the terminal object, probe
/// objects, and the pointed-set null object; the DSL rejects it in
/// user-declared labels.
inline const std::string kPointText = "\xe2\x80\xa2";  // U+2022 bullet

inline Label point_label() { return Label(kPointText); }

// Constructed names deliberately use the punctuation that user-declared
// labels may not contain, so they can never collide with declared labels.
inline Label tag_left(const Label& base) { return Label("L." + base.text); }
inline Label tag_right(const Label& base) { return Label("R." + base.text); }

inline bool has_left_tag(const Label& l) { return l.text.rfind("L.", 0) == 0; }
inline bool has_right_tag(const Label& l) { return l.text.rfind("R.", 0) == 0; }

/// Strips one level of L./R. tagging.
inline Label untag(const Label& l) {
  if (!has_left_tag(l) && !has_right_tag(l))
    throw MalformedValue("label '" + l.text + "' carries no tag");
  return Label(l.text.substr(2));
}

inline Label pair_label(const Label& left, const Label& right) {
  return Label("(" + left.text + "," + right.text + ")");
}

/// Canonical name of a block or unordered pair: members sorted, `sep`-joined.
inline Label joined_label(std::vector<Label> members, const std::string& sep) {
  std::sort(members.begin(), members.end());
  std::string text;
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (i > 0) text += sep;
    text += members[i].text;
  }
  return Label(std::move(text));
}

inline Label block_label(const std::vector<Label>& members) {
  return joined_label(members, "+");
}

/// Unordered two-element set {L.x,R.y}, rendered set-style.
inline Label unordered_pair_label(const Label& a, const Label& b) {
  Label inner = joined_label({a, b}, ",");
  return Label("{" + inner.text + "}");
}

/// An object of the finite-set category: finitely many distinct labels.
/// Elements are kept sorted, so two objects are equal exactly when their
/// label sets are equal. The empty object is valid (the initial object).
class FinSetObj {
 public:
  FinSetObj() = default;

  explicit FinSetObj(std::vector<Label> elements) : elements_(std::move(elements)) {
    std::sort(elements_.begin(), elements_.end());
    auto dup = std::adjacent_find(elements_.begin(), elements_.end());
    if (dup != elements_.end())
      throw MalformedValue("duplicate label '" + dup->text + "' in object");
  }

  const std::vector<Label>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  bool empty() const { return elements_.empty(); }

  bool contains(const Label& l) const {
    return std::binary_search(elements_.begin(), elements_.end(), l);
  }

  auto operator<=>(const FinSetObj&) const = default;

 private:
  std::vector<Label> elements_;
};

inline FinSetObj object_of(std::initializer_list<std::string> names) {
  std::vector<Label> labels;
  labels.reserve(names.size());
  for (const auto& n : names) labels.emplace_back(n);
  return FinSetObj(std::move(labels));
}

/// The one-point object {•}.
inline FinSetObj point_object() { return FinSetObj({point_label()}); }

inline std::string render(const Label& l) { return l.text; }

inline std::string render(const FinSetObj& x) {
  std::string out = "{";
  for (std::size_t i = 0; i < x.elements().size(); ++i) {
    if (i > 0) out += ",";
    out += x.elements()[i].text;
  }
  out += "}";
  return out;
}

}  // namespace setcat
