#pragma once

#include <compare>
#include <map>
#include <string>
#include <string_view>
#include <utility>

#include "ikalg/errors.hpp"
#include "ikalg/integer.hpp"
#include "ikalg/wreath.hpp"

namespace ikalg {

/// A class label placed at a level l. The tag keeps basis labels of the
/// partial-element algebra and of the centers from being mixed up.
template <typename Tag>
struct LeveledLabel {
  int l = 0;
  ClassLabel c;

  /// α(c) <= l: the class meets G_l.
  bool valid() const noexcept { return c.alpha <= l; }

  friend bool operator==(const LeveledLabel&, const LeveledLabel&) = default;
  friend std::strong_ordering operator<=>(const LeveledLabel& a, const LeveledLabel& b) {
    if (auto o = a.l <=> b.l; o != 0) return o;
    return a.c <=> b.c;
  }
};

struct OmegaTag {};
struct CenterTag {};

/// A conjugacy class of partial elements ω = (l, c).
using OmegaLabel = LeveledLabel<OmegaTag>;
/// The class c(l) = c ∩ G_l, a basis element of Z(k[G_l]).
using CenterBasisLabel = LeveledLabel<CenterTag>;

/// `3:[2]` / `2:[(2,1)]`.
template <typename Tag>
std::string format_leveled(const LeveledLabel<Tag>& label, bool shorthand) {
  return std::to_string(label.l) + ":" + format_label(label.c, shorthand);
}

/// Parses `l:[...]`. Throws ParseError.
template <typename Tag>
LeveledLabel<Tag> parse_leveled(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos)
    throw Error(ErrorKind::ParseError, "'" + std::string(text) + "': expected l:[...]");
  std::string head(text.substr(0, colon));
  std::erase_if(head, [](char ch) { return ch == ' ' || ch == '\t'; });
  if (head.empty() || head.size() > 4 ||
      head.find_first_not_of("0123456789") != std::string::npos)
    throw Error(ErrorKind::ParseError, "'" + std::string(text) + "': bad level");
  LeveledLabel<Tag> out;
  out.l = std::stoi(head);
  out.c = parse_label(text.substr(colon + 1));
  return out;
}

inline OmegaLabel parse_omega(std::string_view text) { return parse_leveled<OmegaTag>(text); }

/// Sparse exact-integer combination of basis labels, truncated at `level`.
/// Zero coefficients are never stored; iteration is in canonical label order.
template <typename Key>
class SparseVector {
 public:
  using Terms = std::map<Key, Integer>;

  SparseVector() = default;
  explicit SparseVector(int level) : level_(level) {}

  static SparseVector basis(const Key& key, int level) {
    SparseVector v(level);
    v.add(key, 1);
    return v;
  }

  int level() const noexcept { return level_; }
  const Terms& terms() const noexcept { return terms_; }
  bool empty() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  Integer coefficient(const Key& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? Integer(0) : it->second;
  }

  /// Adds `amount` to the coefficient of `key`; the key must lie within the level.
  void add(const Key& key, const Integer& amount) {
    if (key.l > level_)
      throw Error(ErrorKind::LevelMismatch, "label level " + std::to_string(key.l) +
                                                " above truncation " + std::to_string(level_));
    if (amount == 0) return;
    auto [it, inserted] = terms_.try_emplace(key, amount);
    if (!inserted) {
      it->second += amount;
      if (it->second == 0) terms_.erase(it);
    }
  }

  SparseVector& operator+=(const SparseVector& other) {
    require_same_level(other);
    for (const auto& [k, v] : other.terms_) add(k, v);
    return *this;
  }
  SparseVector& operator-=(const SparseVector& other) {
    require_same_level(other);
    for (const auto& [k, v] : other.terms_) add(k, -v);
    return *this;
  }
  friend SparseVector operator+(SparseVector a, const SparseVector& b) { return a += b; }
  friend SparseVector operator-(SparseVector a, const SparseVector& b) { return a -= b; }
  friend SparseVector operator*(const Integer& s, const SparseVector& v) {
    SparseVector out(v.level_);
    for (const auto& [k, x] : v.terms_) out.add(k, s * x);
    return out;
  }

  /// Terms at exactly level l, as a vector at the same truncation.
  SparseVector component(int l) const {
    SparseVector out(level_);
    for (const auto& [k, x] : terms_)
      if (k.l == l) out.terms_.emplace(k, x);
    return out;
  }

  friend bool operator==(const SparseVector& a, const SparseVector& b) {
    return a.level_ == b.level_ && a.terms_ == b.terms_;
  }

  void require_same_level(const SparseVector& other) const {
    if (other.level_ != level_)
      throw Error(ErrorKind::LevelMismatch, "vectors at levels " + std::to_string(level_) +
                                                " and " + std::to_string(other.level_));
  }

 private:
  int level_ = 0;
  Terms terms_;
};

/// Elements of the truncation A_{<=N}.
using AlgebraVector = SparseVector<OmegaLabel>;
/// Elements of the product of centers Z(k[G_l]) for l <= N.
using CenterVector = SparseVector<CenterBasisLabel>;

/// `{label: coefficient, ...}` in canonical order.
template <typename Key>
std::string format_vector(const SparseVector<Key>& v, bool shorthand) {
  std::string out = "{";
  bool first = true;
  for (const auto& [k, x] : v.terms()) {
    if (!first) out += ", ";
    out += format_leveled(k, shorthand) + ": " + x.str();
    first = false;
  }
  return out + "}";
}

}  // namespace ikalg
