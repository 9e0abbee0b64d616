#include "ikalg/wreath.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <sstream>

#include "ikalg/errors.hpp"

namespace ikalg {

namespace {

void require_level(int n) {
  if (n < 0 || n > kMaxPoints)
    throw Error(ErrorKind::LevelMismatch,
                "level " + std::to_string(n) + " outside 0.." + std::to_string(kMaxPoints));
}

}  // namespace

std::vector<int> SupportSet::points() const {
  std::vector<int> out;
  for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
  return out;
}

bool subset_less(SupportSet a, SupportSet b) noexcept {
  if (a.size() != b.size()) return a.size() < b.size();
  return a.points() < b.points();
}

std::vector<SupportSet> subsets_canonical(int n) {
  require_level(n);
  std::vector<SupportSet> out;
  out.reserve(std::size_t{1} << n);
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) out.emplace_back(m);
  std::sort(out.begin(), out.end(), subset_less);
  return out;
}

std::string format_support(SupportSet s) {
  std::string out = "{";
  bool first = true;
  for (int p : s.points()) {
    if (!first) out += ",";
    out += std::to_string(p + 1);
    first = false;
  }
  return out + "}";
}

GroupElement GroupElement::identity(int n, const FiniteGroup& group) {
  require_level(n);
  GroupElement e;
  e.n = n;
  for (int i = 0; i < n; ++i) {
    e.perm[i] = static_cast<std::uint8_t>(i);
    e.deco[i] = group.identity();
  }
  return e;
}

GroupElement GroupElement::from(const std::vector<int>& images,
                                const std::vector<int>& decorations, const FiniteGroup& group) {
  const int n = static_cast<int>(images.size());
  require_level(n);
  GroupElement e = identity(n, group);
  std::vector<bool> hit(n, false);
  for (int i = 0; i < n; ++i) {
    if (images[i] < 0 || images[i] >= n || hit[images[i]])
      throw Error(ErrorKind::ParseError, "images do not form a permutation");
    hit[images[i]] = true;
    e.perm[i] = static_cast<std::uint8_t>(images[i]);
  }
  if (!decorations.empty()) {
    if (static_cast<int>(decorations.size()) != n)
      throw Error(ErrorKind::LevelMismatch, "decoration count differs from level");
    for (int i = 0; i < n; ++i) {
      if (decorations[i] < 0 || decorations[i] >= group.order())
        throw Error(ErrorKind::ParseError, "decoration outside the base group");
      e.deco[i] = static_cast<ElementIndex>(decorations[i]);
    }
  }
  return e;
}

std::size_t GroupElementHash::operator()(const GroupElement& e) const noexcept {
  std::size_t h = static_cast<std::size_t>(e.n);
  for (int i = 0; i < e.n; ++i) {
    h = h * 1099511628211ull ^ e.perm[i];
    h = h * 1099511628211ull ^ e.deco[i];
  }
  return h;
}

GroupElement multiply(const GroupElement& a, const GroupElement& b, const FiniteGroup& group) {
  if (a.n != b.n)
    throw Error(ErrorKind::LevelMismatch,
                "cannot multiply levels " + std::to_string(a.n) + " and " + std::to_string(b.n));
  GroupElement r;
  r.n = a.n;
  std::array<std::uint8_t, kMaxPoints> a_inv{};
  for (int i = 0; i < a.n; ++i) a_inv[a.perm[i]] = static_cast<std::uint8_t>(i);
  for (int i = 0; i < a.n; ++i) {
    r.perm[i] = a.perm[b.perm[i]];
    r.deco[i] = group.mul(a.deco[i], b.deco[a_inv[i]]);
  }
  return r;
}

GroupElement inverse(const GroupElement& a, const FiniteGroup& group) {
  GroupElement r;
  r.n = a.n;
  for (int i = 0; i < a.n; ++i) r.perm[a.perm[i]] = static_cast<std::uint8_t>(i);
  for (int i = 0; i < a.n; ++i) r.deco[i] = group.inv(a.deco[a.perm[i]]);
  return r;
}

GroupElement conjugate(const GroupElement& g, const GroupElement& a, const FiniteGroup& group) {
  return multiply(multiply(g, a, group), inverse(g, group), group);
}

SupportSet support(const GroupElement& a, const FiniteGroup& group) {
  SupportSet s;
  for (int i = 0; i < a.n; ++i)
    if (a.perm[i] != i || a.deco[i] != group.identity()) s.insert(i);
  return s;
}

bool is_identity(const GroupElement& a, const FiniteGroup& group) {
  return support(a, group).empty();
}

GroupElement embed(const GroupElement& a, int level, const FiniteGroup& group) {
  require_level(level);
  if (level < a.n)
    throw Error(ErrorKind::LevelMismatch, "cannot embed into a smaller level");
  GroupElement r = GroupElement::identity(level, group);
  for (int i = 0; i < a.n; ++i) {
    r.perm[i] = a.perm[i];
    r.deco[i] = a.deco[i];
  }
  return r;
}

SupportSet image(const GroupElement& a, SupportSet s) {
  SupportSet out;
  for (int p : s.points()) out.insert(a.perm[p]);
  return out;
}

ClassLabel::ClassLabel(std::vector<CyclePart> p) {
  std::erase_if(p, [](const CyclePart& c) { return c.length == 1 && c.fclass == 0; });
  std::sort(p.begin(), p.end(), [](const CyclePart& x, const CyclePart& y) {
    if (x.length != y.length) return x.length > y.length;
    return x.fclass < y.fclass;
  });
  alpha = 0;
  for (const auto& c : p) alpha += c.length;
  parts = std::move(p);
}

std::strong_ordering operator<=>(const ClassLabel& a, const ClassLabel& b) {
  if (auto c = a.alpha <=> b.alpha; c != 0) return c;
  return std::lexicographical_compare_three_way(a.parts.begin(), a.parts.end(), b.parts.begin(),
                                                b.parts.end());
}

ClassLabel class_label(const GroupElement& a, const FiniteGroup& group) {
  std::vector<CyclePart> parts;
  std::array<bool, kMaxPoints> seen{};
  for (int start = 0; start < a.n; ++start) {
    if (seen[start]) continue;
    // Walk start -> perm(start) -> ..., accumulating deco[i_k]·…·deco[i_1].
    ElementIndex product = group.identity();
    int length = 0;
    int i = start;
    do {
      seen[i] = true;
      product = group.mul(a.deco[i], product);
      i = a.perm[i];
      ++length;
    } while (i != start);
    parts.push_back({length, group.class_of(product)});
  }
  return ClassLabel(std::move(parts));
}

std::string format_label(const ClassLabel& label, bool shorthand) {
  const bool bare = shorthand && std::all_of(label.parts.begin(), label.parts.end(),
                                             [](const CyclePart& c) { return c.fclass == 0; });
  std::string out = "[";
  for (std::size_t k = 0; k < label.parts.size(); ++k) {
    if (k) out += ",";
    const auto& c = label.parts[k];
    if (bare)
      out += std::to_string(c.length);
    else
      out += "(" + std::to_string(c.length) + "," + std::to_string(c.fclass) + ")";
  }
  return out + "]";
}

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!eat(c)) fail(std::string("expected '") + c + "'");
  }
  int integer() {
    skip_space();
    const std::size_t begin = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (begin == pos_) fail("expected a number");
    if (pos_ - begin > 4) fail("number too large");
    return std::stoi(std::string(text_.substr(begin, pos_ - begin)));
  }
  bool at_end() {
    skip_space();
    return pos_ == text_.size();
  }
  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorKind::ParseError,
                "'" + std::string(text_) + "' at offset " + std::to_string(pos_) + ": " + why);
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

ClassLabel parse_label(std::string_view text) {
  Cursor in(text);
  in.expect('[');
  std::vector<CyclePart> parts;
  if (!in.eat(']')) {
    do {
      CyclePart part;
      if (in.eat('(')) {
        part.length = in.integer();
        in.expect(',');
        part.fclass = in.integer();
        in.expect(')');
      } else {
        part.length = in.integer();
      }
      if (part.length < 1) in.fail("cycle length must be positive");
      if (part.length == 1 && part.fclass == 0) in.fail("(1,0) is not a stored part");
      parts.push_back(part);
    } while (in.eat(','));
    in.expect(']');
  }
  if (!in.at_end()) in.fail("trailing characters");
  return ClassLabel(std::move(parts));
}

std::vector<ClassLabel> all_labels(int max_alpha, int fclasses) {
  std::set<ClassLabel> out;
  std::vector<CyclePart> current;
  // Parts are chosen in non-increasing (length, fclass) order to avoid repeats.
  std::function<void(int, CyclePart)> grow = [&](int room, CyclePart bound) {
    out.insert(ClassLabel(current));
    for (int len = std::min(room, bound.length); len >= 1; --len) {
      const int top = len == bound.length ? bound.fclass : fclasses - 1;
      for (int k = top; k >= 0; --k) {
        if (len == 1 && k == 0) continue;
        current.push_back({len, k});
        grow(room - len, {len, k});
        current.pop_back();
      }
    }
  };
  grow(max_alpha, {max_alpha, fclasses - 1});
  return {out.begin(), out.end()};
}

GroupElement representative_element(const ClassLabel& label, int n, const FiniteGroup& group) {
  if (label.alpha > n)
    throw Error(ErrorKind::InvalidLabel, format_label(label, false) + " does not fit level " +
                                             std::to_string(n));
  GroupElement e = GroupElement::identity(n, group);
  int p = 0;
  for (const auto& part : label.parts) {
    if (part.fclass < 0 || part.fclass >= group.class_count())
      throw Error(ErrorKind::InvalidLabel, "F-class " + std::to_string(part.fclass) +
                                               " does not exist in the base group");
    for (int k = 0; k < part.length; ++k)
      e.perm[p + k] = static_cast<std::uint8_t>(p + (k + 1) % part.length);
    e.deco[p] = group.class_rep(part.fclass);
    p += part.length;
  }
  return e;
}

std::uint64_t element_count(const FiniteGroup& group, int n, const Budget& budget) {
  require_level(n);
  std::uint64_t total = 1;
  auto over = [&] {
    throw Error(ErrorKind::BudgetExceeded,
                "|G_" + std::to_string(n) + "| exceeds the element budget of " +
                    std::to_string(budget.max_elements));
  };
  for (int i = 1; i <= n; ++i) {
    auto next = checked_mul(total, static_cast<std::uint64_t>(i) * group.order());
    if (!next || *next > budget.max_elements) over();
    total = *next;
  }
  if (total > budget.max_elements) over();
  return total;
}

void for_each_element(const FiniteGroup& group, int n, const Budget& budget,
                      const std::function<void(const GroupElement&)>& visit) {
  element_count(group, n, budget);
  std::vector<ElementIndex> sorted(group.order());
  std::iota(sorted.begin(), sorted.end(), ElementIndex{0});

  GroupElement e;
  e.n = n;
  std::array<std::uint8_t, kMaxPoints> p{};
  for (int i = 0; i < n; ++i) p[i] = static_cast<std::uint8_t>(i);
  do {
    e.perm = p;
    std::vector<int> odo(n, 0);
    while (true) {
      for (int i = 0; i < n; ++i) e.deco[i] = sorted[odo[i]];
      visit(e);
      int k = n - 1;
      while (k >= 0 && odo[k] == group.order() - 1) odo[k--] = 0;
      if (k < 0) break;
      ++odo[k];
    }
  } while (std::next_permutation(p.begin(), p.begin() + n));
}

std::vector<GroupElement> enumerate_elements(const FiniteGroup& group, int n,
                                             const Budget& budget) {
  std::vector<GroupElement> out;
  out.reserve(element_count(group, n, budget));
  for_each_element(group, n, budget, [&](const GroupElement& e) { out.push_back(e); });
  return out;
}

bool d_type_membership(const GroupElement& a, const FiniteGroup& group) {
  if (group.order() != 2)
    throw Error(ErrorKind::WrongBaseGroup, "type D membership needs the base group Z/2");
  int flips = 0;
  for (int i = 0; i < a.n; ++i) flips += a.deco[i] != group.identity();
  return flips % 2 == 0;
}

std::string format_element(const GroupElement& a, const FiniteGroup& group) {
  std::string cycles;
  std::array<bool, kMaxPoints> seen{};
  for (int start = 0; start < a.n; ++start) {
    if (seen[start] || a.perm[start] == start) continue;
    cycles += "(";
    int i = start;
    bool first = true;
    do {
      seen[i] = true;
      if (!first) cycles += " ";
      cycles += std::to_string(i + 1);
      first = false;
      i = a.perm[i];
    } while (i != start);
    cycles += ")";
  }
  if (cycles.empty()) cycles = "e";
  if (group.is_trivial()) return cycles;
  std::string out = "(" + cycles + "; ";
  for (int i = 0; i < a.n; ++i) {
    if (i) out += ",";
    out += group.name(a.deco[i]);
  }
  return out + ")";
}

LevelGroup::LevelGroup(const FiniteGroup& group, int n, const Budget& budget)
    : group_(group), n_(n), elements_(enumerate_elements(group, n, budget)) {
  std::vector<ClassLabel> raw;
  raw.reserve(elements_.size());
  for (const auto& e : elements_) raw.push_back(class_label(e, group_));
  std::set<ClassLabel> distinct(raw.begin(), raw.end());
  labels_.assign(distinct.begin(), distinct.end());
  for (int k = 0; k < static_cast<int>(labels_.size()); ++k) label_index_.emplace(labels_[k], k);
  class_sizes_.assign(labels_.size(), 0);
  first_of_.assign(labels_.size(), elements_.size());
  label_of_.resize(elements_.size());
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    const int id = label_index_.at(raw[i]);
    label_of_[i] = id;
    ++class_sizes_[id];
    if (first_of_[id] == elements_.size()) first_of_[id] = i;
  }
}

int LevelGroup::find_label(const ClassLabel& label) const {
  auto it = label_index_.find(label);
  return it == label_index_.end() ? -1 : it->second;
}

std::size_t LevelGroup::index_of(const GroupElement& e) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), e);
  if (it == elements_.end() || *it != e)
    throw Error(ErrorKind::LevelMismatch, "element is not in G_" + std::to_string(n_));
  return static_cast<std::size_t>(it - elements_.begin());
}

}  // namespace ikalg
