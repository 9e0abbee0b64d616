#include "ikalg/finite_group.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <fstream>
#include <numeric>
#include <sstream>

#include <nlohmann/json.hpp>

#include "ikalg/errors.hpp"

namespace ikalg {

namespace {

std::string idx(int i) { return std::to_string(i); }

}  // namespace

FiniteGroup::FiniteGroup(std::vector<std::vector<int>> table, std::vector<std::string> names,
                         int max_order) {
  const int n = static_cast<int>(table.size());
  if (n == 0) throw Error(ErrorKind::BadTable, "group order must be positive");
  if (n > max_order)
    throw Error(ErrorKind::BadTable,
                "group order " + idx(n) + " exceeds the configured cap " + idx(max_order));
  for (int a = 0; a < n; ++a) {
    if (static_cast<int>(table[a].size()) != n)
      throw Error(ErrorKind::BadTable,
                  "row " + idx(a) + " has " + idx(static_cast<int>(table[a].size())) +
                      " entries, expected " + idx(n));
    for (int b = 0; b < n; ++b) {
      const int v = table[a][b];
      if (v < 0 || v >= n)
        throw Error(ErrorKind::NotClosed, "mult[" + idx(a) + "][" + idx(b) + "] = " + idx(v) +
                                              " is outside 0.." + idx(n - 1));
    }
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (table[table[a][b]][c] != table[a][table[b][c]])
          throw Error(ErrorKind::NotAssociative,
                      "(" + idx(a) + "*" + idx(b) + ")*" + idx(c) + " != " + idx(a) + "*(" +
                          idx(b) + "*" + idx(c) + ")");

  int identity = -1;
  for (int e = 0; e < n && identity < 0; ++e) {
    bool unit = true;
    for (int x = 0; x < n && unit; ++x) unit = table[e][x] == x && table[x][e] == x;
    if (unit) identity = e;
  }
  if (identity < 0) throw Error(ErrorKind::NoIdentity, "no two-sided unit in the table");

  order_ = n;
  identity_ = static_cast<ElementIndex>(identity);
  mult_.resize(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) mult_[static_cast<std::size_t>(a) * n + b] =
        static_cast<ElementIndex>(table[a][b]);

  inv_.assign(n, 0);
  for (int a = 0; a < n; ++a) {
    int found = -1;
    for (int b = 0; b < n && found < 0; ++b)
      if (table[a][b] == identity && table[b][a] == identity) found = b;
    if (found < 0) throw Error(ErrorKind::NoInverse, "element " + idx(a) + " has no inverse");
    inv_[a] = static_cast<ElementIndex>(found);
  }

  if (names.empty()) {
    names_.resize(n);
    for (int a = 0; a < n; ++a) names_[a] = idx(a);
  } else {
    if (static_cast<int>(names.size()) != n)
      throw Error(ErrorKind::BadTable, "names has " + idx(static_cast<int>(names.size())) +
                                           " entries, expected " + idx(n));
    names_ = std::move(names);
  }

  auto classes = conjugacy_classes(*this);
  class_of_ = std::move(classes.class_of);
  class_reps_.clear();
  for (const auto& members : classes.members) class_reps_.push_back(members.front());
}

std::vector<ElementIndex> FiniteGroup::class_members(int cls) const {
  std::vector<ElementIndex> out;
  for (int a = 0; a < order_; ++a)
    if (class_of_[a] == cls) out.push_back(static_cast<ElementIndex>(a));
  return out;
}

int FiniteGroup::find_name(std::string_view name) const noexcept {
  for (int a = 0; a < order_; ++a)
    if (names_[a] == name) return a;
  return -1;
}

ConjugacyClasses conjugacy_classes(const FiniteGroup& group) {
  const int n = group.order();
  std::vector<int> orbit_of(n, -1);
  std::vector<std::vector<ElementIndex>> orbits;
  // Orbits discovered in ascending order of their minimal element.
  for (int x = 0; x < n; ++x) {
    if (orbit_of[x] >= 0) continue;
    const int id = static_cast<int>(orbits.size());
    std::vector<ElementIndex> members;
    for (int g = 0; g < n; ++g) {
      const auto gx = group.mul(static_cast<ElementIndex>(g), static_cast<ElementIndex>(x));
      const auto y = group.mul(gx, group.inv(static_cast<ElementIndex>(g)));
      if (orbit_of[y] < 0) {
        orbit_of[y] = id;
        members.push_back(y);
      }
    }
    std::sort(members.begin(), members.end());
    orbits.push_back(std::move(members));
  }
  // Move the identity's orbit to the front, keep the rest in order.
  const int id_orbit = orbit_of[group.identity()];
  std::vector<int> relabel(orbits.size());
  ConjugacyClasses out;
  out.members.push_back(orbits[id_orbit]);
  relabel[id_orbit] = 0;
  for (int k = 0; k < static_cast<int>(orbits.size()); ++k) {
    if (k == id_orbit) continue;
    relabel[k] = static_cast<int>(out.members.size());
    out.members.push_back(orbits[k]);
  }
  out.class_of.resize(n);
  for (int x = 0; x < n; ++x) out.class_of[x] = relabel[orbit_of[x]];
  return out;
}

FiniteGroup load_group(const std::vector<std::vector<int>>& table,
                       const std::vector<std::string>& names, int max_order) {
  return FiniteGroup(table, names, max_order);
}

FiniteGroup load_group_json(std::string_view json_text, int max_order) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::ParseError, std::string("group spec: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("order") || !doc.contains("mult"))
    throw Error(ErrorKind::ParseError, "group spec needs fields 'order' and 'mult'");
  try {
    const int order = doc.at("order").get<int>();
    auto table = doc.at("mult").get<std::vector<std::vector<int>>>();
    if (static_cast<int>(table.size()) != order)
      throw Error(ErrorKind::BadTable, "'mult' has " + idx(static_cast<int>(table.size())) +
                                           " rows but order is " + idx(order));
    std::vector<std::string> names;
    if (doc.contains("names")) names = doc.at("names").get<std::vector<std::string>>();
    return FiniteGroup(std::move(table), std::move(names), max_order);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::ParseError, std::string("group spec: ") + e.what());
  }
}

FiniteGroup load_group_file(const std::string& path, int max_order) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Config, "cannot open group file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return load_group_json(buf.str(), max_order);
}

FiniteGroup trivial_group() { return FiniteGroup({{0}}, {"e"}); }

FiniteGroup cyclic_group(int m) {
  if (m < 1 || m > 12)
    throw Error(ErrorKind::UnknownBuiltin, "cyclic(" + idx(m) + "): m must be in 1..12");
  if (m == 1) return trivial_group();
  std::vector<std::vector<int>> table(m, std::vector<int>(m));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) table[a][b] = (a + b) % m;
  std::vector<std::string> names;
  if (m == 2) names = {"+", "-"};
  return FiniteGroup(std::move(table), std::move(names));
}

FiniteGroup symmetric_group_3() {
  // Elements as images of (0,1,2), in lexicographic order.
  std::vector<std::array<int, 3>> perms;
  std::array<int, 3> p{0, 1, 2};
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  auto index_of = [&](const std::array<int, 3>& q) {
    return static_cast<int>(std::find(perms.begin(), perms.end(), q) - perms.begin());
  };
  std::vector<std::vector<int>> table(6, std::vector<int>(6));
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) {
      std::array<int, 3> c{};
      for (int i = 0; i < 3; ++i) c[i] = perms[a][perms[b][i]];
      table[a][b] = index_of(c);
    }
  return FiniteGroup(std::move(table), {"e", "(23)", "(12)", "(123)", "(132)", "(13)"});
}

FiniteGroup builtin_group(std::string_view name) {
  if (name == "trivial") return trivial_group();
  if (name == "sym3" || name == "sym(3)") return symmetric_group_3();
  std::string_view digits;
  if (name.starts_with("cyclic(") && name.ends_with(")"))
    digits = name.substr(7, name.size() - 8);
  else if (name.starts_with("cyclic"))
    digits = name.substr(6);
  if (!digits.empty()) {
    int m = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), m);
    if (ec == std::errc() && ptr == digits.data() + digits.size()) return cyclic_group(m);
  }
  throw Error(ErrorKind::UnknownBuiltin, "unknown built-in group '" + std::string(name) + "'");
}

}  // namespace ikalg
