#include "ikalg/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "ikalg/errors.hpp"
#include "ikalg/verify.hpp"

namespace ikalg::cli {

namespace {

using Json = nlohmann::ordered_json;

/// A flat result: metadata, named columns, one JSON object per row, and free
/// text lines printed after the table.
struct Result {
  std::string command;
  Json meta = Json::object();
  std::vector<std::string> columns;
  std::vector<Json> rows;
  std::vector<std::string> trailer;
  int exit_code = kOk;
};

std::string cell_text(const Json& v) {
  if (v.is_null()) return "";
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

void render_table(const Result& r, std::ostream& os) {
  os << "# " << r.command;
  for (const auto& [k, v] : r.meta.items()) os << " " << k << "=" << cell_text(v);
  os << "\n";
  std::vector<std::size_t> width(r.columns.size());
  for (std::size_t c = 0; c < r.columns.size(); ++c) width[c] = r.columns[c].size();
  std::vector<std::vector<std::string>> cells;
  for (const auto& row : r.rows) {
    auto& line = cells.emplace_back();
    for (std::size_t c = 0; c < r.columns.size(); ++c) {
      line.push_back(cell_text(row.value(r.columns[c], Json())));
      width[c] = std::max(width[c], line.back().size());
    }
  }
  auto emit = [&](const std::vector<std::string>& line) {
    std::string text;
    for (std::size_t c = 0; c < line.size(); ++c) {
      if (c) text += "  ";
      text += line[c];
      if (c + 1 < line.size()) text.append(width[c] - line[c].size(), ' ');
    }
    text.erase(text.find_last_not_of(' ') + 1);
    os << text << "\n";
  };
  emit(r.columns);
  for (const auto& line : cells) emit(line);
  for (const auto& line : r.trailer) os << line << "\n";
}

void render_csv(const Result& r, std::ostream& os) {
  for (std::size_t c = 0; c < r.columns.size(); ++c) os << (c ? "," : "") << r.columns[c];
  os << "\n";
  for (const auto& row : r.rows) {
    for (std::size_t c = 0; c < r.columns.size(); ++c)
      os << (c ? "," : "") << csv_escape(cell_text(row.value(r.columns[c], Json())));
    os << "\n";
  }
}

void render_json(const Result& r, std::ostream& os) {
  Json doc;
  doc["schema"] = 1;
  doc["command"] = r.command;
  for (const auto& [k, v] : r.meta.items()) doc[k] = v;
  doc["rows"] = r.rows;
  os << doc.dump(2) << "\n";
}

struct Context {
  RunConfig cfg;
  FamilySpec family;
  Budget budget;
  int jobs = 1;

  const FiniteGroup& base() const { return family.base; }
  bool shorthand() const { return family.base.is_trivial(); }
  std::string label(const ClassLabel& c) const { return format_label(c, shorthand()); }
  std::string omega(const OmegaLabel& w) const { return format_leveled(w, shorthand()); }

  Json meta() const {
    Json m;
    m["family"] = family.name;
    m["level"] = cfg.level;
    return m;
  }
};

Context make_context(const RunConfig& cfg) {
  if (cfg.level < 0) throw Error(ErrorKind::Config, "--level must be non-negative");
  if (cfg.budget_elements == 0) throw Error(ErrorKind::Config, "--budget-elements must be positive");
  if (cfg.jobs < 0) throw Error(ErrorKind::Config, "--jobs must be non-negative");
  Context ctx;
  ctx.cfg = cfg;
  ctx.family = cfg.group_file.empty()
                   ? FamilySpec::builtin(cfg.family)
                   : FamilySpec::from_group(load_group_file(cfg.group_file), cfg.group_file);
  ctx.budget.max_elements = cfg.budget_elements;
  ctx.jobs = cfg.jobs > 0 ? cfg.jobs : std::max(1, static_cast<int>(std::thread::hardware_concurrency()));
  return ctx;
}

void require_algebra(const Context& ctx) {
  if (!ctx.family.has_algebra())
    throw Error(ErrorKind::Config, "family '" + ctx.family.name +
                                       "' is not admissible; only 'verify audit' applies");
}

void check_fclasses(const ClassLabel& c, const FiniteGroup& f) {
  for (const auto& part : c.parts)
    if (part.fclass < 0 || part.fclass >= f.class_count())
      throw Error(ErrorKind::InvalidLabel, "F-class " + std::to_string(part.fclass) +
                                               " out of range for a group with " +
                                               std::to_string(f.class_count()) + " classes");
}

OmegaLabel read_omega(const std::string& text, const Context& ctx, const char* flag) {
  const auto w = parse_omega(text);
  check_fclasses(w.c, ctx.base());
  if (!w.valid()) throw Error(ErrorKind::InvalidLabel, std::string(flag) + " " + text + ": α exceeds l");
  if (w.l > ctx.cfg.level)
    throw Error(ErrorKind::LevelMismatch, std::string(flag) + " " + text + " is above --level " +
                                              std::to_string(ctx.cfg.level));
  return w;
}

ClassLabel read_class(const std::string& text, const Context& ctx) {
  auto c = parse_label(text);
  check_fclasses(c, ctx.base());
  return c;
}

Result cmd_classes(const Context& ctx) {
  require_algebra(ctx);
  Result r;
  r.command = "classes";
  r.meta = ctx.meta();
  r.columns = {"kind", "label", "size"};
  const int n = ctx.cfg.level;
  std::size_t omegas = 0;
  std::optional<LevelGroup> top;
  for (int l = 0; l <= n; ++l) {
    LevelGroup g(ctx.base(), l, ctx.budget);
    const Count subsets = binomial(n, l);
    for (int id = 0; id < static_cast<int>(g.labels().size()); ++id) {
      Json row;
      row["kind"] = "omega";
      row["label"] = ctx.omega({l, g.labels()[id]});
      const auto size = checked_mul(subsets, g.class_size(id));
      if (!size) throw Error(ErrorKind::BudgetExceeded, "class size overflows 64 bits");
      row["size"] = *size;
      r.rows.push_back(std::move(row));
      ++omegas;
    }
    if (l == n) top.emplace(std::move(g));
  }
  for (int id = 0; id < static_cast<int>(top->labels().size()); ++id) {
    Json row;
    row["kind"] = "center";
    row["label"] = ctx.label(top->labels()[id]);
    row["size"] = top->class_size(id);
    r.rows.push_back(std::move(row));
  }
  r.meta["omega_labels"] = omegas;
  r.meta["center_labels"] = top->labels().size();
  return r;
}

struct PconstArgs {
  std::string omega1, omega2, omega;
};

Result cmd_pconst(const Context& ctx, const PconstArgs& a) {
  require_algebra(ctx);
  if (a.omega1.empty() != a.omega2.empty())
    throw Error(ErrorKind::Config, "--omega1 and --omega2 must be given together");
  if (!a.omega.empty() && a.omega1.empty())
    throw Error(ErrorKind::Config, "--omega needs --omega1 and --omega2");
  Result r;
  r.command = "pconst";
  r.meta = ctx.meta();
  r.columns = {"omega1", "omega2", "omega", "P"};
  auto add = [&](const OmegaLabel& x, const OmegaLabel& y, const OmegaLabel& w, Count p) {
    Json row;
    row["omega1"] = ctx.omega(x);
    row["omega2"] = ctx.omega(y);
    row["omega"] = ctx.omega(w);
    row["P"] = p;
    r.rows.push_back(std::move(row));
  };

  if (!a.omega1.empty()) {
    const auto x = read_omega(a.omega1, ctx, "--omega1");
    const auto y = read_omega(a.omega2, ctx, "--omega2");
    if (!a.omega.empty()) {
      const auto w = read_omega(a.omega, ctx, "--omega");
      add(x, y, w, p_constant(x, y, w, ctx.base(), ctx.budget));
      return r;
    }
  }
  const StructureConstants table(ctx.base(), ctx.cfg.level, ctx.budget, ctx.jobs);
  if (!a.omega1.empty()) {
    const auto x = parse_omega(a.omega1), y = parse_omega(a.omega2);
    for (const auto& [w, p] : table.expand(x, y)) add(x, y, w, p);
    return r;
  }
  for (const auto& x : table.basis())
    for (const auto& y : table.basis())
      for (const auto& [w, p] : table.expand(x, y)) add(x, y, w, p);
  return r;
}

struct SconstArgs {
  std::optional<int> l;
  std::string c1, c2, c;
};

Result cmd_sconst(const Context& ctx, const SconstArgs& a) {
  require_algebra(ctx);
  if (a.c1.empty() != a.c2.empty())
    throw Error(ErrorKind::Config, "--c1 and --c2 must be given together");
  if (!a.c.empty() && a.c1.empty()) throw Error(ErrorKind::Config, "--c needs --c1 and --c2");
  const int l = a.l.value_or(ctx.cfg.level);
  if (l < 0) throw Error(ErrorKind::Config, "--l must be non-negative");
  Result r;
  r.command = "sconst";
  r.meta["family"] = ctx.family.name;
  r.meta["l"] = l;
  r.columns = {"c1", "c2", "c", "l", "S"};
  auto add = [&](const ClassLabel& x, const ClassLabel& y, const ClassLabel& z, Count s) {
    Json row;
    row["c1"] = ctx.label(x);
    row["c2"] = ctx.label(y);
    row["c"] = ctx.label(z);
    row["l"] = l;
    row["S"] = s;
    r.rows.push_back(std::move(row));
  };

  if (!a.c.empty()) {
    const auto x = read_class(a.c1, ctx), y = read_class(a.c2, ctx), z = read_class(a.c, ctx);
    add(x, y, z, s_constant(x, y, z, l, ctx.base(), ctx.budget));
    return r;
  }
  const CenterConstants table(ctx.base(), l, ctx.budget, ctx.jobs);
  if (!a.c1.empty()) {
    const auto x = read_class(a.c1, ctx), y = read_class(a.c2, ctx);
    for (const auto& [z, s] : table.expand(l, x, y)) add(x, y, z, s);
    return r;
  }
  for (const auto& x : table.labels(l))
    for (const auto& y : table.labels(l))
      for (const auto& [z, s] : table.expand(l, x, y)) add(x, y, z, s);
  return r;
}

struct XiArgs {
  std::optional<int> lprime, l;
  std::string c;
  bool oracle = false;
};

Result cmd_xi(const Context& ctx, const XiArgs& a) {
  if (!a.lprime || !a.l || a.c.empty())
    throw Error(ErrorKind::Config, "xi needs --lprime, --class and --l");
  if (*a.lprime < 0 || *a.l < 0) throw Error(ErrorKind::Config, "levels must be non-negative");
  const auto c = read_class(a.c, ctx);
  Result r;
  r.command = "xi";
  r.meta["family"] = ctx.family.name;
  r.columns = {"lprime", "class", "l", "xi"};
  Json row;
  row["lprime"] = *a.lprime;
  row["class"] = ctx.label(c);
  row["l"] = *a.l;
  const Count closed = xi_closed_form(*a.lprime, c, *a.l);
  row["xi"] = closed;
  if (a.oracle) {
    r.columns.push_back("oracle");
    const Count counted = xi_count_oracle(*a.lprime, c, *a.l, ctx.base());
    row["oracle"] = counted;
    if (counted != closed) r.exit_code = kIdentityFailure;
  }
  r.rows.push_back(std::move(row));
  return r;
}

std::string status_of(const SuiteReport& s) {
  if (s.skipped) return "SKIPPED";
  if (s.expect_failure) return s.failed > 0 ? "EXPECTED-FAIL" : "UNEXPECTED-PASS";
  return s.failed == 0 ? "PASS" : "FAIL";
}

Result cmd_verify(const Context& ctx, const std::string& suite) {
  VerifyOptions options;
  options.family = ctx.family;
  options.level = ctx.cfg.level;
  options.budget = ctx.budget;
  options.jobs = ctx.jobs;
  const auto reports = run_suites(suite, options);

  Result r;
  r.command = "verify";
  r.meta = ctx.meta();
  r.meta["suite"] = suite;
  r.columns = {"suite", "status", "checked", "failed", "first_failure"};
  bool all_ok = true;
  for (const auto& s : reports) {
    all_ok = all_ok && s.ok();
    Json row;
    row["suite"] = s.suite;
    row["status"] = status_of(s);
    row["checked"] = s.checked;
    row["failed"] = s.failed;
    if (s.first_failure) {
      const auto& f = *s.first_failure;
      row["first_failure"] = f.key + ": " + f.lhs + " != " + f.rhs;
    } else {
      row["first_failure"] = "";
    }
    row["notes"] = s.notes;
    r.rows.push_back(std::move(row));
    for (const auto& note : s.notes) r.trailer.push_back(s.suite + ": " + note);
  }
  r.trailer.push_back(all_ok ? "result: OK" : "result: FAILED");
  r.exit_code = all_ok ? kOk : kIdentityFailure;
  return r;
}

int exit_code_for(ErrorKind kind) {
  return kind == ErrorKind::BudgetExceeded ? kBudget : kUsage;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Exact structure constants of partial-element algebras for S_n and F wr S_n",
               "ikalg"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--family", cfg.family, "sym, dtype or wreath:<builtin> (trivial, cyclicM, sym3)");
  app.add_option("--group-file", cfg.group_file, "JSON Cayley table of the base group F");
  app.add_option("--level", cfg.level, "truncation level N");
  app.add_option("--format", cfg.format, "output format")
      ->check(CLI::IsMember({"table", "json", "csv"}));
  app.add_option("--out", cfg.out, "write output to this file");
  app.add_option("--jobs", cfg.jobs, "worker threads (0: all cores)");
  app.add_option("--budget-elements", cfg.budget_elements, "largest G_n that may be enumerated");
  app.add_option("--seed", cfg.seed, "seed for randomized checks");

  auto* classes = app.add_subcommand("classes", "omega and center labels with class sizes");

  PconstArgs pargs;
  auto* pconst = app.add_subcommand("pconst", "structure constants of the partial-element algebra");
  pconst->add_option("--omega1", pargs.omega1);
  pconst->add_option("--omega2", pargs.omega2);
  pconst->add_option("--omega", pargs.omega);

  SconstArgs sargs;
  auto* sconst = app.add_subcommand("sconst", "class-sum structure constants of Z(k[G_l])");
  sconst->add_option("--l", sargs.l);
  sconst->add_option("--c1", sargs.c1);
  sconst->add_option("--c2", sargs.c2);
  sconst->add_option("--c", sargs.c);

  XiArgs xargs;
  auto* xi = app.add_subcommand("xi", "the coefficient xi(l', c; l)");
  xi->add_option("--lprime", xargs.lprime);
  xi->add_option("--class", xargs.c);
  xi->add_option("--l", xargs.l);
  xi->add_flag("--oracle", xargs.oracle, "also count subsets directly");

  std::string suite;
  auto* verify = app.add_subcommand("verify", "run an identity suite");
  std::vector<std::string> choices = suite_names();
  choices.push_back("all");
  verify->add_option("suite", suite, "suite name or all")->required()->check(CLI::IsMember(choices));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "ikalg: " << e.what() << "\n";
    return kUsage;
  }

  try {
    const Context ctx = make_context(cfg);
    Result result;
    if (*classes) result = cmd_classes(ctx);
    else if (*pconst) result = cmd_pconst(ctx, pargs);
    else if (*sconst) result = cmd_sconst(ctx, sargs);
    else if (*xi) result = cmd_xi(ctx, xargs);
    else result = cmd_verify(ctx, suite);

    std::ostringstream buffer;
    if (cfg.format == "json") render_json(result, buffer);
    else if (cfg.format == "csv") render_csv(result, buffer);
    else render_table(result, buffer);

    if (cfg.out.empty()) {
      out << buffer.str();
    } else {
      std::ofstream file(cfg.out, std::ios::binary);
      if (!(file << buffer.str())) {
        err << "ikalg: cannot write " << cfg.out << "\n";
        return kUsage;
      }
    }
    return result.exit_code;
  } catch (const Error& e) {
    err << "ikalg: " << to_string(e.kind()) << ": " << e.what() << "\n";
    return exit_code_for(e.kind());
  }
}

}  // namespace ikalg::cli
