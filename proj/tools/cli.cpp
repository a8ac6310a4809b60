#include "cli.hpp"

#include <iomanip>
#include <optional>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "shadowlab/bounds.hpp"
#include "shadowlab/canonical.hpp"
#include "shadowlab/errors.hpp"
#include "shadowlab/io.hpp"
#include "shadowlab/shadow.hpp"
#include "shadowlab/shift.hpp"
#include "shadowlab/structure.hpp"
#include "shadowlab/verify/oracle.hpp"
#include "shadowlab/verify/parallel.hpp"
#include "shadowlab/verify/scan.hpp"
#include "shadowlab/verify/theorems.hpp"
#include "shadowlab/version.hpp"

namespace shadowlab::cli {

namespace {

using Json = nlohmann::ordered_json;

std::string approx(const ExactRatio& r) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(6) << r.to_double();
  return s.str();
}

const char* tf(bool v) { return v ? "true" : "false"; }

Json envelope(Json params, Json results) {
  Json doc;
  doc["params"] = std::move(params);
  doc["results"] = std::move(results);
  doc["meta"] = {{"version", std::string(kVersion)}};
  return doc;
}

// ---------------------------------------------------------------------------
// Family constructors shared by `family` and `analyze`

struct FamilySpec {
  std::string kind;
  int n = 0;
  int k = 0;
  int t = 1;
  int h = 0;
  int s = 0;
};

const std::vector<std::string> kKinds{"frankl-h", "star", "hm", "example15", "layer"};

Family build_family(const FamilySpec& f) {
  if (f.kind == "frankl-h") return frankl_family(f.n, f.k, f.t, f.h);
  if (f.kind == "star") return full_star(f.n, f.k, f.t);
  if (f.kind == "hm") return hm_family(f.n, f.k, f.t);
  if (f.kind == "example15") return example15(f.n, f.k, f.t, f.s);
  if (f.kind == "layer") {
    require(f.k >= 0 && f.k <= f.n, "layer needs 0 <= k <= n");
    return enumerate_ksubsets(f.n, f.k);
  }
  throw ContractViolation("unknown family kind '" + f.kind + "'");
}

void add_family_options(CLI::App* cmd, FamilySpec& spec) {
  cmd->add_option("--n", spec.n, "ground set size");
  cmd->add_option("--k", spec.k, "set size");
  cmd->add_option("--t", spec.t, "intersection parameter");
  cmd->add_option("--h", spec.h, "Frankl family index (frankl-h)");
  cmd->add_option("--s", spec.s, "construction parameter (example15)");
}

// ---------------------------------------------------------------------------
// family

struct FamilyArgs {
  FamilySpec spec;
  bool check = false;
  bool width = false;
  bool base = false;
  bool semistar = false;
};

int cmd_family(const FamilyArgs& a, std::ostream& out) {
  const Family f = build_family(a.spec);
  write_family(out, f);
  out << "# size " << f.size() << '\n';
  const int t = a.spec.t;
  if (a.check) out << "# t-intersecting: " << tf(is_t_intersecting(f, t)) << '\n';
  if (a.width) {
    if (f.k() >= t && is_pseudo_t_intersecting(f, t)) {
      out << "# width: " << width(f, t) << '\n';
    } else {
      out << "# width: undefined (not pseudo t-intersecting)\n";
    }
  }
  if (a.base) {
    require(t >= 1 && t < f.k(), "--base needs 1 <= t < k");
    const BaseDecomposition bd = base_decomposition(f, f.k(), t);
    for (const auto& [ell, level] : bd.levels) out << "# b_" << ell << ": " << level.size() << '\n';
  }
  if (a.semistar) {
    const auto centre = find_semistar_center(f, t);
    out << "# semistar: " << (centre ? "true " + centre->to_string() : "false") << '\n';
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// analyze

struct AnalyzeArgs {
  std::string file;
  FamilySpec spec;
  int j = 1;
  std::string format = "text";
  bool decimal = false;
};

int cmd_analyze(const AnalyzeArgs& a, std::ostream& out) {
  const Family f = a.file.empty() ? build_family(a.spec) : read_family_file(a.file);
  const int t = a.spec.t;
  require(t >= 1, "analyze needs t >= 1");
  Json r;
  r["size"] = f.size();
  r["k"] = f.k();
  if (!f.empty() && a.j > 0 && a.j < f.k()) {
    const std::size_t s = shadow(f, a.j).size();
    const ExactRatio ratio(BigInt(s), BigInt(f.size()));
    r["shadow_size"] = s;
    r["ratio"] = ratio.to_string();
    if (a.decimal) r["ratio_approx"] = approx(ratio);
  }
  r["shifted"] = f.empty() || is_shifted(f);
  r["t_intersecting"] = is_t_intersecting(f, t);
  const bool pseudo = f.empty() || (f.k() >= t && is_pseudo_t_intersecting(f, t));
  r["pseudo_t_intersecting"] = pseudo;
  if (pseudo) r["width"] = width(f, t);
  if (t < f.k() && 2 * f.k() - t <= kMaxGround) {
    Json levels = Json::object();
    for (const auto& [ell, level] : base_decomposition(f, f.k(), t).levels) {
      levels["b_" + std::to_string(ell)] = level.size();
    }
    r["base_levels"] = levels;
  }
  r["t_star"] = is_t_star(f, t);
  r["semistar"] = is_semistar(f, t);

  if (a.format == "json") {
    Json params{{"source", a.file.empty() ? a.spec.kind : a.file}, {"t", t}, {"j", a.j}};
    out << envelope(params, Json::array({r})).dump(2) << '\n';
    return kExitOk;
  }
  for (const auto& [key, value] : r.items()) {
    if (value.is_object()) {
      for (const auto& [lk, lv] : value.items()) out << lk << ": " << lv.dump() << '\n';
    } else if (value.is_string()) {
      out << key << ": " << value.get<std::string>() << '\n';
    } else {
      out << key << ": " << value.dump() << '\n';
    }
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// bounds

struct BoundsArgs {
  std::string name;
  int n = 0, k = 0, t = 0, j = 0, ell = 0, w = 0, h = 0, r = 0;
  bool decimal = false;
  std::string format = "text";
};

const std::vector<std::string> kBoundNames{"sperner", "katona", "thm14", "thm14-threshold", "thm210",
                                           "alpha3", "beta3", "alpha7", "beta7", "semistar", "star",
                                           "ekr", "cor68", "thm73", "prop211"};

int cmd_bounds(const BoundsArgs& a, std::ostream& out) {
  namespace b = shadowlab::bounds;
  Json params{{"name", a.name}};
  Json row;
  std::optional<ExactRatio> value;
  if (a.name == "sperner") {
    params.update({{"n", a.n}, {"k", a.k}, {"j", a.j}});
    value = b::sperner_ratio(a.n, a.k, a.j);
  } else if (a.name == "katona") {
    params.update({{"k", a.k}, {"t", a.t}, {"ell", a.ell}});
    value = b::intersecting_shadow_ratio(a.k, a.t, a.ell);
  } else if (a.name == "thm14") {
    params.update({{"k", a.k}, {"t", a.t}, {"j", a.j}});
    value = b::large_family_shadow_bound(a.k, a.t, a.j);
  } else if (a.name == "thm14-threshold") {
    params.update({{"k", a.k}, {"t", a.t}, {"j", a.j}});
    value = b::large_family_threshold(a.k, a.t, a.j);
  } else if (a.name == "thm210") {
    params.update({{"t", a.t}, {"w", a.w}, {"j", a.j}});
    value = b::width_shadow_ratio(a.t, a.w, a.j);
  } else if (a.name == "alpha3") {
    params.update({{"k", a.k}, {"t", a.t}, {"j", a.j}});
    value = b::full_width_gap(a.k, a.t, a.j);
  } else if (a.name == "beta3") {
    params.update({{"k", a.k}, {"t", a.t}, {"j", a.j}});
    value = b::outer_part_gain(a.k, a.t, a.j);
  } else if (a.name == "alpha7") {
    params.update({{"w", a.w}, {"k", a.k}, {"t", a.t}, {"j", a.j}});
    value = b::width_gap(a.w, a.k, a.t, a.j);
  } else if (a.name == "beta7") {
    params.update({{"w", a.w}, {"t", a.t}, {"j", a.j}});
    value = b::width_outer_gain(a.w, a.t, a.j);
  } else if (a.name == "semistar") {
    params.update({{"t", a.t}, {"j", a.j}});
    value = b::semistar_bound(a.t, a.j);
  } else if (a.name == "star") {
    params.update({{"t", a.t}, {"j", a.j}});
    value = b::star_bound(a.t, a.j);
  } else if (a.name == "ekr") {
    params.update({{"n", a.n}, {"k", a.k}, {"t", a.t}});
    value = ExactRatio(b::universal_size_bound(a.n, a.k, a.t));
  } else if (a.name == "cor68") {
    params.update({{"n", a.n}, {"k", a.k}, {"t", a.t}});
    value = ExactRatio(b::non_star_size_threshold(a.n, a.k, a.t));
  } else if (a.name == "thm73") {
    params.update({{"n", a.n}, {"k", a.k}, {"t", a.t}, {"w", a.w}, {"j", a.j}});
    value = b::width_size_threshold(a.n, a.k, a.t, a.w, a.j);
  } else if (a.name == "prop211") {
    params.update({{"t", a.t}, {"j", a.j}, {"h", a.h}, {"w", a.w}, {"r", a.r}});
    const auto [first, second] = b::width_ratio_monotonicity(a.t, a.j, a.h, a.w, a.r);
    if (a.format == "json") {
      out << envelope(params, Json::array({{{"first", first}, {"second", second}}})).dump(2) << '\n';
    } else {
      out << "first: " << tf(first) << '\n' << "second: " << tf(second) << '\n';
    }
    return kExitOk;
  } else {
    throw ContractViolation("unknown bound '" + a.name + "'");
  }
  if (a.format == "json") {
    row["value"] = value->to_string();
    if (a.decimal) row["approx"] = approx(*value);
    out << envelope(params, Json::array({row})).dump(2) << '\n';
  } else {
    out << value->to_string();
    if (a.decimal) out << "  (approx " << approx(*value) << ')';
    out << '\n';
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// verify

struct VerifyArgs {
  std::string id;
  verify::TheoremParams params;
  std::optional<std::uint64_t> seed;
  std::string format = "text";
  bool timing = false;
  std::string file;     // check this family instead of the default corpus
  bool assume = false;  // skip the hypothesis filter for --file
};

Json params_json(const verify::TheoremParams& p) {
  return Json{{"n", p.n}, {"k", p.k}, {"t", p.t}, {"j", p.j}, {"ell", p.ell},
              {"w", p.w}, {"samples", p.samples}, {"seed", p.seed}};
}

std::string witness_line(const Family& f) {
  std::string s;
  for (KSet m : f) {
    if (!s.empty()) s += ' ';
    s += m.to_string();
  }
  return s;
}

int cmd_verify(VerifyArgs a, std::ostream& out) {
  const auto id = verify::theorem_from_key(a.id);
  require(id.has_value(), "unknown theorem id '" + a.id + "'");
  a.params.seed = a.seed.value_or(verify::sampling_seed(0));
  require(!a.assume || !a.file.empty(), "--assume needs --file");
  verify::TheoremReport r;
  if (a.file.empty()) {
    r = verify::check_theorem(*id, a.params);
  } else {
    const Family f = read_family_file(a.file, a.params.k > 0 ? std::optional<int>(a.params.k) : std::nullopt);
    const auto mode = a.assume ? verify::HypothesisMode::Assume : verify::HypothesisMode::Filter;
    r = verify::check_theorem_on(*id, a.params, std::span<const Family>(&f, 1), mode);
  }

  if (a.format == "json") {
    Json row;
    row["theorem"] = a.id;
    row["verdict"] = std::string(verify::to_string(r.verdict));
    row["corpus"] = r.corpus;
    row["families_checked"] = r.families_checked;
    row["families_eligible"] = r.families_eligible;
    row["equality_cases"] = r.equality_cases;
    Json facts = Json::object();
    for (const auto& [key, value] : r.facts) facts[key] = value;
    row["facts"] = facts;
    row["notes"] = r.notes;
    if (r.witness) {
      Json w = Json::array();
      for (KSet m : *r.witness) w.push_back(m.elements());
      row["witness"] = w;
    }
    if (!r.detail.empty()) row["detail"] = r.detail;
    if (a.timing) row["runtime_ms"] = r.runtime_ms;
    out << envelope(params_json(a.params), Json::array({row})).dump(2) << '\n';
  } else {
    out << "theorem: " << a.id << '\n';
    out << "verdict: " << verify::to_string(r.verdict) << '\n';
    out << "corpus: " << r.corpus << '\n';
    out << "families_checked: " << r.families_checked << '\n';
    out << "families_eligible: " << r.families_eligible << '\n';
    out << "equality_cases: " << r.equality_cases << '\n';
    for (const auto& [key, value] : r.facts) out << key << ": " << value << '\n';
    for (const auto& note : r.notes) out << "note: " << note << '\n';
    if (r.witness && r.verdict == verify::Verdict::Counterexample) {
      out << "witness: " << witness_line(*r.witness) << '\n';
    }
    if (!r.detail.empty()) out << "detail: " << r.detail << '\n';
    if (a.timing) out << "runtime_ms: " << r.runtime_ms << '\n';
  }
  return r.verdict == verify::Verdict::Counterexample ? kExitCounterexample : kExitOk;
}

// ---------------------------------------------------------------------------
// oracle

struct OracleArgs {
  int n = 0, k = 0, t = 1, j = 1;
  std::string format = "csv";
};

int cmd_oracle(const OracleArgs& a, std::ostream& out) {
  const verify::MinShadowTable table = verify::min_shadow_table(a.n, a.k, a.t, a.j);
  if (a.format == "json") {
    Json rows = Json::array();
    for (const auto& row : table.rows) {
      Json w = Json::array();
      for (KSet m : row.witness) w.push_back(m.to_hex());
      rows.push_back({{"size", row.size}, {"min_shadow", row.min_shadow}, {"witness", w}});
    }
    out << envelope({{"n", a.n}, {"k", a.k}, {"t", a.t}, {"j", a.j}}, rows).dump(2) << '\n';
  } else if (a.format == "text") {
    for (const auto& row : table.rows) {
      out << row.size << " -> " << row.min_shadow << "  " << witness_line(row.witness) << '\n';
    }
  } else {
    out << verify::min_shadow_csv(table);
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// scan

struct ScanArgs {
  int k = 0, t = 0, j = 1;
  int s_min = 0, s_max = -1;
  int n_min = 0, n_max = 0;
  std::string format = "csv";
  bool decimal = false;
};

int cmd_scan(const ScanArgs& a, std::ostream& out) {
  const int s_max = a.s_max < 0 ? a.k - a.t - 2 : a.s_max;
  const int n_min = a.n_min == 0 ? 2 * a.k - a.t + 1 : a.n_min;
  const int n_max = a.n_max == 0 ? n_min + 20 : a.n_max;
  const verify::ScanReport report = verify::scan_example15(a.k, a.t, a.j, {a.s_min, s_max}, {n_min, n_max});
  if (a.format == "json") {
    Json rows = Json::array();
    for (const auto& r : report.rows) {
      Json row{{"k", r.k}, {"t", r.t}, {"j", r.j}, {"s", r.s}, {"n", r.n},
               {"size", r.family_size}, {"shadow_size", r.shadow_size}, {"ratio", r.ratio.to_string()},
               {"bound", r.bound.to_string()}, {"epsilon", r.epsilon.to_string()},
               {"shadow_upper", r.shadow_upper.str()}, {"layer_size", r.layer_size.str()},
               {"t_intersecting", r.t_intersecting}, {"above_layer", r.above_layer},
               {"beats_bound", r.beats_bound}};
      if (a.decimal) row["ratio_approx"] = approx(r.ratio);
      rows.push_back(row);
    }
    Json doc = envelope({{"k", a.k}, {"t", a.t}, {"j", a.j}, {"s_min", a.s_min}, {"s_max", s_max},
                         {"n_min", n_min}, {"n_max", n_max}},
                        rows);
    doc["meta"]["notes"] = report.notes;
    out << doc.dump(2) << '\n';
    return kExitOk;
  }
  out << "k,t,j,s,n,size,shadow_size,ratio,bound,epsilon,shadow_upper,layer_size,t_intersecting,"
         "above_layer,beats_bound";
  if (a.decimal) out << ",ratio_approx";
  out << '\n';
  for (const auto& r : report.rows) {
    out << r.k << ',' << r.t << ',' << r.j << ',' << r.s << ',' << r.n << ',' << r.family_size << ','
        << r.shadow_size << ',' << r.ratio << ',' << r.bound << ',' << r.epsilon << ',' << r.shadow_upper
        << ',' << r.layer_size << ',' << tf(r.t_intersecting) << ',' << tf(r.above_layer) << ','
        << tf(r.beats_bound);
    if (a.decimal) out << ',' << approx(r.ratio);
    out << '\n';
  }
  for (const auto& note : report.notes) out << "# " << note << '\n';
  return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Set-family shadows, intersecting families and exact bound checks", "shadowlab"};
  app.require_subcommand(1);
  app.set_help_flag("--help", "print this help message and exit");
  app.set_version_flag("--version", std::string(kVersion));

  FamilyArgs family;
  auto* family_cmd = app.add_subcommand("family", "print a named family, one set per line");
  family_cmd->add_option("kind", family.spec.kind, "frankl-h, star, hm, example15 or layer")
      ->required()
      ->check(CLI::IsMember(kKinds));
  add_family_options(family_cmd, family.spec);
  family_cmd->add_flag("--check", family.check, "report whether the family is t-intersecting");
  family_cmd->add_flag("--width", family.width, "report the width");
  family_cmd->add_flag("--base", family.base, "report base level counts");
  family_cmd->add_flag("--semistar", family.semistar, "report a semistar centre");

  AnalyzeArgs analyze;
  auto* analyze_cmd = app.add_subcommand("analyze", "shadow and structure report for a family");
  analyze_cmd->add_option("--file", analyze.file, "family file (one set per line)");
  analyze_cmd->add_option("--kind", analyze.spec.kind, "named family instead of a file")
      ->check(CLI::IsMember(kKinds));
  add_family_options(analyze_cmd, analyze.spec);
  analyze_cmd->add_option("--j", analyze.j, "shadow depth");
  analyze_cmd->add_option("--format", analyze.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  analyze_cmd->add_flag("--decimal", analyze.decimal, "add approximate decimal values");

  BoundsArgs bounds;
  auto* bounds_cmd = app.add_subcommand("bounds", "evaluate a closed-form bound exactly");
  bounds_cmd->add_option("name", bounds.name, "bound name")->required()->check(CLI::IsMember(kBoundNames));
  bounds_cmd->add_option("--n", bounds.n);
  bounds_cmd->add_option("--k", bounds.k);
  bounds_cmd->add_option("--t", bounds.t);
  bounds_cmd->add_option("--j", bounds.j);
  bounds_cmd->add_option("--l,--ell", bounds.ell);
  bounds_cmd->add_option("--w", bounds.w);
  bounds_cmd->add_option("--h", bounds.h);
  bounds_cmd->add_option("--r", bounds.r);
  bounds_cmd->add_flag("--decimal", bounds.decimal, "add an approximate decimal value");
  bounds_cmd->add_option("--format", bounds.format, "text or json")->check(CLI::IsMember({"text", "json"}));

  VerifyArgs verify_args;
  std::vector<std::string> theorem_keys;
  for (auto id : verify::all_theorems()) theorem_keys.emplace_back(verify::theorem_key(id));
  auto* verify_cmd = app.add_subcommand("verify", "check a statement on its default corpus");
  verify_cmd->add_option("theorem", verify_args.id, "statement id")->required()->check(CLI::IsMember(theorem_keys));
  verify_cmd->add_option("--n", verify_args.params.n);
  verify_cmd->add_option("--k", verify_args.params.k);
  verify_cmd->add_option("--t", verify_args.params.t);
  verify_cmd->add_option("--j", verify_args.params.j);
  verify_cmd->add_option("--l,--ell", verify_args.params.ell);
  verify_cmd->add_option("--w", verify_args.params.w);
  verify_cmd->add_option("--samples", verify_args.params.samples, "generated families per check");
  verify_cmd->add_option("--seed", verify_args.seed, "first sampling seed (default: SHADOWLAB_SEED or 0)");
  verify_cmd->add_option("--format", verify_args.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  verify_cmd->add_flag("--timing", verify_args.timing, "include the runtime (output is then not reproducible)");
  verify_cmd->add_option("--file", verify_args.file, "check the family in this file only");
  verify_cmd->add_flag("--assume", verify_args.assume, "with --file: take the hypothesis as given");

  OracleArgs oracle;
  auto* oracle_cmd = app.add_subcommand("oracle", "exhaustive minimum-shadow table");
  oracle_cmd->add_option("--n", oracle.n)->required();
  oracle_cmd->add_option("--k", oracle.k)->required();
  oracle_cmd->add_option("--t", oracle.t);
  oracle_cmd->add_option("--j", oracle.j);
  oracle_cmd->add_option("--format", oracle.format, "csv, json or text")
      ->check(CLI::IsMember({"csv", "json", "text"}));

  ScanArgs scan;
  auto* scan_cmd = app.add_subcommand("scan", "scan the two-part construction against the large-family bound");
  scan_cmd->add_option("--k", scan.k)->required();
  scan_cmd->add_option("--t", scan.t)->required();
  scan_cmd->add_option("--j", scan.j);
  scan_cmd->add_option("--s-min", scan.s_min);
  scan_cmd->add_option("--s-max", scan.s_max, "default k - t - 2");
  scan_cmd->add_option("--n-min", scan.n_min, "default 2k - t + 1");
  scan_cmd->add_option("--n-max", scan.n_max, "default n-min + 20");
  scan_cmd->add_option("--format", scan.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  scan_cmd->add_flag("--decimal", scan.decimal, "add an approximate ratio column");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (family_cmd->parsed()) return cmd_family(family, out);
    if (analyze_cmd->parsed()) {
      if (analyze.file.empty() && analyze.spec.kind.empty()) {
        throw ContractViolation("analyze needs --file or --kind");
      }
      return cmd_analyze(analyze, out);
    }
    if (bounds_cmd->parsed()) return cmd_bounds(bounds, out);
    if (verify_cmd->parsed()) return cmd_verify(verify_args, out);
    if (oracle_cmd->parsed()) return cmd_oracle(oracle, out);
    if (scan_cmd->parsed()) return cmd_scan(scan, out);
  } catch (const CapacityError& e) {
    err << "capacity error: " << e.what() << '\n';
    return kExitCapacity;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ContractViolation& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace shadowlab::cli
