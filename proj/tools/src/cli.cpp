#include "cli.hpp"

#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "report.hpp"

namespace sponge::cli {

namespace {

struct Options {
  std::string subcommand;
  std::vector<std::string> paths;
  std::string out_dir;
  std::string format = "csv";
  unsigned threads = 1;
  std::uint64_t budget = Limits{}.box_budget;

  int kmax = 0;
  int depth = 3;
  int cap = 3;
  std::optional<int> extra_depth;
  std::string property;
  Caps caps;

  Limits limits() const { return Limits{budget, threads}; }
};

struct Output {
  Json report;
  std::string table_name;  // empty when the command has no table
  std::string table;
};

using Row = std::vector<Json>;

std::string cell_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "";
  return v.dump();
}

std::string render_table(const std::vector<std::string>& columns, const std::vector<Row>& rows,
                         const std::string& format) {
  std::ostringstream s;
  if (format == "csv") {
    for (std::size_t i = 0; i < columns.size(); ++i) s << (i ? "," : "") << columns[i];
    s << '\n';
    for (const auto& r : rows) {
      for (std::size_t i = 0; i < r.size(); ++i) s << (i ? "," : "") << cell_text(r[i]);
      s << '\n';
    }
  } else {
    for (const auto& r : rows) {
      Json obj = Json::object();
      for (std::size_t i = 0; i < columns.size(); ++i) obj[columns[i]] = r[i];
      s << obj.dump() << '\n';
    }
  }
  return s.str();
}

Json config_json(const Options& o) {
  Json caps = Json::object();
  const auto& s = o.subcommand;
  if (s == "analyze" || s == "hprofile" || s == "gapseq") caps["kmax"] = o.kmax;
  if (s == "islands") caps["depth"] = o.depth;
  if (s == "td") caps["cap"] = o.cap;
  if (s == "hprofile") caps["extra_depth"] = o.extra_depth ? Json(*o.extra_depth) : Json(nullptr);
  if (s == "classify" || s == "compare") {
    caps["island_cap"] = o.caps.island_cap;
    caps["xi_cap"] = o.caps.xi_cap;
    caps["corroboration_kmax"] = o.caps.corroboration_kmax;
  }
  if (s == "compare") caps["gap_kmax"] = o.caps.gap_kmax;
  if (s == "classify") caps["property"] = o.property;
  return Json{{"subcommand", s},
              {"inputs", o.paths},
              {"caps", std::move(caps)},
              {"budget", o.budget},
              {"format", o.format},
              {"out", o.out_dir.empty() ? Json(nullptr) : Json(o.out_dir)}};
}

Output cmd_analyze(const Options& o) {
  const SpongeSpec spec = read_spec_file(o.paths.at(0));
  const Limits limits = o.limits();
  Json reduction = nullptr;
  try {
    reduction = reduction_to_json(reduce_degenerate(spec));
  } catch (const Error& e) {
    if (e.code() != ErrorCode::AllAxesDegenerate) throw;
  }
  std::vector<Row> rows;
  Json census = Json::array();
  for (int k = 1; k <= o.kmax; ++k) {
    const BoxSet p = pillars(spec, k, limits);
    const ComponentSummary cs = components(p, limits);
    rows.push_back({k, p.size(), cs.component_count, cs.island_count, cs.max_size});
    census.push_back(Json{{"level", k},
                          {"pillars", p.size()},
                          {"components", cs.component_count},
                          {"islands", cs.island_count},
                          {"largest", cs.max_size}});
  }
  Output out;
  out.report = Json{{"spec", spec_to_json(spec)},
                    {"kind", std::string(to_string(spec.kind()))},
                    {"dimension", dimension_to_json(box_dimension(spec))},
                    {"degenerated", is_degenerated(spec)},
                    {"full_product", is_full_product(spec)},
                    {"reduction", std::move(reduction)},
                    {"census", std::move(census)}};
  out.table_name = "census";
  out.table = render_table({"level", "pillars", "components", "islands", "largest"}, rows, o.format);
  return out;
}

Output cmd_islands(const Options& o) {
  const SpongeSpec spec = read_spec_file(o.paths.at(0));
  std::vector<Row> rows;
  Json levels = Json::array();
  Json first = nullptr;
  Json witness = nullptr;
  for (int k = 1; k <= o.depth; ++k) {
    IslandReport r = islands(spec, k, o.limits());
    rows.push_back({k, r.island_count});
    levels.push_back(Json{{"level", k}, {"islands", r.island_count}});
    if (first.is_null() && r.island_count > 0) {
      first = k;
      witness = boxes_to_json(*r.witness);
    }
  }
  Output out;
  out.report = Json{{"spec", spec_to_json(spec)},
                    {"levels", std::move(levels)},
                    {"first_island_level", first},
                    {"first_island", witness}};
  out.table_name = "islands";
  out.table = render_table({"level", "islands"}, rows, o.format);
  return out;
}

Output cmd_td(const Options& o) {
  const SpongeSpec spec = read_spec_file(o.paths.at(0));
  Output out;
  out.report = Json{{"spec", spec_to_json(spec)},
                    {"question", "is_totally_disconnected"},
                    {"decision", decision_to_json(is_totally_disconnected(spec, o.cap, o.limits()))}};
  return out;
}

Output cmd_hprofile(const Options& o) {
  const SpongeSpec spec = read_spec_file(o.paths.at(0));
  const HProfile profile = h_profile(spec, o.kmax, o.extra_depth, o.limits());
  Json rows_json = Json::array();
  std::vector<Row> rows;
  for (const auto& r : profile.rows) {
    Json b = bracket_to_json(r.bracket);
    b["k"] = r.k;
    rows_json.push_back(std::move(b));
    rows.push_back({r.k, rational_to_json(r.bracket.delta), r.bracket.lo, r.bracket.hi, r.bracket.depth,
                    r.bracket.exact()});
  }
  Output out;
  out.report = Json{{"spec", spec_to_json(spec)},
                    {"top_base", profile.top_base},
                    {"rows", std::move(rows_json)},
                    {"exponent", profile.rows.size() >= 3 ? exponent_to_json(estimate_exponent(profile))
                                                          : Json(nullptr)}};
  out.table_name = "hprofile";
  if (o.format == "csv") {
    std::ostringstream s;
    write_profile_csv(s, profile);
    out.table = s.str();
  } else {
    out.table = render_table({"k", "delta", "lo", "hi", "depth", "exact"}, rows, o.format);
  }
  return out;
}

Output cmd_gapseq(const Options& o) {
  const SpongeSpec spec = read_spec_file(o.paths.at(0));
  const GapSequence seq = gap_sequence(spec, o.kmax, o.limits());
  std::vector<Row> rows;
  for (std::size_t i = 0; i < seq.entries.size(); ++i) {
    const auto& e = seq.entries[i];
    rows.push_back({i + 1, rational_to_json(e.delta2_lo), rational_to_json(e.delta2_hi), e.multiplicity,
                    e.h_at, e.resolved});
  }
  Json g = Json::array();
  for (std::size_t i = 1; i <= seq.resolved_length(); ++i) g.push_back(format_sqrt(*seq.g2(i)));
  Output out;
  out.report = Json{{"spec", spec_to_json(spec)}, {"summary", gap_summary_to_json(seq)}, {"resolved_gaps", g}};
  out.table_name = "gaps";
  if (o.format == "csv") {
    std::ostringstream s;
    write_gap_csv(s, seq);
    out.table = s.str();
  } else {
    out.table = render_table({"index", "delta2_lo", "delta2_hi", "multiplicity", "h_at", "resolved"}, rows,
                             o.format);
  }
  return out;
}

Output cmd_classify(const Options& o) {
  const SpongeSpec spec = read_spec_file(o.paths.at(0));
  Property property;
  try {
    property = parse_property(o.property);
  } catch (const Error&) {
    throw CLI::ValidationError("--property", "expected mpl or pd");
  }
  Output out;
  out.report = Json{{"spec", spec_to_json(spec)},
                    {"classification", classification_to_json(classify(spec, property, o.caps, o.limits()))}};
  return out;
}

Output cmd_compare(const Options& o) {
  const SpongeSpec a = read_spec_file(o.paths.at(0));
  const SpongeSpec b = read_spec_file(o.paths.at(1));
  const ComparisonReport r = compare(a, b, o.caps, o.limits());
  auto side = [](const std::vector<Classification>& cs) {
    Json arr = Json::array();
    for (const auto& c : cs) arr.push_back(classification_to_json(c));
    return arr;
  };
  auto gaps = [](const GapSequence& seq) {
    Json g = gap_summary_to_json(seq);
    Json values = Json::array();
    for (std::size_t i = 1; i <= seq.resolved_length(); ++i) values.push_back(format_sqrt(*seq.g2(i)));
    g["resolved_gaps"] = std::move(values);
    return g;
  };
  Output out;
  out.report = Json{{"specs", Json::array({spec_to_json(a), spec_to_json(b)})},
                    {"first", side(r.first)},
                    {"second", side(r.second)},
                    {"first_gaps", gaps(r.first_gaps)},
                    {"second_gaps", gaps(r.second_gaps)},
                    {"window", Json{{"indices", r.window.indices},
                                    {"min_ratio", r.window.min_ratio},
                                    {"max_ratio", r.window.max_ratio}}},
                    {"conclusion", std::string(to_string(r.conclusion))},
                    {"reasons", r.reasons}};
  return out;
}

// Every object carrying both "subject" and "verdict" is a decision; each one
// is re-verified, and classification verdicts must agree with their evidence.
struct CertCheck {
  std::string path;
  bool ok;
  std::string message;
};

void collect_checks(const Json& node, const std::string& path, const Limits& limits, const std::string& source,
                    std::vector<CertCheck>& checks) {
  if (node.is_object()) {
    if (node.contains("subject") && node.contains("verdict")) {
      try {
        const SpongeSpec subject = spec_from_json(node["subject"], source, path + ".subject");
        const Verdict verdict = verdict_from_json(node["verdict"], source, path + ".verdict");
        VerifyResult vr = verify_certificate(subject, verdict, limits);
        checks.push_back({path, vr.ok, vr.message});
      } catch (const InputError& e) {
        checks.push_back({path, false, e.what()});
      } catch (const Error& e) {
        if (e.code() == ErrorCode::BudgetExceeded || e.code() == ErrorCode::ArithmeticOverflow) throw;
        checks.push_back({path, false, e.what()});
      }
      return;
    }
    if (node.contains("evidence") && node.contains("verdict") && node["evidence"].is_array()) {
      const Json& top = node["verdict"];
      const Json& ev = node["evidence"];
      bool any_no = false, all_yes = !ev.empty(), listed = false;
      for (const auto& e : ev) {
        if (!e.is_object() || !e.contains("verdict")) continue;
        const Json& v = e["verdict"];
        any_no = any_no || v.value("answer", "") == "No";
        all_yes = all_yes && v.value("answer", "") == "Yes";
        listed = listed || v == top;
      }
      const std::string answer = top.is_object() ? top.value("answer", "") : "";
      bool ok;
      std::string message;
      if (ev.empty()) {
        ok = answer == "Unknown";
        message = ok ? "no evidence, verdict Unknown" : "definite verdict without evidence";
      } else {
        const std::string expected = any_no ? "No" : all_yes ? "Yes" : "Unknown";
        ok = listed && answer == expected;
        message = ok ? "verdict agrees with evidence" : "verdict does not follow from the evidence";
      }
      checks.push_back({path + ".verdict", ok, message});
    }
    for (const auto& [k, v] : node.items()) collect_checks(v, path + "." + k, limits, source, checks);
  } else if (node.is_array()) {
    for (std::size_t i = 0; i < node.size(); ++i) {
      collect_checks(node[i], path + "[" + std::to_string(i) + "]", limits, source, checks);
    }
  }
}

Output cmd_verify(const Options& o, int& code) {
  const std::string& path = o.paths.at(0);
  const Json doc = parse_json_text(read_text_file(path), path);
  std::vector<CertCheck> checks;
  collect_checks(doc, "$", o.limits(), path, checks);
  if (checks.empty()) throw InputError(path, 0, "", "report contains no certificates");
  bool all_ok = true;
  Json results = Json::array();
  std::vector<Row> rows;
  for (const auto& c : checks) {
    all_ok = all_ok && c.ok;
    results.push_back(Json{{"path", c.path}, {"ok", c.ok}, {"message", c.message}});
  }
  code = all_ok ? kOk : kCertificate;
  Output out;
  out.report = Json{{"checked", checks.size()}, {"ok", all_ok}, {"results", std::move(results)}};
  return out;
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::BudgetExceeded:
    case ErrorCode::DepthTooShallow:
    case ErrorCode::ArithmeticOverflow:
      return kResource;
    case ErrorCode::InvalidCertificate:
      return kCertificate;
    default:
      return kUsage;
  }
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw InputError(path.string(), 0, "", "cannot write file");
  f << text;
  if (!f) throw InputError(path.string(), 0, "", "write failed");
}

void emit(const Options& o, const Output& result, std::ostream& out) {
  Json report = result.report;
  report["config"] = config_json(o);
  const std::string report_text = report.dump(2) + "\n";
  if (!o.out_dir.empty()) {
    std::filesystem::create_directories(o.out_dir);
    write_file(std::filesystem::path(o.out_dir) / "report.json", report_text);
    if (!result.table_name.empty()) {
      write_file(std::filesystem::path(o.out_dir) / (result.table_name + "." + o.format), result.table);
    }
  }
  out << (result.table_name.empty() ? report_text : result.table);
}

void emit_error(const Options& o, const std::string& code, const std::string& message) {
  if (o.out_dir.empty()) return;
  try {
    Json report{{"error", {{"code", code}, {"message", message}}}, {"config", config_json(o)}};
    std::filesystem::create_directories(o.out_dir);
    write_file(std::filesystem::path(o.out_dir) / "report.json", report.dump(2) + "\n");
  } catch (...) {
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Analysis of self-affine Sierpinski sponges", "sponge"};
  app.require_subcommand(1, 1);
  app.fallthrough();
  app.add_option("--threads", o.threads, "worker threads (affects wall time only)")
      ->check(CLI::Range(1u, 1024u));
  app.add_option("--budget", o.budget, "maximum number of boxes or pairs per step")
      ->check(CLI::Range(std::uint64_t{1}, std::numeric_limits<std::uint64_t>::max()));
  app.add_option("--out", o.out_dir, "directory for report files");
  app.add_option("--format", o.format, "table format")->check(CLI::IsMember({"csv", "jsonl"}));

  auto spec_arg = [&](CLI::App* sub) { sub->add_option("spec", o.paths, "spec file")->required()->expected(1); };

  auto* analyze = app.add_subcommand("analyze", "dimension, degeneracy and level censuses");
  spec_arg(analyze);
  analyze->add_option("--kmax", o.kmax, "deepest level")->default_val(3)->check(CLI::PositiveNumber);

  auto* isl = app.add_subcommand("islands", "island counts for levels 1..depth");
  spec_arg(isl);
  isl->add_option("--depth", o.depth, "deepest level")->default_val(3)->check(CLI::PositiveNumber);

  auto* td = app.add_subcommand("td", "total disconnectedness decision");
  spec_arg(td);
  td->add_option("--cap", o.cap, "largest Xi level tried")->default_val(3)->check(CLI::PositiveNumber);

  auto* hp = app.add_subcommand("hprofile", "bracketed delta-component counts at delta = n_d^-k");
  spec_arg(hp);
  hp->add_option("--kmax", o.kmax, "deepest scale")->default_val(5)->check(CLI::PositiveNumber);
  hp->add_option("--extra-depth", o.extra_depth, "cover depth beyond k")->check(CLI::NonNegativeNumber);

  auto* gs = app.add_subcommand("gapseq", "gap sequence down to n_d^-(kmax+1)");
  spec_arg(gs);
  gs->add_option("--kmax", o.kmax, "deepest scale")->default_val(2)->check(CLI::PositiveNumber);

  auto caps_opts = [&](CLI::App* sub) {
    sub->add_option("--island-cap", o.caps.island_cap, "deepest island level searched")
        ->check(CLI::PositiveNumber);
    sub->add_option("--xi-cap", o.caps.xi_cap, "deepest Xi level tried")->check(CLI::PositiveNumber);
    sub->add_option("--kmax", o.caps.corroboration_kmax, "scales used for corroboration")
        ->check(CLI::PositiveNumber);
  };

  auto* cl = app.add_subcommand("classify", "Lipschitz-invariant classification");
  spec_arg(cl);
  cl->add_option("--property", o.property, "mpl or pd")->required()->check(
      CLI::IsMember({"mpl", "pd", "MaximalPowerLaw", "PerfectlyDisconnected"}));
  caps_opts(cl);

  auto* cmp = app.add_subcommand("compare", "Lipschitz non-equivalence test for two sponges");
  cmp->add_option("specs", o.paths, "two spec files")->required()->expected(2);
  caps_opts(cmp);
  cmp->add_option("--gap-kmax", o.caps.gap_kmax, "scales used for the gap windows")->check(CLI::PositiveNumber);

  auto* vc = app.add_subcommand("verify-cert", "re-check every certificate in a report");
  vc->add_option("report", o.paths, "report.json")->required()->expected(1);

  std::vector<std::string> argv_store{"sponge"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << e.what() << '\n';
      return kOk;
    }
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  for (auto* sub : app.get_subcommands()) {
    o.subcommand = sub->get_name();
    if (sub->get_name() == "classify") {
      if (o.property == "MaximalPowerLaw") o.property = "mpl";
      if (o.property == "PerfectlyDisconnected") o.property = "pd";
    }
  }

  try {
    int code = kOk;
    Output result;
    const auto& s = o.subcommand;
    if (s == "analyze") result = cmd_analyze(o);
    else if (s == "islands") result = cmd_islands(o);
    else if (s == "td") result = cmd_td(o);
    else if (s == "hprofile") result = cmd_hprofile(o);
    else if (s == "gapseq") result = cmd_gapseq(o);
    else if (s == "classify") result = cmd_classify(o);
    else if (s == "compare") result = cmd_compare(o);
    else result = cmd_verify(o, code);
    emit(o, result, out);
    return code;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    emit_error(o, "InputError", e.what());
    return kUsage;
  } catch (const CLI::ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    emit_error(o, std::string(to_string(e.code())), e.what());
    return exit_code_for(e.code());
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace sponge::cli
