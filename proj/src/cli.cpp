#include "raag/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

#include "raag/automorphism.hpp"
#include "raag/bounds.hpp"
#include "raag/error.hpp"
#include "raag/graph_io.hpp"
#include "raag/report.hpp"
#include "raag/structure.hpp"
#include "raag/verify.hpp"
#include "raag/word.hpp"

namespace fs = std::filesystem;

namespace raag {

namespace {

std::size_t max_sym_vertices() {
  if (const char* env = std::getenv("RAAG_MAX_SYM_VERTICES")) {
    try {
      return static_cast<std::size_t>(std::stoul(env));
    } catch (const std::exception&) {
      throw ParseError(std::string("RAAG_MAX_SYM_VERTICES is not a number: ") + env);
    }
  }
  return 16;
}

struct Source {
  std::string path;
  std::string family;

  ParsedGraph load() const {
    if (!family.empty()) {
      if (!path.empty()) throw ParseError("give either a graph file or --family, not both");
      return {make_family(family), {}};
    }
    if (path.empty()) throw ParseError("no graph given (pass a file or --family)");
    return load_graph(path);
  }
};

void add_source(CLI::App* cmd, Source& src, bool positional = true) {
  if (positional) cmd->add_option("graph", src.path, "graph file (edge list or JSON)");
  cmd->add_option("--family", src.family, "built-in graph: path:n, cycle:n, nmtree:n,m, spider:k, join:n,m, overlap:n,m");
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string join_names(const SimplicialGraph& g, const VertexSet& s) {
  std::string out;
  for (Vertex v : s) out += (out.empty() ? "" : " ") + g.name(v);
  return out.empty() ? "-" : out;
}

Json bare_report(const ParsedGraph& parsed, const std::vector<CheckResult>& checks) {
  const auto& g = *parsed.graph;
  return {
      {"graph", graph_json(g)},
      {"validation", validation_json(validate(g), g)},
      {"structure", nullptr},
      {"generators", nullptr},
      {"bounds", nullptr},
      {"verifications", checks_json(checks)},
      {"warnings", parsed.warnings},
  };
}

void print_validation(std::ostream& out, const ParsedGraph& parsed) {
  const auto& g = *parsed.graph;
  auto v = validate(g);
  out << "graph: " << g.vertex_count() << " vertices, " << g.edge_count() << " edges\n"
      << "connected: " << yes_no(v.connected) << "\n"
      << "triangle_free: " << yes_no(v.triangle_free) << "\n"
      << "star: " << (v.is_star ? "yes (centre " + g.name(*v.star_center) + ")" : std::string("no")) << "\n"
      << "admissible: " << yes_no(v.admissible) << "\n";
  for (const auto& w : parsed.warnings) out << "warning: " << w << "\n";
}

void print_checks(std::ostream& out, const std::vector<CheckResult>& checks) {
  for (const auto& c : checks) out << (c.pass ? "PASS " : "FAIL ") << c.name << ": " << c.detail << "\n";
  auto failed = std::count_if(checks.begin(), checks.end(), [](const CheckResult& c) { return !c.pass; });
  out << checks.size() << " checks, " << failed << " failed\n";
}

void print_analysis(std::ostream& out, const ParsedGraph& parsed, const Json& report) {
  print_validation(out, parsed);
  const auto& g = *parsed.graph;
  if (!validate(g).admissible) return;
  auto sr = structure_report(g);
  out << "V0: " << join_names(g, sr.v0) << "\n"
      << "cyclic: " << join_names(g, sr.cyclic) << "\n"
      << "separating: " << join_names(g, sr.separating) << "\n"
      << "W0: " << join_names(g, sr.w0) << "\n";
  const auto& gens = report.at("generators");
  out << "generators:";
  for (const auto& [kind, n] : gens.at("counts").items()) out << " " << kind << "=" << n.get<int>();
  out << "\n"
      << "K0 generators: " << gens.at("k0").size() << "\n";
  const auto& sym = gens.at("symmetries");
  if (sym.contains("skipped")) out << "symmetries: skipped (" << sym.at("skipped").get<std::string>() << ")\n";
  else
    out << "symmetries: |Sym| = " << sym.at("sym") << ", |Sym0| = " << sym.at("sym0") << ", |Q| = " << sym.at("q")
        << "\n";
  const auto& b = report.at("bounds");
  out << "rank_K0: " << b.at("rank_K0") << "\n"
      << "rank_KP: " << b.at("rank_KP") << "\n"
      << "rank_G: " << b.at("rank_G").dump() << "\n"
      << "vcd: " << b.at("vcd_lower") << " <= vcd <= " << b.at("vcd_upper_better") << " (HS bound "
      << b.at("vcd_upper_HS") << ")\n"
      << "vcd_exact: " << b.at("vcd_exact").dump() << "\n";
  if (!b.at("tree_bounds").is_null())
    out << "tree bounds: " << b.at("tree_bounds").at("lower") << " .. " << b.at("tree_bounds").at("upper") << "\n";
}

// ---- batch ----

struct BatchEntry {
  std::string name;
  std::string path;    // graph file, empty for families
  std::string family;  // family spec, empty for files
  fs::path report;
};

struct BatchRow {
  std::string name;
  std::optional<std::size_t> vertices;
  std::optional<std::size_t> edges;
  std::optional<int> lower;
  std::optional<int> upper;
  std::optional<int> exact;
  std::string status;
};

bool is_graph_file(const fs::path& p) {
  auto name = p.filename().string();
  return !name.empty() && name[0] != '.' && !name.ends_with(".report.json") && !name.ends_with(".tmp");
}

std::vector<BatchEntry> batch_entries(const fs::path& input) {
  std::vector<BatchEntry> out;
  if (fs::is_directory(input)) {
    std::vector<fs::path> files;
    for (const auto& e : fs::directory_iterator(input))
      if (e.is_regular_file() && is_graph_file(e.path())) files.push_back(e.path());
    std::sort(files.begin(), files.end());
    for (const auto& f : files)
      out.push_back({f.stem().string(), f.string(), "", f.parent_path() / (f.stem().string() + ".report.json")});
    return out;
  }
  std::ifstream in(input);
  if (!in) throw fs::filesystem_error("cannot open manifest", input, std::make_error_code(std::errc::no_such_file_or_directory));
  const fs::path base = input.parent_path();
  for (std::string line; std::getline(in, line);) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    line.erase(0, line.find_first_not_of(" \t\r"));
    line.erase(line.find_last_not_of(" \t\r") + 1);
    if (line.empty()) continue;
    if (line.starts_with("family:")) {
      std::string spec = line.substr(7);
      std::string name = spec;
      std::replace(name.begin(), name.end(), ':', '_');
      std::replace(name.begin(), name.end(), ',', '_');
      out.push_back({name, "", spec, base / (name + ".report.json")});
    } else {
      fs::path p = fs::path(line).is_absolute() ? fs::path(line) : base / line;
      out.push_back({p.stem().string(), p.string(), "", p.parent_path() / (p.stem().string() + ".report.json")});
    }
  }
  return out;
}

void write_atomically(const fs::path& target, const std::string& content) {
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw fs::filesystem_error("cannot write report", tmp, std::make_error_code(std::errc::permission_denied));
    f << content;
    if (!f.flush()) throw fs::filesystem_error("cannot write report", tmp, std::make_error_code(std::errc::io_error));
  }
  fs::rename(tmp, target);
}

BatchRow process_entry(const BatchEntry& entry, const AnalyzeOptions& options) {
  BatchRow row{entry.name, {}, {}, {}, {}, {}, "ok"};
  try {
    ParsedGraph parsed = entry.family.empty() ? load_graph(entry.path) : ParsedGraph{make_family(entry.family), {}};
    row.vertices = parsed.graph->vertex_count();
    row.edges = parsed.graph->edge_count();
    Json report = analyze_report(parsed, options);
    if (report.at("bounds").is_null()) {
      row.status = "rejected";
    } else {
      const auto& b = report.at("bounds");
      row.lower = b.at("vcd_lower").get<int>();
      row.upper = std::min(b.at("vcd_upper_HS").get<int>(), b.at("vcd_upper_better").get<int>());
      if (!b.at("vcd_exact").is_null()) row.exact = b.at("vcd_exact").get<int>();
    }
    write_atomically(entry.report, canonical(report));
  } catch (const ParseError& e) {
    row.status = std::string("parse error: ") + e.what();
  } catch (const fs::filesystem_error& e) {
    row.status = std::string("io error: ") + e.what();
  } catch (const std::exception& e) {
    row.status = std::string("error: ") + e.what();
  }
  return row;
}

std::vector<BatchRow> run_batch(const std::vector<BatchEntry>& entries, const AnalyzeOptions& options,
                                std::size_t jobs) {
  std::vector<BatchRow> rows(entries.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < entries.size();) rows[i] = process_entry(entries[i], options);
  };
  jobs = std::max<std::size_t>(1, std::min(jobs, entries.size()));
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return rows;
}

template <class T>
std::string cell(const std::optional<T>& v) {
  return v ? std::to_string(*v) : "-";
}

void print_batch(std::ostream& out, const std::vector<BatchRow>& rows) {
  std::size_t width = 4;
  for (const auto& r : rows) width = std::max(width, r.name.size());
  out << std::left << std::setw(static_cast<int>(width)) << "name" << std::right << std::setw(5) << "|V|"
      << std::setw(5) << "|E|" << std::setw(7) << "lower" << std::setw(7) << "upper" << std::setw(7) << "exact"
      << "  status\n";
  for (const auto& r : rows) {
    out << std::left << std::setw(static_cast<int>(width)) << r.name << std::right << std::setw(5)
        << cell(r.vertices) << std::setw(5) << cell(r.edges) << std::setw(7) << cell(r.lower) << std::setw(7)
        << cell(r.upper) << std::setw(7) << (r.exact ? "yes" : (r.lower ? "no" : "-")) << "  " << r.status
        << "\n";
  }
}

Json batch_json(const std::vector<BatchRow>& rows) {
  Json out = Json::array();
  auto opt = [](const auto& v) { return v ? Json(*v) : Json(nullptr); };
  for (const auto& r : rows) {
    out.push_back({{"name", r.name},
                   {"vertices", opt(r.vertices)},
                   {"edges", opt(r.edges)},
                   {"lower", opt(r.lower)},
                   {"upper", opt(r.upper)},
                   {"exact", opt(r.exact)},
                   {"status", r.status}});
  }
  return out;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Right-angled Artin groups over triangle-free graphs: structure, automorphisms and vcd bounds", "raag"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "text";
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}));

  Source validate_src;
  auto* validate_cmd = app.add_subcommand("validate", "check connectivity, triangle-freeness and admissibility");
  add_source(validate_cmd, validate_src);

  Source analyze_src;
  bool skip_symmetries = false;
  auto* analyze_cmd = app.add_subcommand("analyze", "structure, generators and vcd bounds");
  add_source(analyze_cmd, analyze_src);
  analyze_cmd->add_flag("--skip-symmetries", skip_symmetries, "do not enumerate graph symmetries");

  Source verify_src;
  std::string suite;
  std::vector<std::string> aut_literals;
  WordSuiteOptions word_options;
  auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
  verify_cmd->add_option("suite", suite, "kernel | commute | joins | symmetries | words")
      ->required()
      ->check(CLI::IsMember({"kernel", "commute", "joins", "symmetries", "words"}));
  add_source(verify_cmd, verify_src);
  verify_cmd->add_option("--aut", aut_literals, "automorphism literal for the joins suite (repeatable)");
  verify_cmd->add_option("--max-len", word_options.max_len, "longest random word (words suite)");
  verify_cmd->add_option("--seed", word_options.seed, "random seed (words suite)");
  verify_cmd->add_option("--pairs", word_options.pairs, "number of word pairs (words suite)");

  Source reduce_src;
  std::vector<std::string> reduce_args;
  bool show_steps = false;
  auto* reduce_cmd = app.add_subcommand("reduce", "print the normal form of a word");
  reduce_cmd->add_option("args", reduce_args, "[graph] word");
  add_source(reduce_cmd, reduce_src, false);
  reduce_cmd->add_flag("--show-steps", show_steps, "print each cancellation");

  Source apply_src;
  std::vector<std::string> apply_args;
  auto* apply_cmd = app.add_subcommand("apply", "apply an automorphism literal to a word");
  apply_cmd->add_option("args", apply_args, "[graph] automorphism word");
  add_source(apply_cmd, apply_src, false);

  std::string batch_input;
  std::size_t jobs = std::max(1u, std::thread::hardware_concurrency());
  auto* batch_cmd = app.add_subcommand("batch", "analyze every graph of a directory or manifest");
  batch_cmd->add_option("input", batch_input, "directory or manifest file")->required();
  batch_cmd->add_option("--jobs", jobs, "worker threads");

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kParse;
  }

  const bool json = format == "json";
  AnalyzeOptions options{skip_symmetries, 16};

  try {
    options.max_sym_vertices = max_sym_vertices();

    if (*validate_cmd) {
      auto parsed = validate_src.load();
      if (json) out << canonical(bare_report(parsed, {}));
      else print_validation(out, parsed);
      return validate(*parsed.graph).admissible ? kOk : kFail;
    }

    if (*analyze_cmd) {
      auto parsed = analyze_src.load();
      Json report = analyze_report(parsed, options);
      if (json) out << canonical(report);
      else print_analysis(out, parsed, report);
      return report.at("bounds").is_null() ? kFail : kOk;
    }

    if (*verify_cmd) {
      auto parsed = verify_src.load();
      const auto& g = parsed.graph;
      if (suite != "words") require_admissible(*g);
      std::vector<CheckResult> checks;
      if (suite == "joins" && !aut_literals.empty()) {
        std::vector<Automorphism> autos;
        for (const auto& lit : aut_literals) autos.push_back(parse_automorphism(g, lit));
        checks = verify_joins(g, autos);
      } else {
        checks = run_suite(g, suite, word_options, options.max_sym_vertices);
      }
      if (json) out << canonical(bare_report(parsed, checks));
      else print_checks(out, checks);
      return all_pass(checks) ? kOk : kFail;
    }

    if (*reduce_cmd) {
      if (!reduce_src.family.empty()) reduce_args.insert(reduce_args.begin(), "");
      if (reduce_args.size() == 1) reduce_args.emplace_back("");
      if (reduce_args.size() != 2) throw ParseError("usage: reduce <graph> <word> or reduce --family F <word>");
      reduce_src.path = reduce_args[0];
      auto parsed = reduce_src.load();
      Word w = parse_word(parsed.graph, reduce_args[1]);
      std::vector<ReductionStep> steps;
      Word nf = normal_form(reduce(w, show_steps ? &steps : nullptr));
      if (json) {
        Json j = {{"input", to_string(w)}, {"normal_form", to_string(nf)}};
        if (show_steps) {
          Json s = Json::array();
          for (const auto& st : steps)
            s.push_back({{"left", st.left}, {"right", st.right}, {"letter", to_string(Word(parsed.graph, {st.letter}))}});
          j["steps"] = s;
        }
        out << canonical(j);
      } else {
        for (const auto& st : steps)
          out << "cancel " << to_string(Word(parsed.graph, {st.letter})) << " at " << st.left << " with "
              << to_string(Word(parsed.graph, {st.letter.inverse()})) << " at " << st.right << "\n";
        out << to_string(nf) << "\n";
      }
      return kOk;
    }

    if (*apply_cmd) {
      if (!apply_src.family.empty()) apply_args.insert(apply_args.begin(), "");
      if (apply_args.size() == 2) apply_args.emplace_back("");
      if (apply_args.size() != 3)
        throw ParseError("usage: apply <graph> <automorphism> <word> or apply --family F <automorphism> <word>");
      apply_src.path = apply_args[0];
      auto parsed = apply_src.load();
      auto phi = parse_automorphism(parsed.graph, apply_args[1]);
      Word result = apply(phi, parse_word(parsed.graph, apply_args[2]));
      if (json) out << canonical({{"automorphism", describe(phi)}, {"result", to_string(result)}});
      else out << to_string(result) << "\n";
      return kOk;
    }

    if (*batch_cmd) {
      auto entries = batch_entries(batch_input);
      auto rows = run_batch(entries, options, jobs);
      if (json) out << canonical(batch_json(rows));
      else print_batch(out, rows);
      bool errors = std::any_of(rows.begin(), rows.end(),
                                [](const BatchRow& r) { return r.status != "ok" && r.status != "rejected"; });
      return errors ? kFail : kOk;
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const fs::filesystem_error& e) {
    err << "io error: " << e.what() << "\n";
    return kIo;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kFail;
  }
  return kFail;
}

}  // namespace raag
