#include "cm/cli.hpp"

#include "cm/encoders.hpp"
#include "cm/error.hpp"
#include "cm/generator.hpp"
#include "cm/knowledge_base.hpp"
#include "cm/measures.hpp"
#include "cm/mus.hpp"
#include "cm/mus_graph.hpp"
#include "cm/parallel.hpp"
#include "cm/postulates.hpp"
#include "cm/report.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace cm {

namespace {

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

KnowledgeBase load_kb(const std::string &path) {
  try {
    return parse_kb(read_file(path));
  } catch (const ParseError &e) {
    throw InputError(path + ": " + e.what());
  }
}

SetFamily load_family(const std::string &path) {
  try {
    return parse_family(read_file(path));
  } catch (const ParseError &e) {
    throw InputError(path + ": " + e.what());
  }
}

bool ends_with(const std::string &s, const std::string &suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

// Options shared by most subcommands.
struct Common {
  std::string out_path;
  bool plain = false;
  bool no_timing = false;
  std::string backend = "bnb";
  double timeout_s = 60;
  std::uint64_t max_oracle_calls = ConsistencyChecker::kDefaultCallLimit;

  MeasureOptions options() const {
    MeasureOptions o;
    o.backend = backend == "bruteforce" ? Backend::BruteForce : Backend::BranchBound;
    o.limits.max_oracle_calls = max_oracle_calls;
    o.time_limit = std::chrono::milliseconds(static_cast<long long>(timeout_s * 1000));
    o.workers = worker_count();
    return o;
  }
};

void add_output(CLI::App *cmd, Common &c) {
  cmd->add_option("--out", c.out_path, "Write the report to this file");
  cmd->add_flag("--plain", c.plain, "Plain text instead of JSON");
}

void add_solving(CLI::App *cmd, Common &c) {
  cmd->add_option("--backend", c.backend, "Closed-packing solver")
      ->check(CLI::IsMember({"bruteforce", "bnb"}));
  cmd->add_option("--timeout-s", c.timeout_s, "Time limit per packing solve, seconds")->check(CLI::PositiveNumber);
  cmd->add_option("--max-oracle-calls", c.max_oracle_calls, "SAT call cap for enumeration");
}

std::string ids_line(const IndexSet &s) {
  std::string line;
  for (int i : s) line += (line.empty() ? "" : " ") + std::to_string(i);
  return line;
}

Json set_list(const std::vector<IndexSet> &sets) {
  Json a = Json::array();
  for (const auto &s : sets) a.push_back(to_json(s));
  return a;
}

std::string dump(const Json &j) { return j.dump(2) + "\n"; }

struct BenchRow {
  std::string instance;
  std::size_t muses = 0;
  std::size_t i_d = 0;
  double time_ms = 0;
  bool timeout = false;
};

BenchRow bench_family(const std::string &name, const SetFamily &f, const MeasureOptions &o) {
  const auto start = std::chrono::steady_clock::now();
  const PackingSolution s =
      o.backend == Backend::BruteForce ? mcsp_bruteforce(f) : mcsp_branch_bound(f, {o.time_limit});
  const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return {name, f.size(), s.cardinality, ms, !s.optimal};
}

BenchRow bench_kb(const std::string &name, const KnowledgeBase &kb, MeasureOptions o) {
  const auto start = std::chrono::steady_clock::now();
  const MusSet muses = enumerate_muses(kb, o.limits);
  o.workers = 1;
  const DistributionIndex d = distribution_index(kb, muses, o);
  const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return {name, muses.size(), d.value, ms, !d.optimal};
}

std::vector<GenParams> parse_sizes(const std::string &spec, std::uint64_t seed) {
  std::vector<GenParams> out;
  std::istringstream in(spec);
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto x = item.find('x');
    if (x == std::string::npos) throw InputError("size '" + item + "' is not of the form MxN");
    GenParams p;
    try {
      p.m = std::stoi(item.substr(0, x));
      p.n = std::stoi(item.substr(x + 1));
    } catch (const std::exception &) {
      throw InputError("size '" + item + "' is not of the form MxN");
    }
    p.seed = seed;
    out.push_back(p);
  }
  return out;
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  CLI::App app{"Inconsistency measures over MUS decompositions", "conflict-metrics"};
  app.require_subcommand(1, 1);
  Common c;

  std::string kb_path, family_path, mus_path, solution_path, measures = "all", format;
  std::vector<std::string> inputs;
  bool from_kb = false, kb_mode = false;
  GenParams gen;
  int random_count = 0, kb_vars = 4, kb_formulas = 5;
  std::string sizes = "10x8,15x10,20x10,50x20";

  auto *muses_cmd = app.add_subcommand("muses", "Enumerate minimal inconsistent subsets");
  muses_cmd->add_option("kb", kb_path, "Knowledge base file")->required();
  add_output(muses_cmd, c);
  muses_cmd->add_option("--max-oracle-calls", c.max_oracle_calls, "SAT call cap for enumeration");

  auto *msses_cmd = app.add_subcommand("msses", "Enumerate maximal consistent subsets");
  msses_cmd->add_option("kb", kb_path, "Knowledge base file")->required();
  add_output(msses_cmd, c);
  msses_cmd->add_option("--max-oracle-calls", c.max_oracle_calls, "SAT call cap for enumeration");

  auto *graph_cmd = app.add_subcommand("graph", "Print the MUS-graph");
  graph_cmd->add_option("kb", kb_path, "Knowledge base file")->required();
  add_output(graph_cmd, c);
  graph_cmd->add_option("--max-oracle-calls", c.max_oracle_calls, "SAT call cap for enumeration");

  auto *decompose_cmd = app.add_subcommand("decompose", "MUS-decomposition and distributable decomposition");
  decompose_cmd->add_option("kb", kb_path, "Knowledge base file")->required();
  add_output(decompose_cmd, c);
  add_solving(decompose_cmd, c);

  auto *measure_cmd = app.add_subcommand("measure", "Compute inconsistency measures");
  measure_cmd->add_option("kb", kb_path, "Knowledge base file")->required();
  measure_cmd->add_option("--measure", measures, "all, or a comma list of i_mi,i_m,i_m_prime,delta_hs,i_d");
  measure_cmd->add_option("--mus-file", mus_path, "Use this MUS list instead of enumerating");
  measure_cmd->add_flag("--no-timing", c.no_timing, "Leave timings out of the report");
  add_output(measure_cmd, c);
  add_solving(measure_cmd, c);

  auto *encode_cmd = app.add_subcommand("encode", "Write the closed-packing problem as LP or WCNF");
  encode_cmd->add_option("input", family_path, "Set family file (or KB with --from-kb)")->required();
  encode_cmd->add_option("--format", format, "lp or wcnf")->required()->check(CLI::IsMember({"lp", "wcnf"}));
  encode_cmd->add_flag("--from-kb", from_kb, "Input is a KB; encode its MUS family");
  encode_cmd->add_option("--out", c.out_path, "Output file");

  auto *check_cmd = app.add_subcommand("check-solution", "Read a solver's answer to an encoding");
  check_cmd->add_option("family", family_path, "Set family file")->required();
  check_cmd->add_option("solution", solution_path, "Solver output")->required();
  check_cmd->add_option("--format", format, "lp or wcnf")->required()->check(CLI::IsMember({"lp", "wcnf"}));
  check_cmd->add_option("--out", c.out_path, "Output file");

  auto *generate_cmd = app.add_subcommand("generate", "Generate a random set family or KB");
  generate_cmd->add_option("--m", gen.m, "Number of sets")->check(CLI::NonNegativeNumber);
  generate_cmd->add_option("--n", gen.n, "Number of elements")->check(CLI::NonNegativeNumber);
  generate_cmd->add_option("--min-size", gen.min_size, "Smallest set size");
  generate_cmd->add_option("--max-size", gen.max_size, "Largest set size");
  generate_cmd->add_option("--seed", gen.seed, "Random seed");
  generate_cmd->add_flag("--kb", kb_mode, "Generate a random knowledge base instead");
  generate_cmd->add_option("--vars", kb_vars, "Variables in a generated KB")->check(CLI::Range(1, 8));
  generate_cmd->add_option("--formulas", kb_formulas, "Formulas in a generated KB")->check(CLI::Range(0, 12));
  generate_cmd->add_option("--out", c.out_path, "Output file");

  auto *import_cmd = app.add_subcommand("import-muses", "Validate a MUS list produced elsewhere");
  import_cmd->add_option("kb", kb_path, "Knowledge base file")->required();
  import_cmd->add_option("mus-file", mus_path, "One MUS per line, 1-based indices")->required();
  add_output(import_cmd, c);

  auto *postulates_cmd = app.add_subcommand("check-postulates", "Search for postulate counterexamples");
  postulates_cmd->add_option("kbs", inputs, "Knowledge base files, checked as a family in order");
  postulates_cmd->add_option("--measure", measures, "One of i_mi,i_m,i_m_prime,delta_hs,i_d")->required();
  postulates_cmd->add_option("--random", random_count, "Add this many generated KBs")->check(CLI::NonNegativeNumber);
  postulates_cmd->add_option("--seed", gen.seed, "Seed for generated KBs");
  postulates_cmd->add_option("--vars", kb_vars, "Variables per generated KB")->check(CLI::Range(1, 8));
  postulates_cmd->add_option("--formulas", kb_formulas, "Formulas per generated KB")->check(CLI::Range(0, 12));
  add_output(postulates_cmd, c);

  auto *bench_cmd = app.add_subcommand("bench", "Distribution index over a batch of instances");
  bench_cmd->add_option("inputs", inputs, "Set family files, or KB files ending in .kb");
  bench_cmd->add_option("--sizes", sizes, "Generated families when no inputs are given, as MxN,...");
  bench_cmd->add_option("--seed", gen.seed, "Seed for generated families");
  bench_cmd->add_flag("--no-timing", c.no_timing, "Leave timings out of the report");
  add_output(bench_cmd, c);
  add_solving(bench_cmd, c);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError &e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }

  std::ostringstream report;
  try {
    const MeasureOptions options = c.options();
    if (muses_cmd->parsed() || msses_cmd->parsed()) {
      const KnowledgeBase kb = load_kb(kb_path);
      const Enumeration e = enumerate(kb, options.limits);
      const auto &sets = muses_cmd->parsed() ? e.muses.muses : e.msses.msses;
      if (c.plain)
        for (const auto &s : sets) report << ids_line(s) << "\n";
      else
        report << dump({{"count", sets.size()}, {muses_cmd->parsed() ? "muses" : "msses", set_list(sets)}});
    } else if (graph_cmd->parsed()) {
      const KnowledgeBase kb = load_kb(kb_path);
      const MusSet muses = enumerate_muses(kb, options.limits);
      const MusGraph g = build_mus_graph(muses);
      if (c.plain) {
        report << write_graph(g);
      } else {
        Json edges = Json::array();
        for (const auto &[a, b] : g.edges()) edges.push_back({a + 1, b + 1});
        report << dump({{"muses", set_list(muses.muses)}, {"edges", edges}});
      }
    } else if (decompose_cmd->parsed()) {
      const KnowledgeBase kb = load_kb(kb_path);
      const MusSet muses = enumerate_muses(kb, options.limits);
      const Decomposition dec = mus_decomposition(kb, muses);
      const PartialMusDecomposition dist = distributable_decomposition(kb, muses, options);
      const RepairReport repair = repair_merge_check(kb, muses, dist);
      if (c.plain) {
        for (std::size_t i = 0; i < dec.components.size(); ++i)
          report << "component " << i + 1 << ": " << ids_line(dec.components[i].formulas) << "\n";
        report << "free: " << ids_line(dec.free) << "\n";
        for (std::size_t i = 0; i < dist.groups.size(); ++i)
          report << "group " << i + 1 << ": " << ids_line(dist.groups[i]) << "\n";
        report << "repaired groups consistent: " << (repair.repaired_groups_consistent ? "yes" : "no") << "\n";
        report << "with residue consistent: " << (repair.with_residue_consistent ? "yes" : "no") << "\n";
      } else {
        Json j = to_json(dec);
        j["distributable"] = to_json(dist);
        j["repair"] = to_json(repair);
        report << dump(j);
      }
    } else if (measure_cmd->parsed()) {
      const KnowledgeBase kb = load_kb(kb_path);
      std::set<Measure> selection;
      try {
        selection = parse_measure_selection(measures);
      } catch (const std::invalid_argument &e) {
        throw InputError(e.what());
      }
      std::optional<MusSet> given;
      if (!mus_path.empty()) {
        MusImport imported = import_mus_list(kb, read_file(mus_path));
        if (!imported.ok()) {
          const auto &issue = imported.issues.front();
          throw InputError(mus_path + ": line " + std::to_string(issue.line) + ": " + issue.message);
        }
        given = std::move(imported.muses);
      }
      const MeasureReport r = compute_measures(kb, selection, options, given ? &*given : nullptr);
      report << (c.plain ? plain_table(r, !c.no_timing) : dump(to_json(r, !c.no_timing)));
    } else if (encode_cmd->parsed()) {
      SetFamily f;
      if (from_kb) {
        const KnowledgeBase kb = load_kb(family_path);
        f = mus_family(kb, enumerate_muses(kb, options.limits));
      } else {
        f = load_family(family_path);
      }
      report << (format == "lp" ? write_lp(encode_ilp(f)) : write_wcnf(encode_mincost_sat(f)));
    } else if (check_cmd->parsed()) {
      const SetFamily f = load_family(family_path);
      const std::string text = read_file(solution_path);
      ImportedSolution s;
      try {
        s = format == "lp" ? import_lp_solution(f, text) : import_wcnf_solution(f, text);
      } catch (const ParseError &e) {
        throw InputError(solution_path + ": " + e.what());
      }
      report << dump({{"selected", to_json(s.packing.selected)},
                      {"cardinality", s.packing.cardinality},
                      {"packing", is_set_packing(f, s.packing.selected)},
                      {"closed", s.closed}});
    } else if (generate_cmd->parsed()) {
      try {
        report << (kb_mode ? write_kb(generate_random_kb(kb_vars, kb_formulas, gen.seed))
                           : "# " + family_name(gen) + "\n" + write_family(generate_set_family(gen)));
      } catch (const std::invalid_argument &e) {
        throw InputError(e.what());
      }
    } else if (import_cmd->parsed()) {
      const KnowledgeBase kb = load_kb(kb_path);
      const MusImport imported = import_mus_list(kb, read_file(mus_path));
      if (c.plain) {
        report << write_mus_list(imported.muses);
        for (const auto &i : imported.issues) err << mus_path << ": line " << i.line << ": " << i.message << "\n";
      } else {
        Json issues = Json::array();
        for (const auto &i : imported.issues) issues.push_back({{"line", i.line}, {"message", i.message}});
        report << dump({{"muses", set_list(imported.muses.muses)}, {"issues", issues}, {"ok", imported.ok()}});
      }
      if (!imported.ok()) {
        out << report.str();
        return kExitInputError;
      }
    } else if (postulates_cmd->parsed()) {
      Measure m;
      try {
        m = parse_measure(measures);
      } catch (const std::invalid_argument &e) {
        throw InputError(e.what());
      }
      std::vector<KnowledgeBase> family;
      for (const auto &p : inputs) family.push_back(load_kb(p));
      for (int i = 0; i < random_count; ++i)
        family.push_back(generate_random_kb(kb_vars, kb_formulas, gen.seed + static_cast<std::uint64_t>(i)));
      const PostulateReport r = check_postulates(m, family);
      report << (c.plain ? format_postulate_report(r) : dump(to_json(r)));
    } else if (bench_cmd->parsed()) {
      std::vector<BenchRow> rows;
      if (inputs.empty()) {
        const auto params = parse_sizes(sizes, gen.seed);
        std::vector<SetFamily> families;
        for (const auto &p : params) {
          try {
            families.push_back(generate_set_family(p));
          } catch (const std::invalid_argument &e) {
            throw InputError(e.what());
          }
        }
        rows.resize(params.size());
        parallel_for(params.size(), options.workers,
                     [&](std::size_t i) { rows[i] = bench_family(family_name(params[i]), families[i], options); });
      } else {
        rows.resize(inputs.size());
        std::vector<std::optional<KnowledgeBase>> kbs(inputs.size());
        std::vector<SetFamily> families(inputs.size());
        for (std::size_t i = 0; i < inputs.size(); ++i) {
          if (ends_with(inputs[i], ".kb"))
            kbs[i] = load_kb(inputs[i]);
          else
            families[i] = load_family(inputs[i]);
        }
        parallel_for(inputs.size(), options.workers, [&](std::size_t i) {
          rows[i] = kbs[i] ? bench_kb(inputs[i], *kbs[i], options) : bench_family(inputs[i], families[i], options);
        });
      }
      if (c.plain) {
        report << std::left << std::setw(24) << "instance" << std::setw(8) << "#mus" << std::setw(6) << "i_d";
        if (!c.no_timing) report << std::setw(12) << "time_ms";
        report << "timeout\n";
        for (const auto &r : rows) {
          report << std::left << std::setw(24) << r.instance << std::setw(8) << r.muses << std::setw(6) << r.i_d;
          if (!c.no_timing) {
            std::ostringstream t;
            t << std::fixed << std::setprecision(3) << r.time_ms;
            report << std::setw(12) << t.str();
          }
          report << (r.timeout ? "yes" : "no") << "\n";
        }
      } else {
        Json list = Json::array();
        for (const auto &r : rows) {
          Json row = {{"instance", r.instance}, {"mus", r.muses}, {"i_d", r.i_d}};
          if (!c.no_timing) row["time_ms"] = r.time_ms;
          row["timeout"] = r.timeout;
          list.push_back(row);
        }
        report << dump({{"rows", list}});
      }
    }
  } catch (const ResourceLimitError &e) {
    err << "resource limit: " << e.what() << "\n";
    return kExitResourceLimit;
  } catch (const std::exception &e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }

  if (c.out_path.empty()) {
    out << report.str();
  } else {
    std::ofstream file(c.out_path, std::ios::binary);
    file << report.str();
    if (!file) {
      err << "error: cannot write '" << c.out_path << "'\n";
      return kExitInputError;
    }
  }
  return kExitOk;
}

} // namespace cm
