#include "cli.hpp"

#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "penta/constructions.hpp"
#include "penta/counting.hpp"
#include "penta/enumeration.hpp"
#include "penta/errors.hpp"
#include "penta/graph_io.hpp"
#include "penta/parallel.hpp"
#include "penta/reports.hpp"
#include "penta/verification.hpp"

namespace penta::cli {

using nlohmann::json;

namespace {

struct RunConfig {
  std::string n;
  std::string family;
  std::string input;
  std::string out;
  std::string format;
  std::string suite = "all";
  int workers = 0;  // 0: available parallelism
  std::uint64_t seed = 42;
  int k = 5;
  std::size_t variants = 0;
  bool count = false;
  bool oracle = false;
  bool lemmas_only = false;
  bool json = false;
  bool allow_large = false;
  bool catalog = false;
};

int to_int(const std::string& text) {
  std::size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size()) throw UsageError("expected an integer, got '" + text + "'");
  return value;
}

// Sends payload to --out when given, otherwise to stdout.
void emit(const RunConfig& cfg, std::ostream& out, const std::string& payload) {
  if (cfg.out.empty()) {
    out << payload;
    return;
  }
  std::ofstream file(cfg.out, std::ios::binary);
  if (!file) throw UsageError("cannot open output file '" + cfg.out + "'");
  file << payload;
}

std::string read_input(const RunConfig& cfg, std::istream& in) {
  std::ostringstream buffer;
  if (cfg.input.empty() || cfg.input == "-") {
    buffer << in.rdbuf();
  } else {
    std::ifstream file(cfg.input, std::ios::binary);
    if (!file) throw UsageError("cannot open input file '" + cfg.input + "'");
    buffer << file.rdbuf();
  }
  return buffer.str();
}

std::vector<Graph> read_graphs(const RunConfig& cfg, std::istream& in) {
  const std::string text = read_input(cfg, in);
  GraphFormat format;
  if (cfg.format.empty()) {
    format = detect_format(text);
  } else if (cfg.format == "graph6") {
    format = GraphFormat::graph6;
  } else if (cfg.format == "edgelist") {
    format = GraphFormat::edgelist;
  } else {
    throw UsageError("input format must be graph6 or edgelist, got '" + cfg.format + "'");
  }
  if (format == GraphFormat::edgelist) return {from_edge_list(text)};
  std::vector<Graph> graphs;
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line == ">>graph6<<") continue;
    graphs.push_back(from_graph6(line));
  }
  if (graphs.empty()) throw ParseError("no graphs in input");
  return graphs;
}

json graph_json(const FamilySpec& spec, const Graph& g) {
  json edges = json::array();
  for (const auto& e : g.edges()) edges.push_back({e.u, e.v});
  return {{"schema_version", kSchemaVersion},
          {"family", family_name(spec)},
          {"n", g.order()},
          {"m", g.size()},
          {"graph6", to_graph6(g)},
          {"edges", std::move(edges)}};
}

int cmd_construct(const RunConfig& cfg, std::ostream& out) {
  if (cfg.catalog) {
    emit(cfg, out, golden_catalog_json().dump(2) + "\n");
    return kExitOk;
  }
  if (cfg.family.empty()) throw UsageError("construct needs --family (or --catalog)");
  const std::string format = cfg.format.empty() ? "graph6" : cfg.format;
  if (format != "graph6" && format != "edgelist" && format != "json") {
    throw UsageError("output format must be graph6, edgelist or json, got '" + format + "'");
  }

  std::vector<FamilySpec> specs;
  if (cfg.n.empty()) {
    specs.push_back(parse_family(cfg.family, std::nullopt));
  } else {
    const auto [lo, hi] = parse_range(cfg.n);
    for (int n = lo; n <= hi; ++n) {
      const FamilySpec spec = parse_family(cfg.family, n);
      if (spec.n != n) throw UsageError("family " + cfg.family + " has " + std::to_string(spec.n) + " vertices");
      specs.push_back(spec);
    }
  }

  std::string payload;
  std::string counts;
  json docs = json::array();
  for (const auto& spec : specs) {
    const Graph g = expand(spec);
    if (format == "json") {
      json doc = graph_json(spec, g);
      if (cfg.count) doc["c5"] = count_cycles(g, 5);
      docs.push_back(std::move(doc));
      continue;
    }
    payload += format == "graph6" ? to_graph6(g) + "\n" : to_edge_list(g);
    if (cfg.count) {
      const std::string line = std::to_string(count_cycles(g, 5)) + "\n";
      // Without --out the count follows its graph; with --out it goes to stdout.
      if (cfg.out.empty()) {
        payload += line;
      } else {
        counts += line;
      }
    }
  }
  if (format == "json") payload = (docs.size() == 1 ? docs[0] : docs).dump(2) + "\n";
  emit(cfg, out, payload);
  out << counts;
  return kExitOk;
}

int cmd_count(const RunConfig& cfg, std::istream& in, std::ostream& out, std::ostream& err) {
  if (cfg.k < 3 || cfg.k > 5) throw UsageError("--k must be 3, 4 or 5");
  const auto graphs = read_graphs(cfg, in);
  json reports = json::array();
  std::string table;
  bool mismatch = false;
  for (const auto& g : graphs) {
    const CycleCountReport report = count_report(g);
    const Count fast[] = {report.c3, report.c4, report.c5};
    json doc = to_json(report);
    doc["k"] = cfg.k;
    doc["count"] = fast[cfg.k - 3];
    if (cfg.oracle) {
      bool agree = true;
      for (int k = 3; k <= 5; ++k) {
        const Count slow = count_cycles_bruteforce(g, k);
        if (slow != fast[k - 3]) {
          agree = false;
          err << "oracle mismatch on " << to_graph6(g) << ": k=" << k << " counter=" << fast[k - 3]
              << " bruteforce=" << slow << "\n";
        }
      }
      doc["oracle_agrees"] = agree;
      mismatch = mismatch || !agree;
    }
    table += std::to_string(fast[cfg.k - 3]) + "\n";
    reports.push_back(std::move(doc));
  }
  if (cfg.json || !cfg.out.empty()) {
    emit(cfg, out, (reports.size() == 1 ? reports[0] : reports).dump(2) + "\n");
  }
  if (!cfg.json) out << table;
  return mismatch ? kExitFailure : kExitOk;
}

int cmd_enumerate(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (!cfg.format.empty() && cfg.format != "graph6") throw UsageError("enumerate writes graph6 only");
  if (cfg.n.empty()) throw UsageError("enumerate needs --n");
  const auto [lo, hi] = parse_range(cfg.n);
  std::string lines;
  json certs = json::array();
  std::ostringstream summary;
  for (int n = lo; n <= hi; ++n) {
    const auto corpus = triangulation_corpus(n, {cfg.workers});
    for (const auto& entry : corpus) lines += entry.form.graph6 + "\n";
    const EnumerationCertificate cert = certify_corpus(n, corpus);
    certs.push_back(to_json(cert));
    summary << "n=" << cert.n << " classes=" << cert.count << " digest=" << cert.digest << "\n";
  }
  const json cert_doc = certs.size() == 1 ? certs[0] : certs;
  if (!cfg.out.empty()) {
    emit(cfg, out, lines);
    out << (cfg.json ? cert_doc.dump(2) + "\n" : summary.str());
  } else if (cfg.json) {
    out << cert_doc.dump(2) << "\n";
  } else {
    out << lines;
    err << summary.str();
  }
  return kExitOk;
}

std::string opt_text(const std::optional<Count>& v) { return v ? std::to_string(*v) : "-"; }

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  const auto [lo, hi] = parse_range(cfg.n.empty() ? "5..12" : cfg.n);
  VerifyOptions options;
  options.workers = cfg.workers;
  options.theorem = !cfg.lemmas_only;
  options.variants = cfg.variants;
  options.seed = cfg.seed;
  options.allow_large = cfg.allow_large;

  std::vector<VerificationCertificate> certs;
  for (int n = lo; n <= hi; ++n) certs.push_back(verify_theorem(n, options));

  bool ok = true;
  json docs = json::array();
  for (const auto& c : certs) {
    ok = ok && c.ok();
    docs.push_back(to_json(c));
  }
  const json doc = {{"schema_version", kSchemaVersion}, {"ok", ok}, {"certificates", docs}};

  std::ostringstream table;
  table << std::left << std::setw(4) << "n" << std::setw(9) << "classes";
  if (options.theorem) {
    table << std::setw(8) << "max_c5" << std::setw(6) << "g(n)" << std::setw(9) << "expected" << std::setw(8)
          << "second" << std::setw(12) << "extremal" << std::setw(7) << "match";
  }
  table << "lemma_violations\n";
  for (const auto& c : certs) {
    table << std::setw(4) << c.n << std::setw(9) << c.corpus_count;
    if (options.theorem) {
      std::string families;
      for (const auto& x : c.extremal) families += (families.empty() ? "" : ",") + x.family;
      table << std::setw(8) << c.max_c5 << std::setw(6) << c.g_n << std::setw(9) << c.expected_max << std::setw(8)
            << opt_text(c.second_best) << std::setw(12) << ("{" + families + "}") << std::setw(7)
            << (c.theorem_match ? "yes" : "NO");
    }
    table << (c.lemmas_checked ? std::to_string(c.lemmas.violations()) : "-") << "\n";
  }

  if (!cfg.out.empty()) emit(cfg, out, doc.dump(2) + "\n");
  if (cfg.json && cfg.out.empty()) {
    out << doc.dump(2) << "\n";
  } else {
    out << table.str();
  }
  return ok ? kExitOk : kExitFailure;
}

int cmd_bench(const RunConfig& cfg, std::ostream& out) {
  if (cfg.suite != "all" && cfg.suite != "counting" && cfg.suite != "enumeration") {
    throw UsageError("--suite must be counting, enumeration or all");
  }
  const auto [lo, hi] = parse_range(cfg.n.empty() ? "10" : cfg.n);
  using Clock = std::chrono::steady_clock;
  const int workers = cfg.workers > 0 ? cfg.workers : default_workers();
  json runs = json::array();
  for (int n = lo; n <= hi; ++n) {
    if (cfg.suite != "counting") {
      const auto t0 = Clock::now();
      const auto corpus = triangulation_corpus(n, {workers});
      const double seconds = std::chrono::duration<double>(Clock::now() - t0).count();
      const auto cert = certify_corpus(n, corpus);
      runs.push_back({{"suite", "enumeration"},
                      {"n", n},
                      {"results", {{"classes", cert.count}, {"digest", cert.digest}}},
                      {"timing", {{"seconds", seconds}, {"classes_per_sec", cert.count / std::max(seconds, 1e-9)}}}});
    }
    if (cfg.suite != "enumeration") {
      const auto corpus = triangulation_corpus(n, {workers});
      std::vector<Count> c5(corpus.size());
      const auto t0 = Clock::now();
      parallel_for(corpus.size(), workers, [&](std::size_t i) { c5[i] = count_cycles(corpus[i].embedding.graph(), 5); });
      const double seconds = std::chrono::duration<double>(Clock::now() - t0).count();
      Count total = 0;
      for (Count c : c5) total += c;
      runs.push_back(
          {{"suite", "counting"},
           {"n", n},
           {"results", {{"graphs", corpus.size()}, {"total_c5", total}}},
           {"timing", {{"seconds", seconds}, {"graphs_per_sec", corpus.size() / std::max(seconds, 1e-9)}}}});
    }
  }
  const json doc = {{"schema_version", kSchemaVersion}, {"workers", workers}, {"runs", runs}};
  if (!cfg.out.empty()) emit(cfg, out, doc.dump(2) + "\n");
  if (cfg.json && cfg.out.empty()) {
    out << doc.dump(2) << "\n";
    return kExitOk;
  }
  for (const auto& r : runs) {
    out << std::left << std::setw(12) << r["suite"].get<std::string>() << "n=" << std::setw(4) << r["n"].get<int>();
    for (const auto& [key, value] : r["results"].items()) out << key << "=" << value.dump() << " ";
    for (const auto& [key, value] : r["timing"].items()) out << key << "=" << value.get<double>() << " ";
    out << "\n";
  }
  return kExitOk;
}

}  // namespace

std::pair<int, int> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  const int lo = to_int(text.substr(0, dots));
  const int hi = dots == std::string::npos ? lo : to_int(text.substr(dots + 2));
  if (hi < lo) throw UsageError("empty range '" + text + "'");
  return {lo, hi};
}

int run(std::vector<std::string> args, std::istream& in, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Five-cycle counts in planar triangulations: constructions, counting, enumeration, verification",
               "penta"};
  app.require_subcommand(1);

  auto add_workers = [&](CLI::App* sub) {
    sub->add_option("--workers", cfg.workers, "Worker threads (default: available parallelism)")
        ->check(CLI::Range(1, 4096));
  };
  auto add_n = [&](CLI::App* sub, const std::string& help) { sub->add_option("--n", cfg.n, help); };

  auto* construct = app.add_subcommand("construct", "Build a named graph");
  construct->add_option("--family", cfg.family, "dn, en, a8, a11, exc0..exc5");
  add_n(construct, "Order or range a..b (required for dn/en)");
  construct->add_flag("--count", cfg.count, "Also print the 5-cycle count");
  construct->add_option("--format", cfg.format, "graph6 (default), edgelist or json");
  construct->add_option("--out", cfg.out, "Write the graph(s) to this file");
  construct->add_flag("--catalog", cfg.catalog, "Print the golden catalog as JSON");

  auto* count = app.add_subcommand("count", "Count 3-, 4- and 5-cycles of input graphs");
  count->add_option("input", cfg.input, "Input file (default: stdin)");
  count->add_option("--k", cfg.k, "Cycle length to print (3, 4 or 5)");
  count->add_flag("--oracle", cfg.oracle, "Cross-check every count against brute force");
  count->add_option("--format", cfg.format, "Input format: graph6 or edgelist (default: detect)");
  count->add_option("--out", cfg.out, "Write the report JSON to this file");
  count->add_flag("--json", cfg.json, "Print the report JSON instead of the counts");

  auto* enumerate = app.add_subcommand("enumerate", "List all triangulations on n vertices");
  add_n(enumerate, "Order or range a..b, within 4..14");
  add_workers(enumerate);
  enumerate->add_option("--format", cfg.format, "graph6 (only)");
  enumerate->add_option("--out", cfg.out, "Write the corpus to this file");
  enumerate->add_flag("--json", cfg.json, "Print the certificate JSON");

  auto* verify = app.add_subcommand("verify", "Exhaustive check of the maximum 5-cycle count and lemmas");
  add_n(verify, "Order or range a..b (default 5..12)");
  add_workers(verify);
  verify->add_flag("--lemmas-only", cfg.lemmas_only, "Skip the maximum check");
  verify->add_option("--variants", cfg.variants, "Edge-deleted variants per n added to the lemma corpus");
  verify->add_option("--seed", cfg.seed, "Seed for the variants");
  verify->add_flag("--allow-large", cfg.allow_large, "Permit n = 13 and 14");
  verify->add_option("--out", cfg.out, "Write the certificate JSON to this file");
  verify->add_flag("--json", cfg.json, "Print the certificate JSON instead of the table");

  auto* bench = app.add_subcommand("bench", "Time counting and enumeration");
  bench->add_option("--suite", cfg.suite, "counting, enumeration or all");
  add_n(bench, "Corpus order or range (default 10)");
  add_workers(bench);
  bench->add_option("--seed", cfg.seed, "Unused; accepted for a uniform interface");
  bench->add_option("--out", cfg.out, "Write the report JSON to this file");
  bench->add_flag("--json", cfg.json, "Print the report JSON instead of the table");

  try {
    std::reverse(args.begin(), args.end());  // CLI11 consumes from the back
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (construct->parsed()) return cmd_construct(cfg, out);
    if (count->parsed()) return cmd_count(cfg, in, out, err);
    if (enumerate->parsed()) return cmd_enumerate(cfg, out, err);
    if (verify->parsed()) return cmd_verify(cfg, out);
    return cmd_bench(cfg, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
}

}  // namespace penta::cli
