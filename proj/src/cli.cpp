#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"

#include "starics/distributions.hpp"
#include "starics/export.hpp"
#include "starics/oracle.hpp"

namespace starics {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitGuard = 3;

struct Options {
  int n = 0;
  std::string format;
  std::string output;
  bool unpruned = false;
  bool deep = false;
  int symbol = 1;
  int max_n = 8;
  std::string method = "enumerate";
};

// Writes to --output when given, else to `out`.
void emit(const Options& opt, std::ostream& out, const std::string& text) {
  if (opt.output.empty()) {
    out << text;
    return;
  }
  std::ofstream file(opt.output, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open " + opt.output + " for writing");
  file << text;
}

Method parse_method(const std::string& name) {
  if (name == "enumerate") return Method::enumerate;
  if (name == "cycle-counts") return Method::cycle_counts;
  throw std::invalid_argument("unknown method '" + name + "'");
}

std::string distribution_text(const WeightDistribution& classes, const WeightDistribution& vertices) {
  std::ostringstream s;
  s << "ST_" << vertices.n() << "  diameter " << vertices.max_weight() << "\n";
  for (int w = 0; w <= vertices.max_weight(); ++w)
    s << "omega=" << w << "  classes=" << to_decimal(classes[w]) << "  vertices=" << to_decimal(vertices[w]) << "\n";
  s << "total  classes=" << to_decimal(classes.total()) << "  vertices=" << to_decimal(vertices.total()) << "\n";
  return s.str();
}

std::string tree_text(const LambdaTree& tree) {
  std::ostringstream s;
  for (const auto& [id, node] : tree.nodes) {
    s << id.str() << "  w=" << node.weight << " c=" << to_decimal(node.card) << " sigma=" << format_permutation(node.sigma);
    for (const auto& arc : tree.out_arcs(id))
      s << "  " << (arc.kind == ArcKind::horizontal ? "*" : "/") << arc.indication << "->" << arc.to.str();
    s << "\n";
  }
  return s.str();
}

oracle::CheckResult make_check(std::string name, bool passed, nlohmann::json diagnostic) {
  return {std::move(name), passed, std::move(diagnostic)};
}

template <typename T>
std::vector<std::string> decimal_strings(const std::vector<T>& values) {
  std::vector<std::string> out;
  for (const auto& v : values) {
    std::ostringstream s;
    s << v;
    out.push_back(s.str());
  }
  return out;
}

oracle::VerificationReport run_verification(int max_n) {
  oracle::VerificationReport report;
  for (int n = 2; n <= max_n; ++n) {
    const std::string tag = "n" + std::to_string(n) + ".";
    const auto distances = oracle::bfs(n);
    const auto vertices = vertex_weight_distribution(n);

    std::vector<BigInt> bfs_counts(distances.histogram.begin(), distances.histogram.end());
    report.checks.push_back(make_check(tag + "distribution", bfs_counts == vertices.counts(),
                                       {{"bfs", distances.histogram}, {"classes", decimal_strings(vertices.counts())}}));
    report.checks.push_back(make_check(tag + "diameter", distances.max_distance == diameter(n),
                                       {{"bfs", distances.max_distance}, {"formula", diameter(n)}}));

    const auto classes = oracle::class_histogram(distances);
    const auto tree = generate_pruned(n);
    bool classes_ok = classes.consistent && classes.classes.size() == tree.nodes.size();
    std::map<IcsKey, const LambdaNode*> by_key;
    for (const auto& [id, node] : tree.nodes) by_key[node.ics] = &node;
    for (const auto& [key, entry] : classes.classes) {
      const auto it = by_key.find(key);
      if (it == by_key.end()) {
        classes_ok = false;
        continue;
      }
      classes_ok = classes_ok && it->second->weight == entry.distance && it->second->card == entry.size;
    }
    report.checks.push_back(make_check(tag + "classes", classes_ok,
                                       {{"oracle_classes", classes.classes.size()}, {"tree_nodes", tree.nodes.size()}}));

    if (n >= 3) {
      bool eset_ok = true;
      for (int i = 1; i <= n; ++i) {
        const auto hist = oracle::eset_histogram(distances, i);
        auto expected = eset_distribution(n, i).counts;
        std::vector<BigInt> observed(hist.begin(), hist.end());
        observed.resize(expected.size(), 0);
        eset_ok = eset_ok && observed == expected;
      }
      report.checks.push_back(make_check(tag + "esets", eset_ok, nlohmann::json::object()));
    }

    if (n <= 8) {
      const auto quotient = oracle::verify_quotient(n, build_gamma(n));
      for (auto c : quotient.checks) {
        c.name = tag + "quotient." + c.name;
        report.checks.push_back(std::move(c));
      }
    }
  }
  return report;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Star graph 1-ics trees, weight distributions and brute-force verification", "starics"};
  app.require_subcommand(1);
  Options opt;

  auto add_n = [&](CLI::App* sub) {
    sub->add_option("--n,-n", opt.n, "star graph order n (>= 2)")->required()->check(CLI::Range(2, 100000));
  };
  auto add_output = [&](CLI::App* sub) { sub->add_option("--output,-o", opt.output, "write to this file"); };

  auto* tree = app.add_subcommand("tree", "Lambda_n as DOT, JSON or text");
  add_n(tree);
  add_output(tree);
  tree->add_option("--format", opt.format, "dot|json|text (default text)")->check(CLI::IsMember({"dot", "json", "text"}));
  tree->add_flag("--unpruned", opt.unpruned, "skip pruning (axiom generation only)");

  auto* ledger = app.add_subcommand("ledger", "Pruning Algorithm ledger P_n");
  add_n(ledger);
  add_output(ledger);
  ledger->add_option("--format", opt.format, "text")->check(CLI::IsMember({"text"}));

  auto* gamma = app.add_subcommand("gamma", "threaded orientation Gamma_n");
  add_n(gamma);
  add_output(gamma);
  gamma->add_option("--format", opt.format, "dot|json (default json)")->check(CLI::IsMember({"dot", "json"}));

  auto* dist = app.add_subcommand("dist", "weight distribution of ST_n");
  add_n(dist);
  add_output(dist);
  dist->add_option("--format", opt.format, "csv|json|text (default csv)")->check(CLI::IsMember({"csv", "json", "text"}));
  dist->add_option("--method", opt.method, "enumerate|cycle-counts")
      ->check(CLI::IsMember({"enumerate", "cycle-counts"}))
      ->default_val("enumerate");

  auto* eset = app.add_subcommand("eset", "weight distribution of the E-set sigma_1 = i");
  add_n(eset);
  add_output(eset);
  eset->add_option("--i,-i", opt.symbol, "first symbol i")->required();
  eset->add_option("--format", opt.format, "csv|json (default csv)")->check(CLI::IsMember({"csv", "json"}));

  auto* table = app.add_subcommand("table", "table T_n of index strings by weight");
  add_n(table);
  add_output(table);
  table->add_option("--format", opt.format, "text")->check(CLI::IsMember({"text"}));

  auto* diam = app.add_subcommand("diameter", "diameter of ST_n");
  add_n(diam);

  auto* verify = app.add_subcommand("verify", "check every computable claim against BFS");
  add_output(verify);
  verify->add_option("--max-n", opt.max_n, "largest n to check (default 8)")->check(CLI::Range(2, 1000));
  verify->add_flag("--deep", opt.deep, "allow n = 9 (BFS checks; quotient scan stays at n <= 8)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  const auto format_or = [&](const char* fallback) {
    if (opt.format.empty()) opt.format = fallback;
  };

  try {
    if (tree->parsed()) {
      format_or("text");
      const auto t = opt.unpruned ? generate_unpruned(opt.n) : generate_pruned(opt.n);
      if (opt.format == "dot")
        emit(opt, out, tree_to_dot(t));
      else if (opt.format == "json")
        emit(opt, out, tree_to_json(t).dump(2) + "\n");
      else
        emit(opt, out, tree_text(t));
    } else if (ledger->parsed()) {
      emit(opt, out, format_ledger(prune(generate_unpruned(opt.n)).ledger));
    } else if (gamma->parsed()) {
      format_or("json");
      const auto g = build_gamma(opt.n);
      emit(opt, out, opt.format == "dot" ? gamma_to_dot(g) : gamma_to_json(g).dump(2) + "\n");
    } else if (dist->parsed()) {
      format_or("csv");
      const auto method = parse_method(opt.method);
      const auto classes = class_weight_distribution(opt.n, method);
      const auto vertices = vertex_weight_distribution(opt.n, method);
      if (opt.format == "csv")
        emit(opt, out, distribution_csv(classes, vertices));
      else if (opt.format == "json")
        emit(opt, out, distribution_json(classes, vertices).dump(2) + "\n");
      else
        emit(opt, out, distribution_text(classes, vertices));
    } else if (eset->parsed()) {
      const auto e = eset_distribution(opt.n, opt.symbol);
      emit(opt, out, opt.format == "json" ? eset_json(e).dump(2) + "\n" : eset_csv(e));
    } else if (table->parsed()) {
      emit(opt, out, format_table(table_T(opt.n)));
    } else if (diam->parsed()) {
      out << diameter(opt.n) << "\n";
    } else if (verify->parsed()) {
      if (opt.max_n > 9 || (opt.max_n > 8 && !opt.deep))
        throw oracle::ResourceGuardError("verify --max-n " + std::to_string(opt.max_n) +
                                         " refused: n = 9 needs --deep and n >= 10 is not verified");
      const auto report = run_verification(opt.max_n);
      if (opt.output.empty()) {
        out << report.summary() << report.to_json().dump(2) << "\n";
      } else {
        emit(opt, out, report.to_json().dump(2) + "\n");
        out << report.summary();
      }
      return report.passed() ? kExitOk : kExitFailed;
    }
  } catch (const oracle::ResourceGuardError& e) {
    err << "refused: " << e.what() << "\n";
    return kExitGuard;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }
  return kExitOk;
}

}  // namespace starics
