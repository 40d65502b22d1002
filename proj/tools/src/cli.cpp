#include "powergraph/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "powergraph/corpus.hpp"
#include "powergraph/metric_dim.hpp"
#include "powergraph/poset.hpp"
#include "powergraph/power_graph.hpp"

namespace powergraph::cli {

using nlohmann::ordered_json;

double effective_budget_seconds(const Options& opts) {
  if (opts.budget_seconds) return *opts.budget_seconds;
  if (const char* env = std::getenv("POWERGRAPH_BUDGET_SECONDS")) {
    char* end = nullptr;
    double v = std::strtod(env, &end);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return oracle::SearchBudget::for_dimension().max_seconds;
}

oracle::SearchBudget dim_budget(const Options& opts) {
  oracle::SearchBudget b = oracle::SearchBudget::for_dimension();
  b.max_vertices = static_cast<std::size_t>(opts.max_order);
  b.max_seconds = effective_budget_seconds(opts);
  return b;
}

oracle::SearchBudget iso_budget(const Options& opts) {
  oracle::SearchBudget b = oracle::SearchBudget::for_isomorphism();
  b.max_vertices = 64;
  b.max_seconds = effective_budget_seconds(opts);
  return b;
}

namespace {

Group load(const std::string& spec, const Options& opts) {
  return build_group(spec, BuildOptions{static_cast<std::size_t>(opts.max_order)});
}

std::string join_names(const Group& g, const std::vector<ElementId>& xs) {
  if (xs.empty()) return "none";
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? " " : "") + g.name(xs[i]);
  return s;
}

ordered_json names_json(const Group& g, const std::vector<ElementId>& xs) {
  ordered_json a = ordered_json::array();
  for (ElementId x : xs) a.push_back(g.name(x));
  return a;
}

bool write_file(const std::string& path, const std::string& text, std::ostream& err) {
  std::ofstream f(path, std::ios::binary);
  if (!f || !(f << text)) {
    err << "error: cannot write '" << path << "'\n";
    return false;
  }
  return true;
}

// Runs `body` with group construction errors mapped to exit codes.
template <class F>
int guarded(std::ostream& err, F&& body) {
  try {
    return body();
  } catch (const GroupSpecError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const GroupAxiomError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const GroupBuildError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const SizeCapError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
  }
  return kExitUsage;
}

}  // namespace

std::vector<CheckResult> verify_suite(const Group& g) {
  std::vector<CheckResult> out;
  const Digraph orient = transitive_orientation(g);
  out.push_back({"orientation-transitive", is_transitive(orient), std::to_string(orient.arc_count()) + " arcs"});
  out.push_back({"orientation-in-power-digraph", orient.is_subdigraph_of(power_digraph(g)), ""});

  const StructureReport st = verify_structure_theorem(g);
  out.push_back({"structure-theorem", st.holds, std::to_string(st.inner_sizes.size()) + " cyclic subgroups"});

  const EulerSum es = euler_sum_check(g);
  out.push_back({"euler-sum", es.holds, "sum " + std::to_string(es.sum) + ", order " + std::to_string(g.order())});

  const PerfectionReport pr = perfection_check(g);
  out.push_back({"chi-equals-omega", pr.holds,
                 "chi " + std::to_string(pr.chi) + ", omega " + std::to_string(pr.omega) +
                     (pr.coloring_proper ? "" : ", coloring not proper")});

  const ClassStructureReport cs = class_structure_check(g, twin_partition(g));
  std::string detail;
  for (const auto& f : cs.failures) detail += (detail.empty() ? "" : "; ") + f;
  out.push_back({"twin-class-structure", cs.holds, detail});
  return out;
}

int cmd_info(const std::string& spec, const Options& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Group g = load(spec, opts);
    const auto hist = order_histogram(g);
    const CyclicPoset cp = cyclic_subgroup_poset(g);
    const EulerSum es = euler_sum_check(g);
    const auto inv = g.involutions();
    const auto max_inv = maximal_involutions(g);
    if (opts.json) {
      ordered_json j;
      j["spec"] = spec;
      j["order"] = g.order();
      ordered_json h = ordered_json::object();
      for (auto [o, c] : hist) h[std::to_string(o)] = c;
      j["element_orders"] = h;
      j["cyclic_subgroups"] = cp.size();
      j["euler_sum"] = es.sum;
      j["euler_holds"] = es.holds;
      j["involutions"] = inv.size();
      j["maximal_involutions"] = names_json(g, max_inv);
      j["abelian"] = g.is_abelian();
      j["cyclic"] = g.is_cyclic();
      out << j.dump() << '\n';
    } else {
      out << "group: " << spec << '\n' << "order: " << g.order() << '\n' << "element orders:";
      for (auto [o, c] : hist) out << ' ' << o << ':' << c;
      out << '\n'
          << "cyclic subgroups: " << cp.size() << '\n'
          << "euler sum: " << es.sum << (es.holds ? " (holds)" : " (FAILS)") << '\n'
          << "involutions: " << inv.size() << '\n'
          << "maximal involutions: " << join_names(g, max_inv) << '\n'
          << "abelian: " << (g.is_abelian() ? "yes" : "no") << '\n'
          << "cyclic: " << (g.is_cyclic() ? "yes" : "no") << '\n';
    }
    return es.holds ? kExitOk : kExitCheckFailed;
  });
}

int cmd_graph(const std::string& spec, const Options& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Group g = load(spec, opts);
    if (opts.orientation) {
      const Digraph d = transitive_orientation(g);
      if (opts.dot && !write_file(*opts.dot, export_dot(d, g.names()), err)) return kExitUsage;
      if (opts.json) {
        out << adjacency_json(d) << '\n';
      } else {
        out << "vertices: " << d.size() << "\narcs: " << d.arc_count() << '\n';
        for (auto [u, v] : d.arcs()) out << g.name(u) << " -> " << g.name(v) << '\n';
      }
      return kExitOk;
    }
    const Graph pg = power_graph(g);
    if (opts.dot && !write_file(*opts.dot, export_dot(pg, g.names()), err)) return kExitUsage;
    if (opts.json) {
      out << adjacency_json(pg) << '\n';
    } else {
      out << "vertices: " << pg.size() << "\nedges: " << pg.edge_count() << '\n';
      for (auto [u, v] : pg.edges()) out << g.name(u) << " -- " << g.name(v) << '\n';
    }
    return kExitOk;
  });
}

int cmd_dim(const std::string& spec, const Options& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Group g = load(spec, opts);
    const DimReport r = dim_formula(g, opts.verify, dim_budget(opts));
    const bool inconclusive = r.oracle && r.oracle->status == oracle::SearchStatus::kInconclusive;
    const bool mismatch = r.oracle && !inconclusive && !r.oracle_matches();
    if (opts.json) {
      out << dim_report_json(r) << '\n';
    } else {
      out << "order: " << r.order << '\n'
          << "twin classes: " << r.u_count << '\n'
          << "resolving involutions: " << r.w.size();
      for (const auto& w : r.w) out << ' ' << g.name(w.w);
      out << '\n' << "psi: ";
      if (r.psi.member) {
        out << "member (p = " << *r.psi.p << ")\n";
      } else {
        out << "not member (";
        if (r.psi.cyclic) out << "cyclic" << (r.psi.failures.empty() ? "" : ", ");
        for (std::size_t i = 0; i < r.psi.failures.size(); ++i) out << (i ? " " : "") << r.psi.failures[i];
        out << ")\n";
      }
      out << "dim (formula): " << r.dim_formula << '\n';
      if (r.oracle) {
        if (inconclusive) {
          out << "dim (oracle): inconclusive (" << r.oracle->reason << ")\n";
        } else {
          out << "dim (oracle): " << r.oracle->dim << '\n' << (mismatch ? "MISMATCH" : "MATCH") << '\n';
        }
      }
    }
    if (inconclusive && opts.json) err << "inconclusive: " << r.oracle->reason << '\n';
    return mismatch ? kExitCheckFailed : kExitOk;
  });
}

int cmd_classes(const std::string& spec, const Options& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Group g = load(spec, opts);
    const TwinPartition tp = twin_partition(g);
    const ClassStructureReport cs = class_structure_check(g, tp);
    if (opts.json) {
      ordered_json j;
      j["order"] = g.order();
      j["classes"] = ordered_json::array();
      for (const auto& c : tp.classes) {
        ordered_json e;
        e["kind"] = to_string(c.kind);
        e["members"] = c.members;
        e["names"] = names_json(g, c.members);
        j["classes"].push_back(std::move(e));
      }
      j["structure_holds"] = cs.holds;
      j["failures"] = cs.failures;
      out << j.dump() << '\n';
    } else {
      out << "twin classes: " << tp.size() << '\n';
      for (std::size_t i = 0; i < tp.size(); ++i)
        out << "  [" << i << "] " << to_string(tp.classes[i].kind) << " {" << join_names(g, tp.classes[i].members)
            << "}\n";
      out << "class structure: " << (cs.holds ? "PASS" : "FAIL") << '\n';
      for (const auto& f : cs.failures) out << "  " << f << '\n';
    }
    return cs.holds ? kExitOk : kExitCheckFailed;
  });
}

int cmd_iso(const std::string& spec1, const std::string& spec2, const Options& opts, std::ostream& out,
            std::ostream& err) {
  return guarded(err, [&] {
    const Group g1 = load(spec1, opts);
    const Group g2 = load(spec2, opts);
    const bool poset_verdict = power_graph_iso(g1, g2);
    std::optional<oracle::IsoSearchResult> generic;
    if (opts.verify) generic = oracle::graph_iso(power_graph(g1), power_graph(g2), iso_budget(opts));
    const bool inconclusive = generic && generic->status == oracle::SearchStatus::kInconclusive;
    const bool agree = !generic || inconclusive || generic->mapping.has_value() == poset_verdict;
    if (opts.json) {
      ordered_json j;
      j["isomorphic"] = poset_verdict;
      if (generic) {
        j["oracle"] = inconclusive ? ordered_json(nullptr) : ordered_json(generic->mapping.has_value());
        j["agree"] = inconclusive ? ordered_json(nullptr) : ordered_json(agree);
      }
      out << j.dump() << '\n';
    } else {
      out << (poset_verdict ? "isomorphic" : "NOT isomorphic") << '\n';
      if (generic) {
        if (inconclusive)
          out << "graph-iso oracle: inconclusive (" << generic->reason << ")\n";
        else
          out << "graph-iso oracle: " << (generic->mapping ? "isomorphic" : "NOT isomorphic") << '\n'
              << (agree ? "AGREE" : "DISAGREE") << '\n';
      }
    }
    return agree ? kExitOk : kExitCheckFailed;
  });
}

int cmd_verify(const std::string& spec, const Options& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Group g = load(spec, opts);
    const auto checks = verify_suite(g);
    bool all = true;
    for (const auto& c : checks) all = all && c.passed;
    const std::size_t n = g.order();
    const bool complete = power_graph(g).edge_count() == n * (n - 1) / 2;
    if (opts.json) {
      ordered_json j;
      j["spec"] = spec;
      j["order"] = n;
      j["checks"] = ordered_json::array();
      for (const auto& c : checks) j["checks"].push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
      j["complete_power_graph"] = complete;
      j["passed"] = all;
      out << j.dump() << '\n';
    } else {
      for (const auto& c : checks)
        out << (c.passed ? "PASS " : "FAIL ") << c.name << (c.detail.empty() ? "" : " (" + c.detail + ")") << '\n';
      if (complete) out << "note: power graph is complete\n";
      out << (all ? "all checks passed" : "some checks FAILED") << '\n';
    }
    return all ? kExitOk : kExitCheckFailed;
  });
}

int cmd_corpus(const Options& opts, std::ostream& out, std::ostream& err) {
  ordered_json rows = ordered_json::array();
  std::ostringstream table;
  table << std::left << std::setw(14) << "group" << std::right << std::setw(6) << "order" << std::setw(5) << "U"
        << std::setw(4) << "W" << std::setw(5) << "psi" << std::setw(8) << "formula" << std::setw(8) << "oracle"
        << "  verify  result\n";
  bool all_ok = true;
  std::size_t count = 0;
  for (const auto& entry : builtin_corpus()) {
    if (entry.order > opts.max_order) continue;
    ++count;
    ordered_json row;
    row["group"] = entry.spec;
    try {
      const Group g = load(entry.spec, opts);
      const auto checks = verify_suite(g);
      bool verified = true;
      std::vector<std::string> failed;
      for (const auto& c : checks)
        if (!c.passed) {
          verified = false;
          failed.push_back(c.name);
        }
      const bool run_oracle = entry.order <= kCorpusOracleMaxOrder;
      const DimReport r = dim_formula(g, run_oracle, dim_budget(opts));
      std::string oracle_cell = "-", result = "OK";
      if (r.oracle) {
        if (r.oracle->status == oracle::SearchStatus::kExact) {
          oracle_cell = std::to_string(r.oracle->dim);
          result = r.oracle_matches() ? "MATCH" : "MISMATCH";
        } else {
          result = "inconclusive";
        }
      }
      const bool ok = verified && result != "MISMATCH";
      if (!verified) result = "FAIL";
      all_ok = all_ok && ok;
      row["order"] = r.order;
      row["u_count"] = r.u_count;
      row["w_count"] = r.w.size();
      row["psi"] = r.psi.member;
      row["dim_formula"] = r.dim_formula;
      row["dim_oracle"] = oracle_cell == "-" ? ordered_json(nullptr) : ordered_json(r.oracle->dim);
      row["verify"] = verified;
      row["failed_checks"] = failed;
      row["result"] = result;
      table << std::left << std::setw(14) << entry.spec << std::right << std::setw(6) << r.order << std::setw(5)
            << r.u_count << std::setw(4) << r.w.size() << std::setw(5) << (r.psi.member ? "yes" : "no")
            << std::setw(8) << r.dim_formula << std::setw(8) << oracle_cell << "  " << std::left << std::setw(6)
            << (verified ? "pass" : "FAIL") << "  " << result << '\n';
    } catch (const std::exception& e) {
      all_ok = false;
      row["error"] = e.what();
      row["result"] = "ERROR";
      table << std::left << std::setw(14) << entry.spec << "  ERROR: " << e.what() << '\n';
    }
    rows.push_back(std::move(row));
  }
  if (opts.json) {
    ordered_json j;
    j["rows"] = std::move(rows);
    j["passed"] = all_ok;
    out << j.dump() << '\n';
  } else {
    out << table.str() << count << " groups, " << (all_ok ? "all passed" : "FAILURES present") << '\n';
  }
  if (!all_ok) err << "corpus: failures present\n";
  return all_ok ? kExitOk : kExitCheckFailed;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Power graphs of finite groups: structure, twin classes and metric dimension", "powergraph"};
  app.require_subcommand(1, 1);
  Options opts;
  int budget = 0;
  std::string spec, spec2;

  auto shared = [&](CLI::App* sub) {
    sub->add_flag("--json", opts.json, "Machine-readable output");
    sub->add_option("--dot", opts.dot, "Write a Graphviz DOT file");
    sub->add_flag("--verify", opts.verify, "Cross-check with the brute-force oracle");
    sub->add_option("--budget-seconds", budget, "Oracle time budget in seconds")->check(CLI::PositiveNumber);
    sub->add_option("--max-order", opts.max_order, "Largest group order accepted")->check(CLI::PositiveNumber);
  };
  auto* info = app.add_subcommand("info", "Order statistics and cyclic subgroups");
  auto* graph = app.add_subcommand("graph", "Power graph edges, DOT or JSON");
  auto* dim = app.add_subcommand("dim", "Metric dimension of the power graph");
  auto* classes = app.add_subcommand("classes", "Twin classes and their shapes");
  auto* iso = app.add_subcommand("iso", "Power graph isomorphism of two groups");
  auto* verify = app.add_subcommand("verify", "Structural checks on one group");
  auto* corpus = app.add_subcommand("corpus", "Run verify and dim over the built-in corpus");
  for (auto* sub : {info, graph, dim, classes, iso, verify, corpus}) shared(sub);
  for (auto* sub : {info, graph, dim, classes, verify}) sub->add_option("spec", spec, "Group spec")->required();
  iso->add_option("spec1", spec, "First group spec")->required();
  iso->add_option("spec2", spec2, "Second group spec")->required();
  graph->add_flag("--orientation", opts.orientation, "Emit the transitive orientation instead");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }
  if (budget > 0) opts.budget_seconds = budget;

  if (*info) return cmd_info(spec, opts, out, err);
  if (*graph) return cmd_graph(spec, opts, out, err);
  if (*dim) return cmd_dim(spec, opts, out, err);
  if (*classes) return cmd_classes(spec, opts, out, err);
  if (*iso) return cmd_iso(spec, spec2, opts, out, err);
  if (*verify) return cmd_verify(spec, opts, out, err);
  return cmd_corpus(opts, out, err);
}

}  // namespace powergraph::cli
