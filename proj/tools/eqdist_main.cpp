#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "eqdist/errors.hpp"
#include "eqdist/exact.hpp"
#include "eqdist/graph6.hpp"
#include "eqdist/named.hpp"
#include "eqdist/reductions.hpp"
#include "eqdist/report.hpp"
#include "eqdist/table.hpp"
#include "eqdist/verify.hpp"

using namespace eqdist;

namespace {

Format parse_format(const std::string& s) {
  if (s == "table") return Format::table;
  if (s == "csv") return Format::csv;
  if (s == "json") return Format::json;
  throw DomainError("unknown format '" + s + "'");
}

// "eq" selects the eq row.
int parse_t(const std::string& s) {
  if (s == "eq") return 0;
  std::size_t used = 0;
  int t = 0;
  try {
    t = std::stoi(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size() || t < 1) throw DomainError("--t expects a positive integer or 'eq', got '" + s + "'");
  return t;
}

std::set<std::string> split_list(const std::vector<std::string>& items) {
  std::set<std::string> out;
  for (const auto& item : items) {
    std::stringstream ss(item);
    for (std::string tok; std::getline(ss, tok, ',');)
      if (!tok.empty()) out.insert(tok);
  }
  return out;
}

Graph single_graph(const std::string& name, const std::string& g6) {
  if (name.empty() == g6.empty()) throw DomainError("give exactly one of --name or --g6");
  return name.empty() ? parse_graph6(g6) : named_graph(name);
}

struct Output {
  std::ofstream file;
  std::ostream* out = &std::cout;

  explicit Output(const std::string& path) {
    if (path.empty() || path == "-") return;
    file.open(path);
    if (!file) throw std::runtime_error("cannot write " + path);
    out = &file;
  }
  std::ostream& operator*() { return *out; }
};

std::string witness_text(const std::vector<Vertex>& w) {
  std::string s;
  for (auto v : w) s += (s.empty() ? "" : " ") + std::to_string(v);
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"eqdist: equidistant sets, spectral bounds and reduction gadgets"};
  app.require_subcommand(1);

  std::string out_path;
  std::string format = "table";
  std::uint64_t budget = kDefaultNodeBudget;
  double eps = 1e-6;
  double group_tol = kDefaultGroupTol;
  unsigned threads = 0;
  auto common = [&](CLI::App* sub) {
    sub->add_option("--out", out_path, "write output here instead of stdout");
    sub->add_option("--budget", budget, "branch-and-bound node budget");
    sub->add_option("--threads", threads, "worker threads (0 = all cores)");
  };
  auto numeric = [&](CLI::App* sub) {
    sub->add_option("--eps", eps, "margin for strict inequalities in the polynomial LPs");
    sub->add_option("--group-tol", group_tol, "relative tolerance for grouping equal eigenvalues");
  };

  RunConfig cfg;
  std::vector<std::string> t_args{"2"}, bound_args;
  auto* bounds = app.add_subcommand("bounds", "evaluate eigenvalue bounds on eq_t or eq");
  bounds->add_option("--name", cfg.names, "named graph or family spec (petersen, j_7_3, es_6_2, ...)");
  bounds->add_option("--g6", cfg.graph6, "graph6 string");
  bounds->add_option("--g6-file", cfg.g6_files, "file with one graph6 string per line");
  bounds->add_option("--t", t_args, "distance parameter, or 'eq'")->expected(1, -1);
  bounds->add_option("--bounds", bound_args, "comma-separated subset of bounds");
  bounds->add_flag("--exact", cfg.exact, "also compute the exact value");
  bounds->add_flag("--timing", cfg.timing, "add a seconds column");
  bounds->add_option("--format", format, "table, csv or json");
  common(bounds);
  numeric(bounds);

  std::string table_id;
  std::vector<std::string> only;
  std::string data_dir;
  auto* table = app.add_subcommand("table", "recompute a bound-comparison table and diff it against the stored copy");
  table->add_option("id", table_id, "eq2, eq3 or eq")->required();
  table->add_option("--only", only, "restrict to these graphs");
  table->add_option("--data-dir", data_dir, "directory holding tables/ and named/");
  table->add_option("--format", format, "table, csv or json");
  common(table);
  numeric(table);

  std::string suite_name = "all";
  VerifyOptions vopt;
  auto* verify = app.add_subcommand("verify", "check gadget identities, relations and bound soundness");
  verify->add_option("suite", suite_name, "gadgets, relations, johnson, soundness or all");
  verify->add_option("--count", vopt.count, "random graphs per suite");
  verify->add_option("--seed", vopt.seed, "random seed");
  verify->add_option("--max-n", vopt.max_n, "largest random graph order");
  common(verify);

  std::string name, g6, t_arg = "eq";
  bool alpha = false;
  auto* exact = app.add_subcommand("exact", "exact eq_t, eq or alpha_t with a witness");
  exact->add_option("--name", name, "named graph");
  exact->add_option("--g6", g6, "graph6 string");
  exact->add_option("--t", t_arg, "distance parameter, or 'eq'");
  exact->add_flag("--alpha", alpha, "largest set with pairwise distances > t instead");
  exact->add_option("--format", format, "table or json");
  common(exact);

  std::string gadget_kind = "odd";
  int gadget_t = 3;
  bool gadget_check = false;
  auto* gadget = app.add_subcommand("gadget", "build a reduction gadget (graph6 on stdout)");
  gadget->add_option("kind", gadget_kind, "odd, even or join");
  gadget->add_option("--name", name, "named graph");
  gadget->add_option("--g6", g6, "graph6 string");
  gadget->add_option("--t", gadget_t, "path length");
  gadget->add_flag("--verify", gadget_check, "solve both sides and print a JSON report instead");
  common(gadget);

  std::string gap_file = "-";
  int gap_t = 4;
  auto* gap = app.add_subcommand("gap", "alpha_{t-1} - eq_t over graph6 lines");
  gap->add_option("--g6-file", gap_file, "input file, '-' for stdin");
  gap->add_option("--t", gap_t, "distance parameter (>= 2)");
  gap->add_option("--format", format, "table or json");
  common(gap);

  CLI11_PARSE(app, argc, argv);

  try {
    Output out(out_path);
    ExactOptions eopt;
    eopt.budget = budget;
    SuiteOptions sopt;
    sopt.tol.eps = eps;
    sopt.tol.group = group_tol;
    sopt.poly.eps = eps;
    sopt.exact = eopt;

    if (*bounds) {
      cfg.ts.clear();
      for (const auto& t : t_args) cfg.ts.push_back(parse_t(t));
      cfg.bounds = split_list(bound_args);
      cfg.format = parse_format(format);
      cfg.threads = threads;
      cfg.suite = sopt;
      cfg.suite.only = cfg.bounds;
      if (cfg.names.empty() && cfg.graph6.empty() && cfg.g6_files.empty())
        throw DomainError("no input graphs (use --name, --g6 or --g6-file)");
      const auto rows = cmd_bounds(cfg);
      render(rows, cfg, *out);
      for (const auto& r : rows)
        if (!r.error.empty()) return 1;
      return 0;
    }

    if (*table) {
      const auto id = parse_table_id(table_id);
      if (!id) throw DomainError("unknown table '" + table_id + "'");
      TableOptions topt;
      if (!data_dir.empty()) topt.data_dir = data_dir;
      topt.only = only;
      topt.threads = threads;
      topt.suite = sopt;
      const auto rep = cmd_table(*id, topt);
      render_table_report(rep, parse_format(format), *out);
      return rep.diffs.empty() ? 0 : 2;
    }

    if (*verify) {
      vopt.exact = eopt;
      vopt.threads = threads;
      return cmd_verify(suite_name, vopt, *out);
    }

    if (*exact) {
      const Graph g = single_graph(name, g6);
      const int t = parse_t(t_arg);
      if (alpha && t == 0) throw DomainError("--alpha needs a numeric --t");
      const ExactResult r = alpha ? alpha_t(g, t, eopt) : t == 0 ? eq(g, eopt) : eq_t(g, t, eopt);
      if (format == "json") {
        nlohmann::ordered_json j;
        j["graph"] = name.empty() ? g6 : name;
        j["quantity"] = alpha ? "alpha_t" : t == 0 ? "eq" : "eq_t";
        j["t"] = r.t;
        j["value"] = r.value;
        j["witness"] = r.witness;
        j["nodes"] = r.nodes;
        *out << j.dump() << '\n';
      } else {
        *out << (alpha ? "alpha_" : "eq_") << r.t << " = " << r.value << "\nwitness: " << witness_text(r.witness)
             << "\n";
      }
      return 0;
    }

    if (*gadget) {
      const Graph g = single_graph(name, g6);
      int t = gadget_t;
      if (gadget_kind == "join") t = 0;
      else if (gadget_kind == "odd" && t % 2 == 0) throw DomainError("odd gadget needs odd t");
      else if (gadget_kind == "even" && t % 2 != 0) throw DomainError("even gadget needs even t");
      else if (gadget_kind != "odd" && gadget_kind != "even") throw DomainError("unknown gadget '" + gadget_kind + "'");
      if (gadget_check) {
        const auto rep = verify_reduction(g, t, eopt);
        *out << rep.to_json_line() << '\n';
        if (rep.verdict == Verdict::rejected) return 1;
        return rep.verdict == Verdict::verified ? 0 : 2;
      }
      const auto h = t == 0 ? gadget_join(g) : t % 2 ? gadget_odd(g, t) : gadget_even(g, t);
      *out << encode_graph6(h.h) << '\n';
      return 0;
    }

    if (*gap) {
      GapReport rep;
      if (gap_file == "-") {
        rep = gap_report(std::cin, gap_t, eopt);
      } else {
        std::ifstream f(gap_file);
        if (!f) throw std::runtime_error("cannot open " + gap_file);
        rep = gap_report(f, gap_t, eopt);
      }
      bool failed = false;
      for (const auto& r : rep.rows) {
        failed = failed || !r.error.empty();
        if (format == "json") {
          nlohmann::ordered_json j;
          j["graph6"] = r.graph6;
          j["t"] = rep.t;
          if (r.error.empty()) {
            j["alpha"] = *r.alpha;
            j["eq"] = *r.eq;
            j["gap"] = *r.gap;
          } else {
            j["error"] = r.error;
          }
          *out << j.dump() << '\n';
        } else if (r.error.empty()) {
          *out << r.graph6 << "  alpha_" << rep.t - 1 << "=" << *r.alpha << "  eq_" << rep.t << "=" << *r.eq
               << "  gap=" << *r.gap << '\n';
        } else {
          *out << r.graph6 << "  error: " << r.error << '\n';
        }
      }
      if (format != "json") {
        *out << "max gap: ";
        if (rep.max_gap) *out << *rep.max_gap << '\n';
        else *out << "-\n";
      }
      return failed ? 1 : 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "eqdist: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
