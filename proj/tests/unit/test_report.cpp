#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "eqdist/graph6.hpp"
#include "eqdist/named.hpp"
#include "eqdist/report.hpp"
#include "eqdist/table.hpp"

using namespace eqdist;

namespace {

std::string run_bounds(RunConfig cfg) {
  std::ostringstream out;
  render(cmd_bounds(cfg), cfg, out);
  return out.str();
}

int cli(const std::string& args) {
  const int rc = std::system((std::string(EQDIST_CLI) + " " + args + " > /dev/null 2>&1").c_str());
  return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

const TableRowResult* find_row(const TableReport& rep, const std::string& graph) {
  for (const auto& r : rep.rows)
    if (normalize_name(r.golden.graph) == normalize_name(graph)) return &r;
  return nullptr;
}

std::vector<std::string> cells(const TableRowResult& r) {
  std::vector<std::string> out;
  for (const auto& [_, b] : r.suite->bounds) out.push_back(cell_text(b));
  out.push_back(std::to_string(r.suite->exact->value));
  return out;
}

}  // namespace

TEST_CASE("csv rows") {
  RunConfig cfg;
  cfg.names = {"petersen"};
  cfg.ts = {2};
  cfg.exact = true;
  cfg.format = Format::csv;
  CHECK(run_bounds(cfg) ==
        "graph,n,t,degree,inertial,ratio,haemers,phi,distance,quotient1,quotient2,exact\n"
        "petersen,10,2,7,4,4,4,7,6,4,-,4\n");

  cfg.names = {"j_7_3"};
  cfg.ts = {3};
  cfg.bounds = {"ratio"};
  cfg.suite.only = cfg.bounds;
  CHECK(run_bounds(cfg) == "graph,n,t,ratio,exact\nj_7_3,35,3,2,2\n");
}

TEST_CASE("graph6 file input, one row per line") {
  const auto path = std::filesystem::temp_directory_path() / "eqdist_corpus.g6";
  {
    std::ofstream f(path);
    f << encode_graph6(petersen()) << "\n\n" << encode_graph6(cycle_graph(6)) << "\nnot graph6\n";
  }
  RunConfig cfg;
  cfg.g6_files = {path.string()};
  cfg.ts = {3};
  cfg.bounds = {"distance"};
  cfg.suite.only = cfg.bounds;
  cfg.format = Format::csv;
  const auto rows = cmd_bounds(cfg);
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].graph == path.string() + ":1");
  CHECK(cell_text(rows[0].suite->bounds.at(0).second) == "6");  // five eigenvalues -3
  CHECK(rows[1].graph == path.string() + ":3");
  CHECK(rows[1].suite->bounds.size() == 1);
  CHECK_FALSE(rows[2].error.empty());
  std::filesystem::remove(path);
}

TEST_CASE("json output and determinism") {
  RunConfig cfg;
  cfg.names = {"petersen", "heawood", "thomsen", "moser_spindle", "coxeter"};
  cfg.ts = {2, 3, 0};
  cfg.exact = true;
  cfg.format = Format::json;
  cfg.threads = 4;
  const auto a = run_bounds(cfg);
  cfg.threads = 1;
  CHECK(run_bounds(cfg) == a);

  const auto rows = nlohmann::json::parse(a);
  REQUIRE(rows.size() == 15);
  CHECK(rows[0]["graph"] == "petersen");
  CHECK(rows[0]["bounds"]["distance"] == 6);
  CHECK(rows[0]["bounds"]["quotient2"]["na"] == "sign-condition-failed");
  CHECK(rows[2]["t"] == "eq");

  cfg.format = Format::csv;
  const auto c = run_bounds(cfg);
  cfg.threads = 3;
  CHECK(run_bounds(cfg) == c);
}

TEST_CASE("stored tables load") {
  for (auto id : {TableId::eq2, TableId::eq3, TableId::eq}) {
    const auto g = load_golden(id, default_data_dir());
    CHECK(g.rows.size() > 60);
    CHECK(g.columns.back() == "exact");
  }
  CHECK(parse_table_id("eq3") == TableId::eq3);
  CHECK_FALSE(parse_table_id("eq7"));
}

TEST_CASE("table rows for constructor-backed graphs") {
  TableOptions opt;
  opt.only = {"Petersen graph", "Heawood graph", "Octahedron", "Hexahedron"};
  const auto eq = cmd_table(TableId::eq, opt);
  REQUIRE(find_row(eq, "Heawood graph"));
  CHECK(cells(*find_row(eq, "Heawood graph")) == std::vector<std::string>{"8", "7", "7"});
  CHECK(cells(*find_row(eq, "Petersen graph")) == std::vector<std::string>{"6", "4", "4"});
  CHECK(eq.diffs.empty());

  const auto eq3 = cmd_table(TableId::eq3, opt);
  REQUIRE(find_row(eq3, "Octahedron"));
  CHECK(cells(*find_row(eq3, "Octahedron")) ==
        std::vector<std::string>{"37", "1", "1", "1", "1", "1", "1", "-", "1"});

  const auto eq2 = cmd_table(TableId::eq2, opt);
  // the Laplacian column is the one systematic disagreement for these graphs
  for (const auto& d : eq2.diffs) CHECK((d.column == "phi" || d.kind == "haemers-disconnected-power"));
}

TEST_CASE("command line exit codes") {
  CHECK(cli("bounds --name petersen --t 2 --format csv") == 0);
  CHECK(cli("bounds --name no_such_graph") == 1);
  CHECK(cli("bounds --g6 'D?' --t 2") == 1);
  CHECK(cli("bounds --name petersen --t zero") == 1);
  CHECK(cli("exact --name petersen --t 2 --format json") == 0);
  CHECK(cli("gadget even --name c_4 --t 2 --verify") == 0);
  CHECK(cli("gadget even --name k_3 --t 2 --verify") == 1);
  CHECK(cli("verify gadgets --count 10") == 0);
  CHECK(cli("verify nonsense") == 1);
  CHECK(cli("table eq --only 'Petersen graph'") == 0);
  CHECK(cli("table eq2 --only 'Petersen graph'") == 2);
  CHECK(cli("frobnicate") != 0);
}
