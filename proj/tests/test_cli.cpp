#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace {

struct Run {
  int status = -1;
  std::string out;
};

Run run(const std::string& args, const std::string& stdin_text = "") {
  const auto dir = std::filesystem::temp_directory_path();
  const auto input = dir / "fanq_cli_test_input.g6";
  std::ofstream(input) << stdin_text;
  const std::string cmd = std::string(FANQ_CLI_PATH) + " " + args + " < " + input.string() + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  std::size_t got = 0;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::string write_temp(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << text;
  return path.string();
}

int count_lines(const std::string& s) {
  int n = 0;
  for (char c : s) n += c == '\n';
  return n;
}

}  // namespace

TEST_CASE("q1 subcommand") {
  const Run k3 = run("q1", "Bw\n");
  CHECK(k3.status == 0);
  const auto j = nlohmann::json::parse(k3.out);
  REQUIRE(j.size() == 1);
  CHECK(j[0]["graph6"] == "Bw");
  CHECK(j[0]["n"] == 3);
  CHECK(j[0]["e"] == 3);
  CHECK(std::abs(j[0]["q1"].get<double>() - 4.0) < 1e-12);

  const Run s = run("q1", "I}rEEB?o?\n");
  CHECK(std::abs(nlohmann::json::parse(s.out)[0]["q1"].get<double>() - 11.6568542494924) < 1e-12);

  const Run empty = run("q1 --format tsv", "");
  CHECK(empty.status == 0);
  CHECK(count_lines(empty.out) <= 1);  // at most the header row
}

TEST_CASE("malformed input: fail fast or skip") {
  const Run strict = run("q1 --fail-fast", "Bw\nBx\n");
  CHECK(strict.status == 1);
  const Run lenient = run("q1", "Bw\nBx\nBg\n");
  CHECK(lenient.status == 0);
  CHECK(nlohmann::json::parse(lenient.out).size() == 2);
}

TEST_CASE("fan-free subcommand") {
  const Run r = run("fan-free --k 2", "G}rEE?\nD{c\nD~{\n");
  CHECK(r.status == 0);
  const auto j = nlohmann::json::parse(r.out);
  REQUIRE(j.size() == 3);
  CHECK(j[0]["fan_free"] == true);
  CHECK(j[1]["fan_free"] == false);
  CHECK(j[1]["center"] == 0);
  CHECK(j[2]["fan_free"] == false);
}

TEST_CASE("certify subcommand and exit codes") {
  const Run outside = run("certify --n 6 --k 2");
  CHECK(outside.status == 0);
  const auto o = nlohmann::json::parse(outside.out);
  CHECK(o["outside_theorem_regime"] == true);
  CHECK(o["verdict"] == "outside theorem regime");

  const Run confirmed = run("certify --n 8 --k 2 --jobs 1");
  CHECK(confirmed.status == 0);
  const auto c = nlohmann::json::parse(confirmed.out);
  CHECK(c["winner_is_split"] == true);
  CHECK(c["verdict"] == "confirmed");

  const Run sharded = run("certify --n 8 --k 2 --shards 8 --jobs 2");
  auto a = nlohmann::json::parse(sharded.out);
  auto b = c;
  a.erase("elapsed");
  b.erase("elapsed");
  CHECK(a == b);

  // A source that leaves out the split graph: the best remaining graph is not
  // S_{8,2}, which inside the regime is reported as a counterexample.
  const Run all = run("enumerate --n 8");
  std::string without;
  std::istringstream lines(all.out);
  const std::string split_form = c["winner"].get<std::string>();
  for (std::string line; std::getline(lines, line);)
    if (line != split_form) without += line + "\n";
  const std::string path = write_temp("fanq_cli_test_without_split.g6", without);
  const Run counter = run("certify --n 8 --k 2 --input " + path);
  CHECK(counter.status == 2);
  CHECK(nlohmann::json::parse(counter.out)["verdict"] == "counterexample");

  CHECK(run("certify --n 8 --k 2 --input /nonexistent/file").status == 1);
  CHECK(run("certify --n 30 --k 2").status == 1);
  CHECK(run("certify --n 8").status != 0);
}

TEST_CASE("enumerate, turan, bounds and construct subcommands") {
  const Run e = run("enumerate --n 5");
  CHECK(e.status == 0);
  CHECK(count_lines(e.out) == 34);
  CHECK(count_lines(run("enumerate --n 6 --connected-only").out) == 112);

  const Run t = run("turan --n 7 --pattern kk2 --k 2");
  CHECK(t.status == 0);
  const auto tj = nlohmann::json::parse(t.out);
  CHECK(tj["max_edges"] == 6);

  const Run b = run("bounds", "Dhc\n");
  CHECK(b.status == 0);
  const auto bj = nlohmann::json::parse(b.out);
  CHECK(std::abs(bj[0]["q1"].get<double>() - 4.0) < 1e-12);
  CHECK(std::abs(bj[0]["merris"].get<double>() - 4.0) < 1e-12);

  const Run c = run("construct --n 11 --k 3");
  CHECK(c.status == 0);
  const auto cj = nlohmann::json::parse(c.out);
  CHECK(cj["edges"] == 36);
  CHECK(cj["fan_free"] == true);
  CHECK(run("construct --n 5 --k 3").status == 1);
}

TEST_CASE("TSV and JSON carry the same values") {
  const std::string input = "Bw\nDhc\nI}rEEB?o?\n";
  const auto j = nlohmann::json::parse(run("q1", input).out);
  std::istringstream tsv(run("q1 --format tsv", input).out);
  std::string header;
  std::getline(tsv, header);
  CHECK(header == "graph6\tn\te\tq1");
  for (const auto& row : j) {
    std::string g6, n, e, q;
    std::getline(tsv, g6, '\t');
    std::getline(tsv, n, '\t');
    std::getline(tsv, e, '\t');
    std::getline(tsv, q);
    CHECK(g6 == row["graph6"].get<std::string>());
    CHECK(std::stoi(n) == row["n"].get<int>());
    CHECK(std::stoi(e) == row["e"].get<int>());
    CHECK(std::stod(q) == row["q1"].get<double>());
  }
}

TEST_CASE("config file, with flags taking precedence") {
  const std::string cfg = write_temp("fanq_cli_test.toml", "[certify]\nn = 6\nk = 2\n");
  const Run from_file = run("--config " + cfg + " certify");
  CHECK(from_file.status == 0);
  CHECK(nlohmann::json::parse(from_file.out)["n"] == 6);
  const Run overridden = run("--config " + cfg + " certify --n 7");
  CHECK(nlohmann::json::parse(overridden.out)["n"] == 7);
}
