#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "commands.hpp"
#include "config.hpp"

using grich::cli::run;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& text) {
  auto path = std::filesystem::temp_directory_path() / ("grich_test_" + name + ".yaml");
  std::ofstream(path) << text;
  return path.string();
}

int config_error_line(const std::string& yaml) {
  try {
    grich::cli::parse_config(yaml, "cfg");
  } catch (const grich::cli::ConfigError& e) {
    return e.line();
  }
  return -1;
}

const char* kBase = R"(alphabet: "01"
group:
  - kind: antimorphism
    map: ["0 -> 1", "1 -> 0"]
word:
  type: periodic
  period: "01"
prefix_length: 100
n_max: 5
)";

}  // namespace

TEST(Cli, WordPrefix) {
  auto r = call({"--preset", "fibonacci", "word", "--length", "10"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "0100101001\n");
}

TEST(Cli, ConfigFile) {
  auto path = write_temp("base", kBase);
  auto r = call({"--config", path, "word", "--length", "6"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "010101\n");
  auto g = call({"--config", path, "group"});
  EXPECT_EQ(g.code, 0);
  EXPECT_NE(g.out.find("a:10"), std::string::npos);
}

TEST(Cli, Table1) {
  auto r = call({"repro", "table1"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("\n10,9,8,100110,"), std::string::npos);
  EXPECT_NE(r.out.find("\n16,15,13,0110100110010110,"), std::string::npos);
}

TEST(Cli, FiguresOneToSix) {
  for (const char* fig : {"fig1", "fig2", "fig3", "fig4", "fig5", "fig6"}) {
    auto r = call({"repro", fig});
    EXPECT_EQ(r.code, 0) << fig << ": " << r.err;
    EXPECT_NE(r.out.find("graph "), std::string::npos);
  }
  auto f6 = call({"repro", "fig6"});
  EXPECT_NE(f6.out.find("// tls=fails"), std::string::npos);
}

TEST(Cli, Fig7ReportsTheExtraLoop) {
  auto r = call({"repro", "fig7"});
  EXPECT_EQ(r.code, grich::cli::kRefuted);
  EXPECT_NE(r.out.find("[012201]"), std::string::npos);
  EXPECT_NE(r.out.find("[012120]"), std::string::npos);
  EXPECT_NE(r.out.find("[0120]"), std::string::npos);
  EXPECT_NE(r.err.find("[012201]"), std::string::npos);
}

TEST(Cli, Verify) {
  auto r = call({"--preset", "thue-morse", "verify", "--nmax", "12"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("verdict=rich"), std::string::npos);
  auto idr = call({"--preset", "thue-morse-idr", "verify", "--nmax", "12"});
  EXPECT_EQ(idr.code, 0);
  EXPECT_NE(idr.out.find("verdict=refuted"), std::string::npos);
}

TEST(Cli, ComplexityAndDefectCsv) {
  auto c = call({"--preset", "fibonacci", "complexity", "--nmax", "3"});
  EXPECT_EQ(c.code, 0);
  EXPECT_EQ(c.out.substr(0, c.out.find('\n')), "n,C,dC,d2C,P(a:01)");
  auto d = call({"--preset", "thue-morse", "defect", "--length", "19"});
  EXPECT_EQ(d.code, 0) << d.err;
  EXPECT_NE(d.out.find("\n7,8,5,110100,"), std::string::npos);
}

TEST(Cli, ReturnsAndLps) {
  auto r = call({"--preset", "fibonacci", "returns", "010", "--length", "200"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("010010"), std::string::npos);
  EXPECT_NE(r.out.find("01010"), std::string::npos);
  auto l = call({"--preset", "thue-morse", "lps", "7"});
  EXPECT_EQ(l.code, 0);
  EXPECT_EQ(l.out.substr(0, 11), "lps=110100\n");
}

TEST(Cli, GraphNeedsOrder) {
  EXPECT_EQ(call({"--preset", "thue-morse", "graph", "rauzy"}).code, grich::cli::kConfigError);
  auto r = call({"--preset", "thue-morse", "graph", "sym-undirected", "--n", "3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("// tls=satisfied"), std::string::npos);
}

TEST(Cli, Output) {
  auto path = (std::filesystem::temp_directory_path() / "grich_test_out.txt").string();
  EXPECT_EQ(call({"--preset", "fibonacci", "word", "--length", "5", "--out", path}).code, 0);
  std::ifstream in(path);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "01001");
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(call({}).code, grich::cli::kConfigError);
  EXPECT_EQ(call({"word"}).code, grich::cli::kConfigError);
  EXPECT_EQ(call({"--config", "/nonexistent.yaml", "word"}).code, grich::cli::kConfigError);
  EXPECT_EQ(call({"repro", "fig9"}).code, grich::cli::kConfigError);
  EXPECT_EQ(call({"--preset", "fibonacci", "--format", "dot", "complexity"}).code, grich::cli::kConfigError);
  auto path = write_temp("literal", R"(alphabet: "01"
group:
  - kind: antimorphism
    map: ["0 -> 0", "1 -> 1"]
word:
  type: literal
  word: "0110"
prefix_length: 4
n_max: 2
)");
  auto r = call({"--config", path, "word", "--length", "10"});
  EXPECT_EQ(r.code, grich::cli::kInsufficientPrefix) << r.err;
}

TEST(Config, LinePreciseErrors) {
  EXPECT_EQ(config_error_line(kBase), -1);
  EXPECT_EQ(config_error_line(std::string(kBase) + "colour: red\n"), 10);
  EXPECT_EQ(config_error_line(R"(alphabet: "01"
group:
  - kind: antimorphism
    map: ["0 -> 1", "1 -> 1"]
)"),
            4);
  EXPECT_EQ(config_error_line(R"(alphabet: "01"
group:
  - kind: antimorphism
    map: ["0 -> 1", "1 -> 0"]
word:
  type: periodic
  period: "012"
)"),
            7);
  EXPECT_EQ(config_error_line(R"(alphabet: "01"
group:
  - kind: sideways
    map: ["0 -> 1", "1 -> 0"]
)"),
            3);
  EXPECT_EQ(config_error_line("alphabet: \"01\"\nn_max: 30\nprefix_length: 10\n"), 3);
  EXPECT_EQ(config_error_line("alphabet: [unclosed\n"), 2);
}

TEST(Config, ErrorMessageNamesOriginAndLine) {
  auto path = write_temp("bad", std::string(kBase) + "colour: red\n");
  auto r = call({"--config", path, "word"});
  EXPECT_EQ(r.code, grich::cli::kConfigError);
  EXPECT_NE(r.err.find(path + ":10:"), std::string::npos) << r.err;
}

TEST(Config, ArrowStringForm) {
  auto cfg = grich::cli::parse_config(R"(alphabet: "012"
group:
  - kind: antimorphism
    map: "0->2 1->1 2->0"
)",
                                      "cfg");
  ASSERT_TRUE(cfg.group.has_value());
  EXPECT_EQ(cfg.group->order(), 2u);
}

TEST(Config, EmbeddedPresetsParse) {
  for (const char* name : {"fibonacci", "thue-morse", "thue-morse-idr", "t33", "u", "v", "v-h0", "v-h1", "v-h2"}) {
    auto text = grich::cli::embedded_config(name);
    ASSERT_TRUE(text.has_value()) << name;
    EXPECT_NO_THROW(grich::cli::parse_config(*text, name)) << name;
  }
}
