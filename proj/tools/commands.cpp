#include "commands.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "config.hpp"
#include "grich/lang_index.hpp"
#include "grich/palin.hpp"
#include "grich/presets.hpp"
#include "grich/symgraph.hpp"
#include "grich/verify.hpp"

namespace grich::cli {

namespace {

struct Flags {
  std::string config;
  std::string preset;
  std::optional<std::size_t> n;
  std::optional<std::size_t> length;
  std::optional<std::size_t> n_max;
  std::optional<std::size_t> threshold;
  std::string out;
  std::string format;
};

/// A failed golden comparison or a refuted identity; maps to exit code 4.
class Mismatch : public Error {
 public:
  explicit Mismatch(const std::string& what, std::string output = {})
      : Error(what), output_(std::move(output)) {}
  /// Output produced before the comparison failed; still printed.
  const std::string& output() const { return output_; }

 private:
  std::string output_;
};

struct Context {
  AnalysisConfig cfg;
  Flags flags;

  std::size_t length() const { return flags.length.value_or(cfg.prefix_length); }
  std::size_t n_max() const { return flags.n_max.value_or(cfg.n_max); }
  std::size_t threshold() const { return flags.threshold.value_or(cfg.threshold); }

  const WordSource& word() const {
    if (!cfg.word) throw ConfigError("config", 0, "this command needs a 'word' section");
    return *cfg.word;
  }
  const SymmetryGroup& group() const {
    if (!cfg.group) throw ConfigError("config", 0, "this command needs a 'group' section");
    return *cfg.group;
  }
  std::string format(const std::string& fallback, std::initializer_list<const char*> allowed) const {
    std::string f = !flags.format.empty() ? flags.format : !cfg.format.empty() ? cfg.format : fallback;
    for (const char* a : allowed) {
      if (f == a) return f;
    }
    throw ConfigError("config", 0, "format '" + f + "' is not available for this command");
  }
  Word text() const { return word().prefix(length()); }
};

Context embedded(const std::string& name, const Flags& flags) {
  auto text = embedded_config(name);
  if (!text) throw ConfigError("preset", 0, "no embedded config named '" + name + "'");
  return Context{parse_config(*text, "preset:" + name), flags};
}

std::string render_maps(const Alphabet& alphabet, const std::vector<SymmetryMap>& maps) {
  std::string out;
  for (const auto& m : maps) out += (out.empty() ? "" : " ") + m.name(alphabet);
  return out;
}

std::string cmd_word(const Context& ctx) { return ctx.cfg.alphabet.render(ctx.text()) + "\n"; }

std::string cmd_group(const Context& ctx) {
  const auto& g = ctx.group();
  const auto& a = ctx.cfg.alphabet;
  std::ostringstream os;
  os << "order: " << g.order() << "\n";
  os << "elements: " << render_maps(a, g.elements()) << "\n";
  os << "involutive antimorphisms: " << render_maps(a, g.involutive_antimorphisms()) << "\n";
  os << "has antimorphism: " << (g.has_antimorphism() ? "yes" : "no") << "\n";
  os << "abelian: " << (g.is_abelian() ? "yes" : "no") << "\n";
  os << "involutively generated: " << (g.is_involutively_generated() ? "yes" : "no") << "\n";
  if (ctx.cfg.word) {
    const LanguageIndex index(ctx.text(), ctx.n_max());
    std::string d = "none up to " + std::to_string(ctx.n_max());
    for (std::size_t n = 0; n <= ctx.n_max(); ++n) {
      if (distinguishing_at(g, index, n)) {
        d = std::to_string(n);
        break;
      }
    }
    os << "first distinguishing n: " << d << "\n";
  }
  return os.str();
}

std::string cmd_complexity(const Context& ctx) {
  ctx.format("csv", {"csv"});
  const LanguageIndex index(ctx.text(), ctx.n_max());
  std::vector<SymmetryMap> thetas;
  if (ctx.cfg.group) thetas = ctx.cfg.group->antimorphisms();
  return complexity(index, thetas).to_csv(ctx.cfg.alphabet);
}

std::string defect_csv(const SymmetryGroup& g, const Alphabet& alphabet, WordView text) {
  const auto involutions = g.involutive_antimorphisms();
  std::vector<std::vector<std::size_t>> counts;
  for (const auto& theta : involutions) counts.push_back(theta_palindrome_counts(theta, text));
  const auto profile = g_defect(g, text);
  std::set<std::size_t> lacunas(profile.lacunas.begin(), profile.lacunas.end());

  std::ostringstream os;
  os << "n";
  for (const auto& theta : involutions) os << ",pal(" << theta.name(alphabet) << ")";
  os << ",lps,defect,lacuna\n";
  for (std::size_t n = 0; n <= text.size(); ++n) {
    os << n;
    for (const auto& c : counts) os << ',' << c[n];
    os << ',' << alphabet.render(text.substr(n - profile.lps_length[n], profile.lps_length[n])) << ','
       << profile.defect[n] << ',' << (lacunas.count(n) ? 1 : 0) << "\n";
  }
  return os.str();
}

std::string cmd_defect(const Context& ctx) {
  ctx.format("csv", {"csv"});
  return defect_csv(ctx.group(), ctx.cfg.alphabet, ctx.text());
}

std::string cmd_returns(const Context& ctx, const std::string& glyphs) {
  const auto& a = ctx.cfg.alphabet;
  Word w;
  try {
    w = a.parse(glyphs);
  } catch (const DomainError& e) {
    throw ConfigError("argument", 0, e.what());
  }
  if (w.empty()) throw ConfigError("argument", 0, "return words need a nonempty factor");
  const Word text = ctx.text();
  std::ostringstream os;
  os << "return_word,g_palindrome\n";
  for (const auto& v : complete_g_return_words(ctx.group(), w, text)) {
    os << a.render(v) << ',' << (ctx.group().is_palindrome(v) ? "yes" : "no") << "\n";
  }
  return os.str();
}

std::string cmd_lps(const Context& ctx, std::size_t len) {
  const Word text = ctx.word().prefix(len);
  const auto witness = g_palindrome(ctx.group(), g_lps(ctx.group(), text));
  std::ostringstream os;
  os << "lps=" << ctx.cfg.alphabet.render(witness.word) << "\n";
  os << "fixers=" << render_maps(ctx.cfg.alphabet, witness.fixers) << "\n";
  os << "unioccurrent=" << (g_unioccurrent(ctx.group(), witness.word, text) ? "yes" : "no") << "\n";
  return os.str();
}

std::size_t require_n(const Context& ctx) {
  if (!ctx.flags.n) throw ConfigError("arguments", 0, "graph needs --n <order>");
  return *ctx.flags.n;
}

std::string cmd_graph(const Context& ctx, const std::string& kind) {
  ctx.format("dot", {"dot"});
  const std::size_t n = require_n(ctx);
  const std::size_t n_max = std::max(ctx.n_max(), n + 1);
  const LanguageIndex index(ctx.text(), n_max);
  if (kind == "rauzy") return rauzy_graph(index, n).to_dot(ctx.cfg.alphabet);
  const auto graph = symmetry_graph(ctx.group(), index, n);
  if (kind == "sym-directed") return graph.directed_dot(ctx.cfg.alphabet);
  const auto verdict = tls_verdict(ctx.group(), graph);
  std::string dot = graph.undirected_dot(ctx.cfg.alphabet);
  dot += "// tls=" + std::string(verdict.satisfied ? "satisfied" : "fails");
  if (!verdict.satisfied) dot += " (" + verdict.witness(ctx.cfg.alphabet) + ")";
  return dot + "\n";
}

std::string cmd_verify(const Context& ctx, int& code) {
  ctx.format("report", {"report"});
  VerifyOptions opt;
  opt.length = ctx.length();
  opt.n_max = ctx.n_max();
  opt.threshold = ctx.threshold();
  opt.word_id = ctx.cfg.word_id;
  opt.group_id = ctx.cfg.group_id;
  const auto report = verify(ctx.group(), ctx.word(), opt);
  if (report.summary.inconsistency) code = kRefuted;
  return report.to_text(ctx.cfg.alphabet) + "---\n" + report.to_kv(ctx.cfg.alphabet);
}

// Golden data for the reproductions.

struct TableRow {
  std::size_t pal_r, pal_e;
  const char* lps;
};

constexpr TableRow kTable1[20] = {
    {1, 1, ""},          {2, 1, "0"},         {3, 2, "01"},          {4, 2, "11"},
    {5, 3, "0110"},      {6, 3, "101"},       {7, 4, "1010"},        {8, 5, "110100"},
    {9, 6, "01101001"},  {9, 7, "0011"},      {9, 8, "100110"},      {10, 9, "001100"},
    {11, 10, "10011001"}, {12, 10, "0100110010"}, {13, 11, "101001100101"}, {14, 12, "11010011001011"},
    {15, 13, "0110100110010110"}, {16, 13, "101101"}, {17, 13, "01011010"}, {18, 13, "0010110100"},
};

struct FigureGolden {
  std::vector<const char*> vertices;  // compared by class
  std::vector<const char*> edges;     // directed labels or undirected class labels
};

std::set<Word> classes_of(const SymmetryGroup& g, const Alphabet& a, const std::vector<const char*>& labels) {
  std::set<Word> out;
  for (const char* s : labels) out.insert(g.canonical(a.parse(s)));
  return out;
}

void expect(bool ok, const std::string& what) {
  if (!ok) throw Mismatch("reproduction mismatch: " + what);
}

std::string repro_table1(const Flags& flags) {
  auto ctx = embedded("thue-morse", flags);
  const Word text = ctx.cfg.word->prefix(19);
  std::string csv = defect_csv(*ctx.cfg.group, ctx.cfg.alphabet, text);
  std::istringstream lines(csv);
  std::string line;
  std::getline(lines, line);
  for (std::size_t n = 0; n < 20; ++n) {
    std::getline(lines, line);
    std::ostringstream want;
    want << n << ',' << kTable1[n].pal_r << ',' << kTable1[n].pal_e << ',' << kTable1[n].lps << ',';
    expect(line.rfind(want.str(), 0) == 0, "table row " + std::to_string(n) + " is '" + line + "'");
  }
  return csv;
}

std::string repro_figure(const std::string& name, const Flags& flags) {
  struct Figure {
    const char* preset;
    const char* kind;
    FigureGolden golden;
    bool tls;
  };
  static const std::map<std::string, Figure> kFigures = {
      {"fig1", {"fibonacci", "sym-directed", {{"010"}, {"010010", "01010"}}, true}},
      {"fig2", {"fibonacci", "sym-undirected", {{"010"}, {"010010", "01010"}}, true}},
      {"fig3",
       {"thue-morse", "rauzy",
        {{"001", "010", "011", "100", "101", "110"},
         {"1010", "0101", "0100", "0010", "1011", "1101", "1001", "0011", "0110", "1100"}},
        true}},
      {"fig4",
       {"thue-morse", "sym-directed",
        {{"011", "101"}, {"0100", "1011", "0010", "1101", "0011", "1100", "0110", "1001", "0101", "1010"}},
        true}},
      {"fig5", {"thue-morse", "sym-undirected", {{"011", "101"}, {"0100", "1010", "1100", "1001"}}, true}},
      {"fig6",
       {"thue-morse-idr", "sym-undirected",
        {{"011", "101", "010", "001"}, {"1011", "0101", "0010", "0011", "0110", "1001"}},
        false}},
      {"fig7", {"t33", "sym-undirected", {{"012"}, {"012120", "0120"}}, true}},
  };
  auto it = kFigures.find(name);
  if (it == kFigures.end()) throw ConfigError("arguments", 0, "unknown reproduction '" + name + "'");
  const auto& fig = it->second;
  Flags f = flags;
  f.n = 3;
  f.format.clear();
  auto ctx = embedded(fig.preset, f);
  const auto& a = ctx.cfg.alphabet;
  const auto& g = *ctx.cfg.group;
  const LanguageIndex index(ctx.text(), ctx.n_max());
  const std::string dot = cmd_graph(ctx, fig.kind);
  auto expect = [&](bool ok, const std::string& what) {
    if (!ok) throw Mismatch("reproduction mismatch: " + what, dot);
  };

  if (std::string(fig.kind) == "rauzy") {
    auto r = rauzy_graph(index, 3);
    std::set<Word> v(r.vertices.begin(), r.vertices.end()), e(r.edges.begin(), r.edges.end());
    std::set<Word> gv, ge;
    for (const char* s : fig.golden.vertices) gv.insert(a.parse(s));
    for (const char* s : fig.golden.edges) ge.insert(a.parse(s));
    expect(v == gv && e == ge, name + " vertex or edge set");
  } else {
    auto graph = symmetry_graph(g, index, 3);
    std::set<Word> v;
    for (const auto& vx : graph.vertices) v.insert(vx.rep);
    expect(v == classes_of(g, a, fig.golden.vertices), name + " vertex classes");
    std::set<Word> e;
    if (std::string(fig.kind) == "sym-directed") {
      for (const auto& ed : graph.directed) e.insert(ed.label);
      std::set<Word> ge;
      for (const char* s : fig.golden.edges) ge.insert(a.parse(s));
      expect(e == ge, name + " directed edge labels");
    } else {
      for (const auto& ed : graph.undirected) e.insert(ed.rep);
      std::string found;
      for (const auto& w : e) found += " [" + a.render(w) + "]";
      expect(e == classes_of(g, a, fig.golden.edges), name + " undirected edge classes, computed" + found);
    }
    expect(tls_verdict(g, graph).satisfied == fig.tls, name + " tree-like structure verdict");
  }
  return dot;
}

std::string repro_subgroups(const Flags& flags) {
  std::ostringstream os;
  auto describe = [&](const std::string& preset, const std::string& title) {
    auto ctx = embedded(preset, flags);
    VerifyOptions opt;
    opt.length = ctx.length();
    opt.n_max = ctx.n_max();
    opt.word_id = ctx.cfg.word_id;
    opt.group_id = ctx.cfg.group_id;
    auto scan = subgroup_scan(*ctx.cfg.group, *ctx.cfg.word, opt);
    os << title << ": whole group " << to_string(scan.whole.verdict()) << "\n";
    for (const auto& r : scan.results) {
      os << "  " << r.subgroup.describe(ctx.cfg.alphabet) << " order " << r.subgroup.order() << ": "
         << to_string(r.report.verdict());
      if (r.identity_checked) {
        os << ", index two " << (r.index_two ? "yes" : "no") << ", identity";
        for (const auto& [n, sum] : r.identity_values) os << " n=" << n << ":" << sum;
        expect(r.index_two && r.identity_holds, "index-two identity for a rich proper subgroup");
      }
      os << "\n";
    }
    return scan;
  };

  auto h = describe("v", "v under H");
  auto psi = presets::psis();
  for (std::size_t i = 0; i < 3; ++i) {
    auto hi = presets::group_h_sub(i);
    bool found = false;
    for (const auto& r : h.results) {
      if (r.subgroup == hi) found = r.report.rich() && r.identity_checked && r.identity_holds;
    }
    expect(found, "H" + std::to_string(i) + " rich with the index-two identity");
  }
  auto t = describe("thue-morse", "t22 under I2(2)");
  const auto idr = presets::id_r(2);
  for (const auto& r : t.results) {
    if (r.subgroup == idr) expect(!r.report.rich(), "t22 is not {Id,R}-rich");
  }
  return os.str();
}

std::string cmd_repro(const std::string& name, const Flags& flags) {
  if (name == "table1") return repro_table1(flags);
  if (name.rfind("fig", 0) == 0) return repro_figure(name, flags);
  if (name == "subgroups") return repro_subgroups(flags);
  if (name == "ex8" || name == "ex6") {
    const std::size_t length = flags.length.value_or(2000);
    const std::size_t n_max = flags.n_max.value_or(30);
    auto report = name == "ex8" ? repro_ex8(length, n_max) : repro_ex6(length, n_max);
    std::string text = report.to_text();
    if (!report.ok()) throw Mismatch("reproduction mismatch: " + name, text);
    return text;
  }
  throw ConfigError("arguments", 0, "unknown reproduction '" + name + "'");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Palindromic richness toolkit for words closed under groups of symmetries", "grich"};
  app.require_subcommand(1);
  app.fallthrough();
  Flags flags;
  auto* config_opt = app.add_option("--config", flags.config, "YAML analysis config");
  app.add_option("--preset", flags.preset, "Built-in config: fibonacci, thue-morse, thue-morse-idr, t33, u, v, v-h0..v-h2")
      ->excludes(config_opt);
  app.add_option("--n", flags.n, "Graph order");
  app.add_option("--length", flags.length, "Prefix length L");
  app.add_option("--nmax", flags.n_max, "Largest factor length analysed");
  app.add_option("--threshold", flags.threshold, "Threshold N of the properties");
  app.add_option("--out", flags.out, "Write the output to this file");
  app.add_option("--format", flags.format, "csv, dot or report")->check(CLI::IsMember({"csv", "dot", "report"}));

  std::string returns_word, graph_kind, repro_name, preset_name;
  std::size_t lps_length = 0;
  auto* word = app.add_subcommand("word", "Print a prefix of the word");
  auto* group = app.add_subcommand("group", "Describe the group closure");
  auto* cx = app.add_subcommand("complexity", "Factor and palindromic complexity (CSV)");
  auto* defect = app.add_subcommand("defect", "Palindrome counts, G-lps and G-defect per prefix (CSV)");
  auto* returns = app.add_subcommand("returns", "Complete G-return words of a factor");
  returns->add_option("w", returns_word, "Factor")->required();
  auto* lps = app.add_subcommand("lps", "G-lps of a prefix");
  lps->add_option("length", lps_length, "Prefix length")->required();
  auto* graph = app.add_subcommand("graph", "Rauzy graph or graph of symmetries (DOT)");
  graph->add_option("kind", graph_kind, "rauzy, sym-directed or sym-undirected")
      ->required()
      ->check(CLI::IsMember({"rauzy", "sym-directed", "sym-undirected"}));
  auto* verify_cmd = app.add_subcommand("verify", "Cross-check every characterization of G-richness");
  auto* repro = app.add_subcommand("repro", "Reproduce a table, figure or example");
  repro->add_option("name", repro_name, "table1, fig1..fig7, ex8, ex6 or subgroups")->required();
  auto* preset = app.add_subcommand("preset", "Print a built-in config as YAML");
  preset->add_option("name", preset_name, "Preset name")->required();

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kConfigError;
  }

  try {
    std::string output;
    int code = kOk;
    if (repro->parsed()) {
      output = cmd_repro(repro_name, flags);
    } else if (preset->parsed()) {
      auto text = embedded_config(preset_name);
      if (!text) throw ConfigError("arguments", 0, "no embedded config named '" + preset_name + "'");
      output = std::string(*text);
    } else {
      if (flags.config.empty() && flags.preset.empty())
        throw ConfigError("arguments", 0, "--config or --preset is required for this command");
      Context ctx = flags.preset.empty() ? Context{load_config(flags.config), flags} : embedded(flags.preset, flags);
      if (word->parsed()) output = cmd_word(ctx);
      else if (group->parsed()) output = cmd_group(ctx);
      else if (cx->parsed()) output = cmd_complexity(ctx);
      else if (defect->parsed()) output = cmd_defect(ctx);
      else if (returns->parsed()) output = cmd_returns(ctx, returns_word);
      else if (lps->parsed()) output = cmd_lps(ctx, lps_length);
      else if (graph->parsed()) output = cmd_graph(ctx, graph_kind);
      else if (verify_cmd->parsed()) output = cmd_verify(ctx, code);
    }
    if (flags.out.empty()) {
      out << output;
    } else {
      std::ofstream file(flags.out);
      if (!file) throw ConfigError(flags.out, 0, "cannot write output file");
      file << output;
    }
    return code;
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << "\n";
    return kConfigError;
  } catch (const InsufficientPrefixError& e) {
    err << "insufficient prefix: " << e.what() << "\n";
    return kInsufficientPrefix;
  } catch (const Mismatch& e) {
    out << e.output();
    err << e.what() << "\n";
    return kRefuted;
  } catch (const InvariantError& e) {
    err << "invariant violated: " << e.what() << "\n";
    return kRefuted;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kConfigError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kFailure;
  }
}

}  // namespace grich::cli
