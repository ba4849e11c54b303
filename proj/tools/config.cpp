#include "config.hpp"

#include <yaml-cpp/yaml.h>

#include <fstream>
#include <regex>
#include <set>
#include <sstream>

namespace grich::cli {

ConfigError::ConfigError(const std::string& origin, int line, const std::string& message)
    : Error(origin + (line > 0 ? ":" + std::to_string(line) : std::string()) + ": " + message), line_(line) {}

namespace {

const std::set<std::string> kTopKeys = {"name",      "alphabet", "group",     "group_name", "word",
                                        "word_name", "prefix_length", "n_max", "threshold", "format"};

class Reader {
 public:
  explicit Reader(std::string origin) : origin_(std::move(origin)) {}

  [[noreturn]] void fail(const YAML::Node& node, const std::string& message) const {
    int line = node.IsDefined() && node.Mark().line >= 0 ? node.Mark().line + 1 : 0;
    throw ConfigError(origin_, line, message);
  }

  std::string scalar(const YAML::Node& node, const std::string& what) const {
    if (!node.IsDefined() || node.IsNull()) throw ConfigError(origin_, 0, "missing " + what);
    if (!node.IsScalar()) fail(node, what + " must be a scalar");
    return node.Scalar();
  }

  std::size_t number(const YAML::Node& node, const std::string& what) const {
    std::string s = scalar(node, what);
    try {
      std::size_t used = 0;
      long long v = std::stoll(s, &used);
      if (used != s.size() || v < 0) fail(node, what + " must be a nonnegative integer, got '" + s + "'");
      return static_cast<std::size_t>(v);
    } catch (const std::logic_error&) {
      fail(node, what + " must be a nonnegative integer, got '" + s + "'");
    }
  }

  Word glyphs(const Alphabet& alphabet, const YAML::Node& node, const std::string& text) const {
    try {
      return alphabet.parse(text);
    } catch (const DomainError& e) {
      fail(node, e.what());
    }
  }

  /// "a -> w" pairs, given either as a list of strings or as one space-separated string.
  std::vector<std::pair<std::string, std::string>> arrows(const YAML::Node& node, const std::string& what) const {
    std::vector<std::string> items;
    if (node.IsSequence()) {
      for (const auto& item : node) items.push_back(scalar(item, what + " entry"));
    } else if (node.IsScalar()) {
      static const std::regex kArrow(R"(\s*->\s*)");
      std::istringstream is(std::regex_replace(node.Scalar(), kArrow, "->"));
      for (std::string token; is >> token;) items.push_back(token);
    } else {
      fail(node, what + " must be a list of \"a -> w\" strings");
    }

    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& item : items) {
      auto pos = item.find("->");
      if (pos == std::string::npos) fail(node, what + ": expected \"a -> w\", got '" + item + "'");
      auto trim = [](std::string s) {
        auto b = s.find_first_not_of(" \t");
        auto e = s.find_last_not_of(" \t");
        return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
      };
      out.emplace_back(trim(item.substr(0, pos)), trim(item.substr(pos + 2)));
    }
    return out;
  }

  Substitution substitution(const Alphabet& from, const Alphabet& to, const YAML::Node& node) const {
    std::vector<std::optional<Word>> images(from.size());
    for (const auto& [lhs, rhs] : arrows(node, "rules")) {
      if (lhs.size() != 1) fail(node, "rule left side must be a single glyph, got '" + lhs + "'");
      Letter a = glyphs(from, node, lhs).front();
      if (images[a]) fail(node, std::string("duplicate rule for '") + lhs + "'");
      if (rhs.empty()) fail(node, std::string("erasing rule for '") + lhs + "'");
      images[a] = glyphs(to, node, rhs);
    }
    std::vector<Word> out;
    for (std::size_t a = 0; a < images.size(); ++a) {
      if (!images[a]) fail(node, std::string("no rule for '") + from.glyph(static_cast<Letter>(a)) + "'");
      out.push_back(*images[a]);
    }
    return Substitution(std::move(out), to.size());
  }

  SymmetryMap generator(const Alphabet& alphabet, const YAML::Node& node) const {
    if (!node.IsMap()) fail(node, "generator must be a mapping with 'kind' and 'map'");
    std::string kind = scalar(node["kind"], "generator kind");
    if (kind != "morphism" && kind != "antimorphism") {
      fail(node["kind"], "generator kind must be 'morphism' or 'antimorphism', got '" + kind + "'");
    }
    const YAML::Node map = node["map"];
    if (!map.IsDefined()) fail(node, "generator without 'map'");
    std::vector<std::optional<Letter>> perm(alphabet.size());
    for (const auto& [lhs, rhs] : arrows(map, "map")) {
      if (lhs.size() != 1 || rhs.size() != 1) fail(map, "map entries must send one glyph to one glyph");
      Letter a = glyphs(alphabet, map, lhs).front();
      if (perm[a]) fail(map, "glyph '" + lhs + "' mapped twice");
      perm[a] = glyphs(alphabet, map, rhs).front();
    }
    std::vector<Letter> table;
    for (std::size_t a = 0; a < perm.size(); ++a) {
      if (!perm[a]) fail(map, std::string("map does not cover '") + alphabet.glyph(static_cast<Letter>(a)) + "'");
      table.push_back(*perm[a]);
    }
    try {
      return SymmetryMap(std::move(table), kind == "antimorphism");
    } catch (const DomainError& e) {
      fail(map, e.what());
    }
  }

  SymmetryGroup group(const Alphabet& alphabet, const YAML::Node& node, std::string& id) const {
    if (node.IsMap()) {
      if (!node["dihedral"].IsDefined()) fail(node, "group mapping must have 'dihedral: m'");
      std::size_t m = number(node["dihedral"], "dihedral order");
      if (m != alphabet.size()) {
        fail(node["dihedral"], "dihedral order " + std::to_string(m) + " does not match alphabet size " +
                                   std::to_string(alphabet.size()));
      }
      id = "I2(" + std::to_string(m) + ")";
      return dihedral_group(m);
    }
    if (!node.IsSequence() || node.size() == 0) fail(node, "group must be a nonempty list of generators");
    std::vector<SymmetryMap> gens;
    for (const auto& g : node) gens.push_back(generator(alphabet, g));
    id = "<" + std::to_string(gens.size()) + " generators>";
    return SymmetryGroup::close(gens);
  }

  WordSource word(const Alphabet& alphabet, const YAML::Node& node) const {
    if (!node.IsMap()) fail(node, "word must be a mapping with a 'type'");
    std::string type = scalar(node["type"], "word type");
    try {
      if (type == "fixed-point") {
        auto rules = substitution(alphabet, alphabet, node["rules"]);
        Letter seed = glyphs(alphabet, node["seed"], scalar(node["seed"], "seed")).at(0);
        return WordSource::fixed_point(std::move(rules), seed);
      }
      if (type == "digit-sum") {
        auto base = static_cast<unsigned>(number(node["base"], "base"));
        auto modulus = static_cast<unsigned>(number(node["modulus"], "modulus"));
        if (modulus != alphabet.size()) fail(node["modulus"], "modulus must equal the alphabet size");
        return WordSource::digit_sum(base, modulus);
      }
      if (type == "periodic") {
        return WordSource::periodic(glyphs(alphabet, node["period"], scalar(node["period"], "period")),
                                    alphabet.size());
      }
      if (type == "literal") {
        return WordSource::literal(glyphs(alphabet, node["word"], scalar(node["word"], "word")), alphabet.size());
      }
      if (type == "morphic-image") {
        Alphabet source(scalar(node["source_alphabet"], "source_alphabet"));
        auto rules = substitution(source, alphabet, node["rules"]);
        if (!node["inner"].IsDefined()) fail(node, "morphic-image needs an 'inner' word");
        return WordSource::morphic_image(std::move(rules), word(source, node["inner"]));
      }
    } catch (const ConfigError&) {
      throw;
    } catch (const DomainError& e) {
      fail(node, e.what());
    }
    fail(node["type"], "unknown word type '" + type + "'");
  }

 private:
  std::string origin_;
};

}  // namespace

AnalysisConfig parse_config(std::string_view text, const std::string& origin) {
  YAML::Node root;
  try {
    root = YAML::Load(std::string(text));
  } catch (const YAML::ParserException& e) {
    throw ConfigError(origin, e.mark.line + 1, e.msg);
  }
  Reader reader(origin);
  if (!root.IsMap()) throw ConfigError(origin, 1, "config must be a mapping");
  for (const auto& kv : root) {
    const std::string key = kv.first.as<std::string>();
    if (!kTopKeys.count(key)) reader.fail(kv.first, "unknown key '" + key + "'");
  }

  AnalysisConfig cfg;
  const YAML::Node alphabet = root["alphabet"];
  try {
    cfg.alphabet = Alphabet(reader.scalar(alphabet, "alphabet"));
  } catch (const DomainError& e) {
    reader.fail(alphabet, e.what());
  }
  if (root["name"].IsDefined()) cfg.word_id = reader.scalar(root["name"], "name");
  if (root["group"].IsDefined()) cfg.group = reader.group(cfg.alphabet, root["group"], cfg.group_id);
  if (root["word"].IsDefined()) cfg.word = reader.word(cfg.alphabet, root["word"]);
  if (root["word_name"].IsDefined()) cfg.word_id = reader.scalar(root["word_name"], "word_name");
  if (root["group_name"].IsDefined()) cfg.group_id = reader.scalar(root["group_name"], "group_name");
  if (root["prefix_length"].IsDefined()) cfg.prefix_length = reader.number(root["prefix_length"], "prefix_length");
  if (root["n_max"].IsDefined()) cfg.n_max = reader.number(root["n_max"], "n_max");
  if (root["threshold"].IsDefined()) cfg.threshold = reader.number(root["threshold"], "threshold");
  if (root["format"].IsDefined()) {
    cfg.format = reader.scalar(root["format"], "format");
    if (cfg.format != "csv" && cfg.format != "dot" && cfg.format != "report") {
      reader.fail(root["format"], "format must be csv, dot or report");
    }
  }
  if (cfg.prefix_length < cfg.n_max + 2) {
    reader.fail(root["prefix_length"].IsDefined() ? root["prefix_length"] : root["n_max"],
                "prefix_length must be at least n_max + 2");
  }
  return cfg;
}

AnalysisConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError(path, 0, "cannot open config file");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str(), path);
}

}  // namespace grich::cli
