#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "grich/error.hpp"
#include "grich/symmetry.hpp"
#include "grich/words.hpp"

namespace grich::cli {

/// Invalid configuration; `line` is 1-based, 0 when unknown.
class ConfigError : public Error {
 public:
  ConfigError(const std::string& origin, int line, const std::string& message);
  int line() const { return line_; }

 private:
  int line_;
};

struct AnalysisConfig {
  Alphabet alphabet{"01"};
  std::optional<SymmetryGroup> group;
  std::string group_id = "group";
  std::optional<WordSource> word;
  std::string word_id = "word";
  std::size_t prefix_length = 2000;
  std::size_t n_max = 30;
  std::size_t threshold = 1;
  std::string format;
};

AnalysisConfig parse_config(std::string_view text, const std::string& origin);
AnalysisConfig load_config(const std::string& path);

/// Built-in configurations: fibonacci, thue-morse, thue-morse-idr, t33, u, v, v-h0, v-h1, v-h2.
std::optional<std::string_view> embedded_config(std::string_view name);

}  // namespace grich::cli
