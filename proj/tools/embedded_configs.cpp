#include <array>
#include <utility>

#include "config.hpp"

namespace grich::cli {

namespace {

constexpr std::string_view kFibonacci = R"(name: fibonacci
alphabet: "01"
group:
  - kind: antimorphism
    map: ["0 -> 0", "1 -> 1"]
word:
  type: fixed-point
  rules: ["0 -> 01", "1 -> 0"]
  seed: "0"
prefix_length: 2000
n_max: 50
)";

constexpr std::string_view kThueMorse = R"(name: thue-morse
alphabet: "01"
group:
  dihedral: 2
word:
  type: digit-sum
  base: 2
  modulus: 2
prefix_length: 2000
n_max: 30
)";

constexpr std::string_view kThueMorseIdR = R"(name: thue-morse-idr
alphabet: "01"
group:
  - kind: antimorphism
    map: ["0 -> 0", "1 -> 1"]
word:
  type: digit-sum
  base: 2
  modulus: 2
prefix_length: 2000
n_max: 30
)";

constexpr std::string_view kT33 = R"(name: t33
alphabet: "012"
group:
  dihedral: 3
word:
  type: digit-sum
  base: 3
  modulus: 3
prefix_length: 2000
n_max: 30
)";

constexpr std::string_view kU = R"(name: u
alphabet: "01234567"
group:
  - kind: antimorphism
    map: "0->2 1->1 2->0 3->3 4->6 5->5 6->4 7->7"
  - kind: antimorphism
    map: "0->4 1->5 2->6 3->7 4->0 5->1 6->2 7->3"
  - kind: antimorphism
    map: "0->0 1->3 2->2 3->1 4->4 5->7 6->6 7->5"
word:
  type: fixed-point
  rules: ["0 -> 01", "1 -> 2", "2 -> 65", "3 -> 4", "4 -> 23", "5 -> 6", "6 -> 47", "7 -> 0"]
  seed: "0"
prefix_length: 2000
n_max: 30
)";

#define GRICH_V_WORD                                                                              \
  "word:\n"                                                                                       \
  "  type: morphic-image\n"                                                                       \
  "  source_alphabet: \"01234567\"\n"                                                             \
  "  rules: [\"0 -> 15\", \"1 -> 04\", \"2 -> 12\", \"3 -> 03\", \"4 -> 04\", \"5 -> 12\", "       \
  "\"6 -> 03\", \"7 -> 15\"]\n"                                                                   \
  "  inner:\n"                                                                                    \
  "    type: fixed-point\n"                                                                       \
  "    rules: [\"0 -> 01\", \"1 -> 2\", \"2 -> 65\", \"3 -> 4\", \"4 -> 23\", \"5 -> 6\", "         \
  "\"6 -> 47\", \"7 -> 0\"]\n"                                                                    \
  "    seed: \"0\"\n"                                                                             \
  "prefix_length: 2000\n"                                                                         \
  "n_max: 30\n"

#define GRICH_PSI0 "  - kind: antimorphism\n    map: \"0->0 1->1 2->4 3->5 4->2 5->3\"\n"
#define GRICH_PSI1 "  - kind: antimorphism\n    map: \"0->1 1->0 2->2 3->3 4->4 5->5\"\n"
#define GRICH_PSI2 "  - kind: antimorphism\n    map: \"0->0 1->1 2->3 3->2 4->5 5->4\"\n"

constexpr std::string_view kV =
    "name: v\nalphabet: \"012345\"\ngroup:\n" GRICH_PSI0 GRICH_PSI1 GRICH_PSI2 GRICH_V_WORD;
constexpr std::string_view kVH0 =
    "name: v-h0\nalphabet: \"012345\"\ngroup:\n" GRICH_PSI0 GRICH_PSI1 GRICH_V_WORD;
constexpr std::string_view kVH1 =
    "name: v-h1\nalphabet: \"012345\"\ngroup:\n" GRICH_PSI1 GRICH_PSI2 GRICH_V_WORD;
constexpr std::string_view kVH2 =
    "name: v-h2\nalphabet: \"012345\"\ngroup:\n" GRICH_PSI2 GRICH_PSI0 GRICH_V_WORD;

constexpr std::array<std::pair<std::string_view, std::string_view>, 9> kConfigs{{
    {"fibonacci", kFibonacci},
    {"thue-morse", kThueMorse},
    {"thue-morse-idr", kThueMorseIdR},
    {"t33", kT33},
    {"u", kU},
    {"v", kV},
    {"v-h0", kVH0},
    {"v-h1", kVH1},
    {"v-h2", kVH2},
}};

}  // namespace

std::optional<std::string_view> embedded_config(std::string_view name) {
  for (const auto& [key, text] : kConfigs) {
    if (key == name) return text;
  }
  return std::nullopt;
}

}  // namespace grich::cli
