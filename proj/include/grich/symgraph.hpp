#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "grich/lang_index.hpp"
#include "grich/symmetry.hpp"
#include "grich/words.hpp"

namespace grich {

/// Vertices L_n, one edge per factor of length n+1 (prefix -> suffix).
struct RauzyGraph {
  std::size_t order = 0;
  std::vector<Word> vertices;
  std::vector<Word> edges;

  std::string to_dot(const Alphabet& alphabet) const;
};

RauzyGraph rauzy_graph(const LanguageIndex& index, std::size_t n);

struct SymmetryVertex {
  Word rep;
  std::vector<Word> members;
};

struct DirectedEdge {
  Word label;
  std::size_t from;
  std::size_t to;
};

struct UndirectedEdge {
  Word rep;
  std::vector<Word> members;
  std::size_t a;  // a <= b
  std::size_t b;
  bool loop() const { return a == b; }
};

/// Directed and undirected graphs of symmetries of order n, sharing one vertex list.
struct SymmetryGraph {
  std::size_t order = 0;
  std::vector<SymmetryVertex> vertices;
  std::vector<DirectedEdge> directed;
  std::vector<UndirectedEdge> undirected;

  std::optional<std::size_t> vertex_of(WordView w) const;
  std::string directed_dot(const Alphabet& alphabet) const;
  std::string undirected_dot(const Alphabet& alphabet) const;
};

/// Edges are found by following unique right extensions from each special factor
/// until the next special factor. Throws InsufficientPrefixError when a walk stalls.
SymmetryGraph symmetry_graph(const SymmetryGroup& group, const LanguageIndex& index, std::size_t n);

struct LoopCheck {
  Word rep;
  std::size_t vertex;
  std::vector<SymmetryMap> fixers;
  bool palindrome() const { return !fixers.empty(); }
};

struct TlsVerdict {
  std::size_t order = 0;
  std::vector<LoopCheck> loops;
  bool loops_ok = true;
  bool tree = true;
  /// When the loop-free graph is not a tree: edge representatives along a cycle,
  /// or empty if the failure is disconnection.
  std::vector<Word> cycle;
  bool connected = true;
  bool satisfied = true;

  std::string witness(const Alphabet& alphabet) const;
};

TlsVerdict tls_verdict(const SymmetryGroup& group, const SymmetryGraph& graph);
inline TlsVerdict tls_verdict(const SymmetryGroup& group, const LanguageIndex& index, std::size_t n) {
  return tls_verdict(group, symmetry_graph(group, index, n));
}

struct BispecialRecord {
  Word word;
  long b = 0;
  std::size_t left = 0;
  std::size_t right = 0;
  std::vector<SymmetryMap> fixers;
  /// #Pext for each fixer, same order.
  std::vector<std::size_t> pext;
  bool ok = false;
};

struct BispecialReport {
  std::size_t n = 0;
  bool distinguishing = false;
  std::vector<BispecialRecord> records;
  bool ok = true;
};

/// One report per n in [n_lo, n_hi]. A non-palindromic bispecial passes when
/// b = 0; a palindromic one when b = #Pext - 1 for one of its fixers.
std::vector<BispecialReport> bispecial_check(const SymmetryGroup& group, const LanguageIndex& index,
                                             std::size_t n_lo, std::size_t n_hi);

struct ComplexityIdentity {
  std::size_t n = 0;
  long lhs = 0;  // dC(n) + #G
  long rhs = 0;  // sum over G^(2) of P(n) + P(n+1)
  bool distinguishing = false;
  bool inequality = true;
  bool equality = true;
  long d2c = 0;
  /// Sum over G^(2) and theta-palindromes w of length n of (#Pext - 1).
  long pext_sum = 0;
  /// (lhs - rhs) at n+1 minus (lhs - rhs) at n equals d2c - pext_sum.
  bool chain_consistent = true;
};

/// Records for n in [n_lo, n_hi]; needs n_hi + 1 <= n_max.
std::vector<ComplexityIdentity> complexity_identity(const SymmetryGroup& group, const LanguageIndex& index,
                                                    std::size_t n_lo, std::size_t n_hi);

/// Whether n is G-distinguishing on the indexed factors of length n.
bool distinguishing_at(const SymmetryGroup& group, const LanguageIndex& index, std::size_t n);

}  // namespace grich
