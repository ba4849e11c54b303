#include "grich/symgraph.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "grich/error.hpp"

namespace grich {

namespace {

void require_order(const LanguageIndex& index, std::size_t n, std::size_t slack) {
  if (n + slack > index.n_max()) {
    throw DomainError("order " + std::to_string(n) + " needs n_max >= " + std::to_string(n + slack) +
                      " (have " + std::to_string(index.n_max()) + ")");
  }
}

std::string quoted(const std::string& s) { return "\"" + s + "\""; }

}  // namespace

std::string RauzyGraph::to_dot(const Alphabet& alphabet) const {
  std::ostringstream os;
  os << "digraph rauzy_" << order << " {\n";
  for (const auto& v : vertices) os << "  " << quoted(alphabet.render(v)) << ";\n";
  for (const auto& e : edges) {
    WordView ev(e);
    os << "  " << quoted(alphabet.render(ev.substr(0, order))) << " -> "
       << quoted(alphabet.render(ev.substr(1))) << " [label=" << quoted(alphabet.render(e)) << "];\n";
  }
  os << "}\n";
  return os.str();
}

RauzyGraph rauzy_graph(const LanguageIndex& index, std::size_t n) {
  require_order(index, n, 1);
  RauzyGraph g;
  g.order = n;
  for (const auto& f : index.factors(n)) g.vertices.push_back(f.word);
  for (const auto& f : index.factors(n + 1)) g.edges.push_back(f.word);
  return g;
}

std::optional<std::size_t> SymmetryGraph::vertex_of(WordView w) const {
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const auto& m = vertices[i].members;
    if (std::binary_search(m.begin(), m.end(), w)) return i;
  }
  return std::nullopt;
}

std::string SymmetryGraph::directed_dot(const Alphabet& alphabet) const {
  std::ostringstream os;
  os << "digraph symmetries_" << order << " {\n";
  auto name = [&](std::size_t v) { return quoted("[" + alphabet.render(vertices[v].rep) + "]"); };
  for (std::size_t v = 0; v < vertices.size(); ++v) os << "  " << name(v) << ";\n";
  for (const auto& e : directed) {
    os << "  " << name(e.from) << " -> " << name(e.to) << " [label=" << quoted(alphabet.render(e.label))
       << "];\n";
  }
  os << "}\n";
  return os.str();
}

std::string SymmetryGraph::undirected_dot(const Alphabet& alphabet) const {
  std::ostringstream os;
  os << "graph symmetries_" << order << " {\n";
  auto name = [&](std::size_t v) { return quoted("[" + alphabet.render(vertices[v].rep) + "]"); };
  for (std::size_t v = 0; v < vertices.size(); ++v) os << "  " << name(v) << ";\n";
  for (const auto& e : undirected) {
    os << "  " << name(e.a) << " -- " << name(e.b) << " [label="
       << quoted("[" + alphabet.render(e.rep) + "]") << "];\n";
  }
  os << "}\n";
  return os.str();
}

SymmetryGraph symmetry_graph(const SymmetryGroup& group, const LanguageIndex& index, std::size_t n) {
  require_order(index, n, 0);
  SymmetryGraph g;
  g.order = n;

  std::set<Word> reps;
  for (const auto& f : index.factors(n)) {
    if (f.special()) reps.insert(group.canonical(f.word));
  }
  for (const auto& rep : reps) g.vertices.push_back(SymmetryVertex{rep, group.equivalence_class(rep)});

  const std::size_t limit = index.text().size();
  std::map<Word, DirectedEdge> labels;
  for (const auto& f : index.factors(n)) {
    if (!f.special()) continue;
    for (Letter b : f.ext.right) {
      Word label = f.word;
      label.push_back(as_char(b));
      while (true) {
        WordView suffix = WordView(label).substr(label.size() - n);
        const FactorInfo* s = index.find(suffix);
        if (s == nullptr) {
          throw InsufficientPrefixError("walk from a special factor of length " + std::to_string(n) +
                                        " left the indexed language after " + std::to_string(label.size()) +
                                        " letters");
        }
        if (s->special()) {
          labels.emplace(label, DirectedEdge{label, *g.vertex_of(f.word), *g.vertex_of(suffix)});
          break;
        }
        if (s->ext.right.empty() || label.size() >= limit) {
          throw InsufficientPrefixError("walk from a special factor of length " + std::to_string(n) +
                                        " found no special factor within the prefix (stalled after " +
                                        std::to_string(label.size()) + " letters)");
        }
        label.push_back(as_char(s->ext.right.front()));
      }
    }
  }
  for (auto& [label, edge] : labels) g.directed.push_back(std::move(edge));

  std::map<Word, UndirectedEdge> classes;
  for (const auto& e : g.directed) {
    Word rep = group.canonical(e.label);
    if (classes.count(rep)) continue;
    WordView rv(rep);
    auto va = g.vertex_of(rv.substr(0, n));
    auto vb = g.vertex_of(rv.substr(rep.size() - n));
    if (!va || !vb) {
      throw InsufficientPrefixError("an image of an edge label of order " + std::to_string(n) +
                                    " does not start and end in special factors; factor sets are not closed");
    }
    std::size_t a = *va, b = *vb;
    if (a > b) std::swap(a, b);
    classes.emplace(rep, UndirectedEdge{rep, group.equivalence_class(rep), a, b});
  }
  for (auto& [rep, edge] : classes) g.undirected.push_back(std::move(edge));
  return g;
}

std::string TlsVerdict::witness(const Alphabet& alphabet) const {
  std::ostringstream os;
  for (const auto& loop : loops) {
    if (!loop.palindrome()) os << "loop [" << alphabet.render(loop.rep) << "] is not a G-palindrome; ";
  }
  if (!tree) {
    if (!connected) {
      os << "loop-free graph is disconnected";
    } else {
      os << "cycle through";
      for (const auto& e : cycle) os << " [" << alphabet.render(e) << "]";
    }
  }
  std::string s = os.str();
  while (!s.empty() && (s.back() == ' ' || s.back() == ';')) s.pop_back();
  return s;
}

TlsVerdict tls_verdict(const SymmetryGroup& group, const SymmetryGraph& graph) {
  TlsVerdict v;
  v.order = graph.order;
  const std::size_t nv = graph.vertices.size();

  std::vector<const UndirectedEdge*> proper;
  for (const auto& e : graph.undirected) {
    if (e.loop()) {
      v.loops.push_back(LoopCheck{e.rep, e.a, group.fixers(e.rep)});
      if (!v.loops.back().palindrome()) v.loops_ok = false;
    } else {
      proper.push_back(&e);
    }
  }

  // Union-find; the first edge closing a cycle gives the witness.
  std::vector<std::size_t> parent(nv);
  std::iota(parent.begin(), parent.end(), 0);
  auto root = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<std::vector<std::pair<std::size_t, const UndirectedEdge*>>> forest(nv);
  const UndirectedEdge* closing = nullptr;
  std::size_t components = nv;
  for (const auto* e : proper) {
    std::size_t ra = root(e->a), rb = root(e->b);
    if (ra == rb) {
      if (!closing) closing = e;
      continue;
    }
    parent[ra] = rb;
    --components;
    forest[e->a].emplace_back(e->b, e);
    forest[e->b].emplace_back(e->a, e);
  }
  v.connected = nv == 0 || components == 1;

  if (closing) {
    v.tree = false;
    // Path between the closing edge's endpoints inside the spanning forest.
    std::vector<std::pair<std::size_t, const UndirectedEdge*>> via(nv, {nv, nullptr});
    std::deque<std::size_t> queue{closing->a};
    via[closing->a] = {closing->a, nullptr};
    while (!queue.empty()) {
      std::size_t x = queue.front();
      queue.pop_front();
      for (const auto& [y, e] : forest[x]) {
        if (via[y].first != nv) continue;
        via[y] = {x, e};
        queue.push_back(y);
      }
    }
    v.cycle.push_back(closing->rep);
    for (std::size_t x = closing->b; x != closing->a; x = via[x].first) v.cycle.push_back(via[x].second->rep);
  } else if (!v.connected) {
    v.tree = false;
  }
  v.satisfied = v.loops_ok && v.tree;
  return v;
}

bool distinguishing_at(const SymmetryGroup& group, const LanguageIndex& index, std::size_t n) {
  std::vector<Word> words;
  for (const auto& f : index.factors(n)) words.push_back(f.word);
  return group.is_distinguishing(words);
}

std::vector<BispecialReport> bispecial_check(const SymmetryGroup& group, const LanguageIndex& index,
                                             std::size_t n_lo, std::size_t n_hi) {
  require_order(index, n_hi, 0);
  std::vector<BispecialReport> out;
  for (std::size_t n = n_lo; n <= n_hi; ++n) {
    BispecialReport report;
    report.n = n;
    report.distinguishing = distinguishing_at(group, index, n);
    for (const auto& f : index.factors(n)) {
      if (!f.bispecial()) continue;
      BispecialRecord r;
      r.word = f.word;
      r.b = index.bilateral_order(f.word);
      r.left = f.ext.left.size();
      r.right = f.ext.right.size();
      r.fixers = group.fixers(f.word);
      if (r.fixers.empty()) {
        r.ok = r.b == 0;
      } else {
        for (const auto& theta : r.fixers) {
          r.pext.push_back(index.pext(theta, f.word).size());
          if (r.b == static_cast<long>(r.pext.back()) - 1) r.ok = true;
        }
      }
      if (!r.ok) report.ok = false;
      report.records.push_back(std::move(r));
    }
    out.push_back(std::move(report));
  }
  return out;
}

std::vector<ComplexityIdentity> complexity_identity(const SymmetryGroup& group, const LanguageIndex& index,
                                                    std::size_t n_lo, std::size_t n_hi) {
  require_order(index, n_hi, 0);
  const auto involutions = group.involutive_antimorphisms();
  const auto table = complexity(index, involutions);
  const long order = static_cast<long>(group.order());

  auto lhs = [&](std::size_t n) { return table.dc[n] + order; };
  auto rhs = [&](std::size_t n) {
    long sum = 0;
    for (const auto& p : table.p) sum += static_cast<long>(p[n] + p[n + 1]);
    return sum;
  };

  std::vector<ComplexityIdentity> out;
  for (std::size_t n = n_lo; n <= n_hi; ++n) {
    ComplexityIdentity r;
    r.n = n;
    r.lhs = lhs(n);
    r.rhs = rhs(n);
    r.distinguishing = distinguishing_at(group, index, n);
    r.inequality = r.lhs >= r.rhs;
    r.equality = r.lhs == r.rhs;
    r.d2c = table.d2c[n];
    for (const auto& theta : involutions) {
      for (const auto& f : index.factors(n)) {
        if (theta.fixes(f.word)) r.pext_sum += static_cast<long>(index.pext(theta, f.word).size()) - 1;
      }
    }
    r.chain_consistent = (lhs(n + 1) - rhs(n + 1)) - (r.lhs - r.rhs) == r.d2c - r.pext_sum;
    out.push_back(r);
  }
  return out;
}

}  // namespace grich
