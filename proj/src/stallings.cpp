#include "l2t/stallings.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <stdexcept>

namespace l2t {

namespace {

struct Dsu {
  std::vector<int> parent;
  explicit Dsu(int n) : parent(static_cast<std::size_t>(n)) {
    for (int i = 0; i < n; ++i) parent[static_cast<std::size_t>(i)] = i;
  }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  }
  void unite(int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); }
};

// Fold a multigraph: repeatedly merge targets of equal-labeled edges leaving
// (or entering) a common vertex, then drop duplicate edges.
CoreGraph fold(int rank, int base, int num_vertices, std::vector<CoreGraph::Edge> edges) {
  Dsu dsu(num_vertices);
  bool changed = true;
  while (changed) {
    changed = false;
    // out-determinism
    std::map<std::pair<int, int>, int> seen;
    for (const auto& e : edges) {
      int f = dsu.find(e.from), t = dsu.find(e.to);
      auto [it, inserted] = seen.emplace(std::make_pair(f, e.label), t);
      if (!inserted && dsu.find(it->second) != t) {
        dsu.unite(it->second, t);
        changed = true;
      }
    }
    // in-determinism
    seen.clear();
    for (const auto& e : edges) {
      int f = dsu.find(e.from), t = dsu.find(e.to);
      auto [it, inserted] = seen.emplace(std::make_pair(t, e.label), f);
      if (!inserted && dsu.find(it->second) != f) {
        dsu.unite(it->second, f);
        changed = true;
      }
    }
  }
  // compress vertices
  std::map<int, int> relabel;
  auto get = [&](int v) {
    int r = dsu.find(v);
    auto [it, inserted] = relabel.emplace(r, static_cast<int>(relabel.size()));
    return it->second;
  };
  int new_base = get(base);
  std::set<CoreGraph::Edge, bool (*)(const CoreGraph::Edge&, const CoreGraph::Edge&)> dedup(
      [](const CoreGraph::Edge& a, const CoreGraph::Edge& b) {
        return std::tie(a.from, a.to, a.label) < std::tie(b.from, b.to, b.label);
      });
  for (const auto& e : edges) dedup.insert({get(e.from), get(e.to), e.label});
  CoreGraph g;
  g.rank = rank;
  g.base = new_base;
  g.num_vertices = static_cast<int>(relabel.size());
  g.edges.assign(dedup.begin(), dedup.end());
  return g;
}

// Remove degree-1 vertices other than the base, repeatedly.
CoreGraph trim(CoreGraph g) {
  while (true) {
    std::vector<int> degree(static_cast<std::size_t>(g.num_vertices), 0);
    for (const auto& e : g.edges) {
      ++degree[static_cast<std::size_t>(e.from)];
      ++degree[static_cast<std::size_t>(e.to)];
    }
    int victim = -1;
    for (int v = 0; v < g.num_vertices && victim < 0; ++v)
      if (v != g.base && degree[static_cast<std::size_t>(v)] <= 1) victim = v;
    if (victim < 0) return g;
    std::vector<CoreGraph::Edge> kept;
    for (const auto& e : g.edges)
      if (e.from != victim && e.to != victim) kept.push_back(e);
    // relabel to keep vertices contiguous
    std::map<int, int> relabel;
    auto get = [&](int v) {
      auto [it, inserted] = relabel.emplace(v, static_cast<int>(relabel.size()));
      return it->second;
    };
    int nb = get(g.base);
    std::vector<CoreGraph::Edge> relabeled;
    for (const auto& e : kept) relabeled.push_back({get(e.from), get(e.to), e.label});
    g.base = nb;
    g.num_vertices = static_cast<int>(relabel.size());
    g.edges = std::move(relabeled);
  }
}

}  // namespace

CoreGraph build_core(const std::vector<Word>& words, int rank) {
  int next = 1;  // 0 is the base
  std::vector<CoreGraph::Edge> edges;
  for (const auto& w : words) {
    if (w.rank() != rank) throw std::invalid_argument("word rank mismatch");
    auto letters = w.letters();
    int at = 0;
    for (std::size_t i = 0; i < letters.size(); ++i) {
      int to = (i + 1 == letters.size()) ? 0 : next++;
      if (letters[i].sign > 0)
        edges.push_back({at, to, letters[i].gen});
      else
        edges.push_back({to, at, letters[i].gen});
      at = to;
    }
  }
  return canonical_form(trim(fold(rank, 0, next, std::move(edges))));
}

bool membership(const Word& w, const CoreGraph& g) {
  if (w.rank() != g.rank) throw std::invalid_argument("word rank mismatch");
  // deterministic transition maps
  std::map<std::pair<int, int>, int> out, in;
  for (const auto& e : g.edges) {
    out[{e.from, e.label}] = e.to;
    in[{e.to, e.label}] = e.from;
  }
  int at = g.base;
  for (const auto& l : w.letters()) {
    if (l.sign > 0) {
      auto it = out.find({at, l.gen});
      if (it == out.end()) return false;
      at = it->second;
    } else {
      auto it = in.find({at, l.gen});
      if (it == in.end()) return false;
      at = it->second;
    }
  }
  return at == g.base;
}

CoreGraph canonical_form(const CoreGraph& g) {
  // BFS from the base with deterministic edge ordering; folded graphs are
  // deterministic automata, so the relabeling is canonical.
  std::map<std::pair<int, int>, int> out, in;
  for (const auto& e : g.edges) {
    out[{e.from, e.label}] = e.to;
    in[{e.to, e.label}] = e.from;
  }
  std::vector<int> order(static_cast<std::size_t>(g.num_vertices), -1);
  int next = 0;
  std::queue<int> q;
  order[static_cast<std::size_t>(g.base)] = next++;
  q.push(g.base);
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int label = 1; label <= g.rank; ++label) {
      for (int dir = 0; dir < 2; ++dir) {
        auto& m = dir == 0 ? out : in;
        auto it = m.find({v, label});
        if (it == m.end()) continue;
        int w = it->second;
        if (order[static_cast<std::size_t>(w)] < 0) {
          order[static_cast<std::size_t>(w)] = next++;
          q.push(w);
        }
      }
    }
  }
  if (next != g.num_vertices) throw std::logic_error("core graph not connected");
  CoreGraph c;
  c.rank = g.rank;
  c.base = 0;
  c.num_vertices = g.num_vertices;
  for (const auto& e : g.edges)
    c.edges.push_back({order[static_cast<std::size_t>(e.from)], order[static_cast<std::size_t>(e.to)], e.label});
  std::sort(c.edges.begin(), c.edges.end(), [](const CoreGraph::Edge& a, const CoreGraph::Edge& b) {
    return std::tie(a.from, a.to, a.label) < std::tie(b.from, b.to, b.label);
  });
  return c;
}

std::vector<CoreGraph> algebraic_quotients(const CoreGraph& g, int vertex_cap) {
  if (g.num_vertices > vertex_cap) throw std::length_error("vertex cap exceeded");
  // Closure of {g} under "merge one vertex pair, fold": reaches exactly the
  // folded quotients of every vertex partition, since folding is itself a
  // sequence of identifications and is confluent.
  auto key = [](const CoreGraph& c) {
    std::vector<int> k{c.num_vertices, c.base};
    for (const auto& e : c.edges) {
      k.push_back(e.from);
      k.push_back(e.to);
      k.push_back(e.label);
    }
    return k;
  };
  std::set<std::vector<int>> seen;
  std::vector<CoreGraph> out;
  std::queue<CoreGraph> work;
  CoreGraph start = canonical_form(g);
  seen.insert(key(start));
  out.push_back(start);
  work.push(start);
  while (!work.empty()) {
    CoreGraph cur = work.front();
    work.pop();
    for (int a = 0; a < cur.num_vertices; ++a)
      for (int b = a + 1; b < cur.num_vertices; ++b) {
        std::vector<CoreGraph::Edge> edges = cur.edges;
        edges.push_back({a, b, 0});  // sentinel merge edge, removed below
        // emulate the merge by translating b to a before folding
        std::vector<CoreGraph::Edge> merged;
        for (const auto& e : cur.edges)
          merged.push_back({e.from == b ? a : e.from, e.to == b ? a : e.to, e.label});
        CoreGraph q = canonical_form(
            fold(cur.rank, cur.base == b ? a : cur.base, cur.num_vertices, std::move(merged)));
        if (seen.insert(key(q)).second) {
          out.push_back(q);
          work.push(q);
        }
      }
  }
  return out;
}

bool is_compressed(const CoreGraph& g, int vertex_cap) {
  int r = g.subgroup_rank();
  if (r <= 1) return true;  // every overgroup has rank >= 1
  for (const auto& q : algebraic_quotients(g, vertex_cap))
    if (q.subgroup_rank() < r) return false;
  return true;
}

bool is_compressed(const FreeHom& phi, int vertex_cap) {
  return is_compressed(build_core(phi.images, phi.codomain_rank), vertex_cap);
}

bool is_injective(const FreeHom& phi) {
  // rank of the image equals the domain rank iff the induced surjection of
  // the domain onto the image is an isomorphism (free groups are Hopfian)
  CoreGraph core = build_core(phi.images, phi.codomain_rank);
  return core.subgroup_rank() == phi.domain_rank;
}

bool is_isomorphism(const FreeHom& phi) {
  if (!is_injective(phi)) return false;
  CoreGraph core = build_core(phi.images, phi.codomain_rank);
  for (int i = 1; i <= phi.codomain_rank; ++i)
    if (!membership(Word::gen_pow(phi.codomain_rank, i, 1), core)) return false;
  return true;
}

std::optional<bool> decide_weak_iso(const FreeHom& phi, int vertex_cap) {
  if (phi.domain_rank != phi.codomain_rank) return false;
  if (!is_injective(phi)) return false;
  CoreGraph core = build_core(phi.images, phi.codomain_rank);
  if (core.num_vertices > vertex_cap) return std::nullopt;
  return is_compressed(core, vertex_cap);
}

}  // namespace l2t
