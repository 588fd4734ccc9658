#include "b3cryst/stallings.hpp"

#include "b3cryst/errors.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <queue>

namespace b3cryst {

FreeWord free_reduce(const FreeWord& w) {
  FreeWord out;
  for (int x : w) {
    if (x == 0) throw precondition_error("zero letter in free word");
    if (!out.empty() && out.back() == -x)
      out.pop_back();
    else
      out.push_back(x);
  }
  return out;
}

FreeWord free_inverse(const FreeWord& w) {
  FreeWord inv(w.rbegin(), w.rend());
  for (int& x : inv) x = -x;
  return inv;
}

namespace {

/// Mutable multigraph with incremental folding over a union-find. Only used
/// during construction; the finished SubgroupGraph is immutable.
struct Folder {
  int k;
  std::vector<int> parent;
  std::vector<std::map<int, int>> out, in;  // per class, label -> class

  explicit Folder(int alphabet) : k(alphabet) { new_vertex(); }

  int new_vertex() {
    parent.push_back(static_cast<int>(parent.size()));
    out.emplace_back();
    in.emplace_back();
    return static_cast<int>(parent.size()) - 1;
  }

  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }

  /// Merge two classes; label clashes in the merged maps trigger further
  /// merges until the graph is folded again.
  void merge(int a, int b) {
    std::vector<std::pair<int, int>> work = {{a, b}};
    while (!work.empty()) {
      auto [x, y] = work.back();
      work.pop_back();
      x = find(x);
      y = find(y);
      if (x == y) continue;
      if (x > y) std::swap(x, y);
      parent[y] = x;
      for (const auto& [lab, v] : out[y]) {
        const auto it = out[x].find(lab);
        if (it == out[x].end())
          out[x][lab] = v;
        else
          work.push_back({it->second, v});
      }
      for (const auto& [lab, v] : in[y]) {
        const auto it = in[x].find(lab);
        if (it == in[x].end())
          in[x][lab] = v;
        else
          work.push_back({it->second, v});
      }
      out[y].clear();
      in[y].clear();
    }
  }

  void add_edge(int u, int lab, int v) {
    u = find(u);
    v = find(v);
    if (const auto it = out[u].find(lab); it != out[u].end()) {
      merge(it->second, v);
      return;
    }
    if (const auto it = in[v].find(lab); it != in[v].end()) {
      merge(it->second, u);
      u = find(u);
      v = find(v);
      if (out[u].count(lab)) return;  // the merge routed the edge already
    }
    out[u][lab] = v;
    in[v][lab] = u;
  }

  void add_loop(const FreeWord& w, int base) {
    int cur = base;
    for (size_t i = 0; i < w.size(); ++i) {
      const int x = w[i];
      const int nxt = (i + 1 == w.size()) ? base : new_vertex();
      if (x > 0)
        add_edge(cur, x, nxt);
      else
        add_edge(nxt, -x, cur);
      cur = nxt;
    }
  }
};

}  // namespace

SubgroupGraph::SubgroupGraph(int alphabet, const std::vector<FreeWord>& generators)
    : alphabet_(alphabet) {
  if (alphabet < 1) throw precondition_error("alphabet size must be >= 1");
  Folder f(alphabet);
  for (const FreeWord& g : generators) {
    for (int x : g)
      if (x == 0 || std::abs(x) > alphabet)
        throw precondition_error("generator letter outside the alphabet");
    const FreeWord r = free_reduce(g);
    if (!r.empty()) f.add_loop(r, 0);
  }

  // Collect folded classes and their adjacency.
  const int fb = f.find(0);
  std::map<int, std::map<int, int>> out, in;
  out[fb];
  for (size_t v = 0; v < f.parent.size(); ++v) {
    const int fv = f.find(static_cast<int>(v));
    for (const auto& [lab, t] : f.out[v])
      if (f.find(static_cast<int>(v)) == static_cast<int>(v)) out[fv][lab] = f.find(t);
  }
  for (const auto& [u, adj] : out)
    for (const auto& [lab, v] : adj) in[v][lab] = u;

  // Prune to the core: drop non-base vertices of total degree <= 1.
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto it = out.begin(); it != out.end(); ++it) {
      const int v = it->first;
      if (v == fb) continue;
      const size_t deg = it->second.size() + (in.count(v) ? in[v].size() : 0);
      if (deg > 1) continue;
      for (const auto& [lab, t] : it->second) in[t].erase(lab);
      if (in.count(v))
        for (const auto& [lab, s] : in[v]) out[s].erase(lab);
      in.erase(v);
      out.erase(it);
      changed = true;
      break;
    }
  }

  // Canonical numbering: BFS from the base, labels ascending, out before in.
  std::map<int, int> id;
  std::queue<int> q;
  id[fb] = 0;
  q.push(fb);
  while (!q.empty()) {
    const int v = q.front();
    q.pop();
    for (int lab = 1; lab <= alphabet_; ++lab) {
      if (const auto it = out[v].find(lab); it != out[v].end() && !id.count(it->second)) {
        id[it->second] = static_cast<int>(id.size());
        q.push(it->second);
      }
      if (const auto it = in[v].find(lab); it != in[v].end() && !id.count(it->second)) {
        id[it->second] = static_cast<int>(id.size());
        q.push(it->second);
      }
    }
  }

  out_.assign(id.size(), std::vector<int>(alphabet_ + 1, -1));
  in_.assign(id.size(), std::vector<int>(alphabet_ + 1, -1));
  for (const auto& [v, adj] : out)
    for (const auto& [lab, t] : adj) {
      out_[id.at(v)][lab] = id.at(t);
      in_[id.at(t)][lab] = id.at(v);
    }
  base_ = 0;
}

int SubgroupGraph::num_vertices() const { return static_cast<int>(out_.size()); }

int SubgroupGraph::num_edges() const {
  int e = 0;
  for (const auto& adj : out_)
    for (int lab = 1; lab <= alphabet_; ++lab)
      if (adj[lab] >= 0) ++e;
  return e;
}

std::vector<std::tuple<int, int, int>> SubgroupGraph::edges() const {
  std::vector<std::tuple<int, int, int>> e;
  for (int v = 0; v < num_vertices(); ++v)
    for (int lab = 1; lab <= alphabet_; ++lab)
      if (out_[v][lab] >= 0) e.emplace_back(v, lab, out_[v][lab]);
  std::sort(e.begin(), e.end());
  return e;
}

int SubgroupGraph::rank() const { return num_edges() - num_vertices() + 1; }

std::optional<int> SubgroupGraph::index() const {
  for (int v = 0; v < num_vertices(); ++v)
    for (int lab = 1; lab <= alphabet_; ++lab)
      if (out_[v][lab] < 0 || in_[v][lab] < 0) return std::nullopt;
  return num_vertices();
}

bool SubgroupGraph::contains(const FreeWord& w) const {
  int cur = base_;
  for (int x : free_reduce(w)) {
    cur = (x > 0) ? out_[cur][x] : in_[cur][-x];
    if (cur < 0) return false;
  }
  return cur == base_;
}

SubgroupGraph build_and_fold(int alphabet, const std::vector<FreeWord>& generators) {
  return SubgroupGraph(alphabet, generators);
}

KernelCheck kernel_check(int alphabet, const std::vector<FreeWord>& generators,
                         const std::vector<std::uint64_t>& moduli) {
  if (static_cast<int>(moduli.size()) != alphabet)
    throw precondition_error("one modulus per alphabet letter");
  KernelCheck r;
  r.target_order = 1;
  for (std::uint64_t m : moduli) {
    if (m < 1) throw precondition_error("moduli must be >= 1");
    r.target_order *= m;
  }
  r.generators_in_kernel = true;
  for (const FreeWord& g : generators) {
    std::vector<long long> e(alphabet, 0);
    for (int x : g) e[std::abs(x) - 1] += (x > 0) ? 1 : -1;
    for (int i = 0; i < alphabet; ++i)
      if (moduli[i] > 1 && e[i] % static_cast<long long>(moduli[i]) != 0)
        r.generators_in_kernel = false;
  }
  const SubgroupGraph graph = build_and_fold(alphabet, generators);
  r.index = graph.index();
  r.rank = graph.rank();
  r.certified = r.generators_in_kernel && r.index &&
                static_cast<std::uint64_t>(*r.index) == r.target_order;
  return r;
}

}  // namespace b3cryst
