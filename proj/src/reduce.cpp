#include "khoform/reduce.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <unordered_map>

#include "khoform/families.hpp"

namespace khoform {

namespace {

// Mutable dense copy of a simple graph for the free-move loop.
class WorkGraph {
 public:
  explicit WorkGraph(const Graph& g) : ids_(g.vertices()) {
    const std::size_t n = ids_.size();
    adj_.resize(n);
    alive_.assign(n, 1);
    count_ = n;
    for (std::size_t i = 0; i < n; ++i) {
      for (VertexId u : g.neighbors(ids_[i])) {
        auto it = std::lower_bound(ids_.begin(), ids_.end(), u);
        adj_[i].push_back(static_cast<int>(it - ids_.begin()));
      }
    }
  }

  std::size_t size() const { return adj_.size(); }
  std::size_t count() const { return count_; }
  bool alive(int x) const { return alive_[static_cast<std::size_t>(x)] != 0; }
  const std::vector<int>& adj(int x) const { return adj_[static_cast<std::size_t>(x)]; }
  std::size_t degree(int x) const { return adj(x).size(); }
  VertexId id(int x) const { return ids_[static_cast<std::size_t>(x)]; }

  bool has_edge(int x, int y) const {
    const auto& a = adj(x);
    return std::binary_search(a.begin(), a.end(), y);
  }

  void remove(int x) {
    for (int y : adj(x)) erase(y, x);
    adj_[static_cast<std::size_t>(x)].clear();
    alive_[static_cast<std::size_t>(x)] = 0;
    --count_;
  }

  // Merges b into a (a keeps its index). Returns true if a loop arose.
  bool merge_into(int a, int b) {
    bool loop = has_edge(a, b);
    std::vector<int> nb = adj(b);
    remove(b);
    for (int y : nb) {
      if (y == a) continue;
      if (!has_edge(a, y)) {
        insert(a, y);
        insert(y, a);
      }
    }
    return loop;
  }

  Graph to_graph() const {
    Graph g;
    for (std::size_t i = 0; i < ids_.size(); ++i)
      if (alive_[i]) g.add_vertex(ids_[i]);
    for (std::size_t i = 0; i < ids_.size(); ++i) {
      if (!alive_[i]) continue;
      for (int j : adj_[i])
        if (static_cast<std::size_t>(j) > i) g.add_edge(ids_[i], ids_[static_cast<std::size_t>(j)]);
    }
    return g;
  }

 private:
  void erase(int x, int y) {
    auto& a = adj_[static_cast<std::size_t>(x)];
    auto it = std::lower_bound(a.begin(), a.end(), y);
    if (it != a.end() && *it == y) a.erase(it);
  }
  void insert(int x, int y) {
    auto& a = adj_[static_cast<std::size_t>(x)];
    a.insert(std::lower_bound(a.begin(), a.end(), y), y);
  }

  std::vector<VertexId> ids_;
  std::vector<std::vector<int>> adj_;
  std::vector<char> alive_;
  std::size_t count_ = 0;
};

struct Context {
  ReduceOptions options;
  std::size_t branches = 0;
  std::unordered_map<std::string, HomotopyType> memo;

  void log(const std::string& line) {
    if (options.log) options.log->push_back(line);
  }
  void spend(const std::string& why) {
    if (++branches > options.branch_budget)
      throw BranchBudgetExceeded("wedge branch budget of " +
                                 std::to_string(options.branch_budget) + " exhausted at " + why);
  }
};

constexpr std::size_t kMemoLimit = 300;

std::string canonical_key(const Graph& g) {
  std::string key;
  char buf[16];
  for (VertexId v : g.vertices()) {
    auto [p, ec] = std::to_chars(buf, buf + sizeof buf, v);
    key.append(buf, p);
    key.push_back(',');
  }
  key.push_back('|');
  for (auto [a, b] : g.edges()) {
    auto [p, ec] = std::to_chars(buf, buf + sizeof buf, a);
    key.append(buf, p);
    key.push_back('-');
    auto [q, ec2] = std::to_chars(buf, buf + sizeof buf, b);
    key.append(buf, q);
    key.push_back(',');
  }
  return key;
}

// A non-neighbour y with N(x) inside N(y), or -1.
int nonadjacent_dominator(const WorkGraph& w, int x) {
  const auto& nx = w.adj(x);
  int pivot = nx.front();
  for (int u : nx)
    if (w.degree(u) < w.degree(pivot)) pivot = u;
  for (int y : w.adj(pivot)) {
    if (y == x || w.has_edge(x, y)) continue;
    const auto& ny = w.adj(y);
    if (ny.size() >= nx.size() && std::includes(ny.begin(), ny.end(), nx.begin(), nx.end()))
      return y;
  }
  return -1;
}

std::optional<HomotopyType> reduce_graph(const Graph& g, Context& ctx);

std::optional<HomotopyType> finish_connected(const Graph& h, Context& ctx) {
  if (auto n = as_cycle(h)) {
    ctx.log("cycle " + std::to_string(*n));
    return eval_cycle(*n);
  }
  // adjacent domination: wedge split on the dominator
  for (VertexId v : h.vertices()) {
    for (VertexId u : h.neighbors(v)) {
      if (!dominates(h, v, u)) continue;
      ctx.spend("adjacent domination " + std::to_string(v));
      ctx.log("adjacent-domination " + std::to_string(v) + " > " + std::to_string(u));
      auto y = reduce_graph(h.without({v}), ctx);
      if (!y) return std::nullopt;
      auto x = reduce_graph(h.without(h.closed_star(v)), ctx);
      if (!x) return std::nullopt;
      return wedge(*y, suspend(*x));
    }
  }
  // cone test on the highest-degree vertices
  std::vector<VertexId> order = h.vertices();
  std::stable_sort(order.begin(), order.end(),
                   [&](VertexId a, VertexId b) { return h.degree(a) > h.degree(b); });
  const std::size_t tries = std::min<std::size_t>(order.size(), 4);
  for (std::size_t i = 0; i < tries; ++i) {
    VertexId v = order[i];
    ctx.spend("cone test " + std::to_string(v));
    auto x = reduce_graph(h.without(h.closed_star(v)), ctx);
    if (!x) continue;
    auto y = reduce_graph(h.without({v}), ctx);
    if (!y) continue;
    if (auto r = cone_rule(*x, *y)) {
      ctx.log("cone-split " + std::to_string(v));
      return r;
    }
  }
  ctx.log("stalled at " + std::to_string(h.vertex_count()) + " vertices");
  return std::nullopt;
}

std::optional<HomotopyType> finish(const Graph& h, Context& ctx) {
  const bool use_memo = h.vertex_count() <= kMemoLimit;
  std::string key;
  if (use_memo) {
    key = canonical_key(h);
    auto it = ctx.memo.find(key);
    if (it != ctx.memo.end()) return it->second;
  }
  std::optional<HomotopyType> out;
  auto comps = h.components();
  if (comps.size() > 1) {
    ctx.log("split " + std::to_string(comps.size()) + " components");
    HomotopyType acc = HomotopyType::empty();
    for (const auto& c : comps) {
      auto t = reduce_graph(c, ctx);
      if (!t) return std::nullopt;
      if (t->is_contractible()) {
        acc = *t;
        break;
      }
      acc = join(acc, *t);
    }
    out = acc;
  } else {
    out = finish_connected(h, ctx);
  }
  if (out && use_memo) ctx.memo.emplace(std::move(key), *out);
  return out;
}

std::optional<HomotopyType> reduce_graph(const Graph& input, Context& ctx) {
  Graph g = input.is_simple() ? input : simplify(input).graph;
  WorkGraph w(g);
  const int n = static_cast<int>(w.size());
  int k = 0;
  std::deque<int> queue;
  std::vector<char> queued(w.size(), 1);
  for (int i = 0; i < n; ++i) queue.push_back(i);
  auto push = [&](int x) {
    if (w.alive(x) && !queued[static_cast<std::size_t>(x)]) {
      queued[static_cast<std::size_t>(x)] = 1;
      queue.push_back(x);
    }
  };
  auto remove_all = [&](const std::vector<int>& doomed) {
    std::vector<int> touched;
    for (int d : doomed)
      if (w.alive(d))
        for (int y : w.adj(d)) touched.push_back(y);
    for (int d : doomed)
      if (w.alive(d)) w.remove(d);
    for (int y : touched) push(y);
  };

  while (!queue.empty()) {
    int x = queue.front();
    queue.pop_front();
    queued[static_cast<std::size_t>(x)] = 0;
    if (!w.alive(x)) continue;
    const std::size_t d = w.degree(x);
    if (d == 0) {
      ctx.log("isolated " + std::to_string(w.id(x)));
      return HomotopyType::contractible();
    }
    if (d == 1) {
      int p = w.adj(x).front();
      ctx.log("leaf " + std::to_string(w.id(x)) + " preleaf " + std::to_string(w.id(p)));
      std::vector<int> star = w.adj(p);
      star.push_back(p);
      remove_all(star);
      ++k;
      continue;
    }
    if (int y = nonadjacent_dominator(w, x); y >= 0) {
      ctx.log("domination " + std::to_string(w.id(y)) + " > " + std::to_string(w.id(x)));
      remove_all({y});
      continue;
    }
    if (d == 2) {
      bool done = false;
      for (int p : w.adj(x)) {
        if (w.degree(p) != 2) continue;
        int v1 = w.adj(p)[0] == x ? w.adj(p)[1] : w.adj(p)[0];
        int v2 = w.adj(x)[0] == p ? w.adj(x)[1] : w.adj(x)[0];
        if (v1 == v2) continue;
        ctx.log("csorba " + std::to_string(w.id(v1)) + "-" + std::to_string(w.id(p)) + "-" +
                std::to_string(w.id(x)) + "-" + std::to_string(w.id(v2)));
        w.remove(p);
        w.remove(x);
        bool loop = w.merge_into(v1, v2);
        ++k;
        std::vector<int> around = w.adj(v1);
        if (loop) {
          remove_all({v1});
        } else {
          push(v1);
          for (int y : around) {
            push(y);
            for (int z : w.adj(y)) push(z);
          }
        }
        for (int y : around) push(y);
        done = true;
        break;
      }
      if (done) continue;
    }
  }
  if (w.count() == 0) return suspend(HomotopyType::empty(), k);
  auto rest = finish(w.to_graph(), ctx);
  if (!rest) return std::nullopt;
  return suspend(*rest, k);
}

}  // namespace

std::optional<HomotopyType> cone_rule(const HomotopyType& without_star,
                                      const HomotopyType& without_vertex) {
  const auto& x = without_star;
  const auto& y = without_vertex;
  if (y.is_empty_complex()) return HomotopyType::contractible();
  if (x.is_contractible()) return y;
  if (y.is_contractible()) return suspend(x);
  if (x.max_dim() < y.min_dim()) return wedge(y, suspend(x));
  return std::nullopt;
}

ReduceResult generic_reduce(const Graph& g, const ReduceOptions& options) {
  Context ctx{options, 0, {}};
  ReduceResult r;
  r.type = reduce_graph(g, ctx);
  r.branches = ctx.branches;
  return r;
}

std::optional<HomotopyType> try_reduce(const Graph& g, std::size_t branch_budget) {
  ReduceOptions o;
  o.branch_budget = branch_budget;
  return generic_reduce(g, o).type;
}

}  // namespace khoform
