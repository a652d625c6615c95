#pragma once

// Exhaustive backtracking over IF-colorings: find, count, and check
// superextendability. Ground truth for everything else in the library.

#include <cstdint>
#include <future>
#include <optional>
#include <stdexcept>
#include <vector>

#include "nbp/coloring.hpp"
#include "nbp/dsu.hpp"
#include "nbp/plane_graph.hpp"

namespace nbp {

struct SolveRequest {
  const PlaneGraph& graph;
  IFColoring fixed;
  std::optional<CycleRef> superextend_wrt = std::nullopt;
  Mode mode = kDefaultMode;
};

enum class ForestCheck { Incremental, FromScratch };

struct SolveOptions {
  int jobs = 1;
  ForestCheck forest = ForestCheck::Incremental;
  std::uint64_t node_limit = 0;  // search nodes per branch; 0 = unbounded
};

class SearchBudgetExceeded : public std::runtime_error {
 public:
  SearchBudgetExceeded() : std::runtime_error("oracle node limit exceeded") {}
};

namespace detail {

class Search {
 public:
  Search(const SolveRequest& req, ForestCheck forest, std::uint64_t node_limit = 0)
      : g_(req.graph),
        phi_(req.fixed),
        dsu_(req.graph.order()),
        forest_(forest),
        mode_(req.mode),
        node_limit_(node_limit) {
    if (phi_.size() != g_.order()) phi_ = IFColoring(g_.order());
    if (req.superextend_wrt) {
      on_cycle_ = cycle_mask(g_, *req.superextend_wrt);
      check_paths_ = true;
    } else {
      on_cycle_.assign(g_.order(), 0);
    }
    order_free();
    consistent_ = is_if_coloring(g_, phi_).valid;
    for (Vertex u = 0; u < g_.order() && consistent_; ++u)
      if (phi_.is(u, Color::F))
        for (Vertex w : g_.neighbors(u))
          if (u < w && phi_.is(w, Color::F)) dsu_.unite(u, w);
    if (consistent_ && check_paths_) consistent_ = superextension_violation(g_, on_cycle_, phi_, mode_).valid;
  }

  std::optional<IFColoring> first(std::size_t idx = 0) {
    if (!consistent_) return std::nullopt;
    tick();
    if (idx == order_.size()) return phi_;
    Vertex v = order_[idx];
    for (Color c : {Color::F, Color::I}) {
      std::size_t mark = dsu_.checkpoint();
      if (assign(v, c))
        if (auto r = first(idx + 1)) {
          phi_[v] = Color::Unset;
          dsu_.rollback(mark);
          return r;
        }
      phi_[v] = Color::Unset;
      dsu_.rollback(mark);
    }
    return std::nullopt;
  }

  std::uint64_t count(std::size_t idx = 0) {
    if (!consistent_) return 0;
    tick();
    if (idx == order_.size()) return 1;
    Vertex v = order_[idx];
    std::uint64_t total = 0;
    for (Color c : {Color::F, Color::I}) {
      std::size_t mark = dsu_.checkpoint();
      if (assign(v, c)) total += count(idx + 1);
      phi_[v] = Color::Unset;
      dsu_.rollback(mark);
    }
    return total;
  }

  /// Copy of the state with the first free vertex coloured c, or nullopt if
  /// that colour is immediately rejected.
  std::optional<Search> branch(Color c) const {
    Search s = *this;
    if (!s.consistent_ || s.order_.empty()) return std::nullopt;
    if (!s.assign(s.order_[0], c)) return std::nullopt;
    s.order_.erase(s.order_.begin());
    return s;
  }

  bool has_free() const { return consistent_ && !order_.empty(); }

 private:
  void tick() {
    if (node_limit_ && ++nodes_ > node_limit_) throw SearchBudgetExceeded();
  }

  // Breadth-first from the coloured vertices, so constraints between fixed
  // vertices surface near the root; seeds and ties by decreasing degree.
  void order_free() {
    std::vector<Vertex> by_deg(g_.order());
    for (Vertex v = 0; v < g_.order(); ++v) by_deg[v] = v;
    std::stable_sort(by_deg.begin(), by_deg.end(), [&](Vertex a, Vertex b) { return g_.degree(a) > g_.degree(b); });
    std::vector<char> queued(g_.order(), 0);
    std::vector<Vertex> frontier;
    for (Vertex v : by_deg)
      if (phi_[v] != Color::Unset) frontier.push_back(v), queued[v] = 1;
    auto sweep = [&] {
      for (std::size_t h = 0; h < frontier.size(); ++h) {
        Vertex x = frontier[h];
        if (phi_[x] == Color::Unset) order_.push_back(x);
        for (Vertex y : g_.neighbors(x))
          if (!queued[y]) queued[y] = 1, frontier.push_back(y);
      }
    };
    sweep();
    for (Vertex v : by_deg)
      if (!queued[v]) {
        frontier.assign(1, v);
        queued[v] = 1;
        sweep();
      }
  }

  bool assign(Vertex v, Color c) {
    if (c == Color::I) {
      for (Vertex w : g_.neighbors(v))
        if (phi_.is(w, Color::I)) return false;
      phi_[v] = Color::I;
    } else {
      phi_[v] = Color::F;
      if (forest_ == ForestCheck::Incremental) {
        for (Vertex w : g_.neighbors(v))
          if (phi_.is(w, Color::F) && !dsu_.unite(v, w)) return false;
      } else if (!induces_forest(g_, phi_)) {
        return false;
      }
    }
    // a new F vertex can only complete a path through itself; a new colour on
    // C can make an existing component's endpoint qualify
    if (check_paths_ && (c == Color::F || on_cycle_[v]))
      if (!superextension_violation(g_, on_cycle_, phi_, mode_)) return false;
    return true;
  }

  const PlaneGraph& g_;
  IFColoring phi_;
  Dsu dsu_;
  ForestCheck forest_;
  Mode mode_;
  std::vector<char> on_cycle_;
  bool check_paths_ = false;
  bool consistent_ = true;
  std::vector<Vertex> order_;
  std::uint64_t node_limit_ = 0;
  std::uint64_t nodes_ = 0;
};

}  // namespace detail

/// A total coloring extending req.fixed, or nullopt. F is tried before I at
/// every vertex; the answer is the first one found in that order regardless of
/// opts.jobs. Throws SearchBudgetExceeded when opts.node_limit runs out.
inline std::optional<IFColoring> solve(const SolveRequest& req, SolveOptions opts = {}) {
  detail::Search root(req, opts.forest, opts.node_limit);
  std::optional<IFColoring> out;
  if (opts.jobs > 1 && root.has_free()) {
    auto run = [](std::optional<detail::Search> s) -> std::optional<IFColoring> {
      return s ? s->first() : std::nullopt;
    };
    auto f_branch = std::async(std::launch::async, run, root.branch(Color::F));
    auto i_branch = std::async(std::launch::async, run, root.branch(Color::I));
    auto a = f_branch.get();
    auto b = i_branch.get();
    out = a ? a : b;
  } else {
    out = root.first();
  }
  if (out) {
    // self-check
    bool ok = is_if_coloring(req.graph, *out).valid;
    if (ok && req.superextend_wrt)
      ok = superextension_violation(req.graph, cycle_mask(req.graph, *req.superextend_wrt), *out, req.mode).valid;
    if (!ok) throw std::logic_error("oracle produced an invalid coloring");
  }
  return out;
}

inline std::uint64_t count(const SolveRequest& req, SolveOptions opts = {}) {
  detail::Search root(req, opts.forest, opts.node_limit);
  if (opts.jobs > 1 && root.has_free()) {
    auto run = [](std::optional<detail::Search> s) -> std::uint64_t { return s ? s->count() : 0; };
    auto a = std::async(std::launch::async, run, root.branch(Color::F));
    auto b = std::async(std::launch::async, run, root.branch(Color::I));
    return a.get() + b.get();
  }
  return root.count();
}

struct SuperextendableResult {
  bool ok = true;
  std::optional<IFColoring> failing;  // first precoloring that does not superextend
  int precolorings = 0;
};

inline SuperextendableResult superextendable(const PlaneGraph& g, const CycleRef& c, Mode mode = kDefaultMode,
                                             SolveOptions opts = {}) {
  require_cycle(g, c);
  SuperextendableResult r;
  for (auto& pre : valid_precolorings(g, c)) {
    ++r.precolorings;
    if (!solve(SolveRequest{g, pre, c, mode}, opts)) {
      r.ok = false;
      r.failing = pre;
      return r;
    }
  }
  return r;
}

}  // namespace nbp
