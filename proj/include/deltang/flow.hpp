#pragma once

/**
 * Integer-capacity directed flow network with a shortest-augmenting-path
 * (Dinic) max-flow.  Arcs are stored in pairs: arc id ^ 1 is the residual
 * reverse arc.  A network can be re-solved for many (s, t) pairs; each solve
 * starts from zero flow.
 */

#include <algorithm>
#include <limits>
#include <string>
#include <vector>

#include "deltang/error.hpp"

namespace deltang {

class FlowNetwork {
 public:
  explicit FlowNetwork(int nodes) : nodes_(nodes) {
    if (nodes < 0) throw InputError("flow network: negative node count");
  }

  int node_count() const { return nodes_; }

  /// Drops every arc and resizes to `nodes`, keeping allocated storage.
  void clear(int nodes) {
    if (nodes < 0) throw InputError("flow network: negative node count");
    nodes_ = nodes;
    arcs_.clear();
    tails_.clear();
    finalized_ = false;
    source_ = sink_ = -1;
  }

  int add_arc(int from, int to, int capacity) {
    if (from < 0 || to < 0 || from >= nodes_ || to >= nodes_) throw InputError("flow network: arc endpoint out of range");
    if (capacity < 0) throw InputError("flow network: negative capacity");
    int id = static_cast<int>(arcs_.size());
    arcs_.push_back({to, capacity});
    arcs_.push_back({from, 0});
    tails_.push_back(from);
    tails_.push_back(to);
    finalized_ = false;
    return id;
  }

  /// Maximum s-t flow, stopping early once `limit` units have been routed.
  int max_flow(int s, int t, int limit = std::numeric_limits<int>::max()) {
    if (s < 0 || t < 0 || s >= nodes_ || t >= nodes_) throw InputError("flow network: terminal out of range");
    if (s == t) throw InputError("flow network: source equals sink");
    finalize();
    std::fill(flow_.begin(), flow_.end(), 0);
    source_ = s;
    sink_ = t;
    int total = 0;
    while (total < limit && build_levels()) {
      std::copy(offsets_.begin(), offsets_.end() - 1, cursor_.begin());
      while (total < limit) {
        int pushed = augment(s, limit - total);
        if (pushed == 0) break;
        total += pushed;
      }
    }
    return total;
  }

  /// Nodes reachable from the last source in the residual network.  After a
  /// flow that was not cut short by `limit`, this is the source side of a
  /// minimum cut.
  std::vector<char> source_side() const {
    std::vector<char> seen(nodes_, 0);
    if (source_ < 0) return seen;
    std::vector<int> queue{source_};
    seen[source_] = 1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      int v = queue[head];
      for (int i = offsets_[v]; i < offsets_[v + 1]; ++i) {
        int a = order_[i];
        if (residual(a) > 0 && !seen[arcs_[a].head]) {
          seen[arcs_[a].head] = 1;
          queue.push_back(arcs_[a].head);
        }
      }
    }
    return seen;
  }

  int arc_flow(int arc) const { return flow_[arc]; }

 private:
  struct Arc {
    int head;
    int capacity;
  };

  int residual(int a) const { return arcs_[a].capacity - flow_[a]; }

  void finalize() {
    if (finalized_) return;
    const int m = static_cast<int>(arcs_.size());
    offsets_.assign(nodes_ + 1, 0);
    for (int a = 0; a < m; ++a) ++offsets_[tails_[a] + 1];
    for (int v = 0; v < nodes_; ++v) offsets_[v + 1] += offsets_[v];
    order_.assign(m, 0);
    fill_.assign(offsets_.begin(), offsets_.end() - 1);
    for (int a = 0; a < m; ++a) order_[fill_[tails_[a]]++] = a;
    flow_.assign(m, 0);
    level_.assign(nodes_, -1);
    cursor_.assign(nodes_, 0);
    queue_.reserve(nodes_);
    finalized_ = true;
  }

  bool build_levels() {
    std::fill(level_.begin(), level_.end(), -1);
    queue_.clear();
    queue_.push_back(source_);
    level_[source_] = 0;
    for (std::size_t head = 0; head < queue_.size(); ++head) {
      int v = queue_[head];
      for (int i = offsets_[v]; i < offsets_[v + 1]; ++i) {
        int a = order_[i];
        int w = arcs_[a].head;
        if (level_[w] < 0 && residual(a) > 0) {
          level_[w] = level_[v] + 1;
          queue_.push_back(w);
        }
      }
    }
    return level_[sink_] >= 0;
  }

  int augment(int v, int budget) {
    if (v == sink_) return budget;
    for (int &i = cursor_[v]; i < offsets_[v + 1]; ++i) {
      int a = order_[i];
      int w = arcs_[a].head;
      if (level_[w] != level_[v] + 1 || residual(a) <= 0) continue;
      int pushed = augment(w, std::min(budget, residual(a)));
      if (pushed > 0) {
        flow_[a] += pushed;
        flow_[a ^ 1] -= pushed;
        return pushed;
      }
    }
    return 0;
  }

  int nodes_;
  std::vector<Arc> arcs_;
  std::vector<int> tails_;
  bool finalized_ = false;
  std::vector<int> offsets_, order_, fill_, flow_, level_, cursor_, queue_;
  int source_ = -1;
  int sink_ = -1;
};

/// Value of a maximum s-t flow.
inline int st_max_flow(FlowNetwork &network, int s, int t) { return network.max_flow(s, t); }

}  // namespace deltang
