// Copyright 2026 The hamwb Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "hamwb/connectivity.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace hamwb {

namespace {

// Split network: vertex v becomes in-node 2v and out-node 2v+1 joined by a
// unit arc (unbounded for the terminals); each arc (u,v) becomes
// out(u) -> in(v) with unit capacity.
class SplitNetwork {
 public:
  SplitNetwork(const Digraph& d, Vertex source, Vertex sink)
      : nodes_(2 * d.order()),
        cap_(static_cast<std::size_t>(nodes_) * static_cast<std::size_t>(nodes_),
             0) {
    const int n = d.order();
    for (Vertex v = 0; v < n; ++v) {
      cap(in(v), out(v)) = (v == source || v == sink) ? n : 1;
      for (Vertex w : d.out_neighbors(v)) cap(out(v), in(w)) = 1;
    }
  }

  int max_flow(int s, int t, int limit) {
    int flow = 0;
    std::vector<int> parent(static_cast<std::size_t>(nodes_));
    std::vector<int> queue;
    queue.reserve(static_cast<std::size_t>(nodes_));
    while (flow < limit) {
      std::fill(parent.begin(), parent.end(), -1);
      parent[static_cast<std::size_t>(s)] = s;
      queue.clear();
      queue.push_back(s);
      for (std::size_t head = 0;
           head < queue.size() && parent[static_cast<std::size_t>(t)] < 0;
           ++head) {
        const int u = queue[head];
        for (int v = 0; v < nodes_; ++v) {
          if (parent[static_cast<std::size_t>(v)] < 0 && cap(u, v) > 0) {
            parent[static_cast<std::size_t>(v)] = u;
            queue.push_back(v);
          }
        }
      }
      if (parent[static_cast<std::size_t>(t)] < 0) break;
      for (int v = t; v != s; v = parent[static_cast<std::size_t>(v)]) {
        const int u = parent[static_cast<std::size_t>(v)];
        --cap(u, v);
        ++cap(v, u);
      }
      ++flow;
    }
    return flow;
  }

  static int in(Vertex v) { return 2 * v; }
  static int out(Vertex v) { return 2 * v + 1; }

 private:
  int& cap(int u, int v) {
    return cap_[static_cast<std::size_t>(u) * static_cast<std::size_t>(nodes_) +
                static_cast<std::size_t>(v)];
  }

  int nodes_;
  std::vector<int> cap_;
};

}  // namespace

int max_disjoint_paths(const Digraph& d, Vertex from, Vertex to, int limit) {
  if (from < 0 || from >= d.order() || to < 0 || to >= d.order() ||
      from == to) {
    throw std::invalid_argument("max_disjoint_paths needs two distinct vertices");
  }
  SplitNetwork net(d, from, to);
  return net.max_flow(SplitNetwork::out(from), SplitNetwork::in(to), limit);
}

ConnectivityReport strongly_k_connected(const Digraph& d, int k) {
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  ConnectivityReport report;
  report.k = k;
  const int n = d.order();
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      if (u == v) continue;
      const int paths = max_disjoint_paths(d, u, v, k);
      if (paths < k) {
        report.holds = false;
        report.witness = Arc{u, v};
        report.witness_paths = paths;
        return report;
      }
    }
  }
  return report;
}

}  // namespace hamwb
