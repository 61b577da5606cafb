#include "fanq/enumeration.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <string>

#include "fanq/error.hpp"

namespace fanq {

void EnumerationTask::validate() const {
  require(n >= 1 && n <= kMaxEnumerationOrder,
          "enumeration order " + std::to_string(n) + " outside [1, " + std::to_string(kMaxEnumerationOrder) + "]");
  if (shard) {
    require(shard->count >= 1, "shard count must be positive");
    require(shard->index >= 0 && shard->index < shard->count, "shard index must lie in [0, shard count)");
  }
}

namespace {

class OrderlyGenerator {
 public:
  OrderlyGenerator(const EnumerationTask& task, const GraphSink& sink) : task_(task), sink_(sink) {}

  std::uint64_t run() {
    grow(Graph(0));
    return emitted_;
  }

 private:
  void grow(const Graph& parent) {
    const int m = parent.order();
    if (m == task_.n) {
      if (!task_.connected_only || is_connected(parent)) {
        sink_(parent);
        ++emitted_;
      }
      return;
    }
    if (m == task_.n - 1 && task_.shard) {
      const std::uint64_t index = parents_at_last_level_++;
      if (index % static_cast<std::uint64_t>(task_.shard->count) != static_cast<std::uint64_t>(task_.shard->index)) return;
    }

    int parent_max_degree = parent.max_degree();
    std::vector<std::pair<std::string, Graph>> children;
    for (VertexSet attach = 0; attach <= first_n(m); ++attach) {
      Graph child(m + 1);
      for (int u = 0; u < m; ++u) {
        for (VertexSet s = parent.neighbors(u) & ~first_n(u + 1); s != 0; s &= s - 1) child.add_edge(u, lowest(s));
      }
      for (VertexSet s = attach; s != 0; s &= s - 1) child.add_edge(lowest(s), m);

      // The new vertex must have maximum degree; parent degrees rise by at most one.
      const int d = popcount(attach);
      if (d < parent_max_degree) {
        bool blocked = false;
        for (int u = 0; u < m && !blocked; ++u) blocked = child.degree(u) > d;
        if (blocked) {
          if (attach == first_n(m)) break;
          continue;
        }
      }

      Graph canonical;
      if (is_canonical_extension(child, m, &canonical)) children.emplace_back(graph6_encode(canonical), canonical);
      if (attach == first_n(m)) break;
    }
    std::sort(children.begin(), children.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    children.erase(std::unique(children.begin(), children.end(),
                               [](const auto& a, const auto& b) { return a.first == b.first; }),
                   children.end());
    for (const auto& [form, child] : children) grow(child);
  }

  const EnumerationTask& task_;
  const GraphSink& sink_;
  std::uint64_t emitted_ = 0;
  std::uint64_t parents_at_last_level_ = 0;
};

}  // namespace

std::uint64_t enumerate(const EnumerationTask& task, const GraphSink& sink) {
  task.validate();
  return OrderlyGenerator(task, sink).run();
}

std::vector<Graph> enumerate_all(const EnumerationTask& task) {
  std::vector<Graph> out;
  enumerate(task, [&](const Graph& g) { out.push_back(g); });
  return out;
}

StreamStats stream_graph6(std::istream& in, const GraphSink& sink, const StreamOptions& options) {
  StreamStats stats;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    Graph g;
    try {
      g = graph6_decode(line);
    } catch (const Error& e) {
      if (options.fail_fast) fail(ErrorCode::parse, "line " + std::to_string(number) + ": " + e.what());
      ++stats.skipped;
      stats.diagnostics.push_back({number, e.what()});
      continue;
    }
    sink(g);
    ++stats.graphs;
  }
  if (in.bad()) fail(ErrorCode::io, "read error after line " + std::to_string(number));
  return stats;
}

void write_graph6(std::ostream& out, std::span<const Graph> graphs) {
  for (const Graph& g : graphs) out << graph6_encode(g) << '\n';
  if (!out) fail(ErrorCode::io, "write error while emitting graph6");
}

}  // namespace fanq
