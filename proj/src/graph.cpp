#include "mobius/graph.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>
#include <stdexcept>

namespace mobius {

Graph::Graph(std::size_t vertex_count)
    : vertex_count_(vertex_count),
      adjacency_(vertex_count * vertex_count, 0) {
  if (vertex_count == 0) {
    throw std::invalid_argument("a graph needs at least one vertex");
  }
}

EdgeId Graph::add_edge(Vertex u, Vertex v) {
  if (u < 1 || v < 1 || u > vertex_count_ || v > vertex_count_) {
    throw std::invalid_argument("edge {" + std::to_string(u) + "," +
                                std::to_string(v) + "} out of range 1.." +
                                std::to_string(vertex_count_));
  }
  if (u == v) {
    throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
  }
  const EdgeId id = edges_.size();
  edges_.push_back({id, u, v});
  ++adjacency_[(u - 1) * vertex_count_ + (v - 1)];
  ++adjacency_[(v - 1) * vertex_count_ + (u - 1)];
  return id;
}

std::size_t Graph::degree(Vertex v) const {
  std::size_t d = 0;
  for (std::size_t w = 0; w < vertex_count_; ++w) {
    d += adjacency_[(v - 1) * vertex_count_ + w];
  }
  return d;
}

bool Graph::is_simple() const {
  return std::all_of(adjacency_.begin(), adjacency_.end(),
                     [](std::size_t m) { return m <= 1; });
}

std::vector<EdgeId> Graph::edges_between(Vertex u, Vertex v) const {
  std::vector<EdgeId> ids;
  for (const auto& e : edges_) {
    if (e.joins(u, v)) ids.push_back(e.id);
  }
  return ids;
}

EdgeId Graph::edge_between(Vertex u, Vertex v) const {
  auto ids = edges_between(u, v);
  if (ids.size() != 1) {
    throw std::invalid_argument(
        "expected exactly one edge between " + std::to_string(u) + " and " +
        std::to_string(v) + ", found " + std::to_string(ids.size()));
  }
  return ids.front();
}

Graph Graph::relabeled(const Permutation& pi) const {
  if (pi.degree() != vertex_count_) {
    throw std::invalid_argument("relabeling degree does not match graph");
  }
  Graph out(vertex_count_);
  for (const auto& e : edges_) out.add_edge(pi(e.u), pi(e.v));
  return out;
}

std::vector<std::pair<Vertex, Vertex>> CycleWitness::edge_pairs() const {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    Vertex a = vertices[i], b = vertices[(i + 1) % vertices.size()];
    pairs.emplace_back(std::min(a, b), std::max(a, b));
  }
  return pairs;
}

GraphWithCycle mobius_ladder(std::size_t n) {
  if (n == 0) throw std::invalid_argument("mobius_ladder needs n >= 1");
  if (n == 1) {
    Graph theta(2);
    for (int i = 0; i < 3; ++i) theta.add_edge(1, 2);
    return {std::move(theta), std::nullopt};
  }
  const std::size_t m = 2 * n;
  Graph g(m);
  CycleWitness rim;
  for (std::size_t i = 1; i <= m; ++i) {
    g.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(i % m + 1));
    rim.vertices.push_back(static_cast<Vertex>(i));
  }
  for (std::size_t i = 1; i <= n; ++i) {
    g.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(i + n));
  }
  return {std::move(g), std::move(rim)};
}

GraphWithCycle k33() {
  Graph g(6);
  for (Vertex i = 1; i <= 3; ++i) {
    for (Vertex j = 4; j <= 6; ++j) g.add_edge(i, j);
  }
  return {std::move(g), CycleWitness{{1, 6, 2, 4, 3, 5}}};
}

bool is_automorphism(const Graph& g, const Permutation& pi) {
  if (pi.degree() != g.vertex_count()) return false;
  const std::size_t n = g.vertex_count();
  for (Vertex u = 1; u <= n; ++u) {
    for (Vertex v = u + 1; v <= n; ++v) {
      if (g.multiplicity(u, v) != g.multiplicity(pi(u), pi(v))) return false;
    }
  }
  return true;
}

namespace {

class AutomorphismSearch {
 public:
  explicit AutomorphismSearch(const Graph& g)
      : g_(g), n_(g.vertex_count()), image_(n_ + 1, 0), used_(n_ + 1, false) {
    for (Vertex v = 1; v <= n_; ++v) degree_.push_back(g.degree(v));
    order_ = search_order();
  }

  std::vector<Permutation> run() {
    extend(0);
    return std::move(found_);
  }

 private:
  // Vertices sorted so each one (after the first of its component) is
  // adjacent to an earlier one, which maximizes pruning.
  std::vector<Vertex> search_order() const {
    std::vector<Vertex> order;
    std::vector<bool> placed(n_ + 1, false);
    while (order.size() < n_) {
      Vertex best = 0;
      std::size_t best_links = 0;
      for (Vertex v = 1; v <= n_; ++v) {
        if (placed[v]) continue;
        std::size_t links = 0;
        for (Vertex u : order) links += g_.multiplicity(u, v);
        if (best == 0 || links > best_links ||
            (links == best_links && degree_[v - 1] > degree_[best - 1])) {
          best = v;
          best_links = links;
        }
      }
      placed[best] = true;
      order.push_back(best);
    }
    return order;
  }

  void extend(std::size_t depth) {
    if (depth == n_) {
      std::vector<Point> images(n_);
      for (Vertex v = 1; v <= n_; ++v) images[v - 1] = image_[v];
      found_.push_back(Permutation::from_images(std::move(images)));
      return;
    }
    const Vertex v = order_[depth];
    for (Vertex w = 1; w <= n_; ++w) {
      if (used_[w] || degree_[w - 1] != degree_[v - 1]) continue;
      bool ok = true;
      for (std::size_t d = 0; d < depth && ok; ++d) {
        const Vertex u = order_[d];
        ok = g_.multiplicity(u, v) == g_.multiplicity(image_[u], w);
      }
      if (!ok) continue;
      image_[v] = w;
      used_[w] = true;
      extend(depth + 1);
      used_[w] = false;
    }
  }

  const Graph& g_;
  std::size_t n_;
  std::vector<std::size_t> degree_;
  std::vector<Vertex> order_;
  std::vector<Vertex> image_;
  std::vector<bool> used_;
  std::vector<Permutation> found_;
};

}  // namespace

PermGroup automorphisms(const Graph& g, std::size_t vertex_bound) {
  if (g.vertex_count() > vertex_bound) {
    throw std::length_error("automorphisms: " +
                            std::to_string(g.vertex_count()) +
                            " vertices exceeds bound " +
                            std::to_string(vertex_bound));
  }
  auto elements = AutomorphismSearch(g).run();
  for (const auto& p : elements) {
    if (!is_automorphism(g, p)) {
      throw std::logic_error("automorphism search produced " +
                             to_cycle_string(p) +
                             ", which does not preserve the edges");
    }
  }
  return PermGroup::from_closed_elements(std::move(elements));
}

bool preserves_cycle(const PermGroup& group, const CycleWitness& cycle) {
  std::set<std::pair<Vertex, Vertex>> edges;
  for (auto e : cycle.edge_pairs()) edges.insert(e);
  for (const auto& p : group.elements()) {
    for (auto [a, b] : edges) {
      if (a > p.degree() || b > p.degree()) return false;
      Vertex x = p(a), y = p(b);
      if (!edges.count({std::min(x, y), std::max(x, y)})) return false;
    }
  }
  return true;
}

bool is_cycle_of(const Graph& g, const CycleWitness& cycle) {
  const auto& vs = cycle.vertices;
  if (vs.size() < 3) return false;
  std::set<Vertex> distinct(vs.begin(), vs.end());
  if (distinct.size() != vs.size()) return false;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    Vertex a = vs[i], b = vs[(i + 1) % vs.size()];
    if (a < 1 || a > g.vertex_count() || b < 1 || b > g.vertex_count()) {
      return false;
    }
    if (!g.has_edge(a, b)) return false;
  }
  return true;
}

namespace {

std::vector<std::string_view> split_words(std::string_view line) {
  std::vector<std::string_view> words;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t' ||
                                 line[pos] == '\r')) {
      ++pos;
    }
    std::size_t start = pos;
    while (pos < line.size() && line[pos] != ' ' && line[pos] != '\t' &&
           line[pos] != '\r') {
      ++pos;
    }
    if (pos > start) words.push_back(line.substr(start, pos - start));
  }
  return words;
}

std::size_t parse_count(std::string_view word, std::size_t line_no) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), value);
  if (ec != std::errc() || ptr != word.data() + word.size()) {
    throw std::invalid_argument("line " + std::to_string(line_no) +
                                ": expected a number, got '" +
                                std::string(word) + "'");
  }
  return value;
}

}  // namespace

Graph parse_graph_text(std::string_view text) {
  std::optional<Graph> graph;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    auto words = split_words(line);
    if (words.empty() || words.front().front() == '#') continue;
    auto fail = [&](const std::string& what) {
      throw std::invalid_argument("line " + std::to_string(line_no) + ": " +
                                  what);
    };
    if (words.front() == "vertices") {
      if (graph) fail("duplicate 'vertices' line");
      if (words.size() != 2) fail("expected 'vertices N'");
      std::size_t n = parse_count(words[1], line_no);
      if (n == 0) fail("vertex count must be positive");
      graph.emplace(n);
    } else if (words.front() == "edge") {
      if (!graph) fail("'edge' before 'vertices'");
      if (words.size() != 3) fail("expected 'edge u v'");
      auto u = parse_count(words[1], line_no);
      auto v = parse_count(words[2], line_no);
      try {
        graph->add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
      } catch (const std::invalid_argument& e) {
        fail(e.what());
      }
    } else {
      fail("unknown directive '" + std::string(words.front()) + "'");
    }
  }
  if (!graph) throw std::invalid_argument("missing 'vertices N' line");
  return *std::move(graph);
}

std::string to_graph_text(const Graph& g) {
  std::ostringstream out;
  out << "vertices " << g.vertex_count() << '\n';
  for (const auto& e : g.edges()) out << "edge " << e.u << ' ' << e.v << '\n';
  return out.str();
}

std::optional<GraphWithCycle> builtin_graph(std::string_view spec) {
  if (spec == "k33") return k33();
  constexpr std::string_view prefix = "mobius:";
  if (spec.substr(0, prefix.size()) == prefix) {
    auto rest = spec.substr(prefix.size());
    std::size_t n = 0;
    auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), n);
    if (ec != std::errc() || ptr != rest.data() + rest.size() || n == 0) {
      throw std::invalid_argument("bad ladder size in '" + std::string(spec) +
                                  "'");
    }
    return mobius_ladder(n);
  }
  return std::nullopt;
}

}  // namespace mobius
