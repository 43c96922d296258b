#include "defcol/embedding.hpp"

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <boost/graph/properties.hpp>

#include <cstring>
#include <string>

#include "defcol/errors.hpp"

namespace defcol {

namespace {

using BoostGraph =
    boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                          boost::property<boost::vertex_index_t, int>,
                          boost::property<boost::edge_index_t, int>>;

constexpr const char kHeader[] = ">>planar_code<<";
constexpr std::size_t kHeaderLen = sizeof(kHeader) - 1;

}  // namespace

std::optional<EmbeddedGraph> find_embedding(const Graph& g) {
  if (!g.connected()) {
    throw Error(Errc::DisconnectedInput, "find_embedding needs a connected graph");
  }

  BoostGraph bg(g.n);
  for (const auto& [u, v] : edge_list(g)) boost::add_edge(u, v, bg);
  auto edge_ids = boost::get(boost::edge_index, bg);
  int next_id = 0;
  for (auto [ei, ee] = boost::edges(bg); ei != ee; ++ei) boost::put(edge_ids, *ei, next_id++);

  using EdgeDesc = boost::graph_traits<BoostGraph>::edge_descriptor;
  std::vector<std::vector<EdgeDesc>> embedding(g.n);
  auto embedding_map =
      boost::make_iterator_property_map(embedding.begin(), boost::get(boost::vertex_index, bg));
  if (!boost::boyer_myrvold_planarity_test(boost::boyer_myrvold_params::graph = bg,
                                           boost::boyer_myrvold_params::embedding =
                                               embedding_map)) {
    return std::nullopt;
  }

  std::vector<std::vector<VertexId>> rotation(g.n);
  for (VertexId v = 0; v < g.n; ++v) {
    rotation[v].reserve(embedding[v].size());
    for (const EdgeDesc& e : embedding[v]) {
      VertexId s = static_cast<VertexId>(boost::source(e, bg));
      VertexId t = static_cast<VertexId>(boost::target(e, bg));
      rotation[v].push_back(s == v ? t : s);
    }
  }

  EmbeddedGraph eg = EmbeddedGraph::make(g, std::move(rotation));
  if (!euler_check(eg)) {
    throw Error(Errc::NotPlanarEmbedding, "planarity test produced a non-spherical rotation");
  }
  return eg;
}

std::vector<EmbeddedGraph> parse_planar_code(const std::vector<std::uint8_t>& bytes) {
  if (bytes.size() < kHeaderLen || std::memcmp(bytes.data(), kHeader, kHeaderLen) != 0) {
    throw Error(Errc::BadHeader, "expected \">>planar_code<<\"");
  }

  std::vector<EmbeddedGraph> graphs;
  std::size_t i = kHeaderLen;
  while (i < bytes.size()) {
    int record = static_cast<int>(graphs.size());
    auto record_tag = [record]() { return "record " + std::to_string(record); };
    int n = bytes[i++];
    if (n == 0) throw Error(Errc::TruncatedRecord, record_tag() + ": zero vertex count");

    std::vector<std::vector<VertexId>> rotation(n);
    std::vector<Edge> edges;
    for (VertexId v = 0; v < n; ++v) {
      for (;;) {
        if (i >= bytes.size()) {
          throw Error(Errc::TruncatedRecord,
                      record_tag() + ": input ends inside vertex " + std::to_string(v));
        }
        int b = bytes[i++];
        if (b == 0) break;
        if (b > n) {
          throw Error(Errc::NeighborOutOfRange, record_tag() + ": neighbor " + std::to_string(b) +
                                                    " in a " + std::to_string(n) +
                                                    "-vertex graph");
        }
        VertexId u = b - 1;
        rotation[v].push_back(u);
        edges.emplace_back(v, u);
      }
    }

    // build_graph rejects loops; make() rejects asymmetric or duplicated
    // neighbor lists via rotation validation.
    EmbeddedGraph eg = EmbeddedGraph::make(build_graph(n, edges), std::move(rotation));
    if (!euler_check(eg)) {
      throw Error(Errc::NotPlanarEmbedding, record_tag() + ": rotation fails Euler's formula");
    }
    graphs.push_back(std::move(eg));
  }
  return graphs;
}

std::vector<std::uint8_t> serialize_planar_code(const std::vector<EmbeddedGraph>& graphs) {
  std::vector<std::uint8_t> out(kHeader, kHeader + kHeaderLen);
  for (const EmbeddedGraph& eg : graphs) {
    if (eg.graph.n > 255) {
      throw Error(Errc::VertexOutOfRange, "planar_code single-byte encoding caps n at 255");
    }
    out.push_back(static_cast<std::uint8_t>(eg.graph.n));
    for (VertexId v = 0; v < eg.graph.n; ++v) {
      for (VertexId u : eg.rotation[v]) out.push_back(static_cast<std::uint8_t>(u + 1));
      out.push_back(0);
    }
  }
  return out;
}

}  // namespace defcol
