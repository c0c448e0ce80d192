#include "hw/planarity.hpp"

#include <algorithm>
#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <boost/graph/graph_traits.hpp>

namespace hw {

PlanarityResult planarity_check(const Graph& g) {
  using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                                           boost::property<boost::vertex_index_t, int>,
                                           boost::property<boost::edge_index_t, int>>;
  using EdgeDesc = boost::graph_traits<BoostGraph>::edge_descriptor;
  BoostGraph bg(g.num_vertices());
  int index = 0;
  for (auto [u, v] : g.edges()) {
    auto [e, added] = boost::add_edge(u, v, bg);
    boost::put(boost::edge_index, bg, e, index++);
  }

  PlanarityResult result;
  std::vector<std::vector<EdgeDesc>> embedding(g.num_vertices());
  std::vector<EdgeDesc> kuratowski;
  result.planar = boost::boyer_myrvold_planarity_test(
      boost::boyer_myrvold_params::graph = bg,
      boost::boyer_myrvold_params::embedding =
          boost::make_iterator_property_map(embedding.begin(), boost::get(boost::vertex_index, bg)),
      boost::boyer_myrvold_params::kuratowski_subgraph = std::back_inserter(kuratowski));
  if (result.planar) {
    result.rotation.resize(g.num_vertices());
    for (int v = 0; v < g.num_vertices(); ++v)
      for (const EdgeDesc& e : embedding[v]) {
        const int s = static_cast<int>(boost::source(e, bg)), t = static_cast<int>(boost::target(e, bg));
        result.rotation[v].push_back(s == v ? t : s);
      }
  } else {
    for (const EdgeDesc& e : kuratowski) {
      int s = static_cast<int>(boost::source(e, bg)), t = static_cast<int>(boost::target(e, bg));
      result.kuratowski.emplace_back(std::min(s, t), std::max(s, t));
    }
    std::sort(result.kuratowski.begin(), result.kuratowski.end());
  }
  return result;
}

}  // namespace hw
