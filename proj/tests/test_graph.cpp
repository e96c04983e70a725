#include <gtest/gtest.h>

#include "corpus.hpp"
#include "oracles.hpp"

using namespace lpa;
using lpa::testing::load;
using lpa::testing::make_graph;

namespace {

std::vector<std::string> ids(const Graph& g, const std::vector<Vertex>& vs) {
  std::vector<std::string> out;
  for (auto v : vs) out.push_back(g.id(v));
  return out;
}

std::vector<std::string> path_names(const Graph& g, const std::vector<Path>& ps) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(p.to_string(g));
  return out;
}

}  // namespace

TEST(Graph, RejectsMalformedInput) {
  EXPECT_THROW(make_graph({}, {}), InputError);
  EXPECT_THROW(make_graph({"v", "v"}, {}), InputError);
  EXPECT_THROW(make_graph({"v", ""}, {}), InputError);
  EXPECT_THROW(make_graph({"v"}, {{"e", "v", "w"}}), InputError);
  EXPECT_THROW(make_graph({"v"}, {{"e", "v", "v"}, {"e", "v", "v"}}), InputError);
  EXPECT_THROW(json::parse_graph("{\"vertices\": [1]}"), InputError);
  EXPECT_THROW(json::parse_graph("not json"), InputError);
}

TEST(Graph, JsonRoundTrip) {
  for (const auto& name : lpa::testing::full_corpus()) {
    const Graph g = load(name);
    EXPECT_EQ(json::graph_from_json(json::to_json(g)), g) << name;
  }
}

TEST(Graph, Sinks) {
  EXPECT_EQ(ids(load("a2"), sinks(load("a2"))), std::vector<std::string>{"v2"});
  EXPECT_TRUE(sinks(load("loop")).empty());
  const Graph isolated = make_graph({"v"}, {});
  EXPECT_EQ(ids(isolated, sinks(isolated)), std::vector<std::string>{"v"});
}

TEST(Graph, SimpleCycles) {
  const auto two = simple_cycles(load("cycle2"));
  ASSERT_EQ(two.size(), 1u);
  EXPECT_EQ(two[0].length(), 2u);
  EXPECT_TRUE(simple_cycles(load("a3")).empty());

  const Graph loops = make_graph({"a", "b"}, {{"x", "a", "a"}, {"y", "b", "b"}});
  const auto found = simple_cycles(loops);
  std::multiset<std::size_t> lengths;
  for (const auto& c : found) lengths.insert(c.length());
  EXPECT_EQ(lengths, oracle::cycle_lengths_by_closed_walks(loops));
  EXPECT_EQ(lengths, (std::multiset<std::size_t>{1, 1}));
}

TEST(Graph, SimpleCyclesMatchClosedWalksOnDenseGraph) {
  // Complete digraph on 4 vertices plus loops: many overlapping cycles.
  std::vector<EdgeSpec> edges;
  const std::vector<std::string> vs = {"a", "b", "c", "d"};
  for (const auto& s : vs) {
    for (const auto& r : vs) edges.push_back({s + r, s, r});
  }
  const Graph g = make_graph(vs, edges);
  std::multiset<std::size_t> lengths;
  for (const auto& c : simple_cycles(g)) lengths.insert(c.length());
  EXPECT_EQ(lengths, oracle::cycle_lengths_by_closed_walks(g));
}

TEST(Graph, CyclesAreCanonicalUnderRelabeling) {
  // Same shape as cycle3 with vertex names permuted: the cycle set is preserved.
  const Graph g1 = load("cycle3");
  const Graph g2 = make_graph({"c", "a", "b"}, {{"x", "c", "a"}, {"y", "a", "b"}, {"z", "b", "c"}});
  const auto c1 = simple_cycles(g1), c2 = simple_cycles(g2);
  ASSERT_EQ(c1.size(), 1u);
  ASSERT_EQ(c2.size(), 1u);
  EXPECT_EQ(c1[0].length(), c2[0].length());
  EXPECT_EQ(g2.id(c2[0].base()), "a");
  EXPECT_EQ(c2[0].path().to_string(g2), "y.z.x");
}

TEST(Graph, HasExit) {
  const Graph toeplitz = load("toeplitz");
  EXPECT_TRUE(has_exit(toeplitz, simple_cycles(toeplitz).at(0)));
  const Graph loop = load("loop");
  EXPECT_FALSE(has_exit(loop, simple_cycles(loop).at(0)));
  const Graph cycle_exit = make_graph({"v1", "v2", "v3"}, {{"f1", "v1", "v2"}, {"f2", "v2", "v1"}, {"g", "v2", "v3"}});
  EXPECT_TRUE(has_exit(cycle_exit, simple_cycles(cycle_exit).at(0)));
}

TEST(Graph, NoExitCondition) {
  EXPECT_TRUE(no_exit_condition(load("tree5")));
  EXPECT_FALSE(no_exit_condition(load("toeplitz")));
  EXPECT_FALSE(no_exit_condition(load("rose2")));
  const Graph mixed = make_graph({"a", "b", "s"}, {{"x", "a", "a"}, {"y", "b", "b"}});
  EXPECT_TRUE(no_exit_condition(mixed));
}

TEST(Graph, PathsInto) {
  const Graph a3 = load("a3");
  const auto ps = paths_into(a3, a3.vertex("v3"));
  EXPECT_EQ(path_names(a3, ps), (std::vector<std::string>{"v3", "e2", "e1.e2"}));
  EXPECT_EQ(ps[2].length(), 2u);

  const Graph isolated = make_graph({"v"}, {});
  EXPECT_EQ(paths_into(isolated, Vertex{0}).size(), 1u);

  const Graph par = load("parallel");
  EXPECT_EQ(path_names(par, paths_into(par, par.vertex("v2"))), (std::vector<std::string>{"v2", "e1", "e2"}));
}

TEST(Graph, PathsIntoRefusesInfiniteEnumeration) {
  const Graph toeplitz = load("toeplitz");
  EXPECT_THROW(paths_into(toeplitz, toeplitz.vertex("v2")), InfiniteEnumeration);
  EXPECT_THROW(paths_into(toeplitz, toeplitz.vertex("v1")), InfiniteEnumeration);
  // truncated mode: v2, e, c.e, c.c.e
  EXPECT_EQ(paths_into(toeplitz, toeplitz.vertex("v2"), 3).size(), 4u);
}

TEST(Graph, PathsIntoCycle) {
  const Graph loop = load("loop");
  EXPECT_EQ(path_names(loop, paths_into_cycle(loop, simple_cycles(loop).at(0))), std::vector<std::string>{"v1"});

  const Graph c2 = load("cycle2");
  EXPECT_EQ(path_names(c2, paths_into_cycle(c2, simple_cycles(c2).at(0))), (std::vector<std::string>{"v1", "f2"}));

  const Graph fed = make_graph({"u", "v1"}, {{"c", "v1", "v1"}, {"g", "u", "v1"}});
  EXPECT_EQ(path_names(fed, paths_into_cycle(fed, simple_cycles(fed).at(0))), (std::vector<std::string>{"v1", "g"}));
}

TEST(Graph, IndexPathInvariants) {
  for (const auto& name : lpa::testing::no_exit_corpus()) {
    const Graph g = load(name);
    for (auto v : sinks(g)) {
      for (const auto& p : paths_into(g, v)) EXPECT_EQ(p.range(), v);
    }
    for (const auto& c : simple_cycles(g)) {
      for (const auto& p : paths_into_cycle(g, c)) {
        EXPECT_EQ(p.range(), c.base());
        EXPECT_FALSE(p.contains(c.path())) << name << " " << p.to_string(g);
      }
    }
  }
}

TEST(Graph, UniqueCycleDecompositionOfPaths) {
  // Every walk ending at a cycle base is q c^k for exactly one index path q.
  for (const auto& name : lpa::testing::no_exit_corpus()) {
    const Graph g = load(name);
    for (const auto& c : simple_cycles(g)) {
      const auto index = paths_into_cycle(g, c);
      for (const auto& [start, walk] : oracle::all_walks(g, 8)) {
        if (oracle::walk_end(g, start, walk) != c.base()) continue;
        const Path p = Path::of(g, start, walk);
        std::size_t matches = 0;
        for (const auto& q : index) {
          Path candidate = q;
          for (std::size_t k = 0; candidate.length() <= p.length(); ++k) {
            if (candidate == p) ++matches;
            candidate = candidate.then(c.path());
          }
        }
        EXPECT_EQ(matches, 1u) << name << " " << p.to_string(g);
        const auto [q, w] = strip_cycle_powers(g, p, c);
        EXPECT_TRUE(std::binary_search(index.begin(), index.end(), q));
        EXPECT_EQ(q.length() + w * c.length(), p.length());
      }
    }
  }
}

TEST(Graph, PathsIntoMatchesWalkEnumeration) {
  for (const auto& name : lpa::testing::no_exit_corpus()) {
    const Graph g = load(name);
    for (auto v : sinks(g)) {
      std::size_t brute = 0;
      for (const auto& [start, walk] : oracle::all_walks(g, g.vertex_count() + 2)) {
        if (oracle::walk_end(g, start, walk) == v) ++brute;
      }
      EXPECT_EQ(paths_into(g, v).size(), brute) << name;
    }
  }
}
