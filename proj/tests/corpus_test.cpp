#include <gtest/gtest.h>

#include <set>

#include "brute_force.hpp"
#include "graphs.hpp"
#include "nbp/corpus.hpp"
#include "nbp/reducer.hpp"

namespace nbp {
namespace {

const std::string kDir = NBP_CORPUS_DIR;

std::set<int> lengths(const ClassReport& r) { return {r.cycle_lengths.begin(), r.cycle_lengths.end()}; }

TEST(VerifyClass, Examples) {
  auto c9 = verify_class(testing::cycle_graph(9));
  EXPECT_TRUE(c9.in_class);
  EXPECT_EQ(c9.girth, 9);
  EXPECT_EQ(c9.str(), "in-class girth=9 cycles<=12=9");

  auto k4 = verify_class(testing::k4());
  EXPECT_FALSE(k4.in_class);
  EXPECT_EQ(k4.girth, 3);
  ASSERT_TRUE(k4.forbidden);
  EXPECT_EQ(k4.forbidden->length(), 4);

  auto tp = curated_entry(kDir, "triangle-pendant");
  ASSERT_TRUE(tp);
  auto r = verify_class(tp->graph);
  EXPECT_TRUE(r.in_class);
  EXPECT_EQ(r.girth, 3);

  auto path = verify_class(testing::path_graph(5));
  EXPECT_TRUE(path.in_class);
  EXPECT_EQ(path.girth, 0);
  EXPECT_EQ(path.str(), "in-class girth=none cycles<=12=none");
}

TEST(VerifyClass, CycleLengthsMatchEnumeration) {
  for (auto& e : desk_corpus(kDir)) {
    auto r = verify_class(e.graph);
    EXPECT_EQ(lengths(r), testing::brute_cycle_lengths(e.graph, 12)) << e.provenance;
  }
}

TEST(Subdivision, K4WithTwoInnerVertices) {
  auto e = gen_subdivision(testing::k4(), 2, 1);
  EXPECT_EQ(e.graph.order(), 16);
  EXPECT_EQ(e.graph.size(), 18);
  auto r = verify_class(e.graph);
  EXPECT_TRUE(r.in_class);
  EXPECT_EQ(lengths(r), (std::set<int>{9, 12}));
  EXPECT_EQ(lengths(r), testing::brute_cycle_lengths(e.graph, 12));
}

TEST(Subdivision, ZeroIsIdentityUpToLabels) {
  auto e = gen_subdivision(testing::triangle(), 0, 5);
  EXPECT_EQ(e.graph.order(), 3);
  EXPECT_EQ(e.graph.size(), 3);
  EXPECT_EQ(e.provenance, "subdivision:k=0:seed=5");
}

TEST(Subdivision, RejectsForbiddenResult) {
  EXPECT_THROW(gen_subdivision(named_base("square"), 1, 1), CorpusError);
  EXPECT_THROW(gen_subdivision(testing::triangle(), -1, 1), CorpusError);
  try {
    gen_subdivision(named_base("square"), 1, 1);
  } catch (const CorpusError& err) {
    EXPECT_NE(std::string(err.what()).find("PreconditionViolated"), std::string::npos);
  }
}

TEST(Cactus, SingleBlockIsTriangle) {
  for (std::uint32_t s = 0; s < 10; ++s) {
    auto e = gen_triangle_cactus(1, s);
    EXPECT_EQ(e.graph.order(), 3);
    EXPECT_EQ(e.graph.size(), 3);
  }
}

TEST(Cactus, TwoTrianglesShareOneVertex) {
  int seen = 0;
  for (std::uint32_t s = 0; s < 30; ++s) {
    auto e = gen_triangle_cactus(2, s);
    if (e.graph.order() != 5) continue;
    ++seen;
    EXPECT_EQ(e.graph.size(), 6);
    EXPECT_EQ(short_cycles(e.graph, 12).size(), 2u);
    EXPECT_EQ(e.stats.face_degrees.at(3), 2);
  }
  EXPECT_GT(seen, 0);
  EXPECT_THROW(gen_triangle_cactus(0, 1), CorpusError);
}

TEST(Generators, InClassAndDeterministic) {
  const std::vector<std::string> families = {"cactus:6", "greedy:14", "greedy:12:60", "ears:14:9", "ears:13:12",
                                             "subdivision:k4:2"};
  for (auto& fam : families)
    for (std::uint32_t s = 1; s <= 6; ++s) {
      auto a = gen_family(fam, s);
      auto b = gen_family(fam, s);
      EXPECT_EQ(write_pg(a.graph), write_pg(b.graph)) << fam << " " << s;
      EXPECT_EQ(a.provenance, b.provenance);
      EXPECT_TRUE(verify_class(a.graph).in_class) << a.provenance;
    }
  EXPECT_NE(write_pg(gen_family("greedy:14", 1).graph), write_pg(gen_family("greedy:14", 2).graph));
}

TEST(Generators, EarsKeepOuterLength) {
  for (int len : {5, 7, 9, 10, 11, 12}) {
    auto e = gen_family("ears:14:" + std::to_string(len), 3);
    EXPECT_EQ(e.graph.outer().size(), static_cast<std::size_t>(len));
    EXPECT_TRUE(e.graph.outer_cycle());
  }
  EXPECT_THROW(gen_family("ears:14:6", 1), CorpusError);
}

TEST(Generators, FamilyParsing) {
  EXPECT_EQ(gen_family("subdivision:k4:2", 7).provenance, "subdivision:base=k4:k=2:seed=7");
  EXPECT_EQ(gen_family("cactus:3", 2).provenance, "cactus:blocks=3:seed=2");
  EXPECT_THROW(gen_family("wheel:5", 1), CorpusError);
  EXPECT_THROW(gen_family("cactus:x", 1), CorpusError);
  EXPECT_THROW(named_base("k5"), CorpusError);
}

TEST(Curated, Loads) {
  auto all = curated(kDir);
  std::set<std::string> names;
  for (auto& e : all) {
    names.insert(e.provenance);
    EXPECT_TRUE(verify_class(e.graph).in_class) << e.provenance;
  }
  for (const char* n : {"c5", "c9-bare", "c9-ear", "triangle-pendant", "path5", "special2-exerciser",
                        "nine-face-exerciser", "tetrad-exerciser", "l4-exerciser"})
    EXPECT_TRUE(names.count(std::string("curated:") + n)) << n;
  EXPECT_FALSE(curated_entry(kDir, "no-such-instance"));
}

TEST(Curated, ExercisersExposeTheirConfigurations) {
  auto l4 = curated_entry(kDir, "l4-exerciser")->graph;
  auto cfg = find_configuration(l4, *l4.outer_cycle());
  ASSERT_TRUE(cfg);
  EXPECT_EQ(cfg->kind, ConfigKind::BadInternal5Face);

  auto tet = curated_entry(kDir, "tetrad-exerciser")->graph;
  cfg = find_configuration(tet, *tet.outer_cycle());
  ASSERT_TRUE(cfg);
  EXPECT_EQ(cfg->kind, ConfigKind::Tetrad);

  for (auto* name : {"l4-exerciser", "tetrad-exerciser"}) {
    auto g = curated_entry(kDir, name)->graph;
    EXPECT_EQ(g.outer().size(), 10u);
    EXPECT_EQ(girth(g), 3);
    for (Vertex v = 0; v < g.order(); ++v) EXPECT_EQ(g.degree(v), 3);
  }
}

TEST(DeskCorpus, SizeClassAndCoverage) {
  auto desk = desk_corpus(kDir);
  EXPECT_GE(desk.size(), 30u);
  CoverageFlags all;
  std::set<std::string> prov;
  for (auto& e : desk) {
    EXPECT_LE(e.graph.order(), 16) << e.provenance;
    EXPECT_TRUE(verify_class(e.graph).in_class) << e.provenance;
    EXPECT_TRUE(prov.insert(e.provenance).second) << "duplicate " << e.provenance;
    all.merge(flags_of(e.graph));
  }
  EXPECT_TRUE(all.missing().empty());
}

TEST(Stats, FaceDegreesSumToTwiceEdges) {
  for (auto& e : desk_corpus(kDir)) {
    int sum = 0, faces = 0;
    for (auto [d, k] : e.stats.face_degrees) sum += d * k, faces += k;
    EXPECT_EQ(sum, 2 * e.stats.m) << e.provenance;
    EXPECT_EQ(e.stats.n - e.stats.m + faces, 2) << e.provenance;
  }
}

}  // namespace
}  // namespace nbp
