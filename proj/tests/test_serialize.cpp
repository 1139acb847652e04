#include <gtest/gtest.h>

#include "mcg/random.hpp"
#include "mcg/serialize.hpp"

using namespace mcg;

TEST(Serialize, GeneratorTokens) {
  const Genus g(3);
  EXPECT_EQ(generator_token(g, 0), "A1");
  EXPECT_EQ(generator_token(g, 2), "A3");
  EXPECT_EQ(generator_token(g, 3), "B1");
  EXPECT_EQ(generator_token(g, 5), "B3");
}

TEST(Serialize, MapRoundTripPreservesCertification) {
  Rng rng(9);
  for (int i = 0; i < 50; ++i) {
    const Genus g(rng.between(2, 5));
    const Auto a = random_element(g, 5, rng.next());
    const MapFile back = read_map(map_to_json(a).dump());
    EXPECT_EQ(back.forward, a.forward());
    ASSERT_TRUE(back.certified);
    EXPECT_EQ(back.certified->backward(), a.backward());

    const MapFile bare = read_map(map_to_json(a.forward()).dump());
    EXPECT_EQ(bare.forward, a.forward());
    EXPECT_FALSE(bare.certified);
  }
}

TEST(Serialize, IotaFileContents) {
  const Json doc = map_to_json(jablow(Genus(2)));
  EXPECT_EQ(doc["genus"], 2);
  EXPECT_EQ(doc["images"]["B2"], "B2 A2 b2 a2 b2");
  EXPECT_EQ(doc["images"].begin().key(), "A1");
  EXPECT_EQ(doc["inverse_images"]["B2"], "B2 A2 b2 a2 b2");
}

TEST(Serialize, RejectsBadFiles) {
  EXPECT_THROW(read_map("not json"), ParseError);
  EXPECT_THROW(read_map(R"({"images": {}})"), ParseError);
  EXPECT_THROW(read_map(R"({"genus": 1, "images": {}})"), ParseError);
  EXPECT_THROW(read_map(R"({"genus": 2, "images": {"A1": "A1"}})"), ParseError);
  EXPECT_THROW(read_map(R"({"genus": 2, "images": {"A1": "A1", "A2": "A2", "B1": "B1", "B2": "B3"}})"),
               ParseError);
  EXPECT_THROW(read_map(R"({"genus": 2, "images": {"A1": "A1", "A2": "A2", "B1": "B1", "B2": "B2", "C1": "1"}})"),
               ParseError);
  EXPECT_THROW(read_map(R"({"genus": 2, "images": {"A1": "A1 B1", "A2": "A2", "B1": "B1", "B2": "B2"},
                             "inverse_images": {"A1": "A1", "A2": "A2", "B1": "B1", "B2": "B2"}})"),
               ParseError);
  EXPECT_THROW(read_map_file("/nonexistent/map.json"), ParseError);
}

TEST(Serialize, VectorsAndMatrices) {
  const Genus g(2);
  EXPECT_EQ(to_json(HVec(g, {1, -2, 0, 3})).dump(), "[1,-2,0,3]");
  EXPECT_EQ(to_json(-SpMat::identity(g)).dump(), "[[-1,0,0,0],[0,-1,0,0],[0,0,-1,0],[0,0,0,-1]]");
  const Json q = to_json(earle_psi(jablow(Genus(3))));
  EXPECT_EQ(q.dump(),
            R"({"lowest_terms":["1/2","1/2","1/2","-1/2","-1","-3/2"],"denominator":4,"numerators":[2,2,2,-2,-4,-6]})");
}
