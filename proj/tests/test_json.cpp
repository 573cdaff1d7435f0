#include <gtest/gtest.h>

#include "schur/enumeration.hpp"
#include "schur/json.hpp"

using namespace schur;

TEST(Json, PartitionSchema) {
    const auto p = SchurPartition::from_lists(4, {{0}, {1, 3}, {2}});
    EXPECT_EQ(to_json(p).dump(), R"({"n":4,"classes":[[0],[1,3],[2]]})");
}

TEST(Json, PartitionRoundTrip) {
    Enumerator e;
    for (int n : {1, 6, 12, 21}) {
        for (const auto& p : e.rings(n).rings) {
            EXPECT_EQ(partition_from_json(Json::parse(to_json(p).dump())), p);
        }
    }
}

TEST(Json, MalformedPartitionRejected) {
    EXPECT_THROW(partition_from_json(Json::parse(R"({"n":4})")), std::invalid_argument);
    EXPECT_THROW(partition_from_json(Json::parse(R"({"n":4,"classes":"x"})")), std::invalid_argument);
    EXPECT_THROW(partition_from_json(Json::parse(R"({"n":4,"classes":[[0],[1,2]]})")), std::invalid_argument);
    EXPECT_THROW(partition_from_json(Json::parse(R"({"n":4,"classes":[[0,1],[1,2,3]]})")), std::invalid_argument);
}

TEST(Json, EnumerationSchema) {
    const auto j = to_json(enumerate(12));
    std::vector<std::string> keys;
    for (const auto& item : j.items()) keys.push_back(item.key());
    EXPECT_EQ(keys, (std::vector<std::string>{"n", "omega", "rings", "tags", "core_census"}));
    EXPECT_EQ(j["n"], 12);
    EXPECT_EQ(j["omega"], 32);
    EXPECT_EQ(j["rings"].size(), 32U);
    EXPECT_EQ(j["tags"].size(), 32U);
    std::size_t total = 0;
    for (const auto& c : j["core_census"]) {
        EXPECT_TRUE(c.contains("core") && c.contains("order") && c.contains("count"));
        total += c["count"].get<std::size_t>();
    }
    EXPECT_EQ(total, 32U);
    for (const auto& tags : j["tags"]) {
        for (const auto& t : tags) {
            const auto name = t.get<std::string>();
            EXPECT_TRUE(name == "trivial" || name == "automorphic" || name == "direct" || name == "wedge");
        }
    }
}

TEST(Json, EnumerationOfOne) {
    EXPECT_EQ(to_json(enumerate(1)).dump(),
              R"({"n":1,"omega":1,"rings":[{"n":1,"classes":[[0]]}],"tags":[["trivial","automorphic"]],)"
              R"("core_census":[{"core":{"n":1,"classes":[[0]]},"order":1,"count":1}]})");
}
