#include "schur/json.hpp"

#include <stdexcept>

namespace schur {

Json to_json(const SchurPartition& p) {
    auto classes = Json::array();
    for (const auto& c : p.classes()) classes.push_back(c.elements());
    return {{"n", p.modulus()}, {"classes", std::move(classes)}};
}

SchurPartition partition_from_json(const Json& j) {
    try {
        const int n = j.at("n").get<int>();
        const auto lists = j.at("classes").get<std::vector<std::vector<int>>>();
        return SchurPartition::from_lists(n, lists);
    } catch (const Json::exception& e) {
        throw std::invalid_argument(std::string("partition JSON: ") + e.what());
    }
}

Json to_json(const UnitSubgroup& h) { return h.elements; }

Json to_json(const EnumerationResult& result) {
    auto rings = Json::array();
    for (const auto& p : result.rings) rings.push_back(to_json(p));
    auto tags = Json::array();
    for (const auto& t : result.tags) tags.push_back(t.names());
    auto census = Json::array();
    for (const auto& c : result.core_census) {
        census.push_back({{"core", to_json(c.core)}, {"order", c.order}, {"count", c.count}});
    }
    return {{"n", result.n},
            {"omega", result.omega()},
            {"rings", std::move(rings)},
            {"tags", std::move(tags)},
            {"core_census", std::move(census)}};
}

} // namespace schur
