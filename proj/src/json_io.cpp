#include "partblocks/json_io.hpp"

namespace partblocks {

Json to_json(const Partition& lambda) { return Json(lambda.parts()); }

Partition partition_from_json(const Json& j) {
    return Partition::of(j.get<std::vector<int>>());
}

Json to_json(const SetPartitionDiagram& d) {
    int n = d.size();
    Json blocks = Json::array();
    for (const auto& blk : d.blocks()) {
        Json one = Json::array();
        for (int v : blk) one.push_back(v < n ? v + 1 : -(v - n + 1));
        blocks.push_back(std::move(one));
    }
    return blocks;
}

Json structure_constants_json(int n) {
    std::vector<SetPartitionDiagram> basis = all_diagrams(n);
    std::map<SetPartitionDiagram, int> index;
    for (size_t i = 0; i < basis.size(); ++i) index[basis[i]] = static_cast<int>(i);
    Json diagrams = Json::array();
    for (const auto& d : basis) diagrams.push_back(to_json(d));
    Json products = Json::array();
    for (size_t i = 0; i < basis.size(); ++i)
        for (size_t j = 0; j < basis.size(); ++j) {
            auto [prod, t] = concatenate(basis[i], basis[j]);
            products.push_back(Json::array({i, j, index.at(prod), t}));
        }
    return Json{{"n", n},
                {"dim", basis.size()},
                {"diagrams", std::move(diagrams)},
                {"products", std::move(products)}};
}

Json to_json(const BlockPartition& blocks) {
    Json classes = Json::array();
    for (const auto& cls : blocks.classes) {
        Json one = Json::array();
        for (const Partition& lam : cls) one.push_back(to_json(lam));
        classes.push_back(std::move(one));
    }
    return Json{{"classes", std::move(classes)}};
}

Json to_json(const Abacus& a) {
    Json g = Json::array();
    std::vector<int> counts(a.runners(), 0);
    for (long long pos : a.beads()) counts[pos % a.runners()] += 1;
    return Json{{"p", a.runners()}, {"beads", a.beads()}, {"gamma", counts}};
}

Json to_json(const MarkedAbacus& m) {
    Json j = to_json(m.base());
    j["v"] = m.marker();
    j["delta"] = m.delta();
    j["gamma_delta"] = gamma_delta(m).counts;
    return j;
}

Json to_json(const VerifyConfig& config) {
    Json j;
    j["n"] = config.n;
    j["field"] = config.field.to_string();
    switch (config.field.kind()) {
        case Field::Kind::rationals:
            j["delta"] = static_cast<long long>(numerator(config.delta.rat()));
            break;
        case Field::Kind::prime:
            j["delta"] = config.delta.residue();
            break;
        case Field::Kind::prime_square: {
            auto [a, b] = config.delta.ext();
            j["delta"] = Json::array({a, b});
            break;
        }
    }
    j["oracle_max_n"] = config.oracle_max_n;
    return j;
}

Json to_json(const VerifyOutcome& outcome, const VerifyConfig& config) {
    Json j;
    j["config"] = to_json(config);
    j["criterion"] = criterion_name(outcome.kind);
    j["criterion_blocks"] = to_json(outcome.criterion_blocks);
    j["oracle_blocks"] = to_json(outcome.oracle_blocks);
    j["match"] = outcome.match;
    j["timings"] = Json{{"criterion_ms", outcome.criterion_ms}, {"oracle_ms", outcome.oracle_ms}};
    return j;
}

} // namespace partblocks
