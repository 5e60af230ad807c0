#pragma once

#include <json.hpp>

#include "partblocks/abacus.hpp"
#include "partblocks/blocks.hpp"
#include "partblocks/diagram.hpp"
#include "partblocks/verification.hpp"

namespace partblocks {

using Json = nlohmann::ordered_json;

Json to_json(const Partition& lambda);
Partition partition_from_json(const Json& j);

/// Blocks as arrays of signed 1-based labels: i northern, -i southern.
Json to_json(const SetPartitionDiagram& d);

/// The multiplication table of the diagram basis of P_n: products are single
/// diagrams up to a power of delta, so entries are (i, j, k, t) meaning
/// d_i d_j = delta^t d_k. Field-independent.
Json structure_constants_json(int n);

Json to_json(const BlockPartition& blocks);

/// {beads: [...], gamma: [...]} and, for a marked abacus, v and gamma_delta.
Json to_json(const Abacus& a);
Json to_json(const MarkedAbacus& m);

Json to_json(const VerifyConfig& config);
Json to_json(const VerifyOutcome& outcome, const VerifyConfig& config);

} // namespace partblocks
