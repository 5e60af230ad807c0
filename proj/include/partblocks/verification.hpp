#pragma once

#include <string>

#include "partblocks/blocks.hpp"
#include "partblocks/field.hpp"

namespace partblocks {

/// Which combinatorial block criterion the oracle is checked against.
enum class CriterionKind {
    charp,       ///< delta in the prime subfield, nonzero: marked-abacus orbits
    char_zero,   ///< rationals, integer delta: delta-pair chains
    nonintegral, ///< delta outside the prime subfield: degree + p-core
};

struct VerifyConfig {
    int n = 2;
    Field field = Field::rationals();
    FieldScalar delta = FieldScalar::integer(Field::rationals(), 1);
    int oracle_max_n = 3;
};

struct VerifyOutcome {
    CriterionKind kind;
    BlockPartition criterion_blocks;
    BlockPartition oracle_blocks;
    bool match = false;
    double criterion_ms = 0.0;
    double oracle_ms = 0.0;
};

/// Picks the criterion that applies to (field, delta), computes both the
/// criterion partition of Lambda_{<=n} and the central-character oracle
/// partition, and compares them. Throws std::invalid_argument for delta = 0.
VerifyOutcome run_verify(const VerifyConfig& config);

std::string criterion_name(CriterionKind kind);

} // namespace partblocks
