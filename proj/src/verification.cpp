#include "partblocks/verification.hpp"

#include <chrono>
#include <stdexcept>

#include "partblocks/oracle.hpp"

namespace partblocks {

namespace {

double ms_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
        .count();
}

CriterionKind classify(const Field& field, const FieldScalar& delta) {
    if (delta.is_zero())
        throw std::invalid_argument("verify: delta = 0 is outside the scope of the criteria");
    switch (field.kind()) {
        case Field::Kind::rationals: {
            if (denominator(delta.rat()) != 1)
                throw std::invalid_argument("verify: characteristic-zero criterion needs an integer delta");
            return CriterionKind::char_zero;
        }
        case Field::Kind::prime:
            return CriterionKind::charp;
        case Field::Kind::prime_square:
            return delta.in_prime_subfield() ? CriterionKind::charp : CriterionKind::nonintegral;
    }
    throw std::logic_error("verify: unknown field kind");
}

} // namespace

std::string criterion_name(CriterionKind kind) {
    switch (kind) {
        case CriterionKind::charp: return "marked-abacus-orbits";
        case CriterionKind::char_zero: return "delta-pair-chains";
        case CriterionKind::nonintegral: return "degree-and-p-core";
    }
    return "?";
}

VerifyOutcome run_verify(const VerifyConfig& config) {
    VerifyOutcome out;
    out.kind = classify(config.field, config.delta);

    auto t0 = std::chrono::steady_clock::now();
    switch (out.kind) {
        case CriterionKind::charp: {
            int residue = static_cast<int>(config.delta.residue());
            out.criterion_blocks = charp_blocks(config.n, config.field.p(), residue);
            break;
        }
        case CriterionKind::char_zero: {
            long long d = static_cast<long long>(numerator(config.delta.rat()));
            out.criterion_blocks = char0_chain_blocks(config.n, d);
            break;
        }
        case CriterionKind::nonintegral:
            out.criterion_blocks = nonintegral_blocks(config.n, config.field.p());
            break;
    }
    out.criterion_ms = ms_since(t0);

    t0 = std::chrono::steady_clock::now();
    out.oracle_blocks = oracle_cell_blocks(config.n, config.field, config.delta, config.oracle_max_n);
    out.oracle_ms = ms_since(t0);

    out.match = out.criterion_blocks == out.oracle_blocks;
    return out;
}

} // namespace partblocks
