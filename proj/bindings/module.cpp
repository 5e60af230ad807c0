// Python bindings for the main operations: partition combinatorics, abaci,
// block criteria, and the diagram-algebra oracle. Partitions cross the
// boundary as plain lists of ints.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "partblocks/abacus.hpp"
#include "partblocks/cell_module.hpp"
#include "partblocks/oracle.hpp"
#include "partblocks/verification.hpp"

namespace py = pybind11;
using namespace partblocks;

namespace {

using Parts = std::vector<int>;

Partition part(const Parts& parts) { return Partition::of(parts); }

std::vector<Parts> to_lists(const std::vector<Partition>& v) {
    std::vector<Parts> out;
    out.reserve(v.size());
    for (const Partition& lam : v) out.push_back(lam.parts());
    return out;
}

std::vector<std::vector<Parts>> classes_of(const BlockPartition& blocks) {
    std::vector<std::vector<Parts>> out;
    for (const auto& cls : blocks.classes) out.push_back(to_lists(cls));
    return out;
}

/// ("Q", 0) | ("Fp", p) | ("Fp2", p)
Field field_of(const std::string& kind, int p) {
    if (kind == "Q") return Field::rationals();
    if (kind == "Fp") return Field::prime(p);
    if (kind == "Fp2") return Field::prime_square(p);
    throw std::invalid_argument("field kind must be one of Q, Fp, Fp2");
}

FieldScalar delta_of(const Field& f, long long a, long long b) {
    if (f.kind() == Field::Kind::prime_square) return FieldScalar::extension(f, a, b);
    if (b != 0) throw std::invalid_argument("extension coefficient only valid over Fp2");
    return FieldScalar::integer(f, a);
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "block decompositions of partition algebras";

    // partition combinatorics
    m.def("normalize_partition", [](Parts parts) { return part(parts).parts(); }, py::arg("parts"),
          "validate and strip trailing zeros");
    m.def("content_sum", [](const Parts& l) { return content_sum(part(l)); });
    m.def("is_p_regular", [](const Parts& l, int p) { return is_p_regular(part(l), p); });
    m.def("dominance_leq",
          [](const Parts& a, const Parts& b) { return dominance_leq(part(a), part(b)); });
    m.def("removable_rows", [](const Parts& l) {
        std::vector<int> rows;
        for (const Node& nd : removable_nodes(part(l))) rows.push_back(nd.row);
        return rows;
    });
    m.def("addable_rows", [](const Parts& l) {
        std::vector<int> rows;
        for (const Node& nd : addable_nodes(part(l))) rows.push_back(nd.row);
        return rows;
    });
    m.def("partitions_up_to", [](int n) { return to_lists(partitions_up_to(n)); });

    // abacus
    m.def("beta_sequence", [](const Parts& l, int b) { return beta_sequence(part(l), b); });
    m.def("beta_delta_sequence",
          [](const Parts& l, int delta, int b) { return beta_delta_sequence(part(l), delta, b); });
    m.def("gamma", [](const Parts& l, int p, int b) { return gamma(part(l), p, b).counts; });
    m.def("gamma_delta", [](const Parts& l, int p, int delta, int b) {
        return gamma_delta(part(l), p, delta, b).counts;
    });
    m.def("marker_runner", [](const Parts& l, int p, int delta, int b) {
        return marked_abacus(part(l), p, delta, b).marker();
    });
    m.def("p_core", [](const Parts& l, int p) { return p_core(part(l), p).parts(); });
    m.def("orbit_min",
          [](const Parts& l, int p, int delta) { return orbit_min(part(l), p, delta).parts(); });
    m.def("render_abacus", [](const Parts& l, int p, int b) {
        return render_ascii(abacus_of(part(l), p, b));
    });
    m.def("render_marked_abacus", [](const Parts& l, int p, int delta, int b) {
        return render_ascii(marked_abacus(part(l), p, delta, b));
    });

    // block criteria
    m.def("symgroup_same_block", [](const Parts& a, const Parts& b, int p) {
        return symgroup_same_block(part(a), part(b), p);
    });
    m.def("is_delta_pair", [](const Parts& mu, const Parts& lam, long long delta) {
        return is_delta_pair(part(mu), part(lam), delta);
    });
    m.def("char0_block_chain", [](const Parts& l, long long delta, int n) {
        return to_lists(char0_block_chain(part(l), delta, n));
    });
    m.def("char0_same_block", [](const Parts& a, const Parts& b, long long delta, int n) {
        return char0_same_block(part(a), part(b), delta, n);
    });
    m.def("jm_scalar_condition", [](const Parts& a, const Parts& b, int delta, int p) {
        return jm_scalar_condition(part(a), part(b), delta, p);
    });
    m.def("charp_same_block", [](const Parts& a, const Parts& b, int n, int p, int delta) {
        return charp_same_block(part(a), part(b), n, p, delta);
    });
    m.def("charp_orbit", [](const Parts& l, int n, int p, int delta) {
        return to_lists(charp_orbit(part(l), n, p, delta));
    });
    m.def("nonintegral_same_block", [](const Parts& a, const Parts& b, int p) {
        return nonintegral_same_block(part(a), part(b), p);
    });
    m.def("limiting_same_block", [](const Parts& a, const Parts& b, int p, int delta) {
        return limiting_same_block(part(a), part(b), p, delta);
    });
    m.def("blocks_charp",
          [](int n, int p, int delta) { return classes_of(charp_blocks(n, p, delta)); });
    m.def("blocks_char0", [](int n, long long delta) { return classes_of(char0_blocks(n, delta)); });
    m.def("blocks_nonintegral", [](int n, int p) { return classes_of(nonintegral_blocks(n, p)); });
    m.def("blocks_limiting",
          [](int n, int p, int delta) { return classes_of(limiting_blocks(n, p, delta)); });

    // diagram-algebra oracle
    m.def(
        "gram_rank",
        [](const Parts& l, int n, const std::string& field, int p, long long a, long long b) {
            Field f = field_of(field, p);
            return gram_rank(part(l), n, delta_of(f, a, b));
        },
        py::arg("parts"), py::arg("n"), py::arg("field") = "Q", py::arg("p") = 0,
        py::arg("delta") = 1, py::arg("delta_ext") = 0);
    m.def(
        "oracle_cell_blocks",
        [](int n, const std::string& field, int p, long long a, long long b, int max_n) {
            Field f = field_of(field, p);
            return classes_of(oracle_cell_blocks(n, f, delta_of(f, a, b), max_n));
        },
        py::arg("n"), py::arg("field") = "Q", py::arg("p") = 0, py::arg("delta") = 1,
        py::arg("delta_ext") = 0, py::arg("max_n") = kDefaultOracleMaxN);
    m.def(
        "morita_check",
        [](int n, const std::string& field, int p, long long a) {
            Field f = field_of(field, p);
            return morita_check(n, f, FieldScalar::integer(f, a));
        },
        py::arg("n"), py::arg("field") = "Q", py::arg("p") = 0, py::arg("delta") = 3);
    m.def(
        "verify",
        [](int n, const std::string& field, int p, long long a, long long b, int max_n) {
            Field f = field_of(field, p);
            VerifyConfig config{n, f, delta_of(f, a, b), max_n};
            VerifyOutcome out = run_verify(config);
            return py::make_tuple(out.match, criterion_name(out.kind),
                                  classes_of(out.criterion_blocks), classes_of(out.oracle_blocks));
        },
        py::arg("n"), py::arg("field") = "Q", py::arg("p") = 0, py::arg("delta") = 1,
        py::arg("delta_ext") = 0, py::arg("max_n") = kDefaultOracleMaxN);
}
