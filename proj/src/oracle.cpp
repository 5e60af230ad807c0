#include "partblocks/oracle.hpp"

#include <map>
#include <stdexcept>

#include "partblocks/matrix.hpp"

namespace partblocks {

std::vector<AlgebraElement> center_basis(const PartitionAlgebra& algebra, int max_n) {
    int n = algebra.n();
    if (n > max_n)
        throw std::invalid_argument("center_basis: n exceeds the oracle bound " +
                                    std::to_string(max_n));
    const Field& f = algebra.field();
    std::vector<SetPartitionDiagram> basis = all_diagrams(n);
    std::map<SetPartitionDiagram, int> index;
    for (size_t i = 0; i < basis.size(); ++i) index[basis[i]] = static_cast<int>(i);
    int dim = static_cast<int>(basis.size());

    // Rows of the constraint matrix: coefficient of diagram e in z*g - g*z,
    // one row per (generator, e). Each column touches at most two rows per
    // generator, so the system is ultra-sparse.
    SparseSolver solver(f, dim);
    std::vector<SparseSolver::Row> rows(dim);
    for (const auto& [name, gen] : algebra.generator_family()) {
        const SetPartitionDiagram& g = gen.terms().begin()->first;
        for (auto& row : rows) row.clear();
        for (int d = 0; d < dim; ++d) {
            auto [right, tr] = concatenate(basis[d], g);
            rows[index.at(right)].emplace_back(d, algebra.delta().pow(tr));
            auto [left, tl] = concatenate(g, basis[d]);
            rows[index.at(left)].emplace_back(d, -algebra.delta().pow(tl));
        }
        for (auto& row : rows)
            if (!row.empty()) solver.add_row(std::move(row));
    }

    std::vector<AlgebraElement> out;
    for (const auto& vec : solver.nullspace()) {
        AlgebraElement z;
        for (int d = 0; d < dim; ++d) z.add_term(basis[d], vec[d]);
        out.push_back(std::move(z));
    }
    return out;
}

namespace {

FieldScalar nilpotency_witness(const Matrix& action, const Field& f) {
    int d = action.rows();
    if (f.kind() == Field::Kind::rationals) {
        FieldScalar c = action.trace() / FieldScalar::integer(f, d);
        Matrix shifted = action - Matrix::identity(f, d).scaled(c);
        if (!shifted.is_nilpotent())
            throw std::logic_error("central character: trace/dim is not a nilpotency witness");
        return c;
    }
    std::vector<FieldScalar> found;
    for (const FieldScalar& c : field_elements(f)) {
        Matrix shifted = action - Matrix::identity(f, d).scaled(c);
        if (shifted.is_nilpotent()) found.push_back(c);
    }
    if (found.size() != 1)
        throw std::logic_error("central character: expected a unique nilpotency witness, found " +
                               std::to_string(found.size()));
    return found.front();
}

} // namespace

std::vector<FieldScalar> central_character_vector(const PartitionAlgebra& algebra,
                                                  const std::vector<AlgebraElement>& z_basis,
                                                  const Partition& lambda) {
    CellModule cell(algebra, lambda);
    std::vector<FieldScalar> out;
    out.reserve(z_basis.size());
    for (const AlgebraElement& z : z_basis)
        out.push_back(nilpotency_witness(cell.action(z), algebra.field()));
    return out;
}

BlockPartition oracle_cell_blocks(int n, const Field& field, const FieldScalar& delta, int max_n) {
    PartitionAlgebra algebra(n, field, delta);
    std::vector<AlgebraElement> z_basis = center_basis(algebra, max_n);
    std::vector<Partition> labels = partitions_up_to(n);
    std::map<std::vector<FieldScalar>, std::size_t> ids;
    std::vector<std::size_t> class_ids;
    for (const Partition& lam : labels) {
        auto key = central_character_vector(algebra, z_basis, lam);
        auto [it, inserted] = ids.try_emplace(key, ids.size());
        class_ids.push_back(it->second);
    }
    return BlockPartition::group(labels, class_ids);
}

bool morita_check(int n, const Field& field, const FieldScalar& delta) {
    if (n > 2) throw std::invalid_argument("morita_check: n is capped at 2");
    FieldScalar delta1 = delta - FieldScalar::one(field);
    PartitionAlgebra small(n, field, delta1); // P_n(delta - 1)
    PartitionAlgebra big(n + 1, field, delta); // contains P_{n+1/2}(delta)

    // xi_{n+1} = prod_i (1 - p_{i,n+1})
    AlgebraElement xi = big.one();
    for (int i = 1; i <= n; ++i) xi = big.mul(xi, big.one() - big.gen_p2(i, n + 1));

    auto iota = [&](const SetPartitionDiagram& d) {
        std::vector<std::vector<int>> blocks;
        for (const auto& blk : d.blocks()) {
            std::vector<int> shifted;
            for (int v : blk) shifted.push_back(v < n ? v : v + 1);
            blocks.push_back(std::move(shifted));
        }
        blocks.push_back({n, 2 * n + 1});
        return SetPartitionDiagram::from_blocks(n + 1, std::move(blocks));
    };
    auto theta = [&](const AlgebraElement& x) {
        AlgebraElement lifted;
        for (const auto& [d, c] : x.terms()) lifted.add_term(iota(d), c);
        return big.mul(big.mul(xi, lifted), xi);
    };

    if (!(big.mul(xi, xi) == xi)) return false;
    if (!(theta(small.one()) == xi)) return false;

    // (xi p_i xi)^2 = (delta - 1) xi p_i xi
    for (int i = 1; i <= n; ++i) {
        AlgebraElement y = big.mul(big.mul(xi, big.from_diagram(iota(p_diagram(n, i)))), xi);
        if (!(big.mul(y, y) == y.scaled(delta1))) return false;
    }

    // Multiplicativity on all generator pairs (products on the left taken in
    // P_n(delta - 1), on the right in P_{n+1}(delta)).
    auto gens = small.generator_family();
    for (const auto& [nx, x] : gens)
        for (const auto& [ny, y] : gens)
            if (!(theta(small.mul(x, y)) == big.mul(theta(x), theta(y)))) return false;

    // Injectivity on the diagram basis.
    std::vector<SetPartitionDiagram> big_basis = all_diagrams(n + 1);
    std::map<SetPartitionDiagram, int> big_index;
    for (size_t i = 0; i < big_basis.size(); ++i) big_index[big_basis[i]] = static_cast<int>(i);
    SparseSolver solver(field, static_cast<int>(big_basis.size()));
    int count = 0;
    for (const SetPartitionDiagram& d : all_diagrams(n)) {
        SparseSolver::Row row;
        AlgebraElement img = theta(small.from_diagram(d));
        for (const auto& [e, c] : img.terms()) row.emplace_back(big_index.at(e), c);
        solver.add_row(std::move(row));
        ++count;
    }
    return solver.rank() == count;
}

} // namespace partblocks
