#pragma once

#include <memory>
#include <vector>

#include "partblocks/algebra.hpp"
#include "partblocks/matrix.hpp"
#include "partblocks/partition.hpp"
#include "partblocks/specht.hpp"

namespace partblocks {

/// All diagrams with exactly n-t propagating blocks and 1bar..tbar in
/// singleton blocks (the basis I(n, n-t) of the half module V(n, n-t)).
std::vector<SetPartitionDiagram> half_diagram_basis(int n, int t);

/// Orbit representatives of I(n, n-t) under the free right action of S_{n-t}
/// permuting the rightmost southern nodes: propagating blocks, sorted by
/// least northern label, attach to (t+1)bar, (t+2)bar, ... in order.
std::vector<SetPartitionDiagram> half_diagram_orbit_reps(int n, int t);

/// The cell module of P_n(delta) labelled by lambda (|lambda| = n - t <= n):
/// basis is orbit representatives x Specht basis, in that order.
class CellModule {
public:
    CellModule(const PartitionAlgebra& algebra, const Partition& lambda);

    const Partition& label() const { return lambda_; }
    int n() const { return algebra_.n(); }
    int t() const { return t_; }
    int dim() const { return static_cast<int>(reps_.size()) * specht_->dim(); }
    const std::vector<SetPartitionDiagram>& reps() const { return reps_; }
    const SpechtModule& specht() const { return *specht_; }

    Matrix action(const SetPartitionDiagram& d) const;
    Matrix action(const AlgebraElement& z) const;

    /// Gram matrix of the invariant bilinear form: flip-concatenation of
    /// basis half-diagrams paired through the Specht form.
    Matrix gram() const;
    int gram_rank() const { return gram().rank(); }

    /// Generator family matrices (the spec'd cell_module_rep).
    MatrixRep rep() const;

private:
    PartitionAlgebra algebra_;
    Partition lambda_;
    int t_;
    std::vector<SetPartitionDiagram> reps_;
    std::shared_ptr<const SpechtModule> specht_;

    /// Writes w in I(n, n-t) as rep * sigma; returns (rep index, sigma).
    std::pair<int, std::vector<int>> factor(const SetPartitionDiagram& w) const;
};

/// Convenience wrappers matching the spec'd operations.
MatrixRep cell_module_rep(const Partition& lambda, int n, const FieldScalar& delta);
int gram_rank(const Partition& lambda, int n, const FieldScalar& delta);

} // namespace partblocks
