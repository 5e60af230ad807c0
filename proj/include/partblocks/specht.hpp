#pragma once

#include <map>
#include <string>
#include <vector>

#include "partblocks/matrix.hpp"
#include "partblocks/partition.hpp"

namespace partblocks {

/// A matrix representation: named generator images on a fixed basis.
struct MatrixRep {
    int dim = 0;
    std::vector<std::pair<std::string, Matrix>> generators;
    std::vector<std::string> basis_labels;
};

/// The Specht module S^lambda of the symmetric group on m = |lambda| letters,
/// realized as the span of standard polytabloids inside the tabloid
/// permutation module, over the integers. Matrices of the adjacent
/// transpositions come out integral and are reduced into any field on demand.
class SpechtModule {
public:
    /// Throws std::invalid_argument above the size bound.
    explicit SpechtModule(const Partition& shape, int max_degree = 5);

    const Partition& shape() const { return shape_; }
    int m() const { return shape_.degree(); }
    int dim() const { return static_cast<int>(basis_.size()); }

    /// Matrix of s_i = (i, i+1), 1 <= i <= m-1, on the standard-polytabloid
    /// basis (integer entries).
    const std::vector<std::vector<long long>>& gen_matrix_int(int i) const;
    /// Gram matrix of the bilinear form inherited from the tabloid basis.
    const std::vector<std::vector<long long>>& gram_int() const { return gram_; }

    Matrix gen_matrix(int i, const Field& f) const;
    Matrix gram(const Field& f) const;
    /// Matrix of an arbitrary permutation (one-line, 0-based) via its
    /// decomposition into adjacent transpositions.
    Matrix perm_matrix(const std::vector<int>& perm, const Field& f) const;

private:
    Partition shape_;
    std::vector<std::vector<int>> basis_;               // standard tableaux, row-filled words
    std::vector<std::vector<long long>> polytabloids_;  // basis vectors in tabloid coords
    std::vector<std::vector<std::vector<long long>>> gen_;
    std::vector<std::vector<long long>> gram_;
};

/// The spec'd operation: generator matrices of S_{|lambda|} on S^lambda over f.
MatrixRep specht_rep(const Partition& lambda, const Field& f, int max_degree = 5);

} // namespace partblocks
