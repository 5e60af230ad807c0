#pragma once

#include <vector>

#include "partblocks/algebra.hpp"
#include "partblocks/blocks.hpp"
#include "partblocks/cell_module.hpp"

namespace partblocks {

/// Hard ceiling on the oracle size; P_4 already has dimension 4140 and takes
/// minutes, so 3 is the default and 4 is opt-in (PARTBLOCKS_ORACLE_MAX_N).
inline constexpr int kDefaultOracleMaxN = 3;

/// Basis of the center of P_n(delta): nullspace of z g - g z = 0 over the
/// diagram basis, for every generator g of the Fig-6 family.
std::vector<AlgebraElement> center_basis(const PartitionAlgebra& algebra,
                                         int max_n = kDefaultOracleMaxN);

/// For each central basis element, the unique scalar c such that the action
/// on the cell module of lambda minus c is nilpotent. Over the rationals c is
/// trace/dim (verified nilpotent); over a finite field all elements are
/// scanned. Throws std::logic_error if no (or no unique) witness exists.
std::vector<FieldScalar> central_character_vector(const PartitionAlgebra& algebra,
                                                  const std::vector<AlgebraElement>& z_basis,
                                                  const Partition& lambda);

/// Ground truth: the cell-blocks of P_n(delta) as fibers of the central
/// character vector over Lambda_{<=n}.
BlockPartition oracle_cell_blocks(int n, const Field& field, const FieldScalar& delta,
                                  int max_n = kDefaultOracleMaxN);

/// Verifies the corner-algebra isomorphism P_n(delta-1) = xi P_{n+1/2}(delta) xi:
/// theta(x) = xi iota(x) xi is multiplicative on all generator pairs, injective
/// on the diagram basis, theta(1) = xi, and (xi p_i xi)^2 = (delta-1)(xi p_i xi).
bool morita_check(int n, const Field& field, const FieldScalar& delta);

} // namespace partblocks
