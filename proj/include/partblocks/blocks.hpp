#pragma once

#include <optional>
#include <span>
#include <vector>

#include "partblocks/partition.hpp"

namespace partblocks {

/// (-|lambda|, lambda_1, ..., lambda_n): n+1 entries summing to zero.
std::vector<long long> hat_vector(const Partition& lambda, int n);

/// (delta, -1, -2, ..., -n): n+1 entries.
std::vector<long long> rho_shift(int n, long long delta);

/// hat_vector(lambda, n) + rho_shift(n, delta).
std::vector<long long> hat_plus_rho(const Partition& lambda, int n, long long delta);

/// True iff x and y have equal multisets of residues mod p. Lengths must match.
bool tilde_p(std::span<const long long> x, std::span<const long long> y, int p);

/// Nakayama: same block of the symmetric group algebra in characteristic p.
/// Requires |lambda| = |mu|. Computes both the p-core criterion and the
/// lambda + rho ~_p mu + rho criterion and insists they agree.
bool symgroup_same_block(const Partition& lambda, const Partition& mu, int p);

/// (mu, lambda) is a delta-pair: lambda exceeds mu by a strip in one row
/// whose last box has content delta - |mu|.
bool is_delta_pair(const Partition& mu, const Partition& lambda, long long delta);

/// The maximal chain of consecutive delta-pairs inside Lambda_{<=n} through
/// lambda, the i-th link adding a strip in row i. Returned in increasing
/// degree; this chain is the characteristic-zero block of lambda.
std::vector<Partition> char0_block_chain(const Partition& lambda, long long delta, int n);

/// Same characteristic-zero block: exact permutation equality of
/// hat + rho(delta) vectors, cross-checked against chain membership.
bool char0_same_block(const Partition& lambda, const Partition& mu, long long delta, int n);

/// Necessary condition from the Jucys-Murphy central element: with
/// t = |lambda| - |mu| >= 0, tests
///   t*delta - t*|mu| - ct(lambda) + ct(mu) - t(t-1)/2 = 0   in F_p.
/// Returns false when |lambda| < |mu|.
bool jm_scalar_condition(const Partition& lambda, const Partition& mu, int delta_residue, int p);

/// Same block of the partition algebra over characteristic p with
/// delta in F_p \ {0}, at b = n. Computes both the marked-abacus runner-count
/// criterion and the hat-vector ~_p criterion and insists they agree.
bool charp_same_block(const Partition& lambda, const Partition& mu, int n, int p, int delta_residue);

/// All mu in Lambda_{<=n} in the same block as lambda, in label order.
std::vector<Partition> charp_orbit(const Partition& lambda, int n, int p, int delta_residue);

/// delta outside the prime subfield: same degree and same p-core.
bool nonintegral_same_block(const Partition& lambda, const Partition& mu, int p);

/// Same limiting block (n -> infinity). Evaluated at
/// m* = |lambda| + |mu| + 2p with a stabilization check over m*..m*+p;
/// a discrepancy in that window throws std::logic_error.
bool limiting_same_block(const Partition& lambda, const Partition& mu, int p, int delta_residue);

// --- reflection-group cross-checks -----------------------------------------

enum class ReflectionMode {
    symmetric_group, ///< affine W_n^p on lambda + rho_n, n = |lambda|
    char_zero,       ///< finite hat-W_n on hat vectors, shift rho_n(delta)
    char_p,          ///< affine hat-W_n^p on hat vectors, shift rho_n(delta)
};

enum class OrbitSearchOutcome {
    reached,     ///< mu found in the orbit of lambda
    not_reached, ///< orbit fully enumerated without finding mu
    exhausted,   ///< search bound hit before closure; no verdict
};

struct ReflectionSearchOptions {
    int extra_depth = 2;            // BFS depth limit is n + extra_depth
    int extra_translation = 2;      // |r| <= (|lambda|+|mu|)/p + extra_translation
    std::size_t max_states = 500000;
};

/// Bounded breadth-first closure of the shifted reflection action; used only
/// as a cross-check of the multiset criteria on small inputs.
OrbitSearchOutcome reflection_orbit_equal(const Partition& lambda, const Partition& mu, int n,
                                          std::optional<int> p, long long delta, ReflectionMode mode,
                                          const ReflectionSearchOptions& opts = {});

// --- batch forms ------------------------------------------------------------

/// A partition of a label set into blocks, canonically ordered: classes are
/// sorted internally by label order and listed by their least label.
struct BlockPartition {
    std::vector<std::vector<Partition>> classes;
    bool operator==(const BlockPartition&) const = default;

    static BlockPartition group(const std::vector<Partition>& labels,
                                const std::vector<std::size_t>& class_ids);
    std::size_t class_of(const Partition& lambda) const; // throws if absent
    bool same_class(const Partition& a, const Partition& b) const;
};

/// Blocks of Lambda_{<=n} in characteristic p, delta in F_p \ {0} (b = n).
BlockPartition charp_blocks(int n, int p, int delta_residue);

/// Characteristic-zero blocks of Lambda_{<=n} by hashed hat-vector invariant.
BlockPartition char0_blocks(int n, long long delta);

/// Characteristic-zero blocks assembled from delta-pair chains.
BlockPartition char0_chain_blocks(int n, long long delta);

/// Same degree + same p-core on Lambda_{<=n} (delta outside prime subfield).
BlockPartition nonintegral_blocks(int n, int p);

/// Nakayama blocks of the partitions of exactly m.
BlockPartition nakayama_blocks(int m, int p);

/// Limiting blocks restricted to Lambda_{<=n}.
BlockPartition limiting_blocks(int n, int p, int delta_residue);

} // namespace partblocks
