#pragma once

#include <string>
#include <vector>

#include "partblocks/partition.hpp"

namespace partblocks {

/// James abacus: p runners, beads at distinct non-negative positions.
/// Position q sits on runner q mod p in row q / p.
class Abacus {
public:
    Abacus(int p, std::vector<long long> beads);

    int runners() const { return p_; }
    int bead_count() const { return static_cast<int>(beads_.size()); }
    /// Sorted ascending.
    const std::vector<long long>& beads() const { return beads_; }
    bool has_bead(long long pos) const;

    bool operator==(const Abacus&) const = default;

private:
    int p_ = 2;
    std::vector<long long> beads_;
};

/// Per-runner bead counts. Sums to b for a plain abacus and to b+1 once the
/// marker is counted.
struct RunnerCounts {
    std::vector<int> counts;
    bool operator==(const RunnerCounts&) const = default;
};

/// Abacus together with the marker runner v and the residue delta that
/// produced it. Encodes a partition lambda with v = delta - |lambda| + b mod p.
class MarkedAbacus {
public:
    MarkedAbacus(Abacus base, int marker, int delta);

    const Abacus& base() const { return base_; }
    int marker() const { return marker_; }
    int delta() const { return delta_; }

    bool operator==(const MarkedAbacus&) const = default;

private:
    Abacus base_;
    int marker_ = 0;
    int delta_ = 1;
};

/// (lambda_1 - 1 + b, lambda_2 - 2 + b, ..., -b + b): b strictly decreasing
/// non-negative entries. Requires b >= |lambda|.
std::vector<long long> beta_sequence(const Partition& lambda, int b);

/// The beta-sequence of lambda with delta prepended: entry 0 is
/// delta - |lambda| + b, entries 1..b are beta_sequence(lambda, b).
std::vector<long long> beta_delta_sequence(const Partition& lambda, int delta, int b);

Abacus abacus_of(const Partition& lambda, int p, int b);

/// Inverse of abacus_of (for the same bead count).
Partition partition_of(const Abacus& a);

/// Residue histogram of the beta-sequence.
RunnerCounts gamma(const Partition& lambda, int p, int b);

/// Partition left after pushing all beads fully up their runners.
/// Independent of the internal bead-count choice.
Partition p_core(const Partition& lambda, int p);

/// Requires 1 <= delta <= p-1 and b >= |lambda|.
MarkedAbacus marked_abacus(const Partition& lambda, int p, int delta, int b);

/// Gamma with the marker runner counted once more; sums to b+1.
RunnerCounts gamma_delta(const MarkedAbacus& m);
RunnerCounts gamma_delta(const Partition& lambda, int p, int delta, int b);

/// The unique degree-minimal partition whose marked abacus has the same
/// runner counts as lambda's: beads fully pushed up, marker on the rightmost
/// runner with maximal count. Independent of bead count.
Partition orbit_min(const Partition& lambda, int p, int delta);

/// 'o' = bead, '.' = empty; rows top to bottom. The marked variant adds a
/// header row with 'v' above the marker runner.
std::string render_ascii(const Abacus& a);
std::string render_ascii(const MarkedAbacus& m);

} // namespace partblocks
