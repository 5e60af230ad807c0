#pragma once

#include <compare>
#include <string>
#include <vector>

namespace partblocks {

/// An integer partition: a weakly decreasing sequence of positive parts.
/// The empty sequence is the empty partition. Trailing zeros are stripped on
/// construction, so equal partitions compare equal as values.
class Partition {
public:
    /// The empty partition.
    Partition() = default;

    /// Validates and canonicalizes `parts` (strips trailing zeros).
    /// Throws std::invalid_argument if the remaining entries are not weakly
    /// decreasing and positive.
    static Partition of(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int degree() const { return degree_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    /// 1-based row access; rows beyond length() have size 0.
    int part(int row) const {
        return (row >= 1 && row <= length()) ? parts_[row - 1] : 0;
    }

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    auto operator<=>(const Partition& o) const { return parts_ <=> o.parts_; }

    /// "(5^2,3,2,1^2)" for display; "()" for the empty partition.
    std::string to_string() const;

private:
    std::vector<int> parts_;
    int degree_ = 0;
};

/// A cell (row, col) of a Young diagram, 1-based.
struct Node {
    int row = 0;
    int col = 0;
    bool operator==(const Node&) const = default;
    /// Content col - row.
    int content() const { return col - row; }
};

/// Label ordering used throughout: by degree, then lexicographically
/// descending on parts (so (2) precedes (1,1)).
bool label_less(const Partition& a, const Partition& b);

/// Sum of contents (col - row) over all nodes of the diagram.
long long content_sum(const Partition& lambda);

/// True iff no part value is repeated p or more times.
bool is_p_regular(const Partition& lambda, int p);

/// Dominance order with degree: a <= b iff a == b, or |a| < |b|, or
/// |a| == |b| and every partial sum of a is <= the corresponding one of b.
bool dominance_leq(const Partition& a, const Partition& b);

std::vector<Node> removable_nodes(const Partition& lambda);
std::vector<Node> addable_nodes(const Partition& lambda);

/// Partition with the node in `row` removed; throws if not removable there.
Partition remove_node(const Partition& lambda, int row);
/// Partition with a node added in `row`; throws if not addable there.
Partition add_node(const Partition& lambda, int row);

/// All partitions of degree 0..n in label order.
std::vector<Partition> partitions_up_to(int n);

/// All partitions of degree exactly n, lexicographically descending.
std::vector<Partition> partitions_of(int n);

} // namespace partblocks
