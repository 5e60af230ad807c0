#pragma once

#include <string>
#include <utility>
#include <vector>

namespace partblocks {

/// A set partition of {1..n, 1bar..nbar}, the diagram basis of the partition
/// algebra. Labels are stored 0-based: 0..n-1 are the northern nodes 1..n,
/// n..2n-1 are the southern nodes 1bar..nbar. Canonical form: labels sorted
/// inside blocks, blocks sorted by least label.
class SetPartitionDiagram {
public:
    static SetPartitionDiagram from_blocks(int n, std::vector<std::vector<int>> blocks);
    static SetPartitionDiagram identity(int n);

    int size() const { return n_; }
    const std::vector<std::vector<int>>& blocks() const { return blocks_; }
    /// Blocks containing both a northern and a southern label.
    int propagating_count() const { return prop_; }

    bool is_permutation() const;
    /// For a permutation diagram, perm()[i] = j means {i, n + j} is a block.
    std::vector<int> permutation() const;

    /// Swap northern and southern labels.
    SetPartitionDiagram flipped() const;

    bool operator==(const SetPartitionDiagram&) const = default;
    auto operator<=>(const SetPartitionDiagram&) const = default;

    std::string to_string() const; ///< e.g. "{1,3,2'|2,1'}" with ' marking southern

private:
    int n_ = 0;
    std::vector<std::vector<int>> blocks_;
    int prop_ = 0;
};

/// Stack x on top of y, identify the southern nodes of x with the northern
/// nodes of y, and drop interior components. Returns the resulting diagram
/// and the number t of removed components (the result carries a factor
/// delta^t in the algebra).
std::pair<SetPartitionDiagram, int> concatenate(const SetPartitionDiagram& x,
                                                const SetPartitionDiagram& y);

/// Generators: the transposition s_{i,j}, the pair-joining p_{i,j} with block
/// {i, j, ibar, jbar}, and p_i isolating {i} and {ibar}. Indices 1-based.
SetPartitionDiagram s_diagram(int n, int i, int j);
SetPartitionDiagram p_diagram(int n, int i);
SetPartitionDiagram p_pair_diagram(int n, int i, int j);

/// All set partitions of {0..m-1} as block lists, in restricted-growth-string
/// order (Bell(m) of them).
std::vector<std::vector<std::vector<int>>> set_partitions(int m);

/// All Bell(2n) diagrams of size n, deterministically ordered.
std::vector<SetPartitionDiagram> all_diagrams(int n);

} // namespace partblocks
