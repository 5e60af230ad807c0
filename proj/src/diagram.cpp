#include "partblocks/diagram.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace partblocks {

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

int count_propagating(int n, const std::vector<std::vector<int>>& blocks) {
    int prop = 0;
    for (const auto& blk : blocks) {
        bool north = false, south = false;
        for (int v : blk) (v < n ? north : south) = true;
        prop += (north && south) ? 1 : 0;
    }
    return prop;
}

} // namespace

SetPartitionDiagram SetPartitionDiagram::from_blocks(int n, std::vector<std::vector<int>> blocks) {
    std::vector<int> owner(2 * n, -1);
    for (size_t k = 0; k < blocks.size(); ++k) {
        if (blocks[k].empty()) throw std::invalid_argument("diagram: empty block");
        for (int v : blocks[k]) {
            if (v < 0 || v >= 2 * n) throw std::invalid_argument("diagram: label out of range");
            if (owner[v] != -1) throw std::invalid_argument("diagram: repeated label");
            owner[v] = static_cast<int>(k);
        }
        std::sort(blocks[k].begin(), blocks[k].end());
    }
    for (int v = 0; v < 2 * n; ++v)
        if (owner[v] == -1) throw std::invalid_argument("diagram: labels not covered");
    std::sort(blocks.begin(), blocks.end());
    SetPartitionDiagram d;
    d.n_ = n;
    d.prop_ = count_propagating(n, blocks);
    d.blocks_ = std::move(blocks);
    return d;
}

SetPartitionDiagram SetPartitionDiagram::identity(int n) {
    std::vector<std::vector<int>> blocks;
    for (int i = 0; i < n; ++i) blocks.push_back({i, n + i});
    return from_blocks(n, std::move(blocks));
}

bool SetPartitionDiagram::is_permutation() const {
    return prop_ == n_ && static_cast<int>(blocks_.size()) == n_;
}

std::vector<int> SetPartitionDiagram::permutation() const {
    if (!is_permutation()) throw std::logic_error("diagram: not a permutation diagram");
    std::vector<int> perm(n_);
    for (const auto& blk : blocks_) perm[blk[0]] = blk[1] - n_;
    return perm;
}

SetPartitionDiagram SetPartitionDiagram::flipped() const {
    std::vector<std::vector<int>> blocks = blocks_;
    for (auto& blk : blocks)
        for (int& v : blk) v = v < n_ ? v + n_ : v - n_;
    return from_blocks(n_, std::move(blocks));
}

std::string SetPartitionDiagram::to_string() const {
    std::string s = "{";
    for (size_t k = 0; k < blocks_.size(); ++k) {
        if (k > 0) s += "|";
        for (size_t i = 0; i < blocks_[k].size(); ++i) {
            if (i > 0) s += ",";
            int v = blocks_[k][i];
            s += v < n_ ? std::to_string(v + 1) : std::to_string(v - n_ + 1) + "'";
        }
    }
    return s + "}";
}

std::pair<SetPartitionDiagram, int> concatenate(const SetPartitionDiagram& x,
                                                const SetPartitionDiagram& y) {
    if (x.size() != y.size()) throw std::invalid_argument("concatenate: size mismatch");
    int n = x.size();
    // Nodes: 0..n-1 north of x, n..2n-1 middle, 2n..3n-1 south of y.
    UnionFind uf(3 * n);
    for (const auto& blk : x.blocks())
        for (size_t i = 1; i < blk.size(); ++i) uf.unite(blk[0], blk[i]);
    for (const auto& blk : y.blocks())
        for (size_t i = 1; i < blk.size(); ++i) uf.unite(blk[0] + n, blk[i] + n);

    std::vector<std::vector<int>> members(3 * n);
    for (int v = 0; v < 3 * n; ++v) members[uf.find(v)].push_back(v);

    std::vector<std::vector<int>> blocks;
    int removed = 0;
    for (int root = 0; root < 3 * n; ++root) {
        if (members[root].empty()) continue;
        std::vector<int> blk;
        for (int v : members[root]) {
            if (v < n)
                blk.push_back(v); // northern node of the product
            else if (v >= 2 * n)
                blk.push_back(v - n); // southern node of the product
        }
        if (blk.empty())
            ++removed; // interior component
        else
            blocks.push_back(std::move(blk));
    }
    return {SetPartitionDiagram::from_blocks(n, std::move(blocks)), removed};
}

namespace {

void check_index(int n, int i, const char* what) {
    if (i < 1 || i > n) throw std::invalid_argument(std::string(what) + ": index out of range");
}

} // namespace

SetPartitionDiagram s_diagram(int n, int i, int j) {
    check_index(n, i, "s_diagram");
    check_index(n, j, "s_diagram");
    if (i == j) throw std::invalid_argument("s_diagram: indices must differ");
    std::vector<std::vector<int>> blocks;
    for (int k = 1; k <= n; ++k) {
        int to = k == i ? j : (k == j ? i : k);
        blocks.push_back({k - 1, n + to - 1});
    }
    return SetPartitionDiagram::from_blocks(n, std::move(blocks));
}

SetPartitionDiagram p_diagram(int n, int i) {
    check_index(n, i, "p_diagram");
    std::vector<std::vector<int>> blocks{{i - 1}, {n + i - 1}};
    for (int k = 1; k <= n; ++k)
        if (k != i) blocks.push_back({k - 1, n + k - 1});
    return SetPartitionDiagram::from_blocks(n, std::move(blocks));
}

SetPartitionDiagram p_pair_diagram(int n, int i, int j) {
    check_index(n, i, "p_pair_diagram");
    check_index(n, j, "p_pair_diagram");
    if (i == j) throw std::invalid_argument("p_pair_diagram: indices must differ");
    std::vector<std::vector<int>> blocks{{i - 1, j - 1, n + i - 1, n + j - 1}};
    for (int k = 1; k <= n; ++k)
        if (k != i && k != j) blocks.push_back({k - 1, n + k - 1});
    return SetPartitionDiagram::from_blocks(n, std::move(blocks));
}

std::vector<std::vector<std::vector<int>>> set_partitions(int m) {
    std::vector<std::vector<std::vector<int>>> out;
    std::vector<int> rgs(m, 0);
    auto emit = [&]() {
        int nblocks = m == 0 ? 0 : *std::max_element(rgs.begin(), rgs.end()) + 1;
        std::vector<std::vector<int>> blocks(nblocks);
        for (int v = 0; v < m; ++v) blocks[rgs[v]].push_back(v);
        out.push_back(std::move(blocks));
    };
    if (m == 0) {
        out.push_back({});
        return out;
    }
    // Restricted growth strings in lexicographic order.
    auto rec = [&](auto&& self, int pos, int maxv) -> void {
        if (pos == m) {
            emit();
            return;
        }
        for (int v = 0; v <= maxv + 1; ++v) {
            rgs[pos] = v;
            self(self, pos + 1, std::max(maxv, v));
        }
    };
    rec(rec, 1, 0); // rgs[0] = 0 always
    return out;
}

std::vector<SetPartitionDiagram> all_diagrams(int n) {
    std::vector<SetPartitionDiagram> out;
    for (auto& blocks : set_partitions(2 * n))
        out.push_back(SetPartitionDiagram::from_blocks(n, std::move(blocks)));
    return out;
}

} // namespace partblocks
