#include "partblocks/partition.hpp"

#include <numeric>
#include <stdexcept>

namespace partblocks {

Partition Partition::of(std::vector<int> parts) {
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    for (size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] <= 0)
            throw std::invalid_argument("Partition: parts must be positive");
        if (i + 1 < parts.size() && parts[i] < parts[i + 1])
            throw std::invalid_argument("Partition: parts must be weakly decreasing");
    }
    Partition out;
    out.degree_ = std::accumulate(parts.begin(), parts.end(), 0);
    out.parts_ = std::move(parts);
    return out;
}

std::string Partition::to_string() const {
    if (parts_.empty()) return "()";
    std::string s = "(";
    for (size_t i = 0; i < parts_.size();) {
        size_t j = i;
        while (j < parts_.size() && parts_[j] == parts_[i]) ++j;
        if (i > 0) s += ",";
        s += std::to_string(parts_[i]);
        if (j - i > 1) s += "^" + std::to_string(j - i);
        i = j;
    }
    return s + ")";
}

bool label_less(const Partition& a, const Partition& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a.parts() > b.parts();
}

long long content_sum(const Partition& lambda) {
    long long total = 0;
    for (int i = 1; i <= lambda.length(); ++i) {
        long long len = lambda.part(i);
        // Row i has contents (1-i) .. (len-i).
        total += len * (len + 1) / 2 - len * i;
    }
    return total;
}

bool is_p_regular(const Partition& lambda, int p) {
    int run = 0;
    int prev = -1;
    for (int v : lambda.parts()) {
        run = (v == prev) ? run + 1 : 1;
        if (run >= p) return false;
        prev = v;
    }
    return true;
}

bool dominance_leq(const Partition& a, const Partition& b) {
    if (a == b) return true;
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    long long sa = 0;
    long long sb = 0;
    int rows = std::max(a.length(), b.length());
    for (int i = 1; i <= rows; ++i) {
        sa += a.part(i);
        sb += b.part(i);
        if (sa > sb) return false;
    }
    return true;
}

std::vector<Node> removable_nodes(const Partition& lambda) {
    std::vector<Node> out;
    for (int i = 1; i <= lambda.length(); ++i)
        if (lambda.part(i + 1) < lambda.part(i)) out.push_back({i, lambda.part(i)});
    return out;
}

std::vector<Node> addable_nodes(const Partition& lambda) {
    std::vector<Node> out;
    for (int i = 1; i <= lambda.length(); ++i)
        if (i == 1 || lambda.part(i - 1) > lambda.part(i))
            out.push_back({i, lambda.part(i) + 1});
    out.push_back({lambda.length() + 1, 1});
    return out;
}

Partition remove_node(const Partition& lambda, int row) {
    if (row < 1 || row > lambda.length() || lambda.part(row + 1) >= lambda.part(row))
        throw std::invalid_argument("remove_node: no removable node in row " + std::to_string(row));
    std::vector<int> parts = lambda.parts();
    parts[row - 1] -= 1;
    return Partition::of(std::move(parts));
}

Partition add_node(const Partition& lambda, int row) {
    if (row < 1 || row > lambda.length() + 1 ||
        (row > 1 && lambda.part(row - 1) <= lambda.part(row)))
        throw std::invalid_argument("add_node: no addable node in row " + std::to_string(row));
    std::vector<int> parts = lambda.parts();
    if (row == lambda.length() + 1)
        parts.push_back(1);
    else
        parts[row - 1] += 1;
    return Partition::of(std::move(parts));
}

namespace {

void gen_descending(int remaining, int max_part, std::vector<int>& prefix,
                    std::vector<Partition>& out) {
    if (remaining == 0) {
        out.push_back(Partition::of(prefix));
        return;
    }
    for (int first = std::min(remaining, max_part); first >= 1; --first) {
        prefix.push_back(first);
        gen_descending(remaining - first, first, prefix, out);
        prefix.pop_back();
    }
}

} // namespace

std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    std::vector<int> prefix;
    gen_descending(n, n == 0 ? 1 : n, prefix, out);
    return out;
}

std::vector<Partition> partitions_up_to(int n) {
    std::vector<Partition> out;
    for (int d = 0; d <= n; ++d) {
        auto level = partitions_of(d);
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

} // namespace partblocks
