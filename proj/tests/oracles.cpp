#include "oracles.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>

namespace testoracles {

using partblocks::Abacus;
using partblocks::MarkedAbacus;
using partblocks::Partition;

long long bell_number(int m) {
    // Bell triangle.
    std::vector<std::vector<long long>> tri{{1}};
    for (int i = 1; i <= m; ++i) {
        std::vector<long long> row{tri.back().back()};
        for (long long v : tri.back()) row.push_back(row.back() + v);
        tri.push_back(std::move(row));
    }
    return tri[m][0];
}

long long stirling2(int m, int k) {
    if (k < 0 || k > m) return 0;
    if (m == 0) return k == 0 ? 1 : 0;
    std::vector<std::vector<long long>> s(m + 1, std::vector<long long>(m + 1, 0));
    s[0][0] = 1;
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= i; ++j) s[i][j] = j * s[i - 1][j] + s[i - 1][j - 1];
    return s[m][k];
}

long long binomial(long long m, long long k) {
    if (k < 0 || k > m) return 0;
    long long out = 1;
    for (long long i = 0; i < k; ++i) out = out * (m - i) / (i + 1);
    return out;
}

long long partition_count(int n) {
    std::vector<long long> p(n + 1, 0);
    p[0] = 1;
    for (int m = 1; m <= n; ++m) {
        long long acc = 0;
        for (int k = 1;; ++k) {
            long long g1 = static_cast<long long>(k) * (3 * k - 1) / 2;
            long long g2 = static_cast<long long>(k) * (3 * k + 1) / 2;
            if (g1 > m && g2 > m) break;
            long long sign = (k % 2 == 1) ? 1 : -1;
            if (g1 <= m) acc += sign * p[m - g1];
            if (g2 <= m) acc += sign * p[m - g2];
        }
        p[m] = acc;
    }
    return p[n];
}

namespace {

struct Cell {
    int row, col; // 0-based
    auto operator<=>(const Cell&) const = default;
};

/// All partitions mu contained in lambda with |mu| = |lambda| - p such that
/// the skew lambda/mu is a rim hook (connected, no 2x2).
std::vector<Partition> rim_hook_removals(const Partition& lambda, int p) {
    std::vector<Partition> out;
    int rows = lambda.length();
    std::vector<int> mu(rows, 0);
    auto skew_is_rim_hook = [&]() {
        std::set<Cell> cells;
        for (int r = 0; r < rows; ++r)
            for (int c = mu[r]; c < lambda.part(r + 1); ++c) cells.insert({r, c});
        if (cells.empty()) return false;
        for (const Cell& c : cells)
            if (cells.count({c.row, c.col + 1}) && cells.count({c.row + 1, c.col}) &&
                cells.count({c.row + 1, c.col + 1}))
                return false; // 2x2 square
        // Connectivity.
        std::set<Cell> seen{*cells.begin()};
        std::vector<Cell> frontier{*cells.begin()};
        while (!frontier.empty()) {
            Cell c = frontier.back();
            frontier.pop_back();
            for (Cell nb : {Cell{c.row + 1, c.col}, Cell{c.row - 1, c.col}, Cell{c.row, c.col + 1},
                            Cell{c.row, c.col - 1}})
                if (cells.count(nb) && seen.insert(nb).second) frontier.push_back(nb);
        }
        return seen.size() == cells.size();
    };
    auto rec = [&](auto&& self, int r, int removed) -> void {
        if (removed > p) return;
        if (r == rows) {
            if (removed == p && skew_is_rim_hook()) out.push_back(Partition::of(std::vector<int>(mu.begin(), mu.end())));
            return;
        }
        int hi = lambda.part(r + 1);
        int cap = r == 0 ? hi : std::min(hi, mu[r - 1]);
        for (int v = cap; v >= 0; --v) {
            mu[r] = v;
            self(self, r + 1, removed + (hi - v));
        }
    };
    rec(rec, 0, 0);
    return out;
}

Partition core_recursive(const Partition& lambda, int p,
                         std::map<Partition, Partition>& memo) {
    auto it = memo.find(lambda);
    if (it != memo.end()) return it->second;
    std::vector<Partition> removals = rim_hook_removals(lambda, p);
    Partition core = lambda;
    bool first = true;
    for (const Partition& mu : removals) {
        Partition sub = core_recursive(mu, p, memo);
        if (first) {
            core = sub;
            first = false;
        } else if (!(core == sub)) {
            throw std::logic_error("rim-hook oracle: removal order changed the core");
        }
    }
    memo.emplace(lambda, core);
    return core;
}

} // namespace

Partition p_core_rim_hook(const Partition& lambda, int p) {
    std::map<Partition, Partition> memo;
    return core_recursive(lambda, p, memo);
}

long long half_diagram_count(int n, int t) {
    long long factorial = 1;
    for (int i = 2; i <= n - t; ++i) factorial *= i;
    long long total = 0;
    for (int k = 0; k <= n; ++k) total += stirling2(n, k) * binomial(k, n - t);
    return total * factorial;
}

namespace {

std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line))
        if (!line.empty()) lines.push_back(line);
    return lines;
}

} // namespace

Abacus parse_ascii_abacus(const std::string& text, int p) {
    std::vector<long long> beads;
    auto lines = split_lines(text);
    for (size_t r = 0; r < lines.size(); ++r)
        for (int c = 0; c < p; ++c)
            if (lines[r][c] == 'o') beads.push_back(static_cast<long long>(r) * p + c);
    return Abacus(p, std::move(beads));
}

MarkedAbacus parse_ascii_marked(const std::string& text, int p, int delta) {
    auto lines = split_lines(text);
    int marker = -1;
    for (int c = 0; c < p; ++c)
        if (lines[0][2 * c] == 'v') marker = c;
    std::vector<long long> beads;
    for (size_t r = 1; r < lines.size(); ++r)
        for (int c = 0; c < p; ++c)
            if (lines[r][c] == 'o') beads.push_back(static_cast<long long>(r - 1) * p + c);
    return MarkedAbacus(Abacus(p, std::move(beads)), marker, delta);
}

Partition random_partition(std::mt19937& rng, int max_degree) {
    std::uniform_int_distribution<int> deg(0, max_degree);
    int degree = deg(rng);
    std::vector<int> parts;
    int remaining = degree;
    int cap = degree;
    while (remaining > 0) {
        std::uniform_int_distribution<int> pick(1, std::min(cap, remaining));
        int v = pick(rng);
        parts.push_back(v);
        cap = v;
        remaining -= v;
    }
    return Partition::of(std::move(parts));
}

} // namespace testoracles
