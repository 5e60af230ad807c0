#include "partblocks/blocks.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>
#include <map>
#include <stdexcept>

#include "partblocks/abacus.hpp"
#include "partblocks/util.hpp"

namespace partblocks {

std::vector<long long> hat_vector(const Partition& lambda, int n) {
    if (lambda.degree() > n)
        throw std::invalid_argument("hat_vector: |lambda| exceeds n");
    std::vector<long long> v(n + 1, 0);
    v[0] = -lambda.degree();
    for (int i = 1; i <= n; ++i) v[i] = lambda.part(i);
    return v;
}

std::vector<long long> rho_shift(int n, long long delta) {
    std::vector<long long> v(n + 1);
    v[0] = delta;
    for (int i = 1; i <= n; ++i) v[i] = -i;
    return v;
}

std::vector<long long> hat_plus_rho(const Partition& lambda, int n, long long delta) {
    std::vector<long long> v = hat_vector(lambda, n);
    v[0] += delta;
    for (int i = 1; i <= n; ++i) v[i] -= i;
    return v;
}

bool tilde_p(std::span<const long long> x, std::span<const long long> y, int p) {
    if (x.size() != y.size())
        throw std::invalid_argument("tilde_p: length mismatch");
    require_prime(p, "tilde_p");
    std::vector<int> count(p, 0);
    for (long long v : x) count[mod_floor(v, p)] += 1;
    for (long long v : y) count[mod_floor(v, p)] -= 1;
    return std::all_of(count.begin(), count.end(), [](int c) { return c == 0; });
}

bool symgroup_same_block(const Partition& lambda, const Partition& mu, int p) {
    if (lambda.degree() != mu.degree())
        throw std::invalid_argument("symgroup_same_block: partitions must have equal degree");
    require_prime(p, "symgroup_same_block");
    bool by_core = p_core(lambda, p) == p_core(mu, p);

    int m = lambda.degree();
    std::vector<long long> x(m), y(m);
    for (int i = 1; i <= m; ++i) {
        x[i - 1] = lambda.part(i) - i;
        y[i - 1] = mu.part(i) - i;
    }
    bool by_residues = tilde_p(x, y, p);
    if (by_core != by_residues)
        throw std::logic_error("symgroup_same_block: p-core and residue criteria disagree");
    return by_core;
}

bool is_delta_pair(const Partition& mu, const Partition& lambda, long long delta) {
    if (mu.degree() >= lambda.degree()) return false;
    int row = 0;
    int rows = std::max(mu.length(), lambda.length());
    for (int i = 1; i <= rows; ++i) {
        if (mu.part(i) == lambda.part(i)) continue;
        if (mu.part(i) > lambda.part(i) || row != 0) return false;
        row = i;
    }
    if (row == 0) return false;
    // Last box of the strip is (row, lambda_row), content lambda_row - row.
    return lambda.part(row) - row == delta - mu.degree();
}

namespace {

/// The unique mu with mu ->_delta lambda by a strip removed from some row,
/// if one exists. At most one row can support such an undo.
std::optional<Partition> chain_predecessor(const Partition& lambda, long long delta) {
    for (int i = 1; i <= lambda.length(); ++i) {
        // Removing a strip from row i leaves mu_i = delta + i - |lambda|.
        long long mi = delta + i - lambda.degree();
        if (mi < 0 || mi >= lambda.part(i)) continue;
        if (mi < lambda.part(i + 1)) continue;               // stays a partition
        if (i > 1 && mi > lambda.part(i - 1)) continue;
        std::vector<int> parts = lambda.parts();
        parts[i - 1] = static_cast<int>(mi);
        Partition mu = Partition::of(std::move(parts));
        if (is_delta_pair(mu, lambda, delta)) return mu;
    }
    return std::nullopt;
}

/// Extending the chain whose i-th link adds a strip in row i: the result has
/// row i equal to delta + i - |lambda|.
std::optional<Partition> chain_successor(const Partition& lambda, long long delta, int row, int n) {
    long long li = delta + row - lambda.degree();
    if (li <= lambda.part(row)) return std::nullopt;
    if (row > 1 && li > lambda.part(row - 1)) return std::nullopt;
    if (row > lambda.length() + 1) return std::nullopt;
    std::vector<int> parts = lambda.parts();
    if (row == lambda.length() + 1)
        parts.push_back(static_cast<int>(li));
    else
        parts[row - 1] = static_cast<int>(li);
    Partition next = Partition::of(std::move(parts));
    if (next.degree() > n) return std::nullopt;
    return next;
}

} // namespace

std::vector<Partition> char0_block_chain(const Partition& lambda, long long delta, int n) {
    if (lambda.degree() > n)
        throw std::invalid_argument("char0_block_chain: lambda outside label set");
    Partition bottom = lambda;
    while (auto mu = chain_predecessor(bottom, delta)) bottom = *mu;
    std::vector<Partition> chain{bottom};
    bool seen = (bottom == lambda);
    for (int row = 1;; ++row) {
        auto next = chain_successor(chain.back(), delta, row, n);
        if (!next) break;
        if (!is_delta_pair(chain.back(), *next, delta))
            throw std::logic_error("char0_block_chain: constructed link is not a delta-pair");
        seen = seen || (*next == lambda);
        chain.push_back(*next);
    }
    if (!seen)
        throw std::logic_error("char0_block_chain: chain does not pass through lambda");
    return chain;
}

bool char0_same_block(const Partition& lambda, const Partition& mu, long long delta, int n) {
    std::vector<long long> x = hat_plus_rho(lambda, n, delta);
    std::vector<long long> y = hat_plus_rho(mu, n, delta);
    std::sort(x.begin(), x.end());
    std::sort(y.begin(), y.end());
    bool by_orbit = (x == y);

    auto chain = char0_block_chain(lambda, delta, n);
    bool by_chain = std::find(chain.begin(), chain.end(), mu) != chain.end();
    if (by_orbit != by_chain)
        throw std::logic_error("char0_same_block: orbit and chain criteria disagree");
    return by_orbit;
}

bool jm_scalar_condition(const Partition& lambda, const Partition& mu, int delta_residue, int p) {
    require_prime(p, "jm_scalar_condition");
    long long t = lambda.degree() - mu.degree();
    if (t < 0) return false;
    long long expr = t * delta_residue - t * mu.degree() - content_sum(lambda) + content_sum(mu) -
                     t * (t - 1) / 2;
    return mod_floor(expr, p) == 0;
}

bool charp_same_block(const Partition& lambda, const Partition& mu, int n, int p, int delta_residue) {
    if (lambda.degree() > n || mu.degree() > n)
        throw std::invalid_argument("charp_same_block: labels outside Lambda_{<=n}");
    if (delta_residue < 1 || delta_residue > p - 1)
        throw std::invalid_argument("charp_same_block: delta must lie in [1, p-1]");
    bool by_gamma =
        gamma_delta(lambda, p, delta_residue, n) == gamma_delta(mu, p, delta_residue, n);
    bool by_residues =
        tilde_p(hat_plus_rho(lambda, n, delta_residue), hat_plus_rho(mu, n, delta_residue), p);
    if (by_gamma != by_residues)
        throw std::logic_error("charp_same_block: runner-count and residue criteria disagree");
    return by_gamma;
}

std::vector<Partition> charp_orbit(const Partition& lambda, int n, int p, int delta_residue) {
    RunnerCounts key = gamma_delta(lambda, p, delta_residue, n);
    std::vector<Partition> out;
    for (const Partition& mu : partitions_up_to(n))
        if (gamma_delta(mu, p, delta_residue, n) == key) out.push_back(mu);
    return out;
}

bool nonintegral_same_block(const Partition& lambda, const Partition& mu, int p) {
    if (lambda.degree() != mu.degree()) return false;
    return symgroup_same_block(lambda, mu, p);
}

bool limiting_same_block(const Partition& lambda, const Partition& mu, int p, int delta_residue) {
    int mstar = lambda.degree() + mu.degree() + 2 * p;
    bool first = charp_same_block(lambda, mu, mstar, p, delta_residue);
    for (int m = mstar + 1; m <= mstar + p; ++m)
        if (charp_same_block(lambda, mu, m, p, delta_residue) != first)
            throw std::logic_error("limiting_same_block: no stabilization at m*..m*+p");
    return first;
}

// --- reflection-group cross-checks -----------------------------------------

OrbitSearchOutcome reflection_orbit_equal(const Partition& lambda, const Partition& mu, int n,
                                          std::optional<int> p, long long delta, ReflectionMode mode,
                                          const ReflectionSearchOptions& opts) {
    if (mode != ReflectionMode::char_zero && !p)
        throw std::invalid_argument("reflection_orbit_equal: mode requires a prime p");
    if (p) require_prime(*p, "reflection_orbit_equal");

    // Work with shifted points y = x + rho; the shifted action becomes the
    // plain reflection action on y.
    std::vector<long long> start, target;
    if (mode == ReflectionMode::symmetric_group) {
        if (lambda.degree() != n || mu.degree() != n)
            throw std::invalid_argument("reflection_orbit_equal: symmetric group mode needs |lambda| = |mu| = n");
        start.resize(n);
        target.resize(n);
        for (int i = 1; i <= n; ++i) {
            start[i - 1] = lambda.part(i) - i;
            target[i - 1] = mu.part(i) - i;
        }
    } else {
        start = hat_plus_rho(lambda, n, delta);
        target = hat_plus_rho(mu, n, delta);
    }

    int dim = static_cast<int>(start.size());
    int max_depth = n + opts.extra_depth;
    long long rbound = 0;
    if (mode != ReflectionMode::char_zero)
        rbound = (lambda.degree() + mu.degree()) / *p + opts.extra_translation;

    struct VecHash {
        std::size_t operator()(const std::vector<long long>& v) const {
            std::size_t h = 1469598103934665603ull;
            for (long long x : v) {
                h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull;
                h *= 1099511628211ull;
            }
            return h;
        }
    };
    std::unordered_set<std::vector<long long>, VecHash> seen{start};
    std::deque<std::vector<long long>> frontier{start};
    if (start == target) return OrbitSearchOutcome::reached;

    bool truncated = false;
    std::vector<long long> z;
    for (int depth = 0; depth < max_depth && !frontier.empty(); ++depth) {
        std::deque<std::vector<long long>> next;
        for (const auto& y : frontier) {
            for (int i = 0; i < dim; ++i) {
                for (int j = i + 1; j < dim; ++j) {
                    for (long long r = -rbound; r <= rbound; ++r) {
                        // s_{i,j,rp}(y): swap y_i, y_j with translation rp.
                        z = y;
                        long long shift = (mode == ReflectionMode::char_zero) ? 0 : r * *p;
                        z[i] = y[j] + shift;
                        z[j] = y[i] - shift;
                        if (z == target) return OrbitSearchOutcome::reached;
                        if (seen.size() >= opts.max_states) {
                            truncated = true;
                            continue;
                        }
                        if (seen.insert(z).second) next.push_back(z);
                    }
                }
            }
        }
        frontier = std::move(next);
    }
    if (frontier.empty() && !truncated) return OrbitSearchOutcome::not_reached;
    return OrbitSearchOutcome::exhausted;
}

// --- batch forms ------------------------------------------------------------

BlockPartition BlockPartition::group(const std::vector<Partition>& labels,
                                     const std::vector<std::size_t>& class_ids) {
    std::size_t nclasses = 0;
    for (std::size_t id : class_ids) nclasses = std::max(nclasses, id + 1);
    std::vector<std::vector<Partition>> classes(nclasses);
    for (std::size_t k = 0; k < labels.size(); ++k) classes[class_ids[k]].push_back(labels[k]);
    for (auto& cls : classes) std::sort(cls.begin(), cls.end(), label_less);
    std::sort(classes.begin(), classes.end(),
              [](const auto& a, const auto& b) { return label_less(a.front(), b.front()); });
    return BlockPartition{std::move(classes)};
}

std::size_t BlockPartition::class_of(const Partition& lambda) const {
    for (std::size_t k = 0; k < classes.size(); ++k)
        if (std::find(classes[k].begin(), classes[k].end(), lambda) != classes[k].end()) return k;
    throw std::invalid_argument("BlockPartition: label not present");
}

bool BlockPartition::same_class(const Partition& a, const Partition& b) const {
    return class_of(a) == class_of(b);
}

namespace {

template <typename Key, typename KeyFn>
BlockPartition group_by(const std::vector<Partition>& labels, KeyFn&& key_of) {
    std::map<Key, std::size_t> ids;
    std::vector<std::size_t> class_ids;
    class_ids.reserve(labels.size());
    for (const Partition& lam : labels) {
        auto [it, inserted] = ids.try_emplace(key_of(lam), ids.size());
        class_ids.push_back(it->second);
    }
    return BlockPartition::group(labels, class_ids);
}

} // namespace

BlockPartition charp_blocks(int n, int p, int delta_residue) {
    if (delta_residue < 1 || delta_residue > p - 1)
        throw std::invalid_argument("charp_blocks: delta must lie in [1, p-1]");
    return group_by<std::vector<int>>(partitions_up_to(n), [&](const Partition& lam) {
        return gamma_delta(lam, p, delta_residue, n).counts;
    });
}

BlockPartition char0_blocks(int n, long long delta) {
    return group_by<std::vector<long long>>(partitions_up_to(n), [&](const Partition& lam) {
        std::vector<long long> key = hat_plus_rho(lam, n, delta);
        std::sort(key.begin(), key.end());
        return key;
    });
}

BlockPartition char0_chain_blocks(int n, long long delta) {
    auto labels = partitions_up_to(n);
    std::map<Partition, std::size_t> assigned;
    std::size_t nclasses = 0;
    for (const Partition& lam : labels) {
        if (assigned.count(lam)) continue;
        auto chain = char0_block_chain(lam, delta, n);
        for (const Partition& member : chain) {
            auto [it, inserted] = assigned.try_emplace(member, nclasses);
            if (!inserted)
                throw std::logic_error("char0_chain_blocks: chains overlap");
        }
        ++nclasses;
    }
    std::vector<std::size_t> class_ids;
    class_ids.reserve(labels.size());
    for (const Partition& lam : labels) class_ids.push_back(assigned.at(lam));
    return BlockPartition::group(labels, class_ids);
}

BlockPartition nonintegral_blocks(int n, int p) {
    return group_by<std::pair<int, Partition>>(partitions_up_to(n), [&](const Partition& lam) {
        return std::make_pair(lam.degree(), p_core(lam, p));
    });
}

BlockPartition nakayama_blocks(int m, int p) {
    return group_by<Partition>(partitions_of(m),
                               [&](const Partition& lam) { return p_core(lam, p); });
}

BlockPartition limiting_blocks(int n, int p, int delta_residue) {
    // For fixed labels the membership stabilizes; hash at a common large m and
    // confirm over a window of p further values.
    int m = 2 * n + 2 * p;
    auto at = [&](int stage) {
        return group_by<std::vector<int>>(partitions_up_to(n), [&](const Partition& lam) {
            std::vector<int> key(p, 0);
            for (long long v : hat_plus_rho(lam, stage, delta_residue)) key[mod_floor(v, p)] += 1;
            return key;
        });
    };
    BlockPartition base = at(m);
    for (int stage = m + 1; stage <= m + p; ++stage)
        if (!(at(stage) == base))
            throw std::logic_error("limiting_blocks: no stabilization in window");
    return base;
}

} // namespace partblocks
