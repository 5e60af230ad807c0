#include "partblocks/abacus.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

#include "partblocks/util.hpp"

namespace partblocks {

Abacus::Abacus(int p, std::vector<long long> beads) : p_(p), beads_(std::move(beads)) {
    require_prime(p, "Abacus");
    std::sort(beads_.begin(), beads_.end());
    for (size_t i = 0; i < beads_.size(); ++i) {
        if (beads_[i] < 0) throw std::invalid_argument("Abacus: negative bead position");
        if (i > 0 && beads_[i] == beads_[i - 1])
            throw std::invalid_argument("Abacus: duplicate bead position");
    }
}

bool Abacus::has_bead(long long pos) const {
    return std::binary_search(beads_.begin(), beads_.end(), pos);
}

MarkedAbacus::MarkedAbacus(Abacus base, int marker, int delta)
    : base_(std::move(base)), marker_(marker), delta_(delta) {
    int p = base_.runners();
    if (marker_ < 0 || marker_ >= p) throw std::invalid_argument("MarkedAbacus: marker out of range");
    if (delta_ < 1 || delta_ > p - 1)
        throw std::invalid_argument("MarkedAbacus: delta must lie in [1, p-1]");
}

std::vector<long long> beta_sequence(const Partition& lambda, int b) {
    if (b < lambda.degree())
        throw std::invalid_argument("beta_sequence: need b >= |lambda|");
    std::vector<long long> beta(b);
    for (int i = 1; i <= b; ++i) beta[i - 1] = lambda.part(i) - i + b;
    return beta;
}

std::vector<long long> beta_delta_sequence(const Partition& lambda, int delta, int b) {
    std::vector<long long> beta = beta_sequence(lambda, b);
    beta.insert(beta.begin(), delta - lambda.degree() + b);
    return beta;
}

Abacus abacus_of(const Partition& lambda, int p, int b) {
    return Abacus(p, beta_sequence(lambda, b));
}

Partition partition_of(const Abacus& a) {
    const auto& beads = a.beads();
    int b = a.bead_count();
    std::vector<int> parts(b);
    for (int i = 0; i < b; ++i) {
        // i-th largest position is lambda_{i+1} - (i+1) + b
        parts[i] = static_cast<int>(beads[b - 1 - i] - b + i + 1);
    }
    return Partition::of(std::move(parts));
}

RunnerCounts gamma(const Partition& lambda, int p, int b) {
    require_prime(p, "gamma");
    RunnerCounts g{std::vector<int>(p, 0)};
    for (long long pos : beta_sequence(lambda, b)) g.counts[pos % p] += 1;
    return g;
}

Partition p_core(const Partition& lambda, int p) {
    require_prime(p, "p_core");
    int b = lambda.degree();
    RunnerCounts g = gamma(lambda, p, b);
    std::vector<long long> beads;
    for (int r = 0; r < p; ++r)
        for (int k = 0; k < g.counts[r]; ++k) beads.push_back(r + static_cast<long long>(k) * p);
    return partition_of(Abacus(p, std::move(beads)));
}

MarkedAbacus marked_abacus(const Partition& lambda, int p, int delta, int b) {
    require_prime(p, "marked_abacus");
    if (delta < 1 || delta > p - 1)
        throw std::invalid_argument("marked_abacus: delta must lie in [1, p-1]");
    int v = static_cast<int>(mod_floor(delta - lambda.degree() + b, p));
    return MarkedAbacus(abacus_of(lambda, p, b), v, delta);
}

RunnerCounts gamma_delta(const MarkedAbacus& m) {
    int p = m.base().runners();
    RunnerCounts g{std::vector<int>(p, 0)};
    for (long long pos : m.base().beads()) g.counts[pos % p] += 1;
    g.counts[m.marker()] += 1;
    return g;
}

RunnerCounts gamma_delta(const Partition& lambda, int p, int delta, int b) {
    return gamma_delta(marked_abacus(lambda, p, delta, b));
}

Partition orbit_min(const Partition& lambda, int p, int delta) {
    int b = lambda.degree();
    RunnerCounts g = gamma_delta(lambda, p, delta, b);
    // Def: marker on the rightmost runner with maximal count, beads fully up.
    int vstar = 0;
    for (int r = 0; r < p; ++r)
        if (g.counts[r] >= g.counts[vstar]) vstar = r;
    std::vector<long long> beads;
    for (int r = 0; r < p; ++r) {
        int c = g.counts[r] - (r == vstar ? 1 : 0);
        for (int k = 0; k < c; ++k) beads.push_back(r + static_cast<long long>(k) * p);
    }
    Partition out = partition_of(Abacus(p, std::move(beads)));
    assert(mod_floor(delta - out.degree() + b, p) == vstar);
    return out;
}

namespace {

std::string render_rows(const Abacus& a, int p) {
    long long maxpos = a.beads().empty() ? -1 : a.beads().back();
    long long rows = std::max<long long>(1, maxpos / p + 1);
    std::string out;
    for (long long r = 0; r < rows; ++r) {
        for (int c = 0; c < p; ++c) out += a.has_bead(r * p + c) ? 'o' : '.';
        out += '\n';
    }
    return out;
}

} // namespace

std::string render_ascii(const Abacus& a) { return render_rows(a, a.runners()); }

std::string render_ascii(const MarkedAbacus& m) {
    int p = m.base().runners();
    std::string header;
    for (int c = 0; c < p; ++c) {
        if (c > 0) header += ' ';
        header += (c == m.marker()) ? 'v' : '.';
    }
    return header + "\n" + render_rows(m.base(), p);
}

} // namespace partblocks
