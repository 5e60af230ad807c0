#include "partblocks/cell_module.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace partblocks {

namespace {

/// Build a half diagram from a set partition of the northern nodes, a choice
/// of propagating blocks, and the southern tail assignment south_of[k] = which
/// southern tail node (0-based among t..n-1) attaches to chosen block k.
SetPartitionDiagram assemble_half(int n, int t, const std::vector<std::vector<int>>& north_blocks,
                                  const std::vector<int>& chosen,
                                  const std::vector<int>& south_of) {
    std::vector<std::vector<int>> blocks;
    std::vector<bool> is_chosen(north_blocks.size(), false);
    for (size_t k = 0; k < chosen.size(); ++k) is_chosen[chosen[k]] = true;
    for (int j = 0; j < t; ++j) blocks.push_back({n + j});
    for (size_t k = 0; k < chosen.size(); ++k) {
        std::vector<int> blk = north_blocks[chosen[k]];
        blk.push_back(n + t + south_of[k]);
        blocks.push_back(std::move(blk));
    }
    for (size_t b = 0; b < north_blocks.size(); ++b)
        if (!is_chosen[b]) blocks.push_back(north_blocks[b]);
    return SetPartitionDiagram::from_blocks(n, std::move(blocks));
}

void for_each_choice(int nblocks, int k, const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> choice(k);
    auto rec = [&](auto&& self, int pos, int next) -> void {
        if (pos == k) {
            fn(choice);
            return;
        }
        for (int b = next; b < nblocks; ++b) {
            choice[pos] = b;
            self(self, pos + 1, b + 1);
        }
    };
    rec(rec, 0, 0);
}

} // namespace

std::vector<SetPartitionDiagram> half_diagram_orbit_reps(int n, int t) {
    if (t < 0 || t > n) throw std::invalid_argument("half_diagram_orbit_reps: t out of range");
    std::vector<SetPartitionDiagram> out;
    std::vector<int> identity(n - t);
    std::iota(identity.begin(), identity.end(), 0);
    for (const auto& north : set_partitions(n)) {
        if (static_cast<int>(north.size()) < n - t) continue;
        for_each_choice(static_cast<int>(north.size()), n - t, [&](const std::vector<int>& chosen) {
            out.push_back(assemble_half(n, t, north, chosen, identity));
        });
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<SetPartitionDiagram> half_diagram_basis(int n, int t) {
    if (t < 0 || t > n) throw std::invalid_argument("half_diagram_basis: t out of range");
    std::vector<SetPartitionDiagram> out;
    std::vector<int> south(n - t);
    std::iota(south.begin(), south.end(), 0);
    for (const auto& north : set_partitions(n)) {
        if (static_cast<int>(north.size()) < n - t) continue;
        for_each_choice(static_cast<int>(north.size()), n - t, [&](const std::vector<int>& chosen) {
            std::vector<int> perm = south;
            do {
                out.push_back(assemble_half(n, t, north, chosen, perm));
            } while (std::next_permutation(perm.begin(), perm.end()));
        });
    }
    std::sort(out.begin(), out.end());
    return out;
}

CellModule::CellModule(const PartitionAlgebra& algebra, const Partition& lambda)
    : algebra_(algebra), lambda_(lambda), t_(algebra.n() - lambda.degree()) {
    if (t_ < 0) throw std::invalid_argument("CellModule: |lambda| exceeds n");
    reps_ = half_diagram_orbit_reps(algebra_.n(), t_);
    specht_ = std::make_shared<SpechtModule>(lambda_, std::max(5, algebra_.n()));
}

std::pair<int, std::vector<int>> CellModule::factor(const SetPartitionDiagram& w) const {
    int n = algebra_.n();
    int k = n - t_;
    // Propagating blocks sorted by least northern label; within the canonical
    // diagram form, block order already realizes that.
    std::vector<int> south_tail(k, -1); // sorted prop block index -> tail node it holds
    int prop_seen = 0;
    std::vector<std::vector<int>> rep_blocks;
    for (const auto& blk : w.blocks()) {
        bool north = blk.front() < n;
        bool south = blk.back() >= n;
        if (north && south) {
            std::vector<int> stripped;
            int tail = -1;
            for (int v : blk) {
                if (v >= n + t_)
                    tail = v - n - t_;
                else
                    stripped.push_back(v);
            }
            if (tail < 0) throw std::logic_error("CellModule: propagating block without tail node");
            south_tail[prop_seen] = tail;
            stripped.push_back(n + t_ + prop_seen);
            rep_blocks.push_back(std::move(stripped));
            ++prop_seen;
        } else {
            rep_blocks.push_back(blk);
        }
    }
    if (prop_seen != k) throw std::logic_error("CellModule: propagating count mismatch");
    // w = rep * sigma with sigma(i) = sorted position of the block holding
    // tail node i.
    std::vector<int> sigma(k);
    for (int pos = 0; pos < k; ++pos) sigma[south_tail[pos]] = pos;
    SetPartitionDiagram rep = SetPartitionDiagram::from_blocks(n, std::move(rep_blocks));
    auto it = std::lower_bound(reps_.begin(), reps_.end(), rep);
    if (it == reps_.end() || !(*it == rep))
        throw std::logic_error("CellModule: factored representative not in basis");
    return {static_cast<int>(it - reps_.begin()), sigma};
}

Matrix CellModule::action(const SetPartitionDiagram& d) const {
    const Field& f = algebra_.field();
    int sdim = specht_->dim();
    Matrix out(f, dim(), dim());
    for (size_t col = 0; col < reps_.size(); ++col) {
        auto [w, closed] = concatenate(d, reps_[col]);
        if (w.propagating_count() < algebra_.n() - t_) continue;
        auto [row, sigma] = factor(w);
        Matrix block = specht_->perm_matrix(sigma, f).scaled(algebra_.delta().pow(closed));
        for (int a = 0; a < sdim; ++a)
            for (int b = 0; b < sdim; ++b)
                out.at(row * sdim + a, static_cast<int>(col) * sdim + b) =
                    out.at(row * sdim + a, static_cast<int>(col) * sdim + b) + block.at(a, b);
    }
    return out;
}

Matrix CellModule::action(const AlgebraElement& z) const {
    Matrix out(algebra_.field(), dim(), dim());
    for (const auto& [d, c] : z.terms()) out = out + action(d).scaled(c);
    return out;
}

Matrix CellModule::gram() const {
    const Field& f = algebra_.field();
    int sdim = specht_->dim();
    Matrix sp_gram = specht_->gram(f);
    Matrix out(f, dim(), dim());
    int k = algebra_.n() - t_;
    for (size_t ui = 0; ui < reps_.size(); ++ui) {
        SetPartitionDiagram flipped = reps_[ui].flipped();
        for (size_t vi = 0; vi < reps_.size(); ++vi) {
            auto [c, closed] = concatenate(flipped, reps_[vi]);
            if (c.propagating_count() != k) continue;
            // The composite joins northern tail t+i to southern tail t+q(i).
            std::vector<int> q(k, -1);
            for (const auto& blk : c.blocks()) {
                int north_tail = -1, south_tail = -1;
                for (int v : blk) {
                    if (v < algebra_.n() && v >= t_) north_tail = v - t_;
                    if (v >= algebra_.n() + t_) south_tail = v - algebra_.n() - t_;
                }
                if (north_tail >= 0 && south_tail >= 0) q[north_tail] = south_tail;
            }
            for (int i = 0; i < k; ++i)
                if (q[i] < 0) throw std::logic_error("CellModule: gram pairing not a bijection");
            Matrix block =
                (sp_gram * specht_->perm_matrix(q, f)).scaled(algebra_.delta().pow(closed));
            for (int a = 0; a < sdim; ++a)
                for (int b = 0; b < sdim; ++b)
                    out.at(static_cast<int>(ui) * sdim + a, static_cast<int>(vi) * sdim + b) =
                        block.at(a, b);
        }
    }
    return out;
}

MatrixRep CellModule::rep() const {
    MatrixRep rep;
    rep.dim = dim();
    for (const auto& [name, gen] : algebra_.generator_family())
        rep.generators.emplace_back(name, action(gen.terms().begin()->first));
    for (size_t v = 0; v < reps_.size(); ++v)
        for (int a = 0; a < specht_->dim(); ++a)
            rep.basis_labels.push_back("v" + std::to_string(v + 1) + "*e" + std::to_string(a + 1));
    return rep;
}

MatrixRep cell_module_rep(const Partition& lambda, int n, const FieldScalar& delta) {
    PartitionAlgebra A(n, delta.field(), delta);
    return CellModule(A, lambda).rep();
}

int gram_rank(const Partition& lambda, int n, const FieldScalar& delta) {
    PartitionAlgebra A(n, delta.field(), delta);
    return CellModule(A, lambda).gram_rank();
}

} // namespace partblocks
