#include "partblocks/specht.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace partblocks {

namespace {

using Tabloid = std::vector<int>; // row_of[e] = 0-based row of entry e+1

std::vector<Tabloid> enumerate_tabloids(const Partition& shape) {
    int m = shape.degree();
    std::vector<int> room(shape.length());
    for (int r = 0; r < shape.length(); ++r) room[r] = shape.part(r + 1);
    std::vector<Tabloid> out;
    Tabloid row_of(m, -1);
    auto rec = [&](auto&& self, int e) -> void {
        if (e == m) {
            out.push_back(row_of);
            return;
        }
        for (int r = 0; r < shape.length(); ++r) {
            if (room[r] == 0) continue;
            --room[r];
            row_of[e] = r;
            self(self, e + 1);
            ++room[r];
        }
    };
    rec(rec, 0);
    return out;
}

/// Standard tableaux as row lists: rows[r] = entries (1-based) left to right.
std::vector<std::vector<std::vector<int>>> enumerate_standard(const Partition& shape) {
    int m = shape.degree();
    std::vector<std::vector<std::vector<int>>> out;
    std::vector<std::vector<int>> rows(shape.length());
    auto rec = [&](auto&& self, int e) -> void {
        if (e > m) {
            out.push_back(rows);
            return;
        }
        for (int r = 0; r < shape.length(); ++r) {
            int filled = static_cast<int>(rows[r].size());
            if (filled >= shape.part(r + 1)) continue;
            if (r > 0 && static_cast<int>(rows[r - 1].size()) <= filled) continue;
            rows[r].push_back(e);
            self(self, e + 1);
            rows[r].pop_back();
        }
    };
    rec(rec, 1);
    return out;
}

void permutations_with_sign(std::vector<int> items,
                            std::vector<std::pair<std::vector<int>, int>>& out) {
    std::sort(items.begin(), items.end());
    do {
        int inv = 0;
        for (size_t a = 0; a < items.size(); ++a)
            for (size_t b = a + 1; b < items.size(); ++b)
                if (items[a] > items[b]) ++inv;
        out.emplace_back(items, inv % 2 == 0 ? 1 : -1);
    } while (std::next_permutation(items.begin(), items.end()));
}

} // namespace

SpechtModule::SpechtModule(const Partition& shape, int max_degree) : shape_(shape) {
    int m = shape.degree();
    if (m > max_degree)
        throw std::invalid_argument("SpechtModule: degree exceeds bound " +
                                    std::to_string(max_degree));

    auto tabloids = enumerate_tabloids(shape);
    std::map<Tabloid, int> tabloid_index;
    for (size_t i = 0; i < tabloids.size(); ++i) tabloid_index[tabloids[i]] = static_cast<int>(i);
    int ntab = static_cast<int>(tabloids.size());

    auto standard = enumerate_standard(shape);
    for (const auto& T : standard) {
        // Column stabilizer: independent permutations of each column's entries.
        std::vector<std::vector<int>> columns;
        for (int c = 0; c < shape.part(1); ++c) {
            std::vector<int> col;
            for (const auto& row : T)
                if (c < static_cast<int>(row.size())) col.push_back(row[c]);
            if (col.size() > 1) columns.push_back(std::move(col));
        }
        std::vector<std::vector<std::pair<std::vector<int>, int>>> column_perms(columns.size());
        for (size_t c = 0; c < columns.size(); ++c)
            permutations_with_sign(columns[c], column_perms[c]);

        Tabloid base(m);
        for (int r = 0; r < static_cast<int>(T.size()); ++r)
            for (int e : T[r]) base[e - 1] = r;

        std::vector<long long> vec(ntab, 0);
        std::vector<size_t> choice(columns.size(), 0);
        while (true) {
            Tabloid t = base;
            int sign = 1;
            for (size_t c = 0; c < columns.size(); ++c) {
                const auto& [perm, s] = column_perms[c][choice[c]];
                // Entry columns[c][k] moves to the row of perm[k].
                for (size_t k = 0; k < perm.size(); ++k) t[perm[k] - 1] = base[columns[c][k] - 1];
                sign *= s;
            }
            vec[tabloid_index.at(t)] += sign;
            size_t c = 0;
            for (; c < columns.size(); ++c) {
                if (++choice[c] < column_perms[c].size()) break;
                choice[c] = 0;
            }
            if (c == columns.size()) break;
        }
        basis_.push_back(base);
        polytabloids_.push_back(std::move(vec));
    }

    int d = dim();

    // Pivot coordinates: columns giving an invertible d x d minor of the
    // polytabloid matrix, found by rational elimination.
    Field Q = Field::rationals();
    Matrix work(Q, d, ntab);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < ntab; ++j) work.at(i, j) = FieldScalar::integer(Q, polytabloids_[i][j]);
    std::vector<int> pivot_cols;
    {
        Matrix mrref = work;
        int row = 0;
        for (int col = 0; col < ntab && row < d; ++col) {
            int piv = -1;
            for (int r = row; r < d; ++r)
                if (!mrref.at(r, col).is_zero()) {
                    piv = r;
                    break;
                }
            if (piv < 0) continue;
            for (int c = 0; c < ntab; ++c) std::swap(mrref.at(row, c), mrref.at(piv, c));
            FieldScalar inv = mrref.at(row, col).inverse();
            for (int c = col; c < ntab; ++c) mrref.at(row, c) = mrref.at(row, c) * inv;
            for (int r = 0; r < d; ++r) {
                if (r == row || mrref.at(r, col).is_zero()) continue;
                FieldScalar f = mrref.at(r, col);
                for (int c = col; c < ntab; ++c)
                    mrref.at(r, c) = mrref.at(r, c) - f * mrref.at(row, c);
            }
            pivot_cols.push_back(col);
            ++row;
        }
        if (static_cast<int>(pivot_cols.size()) != d)
            throw std::logic_error("SpechtModule: standard polytabloids not independent");
    }

    // Invert the pivot minor (Gauss-Jordan with an appended identity).
    Matrix minor_inv = Matrix::identity(Q, d);
    {
        Matrix a(Q, d, d);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) a.at(i, j) = work.at(i, pivot_cols[j]);
        for (int col = 0; col < d; ++col) {
            int piv = -1;
            for (int r = col; r < d; ++r)
                if (!a.at(r, col).is_zero()) {
                    piv = r;
                    break;
                }
            if (piv < 0) throw std::logic_error("SpechtModule: singular pivot minor");
            for (int c = 0; c < d; ++c) {
                std::swap(a.at(col, c), a.at(piv, c));
                std::swap(minor_inv.at(col, c), minor_inv.at(piv, c));
            }
            FieldScalar inv = a.at(col, col).inverse();
            for (int c = 0; c < d; ++c) {
                a.at(col, c) = a.at(col, c) * inv;
                minor_inv.at(col, c) = minor_inv.at(col, c) * inv;
            }
            for (int r = 0; r < d; ++r) {
                if (r == col || a.at(r, col).is_zero()) continue;
                FieldScalar f = a.at(r, col);
                for (int c = 0; c < d; ++c) {
                    a.at(r, c) = a.at(r, c) - f * a.at(col, c);
                    minor_inv.at(r, c) = minor_inv.at(r, c) - f * minor_inv.at(col, c);
                }
            }
        }
    }

    // Images of basis vectors under adjacent transpositions, expanded back
    // into the standard basis; entries must come out integral.
    auto expand = [&](const std::vector<long long>& w) {
        std::vector<long long> coeffs(d);
        std::vector<FieldScalar> ws(d, FieldScalar::zero(Q));
        for (int j = 0; j < d; ++j) ws[j] = FieldScalar::integer(Q, w[pivot_cols[j]]);
        for (int k = 0; k < d; ++k) {
            FieldScalar x = FieldScalar::zero(Q);
            for (int j = 0; j < d; ++j) x = x + ws[j] * minor_inv.at(j, k);
            const Rational& r = x.rat();
            if (denominator(r) != 1)
                throw std::logic_error("SpechtModule: non-integral expansion coefficient");
            coeffs[k] = static_cast<long long>(numerator(r));
        }
        // Confirm the image really lies in the span.
        for (int j = 0; j < ntab; ++j) {
            long long acc = 0;
            for (int k = 0; k < d; ++k) acc += coeffs[k] * polytabloids_[k][j];
            if (acc != w[j]) throw std::logic_error("SpechtModule: image escapes the module");
        }
        return coeffs;
    };

    gen_.resize(std::max(0, m - 1));
    for (int i = 1; i <= m - 1; ++i) {
        std::vector<std::vector<long long>> mat(d, std::vector<long long>(d, 0));
        for (int j = 0; j < d; ++j) {
            std::vector<long long> w(ntab, 0);
            for (int t = 0; t < ntab; ++t) {
                if (polytabloids_[j][t] == 0) continue;
                Tabloid image = tabloids[t];
                std::swap(image[i - 1], image[i]);
                w[tabloid_index.at(image)] += polytabloids_[j][t];
            }
            std::vector<long long> coeffs = expand(w);
            for (int k = 0; k < d; ++k) mat[k][j] = coeffs[k];
        }
        gen_[i - 1] = std::move(mat);
    }

    gram_.assign(d, std::vector<long long>(d, 0));
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b) {
            long long acc = 0;
            for (int t = 0; t < ntab; ++t) acc += polytabloids_[a][t] * polytabloids_[b][t];
            gram_[a][b] = acc;
        }
}

const std::vector<std::vector<long long>>& SpechtModule::gen_matrix_int(int i) const {
    if (i < 1 || i > m() - 1) throw std::invalid_argument("SpechtModule: generator index");
    return gen_[i - 1];
}

namespace {

Matrix reduce(const std::vector<std::vector<long long>>& a, const Field& f) {
    int d = static_cast<int>(a.size());
    Matrix out(f, d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) out.at(i, j) = FieldScalar::integer(f, a[i][j]);
    return out;
}

} // namespace

Matrix SpechtModule::gen_matrix(int i, const Field& f) const { return reduce(gen_matrix_int(i), f); }

Matrix SpechtModule::gram(const Field& f) const { return reduce(gram_, f); }

Matrix SpechtModule::perm_matrix(const std::vector<int>& perm, const Field& f) const {
    if (static_cast<int>(perm.size()) != m())
        throw std::invalid_argument("SpechtModule: permutation size mismatch");
    Matrix acc = Matrix::identity(f, dim());
    std::vector<int> v = perm;
    // Bubble sort v to the identity: sigma composed with the swap sequence is
    // trivial, so sigma is the swaps composed in reverse; accumulate by
    // left-multiplying each swap matrix as it is found.
    bool moved = true;
    while (moved) {
        moved = false;
        for (int a = 0; a + 1 < m(); ++a) {
            if (v[a] > v[a + 1]) {
                std::swap(v[a], v[a + 1]);
                acc = gen_matrix(a + 1, f) * acc;
                moved = true;
            }
        }
    }
    return acc;
}

MatrixRep specht_rep(const Partition& lambda, const Field& f, int max_degree) {
    SpechtModule sp(lambda, max_degree);
    MatrixRep rep;
    rep.dim = sp.dim();
    for (int i = 1; i <= sp.m() - 1; ++i)
        rep.generators.emplace_back("s_" + std::to_string(i), sp.gen_matrix(i, f));
    for (int k = 0; k < sp.dim(); ++k) rep.basis_labels.push_back("e" + std::to_string(k + 1));
    return rep;
}

} // namespace partblocks
