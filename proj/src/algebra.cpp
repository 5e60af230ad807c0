#include "partblocks/algebra.hpp"

#include <stdexcept>

namespace partblocks {

void AlgebraElement::add_term(const SetPartitionDiagram& d, const FieldScalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(d, c);
    if (!inserted) {
        it->second = it->second + c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

AlgebraElement AlgebraElement::operator+(const AlgebraElement& o) const {
    AlgebraElement out = *this;
    for (const auto& [d, c] : o.terms_) out.add_term(d, c);
    return out;
}

AlgebraElement AlgebraElement::operator-(const AlgebraElement& o) const {
    AlgebraElement out = *this;
    for (const auto& [d, c] : o.terms_) out.add_term(d, -c);
    return out;
}

AlgebraElement AlgebraElement::scaled(const FieldScalar& f) const {
    AlgebraElement out;
    if (f.is_zero()) return out;
    for (const auto& [d, c] : terms_) out.terms_.emplace(d, c * f);
    return out;
}

std::string AlgebraElement::to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [d, c] : terms_) {
        if (!s.empty()) s += " + ";
        s += c.to_string() + "*" + d.to_string();
    }
    return s;
}

PartitionAlgebra::PartitionAlgebra(int n, const Field& field, const FieldScalar& delta)
    : n_(n), field_(field), delta_(delta) {
    if (n < 0) throw std::invalid_argument("PartitionAlgebra: n must be non-negative");
    if (!(delta.field() == field))
        throw std::invalid_argument("PartitionAlgebra: delta not in the coefficient field");
}

AlgebraElement PartitionAlgebra::one() const {
    return from_diagram(SetPartitionDiagram::identity(n_));
}

AlgebraElement PartitionAlgebra::from_diagram(const SetPartitionDiagram& d) const {
    if (d.size() != n_) throw std::invalid_argument("PartitionAlgebra: diagram size mismatch");
    AlgebraElement e;
    e.add_term(d, FieldScalar::one(field_));
    return e;
}

AlgebraElement PartitionAlgebra::mul(const AlgebraElement& a, const AlgebraElement& b) const {
    AlgebraElement out;
    for (const auto& [dx, cx] : a.terms())
        for (const auto& [dy, cy] : b.terms()) {
            auto [d, t] = concatenate(dx, dy);
            out.add_term(d, cx * cy * delta_.pow(t));
        }
    return out;
}

AlgebraElement PartitionAlgebra::gen_s(int i, int j) const { return from_diagram(s_diagram(n_, i, j)); }
AlgebraElement PartitionAlgebra::gen_p(int i) const { return from_diagram(p_diagram(n_, i)); }
AlgebraElement PartitionAlgebra::gen_p2(int i, int j) const {
    return from_diagram(p_pair_diagram(n_, i, j));
}

std::vector<std::pair<std::string, AlgebraElement>> PartitionAlgebra::generator_family() const {
    std::vector<std::pair<std::string, AlgebraElement>> gens;
    for (int i = 1; i <= n_; ++i)
        for (int j = i + 1; j <= n_; ++j) {
            gens.emplace_back("s_" + std::to_string(i) + "_" + std::to_string(j), gen_s(i, j));
            gens.emplace_back("p_" + std::to_string(i) + "_" + std::to_string(j), gen_p2(i, j));
        }
    for (int i = 1; i <= n_; ++i) gens.emplace_back("p_" + std::to_string(i), gen_p(i));
    return gens;
}

AlgebraElement PartitionAlgebra::e_idempotent(int t) const {
    if (t < 0 || t > n_) throw std::invalid_argument("e_idempotent: t out of range");
    if (delta_.is_zero()) throw std::domain_error("e_idempotent: delta must be invertible");
    AlgebraElement e = one();
    for (int i = 1; i <= t; ++i) e = mul(e, gen_p(i));
    return e.scaled(delta_.pow(t).inverse());
}

namespace {

/// Memoized evaluation of the recursively defined Jucys-Murphy elements.
/// Indices are doubled: slot 2k holds L_k / sigma_k, slot 2k+1 holds
/// L_{k+1/2} / sigma_{k+1/2}.
struct JmTable {
    const PartitionAlgebra& A;
    HalfConvention conv;
    std::vector<AlgebraElement> L, sigma;
    std::vector<bool> haveL, haveSigma;

    JmTable(const PartitionAlgebra& a, HalfConvention c)
        : A(a), conv(c), L(2 * a.n() + 1), sigma(2 * a.n() + 1),
          haveL(2 * a.n() + 1, false), haveSigma(2 * a.n() + 1, false) {}

    AlgebraElement p_half(int i) const { // p_{i+1/2}
        return conv == HalfConvention::adjacent ? A.gen_p2(i, i + 1) : A.gen_p2(i, A.n());
    }
    AlgebraElement s(int i) const { return A.gen_s(i, i + 1); } // s_i
    AlgebraElement mul(std::initializer_list<AlgebraElement> factors) const {
        AlgebraElement acc = A.one();
        for (const auto& f : factors) acc = A.mul(acc, f);
        return acc;
    }

    const AlgebraElement& get_sigma(int t) {
        if (haveSigma[t]) return sigma[t];
        haveSigma[t] = true;
        if (t == 2) { // sigma_1 = 1
            sigma[t] = A.one();
        } else if (t == 4) { // sigma_2 = s_1
            sigma[t] = s(1);
        } else if (t == 1 || t == 3) { // sigma_{1/2} = sigma_{1+1/2} = 1
            sigma[t] = A.one();
        } else if (t % 2 == 0) {
            // sigma_{i+1}, i >= 2. The two conjugation factors here read
            // s_{i-1} and a trailing s_i; the identities of the quotient
            // images, the commutativity of the family and the central-element
            // scalar action all fail under the nearby mis-bracketed variants
            // (see tests/test_jm.cpp).
            int i = t / 2 - 1;
            sigma[t] = mul({s(i - 1), s(i), get_sigma(2 * i), s(i), s(i - 1)}) +
                       mul({p_half(i - 1), get_L(2 * (i - 1)), s(i), p_half(i - 1)}) +
                       mul({s(i), p_half(i - 1), get_L(2 * (i - 1)), s(i), p_half(i - 1), s(i)}) -
                       mul({s(i), p_half(i - 1), get_L(2 * (i - 1)), s(i - 1), p_half(i),
                            A.gen_p(i), p_half(i - 1)}) -
                       mul({p_half(i - 1), A.gen_p(i), p_half(i), s(i - 1), get_L(2 * (i - 1)),
                            p_half(i - 1), s(i)});
        } else {
            // sigma_{i+1/2}, i >= 2
            int i = (t - 1) / 2;
            sigma[t] = mul({s(i - 1), s(i), get_sigma(2 * i - 1), s(i), s(i - 1)}) +
                       mul({p_half(i - 1), get_L(2 * (i - 1)), s(i), p_half(i - 1), s(i)}) +
                       mul({s(i), p_half(i - 1), get_L(2 * (i - 1)), s(i), p_half(i - 1)}) -
                       mul({p_half(i - 1), get_L(2 * (i - 1)), s(i - 1), p_half(i), A.gen_p(i),
                            p_half(i - 1)}) -
                       mul({s(i), p_half(i - 1), A.gen_p(i), p_half(i), s(i - 1),
                            get_L(2 * (i - 1)), p_half(i - 1), s(i)});
        }
        return sigma[t];
    }

    const AlgebraElement& get_L(int t) {
        if (haveL[t]) return L[t];
        haveL[t] = true;
        if (t == 1) { // L_{1/2} = 0
            L[t] = A.zero();
        } else if (t == 2) { // L_1 = p_1
            L[t] = A.gen_p(1);
        } else if (t % 2 == 0) {
            // L_{i+1}, i >= 1
            int i = t / 2 - 1;
            const AlgebraElement& Li = get_L(2 * i);
            L[t] = A.zero() - mul({s(i), Li, p_half(i)}) - mul({p_half(i), Li, s(i)}) +
                   mul({p_half(i), Li, A.gen_p(i + 1), p_half(i)}) + mul({s(i), Li, s(i)}) +
                   get_sigma(t);
        } else {
            // L_{i+1/2}, i >= 1
            int i = (t - 1) / 2;
            const AlgebraElement& Li = get_L(2 * i);
            L[t] = A.zero() - mul({Li, p_half(i)}) - mul({p_half(i), Li}) +
                   mul({p_half(i), Li, A.gen_p(i), p_half(i)}) +
                   mul({s(i), get_L(2 * i - 1), s(i)}) + get_sigma(t);
        }
        return L[t];
    }
};

} // namespace

AlgebraElement PartitionAlgebra::jm_element(int twice_index, HalfConvention conv) const {
    if (twice_index < 1 || twice_index > 2 * n_)
        throw std::invalid_argument("jm_element: index out of range");
    JmTable table(*this, conv);
    return table.get_L(twice_index);
}

AlgebraElement PartitionAlgebra::jm_sigma(int twice_index, HalfConvention conv) const {
    if (twice_index < 1 || twice_index > 2 * n_)
        throw std::invalid_argument("jm_sigma: index out of range");
    JmTable table(*this, conv);
    return table.get_sigma(twice_index);
}

AlgebraElement PartitionAlgebra::jm_z(HalfConvention conv) const {
    JmTable table(*this, conv);
    AlgebraElement z;
    for (int t = 1; t <= 2 * n_; ++t) z = z + table.get_L(t);
    return z;
}

std::map<std::vector<int>, FieldScalar> PartitionAlgebra::quotient_to_sym(
    const AlgebraElement& e) const {
    std::map<std::vector<int>, FieldScalar> out;
    for (const auto& [d, c] : e.terms()) {
        if (!d.is_permutation()) continue;
        auto [it, inserted] = out.try_emplace(d.permutation(), c);
        if (!inserted) it->second = it->second + c;
    }
    std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
    return out;
}

} // namespace partblocks
