#pragma once

#include <map>
#include <string>
#include <vector>

#include "partblocks/diagram.hpp"
#include "partblocks/field.hpp"

namespace partblocks {

/// Sparse linear combination of diagrams; zero coefficients are never stored.
/// Elements carry no context of their own — products are formed through a
/// PartitionAlgebra, which knows n, the field and delta.
class AlgebraElement {
public:
    AlgebraElement() = default;

    const std::map<SetPartitionDiagram, FieldScalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    void add_term(const SetPartitionDiagram& d, const FieldScalar& c);

    AlgebraElement operator+(const AlgebraElement&) const;
    AlgebraElement operator-(const AlgebraElement&) const;
    AlgebraElement scaled(const FieldScalar&) const;
    bool operator==(const AlgebraElement&) const = default;

    std::string to_string() const;

private:
    std::map<SetPartitionDiagram, FieldScalar> terms_;
};

/// Which diagram the half-integer element p_{i+1/2} denotes. The adjacent
/// convention p_{i,i+1} is the one under which the Jucys-Murphy sum acts on
/// cell modules by the documented scalar; p_{i,n} appears in print but fails
/// that identity for n >= 3 (see tests).
enum class HalfConvention { adjacent, last };

/// The partition algebra P_n(delta) over an exact field: diagram products,
/// the filtration idempotents e_t, and the Jucys-Murphy elements.
class PartitionAlgebra {
public:
    PartitionAlgebra(int n, const Field& field, const FieldScalar& delta);

    int n() const { return n_; }
    const Field& field() const { return field_; }
    const FieldScalar& delta() const { return delta_; }

    AlgebraElement zero() const { return {}; }
    AlgebraElement one() const;
    AlgebraElement from_diagram(const SetPartitionDiagram& d) const;
    AlgebraElement mul(const AlgebraElement&, const AlgebraElement&) const;

    AlgebraElement gen_s(int i, int j) const;
    AlgebraElement gen_p(int i) const;
    AlgebraElement gen_p2(int i, int j) const;
    /// The full generating family s_{i,j}, p_{i,j} (i<j), p_i with names.
    std::vector<std::pair<std::string, AlgebraElement>> generator_family() const;

    /// e_t = delta^{-t} p_1 p_2 ... p_t; requires delta invertible.
    AlgebraElement e_idempotent(int t) const;

    /// Jucys-Murphy element with doubled index: twice_index = 2k gives L_k,
    /// twice_index = 2k+1 gives L_{k+1/2}. Valid range 1..2n.
    AlgebraElement jm_element(int twice_index, HalfConvention conv = HalfConvention::adjacent) const;
    AlgebraElement jm_sigma(int twice_index, HalfConvention conv = HalfConvention::adjacent) const;
    /// Z_n = L_{1/2} + L_1 + ... + L_n.
    AlgebraElement jm_z(HalfConvention conv = HalfConvention::adjacent) const;

    /// Image in P_n / J^(n-1) = F S_n: keeps permutation diagrams only,
    /// keyed by their one-line permutation.
    std::map<std::vector<int>, FieldScalar> quotient_to_sym(const AlgebraElement&) const;

private:
    int n_;
    Field field_;
    FieldScalar delta_;
};

} // namespace partblocks
