#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace partblocks {

using Rational = boost::multiprecision::cpp_rational;

/// Descriptor of the coefficient field: exact rationals, F_p, or F_{p^2}
/// presented as F_p[x]/(x^2 + m1 x + m0) with the lexicographically least
/// irreducible monic quadratic. Cheap to copy; equality is structural.
class Field {
public:
    enum class Kind : std::uint8_t { rationals, prime, prime_square };

    static Field rationals();
    static Field prime(int p);
    static Field prime_square(int p);

    Kind kind() const { return kind_; }
    int characteristic() const { return kind_ == Kind::rationals ? 0 : p_; }
    int p() const { return p_; }
    /// (m1, m0) of the modulus x^2 + m1 x + m0; only for prime_square.
    std::array<int, 2> modulus() const { return modulus_; }
    /// Number of elements; 0 for the rationals.
    long long size() const;
    std::string to_string() const;

    bool operator==(const Field&) const = default;

private:
    Kind kind_ = Kind::rationals;
    int p_ = 0;
    std::array<int, 2> modulus_{0, 0};
};

/// Exact element of a Field. All arithmetic is exact; division by zero and
/// cross-field arithmetic throw.
class FieldScalar {
public:
    FieldScalar() = default; ///< zero of the rationals
    static FieldScalar zero(const Field& f);
    static FieldScalar one(const Field& f);
    /// Image of an integer in the field.
    static FieldScalar integer(const Field& f, long long v);
    static FieldScalar rational(const Rational& v);
    /// a + b x in F_{p^2}.
    static FieldScalar extension(const Field& f, long long a, long long b);

    const Field& field() const { return field_; }
    bool is_zero() const;
    bool is_one() const;
    /// True iff the element lies in the prime subfield (always true for
    /// rationals and F_p; tests b = 0 in F_{p^2}).
    bool in_prime_subfield() const;

    const Rational& rat() const { return rat_; }
    long long residue() const { return a_; }                 // F_p value / F_{p^2} constant term
    std::pair<long long, long long> ext() const { return {a_, b_}; }

    FieldScalar operator+(const FieldScalar&) const;
    FieldScalar operator-(const FieldScalar&) const;
    FieldScalar operator*(const FieldScalar&) const;
    FieldScalar operator/(const FieldScalar&) const; ///< throws on zero divisor
    FieldScalar operator-() const;
    FieldScalar inverse() const;
    FieldScalar pow(long long e) const; ///< e >= 0

    bool operator==(const FieldScalar&) const;
    bool operator!=(const FieldScalar& o) const { return !(*this == o); }
    /// Total order for deterministic containers; not arithmetic order.
    bool operator<(const FieldScalar&) const;

    std::string to_string() const;

private:
    Field field_{Field::rationals()};
    Rational rat_;           // rationals
    long long a_ = 0, b_ = 0; // prime / prime_square coordinates
    void check_same(const FieldScalar& o) const;
};

/// All elements of a finite field in a fixed order; throws for the rationals.
std::vector<FieldScalar> field_elements(const Field& f);

} // namespace partblocks
