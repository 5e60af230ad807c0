#include "partblocks/field.hpp"

#include <stdexcept>

#include "partblocks/util.hpp"

namespace partblocks {

namespace {

long long mod_inverse(long long a, long long p) {
    long long t = 0, newt = 1, r = p, newr = mod_floor(a, p);
    while (newr != 0) {
        long long q = r / newr;
        t = std::exchange(newt, t - q * newt);
        r = std::exchange(newr, r - q * newr);
    }
    if (r != 1) throw std::domain_error("division by zero in F_p");
    return mod_floor(t, p);
}

bool quadratic_irreducible(int m1, int m0, int p) {
    for (int x = 0; x < p; ++x)
        if (mod_floor(static_cast<long long>(x) * x + static_cast<long long>(m1) * x + m0, p) == 0)
            return false;
    return true;
}

} // namespace

Field Field::rationals() { return Field{}; }

Field Field::prime(int p) {
    require_prime(p, "Field::prime");
    Field f;
    f.kind_ = Kind::prime;
    f.p_ = p;
    return f;
}

Field Field::prime_square(int p) {
    require_prime(p, "Field::prime_square");
    Field f;
    f.kind_ = Kind::prime_square;
    f.p_ = p;
    for (int m1 = 0; m1 < p; ++m1)
        for (int m0 = 0; m0 < p; ++m0)
            if (quadratic_irreducible(m1, m0, p)) {
                f.modulus_ = {m1, m0};
                return f;
            }
    throw std::logic_error("Field::prime_square: no irreducible quadratic found");
}

long long Field::size() const {
    switch (kind_) {
        case Kind::rationals: return 0;
        case Kind::prime: return p_;
        case Kind::prime_square: return static_cast<long long>(p_) * p_;
    }
    return 0;
}

std::string Field::to_string() const {
    switch (kind_) {
        case Kind::rationals: return "Q";
        case Kind::prime: return "F" + std::to_string(p_);
        case Kind::prime_square:
            return "F" + std::to_string(static_cast<long long>(p_) * p_);
    }
    return "?";
}

FieldScalar FieldScalar::zero(const Field& f) {
    FieldScalar s;
    s.field_ = f;
    return s;
}

FieldScalar FieldScalar::one(const Field& f) { return integer(f, 1); }

FieldScalar FieldScalar::integer(const Field& f, long long v) {
    FieldScalar s;
    s.field_ = f;
    if (f.kind() == Field::Kind::rationals)
        s.rat_ = v;
    else
        s.a_ = mod_floor(v, f.p());
    return s;
}

FieldScalar FieldScalar::rational(const Rational& v) {
    FieldScalar s;
    s.rat_ = v;
    return s;
}

FieldScalar FieldScalar::extension(const Field& f, long long a, long long b) {
    if (f.kind() != Field::Kind::prime_square)
        throw std::invalid_argument("FieldScalar::extension: field is not F_{p^2}");
    FieldScalar s;
    s.field_ = f;
    s.a_ = mod_floor(a, f.p());
    s.b_ = mod_floor(b, f.p());
    return s;
}

bool FieldScalar::is_zero() const {
    return field_.kind() == Field::Kind::rationals ? rat_ == 0 : (a_ == 0 && b_ == 0);
}

bool FieldScalar::is_one() const {
    return field_.kind() == Field::Kind::rationals ? rat_ == 1 : (a_ == 1 && b_ == 0);
}

bool FieldScalar::in_prime_subfield() const {
    return field_.kind() != Field::Kind::prime_square || b_ == 0;
}

void FieldScalar::check_same(const FieldScalar& o) const {
    if (!(field_ == o.field_))
        throw std::invalid_argument("FieldScalar: mixed-field arithmetic");
}

FieldScalar FieldScalar::operator+(const FieldScalar& o) const {
    check_same(o);
    FieldScalar s = *this;
    if (field_.kind() == Field::Kind::rationals) {
        s.rat_ += o.rat_;
    } else {
        s.a_ = mod_floor(a_ + o.a_, field_.p());
        s.b_ = mod_floor(b_ + o.b_, field_.p());
    }
    return s;
}

FieldScalar FieldScalar::operator-(const FieldScalar& o) const { return *this + (-o); }

FieldScalar FieldScalar::operator-() const {
    FieldScalar s = *this;
    if (field_.kind() == Field::Kind::rationals) {
        s.rat_ = -rat_;
    } else {
        s.a_ = mod_floor(-a_, field_.p());
        s.b_ = mod_floor(-b_, field_.p());
    }
    return s;
}

FieldScalar FieldScalar::operator*(const FieldScalar& o) const {
    check_same(o);
    FieldScalar s = zero(field_);
    switch (field_.kind()) {
        case Field::Kind::rationals:
            s.rat_ = rat_ * o.rat_;
            break;
        case Field::Kind::prime:
            s.a_ = mod_floor(a_ * o.a_, field_.p());
            break;
        case Field::Kind::prime_square: {
            // (a + b x)(c + d x) with x^2 = -m1 x - m0.
            long long p = field_.p();
            auto [m1, m0] = field_.modulus();
            long long ac = a_ * o.a_, bd = b_ * o.b_, ad_bc = a_ * o.b_ + b_ * o.a_;
            s.a_ = mod_floor(ac - bd * m0, p);
            s.b_ = mod_floor(ad_bc - bd * m1, p);
            break;
        }
    }
    return s;
}

FieldScalar FieldScalar::inverse() const {
    if (is_zero()) throw std::domain_error("FieldScalar: division by zero");
    FieldScalar s = zero(field_);
    switch (field_.kind()) {
        case Field::Kind::rationals:
            s.rat_ = 1 / rat_;
            break;
        case Field::Kind::prime:
            s.a_ = mod_inverse(a_, field_.p());
            break;
        case Field::Kind::prime_square: {
            // Conjugate of a + b x is a + b (-m1 - x); norm lies in F_p.
            long long p = field_.p();
            auto [m1, m0] = field_.modulus();
            long long norm = mod_floor(a_ * a_ - a_ * b_ * m1 + b_ * b_ * m0, p);
            long long ninv = mod_inverse(norm, p);
            s.a_ = mod_floor((a_ - b_ * m1) * ninv, p);
            s.b_ = mod_floor(-b_ * ninv, p);
            break;
        }
    }
    return s;
}

FieldScalar FieldScalar::operator/(const FieldScalar& o) const {
    check_same(o);
    return *this * o.inverse();
}

FieldScalar FieldScalar::pow(long long e) const {
    if (e < 0) return inverse().pow(-e);
    FieldScalar acc = one(field_);
    FieldScalar base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

bool FieldScalar::operator==(const FieldScalar& o) const {
    if (!(field_ == o.field_)) return false;
    return field_.kind() == Field::Kind::rationals ? rat_ == o.rat_
                                                   : (a_ == o.a_ && b_ == o.b_);
}

bool FieldScalar::operator<(const FieldScalar& o) const {
    check_same(o);
    if (field_.kind() == Field::Kind::rationals) return rat_ < o.rat_;
    return std::pair(b_, a_) < std::pair(o.b_, o.a_);
}

std::string FieldScalar::to_string() const {
    switch (field_.kind()) {
        case Field::Kind::rationals: return rat_.str();
        case Field::Kind::prime: return std::to_string(a_);
        case Field::Kind::prime_square:
            return std::to_string(a_) + "+" + std::to_string(b_) + "x";
    }
    return "?";
}

std::vector<FieldScalar> field_elements(const Field& f) {
    if (f.kind() == Field::Kind::rationals)
        throw std::invalid_argument("field_elements: field is infinite");
    std::vector<FieldScalar> out;
    if (f.kind() == Field::Kind::prime) {
        for (int a = 0; a < f.p(); ++a) out.push_back(FieldScalar::integer(f, a));
    } else {
        for (int b = 0; b < f.p(); ++b)
            for (int a = 0; a < f.p(); ++a) out.push_back(FieldScalar::extension(f, a, b));
    }
    return out;
}

} // namespace partblocks
