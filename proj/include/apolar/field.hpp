#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace apolar {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

enum class FieldKind { Rationals, PrimeField };

// Coefficient field: ℚ or GF(p), p prime.
struct FieldSpec {
    FieldKind kind = FieldKind::Rationals;
    std::int64_t p = 0;

    static FieldSpec rationals() { return FieldSpec{FieldKind::Rationals, 0}; }
    static FieldSpec gf(std::int64_t p);  // throws ConfigError unless p is prime

    std::int64_t characteristic() const { return kind == FieldKind::PrimeField ? p : 0; }

    bool operator==(const FieldSpec& o) const { return kind == o.kind && p == o.p; }
    bool operator!=(const FieldSpec& o) const { return !(*this == o); }

    std::string to_string() const;
};

bool is_prime(std::int64_t n);

// Exact field element. Rationals are kept in lowest terms with positive
// denominator (cpp_rational does this); GF(p) values are residues in [0, p).
class Scalar {
public:
    Scalar() = default;
    explicit Scalar(FieldSpec field) : field_(field) {}
    Scalar(FieldSpec field, BigRational v);
    Scalar(FieldSpec field, std::int64_t v) : Scalar(field, BigRational(v)) {}

    static Scalar zero(FieldSpec field) { return Scalar(field, 0); }
    static Scalar one(FieldSpec field) { return Scalar(field, 1); }

    const FieldSpec& field() const { return field_; }
    const BigRational& value() const { return v_; }
    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;  // throws on division by zero
    Scalar operator-() const;
    Scalar inverse() const;

    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    bool operator==(const Scalar& o) const { return v_ == o.v_; }
    bool operator!=(const Scalar& o) const { return v_ != o.v_; }

    std::string to_string() const;

private:
    void reduce();
    static Scalar from_residue(FieldSpec field, std::int64_t r);

    FieldSpec field_ = FieldSpec::rationals();
    BigRational v_ = 0;
};

}  // namespace apolar
