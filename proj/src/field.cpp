#include "apolar/field.hpp"

#include "apolar/errors.hpp"

#include <boost/multiprecision/integer.hpp>

namespace apolar {

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

FieldSpec FieldSpec::gf(std::int64_t p) {
    if (!is_prime(p)) {
        throw ConfigError("GF(" + std::to_string(p) + "): modulus is not prime");
    }
    return FieldSpec{FieldKind::PrimeField, p};
}

std::string FieldSpec::to_string() const {
    return kind == FieldKind::Rationals ? "Q" : "GF(" + std::to_string(p) + ")";
}

namespace {

BigInt mod_pos(const BigInt& a, const BigInt& p) {
    BigInt r = a % p;
    if (r < 0) r += p;
    return r;
}

// Inverse of a mod p via extended Euclid; a must be nonzero mod p.
BigInt mod_inverse(const BigInt& a, const BigInt& p) {
    BigInt old_r = mod_pos(a, p), r = p;
    BigInt old_s = 1, s = 0;
    while (r != 0) {
        BigInt q = old_r / r;
        BigInt tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_s - q * s;
        old_s = s;
        s = tmp;
    }
    if (old_r != 1) {
        throw std::domain_error("not invertible mod p");
    }
    return mod_pos(old_s, p);
}

}  // namespace

Scalar::Scalar(FieldSpec field, BigRational v) : field_(field), v_(std::move(v)) { reduce(); }

void Scalar::reduce() {
    if (field_.kind == FieldKind::PrimeField) {
        BigInt p(field_.p);
        BigInt num = mod_pos(numerator(v_), p);
        BigInt den = mod_pos(denominator(v_), p);
        if (den == 0) throw std::domain_error("denominator divisible by p");
        if (den != 1) num = mod_pos(num * mod_inverse(den, p), p);
        v_ = BigRational(num);
    }
}

Scalar Scalar::from_residue(FieldSpec field, std::int64_t r) {
    Scalar s(field);
    s.v_ = r;
    return s;
}

namespace {

// Residues below 2^31 keep products inside int64.
constexpr std::int64_t kFastModLimit = std::int64_t(1) << 31;

inline bool fast_mod(const FieldSpec& f) {
    return f.kind == FieldKind::PrimeField && f.p < kFastModLimit;
}

inline std::int64_t res64(const Scalar& s) {
    return numerator(s.value()).convert_to<std::int64_t>();
}

}  // namespace

Scalar Scalar::operator+(const Scalar& o) const {
    if (fast_mod(field_)) {
        std::int64_t r = res64(*this) + res64(o);
        if (r >= field_.p) r -= field_.p;
        return from_residue(field_, r);
    }
    return Scalar(field_, v_ + o.v_);
}

Scalar Scalar::operator-(const Scalar& o) const {
    if (fast_mod(field_)) {
        std::int64_t r = res64(*this) - res64(o);
        if (r < 0) r += field_.p;
        return from_residue(field_, r);
    }
    return Scalar(field_, v_ - o.v_);
}

Scalar Scalar::operator*(const Scalar& o) const {
    if (fast_mod(field_)) return from_residue(field_, res64(*this) * res64(o) % field_.p);
    return Scalar(field_, v_ * o.v_);
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar Scalar::operator-() const { return Scalar(field_, -v_); }

Scalar Scalar::inverse() const {
    if (is_zero()) throw std::domain_error("division by zero");
    if (field_.kind == FieldKind::PrimeField) {
        return Scalar(field_, BigRational(mod_inverse(numerator(v_), BigInt(field_.p))));
    }
    return Scalar(field_, 1 / v_);
}

std::string Scalar::to_string() const { return v_.str(); }

}  // namespace apolar
