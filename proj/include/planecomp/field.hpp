#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <gmpxx.h>

namespace planecomp {

/// The ground field: the rationals or a prime field F_p.
///
/// Prime moduli are checked by trial division at construction and must be
/// below 2^31 so that a product of two residues fits in 64 bits.
class Field {
public:
    enum class Kind : std::uint8_t { Rationals, Prime };

    Field() = default;  // Q

    static Field rationals() noexcept { return Field(); }
    static Field prime(std::uint64_t p);

    /// Parses `"Q"` or `"F<p>"`, e.g. `"F5"`.
    static Field parse(std::string_view spec);

    Kind kind() const noexcept { return kind_; }
    bool is_prime() const noexcept { return kind_ == Kind::Prime; }
    std::uint64_t characteristic() const noexcept { return modulus_; }
    std::uint64_t modulus() const noexcept { return modulus_; }

    std::string to_string() const;

    friend bool operator==(const Field&, const Field&) = default;

private:
    Kind kind_ = Kind::Rationals;
    std::uint64_t modulus_ = 0;
};

bool is_prime_number(std::uint64_t n) noexcept;

/// An element of a Field in canonical form: reduced fraction with positive
/// denominator over Q, residue in [0, p) over F_p. Equality is equality of
/// the stored representation.
class Scalar {
public:
    Scalar() : value_(mpq_class(0)) {}

    static Scalar zero(const Field& field);
    static Scalar one(const Field& field);
    static Scalar from_int(const Field& field, long long value);
    static Scalar from_mpz(const Field& field, const mpz_class& value);
    /// Maps a rational into the field; a denominator divisible by p throws
    /// DivisionByZero.
    static Scalar from_mpq(const Field& field, const mpq_class& value);
    /// Residue constructor; `value` is reduced mod p.
    static Scalar from_residue(const Field& field, std::uint64_t value);
    /// Integer or fraction literal such as `-3/2`.
    static Scalar parse(const Field& field, std::string_view text);

    const Field& field() const noexcept { return field_; }
    bool is_zero() const noexcept;
    bool is_one() const noexcept;

    std::uint64_t residue() const;       // prime fields only
    const mpq_class& rational() const;   // Q only

    Scalar operator-() const;
    Scalar inv() const;
    Scalar pow(long long exponent) const;

    Scalar& operator+=(const Scalar& rhs);
    Scalar& operator-=(const Scalar& rhs);
    Scalar& operator*=(const Scalar& rhs);
    Scalar& operator/=(const Scalar& rhs);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    friend bool operator==(const Scalar& a, const Scalar& b);

    std::string to_string() const;

private:
    Scalar(const Field& field, std::uint64_t residue) : field_(field), value_(residue) {}
    Scalar(const Field& field, mpq_class q) : field_(field), value_(std::move(q)) {}

    void require_same_field(const Scalar& rhs) const;

    Field field_;
    std::variant<std::uint64_t, mpq_class> value_;
};

enum class FieldOp { Add, Sub, Mul, Div, Inv, Neg };

/// Dispatch form of the field operations; `b` is ignored for Inv and Neg.
Scalar field_arith(FieldOp op, const Scalar& a, const Scalar& b = Scalar());

/// All p residues 0, 1, ..., p-1 of a prime field. Throws InfiniteField on Q.
std::vector<Scalar> enumerate_field(const Field& field);

// Raw modular helpers used by the hot enumeration loops.
inline std::uint64_t mod_mul(std::uint64_t a, std::uint64_t b, std::uint64_t p) noexcept {
    return (a * b) % p;
}
std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t p) noexcept;
std::uint64_t mod_inv(std::uint64_t a, std::uint64_t p);

}  // namespace planecomp
