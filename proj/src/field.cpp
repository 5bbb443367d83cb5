#include "planecomp/field.hpp"

#include <cctype>
#include <charconv>
#include <tuple>

#include "planecomp/error.hpp"

namespace planecomp {

namespace {

constexpr std::uint64_t kMaxModulus = (std::uint64_t{1} << 31);

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

}  // namespace

bool is_prime_number(std::uint64_t n) noexcept {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

Field Field::prime(std::uint64_t p) {
    if (p >= kMaxModulus)
        throw Error(ErrorKind::PreconditionViolated, "modulus " + std::to_string(p) + " exceeds 2^31");
    if (!is_prime_number(p))
        throw Error(ErrorKind::CompositeModulus, std::to_string(p) + " is not prime");
    Field f;
    f.kind_ = Kind::Prime;
    f.modulus_ = p;
    return f;
}

Field Field::parse(std::string_view spec) {
    spec = trim(spec);
    if (spec == "Q") return rationals();
    if (spec.size() >= 2 && spec.front() == 'F') {
        std::uint64_t p = 0;
        auto digits = spec.substr(1);
        auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
        if (ec == std::errc() && ptr == digits.data() + digits.size()) return prime(p);
    }
    throw Error(ErrorKind::ParseError, "bad field spec '" + std::string(spec) + "'");
}

std::string Field::to_string() const {
    return kind_ == Kind::Rationals ? std::string("Q") : "F" + std::to_string(modulus_);
}

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t p) noexcept {
    std::uint64_t result = 1 % p;
    base %= p;
    while (exp) {
        if (exp & 1) result = mod_mul(result, base, p);
        base = mod_mul(base, base, p);
        exp >>= 1;
    }
    return result;
}

std::uint64_t mod_inv(std::uint64_t a, std::uint64_t p) {
    a %= p;
    if (a == 0) throw Error(ErrorKind::DivisionByZero, "inverse of 0 mod " + std::to_string(p));
    // extended Euclid on signed 64-bit values; p < 2^31
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = static_cast<std::int64_t>(p), new_r = static_cast<std::int64_t>(a);
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        std::tie(t, new_t) = std::make_pair(new_t, t - q * new_t);
        std::tie(r, new_r) = std::make_pair(new_r, r - q * new_r);
    }
    if (t < 0) t += static_cast<std::int64_t>(p);
    return static_cast<std::uint64_t>(t);
}

// ---------------------------------------------------------------------------

Scalar Scalar::zero(const Field& field) {
    return field.is_prime() ? Scalar(field, std::uint64_t{0}) : Scalar(field, mpq_class(0));
}

Scalar Scalar::one(const Field& field) {
    return field.is_prime() ? Scalar(field, std::uint64_t{1}) : Scalar(field, mpq_class(1));
}

Scalar Scalar::from_int(const Field& field, long long value) {
    if (field.is_prime()) {
        auto p = static_cast<long long>(field.modulus());
        long long r = value % p;
        if (r < 0) r += p;
        return Scalar(field, static_cast<std::uint64_t>(r));
    }
    return Scalar(field, mpq_class(mpz_class(static_cast<long>(value))));
}

Scalar Scalar::from_mpz(const Field& field, const mpz_class& value) {
    if (field.is_prime()) {
        mpz_class r;
        mpz_fdiv_r_ui(r.get_mpz_t(), value.get_mpz_t(), field.modulus());
        return Scalar(field, static_cast<std::uint64_t>(r.get_ui()));
    }
    return Scalar(field, mpq_class(value));
}

Scalar Scalar::from_mpq(const Field& field, const mpq_class& value) {
    if (field.is_prime()) {
        Scalar num = from_mpz(field, value.get_num());
        Scalar den = from_mpz(field, value.get_den());
        if (den.is_zero())
            throw Error(ErrorKind::DivisionByZero,
                        "denominator " + value.get_den().get_str() + " vanishes in " + field.to_string());
        return num / den;
    }
    mpq_class q(value);
    q.canonicalize();
    return Scalar(field, std::move(q));
}

Scalar Scalar::from_residue(const Field& field, std::uint64_t value) {
    if (!field.is_prime()) return from_mpz(field, mpz_class(static_cast<unsigned long>(value)));
    return Scalar(field, value % field.modulus());
}

Scalar Scalar::parse(const Field& field, std::string_view text) {
    text = trim(text);
    std::string s(text);
    bool valid = !s.empty();
    std::size_t slash = s.find('/');
    for (std::size_t i = 0; i < s.size() && valid; ++i) {
        char c = s[i];
        if (std::isdigit(static_cast<unsigned char>(c))) continue;
        if ((c == '-' || c == '+') && (i == 0 || i == slash + 1)) continue;
        if (c == '/' && i == slash && i > 0 && i + 1 < s.size()) continue;
        valid = false;
    }
    if (!valid) throw Error(ErrorKind::ParseError, "bad scalar literal '" + s + "'");
    if (!s.empty() && s[0] == '+') s.erase(0, 1);
    mpq_class q;
    try {
        if (slash == std::string::npos) {
            q = mpq_class(mpz_class(s));
        } else {
            std::size_t sl = s.find('/');
            std::string n = s.substr(0, sl), d = s.substr(sl + 1);
            if (!d.empty() && d[0] == '+') d.erase(0, 1);
            mpz_class den(d);
            if (den == 0) throw Error(ErrorKind::DivisionByZero, "zero denominator in '" + s + "'");
            q = mpq_class(mpz_class(n), den);
            q.canonicalize();
        }
    } catch (const std::invalid_argument&) {
        throw Error(ErrorKind::ParseError, "bad scalar literal '" + s + "'");
    }
    return from_mpq(field, q);
}

bool Scalar::is_zero() const noexcept {
    if (auto r = std::get_if<std::uint64_t>(&value_)) return *r == 0;
    return sgn(std::get<mpq_class>(value_)) == 0;
}

bool Scalar::is_one() const noexcept {
    if (auto r = std::get_if<std::uint64_t>(&value_)) return *r == 1;
    return std::get<mpq_class>(value_) == 1;
}

std::uint64_t Scalar::residue() const {
    if (auto r = std::get_if<std::uint64_t>(&value_)) return *r;
    throw Error(ErrorKind::FieldMismatch, "residue() on a rational scalar");
}

const mpq_class& Scalar::rational() const {
    if (auto q = std::get_if<mpq_class>(&value_)) return *q;
    throw Error(ErrorKind::FieldMismatch, "rational() on a prime-field scalar");
}

void Scalar::require_same_field(const Scalar& rhs) const {
    if (!(field_ == rhs.field_))
        throw Error(ErrorKind::FieldMismatch, field_.to_string() + " vs " + rhs.field_.to_string());
}

Scalar Scalar::operator-() const {
    if (auto r = std::get_if<std::uint64_t>(&value_))
        return Scalar(field_, *r == 0 ? 0 : field_.modulus() - *r);
    return Scalar(field_, mpq_class(-std::get<mpq_class>(value_)));
}

Scalar Scalar::inv() const {
    if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
    if (auto r = std::get_if<std::uint64_t>(&value_)) return Scalar(field_, mod_inv(*r, field_.modulus()));
    mpq_class q = 1 / std::get<mpq_class>(value_);
    q.canonicalize();
    return Scalar(field_, std::move(q));
}

Scalar Scalar::pow(long long exponent) const {
    if (exponent < 0) return inv().pow(-exponent);
    if (auto r = std::get_if<std::uint64_t>(&value_))
        return Scalar(field_, mod_pow(*r, static_cast<std::uint64_t>(exponent), field_.modulus()));
    const mpq_class& q = std::get<mpq_class>(value_);
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), q.get_num_mpz_t(), static_cast<unsigned long>(exponent));
    mpz_pow_ui(d.get_mpz_t(), q.get_den_mpz_t(), static_cast<unsigned long>(exponent));
    return Scalar(field_, mpq_class(n, d));
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
    require_same_field(rhs);
    if (auto r = std::get_if<std::uint64_t>(&value_)) {
        std::uint64_t s = *r + std::get<std::uint64_t>(rhs.value_);
        *r = s >= field_.modulus() ? s - field_.modulus() : s;
    } else {
        std::get<mpq_class>(value_) += std::get<mpq_class>(rhs.value_);
    }
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
    require_same_field(rhs);
    if (auto r = std::get_if<std::uint64_t>(&value_)) {
        std::uint64_t b = std::get<std::uint64_t>(rhs.value_);
        *r = *r >= b ? *r - b : *r + field_.modulus() - b;
    } else {
        std::get<mpq_class>(value_) -= std::get<mpq_class>(rhs.value_);
    }
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
    require_same_field(rhs);
    if (auto r = std::get_if<std::uint64_t>(&value_))
        *r = mod_mul(*r, std::get<std::uint64_t>(rhs.value_), field_.modulus());
    else
        std::get<mpq_class>(value_) *= std::get<mpq_class>(rhs.value_);
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
    require_same_field(rhs);
    if (rhs.is_zero()) throw Error(ErrorKind::DivisionByZero, "division by zero");
    if (auto r = std::get_if<std::uint64_t>(&value_))
        *r = mod_mul(*r, mod_inv(std::get<std::uint64_t>(rhs.value_), field_.modulus()), field_.modulus());
    else
        std::get<mpq_class>(value_) /= std::get<mpq_class>(rhs.value_);
    return *this;
}

bool operator==(const Scalar& a, const Scalar& b) {
    return a.field_ == b.field_ && a.value_ == b.value_;
}

std::string Scalar::to_string() const {
    if (auto r = std::get_if<std::uint64_t>(&value_)) return std::to_string(*r);
    return std::get<mpq_class>(value_).get_str();
}

Scalar field_arith(FieldOp op, const Scalar& a, const Scalar& b) {
    switch (op) {
        case FieldOp::Add: return a + b;
        case FieldOp::Sub: return a - b;
        case FieldOp::Mul: return a * b;
        case FieldOp::Div: return a / b;
        case FieldOp::Inv: return a.inv();
        case FieldOp::Neg: return -a;
    }
    return a;
}

std::vector<Scalar> enumerate_field(const Field& field) {
    if (!field.is_prime()) throw Error(ErrorKind::InfiniteField, "cannot enumerate " + field.to_string());
    std::vector<Scalar> out;
    out.reserve(field.modulus());
    for (std::uint64_t i = 0; i < field.modulus(); ++i) out.push_back(Scalar::from_residue(field, i));
    return out;
}

}  // namespace planecomp
