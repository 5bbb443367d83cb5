#pragma once

#include <optional>
#include <span>
#include <vector>

#include "planecomp/poly.hpp"

namespace planecomp {

struct DenFactor {
    MultiPoly base;  // monic, nonconstant
    unsigned exp = 0;
};

/// num / den with the denominator kept as a product of powers of monic
/// bases. Bases are not required to be irreducible or pairwise coprime and
/// the fraction is not required to be reduced; equality is decided by
/// cross-multiplication.
class RationalFunction {
public:
    RationalFunction() = default;
    explicit RationalFunction(MultiPoly num);
    /// Throws DenominatorIdenticallyZero when den == 0.
    RationalFunction(MultiPoly num, const MultiPoly& den);

    /// Builds from an explicit factor list; constant or repeated bases are
    /// merged and normalised.
    static RationalFunction from_factors(MultiPoly num, std::vector<DenFactor> factors);

    const MultiPoly& num() const noexcept { return num_; }
    const std::vector<DenFactor>& factors() const noexcept { return factors_; }
    /// Expanded denominator (cached).
    const MultiPoly& den() const;

    const Field& field() const noexcept { return num_.field(); }
    const VarSet& vars() const noexcept { return num_.vars(); }
    bool is_polynomial() const noexcept { return factors_.empty(); }
    bool is_zero() const noexcept { return num_.is_zero(); }

    RationalFunction embed(const VarSet& vars) const;

    RationalFunction operator-() const;
    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);

    /// 1/h; the old numerator is split against `hints` (and monomials) to
    /// seed the new factor list. Throws DivisionByZero when h == 0.
    RationalFunction inverse(std::span<const MultiPoly> hints = {}) const;

    /// num*b.den == b.num*den.
    bool equals(const RationalFunction& other) const;
    bool equals(const MultiPoly& p) const;

    /// Value at a point, or nullopt where the denominator vanishes.
    std::optional<Scalar> evaluate(std::span<const Scalar> point) const;

private:
    MultiPoly num_;
    std::vector<DenFactor> factors_;
    mutable std::optional<MultiPoly> den_cache_;
};

/// Splits p as c * prod base^exp, peeling monomial content and then each
/// hint by repeated exact division; the leftover becomes one monic base.
struct Split {
    Scalar constant;
    std::vector<DenFactor> factors;
};
Split split_with_hints(const MultiPoly& p, std::span<const MultiPoly> hints);

/// Cancels common factors: trial division of the numerator by every base,
/// then gcd-based cancellation for bases small enough to afford it. The
/// result is equal to the input under cross-multiplication.
RationalFunction reduce(const RationalFunction& h);

/// f(values[0], values[1], ...), one value per variable of f in VarSet order.
/// The denominator is the least product of value-denominator powers needed
/// term by term; nothing is cancelled.
RationalFunction substitute(const MultiPoly& f, std::span<const RationalFunction> values);

/// h(values): substitutes into numerator and each denominator base. Bases of
/// the substituted denominator are seeded from the values' bases and h's
/// own bases. Throws DenominatorIdenticallyZero.
RationalFunction substitute(const RationalFunction& h, std::span<const RationalFunction> values);

}  // namespace planecomp
