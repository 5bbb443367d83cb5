#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "planecomp/field.hpp"

namespace planecomp {

inline constexpr std::size_t kMaxVars = 8;

/// Ordered list of distinct variable names. The order fixes both the exponent
/// layout and the lexicographic monomial order. Copies share storage.
class VarSet {
public:
    VarSet();
    VarSet(std::initializer_list<std::string> names);
    explicit VarSet(std::vector<std::string> names);

    std::size_t size() const noexcept { return names_->size(); }
    const std::string& operator[](std::size_t i) const { return (*names_)[i]; }
    const std::vector<std::string>& names() const noexcept { return *names_; }
    std::optional<std::size_t> index_of(std::string_view name) const noexcept;
    std::size_t require_index(std::string_view name) const;

    /// Variables of *this followed by the new ones of `other`.
    VarSet union_with(const VarSet& other) const;

    friend bool operator==(const VarSet& a, const VarSet& b) noexcept;

private:
    std::shared_ptr<const std::vector<std::string>> names_;
};

struct Monomial {
    std::array<std::uint16_t, kMaxVars> exps{};

    unsigned total_degree() const noexcept;
    bool divides(const Monomial& other) const noexcept;
    bool is_one() const noexcept;

    friend auto operator<=>(const Monomial&, const Monomial&) = default;
    friend bool operator==(const Monomial&, const Monomial&) = default;
};

Monomial operator*(const Monomial& a, const Monomial& b);
/// a / b; requires b.divides(a).
Monomial operator/(const Monomial& a, const Monomial& b) noexcept;

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const noexcept;
};

struct Term {
    Monomial mono;
    Scalar coeff;
};

/// Sparse multivariate polynomial over a Field.
///
/// Terms are kept sorted in strictly decreasing lexicographic order with no
/// zero coefficients; the zero polynomial has no terms. Binary operations on
/// polynomials over different VarSets first embed both into the union.
class MultiPoly {
public:
    MultiPoly() = default;  // zero over Q with no variables
    MultiPoly(Field field, VarSet vars) : field_(field), vars_(std::move(vars)) {}

    static MultiPoly constant(const Field& field, const VarSet& vars, const Scalar& value);
    static MultiPoly constant(const Field& field, const VarSet& vars, long long value);
    static MultiPoly variable(const Field& field, const VarSet& vars, std::string_view name);
    static MultiPoly monomial(const Field& field, const VarSet& vars, const Monomial& mono, const Scalar& coeff);
    /// Sorts and merges arbitrary terms, dropping zeros.
    static MultiPoly from_terms(const Field& field, const VarSet& vars, std::vector<Term> terms);

    const Field& field() const noexcept { return field_; }
    const VarSet& vars() const noexcept { return vars_; }
    const std::vector<Term>& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }

    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const noexcept;
    bool is_one() const noexcept;
    /// Constant term value (zero if absent).
    Scalar constant_term() const;

    /// Total degree; -1 for the zero polynomial.
    int total_degree() const noexcept;
    int degree_in(std::size_t var) const noexcept;
    int degree_in(std::string_view var) const;
    bool involves(std::size_t var) const noexcept { return degree_in(var) > 0; }
    bool is_homogeneous() const noexcept;

    const Term& leading_term() const;
    const Scalar& leading_coeff() const { return leading_term().coeff; }

    MultiPoly operator-() const;
    MultiPoly& operator+=(const MultiPoly& rhs);
    MultiPoly& operator-=(const MultiPoly& rhs);
    MultiPoly& operator*=(const MultiPoly& rhs);

    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);

    MultiPoly scaled(const Scalar& s) const;
    MultiPoly times_monomial(const Monomial& m, const Scalar& c) const;
    MultiPoly pow(unsigned exponent) const;
    /// Divides by the leading coefficient (zero stays zero).
    MultiPoly monic() const;

    /// Re-expresses over a superset of the current variables.
    MultiPoly embed(const VarSet& target) const;
    /// Drops unused variables' slots by mapping to `target`, which must
    /// contain every variable that actually occurs.
    MultiPoly restrict_to(const VarSet& target) const;

    Scalar evaluate(std::span<const Scalar> point) const;
    /// Substitutes a constant for one variable, keeping the VarSet.
    MultiPoly evaluate_at(std::size_t var, const Scalar& value) const;
    MultiPoly derivative(std::size_t var) const;

    /// Scalar c with *this == c * other, if one exists.
    std::optional<Scalar> proportional_to(const MultiPoly& other) const;

    friend bool operator==(const MultiPoly& a, const MultiPoly& b);

private:
    void require_compatible(const MultiPoly& rhs) const;

    Field field_;
    VarSet vars_;
    std::vector<Term> terms_;
};

/// Field- and VarSet-unifying conversion used by binary operations.
std::pair<MultiPoly, MultiPoly> unify(const MultiPoly& a, const MultiPoly& b);

enum class PolyOp { Add, Sub, Mul, Pow };

/// Dispatch form of ring arithmetic; for Pow the exponent is `exponent`.
MultiPoly poly_arith(PolyOp op, const MultiPoly& f, const MultiPoly& g, unsigned exponent = 0);

/// q with f == q * g, or nullopt. Greedy reduction of leading terms against
/// the single divisor g in lex order. Throws ZeroDivisor when g == 0.
std::optional<MultiPoly> divexact(const MultiPoly& f, const MultiPoly& g);

// ---- univariate operations (in `var`, all other variables absent) ---------

struct DivMod {
    MultiPoly quotient;
    MultiPoly remainder;
};

DivMod uni_divmod(const MultiPoly& f, const MultiPoly& g, std::string_view var);

struct ExtGcd {
    MultiPoly gcd;  // monic
    MultiPoly s;    // s*f + u*g == gcd
    MultiPoly u;
};

ExtGcd uni_ext_gcd(const MultiPoly& f, const MultiPoly& g, std::string_view var);

/// Q(t) = P(lambda + 1/t) * t^deg(P). Throws RootAtLambda if P(lambda) == 0.
MultiPoly q_from_p(const MultiPoly& p, const Scalar& lambda, std::string_view var);

enum class Squarefree { Yes, No, NotDecidable };
const char* to_string(Squarefree s) noexcept;

/// gcd(P, P') == 1; NotDecidable when P' vanishes identically (char p).
Squarefree is_squarefree(const MultiPoly& p, std::string_view var);

/// Exhaustive trial factorisation over a prime field. Univariate or
/// bivariate input, total degree at most the configured bound.
bool irreducible_over_Fq(const MultiPoly& f, const Field& field);

// ---- multivariate gcd -----------------------------------------------------

/// Monic (lex leading coefficient one) gcd via content extraction and a
/// primitive remainder sequence in a chosen main variable.
MultiPoly poly_gcd(const MultiPoly& a, const MultiPoly& b);

/// Coefficients of f viewed as a polynomial in `var`; entry k multiplies
/// var^k. Coefficients keep the full VarSet.
std::vector<MultiPoly> coefficients_in(const MultiPoly& f, std::size_t var);
MultiPoly from_coefficients(const std::vector<MultiPoly>& coeffs, std::size_t var,
                            const Field& field, const VarSet& vars);

/// Substitutes polynomials for every variable (polynomial composition).
/// `values[i]` replaces variable i of f; all values share one VarSet.
MultiPoly compose_poly(const MultiPoly& f, std::span<const MultiPoly> values);

}  // namespace planecomp
