#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "planecomp/poly_io.hpp"

namespace planecomp {

/// [u : v], not both zero. Equality is up to a nonzero scalar.
struct ProjPoint {
    Scalar u, v;

    static ProjPoint affine(const Scalar& t);
    static ProjPoint infinity(const Field& field);
    bool is_infinity() const { return v.is_zero(); }
    /// (t, 1) or (1, 0).
    ProjPoint normalized() const;
    std::string to_string() const;
    friend bool operator==(const ProjPoint& a, const ProjPoint& b);
};

/// [u : v] -> [a u + b v : c u + d v].
class MobiusTransform {
public:
    MobiusTransform(Scalar a, Scalar b, Scalar c, Scalar d);
    static MobiusTransform identity(const Field& field);

    const Scalar& a() const noexcept { return m_[0]; }
    const Scalar& b() const noexcept { return m_[1]; }
    const Scalar& c() const noexcept { return m_[2]; }
    const Scalar& d() const noexcept { return m_[3]; }
    Scalar det() const { return m_[0] * m_[3] - m_[1] * m_[2]; }

    ProjPoint apply(const ProjPoint& p) const;
    MobiusTransform inverse() const;
    /// (this o other)
    MobiusTransform compose(const MobiusTransform& other) const;
    /// Scaled so the first nonzero entry is one.
    MobiusTransform normalized() const;

    Json to_json() const;
    friend bool operator==(const MobiusTransform& s, const MobiusTransform& t);

private:
    std::array<Scalar, 4> m_;
};

/// Binary form sum c[i] u^i v^(n-i), n = c.size() - 1.
struct BinaryForm {
    std::vector<Scalar> c;
    unsigned degree() const { return static_cast<unsigned>(c.size() - 1); }
};

/// v * P_h(u, v) with P_h the degree-deg(P) homogenisation of a univariate P.
BinaryForm v_homogenize(const MultiPoly& p);
/// F(a u + b v, c u + d v).
BinaryForm act(const BinaryForm& f, const MobiusTransform& s);
bool proportional(const BinaryForm& f, const BinaryForm& g);

/// The unique transform with src[i] -> dst[i]. Throws DegenerateTriple.
MobiusTransform mobius_from_triples(const std::array<ProjPoint, 3>& src, const std::array<ProjPoint, 3>& dst);

struct OrbitResult {
    std::optional<MobiusTransform> witness;
    std::uint64_t candidates_tested = 0;
};

/// sigma with sigma(S) = T as sets, or none. Throws TooFewPoints.
OrbitResult pgl2_orbit_test(const std::vector<ProjPoint>& S, const std::vector<ProjPoint>& T);

enum class Decision { Equivalent, NotEquivalent, Undecided };
const char* to_string(Decision d) noexcept;

struct IsoResult {
    Decision decision = Decision::Undecided;
    std::optional<MobiusTransform> witness;
    std::uint64_t candidates_tested = 0;
    std::string reason;

    Json to_json() const;
};

/// Decides k[t, 1/P] = k[t, 1/Q] through sigma in PGL2(k) with
/// (v P_h) o sigma proportional to v Q_h. Exhaustive over F_q (q <= 31);
/// over Q only when both sides split into rational linear factors.
/// Throws NotSquarefree.
IsoResult spec_iso_test(const MultiPoly& P, const MultiPoly& Q, unsigned jobs = 1);

/// Distinct rational roots of a univariate polynomial over Q, ascending.
std::vector<Scalar> rational_roots(const MultiPoly& p);
/// Rational e-th roots of r (both signs when e is even).
std::vector<Scalar> rational_nth_roots(const Scalar& r, unsigned e);

struct SectionWitness {
    Scalar alpha, beta, lambda, mu;
};

struct SectionResult {
    std::optional<SectionWitness> witness;
    std::uint64_t candidates_tested = 0;
    std::string reason;

    Json to_json() const;
};

/// Searches a2(y) = lambda a1(alpha y + beta), b2(y) = mu b1(alpha y + beta).
/// Every returned witness has been replayed exactly.
SectionResult equiv_section_curves(const MultiPoly& a1, const MultiPoly& b1, const MultiPoly& a2,
                                   const MultiPoly& b2);

struct CostaWitness {
    Scalar rho, mu;
};

struct CostaResult {
    std::optional<CostaWitness> witness;
    std::uint64_t candidates_tested = 0;
    std::string reason;

    Json to_json() const;
};

/// Searches Pt(x, y) = rho P(rho^2 x, y) + mu y^d. Throws DegreeMismatch.
CostaResult costa_equiv_test(const MultiPoly& P, const MultiPoly& Pt);

}  // namespace planecomp
