#pragma once

#include <string>
#include <vector>

#include "planecomp/birational_map.hpp"
#include "planecomp/certificate.hpp"

namespace planecomp {

/// Two curves with isomorphic complements, the isomorphism C -> D side
/// (kept as a chain of factors) and the certificate that checked it.
struct CurvePair {
    std::string construction;
    Json parameters = Json::object();
    MultiPoly C;
    MultiPoly D;
    MapChain iso;
    bool projective = false;
    Certificate certificate;
    std::vector<std::string> warnings;

    Json to_json() const;
};

Json map_to_json(const BirationalMap& m);
Json chain_to_json(const MapChain& chain);
BirationalMap map_from_json(const Json& j);
/// Accepts a single map object or {"factors": [...]}.
MapChain chain_from_json(const Json& j);

struct SL2MatrixPoly {
    MultiPoly a, b, c, d;  // univariate in y
};

/// C: a x + b = 0, D: a x - c = 0, iso (x,y) -> ((c x + d)/(a x + b), y).
CurvePair sl2_pair(const SL2MatrixPoly& m);

/// f^n d - b c = 1 with deg c < deg f^n, then sl2_pair on ((f^n, b), (c, d)).
CurvePair prop_negativity3(const MultiPoly& f, const MultiPoly& b, unsigned n);

/// (x,y) -> (x y^d + b(y), y) with inverse ((x - b(y))/y^d, y).
BirationalMap phi_b(const MultiPoly& b, unsigned d);
/// (x,y) -> (x, x^m y) with inverse (x, y/x^m).
BirationalMap tau_power(const Field& field, unsigned m);

/// The c of degree < d with b(y) = c(y b(y)^m) mod y^d.
MultiPoly c_from_b(const MultiPoly& b, unsigned d, unsigned m);

/// C: x y^d + b = 0, D: x y^d + c = 0 with iso (phi_c)^-1 tau^m phi_b.
CurvePair psi_bm(const MultiPoly& b, unsigned d, unsigned m);

/// psi_bm(mu y^2 + y + 1, 3, 1).
CurvePair family_char0(const Scalar& mu);

/// C_i: x y^d + c_i = 0 against the shared D: x y^d + 1 + y = 0 with
/// d = p^n + 2 and m = p^i, i = 1..n.
std::vector<CurvePair> family_charp(std::uint64_t p, unsigned n);

/// The degree-7 pair attached to a0 + a1 t + a2 t^2 + a3 t^3.
CurvePair degree7_pair(const Scalar& a0, const Scalar& a1, const Scalar& a2, const Scalar& a3);

/// (x,y) -> (lambda x^sign, mu x^n y + s) with s a Laurent polynomial in x
/// given as a rational function whose denominator is a power of x.
BirationalMap line_complement_aut(const Scalar& lambda, int sign, long long n, const RationalFunction& s,
                                  const Scalar& mu);
CurvePair line_complement_pair(const Scalar& lambda, int sign, long long n, const RationalFunction& s,
                               const Scalar& mu);

/// f_P = z w^(2d) + 2 y w^d P(x^2, w) + x P(x^2, w)^2 with w = x z - y^2.
MultiPoly costa_curve(const MultiPoly& P);
/// The cone map psi_P fixing x and w = x z - y^2, inverse psi_{-P}.
BirationalMap costa_psi(const MultiPoly& P);
/// (x,y,z) -> ((lambda x z - (lambda-1) y^2)/z, y, z), inverse phi_{1/lambda}.
BirationalMap costa_phi(const Field& field, const Scalar& lambda);
/// (C_P, C_P~) with P~ = P(lambda x, y) and kappa = psi_P~^-1 phi_lambda psi_P.
CurvePair costa_kappa(const MultiPoly& P, const Scalar& lambda);

/// Second component of psi_{b,n} o psi_{b,m}^-1 (n < m), reduced. It equals
/// y/(x y^d + c_m)^(m-n), so it is not a polynomial.
RationalFunction embedding_theta_second(const MultiPoly& b, unsigned d, unsigned n, unsigned m);

/// Renames the single variable of a univariate polynomial to `name`.
MultiPoly as_univariate(const MultiPoly& p, const std::string& name);

}  // namespace planecomp
