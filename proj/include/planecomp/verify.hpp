#pragma once

#include <optional>
#include <utility>

#include "planecomp/birational_map.hpp"
#include "planecomp/certificate.hpp"

namespace planecomp {

/// Checks phi o phi^-1 and phi^-1 o phi against the identity by
/// cross-multiplication; residuals num - x_i*den are recorded.
Certificate verify_inverse(const BirationalMap& phi);
/// Factor-by-factor form for maps kept as a chain.
Certificate verify_inverse(const MapChain& chain);

/// h = q / f^n with n least; q is a polynomial.
struct LocalForm {
    MultiPoly q;
    unsigned n = 0;
};

/// Least n <= deg(den h) with den(h) | num(h)*f^n, or nullopt when h is not
/// in k[vars, 1/f]. Throws ConstantDivisor for constant f.
std::optional<unsigned> localization_member(const RationalFunction& h, const MultiPoly& f);
std::optional<LocalForm> localization_form(const RationalFunction& h, const MultiPoly& f);

/// (lambda, n) with h = lambda * f^n, or nullopt. Throws ConstantDivisor.
std::optional<std::pair<Scalar, long long>> unit_form(const RationalFunction& h, const MultiPoly& f);

/// Affine certificate that phi restricts to A^2 - {f=0} -> A^2 - {g=0}
/// isomorphically. Mathematical failures give a failing certificate.
Certificate verify_complement_iso(const BirationalMap& phi, const MultiPoly& f, const MultiPoly& g);
/// Chain form: inverses are checked factor by factor and pullbacks are
/// reduced after every factor.
Certificate verify_complement_iso(const MapChain& phi, const MultiPoly& f, const MultiPoly& g);

/// The same three-part check on the cone in A^3, plus degree bookkeeping.
/// Throws NotHomogeneous on non-homogeneous input.
Certificate verify_cone_complement_iso(const MapChain& kappa, const MultiPoly& f, const MultiPoly& g);
Certificate verify_cone_complement_iso(const BirationalMap& kappa, const MultiPoly& f, const MultiPoly& g);

/// Equation f of the contracted curves: q_i(s) = x_i * f for the polynomial
/// triples s and q of a birational map of P^2 and its inverse.
MultiPoly contracted_curves(const BirationalMap& phi);

/// Helpers shared with the constructions.
std::pair<MultiPoly, unsigned> strip_factor(const MultiPoly& p, const MultiPoly& f, unsigned limit = ~0u);
/// Checks that every component is homogeneous of degree one as a fraction.
bool degree_one_homogeneous(const RationalFunction& h);

}  // namespace planecomp
