#include "planecomp/verify.hpp"

#include "planecomp/error.hpp"

namespace planecomp {

std::pair<MultiPoly, unsigned> strip_factor(const MultiPoly& p, const MultiPoly& f, unsigned limit) {
    MultiPoly rest = p;
    unsigned count = 0;
    while (count < limit && !rest.is_zero()) {
        auto q = divexact(rest, f);
        if (!q) break;
        rest = std::move(*q);
        ++count;
    }
    return {rest, count};
}

namespace {

std::optional<unsigned> pure_power(const MultiPoly& base, const MultiPoly& f) {
    auto [rest, k] = strip_factor(base, f);
    if (k > 0 && rest.is_constant()) return k;
    return std::nullopt;
}

void require_nonconstant(const MultiPoly& f) {
    if (f.is_constant()) throw Error(ErrorKind::ConstantDivisor, "localisation at a constant");
}

bool small_enough_for_gcd(const MultiPoly& a) { return a.size() <= 400 && a.total_degree() <= 40; }

// Least n with den | num * f^n by a linear scan.
std::optional<unsigned> scan_member(const MultiPoly& num, const MultiPoly& den, const MultiPoly& f) {
    unsigned bound = static_cast<unsigned>(std::max(den.total_degree(), 0));
    MultiPoly cur = num;
    for (unsigned n = 0; n <= bound; ++n) {
        if (divexact(cur, den)) return n;
        cur = cur * f;
    }
    return std::nullopt;
}

std::optional<unsigned> member_exponent(const RationalFunction& r, const MultiPoly& f) {
    if (r.is_polynomial()) return 0u;
    unsigned total = 0;
    bool pure = true;
    for (const auto& fac : r.factors()) {
        auto k = pure_power(fac.base, f);
        if (!k) {
            pure = false;
            break;
        }
        total += *k * fac.exp;
    }
    if (pure) return total - strip_factor(r.num(), f, total).second;

    const MultiPoly& num = r.num();
    const MultiPoly& den = r.den();
    if (!(small_enough_for_gcd(num) && small_enough_for_gcd(den))) return scan_member(num, den, f);
    MultiPoly d = *divexact(den, poly_gcd(num, den));
    unsigned n = 0;
    while (!d.is_constant()) {
        if (auto q = divexact(d, f)) {
            d = std::move(*q);
        } else {
            MultiPoly g = poly_gcd(d, f);
            if (g.is_constant()) return std::nullopt;
            d = *divexact(d, g);
        }
        ++n;
    }
    return n;
}

}  // namespace

std::optional<unsigned> localization_member(const RationalFunction& h, const MultiPoly& f_in) {
    require_nonconstant(f_in);
    MultiPoly f = f_in.embed(h.vars().union_with(f_in.vars()));
    RationalFunction r = reduce(h.embed(f.vars()));
    return member_exponent(r, f);
}

std::optional<LocalForm> localization_form(const RationalFunction& h, const MultiPoly& f_in) {
    require_nonconstant(f_in);
    MultiPoly f = f_in.embed(h.vars().union_with(f_in.vars()));
    RationalFunction r = reduce(h.embed(f.vars()));
    auto n = member_exponent(r, f);
    if (!n) return std::nullopt;
    auto q = divexact(r.num() * f.pow(*n), r.den());
    if (!q) return std::nullopt;
    return LocalForm{std::move(*q), *n};
}

std::optional<std::pair<Scalar, long long>> unit_form(const RationalFunction& h, const MultiPoly& f_in) {
    require_nonconstant(f_in);
    if (h.is_zero()) return std::nullopt;
    MultiPoly f = f_in.embed(h.vars().union_with(f_in.vars()));
    RationalFunction r = reduce(h.embed(f.vars()));
    auto [num_rest, a] = strip_factor(r.num(), f);
    long long b = 0;
    MultiPoly den_rest = MultiPoly::constant(f.field(), f.vars(), 1);
    bool pure = true;
    for (const auto& fac : r.factors()) {
        auto [rest, k] = strip_factor(fac.base, f);
        if (k == 0 || !rest.is_constant()) {
            pure = false;
            break;
        }
        b += static_cast<long long>(k) * fac.exp;
        den_rest = den_rest * rest.pow(fac.exp);
    }
    if (!pure) {
        auto [rest, count] = strip_factor(r.den(), f);
        den_rest = std::move(rest);
        b = count;
    }
    auto lambda = num_rest.proportional_to(den_rest);
    if (!lambda) return std::nullopt;
    long long n = static_cast<long long>(a) - b;
    // replay: num == lambda * f^n * den, moving negative powers across
    bool ok = n >= 0 ? r.num() == r.den() * f.pow(static_cast<unsigned>(n)).scaled(*lambda)
                     : r.num() * f.pow(static_cast<unsigned>(-n)) == r.den().scaled(*lambda);
    if (!ok) return std::nullopt;
    return std::make_pair(*lambda, n);
}

// ---------------------------------------------------------------------------

namespace {

std::optional<MultiPoly> identity_residual(const std::vector<RationalFunction>& comps, const VarSet& vars,
                                           const Field& field) {
    for (std::size_t i = 0; i < comps.size(); ++i) {
        RationalFunction r = reduce(comps[i]);
        MultiPoly xi = MultiPoly::variable(field, r.vars(), vars[i]);
        MultiPoly residual = r.num() - xi * r.den();
        if (!residual.is_zero()) return residual;
    }
    return std::nullopt;
}

void add_inverse_checks(Certificate& cert, const BirationalMap& phi, const std::string& prefix) {
    if (!phi.has_inverse()) throw Error(ErrorKind::MissingInverse, "map has no claimed inverse");
    BirationalMap inv = phi.inverse();
    auto record = [&](const std::string& name, const BirationalMap& composed) {
        auto residual = identity_residual(composed.components(), phi.vars(), phi.field());
        Witness w;
        w.residual = residual ? *residual : MultiPoly(phi.field(), phi.vars());
        cert.add(prefix + name, !residual, w);
    };
    record("phi o phi^-1 = id", compose(phi, inv));
    record("phi^-1 o phi = id", compose(inv, phi));
}

std::string coordinate_name(const VarSet& vars, std::size_t i) { return vars[i]; }

void add_membership(Certificate& cert, const std::string& name, const RationalFunction& h, const MultiPoly& f) {
    auto n = localization_member(h, f);
    Witness w;
    if (n) w.n = static_cast<long long>(*n);
    cert.add(name, n.has_value(), w);
}

void add_unit(Certificate& cert, const std::string& name, const RationalFunction& h, const MultiPoly& f) {
    auto u = unit_form(h, f);
    Witness w;
    bool ok = false;
    if (u) {
        w.lambda = u->first;
        w.n = u->second;
        ok = u->second == 1 || u->second == -1;
    }
    cert.add(name, ok, w);
}

}  // namespace

Certificate verify_inverse(const BirationalMap& phi) {
    Certificate cert;
    cert.construction = "verify_inverse";
    cert.field = phi.field();
    add_inverse_checks(cert, phi, "");
    return cert;
}

Certificate verify_inverse(const MapChain& chain) {
    Certificate cert;
    cert.construction = "verify_inverse";
    cert.field = chain.field();
    for (std::size_t i = 0; i < chain.factors.size(); ++i)
        add_inverse_checks(cert, chain.factors[i], "factor " + std::to_string(i) + ": ");
    return cert;
}

Certificate verify_complement_iso(const MapChain& phi, const MultiPoly& f_in, const MultiPoly& g_in) {
    if (phi.factors.empty()) throw Error(ErrorKind::PreconditionViolated, "empty map chain");
    if (phi.dim() != 2) throw Error(ErrorKind::DimensionMismatch, "affine verification needs a map of A^2");
    for (const auto& fac : phi.factors)
        if (!fac.has_inverse()) throw Error(ErrorKind::MissingInverse, "map has no claimed inverse");
    MultiPoly f = f_in.restrict_to(phi.vars());
    MultiPoly g = g_in.restrict_to(phi.vars());
    if (f.is_constant() || g.is_constant()) throw Error(ErrorKind::ConstantDivisor, "curve equation is constant");
    Certificate cert;
    cert.construction = "verify_complement_iso";
    cert.field = phi.field();
    cert.input = Json{{"f", format_poly(f)}, {"g", format_poly(g)}};
    if (phi.factors.size() == 1) {
        add_inverse_checks(cert, phi.factors[0], "");
    } else {
        for (std::size_t i = 0; i < phi.factors.size(); ++i)
            add_inverse_checks(cert, phi.factors[i], "factor " + std::to_string(i) + ": ");
    }
    MapChain inv = phi.inverse();
    auto coords = coordinates(phi.field(), phi.vars());
    const VarSet& v = phi.vars();
    for (std::size_t i = 0; i < 2; ++i)
        add_membership(cert, "phi^*(" + coordinate_name(v, i) + ") in k[x,y,1/f]", phi.pullback(coords[i]), f);
    for (std::size_t i = 0; i < 2; ++i)
        add_membership(cert, "(phi^-1)^*(" + coordinate_name(v, i) + ") in k[x,y,1/g]", inv.pullback(coords[i]), g);
    add_unit(cert, "phi^*(g) = lambda f^(+-1)", phi.pullback(g), f);
    cert.notes.push_back("irreducibility of f and g is assumed, not verified");
    return cert;
}

Certificate verify_complement_iso(const BirationalMap& phi, const MultiPoly& f, const MultiPoly& g) {
    return verify_complement_iso(MapChain{{phi}}, f, g);
}

bool degree_one_homogeneous(const RationalFunction& h) {
    if (!h.num().is_homogeneous()) return false;
    long long deg = h.num().is_zero() ? 1 : h.num().total_degree();
    for (const auto& fac : h.factors()) {
        if (!fac.base.is_homogeneous()) return false;
        deg -= static_cast<long long>(fac.base.total_degree()) * fac.exp;
    }
    return deg == 1;
}

Certificate verify_cone_complement_iso(const MapChain& kappa, const MultiPoly& f_in, const MultiPoly& g_in) {
    if (kappa.factors.empty()) throw Error(ErrorKind::PreconditionViolated, "empty map chain");
    if (kappa.dim() != 3) throw Error(ErrorKind::DimensionMismatch, "cone verification needs a map of A^3");
    MultiPoly f = f_in.restrict_to(kappa.vars());
    MultiPoly g = g_in.restrict_to(kappa.vars());
    if (!f.is_homogeneous() || !g.is_homogeneous())
        throw Error(ErrorKind::NotHomogeneous, "curve equations must be homogeneous");
    if (f.is_constant() || g.is_constant()) throw Error(ErrorKind::ConstantDivisor, "curve equation is constant");
    Certificate cert;
    cert.construction = "verify_cone_complement_iso";
    cert.field = kappa.field();
    cert.input = Json{{"f", format_poly(f)}, {"g", format_poly(g)}, {"factors", kappa.factors.size()}};

    for (std::size_t i = 0; i < kappa.factors.size(); ++i) {
        const auto& fac = kappa.factors[i];
        if (!fac.has_inverse()) throw Error(ErrorKind::MissingInverse, "chain factor without inverse");
        for (const auto* comps : {&fac.components(), &*fac.inverse_components()})
            for (const auto& c : *comps)
                if (!degree_one_homogeneous(c))
                    throw Error(ErrorKind::NotHomogeneous,
                                "factor " + std::to_string(i) + " has a component that is not homogeneous of degree 1");
    }
    cert.add("homogeneous degree-1 components", true);
    for (std::size_t i = 0; i < kappa.factors.size(); ++i)
        add_inverse_checks(cert, kappa.factors[i], "factor " + std::to_string(i) + ": ");

    MapChain inv = kappa.inverse();
    auto coords = coordinates(kappa.field(), kappa.vars());
    const VarSet& v = kappa.vars();
    for (std::size_t i = 0; i < 3; ++i)
        add_membership(cert, "kappa^*(" + coordinate_name(v, i) + ") in k[x,y,z,1/f]", kappa.pullback(coords[i]), f);
    for (std::size_t i = 0; i < 3; ++i)
        add_membership(cert, "(kappa^-1)^*(" + coordinate_name(v, i) + ") in k[x,y,z,1/g]", inv.pullback(coords[i]), g);
    add_unit(cert, "kappa^*(g) = lambda f^(+-1)", kappa.pullback(g), f);
    return cert;
}

Certificate verify_cone_complement_iso(const BirationalMap& kappa, const MultiPoly& f, const MultiPoly& g) {
    return verify_cone_complement_iso(MapChain{{kappa}}, f, g);
}

// ---------------------------------------------------------------------------

namespace {

std::vector<MultiPoly> polynomial_triple(const std::vector<RationalFunction>& comps) {
    // clear a common denominator: s_i = num_i * (D / den_i)
    MultiPoly common = MultiPoly::constant(comps[0].field(), comps[0].vars(), 1);
    for (const auto& c : comps)
        if (!c.is_polynomial()) common = common * c.den();
    std::vector<MultiPoly> out;
    for (const auto& c : comps) out.push_back(c.num() * *divexact(common, c.den()));
    MultiPoly g = poly_gcd(poly_gcd(out[0], out[1]), out[2]);
    if (!g.is_constant())
        for (auto& s : out) s = *divexact(s, g);
    return out;
}

}  // namespace

MultiPoly contracted_curves(const BirationalMap& phi) {
    if (phi.dim() != 3) throw Error(ErrorKind::DimensionMismatch, "contracted curves need a map of P^2");
    if (!phi.has_inverse()) throw Error(ErrorKind::MissingInverse, "map has no claimed inverse");
    std::vector<MultiPoly> s, q;
    for (const auto& c : phi.components()) s.push_back(c.num());
    for (const auto& c : *phi.inverse_components()) q.push_back(c.num());
    bool polynomial = true;
    for (const auto& c : phi.components()) polynomial = polynomial && c.is_polynomial();
    for (const auto& c : *phi.inverse_components()) polynomial = polynomial && c.is_polynomial();
    if (!polynomial) {
        s = polynomial_triple(phi.components());
        q = polynomial_triple(*phi.inverse_components());
    }
    for (const auto* triple : {&s, &q}) {
        const auto& t = *triple;
        if (!t[0].is_homogeneous() || !t[1].is_homogeneous() || !t[2].is_homogeneous() ||
            t[0].total_degree() != t[1].total_degree() || t[1].total_degree() != t[2].total_degree())
            throw Error(ErrorKind::NotHomogeneous, "components must be homogeneous of one degree");
        if (!poly_gcd(poly_gcd(t[0], t[1]), t[2]).is_constant())
            throw Error(ErrorKind::PreconditionViolated, "components are not coprime");
    }
    const VarSet& vars = phi.vars();
    std::optional<MultiPoly> f;
    for (std::size_t i = 0; i < 3; ++i) {
        MultiPoly qs = compose_poly(q[i], s);
        auto quotient = divexact(qs, MultiPoly::variable(phi.field(), qs.vars(), vars[i]));
        if (!quotient) throw Error(ErrorKind::InconsistentQuotients, "q_" + std::to_string(i) + "(s) is not divisible by " + vars[i]);
        if (f && !(*f == *quotient)) throw Error(ErrorKind::InconsistentQuotients, "quotients q_i(s)/x_i differ");
        f = std::move(*quotient);
    }
    return *f;
}

}  // namespace planecomp
