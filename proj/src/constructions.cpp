#include "planecomp/constructions.hpp"

#include "planecomp/config.hpp"
#include "planecomp/error.hpp"
#include "planecomp/verify.hpp"

namespace planecomp {

namespace {

const VarSet& xy() {
    static const VarSet v{"x", "y"};
    return v;
}

const VarSet& xyz() {
    static const VarSet v{"x", "y", "z"};
    return v;
}

MultiPoly var(const Field& k, const VarSet& vars, const char* name) { return MultiPoly::variable(k, vars, name); }
MultiPoly cst(const Field& k, const VarSet& vars, const Scalar& c) { return MultiPoly::constant(k, vars, c); }
MultiPoly cst(const Field& k, const VarSet& vars, long long c) { return MultiPoly::constant(k, vars, c); }

MultiPoly y_power(const Field& k, unsigned d) {
    Monomial m;
    m.exps[1] = static_cast<std::uint16_t>(d);
    return MultiPoly::monomial(k, xy(), m, Scalar::one(k));
}

RationalFunction rf_pow(const RationalFunction& h, long long n) {
    RationalFunction base = n >= 0 ? h : h.inverse();
    RationalFunction out(MultiPoly::constant(h.field(), h.vars(), 1));
    for (long long i = 0; i < (n >= 0 ? n : -n); ++i) out = out * base;
    return out;
}

Json witness_free(const Certificate& c) { return c.to_json(); }

}  // namespace

MultiPoly as_univariate(const MultiPoly& p, const std::string& name) {
    std::optional<std::size_t> used;
    for (std::size_t i = 0; i < p.vars().size(); ++i) {
        if (!p.involves(i)) continue;
        if (used) throw Error(ErrorKind::NotUnivariate, "more than one variable occurs");
        used = i;
    }
    VarSet target{name};
    std::vector<Term> terms;
    for (const auto& t : p.terms()) {
        Monomial m;
        if (used) m.exps[0] = t.mono.exps[*used];
        terms.push_back({m, t.coeff});
    }
    return MultiPoly::from_terms(p.field(), target, std::move(terms));
}

// ---- JSON -----------------------------------------------------------------

namespace {

Json components_json(const std::vector<RationalFunction>& comps) {
    Json arr = Json::array();
    for (const auto& c : comps) arr.push_back(Json{{"num", format_poly(c.num())}, {"den", format_poly(c.den())}});
    return arr;
}

std::vector<RationalFunction> components_from_json(const Json& arr, const Field& field, const VarSet& vars) {
    std::vector<RationalFunction> out;
    for (const auto& c : arr) {
        if (c.is_object() && c.contains("num")) {
            MultiPoly num = poly_from_any(c.at("num"), field, vars);
            MultiPoly den = c.contains("den") ? poly_from_any(c.at("den"), field, vars) : cst(field, vars, 1);
            out.emplace_back(num, den);
        } else {
            out.emplace_back(poly_from_any(c, field, vars));
        }
    }
    return out;
}

}  // namespace

Json map_to_json(const BirationalMap& m) {
    Json j;
    j["field"] = m.field().to_string();
    j["vars"] = m.vars().names();
    j["homogeneous"] = m.homogeneous();
    j["components"] = components_json(m.components());
    j["inverse"] = m.has_inverse() ? components_json(*m.inverse_components()) : Json(nullptr);
    return j;
}

Json chain_to_json(const MapChain& chain) {
    if (chain.factors.size() == 1) return map_to_json(chain.factors[0]);
    Json j;
    j["field"] = chain.field().to_string();
    j["vars"] = chain.vars().names();
    Json fs = Json::array();
    for (const auto& f : chain.factors) fs.push_back(map_to_json(f));
    j["factors"] = fs;
    return j;
}

BirationalMap map_from_json(const Json& j) {
    try {
        Field field = Field::parse(j.at("field").get<std::string>());
        VarSet vars(j.at("vars").get<std::vector<std::string>>());
        auto comps = components_from_json(j.at("components"), field, vars);
        std::optional<std::vector<RationalFunction>> inv;
        if (j.contains("inverse") && !j.at("inverse").is_null()) inv = components_from_json(j.at("inverse"), field, vars);
        bool homogeneous = j.contains("homogeneous") && j.at("homogeneous").get<bool>();
        return BirationalMap(std::move(comps), std::move(inv), homogeneous);
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::ParseError, std::string("bad map JSON: ") + e.what());
    }
}

MapChain chain_from_json(const Json& j) {
    try {
        if (!j.contains("factors")) return MapChain{{map_from_json(j)}};
        MapChain chain;
        for (auto f : j.at("factors")) {
            if (!f.contains("field") && j.contains("field")) f["field"] = j["field"];
            if (!f.contains("vars") && j.contains("vars")) f["vars"] = j["vars"];
            chain.factors.push_back(map_from_json(f));
        }
        if (chain.factors.empty()) throw Error(ErrorKind::ParseError, "empty factor list");
        return chain;
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::ParseError, std::string("bad map JSON: ") + e.what());
    }
}

Json CurvePair::to_json() const {
    Json j;
    j["construction"] = construction;
    j["parameters"] = parameters;
    j["field"] = C.field().to_string();
    j["ambient"] = projective ? "P2" : "A2";
    j["C"] = format_poly(C);
    j["D"] = format_poly(D);
    j["iso"] = chain_to_json(iso);
    j["certificate"] = witness_free(certificate);
    j["warnings"] = warnings;
    return j;
}

// ---- SL2 family -----------------------------------------------------------

CurvePair sl2_pair(const SL2MatrixPoly& m) {
    const Field& k = m.a.field();
    MultiPoly a = as_univariate(m.a, "y").embed(xy());
    MultiPoly b = as_univariate(m.b, "y").embed(xy());
    MultiPoly c = as_univariate(m.c, "y").embed(xy());
    MultiPoly d = as_univariate(m.d, "y").embed(xy());
    if (a.is_zero()) throw Error(ErrorKind::PreconditionViolated, "a must be nonzero");
    if (!(a * d - b * c).is_one()) throw Error(ErrorKind::DeterminantNotOne, "a d - b c = " + format_poly(a * d - b * c));
    MultiPoly x = var(k, xy(), "x"), y = var(k, xy(), "y");
    CurvePair pair;
    pair.construction = "sl2";
    pair.parameters = Json{{"a", format_poly(a)}, {"b", format_poly(b)}, {"c", format_poly(c)}, {"d", format_poly(d)}};
    pair.C = a * x + b;
    pair.D = a * x - c;
    BirationalMap phi({RationalFunction(c * x + d, a * x + b), RationalFunction(y)},
                      std::vector<RationalFunction>{RationalFunction(-(b * x) + d, a * x - c), RationalFunction(y)});
    pair.iso = MapChain{{phi}};
    pair.certificate = verify_complement_iso(phi, pair.C, pair.D);
    pair.certificate.construction = "sl2";
    pair.certificate.input = pair.parameters;
    pair.certificate.add("det M = 1", true);
    pair.certificate.add("gcd(a, b) = 1", poly_gcd(a, b).is_constant());
    pair.certificate.add("gcd(a, c) = 1", poly_gcd(a, c).is_constant());
    return pair;
}

CurvePair prop_negativity3(const MultiPoly& f_in, const MultiPoly& b_in, unsigned n) {
    if (n == 0) throw Error(ErrorKind::PreconditionViolated, "n must be positive");
    MultiPoly f = as_univariate(f_in, "y");
    MultiPoly b = as_univariate(b_in, "y");
    MultiPoly F = f.pow(n);
    ExtGcd eg = uni_ext_gcd(F, b, "y");
    if (!eg.gcd.is_one()) throw Error(ErrorKind::NotCoprime, "gcd(f^n, b) = " + format_poly(eg.gcd));
    // s F + u b = 1, so F d - b c = 1 with d = s, c = -u; then shrink c mod F
    MultiPoly d = eg.s, c = -eg.u;
    DivMod qr = uni_divmod(c, F, "y");
    c = qr.remainder;
    d = d - qr.quotient * b;
    CurvePair pair = sl2_pair({F, b, c, d});
    pair.construction = "negativity3";
    pair.parameters = Json{{"f", format_poly(f)}, {"b", format_poly(b)}, {"n", n}, {"c", format_poly(c)}, {"d", format_poly(d)}};
    pair.certificate.construction = "negativity3";
    pair.certificate.input = pair.parameters;
    pair.certificate.add("f^n d - b c = 1", (F * d - b * c).is_one());
    if (divexact(f, b)) pair.warnings.push_back("b divides f");
    int dF = F.total_degree(), db = std::max(b.total_degree(), 0);
    if (!(dF > 2 * db))
        pair.warnings.push_back("deg(f^n) = " + std::to_string(dF) + " is not > 2 deg(b) = " + std::to_string(2 * db) +
                                "; non-equivalence of C and D is not guaranteed");
    return pair;
}

// ---- phi_b, tau, c_from_b, psi_{b,m} ----------------------------------------

BirationalMap phi_b(const MultiPoly& b_in, unsigned d) {
    if (d == 0) throw Error(ErrorKind::PreconditionViolated, "d must be positive");
    MultiPoly b = as_univariate(b_in, "y").embed(xy());
    const Field& k = b.field();
    if (b.constant_term().is_zero()) throw Error(ErrorKind::RootAtZero, "b(0) = 0");
    MultiPoly x = var(k, xy(), "x"), y = var(k, xy(), "y");
    MultiPoly yd = y_power(k, d);
    return BirationalMap({RationalFunction(x * yd + b), RationalFunction(y)},
                         std::vector<RationalFunction>{RationalFunction(x - b, yd), RationalFunction(y)});
}

BirationalMap tau_power(const Field& k, unsigned m) {
    MultiPoly x = var(k, xy(), "x"), y = var(k, xy(), "y");
    MultiPoly xm = x.pow(m);
    return BirationalMap({RationalFunction(x), RationalFunction(xm * y)},
                         std::vector<RationalFunction>{RationalFunction(x), RationalFunction(y, xm)});
}

MultiPoly c_from_b(const MultiPoly& b_in, unsigned d, unsigned m) {
    if (d == 0 || m == 0) throw Error(ErrorKind::PreconditionViolated, "d and m must be positive");
    MultiPoly b = as_univariate(b_in, "y");
    const Field& k = b.field();
    if (b.constant_term().is_zero()) throw Error(ErrorKind::RootAtZero, "b(0) = 0");
    if (b.total_degree() > static_cast<int>(d) - 1)
        throw Error(ErrorKind::DegreeTooLarge, "deg b = " + std::to_string(b.total_degree()) + " exceeds d - 1");
    using Dense = std::vector<Scalar>;
    auto truncated_mul = [&](const Dense& p, const Dense& q) {
        Dense out(d, Scalar::zero(k));
        for (unsigned i = 0; i < d; ++i) {
            if (p[i].is_zero()) continue;
            for (unsigned j = 0; i + j < d; ++j) out[i + j] += p[i] * q[j];
        }
        return out;
    };
    Dense bd(d, Scalar::zero(k));
    for (const auto& t : b.terms()) bd[t.mono.exps[0]] = t.coeff;
    Dense u(d, Scalar::zero(k));  // y * b^m mod y^d
    {
        Dense bm(d, Scalar::zero(k));
        bm[0] = Scalar::one(k);
        for (unsigned i = 0; i < m; ++i) bm = truncated_mul(bm, bd);
        for (unsigned i = 0; i + 1 < d; ++i) u[i + 1] = bm[i];
    }
    std::vector<Dense> upow;  // u^k mod y^d
    Dense one(d, Scalar::zero(k));
    one[0] = Scalar::one(k);
    upow.push_back(one);
    for (unsigned i = 1; i < d; ++i) upow.push_back(truncated_mul(upow.back(), u));
    // [u^j]_j = b(0)^(j m), lower triangular in (c_0, ..., c_{d-1})
    Dense c(d, Scalar::zero(k));
    for (unsigned j = 0; j < d; ++j) {
        Scalar acc = bd[j];
        for (unsigned i = 0; i < j; ++i) acc -= c[i] * upow[i][j];
        c[j] = acc / upow[j][j];
    }
    Dense check(d, Scalar::zero(k));
    for (unsigned i = 0; i < d; ++i)
        for (unsigned j = 0; j < d; ++j) check[j] += c[i] * upow[i][j];
    for (unsigned j = 0; j < d; ++j)
        if (!(check[j] == bd[j])) throw Error(ErrorKind::PreconditionViolated, "congruence replay failed");
    std::vector<Term> terms;
    for (unsigned j = 0; j < d; ++j) {
        Monomial mono;
        mono.exps[0] = static_cast<std::uint16_t>(j);
        terms.push_back({mono, c[j]});
    }
    return MultiPoly::from_terms(k, VarSet{"y"}, std::move(terms));
}

namespace {

// The chain (phi_c)^-1, tau^m, phi_b and its two curve equations.
struct PsiData {
    MultiPoly b, c, f, g;
    MapChain chain;
};

PsiData psi_data(const MultiPoly& b_in, unsigned d, unsigned m) {
    PsiData out;
    MultiPoly c = c_from_b(b_in, d, m);
    out.b = as_univariate(b_in, "y").embed(xy());
    out.c = c.embed(xy());
    const Field& k = out.b.field();
    MultiPoly x = var(k, xy(), "x");
    out.f = x * y_power(k, d) + out.b;
    out.g = x * y_power(k, d) + out.c;
    out.chain = MapChain{{phi_b(out.c, d).inverse(), tau_power(k, m), phi_b(out.b, d)}};
    return out;
}

void add_psi_structure(Certificate& cert, const PsiData& ps, unsigned d, unsigned m, const std::string& prefix) {
    const Field& k = ps.b.field();
    MultiPoly x = var(k, xy(), "x"), y = var(k, xy(), "y");
    MultiPoly delta = ps.f.pow(m);
    BirationalMap flat = ps.chain.flatten();

    cert.add(prefix + "second component = y (x y^d + b)^m", flat.components()[1].equals(y * delta));

    std::array<MultiPoly, 2> vals{ps.f, y * delta};
    MultiPoly first_num = ps.f - compose_poly(ps.c, vals);
    cert.add(prefix + "y^d divides x y^d + b - c(y (x y^d + b)^m)", divexact(first_num, y_power(k, d)).has_value());

    RationalFunction scaled = reduce(reduce(flat.components()[0]) * RationalFunction(delta.pow(d)));
    Witness w;
    bool ok = false;
    if (scaled.is_polynomial()) {
        const MultiPoly& P = scaled.num();
        MultiPoly p0 = P.evaluate_at(1, Scalar::zero(k));
        Scalar lambda = (p0 - x).constant_term();
        if (p0 == x + cst(k, xy(), lambda)) {
            if (auto F = divexact(P - x - cst(k, xy(), lambda), y)) {
                ok = true;
                w.lambda = lambda;
                w.residual = *F;
            }
        }
    }
    cert.add(prefix + "first component = (x + lambda + y F)/(x y^d + b)^(m d)", ok, w);
    cert.add(prefix + "c(0) = b(0)", ps.c.constant_term() == ps.b.constant_term());
}

}  // namespace

CurvePair psi_bm(const MultiPoly& b_in, unsigned d, unsigned m) {
    PsiData ps = psi_data(b_in, d, m);
    CurvePair pair;
    pair.construction = "psi-bm";
    pair.parameters = Json{{"b", format_poly(ps.b)}, {"d", d}, {"m", m}, {"c", format_poly(ps.c)}};
    pair.C = ps.f;
    pair.D = ps.g;
    pair.iso = ps.chain;
    pair.certificate = verify_complement_iso(ps.chain, ps.f, ps.g);
    pair.certificate.construction = "psi-bm";
    pair.certificate.input = pair.parameters;
    add_psi_structure(pair.certificate, ps, d, m, "");
    return pair;
}

CurvePair family_char0(const Scalar& mu) {
    const Field& k = mu.field();
    VarSet yv{"y"};
    MultiPoly y = MultiPoly::variable(k, yv, "y");
    MultiPoly b = (y * y).scaled(mu) + y + MultiPoly::constant(k, yv, 1);
    CurvePair pair = psi_bm(b, 3, 1);
    pair.construction = "family-char0";
    pair.parameters["mu"] = mu.to_string();
    pair.certificate.construction = "family-char0";
    return pair;
}

std::vector<CurvePair> family_charp(std::uint64_t p, unsigned n) {
    Field k = Field::prime(p);
    if (n == 0) throw Error(ErrorKind::PreconditionViolated, "n must be positive");
    double dd = 2;
    std::uint64_t pn = 1;
    for (unsigned i = 0; i < n; ++i) {
        dd *= static_cast<double>(p);
        pn *= p;
        if (dd > 1e6) break;
    }
    if (dd / 2 + 2 > degree_bound())
        throw Error(ErrorKind::DegreeBoundExceeded, "d = p^n + 2 exceeds the degree bound " + std::to_string(degree_bound()));
    unsigned d = static_cast<unsigned>(pn + 2);
    VarSet yv{"y"};
    MultiPoly b = MultiPoly::variable(k, yv, "y") + MultiPoly::constant(k, yv, 1);
    std::vector<CurvePair> out;
    std::uint64_t m = 1;
    for (unsigned i = 1; i <= n; ++i) {
        m *= p;
        PsiData ps = psi_data(b, d, static_cast<unsigned>(m));
        CurvePair pair;
        pair.construction = "family-charp";
        pair.parameters = Json{{"p", p}, {"n", n}, {"i", i}, {"d", d}, {"m", m}, {"c", format_poly(ps.c)}};
        pair.C = ps.g;
        pair.D = ps.f;
        pair.iso = ps.chain.inverse();
        pair.certificate = verify_complement_iso(pair.iso, pair.C, pair.D);
        pair.certificate.construction = "family-charp";
        pair.certificate.input = pair.parameters;
        add_psi_structure(pair.certificate, ps, d, static_cast<unsigned>(m), "psi_{b,m}: ");
        out.push_back(std::move(pair));
    }
    return out;
}

// ---- degree 7 -------------------------------------------------------------

CurvePair degree7_pair(const Scalar& a0, const Scalar& a1, const Scalar& a2, const Scalar& a3) {
    const Field& k = a0.field();
    if ((a0 * a3).is_zero()) throw Error(ErrorKind::ZeroCornerCoefficient, "a0 a3 = 0");
    MultiPoly x = var(k, xy(), "x"), y = var(k, xy(), "y");
    MultiPoly one = cst(k, xy(), 1);
    auto curve = [&](const Scalar& s, const Scalar& t, const Scalar& u) {
        // (1 - x(xy + s))(y(1 - x(xy + s)) - t) - x u
        MultiPoly inner = one - x * (x * y + cst(k, xy(), s));
        return inner * (y * inner - cst(k, xy(), t)) - x * cst(k, xy(), u);
    };
    MultiPoly f = curve(a1, a0 * a2, a0 * a0 * a3);
    MultiPoly g = curve(a2, a1 * a3, a0 * a3 * a3);
    auto comps = [&](const Scalar& lead, const Scalar& s, const MultiPoly& h) {
        return std::vector<RationalFunction>{
            RationalFunction((x * (x * y + cst(k, xy(), s)) - one).scaled(lead), h),
            RationalFunction((y * h).scaled((lead * lead).inv()))};
    };
    BirationalMap psi(comps(a0, a1, f), comps(a3, a2, g));
    CurvePair pair;
    pair.construction = "degree7";
    VarSet tv{"t"};
    MultiPoly t = MultiPoly::variable(k, tv, "t");
    std::array<Scalar, 4> a{a0, a1, a2, a3};
    MultiPoly P(k, tv), Q(k, tv);
    for (int i = 0; i < 4; ++i) {
        P += t.pow(i).scaled(a[i]);
        Q += t.pow(i).scaled(a[3 - i]);
    }
    pair.parameters = Json{{"a", {a0.to_string(), a1.to_string(), a2.to_string(), a3.to_string()}},
                           {"P", format_poly(P)},
                           {"Q", format_poly(Q)}};
    pair.C = f;
    pair.D = g;
    pair.iso = MapChain{{psi}};
    pair.certificate = verify_complement_iso(psi, f, g);
    pair.certificate.construction = "degree7";
    pair.certificate.input = pair.parameters;
    pair.certificate.add("deg f = 7", f.total_degree() == 7);
    pair.certificate.add("deg g = 7", g.total_degree() == 7);
    auto u = unit_form(pullback(psi, g), f);
    Witness w;
    bool ok = false;
    if (u) {
        w.lambda = u->first;
        w.n = u->second;
        Scalar expected = (a0 * a3) * (a0 * a3);
        ok = u->first == expected && u->second == -1;
    }
    pair.certificate.add("psi^*(g) = (a0 a3)^2 / f", ok, w);
    return pair;
}

// ---- line complements -----------------------------------------------------

BirationalMap line_complement_aut(const Scalar& lambda, int sign, long long n, const RationalFunction& s_in,
                                  const Scalar& mu) {
    if (lambda.is_zero() || mu.is_zero()) throw Error(ErrorKind::ZeroScalar, "lambda and mu must be nonzero");
    if (sign != 1 && sign != -1) throw Error(ErrorKind::PreconditionViolated, "sign must be +1 or -1");
    const Field& k = lambda.field();
    RationalFunction s = s_in.embed(xy().union_with(s_in.vars()));
    if (!(s.vars() == xy())) throw Error(ErrorKind::PreconditionViolated, "s may only involve x");
    if (s.num().involves(1)) throw Error(ErrorKind::PreconditionViolated, "s may only involve x");
    for (const auto& f : s.factors())
        if (f.base.size() != 1 || f.base.involves(1))
            throw Error(ErrorKind::PreconditionViolated, "the denominator of s must be a power of x");
    MultiPoly x = var(k, xy(), "x"), y = var(k, xy(), "y");
    RationalFunction X = sign == 1 ? RationalFunction(x.scaled(lambda)) : RationalFunction(cst(k, xy(), lambda), x);
    RationalFunction Y = RationalFunction(y.scaled(mu)) * rf_pow(RationalFunction(x), n) + s;
    RationalFunction Xi = sign == 1 ? RationalFunction(x.scaled(lambda.inv())) : RationalFunction(cst(k, xy(), lambda), x);
    std::array<RationalFunction, 2> at{Xi, RationalFunction(y)};
    RationalFunction s_at = substitute(s, at);
    RationalFunction Yi = (RationalFunction(y) - s_at) / (RationalFunction(cst(k, xy(), mu)) * rf_pow(Xi, n));
    return BirationalMap({X, Y}, std::vector<RationalFunction>{reduce(Xi), reduce(Yi)});
}

CurvePair line_complement_pair(const Scalar& lambda, int sign, long long n, const RationalFunction& s,
                               const Scalar& mu) {
    BirationalMap phi = line_complement_aut(lambda, sign, n, s, mu);
    const Field& k = lambda.field();
    CurvePair pair;
    pair.construction = "line-aut";
    pair.parameters = Json{{"lambda", lambda.to_string()},
                           {"sign", sign},
                           {"n", n},
                           {"s", Json{{"num", format_poly(s.num())}, {"den", format_poly(s.den())}}},
                           {"mu", mu.to_string()}};
    pair.C = var(k, xy(), "x");
    pair.D = pair.C;
    pair.iso = MapChain{{phi}};
    pair.certificate = verify_complement_iso(phi, pair.C, pair.D);
    pair.certificate.construction = "line-aut";
    pair.certificate.input = pair.parameters;
    return pair;
}

// ---- cone construction ----------------------------------------------------

namespace {

struct ConeData {
    MultiPoly P;   // in (x, y)
    unsigned d;
    MultiPoly w;   // x z - y^2
    MultiPoly Pw;  // P(x^2, w)
    MultiPoly fP;
};

ConeData cone_data(const MultiPoly& P_in) {
    const Field& k = P_in.field();
    MultiPoly P = P_in.restrict_to(xy());
    if (P.is_zero() || !P.is_homogeneous()) throw Error(ErrorKind::NotHomogeneous, "P must be a nonzero binary form");
    int d = P.total_degree();
    if (d < 1) throw Error(ErrorKind::PreconditionViolated, "deg P must be at least 1");
    if (P.evaluate(std::array<Scalar, 2>{Scalar::one(k), Scalar::zero(k)}).is_zero())
        throw Error(ErrorKind::YDividesP, "y divides P");
    MultiPoly x = var(k, xyz(), "x"), y = var(k, xyz(), "y"), z = var(k, xyz(), "z");
    MultiPoly w = x * z - y * y;
    std::array<MultiPoly, 2> vals{x * x, w};
    MultiPoly Pw = compose_poly(P, vals);
    unsigned ud = static_cast<unsigned>(d);
    MultiPoly fP = z * w.pow(2 * ud) + (y * w.pow(ud) * Pw).scaled(Scalar::from_int(k, 2)) + x * Pw * Pw;
    return {P, ud, w, Pw, fP};
}

MultiPoly scaled_form(const MultiPoly& P, const Scalar& lambda) {
    const Field& k = P.field();
    MultiPoly Pxy = P.restrict_to(xy());
    std::array<MultiPoly, 2> vals{var(k, xy(), "x").scaled(lambda), var(k, xy(), "y")};
    return compose_poly(Pxy, vals);
}

}  // namespace

MultiPoly costa_curve(const MultiPoly& P) { return cone_data(P).fP; }

BirationalMap costa_psi(const MultiPoly& P) {
    const Field& k = P.field();
    auto comps = [&](const MultiPoly& Q) {
        ConeData c = cone_data(Q);
        MultiPoly x = var(k, xyz(), "x"), y = var(k, xyz(), "y");
        return std::vector<RationalFunction>{RationalFunction(x),
                                             RationalFunction::from_factors(y * c.w.pow(c.d) + x * c.Pw, {{c.w, c.d}}),
                                             RationalFunction::from_factors(c.fP, {{c.w, 2 * c.d}})};
    };
    return BirationalMap(comps(P), comps(-P.restrict_to(xy())), true);
}

BirationalMap costa_phi(const Field& k, const Scalar& lambda) {
    if (lambda.is_zero()) throw Error(ErrorKind::ZeroScalar, "lambda must be nonzero");
    MultiPoly x = var(k, xyz(), "x"), y = var(k, xyz(), "y"), z = var(k, xyz(), "z");
    auto comps = [&](const Scalar& l) {
        MultiPoly num = (x * z).scaled(l) - (y * y).scaled(l - Scalar::one(k));
        return std::vector<RationalFunction>{RationalFunction(num, z), RationalFunction(y), RationalFunction(z)};
    };
    return BirationalMap(comps(lambda), comps(lambda.inv()), true);
}

CurvePair costa_kappa(const MultiPoly& P_in, const Scalar& lambda) {
    const Field& k = P_in.field();
    if (lambda.is_zero()) throw Error(ErrorKind::ZeroScalar, "lambda must be nonzero");
    ConeData c = cone_data(P_in);
    MultiPoly Pt = scaled_form(c.P, lambda);
    ConeData ct = cone_data(Pt);
    BirationalMap psi = costa_psi(c.P);
    MapChain kappa{{costa_psi(Pt).inverse(), costa_phi(k, lambda), psi}};

    CurvePair pair;
    pair.construction = "costa";
    pair.parameters = Json{{"P", format_poly(c.P)}, {"lambda", lambda.to_string()}, {"P~", format_poly(Pt)}, {"d", c.d}};
    pair.C = c.fP;
    pair.D = ct.fP;
    pair.iso = kappa;
    pair.projective = true;
    pair.certificate = verify_cone_complement_iso(kappa, c.fP, ct.fP);
    pair.certificate.construction = "costa";
    pair.certificate.input = pair.parameters;

    MultiPoly z = var(k, xyz(), "z");
    RationalFunction psi_z = pullback(psi, z);
    pair.certificate.add("(psi_P)^*(z) = f_P w^(-2d)", psi_z.equals(RationalFunction::from_factors(c.fP, {{c.w, 2 * c.d}})));
    pair.certificate.add("(psi_P)^*(w) = w", pullback(psi, c.w).equals(c.w));
    pair.certificate.add("deg f_P = 4d+1", c.fP.total_degree() == static_cast<int>(4 * c.d + 1) && c.fP.is_homogeneous());
    Scalar p10 = c.P.evaluate(std::array<Scalar, 2>{Scalar::one(k), Scalar::zero(k)});
    Scalar f100 = c.fP.evaluate(std::array<Scalar, 3>{Scalar::one(k), Scalar::zero(k), Scalar::zero(k)});
    pair.certificate.add("f_P(1,0,0) = P(1,0)^2 != 0", f100 == p10 * p10 && !f100.is_zero());
    return pair;
}

RationalFunction embedding_theta_second(const MultiPoly& b, unsigned d, unsigned n, unsigned m) {
    PsiData pn = psi_data(b, d, n);
    PsiData pm = psi_data(b, d, m);
    MapChain theta = pn.chain;
    for (const auto& f : pm.chain.inverse().factors) theta.factors.push_back(f);
    return theta.pullback(var(b.field(), xy(), "y"));
}

}  // namespace planecomp
