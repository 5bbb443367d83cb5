#include <doctest.h>

#include "planecomp/constructions.hpp"
#include "planecomp/error.hpp"
#include "planecomp/verify.hpp"
#include "test_support.hpp"

using namespace planecomp;

namespace {

const Field Q = Field::rationals();
const Field F2 = Field::prime(2);
const Field F3 = Field::prime(3);
const Field F5 = Field::prime(5);
const VarSet XY{"x", "y"};
const VarSet XYZ{"x", "y", "z"};
const VarSet Yv{"y"};

MultiPoly P(const char* text, const VarSet& vars = XY, const Field& k = Q) { return parse_poly(text, k, vars); }
MultiPoly U(const char* text, const Field& k = Q) { return parse_poly(text, k, Yv); }

template <class Fn>
ErrorKind kind_of(Fn fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("expected an Error");
    return ErrorKind::ParseError;
}

// Terms of p with y-degree below d.
MultiPoly truncate_y(const MultiPoly& p, unsigned d) {
    std::vector<Term> kept;
    std::size_t iy = *p.vars().index_of("y");
    for (const auto& t : p.terms())
        if (t.mono.exps[iy] < d) kept.push_back(t);
    return MultiPoly::from_terms(p.field(), p.vars(), kept);
}

// b(y) == c(y b(y)^m) mod y^d, replayed by direct substitution.
bool congruence_holds(const MultiPoly& b, const MultiPoly& c, unsigned d, unsigned m) {
    MultiPoly y = MultiPoly::variable(b.field(), Yv, "y");
    std::array<MultiPoly, 1> arg{y * b.pow(m)};
    return truncate_y(compose_poly(c, arg) - b, d).is_zero();
}

MultiPoly y_coeff_poly(const CurvePair& pair, unsigned d) {
    // D or C = x y^d + c(y): recover c by removing the x y^d term
    MultiPoly xyd = P("x", XY, pair.C.field()) * MultiPoly::variable(pair.C.field(), XY, "y").pow(d);
    return pair.C - xyd;
}

}  // namespace

TEST_CASE("sl2_pair identity matrix") {
    CurvePair pair = sl2_pair({U("1"), U("0"), U("0"), U("1")});
    CHECK(pair.certificate.pass());
    CHECK(pair.C == P("x"));
    CHECK(pair.D == P("x"));
    BirationalMap phi = pair.iso.flatten();
    CHECK(phi.components()[0].equals(RationalFunction(P("1"), P("x"))));
    CHECK(phi.components()[1].equals(P("y")));
}

TEST_CASE("sl2_pair ((y,-1),(1,0))") {
    CurvePair pair = sl2_pair({U("y"), U("-1"), U("1"), U("0")});
    CHECK(pair.certificate.pass());
    CHECK(pair.C == P("x*y-1"));
    CHECK(pair.D == P("x*y-1"));
    BirationalMap phi = pair.iso.flatten();
    CHECK(phi.components()[0].equals(RationalFunction(P("x"), P("x*y-1"))));
    // phi^*(1/(a x - c)) = a x + b
    CHECK(pullback(phi, RationalFunction(P("1"), P("x*y-1"))).equals(P("x*y-1")));
}

TEST_CASE("sl2_pair rejects det != 1") {
    CHECK(kind_of([] { sl2_pair({U("y"), U("1"), U("1"), U("1")}); }) == ErrorKind::DeterminantNotOne);
}

TEST_CASE("sl2_pair random SL2(F5[y]) matrices") {
    testing::Rng rng(testing::seed());
    MultiPoly one = MultiPoly::constant(F5, Yv, 1), zero(F5, Yv);
    for (int trial = 0; trial < 25; ++trial) {
        // product of elementary matrices keeps det = 1
        MultiPoly a = one, b = zero, c = zero, d = one;
        for (int step = 0; step < 2; ++step) {
            MultiPoly e = testing::random_poly(rng, F5, Yv, 1, 2);
            MultiPoly na = a + e * c, nb = b + e * d;  // ((1,e),(0,1)) * M
            a = na;
            b = nb;
            MultiPoly h = testing::random_poly(rng, F5, Yv, 1, 2);
            MultiPoly nc = c + h * a, nd = d + h * b;  // ((1,0),(h,1)) * M
            c = nc;
            d = nd;
        }
        if (a.is_zero() || a.total_degree() > 3 || b.total_degree() > 3 || c.total_degree() > 3 || d.total_degree() > 3)
            continue;
        REQUIRE((a * d - b * c).is_one());
        CurvePair pair = sl2_pair({a, b, c, d});
        for (const auto& chk : pair.certificate.checks) {
            INFO(chk.name, " a=", format_poly(a), " b=", format_poly(b), " c=", format_poly(c));
            CHECK(chk.pass);
        }
        BirationalMap phi = pair.iso.flatten();
        BirationalMap psi = phi.inverse();
        MultiPoly ax = a.embed(XY) * P("x", XY, F5);
        MultiPoly axb = ax + b.embed(XY), axc = ax - c.embed(XY);
        CHECK(pullback(phi, RationalFunction(one.embed(XY), axc)).equals(axb));
        CHECK(pullback(psi, RationalFunction(one.embed(XY), axb)).equals(axc));
        CHECK(pullback(phi, P("y", XY, F5)).equals(P("y", XY, F5)));
        CHECK(pullback(psi, P("y", XY, F5)).equals(P("y", XY, F5)));
    }
}

TEST_CASE("prop_negativity3 examples") {
    CurvePair p = prop_negativity3(U("y"), U("y+1"), 3);
    CHECK(p.certificate.pass());
    MultiPoly c = U(p.parameters["c"].get<std::string>().c_str());
    MultiPoly d = U(p.parameters["d"].get<std::string>().c_str());
    CHECK((U("y^3") * d - U("y+1") * c).is_one());
    CHECK(c.total_degree() < 3);
    CHECK(c == U("-y^2+y-1"));
    CHECK(d == U("-1"));

    CurvePair q = prop_negativity3(U("y"), U("1"), 1);
    CHECK(q.certificate.pass());
    CHECK(q.parameters["c"] == "-1");
    CHECK(q.parameters["d"] == "0");
    CHECK(kind_of([] { prop_negativity3(U("y"), U("y"), 1); }) == ErrorKind::NotCoprime);

    // f = t, b = t + 1, n = 2: warned, but the pair still verifies
    CurvePair r = prop_negativity3(U("y"), U("y+1"), 2);
    CHECK(r.certificate.pass());
    CHECK_FALSE(r.warnings.empty());
}

TEST_CASE("phi_b examples") {
    BirationalMap a = phi_b(U("1"), 1);
    CHECK(a.components()[0].equals(P("x*y+1")));
    CHECK(verify_inverse(a).pass());
    BirationalMap b = phi_b(U("y+1"), 3);
    CHECK(b.components()[0].equals(P("x*y^3+y+1")));
    CHECK(verify_inverse(b).pass());
    CHECK(kind_of([] { phi_b(U("y"), 1); }) == ErrorKind::RootAtZero);
}

TEST_CASE("c_from_b examples") {
    MultiPoly mu5 = c_from_b(U("5*y^2+y+1"), 3, 1);
    CHECK(mu5 == U("4*y^2+y+1"));
    CHECK(congruence_holds(U("5*y^2+y+1"), mu5, 3, 1));
    for (unsigned d : {1u, 3u, 6u})
        for (unsigned m : {1u, 2u}) CHECK(c_from_b(U("1"), d, m) == U("1"));
    MultiPoly c2 = c_from_b(U("y+1", F2), 4, 2);
    CHECK(c2 == U("y^3+y+1", F2));
    CHECK(congruence_holds(U("y+1", F2), c2, 4, 2));
    CHECK(kind_of([] { c_from_b(U("y"), 3, 1); }) == ErrorKind::RootAtZero);
    CHECK(kind_of([] { c_from_b(U("y^3+1"), 3, 1); }) == ErrorKind::DegreeTooLarge);
}

TEST_CASE("c_from_b congruence on random inputs") {
    testing::Rng rng(testing::seed() + 1);
    for (int trial = 0; trial < 40; ++trial) {
        unsigned d = 1 + rng() % 6, m = 1 + rng() % 3;
        MultiPoly b = testing::random_poly(rng, F5, Yv, static_cast<int>(d) - 1, 4);
        b += MultiPoly::constant(F5, Yv, testing::random_scalar(rng, F5, true)) -
             MultiPoly::constant(F5, Yv, b.constant_term());
        MultiPoly c = c_from_b(b, d, m);
        CHECK(c.total_degree() < static_cast<int>(d));
        CHECK(c.constant_term() == b.constant_term());
        CHECK(congruence_holds(b, c, d, m));
    }
}

TEST_CASE("psi_bm examples") {
    CurvePair pair = psi_bm(U("y+1"), 3, 1);
    CHECK(pair.certificate.pass());
    CHECK(pair.D == P("x*y^3-y^2+y+1"));
    CHECK(pair.iso.flatten().components()[1].equals(P("x*y^4+y^2+y")));

    CurvePair line = psi_bm(U("1"), 1, 1);
    CHECK(line.certificate.pass());
    CHECK(line.C == P("x*y+1"));
    CHECK(line.D == P("x*y+1"));

    RationalFunction theta = embedding_theta_second(U("y+1"), 3, 1, 2);
    CHECK_FALSE(reduce(theta).is_polynomial());
    MultiPoly c2 = c_from_b(U("y+1"), 3, 2).embed(XY);
    CHECK(theta.equals(RationalFunction(P("y"), P("x*y^3") + c2)));
}

TEST_CASE("family_char0 members") {
    for (int mu : {0, 1, 5}) {
        Scalar m = Scalar::from_int(Q, mu);
        CurvePair pair = family_char0(m);
        CHECK(pair.certificate.pass());
        MultiPoly b = U("y^2").scaled(m) + U("y+1");
        MultiPoly c = U("y^2").scaled(m - Scalar::one(Q)) + U("y+1");
        CHECK(pair.C == P("x*y^3") + b.embed(XY));
        CHECK(pair.D == P("x*y^3") + c.embed(XY));
    }
}

TEST_CASE("family_charp examples") {
    auto pairs = family_charp(2, 2);
    REQUIRE(pairs.size() == 2);
    for (const auto& pair : pairs) {
        CHECK(pair.certificate.pass());
        CHECK(pair.D == P("x*y^6+y+1", XY, F2));
    }
    CHECK(truncate_y(y_coeff_poly(pairs[0], 6), 4) == P("1+y+y^3", XY, F2));
    CHECK(truncate_y(y_coeff_poly(pairs[1], 6), 6) == P("1+y+y^5", XY, F2));

    auto p3 = family_charp(3, 1);
    REQUIRE(p3.size() == 1);
    CHECK(p3[0].certificate.pass());
    CHECK(y_coeff_poly(p3[0], 5) == P("1+y-y^4", XY, F3));

    CHECK(kind_of([] { family_charp(2, 5); }) == ErrorKind::DegreeBoundExceeded);
}

TEST_CASE("degree7_pair examples") {
    Scalar one = Scalar::one(Q), zero = Scalar::zero(Q);
    CurvePair pair = degree7_pair(one, zero, zero, one);
    CHECK(pair.certificate.pass());
    MultiPoly f = P("x^4*y^3-2*x^2*y^2+y-x");
    CHECK(pair.C == f);
    CHECK(pair.D == f);
    BirationalMap psi = pair.iso.flatten();
    CHECK(psi.components()[0].equals(RationalFunction(P("x^2*y-1"), f)));
    CHECK(psi.components()[1].equals(P("y") * f));
    const Check* unit = pair.certificate.find("psi^*(g) = (a0 a3)^2 / f");
    REQUIRE(unit);
    CHECK(unit->pass);

    CHECK(kind_of([&] { degree7_pair(zero, one, one, one); }) == ErrorKind::ZeroCornerCoefficient);
}

TEST_CASE("degree7_pair over F5 and the swap symmetry") {
    auto s = [](long long v) { return Scalar::from_int(F5, v); };
    CurvePair pair = degree7_pair(s(1), s(1), s(2), s(1));
    CHECK(pair.certificate.pass());
    CHECK(pair.C.total_degree() == 7);
    CHECK(pair.D.total_degree() == 7);
    CurvePair swapped = degree7_pair(s(1), s(2), s(1), s(1));
    CHECK(swapped.C == pair.D);
    CHECK(swapped.D == pair.C);

    testing::Rng rng(testing::seed() + 2);
    for (int trial = 0; trial < 6; ++trial) {
        Scalar a0 = testing::random_scalar(rng, F5, true), a1 = testing::random_scalar(rng, F5),
               a2 = testing::random_scalar(rng, F5), a3 = testing::random_scalar(rng, F5, true);
        CurvePair p = degree7_pair(a0, a1, a2, a3);
        CHECK(p.certificate.pass());
        CHECK(p.C.total_degree() == 7);
        CHECK(p.D.total_degree() == 7);
        CurvePair back = degree7_pair(a3, a2, a1, a0);
        CHECK(back.C == p.D);
        CHECK(back.D == p.C);
    }
}

TEST_CASE("line_complement_aut examples") {
    Scalar one = Scalar::one(Q);
    RationalFunction zero_s(MultiPoly(Q, XY));
    BirationalMap id = line_complement_aut(one, 1, 0, zero_s, one);
    CHECK(id.components()[0].equals(P("x")));
    CHECK(id.components()[1].equals(P("y")));
    BirationalMap inv = line_complement_aut(one, -1, 0, zero_s, one);
    CHECK(inv.components()[0].equals(RationalFunction(P("1"), P("x"))));

    RationalFunction s(P("x^2+1"), P("x"));
    CurvePair pair = line_complement_pair(Scalar::from_int(Q, 2), 1, 3, s, Scalar::from_int(Q, 5));
    CHECK(pair.certificate.pass());
    BirationalMap phi = pair.iso.flatten();
    CHECK(phi.components()[0].equals(P("2*x")));
    CHECK(phi.components()[1].equals(RationalFunction(P("5*x^4*y+x^2+1"), P("x"))));

    CHECK(kind_of([&] { line_complement_aut(Scalar::zero(Q), 1, 0, zero_s, one); }) == ErrorKind::ZeroScalar);
}

TEST_CASE("costa_curve examples") {
    MultiPoly fx = costa_curve(P("x"));
    CHECK(fx == P("x^5+x^2*z^3+2*x^3*y*z-2*x^2*y^3-2*x*y^2*z^2+y^4*z", XYZ));
    CHECK(fx.is_homogeneous());
    for (const char* form : {"x", "x^2+x*y", "2*x^3-y^3", "x^2-3*y^2"}) {
        MultiPoly Pf = P(form);
        MultiPoly f = costa_curve(Pf);
        CHECK(f.total_degree() == 4 * Pf.total_degree() + 1);
        CHECK(f.is_homogeneous());
    }
    CHECK(kind_of([] { costa_curve(P("y")); }) == ErrorKind::YDividesP);
}

TEST_CASE("costa_psi fixes x and w") {
    for (const char* form : {"x", "x^2+x*y"}) {
        BirationalMap psi = costa_psi(P(form));
        MultiPoly w = P("x*z-y^2", XYZ);
        CHECK(pullback(psi, w).equals(w));
        CHECK(pullback(psi, P("x", XYZ)).equals(P("x", XYZ)));
    }
}

TEST_CASE("costa_kappa small cases") {
    CurvePair same = costa_kappa(P("x"), Scalar::one(Q));
    CHECK(same.certificate.pass());
    CHECK(same.C == same.D);
    BirationalMap flat = same.iso.flatten();
    for (std::size_t i = 0; i < 3; ++i) {
        const char* names[] = {"x", "y", "z"};
        CHECK(flat.components()[i].equals(P(names[i], XYZ)));
    }

    CurvePair two = costa_kappa(P("x"), Scalar::from_int(Q, 2));
    CHECK(two.certificate.pass());
    CHECK(two.D == costa_curve(P("2*x")));
}

TEST_CASE("CurvePair JSON keys") {
    Json j = psi_bm(U("y+1"), 3, 1).to_json();
    for (const char* key : {"construction", "parameters", "field", "C", "D", "iso", "certificate"}) CHECK(j.contains(key));
    MapChain back = chain_from_json(j["iso"]);
    CHECK(back.factors.size() == 3);
}
