#include <doctest.h>

#include "planecomp/error.hpp"
#include "planecomp/field.hpp"
#include "planecomp/poly_io.hpp"

using namespace planecomp;

namespace {

const Field Q = Field::rationals();

MultiPoly P(const char* text, const Field& k = Q) { return parse_poly(text, k); }
MultiPoly P(const char* text, const Field& k, const VarSet& vars) { return parse_poly(text, k, vars); }

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

}  // namespace

TEST_CASE("field arithmetic examples") {
    Field f7 = Field::prime(7);
    CHECK(field_arith(FieldOp::Inv, Scalar::from_int(f7, 3)) == Scalar::from_int(f7, 5));
    CHECK(field_arith(FieldOp::Add, Scalar::parse(Q, "1/2"), Scalar::parse(Q, "1/3")) == Scalar::parse(Q, "5/6"));
    CHECK(kind_of([&] { field_arith(FieldOp::Div, Scalar::one(Q), Scalar::zero(Q)); }) == ErrorKind::DivisionByZero);
    CHECK(kind_of([&] { field_arith(FieldOp::Add, Scalar::one(Q), Scalar::one(f7)); }) == ErrorKind::FieldMismatch);
    CHECK(kind_of([] { Field::prime(9); }) == ErrorKind::CompositeModulus);
}

TEST_CASE("field enumeration") {
    auto f2 = enumerate_field(Field::prime(2));
    REQUIRE(f2.size() == 2);
    CHECK(f2[0].residue() == 0);
    CHECK(f2[1].residue() == 1);
    auto f5 = enumerate_field(Field::prime(5));
    REQUIRE(f5.size() == 5);
    for (std::uint64_t i = 0; i < 5; ++i) CHECK(f5[i].residue() == i);
    CHECK(kind_of([] { enumerate_field(Field::rationals()); }) == ErrorKind::InfiniteField);
}

TEST_CASE("field spec grammar") {
    CHECK(Field::parse("Q") == Field::rationals());
    CHECK(Field::parse("F5") == Field::prime(5));
    CHECK(Field::parse("F5").to_string() == "F5");
    CHECK(kind_of([] { Field::parse("F4"); }) == ErrorKind::CompositeModulus);
    CHECK(kind_of([] { Field::parse("R"); }) == ErrorKind::ParseError);
}

TEST_CASE("scalar canonical form") {
    CHECK(Scalar::parse(Q, "4/-6").to_string() == "-2/3");
    CHECK(Scalar::from_int(Field::prime(5), -1).residue() == 4);
    CHECK(Scalar::parse(Field::prime(5), "1/2").residue() == 3);
}

TEST_CASE("poly_arith examples") {
    CHECK(P("x+y") * P("x-y") == P("x^2-y^2"));
    Field f5 = Field::prime(5);
    VarSet xyz{"x", "y", "z"};
    MultiPoly w = P("x*z-y^2", f5, xyz);
    CHECK(poly_arith(PolyOp::Pow, w, w, 2) == P("x^2*z^2+3*x*y^2*z+y^4", f5, xyz));
    CHECK((P("x+y") * MultiPoly(Q, VarSet{"x", "y"})).is_zero());
    CHECK(kind_of([&] { P("x") + P("x", f5); }) == ErrorKind::FieldMismatch);
}

TEST_CASE("divexact examples") {
    CHECK(*divexact(P("x^2-y^2"), P("x-y")) == P("x+y"));
    CHECK_FALSE(divexact(P("x^2+1"), P("x")).has_value());
    VarSet xyz{"x", "y", "z"};
    MultiPoly w = P("x*z-y^2", Q, xyz);
    CHECK(*divexact(w.pow(3), w) == w.pow(2));
    CHECK(kind_of([&] { divexact(w, MultiPoly(Q, xyz)); }) == ErrorKind::ZeroDivisor);
}

TEST_CASE("uni_divmod examples") {
    auto r = uni_divmod(P("t^3"), P("t^2+1"), "t");
    CHECK(r.quotient == P("t"));
    CHECK(r.remainder == P("-t"));
    r = uni_divmod(P("t"), P("t^2"), "t");
    CHECK(r.quotient.is_zero());
    CHECK(r.remainder == P("t"));
    r = uni_divmod(P("t^2-1"), P("t-1"), "t");
    CHECK(r.quotient == P("t+1"));
    CHECK(r.remainder.is_zero());
    CHECK(kind_of([] { uni_divmod(P("x*y"), P("x"), "x"); }) == ErrorKind::NotUnivariate);
}

TEST_CASE("uni_ext_gcd examples") {
    auto check = [](const MultiPoly& f, const MultiPoly& g, const MultiPoly& d) {
        ExtGcd e = uni_ext_gcd(f, g, "t");
        CHECK(e.gcd == d);
        CHECK(e.s * f + e.u * g == e.gcd);
    };
    check(P("t"), P("t+1"), P("1"));
    check(P("t^2-1"), P("t-1"), P("t-1"));
    check(MultiPoly(Q, VarSet{"t"}), P("t"), P("t"));
    ExtGcd e = uni_ext_gcd(P("t"), P("t+1"), "t");
    CHECK(e.s == P("-1"));
    CHECK(e.u == P("1"));
}

TEST_CASE("q_from_p examples") {
    CHECK(q_from_p(P("t^3-1"), Scalar::zero(Q), "t") == P("1-t^3"));
    CHECK(q_from_p(P("t"), Scalar::one(Q), "t") == P("t+1"));
    CHECK(kind_of([] { q_from_p(P("t-1"), Scalar::one(Q), "t"); }) == ErrorKind::RootAtLambda);
    // involution up to scalar at lambda = 0
    MultiPoly p = P("2*t^3+t+5");
    MultiPoly back = q_from_p(q_from_p(p, Scalar::zero(Q), "t"), Scalar::zero(Q), "t");
    CHECK(back.proportional_to(p).has_value());
}

TEST_CASE("is_squarefree examples") {
    CHECK(is_squarefree(P("t^2-1"), "t") == Squarefree::Yes);
    CHECK(is_squarefree(P("t^2-2*t+1"), "t") == Squarefree::No);
    Field f3 = Field::prime(3);
    CHECK(is_squarefree(P("t^3-1", f3), "t") == Squarefree::NotDecidable);
}

TEST_CASE("irreducible_over_Fq examples") {
    Field f2 = Field::prime(2), f3 = Field::prime(3);
    CHECK(irreducible_over_Fq(P("t^4+t+1", f2), f2));
    CHECK_FALSE(irreducible_over_Fq(P("t^4+t^2+1", f2), f2));
    CHECK(P("t^4+t^2+1", f2) == P("t^2+t+1", f2).pow(2));
    CHECK_FALSE(irreducible_over_Fq(P("t^2", f3), f3));
    CHECK(irreducible_over_Fq(P("t^4+t^3+1", f2), f2));
    CHECK(irreducible_over_Fq(P("x*y+1", f3), f3));
    CHECK_FALSE(irreducible_over_Fq(P("x^2-y^2", f3), f3));
    CHECK(kind_of([&] { irreducible_over_Fq(P("t^14+t+1", f2), f2); }) == ErrorKind::DegreeBoundExceeded);
    CHECK(kind_of([&] { irreducible_over_Fq(P("t^2+1"), Q); }) == ErrorKind::InfiniteField);
}

TEST_CASE("gcd") {
    MultiPoly a = P("x^2-y^2"), b = P("x^2+2*x*y+y^2");
    CHECK(poly_gcd(a, b) == P("x+y"));
    CHECK(poly_gcd(P("x*z-y^2", Q, VarSet{"x", "y", "z"}).pow(2) * P("x"), P("x*z-y^2", Q, VarSet{"x", "y", "z"}) * P("y")) ==
          P("x*z-y^2", Q, VarSet{"x", "y", "z"}));
    CHECK(poly_gcd(P("x+1"), P("y+1")).is_one());
}

TEST_CASE("text grammar round trip") {
    for (const char* text : {"-3/2*x^2*y+4*y-1", "x^4*y^3-2*x^2*y^2-x+y", "0", "7", "x*y*z"}) {
        MultiPoly p = P(text);
        CHECK(format_poly(p) == text);
        CHECK(parse_poly(format_poly(p), Q) == p);
    }
    CHECK(format_poly(P(" x ^2 -  3 * y ")) == "x^2-3*y");
    CHECK(format_poly(P("-x", Field::prime(5))) == "4*x");
    CHECK(kind_of([] { P("x+*y"); }) == ErrorKind::ParseError);
}

TEST_CASE("JSON round trip") {
    Field f5 = Field::prime(5);
    MultiPoly p = P("3*x^2*y+x+2", f5);
    Json j = poly_to_json(p);
    CHECK(j.dump() == R"({"field":"F5","vars":["x","y"],"terms":[{"coeff":"3","exps":[2,1]},{"coeff":"1","exps":[1,0]},{"coeff":"2","exps":[0,0]}]})");
    CHECK(poly_from_json(j) == p);
    CHECK(poly_to_json(poly_from_json(j)).dump() == j.dump());
}

TEST_CASE("monomial overflow") {
    MultiPoly x = P("x");
    CHECK(kind_of([&] { x.pow(70000); }) == ErrorKind::ExponentOverflow);
}
