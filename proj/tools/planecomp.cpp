#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "planecomp/constructions.hpp"
#include "planecomp/equivalence.hpp"
#include "planecomp/error.hpp"
#include "planecomp/points.hpp"
#include "planecomp/verify.hpp"

using namespace planecomp;

namespace {

constexpr int kExitPass = 0, kExitFail = 1, kExitUsage = 2, kExitUndecided = 3;

int report_error(const std::string& kind, const std::string& message) {
    std::cerr << Json{{"error", kind}, {"message", message}}.dump() << "\n";
    return kExitUsage;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::ParseError, "cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw Error(ErrorKind::ParseError, "cannot write " + path);
    out << text;
}

bool looks_like_json(const std::string& text) {
    auto pos = text.find_first_not_of(" \t\r\n");
    return pos != std::string::npos && text[pos] == '{';
}

Json parse_json(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::ParseError, std::string("malformed JSON: ") + e.what());
    }
}

std::string trim(const std::string& s) {
    auto a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    auto b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

// A polynomial given either inline or as a path to a text/JSON file.
MultiPoly load_poly(const std::string& arg, const Field& field, const std::optional<VarSet>& vars = std::nullopt) {
    std::string text = std::filesystem::is_regular_file(arg) ? read_file(arg) : arg;
    if (looks_like_json(text)) {
        MultiPoly p = poly_from_json(parse_json(text));
        if (!(p.field() == field)) throw Error(ErrorKind::FieldMismatch, "polynomial file is over " + p.field().to_string());
        return vars ? p.embed(p.vars().union_with(*vars)).restrict_to(*vars) : p;
    }
    return parse_poly(trim(text), field, vars);
}

Scalar load_scalar(const std::string& text, const Field& field) { return Scalar::parse(field, trim(text)); }

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(trim(item));
    return out;
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

struct Common {
    std::string field = "Q";
    unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
};

// ---- construct ------------------------------------------------------------

struct ConstructArgs {
    std::string a, b, c, d, f, n, m, mu, lambda, sign = "1", s_num = "0", s_xpow = "0", P, p;
    std::string map_out, f_out, g_out;
};

int finish_pair(const CurvePair& pair, const ConstructArgs& args) {
    if (!args.map_out.empty()) write_file(args.map_out, chain_to_json(pair.iso).dump(2) + "\n");
    if (!args.f_out.empty()) write_file(args.f_out, format_poly(pair.C) + "\n");
    if (!args.g_out.empty()) write_file(args.g_out, format_poly(pair.D) + "\n");
    emit(pair.to_json());
    return pair.certificate.pass() ? kExitPass : kExitFail;
}

unsigned to_unsigned(const std::string& s, const char* name) {
    try {
        std::size_t used = 0;
        long long v = std::stoll(s, &used);
        if (used != s.size() || v < 0) throw std::invalid_argument(name);
        return static_cast<unsigned>(v);
    } catch (const std::logic_error&) {
        throw Error(ErrorKind::ParseError, std::string("--") + name + " must be a nonnegative integer");
    }
}

long long to_integer(const std::string& s, const char* name) {
    try {
        std::size_t used = 0;
        long long v = std::stoll(s, &used);
        if (used != s.size()) throw std::invalid_argument(name);
        return v;
    } catch (const std::logic_error&) {
        throw Error(ErrorKind::ParseError, std::string("--") + name + " must be an integer");
    }
}

void require(const std::string& value, const char* name) {
    if (value.empty()) throw Error(ErrorKind::ParseError, std::string("missing --") + name);
}

int run_construct(const std::string& kind, const Common& common, const ConstructArgs& args) {
    VarSet yv{"y"};
    if (kind == "family-charp") {
        require(args.p, "p");
        require(args.n, "n");
        auto pairs = family_charp(to_unsigned(args.p, "p"), to_unsigned(args.n, "n"));
        Json arr = Json::array();
        bool ok = true;
        for (const auto& pair : pairs) {
            arr.push_back(pair.to_json());
            ok = ok && pair.certificate.pass();
        }
        emit(Json{{"construction", "family-charp"}, {"pairs", arr}});
        return ok ? kExitPass : kExitFail;
    }
    Field k = Field::parse(common.field);
    if (kind == "sl2") {
        for (auto [v, n] : {std::pair{&args.a, "a"}, {&args.b, "b"}, {&args.c, "c"}, {&args.d, "d"}}) require(*v, n);
        return finish_pair(sl2_pair({load_poly(args.a, k), load_poly(args.b, k), load_poly(args.c, k), load_poly(args.d, k)}), args);
    }
    if (kind == "negativity3") {
        require(args.f, "f");
        require(args.b, "b");
        require(args.n, "n");
        return finish_pair(prop_negativity3(load_poly(args.f, k), load_poly(args.b, k), to_unsigned(args.n, "n")), args);
    }
    if (kind == "psi-bm") {
        require(args.b, "b");
        require(args.d, "d");
        require(args.m, "m");
        return finish_pair(psi_bm(load_poly(args.b, k), to_unsigned(args.d, "d"), to_unsigned(args.m, "m")), args);
    }
    if (kind == "family-char0") {
        require(args.mu, "mu");
        return finish_pair(family_char0(load_scalar(args.mu, k)), args);
    }
    if (kind == "degree7") {
        require(args.a, "a");
        auto parts = split_list(args.a);
        if (parts.size() != 4) throw Error(ErrorKind::ParseError, "--a takes four comma-separated scalars");
        return finish_pair(degree7_pair(load_scalar(parts[0], k), load_scalar(parts[1], k), load_scalar(parts[2], k),
                                        load_scalar(parts[3], k)),
                           args);
    }
    if (kind == "costa") {
        require(args.P, "P");
        require(args.lambda, "lambda");
        return finish_pair(costa_kappa(load_poly(args.P, k, VarSet{"x", "y"}), load_scalar(args.lambda, k)), args);
    }
    if (kind == "line-aut") {
        require(args.lambda, "lambda");
        require(args.mu, "mu");
        VarSet xy{"x", "y"};
        MultiPoly num = load_poly(args.s_num, k, xy);
        long long xpow = to_integer(args.s_xpow, "s-xpow");
        if (xpow < 0) throw Error(ErrorKind::ParseError, "--s-xpow must be nonnegative");
        Monomial xm;
        xm.exps[0] = static_cast<std::uint16_t>(xpow);
        RationalFunction s(num, MultiPoly::monomial(k, xy, xm, Scalar::one(k)));
        long long sign = to_integer(args.sign, "sign");
        return finish_pair(line_complement_pair(load_scalar(args.lambda, k), static_cast<int>(sign),
                                                args.n.empty() ? 0 : to_integer(args.n, "n"), s, load_scalar(args.mu, k)),
                           args);
    }
    throw Error(ErrorKind::ParseError, "unknown construction " + kind);
}

// ---- verify ---------------------------------------------------------------

int run_verify(const std::string& map_path, const std::string& f_arg, const std::string& g_arg, const std::string& mode) {
    MapChain chain = chain_from_json(parse_json(read_file(map_path)));
    const Field& k = chain.field();
    MultiPoly f = load_poly(f_arg, k, chain.vars());
    MultiPoly g = load_poly(g_arg, k, chain.vars());
    Certificate cert = mode == "cone" ? verify_cone_complement_iso(chain, f, g) : verify_complement_iso(chain, f, g);
    cert.construction = "verify";
    cert.input = Json{{"map", map_path}, {"f", format_poly(f)}, {"g", format_poly(g)}, {"mode", mode}};
    emit(cert.to_json());
    return cert.pass() ? kExitPass : kExitFail;
}

// ---- test -----------------------------------------------------------------

struct TestArgs {
    std::string p, q, a1, b1, a2, b2, S, T, P, Pt;
};

std::vector<ProjPoint> parse_points(const std::string& text, const Field& k) {
    std::vector<ProjPoint> out;
    for (const auto& item : split_list(text)) {
        if (item == "inf" || item == "oo")
            out.push_back(ProjPoint::infinity(k));
        else
            out.push_back(ProjPoint::affine(Scalar::parse(k, item)));
    }
    return out;
}

int run_test(const std::string& kind, const Common& common, const TestArgs& args) {
    Field k = Field::parse(common.field);
    Json out;
    int code = kExitFail;
    if (kind == "spec-iso") {
        require(args.p, "p");
        require(args.q, "q");
        IsoResult r = spec_iso_test(load_poly(args.p, k), load_poly(args.q, k), common.jobs);
        out = r.to_json();
        code = r.decision == Decision::Equivalent ? kExitPass : r.decision == Decision::NotEquivalent ? kExitFail : kExitUndecided;
    } else if (kind == "pgl2-orbit") {
        require(args.S, "S");
        require(args.T, "T");
        OrbitResult r = pgl2_orbit_test(parse_points(args.S, k), parse_points(args.T, k));
        out = Json{{"equivalent", r.witness.has_value()},
                   {"witness", r.witness ? r.witness->to_json() : Json(nullptr)},
                   {"candidates_tested", r.candidates_tested}};
        code = r.witness ? kExitPass : kExitFail;
    } else if (kind == "equiv-section") {
        for (auto [v, n] : {std::pair{&args.a1, "a1"}, {&args.b1, "b1"}, {&args.a2, "a2"}, {&args.b2, "b2"}}) require(*v, n);
        VarSet yv{"y"};
        SectionResult r = equiv_section_curves(load_poly(args.a1, k, yv), load_poly(args.b1, k, yv),
                                               load_poly(args.a2, k, yv), load_poly(args.b2, k, yv));
        out = r.to_json();
        code = r.witness ? kExitPass : kExitFail;
    } else if (kind == "costa-equiv") {
        require(args.P, "P");
        require(args.Pt, "Pt");
        VarSet xy{"x", "y"};
        CostaResult r = costa_equiv_test(load_poly(args.P, k, xy), load_poly(args.Pt, k, xy));
        out = r.to_json();
        code = r.witness ? kExitPass : kExitFail;
    } else {
        throw Error(ErrorKind::ParseError, "unknown test " + kind);
    }
    emit(out);
    return code;
}

// ---- points / convert -----------------------------------------------------

int run_points(const Common& common, const std::string& f_arg, const std::string& g_arg, const std::string& map_path) {
    Field k = Field::parse(common.field);
    VarSet xy{"x", "y"};
    MultiPoly f = load_poly(f_arg, k, xy);
    Json out = count_points(f, common.jobs).to_json();
    int code = kExitPass;
    if (!map_path.empty()) {
        require(g_arg, "g");
        MapChain chain = chain_from_json(parse_json(read_file(map_path)));
        if (!(chain.field() == k)) throw Error(ErrorKind::FieldMismatch, "map is over " + chain.field().to_string());
        MultiPoly g = load_poly(g_arg, k, xy);
        BijectionReport rep = check_bijection(chain, f, g, common.jobs);
        out["codomain"] = count_points(g, common.jobs).to_json();
        out["bijection"] = rep.to_json();
        code = rep.bijective ? kExitPass : kExitFail;
    } else if (!g_arg.empty()) {
        out["codomain"] = count_points(load_poly(g_arg, k, xy), common.jobs).to_json();
    }
    emit(out);
    return code;
}

int run_convert(const Common& common, const std::string& in_arg, const std::string& to) {
    std::string text = std::filesystem::is_regular_file(in_arg) ? read_file(in_arg) : in_arg;
    if (looks_like_json(text)) {
        Json j = parse_json(text);
        if (j.contains("components") || j.contains("factors")) {
            std::cout << chain_to_json(chain_from_json(j)).dump(2) << "\n";
            return kExitPass;
        }
        MultiPoly p = poly_from_json(j);
        if (to == "json")
            std::cout << poly_to_json(p).dump() << "\n";
        else
            std::cout << format_poly(p) << "\n";
        return kExitPass;
    }
    MultiPoly p = parse_poly(trim(text), Field::parse(common.field));
    if (to == "text")
        std::cout << format_poly(p) << "\n";
    else
        std::cout << poly_to_json(p).dump() << "\n";
    return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"planecomp: plane curves with isomorphic complements"};
    app.require_subcommand(1);
    Common common;
    app.add_option("--jobs", common.jobs, "worker threads")->check(CLI::PositiveNumber);

    auto* construct = app.add_subcommand("construct", "build a curve pair and certify it");
    std::string kind;
    ConstructArgs cargs;
    construct->add_option("kind", kind)
        ->required()
        ->check(CLI::IsMember({"sl2", "negativity3", "psi-bm", "family-char0", "family-charp", "degree7", "costa", "line-aut"}));
    construct->add_option("--field", common.field, "Q or F<p>");
    construct->add_option("--a", cargs.a, "sl2: a(y); degree7: a0,a1,a2,a3");
    construct->add_option("--b", cargs.b, "b(y)");
    construct->add_option("--c", cargs.c, "c(y)");
    construct->add_option("--d", cargs.d, "sl2: d(y); psi-bm: exponent d");
    construct->add_option("--f", cargs.f, "negativity3: f(y)");
    construct->add_option("--n", cargs.n, "exponent n");
    construct->add_option("--m", cargs.m, "exponent m");
    construct->add_option("--mu", cargs.mu, "scalar mu");
    construct->add_option("--lambda", cargs.lambda, "scalar lambda");
    construct->add_option("--sign", cargs.sign, "line-aut: +1 or -1");
    construct->add_option("--s-num", cargs.s_num, "line-aut: numerator of s(x)");
    construct->add_option("--s-xpow", cargs.s_xpow, "line-aut: s = s_num / x^s_xpow");
    construct->add_option("--P", cargs.P, "costa: binary form P(x, y)");
    construct->add_option("--p", cargs.p, "family-charp: characteristic");
    construct->add_option("--map-out", cargs.map_out, "write the map JSON here");
    construct->add_option("--f-out", cargs.f_out, "write C here");
    construct->add_option("--g-out", cargs.g_out, "write D here");
    construct->add_option("--jobs", common.jobs)->check(CLI::PositiveNumber);

    auto* verify = app.add_subcommand("verify", "certify a map against two curves");
    std::string map_path, f_arg, g_arg, mode = "affine";
    verify->add_option("--map", map_path)->required();
    verify->add_option("--f", f_arg)->required();
    verify->add_option("--g", g_arg)->required();
    verify->add_option("--mode", mode)->check(CLI::IsMember({"affine", "cone"}));

    auto* test = app.add_subcommand("test", "equivalence and isomorphism tests");
    std::string test_kind;
    TestArgs targs;
    test->add_option("kind", test_kind)->required()->check(CLI::IsMember({"equiv-section", "spec-iso", "pgl2-orbit", "costa-equiv"}));
    test->add_option("--field", common.field);
    test->add_option("--p", targs.p);
    test->add_option("--q", targs.q);
    test->add_option("--a1", targs.a1);
    test->add_option("--b1", targs.b1);
    test->add_option("--a2", targs.a2);
    test->add_option("--b2", targs.b2);
    test->add_option("--S", targs.S, "comma list, inf for the point at infinity");
    test->add_option("--T", targs.T);
    test->add_option("--P", targs.P);
    test->add_option("--Pt", targs.Pt);
    test->add_option("--jobs", common.jobs)->check(CLI::PositiveNumber);

    auto* points = app.add_subcommand("points", "count F_q points and check map bijectivity");
    std::string pf, pg, pmap;
    points->add_option("--field", common.field)->required();
    points->add_option("--f", pf)->required();
    points->add_option("--g", pg);
    points->add_option("--map", pmap);
    points->add_option("--jobs", common.jobs)->check(CLI::PositiveNumber);

    auto* convert = app.add_subcommand("convert", "round-trip polynomials and maps");
    std::string conv_in, conv_to = "json";
    convert->add_option("--in", conv_in)->required();
    convert->add_option("--to", conv_to)->check(CLI::IsMember({"json", "text"}));
    convert->add_option("--field", common.field);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*construct) return run_construct(kind, common, cargs);
        if (*verify) return run_verify(map_path, f_arg, g_arg, mode);
        if (*test) return run_test(test_kind, common, targs);
        if (*points) return run_points(common, pf, pg, pmap);
        if (*convert) return run_convert(common, conv_in, conv_to);
    } catch (const Error& e) {
        return report_error(to_string(e.kind()), e.what());
    } catch (const std::exception& e) {
        return report_error("InternalError", e.what());
    }
    return kExitUsage;
}
