#include "planecomp/poly_io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "planecomp/error.hpp"

namespace planecomp {

namespace {

constexpr std::string_view kPreferredOrder[] = {"x", "y", "z", "t", "u", "v", "w"};

struct RawFactor {
    std::string var;  // empty for a numeric factor
    std::string number;
    unsigned exponent = 1;
};

struct RawTerm {
    bool negative = false;
    std::vector<RawFactor> factors;
};

class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) {}

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool done() {
        skip_ws();
        return pos_ >= text_.size();
    }
    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }
    bool accept(char c) {
        if (peek() != c) return false;
        ++pos_;
        return true;
    }
    std::string digits() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        return std::string(text_.substr(start, pos_ - start));
    }
    std::string identifier() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
        return std::string(text_.substr(start, pos_ - start));
    }
    [[noreturn]] void fail(const std::string& what) const {
        throw Error(ErrorKind::ParseError, what + " at offset " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

RawFactor parse_factor(Lexer& lex) {
    RawFactor f;
    char c = lex.peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
        f.number = lex.digits();
        if (lex.accept('/')) {
            std::string den = lex.digits();
            if (den.empty()) lex.fail("expected denominator");
            f.number += "/" + den;
        }
        return f;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        f.var = lex.identifier();
        if (lex.accept('^')) {
            std::string e = lex.digits();
            if (e.empty()) lex.fail("expected exponent");
            unsigned value = 0;
            auto [ptr, ec] = std::from_chars(e.data(), e.data() + e.size(), value);
            if (ec != std::errc() || value > 0xFFFFu) lex.fail("exponent out of range");
            f.exponent = value;
        }
        return f;
    }
    lex.fail("expected a number or variable");
}

std::vector<RawTerm> parse_raw(std::string_view text) {
    Lexer lex(text);
    std::vector<RawTerm> terms;
    if (lex.done()) lex.fail("empty polynomial");
    bool first = true;
    while (!lex.done()) {
        RawTerm term;
        if (lex.accept('-')) term.negative = true;
        else if (!lex.accept('+') && !first) lex.fail("expected '+' or '-'");
        first = false;
        term.factors.push_back(parse_factor(lex));
        while (lex.accept('*')) term.factors.push_back(parse_factor(lex));
        terms.push_back(std::move(term));
    }
    return terms;
}

}  // namespace

VarSet canonical_varset(const std::vector<std::string>& names) {
    std::vector<std::string> out;
    for (auto pref : kPreferredOrder)
        if (std::find(names.begin(), names.end(), pref) != names.end()) out.emplace_back(pref);
    for (const auto& n : names)
        if (std::find(out.begin(), out.end(), n) == out.end()) out.push_back(n);
    return VarSet(std::move(out));
}

MultiPoly parse_poly(std::string_view text, const Field& field, const std::optional<VarSet>& vars_opt) {
    auto raw = parse_raw(text);
    VarSet vars;
    if (vars_opt) {
        vars = *vars_opt;
    } else {
        std::vector<std::string> seen;
        for (const auto& t : raw)
            for (const auto& f : t.factors)
                if (!f.var.empty() && std::find(seen.begin(), seen.end(), f.var) == seen.end()) seen.push_back(f.var);
        vars = canonical_varset(seen);
    }
    std::vector<Term> terms;
    for (const auto& t : raw) {
        Scalar c = Scalar::one(field);
        Monomial m;
        for (const auto& f : t.factors) {
            if (f.var.empty()) {
                c *= Scalar::parse(field, f.number);
                continue;
            }
            auto idx = vars.index_of(f.var);
            if (!idx) throw Error(ErrorKind::ParseError, "variable '" + f.var + "' not in the variable list");
            unsigned e = m.exps[*idx] + f.exponent;
            if (e > 0xFFFFu) throw Error(ErrorKind::ExponentOverflow, "exponent exceeds 65535");
            m.exps[*idx] = static_cast<std::uint16_t>(e);
        }
        if (t.negative) c = -c;
        terms.push_back({m, c});
    }
    return MultiPoly::from_terms(field, vars, std::move(terms));
}

std::string format_poly(const MultiPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& t : p.terms()) {
        std::string coeff = t.coeff.to_string();
        bool negative = !coeff.empty() && coeff[0] == '-';
        if (negative) coeff.erase(0, 1);
        if (negative) out += '-';
        else if (!first) out += '+';
        first = false;
        std::string mono;
        for (std::size_t i = 0; i < p.vars().size(); ++i) {
            unsigned e = t.mono.exps[i];
            if (!e) continue;
            if (!mono.empty()) mono += '*';
            mono += p.vars()[i];
            if (e > 1) mono += "^" + std::to_string(e);
        }
        if (mono.empty()) out += coeff;
        else if (coeff == "1") out += mono;
        else out += coeff + "*" + mono;
    }
    return out;
}

Json poly_to_json(const MultiPoly& p) {
    Json j;
    j["field"] = p.field().to_string();
    j["vars"] = p.vars().names();
    Json terms = Json::array();
    for (const auto& t : p.terms()) {
        Json exps = Json::array();
        for (std::size_t i = 0; i < p.vars().size(); ++i) exps.push_back(t.mono.exps[i]);
        terms.push_back(Json{{"coeff", t.coeff.to_string()}, {"exps", exps}});
    }
    j["terms"] = terms;
    return j;
}

MultiPoly poly_from_json(const Json& j) {
    try {
        Field field = Field::parse(j.at("field").get<std::string>());
        VarSet vars(j.at("vars").get<std::vector<std::string>>());
        std::vector<Term> terms;
        for (const auto& t : j.at("terms")) {
            const auto& exps = t.at("exps");
            if (exps.size() != vars.size()) throw Error(ErrorKind::ParseError, "exponent vector length mismatch");
            Monomial m;
            for (std::size_t i = 0; i < vars.size(); ++i) {
                auto e = exps[i].get<long long>();
                if (e < 0 || e > 0xFFFF) throw Error(ErrorKind::ParseError, "exponent out of range");
                m.exps[i] = static_cast<std::uint16_t>(e);
            }
            const auto& c = t.at("coeff");
            Scalar coeff = c.is_string() ? Scalar::parse(field, c.get<std::string>())
                                         : Scalar::from_int(field, c.get<long long>());
            terms.push_back({m, coeff});
        }
        return MultiPoly::from_terms(field, vars, std::move(terms));
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::ParseError, std::string("bad polynomial JSON: ") + e.what());
    }
}

MultiPoly poly_from_any(const Json& j, const Field& field, const std::optional<VarSet>& vars) {
    if (j.is_string()) return parse_poly(j.get<std::string>(), field, vars);
    if (j.is_number_integer()) return MultiPoly::constant(field, vars.value_or(VarSet{}), j.get<long long>());
    MultiPoly p = poly_from_json(j);
    if (!(p.field() == field)) throw Error(ErrorKind::FieldMismatch, p.field().to_string() + " vs " + field.to_string());
    return vars ? p.embed(vars->union_with(p.vars())).restrict_to(*vars) : p;
}

}  // namespace planecomp
