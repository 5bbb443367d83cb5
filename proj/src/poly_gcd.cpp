#include <algorithm>

#include "planecomp/error.hpp"
#include "planecomp/poly.hpp"

namespace planecomp {

std::vector<MultiPoly> coefficients_in(const MultiPoly& f, std::size_t var) {
    std::vector<std::vector<Term>> buckets(static_cast<std::size_t>(std::max(f.degree_in(var), 0)) + 1);
    for (const auto& t : f.terms()) {
        Monomial m = t.mono;
        std::size_t e = m.exps[var];
        m.exps[var] = 0;
        buckets[e].push_back({m, t.coeff});
    }
    std::vector<MultiPoly> out;
    out.reserve(buckets.size());
    for (auto& b : buckets) out.push_back(MultiPoly::from_terms(f.field(), f.vars(), std::move(b)));
    return out;
}

MultiPoly from_coefficients(const std::vector<MultiPoly>& coeffs, std::size_t var, const Field& field,
                            const VarSet& vars) {
    std::vector<Term> terms;
    for (std::size_t e = 0; e < coeffs.size(); ++e)
        for (const auto& t : coeffs[e].terms()) {
            Monomial m = t.mono;
            m.exps[var] = static_cast<std::uint16_t>(e);
            terms.push_back({m, t.coeff});
        }
    return MultiPoly::from_terms(field, vars, std::move(terms));
}

MultiPoly compose_poly(const MultiPoly& f, std::span<const MultiPoly> values) {
    if (values.size() < f.vars().size())
        throw Error(ErrorKind::DimensionMismatch, "compose_poly needs one value per variable");
    const VarSet& out_vars = values.empty() ? f.vars() : values[0].vars();
    MultiPoly result(f.field(), out_vars);
    std::vector<std::vector<MultiPoly>> powers(f.vars().size());
    for (const auto& t : f.terms()) {
        MultiPoly term = MultiPoly::constant(f.field(), out_vars, t.coeff);
        for (std::size_t i = 0; i < f.vars().size(); ++i) {
            unsigned e = t.mono.exps[i];
            if (!e) continue;
            auto& pw = powers[i];
            if (pw.empty()) pw.push_back(MultiPoly::constant(f.field(), out_vars, 1));
            while (pw.size() <= e) pw.push_back(pw.back() * values[i]);
            term = term * pw[e];
        }
        result += term;
    }
    return result;
}

namespace {

Monomial monomial_content(const MultiPoly& f) {
    Monomial m = f.terms().front().mono;
    for (const auto& t : f.terms())
        for (std::size_t i = 0; i < kMaxVars; ++i) m.exps[i] = std::min(m.exps[i], t.mono.exps[i]);
    return m;
}

MultiPoly gcd_rec(const MultiPoly& a, const MultiPoly& b);

MultiPoly content_in(const MultiPoly& f, std::size_t var) {
    auto coeffs = coefficients_in(f, var);
    MultiPoly g(f.field(), f.vars());
    for (const auto& c : coeffs) {
        if (c.is_zero()) continue;
        g = g.is_zero() ? c.monic() : gcd_rec(g, c);
        if (g.is_constant()) break;
    }
    return g;
}

// Pseudo-remainder of a by b in `var`, both nonzero with deg_var a >= deg_var b.
MultiPoly prem(const MultiPoly& a, const MultiPoly& b, std::size_t var) {
    auto bc = coefficients_in(b, var);
    std::size_t db = bc.size() - 1;
    const MultiPoly& lb = bc.back();
    MultiPoly r = a;
    while (!r.is_zero() && r.degree_in(var) >= static_cast<int>(db)) {
        auto rc = coefficients_in(r, var);
        std::size_t dr = rc.size() - 1;
        Monomial shift;
        shift.exps[var] = static_cast<std::uint16_t>(dr - db);
        // r <- lb*r - lc(r)*var^(dr-db)*b
        MultiPoly t = (rc.back() * b).times_monomial(shift, Scalar::one(r.field()));
        r = lb * r - t;
        if (!r.is_zero()) r = r.scaled(r.leading_coeff().inv());
    }
    return r;
}

MultiPoly gcd_rec(const MultiPoly& a_in, const MultiPoly& b_in) {
    if (a_in.is_zero()) return b_in.monic();
    if (b_in.is_zero()) return a_in.monic();
    if (a_in.is_constant() || b_in.is_constant()) return MultiPoly::constant(a_in.field(), a_in.vars(), 1);
    if (a_in.proportional_to(b_in)) return a_in.monic();

    Monomial ma = monomial_content(a_in), mb = monomial_content(b_in);
    Monomial mg;
    for (std::size_t i = 0; i < kMaxVars; ++i) mg.exps[i] = std::min(ma.exps[i], mb.exps[i]);
    Scalar one = Scalar::one(a_in.field());
    MultiPoly a = *divexact(a_in, MultiPoly::monomial(a_in.field(), a_in.vars(), ma, one));
    MultiPoly b = *divexact(b_in, MultiPoly::monomial(b_in.field(), b_in.vars(), mb, one));
    MultiPoly mono = MultiPoly::monomial(a_in.field(), a_in.vars(), mg, one);
    if (a.is_constant() || b.is_constant()) return mono;

    // a variable present in only one argument reduces to its content
    for (std::size_t v = 0; v < a.vars().size(); ++v) {
        bool in_a = a.involves(v), in_b = b.involves(v);
        if (in_a && !in_b) return mono * gcd_rec(content_in(a, v), b);
        if (in_b && !in_a) return mono * gcd_rec(a, content_in(b, v));
    }

    // main variable: smallest combined degree
    std::size_t var = 0;
    int best = -1;
    for (std::size_t v = 0; v < a.vars().size(); ++v) {
        if (!a.involves(v)) continue;
        int score = std::max(a.degree_in(v), b.degree_in(v));
        if (best < 0 || score < best) {
            best = score;
            var = v;
        }
    }

    MultiPoly ca = content_in(a, var), cb = content_in(b, var);
    MultiPoly cg = gcd_rec(ca, cb);
    MultiPoly pa = *divexact(a, ca), pb = *divexact(b, cb);
    if (pa.degree_in(var) < pb.degree_in(var)) std::swap(pa, pb);
    while (!pb.is_zero() && pb.degree_in(var) > 0) {
        MultiPoly r = prem(pa, pb, var);
        pa = std::move(pb);
        if (r.is_zero()) {
            pb = r;
            break;
        }
        MultiPoly cr = content_in(r, var);
        pb = *divexact(r, cr);
    }
    MultiPoly g = pb.is_zero() ? pa : MultiPoly::constant(a.field(), a.vars(), 1);
    if (pb.is_zero()) g = *divexact(g, content_in(g, var));
    return (mono * cg * g).monic();
}

}  // namespace

MultiPoly poly_gcd(const MultiPoly& a_in, const MultiPoly& b_in) {
    auto [a, b] = unify(a_in, b_in);
    if (a.is_zero() && b.is_zero()) return a;
    return gcd_rec(a, b);
}

}  // namespace planecomp
