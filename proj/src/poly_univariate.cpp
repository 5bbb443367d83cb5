#include <algorithm>
#include <functional>

#include "planecomp/config.hpp"
#include "planecomp/error.hpp"
#include "planecomp/poly.hpp"

namespace planecomp {

namespace {

using Dense = std::vector<Scalar>;

struct UniContext {
    Field field;
    VarSet vars;
    std::size_t var;
};

UniContext context_for(const MultiPoly& f, const MultiPoly& g, std::string_view var) {
    if (!(f.field() == g.field()))
        throw Error(ErrorKind::FieldMismatch, f.field().to_string() + " vs " + g.field().to_string());
    VarSet vars = f.vars().union_with(g.vars());
    if (!vars.index_of(var)) vars = vars.union_with(VarSet{std::string(var)});
    return {f.field(), vars, vars.require_index(var)};
}

Dense to_dense(const MultiPoly& p, const UniContext& ctx) {
    MultiPoly q = p.embed(ctx.vars);
    Dense out;
    for (const auto& t : q.terms()) {
        for (std::size_t i = 0; i < ctx.vars.size(); ++i)
            if (i != ctx.var && t.mono.exps[i])
                throw Error(ErrorKind::NotUnivariate, "variable '" + ctx.vars[i] + "' occurs");
        std::size_t e = t.mono.exps[ctx.var];
        if (out.size() <= e) out.resize(e + 1, Scalar::zero(ctx.field));
        out[e] = t.coeff;
    }
    return out;
}

MultiPoly from_dense(const Dense& d, const UniContext& ctx) {
    std::vector<Term> terms;
    for (std::size_t e = 0; e < d.size(); ++e) {
        if (d[e].is_zero()) continue;
        Monomial m;
        m.exps[ctx.var] = static_cast<std::uint16_t>(e);
        terms.push_back({m, d[e]});
    }
    return MultiPoly::from_terms(ctx.field, ctx.vars, std::move(terms));
}

void trim(Dense& d) {
    while (!d.empty() && d.back().is_zero()) d.pop_back();
}

Dense sub(Dense a, const Dense& b, const Field& field) {
    if (a.size() < b.size()) a.resize(b.size(), Scalar::zero(field));
    for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    trim(a);
    return a;
}

Dense mul(const Dense& a, const Dense& b, const Field& field) {
    if (a.empty() || b.empty()) return {};
    Dense out(a.size() + b.size() - 1, Scalar::zero(field));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    trim(out);
    return out;
}

std::pair<Dense, Dense> divmod(Dense a, const Dense& b, const Field& field) {
    if (b.empty()) throw Error(ErrorKind::ZeroDivisor, "division by the zero polynomial");
    trim(a);
    Dense q;
    if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, Scalar::zero(field));
    Scalar inv = b.back().inv();
    while (a.size() >= b.size()) {
        std::size_t shift = a.size() - b.size();
        Scalar c = a.back() * inv;
        q[shift] = c;
        for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= c * b[j];
        a.pop_back();
        trim(a);
    }
    trim(q);
    return {q, a};
}

Scalar eval(const Dense& a, const Scalar& x, const Field& field) {
    Scalar acc = Scalar::zero(field);
    for (auto it = a.rbegin(); it != a.rend(); ++it) acc = acc * x + *it;
    return acc;
}

}  // namespace

DivMod uni_divmod(const MultiPoly& f, const MultiPoly& g, std::string_view var) {
    UniContext ctx = context_for(f, g, var);
    Dense df = to_dense(f, ctx), dg = to_dense(g, ctx);
    trim(dg);
    auto [q, r] = divmod(df, dg, ctx.field);
    return {from_dense(q, ctx), from_dense(r, ctx)};
}

ExtGcd uni_ext_gcd(const MultiPoly& f, const MultiPoly& g, std::string_view var) {
    UniContext ctx = context_for(f, g, var);
    Dense a = to_dense(f, ctx), b = to_dense(g, ctx);
    trim(a);
    trim(b);
    if (a.empty() && b.empty()) throw Error(ErrorKind::PreconditionViolated, "gcd of two zero polynomials");
    Dense one{Scalar::one(ctx.field)};
    // invariant: s0*f + u0*g = a, s1*f + u1*g = b
    Dense s0 = one, u0{}, s1{}, u1 = one;
    while (!b.empty()) {
        auto [q, r] = divmod(a, b, ctx.field);
        Dense s2 = sub(s0, mul(q, s1, ctx.field), ctx.field);
        Dense u2 = sub(u0, mul(q, u1, ctx.field), ctx.field);
        a = std::move(b);
        b = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
        u0 = std::move(u1);
        u1 = std::move(u2);
    }
    Scalar inv = a.back().inv();
    for (auto& c : a) c *= inv;
    for (auto& c : s0) c *= inv;
    for (auto& c : u0) c *= inv;
    trim(s0);
    trim(u0);
    return {from_dense(a, ctx), from_dense(s0, ctx), from_dense(u0, ctx)};
}

MultiPoly q_from_p(const MultiPoly& p, const Scalar& lambda, std::string_view var) {
    UniContext ctx = context_for(p, p, var);
    Dense dp = to_dense(p, ctx);
    trim(dp);
    if (dp.size() < 2) throw Error(ErrorKind::PreconditionViolated, "q_from_p needs deg P >= 1");
    if (eval(dp, lambda, ctx.field).is_zero())
        throw Error(ErrorKind::RootAtLambda, "P(" + lambda.to_string() + ") = 0");
    std::size_t d = dp.size() - 1;
    // sum_i p_i (lambda t + 1)^i t^(d-i)
    Dense result(d + 1, Scalar::zero(ctx.field));
    Dense lin{Scalar::one(ctx.field), lambda};
    Dense power{Scalar::one(ctx.field)};
    for (std::size_t i = 0; i <= d; ++i) {
        if (i) power = mul(power, lin, ctx.field);
        for (std::size_t j = 0; j < power.size(); ++j) result[j + d - i] += dp[i] * power[j];
    }
    trim(result);
    return from_dense(result, ctx);
}

const char* to_string(Squarefree s) noexcept {
    switch (s) {
        case Squarefree::Yes: return "yes";
        case Squarefree::No: return "no";
        case Squarefree::NotDecidable: return "not-decidable";
    }
    return "unknown";
}

Squarefree is_squarefree(const MultiPoly& p, std::string_view var) {
    if (p.is_zero()) throw Error(ErrorKind::PreconditionViolated, "is_squarefree of zero");
    UniContext ctx = context_for(p, p, var);
    Dense dp = to_dense(p, ctx);
    trim(dp);
    if (dp.size() <= 1) return Squarefree::Yes;
    Dense deriv;
    for (std::size_t i = 1; i < dp.size(); ++i) deriv.push_back(dp[i] * Scalar::from_int(ctx.field, static_cast<long long>(i)));
    trim(deriv);
    if (deriv.empty()) return Squarefree::NotDecidable;
    Dense a = dp, b = deriv;
    while (!b.empty()) {
        auto r = divmod(a, b, ctx.field).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.size() == 1 ? Squarefree::Yes : Squarefree::No;
}

namespace {

// Enumerates every coefficient vector of length n over F_p with the first
// entry fixed to 1 (monic up to scalar), calling visit until it returns true.
bool enumerate_normalized(std::size_t n, std::uint64_t p, const std::function<bool(const std::vector<std::uint64_t>&)>& visit) {
    std::vector<std::uint64_t> digits(n, 0);
    if (n == 0) return false;
    digits[0] = 1;
    while (true) {
        if (visit(digits)) return true;
        std::size_t i = n;
        while (i > 1) {
            --i;
            if (++digits[i] < p) break;
            digits[i] = 0;
            if (i == 1) return false;
        }
        if (n == 1) return false;
    }
}

constexpr double kMaxIrreducibilityCandidates = 4e6;

}  // namespace

bool irreducible_over_Fq(const MultiPoly& f_in, const Field& field) {
    if (!field.is_prime()) throw Error(ErrorKind::InfiniteField, "irreducibility is decided over prime fields only");
    if (!(f_in.field() == field)) throw Error(ErrorKind::FieldMismatch, f_in.field().to_string() + " vs " + field.to_string());
    std::vector<std::size_t> used;
    for (std::size_t i = 0; i < f_in.vars().size(); ++i)
        if (f_in.involves(i)) used.push_back(i);
    if (used.size() > 2) throw Error(ErrorKind::PreconditionViolated, "irreducibility test takes at most two variables");
    int deg = f_in.total_degree();
    if (deg > degree_bound())
        throw Error(ErrorKind::DegreeBoundExceeded,
                    "degree " + std::to_string(deg) + " exceeds bound " + std::to_string(degree_bound()));
    if (deg <= 0) return false;  // units and zero are not irreducible
    if (deg == 1) return true;
    const std::uint64_t p = field.modulus();
    const MultiPoly& f = f_in;

    // candidate monomials of degree 1..deg/2 in the used variables, in
    // decreasing lex order so that the first nonzero coefficient is leading
    int half = deg / 2;
    for (int k = 1; k <= half; ++k) {
        std::vector<Monomial> monos;
        if (used.size() == 1) {
            for (int e = k; e >= 0; --e) {
                Monomial m;
                m.exps[used[0]] = static_cast<std::uint16_t>(e);
                monos.push_back(m);
            }
        } else {
            for (int total = k; total >= 0; --total)
                for (int a = total; a >= 0; --a) {
                    Monomial m;
                    m.exps[used[0]] = static_cast<std::uint16_t>(a);
                    m.exps[used[1]] = static_cast<std::uint16_t>(total - a);
                    monos.push_back(m);
                }
            std::sort(monos.begin(), monos.end(), std::greater<>());
        }
        // candidates of exact degree k, normalised so the lex-leading
        // coefficient is 1: enumerate over the position of the leading term
        for (std::size_t lead = 0; lead < monos.size(); ++lead) {
            if (monos[lead].total_degree() != static_cast<unsigned>(k) && used.size() == 1) continue;
            std::size_t n = monos.size() - lead;
            double count = 1;
            for (std::size_t i = 1; i < n; ++i) count *= static_cast<double>(p);
            if (count > kMaxIrreducibilityCandidates)
                throw Error(ErrorKind::SearchTooLarge, "trial factorisation would test " + std::to_string(count) + " candidates");
            bool any_exact_degree = false;
            for (std::size_t i = lead; i < monos.size(); ++i)
                if (monos[i].total_degree() == static_cast<unsigned>(k)) any_exact_degree = true;
            if (!any_exact_degree) continue;
            bool found = enumerate_normalized(n, p, [&](const std::vector<std::uint64_t>& digits) {
                std::vector<Term> terms;
                bool exact = false;
                for (std::size_t i = 0; i < n; ++i) {
                    if (!digits[i]) continue;
                    const Monomial& m = monos[lead + i];
                    if (m.total_degree() == static_cast<unsigned>(k)) exact = true;
                    terms.push_back({m, Scalar::from_residue(field, digits[i])});
                }
                if (!exact) return false;
                MultiPoly g = MultiPoly::from_terms(field, f.vars(), std::move(terms));
                return divexact(f, g).has_value();
            });
            if (found) return false;
        }
    }
    return true;
}

}  // namespace planecomp
