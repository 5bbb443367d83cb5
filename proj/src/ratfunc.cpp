#include "planecomp/ratfunc.hpp"

#include <algorithm>

#include "planecomp/error.hpp"

namespace planecomp {

namespace {

// Folds constant bases and base leading coefficients into the numerator and
// merges repeated bases.
RationalFunction normalized(MultiPoly num, std::vector<DenFactor> factors, std::vector<DenFactor>& out) {
    out.clear();
    Scalar scale = Scalar::one(num.field());
    for (auto& f : factors) {
        if (f.exp == 0) continue;
        if (f.base.is_zero()) throw Error(ErrorKind::DenominatorIdenticallyZero, "zero denominator factor");
        if (f.base.is_constant()) {
            scale *= f.base.constant_term().pow(f.exp);
            continue;
        }
        const Scalar& lc = f.base.leading_coeff();
        if (!lc.is_one()) {
            scale *= lc.pow(f.exp);
            f.base = f.base.monic();
        }
        auto it = std::find_if(out.begin(), out.end(), [&](const DenFactor& g) { return g.base == f.base; });
        if (it != out.end()) it->exp += f.exp;
        else out.push_back(std::move(f));
    }
    if (!scale.is_one()) num = num.scaled(scale.inv());
    return RationalFunction(std::move(num));
}

std::vector<DenFactor> embed_factors(const std::vector<DenFactor>& fs, const VarSet& vars) {
    std::vector<DenFactor> out;
    out.reserve(fs.size());
    for (const auto& f : fs) out.push_back({f.base.embed(vars), f.exp});
    return out;
}

}  // namespace

RationalFunction::RationalFunction(MultiPoly num) : num_(std::move(num)) {}

RationalFunction::RationalFunction(MultiPoly num, const MultiPoly& den) {
    if (den.is_zero()) throw Error(ErrorKind::DenominatorIdenticallyZero, "zero denominator");
    auto [n, d] = unify(num, den);
    Split s = split_with_hints(d, {});
    *this = from_factors(n.scaled(s.constant.inv()), std::move(s.factors));
}

RationalFunction RationalFunction::from_factors(MultiPoly num, std::vector<DenFactor> factors) {
    VarSet vars = num.vars();
    for (const auto& f : factors) vars = vars.union_with(f.base.vars());
    num = num.embed(vars);
    for (auto& f : factors) f.base = f.base.embed(vars);
    std::vector<DenFactor> merged;
    RationalFunction r = normalized(std::move(num), std::move(factors), merged);
    r.factors_ = std::move(merged);
    return r;
}

const MultiPoly& RationalFunction::den() const {
    if (!den_cache_) {
        MultiPoly d = MultiPoly::constant(num_.field(), num_.vars(), 1);
        for (const auto& f : factors_) d = d * f.base.pow(f.exp);
        den_cache_ = std::move(d);
    }
    return *den_cache_;
}

RationalFunction RationalFunction::embed(const VarSet& vars) const {
    if (vars == num_.vars()) return *this;
    RationalFunction r(num_.embed(vars));
    r.factors_ = embed_factors(factors_, vars);
    return r;
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction r = *this;
    r.num_ = -r.num_;
    return r;
}

namespace {

std::pair<RationalFunction, RationalFunction> unify_rf(const RationalFunction& a, const RationalFunction& b) {
    if (!(a.field() == b.field()))
        throw Error(ErrorKind::FieldMismatch, a.field().to_string() + " vs " + b.field().to_string());
    if (a.vars() == b.vars()) return {a, b};
    VarSet u = a.vars().union_with(b.vars());
    return {a.embed(u), b.embed(u)};
}

MultiPoly product_of(const std::vector<DenFactor>& fs, const Field& field, const VarSet& vars) {
    MultiPoly d = MultiPoly::constant(field, vars, 1);
    for (const auto& f : fs)
        if (f.exp) d = d * f.base.pow(f.exp);
    return d;
}

}  // namespace

RationalFunction operator+(const RationalFunction& a_in, const RationalFunction& b_in) {
    auto [a, b] = unify_rf(a_in, b_in);
    if (a.factors_.empty() && b.factors_.empty()) return RationalFunction(a.num_ + b.num_);
    // common denominator: per-base maximum exponent
    std::vector<DenFactor> common = a.factors_;
    std::vector<DenFactor> extra_a;  // multiplies a's numerator
    std::vector<DenFactor> extra_b;
    for (const auto& fb : b.factors_) {
        auto it = std::find_if(common.begin(), common.end(), [&](const DenFactor& f) { return f.base == fb.base; });
        if (it == common.end()) {
            common.push_back(fb);
            extra_a.push_back(fb);
        } else if (fb.exp > it->exp) {
            extra_a.push_back({fb.base, fb.exp - it->exp});
            it->exp = fb.exp;
        }
    }
    for (const auto& c : common) {
        auto it = std::find_if(b.factors_.begin(), b.factors_.end(), [&](const DenFactor& f) { return f.base == c.base; });
        unsigned have = it == b.factors_.end() ? 0 : it->exp;
        if (c.exp > have) extra_b.push_back({c.base, c.exp - have});
    }
    MultiPoly num = a.num_ * product_of(extra_a, a.field(), a.vars()) + b.num_ * product_of(extra_b, a.field(), a.vars());
    RationalFunction r(std::move(num));
    r.factors_ = std::move(common);
    return r;
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }

RationalFunction operator*(const RationalFunction& a_in, const RationalFunction& b_in) {
    auto [a, b] = unify_rf(a_in, b_in);
    std::vector<DenFactor> fs = a.factors_;
    fs.insert(fs.end(), b.factors_.begin(), b.factors_.end());
    return RationalFunction::from_factors(a.num_ * b.num_, std::move(fs));
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    std::vector<MultiPoly> hints;
    for (const auto& f : a.factors()) hints.push_back(f.base);
    for (const auto& f : b.factors()) hints.push_back(f.base);
    return a * b.inverse(hints);
}

RationalFunction RationalFunction::inverse(std::span<const MultiPoly> hints) const {
    if (num_.is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of the zero rational function");
    Split s = split_with_hints(num_, hints);
    return from_factors(den().scaled(s.constant.inv()), std::move(s.factors));
}

bool RationalFunction::equals(const RationalFunction& other) const {
    auto [a, b] = unify_rf(*this, other);
    return a.num_ * b.den() == b.num_ * a.den();
}

bool RationalFunction::equals(const MultiPoly& p) const {
    auto [a, q] = unify(num_, p);
    RationalFunction self = embed(a.vars());
    return self.num_ == q * self.den();
}

std::optional<Scalar> RationalFunction::evaluate(std::span<const Scalar> point) const {
    Scalar d = Scalar::one(num_.field());
    for (const auto& f : factors_) d *= f.base.evaluate(point).pow(f.exp);
    if (d.is_zero()) return std::nullopt;
    return num_.evaluate(point) / d;
}

// ---------------------------------------------------------------------------

Split split_with_hints(const MultiPoly& p, std::span<const MultiPoly> hints) {
    if (p.is_zero()) throw Error(ErrorKind::DenominatorIdenticallyZero, "cannot split the zero polynomial");
    Split out{Scalar::one(p.field()), {}};
    MultiPoly rest = p;
    // monomial content, one variable at a time
    for (std::size_t v = 0; v < p.vars().size(); ++v) {
        unsigned m = 0xFFFF;
        for (const auto& t : rest.terms()) m = std::min<unsigned>(m, t.mono.exps[v]);
        if (m == 0) continue;
        Monomial mono;
        mono.exps[v] = static_cast<std::uint16_t>(m);
        rest = *divexact(rest, MultiPoly::monomial(p.field(), p.vars(), mono, Scalar::one(p.field())));
        Monomial single;
        single.exps[v] = 1;
        out.factors.push_back({MultiPoly::monomial(p.field(), p.vars(), single, Scalar::one(p.field())), m});
    }
    for (const auto& h_in : hints) {
        if (rest.is_constant()) break;
        if (h_in.is_constant() || h_in.is_zero()) continue;
        MultiPoly h = h_in.embed(p.vars().union_with(h_in.vars())).monic();
        if (h.size() == 1) continue;  // monomials were handled above
        unsigned count = 0;
        while (!rest.is_constant()) {
            auto q = divexact(rest, h);
            if (!q) break;
            rest = std::move(*q);
            ++count;
        }
        if (count) {
            auto it = std::find_if(out.factors.begin(), out.factors.end(), [&](const DenFactor& f) { return f.base == h; });
            if (it != out.factors.end()) it->exp += count;
            else out.factors.push_back({h, count});
        }
    }
    if (rest.is_constant()) {
        out.constant = rest.constant_term();
    } else {
        out.constant = rest.leading_coeff();
        out.factors.push_back({rest.monic(), 1});
    }
    return out;
}

RationalFunction reduce(const RationalFunction& h) {
    MultiPoly num = h.num();
    std::vector<DenFactor> fs = h.factors();
    if (num.is_zero()) return RationalFunction(num);
    for (auto& f : fs) {
        while (f.exp > 0) {
            auto q = divexact(num, f.base);
            if (!q) break;
            num = std::move(*q);
            --f.exp;
        }
    }
    // gcd pass for what trial division cannot see (partial factors)
    constexpr std::size_t kMaxNumTerms = 300, kMaxBaseTerms = 120;
    constexpr int kMaxDegree = 30;
    for (std::size_t i = 0; i < fs.size(); ++i) {
        if (fs[i].exp == 0) continue;
        if (num.size() > kMaxNumTerms || fs[i].base.size() > kMaxBaseTerms || num.total_degree() > kMaxDegree ||
            fs[i].base.total_degree() > kMaxDegree)
            continue;
        MultiPoly g = poly_gcd(num, fs[i].base);
        if (g.is_constant()) continue;
        num = *divexact(num, g);
        MultiPoly rest = *divexact(fs[i].base, g);
        fs[i].exp -= 1;
        if (!rest.is_constant()) fs.push_back({rest, 1});
        else num = num.scaled(rest.constant_term().inv());
        --i;  // the same base may cancel again
    }
    return RationalFunction::from_factors(std::move(num), std::move(fs));
}

// ---------------------------------------------------------------------------

namespace {

using Exps = std::vector<long long>;

class SubEngine {
public:
    SubEngine(const Field& field, std::span<const RationalFunction> values) : field_(field) {
        out_ = values.empty() ? VarSet{} : values[0].vars();
        for (const auto& v : values) out_ = out_.union_with(v.vars());
        for (const auto& v : values) {
            RationalFunction e = v.embed(out_);
            Exps ex;
            for (const auto& f : e.factors()) {
                std::size_t b = base_index(f.base);
                if (ex.size() <= b) ex.resize(b + 1, 0);
                ex[b] += f.exp;
            }
            nums_.push_back(e.num());
            exps_.push_back(std::move(ex));
        }
        for (auto& ex : exps_) ex.resize(bases_.size(), 0);
        npow_.resize(nums_.size());
        bpow_.resize(bases_.size());
    }

    const VarSet& out_vars() const { return out_; }
    const std::vector<MultiPoly>& bases() const { return bases_; }

    std::size_t base_index(const MultiPoly& b) {
        for (std::size_t i = 0; i < bases_.size(); ++i)
            if (bases_[i] == b) return i;
        bases_.push_back(b);
        for (auto& ex : exps_) ex.resize(bases_.size(), 0);
        bpow_.resize(bases_.size());
        return bases_.size() - 1;
    }

    const MultiPoly& base_pow(std::size_t b, unsigned k) {
        auto& cache = bpow_[b];
        if (cache.empty()) cache.push_back(MultiPoly::constant(field_, out_, 1));
        while (cache.size() <= k) cache.push_back(cache.back() * bases_[b]);
        return cache[k];
    }

    const MultiPoly& num_pow(std::size_t v, unsigned k) {
        auto& cache = npow_[v];
        if (cache.empty()) cache.push_back(MultiPoly::constant(field_, out_, 1));
        while (cache.size() <= k) cache.push_back(cache.back() * nums_[v]);
        return cache[k];
    }

    std::pair<MultiPoly, Exps> run(const MultiPoly& g, std::size_t level) {
        std::size_t v = level;
        while (v < g.vars().size() && !g.involves(v)) ++v;
        if (v >= g.vars().size())
            return {MultiPoly::constant(field_, out_, g.constant_term()), Exps(bases_.size(), 0)};
        if (v >= nums_.size()) throw Error(ErrorKind::DimensionMismatch, "no value supplied for variable " + g.vars()[v]);
        auto coeffs = coefficients_in(g, v);
        std::vector<std::pair<MultiPoly, Exps>> parts(coeffs.size());
        Exps total(bases_.size(), 0);
        bool any = false;
        for (std::size_t k = 0; k < coeffs.size(); ++k) {
            if (coeffs[k].is_zero()) continue;
            parts[k] = run(coeffs[k], v + 1);
            parts[k].second.resize(bases_.size(), 0);
            for (std::size_t b = 0; b < bases_.size(); ++b)
                total[b] = any ? std::max(total[b], static_cast<long long>(k) * exps_[v][b] + parts[k].second[b])
                               : static_cast<long long>(k) * exps_[v][b] + parts[k].second[b];
            any = true;
        }
        MultiPoly acc(field_, out_);
        for (std::size_t k = 0; k < coeffs.size(); ++k) {
            if (coeffs[k].is_zero()) continue;
            MultiPoly term = parts[k].first;
            for (std::size_t b = 0; b < bases_.size(); ++b) {
                long long e = total[b] - static_cast<long long>(k) * exps_[v][b] - parts[k].second[b];
                if (e > 0) term = term * base_pow(b, static_cast<unsigned>(e));
            }
            if (k) term = term * num_pow(v, static_cast<unsigned>(k));
            acc += term;
        }
        return {std::move(acc), std::move(total)};
    }

private:
    Field field_;
    VarSet out_;
    std::vector<MultiPoly> nums_;
    std::vector<Exps> exps_;
    std::vector<MultiPoly> bases_;
    std::vector<std::vector<MultiPoly>> npow_, bpow_;
};

void check_values(const VarSet& vars, std::span<const RationalFunction> values, const Field& field) {
    if (values.size() != vars.size())
        throw Error(ErrorKind::DimensionMismatch, "expected " + std::to_string(vars.size()) + " values, got " +
                                                      std::to_string(values.size()));
    for (const auto& v : values)
        if (!(v.field() == field))
            throw Error(ErrorKind::FieldMismatch, v.field().to_string() + " vs " + field.to_string());
}

}  // namespace

RationalFunction substitute(const MultiPoly& f, std::span<const RationalFunction> values) {
    check_values(f.vars(), values, f.field());
    SubEngine engine(f.field(), values);
    auto [num, exps] = engine.run(f, 0);
    std::vector<DenFactor> fs;
    for (std::size_t b = 0; b < engine.bases().size(); ++b)
        if (exps[b] > 0) fs.push_back({engine.bases()[b], static_cast<unsigned>(exps[b])});
    return RationalFunction::from_factors(std::move(num), std::move(fs));
}

RationalFunction substitute(const RationalFunction& h, std::span<const RationalFunction> values) {
    check_values(h.vars(), values, h.field());
    SubEngine engine(h.field(), values);
    auto [num, num_exps] = engine.run(h.num(), 0);
    std::vector<MultiPoly> hints = engine.bases();
    for (const auto& f : h.factors()) hints.push_back(f.base.embed(engine.out_vars().union_with(f.base.vars())));

    Exps net(engine.bases().size(), 0);
    for (std::size_t b = 0; b < net.size(); ++b) net[b] = -num_exps[b];
    std::vector<DenFactor> den;
    Scalar scale = Scalar::one(h.field());
    for (const auto& f : h.factors()) {
        auto [bnum, bexps] = engine.run(f.base, 0);
        if (bnum.is_zero())
            throw Error(ErrorKind::DenominatorIdenticallyZero, "a denominator factor collapses to zero");
        bexps.resize(net.size(), 0);
        for (std::size_t b = 0; b < net.size(); ++b) net[b] += static_cast<long long>(f.exp) * bexps[b];
        Split s = split_with_hints(bnum, hints);
        scale *= s.constant.pow(f.exp);
        for (auto& part : s.factors) den.push_back({std::move(part.base), part.exp * f.exp});
    }
    net.resize(engine.bases().size(), 0);
    for (std::size_t b = 0; b < net.size(); ++b) {
        if (net[b] > 0) num = num * engine.base_pow(b, static_cast<unsigned>(net[b]));
        else if (net[b] < 0) den.push_back({engine.bases()[b], static_cast<unsigned>(-net[b])});
    }
    return RationalFunction::from_factors(num.scaled(scale.inv()), std::move(den));
}

}  // namespace planecomp
