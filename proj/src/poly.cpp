#include "planecomp/poly.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <unordered_map>

#include "planecomp/error.hpp"

namespace planecomp {

// ---- VarSet ---------------------------------------------------------------

namespace {

std::shared_ptr<const std::vector<std::string>> make_names(std::vector<std::string> names) {
    if (names.size() > kMaxVars)
        throw Error(ErrorKind::TooManyVariables,
                    std::to_string(names.size()) + " variables, at most " + std::to_string(kMaxVars));
    for (std::size_t i = 0; i < names.size(); ++i)
        for (std::size_t j = i + 1; j < names.size(); ++j)
            if (names[i] == names[j]) throw Error(ErrorKind::ParseError, "duplicate variable '" + names[i] + "'");
    return std::make_shared<const std::vector<std::string>>(std::move(names));
}

}  // namespace

VarSet::VarSet() : names_(std::make_shared<const std::vector<std::string>>()) {}
VarSet::VarSet(std::initializer_list<std::string> names) : names_(make_names(std::vector<std::string>(names))) {}
VarSet::VarSet(std::vector<std::string> names) : names_(make_names(std::move(names))) {}

std::optional<std::size_t> VarSet::index_of(std::string_view name) const noexcept {
    for (std::size_t i = 0; i < names_->size(); ++i)
        if ((*names_)[i] == name) return i;
    return std::nullopt;
}

std::size_t VarSet::require_index(std::string_view name) const {
    if (auto i = index_of(name)) return *i;
    throw Error(ErrorKind::DimensionMismatch, "unknown variable '" + std::string(name) + "'");
}

VarSet VarSet::union_with(const VarSet& other) const {
    if (*this == other) return *this;
    std::vector<std::string> out = *names_;
    for (const auto& n : other.names())
        if (!index_of(n)) out.push_back(n);
    if (out.size() == names_->size()) return *this;
    return VarSet(std::move(out));
}

bool operator==(const VarSet& a, const VarSet& b) noexcept {
    return a.names_ == b.names_ || *a.names_ == *b.names_;
}

// ---- Monomial -------------------------------------------------------------

unsigned Monomial::total_degree() const noexcept {
    unsigned s = 0;
    for (auto e : exps) s += e;
    return s;
}

bool Monomial::divides(const Monomial& other) const noexcept {
    for (std::size_t i = 0; i < kMaxVars; ++i)
        if (exps[i] > other.exps[i]) return false;
    return true;
}

bool Monomial::is_one() const noexcept {
    for (auto e : exps)
        if (e) return false;
    return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVars; ++i) {
        unsigned s = unsigned(a.exps[i]) + b.exps[i];
        if (s > 0xFFFFu) throw Error(ErrorKind::ExponentOverflow, "exponent exceeds 65535");
        r.exps[i] = static_cast<std::uint16_t>(s);
    }
    return r;
}

Monomial operator/(const Monomial& a, const Monomial& b) noexcept {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVars; ++i) r.exps[i] = static_cast<std::uint16_t>(a.exps[i] - b.exps[i]);
    return r;
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (auto e : m.exps) {
        h ^= e;
        h *= 0x100000001b3ull;
    }
    return static_cast<std::size_t>(h ^ (h >> 29));
}

// ---- MultiPoly ------------------------------------------------------------

namespace {

bool term_greater(const Term& a, const Term& b) { return a.mono > b.mono; }

// Accumulates products into a hash map; used by multiplication.
class Accumulator {
public:
    explicit Accumulator(const Field& field) : field_(field) {}

    void add_product(const Monomial& m, const Scalar& a, const Scalar& b) {
        if (field_.is_prime()) {
            auto& slot = prime_[m];
            slot = (slot + mod_mul(a.residue(), b.residue(), field_.modulus())) % field_.modulus();
        } else {
            auto& slot = rational_[m];
            slot += a.rational() * b.rational();
        }
    }

    std::vector<Term> take() {
        std::vector<Term> out;
        if (field_.is_prime()) {
            out.reserve(prime_.size());
            for (auto& [m, v] : prime_)
                if (v) out.push_back({m, Scalar::from_residue(field_, v)});
        } else {
            out.reserve(rational_.size());
            for (auto& [m, v] : rational_)
                if (sgn(v) != 0) out.push_back({m, Scalar::from_mpq(field_, v)});
        }
        std::sort(out.begin(), out.end(), term_greater);
        return out;
    }

private:
    Field field_;
    std::unordered_map<Monomial, std::uint64_t, MonomialHash> prime_;
    std::unordered_map<Monomial, mpq_class, MonomialHash> rational_;
};

}  // namespace

MultiPoly MultiPoly::constant(const Field& field, const VarSet& vars, const Scalar& value) {
    MultiPoly p(field, vars);
    if (!value.is_zero()) p.terms_.push_back({Monomial{}, value});
    return p;
}

MultiPoly MultiPoly::constant(const Field& field, const VarSet& vars, long long value) {
    return constant(field, vars, Scalar::from_int(field, value));
}

MultiPoly MultiPoly::variable(const Field& field, const VarSet& vars, std::string_view name) {
    Monomial m;
    m.exps[vars.require_index(name)] = 1;
    return monomial(field, vars, m, Scalar::one(field));
}

MultiPoly MultiPoly::monomial(const Field& field, const VarSet& vars, const Monomial& mono, const Scalar& coeff) {
    MultiPoly p(field, vars);
    if (!coeff.is_zero()) p.terms_.push_back({mono, coeff});
    return p;
}

MultiPoly MultiPoly::from_terms(const Field& field, const VarSet& vars, std::vector<Term> terms) {
    MultiPoly p(field, vars);
    std::sort(terms.begin(), terms.end(), term_greater);
    for (auto& t : terms) {
        if (!(t.coeff.field() == field))
            throw Error(ErrorKind::FieldMismatch, t.coeff.field().to_string() + " vs " + field.to_string());
        if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
            p.terms_.back().coeff += t.coeff;
            if (p.terms_.back().coeff.is_zero()) p.terms_.pop_back();
        } else if (!t.coeff.is_zero()) {
            p.terms_.push_back(std::move(t));
        }
    }
    return p;
}

bool MultiPoly::is_constant() const noexcept {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
}

bool MultiPoly::is_one() const noexcept {
    return terms_.size() == 1 && terms_[0].mono.is_one() && terms_[0].coeff.is_one();
}

Scalar MultiPoly::constant_term() const {
    if (!terms_.empty() && terms_.back().mono.is_one()) return terms_.back().coeff;
    return Scalar::zero(field_);
}

int MultiPoly::total_degree() const noexcept {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.mono.total_degree()));
    return d;
}

int MultiPoly::degree_in(std::size_t var) const noexcept {
    if (terms_.empty()) return -1;
    int d = 0;
    for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.mono.exps[var]));
    return d;
}

int MultiPoly::degree_in(std::string_view var) const {
    auto i = vars_.index_of(var);
    if (!i) return terms_.empty() ? -1 : 0;
    return degree_in(*i);
}

bool MultiPoly::is_homogeneous() const noexcept {
    if (terms_.empty()) return true;
    unsigned d = terms_[0].mono.total_degree();
    for (const auto& t : terms_)
        if (t.mono.total_degree() != d) return false;
    return true;
}

const Term& MultiPoly::leading_term() const {
    if (terms_.empty()) throw Error(ErrorKind::PreconditionViolated, "leading term of the zero polynomial");
    return terms_.front();
}

void MultiPoly::require_compatible(const MultiPoly& rhs) const {
    if (!(field_ == rhs.field_))
        throw Error(ErrorKind::FieldMismatch, field_.to_string() + " vs " + rhs.field_.to_string());
}

std::pair<MultiPoly, MultiPoly> unify(const MultiPoly& a, const MultiPoly& b) {
    if (!(a.field() == b.field()))
        throw Error(ErrorKind::FieldMismatch, a.field().to_string() + " vs " + b.field().to_string());
    if (a.vars() == b.vars()) return {a, b};
    VarSet u = a.vars().union_with(b.vars());
    return {a.embed(u), b.embed(u)};
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r = *this;
    for (auto& t : r.terms_) t.coeff = -t.coeff;
    return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& rhs) {
    require_compatible(rhs);
    if (rhs.terms_.empty()) return *this;
    if (terms_.empty() && vars_.size() == 0) {
        vars_ = rhs.vars_;
        terms_ = rhs.terms_;
        return *this;
    }
    if (!(vars_ == rhs.vars_)) {
        auto [a, b] = unify(*this, rhs);
        *this = a;
        return *this += b;
    }
    std::vector<Term> out;
    out.reserve(terms_.size() + rhs.terms_.size());
    auto i = terms_.begin();
    auto j = rhs.terms_.begin();
    while (i != terms_.end() || j != rhs.terms_.end()) {
        if (j == rhs.terms_.end() || (i != terms_.end() && i->mono > j->mono)) {
            out.push_back(std::move(*i++));
        } else if (i == terms_.end() || j->mono > i->mono) {
            out.push_back(*j++);
        } else {
            Scalar c = i->coeff + j->coeff;
            if (!c.is_zero()) out.push_back({i->mono, std::move(c)});
            ++i;
            ++j;
        }
    }
    terms_ = std::move(out);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& rhs) { return *this += -rhs; }

MultiPoly& MultiPoly::operator*=(const MultiPoly& rhs) {
    *this = *this * rhs;
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    a.require_compatible(b);
    if (!(a.vars_ == b.vars_) && a.vars_.size() && b.vars_.size()) {
        auto [ua, ub] = unify(a, b);
        return ua * ub;
    }
    const VarSet& vars = a.vars_.size() ? a.vars_ : b.vars_;
    MultiPoly r(a.field_, vars);
    if (a.is_zero() || b.is_zero()) return r;
    if (a.terms_.size() == 1 || b.terms_.size() == 1) {
        const MultiPoly& single = a.terms_.size() == 1 ? a : b;
        const MultiPoly& other = a.terms_.size() == 1 ? b : a;
        MultiPoly out = other.times_monomial(single.terms_[0].mono, single.terms_[0].coeff);
        out.vars_ = vars;
        return out;
    }
    if (!a.field_.is_prime()) {
        // clear denominators so the inner loop is integer multiply-add
        auto integerize = [](const std::vector<Term>& ts, mpz_class& den) {
            den = 1;
            for (const auto& t : ts) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.coeff.rational().get_den_mpz_t());
            std::vector<mpz_class> out;
            out.reserve(ts.size());
            for (const auto& t : ts) out.push_back(t.coeff.rational().get_num() * (den / t.coeff.rational().get_den()));
            return out;
        };
        mpz_class da, db;
        auto ia = integerize(a.terms_, da);
        auto ib = integerize(b.terms_, db);
        std::unordered_map<Monomial, mpz_class, MonomialHash> acc;
        acc.reserve(a.terms_.size() * 2);
        for (std::size_t i = 0; i < a.terms_.size(); ++i)
            for (std::size_t j = 0; j < b.terms_.size(); ++j) {
                auto& slot = acc[a.terms_[i].mono * b.terms_[j].mono];
                mpz_addmul(slot.get_mpz_t(), ia[i].get_mpz_t(), ib[j].get_mpz_t());
            }
        mpz_class den = da * db;
        r.terms_.reserve(acc.size());
        for (auto& [m, v] : acc) {
            if (sgn(v) == 0) continue;
            mpq_class q(v, den);
            q.canonicalize();
            r.terms_.push_back({m, Scalar::from_mpq(a.field_, q)});
        }
        std::sort(r.terms_.begin(), r.terms_.end(), term_greater);
        return r;
    }
    Accumulator acc(a.field_);
    for (const auto& s : a.terms_)
        for (const auto& t : b.terms_) acc.add_product(s.mono * t.mono, s.coeff, t.coeff);
    r.terms_ = acc.take();
    return r;
}

MultiPoly MultiPoly::scaled(const Scalar& s) const {
    MultiPoly r(field_, vars_);
    if (s.is_zero()) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.mono, t.coeff * s});
    return r;
}

MultiPoly MultiPoly::times_monomial(const Monomial& m, const Scalar& c) const {
    MultiPoly r(field_, vars_);
    if (c.is_zero()) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.mono * m, t.coeff * c});
    return r;
}

MultiPoly MultiPoly::pow(unsigned exponent) const {
    MultiPoly result = constant(field_, vars_, 1);
    if (exponent == 0) return result;
    if (terms_.size() == 1) {
        Monomial m;
        for (std::size_t i = 0; i < kMaxVars; ++i) {
            unsigned long e = static_cast<unsigned long>(terms_[0].mono.exps[i]) * exponent;
            if (e > 0xFFFFu) throw Error(ErrorKind::ExponentOverflow, "exponent exceeds 65535");
            m.exps[i] = static_cast<std::uint16_t>(e);
        }
        return monomial(field_, vars_, m, terms_[0].coeff.pow(exponent));
    }
    MultiPoly base = *this;
    while (exponent) {
        if (exponent & 1) result = result * base;
        exponent >>= 1;
        if (exponent) base = base * base;
    }
    return result;
}

MultiPoly MultiPoly::monic() const {
    if (terms_.empty() || terms_[0].coeff.is_one()) return *this;
    return scaled(terms_[0].coeff.inv());
}

MultiPoly MultiPoly::embed(const VarSet& target) const {
    if (vars_ == target) return *this;
    std::array<std::size_t, kMaxVars> map{};
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        auto j = target.index_of(vars_[i]);
        if (!j) throw Error(ErrorKind::DimensionMismatch, "variable '" + vars_[i] + "' missing from target");
        map[i] = *j;
    }
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
        Monomial m;
        for (std::size_t i = 0; i < vars_.size(); ++i) m.exps[map[i]] = t.mono.exps[i];
        out.push_back({m, t.coeff});
    }
    return from_terms(field_, target, std::move(out));
}

MultiPoly MultiPoly::restrict_to(const VarSet& target) const {
    if (vars_ == target) return *this;
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
        Monomial m;
        for (std::size_t i = 0; i < vars_.size(); ++i) {
            if (!t.mono.exps[i]) continue;
            auto j = target.index_of(vars_[i]);
            if (!j) throw Error(ErrorKind::DimensionMismatch, "variable '" + vars_[i] + "' occurs but is not in target");
            m.exps[*j] = t.mono.exps[i];
        }
        out.push_back({m, t.coeff});
    }
    return from_terms(field_, target, std::move(out));
}

Scalar MultiPoly::evaluate(std::span<const Scalar> point) const {
    if (point.size() < vars_.size())
        throw Error(ErrorKind::DimensionMismatch, "evaluation point has too few coordinates");
    Scalar sum = Scalar::zero(field_);
    std::vector<std::vector<Scalar>> powers(vars_.size());
    for (const auto& t : terms_) {
        Scalar v = t.coeff;
        for (std::size_t i = 0; i < vars_.size(); ++i) {
            unsigned e = t.mono.exps[i];
            if (!e) continue;
            auto& pw = powers[i];
            if (pw.empty()) pw.push_back(Scalar::one(field_));
            while (pw.size() <= e) pw.push_back(pw.back() * point[i]);
            v *= pw[e];
        }
        sum += v;
    }
    return sum;
}

MultiPoly MultiPoly::evaluate_at(std::size_t var, const Scalar& value) const {
    std::vector<Term> out;
    out.reserve(terms_.size());
    std::vector<Scalar> pw{Scalar::one(field_)};
    for (const auto& t : terms_) {
        unsigned e = t.mono.exps[var];
        while (pw.size() <= e) pw.push_back(pw.back() * value);
        Monomial m = t.mono;
        m.exps[var] = 0;
        out.push_back({m, t.coeff * pw[e]});
    }
    return from_terms(field_, vars_, std::move(out));
}

MultiPoly MultiPoly::derivative(std::size_t var) const {
    std::vector<Term> out;
    for (const auto& t : terms_) {
        unsigned e = t.mono.exps[var];
        if (!e) continue;
        Monomial m = t.mono;
        m.exps[var] = static_cast<std::uint16_t>(e - 1);
        out.push_back({m, t.coeff * Scalar::from_int(field_, e)});
    }
    return from_terms(field_, vars_, std::move(out));
}

std::optional<Scalar> MultiPoly::proportional_to(const MultiPoly& other) const {
    auto [a, b] = unify(*this, other);
    if (b.is_zero()) return a.is_zero() ? std::optional<Scalar>(Scalar::one(field_)) : std::nullopt;
    if (a.terms_.size() != b.terms_.size()) return std::nullopt;
    Scalar c = a.terms_[0].coeff / b.terms_[0].coeff;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
        if (!(a.terms_[i].mono == b.terms_[i].mono) || !(a.terms_[i].coeff == c * b.terms_[i].coeff))
            return std::nullopt;
    return c;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
    if (!(a.field_ == b.field_)) return false;
    if (a.vars_ == b.vars_) {
        if (a.terms_.size() != b.terms_.size()) return false;
        for (std::size_t i = 0; i < a.terms_.size(); ++i)
            if (!(a.terms_[i].mono == b.terms_[i].mono) || !(a.terms_[i].coeff == b.terms_[i].coeff)) return false;
        return true;
    }
    auto [ua, ub] = unify(a, b);
    return ua == ub;
}

MultiPoly poly_arith(PolyOp op, const MultiPoly& f, const MultiPoly& g, unsigned exponent) {
    switch (op) {
        case PolyOp::Add: return f + g;
        case PolyOp::Sub: return f - g;
        case PolyOp::Mul: return f * g;
        case PolyOp::Pow: return f.pow(exponent);
    }
    return f;
}

std::optional<MultiPoly> divexact(const MultiPoly& f_in, const MultiPoly& g_in) {
    if (g_in.is_zero()) throw Error(ErrorKind::ZeroDivisor, "divexact by the zero polynomial");
    auto [f, g] = unify(f_in, g_in);
    const Field& field = f.field();
    if (f.is_zero()) return MultiPoly(field, f.vars());
    if (g.size() == 1) {
        const Term& lt = g.leading_term();
        Scalar inv = lt.coeff.inv();
        std::vector<Term> out;
        out.reserve(f.size());
        for (const auto& t : f.terms()) {
            if (!lt.mono.divides(t.mono)) return std::nullopt;
            out.push_back({t.mono / lt.mono, t.coeff * inv});
        }
        return MultiPoly::from_terms(field, f.vars(), std::move(out));
    }
    // cheap necessary conditions before the reduction loop
    for (std::size_t i = 0; i < f.vars().size(); ++i)
        if (g.degree_in(i) > f.degree_in(i)) return std::nullopt;
    if (f.total_degree() < g.total_degree()) return std::nullopt;

    const Term& lg = g.leading_term();
    Scalar lg_inv = lg.coeff.inv();
    std::map<Monomial, Scalar, std::greater<>> rem;
    for (const auto& t : f.terms()) rem.emplace_hint(rem.end(), t.mono, t.coeff);
    std::vector<Term> quotient;
    while (!rem.empty()) {
        auto it = rem.begin();
        if (!lg.mono.divides(it->first)) return std::nullopt;
        Monomial qm = it->first / lg.mono;
        Scalar qc = it->second * lg_inv;
        rem.erase(it);
        for (std::size_t k = 1; k < g.size(); ++k) {
            const Term& gt = g.terms()[k];
            Monomial m = gt.mono * qm;
            Scalar delta = gt.coeff * qc;
            auto [pos, inserted] = rem.try_emplace(m, -delta);
            if (!inserted) {
                pos->second -= delta;
                if (pos->second.is_zero()) rem.erase(pos);
            }
        }
        quotient.push_back({qm, std::move(qc)});
    }
    return MultiPoly::from_terms(field, f.vars(), std::move(quotient));
}

}  // namespace planecomp
