#include "planecomp/equivalence.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "planecomp/constructions.hpp"
#include "planecomp/error.hpp"

namespace planecomp {

namespace {

constexpr std::uint64_t kMaxEnumeratedField = 31;

std::vector<Scalar> dense(const MultiPoly& p) {
    MultiPoly u = as_univariate(p, "t");
    int deg = std::max(u.total_degree(), 0);
    std::vector<Scalar> out(static_cast<std::size_t>(deg) + 1, Scalar::zero(p.field()));
    for (const auto& t : u.terms()) out[t.mono.exps[0]] = t.coeff;
    return out;
}

BinaryForm form_mul(const BinaryForm& f, const BinaryForm& g) {
    const Field& k = f.c[0].field();
    BinaryForm out{std::vector<Scalar>(f.c.size() + g.c.size() - 1, Scalar::zero(k))};
    for (std::size_t i = 0; i < f.c.size(); ++i) {
        if (f.c[i].is_zero()) continue;
        for (std::size_t j = 0; j < g.c.size(); ++j) out.c[i + j] += f.c[i] * g.c[j];
    }
    return out;
}

std::string mpz_str(const mpz_class& z) { return z.get_str(); }

}  // namespace

// ---- ProjPoint / MobiusTransform ------------------------------------------

ProjPoint ProjPoint::affine(const Scalar& t) { return {t, Scalar::one(t.field())}; }
ProjPoint ProjPoint::infinity(const Field& field) { return {Scalar::one(field), Scalar::zero(field)}; }

ProjPoint ProjPoint::normalized() const {
    if (v.is_zero()) return infinity(u.field());
    return {u / v, Scalar::one(u.field())};
}

std::string ProjPoint::to_string() const {
    if (v.is_zero()) return "inf";
    return (u / v).to_string();
}

bool operator==(const ProjPoint& a, const ProjPoint& b) { return a.u * b.v == b.u * a.v; }

MobiusTransform::MobiusTransform(Scalar a, Scalar b, Scalar c, Scalar d) : m_{a, b, c, d} {
    if (det().is_zero()) throw Error(ErrorKind::PreconditionViolated, "singular Mobius matrix");
}

MobiusTransform MobiusTransform::identity(const Field& field) {
    return {Scalar::one(field), Scalar::zero(field), Scalar::zero(field), Scalar::one(field)};
}

ProjPoint MobiusTransform::apply(const ProjPoint& p) const {
    return ProjPoint{m_[0] * p.u + m_[1] * p.v, m_[2] * p.u + m_[3] * p.v}.normalized();
}

MobiusTransform MobiusTransform::inverse() const { return MobiusTransform(m_[3], -m_[1], -m_[2], m_[0]).normalized(); }

MobiusTransform MobiusTransform::compose(const MobiusTransform& o) const {
    return MobiusTransform(m_[0] * o.m_[0] + m_[1] * o.m_[2], m_[0] * o.m_[1] + m_[1] * o.m_[3],
                           m_[2] * o.m_[0] + m_[3] * o.m_[2], m_[2] * o.m_[1] + m_[3] * o.m_[3]);
}

MobiusTransform MobiusTransform::normalized() const {
    for (const auto& e : m_)
        if (!e.is_zero()) {
            Scalar s = e.inv();
            return MobiusTransform(m_[0] * s, m_[1] * s, m_[2] * s, m_[3] * s);
        }
    return *this;
}

Json MobiusTransform::to_json() const {
    MobiusTransform n = normalized();
    Json rows = Json::array();
    rows.push_back(Json::array({n.a().to_string(), n.b().to_string()}));
    rows.push_back(Json::array({n.c().to_string(), n.d().to_string()}));
    return Json{{"matrix", rows}};
}

bool operator==(const MobiusTransform& s, const MobiusTransform& t) {
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            if (!(s.m_[i] * t.m_[j] == s.m_[j] * t.m_[i])) return false;
    return true;
}

// ---- binary forms ---------------------------------------------------------

BinaryForm v_homogenize(const MultiPoly& p) {
    // coefficient of u^i v^(n+1-i) is p_i, shifted by the extra factor v
    std::vector<Scalar> c = dense(p);
    c.push_back(Scalar::zero(p.field()));
    return {std::move(c)};
}

BinaryForm act(const BinaryForm& f, const MobiusTransform& s) {
    const Field& k = f.c[0].field();
    unsigned n = f.degree();
    BinaryForm L{{s.b(), s.a()}};  // a u + b v
    BinaryForm M{{s.d(), s.c()}};  // c u + d v
    std::vector<BinaryForm> lp{BinaryForm{{Scalar::one(k)}}}, mp{BinaryForm{{Scalar::one(k)}}};
    for (unsigned i = 1; i <= n; ++i) {
        lp.push_back(form_mul(lp.back(), L));
        mp.push_back(form_mul(mp.back(), M));
    }
    BinaryForm out{std::vector<Scalar>(n + 1, Scalar::zero(k))};
    for (unsigned i = 0; i <= n; ++i) {
        if (f.c[i].is_zero()) continue;
        BinaryForm term = form_mul(lp[i], mp[n - i]);
        for (unsigned j = 0; j <= n; ++j) out.c[j] += f.c[i] * term.c[j];
    }
    return out;
}

bool proportional(const BinaryForm& f, const BinaryForm& g) {
    if (f.c.size() != g.c.size()) return false;
    std::size_t j = 0;
    while (j < g.c.size() && g.c[j].is_zero()) ++j;
    if (j == g.c.size()) return false;
    if (f.c[j].is_zero()) return false;
    for (std::size_t i = 0; i < f.c.size(); ++i)
        if (!(f.c[i] * g.c[j] == g.c[i] * f.c[j])) return false;
    return true;
}

// ---- triples and orbits ---------------------------------------------------

namespace {

// N with N(0) = p0, N(1) = p1, N(inf) = p2, where 0 = [0:1], 1 = [1:1], inf = [1:0].
MobiusTransform standard_frame(const std::array<ProjPoint, 3>& p) {
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            if (p[i] == p[j]) throw Error(ErrorKind::DegenerateTriple, "points of a triple must be distinct");
    // columns alpha*p2 and beta*p0 with alpha*p2 + beta*p0 = p1
    Scalar det = p[2].u * p[0].v - p[0].u * p[2].v;
    Scalar alpha = (p[1].u * p[0].v - p[0].u * p[1].v) / det;
    Scalar beta = (p[2].u * p[1].v - p[1].u * p[2].v) / det;
    return MobiusTransform(alpha * p[2].u, beta * p[0].u, alpha * p[2].v, beta * p[0].v);
}

}  // namespace

MobiusTransform mobius_from_triples(const std::array<ProjPoint, 3>& src, const std::array<ProjPoint, 3>& dst) {
    return standard_frame(dst).compose(standard_frame(src).inverse()).normalized();
}

OrbitResult pgl2_orbit_test(const std::vector<ProjPoint>& S, const std::vector<ProjPoint>& T) {
    if (S.size() < 3 || T.size() < 3) throw Error(ErrorKind::TooFewPoints, "need at least three points on each side");
    OrbitResult out;
    if (S.size() != T.size()) return out;
    auto contains = [&](const ProjPoint& p) { return std::find(T.begin(), T.end(), p) != T.end(); };
    std::array<ProjPoint, 3> src{S[0], S[1], S[2]};
    for (std::size_t i = 0; i < T.size(); ++i)
        for (std::size_t j = 0; j < T.size(); ++j)
            for (std::size_t k = 0; k < T.size(); ++k) {
                if (i == j || j == k || i == k) continue;
                ++out.candidates_tested;
                MobiusTransform s = mobius_from_triples(src, {T[i], T[j], T[k]});
                if (std::all_of(S.begin(), S.end(), [&](const ProjPoint& p) { return contains(s.apply(p)); })) {
                    out.witness = s;
                    return out;
                }
            }
    return out;
}

// ---- rational roots -------------------------------------------------------

namespace {

const mpz_class kMaxFactorable("1000000000000");

std::vector<mpz_class> divisors(const mpz_class& n_in) {
    mpz_class n = abs(n_in);
    if (n > kMaxFactorable)
        throw Error(ErrorKind::SearchTooLarge, "coefficient " + mpz_str(n) + " too large for rational root search");
    unsigned long long v = n.get_ui();
    std::vector<std::pair<unsigned long long, unsigned>> pf;
    for (unsigned long long p = 2; p * p <= v; ++p) {
        unsigned e = 0;
        while (v % p == 0) {
            v /= p;
            ++e;
        }
        if (e) pf.push_back({p, e});
    }
    if (v > 1) pf.push_back({v, 1});
    std::vector<mpz_class> out{1};
    for (auto [p, e] : pf) {
        std::size_t n0 = out.size();
        mpz_class pk = 1;
        for (unsigned i = 1; i <= e; ++i) {
            pk *= static_cast<unsigned long>(p);
            for (std::size_t j = 0; j < n0; ++j) out.push_back(out[j] * pk);
        }
    }
    return out;
}

}  // namespace

std::vector<Scalar> rational_roots(const MultiPoly& p) {
    if (p.field().is_prime()) throw Error(ErrorKind::PreconditionViolated, "rational_roots is for Q");
    if (p.is_zero()) throw Error(ErrorKind::PreconditionViolated, "rational_roots of zero");
    std::vector<Scalar> c = dense(p);
    const Field& k = p.field();
    mpz_class den = 1;
    for (const auto& s : c) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), s.rational().get_den_mpz_t());
    std::vector<mpz_class> z;
    for (const auto& s : c) z.push_back(s.rational().get_num() * (den / s.rational().get_den()));
    std::vector<Scalar> roots;
    std::size_t low = 0;
    while (low < z.size() && z[low] == 0) ++low;
    if (low > 0) roots.push_back(Scalar::zero(k));
    z.erase(z.begin(), z.begin() + static_cast<long>(low));
    if (z.size() > 1) {
        auto num_d = divisors(z.front());
        auto den_d = divisors(z.back());
        std::vector<mpq_class> seen;
        for (const auto& a : num_d)
            for (const auto& b : den_d)
                for (int sign : {1, -1}) {
                    mpq_class r(sign * a, b);
                    r.canonicalize();
                    if (std::find(seen.begin(), seen.end(), r) != seen.end()) continue;
                    seen.push_back(r);
                    mpq_class acc = 0;
                    for (auto it = z.rbegin(); it != z.rend(); ++it) acc = acc * r + *it;
                    if (acc == 0) roots.push_back(Scalar::from_mpq(k, r));
                }
    }
    std::sort(roots.begin(), roots.end(), [](const Scalar& a, const Scalar& b) { return a.rational() < b.rational(); });
    return roots;
}

std::vector<Scalar> rational_nth_roots(const Scalar& r, unsigned e) {
    const Field& k = r.field();
    if (k.is_prime()) throw Error(ErrorKind::PreconditionViolated, "rational_nth_roots is for Q");
    if (e == 0) throw Error(ErrorKind::PreconditionViolated, "exponent must be positive");
    if (r.is_zero()) return {Scalar::zero(k)};
    mpz_class n = r.rational().get_num(), d = r.rational().get_den();
    bool negative = n < 0;
    if (negative && e % 2 == 0) return {};
    mpz_class an = abs(n), rn, rd;
    if (!mpz_root(rn.get_mpz_t(), an.get_mpz_t(), e)) return {};
    if (!mpz_root(rd.get_mpz_t(), d.get_mpz_t(), e)) return {};
    mpq_class q(negative ? mpz_class(-rn) : rn, rd);
    q.canonicalize();
    std::vector<Scalar> out{Scalar::from_mpq(k, q)};
    if (e % 2 == 0) out.insert(out.begin(), Scalar::from_mpq(k, -q));
    return out;
}

// ---- spec_iso_test --------------------------------------------------------

const char* to_string(Decision d) noexcept {
    switch (d) {
        case Decision::Equivalent: return "equivalent";
        case Decision::NotEquivalent: return "not-equivalent";
        case Decision::Undecided: return "undecided";
    }
    return "?";
}

Json IsoResult::to_json() const {
    Json j;
    if (decision == Decision::Undecided)
        j["equivalent"] = "undecided";
    else
        j["equivalent"] = decision == Decision::Equivalent;
    j["witness"] = witness ? witness->to_json() : Json(nullptr);
    j["candidates_tested"] = candidates_tested;
    if (!reason.empty()) j["reason"] = reason;
    return j;
}

namespace {

void require_squarefree(const MultiPoly& p, const char* name) {
    MultiPoly u = as_univariate(p, "t");
    if (u.is_zero()) throw Error(ErrorKind::PreconditionViolated, std::string(name) + " must be nonzero");
    Squarefree s = is_squarefree(u, "t");
    if (s == Squarefree::No) throw Error(ErrorKind::NotSquarefree, std::string(name) + " has a repeated factor");
    if (s == Squarefree::NotDecidable)
        throw Error(ErrorKind::NotSquarefree, std::string(name) + " has vanishing derivative (inseparable)");
}

std::vector<MobiusTransform> canonical_pgl2(const Field& k) {
    std::uint64_t q = k.modulus();
    std::vector<MobiusTransform> out;
    out.reserve(q * q * q);
    auto s = [&](std::uint64_t v) { return Scalar::from_residue(k, v); };
    for (std::uint64_t b = 0; b < q; ++b)
        for (std::uint64_t c = 0; c < q; ++c)
            for (std::uint64_t d = 0; d < q; ++d)
                if ((d + q * q - (b * c) % q) % q != 0) out.emplace_back(s(1), s(b), s(c), s(d));
    for (std::uint64_t c = 1; c < q; ++c)
        for (std::uint64_t d = 0; d < q; ++d) out.emplace_back(s(0), s(1), s(c), s(d));
    return out;
}

IsoResult iso_over_fq(const BinaryForm& fp, const BinaryForm& fq, unsigned jobs) {
    if (fp.c[0].field().modulus() > kMaxEnumeratedField)
        throw Error(ErrorKind::FieldTooLarge, "PGL2 enumeration is limited to q <= " + std::to_string(kMaxEnumeratedField));
    auto group = canonical_pgl2(fp.c[0].field());
    std::atomic<std::size_t> best{group.size()};
    jobs = std::max(1u, std::min<unsigned>(jobs, 64));
    auto worker = [&](unsigned id) {
        for (std::size_t i = id; i < group.size(); i += jobs) {
            if (i >= best.load()) return;
            if (proportional(act(fp, group[i]), fq)) {
                std::size_t cur = best.load();
                while (i < cur && !best.compare_exchange_weak(cur, i)) {
                }
                return;
            }
        }
    };
    if (jobs == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker, t);
        for (auto& t : pool) t.join();
    }
    IsoResult r;
    if (best.load() < group.size()) {
        r.decision = Decision::Equivalent;
        r.witness = group[best.load()];
        r.candidates_tested = best.load() + 1;
    } else {
        r.decision = Decision::NotEquivalent;
        r.candidates_tested = group.size();
    }
    return r;
}

}  // namespace

IsoResult spec_iso_test(const MultiPoly& P, const MultiPoly& Q, unsigned jobs) {
    if (!(P.field() == Q.field())) throw Error(ErrorKind::FieldMismatch, "P and Q live over different fields");
    require_squarefree(P, "P");
    require_squarefree(Q, "Q");
    const Field& k = P.field();
    BinaryForm fp = v_homogenize(P), fq = v_homogenize(Q);
    IsoResult r;
    if (fp.degree() != fq.degree()) {
        r.decision = Decision::NotEquivalent;
        r.reason = "degree mismatch: different numbers of removed points";
        return r;
    }
    if (k.is_prime()) return iso_over_fq(fp, fq, jobs);

    r.candidates_tested = 1;
    if (proportional(fp, fq)) {
        r.decision = Decision::Equivalent;
        r.witness = MobiusTransform::identity(k);
        return r;
    }
    std::vector<Scalar> rp, rq;
    try {
        rp = rational_roots(P);
        rq = rational_roots(Q);
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::SearchTooLarge) throw;
        r.decision = Decision::Undecided;
        r.reason = e.what();
        return r;
    }
    unsigned n = fp.degree() - 1;
    if (rp.size() != n || rq.size() != n) {
        r.decision = Decision::Undecided;
        r.reason = "not split over Q";
        return r;
    }
    std::optional<MobiusTransform> sigma;
    if (n == 0) {
        sigma = MobiusTransform::identity(k);
    } else if (n == 1) {
        sigma = MobiusTransform(Scalar::one(k), rp[0] - rq[0], Scalar::zero(k), Scalar::one(k));
    } else {
        // sigma(roots(Q) + inf) = roots(P) + inf makes (v P_h) o sigma vanish on roots(Q) + inf
        std::vector<ProjPoint> S, T;
        for (const auto& x : rq) S.push_back(ProjPoint::affine(x));
        for (const auto& x : rp) T.push_back(ProjPoint::affine(x));
        S.push_back(ProjPoint::infinity(k));
        T.push_back(ProjPoint::infinity(k));
        OrbitResult o = pgl2_orbit_test(S, T);
        r.candidates_tested += o.candidates_tested;
        sigma = o.witness;
    }
    if (!sigma) {
        r.decision = Decision::NotEquivalent;
        return r;
    }
    if (!proportional(act(fp, *sigma), fq)) {
        r.decision = Decision::Undecided;
        r.reason = "orbit witness failed the proportionality replay";
        return r;
    }
    r.decision = Decision::Equivalent;
    r.witness = sigma->normalized();
    return r;
}

// ---- equiv_section_curves -------------------------------------------------

Json SectionResult::to_json() const {
    Json j;
    j["equivalent"] = witness.has_value();
    if (witness)
        j["witness"] = Json{{"alpha", witness->alpha.to_string()},
                            {"beta", witness->beta.to_string()},
                            {"lambda", witness->lambda.to_string()},
                            {"mu", witness->mu.to_string()}};
    else
        j["witness"] = nullptr;
    j["candidates_tested"] = candidates_tested;
    if (!reason.empty()) j["reason"] = reason;
    return j;
}

namespace {

// p(alpha y + beta) on dense coefficients.
std::vector<Scalar> affine_compose(const std::vector<Scalar>& p, const Scalar& alpha, const Scalar& beta) {
    const Field& k = alpha.field();
    std::vector<Scalar> out{Scalar::zero(k)};
    for (auto it = p.rbegin(); it != p.rend(); ++it) {
        std::vector<Scalar> next(out.size() + 1, Scalar::zero(k));
        for (std::size_t i = 0; i < out.size(); ++i) {
            next[i] += out[i] * beta;
            next[i + 1] += out[i] * alpha;
        }
        next[0] += *it;
        out = std::move(next);
    }
    while (out.size() > 1 && out.back().is_zero()) out.pop_back();
    return out;
}

bool all_zero(const std::vector<Scalar>& c) {
    return std::all_of(c.begin(), c.end(), [](const Scalar& s) { return s.is_zero(); });
}

// target == scale * src for the scale read off leading coefficients.
std::optional<Scalar> scale_match(const std::vector<Scalar>& src, const std::vector<Scalar>& target) {
    const Field& k = src[0].field();
    if (all_zero(src) || all_zero(target)) {
        if (all_zero(src) && all_zero(target)) return Scalar::one(k);
        return std::nullopt;
    }
    if (src.size() != target.size()) return std::nullopt;
    Scalar s = target.back() / src.back();
    for (std::size_t i = 0; i < src.size(); ++i)
        if (!(target[i] == s * src[i])) return std::nullopt;
    return s;
}

struct SectionInput {
    std::vector<Scalar> a1, b1, a2, b2;
};

std::optional<SectionWitness> replay(const SectionInput& in, const Scalar& alpha, const Scalar& beta) {
    if (alpha.is_zero()) return std::nullopt;
    auto lambda = scale_match(affine_compose(in.a1, alpha, beta), in.a2);
    if (!lambda) return std::nullopt;
    auto mu = scale_match(affine_compose(in.b1, alpha, beta), in.b2);
    if (!mu) return std::nullopt;
    return SectionWitness{alpha, beta, *lambda, *mu};
}

std::vector<Scalar> shifted(const std::vector<Scalar>& p, const Scalar& shift) {
    return affine_compose(p, Scalar::one(shift.field()), shift);
}

}  // namespace

SectionResult equiv_section_curves(const MultiPoly& a1, const MultiPoly& b1, const MultiPoly& a2, const MultiPoly& b2) {
    const Field& k = a1.field();
    for (const auto* p : {&b1, &a2, &b2})
        if (!(p->field() == k)) throw Error(ErrorKind::FieldMismatch, "inputs live over different fields");
    auto check_pair = [](const MultiPoly& a, const MultiPoly& b, const char* name) {
        MultiPoly ua = as_univariate(a, "y"), ub = as_univariate(b, "y");
        if (ua.is_zero()) throw Error(ErrorKind::PreconditionViolated, std::string(name) + ": a must be nonzero");
        if (!ub.is_zero() && ub.total_degree() >= ua.total_degree())
            throw Error(ErrorKind::PreconditionViolated, std::string(name) + ": need deg b < deg a");
        if (!poly_gcd(ua, ub).is_constant()) throw Error(ErrorKind::PreconditionViolated, std::string(name) + ": a and b not coprime");
    };
    check_pair(a1, b1, "curve 1");
    check_pair(a2, b2, "curve 2");
    SectionInput in{dense(a1), dense(b1), dense(a2), dense(b2)};
    SectionResult r;
    if (in.a1.size() != in.a2.size() || in.b1.size() != in.b2.size() || all_zero(in.b1) != all_zero(in.b2)) {
        r.reason = "degree mismatch";
        return r;
    }
    if (k.is_prime()) {
        std::uint64_t q = k.modulus();
        for (std::uint64_t a = 1; a < q; ++a)
            for (std::uint64_t b = 0; b < q; ++b) {
                ++r.candidates_tested;
                if (auto w = replay(in, Scalar::from_residue(k, a), Scalar::from_residue(k, b))) {
                    r.witness = w;
                    return r;
                }
            }
        r.reason = "exhausted all (alpha, beta)";
        return r;
    }

    std::size_t D = in.a1.size() - 1;
    std::vector<Scalar> alphas;
    Scalar s1 = Scalar::zero(k), s2 = Scalar::zero(k);
    if (D == 0) {
        alphas.push_back(Scalar::one(k));
    } else {
        Scalar Dk = Scalar::from_int(k, static_cast<long long>(D));
        s1 = in.a1[D - 1] / in.a1[D];
        s2 = in.a2[D - 1] / in.a2[D];
        // depressed monic forms satisfy A2_j = alpha^(j-D) A1_j
        auto depressed = [&](const std::vector<Scalar>& a, const Scalar& s) {
            std::vector<Scalar> out = shifted(a, -s / Dk);
            Scalar lead = out.back();
            for (auto& c : out) c = c / lead;
            return out;
        };
        std::vector<Scalar> A1 = depressed(in.a1, s1), A2 = depressed(in.a2, s2);
        bool found = false;
        for (std::size_t j = 0; j < D && !found; ++j) {
            if (A1[j].is_zero() && A2[j].is_zero()) continue;
            found = true;
            if (A1[j].is_zero() || A2[j].is_zero()) break;
            alphas = rational_nth_roots(A1[j] / A2[j], static_cast<unsigned>(D - j));
        }
        if (!found) {
            // a is a shifted pure power; the b's carry alpha via B2_j = mu alpha^j B1_j
            std::vector<Scalar> B1 = shifted(in.b1, -s1 / Dk), B2 = shifted(in.b2, -s2 / Dk);
            std::vector<std::size_t> nz;
            for (std::size_t j = 0; j < B1.size(); ++j)
                if (!B1[j].is_zero()) nz.push_back(j);
            if (nz.size() >= 2 && B2.size() == B1.size() && !B2[nz[0]].is_zero() && !B2[nz[1]].is_zero()) {
                Scalar ratio = (B2[nz[1]] / B2[nz[0]]) / (B1[nz[1]] / B1[nz[0]]);
                alphas = rational_nth_roots(ratio, static_cast<unsigned>(nz[1] - nz[0]));
            } else if (nz.size() < 2) {
                alphas.push_back(Scalar::one(k));
            }
        }
    }
    for (const auto& alpha : alphas) {
        if (alpha.is_zero()) continue;
        ++r.candidates_tested;
        Scalar beta = D == 0 ? Scalar::zero(k) : (alpha * s2 - s1) / Scalar::from_int(k, static_cast<long long>(D));
        if (auto w = replay(in, alpha, beta)) {
            r.witness = w;
            return r;
        }
    }
    r.reason = "coefficient comparison leaves no valid (alpha, beta)";
    return r;
}

// ---- costa_equiv_test -----------------------------------------------------

Json CostaResult::to_json() const {
    Json j;
    j["equivalent"] = witness.has_value();
    j["witness"] = witness ? Json{{"rho", witness->rho.to_string()}, {"mu", witness->mu.to_string()}} : Json(nullptr);
    j["candidates_tested"] = candidates_tested;
    if (!reason.empty()) j["reason"] = reason;
    return j;
}

CostaResult costa_equiv_test(const MultiPoly& P_in, const MultiPoly& Pt_in) {
    const Field& k = P_in.field();
    if (!(Pt_in.field() == k)) throw Error(ErrorKind::FieldMismatch, "P and Pt live over different fields");
    VarSet xy{"x", "y"};
    MultiPoly P = P_in.restrict_to(xy), Pt = Pt_in.restrict_to(xy);
    for (const auto* p : {&P, &Pt})
        if (p->is_zero() || !p->is_homogeneous()) throw Error(ErrorKind::NotHomogeneous, "binary forms expected");
    int d = P.total_degree();
    if (Pt.total_degree() != d) throw Error(ErrorKind::DegreeMismatch, "deg P != deg Pt");
    auto coeffs = [&](const MultiPoly& p) {
        std::vector<Scalar> c(static_cast<std::size_t>(d) + 1, Scalar::zero(k));
        for (const auto& t : p.terms()) c[t.mono.exps[0]] = t.coeff;
        return c;
    };
    std::vector<Scalar> p = coeffs(P), pt = coeffs(Pt);
    if (p[d].is_zero() || pt[d].is_zero()) throw Error(ErrorKind::YDividesP, "y divides an input form");

    std::vector<Scalar> rhos;
    if (k.is_prime()) {
        for (std::uint64_t v = 1; v < k.modulus(); ++v) rhos.push_back(Scalar::from_residue(k, v));
    } else {
        rhos = rational_nth_roots(pt[d] / p[d], static_cast<unsigned>(2 * d + 1));
    }
    MultiPoly x = MultiPoly::variable(k, xy, "x"), y = MultiPoly::variable(k, xy, "y");
    CostaResult r;
    for (const auto& rho : rhos) {
        ++r.candidates_tested;
        bool ok = true;
        for (int i = 1; i <= d && ok; ++i) ok = pt[i] == rho.pow(2 * i + 1) * p[i];
        if (!ok) continue;
        Scalar mu = pt[0] - rho * p[0];
        std::array<MultiPoly, 2> vals{x.scaled(rho * rho), y};
        MultiPoly rhs = compose_poly(P, vals).scaled(rho) + y.pow(static_cast<unsigned>(d)).scaled(mu);
        if (rhs == Pt) {
            r.witness = CostaWitness{rho, mu};
            return r;
        }
    }
    r.reason = k.is_prime() ? "exhausted all rho" : "no rational rho fits the coefficient constraints";
    return r;
}

}  // namespace planecomp
