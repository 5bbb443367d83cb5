#include "planecomp/points.hpp"

#include <algorithm>
#include <thread>

#include "planecomp/error.hpp"
#include "planecomp/grid_eval.hpp"
#include "planecomp/verify.hpp"

namespace planecomp {

namespace {

const VarSet& xy() {
    static const VarSet v{"x", "y"};
    return v;
}

std::uint32_t require_small_prime(const Field& k) {
    if (!k.is_prime()) throw Error(ErrorKind::InfiniteField, "point counting needs a finite field");
    if (k.modulus() > kMaxPointField)
        throw Error(ErrorKind::FieldTooLarge, "q = " + std::to_string(k.modulus()) + " exceeds " + std::to_string(kMaxPointField));
    return static_cast<std::uint32_t>(k.modulus());
}

// Values of a polynomial in (x, y) on the row x = x0, for every y in F_q.
class RowEvaluator {
public:
    RowEvaluator(const MultiPoly& f, std::uint32_t q) : q_(q) {
        MultiPoly p = f.restrict_to(xy());
        auto cs = coefficients_in(p, 1);
        for (const auto& c : cs) {
            std::vector<std::uint32_t> dx(static_cast<std::size_t>(std::max(c.total_degree(), 0)) + 1, 0);
            for (const auto& t : c.terms()) dx[t.mono.exps[0]] = static_cast<std::uint32_t>(t.coeff.residue());
            by_y_.push_back(std::move(dx));
        }
        if (by_y_.empty()) by_y_.push_back({0});
        ys_.resize(q);
        for (std::uint32_t i = 0; i < q; ++i) ys_[i] = i;
    }

    void row(std::uint32_t x0, std::vector<std::uint32_t>& out) const {
        std::vector<std::uint32_t> cy(by_y_.size());
        std::uint32_t one_point[1] = {x0};
        for (std::size_t i = 0; i < by_y_.size(); ++i) grid_eval(by_y_[i], one_point, std::span(&cy[i], 1), q_);
        out.resize(q_);
        grid_eval(cy, ys_, out, q_);
    }

private:
    std::uint32_t q_;
    std::vector<std::vector<std::uint32_t>> by_y_;
    std::vector<std::uint32_t> ys_;
};

template <class Fn>
void parallel_rows(std::uint32_t q, unsigned jobs, Fn fn) {
    jobs = std::max(1u, std::min<unsigned>(jobs, q));
    if (jobs == 1) {
        for (std::uint32_t x = 0; x < q; ++x) fn(x);
        return;
    }
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < jobs; ++t)
        pool.emplace_back([&, t] {
            for (std::uint32_t x = t; x < q; x += jobs) fn(x);
        });
    for (auto& th : pool) th.join();
}

}  // namespace

Json PointCounts::to_json() const {
    return Json{{"q", q}, {"curve_points", curve_points}, {"complement_points", complement_points}};
}

PointCounts count_points(const MultiPoly& f, unsigned jobs) {
    std::uint32_t q = require_small_prime(f.field());
    RowEvaluator ev(f, q);
    std::vector<std::uint64_t> per_row(q, 0);
    parallel_rows(q, jobs, [&](std::uint32_t x) {
        std::vector<std::uint32_t> vals;
        ev.row(x, vals);
        per_row[x] = static_cast<std::uint64_t>(std::count(vals.begin(), vals.end(), 0u));
    });
    PointCounts c;
    c.q = q;
    for (auto n : per_row) c.curve_points += n;
    c.complement_points = static_cast<std::uint64_t>(q) * q - c.curve_points;
    return c;
}

Json BijectionReport::to_json() const {
    Json j{{"q", q},
           {"domain_points", domain_points},
           {"codomain_points", codomain_points},
           {"regular", regular},
           {"lands_in_codomain", lands_in_codomain},
           {"injective", injective},
           {"bijective", bijective}};
    if (!reason.empty()) j["reason"] = reason;
    return j;
}

BijectionReport check_bijection(const MapChain& phi, const MultiPoly& f, const MultiPoly& g, unsigned jobs) {
    std::uint32_t q = require_small_prime(f.field());
    if (phi.dim() != 2) throw Error(ErrorKind::PreconditionViolated, "point checks are for affine plane maps");
    BijectionReport rep;
    rep.q = q;
    std::vector<LocalForm> forms;
    for (const char* v : {"x", "y"}) {
        auto lf = localization_form(phi.pullback(MultiPoly::variable(f.field(), phi.vars(), v)), f);
        if (!lf) {
            rep.reason = std::string("phi^*(") + v + ") is not regular off f = 0";
            return rep;
        }
        forms.push_back(*lf);
    }
    rep.regular = true;
    RowEvaluator ef(f, q), eg(g, q), e0(forms[0].q, q), e1(forms[1].q, q);

    constexpr std::int64_t kOutside = -1;
    std::vector<std::int64_t> image(static_cast<std::size_t>(q) * q, kOutside);
    std::vector<std::uint64_t> codomain_row(q, 0);
    parallel_rows(q, jobs, [&](std::uint32_t x) {
        std::vector<std::uint32_t> fv, gv, v0, v1;
        ef.row(x, fv);
        eg.row(x, gv);
        e0.row(x, v0);
        e1.row(x, v1);
        codomain_row[x] = static_cast<std::uint64_t>(std::count_if(gv.begin(), gv.end(), [](std::uint32_t v) { return v != 0; }));
        for (std::uint32_t y = 0; y < q; ++y) {
            if (fv[y] == 0) continue;
            std::uint64_t inv = mod_inv(fv[y], q);
            std::uint64_t X = v0[y] * mod_pow(inv, forms[0].n, q) % q;
            std::uint64_t Y = v1[y] * mod_pow(inv, forms[1].n, q) % q;
            image[static_cast<std::size_t>(x) * q + y] = static_cast<std::int64_t>(X * q + Y);
        }
    });
    // g on the image, checked on one thread so the result is order independent
    std::vector<bool> g_nonzero(static_cast<std::size_t>(q) * q, false);
    for (std::uint32_t x = 0; x < q; ++x) {
        std::vector<std::uint32_t> gv;
        eg.row(x, gv);
        for (std::uint32_t y = 0; y < q; ++y) g_nonzero[static_cast<std::size_t>(x) * q + y] = gv[y] != 0;
    }
    for (auto n : codomain_row) rep.codomain_points += n;
    std::vector<bool> hit(static_cast<std::size_t>(q) * q, false);
    rep.lands_in_codomain = true;
    rep.injective = true;
    for (auto target : image) {
        if (target == kOutside) continue;
        ++rep.domain_points;
        auto t = static_cast<std::size_t>(target);
        if (!g_nonzero[t]) {
            rep.lands_in_codomain = false;
            continue;
        }
        if (hit[t]) rep.injective = false;
        hit[t] = true;
    }
    rep.bijective = rep.lands_in_codomain && rep.injective && rep.domain_points == rep.codomain_points;
    if (!rep.lands_in_codomain)
        rep.reason = "some image point lies on g = 0";
    else if (!rep.injective)
        rep.reason = "two points share an image";
    else if (!rep.bijective)
        rep.reason = "image misses part of the codomain";
    return rep;
}

}  // namespace planecomp
