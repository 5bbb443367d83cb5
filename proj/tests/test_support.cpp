#include "test_support.hpp"

#include <cstdlib>
#include <optional>
#include <string>

namespace planecomp::testing {

namespace {
std::optional<std::uint64_t> g_seed;
}

std::uint64_t seed() {
    if (g_seed) return *g_seed;
    if (const char* env = std::getenv("PLANECOMP_SEED")) return std::stoull(env);
    return 20240611;
}

void set_seed(std::uint64_t s) { g_seed = s; }

Scalar random_scalar(Rng& rng, const Field& k, bool nonzero) {
    while (true) {
        Scalar s = k.is_prime() ? Scalar::from_residue(k, rng() % k.modulus())
                                : Scalar::from_int(k, static_cast<long long>(rng() % 11) - 5);
        if (!nonzero || !s.is_zero()) return s;
    }
}

MultiPoly random_poly(Rng& rng, const Field& k, const VarSet& vars, int max_deg, int max_terms) {
    std::vector<Term> terms;
    int n = static_cast<int>(rng() % static_cast<std::uint64_t>(max_terms + 1));
    for (int i = 0; i < n; ++i) {
        Monomial m;
        int budget = static_cast<int>(rng() % static_cast<std::uint64_t>(max_deg + 1));
        for (std::size_t v = 0; v < vars.size() && budget > 0; ++v) {
            int e = static_cast<int>(rng() % static_cast<std::uint64_t>(budget + 1));
            m.exps[v] = static_cast<std::uint16_t>(e);
            budget -= e;
        }
        terms.push_back({m, random_scalar(rng, k, true)});
    }
    // from_terms merges repeated monomials
    return MultiPoly::from_terms(k, vars, std::move(terms));
}

}  // namespace planecomp::testing
