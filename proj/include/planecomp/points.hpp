#pragma once

#include <cstdint>
#include <string>

#include "planecomp/birational_map.hpp"
#include "planecomp/poly_io.hpp"

namespace planecomp {

inline constexpr std::uint64_t kMaxPointField = 101;

struct PointCounts {
    std::uint64_t q = 0;
    std::uint64_t curve_points = 0;
    std::uint64_t complement_points = 0;

    Json to_json() const;
};

/// Exhaustive count over A^2(F_q) of the zeros of f in (x, y).
/// Throws InfiniteField over Q and FieldTooLarge for q > 101.
PointCounts count_points(const MultiPoly& f, unsigned jobs = 1);

struct BijectionReport {
    std::uint64_t q = 0;
    std::uint64_t domain_points = 0;
    std::uint64_t codomain_points = 0;
    bool regular = false;        // every component lies in k[x, y, 1/f]
    bool lands_in_codomain = false;
    bool injective = false;
    bool bijective = false;
    std::string reason;

    Json to_json() const;
};

/// Evaluates phi on every F_q-point of A^2 - {f = 0} through the forms
/// q_i / f^n_i and checks that it is a bijection onto A^2 - {g = 0}.
BijectionReport check_bijection(const MapChain& phi, const MultiPoly& f, const MultiPoly& g, unsigned jobs = 1);

}  // namespace planecomp
