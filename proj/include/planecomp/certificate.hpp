#pragma once

#include <optional>
#include <string>
#include <vector>

#include "planecomp/poly_io.hpp"

namespace planecomp {

struct Witness {
    std::optional<long long> n;
    std::optional<Scalar> lambda;
    std::optional<MultiPoly> residual;
};

struct Check {
    std::string name;
    bool pass = false;
    std::optional<Witness> witness;
};

/// Record of one verification run. Overall pass iff every check passes.
struct Certificate {
    std::string construction;
    Field field;
    Json input = Json::object();
    std::vector<Check> checks;
    std::vector<std::string> notes;

    bool pass() const noexcept;
    void add(std::string name, bool pass, std::optional<Witness> witness = std::nullopt);
    /// Appends every check of `other`, prefixing names with `prefix`.
    void absorb(const Certificate& other, const std::string& prefix = "");
    const Check* find(std::string_view name) const;

    Json to_json() const;
};

}  // namespace planecomp
