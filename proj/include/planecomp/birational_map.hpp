#pragma once

#include <optional>
#include <vector>

#include "planecomp/ratfunc.hpp"

namespace planecomp {

/// A rational self-map of A^2 or A^3 given by its components, optionally
/// with a claimed inverse. `homogeneous` marks maps of the cone over P^2.
class BirationalMap {
public:
    BirationalMap() = default;
    BirationalMap(std::vector<RationalFunction> components,
                  std::optional<std::vector<RationalFunction>> inverse = std::nullopt, bool homogeneous = false);

    static BirationalMap identity(const Field& field, const VarSet& vars, bool homogeneous = false);

    std::size_t dim() const noexcept { return components_.size(); }
    const Field& field() const;
    const VarSet& vars() const;
    const std::vector<RationalFunction>& components() const noexcept { return components_; }
    const std::optional<std::vector<RationalFunction>>& inverse_components() const noexcept { return inverse_; }
    bool homogeneous() const noexcept { return homogeneous_; }
    bool has_inverse() const noexcept { return inverse_.has_value(); }

    /// The claimed inverse as a map; throws MissingInverse.
    BirationalMap inverse() const;

private:
    std::vector<RationalFunction> components_;
    std::optional<std::vector<RationalFunction>> inverse_;
    bool homogeneous_ = false;
};

/// outer o inner: substitutes inner's components into outer's. No
/// cancellation beyond what the substitution does itself.
BirationalMap compose(const BirationalMap& outer, const BirationalMap& inner);

/// phi^*(h) = h o phi.
RationalFunction pullback(const BirationalMap& phi, const RationalFunction& h);
RationalFunction pullback(const BirationalMap& phi, const MultiPoly& h);

/// A map kept as a product factors[0] o factors[1] o ... so that pullbacks
/// can be reduced after every step.
struct MapChain {
    std::vector<BirationalMap> factors;

    const Field& field() const { return factors.front().field(); }
    const VarSet& vars() const { return factors.front().vars(); }
    std::size_t dim() const { return factors.front().dim(); }

    RationalFunction pullback(const RationalFunction& h) const;
    RationalFunction pullback(const MultiPoly& h) const;
    /// Reverse order with each factor replaced by its claimed inverse.
    MapChain inverse() const;
    /// Single composed map (with inverse when every factor has one).
    BirationalMap flatten() const;
};

/// The coordinate functions of `vars` as rational functions.
std::vector<RationalFunction> coordinates(const Field& field, const VarSet& vars);

}  // namespace planecomp
