#include "planecomp/birational_map.hpp"

#include "planecomp/error.hpp"

namespace planecomp {

namespace {

std::vector<RationalFunction> unified(std::vector<RationalFunction> comps) {
    if (comps.empty()) return comps;
    VarSet vars = comps[0].vars();
    for (const auto& c : comps) {
        if (!(c.field() == comps[0].field()))
            throw Error(ErrorKind::FieldMismatch, c.field().to_string() + " vs " + comps[0].field().to_string());
        vars = vars.union_with(c.vars());
    }
    for (auto& c : comps) c = c.embed(vars);
    return comps;
}

}  // namespace

BirationalMap::BirationalMap(std::vector<RationalFunction> components,
                             std::optional<std::vector<RationalFunction>> inverse, bool homogeneous)
    : components_(unified(std::move(components))), homogeneous_(homogeneous) {
    if (components_.size() != 2 && components_.size() != 3)
        throw Error(ErrorKind::DimensionMismatch, "maps have 2 or 3 components");
    if (vars().size() != components_.size())
        throw Error(ErrorKind::DimensionMismatch, "number of variables differs from the number of components");
    if (inverse) {
        if (inverse->size() != components_.size())
            throw Error(ErrorKind::DimensionMismatch, "inverse has a different number of components");
        std::vector<RationalFunction> inv;
        for (auto& c : *inverse) inv.push_back(c.embed(vars().union_with(c.vars())));
        inv = unified(std::move(inv));
        if (!(inv[0].vars() == vars()))
            throw Error(ErrorKind::DimensionMismatch, "inverse uses different variables");
        inverse_ = std::move(inv);
    }
}

BirationalMap BirationalMap::identity(const Field& field, const VarSet& vars, bool homogeneous) {
    auto c = coordinates(field, vars);
    return BirationalMap(c, c, homogeneous);
}

const Field& BirationalMap::field() const { return components_.at(0).field(); }
const VarSet& BirationalMap::vars() const { return components_.at(0).vars(); }

BirationalMap BirationalMap::inverse() const {
    if (!inverse_) throw Error(ErrorKind::MissingInverse, "no inverse supplied");
    return BirationalMap(*inverse_, components_, homogeneous_);
}

std::vector<RationalFunction> coordinates(const Field& field, const VarSet& vars) {
    std::vector<RationalFunction> out;
    for (std::size_t i = 0; i < vars.size(); ++i) out.emplace_back(MultiPoly::variable(field, vars, vars[i]));
    return out;
}

BirationalMap compose(const BirationalMap& outer, const BirationalMap& inner) {
    if (outer.dim() != inner.dim()) throw Error(ErrorKind::DimensionMismatch, "maps of different dimension");
    if (!(outer.field() == inner.field()))
        throw Error(ErrorKind::FieldMismatch, outer.field().to_string() + " vs " + inner.field().to_string());
    std::vector<RationalFunction> comps;
    for (const auto& c : outer.components()) comps.push_back(substitute(c, inner.components()));
    std::optional<std::vector<RationalFunction>> inv;
    if (outer.has_inverse() && inner.has_inverse()) {
        std::vector<RationalFunction> ic;
        for (const auto& c : *inner.inverse_components()) ic.push_back(substitute(c, *outer.inverse_components()));
        inv = std::move(ic);
    }
    return BirationalMap(std::move(comps), std::move(inv), outer.homogeneous() && inner.homogeneous());
}

RationalFunction pullback(const BirationalMap& phi, const RationalFunction& h) {
    return substitute(h.embed(phi.vars()), phi.components());
}

RationalFunction pullback(const BirationalMap& phi, const MultiPoly& h) {
    return substitute(h.restrict_to(phi.vars()), phi.components());
}

RationalFunction MapChain::pullback(const RationalFunction& h) const {
    RationalFunction r = h;
    for (const auto& f : factors) r = reduce(planecomp::pullback(f, r));
    return r;
}

RationalFunction MapChain::pullback(const MultiPoly& h) const { return pullback(RationalFunction(h)); }

MapChain MapChain::inverse() const {
    MapChain out;
    for (auto it = factors.rbegin(); it != factors.rend(); ++it) out.factors.push_back(it->inverse());
    return out;
}

BirationalMap MapChain::flatten() const {
    BirationalMap acc = factors.at(0);
    for (std::size_t i = 1; i < factors.size(); ++i) acc = compose(acc, factors[i]);
    return acc;
}

}  // namespace planecomp
