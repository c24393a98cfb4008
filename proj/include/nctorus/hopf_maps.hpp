#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "twisted_algebra.hpp"

namespace nctorus {

/// Linear map defined by its values on basis monomials and extended linearly.
class LinearMap {
public:
    using Rule = std::function<AlgebraElement(const MultiIndex&)>;

    LinearMap(std::string name, const AlgebraDescriptor& source, const AlgebraDescriptor& target, Rule rule)
        : name_(std::move(name)), source_(&source), target_(&target), rule_(std::move(rule))
    {
    }

    const std::string& name() const { return name_; }
    const AlgebraDescriptor& source() const { return *source_; }
    const AlgebraDescriptor& target() const { return *target_; }

    AlgebraElement on_basis(const MultiIndex& idx) const { return rule_(idx); }

    AlgebraElement operator()(const AlgebraElement& x) const
    {
        if (!(x.algebra() == *source_))
            throw AlgebraError("map " + name_ + " expects a " + source_->name + " element, got " + x.algebra().name);
        AlgebraElement out(*target_);
        for (const auto& [idx, c] : x.support())
            out += rule_(idx).scaled(c);
        return out;
    }

private:
    std::string name_;
    const AlgebraDescriptor* source_;
    const AlgebraDescriptor* target_;
    Rule rule_;
};

/// Linear functional into the phase ring.
class LinearFunctional {
public:
    using Rule = std::function<PhaseScalar(const MultiIndex&)>;

    LinearFunctional(std::string name, const AlgebraDescriptor& source, Rule rule)
        : name_(std::move(name)), source_(&source), rule_(std::move(rule))
    {
    }

    const std::string& name() const { return name_; }
    const AlgebraDescriptor& source() const { return *source_; }

    PhaseScalar operator()(const AlgebraElement& x) const
    {
        if (!(x.algebra() == *source_))
            throw AlgebraError("map " + name_ + " expects a " + source_->name + " element, got " + x.algebra().name);
        PhaseScalar out;
        for (const auto& [idx, c] : x.support())
            out += rule_(idx) * c;
        return out;
    }

private:
    std::string name_;
    const AlgebraDescriptor* source_;
    Rule rule_;
};

namespace detail {

inline AlgebraElement phased_basis(const AlgebraDescriptor& alg, std::int64_t s_exp, MultiIndex idx)
{
    AlgebraElement x(alg);
    x.add_term(std::move(idx), PhaseScalar::phase_pow(s_exp));
    return x;
}

}  // namespace detail

/// Delta: T_q -> P2_q, U -> U1 U2, V -> V1 V2;
/// on the basis U^k V^l -> q^{-kl/2} U1^k V1^l U2^k V2^l.
inline const LinearMap& comult()
{
    static const LinearMap m("delta", torus_algebra(), p2_algebra(), [](const MultiIndex& a) {
        return detail::phased_basis(p2_algebra(), -a[0] * a[1], {a[0], a[1], a[0], a[1]});
    });
    return m;
}

/// epsilon(U^k V^l) = q^{kl/2}. Not multiplicative.
inline const LinearFunctional& counit()
{
    static const LinearFunctional m("epsilon", torus_algebra(),
                                    [](const MultiIndex& a) { return PhaseScalar::phase_pow(a[0] * a[1]); });
    return m;
}

/// S: U -> U^{-1}, V -> V^{-1}, an algebra homomorphism. U^{-k} V^{-l} is
/// already normal-ordered, so no phase appears on the basis.
inline const LinearMap& antipode()
{
    static const LinearMap m("S", torus_algebra(), torus_algebra(),
                             [](const MultiIndex& a) { return basis(torus_algebra(), -a); });
    return m;
}

/// mu: P2_q -> T_q, U1^k V1^l U2^m V2^n -> U^k V^l U^m V^n = q^{-lm} U^{k+m} V^{l+n}.
inline const LinearMap& mult_map()
{
    static const LinearMap m("mu", p2_algebra(), torus_algebra(), [](const MultiIndex& a) {
        return detail::phased_basis(torus_algebra(), -2 * a[1] * a[2], {a[0] + a[2], a[1] + a[3]});
    });
    return m;
}

/// (Delta, Id): P2_q -> P3_q.
inline const LinearMap& lift_left_comult()
{
    static const LinearMap m("delta-id", p2_algebra(), p3_algebra(), [](const MultiIndex& a) {
        return detail::phased_basis(p3_algebra(), -a[0] * a[1], {a[0], a[1], a[0], a[1], a[2], a[3]});
    });
    return m;
}

/// (Id, Delta): P2_q -> P3_q.
inline const LinearMap& lift_right_comult()
{
    static const LinearMap m("id-delta", p2_algebra(), p3_algebra(), [](const MultiIndex& a) {
        return detail::phased_basis(p3_algebra(), -a[2] * a[3], {a[0], a[1], a[2], a[3], a[2], a[3]});
    });
    return m;
}

/// (epsilon, Id): P2_q -> T_q.
inline const LinearMap& lift_left_counit()
{
    static const LinearMap m("eps-id", p2_algebra(), torus_algebra(), [](const MultiIndex& a) {
        return detail::phased_basis(torus_algebra(), a[0] * a[1], {a[2], a[3]});
    });
    return m;
}

/// (Id, epsilon): P2_q -> T_q.
inline const LinearMap& lift_right_counit()
{
    static const LinearMap m("id-eps", p2_algebra(), torus_algebra(), [](const MultiIndex& a) {
        return detail::phased_basis(torus_algebra(), a[2] * a[3], {a[0], a[1]});
    });
    return m;
}

/// (S, Id): P2_q -> P2_q. Linear only; not multiplicative.
inline const LinearMap& lift_left_antipode()
{
    static const LinearMap m("S-id", p2_algebra(), p2_algebra(), [](const MultiIndex& a) {
        return basis(p2_algebra(), {-a[0], -a[1], a[2], a[3]});
    });
    return m;
}

/// (Id, S): P2_q -> P2_q.
inline const LinearMap& lift_right_antipode()
{
    static const LinearMap m("id-S", p2_algebra(), p2_algebra(), [](const MultiIndex& a) {
        return basis(p2_algebra(), {a[0], a[1], -a[2], -a[3]});
    });
    return m;
}

/// Delta_q: S(Z) -> T_q, z^n -> (UV)^n = q^{-n(n-1)/2} U^n V^n.
inline const LinearMap& circle_comult()
{
    static const LinearMap m("circle-delta", circle_algebra(), torus_algebra(), [](const MultiIndex& a) {
        const auto n = a[0];
        return detail::phased_basis(torus_algebra(), -n * (n - 1), {n, n});
    });
    return m;
}

/// The two canonical copies of T_q inside P2_q.
inline const LinearMap& embed_left()
{
    static const LinearMap m("embed-left", torus_algebra(), p2_algebra(),
                             [](const MultiIndex& a) { return basis(p2_algebra(), {a[0], a[1], 0, 0}); });
    return m;
}

inline const LinearMap& embed_right()
{
    static const LinearMap m("embed-right", torus_algebra(), p2_algebra(),
                             [](const MultiIndex& a) { return basis(p2_algebra(), {0, 0, a[0], a[1]}); });
    return m;
}

/// A named structure map: either algebra-valued or scalar-valued.
using StructureMap = std::variant<const LinearMap*, const LinearFunctional*>;

inline const std::vector<std::string>& structure_map_names()
{
    static const std::vector<std::string> names{"delta", "epsilon", "S",      "mu",     "delta-id",    "id-delta",
                                                "eps-id", "id-eps", "S-id",   "id-S",   "circle-delta"};
    return names;
}

inline StructureMap structure_map_by_name(std::string_view name)
{
    if (name == "epsilon")
        return &counit();
    for (const LinearMap* m : {&comult(), &antipode(), &mult_map(), &lift_left_comult(), &lift_right_comult(),
                               &lift_left_counit(), &lift_right_counit(), &lift_left_antipode(),
                               &lift_right_antipode(), &circle_comult()})
        if (m->name() == name)
            return m;
    throw AlgebraError("unknown map '" + std::string(name) + "'");
}

inline const AlgebraDescriptor& structure_map_source(const StructureMap& m)
{
    return std::visit([](auto* p) -> const AlgebraDescriptor& { return p->source(); }, m);
}

}  // namespace nctorus
