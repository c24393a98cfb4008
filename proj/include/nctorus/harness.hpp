#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <future>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "hopf_maps.hpp"
#include "relations.hpp"
#include "serialization.hpp"
#include "twisted_algebra.hpp"

namespace nctorus {

struct TrialConfig {
    std::uint64_t seed = 42;
    std::size_t trials = 200;
    std::size_t max_support = 4;
    std::int64_t exponent_bound = 3;

    void validate() const
    {
        if (trials < 1)
            throw AlgebraError("trials must be at least 1");
        if (max_support < 1)
            throw AlgebraError("max_support must be at least 1");
        if (exponent_bound < 1)
            throw AlgebraError("exponent_bound must be at least 1");
    }
};

/// Sample points q = exp(2*pi*i*theta) for the numeric cross-check.
inline constexpr std::array<double, 3> kCheckThetas{0.0, 1.0 / 3.0, 0.1375};
inline constexpr double kNumericTolerance = 1e-10;

using Rng = std::mt19937_64;

/// Nonzero coefficient (a/b) + (c/d) i with numerators in [-3,3] and denominators in [1,3].
inline GaussianRational random_coefficient(Rng& rng)
{
    std::uniform_int_distribution<long> num(-3, 3), den(1, 3);
    for (;;) {
        long a = num(rng), b = den(rng), c = num(rng), d = den(rng);
        GaussianRational g(mpq_class(a, static_cast<unsigned long>(b)), mpq_class(c, static_cast<unsigned long>(d)));
        if (!g.is_zero())
            return g;
    }
}

inline PhaseScalar random_scalar(Rng& rng, std::size_t max_terms = 3, std::int64_t exp_bound = 4)
{
    std::uniform_int_distribution<std::size_t> count(1, max_terms);
    std::uniform_int_distribution<std::int64_t> exp(-exp_bound, exp_bound);
    PhaseScalar p;
    for (std::size_t n = count(rng); n > 0; --n)
        p.add_term(exp(rng), random_coefficient(rng));
    return p;
}

inline MultiIndex random_index(Rng& rng, std::size_t dim, std::int64_t bound)
{
    std::uniform_int_distribution<std::int64_t> dist(-bound, bound);
    MultiIndex idx = MultiIndex::zero(dim);
    for (std::size_t i = 0; i < dim; ++i)
        idx[i] = dist(rng);
    return idx;
}

/// Random element with distinct indices in [-bound, bound]^d and
/// coefficients drawn from the pool times s^e, e in [-4, 4].
inline AlgebraElement random_element(const AlgebraDescriptor& alg, const TrialConfig& cfg, Rng& rng)
{
    cfg.validate();
    std::uniform_int_distribution<std::size_t> count(1, cfg.max_support);
    std::uniform_int_distribution<std::int64_t> s_exp(-4, 4);
    const std::size_t n = count(rng);
    std::set<MultiIndex> indices;
    while (indices.size() < n)
        indices.insert(random_index(rng, alg.dim, cfg.exponent_bound));
    AlgebraElement x(alg);
    for (const auto& idx : indices)
        x.add_term(idx, PhaseScalar::monomial(s_exp(rng), random_coefficient(rng)));
    return x;
}

/// Deterministic for a fixed cfg.seed.
inline AlgebraElement random_element(const AlgebraDescriptor& alg, const TrialConfig& cfg)
{
    Rng rng(cfg.seed);
    return random_element(alg, cfg, rng);
}

struct Failure {
    std::string description;
    nlohmann::json lhs;
    nlohmann::json rhs;
};

struct CheckReport {
    std::string name;
    std::string algebras;
    std::size_t trials = 0;
    std::size_t failure_count = 0;
    std::vector<Failure> failures;  // first few only; failure_count has the total

    bool passed() const { return failure_count == 0; }
};

namespace detail {

inline bool numerically_equal(const AlgebraElement& a, const AlgebraElement& b, double theta)
{
    auto ea = a.eval(theta);
    auto eb = b.eval(theta);
    for (const auto& [idx, v] : ea) {
        auto it = eb.find(idx);
        auto w = it == eb.end() ? std::complex<double>{} : it->second;
        if (std::abs(v - w) > kNumericTolerance)
            return false;
    }
    for (const auto& [idx, w] : eb)
        if (!ea.contains(idx) && std::abs(w) > kNumericTolerance)
            return false;
    return true;
}

inline std::uint64_t mix_seed(std::uint64_t seed, std::string_view name)
{
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : name) {
        h ^= c;
        h *= 1099511628211ull;
    }
    std::uint64_t z = seed ^ h;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

}  // namespace detail

/// State shared by one check: its RNG, config and accumulating report.
class CheckContext {
public:
    static constexpr std::size_t kMaxRecordedFailures = 5;

    CheckContext(const TrialConfig& cfg, CheckReport& report)
        : cfg(cfg), rng(detail::mix_seed(cfg.seed, report.name)), report_(report)
    {
    }

    const TrialConfig cfg;
    Rng rng;

    AlgebraElement random(const AlgebraDescriptor& alg) { return random_element(alg, cfg, rng); }
    void count_trial(std::size_t n = 1) { report_.trials += n; }

    /// Exact equality, cross-checked numerically: an exact match must also
    /// match at every sample theta.
    bool expect_equal(const AlgebraElement& lhs, const AlgebraElement& rhs, const std::string& what)
    {
        if (!(lhs == rhs)) {
            fail(what, lhs, rhs);
            return false;
        }
        for (double theta : kCheckThetas)
            if (!detail::numerically_equal(lhs, rhs, theta)) {
                fail(what + " (numeric mismatch at theta=" + std::to_string(theta) + ")", lhs, rhs);
                return false;
            }
        return true;
    }

    bool expect_equal(const PhaseScalar& lhs, const PhaseScalar& rhs, const std::string& what)
    {
        static const AlgebraDescriptor scalars{"scalar", 0, {}, CocycleMatrix::zero(0)};
        return expect_equal(AlgebraElement::scalar(scalars, lhs), AlgebraElement::scalar(scalars, rhs), what);
    }

    /// Exact inequality, with at least one sample theta separating the sides.
    bool expect_distinct(const AlgebraElement& lhs, const AlgebraElement& rhs, const std::string& what)
    {
        if (lhs == rhs) {
            fail(what + " (expected distinct)", lhs, rhs);
            return false;
        }
        for (double theta : kCheckThetas)
            if (!detail::numerically_equal(lhs, rhs, theta))
                return true;
        fail(what + " (numerically indistinguishable at every theta)", lhs, rhs);
        return false;
    }

    bool expect_distinct(const PhaseScalar& lhs, const PhaseScalar& rhs, const std::string& what)
    {
        static const AlgebraDescriptor scalars{"scalar", 0, {}, CocycleMatrix::zero(0)};
        return expect_distinct(AlgebraElement::scalar(scalars, lhs), AlgebraElement::scalar(scalars, rhs), what);
    }

    void expect(bool ok, const std::string& what)
    {
        if (!ok)
            record({what, nullptr, nullptr});
    }

private:
    void fail(const std::string& what, const AlgebraElement& lhs, const AlgebraElement& rhs)
    {
        record({what + ": " + lhs.str() + " vs " + rhs.str(), to_json(lhs), to_json(rhs)});
    }
    void record(Failure f)
    {
        if (report_.failures.size() < kMaxRecordedFailures)
            report_.failures.push_back(std::move(f));
        ++report_.failure_count;
    }

    CheckReport& report_;
};

struct CheckSpec {
    std::string name;
    std::string algebras;
    std::string property;
    std::function<void(CheckContext&)> run;
};

namespace checks {

inline const std::vector<const AlgebraDescriptor*>& all_algebras()
{
    static const std::vector<const AlgebraDescriptor*> v{&circle_algebra(), &torus_algebra(), &p2_algebra(),
                                                         &p3_algebra()};
    return v;
}

inline void scalar_ring_laws(CheckContext& ctx)
{
    for (std::size_t t = 0; t < ctx.cfg.trials; ++t) {
        auto a = random_scalar(ctx.rng), b = random_scalar(ctx.rng), c = random_scalar(ctx.rng);
        ctx.expect_equal((a + b) + c, a + (b + c), "additive associativity");
        ctx.expect_equal((a * b) * c, a * (b * c), "multiplicative associativity");
        ctx.expect_equal(a * b, b * a, "commutativity");
        ctx.expect_equal(a * (b + c), a * b + a * c, "distributivity");
        ctx.expect_equal(a * PhaseScalar(1), a, "multiplicative identity");
        ctx.expect((a - a).is_zero(), "additive inverse");
        ctx.count_trial();
    }
}

inline void scalar_eval_homomorphism(CheckContext& ctx)
{
    for (std::size_t t = 0; t < ctx.cfg.trials; ++t) {
        auto a = random_scalar(ctx.rng, 4, 8), b = random_scalar(ctx.rng, 4, 8);
        for (double theta : kCheckThetas) {
            ctx.expect(std::abs((a * b).eval(theta) - a.eval(theta) * b.eval(theta)) <= kNumericTolerance,
                       "eval(a*b) = eval(a)*eval(b) for a=" + a.str() + ", b=" + b.str());
            ctx.expect(std::abs((a + b).eval(theta) - (a.eval(theta) + b.eval(theta))) <= kNumericTolerance,
                       "eval(a+b) = eval(a)+eval(b) for a=" + a.str() + ", b=" + b.str());
        }
        ctx.count_trial();
    }
}

inline void associativity(CheckContext& ctx)
{
    for (const auto* alg : all_algebras())
        for (std::size_t t = 0; t < ctx.cfg.trials; ++t) {
            auto x = ctx.random(*alg), y = ctx.random(*alg), z = ctx.random(*alg);
            ctx.expect_equal((x * y) * z, x * (y * z), alg->name + " associativity");
            ctx.count_trial();
        }
}

inline void unit_law(CheckContext& ctx)
{
    for (const auto* alg : all_algebras())
        for (std::size_t t = 0; t < ctx.cfg.trials; ++t) {
            auto x = ctx.random(*alg);
            ctx.expect_equal(unit(*alg) * x, x, alg->name + " left unit");
            ctx.expect_equal(x * unit(*alg), x, alg->name + " right unit");
            ctx.count_trial();
        }
}

/// Each tabulated relation A B = s^e B A, checked with the cocycle product.
inline void relation_rows(CheckContext& ctx, const AlgebraDescriptor& alg)
{
    for (const auto& rel : relation_table(alg)) {
        auto a = AlgebraElement::generator(alg, generator_position(alg, rel.left));
        auto b = AlgebraElement::generator(alg, generator_position(alg, rel.right));
        ctx.expect_equal(a * b, (b * a).scaled(PhaseScalar::phase_pow(rel.s_exp)),
                         rel.left + rel.right + " = " + q_power_str(rel.s_exp) + " " + rel.right + rel.left);
        ctx.count_trial();
    }
}

inline void torus_relation(CheckContext& ctx)
{
    const auto& t = torus_algebra();
    auto u = AlgebraElement::generator(t, 0), v = AlgebraElement::generator(t, 1);
    ctx.expect_equal(u * v, (v * u).scaled(PhaseScalar::phase_pow(2)), "UV = qVU");
    ctx.count_trial();
    relation_rows(ctx, t);
}

inline void p2_relations(CheckContext& ctx)
{
    ctx.expect(relation_table(p2_algebra()).size() == 6, "P2 relation table has six rows");
    relation_rows(ctx, p2_algebra());
}

inline void p3_relations(CheckContext& ctx)
{
    ctx.expect(relation_table(p3_algebra()).size() == 15, "P3 relation table has fifteen rows");
    relation_rows(ctx, p3_algebra());
}

inline void subalgebra_embedding(CheckContext& ctx)
{
    for (const LinearMap* e : {&embed_left(), &embed_right()})
        for (std::size_t t = 0; t < ctx.cfg.trials; ++t) {
            auto x = ctx.random(torus_algebra()), y = ctx.random(torus_algebra());
            ctx.expect_equal((*e)(x * y), (*e)(x) * (*e)(y), e->name() + " is multiplicative");
            ctx.count_trial();
        }
}

/// All indices in [-bound, bound]^dim in lexicographic order.
inline std::vector<MultiIndex> index_box(std::size_t dim, std::int64_t bound)
{
    std::vector<MultiIndex> out;
    MultiIndex idx = MultiIndex::zero(dim);
    for (auto& e : idx.exps)
        e = -bound;
    for (;;) {
        out.push_back(idx);
        std::size_t k = dim;
        while (k > 0) {
            --k;
            if (idx[k] < bound) {
                ++idx[k];
                break;
            }
            idx[k] = -bound;
            if (k == 0)
                return out;
        }
        if (dim == 0)
            return out;
    }
}

/// Cocycle product of two monomials versus rewriting their concatenated words.
inline bool monomial_pair_agrees(const AlgebraDescriptor& alg, const SwapTable& table, const MultiIndex& a,
                                 const MultiIndex& b)
{
    auto nf = normal_order(word_of_index(alg, a) + word_of_index(alg, b), table);
    return nf.index == a + b && nf.s_exp == alg.cocycle.phase(a, b);
}

inline void oracle_equivalence(CheckContext& ctx)
{
    for (const auto* alg : {&circle_algebra(), &torus_algebra(), &p2_algebra()}) {
        SwapTable table(*alg);
        auto box = index_box(alg->dim, 2);
        for (const auto& a : box)
            for (const auto& b : box) {
                if (!monomial_pair_agrees(*alg, table, a, b)) {
                    auto lhs = basis(*alg, a) * basis(*alg, b);
                    ctx.expect_equal(lhs, element_of_word(word_of_index(*alg, a) + word_of_index(*alg, b), table),
                                     alg->name + " cocycle vs rewriting on " + a.str() + "*" + b.str());
                }
                ctx.count_trial();
            }
    }
    const auto& p3 = p3_algebra();
    SwapTable table(p3);
    const std::size_t samples = std::max<std::size_t>(1000, ctx.cfg.trials);
    for (std::size_t t = 0; t < samples; ++t) {
        auto a = random_index(ctx.rng, p3.dim, ctx.cfg.exponent_bound);
        auto b = random_index(ctx.rng, p3.dim, ctx.cfg.exponent_bound);
        auto lhs = basis(p3, a) * basis(p3, b);
        ctx.expect_equal(lhs, element_of_word(word_of_index(p3, a) + word_of_index(p3, b), table),
                         "p3 cocycle vs rewriting on " + a.str() + "*" + b.str());
        ctx.count_trial();
    }
}

inline void swap_table_consistency(CheckContext& ctx)
{
    for (const auto* alg : all_algebras()) {
        SwapTable table(*alg);
        for (std::size_t i = 0; i < alg->dim; ++i)
            for (std::size_t j = 0; j < alg->dim; ++j) {
                if (i == j)
                    continue;
                ctx.expect(table(i, j) == -table(j, i), alg->name + " swap table antisymmetry");
                auto gi = AlgebraElement::generator(*alg, i), gj = AlgebraElement::generator(*alg, j);
                ctx.expect_equal(gi * gj, (gj * gi).scaled(PhaseScalar::phase_pow(table(i, j))),
                                 alg->name + " " + alg->generator_names[i] + alg->generator_names[j] + " swap");
                ctx.count_trial();
            }
    }
}

inline Word random_word(Rng& rng, const AlgebraDescriptor& alg)
{
    std::uniform_int_distribution<std::size_t> len(1, 8), pos(0, alg.dim - 1);
    std::uniform_int_distribution<std::int64_t> pw(1, 3);
    std::bernoulli_distribution neg(0.5);
    Word w(alg);
    for (std::size_t n = len(rng); n > 0; --n) {
        auto p = pw(rng);
        w.letters.push_back({pos(rng), neg(rng) ? -p : p});
    }
    return w;
}

inline void normal_order_confluence(CheckContext& ctx)
{
    const std::size_t samples = std::max<std::size_t>(500, ctx.cfg.trials);
    for (const auto* alg : {&torus_algebra(), &p2_algebra(), &p3_algebra()}) {
        SwapTable table(*alg);
        for (std::size_t t = 0; t < samples; ++t) {
            Word w = random_word(ctx.rng, *alg);
            Word shuffled = w;
            std::int64_t phase = 0;  // w = s^phase * shuffled
            if (shuffled.letters.size() > 1) {
                std::uniform_int_distribution<std::size_t> at(0, shuffled.letters.size() - 2);
                for (int k = 0; k < 20; ++k) {
                    auto p = at(ctx.rng);
                    auto& x = shuffled.letters[p];
                    auto& y = shuffled.letters[p + 1];
                    if (x.position != y.position)
                        phase += table(x.position, y.position) * x.power * y.power;
                    std::swap(x, y);
                }
            }
            auto direct = normal_order(w, table);
            auto via = normal_order(shuffled, table);
            ctx.expect(direct.index == via.index && direct.s_exp == phase + via.s_exp,
                       alg->name + " confluence on word " + w.str() + " vs " + shuffled.str());
            ctx.count_trial();
        }
    }
}

inline void q1_degeneration(CheckContext& ctx)
{
    const std::size_t samples = std::max<std::size_t>(100, ctx.cfg.trials);
    for (const auto* alg : all_algebras())
        for (std::size_t t = 0; t < samples; ++t) {
            auto x = ctx.random(*alg), y = ctx.random(*alg);
            ctx.expect(detail::numerically_equal(x * y, y * x, 0.0),
                       alg->name + " commutative at q=1 for x=" + x.str() + ", y=" + y.str());
            ctx.count_trial();
        }
}

inline void p2_discrepancy(CheckContext& ctx)
{
    const auto& p2 = p2_algebra();
    const auto& printed = p2_as_printed_algebra();
    SwapTable table(p2);

    // U2 * V2: the printed exponent gives q^{-1}, the relations give 1.
    auto literal = AlgebraElement::generator(printed, 2) * AlgebraElement::generator(printed, 3);
    auto from_relations = element_of_word(Word(p2, {{2, 1}, {3, 1}}), table);
    ctx.expect_equal(reinterpret(literal, p2), basis(p2, {0, 0, 1, 1}).scaled(PhaseScalar::phase_pow(-2)),
                     "printed exponent on U2*V2 is q^(-1)");
    ctx.expect_equal(from_relations, basis(p2, {0, 0, 1, 1}), "relations give U2*V2 = U2 V2");
    ctx.expect_distinct(reinterpret(literal, p2), from_relations, "printed exponent contradicts U2V2 = qV2U2");
    ctx.expect_equal(AlgebraElement::generator(p2, 2) * AlgebraElement::generator(p2, 3), from_relations,
                     "corrected cocycle agrees with relations on U2*V2");
    ctx.count_trial();

    // Over the full [-2,2]^4 box the printed form disagrees somewhere, the corrected one nowhere.
    std::size_t printed_mismatches = 0, corrected_mismatches = 0;
    auto box = index_box(4, 2);
    for (const auto& a : box)
        for (const auto& b : box) {
            auto nf = normal_order(word_of_index(p2, a) + word_of_index(p2, b), table);
            printed_mismatches += nf.s_exp != printed.cocycle.phase(a, b);
            corrected_mismatches += nf.s_exp != p2.cocycle.phase(a, b);
        }
    ctx.count_trial(box.size() * box.size());
    ctx.expect(printed_mismatches > 0, "printed exponent disagrees with the relations on some monomial pair");
    ctx.expect(corrected_mismatches == 0, "corrected exponent agrees with the relations on every monomial pair");
}

inline void homomorphism(CheckContext& ctx, const LinearMap& f)
{
    for (std::size_t t = 0; t < ctx.cfg.trials; ++t) {
        auto x = ctx.random(f.source()), y = ctx.random(f.source());
        ctx.expect_equal(f(x * y), f(x) * f(y), f.name() + " is multiplicative");
        ctx.count_trial();
    }
    ctx.expect_equal(f(unit(f.source())), unit(f.target()), f.name() + " preserves the unit");
}

inline void comult_homomorphism(CheckContext& ctx) { homomorphism(ctx, comult()); }

inline void lift_comult_homomorphism(CheckContext& ctx)
{
    homomorphism(ctx, lift_left_comult());
    homomorphism(ctx, lift_right_comult());
}

inline void antipode_homomorphism(CheckContext& ctx) { homomorphism(ctx, antipode()); }
inline void circle_comult_homomorphism(CheckContext& ctx) { homomorphism(ctx, circle_comult()); }

/// Basis monomials U^k V^l with |k|, |l| <= 3 followed by random elements.
template <class F>
void on_torus_inputs(CheckContext& ctx, F&& body)
{
    for (const auto& idx : index_box(2, 3)) {
        body(basis(torus_algebra(), idx), &idx);
        ctx.count_trial();
    }
    for (std::size_t t = 0; t < ctx.cfg.trials; ++t) {
        body(ctx.random(torus_algebra()), nullptr);
        ctx.count_trial();
    }
}

inline void coassociativity(CheckContext& ctx)
{
    on_torus_inputs(ctx, [&](const AlgebraElement& x, const MultiIndex* idx) {
        auto left = lift_left_comult()(comult()(x));
        auto right = lift_right_comult()(comult()(x));
        ctx.expect_equal(left, right, "(delta,id) delta = (id,delta) delta on " + x.str());
        if (idx) {
            auto k = (*idx)[0], l = (*idx)[1];
            ctx.expect_equal(left, basis(p3_algebra(), {k, l, k, l, k, l}).scaled(PhaseScalar::phase_pow(-2 * k * l)),
                             "coassociative image of " + x.str() + " is q^(-kl) U1^k V1^l U2^k V2^l U3^k V3^l");
        }
    });
}

inline void counit_laws(CheckContext& ctx)
{
    on_torus_inputs(ctx, [&](const AlgebraElement& x, const MultiIndex*) {
        ctx.expect_equal(lift_left_counit()(comult()(x)), x, "(eps,id) delta = id on " + x.str());
        ctx.expect_equal(lift_right_counit()(comult()(x)), x, "(id,eps) delta = id on " + x.str());
    });
}

inline void antipode_law(CheckContext& ctx)
{
    const auto& t = torus_algebra();
    on_torus_inputs(ctx, [&](const AlgebraElement& x, const MultiIndex* idx) {
        auto rhs = AlgebraElement::scalar(t, counit()(x));
        auto dx = comult()(x);
        ctx.expect_equal(mult_map()(lift_left_antipode()(dx)), rhs, "mu (S,id) delta = eps 1 on " + x.str());
        ctx.expect_equal(mult_map()(lift_right_antipode()(dx)), rhs, "mu (id,S) delta = eps 1 on " + x.str());
        if (idx) {
            auto k = (*idx)[0], l = (*idx)[1];
            auto p2 = [&](MultiIndex i, std::int64_t e) { return basis(p2_algebra(), std::move(i)).scaled(phase_pow(e)); };
            ctx.expect_equal(dx, p2({k, l, k, l}, -k * l), "delta(U^k V^l) = q^(-kl/2) U1^k V1^l U2^k V2^l");
            ctx.expect_equal(lift_left_antipode()(dx), p2({-k, -l, k, l}, -k * l), "(S,id) step");
            ctx.expect_equal(lift_right_antipode()(dx), p2({k, l, -k, -l}, -k * l), "(id,S) step");
            ctx.expect_equal(phase_pow(-k * l) * phase_pow(2 * k * l), phase_pow(k * l),
                             "q^(-kl/2) q^(kl) = q^(kl/2)");
            ctx.expect_equal(rhs, AlgebraElement::scalar(t, phase_pow(k * l)), "eps(U^k V^l) = q^(kl/2)");
        }
    });
}

inline void counit_not_homomorphism(CheckContext& ctx)
{
    const auto& t = torus_algebra();
    auto u = AlgebraElement::generator(t, 0), v = AlgebraElement::generator(t, 1);
    ctx.expect_equal(counit()(u * v), phase_pow(1), "eps(UV) = q^(1/2)");
    ctx.expect_equal(counit()(u) * counit()(v), PhaseScalar(1), "eps(U) eps(V) = 1");
    ctx.expect_distinct(counit()(u * v), counit()(u) * counit()(v), "eps(UV) != eps(U) eps(V)");
    ctx.count_trial();
}

inline void mult_map_represents_product(CheckContext& ctx)
{
    const auto& t = torus_algebra();
    auto box = index_box(2, 2);
    for (const auto& a : box)
        for (const auto& b : box) {
            auto x = basis(t, a), y = basis(t, b);
            ctx.expect_equal(mult_map()(embed_left()(x) * embed_right()(y)), x * y,
                             "mu(x_1 y_2) = xy for x=" + x.str() + ", y=" + y.str());
            ctx.count_trial();
        }
    for (std::size_t n = 0; n < ctx.cfg.trials; ++n) {
        auto x = ctx.random(t), y = ctx.random(t);
        ctx.expect_equal(mult_map()(embed_left()(x) * embed_right()(y)), x * y, "mu(x_1 y_2) = xy");
        ctx.count_trial();
    }
}

/// Closed-form basis rules compared with substituting generator images into
/// the normal-ordered word and rewriting in the target algebra.
inline void derived_rules(CheckContext& ctx)
{
    const auto& t = torus_algebra();
    const auto& p2 = p2_algebra();
    const auto& p3 = p3_algebra();
    auto g = [](const AlgebraDescriptor& alg, std::vector<GeneratorSymbol> l) { return Word(alg, std::move(l)); };

    struct Case {
        const LinearMap* map;
        std::vector<Word> images;
        std::int64_t bound;
    };
    std::vector<Case> cases{
        {&comult(), {g(p2, {{0, 1}, {2, 1}}), g(p2, {{1, 1}, {3, 1}})}, 3},
        {&antipode(), {g(t, {{0, -1}}), g(t, {{1, -1}})}, 3},
        {&lift_left_comult(),
         {g(p3, {{0, 1}, {2, 1}}), g(p3, {{1, 1}, {3, 1}}), g(p3, {{4, 1}}), g(p3, {{5, 1}})},
         2},
        {&lift_right_comult(),
         {g(p3, {{0, 1}}), g(p3, {{1, 1}}), g(p3, {{2, 1}, {4, 1}}), g(p3, {{3, 1}, {5, 1}})},
         2},
        // mu is not multiplicative, but on a normal-ordered word it is the
        // product U^k V^l U^m V^n in T_q.
        {&mult_map(), {g(t, {{0, 1}}), g(t, {{1, 1}}), g(t, {{0, 1}}), g(t, {{1, 1}})}, 2},
        {&circle_comult(), {g(t, {{0, 1}, {1, 1}})}, 6},
    };
    for (const auto& c : cases) {
        SwapTable target_table(c.map->target());
        for (const auto& idx : index_box(c.map->source().dim, c.bound)) {
            auto nf = substitute(word_of_index(c.map->source(), idx), c.images, target_table);
            AlgebraElement expected(c.map->target());
            expected.add_term(nf.index, nf.phase());
            ctx.expect_equal(c.map->on_basis(idx), expected, c.map->name() + " closed form on " + idx.str());
            ctx.count_trial();
        }
    }
}

inline void map_linearity(CheckContext& ctx)
{
    for (const LinearMap* f : {&comult(), &antipode(), &mult_map(), &lift_left_comult(), &lift_right_comult(),
                               &lift_left_counit(), &lift_right_counit(), &lift_left_antipode(),
                               &lift_right_antipode(), &circle_comult()})
        for (std::size_t t = 0; t < ctx.cfg.trials; ++t) {
            auto x = ctx.random(f->source()), y = ctx.random(f->source());
            auto c = random_scalar(ctx.rng);
            ctx.expect_equal((*f)(x + y.scaled(c)), (*f)(x) + (*f)(y).scaled(c), f->name() + " is linear");
            ctx.count_trial();
        }
    for (std::size_t t = 0; t < ctx.cfg.trials; ++t) {
        auto x = ctx.random(torus_algebra()), y = ctx.random(torus_algebra());
        auto c = random_scalar(ctx.rng);
        ctx.expect_equal(counit()(x + y.scaled(c)), counit()(x) + c * counit()(y), "epsilon is linear");
        ctx.count_trial();
    }
}

}  // namespace checks

/// Every verification check, in default execution order.
inline const std::vector<CheckSpec>& check_registry()
{
    using namespace checks;
    static const std::vector<CheckSpec> registry{
        {"scalar-ring-laws", "scalars", "phase ring is a commutative ring", scalar_ring_laws},
        {"scalar-eval-homomorphism", "scalars", "numeric evaluation is a ring homomorphism", scalar_eval_homomorphism},
        {"associativity", "circle,torus,p2,p3", "twisted product is associative", associativity},
        {"unit-law", "circle,torus,p2,p3", "delta^0 is a two-sided unit", unit_law},
        {"torus-relation", "torus", "UV = qVU", torus_relation},
        {"p2-relations", "p2", "six P2 generator relations", p2_relations},
        {"p3-relations", "p3", "fifteen P3 generator relations", p3_relations},
        {"subalgebra-embedding", "torus,p2", "two canonical copies of T_q in P2_q", subalgebra_embedding},
        {"oracle-equivalence", "circle,torus,p2,p3", "cocycle product equals normal ordering", oracle_equivalence},
        {"swap-table-consistency", "circle,torus,p2,p3", "swap table agrees with multiply", swap_table_consistency},
        {"normal-order-confluence", "torus,p2,p3", "normal form independent of letter order", normal_order_confluence},
        {"q1-degeneration", "circle,torus,p2,p3", "product commutative at q=1", q1_degeneration},
        {"p2-formula-vs-relations-discrepancy", "p2", "printed P2 exponent conflicts with relations", p2_discrepancy},
        {"comult-homomorphism", "torus->p2", "delta is an algebra homomorphism", comult_homomorphism},
        {"lift-comult-homomorphism", "p2->p3", "(delta,id) and (id,delta) are homomorphisms", lift_comult_homomorphism},
        {"antipode-homomorphism", "torus", "S is an algebra homomorphism", antipode_homomorphism},
        {"circle-comult-homomorphism", "circle->torus", "delta_q is an algebra homomorphism",
         circle_comult_homomorphism},
        {"coassociativity", "torus->p3", "(delta,id) delta = (id,delta) delta", coassociativity},
        {"counit-laws", "torus->p2->torus", "(eps,id) delta = id = (id,eps) delta", counit_laws},
        {"antipode-law", "torus->p2->torus", "mu (S,id) delta = eps 1 = mu (id,S) delta", antipode_law},
        {"counit-not-homomorphism", "torus", "eps(UV) != eps(U) eps(V)", counit_not_homomorphism},
        {"mult-map-represents-product", "p2->torus", "mu(x_1 y_2) = xy", mult_map_represents_product},
        {"derived-rules", "circle,torus,p2,p3", "closed-form basis rules match generator images", derived_rules},
        {"map-linearity", "all maps", "structure maps are linear", map_linearity},
    };
    return registry;
}

inline std::vector<std::string> default_selection()
{
    std::vector<std::string> names;
    for (const auto& c : check_registry())
        names.push_back(c.name);
    return names;
}

inline const CheckSpec& find_check(std::string_view name)
{
    for (const auto& c : check_registry())
        if (c.name == name)
            return c;
    throw AlgebraError("unknown check '" + std::string(name) + "'");
}

inline CheckReport run_check(const CheckSpec& spec, const TrialConfig& cfg)
{
    CheckReport report{spec.name, spec.algebras, 0, 0, {}};
    CheckContext ctx(cfg, report);
    try {
        spec.run(ctx);
    } catch (const std::exception& e) {
        ctx.expect(false, std::string("exception: ") + e.what());
    }
    return report;
}

/// Runs the selected checks concurrently; reports come back in selection order.
inline std::vector<CheckReport> run_suite(const TrialConfig& cfg, const std::vector<std::string>& selection)
{
    cfg.validate();
    std::vector<const CheckSpec*> specs;
    for (const auto& name : selection)
        specs.push_back(&find_check(name));
    std::vector<std::future<CheckReport>> pending;
    for (const auto* spec : specs)
        pending.push_back(std::async(std::launch::async, [spec, &cfg] { return run_check(*spec, cfg); }));
    std::vector<CheckReport> reports;
    for (auto& f : pending)
        reports.push_back(f.get());
    return reports;
}

inline bool all_passed(const std::vector<CheckReport>& reports)
{
    return std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.passed(); });
}

inline std::string report_text(const std::vector<CheckReport>& reports)
{
    std::ostringstream os;
    std::size_t failed = 0;
    for (const auto& r : reports) {
        os << (r.passed() ? "PASS " : "FAIL ") << r.name << " [" << r.algebras << "] trials=" << r.trials;
        if (!r.passed()) {
            ++failed;
            os << " failures=" << r.failure_count;
        }
        os << '\n';
        for (const auto& f : r.failures)
            os << "  counterexample: " << f.description << '\n';
    }
    os << (reports.size() - failed) << "/" << reports.size() << " checks passed\n";
    return os.str();
}

inline nlohmann::json report_json(const std::vector<CheckReport>& reports)
{
    auto checks = nlohmann::json::array();
    for (const auto& r : reports) {
        nlohmann::json counterexample = nullptr;
        if (!r.failures.empty()) {
            const auto& f = r.failures.front();
            counterexample = {{"description", f.description}, {"lhs", f.lhs}, {"rhs", f.rhs}};
        }
        checks.push_back({{"name", r.name},
                          {"status", r.passed() ? "pass" : "fail"},
                          {"algebras", r.algebras},
                          {"trials", r.trials},
                          {"failures", r.failure_count},
                          {"counterexample", counterexample}});
    }
    return {{"passed", all_passed(reports)}, {"checks", checks}};
}

}  // namespace nctorus
