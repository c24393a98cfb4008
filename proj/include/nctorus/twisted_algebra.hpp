#pragma once

#include <complex>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "phase_scalar.hpp"

namespace nctorus {

class AlgebraError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Exponent vector indexing the basis monomial delta^idx.
struct MultiIndex {
    std::vector<std::int64_t> exps;

    MultiIndex() = default;
    explicit MultiIndex(std::vector<std::int64_t> e) : exps(std::move(e)) {}
    MultiIndex(std::initializer_list<std::int64_t> e) : exps(e) {}

    static MultiIndex zero(std::size_t d) { return MultiIndex(std::vector<std::int64_t>(d, 0)); }

    std::size_t size() const { return exps.size(); }
    std::int64_t operator[](std::size_t i) const { return exps[i]; }
    std::int64_t& operator[](std::size_t i) { return exps[i]; }

    bool is_zero() const
    {
        for (auto e : exps)
            if (e != 0)
                return false;
        return true;
    }

    friend MultiIndex operator+(const MultiIndex& a, const MultiIndex& b)
    {
        MultiIndex r = a;
        for (std::size_t i = 0; i < r.size(); ++i)
            r[i] += b[i];
        return r;
    }
    friend MultiIndex operator-(const MultiIndex& a)
    {
        MultiIndex r = a;
        for (auto& e : r.exps)
            e = -e;
        return r;
    }

    friend auto operator<=>(const MultiIndex&, const MultiIndex&) = default;
    friend bool operator==(const MultiIndex&, const MultiIndex&) = default;

    std::string str() const
    {
        std::string s = "(";
        for (std::size_t i = 0; i < exps.size(); ++i)
            s += (i ? "," : "") + std::to_string(exps[i]);
        return s + ")";
    }
};

/// Integer bilinear form in s-exponent units: delta^a * delta^b = s^{phi(a,b)} delta^{a+b}
/// with phi(a,b) = sum_ij M[i][j] a_i b_j. An entry of 2 is one full power of q.
class CocycleMatrix {
public:
    CocycleMatrix() = default;
    explicit CocycleMatrix(std::vector<std::vector<std::int64_t>> m) : m_(std::move(m))
    {
        for (const auto& row : m_)
            if (row.size() != m_.size())
                throw AlgebraError("cocycle matrix must be square");
    }

    static CocycleMatrix zero(std::size_t d) { return CocycleMatrix(std::vector(d, std::vector<std::int64_t>(d, 0))); }

    std::size_t dim() const { return m_.size(); }
    std::int64_t at(std::size_t i, std::size_t j) const { return m_[i][j]; }
    std::int64_t& at(std::size_t i, std::size_t j) { return m_[i][j]; }

    std::int64_t phase(const MultiIndex& a, const MultiIndex& b) const
    {
        std::int64_t total = 0;
        for (std::size_t i = 0; i < m_.size(); ++i) {
            if (a[i] == 0)
                continue;
            for (std::size_t j = 0; j < m_.size(); ++j)
                total += m_[i][j] * a[i] * b[j];
        }
        return total;
    }

    friend bool operator==(const CocycleMatrix&, const CocycleMatrix&) = default;

private:
    std::vector<std::vector<std::int64_t>> m_;
};

enum class AlgebraKind { circle, torus, p2, p3 };

struct AlgebraDescriptor {
    std::string name;
    std::size_t dim = 0;
    std::vector<std::string> generator_names;
    CocycleMatrix cocycle;

    friend bool operator==(const AlgebraDescriptor& a, const AlgebraDescriptor& b)
    {
        return a.name == b.name && a.dim == b.dim && a.cocycle == b.cocycle;
    }
};

namespace detail {

/// Builds the s-exponent cocycle of a q-commutation algebra whose basis is
/// ordered by generator position: phi(a,b) = sum_{i>j} e(i,j) a_i b_j where
/// g_i g_j = s^{e(i,j)} g_j g_i.
inline CocycleMatrix cocycle_from_lower(std::size_t d, std::initializer_list<std::tuple<int, int, int>> entries)
{
    auto m = CocycleMatrix::zero(d);
    for (auto [i, j, e] : entries)
        m.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = e;
    return m;
}

}  // namespace detail

/// S(Z): commutative convolution algebra on one generator z.
inline const AlgebraDescriptor& circle_algebra()
{
    static const AlgebraDescriptor a{"circle", 1, {"z"}, CocycleMatrix::zero(1)};
    return a;
}

/// T_q: delta^{m,n} delta^{k,l} = q^{-kn} delta^{m+k,n+l}.
inline const AlgebraDescriptor& torus_algebra()
{
    static const AlgebraDescriptor a{"torus", 2, {"U", "V"}, detail::cocycle_from_lower(2, {{1, 0, -2}})};
    return a;
}

/// P2_q with index order (U1,V1,U2,V2):
/// phi(a,b) = a4 b1 - a3 b2 - 2 a2 b1 - 2 a4 b3 (1-based positions).
inline const AlgebraDescriptor& p2_algebra()
{
    static const AlgebraDescriptor a{"p2",
                                     4,
                                     {"U1", "V1", "U2", "V2"},
                                     detail::cocycle_from_lower(4, {{1, 0, -2}, {2, 1, -1}, {3, 0, 1}, {3, 2, -2}})};
    return a;
}

/// P3_q with index order (U1,V1,U2,V2,U3,V3). The same twist as P2_q between
/// factors 1-2 and 2-3, nothing between factors 1 and 3.
inline const AlgebraDescriptor& p3_algebra()
{
    static const AlgebraDescriptor a{
        "p3",
        6,
        {"U1", "V1", "U2", "V2", "U3", "V3"},
        detail::cocycle_from_lower(6, {{1, 0, -2}, {3, 2, -2}, {5, 4, -2}, {2, 1, -1}, {3, 0, 1}, {4, 3, -1}, {5, 2, 1}})};
    return a;
}

/// The P2_q exponent exactly as printed in the original construction, whose
/// last term -m1 n2 conflicts with U2 V2 = q V2 U2. Kept only so the
/// conflict can be exhibited; it is not one of the named algebras.
inline const AlgebraDescriptor& p2_as_printed_algebra()
{
    // k2 n1/2 - k2 l1 - m1 l2/2 - m1 n2, in s units.
    static const AlgebraDescriptor a{"p2-as-printed",
                                     4,
                                     {"U1", "V1", "U2", "V2"},
                                     detail::cocycle_from_lower(4, {{3, 0, 1}, {1, 0, -2}, {2, 1, -1}, {2, 3, -2}})};
    return a;
}

inline const AlgebraDescriptor& algebra_by_kind(AlgebraKind k)
{
    switch (k) {
    case AlgebraKind::circle: return circle_algebra();
    case AlgebraKind::torus: return torus_algebra();
    case AlgebraKind::p2: return p2_algebra();
    case AlgebraKind::p3: return p3_algebra();
    }
    throw AlgebraError("unknown algebra kind");
}

inline const AlgebraDescriptor& algebra_by_name(std::string_view name)
{
    for (auto k : {AlgebraKind::circle, AlgebraKind::torus, AlgebraKind::p2, AlgebraKind::p3})
        if (algebra_by_kind(k).name == name)
            return algebra_by_kind(k);
    throw AlgebraError("unknown algebra '" + std::string(name) + "' (expected circle, torus, p2 or p3)");
}

/// Finitely supported element sum_idx c_idx delta^idx of a twisted algebra.
class AlgebraElement {
public:
    using Support = std::map<MultiIndex, PhaseScalar>;

    explicit AlgebraElement(const AlgebraDescriptor& alg) : alg_(&alg) {}

    static AlgebraElement basis(const AlgebraDescriptor& alg, MultiIndex idx)
    {
        AlgebraElement x(alg);
        x.add_term(std::move(idx), PhaseScalar(1));
        return x;
    }
    static AlgebraElement unit(const AlgebraDescriptor& alg) { return basis(alg, MultiIndex::zero(alg.dim)); }
    static AlgebraElement scalar(const AlgebraDescriptor& alg, PhaseScalar c)
    {
        AlgebraElement x(alg);
        x.add_term(MultiIndex::zero(alg.dim), std::move(c));
        return x;
    }
    /// The i-th generator raised to `power`.
    static AlgebraElement generator(const AlgebraDescriptor& alg, std::size_t position, std::int64_t power = 1)
    {
        auto idx = MultiIndex::zero(alg.dim);
        idx[position] = power;
        return basis(alg, std::move(idx));
    }

    const AlgebraDescriptor& algebra() const { return *alg_; }
    const Support& support() const { return support_; }
    bool is_zero() const { return support_.empty(); }
    std::size_t size() const { return support_.size(); }

    /// Coefficient of delta^idx (zero if absent).
    PhaseScalar coeff(const MultiIndex& idx) const
    {
        auto it = support_.find(idx);
        return it == support_.end() ? PhaseScalar{} : it->second;
    }

    void add_term(MultiIndex idx, PhaseScalar c)
    {
        if (idx.size() != alg_->dim)
            throw AlgebraError("index " + idx.str() + " has length " + std::to_string(idx.size()) + ", algebra " +
                               alg_->name + " has dimension " + std::to_string(alg_->dim));
        if (c.is_zero())
            return;
        auto [it, inserted] = support_.try_emplace(std::move(idx), c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero())
                support_.erase(it);
        }
    }

    AlgebraElement& operator+=(const AlgebraElement& o)
    {
        require_same(o);
        for (const auto& [idx, c] : o.support_)
            add_term(idx, c);
        return *this;
    }
    AlgebraElement& operator-=(const AlgebraElement& o)
    {
        require_same(o);
        for (const auto& [idx, c] : o.support_)
            add_term(idx, -c);
        return *this;
    }
    friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
    friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }

    AlgebraElement scaled(const PhaseScalar& c) const
    {
        AlgebraElement r(*alg_);
        for (const auto& [idx, v] : support_)
            r.add_term(idx, c * v);
        return r;
    }
    friend AlgebraElement operator*(const PhaseScalar& c, const AlgebraElement& x) { return x.scaled(c); }

    /// Twisted product: bilinear extension of delta^a delta^b = s^{phi(a,b)} delta^{a+b}.
    friend AlgebraElement operator*(const AlgebraElement& x, const AlgebraElement& y)
    {
        x.require_same(y);
        const auto& cocycle = x.alg_->cocycle;
        AlgebraElement r(*x.alg_);
        for (const auto& [a, ca] : x.support_)
            for (const auto& [b, cb] : y.support_)
                r.add_term(a + b, (ca * cb).shifted(cocycle.phase(a, b)));
        return r;
    }

    friend bool operator==(const AlgebraElement& a, const AlgebraElement& b)
    {
        return a.alg_ == b.alg_ && a.support_ == b.support_;
    }

    /// Coefficientwise numeric evaluation at q = exp(2*pi*i*theta).
    std::map<MultiIndex, std::complex<double>> eval(double theta) const
    {
        std::map<MultiIndex, std::complex<double>> out;
        for (const auto& [idx, c] : support_)
            out.emplace(idx, c.eval(theta));
        return out;
    }

    /// Monomial in generator names, e.g. "U1^2 V1 U2^(-1)"; empty for the unit.
    std::string monomial_str(const MultiIndex& idx) const
    {
        std::string out;
        for (std::size_t i = 0; i < idx.size(); ++i) {
            if (idx[i] == 0)
                continue;
            if (!out.empty())
                out += ' ';
            out += alg_->generator_names[i];
            if (idx[i] < 0)
                out += "^(" + std::to_string(idx[i]) + ")";
            else if (idx[i] != 1)
                out += "^" + std::to_string(idx[i]);
        }
        return out;
    }

    /// Canonical rendering: terms in lexicographic index order joined by " + ",
    /// each "<scalar> * <monomial>" with a unit coefficient omitted.
    std::string str() const
    {
        if (support_.empty())
            return "0";
        std::string out;
        for (const auto& [idx, c] : support_) {
            if (!out.empty())
                out += " + ";
            std::string mono = monomial_str(idx);
            std::string scalar = c.is_monomial() ? c.str() : "(" + c.str() + ")";
            if (mono.empty())
                out += scalar;
            else if (c.is_one())
                out += mono;
            else if (c == PhaseScalar(-1))
                out += "-" + mono;
            else
                out += scalar + " * " + mono;
        }
        return out;
    }

private:
    void require_same(const AlgebraElement& o) const
    {
        if (alg_ != o.alg_ && !(*alg_ == *o.alg_))
            throw AlgebraError("algebra mismatch: " + alg_->name + " vs " + o.alg_->name);
    }

    const AlgebraDescriptor* alg_;
    Support support_;
};

inline AlgebraElement basis(const AlgebraDescriptor& alg, MultiIndex idx)
{
    return AlgebraElement::basis(alg, std::move(idx));
}
inline AlgebraElement unit(const AlgebraDescriptor& alg) { return AlgebraElement::unit(alg); }

/// Re-homes an element's coefficients into another algebra of equal dimension.
inline AlgebraElement reinterpret(const AlgebraElement& x, const AlgebraDescriptor& target)
{
    if (x.algebra().dim != target.dim)
        throw AlgebraError("cannot reinterpret " + x.algebra().name + " element in " + target.name);
    AlgebraElement r(target);
    for (const auto& [idx, c] : x.support())
        r.add_term(idx, c);
    return r;
}

}  // namespace nctorus
