#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <numbers>
#include <ostream>
#include <string>

#include "gaussian_rational.hpp"

namespace nctorus {

/// Renders the q-power q^(e/2) for an s-exponent e: "q", "q^(2)", "q^(-1/2)".
inline std::string q_power_str(std::int64_t s_exp)
{
    if (s_exp == 2)
        return "q";
    std::string body = (s_exp % 2 == 0) ? std::to_string(s_exp / 2) : std::to_string(s_exp) + "/2";
    return "q^(" + body + ")";
}

/// Laurent polynomial in the formal square root s of q, with Gaussian
/// rational coefficients. The monomial c*s^e stands for c*q^(e/2).
///
/// Terms are kept sparse: no stored coefficient is zero, so two scalars are
/// equal as Laurent polynomials iff their term maps are identical.
class PhaseScalar {
public:
    using TermMap = std::map<std::int64_t, GaussianRational>;

    PhaseScalar() = default;
    PhaseScalar(GaussianRational c) { add_term(0, std::move(c)); }
    PhaseScalar(long c) : PhaseScalar(GaussianRational(c)) {}

    /// s^e, i.e. q^(e/2).
    static PhaseScalar phase_pow(std::int64_t e) { return monomial(e, GaussianRational(1)); }

    static PhaseScalar monomial(std::int64_t e, GaussianRational c)
    {
        PhaseScalar p;
        p.add_term(e, std::move(c));
        return p;
    }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const { return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second.is_one(); }
    bool is_monomial() const { return terms_.size() == 1; }

    void add_term(std::int64_t e, GaussianRational c)
    {
        if (c.is_zero())
            return;
        auto [it, inserted] = terms_.try_emplace(e, std::move(c));
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero())
                terms_.erase(it);
        }
    }

    PhaseScalar operator-() const
    {
        PhaseScalar r;
        for (const auto& [e, c] : terms_)
            r.terms_.emplace(e, -c);
        return r;
    }

    PhaseScalar& operator+=(const PhaseScalar& o)
    {
        for (const auto& [e, c] : o.terms_)
            add_term(e, c);
        return *this;
    }
    PhaseScalar& operator-=(const PhaseScalar& o) { return *this += -o; }

    friend PhaseScalar operator+(PhaseScalar a, const PhaseScalar& b) { return a += b; }
    friend PhaseScalar operator-(PhaseScalar a, const PhaseScalar& b) { return a -= b; }

    friend PhaseScalar operator*(const PhaseScalar& a, const PhaseScalar& b)
    {
        PhaseScalar r;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_)
                r.add_term(ea + eb, ca * cb);
        return r;
    }
    PhaseScalar& operator*=(const PhaseScalar& o) { return *this = *this * o; }

    /// Multiplies by s^e (shifts every exponent).
    PhaseScalar shifted(std::int64_t e) const
    {
        PhaseScalar r;
        for (const auto& [k, c] : terms_)
            r.terms_.emplace(k + e, c);
        return r;
    }

    friend bool operator==(const PhaseScalar& a, const PhaseScalar& b) { return a.terms_ == b.terms_; }

    /// Numeric value at q = exp(2*pi*i*theta), using the branch s = exp(i*pi*theta).
    std::complex<double> eval(double theta) const
    {
        std::complex<double> sum{0.0, 0.0};
        for (const auto& [e, c] : terms_)
            sum += c.to_complex() * std::polar(1.0, std::numbers::pi * theta * static_cast<double>(e));
        return sum;
    }

    /// Terms in ascending s-exponent joined by " + ", e.g.
    /// "(-1/2+1/3i)*q^(-1/2) + 2*q^(3/2)". The zero scalar renders as "0".
    std::string str() const
    {
        if (terms_.empty())
            return "0";
        std::string out;
        for (const auto& [e, c] : terms_) {
            if (!out.empty())
                out += " + ";
            if (e == 0)
                out += c.str();
            else if (c.is_one())
                out += q_power_str(e);
            else if (c == GaussianRational(-1))
                out += "-" + q_power_str(e);
            else
                out += c.str() + "*" + q_power_str(e);
        }
        return out;
    }

    friend std::ostream& operator<<(std::ostream& os, const PhaseScalar& p) { return os << p.str(); }

private:
    TermMap terms_;
};

inline PhaseScalar phase_pow(std::int64_t e) { return PhaseScalar::phase_pow(e); }

}  // namespace nctorus
