#pragma once

#include <cstdint>
#include <limits>
#include <string>

#include <json.hpp>

#include "twisted_algebra.hpp"

namespace nctorus {

namespace detail {

inline nlohmann::json integer_json(const mpz_class& z)
{
    if (z.fits_slong_p())
        return static_cast<std::int64_t>(z.get_si());
    return z.get_str();
}

inline mpz_class integer_from_json(const nlohmann::json& j)
{
    if (j.is_number_integer())
        return mpz_class(std::to_string(j.get<std::int64_t>()));
    if (j.is_string())
        return mpz_class(j.get<std::string>());
    throw AlgebraError("expected integer in serialized element");
}

}  // namespace detail

/// Serialized phase scalar: [[s_exp, re_num, re_den, im_num, im_den], ...] in
/// ascending s-exponent. Integers outside the int64 range are decimal strings.
inline nlohmann::json to_json(const PhaseScalar& p)
{
    auto out = nlohmann::json::array();
    for (const auto& [e, c] : p.terms())
        out.push_back({e, detail::integer_json(c.re().get_num()), detail::integer_json(c.re().get_den()),
                       detail::integer_json(c.im().get_num()), detail::integer_json(c.im().get_den())});
    return out;
}

inline PhaseScalar phase_scalar_from_json(const nlohmann::json& j)
{
    PhaseScalar p;
    for (const auto& t : j) {
        if (!t.is_array() || t.size() != 5)
            throw AlgebraError("malformed scalar term in serialized element");
        mpq_class re(detail::integer_from_json(t[1]), detail::integer_from_json(t[2]));
        mpq_class im(detail::integer_from_json(t[3]), detail::integer_from_json(t[4]));
        if (re.get_den() == 0 || im.get_den() == 0)
            throw AlgebraError("zero denominator in serialized element");
        p.add_term(t[0].get<std::int64_t>(), GaussianRational(re, im));
    }
    return p;
}

/// Serialized element: [[index_vector, scalar_terms], ...] in index order.
inline nlohmann::json to_json(const AlgebraElement& x)
{
    auto out = nlohmann::json::array();
    for (const auto& [idx, c] : x.support())
        out.push_back({idx.exps, to_json(c)});
    return out;
}

inline AlgebraElement element_from_json(const AlgebraDescriptor& alg, const nlohmann::json& j)
{
    AlgebraElement x(alg);
    for (const auto& rec : j) {
        if (!rec.is_array() || rec.size() != 2)
            throw AlgebraError("malformed record in serialized element");
        x.add_term(MultiIndex(rec[0].get<std::vector<std::int64_t>>()), phase_scalar_from_json(rec[1]));
    }
    return x;
}

}  // namespace nctorus
