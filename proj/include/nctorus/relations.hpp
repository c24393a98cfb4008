#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "twisted_algebra.hpp"

namespace nctorus {

/// One q-commutation relation  left * right = s^{s_exp} * right * left.
struct Relation {
    std::string left;
    std::string right;
    std::int64_t s_exp;
};

/// The generator relation tables as stated for each algebra (s-exponent units).
inline const std::vector<Relation>& relation_table(const AlgebraDescriptor& alg)
{
    static const std::vector<Relation> circle{};
    static const std::vector<Relation> torus{{"U", "V", 2}};
    static const std::vector<Relation> p2{
        {"U1", "V1", 2},  {"U2", "V2", 2}, {"U1", "V2", -1},
        {"V1", "U2", 1},  {"U1", "U2", 0}, {"V1", "V2", 0},
    };
    static const std::vector<Relation> p3{
        {"U1", "V1", 2}, {"U2", "V2", 2},  {"U3", "V3", 2},  //
        {"U1", "V2", -1}, {"U2", "V3", -1}, {"U3", "V1", 0},  //
        {"V1", "U2", 1}, {"V2", "U3", 1},  {"V3", "U1", 0},  //
        {"U1", "U2", 0}, {"U2", "U3", 0},  {"U3", "U1", 0},  //
        {"V1", "V2", 0}, {"V2", "V3", 0},  {"V3", "V1", 0},
    };
    if (alg.name == "circle")
        return circle;
    if (alg.name == "torus")
        return torus;
    if (alg.name == "p2" || alg.name == "p2-as-printed")
        return p2;
    if (alg.name == "p3")
        return p3;
    throw AlgebraError("no relation table for algebra " + alg.name);
}

inline std::size_t generator_position(const AlgebraDescriptor& alg, std::string_view name)
{
    for (std::size_t i = 0; i < alg.generator_names.size(); ++i)
        if (alg.generator_names[i] == name)
            return i;
    throw AlgebraError("unknown generator '" + std::string(name) + "' for algebra " + alg.name);
}

/// Swap phases e(i,j) with g_i g_j = s^{e(i,j)} g_j g_i, built only from the
/// relation table. Antisymmetric: e(j,i) = -e(i,j).
class SwapTable {
public:
    explicit SwapTable(const AlgebraDescriptor& alg) : d_(alg.dim), e_(alg.dim * alg.dim, 0)
    {
        std::vector<bool> seen(d_ * d_, false);
        for (const auto& rel : relation_table(alg)) {
            auto a = generator_position(alg, rel.left);
            auto b = generator_position(alg, rel.right);
            if (a == b || seen[a * d_ + b])
                throw AlgebraError("malformed relation table for " + alg.name);
            seen[a * d_ + b] = seen[b * d_ + a] = true;
            e_[a * d_ + b] = rel.s_exp;
            e_[b * d_ + a] = -rel.s_exp;
        }
        for (std::size_t i = 0; i < d_; ++i)
            for (std::size_t j = 0; j < d_; ++j)
                if (i != j && !seen[i * d_ + j])
                    throw AlgebraError("relation table for " + alg.name + " is not total");
    }

    std::int64_t operator()(std::size_t i, std::size_t j) const { return e_[i * d_ + j]; }
    std::size_t dim() const { return d_; }

private:
    std::size_t d_;
    std::vector<std::int64_t> e_;
};

/// A generator raised to a nonzero power; negative powers are inverses.
struct GeneratorSymbol {
    std::size_t position;
    std::int64_t power;

    friend bool operator==(const GeneratorSymbol&, const GeneratorSymbol&) = default;
};

struct Word {
    const AlgebraDescriptor* algebra;
    std::vector<GeneratorSymbol> letters;

    explicit Word(const AlgebraDescriptor& alg, std::vector<GeneratorSymbol> l = {}) : algebra(&alg), letters(std::move(l))
    {
        for (const auto& g : letters)
            if (g.power == 0 || g.position >= alg.dim)
                throw AlgebraError("invalid letter in word over " + alg.name);
    }

    Word& append(const Word& w)
    {
        letters.insert(letters.end(), w.letters.begin(), w.letters.end());
        return *this;
    }
    friend Word operator+(Word a, const Word& b) { return a.append(b); }

    /// Formal inverse: reversed letters with negated powers.
    Word inverse() const
    {
        Word r(*algebra);
        for (auto it = letters.rbegin(); it != letters.rend(); ++it)
            r.letters.push_back({it->position, -it->power});
        return r;
    }

    std::string str() const
    {
        std::string out;
        for (const auto& g : letters) {
            if (!out.empty())
                out += ' ';
            out += algebra->generator_names[g.position];
            if (g.power != 1)
                out += "^(" + std::to_string(g.power) + ")";
        }
        return out.empty() ? "1" : out;
    }
};

struct NormalForm {
    std::int64_t s_exp = 0;
    MultiIndex index;

    PhaseScalar phase() const { return PhaseScalar::phase_pow(s_exp); }
    friend bool operator==(const NormalForm&, const NormalForm&) = default;
};

/// Normal-orders a word by stable bubble sort on generator position.
/// Swapping adjacent g_i^p g_j^r (i > j) into g_j^r g_i^p contributes s^{e(i,j) p r}.
inline NormalForm normal_order(const Word& w, const SwapTable& table)
{
    auto letters = w.letters;
    std::int64_t s_exp = 0;
    for (std::size_t pass = 0; pass < letters.size(); ++pass) {
        bool swapped = false;
        for (std::size_t k = 0; k + 1 < letters.size(); ++k) {
            auto& x = letters[k];
            auto& y = letters[k + 1];
            if (x.position > y.position) {
                s_exp += table(x.position, y.position) * x.power * y.power;
                std::swap(x, y);
                swapped = true;
            }
        }
        if (!swapped)
            break;
    }
    auto idx = MultiIndex::zero(w.algebra->dim);
    for (const auto& g : letters)
        idx[g.position] += g.power;
    return {s_exp, std::move(idx)};
}

inline NormalForm normal_order(const Word& w) { return normal_order(w, SwapTable(*w.algebra)); }

/// The normal-ordered word g_1^{idx_1} g_2^{idx_2} ... of a basis index.
inline Word word_of_index(const AlgebraDescriptor& alg, const MultiIndex& idx)
{
    if (idx.size() != alg.dim)
        throw AlgebraError("index " + idx.str() + " does not fit algebra " + alg.name);
    Word w(alg);
    for (std::size_t i = 0; i < idx.size(); ++i)
        if (idx[i] != 0)
            w.letters.push_back({i, idx[i]});
    return w;
}

/// Evaluates a word as an algebra element through the rewriting oracle only.
inline AlgebraElement element_of_word(const Word& w, const SwapTable& table)
{
    auto nf = normal_order(w, table);
    AlgebraElement x(*w.algebra);
    x.add_term(std::move(nf.index), nf.phase());
    return x;
}

/// Image of a word under the homomorphism sending each generator to a word of
/// the target algebra, normal-ordered by the target's relations. A power p of
/// a generator maps to the |p|-fold repetition of its image (or of the inverse
/// image when p < 0).
inline NormalForm substitute(const Word& w, const std::vector<Word>& images, const SwapTable& target_table)
{
    if (images.empty())
        throw AlgebraError("substitute: no generator images");
    Word out(*images.front().algebra);
    for (const auto& g : w.letters) {
        const Word& img = images.at(g.position);
        Word piece = g.power > 0 ? img : img.inverse();
        for (std::int64_t k = 0; k < (g.power > 0 ? g.power : -g.power); ++k)
            out.append(piece);
    }
    return normal_order(out, target_table);
}

}  // namespace nctorus
