#include "adem/steenrod_action.hpp"

#include <stdexcept>

namespace adem {

namespace {

// Raw action on a single monomial, computed in F0.
Element act_monomial(long long a, const Sequence& s) {
    if (s.length() == 0)
        return a == 0 ? Element{Sequence{}} : Element{};
    if (s.length() == 1) {
        const long long b = s.entries.front();
        if (binom_mod2(b - a, a))
            return Element{Sequence{b - a}};
        return Element{};
    }
    const long long b = s.entries.front();
    Sequence rest;
    rest.entries.assign(s.entries.begin() + 1, s.entries.end());
    Element out;
    if (b == 0) {
        for (const Sequence& t : act_monomial(a, rest)) {
            Sequence grown;
            grown.entries.reserve(t.entries.size() + 1);
            grown.entries.push_back(0);
            grown.entries.insert(grown.entries.end(), t.entries.begin(), t.entries.end());
            toggle(out, std::move(grown));
        }
        return out;
    }
    // Nonzero coefficient forces 0 <= a-2t <= b-a, so the new superscript
    // b-a+t is never negative.
    for (long long t = 0; 2 * t <= a; ++t) {
        if (!binom_mod2(b - a, a - 2 * t))
            continue;
        for (const Sequence& tail : act_monomial(t, rest)) {
            Sequence grown;
            grown.entries.reserve(tail.entries.size() + 1);
            grown.entries.push_back(b - a + t);
            grown.entries.insert(grown.entries.end(), tail.entries.begin(), tail.entries.end());
            toggle(out, std::move(grown));
        }
    }
    return out;
}

}  // namespace

Element sq_act(long long a, const Element& x, AlgebraId alg, long long max_steps) {
    if (a < 0)
        throw std::invalid_argument("sq_act requires a >= 0");
    if (alg == AlgebraId::A2)
        throw std::domain_error("A2 is not closed under the opposite Steenrod action");
    Element raw;
    for (const Sequence& s : x)
        for (const Sequence& t : act_monomial(a, s))
            toggle(raw, t);
    if (alg == AlgebraId::U || alg == AlgebraId::R)
        return normalize(raw, alg, max_steps);
    return raw;
}

std::pair<int, DualGeneratorPower> sq_act_dual(long long a, const DualGeneratorPower& y) {
    if (a < 0 || y.exponent < 0)
        throw std::invalid_argument("sq_act_dual requires nonnegative exponents");
    if (y.i < 1 || y.i > y.k)
        throw std::out_of_range("dual generator index must satisfy 1 <= i <= k");
    return {binom_mod2(y.exponent, a), DualGeneratorPower{y.k, y.i, y.exponent + a}};
}

}  // namespace adem
