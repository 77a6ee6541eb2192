#include "adem/limits.hpp"

#include <stdexcept>
#include <utility>

#include "adem/steenrod_action.hpp"

namespace adem {

namespace {

void require_r_basis(int k, const Sequence& s) {
    if (s.length() != k || !is_admissible(s, AlgebraId::R))
        throw std::domain_error("expected a length-k R-basis monomial");
}

Sequence strip_zeros(const Sequence& s) {
    Sequence out;
    for (long long e : s.entries)
        if (e != 0)
            out.entries.push_back(e);
    return out;
}

Sequence pad_to_length(const Sequence& s, int k) {
    Sequence out = s;
    out.entries.resize(static_cast<std::size_t>(k), 0);
    return out;
}

// J(M) of the lifting procedure: b_{t+1} = 2^t (a_0 + ... + a_t), which is
// A2-admissible after stripping since b_{t+1} - 2 b_t = 2^t a_t >= 0.
Sequence lift_candidate(const Coeffs& a, int k) {
    Sequence j;
    j.entries.assign(static_cast<std::size_t>(k), 0);
    long long prefix = 0;
    for (int t = 0; t <= k - 1; ++t) {
        prefix += a[static_cast<std::size_t>(t)];
        j.entries[static_cast<std::size_t>(k - 1 - t)] = (1LL << t) * prefix;
    }
    return j;
}

}  // namespace

Element phi_R(int k, const Element& x) {
    if (k < 1)
        throw std::domain_error("phi_R requires k >= 1");
    for (const Sequence& s : x)
        require_r_basis(k, s);
    return normalize(append_right(x), AlgebraId::R);
}

Element phi_R_fast(int k, const Sequence& s) {
    require_r_basis(k, s);
    for (long long e : s.entries)
        if (e % 2 != 0)
            return Element{};
    Coeffs doubled = madsen_decompose(s);
    Coeffs halved(static_cast<std::size_t>(k + 1), 0);
    for (int t = 0; t <= k - 1; ++t)
        halved[static_cast<std::size_t>(t + 1)] = doubled[static_cast<std::size_t>(t)] / 2;
    return Element{madsen_compose(halved, k + 1)};
}

Element stabilize(const Sequence& s, int n) {
    if (n < 1 || n > 62)
        throw std::invalid_argument("stabilize requires 1 <= n <= 62");
    const int k = s.length();
    require_r_basis(k, s);
    if (s.all_zero())
        throw std::domain_error("stabilize requires positive degree");
    for (long long a : madsen_decompose(s))
        if (a % (1LL << n) != 0)
            throw std::domain_error("stabilize requires coefficients divisible by 2^n");
    return normalize(Element{pad_to_length(s, k + n)}, AlgebraId::R);
}

Element phi_U_to_A2(const Element& x, int k) {
    (void)k;  // sequences are already length-k U-basis monomials
    Element stripped;
    for (const Sequence& s : x)
        toggle(stripped, strip_zeros(s));
    return normalize(stripped, AlgebraId::A2);
}

Element pi(int k, const Element& x) {
    if (k < 1)
        throw std::domain_error("pi requires k >= 1");
    Element padded;
    for (const Sequence& s : x) {
        if (s.length() > k)
            throw std::domain_error("pi requires sequences of length <= k");
        toggle(padded, pad_to_length(s, k));
    }
    return normalize(padded, AlgebraId::R);
}

Element lift(int k, const Sequence& seq, long long max_steps) {
    require_r_basis(k, seq);
    if (k > 62)
        throw std::domain_error("length too large for the lift coefficients");
    if (seq.all_zero())
        return Element{Sequence{}};
    const Element target{seq};
    Element k_set;
    Element residual = target;
    long long rounds = 0;
    while (!residual.empty()) {
        if (++rounds > max_steps)
            throw step_limit_error("lift iteration cap exceeded; this indicates an implementation bug");
        const Sequence& minimal = *residual.begin();
        toggle(k_set, strip_zeros(lift_candidate(madsen_decompose(minimal), k)));
        residual = add(pi(k, k_set), target);
    }
    return k_set;
}

LimitClass limit_inject(const LimitClass& c, int target_k) {
    if (target_k < c.level)
        throw std::domain_error("limit classes only transport upward");
    LimitClass out = c;
    while (out.level < target_k) {
        out.rep = phi_R(out.level, out.rep);
        ++out.level;
    }
    return out;
}

std::vector<Sequence> sq_claim_witnesses(int k, int i, int m) {
    if (k < 1 || k > 61 || i < 0 || i > k - 1 || m < 0 || m > k)
        throw std::out_of_range("sq_claim_witnesses requires 0 <= i <= k-1 and 0 <= m <= k");
    Sequence target = basis_vector_I(k, i);
    for (long long& e : target.entries)
        e *= 2;
    const long long degree = (1LL << (k + 1)) - (1LL << (i + 1)) + (1LL << m);
    std::vector<Sequence> out;
    for (const Sequence& candidate : basis(AlgebraId::R, degree, k)) {
        const Element image = sq_act(1LL << m, Element{candidate}, AlgebraId::R);
        if (image.count(target))
            out.push_back(candidate);
    }
    return out;
}

}  // namespace adem
