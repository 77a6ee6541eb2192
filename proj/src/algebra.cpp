#include "adem/algebra.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <utility>

namespace adem {

namespace {

Sequence strip_zeros(const Sequence& s) {
    Sequence out;
    out.entries.reserve(s.entries.size());
    for (long long e : s.entries)
        if (e != 0)
            out.entries.push_back(e);
    return out;
}

bool suffixes_nonnegative(const Sequence& s) {
    long long below = 0;
    for (int t = 1; t <= s.length(); ++t) {
        const long long it = s.at_from_right(t);
        if (it - below < 0)
            return false;
        below += it;
    }
    return true;
}

// Largest j such that (entries[j], entries[j+1]) violates the A2
// admissibility condition, or -1. Expects a zero-free sequence.
int rightmost_a2_redex(const Sequence& s) {
    for (int j = s.length() - 2; j >= 0; --j)
        if (s.entries[j] < 2 * s.entries[j + 1])
            return j;
    return -1;
}

int rightmost_r_redex(const Sequence& s) {
    for (int j = s.length() - 2; j >= 0; --j)
        if (s.entries[j] > 2 * s.entries[j + 1])
            return j;
    return -1;
}

// Normal forms are final, so concurrent fills of the same key agree.
class RewriteCache {
public:
    bool find(const Sequence& key, Element& out) {
        std::lock_guard lock(mutex_);
        auto it = map_.find(key);
        if (it == map_.end())
            return false;
        out = it->second;
        return true;
    }

    void store(const Sequence& key, const Element& value) {
        std::lock_guard lock(mutex_);
        map_.emplace(key, value);
    }

private:
    std::mutex mutex_;
    std::map<Sequence, Element> map_;
};

RewriteCache& a2_cache() {
    static RewriteCache cache;
    return cache;
}

RewriteCache& r_cache() {
    static RewriteCache cache;
    return cache;
}

void consume_step(long long& budget) {
    if (--budget < 0)
        throw step_limit_error("rewrite step cap exceeded; this indicates an implementation bug");
}

Element normalize_a2_monomial(const Sequence& raw, long long& budget) {
    const Sequence s = strip_zeros(raw);
    Element cached;
    if (a2_cache().find(s, cached))
        return cached;
    const int j = rightmost_a2_redex(s);
    if (j < 0)
        return Element{s};
    consume_step(budget);
    const long long i = s.entries[j];
    const long long jj = s.entries[j + 1];
    Element out;
    for (long long c = 0; 2 * c <= i; ++c) {
        if (!binom_mod2(jj - c - 1, i - 2 * c))
            continue;
        Sequence t = s;
        t.entries[j] = i + jj - c;
        t.entries[j + 1] = c;
        for (const Sequence& term : normalize_a2_monomial(t, budget))
            toggle(out, term);
    }
    a2_cache().store(s, out);
    return out;
}

Element normalize_r_monomial(const Sequence& s, long long& budget) {
    // Monomials with a negative-excess suffix lie in the ideal and may be
    // dropped at any stage; the check at t = length also enforces the
    // excess condition on admissible results.
    if (!suffixes_nonnegative(s))
        return Element{};
    Element cached;
    if (r_cache().find(s, cached))
        return cached;
    const int j = rightmost_r_redex(s);
    if (j < 0)
        return Element{s};
    consume_step(budget);
    const long long r = s.entries[j];
    const long long sr = s.entries[j + 1];
    Element out;
    for (long long t = 1; t <= r; ++t) {
        if (!binom_mod2(t - sr - 1, 2 * t - r))
            continue;
        Sequence next = s;
        next.entries[j] = r + sr - t;
        next.entries[j + 1] = t;
        for (const Sequence& term : normalize_r_monomial(next, budget))
            toggle(out, term);
    }
    r_cache().store(s, out);
    return out;
}

}  // namespace

bool is_admissible(const Sequence& s, AlgebraId alg) {
    switch (alg) {
        case AlgebraId::A2:
            for (long long e : s.entries)
                if (e < 1)
                    return false;
            for (int j = 0; j + 1 < s.length(); ++j)
                if (s.entries[j] < 2 * s.entries[j + 1])
                    return false;
            return true;
        case AlgebraId::R:
            for (int j = 0; j + 1 < s.length(); ++j)
                if (s.entries[j] > 2 * s.entries[j + 1])
                    return false;
            return excess(s).nonnegative();
        case AlgebraId::U:
            return suffixes_nonnegative(s);
        default:
            throw std::invalid_argument("admissibility is defined only for A2, U and R");
    }
}

Element normalize(const Element& x, AlgebraId alg, long long max_steps) {
    Element out;
    for (const Sequence& s : x) {
        switch (alg) {
            case AlgebraId::F0:
                toggle(out, s);
                break;
            case AlgebraId::F:
                toggle(out, strip_zeros(s));
                break;
            case AlgebraId::U:
                if (suffixes_nonnegative(s))
                    toggle(out, s);
                break;
            case AlgebraId::A2: {
                long long budget = max_steps;
                for (const Sequence& t : normalize_a2_monomial(s, budget))
                    toggle(out, t);
                break;
            }
            case AlgebraId::R: {
                long long budget = max_steps;
                for (const Sequence& t : normalize_r_monomial(s, budget))
                    toggle(out, t);
                break;
            }
        }
    }
    return out;
}

TensorElement normalize_components(const TensorElement& t, AlgebraId alg, long long max_steps) {
    TensorElement out;
    out.arity = t.arity;
    for (const auto& tuple : t.terms) {
        std::vector<std::vector<Sequence>> expansion{{}};
        for (const Sequence& component : tuple) {
            const Element nf = normalize(Element{component}, alg, max_steps);
            std::vector<std::vector<Sequence>> next;
            for (const auto& partial : expansion) {
                for (const Sequence& term : nf) {
                    auto grown = partial;
                    grown.push_back(term);
                    next.push_back(std::move(grown));
                }
            }
            expansion = std::move(next);
        }
        for (auto& full : expansion)
            toggle(out.terms, std::move(full));
    }
    return out;
}

namespace {

// Admissible sequences built right to left: the next entry to the left
// must be at least twice the previous one, so the depth is logarithmic.
void gen_a2_basis(long long remaining, long long min_entry, std::optional<int> cap,
                  std::vector<long long>& acc, std::vector<Sequence>& out) {
    if (remaining == 0) {
        std::vector<long long> entries(acc.rbegin(), acc.rend());
        out.push_back(Sequence(std::move(entries)));
        return;
    }
    if (cap && static_cast<int>(acc.size()) >= *cap)
        return;
    for (long long v = std::max<long long>(min_entry, 1); v <= remaining; ++v) {
        acc.push_back(v);
        gen_a2_basis(remaining - v, 2 * v, cap, acc, out);
        acc.pop_back();
    }
}

void gen_positive_compositions(long long remaining, std::optional<int> cap,
                               std::vector<long long>& acc, std::vector<Sequence>& out) {
    if (remaining == 0) {
        out.push_back(Sequence(acc));
        return;
    }
    if (cap && static_cast<int>(acc.size()) >= *cap)
        return;
    for (long long v = 1; v <= remaining; ++v) {
        acc.push_back(v);
        gen_positive_compositions(remaining - v, cap, acc, out);
        acc.pop_back();
    }
}

}  // namespace

std::vector<Sequence> basis(AlgebraId alg, long long degree, std::optional<int> length) {
    if (degree < 0)
        throw std::invalid_argument("degree must be nonnegative");
    if (length && *length < 0)
        throw std::invalid_argument("length must be nonnegative");
    std::vector<Sequence> out;
    switch (alg) {
        case AlgebraId::F0: {
            if (!length)
                throw std::invalid_argument("F0 basis needs a length");
            out = compositions(*length, degree);
            break;
        }
        case AlgebraId::F: {
            std::vector<long long> acc;
            gen_positive_compositions(degree, length, acc, out);
            break;
        }
        case AlgebraId::A2: {
            std::vector<long long> acc;
            gen_a2_basis(degree, 1, length, acc, out);
            break;
        }
        case AlgebraId::U:
        case AlgebraId::R: {
            if (!length)
                throw std::invalid_argument("U and R bases need a length");
            for (Sequence& s : compositions(*length, degree))
                if (is_admissible(s, alg))
                    out.push_back(std::move(s));
            break;
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

// The I/J vectors and Milnor primitives hold entries up to 2^{k-1}.
void check_shift_range(int k) {
    if (k > 62)
        throw std::out_of_range("length too large for power-of-two entries");
}

}  // namespace

Sequence basis_vector_I(int k, int t) {
    if (k < 1 || t < 0 || t > k - 1)
        throw std::out_of_range("basis_vector_I requires k >= 1 and 0 <= t <= k-1");
    check_shift_range(k);
    Sequence s;
    s.entries.resize(static_cast<std::size_t>(k));
    for (int j = 0; j < k; ++j) {
        long long v = 1LL << (k - 1 - j);
        if (j < t)
            v -= 1LL << (t - 1 - j);
        s.entries[static_cast<std::size_t>(j)] = v;
    }
    return s;
}

Sequence basis_vector_J(int k, int t) {
    if (k < 1 || t < 1 || t > k - 1)
        throw std::out_of_range("basis_vector_J requires 1 <= t <= k-1");
    check_shift_range(k);
    Sequence s;
    s.entries.assign(static_cast<std::size_t>(k), 0);
    for (int j = 0; j < t; ++j)
        s.entries[static_cast<std::size_t>(j)] = 1LL << (t - 1 - j);
    s.entries[static_cast<std::size_t>(t)] = 1;
    return s;
}

Sequence milnor_primitive(int n) {
    if (n < 0)
        throw std::invalid_argument("milnor_primitive requires n >= 0");
    check_shift_range(n + 1);
    Sequence s;
    s.entries.reserve(static_cast<std::size_t>(n + 1));
    for (int j = n; j >= 0; --j)
        s.entries.push_back(1LL << j);
    return s;
}

Coeffs milnor_decompose(const Sequence& s, int k) {
    if (k < 1)
        throw std::invalid_argument("milnor_decompose requires k >= 1");
    if (!is_admissible(s, AlgebraId::A2) || s.length() > k)
        throw std::domain_error("milnor_decompose requires an A2-admissible sequence of length <= k");
    // Right-pad to length k; with s_p the padded entry at position p from
    // the right, n_{k-t} = s_{t+1} - 2 s_t.
    std::vector<long long> padded(s.entries);
    padded.resize(static_cast<std::size_t>(k), 0);
    auto sp = [&](int p) { return p < 1 ? 0LL : padded[static_cast<std::size_t>(k - p)]; };
    Coeffs n(static_cast<std::size_t>(k), 0);
    for (int t = 0; t <= k - 1; ++t) {
        const long long v = sp(t + 1) - 2 * sp(t);
        if (v < 0)
            throw std::domain_error("milnor_decompose: sequence is not admissible");
        n[static_cast<std::size_t>(k - t - 1)] = v;
    }
    return n;
}

Sequence milnor_compose(const Coeffs& n, int k) {
    if (k < 1 || static_cast<int>(n.size()) != k)
        throw std::invalid_argument("milnor_compose requires a length-k vector");
    check_shift_range(k);
    for (long long v : n)
        if (v < 0)
            throw std::invalid_argument("milnor_compose requires nonnegative coefficients");
    std::vector<long long> raw(static_cast<std::size_t>(k), 0);
    for (int i = 1; i <= k; ++i) {
        // S_{i,i} right-padded: entry 2^{i-1-a} at left index a < i.
        for (int a = 0; a < i; ++a)
            raw[static_cast<std::size_t>(a)] += n[static_cast<std::size_t>(i - 1)] * (1LL << (i - 1 - a));
    }
    Sequence out;
    for (long long v : raw)
        if (v != 0)
            out.entries.push_back(v);
    return out;
}

Coeffs madsen_decompose(const Sequence& s) {
    const int k = s.length();
    if (k < 1 || !is_admissible(s, AlgebraId::R))
        throw std::domain_error("madsen_decompose requires a nonempty R-admissible sequence");
    // The change of basis is unitriangular from the right: the pair
    // (i_p, i_{p+1}) determines a_{k-p}, and i_1 = sum of all a_t.
    Coeffs a(static_cast<std::size_t>(k), 0);
    long long upper = 0;
    for (int p = 1; p <= k - 1; ++p) {
        const long long v = 2 * s.at_from_right(p) - s.at_from_right(p + 1);
        a[static_cast<std::size_t>(k - p)] = v;
        upper += v;
    }
    a[0] = s.at_from_right(1) - upper;
    for (long long v : a)
        if (v < 0)
            throw std::domain_error("madsen_decompose: no nonnegative solution");
    return a;
}

Sequence madsen_compose(const Coeffs& a, int k) {
    if (k < 1 || static_cast<int>(a.size()) != k)
        throw std::invalid_argument("madsen_compose requires a length-k vector");
    for (long long v : a)
        if (v < 0)
            throw std::invalid_argument("madsen_compose requires nonnegative coefficients");
    Sequence out;
    out.entries.assign(static_cast<std::size_t>(k), 0);
    for (int t = 0; t <= k - 1; ++t) {
        if (a[static_cast<std::size_t>(t)] == 0)
            continue;
        const Sequence base = basis_vector_I(k, t);
        for (int j = 0; j < k; ++j)
            out.entries[static_cast<std::size_t>(j)] +=
                a[static_cast<std::size_t>(t)] * base.entries[static_cast<std::size_t>(j)];
    }
    return out;
}

Coeffs u_decompose(const Sequence& s, int k) {
    if (k < 1 || s.length() != k)
        throw std::domain_error("u_decompose requires a sequence of length k");
    std::vector<Sequence> j_vectors;
    for (int t = 1; t <= k - 1; ++t)
        j_vectors.push_back(basis_vector_J(k, t));
    // J_{k,t} has its rightmost nonzero entry (a 1) at position k-t, so
    // positions 1..k-1 solve for a_{k-1}, ..., a_1 in turn.
    Coeffs a(static_cast<std::size_t>(std::max(k - 1, 0)), 0);
    for (int p = 1; p <= k - 1; ++p) {
        long long rest = 0;
        for (int t = k - p + 1; t <= k - 1; ++t)
            rest += a[static_cast<std::size_t>(t - 1)] *
                    j_vectors[static_cast<std::size_t>(t - 1)].at_from_right(p);
        const long long v = s.at_from_right(p) - rest;
        if (v < 0)
            throw std::domain_error("u_decompose: no nonnegative solution");
        a[static_cast<std::size_t>(k - p - 1)] = v;
    }
    // The leftmost position is the one equation not used by the solve.
    long long lead = 0;
    for (int t = 1; t <= k - 1; ++t)
        lead += a[static_cast<std::size_t>(t - 1)] *
                j_vectors[static_cast<std::size_t>(t - 1)].at_from_right(k);
    if (lead != s.at_from_right(k))
        throw std::domain_error("u_decompose: no solution over the J basis");
    return a;
}

}  // namespace adem
