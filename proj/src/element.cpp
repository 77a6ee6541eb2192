#include "adem/element.hpp"

#include <stdexcept>
#include <utility>

namespace adem {

namespace {

// All splittings U + V = s with componentwise sums, i.e. the expansion of
// psi on the monomial s. Each splitting occurs exactly once.
std::vector<std::pair<Sequence, Sequence>> splittings(const Sequence& s) {
    std::vector<std::pair<std::vector<long long>, std::vector<long long>>> parts;
    parts.push_back({{}, {}});
    for (long long i : s.entries) {
        std::vector<std::pair<std::vector<long long>, std::vector<long long>>> next;
        next.reserve(parts.size() * static_cast<std::size_t>(i + 1));
        for (const auto& [left, right] : parts) {
            for (long long t = 0; t <= i; ++t) {
                auto l = left;
                auto r = right;
                l.push_back(i - t);
                r.push_back(t);
                next.emplace_back(std::move(l), std::move(r));
            }
        }
        parts = std::move(next);
    }
    std::vector<std::pair<Sequence, Sequence>> out;
    out.reserve(parts.size());
    for (auto& [l, r] : parts)
        out.emplace_back(Sequence(std::move(l)), Sequence(std::move(r)));
    return out;
}

}  // namespace

Element add(Element a, const Element& b) {
    for (const Sequence& s : b)
        toggle(a, s);
    return a;
}

Element multiply(const Element& a, const Element& b) {
    Element out;
    for (const Sequence& s : a) {
        for (const Sequence& t : b) {
            Sequence c = s;
            c.entries.insert(c.entries.end(), t.entries.begin(), t.entries.end());
            toggle(out, std::move(c));
        }
    }
    return out;
}

TensorElement coproduct(const Element& x) {
    TensorElement out;
    out.arity = 2;
    for (const Sequence& s : x)
        for (auto& [l, r] : splittings(s))
            toggle(out.terms, std::vector<Sequence>{std::move(l), std::move(r)});
    return out;
}

TensorElement iterated_coproduct(const Element& x, int lambda) {
    if (lambda < 1)
        throw std::invalid_argument("iterated coproduct needs arity >= 1");
    TensorElement out;
    out.arity = lambda;
    for (const Sequence& s : x) {
        std::vector<std::vector<Sequence>> tuples{{s}};
        for (int round = 2; round <= lambda; ++round) {
            std::vector<std::vector<Sequence>> next;
            for (const auto& tuple : tuples) {
                for (auto& [l, r] : splittings(tuple.front())) {
                    std::vector<Sequence> expanded;
                    expanded.reserve(tuple.size() + 1);
                    expanded.push_back(std::move(l));
                    expanded.push_back(std::move(r));
                    expanded.insert(expanded.end(), tuple.begin() + 1, tuple.end());
                    next.push_back(std::move(expanded));
                }
            }
            tuples = std::move(next);
        }
        for (auto& tuple : tuples)
            toggle(out.terms, std::move(tuple));
    }
    return out;
}

int augmentation(const Element& x) {
    int count = 0;
    for (const Sequence& s : x)
        if (s.all_zero())
            count ^= 1;
    return count;
}

Sequence primitive_x(int k, int i) {
    if (k < 1 || i < 0 || i > k)
        throw std::out_of_range("primitive_x requires k >= 1 and 0 <= i <= k");
    Sequence s(std::vector<long long>(static_cast<std::size_t>(k), 0));
    if (i >= 1)
        s.entries[static_cast<std::size_t>(k - i)] = 1;
    return s;
}

bool is_primitive(const Element& x, int k) {
    if (k < 1)
        throw std::invalid_argument("component index must be positive");
    for (const Sequence& s : x)
        if (s.length() != k)
            throw std::invalid_argument("is_primitive requires all sequences of length k");
    const Sequence g = primitive_x(k, 0);
    TensorElement rhs;
    rhs.arity = 2;
    for (const Sequence& s : x) {
        toggle(rhs.terms, std::vector<Sequence>{s, g});
        toggle(rhs.terms, std::vector<Sequence>{g, s});
    }
    return coproduct(x) == rhs;
}

Element pad_left(const Element& x) {
    Element out;
    for (const Sequence& s : x) {
        Sequence t;
        t.entries.reserve(s.entries.size() + 1);
        t.entries.push_back(0);
        t.entries.insert(t.entries.end(), s.entries.begin(), s.entries.end());
        toggle(out, std::move(t));
    }
    return out;
}

Element append_right(const Element& x) {
    Element out;
    for (const Sequence& s : x) {
        Sequence t = s;
        t.entries.push_back(0);
        toggle(out, std::move(t));
    }
    return out;
}

std::map<int, Element> component_split(const Element& x) {
    std::map<int, Element> out;
    for (const Sequence& s : x)
        out[s.length()].insert(s);
    return out;
}

}  // namespace adem
