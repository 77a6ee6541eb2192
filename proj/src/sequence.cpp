#include "adem/sequence.hpp"

#include <ostream>
#include <stdexcept>
#include <utility>

namespace adem {

namespace {

void check_nonnegative(const std::vector<long long>& entries) {
    for (long long e : entries)
        if (e < 0)
            throw std::invalid_argument("sequence entries must be nonnegative");
}

}  // namespace

Sequence::Sequence(std::initializer_list<long long> init) : entries(init) {
    check_nonnegative(entries);
}

Sequence::Sequence(std::vector<long long> e) : entries(std::move(e)) {
    check_nonnegative(entries);
}

long long Sequence::degree() const {
    long long d = 0;
    for (long long e : entries)
        d += e;
    return d;
}

long long Sequence::at_from_right(int t) const {
    if (t < 1 || t > length())
        throw std::out_of_range("sequence position out of range");
    return entries[entries.size() - static_cast<std::size_t>(t)];
}

bool Sequence::all_zero() const {
    for (long long e : entries)
        if (e != 0)
            return false;
    return true;
}

std::strong_ordering Sequence::operator<=>(const Sequence& rhs) const {
    return compare(*this, rhs);
}

int binom_mod2(long long n, long long k) {
    if (k < 0 || n < k)
        return 0;
    return (n & k) == k ? 1 : 0;
}

Excess excess(const Sequence& s) {
    if (s.entries.empty())
        return Excess::inf();
    long long rest = 0;
    for (std::size_t i = 1; i < s.entries.size(); ++i)
        rest += s.entries[i];
    return Excess::finite(s.entries.front() - rest);
}

Sequence suffix(const Sequence& s, int t) {
    if (t < 1 || t > s.length())
        throw std::out_of_range("suffix length out of range");
    std::vector<long long> tail(s.entries.end() - t, s.entries.end());
    return Sequence(std::move(tail));
}

std::strong_ordering compare(const Sequence& a, const Sequence& b) {
    if (a.length() != b.length())
        return a.length() <=> b.length();
    // e(I_t) = i_t - |I_{t-1}|, tracked incrementally from the right.
    long long deg_a = 0, deg_b = 0;
    for (int t = 1; t <= a.length(); ++t) {
        const long long ia = a.at_from_right(t);
        const long long ib = b.at_from_right(t);
        const long long ea = ia - deg_a;
        const long long eb = ib - deg_b;
        if (ea != eb)
            return ea <=> eb;
        deg_a += ia;
        deg_b += ib;
    }
    return std::strong_ordering::equal;
}

namespace {

void build_compositions(int slots, long long remaining, std::vector<long long>& acc,
                        std::vector<Sequence>& out) {
    if (slots == 1) {
        acc.push_back(remaining);
        out.push_back(Sequence(acc));
        acc.pop_back();
        return;
    }
    for (long long v = 0; v <= remaining; ++v) {
        acc.push_back(v);
        build_compositions(slots - 1, remaining - v, acc, out);
        acc.pop_back();
    }
}

}  // namespace

std::vector<Sequence> compositions(int k, long long d) {
    if (k < 0 || d < 0)
        throw std::invalid_argument("compositions requires nonnegative arguments");
    std::vector<Sequence> out;
    if (k == 0) {
        if (d == 0)
            out.push_back(Sequence{});
        return out;
    }
    std::vector<long long> acc;
    acc.reserve(static_cast<std::size_t>(k));
    build_compositions(k, d, acc, out);
    return out;
}

std::ostream& operator<<(std::ostream& os, const Sequence& s) {
    os << '(';
    for (int j = 0; j < s.length(); ++j) {
        if (j > 0)
            os << ',';
        os << s.entries[static_cast<std::size_t>(j)];
    }
    return os << ')';
}

}  // namespace adem
