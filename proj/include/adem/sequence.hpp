#pragma once

#include <compare>
#include <initializer_list>
#include <iosfwd>
#include <vector>

namespace adem {

/// Superscript sequence (i_k, ..., i_1) of a monomial Q^{i_k}...Q^{i_1},
/// stored in written order: entries.front() is i_k and entries.back() is
/// i_1. Positions count 1..k from the right, so the suffix I_t consists of
/// the rightmost t entries. The empty sequence is the unit monomial.
struct Sequence {
    std::vector<long long> entries;

    Sequence() = default;
    Sequence(std::initializer_list<long long> init);
    explicit Sequence(std::vector<long long> e);

    int length() const { return static_cast<int>(entries.size()); }
    long long degree() const;
    long long at_from_right(int t) const;  // i_t, 1 <= t <= length()
    bool all_zero() const;

    friend bool operator==(const Sequence&, const Sequence&) = default;
    std::strong_ordering operator<=>(const Sequence& rhs) const;
};

/// e(I) = i_k - (i_{k-1} + ... + i_1). The empty sequence has infinite
/// excess; the marker compares strictly above every integer.
struct Excess {
    bool infinite = false;
    long long value = 0;

    static Excess inf() { return Excess{true, 0}; }
    static Excess finite(long long v) { return Excess{false, v}; }
    bool nonnegative() const { return infinite || value >= 0; }

    friend auto operator<=>(const Excess&, const Excess&) = default;
};

/// C(n, k) mod 2: zero unless 0 <= k <= n, else by the Lucas rule (1 iff
/// the binary digits of k are a subset of those of n). The out-of-range
/// convention makes the Adem and Nishida sums self-truncating.
int binom_mod2(long long n, long long k);

Excess excess(const Sequence& s);

/// Rightmost t entries I_t = (i_t, ..., i_1); throws std::out_of_range
/// unless 1 <= t <= length.
Sequence suffix(const Sequence& s, int t);

/// Total order on sequences: shorter first; sequences of equal length
/// compare the suffix excesses e(I_t) at the smallest t where they differ.
std::strong_ordering compare(const Sequence& a, const Sequence& b);

/// All length-k sequences of nonnegative integers with entry sum d, in
/// lexicographic order, smallest first. Count is C(d+k-1, k-1).
std::vector<Sequence> compositions(int k, long long d);

std::ostream& operator<<(std::ostream& os, const Sequence& s);

}  // namespace adem
