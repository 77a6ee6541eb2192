#include "adem/sequence.hpp"

#include <algorithm>

#include <stdexcept>

#include "doctest.h"

using namespace adem;

namespace {

// Independent binomial oracle: Pascal's triangle mod 2.
int pascal_mod2(int n, int k) {
    if (k < 0 || n < k)
        return 0;
    std::vector<std::vector<int>> rows(static_cast<std::size_t>(n + 1));
    for (int r = 0; r <= n; ++r) {
        rows[r].assign(static_cast<std::size_t>(r + 1), 1);
        for (int c = 1; c < r; ++c)
            rows[r][c] = (rows[r - 1][c - 1] + rows[r - 1][c]) % 2;
    }
    return rows[n][k];
}

long long pascal_exact(long long n, long long k) {
    if (k < 0 || n < k)
        return 0;
    long long out = 1;
    for (long long j = 1; j <= k; ++j)
        out = out * (n - k + j) / j;
    return out;
}

std::vector<Sequence> sequences_up_to(int max_len, long long max_deg) {
    std::vector<Sequence> out;
    for (int k = 0; k <= max_len; ++k)
        for (long long d = 0; d <= max_deg; ++d)
            for (Sequence& s : compositions(k, d))
                out.push_back(std::move(s));
    return out;
}

}  // namespace

TEST_CASE("binom_mod2 spot values and conventions") {
    CHECK(binom_mod2(1, 0) == 1);
    CHECK(binom_mod2(2, 1) == 0);
    CHECK(binom_mod2(-1, 2) == 0);
    CHECK(binom_mod2(3, 2) == 1);
    CHECK(binom_mod2(-3, -1) == 0);
    CHECK(binom_mod2(4, 7) == 0);
}

TEST_CASE("binom_mod2 agrees with the Pascal oracle") {
    for (int n = 0; n <= 16; ++n)
        for (int k = 0; k <= n; ++k)
            CHECK(binom_mod2(n, k) == pascal_mod2(n, k));
}

TEST_CASE("excess") {
    CHECK(excess(Sequence{3, 2}) == Excess::finite(1));
    CHECK(excess(Sequence{}) == Excess::inf());
    CHECK(excess(Sequence{1, 2}) == Excess::finite(-1));
    CHECK(Excess::inf() > Excess::finite(1 << 30));
    CHECK(Excess::finite(-1) < Excess::finite(0));
}

TEST_CASE("suffix") {
    CHECK(suffix(Sequence{3, 2, 1}, 2) == Sequence{2, 1});
    CHECK(suffix(Sequence{3, 2, 1}, 3) == Sequence{3, 2, 1});
    CHECK(suffix(Sequence{1}, 1) == Sequence{1});
    CHECK_THROWS_AS(suffix(Sequence{1}, 2), std::out_of_range);
    CHECK_THROWS_AS(suffix(Sequence{1}, 0), std::out_of_range);
}

TEST_CASE("compare spot values") {
    CHECK(compare(Sequence{1}, Sequence{2, 1}) == std::strong_ordering::less);
    CHECK(compare(Sequence{2, 0}, Sequence{1, 1}) == std::strong_ordering::less);
    CHECK(compare(Sequence{2, 1}, Sequence{2, 1}) == std::strong_ordering::equal);
}

TEST_CASE("compare is a total order") {
    // Distinct sequences of equal length never compare equal.
    const auto all = sequences_up_to(3, 8);
    for (std::size_t a = 0; a < all.size(); ++a) {
        for (std::size_t b = a + 1; b < all.size(); ++b) {
            CHECK(compare(all[a], all[b]) != std::strong_ordering::equal);
            // Antisymmetry.
            const bool forward = compare(all[a], all[b]) == std::strong_ordering::less;
            const bool backward = compare(all[b], all[a]) == std::strong_ordering::greater;
            CHECK(forward == backward);
        }
    }
    // Transitivity on a smaller sample.
    const auto sample = sequences_up_to(3, 5);
    for (const Sequence& a : sample)
        for (const Sequence& b : sample)
            for (const Sequence& c : sample)
                if (a < b && b < c)
                    CHECK(a < c);
}

TEST_CASE("windows dominate suffix excess") {
    // For nonnegative entries, e((i_p, ..., i_s)) >= e(I_p).
    for (const Sequence& s : sequences_up_to(4, 6)) {
        for (int p = 1; p <= s.length(); ++p) {
            const Excess full = excess(suffix(s, p));
            for (int t = 1; t <= p; ++t) {
                Sequence window;
                window.entries.assign(s.entries.end() - p, s.entries.end() - (t - 1));
                CHECK(excess(window) >= full);
            }
        }
    }
}

TEST_CASE("compositions") {
    CHECK(compositions(2, 2) ==
          std::vector<Sequence>{Sequence{0, 2}, Sequence{1, 1}, Sequence{2, 0}});
    CHECK(compositions(1, 5) == std::vector<Sequence>{Sequence{5}});
    CHECK(compositions(3, 0) == std::vector<Sequence>{Sequence{0, 0, 0}});
    for (int k = 1; k <= 5; ++k)
        for (long long d = 0; d <= 10; ++d)
            CHECK(static_cast<long long>(compositions(k, d).size()) ==
                  pascal_exact(d + k - 1, k - 1));
}
