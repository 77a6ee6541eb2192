#include "adem/steenrod_action.hpp"

#include <stdexcept>

#include "doctest.h"

using namespace adem;

namespace {

std::vector<Sequence> monomials(int max_len, long long max_deg) {
    std::vector<Sequence> out;
    for (int k = 0; k <= max_len; ++k)
        for (long long d = 0; d <= max_deg; ++d)
            for (Sequence& s : compositions(k, d))
                out.push_back(std::move(s));
    return out;
}

}  // namespace

TEST_CASE("sq_act spot values") {
    CHECK(sq_act(2, Element{{3, 2}}, AlgebraId::F0) == Element{{2, 1}});
    CHECK(sq_act(0, Element{{5, 3}}, AlgebraId::F0) == Element{{5, 3}});
    CHECK(sq_act(1, Element{{2}}, AlgebraId::F0) == Element{{1}});
    CHECK(sq_act(2, Element{{3, 2}}, AlgebraId::R) == Element{{2, 1}});
    CHECK(sq_act(1, Element{Sequence{}}, AlgebraId::F0) == Element{});
    CHECK(sq_act(0, Element{Sequence{}}, AlgebraId::F0) == Element{Sequence{}});
    CHECK(sq_act(1, Element{{0, 2}}, AlgebraId::F0) == Element{{0, 1}});
}

TEST_CASE("sq_act rejects A2") {
    CHECK_THROWS_AS(sq_act(1, Element{{2, 1}}, AlgebraId::A2), std::domain_error);
    CHECK_THROWS_AS(sq_act(-1, Element{{2, 1}}, AlgebraId::F0), std::invalid_argument);
}

TEST_CASE("sq_act degree and length contracts") {
    for (const Sequence& m : monomials(3, 8)) {
        for (long long a = 0; a <= 5; ++a) {
            for (const Sequence& t : sq_act(a, Element{m}, AlgebraId::F0)) {
                CHECK(t.degree() == m.degree() - a);
                CHECK(t.length() == m.length());
            }
        }
    }
}

TEST_CASE("action descends to U and R") {
    for (AlgebraId alg : {AlgebraId::U, AlgebraId::R})
        for (const Sequence& m : monomials(3, 6))
            for (long long a = 0; a <= 4; ++a) {
                const Element upstairs = normalize(sq_act(a, Element{m}, AlgebraId::F0), alg);
                const Element downstairs =
                    normalize(sq_act(a, normalize(Element{m}, alg), AlgebraId::F0), alg);
                CHECK(upstairs == downstairs);
            }
}

TEST_CASE("the A2 counterexample fails well-definedness") {
    const Element upstairs = normalize(sq_act(2, Element{{3, 2}}, AlgebraId::F0), AlgebraId::A2);
    const Element downstairs =
        normalize(sq_act(2, normalize(Element{{3, 2}}, AlgebraId::A2), AlgebraId::F0), AlgebraId::A2);
    CHECK(upstairs == Element{{2, 1}});
    CHECK(downstairs == Element{});
}

TEST_CASE("excess inequality for two-letter actions") {
    // Terms of Sq^a(Q^b Q^c) with b < c keep the left entry strictly
    // below the right one.
    for (long long b = 0; b <= 8; ++b)
        for (long long c = b + 1; c <= 8; ++c)
            for (long long a = 0; a <= 6; ++a)
                for (const Sequence& t : sq_act(a, Element{{b, c}}, AlgebraId::F0))
                    CHECK(t.entries[0] < t.entries[1]);
}

TEST_CASE("dual action on generator powers") {
    CHECK(sq_act_dual(2, DualGeneratorPower{2, 1, 3}) ==
          std::pair<int, DualGeneratorPower>{1, DualGeneratorPower{2, 1, 5}});
    CHECK(sq_act_dual(0, DualGeneratorPower{3, 2, 4}) ==
          std::pair<int, DualGeneratorPower>{1, DualGeneratorPower{3, 2, 4}});
    CHECK(sq_act_dual(1, DualGeneratorPower{2, 2, 2}) ==
          std::pair<int, DualGeneratorPower>{0, DualGeneratorPower{2, 2, 3}});
    CHECK_THROWS_AS(sq_act_dual(1, DualGeneratorPower{2, 3, 1}), std::out_of_range);
}
