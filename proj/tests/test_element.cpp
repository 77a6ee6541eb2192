#include "adem/element.hpp"

#include <stdexcept>

#include "doctest.h"

using namespace adem;

namespace {

// Expansion oracle: psi(Q^J) consists of all componentwise splittings.
TensorElement split_oracle(const Sequence& s) {
    TensorElement out;
    out.arity = 2;
    std::vector<std::pair<std::vector<long long>, std::vector<long long>>> parts{{{}, {}}};
    for (long long i : s.entries) {
        decltype(parts) next;
        for (const auto& [l, r] : parts)
            for (long long t = 0; t <= i; ++t) {
                auto l2 = l;
                auto r2 = r;
                l2.push_back(i - t);
                r2.push_back(t);
                next.emplace_back(l2, r2);
            }
        parts = std::move(next);
    }
    for (const auto& [l, r] : parts)
        out.terms.insert({Sequence(l), Sequence(r)});
    return out;
}

std::vector<Sequence> monomials(int max_len, long long max_deg) {
    std::vector<Sequence> out;
    for (int k = 0; k <= max_len; ++k)
        for (long long d = 0; d <= max_deg; ++d)
            for (Sequence& s : compositions(k, d))
                out.push_back(std::move(s));
    return out;
}

}  // namespace

TEST_CASE("multiply") {
    CHECK(multiply(Element{{3}}, Element{{2}}) == Element{{3, 2}});
    CHECK(multiply(Element{Sequence{}}, Element{{2, 1}}) == Element{{2, 1}});
    CHECK(multiply(Element{{1}, {2}}, Element{{1}}) == Element{{1, 1}, {2, 1}});
    // Mod-2 cancellation across colliding concatenations.
    CHECK(multiply(Element{{1}, Sequence{}}, Element{{1}, Sequence{}}) ==
          Element{{1, 1}, Sequence{}});
}

TEST_CASE("coproduct") {
    TensorElement expected;
    expected.arity = 2;
    expected.terms = {{Sequence{2}, Sequence{0}}, {Sequence{1}, Sequence{1}}, {Sequence{0}, Sequence{2}}};
    CHECK(coproduct(Element{{2}}) == expected);

    TensorElement grouplike;
    grouplike.arity = 2;
    grouplike.terms = {{Sequence{0}, Sequence{0}}};
    CHECK(coproduct(Element{{0}}) == grouplike);

    CHECK(coproduct(Element{{1, 1}}) == split_oracle(Sequence{1, 1}));
    CHECK(coproduct(Element{{1, 1}}).terms.size() == 4);
}

TEST_CASE("iterated coproduct") {
    TensorElement expected;
    expected.arity = 2;
    expected.terms = {{Sequence{1}, Sequence{0}}, {Sequence{0}, Sequence{1}}};
    CHECK(iterated_coproduct(Element{{1}}, 2) == expected);

    const TensorElement cube = iterated_coproduct(Element{{0, 0}}, 3);
    CHECK(cube.terms == std::set<std::vector<Sequence>>{
                            {Sequence{0, 0}, Sequence{0, 0}, Sequence{0, 0}}});

    CHECK(iterated_coproduct(Element{{2}}, 3).terms.size() == 6);
    CHECK(iterated_coproduct(Element{{5, 3}}, 1).terms.size() == 1);
    CHECK_THROWS_AS(iterated_coproduct(Element{{1}}, 0), std::invalid_argument);
}

TEST_CASE("augmentation") {
    CHECK(augmentation(Element{{0, 0}}) == 1);
    CHECK(augmentation(Element{{2, 1}}) == 0);
    CHECK(augmentation(Element{}) == 0);
    CHECK(augmentation(Element{Sequence{}}) == 1);
}

TEST_CASE("primitive generators") {
    CHECK(primitive_x(2, 2) == Sequence{1, 0});
    CHECK(primitive_x(2, 0) == Sequence{0, 0});
    CHECK(primitive_x(3, 1) == Sequence{0, 0, 1});
    CHECK_THROWS_AS(primitive_x(2, 3), std::out_of_range);
    CHECK_THROWS_AS(primitive_x(0, 0), std::out_of_range);
}

TEST_CASE("is_primitive") {
    CHECK(is_primitive(Element{{1, 0}}, 2));
    CHECK_FALSE(is_primitive(Element{{1, 1}}, 2));
    CHECK_FALSE(is_primitive(Element{{2}}, 1));
    CHECK_THROWS_AS(is_primitive(Element{{1}, {1, 0}}, 2), std::invalid_argument);
    for (int k = 1; k <= 3; ++k)
        for (int i = 1; i <= k; ++i)
            CHECK(is_primitive(Element{primitive_x(k, i)}, k));
}

TEST_CASE("padding maps") {
    CHECK(pad_left(Element{{1}}) == Element{{0, 1}});
    CHECK(pad_left(Element{Sequence{}}) == Element{{0}});
    CHECK(pad_left(Element{{1, 0}}) == Element{{0, 1, 0}});
    CHECK(append_right(Element{{1}}) == Element{{1, 0}});
    CHECK(append_right(Element{Sequence{}}) == Element{{0}});
    CHECK(append_right(Element{{2, 1}}) == Element{{2, 1, 0}});
}

TEST_CASE("component split") {
    const std::map<int, Element> split = component_split(Element{{1}, {1, 0}});
    CHECK(split == std::map<int, Element>{{1, Element{{1}}}, {2, Element{{1, 0}}}});
    CHECK(component_split(Element{}).empty());
    CHECK(component_split(Element{{0, 0}}) == std::map<int, Element>{{2, Element{{0, 0}}}});
}

TEST_CASE("coassociativity and counit") {
    for (const Sequence& m : monomials(3, 6)) {
        const TensorElement psi = coproduct(Element{m});
        TensorElement left, right;
        left.arity = right.arity = 3;
        for (const auto& tuple : psi.terms) {
            for (const auto& split : coproduct(Element{tuple[0]}).terms)
                toggle(left.terms, std::vector<Sequence>{split[0], split[1], tuple[1]});
            for (const auto& split : coproduct(Element{tuple[1]}).terms)
                toggle(right.terms, std::vector<Sequence>{tuple[0], split[0], split[1]});
        }
        CHECK(left == right);

        Element counit_left, counit_right;
        for (const auto& tuple : psi.terms) {
            if (tuple[0].all_zero())
                toggle(counit_left, tuple[1]);
            if (tuple[1].all_zero())
                toggle(counit_right, tuple[0]);
        }
        CHECK(counit_left == Element{m});
        CHECK(counit_right == Element{m});
    }
}

TEST_CASE("coproduct is an algebra map") {
    for (const Sequence& m1 : monomials(2, 3)) {
        for (const Sequence& m2 : monomials(2, 3)) {
            const TensorElement lhs = coproduct(multiply(Element{m1}, Element{m2}));
            TensorElement rhs;
            rhs.arity = 2;
            for (const auto& a : coproduct(Element{m1}).terms)
                for (const auto& b : coproduct(Element{m2}).terms) {
                    Sequence l = a[0], r = a[1];
                    l.entries.insert(l.entries.end(), b[0].entries.begin(), b[0].entries.end());
                    r.entries.insert(r.entries.end(), b[1].entries.begin(), b[1].entries.end());
                    toggle(rhs.terms, std::vector<Sequence>{std::move(l), std::move(r)});
                }
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("multiplication respects components") {
    for (const Sequence& m1 : monomials(2, 3))
        for (const Sequence& m2 : monomials(2, 3))
            for (const Sequence& p : multiply(Element{m1}, Element{m2}))
                CHECK(p.length() == m1.length() + m2.length());
}
