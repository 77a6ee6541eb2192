#include "adem/expr.hpp"

#include <random>

#include <stdexcept>

#include "doctest.h"

using namespace adem;

TEST_CASE("parsing") {
    CHECK(parse_element("Q3 Q2") == Element{{3, 2}});
    CHECK(parse_element("Q^1Q^1 + Q^1Q^1") == Element{});
    CHECK(parse_element("1") == Element{Sequence{}});
    CHECK(parse_element("0") == Element{});
    CHECK(parse_element("Q^3Q^2 + Q5") == Element{{3, 2}, {5}});
    CHECK(parse_element("  Q0   Q^0 ") == Element{{0, 0}});
}

TEST_CASE("parse errors carry positions") {
    CHECK_THROWS_AS(parse_element(""), parse_error);
    CHECK_THROWS_AS(parse_element("Q"), parse_error);
    CHECK_THROWS_AS(parse_element("Qx"), parse_error);
    CHECK_THROWS_AS(parse_element("Q2 + "), parse_error);
    CHECK_THROWS_AS(parse_element("0 + Q1"), parse_error);
    CHECK_THROWS_AS(parse_element("Q2 R3"), parse_error);
    try {
        parse_element("Q2 %");
        CHECK(false);
    } catch (const parse_error& e) {
        CHECK(e.position == 3);
    }
    // Superscript bound.
    CHECK_THROWS_AS(parse_element("Q9999999"), parse_error);
    CHECK(parse_element("Q9999999", 10'000'000) == Element{{9'999'999}});
}

TEST_CASE("formatting") {
    CHECK(format_element(Element{{3, 2}}) == "Q^3 Q^2");
    CHECK(format_element(Element{}) == "0");
    CHECK(format_element(Element{{1, 1}, {2}}) == "Q^2 + Q^1 Q^1");
    CHECK(format_element(Element{Sequence{}}) == "1");
    CHECK(format_element(Element{{3, 2}}, Style::json) == R"({"terms":[[3,2]]})");
    CHECK(format_element(Element{}, Style::json) == R"({"terms":[]})");
    CHECK(format_sequence(Sequence{0, 1}) == "Q^0 Q^1");
}

TEST_CASE("tensor formatting") {
    TensorElement t;
    t.arity = 2;
    t.terms = {{Sequence{1}, Sequence{0}}, {Sequence{0}, Sequence{1}}};
    CHECK(format_tensor(t) == "Q^0 (x) Q^1 + Q^1 (x) Q^0");
    CHECK(format_tensor(TensorElement{}) == "0");
}

TEST_CASE("parse inverts format") {
    std::mt19937 rng(20240901);
    std::uniform_int_distribution<int> term_count(0, 4);
    std::uniform_int_distribution<int> seq_length(0, 4);
    std::uniform_int_distribution<long long> entry(0, 9);
    for (int round = 0; round < 300; ++round) {
        Element x;
        const int terms = term_count(rng);
        for (int t = 0; t < terms; ++t) {
            Sequence s;
            const int len = seq_length(rng);
            for (int j = 0; j < len; ++j)
                s.entries.push_back(entry(rng));
            toggle(x, std::move(s));
        }
        CHECK(parse_element(format_element(x)) == x);
    }
}
