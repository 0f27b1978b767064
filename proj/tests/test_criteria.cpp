#include <catch2/catch_amalgamated.hpp>

#include "segring/segring.hpp"

using namespace segring;

namespace {

const LineTable& table() {
    static LineTable t = default_table();
    return t;
}

Segment seg(Rational a, Rational b) { return Segment(0, a, b); }

Word word(std::initializer_list<Rational> exps) {
    Word w;
    for (const Rational& e : exps) w.push_back(Point{0, e});
    return w;
}

}  // namespace

TEST_CASE("casselman verdicts") {
    SECTION("self-dual two-point word is square integrable") {
        CasselmanVerdict v = casselman(table(), word({Rational(1, 2), Rational(-1, 2)}));
        CHECK(v.sum_zero);
        CHECK(v.partials_positive);
        CHECK(v.square_integrable);
        CHECK(v.essentially);
    }
    SECTION("zero partial sums fail strictly") {
        CasselmanVerdict v = casselman(table(), word({0, 0}));
        CHECK(v.sum_zero);
        CHECK_FALSE(v.partials_positive);
        CHECK_FALSE(v.square_integrable);
    }
    SECTION("descending word of a non-unitary segment is essentially si only") {
        CasselmanVerdict v = casselman(table(), descending_word(seg(0, 1)));
        CHECK(v.weighted_sum == Rational(1));
        CHECK_FALSE(v.sum_zero);
        CHECK_FALSE(v.square_integrable);
        CHECK(v.essentially);
    }
    SECTION("weights use size and s") {
        LineTable fat({Line{"sig", 2, Rational(1, 2), "sig"}});
        Word w{Point{0, Rational(1)}, Point{0, Rational(-1)}};
        CasselmanVerdict v = casselman(fat, w);
        CHECK(v.weighted_sum == Rational(0));
        CHECK(v.raw_sum == Rational(0));
        CHECK(v.square_integrable);
    }
    SECTION("empty word rejected") {
        CHECK_THROWS_AS(casselman(table(), Word{}), DomainError);
    }
}

TEST_CASE("casselman invariance under dual plus reversal") {
    std::vector<Rational> grid{Rational(-1), Rational(0), Rational(1)};
    std::vector<Word> words;
    for (const Rational& a : grid) {
        words.push_back(word({a}));
        for (const Rational& b : grid) {
            words.push_back(word({a, b}));
            for (const Rational& c : grid) words.push_back(word({a, b, c}));
        }
    }
    for (const Word& w : words) {
        Word reversed;
        for (auto it = w.rbegin(); it != w.rend(); ++it) reversed.push_back(dual(table(), *it));
        CasselmanVerdict v = casselman(table(), w);
        CasselmanVerdict vd = casselman(table(), reversed);
        CHECK(v.square_integrable == vd.square_integrable);
        CHECK(v.essentially == vd.essentially);
        CHECK(v.sum_zero == vd.sum_zero);
        // Internal consistency of the verdict fields.
        CHECK(v.square_integrable == (v.sum_zero && v.partials_positive));
        if (v.square_integrable) CHECK(v.essentially);
    }
}

TEST_CASE("segment words against the criterion") {
    for (const Segment& d : enumerate_segments(table(), InstanceWindow{})) {
        CasselmanVerdict v = casselman(table(), descending_word(d));
        CHECK(v.essentially);
        CHECK(v.square_integrable == is_unitary(table(), d));
    }
}

TEST_CASE("linked") {
    CHECK(linked(seg(0, 0), seg(1, 1)));
    CHECK(linked(seg(0, 1), seg(1, 2)));
    CHECK_FALSE(linked(seg(-1, 1), seg(0, 0)));  // containment
    CHECK_FALSE(linked(seg(0, 0), seg(2, 2)));   // gap
    CHECK_FALSE(linked(seg(0, 1), seg(0, 1)));   // equal
    CHECK_FALSE(linked(seg(0, 1), Segment(0, Rational(1, 2), Rational(3, 2))));  // misaligned

    SECTION("symmetric") {
        InstanceWindow w;
        w.max_segment_points = 2;
        auto segments = enumerate_segments(table(), w);
        for (const Segment& a : segments)
            for (const Segment& b : segments) CHECK(linked(a, b) == linked(b, a));
    }
    SECTION("cross-line pairs never linked") {
        LineTable two({Line{"a", 1, Rational(1), "a"}, Line{"b", 1, Rational(1), "b"}});
        CHECK_FALSE(linked(Segment(0, 0, 0), Segment(1, 1, 1)));
    }
}

TEST_CASE("ordering_for_extraction") {
    SECTION("nested unitary segments go longest first") {
        std::vector<Segment> input{seg(0, 0), seg(-1, 1)};
        auto ordered = ordering_for_extraction(input);
        REQUIRE(ordered.size() == 2);
        CHECK(ordered[0] == seg(-1, 1));
        CHECK(satisfies_extraction_order(ordered));
    }
    SECTION("single segment") {
        auto ordered = ordering_for_extraction({seg(0, 0)});
        CHECK(ordered == std::vector<Segment>{seg(0, 0)});
    }
    SECTION("half-integer pair goes longest first") {
        Segment big(0, Rational(-3, 2), Rational(3, 2));
        Segment small(0, Rational(-1, 2), Rational(1, 2));
        auto ordered = ordering_for_extraction({small, big});
        CHECK(ordered.front() == big);
        CHECK(satisfies_extraction_order(ordered));
        // The opposite order violates the indexing condition.
        CHECK_FALSE(satisfies_extraction_order({small, big}));
    }
    SECTION("every distinct unitary window family admits the sorted witness") {
        InstanceWindow w;
        auto unitary = enumerate_unitary_segments(table(), w);
        for (std::size_t i = 0; i < unitary.size(); ++i)
            for (std::size_t j = i + 1; j < unitary.size(); ++j) {
                auto ordered = ordering_for_extraction({unitary[i], unitary[j]});
                CHECK(satisfies_extraction_order(ordered));
            }
    }
    SECTION("no ordering exists for a linked non-unitary pair") {
        CHECK_THROWS_AS(ordering_for_extraction({seg(0, 1), seg(1, 2)}), NoOrderingError);
    }
}
