#include <catch2/catch_amalgamated.hpp>

#include "segring/segring.hpp"

using namespace segring;

namespace {

const LineTable& table() {
    static LineTable t = default_table();
    return t;
}

Segment seg(Rational a, Rational b) { return Segment(0, a, b); }

Multisegment label(std::initializer_list<Segment> entries) {
    return Multisegment(std::vector<Segment>(entries));
}

}  // namespace

TEST_CASE("decide_pair") {
    SECTION("adjacent singletons") {
        PairDecision d = decide_pair(seg(0, 0), seg(1, 1));
        REQUIRE(d.status == PairDecision::Status::length_two);
        CHECK(*d.other_summand == label({seg(0, 1)}));
        CHECK(d.langlands_class ==
              RElem::basis(label({seg(0, 0), seg(1, 1)})) - RElem::basis(label({seg(0, 1)})));
    }
    SECTION("overlapping linked pair keeps the intersection") {
        PairDecision d = decide_pair(seg(0, 1), seg(1, 2));
        REQUIRE(d.status == PairDecision::Status::length_two);
        CHECK(*d.other_summand == label({seg(0, 2), seg(1, 1)}));
    }
    SECTION("containment is irreducible") {
        PairDecision d = decide_pair(seg(-1, 1), seg(0, 0));
        CHECK(d.status == PairDecision::Status::irreducible);
        CHECK(d.class_label == label({seg(-1, 1), seg(0, 0)}));
        CHECK(d.langlands_class.is_zero());
        CHECK_FALSE(d.other_summand);
    }
    SECTION("equal segments are irreducible") {
        CHECK(decide_pair(seg(0, 1), seg(0, 1)).status == PairDecision::Status::irreducible);
    }
    SECTION("symmetric in its arguments") {
        InstanceWindow w;
        w.max_segment_points = 2;
        w.grid = Rational(1);
        auto segments = enumerate_segments(table(), w);
        for (const Segment& a : segments)
            for (const Segment& b : segments) {
                PairDecision ab = decide_pair(a, b);
                PairDecision ba = decide_pair(b, a);
                CHECK(ab.status == ba.status);
                CHECK(ab.langlands_class == ba.langlands_class);
                CHECK(ab.other_summand == ba.other_summand);
            }
    }
    SECTION("Grothendieck identity on every linked window pair") {
        auto segments = enumerate_segments(table(), InstanceWindow{});
        for (const Segment& a : segments)
            for (const Segment& b : segments) {
                if (!linked(a, b)) continue;
                PairDecision d = decide_pair(a, b);
                CHECK(d.langlands_class + RElem::basis(*d.other_summand) ==
                      RElem::basis(d.class_label));
            }
    }
}

TEST_CASE("zelevinsky_class") {
    Point p0{0, Rational(0)};
    SECTION("matches decide_pair on adjacent singletons") {
        CHECK(zelevinsky_class(p0) ==
              RElem::basis(label({seg(0, 0), seg(1, 1)})) - RElem::basis(label({seg(0, 1)})));
        CHECK(zelevinsky_class(p0) == decide_pair(seg(0, 0), seg(1, 1)).langlands_class);
    }
    SECTION("single ascending word") {
        WordSum words = cuspidal_jacquet(zelevinsky_class(p0));
        REQUIRE(words.terms().size() == 1);
        Word ascending{Point{0, Rational(0)}, Point{0, Rational(1)}};
        CHECK(words.coeff(ascending) == 1);
    }
    SECTION("twist equivariance") {
        Point p1{0, Rational(1)};
        CHECK(twist(zelevinsky_class(p0), Rational(1)) == zelevinsky_class(p1));
    }
}

TEST_CASE("tempered_product_class") {
    SECTION("repeated unitary segment") {
        Segment half(0, Rational(-1, 2), Rational(1, 2));
        Multisegment m = tempered_product_class(table(), {half, half});
        CHECK(m.size() == 2);
    }
    SECTION("distinct unitary segments, any order") {
        Segment big = seg(-1, 1), small = seg(0, 0);
        CHECK(tempered_product_class(table(), {big, small}) ==
              tempered_product_class(table(), {small, big}));
    }
    SECTION("non-unitary entry rejected") {
        CHECK_THROWS_AS(tempered_product_class(table(), {seg(0, 1)}), DomainError);
    }
}

TEST_CASE("nonlinked_product_class") {
    // Pairwise non-linked: nested, disjoint with a gap, equal.
    Multisegment m =
        nonlinked_product_class({seg(-1, 1), seg(0, 0), seg(3, 3), seg(3, 3)});
    CHECK(m.size() == 4);
    CHECK_THROWS_AS(nonlinked_product_class({seg(0, 0), seg(1, 1)}), DomainError);
    CHECK_THROWS_AS(nonlinked_product_class({seg(-1, 1), seg(0, 0), seg(1, 2)}), DomainError);
}

TEST_CASE("classify_square_integrable") {
    auto pts = [](std::initializer_list<Rational> exps) {
        PointMultiset points;
        for (const Rational& e : exps) ++points[Point{0, e}];
        return points;
    };
    SECTION("self-dual chain") {
        SIClassification r =
            classify_square_integrable(table(), pts({Rational(-1, 2), Rational(1, 2)}));
        REQUIRE(r.segment);
        CHECK(*r.segment == Segment(0, Rational(-1, 2), Rational(1, 2)));
        CHECK_FALSE(r.essentially_only);
    }
    SECTION("gap") {
        SIClassification r = classify_square_integrable(table(), pts({0, 2}));
        CHECK_FALSE(r.segment);
        CHECK_FALSE(r.essentially_only);
    }
    SECTION("chain that is not self-dual") {
        SIClassification r = classify_square_integrable(table(), pts({0, 1}));
        CHECK_FALSE(r.segment);
        CHECK(r.essentially_only);
    }
    SECTION("repetition") {
        SIClassification r = classify_square_integrable(table(), pts({0, 0}));
        CHECK_FALSE(r.segment);
        CHECK_FALSE(r.essentially_only);
    }
    SECTION("misaligned points") {
        SIClassification r = classify_square_integrable(table(), pts({0, Rational(1, 2)}));
        CHECK_FALSE(r.segment);
        CHECK_FALSE(r.essentially_only);
    }
    SECTION("multi-line input returns none") {
        LineTable two({Line{"a", 1, Rational(1), "a"}, Line{"b", 1, Rational(1), "b"}});
        PointMultiset points;
        ++points[Point{0, Rational(0)}];
        ++points[Point{1, Rational(0)}];
        SIClassification r = classify_square_integrable(two, points);
        CHECK_FALSE(r.segment);
        CHECK_FALSE(r.essentially_only);
    }
    SECTION("line whose dual is a different line is never self-dual") {
        LineTable two({Line{"a", 1, Rational(1), "b"}, Line{"b", 1, Rational(1), "a"}});
        PointMultiset points;
        ++points[Point{0, Rational(0)}];
        SIClassification r = classify_square_integrable(two, points);
        CHECK_FALSE(r.segment);
        CHECK(r.essentially_only);
    }
    SECTION("empty multiset rejected") {
        CHECK_THROWS_AS(classify_square_integrable(table(), PointMultiset{}), DomainError);
    }
    SECTION("positive answers pass the Casselman criterion") {
        SIClassification r =
            classify_square_integrable(table(), pts({Rational(-1), Rational(0), Rational(1)}));
        REQUIRE(r.segment);
        CHECK(casselman(table(), descending_word(*r.segment)).square_integrable);
    }
}

TEST_CASE("linked pair word-level shadows") {
    SECTION("adjacent singleton pair") {
        PairDecision d = decide_pair(seg(0, 0), seg(1, 1));
        WordSum l_words = cuspidal_jacquet(d.langlands_class);
        REQUIRE(l_words.terms().size() == 1);
        Word ascending{Point{0, Rational(0)}, Point{0, Rational(1)}};
        CHECK(l_words.coeff(ascending) == 1);
    }
    SECTION("overlapping pair") {
        PairDecision d = decide_pair(seg(0, 1), seg(1, 2));
        CHECK(cuspidal_jacquet(d.langlands_class).is_nonnegative());
        CHECK(WordSum::dominates(cuspidal_jacquet(RElem::basis(*d.other_summand)),
                                 cuspidal_jacquet(RElem::basis(d.class_label))));
    }
}
