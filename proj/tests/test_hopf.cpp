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

RElem basis(std::initializer_list<Segment> entries) { return RElem::basis(label(entries)); }

Word word(std::initializer_list<long long> exps) {
    Word w;
    for (long long e : exps) w.push_back(Point{0, Rational(e)});
    return w;
}

}  // namespace

TEST_CASE("mstar_segment expansions") {
    SECTION("two-point segment") {
        TensorElem expected(2);
        expected.add_term({label({seg(0, 1)}), Multisegment()}, 1);
        expected.add_term({label({seg(1, 1)}), label({seg(0, 0)})}, 1);
        expected.add_term({Multisegment(), label({seg(0, 1)})}, 1);
        CHECK(mstar_segment(seg(0, 1)) == expected);
    }
    SECTION("cuspidal point") {
        TensorElem expected(2);
        expected.add_term({label({seg(0, 0)}), Multisegment()}, 1);
        expected.add_term({Multisegment(), label({seg(0, 0)})}, 1);
        CHECK(mstar_segment(seg(0, 0)) == expected);
    }
    SECTION("three-point segment: upper parts on the left") {
        TensorElem t = mstar_segment(seg(0, 2));
        REQUIRE(t.terms().size() == 4);
        TensorElem expected(2);
        expected.add_term({label({seg(0, 2)}), Multisegment()}, 1);
        expected.add_term({label({seg(1, 2)}), label({seg(0, 0)})}, 1);
        expected.add_term({label({seg(2, 2)}), label({seg(0, 1)})}, 1);
        expected.add_term({Multisegment(), label({seg(0, 2)})}, 1);
        CHECK(t == expected);
    }
    SECTION("k+2 coefficient-1 terms for any window segment") {
        for (const Segment& d : enumerate_segments(table(), InstanceWindow{})) {
            TensorElem t = mstar_segment(d);
            CHECK(static_cast<long long>(t.terms().size()) == d.num_points() + 1);
            for (const auto& [tuple, c] : t.terms()) {
                CHECK(c == 1);
                // Left factor is the upper part: its points all exceed the
                // right factor's, and the pieces reassemble the segment.
                if (!tuple[0].empty() && !tuple[1].empty())
                    CHECK(tuple[0].entries().front().start ==
                          tuple[1].entries().front().end + 1);
            }
        }
    }
}

TEST_CASE("product of classes") {
    Multisegment d1 = label({seg(0, 1)});
    Multisegment d2 = label({seg(2, 2)});
    CHECK(RElem::basis(d1) * RElem::basis(d2) == RElem::basis(d1.concat(d2)));
    CHECK((2 * RElem::basis(d1)) * (3 * RElem::basis(d2)) == 6 * RElem::basis(d1.concat(d2)));

    SECTION("commutative and associative on window segments") {
        InstanceWindow w;
        w.max_segment_points = 2;
        auto segments = enumerate_segments(table(), w);
        for (std::size_t i = 0; i < segments.size(); i += 2)
            for (std::size_t j = i; j < segments.size(); j += 3) {
                RElem a = basis({segments[i]});
                RElem b = basis({segments[j]});
                CHECK(a * b == b * a);
                CHECK((a * b) * a == a * (b * a));
            }
    }
    SECTION("unit") {
        CHECK(RElem::unit() * basis({seg(0, 1)}) == basis({seg(0, 1)}));
    }
}

TEST_CASE("mstar on labels") {
    SECTION("hand expansion of a two-point label") {
        // (p0 (x) 1 + 1 (x) p0)(p1 (x) 1 + 1 (x) p1)
        TensorElem expected(2);
        expected.add_term({label({seg(0, 0), seg(1, 1)}), Multisegment()}, 1);
        expected.add_term({label({seg(0, 0)}), label({seg(1, 1)})}, 1);
        expected.add_term({label({seg(1, 1)}), label({seg(0, 0)})}, 1);
        expected.add_term({Multisegment(), label({seg(0, 0), seg(1, 1)})}, 1);
        CHECK(mstar(basis({seg(0, 0), seg(1, 1)})) == expected);
    }
    SECTION("unit") {
        TensorElem expected(2);
        expected.add_term({Multisegment(), Multisegment()}, 1);
        CHECK(mstar(RElem::unit()) == expected);
    }
    SECTION("extreme components appear once") {
        Multisegment m = label({seg(0, 1), seg(1, 1)});
        TensorElem t = mstar(RElem::basis(m));
        CHECK(t.coeff({Multisegment(), m}) == 1);
        CHECK(t.coeff({m, Multisegment()}) == 1);
    }
    SECTION("linear in the argument") {
        RElem x = basis({seg(0, 1)}) - 2 * basis({seg(1, 1)});
        CHECK(mstar(x) == mstar(basis({seg(0, 1)})) - (mstar(2 * basis({seg(1, 1)}))));
    }
    SECTION("tensor terms split the degree") {
        Multisegment m = label({seg(0, 2), seg(-1, 0)});
        TensorElem t = mstar(RElem::basis(m));
        for (const auto& [tuple, c] : t.terms())
            CHECK(degree(table(), tuple[0]) + degree(table(), tuple[1]) == degree(table(), m));
    }
}

TEST_CASE("comult_iterate") {
    SECTION("arity 3 terms of a two-point segment") {
        TensorElem t = comult_iterate(basis({seg(0, 1)}), 3);
        CHECK(t.coeff({label({seg(1, 1)}), label({seg(0, 0)}), Multisegment()}) == 1);
        CHECK(t.coeff({Multisegment(), label({seg(1, 1)}), label({seg(0, 0)})}) == 1);
    }
    SECTION("arity 1 is the identity") {
        RElem x = basis({seg(0, 1)}) + 3 * basis({seg(-1, 0)});
        CHECK(comult_iterate(x, 1) == TensorElem::from_relem(x));
    }
    SECTION("bracketings agree") {
        InstanceWindow w;
        w.max_segment_points = 2;
        w.max_factors = 2;
        for (const Multisegment& m : enumerate_labels(table(), w)) {
            RElem x = RElem::basis(m);
            CHECK(comult_iterate_left(x, 3) == comult_iterate(x, 3));
        }
    }
    SECTION("invalid arity") {
        CHECK_THROWS_AS(comult_iterate(RElem::unit(), 0), DomainError);
    }
}

TEST_CASE("cuspidal_jacquet") {
    SECTION("descending word of a segment") {
        WordSum words = cuspidal_jacquet(basis({seg(0, 1)}));
        REQUIRE(words.terms().size() == 1);
        CHECK(words.coeff(word({1, 0})) == 1);
    }
    SECTION("shuffle with a cuspidal point") {
        WordSum words = cuspidal_jacquet(basis({seg(0, 1), seg(1, 1)}));
        CHECK(words.coeff(word({1, 0, 1})) == 1);
        CHECK(words.coeff(word({1, 1, 0})) == 2);
        CHECK(words.terms().size() == 2);
    }
    SECTION("repeated singleton") {
        WordSum words = cuspidal_jacquet(basis({seg(0, 0), seg(0, 0)}));
        REQUIRE(words.terms().size() == 1);
        CHECK(words.coeff(word({0, 0})) == 2);
    }
    SECTION("empty label gives the empty word") {
        WordSum words = cuspidal_jacquet(RElem::unit());
        CHECK(words.coeff(Word{}) == 1);
    }
    SECTION("word count is the multinomial of the segment lengths") {
        // 5 letters split 2+2+1: 5!/(2!2!1!) = 30.
        WordSum words = cuspidal_jacquet(basis({seg(0, 1), seg(2, 3), seg(0, 0)}));
        long long total = 0;
        for (const auto& [w, c] : words.terms()) {
            CHECK(c > 0);
            CHECK(w.size() == 5);
            total += c;
        }
        CHECK(total == 30);
    }
    SECTION("word degree equals label degree") {
        Multisegment m = label({seg(0, 1), seg(-1, -1)});
        WordSum words = cuspidal_jacquet(RElem::basis(m));
        for (const auto& [w, c] : words.terms())
            CHECK(degree(table(), w) == degree(table(), m));
    }
}

TEST_CASE("filter") {
    SECTION("bottom of a single segment") {
        TensorElem expected(2);
        expected.add_term({label({seg(1, 1)}), label({seg(0, 0)})}, 1);
        CHECK(mstar_bottom(basis({seg(0, 1)})) == expected);
    }
    SECTION("bottom of a disjoint non-linked pair") {
        Segment d1 = seg(0, 1), d2 = seg(3, 4);
        TensorElem expected(2);
        expected.add_term({label({seg(1, 1), d2}), label({seg(0, 0)})}, 1);
        expected.add_term({label({d1, seg(4, 4)}), label({seg(3, 3)})}, 1);
        CHECK(mstar_bottom(basis({d1, d2})) == expected);
    }
    SECTION("left-equals keeps exactly one term") {
        Segment d1 = seg(-1, 1), d2 = seg(0, 0);
        TensorElem kept = filter(basis({d1, d2}), FilterSpec::left_equals(label({d1})));
        TensorElem expected(2);
        expected.add_term({label({d1}), label({d2})}, 1);
        CHECK(kept == expected);
    }
    SECTION("right-equals") {
        TensorElem kept =
            filter(basis({seg(0, 1)}), FilterSpec::right_equals(label({seg(0, 0)})));
        TensorElem expected(2);
        expected.add_term({label({seg(1, 1)}), label({seg(0, 0)})}, 1);
        CHECK(kept == expected);
    }
    SECTION("supp-profile restricts componentwise supports") {
        RElem x = basis({seg(0, 1)});
        std::vector<PointMultiset> profile{supp(label({seg(1, 1)})), supp(label({seg(0, 0)}))};
        TensorElem kept = filter(x, FilterSpec::supp_profile(profile));
        TensorElem expected(2);
        expected.add_term({label({seg(1, 1)}), label({seg(0, 0)})}, 1);
        CHECK(kept == expected);
    }
    SECTION("arity mismatch rejected") {
        TensorElem t = comult_iterate(basis({seg(0, 1)}), 3);
        CHECK_THROWS_AS(filter(t, FilterSpec::bottom()), DomainError);
        CHECK_THROWS_AS(filter(t, FilterSpec::supp_profile({PointMultiset{}, PointMultiset{}})),
                        DomainError);
    }
}

TEST_CASE("iterated words agree with shuffles on sample labels") {
    CHECK(cuspidal_jacquet(basis({seg(0, 1), seg(1, 1)})) ==
          cuspidal_jacquet_iterated(basis({seg(0, 1), seg(1, 1)})));
    CHECK(cuspidal_jacquet(basis({seg(-1, 1), seg(0, 0), seg(0, 1)})) ==
          cuspidal_jacquet_iterated(basis({seg(-1, 1), seg(0, 0), seg(0, 1)})));
}
