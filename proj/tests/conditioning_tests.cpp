#include <algorithm>
#include <random>

#include "doctest.h"

#include "accfn/acceptance.hpp"
#include "accfn/conditioning.hpp"
#include "accfn/errors.hpp"
#include "accfn/measures.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace accfn;

namespace {

ProbabilityDistribution nonacc_prob() {
    return {gen::universe(3), {Rational(2, 5), Rational(7, 20), Rational(1, 4)}};
}

ProbabilityDistribution majority_prob() {
    return {gen::universe(4),
            {Rational(13, 25), Rational(17, 100), Rational(4, 25), Rational(3, 20)}};
}

PossibilityDistribution ladder_poss() {
    return {gen::universe(3), {Rational(1), Rational(1, 2), Rational(1, 5)}};
}

}  // namespace

TEST_CASE("conditioned base matches the direct definition on random inputs") {
    for (unsigned n = 2; n <= 5; ++n) {
        Universe u = gen::universe(n);
        for (std::uint64_t seed = 200; seed < 230; ++seed) {
            SetFunction f = random_confidence(u, seed);
            for (std::uint32_t c = 1; c < u.table_size(); ++c) {
                std::vector<Event> base = conditioned_base(f, u.event_from_bits(c));
                std::vector<std::uint32_t> naive = oracle::conditioned_base_naive(f, c);
                REQUIRE(base.size() == naive.size());
                for (std::size_t i = 0; i < base.size(); ++i) {
                    CHECK(base[i].bits() == naive[i]);
                }
            }
        }
    }
}

TEST_CASE("conditioned bases are up-closed for every context") {
    for (unsigned n = 2; n <= 5; ++n) {
        Universe u = gen::universe(n);
        for (std::uint64_t seed = 300; seed < 320; ++seed) {
            SetFunction f = random_confidence(u, seed);
            const std::uint32_t full = u.full_event().bits();
            for (std::uint32_t c = 1; c <= full; ++c) {
                std::vector<char> flag(u.table_size(), 0);
                for (Event e : conditioned_base(f, u.event_from_bits(c))) flag[e.bits()] = 1;
                for (std::uint32_t a = 0; a <= full; ++a) {
                    if (!flag[a]) continue;
                    for (std::uint32_t b = a; b <= full; ++b) {
                        if ((a & b) == a) CHECK(flag[b]);
                    }
                }
            }
        }
    }
}

TEST_CASE("conditioning on the full universe reproduces the plain accepted set") {
    Universe u = gen::universe(4);
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        SetFunction f = random_confidence(u, seed);
        std::vector<Event> base = conditioned_base(f, u.full_event());
        CHECK(base == accepted_set(f));
    }
}

TEST_CASE("empty contexts are rejected") {
    Universe u = gen::universe(2);
    SetFunction f = random_confidence(u, 9);
    CHECK_THROWS_AS(conditioned_base(f, u.empty_event()), EmptyContext);
    CHECK_THROWS_AS(is_conditioned_base_belief_set(f, u.empty_event()), EmptyContext);
    CHECK_THROWS_AS(is_independent(f, u.singleton(0), u.empty_event()), EmptyContext);
}

TEST_CASE("property A and property B always return the same verdict") {
    for (unsigned n = 2; n <= 5; ++n) {
        Universe u = gen::universe(n);
        for (std::uint64_t seed = 400; seed < 425; ++seed) {
            SetFunction f = random_confidence(u, seed);
            auto [a, b] = check_both_properties(f);
            CHECK(a.exhaustive);
            CHECK(b.exhaustive);
            CHECK(a.holds == b.holds);
            REQUIRE(b.agrees_with_property_a);
            CHECK(*b.agrees_with_property_a);
        }
    }
}

TEST_CASE("property counterexamples satisfy their defining inequalities") {
    for (unsigned n = 3; n <= 5; ++n) {
        Universe u = gen::universe(n);
        for (std::uint64_t seed = 500; seed < 520; ++seed) {
            SetFunction f = random_confidence(u, seed);
            PropertyReport a = check_property_A(f);
            if (!a.holds) {
                REQUIRE(a.counterexample);
                auto [c, s, t] = *a.counterexample;
                const std::uint32_t cb = c.bits(), sb = s.bits(), tb = t.bits();
                const std::uint32_t full = u.full_event().bits();
                CHECK(f.at_bits(sb & cb) > f.at_bits((full & ~sb) & cb));
                CHECK(f.at_bits(tb & cb) > f.at_bits((full & ~tb) & cb));
                CHECK(f.at_bits(sb & tb & cb) <=
                      f.at_bits(((full & ~sb) | (full & ~tb)) & cb));
            }
            PropertyReport b = check_property_B(f);
            if (!b.holds) {
                REQUIRE(b.counterexample);
                auto [ea, eb, ee] = *b.counterexample;
                CHECK((ea.bits() & eb.bits()) == 0);
                CHECK((ea.bits() & ee.bits()) == 0);
                CHECK((eb.bits() & ee.bits()) == 0);
                CHECK(f.at_bits(ea.bits() | ee.bits()) > f.at(eb));
                CHECK(f.at_bits(eb.bits() | ee.bits()) > f.at(ea));
                CHECK(f.at(ee) <= f.at_bits(ea.bits() | eb.bits()));
            }
        }
    }
}

TEST_CASE("fixed counterexamples for the no-majority probability") {
    SetFunction p = from_probability(nonacc_prob());
    PropertyReport a = check_property_A(p);
    CHECK(!a.holds);
    REQUIRE(a.counterexample);
    CHECK((*a.counterexample)[0].bits() == 7);
    CHECK((*a.counterexample)[1].bits() == 3);
    CHECK((*a.counterexample)[2].bits() == 5);
    REQUIRE(a.witness_values.size() == 6);
    CHECK(a.witness_values[0] == Rational(3, 4));
    CHECK(a.witness_values[4] == Rational(2, 5));
    CHECK(a.witness_values[5] == Rational(3, 5));

    PropertyReport b = check_property_B(p);
    CHECK(!b.holds);
    REQUIRE(b.counterexample);
    CHECK((*b.counterexample)[0].bits() == 1);
    CHECK((*b.counterexample)[1].bits() == 2);
    CHECK((*b.counterexample)[2].bits() == 4);
}

TEST_CASE("possibility measures tolerate every context") {
    std::mt19937_64 rng(47);
    for (int trial = 0; trial < 60; ++trial) {
        Universe u = gen::universe(2 + trial % 4);
        auto [pi, n] = from_possibility(gen::random_poss(rng, u));
        CHECK(check_property_B(pi).holds);
        const std::uint32_t full = u.full_event().bits();
        for (std::uint32_t c = 1; c <= full; ++c) {
            if (pi.at_bits(c).is_zero()) continue;
            ConditionedReport r = is_conditioned_base_belief_set(pi, u.event_from_bits(c));
            CHECK(r.is_belief_set);
            CHECK(r.conditioned_kernel.has_value());
        }
    }
}

TEST_CASE("majority probability loses closure under the minority context") {
    Universe u = majority_prob().universe;
    SetFunction p = from_probability(majority_prob());
    Event context = u.event_from_bits(0b1110);
    ConditionedReport r = is_conditioned_base_belief_set(p, context);
    CHECK(r.base_size == 8);
    CHECK(!r.is_belief_set);
    REQUIRE(r.violation_witness);
    CHECK(r.violation_witness->first.bits() == 0b0110);
    CHECK(r.violation_witness->second.bits() == 0b1010);
    CHECK(!r.conditioned_kernel);

    PropertyReport b = check_property_B(p);
    CHECK(!b.holds);
    REQUIRE(b.counterexample);
}

TEST_CASE("update classification: expansion, revision, undefined") {
    auto [pi, n] = from_possibility(ladder_poss());
    Universe u = pi.universe();

    UpdateReport expansion = classify_update(pi, u.event_from_bits(3));
    CHECK(expansion.kind == UpdateClass::Expansion);
    REQUIRE(expansion.conditioned_kernel);
    CHECK(*expansion.conditioned_kernel == u.singleton(0));

    UpdateReport revision = classify_update(pi, u.event_from_bits(6));
    CHECK(revision.kind == UpdateClass::Revision);

    auto [crisp_pi, crisp_n] = from_possibility({u, {Rational(1), Rational(1, 2), Rational(0)}});
    UpdateReport undefined = classify_update(crisp_pi, u.event_from_bits(4));
    CHECK(undefined.kind == UpdateClass::Undefined);
    CHECK(!undefined.conditioned_kernel);

    CHECK_THROWS_AS(classify_update(from_probability(nonacc_prob()), u.event_from_bits(1)),
                    NotAcceptanceFunction);
}

TEST_CASE("revision context nested tighter than the old kernel stays a revision") {
    // kernel {w2}; context disjoint from it with positive confidence
    Universe u({"w1", "w2", "w3", "w4"});
    Skeleton s{u, u.event_from_bits(2), {}, {}, Rational(0)};
    s.upper = {{2, Rational(1, 2)},  {3, Rational(3, 5)},   {6, Rational(3, 5)},
               {10, Rational(1, 2)}, {7, Rational(4, 5)},   {11, Rational(7, 10)},
               {14, Rational(3, 5)}, {15, Rational(1)}};
    s.lower = {{0, Rational(0)},     {1, Rational(1, 5)},  {4, Rational(1, 5)},
               {8, Rational(1, 5)},  {5, Rational(2, 5)},  {9, Rational(2, 5)},
               {12, Rational(2, 5)}, {13, Rational(2, 5)}};
    SetFunction g = build_from_skeleton(s);
    UpdateReport r = classify_update(g, u.event_from_bits(13));
    CHECK(r.kind == UpdateClass::Revision);
    UpdateReport e = classify_update(g, u.event_from_bits(14));
    CHECK(e.kind == UpdateClass::Expansion);
    REQUIRE(e.conditioned_kernel);
    CHECK(e.conditioned_kernel->bits() == 2);
}

TEST_CASE("bayes conditioning renormalizes exactly") {
    ProbabilityDistribution d{gen::universe(3),
                              {Rational(3, 5), Rational(1, 4), Rational(3, 20)}};
    Universe u = d.universe;
    ProbabilityDistribution c = condition_probability(d, u.event_from_bits(6));
    CHECK(c.p[0] == Rational(0));
    CHECK(c.p[1] == Rational(5, 8));
    CHECK(c.p[2] == Rational(3, 8));

    ProbabilityDistribution zero{u, {Rational(1), Rational(0), Rational(0)}};
    CHECK_THROWS_AS(condition_probability(zero, u.event_from_bits(6)),
                    ZeroProbabilityContext);
}

TEST_CASE("possibilistic conditioning lifts the context maximum to one") {
    PossibilityDistribution d = ladder_poss();
    Universe u = d.universe;
    Event context = u.event_from_bits(6);

    auto [cpi, cn] = condition_possibility(d, context);
    CHECK(cpi.at_bits(2) == Rational(1));
    CHECK(cpi.at_bits(4) == Rational(1, 5));
    CHECK(cn.at_bits(2) == Rational(4, 5));
    CHECK(validate_confidence(cpi).ok);

    PossibilityDistribution cd = condition_possibility_distribution(d, context);
    CHECK(cd.pi == std::vector<Rational>{Rational(0), Rational(1), Rational(1, 5)});
    auto [cpi2, cn2] = from_possibility(cd);
    CHECK(cpi2 == cpi);

    PossibilityDistribution crisp{u, {Rational(1), Rational(1, 2), Rational(0)}};
    CHECK_THROWS_AS(condition_possibility(crisp, u.event_from_bits(4)),
                    ZeroPossibilityContext);
}

TEST_CASE("conditioning Pi and conditioning N accept different events") {
    PossibilityDistribution d = ladder_poss();
    auto [pi, n] = from_possibility(d);
    Universe u = d.universe;
    Event context = u.event_from_bits(6);
    Event a = u.event_from_bits(2);

    std::vector<Event> pi_base = conditioned_base(pi, context);
    std::vector<Event> n_base = conditioned_base(n, context);
    const bool in_pi = std::find(pi_base.begin(), pi_base.end(), a) != pi_base.end();
    const bool in_n = std::find(n_base.begin(), n_base.end(), a) != n_base.end();
    CHECK(in_pi);
    CHECK(!in_n);
}

TEST_CASE("independence separates stable events from context-sensitive ones") {
    SetFunction p = from_probability({gen::universe(3),
                                      {Rational(3, 5), Rational(1, 4), Rational(3, 20)}});
    Universe u = p.universe();
    CHECK(is_independent(p, u.singleton(0), u.event_from_bits(3)));
    CHECK(!is_independent(p, u.singleton(0), u.event_from_bits(6)));
    CHECK(!is_independent(p, u.singleton(1), u.event_from_bits(3)));
}

TEST_CASE("sweep options control exhaustive and sampled modes") {
    Universe u = gen::universe(4);
    SetFunction f = random_confidence(u, 77);

    SweepOptions tight;
    tight.max_exhaustive = 3;
    CHECK_THROWS_AS(check_property_A(f, tight), UniverseTooLargeForExhaustive);
    CHECK_THROWS_AS(check_property_B(f, tight), UniverseTooLargeForExhaustive);

    tight.samples = 500;
    PropertyReport a = check_property_A(f, tight);
    CHECK(!a.exhaustive);
    CHECK(a.cases_checked <= 500);
    if (a.holds) CHECK(a.cases_checked == 500);

    PropertyReport again = check_property_A(f, tight);
    CHECK(again.holds == a.holds);
    CHECK(again.cases_checked == a.cases_checked);
}
