#include <edgemetric/metrics.hpp>
#include <edgemetric/oracle.hpp>

#include "support/examples.hpp"
#include "support/generators.hpp"

#include <gtest/gtest.h>

#include <functional>
#include <random>
#include <tuple>

namespace em = edgemetric;
using em::rational;

namespace {

rational r(std::int64_t p, std::int64_t q = 1) { return rational(p, q); }

em::errc code_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const em::error& e) {
        return e.code();
    }
    ADD_FAILURE() << "expected an edgemetric::error";
    return em::errc::precondition_violated;
}

// 2T(∪) - T1 - T2 expanded term by term, exactly as the displayed identity
// reads: triangles in exactly one Q_s once, plus twice every triangle with
// two sides in some Q_s and the third in Q_t - Q_s.
std::size_t literal_triangle_expansion(const em::contact_structure& a, const em::contact_structure& b) {
    const auto joined = em::union_of(a, b);
    std::size_t total = 0;
    const auto n = static_cast<em::node_t>(a.length());
    for (em::node_t i = 1; i <= n; ++i) {
        for (em::node_t j = i + 1; j <= n; ++j) {
            for (em::node_t k = j + 1; k <= n; ++k) {
                const em::contact sides[3] = {{i, j}, {j, k}, {i, k}};
                if (!joined.contains(sides[0]) || !joined.contains(sides[1]) || !joined.contains(sides[2])) {
                    continue;
                }
                const bool all1 = a.contains(sides[0]) && a.contains(sides[1]) && a.contains(sides[2]);
                const bool all2 = b.contains(sides[0]) && b.contains(sides[1]) && b.contains(sides[2]);
                total += all1 != all2 ? 1 : 0;
                for (int odd = 0; odd < 3; ++odd) {
                    const auto& p = sides[(odd + 1) % 3];
                    const auto& q = sides[(odd + 2) % 3];
                    const auto& t = sides[odd];
                    if ((a.contains(p) && a.contains(q) && b.contains(t) && !a.contains(t)) ||
                        (b.contains(p) && b.contains(q) && a.contains(t) && !b.contains(t))) {
                        total += 2;
                        break;
                    }
                }
            }
        }
    }
    return total;
}

} // namespace

TEST(Golden, NineNodeFamily) {
    const auto g = em::testing::nine_node_family();
    const std::array<rational, 7> d3{r(1), r(1), r(1), r(2), r(2), r(2), r(2)};
    const std::array<rational, 7> d4{r(1), r(9, 10), r(4, 5), r(9, 5), r(17, 10), r(19, 10), r(2)};
    for (std::size_t k = 1; k < g.size(); ++k) {
        EXPECT_EQ(em::d(g[0], g[k], 3), d3[k - 1]) << "k=" << k;
        EXPECT_EQ(em::d(g[0], g[k], 4), d4[k - 1]) << "k=" << k;
        EXPECT_EQ(em::d(g[0], g[k], 4, {true}), d4[k - 1]) << "k=" << k;
    }
}

TEST(Golden, AuHairpins) {
    const auto g = em::testing::au_hairpins();
    for (bool forced : {false, true}) {
        EXPECT_EQ(em::d(g[0], g[1], 3, {forced}), r(12));
        EXPECT_EQ(em::d(g[0], g[2], 3, {forced}), r(12));
        EXPECT_EQ(em::d(g[1], g[2], 3, {forced}), r(12));
        EXPECT_EQ(em::d(g[0], g[1], 4, {forced}), r(184, 17));
        EXPECT_EQ(em::d(g[0], g[2], 4, {forced}), r(182, 17));
        EXPECT_EQ(em::d(g[1], g[2], 4, {forced}), r(182, 17));
    }
}

TEST(Golden, InteriorLoopHairpin) {
    const em::testing::hairpin_family h;
    EXPECT_EQ(em::d(h.base, h.split, 3), r(2));
    EXPECT_EQ(em::d(h.base, h.bulge1, 3), r(2));
    EXPECT_EQ(em::d(h.base, h.multibranch, 3), r(4));
    EXPECT_EQ(em::d(h.base, h.bulge2, 3), r(4));
    EXPECT_EQ(em::d(h.base, h.split, 4), r(21, 11));
    EXPECT_EQ(em::d(h.base, h.bulge1, 4), r(21, 11));
    EXPECT_EQ(em::d(h.base, h.multibranch, 4), r(42, 11));
    EXPECT_EQ(em::d(h.base, h.bulge2, 4), r(41, 11));
    EXPECT_EQ(em::d(h.trimmed_base, h.trimmed_split, 4), r(21, 11));
}

TEST(Golden, InteriorLoopHairpinD5) {
    // These strings share 5 and 3 contacts; enumeration gives 1 + 199/253 and
    // 1 + 203/253, two less than the values quoted alongside them.
    const em::testing::hairpin_family h;
    EXPECT_EQ(em::common_contacts(h.base, h.split).size(), 5u);
    EXPECT_EQ(em::common_contacts(h.trimmed_base, h.trimmed_split).size(), 3u);
    const em::enumeration_budget budget;
    for (const auto& [a, b, expected] : {std::tuple{&h.base, &h.split, r(452, 253)},
                                         std::tuple{&h.trimmed_base, &h.trimmed_split, r(456, 253)}}) {
        EXPECT_EQ(em::d(*a, *b, 5), expected);
        EXPECT_EQ(em::d(*a, *b, 5, {true}), expected);
        EXPECT_EQ(rational(em::symdiff_monomial_count(*a, *b, 5, budget), em::normalizer(21, 5)), expected);
    }
    // fewer shared contacts, larger d5
    EXPECT_LT(em::d(h.base, h.split, 5), em::d(h.trimmed_base, h.trimmed_split, 5));
}

TEST(Golden, FifteenNodeTriple) {
    const auto g = em::testing::fifteen_node_triple();
    for (bool forced : {false, true}) {
        EXPECT_EQ(em::d(g[0], g[1], 3, {forced}), r(7));
        EXPECT_EQ(em::d(g[0], g[2], 3, {forced}), r(7));
        EXPECT_EQ(em::d(g[0], g[1], 4, {forced}), r(25, 4));
        EXPECT_EQ(em::d(g[0], g[2], 4, {forced}), r(25, 4));
        EXPECT_EQ(em::d(g[0], g[1], 5, {forced}), r(5) + r(71, 136));
        EXPECT_EQ(em::d(g[0], g[2], 5, {forced}), r(5) + r(69, 136));
        EXPECT_EQ(em::d(g[0], g[1], 6, {forced}), r(165, 34));
    }
}

TEST(Golden, TrianglePair) {
    const auto [g1, g2] = em::testing::triangle_pair();
    EXPECT_EQ(em::evaluate(g1, g2, 3).raw, 2);
    EXPECT_EQ(em::d(g1, g2, 4), r(5, 3));
    EXPECT_EQ(em::d(g1, g2, 4, {true}), r(5, 3));
    EXPECT_EQ(em::d4_closed_general(g1, g2), r(5, 3));
}

TEST(Normalization, EmptyVersusSingleContactIsOne) {
    for (std::size_t n = 3; n <= 20; ++n) {
        const auto empty = em::contact_structure::empty(n);
        const auto single = em::validate(n, {{1, 3}});
        for (std::uint64_t m = 3; m <= 8; ++m) {
            const auto v = em::evaluate(empty, single, m);
            EXPECT_EQ(v.normalized, r(1)) << "n=" << n << " m=" << m;
            EXPECT_EQ(v.raw, em::normalizer(n, m));
            EXPECT_EQ(v.raw, em::binom(static_cast<std::int64_t>(n + m - 3), static_cast<std::int64_t>(n)));
        }
    }
}

TEST(Normalization, LengthSensitivity) {
    for (std::int64_t n = 6; n <= 15; ++n) {
        const auto empty = em::contact_structure::empty(n);
        const auto two = em::validate(n, {{1, 3}, {4, 6}});
        for (std::int64_t m = 5; m <= 7; ++m) {
            const rational expected = r(2) - r((m - 3) * (m - 4), (n + m - 3) * (n + m - 4));
            EXPECT_EQ(em::d(empty, two, m), expected) << "n=" << n << " m=" << m;
            EXPECT_EQ(em::d(empty, two, m, {true}), expected);
        }
    }
}

TEST(ClosedForms, AgreeWithHilbertExhaustively) {
    for (std::size_t n = 3; n <= 6; ++n) {
        const auto all = em::testing::all_secondary_structures(n);
        for (const auto& a : all) {
            for (const auto& b : all) {
                const auto norm = [&](std::uint64_t m) { return em::normalizer(n, m); };
                EXPECT_EQ(rational(em::d_prime(a, b, 3), norm(3)), em::d3_closed(a, b));
                EXPECT_EQ(rational(em::d_prime(a, b, 4), norm(4)), em::d4_closed_rna(a, b));
                EXPECT_EQ(rational(em::d_prime(a, b, 4), norm(4)), em::d4_closed_general(a, b));
                EXPECT_EQ(rational(em::d_prime(a, b, 5), norm(5)), em::d5_closed_rna(a, b));
                EXPECT_EQ(rational(em::d_prime(a, b, 6), norm(6)), em::d6_closed_rna(a, b));
            }
        }
    }
}

TEST(ClosedForms, AgreeWithHilbertOnLargerRandomPairs) {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 150; ++trial) {
        const std::size_t n = 10 + trial % 21;
        const auto a = em::testing::random_secondary(rng, n, 0.6);
        const auto b = em::testing::random_secondary(rng, n, 0.6);
        for (std::uint64_t m = 3; m <= 6; ++m) {
            EXPECT_EQ(em::d(a, b, m), em::d(a, b, m, {true})) << "m=" << m;
        }
    }
}

TEST(ClosedForms, D6CounterexampleToUncorrectedForm) {
    // the uncorrected expression gives 197/84 here
    const auto a = em::validate(6, {{1, 4}});
    const auto b = em::validate(6, {{2, 5}, {4, 6}});
    EXPECT_EQ(em::symdiff_monomial_count(a, b, 6), 177);
    EXPECT_EQ(em::d6_closed_rna(a, b), r(59, 28));
}

TEST(ClosedForms, GeneralD4OnArbitraryPairs) {
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t n = 3 + trial % 12;
        const auto a = em::testing::random_arbitrary(rng, n, 0.4);
        const auto b = em::testing::random_arbitrary(rng, n, 0.4);
        EXPECT_EQ(em::d4_closed_general(a, b), rational(em::d_prime(a, b, 4), em::normalizer(n, 4)))
            << em::to_pair_list(a) << " | " << em::to_pair_list(b);
    }
}

TEST(ClosedForms, RequireSecondaryInputs) {
    const auto [g1, g2] = em::testing::triangle_pair();
    EXPECT_THROW(em::d5_closed_rna(g1, g2), em::error);
    EXPECT_THROW(em::d4_closed_rna(g1, g2), em::error);
}

TEST(CrossTerms, MatchDirectCounts) {
    std::mt19937_64 rng(47);
    for (int trial = 0; trial < 400; ++trial) {
        const std::size_t n = 3 + trial % 9;
        const auto a = em::testing::random_arbitrary(rng, n, 0.45);
        const auto b = em::testing::random_arbitrary(rng, n, 0.45);
        const auto joined = em::union_of(a, b);
        EXPECT_EQ(em::angle_cross_term(a, b), 2 * em::angle_count(joined) - em::angle_count(a) - em::angle_count(b));
        EXPECT_EQ(em::triangle_cross_term(a, b),
                  2 * em::triangle_count(joined) - em::triangle_count(a) - em::triangle_count(b));
    }
}

TEST(CrossTerms, LiteralTriangleExpansionOvercounts) {
    const auto a = em::validate(6, {{1, 3}, {3, 5}, {1, 5}});
    const auto b = em::validate(6, {{1, 3}, {3, 5}});
    EXPECT_EQ(em::triangle_cross_term(a, b), 1u);
    EXPECT_EQ(literal_triangle_expansion(a, b), 3u);
    // disjoint one-sided triangles are handled the same by both readings
    const auto c = em::validate(6, {{1, 3}, {3, 5}, {2, 6}});
    const auto d = em::validate(6, {{1, 5}, {2, 4}, {4, 6}});
    EXPECT_EQ(literal_triangle_expansion(c, d), em::triangle_cross_term(c, d));
}

TEST(Axioms, ZeroSymmetryTriangle) {
    std::mt19937_64 rng(53);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 5 + trial % 10;
        const auto a = em::testing::random_secondary(rng, n);
        const auto b = em::testing::random_secondary(rng, n);
        const auto c = em::testing::random_secondary(rng, n);
        for (std::uint64_t m = 3; m <= 6; ++m) {
            const auto ab = em::d(a, b, m);
            EXPECT_EQ(em::d(a, a, m), 0);
            EXPECT_EQ(ab, em::d(b, a, m));
            EXPECT_EQ(ab == 0, a == b);
            EXPECT_LE(em::d(a, c, m), ab + em::d(b, c, m));
        }
    }
}

TEST(Axioms, ArbitraryStructuresThroughHilbert) {
    std::mt19937_64 rng(59);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 4 + trial % 6;
        const auto a = em::testing::random_arbitrary(rng, n);
        const auto b = em::testing::random_arbitrary(rng, n);
        const auto c = em::testing::random_arbitrary(rng, n);
        for (std::uint64_t m = 3; m <= 6; ++m) {
            EXPECT_LE(em::d(a, c, m), em::d(a, b, m) + em::d(b, c, m));
            EXPECT_EQ(em::d(a, b, m) == 0, a == b);
        }
    }
}

TEST(Monotonicity, SharedContactsBringStructuresCloser) {
    const auto a = em::validate(12, {{1, 5}, {8, 12}});
    const auto b = em::validate(12, {{2, 6}, {8, 12}});
    const auto a2 = em::validate(12, {{1, 5}});
    const auto b2 = em::validate(12, {{2, 6}});
    EXPECT_TRUE(em::shared_contact_monotonicity_check(a, b, a2, b2));
    EXPECT_TRUE(em::shared_contact_monotonicity_check(a2, b2, a, b));
    EXPECT_LT(em::d(a, b, 5), em::d(a2, b2, 5));
    EXPECT_EQ(em::d(a, b, 4), em::d(a2, b2, 4));

    EXPECT_EQ(code_of([&] { em::shared_contact_monotonicity_check(a, b, a2, a2); }),
              em::errc::precondition_violated);
    const auto [g1, g2] = em::testing::triangle_pair();
    EXPECT_EQ(code_of([&] { em::shared_contact_monotonicity_check(g1, g2, g1, g2); }),
              em::errc::precondition_violated);
}

TEST(Monotonicity, RandomCommonDifference) {
    std::mt19937_64 rng(61);
    int compared = 0;
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t n = 12 + trial % 10;
        const auto a = em::testing::random_secondary(rng, n, 0.4);
        const auto b = em::testing::random_secondary(rng, n, 0.4);
        if (a == b) {
            continue;
        }
        // drop shared contacts one at a time; each drop must increase d5
        auto shared = em::common_contacts(a, b);
        if (shared.empty()) {
            continue;
        }
        em::testing::pair_list a2;
        em::testing::pair_list b2;
        for (const auto& c : a.contacts()) {
            if (c != shared.front()) a2.emplace_back(c.i, c.j);
        }
        for (const auto& c : b.contacts()) {
            if (c != shared.front()) b2.emplace_back(c.i, c.j);
        }
        const auto sa = em::validate(n, a2);
        const auto sb = em::validate(n, b2);
        EXPECT_TRUE(em::shared_contact_monotonicity_check(a, b, sa, sb));
        EXPECT_LT(em::d(a, b, 5), em::d(sa, sb, 5));
        ++compared;
    }
    EXPECT_GT(compared, 20);
}

TEST(Evaluate, ErrorsAndDispatch) {
    const auto a = em::validate(7, {{1, 4}});
    const auto b = em::validate(7, {{2, 6}});
    EXPECT_EQ(code_of([&] { em::evaluate(a, b, 2); }), em::errc::invalid_metric_index);
    EXPECT_EQ(code_of([&] { em::evaluate(a, b, 13); }), em::errc::invalid_metric_index);
    EXPECT_EQ(code_of([&] { em::evaluate(a, b, 9, {false, 8}); }), em::errc::invalid_metric_index);
    EXPECT_EQ(code_of([&] { em::evaluate(a, em::contact_structure::empty(8), 3); }), em::errc::length_mismatch);
    const auto v = em::evaluate(a, b, 7);
    EXPECT_EQ(v.m, 7u);
    EXPECT_EQ(v.n, 7u);
    EXPECT_EQ(v.raw, em::symdiff_monomial_count(a, b, 7));
    EXPECT_EQ(v.normalized, rational(v.raw, em::normalizer(7, 7)));
    const auto same = em::evaluate(a, a, 5);
    EXPECT_EQ(same.raw, 0);
    EXPECT_EQ(same.normalized, 0);
}

TEST(Evaluate, DecimalRendering) {
    EXPECT_EQ(em::to_decimal_string(r(4, 5)), "0.800000");
    EXPECT_EQ(em::to_decimal_string(r(184, 17)), "10.823529");
    EXPECT_EQ(em::to_decimal_string(r(1, 8), 2), "0.12");
    EXPECT_EQ(em::to_decimal_string(r(3, 8), 2), "0.38");
    EXPECT_EQ(em::to_decimal_string(r(-1, 3), 3), "-0.333");
    EXPECT_EQ(em::to_decimal_string(r(7), 0), "7");
    EXPECT_EQ(em::to_fraction_string(r(2)), "2/1");
}
