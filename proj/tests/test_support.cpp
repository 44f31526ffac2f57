#include "latmw/macwilliams.hpp"
#include "latmw/support.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <functional>

using namespace latmw;

namespace {

GroupElement el(std::vector<std::uint32_t> c) { return GroupElement{std::move(c)}; }

std::vector<RegularSupport> builtins() {
    return {hamming_support(FiniteAbelianGroup({2}), 2),
            hamming_support(FiniteAbelianGroup({2}), 3),
            hamming_support(FiniteAbelianGroup({3}), 2),
            hamming_support(FiniteAbelianGroup({2, 2}), 2),
            hamming_support(FiniteAbelianGroup({4}), 2),
            rank_support(2, 1, 1),
            rank_support(2, 2, 2),
            rank_support(2, 2, 3),
            rank_support(3, 1, 2),
            rank_support(3, 2, 2),
            rank_support(4, 1, 2),
            lee4_support(),
            cyclic_chain_support(8),
            cyclic_chain_support(9),
            cyclic_chain_support(27),
            homogeneous_support(3, 1),
            homogeneous_support(3, 2),
            homogeneous_support(5, 1)};
}

/// Every chain {0} < G_1 < ... < G_r = G of subgroups.
std::vector<std::vector<Code>> all_chains(const FiniteAbelianGroup& G) {
    const auto subs = enumerate_subgroups(G);
    std::vector<std::vector<Code>> out;
    std::vector<Code> cur;
    std::function<void(const Code&)> rec = [&](const Code& last) {
        if (last.is_full()) {
            out.push_back(cur);
            return;
        }
        for (const auto& H : subs) {
            if (H.size() <= last.size() || H.size() % last.size() != 0) continue;
            if (!std::includes(H.elements().begin(), H.elements().end(), last.elements().begin(), last.elements().end()))
                continue;
            cur.push_back(H);
            rec(H);
            cur.pop_back();
        }
    };
    rec(zero_code(G));
    return out;
}

}  // namespace

TEST(Support, ValidateHammingZ2Squared) {
    const FiniteAbelianGroup G({2, 2});
    std::vector<std::size_t> sigma(4);
    for (std::uint64_t g = 0; g < 4; ++g) {
        const auto e = G.element(g);
        sigma[g] = (e.coords[0] ? 1u : 0u) | (e.coords[1] ? 2u : 0u);
    }
    const auto rep = validate_support(G, boolean_lattice(2), sigma);
    EXPECT_TRUE(rep.ok());
    EXPECT_EQ(rep.gamma, (std::vector<Integer>{1, 2, 4}));
}

TEST(Support, EachAxiomViolationIsReported) {
    {
        const FiniteAbelianGroup G({2});
        const auto rep = validate_support(G, chain_lattice(1), {0, 0});
        EXPECT_EQ(rep.first_violation(), 'A');
        try {
            RegularSupport::create(G, chain_lattice(1), {0, 0});
            FAIL() << "expected an axiom violation";
        } catch (const AxiomViolation& e) {
            EXPECT_EQ(e.axiom(), 'A');
            EXPECT_FALSE(e.witness().empty());
        }
    }
    EXPECT_EQ(validate_support(FiniteAbelianGroup({3}), chain_lattice(2), {0, 1, 2}).first_violation(), 'B');
    EXPECT_EQ(validate_support(FiniteAbelianGroup({2, 2}), boolean_lattice(2), {0, 1, 1, 2}).first_violation(), 'C');
    EXPECT_EQ(validate_support(FiniteAbelianGroup({2}), boolean_lattice(2), {0, 3}).first_violation(), 'D');
    {
        const FiniteAbelianGroup G({2, 4});
        std::vector<std::size_t> sigma(G.order());
        for (std::uint64_t g = 0; g < G.order(); ++g) {
            const auto e = G.element(g);
            sigma[g] = (e.coords[0] ? 1u : 0u) | (e.coords[1] ? 2u : 0u);
        }
        const auto rep = validate_support(G, boolean_lattice(2), sigma);
        EXPECT_EQ(rep.first_violation(), 'E');
        EXPECT_TRUE(rep.lattice.regular);
    }
}

TEST(Support, IrregularLatticeIsReported) {
    // Z_2 x Z_3 on the divisors of 12 cannot be regular, whatever the map.
    const auto L = divisor_lattice(12);
    const FiniteAbelianGroup G({6});
    std::vector<std::size_t> sigma(6, L.top());
    sigma[0] = L.bottom();
    const auto rep = validate_support(G, L, sigma);
    EXPECT_FALSE(rep.lattice.regular);
    EXPECT_THROW(RegularSupport::create(G, L, sigma), LatticeIrregular);
}

TEST(Support, Balls) {
    const auto h = hamming_support(FiniteAbelianGroup({2}), 2);
    EXPECT_EQ(ball(h, 1).element_list(), (std::vector<GroupElement>{el({0, 0}), el({1, 0})}));
    EXPECT_TRUE(ball(h, h.lattice().bottom()).is_zero());

    const auto r = rank_support(2, 2, 2);
    const SubspaceLattice sub = subspace_lattice(2, 2);
    FieldMatrix e1(1, 2);
    e1.at(0, 0) = 1;
    const auto& B = ball(r, sub.index_of(e1));
    EXPECT_EQ(B.size(), 4u);
    const MatrixSpace space(2, 2, 2);
    for (auto g : B.elements()) {
        const auto M = space.matrix(r.group(), g);
        EXPECT_EQ(M.at(1, 0), 0u);
        EXPECT_EQ(M.at(1, 1), 0u);
    }
}

TEST(Support, Gamma) {
    EXPECT_EQ(gamma(rank_support(2, 2, 3)), (std::vector<Integer>{1, 8, 64}));
    EXPECT_EQ(gamma(rank_support(2, 2, 2)), (std::vector<Integer>{1, 4, 16}));
    EXPECT_EQ(gamma(hamming_support(FiniteAbelianGroup({2}), 3)), (std::vector<Integer>{1, 2, 4, 8}));
    EXPECT_EQ(gamma(homogeneous_support(3, 1)), (std::vector<Integer>{1, 3, 9}));
    EXPECT_EQ(gamma(cyclic_chain_support(8)), (std::vector<Integer>{1, 2, 4, 8}));
    for (const auto& s : builtins()) {
        const auto& g = s.gamma();
        EXPECT_EQ(g.front(), 1);
        EXPECT_EQ(g.back(), Integer(s.group().order()));
        for (std::size_t i = 1; i < g.size(); ++i) EXPECT_LE(g[i - 1], g[i]);
        for (const auto& x : g) EXPECT_EQ(Integer(s.group().order()) % x, 0);
    }
}

TEST(Support, DualOfHammingIsTrivialCoordinates) {
    const auto h = hamming_support(FiniteAbelianGroup({3}), 3);
    const auto d = dual_support(h);
    for (std::uint64_t chi = 0; chi < h.group().order(); ++chi) {
        const auto c = h.group().character(chi);
        std::size_t trivial = 0;
        for (int i = 0; i < 3; ++i)
            if (c.coords[i] == 0) trivial |= std::size_t{1} << i;
        EXPECT_EQ(d.sigma(chi), trivial);
    }
}

TEST(Support, DualOfChainIsLargestAnnihilatedLevel) {
    const FiniteAbelianGroup G({2, 4});
    for (const auto& chain : all_chains(G)) {
        const auto s = chain_support(G, chain);
        const auto d = dual_support(s);
        for (std::uint64_t chi = 0; chi < G.order(); ++chi) {
            std::size_t best = 0;
            for (std::size_t j = 0; j < chain.size(); ++j)
                if (dual_code(chain[j]).contains(chi)) best = j + 1;
            EXPECT_EQ(d.sigma(chi), best);
        }
    }
}

TEST(Support, DoubleDualIsIdentity) {
    for (const auto& s : builtins()) {
        const auto dd = dual_support(dual_support(s));
        EXPECT_EQ(dd.sigma_map(), s.sigma_map()) << s.name();
        EXPECT_TRUE(dd.lattice() == s.lattice()) << s.name();
    }
}

TEST(Support, SigmaWeight) {
    const auto lee = lee4_support();
    EXPECT_EQ(sigma_weight(lee, el({0})), 0);
    EXPECT_EQ(sigma_weight(lee, el({2})), 1);
    EXPECT_EQ(sigma_weight(lee, el({1})), 2);
    EXPECT_EQ(sigma_weight(lee, el({3})), 2);
    const auto r = rank_support(3, 2, 2);
    const MatrixSpace space(3, 2, 2);
    for (std::uint64_t g = 0; g < r.group().order(); ++g)
        EXPECT_EQ(static_cast<std::size_t>(r.weight(g)), matrix_rank(space.field, space.matrix(r.group(), g)));
    for (const auto& s : builtins()) EXPECT_EQ(s.weight(0), 0);
}

TEST(Support, WeightDistributions) {
    const auto h = hamming_support(FiniteAbelianGroup({2}), 2);
    const auto C = subgroup_closure(h.group(), {el({1, 1})});
    EXPECT_EQ(weight_distribution(C, h).counts, (std::vector<Integer>{1, 0, 1}));
    EXPECT_EQ(weight_distribution(zero_code(h.group()), h).counts, (std::vector<Integer>{1, 0, 0}));

    std::vector<long long> rank_counts(3, 0);
    oracle::for_each_matrix(2, 2, 2, [&](const auto& M) { ++rank_counts[oracle::rank_mod_p(M, 2)]; });
    EXPECT_EQ(rank_counts, (std::vector<long long>{1, 9, 6}));
    const auto r = rank_support(2, 2, 2);
    EXPECT_EQ(weight_distribution(full_code(r.group()), r).counts, (std::vector<Integer>{1, 9, 6}));
    EXPECT_THROW(weight_distribution(C, r), InvalidArgument);
}

TEST(Support, MinWeight) {
    const auto h = hamming_support(FiniteAbelianGroup({2}), 2);
    EXPECT_EQ(min_weight(subgroup_closure(h.group(), {el({1, 1})}), h), 2);
    const auto lee = lee4_support();
    EXPECT_EQ(min_weight(full_code(lee.group()), lee), 1);
    EXPECT_EQ(min_weight(subgroup_closure(lee.group(), {el({2})}), lee), 1);
    EXPECT_THROW(min_weight(zero_code(lee.group()), lee), InvalidArgument);
}

TEST(Support, BuiltinParameterChecks) {
    EXPECT_THROW(homogeneous_support(2, 1), InvalidArgument);
    EXPECT_THROW(homogeneous_support(4, 1), InvalidArgument);
    EXPECT_THROW(hamming_support(FiniteAbelianGroup({2}), 0), InvalidArgument);
    EXPECT_THROW(rank_support(6, 1, 1), InvalidArgument);
    EXPECT_THROW(rank_support(2, 3, 2), InvalidArgument);
    const FiniteAbelianGroup Z4({4});
    EXPECT_THROW(chain_support(Z4, {subgroup_closure(Z4, {el({2})})}), InvalidArgument);
}

TEST(Support, WeightEquivalence) {
    const auto lee = lee4_support();
    EXPECT_TRUE(weights_equivalent(lee_weight(4), lee.weights()));
    EXPECT_TRUE(weights_equivalent(lee.weights(), lee.weights()));
    // Hamming weight versus the exact (symbol composition) weight on (Z_2 x Z_2)^2.
    const auto h = hamming_support(FiniteAbelianGroup({2, 2}), 2);
    WeightLabels exact(h.group().order());
    for (std::uint64_t g = 0; g < h.group().order(); ++g) {
        const auto e = h.group().element(g);
        std::vector<int> comp(4, 0);
        ++comp[e.coords[0] * 2 + e.coords[1]];
        ++comp[e.coords[2] * 2 + e.coords[3]];
        exact[g] = comp[0] * 27 + comp[1] * 9 + comp[2] * 3 + comp[3];
    }
    EXPECT_FALSE(weights_equivalent(h.weights(), exact));
}

TEST(Support, Distance) {
    EXPECT_FALSE(check_distance(lee4_support()).has_value());
    EXPECT_FALSE(check_distance(hamming_support(FiniteAbelianGroup({3}), 3)).has_value());
    EXPECT_FALSE(check_distance(homogeneous_support(3, 2)).has_value());
    EXPECT_FALSE(check_modular(homogeneous_support(3, 2).lattice()).has_value());
    // The Lee weight itself is a metric; a weight with w(2) = 3 > w(1) + w(1) is not.
    const FiniteAbelianGroup Z4({4});
    EXPECT_FALSE(check_distance(Z4, lee_weight(4)).has_value());
    EXPECT_TRUE(check_distance(Z4, {0, 1, 3, 1}).has_value());
}

TEST(Support, ModularLatticeGivesDistance) {
    for (const auto& s : builtins())
        if (!check_modular(s.lattice())) {
            EXPECT_FALSE(check_distance(s).has_value()) << s.name();
        }
}

TEST(Support, GammaReciprocity) {
    for (const auto& s : builtins()) {
        const auto d = dual_support(s);
        const int r = s.rank();
        for (int t = 0; t <= r; ++t) EXPECT_EQ(d.gamma()[t] * s.gamma()[r - t], Integer(s.group().order())) << s.name();
    }
}

TEST(Support, DualSupportAnnihilatesItsBall) {
    for (const auto& s : builtins()) {
        const auto d = dual_support(s);
        for (std::uint64_t chi = 0; chi < s.group().order(); ++chi)
            for (auto g : ball(s, d.sigma(chi)).elements()) ASSERT_EQ(s.group().pairing_index(chi, g), 0u) << s.name();
    }
}

TEST(Support, DualBallsAreDualCodes) {
    for (const auto& s : builtins()) {
        const auto d = dual_support(s);
        for (std::size_t S = 0; S < s.lattice().size(); ++S) ASSERT_EQ(dual_code(ball(s, S)), ball(d, S)) << s.name();
    }
}

TEST(Support, ChainPartitionsHaveRankPlusOneClasses) {
    for (const auto& orders : std::vector<std::vector<std::uint32_t>>{{4}, {8}, {2, 2}, {2, 4}, {3, 3}, {2, 2, 2}}) {
        const FiniteAbelianGroup G(orders);
        for (const auto& chain : all_chains(G)) {
            const auto s = chain_support(G, chain);
            const auto w = s.weights();
            std::set<int> classes(w.begin(), w.end());
            EXPECT_EQ(classes.size(), chain.size() + 1);
            EXPECT_TRUE(is_fourier_reflexive(G, s.weights()));
        }
    }
}

// Mutual duality of the partitions induced by omega_sigma and omega_sigma*, checked on
// every builtin instance.
TEST(Support, WeightPartitionsAreFourierReflexiveAndMutuallyDual) {
    for (const auto& s : builtins()) {
        const auto d = dual_support(s);
        EXPECT_TRUE(is_fourier_reflexive(s.group(), s.weights())) << s.name();
        EXPECT_TRUE(weights_equivalent(dual_partition(s.group(), s.weights()), d.weights())) << s.name();
        EXPECT_TRUE(weights_equivalent(dual_partition(s.group(), d.weights()), s.weights())) << s.name();
    }
}

TEST(Support, MatrixSpaceIndexRoundTrip) {
    for (std::uint32_t q : {2u, 3u, 4u}) {
        const MatrixSpace space(q, 1, 2);
        const auto G = space.group();
        for (std::uint64_t g = 0; g < G.order(); ++g) EXPECT_EQ(space.index(G, space.matrix(G, g)), g);
    }
}
