#include "oracles.hpp"

#include <gtest/gtest.h>

#include <krchar/repchar.hpp>

using namespace krchar;

namespace {

Mult dim_of(const WeightChar& ch) { return ch.dimension(); }

IsoChar iso(std::initializer_list<std::pair<Weight, Mult>> terms)
{
    IsoChar out;
    for (const auto& [w, m] : terms)
        out.add(w, m);
    return out;
}

/// Sym^k by enumerating multisets of weight indices.
oracle::Char sym_by_multisets(const WeightChar& ch, int k)
{
    std::vector<Weight> ws;
    for (const auto& [w, m] : ch.sorted())
        for (Mult c = 0; c < m; ++c)
            ws.push_back(w);
    oracle::Char out;
    std::vector<std::size_t> idx(static_cast<std::size_t>(k), 0);
    if (k == 0) {
        out[Weight::zero(ws.front().rank())] = 1;
        return out;
    }
    for (;;) {
        Weight s = Weight::zero(ws.front().rank());
        for (auto i : idx)
            s += ws[i];
        ++out[s];
        int p = k - 1;
        while (p >= 0 && idx[static_cast<std::size_t>(p)] == ws.size() - 1)
            --p;
        if (p < 0)
            break;
        const auto v = idx[static_cast<std::size_t>(p)] + 1;
        for (int q = p; q < k; ++q)
            idx[static_cast<std::size_t>(q)] = v;
    }
    return out;
}

} // namespace

TEST(Freudenthal, SmallCases)
{
    const auto a1 = build_root_system(LieType::parse("A1"));
    EXPECT_EQ(oracle::to_map(freudenthal(a1, Weight{0})), (oracle::Char{{Weight{0}, 1}}));
    EXPECT_EQ(oracle::to_map(freudenthal(a1, Weight{2})), (oracle::Char{{Weight{-2}, 1}, {Weight{0}, 1}, {Weight{2}, 1}}));

    const auto d4 = build_root_system(LieType::parse("D4"));
    const auto adj = freudenthal(d4, Weight{0, 1, 0, 0});
    EXPECT_EQ(adj[Weight::zero(4)], 4);
    EXPECT_EQ(dim_of(adj), 28);
    for (const auto& r : d4.positive_roots()) {
        EXPECT_EQ(adj[r.weight], 1);
        EXPECT_EQ(adj[-r.weight], 1);
    }
}

TEST(Freudenthal, FundamentalCharactersMatchEpsilonModel)
{
    for (const auto& t : oracle::classical_types(6)) {
        const auto rs = build_root_system(t);
        for (int k = 1; k <= t.rank; ++k) {
            SCOPED_TRACE(t.name() + " omega_" + std::to_string(k));
            EXPECT_EQ(oracle::to_map(freudenthal(rs, oracle::fw(t.rank, k))), oracle::fundamental_character(t, k));
        }
    }
}

TEST(Freudenthal, DimensionMatchesWeylFormula)
{
    for (const auto& name : {"A3", "B3", "C3", "D4", "D5", "B4"}) {
        const auto rs = build_root_system(LieType::parse(name));
        std::vector<Weight> lambdas{rs.rho(), rs.highest_root().weight};
        for (int i = 0; i < rs.rank(); ++i)
            lambdas.push_back(oracle::fw(rs.rank(), i + 1, 2));
        for (const auto& l : lambdas) {
            const auto ch = freudenthal(rs, l);
            EXPECT_EQ(dim_of(ch), weyl_dim(rs, l)) << name << " " << l.str();
            EXPECT_TRUE(ch.is_weyl_invariant(rs));
        }
    }
}

TEST(Tensor, SmallCases)
{
    const auto a1 = build_root_system(LieType::parse("A1"));
    EXPECT_EQ(tensor_decompose(a1, Weight{1}, Weight{1}), iso({{Weight{2}, 1}, {Weight{0}, 1}}));
    const auto d5 = build_root_system(LieType::parse("D5"));
    const Weight l{0, 0, 2, 0, 0};
    EXPECT_EQ(tensor_decompose(d5, l, Weight::zero(5)), IsoChar::single(l));
    EXPECT_EQ((tensor_decompose(d5, d5.highest_root().weight, l)[Weight{1, 0, 1, 0, 0}]), 1);
}

TEST(Tensor, AdjointSquareOfD4)
{
    const auto d4 = build_root_system(LieType::parse("D4"));
    const Weight th{0, 1, 0, 0};
    const IsoChar want = iso({{Weight{0, 0, 0, 0}, 1},
                             {Weight{0, 1, 0, 0}, 1},
                             {Weight{2, 0, 0, 0}, 1},
                             {Weight{0, 0, 2, 0}, 1},
                             {Weight{0, 0, 0, 2}, 1},
                             {Weight{0, 2, 0, 0}, 1},
                             {Weight{1, 0, 1, 1}, 1}});
    EXPECT_EQ(tensor_decompose(d4, th, th), want);
}

TEST(Tensor, CommutesAndCountsEvaluations)
{
    const auto b3 = build_root_system(LieType::parse("B3"));
    const Weight a{1, 0, 1}, b{0, 1, 0};
    const auto before = memo::tensor_evaluations();
    const auto ab = tensor_decompose(b3, a, b);
    const auto mid = memo::tensor_evaluations();
    const auto ba = tensor_decompose(b3, b, a);
    EXPECT_EQ(ab, ba);
    EXPECT_LE(mid - before, 1u);
    EXPECT_EQ(memo::tensor_evaluations(), mid);
}

TEST(Powers, EdgeDegrees)
{
    const auto a1 = build_root_system(LieType::parse("A1"));
    const auto adj = freudenthal(a1, Weight{2});
    EXPECT_EQ(ext_power(adj, 0), WeightChar::single(Weight{0}));
    EXPECT_EQ(sym_power(adj, 0), WeightChar::single(Weight{0}));
    EXPECT_EQ(ext_power(adj, 1), adj);
    EXPECT_EQ(sym_power(adj, 1), adj);
    EXPECT_EQ(dim_of(sym_power(adj, 2)), 6);
    EXPECT_EQ(ext_power(adj, 3), WeightChar::single(Weight{0}));
    EXPECT_TRUE(ext_power(adj, 4).empty());

    const auto d4 = build_root_system(LieType::parse("D4"));
    EXPECT_EQ(dim_of(ext_power(freudenthal(d4, Weight{0, 1, 0, 0}), 2)), 378);
    EXPECT_THROW(ext_power(adj, -1), std::invalid_argument);
    EXPECT_THROW(sym_power(WeightChar::single(Weight{0}, -1), 2), std::invalid_argument);
}

TEST(Powers, SymmetricMatchesMultisetEnumeration)
{
    const auto b2 = build_root_system(LieType::parse("B2"));
    const auto ch = freudenthal(b2, Weight{1, 0}) + freudenthal(b2, Weight{0, 1});
    for (int k = 0; k <= 3; ++k)
        EXPECT_EQ(oracle::to_map(sym_power(ch, k)), sym_by_multisets(ch, k)) << k;
}

// sum_i (-1)^i wedge^i V * Sym^{k-i} V = 0 for k >= 1.
TEST(Powers, KoszulIdentity)
{
    for (const auto& [name, hw] : std::vector<std::pair<std::string, Weight>>{
             {"D4", Weight{0, 1, 0, 0}}, {"D4", Weight{1, 0, 0, 0}}, {"B3", Weight{0, 0, 1}}, {"A2", Weight{1, 1}}}) {
        const auto rs = build_root_system(LieType::parse(name));
        const auto v = freudenthal(rs, hw);
        for (int k = 1; k <= 4; ++k) {
            oracle::Char total;
            for (int i = 0; i <= k; ++i) {
                const auto term = oracle::convolve(oracle::to_map(ext_power(v, i)), oracle::to_map(sym_power(v, k - i)));
                for (const auto& [w, m] : term)
                    total[w] += (i % 2 ? -m : m);
            }
            std::erase_if(total, [](const auto& e) { return e.second == 0; });
            EXPECT_TRUE(total.empty()) << name << " k=" << k;
        }
    }
}

TEST(IsoDecompose, RoundTripsAndRejectsNonInvariant)
{
    const auto d4 = build_root_system(LieType::parse("D4"));
    const Weight l{1, 1, 0, 1};
    EXPECT_EQ(iso_decompose(d4, freudenthal(d4, l)), IsoChar::single(l));

    const auto a1 = build_root_system(LieType::parse("A1"));
    const auto sq = freudenthal(a1, Weight{1}) * freudenthal(a1, Weight{1});
    EXPECT_EQ(iso_decompose(a1, sq), tensor_decompose(a1, Weight{1}, Weight{1}));
    EXPECT_THROW(iso_decompose(a1, WeightChar::single(Weight{1})), std::invalid_argument);

    // wedge^2 of the adjoint contains the adjoint.
    const auto th = d4.highest_root().weight;
    EXPECT_GE(iso_decompose(d4, ext_power(freudenthal(d4, th), 2))[th], 1);
}

TEST(Coefficients, ExampleTable)
{
    const auto d5 = build_root_system(LieType::parse("D5"));
    const auto ms = ModuleSpec::adjoint(d5, 3);
    const Weight l{0, 0, 2, 0, 0};
    auto c = [&](const Weight& mu, std::vector<int> k) { return c_coefficient(d5, ms, l, mu, k); };
    EXPECT_EQ(c(l, {0, 0, 0}), 1);
    EXPECT_EQ(c(Weight{1, 0, 1, 0, 0}, {1, 0, 0}), 1);
    EXPECT_EQ(c(Weight{1, 0, 1, 0, 0}, {0, 0, 1}), 1);
    EXPECT_EQ(c(Weight{0, 1, 0, 0, 0}, {1, 1, 0}), 1);
    EXPECT_EQ(c(Weight{0, 1, 0, 0, 0}, {2, 0, 0}), 1);
    EXPECT_EQ(c(Weight{2, 0, 0, 0, 0}, {0, 1, 1}), 1);
    EXPECT_EQ(c(Weight{2, 0, 0, 0, 0}, {2, 0, 0}), 0);
    EXPECT_EQ(c(Weight{2, 0, 0, 0, 0}, {0, 2, 0}), 0);
    for (const auto& r : compositions(3, 3))
        EXPECT_EQ(c(Weight::zero(5), r.values()), 1) << r.str();
}

TEST(Coefficients, AgreeWithTensorOracle)
{
    const auto d4 = build_root_system(LieType::parse("D4"));
    const auto ms = ModuleSpec::adjoint(d4, 2);
    const auto th = d4.highest_root().weight;
    for (int m = 1; m <= 3; ++m) {
        const Weight l = oracle::fw(4, 2, m), below = oracle::fw(4, 2, m - 1);
        EXPECT_EQ(sym_coefficient(d4, ms, l, below, {0, 1}), tensor_decompose(d4, th, l)[below]);
        EXPECT_EQ(sym_coefficient(d4, ms, l, below, {0, 1}), 1);
    }
    EXPECT_EQ(sym_coefficient(d4, ms, th, th, {0, 0}), 1);

    const auto a1 = build_root_system(LieType::parse("A1"));
    EXPECT_EQ(sym_coefficient(a1, ModuleSpec::adjoint(a1, 1), Weight{0}, Weight{2}, {1}), 1);
}

TEST(Coefficients, NonUniformSpec)
{
    const auto b2 = build_root_system(LieType::parse("B2"));
    const ModuleSpec ms({{Weight{1, 0}}, {Weight{0, 1}, Weight{0, 0}}});
    EXPECT_FALSE(ms.uniform());
    // (V(w1)) x (V(w2) + C) x V(0) contains V(w1 + w2) once.
    EXPECT_EQ(c_coefficient(b2, ms, Weight{0, 0}, Weight{1, 1}, {1, 1}), 1);
    EXPECT_EQ(c_coefficient(b2, ms, Weight{0, 0}, Weight{1, 0}, {1, 1}), 1);
    EXPECT_THROW(ModuleSpec({{Weight{-1, 0}}}), std::invalid_argument);
    EXPECT_THROW(c_coefficient(b2, ms, Weight{0, 0}, Weight{1, 0}, {1}), std::invalid_argument);
}

TEST(Memo, CapacityAndClear)
{
    const auto cap = memo::capacity();
    memo::set_capacity(4);
    EXPECT_EQ(memo::capacity(), 4u);
    const auto a2 = build_root_system(LieType::parse("A2"));
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            tensor_decompose(a2, Weight{a, b}, Weight{1, 1});
    EXPECT_LE(memo::tensor_snapshot().size(), 4u);
    memo::clear();
    EXPECT_TRUE(memo::tensor_snapshot().empty());
    memo::set_capacity(cap);
}
