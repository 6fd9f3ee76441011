#include "oracles.hpp"

#include <gtest/gtest.h>

#include <krchar/poset.hpp>

using namespace krchar;

namespace {

WeightChar adjoint_weights(const RootSystem& rs) { return freudenthal(rs, rs.highest_root().weight); }

std::set<Weight> as_set(const PsiSet& psi) { return {psi.elements().begin(), psi.elements().end()}; }

/// Gamma sets from the identity matrix, capped at ell = 2 to keep the pair loops small.
std::vector<GammaSet> sample_gammas()
{
    std::vector<GammaSet> out;
    for (const auto& c : oracle::identity_cases()) {
        if (c.ell > 2)
            continue;
        const auto rs = build_root_system(c.type);
        out.push_back(gamma_psi(rs, adjoint_psi_lambda(rs, c.lambda), LambdaPoint{c.lambda, MultiDegree(c.ell)}));
    }
    return out;
}

/// Every degree s with lo <= s <= hi componentwise.
std::vector<MultiDegree> degree_box(const MultiDegree& lo, const MultiDegree& hi)
{
    std::vector<MultiDegree> out;
    MultiDegree s = lo;
    for (;;) {
        out.push_back(s);
        int j = 0;
        while (j < s.ell() && s[j] == hi[j]) {
            s[j] = lo[j];
            ++j;
        }
        if (j == s.ell())
            return out;
        ++s[j];
    }
}

} // namespace

TEST(Psi, NodeSets)
{
    const auto d4 = build_root_system(LieType::parse("D4"));
    EXPECT_TRUE(psi_i(d4, Node{1}).empty());
    EXPECT_TRUE(psi_i(d4, Node{3}).empty());
    EXPECT_TRUE(psi_i(d4, Node{4}).empty());
    EXPECT_EQ(psi_i(d4, Node{2}).elements(), (std::vector<Weight>{-d4.highest_root().weight}));

    const auto d5 = build_root_system(LieType::parse("D5"));
    const LieType t5{Family::D, 5};
    std::set<Weight> want;
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            want.insert(oracle::fundamental_coords(t5, oracle::plus(oracle::unit(5, i, -2), oracle::unit(5, j, -2))));
    EXPECT_EQ(as_set(psi_i(d5, Node{3})), want);
    EXPECT_THROW(psi_i(d5, Node{6}), std::out_of_range);
}

TEST(Psi, OfMuAgreesWithNodeSets)
{
    for (int n : {4, 5, 6}) {
        const auto rs = build_root_system(LieType{Family::D, n});
        for (int i = 1; i <= n; ++i) {
            const auto pi = psi_i(rs, Node{i});
            if (!pi.empty())
                EXPECT_EQ(psi_of_mu(rs, rs.fundamental(i - 1)), pi) << "D" << n << " i=" << i;
        }
    }
    const auto a1 = build_root_system(LieType::parse("A1"));
    EXPECT_EQ(psi_of_mu(a1, Weight{1}).elements(), (std::vector<Weight>{Weight{-2}}));
    EXPECT_THROW(psi_of_mu(a1, Weight{0}), std::invalid_argument);
}

TEST(Psi, ILambda)
{
    const auto d4 = build_root_system(LieType::parse("D4"));
    const auto d5 = build_root_system(LieType::parse("D5"));
    EXPECT_EQ(i_lambda(d5, Weight::zero(5)).index, 1);
    EXPECT_EQ(i_lambda(d5, Weight{0, 0, 2, 0, 0}).index, 3);
    EXPECT_EQ(i_lambda(d5, Weight{1, 0, 1, 1, 1}).index, 3);
    EXPECT_EQ(i_lambda(d4, Weight{0, 0, 0, 1}).index, 1);
    EXPECT_TRUE(psi_lambda(d4, Weight{0, 0, 0, 1}).empty());
    EXPECT_THROW(i_lambda(d4, Weight{0, -1, 0, 0}), std::invalid_argument);
}

TEST(Psi, FaceCondition)
{
    const auto d4 = build_root_system(LieType::parse("D4"));
    const auto adj4 = adjoint_weights(d4);
    EXPECT_TRUE(check_polytope_condition({}, adj4));
    EXPECT_TRUE(check_polytope_condition(psi_i(d4, Node{2}).elements(), adj4));

    const auto a1 = build_root_system(LieType::parse("A1"));
    const std::vector<Weight> with_zero{Weight{-2}, Weight{0}};
    EXPECT_FALSE(check_polytope_condition(with_zero, adjoint_weights(a1)));
    const std::vector<Weight> outside{Weight{-4}};
    EXPECT_THROW(check_polytope_condition(outside, adjoint_weights(a1)), std::invalid_argument);

    // Psi_i sets lie on a face for every non-spin node.
    for (const auto& name : {"D5", "D6", "B4", "C4"}) {
        const auto rs = build_root_system(LieType::parse(name));
        const auto adj = adjoint_weights(rs);
        for (int i = 1; i <= rs.rank(); ++i) {
            const auto psi = psi_i(rs, Node{i});
            EXPECT_TRUE(check_polytope_condition(psi.elements(), adj)) << name << " i=" << i;
        }
    }
}

TEST(Psi, ExtraConditions)
{
    const auto d5 = build_root_system(LieType::parse("D5"));
    const auto adj = adjoint_weights(d5);
    EXPECT_TRUE(check_psi_extra(d5, {}, adj));
    EXPECT_TRUE(check_psi_extra(d5, psi_i(d5, Node{3}).elements(), adj));
    const std::vector<Weight> theta{d5.highest_root().weight};
    EXPECT_FALSE(check_psi_extra(d5, theta, adj));

    const auto c = certify(d5, psi_i(d5, Node{3}), adj);
    EXPECT_TRUE(c.polytope_checked());
    EXPECT_TRUE(c.extra_checked());
    EXPECT_THROW(PsiSet::from_weights(d5, theta), std::invalid_argument);
}

TEST(DPsi, Examples)
{
    const auto d4 = build_root_system(LieType::parse("D4"));
    const auto psi2 = psi_i(d4, Node{2});
    for (int m = 0; m <= 4; ++m)
        for (int r = 0; r <= m; ++r)
            EXPECT_EQ(d_psi(d4, psi2, oracle::fw(4, 2, m), oracle::fw(4, 2, m - r)), r);
    EXPECT_FALSE(d_psi(d4, psi2, oracle::fw(4, 2, 2), oracle::fw(4, 1, 2)).has_value());

    const auto d5 = build_root_system(LieType::parse("D5"));
    const auto psi3 = psi_i(d5, Node{3});
    const Weight l{0, 0, 2, 0, 0};
    EXPECT_EQ(d_psi(d5, psi3, l, l), 0);
    EXPECT_EQ(d_psi(d5, psi3, l, Weight{0, 1, 0, 0, 0}), 2);
    EXPECT_EQ(d_psi(d5, psi3, l, Weight::zero(5)), 3);
    EXPECT_FALSE(d_psi(d5, psi3, Weight{0, 1, 0, 0, 0}, l).has_value());
}

TEST(DPsi, MatchesLevelSetSearch)
{
    for (const auto& [name, lambda, node] : std::vector<std::tuple<std::string, Weight, int>>{
             {"D5", Weight{0, 0, 2, 0, 0}, 3},
             {"D5", Weight{0, 3, 0, 0, 0}, 2},
             {"D4", Weight{1, 2, 0, 1}, 2},
             {"B3", Weight{0, 2, 1}, 2},
             {"C3", Weight{1, 1, 1}, 2},
             {"D6", Weight{0, 0, 0, 2, 0, 0}, 4}}) {
        const auto rs = build_root_system(LieType::parse(name));
        const auto psi = psi_i(rs, Node{node});
        for (const auto& mu : dominant_weights_below(rs, lambda))
            EXPECT_EQ(d_psi(rs, psi, lambda, mu), oracle::d_psi_levels(psi, lambda, mu, 16))
                << name << " " << lambda.str() << " -> " << mu.str();
    }
}

TEST(Order, CoversAndLeq)
{
    const auto d5 = build_root_system(LieType::parse("D5"));
    const auto ms = ModuleSpec::adjoint(d5, 2);
    const LambdaPoint base{Weight{0, 0, 2, 0, 0}, MultiDegree{0, 0}};
    EXPECT_FALSE(covers(d5, ms, base, base));
    EXPECT_TRUE(covers(d5, ms, {Weight{1, 0, 1, 0, 0}, MultiDegree{1, 0}}, base));
    EXPECT_TRUE(covers(d5, ms, {Weight{1, 0, 1, 0, 0}, MultiDegree{0, 1}}, base));
    EXPECT_FALSE(covers(d5, ms, base, {Weight{1, 0, 1, 0, 0}, MultiDegree{1, 0}}));
    EXPECT_FALSE(covers(d5, ms, {Weight{0, 1, 0, 0, 0}, MultiDegree{1, 1}}, base));
    EXPECT_FALSE(covers(d5, ms, {Weight{1, 0, 1, 0, 0}, MultiDegree{1, 0}}, {Weight{0, 0, 2, 0, 0}, MultiDegree{0, 1}}));

    const auto d4 = build_root_system(LieType::parse("D4"));
    const auto psi2 = psi_i(d4, Node{2});
    for (int m = 1; m <= 3; ++m) {
        const LambdaPoint a{oracle::fw(4, 2, m), MultiDegree{0, 0}};
        EXPECT_TRUE(leq_psi(d4, psi2, a, a));
        EXPECT_TRUE(leq_psi(d4, psi2, a, {oracle::fw(4, 2, m - 1), MultiDegree{0, 1}}));
        EXPECT_FALSE(leq_psi(d4, psi2, a, {oracle::fw(4, 2, m - 1), MultiDegree{2, 0}}));
        EXPECT_FALSE(leq_psi(d4, psi2, {oracle::fw(4, 2, m - 1), MultiDegree{0, 1}}, a));
    }
}

TEST(Gamma, Examples)
{
    const auto d4 = build_root_system(LieType::parse("D4"));
    const auto psi2 = certify(d4, psi_i(d4, Node{2}), adjoint_weights(d4));
    for (int ell = 1; ell <= 3; ++ell)
        for (int m = 0; m <= 4; ++m) {
            const auto g = gamma_psi(d4, psi2, {oracle::fw(4, 2, m), MultiDegree(ell)});
            std::set<LambdaPoint> want;
            for (int r = 0; r <= m; ++r)
                for (const auto& s : oracle::degrees_of(ell, r))
                    want.insert({oracle::fw(4, 2, m - r), s});
            EXPECT_EQ(std::set<LambdaPoint>(g.points().begin(), g.points().end()), want) << "m=" << m << " ell=" << ell;
        }

    const auto d5 = build_root_system(LieType::parse("D5"));
    const auto psi3 = certify(d5, psi_i(d5, Node{3}), adjoint_weights(d5));
    const Weight l{0, 0, 2, 0, 0};
    const std::map<Weight, int> want_d{
        {l, 0}, {Weight{1, 0, 1, 0, 0}, 1}, {Weight{0, 1, 0, 0, 0}, 2}, {Weight{2, 0, 0, 0, 0}, 2}, {Weight::zero(5), 3}};
    const std::size_t sizes[] = {5, 13, 26};
    for (int ell = 1; ell <= 3; ++ell) {
        const auto g = gamma_psi(d5, psi3, {l, MultiDegree(ell)});
        EXPECT_EQ(g.distances(), want_d);
        EXPECT_EQ(g.size(), sizes[ell - 1]);
        EXPECT_EQ(g.points().front(), (LambdaPoint{l, MultiDegree(ell)}));
    }

    const auto empty = certify(d5, PsiSet{}, adjoint_weights(d5));
    const LambdaPoint b{Weight{1, 0, 0, 0, 0}, MultiDegree{0, 2}};
    EXPECT_EQ(gamma_psi(d5, empty, b).points(), (std::vector<LambdaPoint>{b}));
    EXPECT_THROW(gamma_psi(d5, psi_i(d5, Node{3}), {l, MultiDegree(1)}), std::invalid_argument);
}

TEST(Gamma, EnumerationIsALinearExtension)
{
    for (const auto& g : sample_gammas()) {
        const auto rs = build_root_system(LieType{Family::D, g.base().weight.rank()});
        const auto& pts = g.points();
        for (std::size_t a = 0; a < pts.size(); ++a)
            for (std::size_t b = a + 1; b < pts.size(); ++b)
                EXPECT_FALSE(leq_psi(rs, g.psi(), pts[b], pts[a])) << pts[b].str() << " before " << pts[a].str();
    }
}

TEST(Gamma, AntisymmetryAndAdditivity)
{
    for (const auto& g : sample_gammas()) {
        const auto rs = build_root_system(LieType{Family::D, g.base().weight.rank()});
        const auto ws = g.weights();
        for (const auto& a : ws)
            for (const auto& b : ws) {
                const auto ab = d_psi(rs, g.psi(), a, b);
                if (a != b && ab)
                    EXPECT_FALSE(d_psi(rs, g.psi(), b, a).has_value());
                if (!ab)
                    continue;
                for (const auto& c : ws) {
                    const auto bc = d_psi(rs, g.psi(), b, c);
                    if (bc)
                        EXPECT_EQ(d_psi(rs, g.psi(), a, c), *ab + *bc) << a.str() << " " << b.str() << " " << c.str();
                }
            }
    }
}

TEST(Gamma, Convexity)
{
    for (const auto& g : sample_gammas()) {
        const auto rs = build_root_system(LieType{Family::D, g.base().weight.rank()});
        const auto below = dominant_weights_below(rs, g.base().weight);
        const auto& pts = g.points();
        for (const auto& a : pts)
            for (const auto& b : pts) {
                if (a == b || !leq_psi(rs, g.psi(), a, b))
                    continue;
                for (const auto& s : degree_box(a.degree, b.degree))
                    for (const auto& w : below) {
                        const LambdaPoint c{w, s};
                        if (leq_psi(rs, g.psi(), a, c) && leq_psi(rs, g.psi(), c, b))
                            EXPECT_TRUE(g.contains(c)) << c.str();
                    }
            }
    }
}

TEST(Gamma, TranslationAndFibers)
{
    for (const auto& g : sample_gammas()) {
        const auto rs = build_root_system(LieType{Family::D, g.base().weight.rank()});
        MultiDegree shift(g.ell());
        for (int j = 0; j < g.ell(); ++j)
            shift[j] = j + 2;
        const auto moved = gamma_psi(rs, g.psi(), {g.base().weight, shift});
        ASSERT_EQ(moved.size(), g.size());
        for (std::size_t k = 0; k < g.size(); ++k) {
            EXPECT_EQ(moved.points()[k].weight, g.points()[k].weight);
            EXPECT_EQ(moved.points()[k].degree, g.points()[k].degree + shift);
        }
        std::map<Weight, int> deg_of;
        for (const auto& p : g.points()) {
            const auto [it, fresh] = deg_of.emplace(p.weight, p.degree.deg());
            if (!fresh)
                EXPECT_EQ(it->second, p.degree.deg()) << p.str();
        }
    }
}

// Each one-step relation of the Psi order is a cover of the ambient order.
TEST(Gamma, RefinesAmbientOrder)
{
    for (const auto& g : sample_gammas()) {
        const auto rs = build_root_system(LieType{Family::D, g.base().weight.rank()});
        const auto ms = ModuleSpec::adjoint(rs, g.ell());
        for (const auto& a : g.points())
            for (const auto& b : g.points())
                if ((b.degree - a.degree).deg() == 1 && leq_psi(rs, g.psi(), a, b))
                    EXPECT_TRUE(covers(rs, ms, b, a)) << a.str() << " < " << b.str();
    }
}
