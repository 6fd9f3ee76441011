#include <krchar/verify.hpp>

#include <chrono>
#include <functional>

namespace krchar {

Suite parse_suite(std::string_view name)
{
    if (name == "paper")
        return Suite::paper;
    if (name == "identities")
        return Suite::identities;
    if (name == "all")
        return Suite::all;
    throw std::invalid_argument("unknown suite '" + std::string(name) + "' (expected paper, identities or all)");
}

namespace {

Weight fundamental_multiple(int rank, int i, int m)
{
    Weight w(rank);
    w.set(i - 1, m);
    return w;
}

/// All r in Z_+^ell with deg r = d and entries bounded by cap.
std::vector<MultiDegree> bounded_compositions(int ell, int d, int cap)
{
    std::vector<MultiDegree> out;
    for (auto& r : compositions(ell, d)) {
        bool ok = true;
        for (int x : r.values())
            ok = ok && x <= cap;
        if (ok)
            out.push_back(r);
    }
    return out;
}

std::string describe_difference(const GradedChar& got, const GradedChar& want)
{
    for (const auto& [k, m] : want.entries())
        if (got.at(k.weight, k.degree) != m)
            return "at V(" + k.weight.str() + ") t^(" + k.degree.str() + "): got " +
                   std::to_string(got.at(k.weight, k.degree)) + ", expected " + std::to_string(m);
    for (const auto& [k, m] : got.entries())
        if (want.at(k.weight, k.degree) == 0)
            return "unexpected V(" + k.weight.str() + ") t^(" + k.degree.str() + ") with multiplicity " +
                   std::to_string(m);
    return {};
}

struct Runner {
    std::vector<CheckReport> out;

    void run(std::string name, const std::function<std::string()>& body)
    {
        CheckReport r;
        r.name = std::move(name);
        const auto t0 = std::chrono::steady_clock::now();
        try {
            r.detail = body();
            r.passed = r.detail.empty();
        } catch (const std::exception& e) {
            r.detail = std::string("exception: ") + e.what();
        }
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        out.push_back(std::move(r));
    }
};

std::string case_name(const MatrixCase& c)
{
    return c.type.name() + " lambda=(" + c.lambda.str() + ") ell=" + std::to_string(c.ell);
}

void paper_checks(Runner& run)
{
    run.run("D5 gch N(2w3) for ell = 1, 2, 3", [] {
        const auto rs = build_root_system(LieType{Family::D, 5});
        for (int ell = 1; ell <= 3; ++ell) {
            const auto got = gch_N(rs, fundamental_multiple(5, 3, 2), ell);
            const auto diff = describe_difference(got, closed_form_2omega3_d5(ell));
            if (!diff.empty())
                return "ell=" + std::to_string(ell) + " " + diff;
        }
        return std::string{};
    });
    run.run("gch N(m w2) closed formula, D4/D5, m <= 4, ell <= 3", [] {
        for (int rank : {4, 5}) {
            const auto rs = build_root_system(LieType{Family::D, rank});
            for (int m = 0; m <= 4; ++m)
                for (int ell = 1; ell <= 3; ++ell) {
                    const auto diff = describe_difference(gch_N(rs, fundamental_multiple(rank, 2, m), ell),
                                                          closed_form_m_omega2(rank, m, ell));
                    if (!diff.empty())
                        return rs.type().name() + " m=" + std::to_string(m) + " ell=" + std::to_string(ell) + " " + diff;
                }
        }
        return std::string{};
    });
    run.run("gch N(m w3) at ell = 1, D5, m <= 3", [] {
        const auto rs = build_root_system(LieType{Family::D, 5});
        for (int m = 0; m <= 3; ++m) {
            const auto diff = describe_difference(gch_N(rs, fundamental_multiple(5, 3, m), 1), closed_form_m_omega3(5, m));
            if (!diff.empty())
                return "m=" + std::to_string(m) + " " + diff;
        }
        return std::string{};
    });
    run.run("N(m w_i) = V(m w_i) for i = 1 and spin nodes, D4/D5, m <= 4", [] {
        for (int rank : {4, 5}) {
            const auto rs = build_root_system(LieType{Family::D, rank});
            for (int i : {1, rank - 1, rank})
                for (int m = 0; m <= 4; ++m)
                    for (int ell = 1; ell <= 3; ++ell) {
                        const Weight lambda = fundamental_multiple(rank, i, m);
                        const auto gamma = kr_gamma(rs, lambda, ell);
                        GradedChar want(ell);
                        want.add(lambda, MultiDegree(ell), 1);
                        if (gamma.size() != 1)
                            return rs.type().name() + " " + lambda.str() + ": gamma has " +
                                   std::to_string(gamma.size()) + " points";
                        const auto diff = describe_difference(gch_N(rs, lambda, ell), want);
                        if (!diff.empty())
                            return rs.type().name() + " " + lambda.str() + " " + diff;
                    }
        }
        return std::string{};
    });
    run.run("D5 Ext^1(V(2w3,0), V(w3+w1,e1)) = 1 and Ext^2(V(2w3,0), V(2w1,2e1)) = 0", [] {
        const auto rs = build_root_system(LieType{Family::D, 5});
        const auto ms = ModuleSpec::adjoint(rs, 2);
        const LambdaPoint base{Weight{0, 0, 2, 0, 0}, MultiDegree{0, 0}};
        const auto e1 = ext_dim(rs, ms, base, {Weight{1, 0, 1, 0, 0}, MultiDegree{1, 0}}, 1);
        const auto e2 = ext_dim(rs, ms, base, {Weight{2, 0, 0, 0, 0}, MultiDegree{2, 0}}, 2);
        if (e1 != 1 || e2 != 0)
            return "got " + std::to_string(e1) + " and " + std::to_string(e2);
        return std::string{};
    });
    run.run("D5 Gamma_{Psi_3}(2w3, 0) weights and distances", [] {
        const auto rs = build_root_system(LieType{Family::D, 5});
        const auto gamma = kr_gamma(rs, Weight{0, 0, 2, 0, 0}, 1);
        const std::map<Weight, int> want{{Weight{0, 0, 2, 0, 0}, 0},
                                         {Weight{1, 0, 1, 0, 0}, 1},
                                         {Weight{0, 1, 0, 0, 0}, 2},
                                         {Weight{2, 0, 0, 0, 0}, 2},
                                         {Weight{0, 0, 0, 0, 0}, 3}};
        if (gamma.distances() != want)
            return std::string("distance table differs");
        return std::string{};
    });
    run.run("D5 c_ell(2w3, w2) nonzero iff ell >= 2, c_ell(2w3, 0) nonzero iff ell >= 3", [] {
        const auto rs = build_root_system(LieType{Family::D, 5});
        const Weight lambda{0, 0, 2, 0, 0};
        const auto w2 = multiplicity_ell_profile(rs, lambda, Weight{0, 1, 0, 0, 0}, 4);
        const auto zero = multiplicity_ell_profile(rs, lambda, Weight(5), 4);
        for (int ell = 1; ell <= 4; ++ell) {
            const auto i = static_cast<std::size_t>(ell - 1);
            if ((w2[i] != 0) != (ell >= 2) || (zero[i] != 0) != (ell >= 3))
                return "profile mismatch at ell=" + std::to_string(ell);
        }
        return std::string{};
    });
}

void identity_checks(Runner& run)
{
    const auto cases = identity_matrix();
    auto over_matrix = [&](const char* name, const std::function<CheckResult(const RootSystem&, const MatrixCase&)>& f) {
        run.run(name, [&] {
            for (const auto& c : cases) {
                const auto rs = build_root_system(c.type);
                const auto r = f(rs, c);
                if (!r.ok)
                    return case_name(c) + ": " + r.detail;
            }
            return std::string{};
        });
    };
    over_matrix("A(t)E(-t) = Id on the test matrix", [](const RootSystem& rs, const MatrixCase& c) {
        const auto gamma = kr_gamma(rs, c.lambda, c.ell);
        return verify_AE_identity(rs, ModuleSpec::adjoint(rs, c.ell), gamma);
    });
    over_matrix("direct = recursive on the test matrix", [](const RootSystem& rs, const MatrixCase& c) {
        const auto gamma = kr_gamma(rs, c.lambda, c.ell);
        const auto ms = ModuleSpec::adjoint(rs, c.ell);
        const auto a = gch_P_direct(rs, ms, gamma.base(), gamma);
        const auto b = gch_P_recursive(rs, ms, gamma.base(), gamma);
        return CheckResult{a == b, describe_difference(b, a)};
    });
    over_matrix("alternating Ext sum on the test matrix", [](const RootSystem& rs, const MatrixCase& c) {
        const auto gamma = kr_gamma(rs, c.lambda, c.ell);
        return verify_alternating_sum(rs, ModuleSpec::adjoint(rs, c.ell), gamma.base(), gamma);
    });
    over_matrix("fixed-psi = per-weight-psi on the test matrix", [](const RootSystem& rs, const MatrixCase& c) {
        const auto a = gch_N(rs, c.lambda, c.ell, PsiMode::fixed);
        const auto b = gch_N(rs, c.lambda, c.ell, PsiMode::per_weight);
        if (a == b)
            return CheckResult{};
        return CheckResult{false, "Gamma_{Psi_lambda} = " + kr_gamma(rs, c.lambda, c.ell).psi().key() + " vs per-weight: " +
                                      describe_difference(b, a)};
    });
    over_matrix("gch N is genuine on the test matrix", [](const RootSystem& rs, const MatrixCase& c) {
        return CheckResult{gch_N(rs, c.lambda, c.ell).is_genuine(), "negative multiplicity"};
    });
}

} // namespace

std::vector<MatrixCase> identity_matrix()
{
    std::vector<MatrixCase> out;
    for (int rank : {4, 5}) {
        const auto rs = build_root_system(LieType{Family::D, rank});
        std::vector<Weight> lambdas;
        for (int i = 1; i <= rank; ++i) {
            if (rs.is_spin_node(Node{i}))
                continue;
            for (int m = 1; m <= 3; ++m)
                lambdas.push_back(fundamental_multiple(rank, i, m));
        }
        const Weight two_w3 = fundamental_multiple(rank, 3, 2);
        if (std::find(lambdas.begin(), lambdas.end(), two_w3) == lambdas.end())
            lambdas.push_back(two_w3);
        for (int ell = 1; ell <= 3; ++ell)
            for (const auto& l : lambdas)
                out.push_back({rs.type(), l, ell});
    }
    return out;
}

GradedChar closed_form_m_omega2(int rank, int m, int ell)
{
    GradedChar g(ell);
    for (int k = 0; k <= m; ++k)
        for (const auto& r : compositions(ell, k))
            g.add(fundamental_multiple(rank, 2, m - k), r, 1);
    return g;
}

GradedChar closed_form_m_omega3(int rank, int m)
{
    GradedChar g(1);
    for (int r = 0; r <= m; ++r) {
        Weight w = fundamental_multiple(rank, 3, m - r);
        w.add(0, r);
        g.add(w, MultiDegree{r}, 1);
    }
    return g;
}

GradedChar closed_form_2omega3_d5(int ell)
{
    GradedChar g(ell);
    g.add(Weight{0, 0, 2, 0, 0}, MultiDegree(ell), 1);
    for (const auto& r : bounded_compositions(ell, 1, 1))
        g.add(Weight{1, 0, 1, 0, 0}, r, 1);
    for (const auto& r : bounded_compositions(ell, 2, 1))
        g.add(Weight{0, 1, 0, 0, 0}, r, 1);
    for (const auto& r : compositions(ell, 2))
        g.add(Weight{2, 0, 0, 0, 0}, r, 1);
    for (const auto& r : bounded_compositions(ell, 3, 1))
        g.add(Weight(5), r, 1);
    return g;
}

std::vector<CheckReport> run_suite(Suite suite)
{
    Runner run;
    if (suite == Suite::paper || suite == Suite::all)
        paper_checks(run);
    if (suite == Suite::identities || suite == Suite::all)
        identity_checks(run);
    return run.out;
}

} // namespace krchar
