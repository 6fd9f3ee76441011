#include <krchar/graded.hpp>
#include <krchar/memo.hpp>

#include <algorithm>
#include <unordered_map>

namespace krchar {

// ---------------------------------------------------------------------------
// GradedChar

void GradedChar::add(const Weight& mu, const MultiDegree& r, Mult m)
{
    if (r.ell() != ell_)
        throw std::invalid_argument("GradedChar: degree " + r.str() + " does not have length " + std::to_string(ell_));
    if (m == 0)
        return;
    GradedKey key{mu, r};
    auto [it, inserted] = entries_.try_emplace(key, m);
    if (!inserted) {
        it->second += m;
        if (it->second == 0)
            entries_.erase(it);
    }
}

Mult GradedChar::at(const Weight& mu, const MultiDegree& r) const
{
    auto it = entries_.find(GradedKey{mu, r});
    return it == entries_.end() ? 0 : it->second;
}

bool GradedChar::is_genuine() const
{
    return std::all_of(entries_.begin(), entries_.end(), [](const auto& e) { return e.second > 0; });
}

GradedChar GradedChar::shifted(const MultiDegree& shift) const
{
    GradedChar out(ell_);
    for (const auto& [k, m] : entries_)
        out.add(k.weight, k.degree + shift, m);
    return out;
}

GradedChar& GradedChar::operator+=(const GradedChar& o)
{
    for (const auto& [k, m] : o.entries_)
        add(k.weight, k.degree, m);
    return *this;
}

GradedChar& GradedChar::operator-=(const GradedChar& o)
{
    for (const auto& [k, m] : o.entries_)
        add(k.weight, k.degree, -m);
    return *this;
}

GradedChar& GradedChar::operator*=(Mult k)
{
    if (k == 0) {
        entries_.clear();
        return *this;
    }
    for (auto& e : entries_)
        e.second *= k;
    return *this;
}

// ---------------------------------------------------------------------------
// matrices

bool MonomialMatrix::is_lower_triangular() const
{
    for (std::size_t i = 0; i < size(); ++i)
        for (std::size_t j = i + 1; j < size(); ++j)
            if (!entries[i][j].empty())
                return false;
    return true;
}

bool MonomialMatrix::has_unit_diagonal() const
{
    for (std::size_t i = 0; i < size(); ++i) {
        const auto& p = entries[i][i];
        if (p.size() != 1 || !p.begin()->first.is_zero() || p.begin()->second != 1)
            return false;
    }
    return true;
}

namespace {

int sign_of(int degree) { return degree % 2 == 0 ? 1 : -1; }

MonomialMatrix build_matrix(const GammaSet& gamma, PowerKind kind, const RootSystem& rs, const ModuleSpec& ms)
{
    MonomialMatrix m;
    m.index = gamma.points();
    const std::size_t n = m.index.size();
    m.entries.assign(n, std::vector<LaurentPoly>(n));
    for (std::size_t col = 0; col < n; ++col) {
        const auto& from = m.index[col];
        for (std::size_t row = 0; row < n; ++row) {
            const auto& to = m.index[row];
            const MultiDegree diff = to.degree - from.degree;
            if (!diff.nonnegative())
                continue;
            const Mult c = coefficient_row(rs, ms, from.weight, diff.values(), kind)[to.weight];
            if (c != 0)
                m.entries[row][col][diff] = c;
        }
    }
    return m;
}

} // namespace

Mult ext_dim(const RootSystem& rs, const ModuleSpec& ms, const LambdaPoint& a, const LambdaPoint& b, int j)
{
    if (a.degree.ell() != ms.ell() || b.degree.ell() != ms.ell())
        throw std::invalid_argument("ext_dim: degree length does not match the module spec");
    const MultiDegree diff = b.degree - a.degree;
    if (!diff.nonnegative() || diff.deg() != j)
        return 0;
    return c_coefficient(rs, ms, a.weight, b.weight, diff.values());
}

MonomialMatrix matrix_E(const RootSystem& rs, const ModuleSpec& ms, const GammaSet& gamma)
{
    return build_matrix(gamma, PowerKind::exterior, rs, ms);
}

MonomialMatrix matrix_A(const RootSystem& rs, const ModuleSpec& ms, const GammaSet& gamma)
{
    return build_matrix(gamma, PowerKind::symmetric, rs, ms);
}

CheckResult verify_AE_identity(const MonomialMatrix& a, const MonomialMatrix& e)
{
    if (a.index != e.index)
        return {false, "A and E are indexed by different sets"};
    const std::size_t n = a.size();
    for (std::size_t row = 0; row < n; ++row) {
        for (std::size_t col = 0; col < n; ++col) {
            LaurentPoly sum;
            for (std::size_t mid = 0; mid < n; ++mid) {
                const auto& pa = a.entries[row][mid];
                const auto& pe = e.entries[mid][col];
                if (pa.empty() || pe.empty())
                    continue;
                for (const auto& [da, ca] : pa)
                    for (const auto& [de, ce] : pe) {
                        // E(-t): t^r -> (-1)^{deg r} t^r
                        auto& slot = sum[da + de];
                        slot += ca * ce * sign_of(de.deg());
                    }
            }
            std::erase_if(sum, [](const auto& kv) { return kv.second == 0; });
            const bool diag = row == col;
            const bool ok = diag ? (sum.size() == 1 && sum.begin()->first.is_zero() && sum.begin()->second == 1)
                                 : sum.empty();
            if (!ok) {
                std::string detail = "entry (" + a.index[row].str() + ", " + a.index[col].str() + ") =";
                if (sum.empty())
                    detail += " 0";
                for (const auto& [d, c] : sum)
                    detail += " " + std::to_string(c) + "*t^(" + d.str() + ")";
                return {false, detail};
            }
        }
    }
    return {};
}

CheckResult verify_AE_identity(const RootSystem& rs, const ModuleSpec& ms, const GammaSet& gamma)
{
    const auto a = matrix_A(rs, ms, gamma);
    const auto e = matrix_E(rs, ms, gamma);
    if (!a.is_lower_triangular() || !a.has_unit_diagonal())
        return {false, "A(t) is not unitriangular"};
    if (!e.is_lower_triangular() || !e.has_unit_diagonal())
        return {false, "E(t) is not unitriangular"};
    return verify_AE_identity(a, e);
}

// ---------------------------------------------------------------------------
// graded characters

GradedChar gch_P_direct(const RootSystem& rs, const ModuleSpec& ms, const LambdaPoint& base, const GammaSet& gamma)
{
    if (!gamma.contains(base))
        throw std::invalid_argument("gch_P_direct: base " + base.str() + " is not in gamma");
    GradedChar out(gamma.ell());
    for (const auto& p : gamma.points()) {
        const MultiDegree diff = p.degree - base.degree;
        if (!diff.nonnegative())
            continue;
        out.add(p.weight, p.degree, sym_coefficient(rs, ms, base.weight, p.weight, diff.values()));
    }
    return out;
}

namespace {

/// Psi used for the inner term at weight mu.
PsiSet inner_psi(const RootSystem& rs, const ModuleSpec& ms, const PsiSet& outer, const Weight& mu, PsiMode mode)
{
    if (mode == PsiMode::fixed)
        return outer;
    static BoundedMemo<std::string, PsiSet> certified;
    const Node node = i_lambda(rs, mu);
    const std::string key = rs.type().name() + '|' + ms.key() + '|' + std::to_string(node.index);
    return certified.get_or_compute(key, [&] {
        WeightChar v;
        std::map<Weight, Mult> seen;
        for (int j = 0; j < ms.ell(); ++j) {
            const WeightChar part = component_character(rs, ms, j);
            for (const auto& [w, m] : part.entries())
                seen[w] = 1;
        }
        for (const auto& [w, m] : seen)
            v.add(w, 1);
        return certify(rs, psi_i(rs, node), v);
    });
}

BoundedMemo<std::string, GradedChar>& recursion_memo()
{
    static BoundedMemo<std::string, GradedChar> m;
    return m;
}

GradedChar leading_term(const RootSystem& rs, const ModuleSpec& ms, const LambdaPoint& base, const GammaSet& gamma,
                        PsiMode mode);

/// gch P(mu, 0)^{Gamma_Psi(mu, 0)}, memoised per (psi, mu).
GradedChar at_zero(const RootSystem& rs, const ModuleSpec& ms, const PsiSet& psi, const Weight& mu, PsiMode mode)
{
    const std::string key = rs.type().name() + '|' + ms.key() + '|' + psi.key() + '|' + mu.str() +
                            (mode == PsiMode::fixed ? "|F" : "|W");
    if (auto hit = recursion_memo().find(key))
        return *hit;
    const LambdaPoint base{mu, MultiDegree(ms.ell())};
    const GammaSet gamma = gamma_psi(rs, psi, base, true);
    return recursion_memo().insert(key, leading_term(rs, ms, base, gamma, mode));
}

GradedChar leading_term(const RootSystem& rs, const ModuleSpec& ms, const LambdaPoint& base, const GammaSet& gamma,
                        PsiMode mode)
{
    GradedChar out(gamma.ell());
    out.add(base.weight, base.degree, 1);
    for (const auto& p : gamma.points()) {
        if (p == base)
            continue;
        const MultiDegree diff = p.degree - base.degree;
        if (!diff.nonnegative())
            continue;
        const Mult c = c_coefficient(rs, ms, base.weight, p.weight, diff.values());
        if (c == 0)
            continue;
        const PsiSet psi = inner_psi(rs, ms, gamma.psi(), p.weight, mode);
        GradedChar inner = at_zero(rs, ms, psi, p.weight, mode).shifted(p.degree);
        inner *= sign_of(diff.deg()) * c;
        out -= inner;
    }
    return out;
}

} // namespace

GradedChar gch_P_recursive(const RootSystem& rs, const ModuleSpec& ms, const LambdaPoint& base, const GammaSet& gamma,
                           PsiMode mode)
{
    if (!gamma.contains(base))
        throw std::invalid_argument("gch_P_recursive: base " + base.str() + " is not in gamma");
    return leading_term(rs, ms, base, gamma, mode);
}

GammaSet kr_gamma(const RootSystem& rs, const Weight& lambda, int ell)
{
    if (lambda.rank() != rs.rank() || !lambda.is_dominant())
        throw std::invalid_argument("gch_N: weight " + lambda.str() + " is not a dominant weight of " + rs.type().name());
    const PsiSet psi = adjoint_psi_lambda(rs, lambda);
    return gamma_psi(rs, psi, LambdaPoint{lambda, MultiDegree(ell)});
}

GradedChar gch_N(const RootSystem& rs, const Weight& lambda, int ell, PsiMode mode)
{
    const GammaSet gamma = kr_gamma(rs, lambda, ell);
    const ModuleSpec ms = ModuleSpec::adjoint(rs, ell);
    if (mode == PsiMode::fixed)
        return gch_P_direct(rs, ms, gamma.base(), gamma);
    return gch_P_recursive(rs, ms, gamma.base(), gamma, PsiMode::per_weight);
}

GradedChar specialize_degree(const GradedChar& g)
{
    GradedChar out(1);
    for (const auto& [k, m] : g.entries())
        out.add(k.weight, MultiDegree(std::vector<int>{k.degree.deg()}), m);
    return out;
}

GradedWeightChar expand_to_weights(const RootSystem& rs, const GradedChar& g)
{
    GradedWeightChar out;
    for (const auto& [k, m] : g.entries()) {
        const WeightChar ch = freudenthal(rs, k.weight);
        for (const auto& [w, c] : ch.entries()) {
            auto& slot = out[{k.degree, w}];
            slot += m * c;
            if (slot == 0)
                out.erase({k.degree, w});
        }
    }
    return out;
}

CheckResult verify_alternating_sum(const RootSystem& rs, const ModuleSpec& ms, const LambdaPoint& base,
                                   const GammaSet& gamma)
{
    if (!gamma.contains(base))
        return {false, "base " + base.str() + " is not in gamma"};
    struct KeyHash {
        std::size_t operator()(const std::pair<MultiDegree, Weight>& k) const noexcept
        {
            std::size_t h = k.second.hash();
            for (int x : k.first.values())
                h = h * 1000003u + static_cast<std::size_t>(x + 7);
            return h;
        }
    };
    std::unordered_map<std::pair<MultiDegree, Weight>, Mult, KeyHash> total;
    for (const auto& p : gamma.points()) {
        const MultiDegree diff = p.degree - base.degree;
        if (!diff.nonnegative())
            continue;
        const Mult c = c_coefficient(rs, ms, base.weight, p.weight, diff.values());
        if (c == 0)
            continue;
        const Mult coeff = sign_of(p.degree.deg()) * c;
        const GradedChar proj = gch_P_direct(rs, ms, p, gamma);
        for (const auto& [k, m] : proj.entries()) {
            const WeightChar ch = freudenthal(rs, k.weight);
            for (const auto& [w, mult] : ch.entries())
                total[{k.degree, w}] += coeff * m * mult;
        }
    }
    // Subtract ch V(lambda) (-t)^n.
    const Mult lead = sign_of(base.degree.deg());
    const WeightChar lead_ch = freudenthal(rs, base.weight);
    for (const auto& [w, mult] : lead_ch.entries())
        total[{base.degree, w}] -= lead * mult;
    for (const auto& [k, m] : total)
        if (m != 0)
            return {false, "weight " + k.second.str() + " at degree " + k.first.str() + " is off by " + std::to_string(m)};
    return {};
}

std::vector<Mult> multiplicity_ell_profile(const RootSystem& rs, const Weight& lambda, const Weight& mu, int ell_max)
{
    std::vector<Mult> out;
    for (int ell = 1; ell <= ell_max; ++ell) {
        Mult total = 0;
        const GradedChar g = gch_N(rs, lambda, ell);
        for (const auto& [k, m] : g.entries())
            if (k.weight == mu)
                total += m;
        out.push_back(total);
    }
    return out;
}

} // namespace krchar
