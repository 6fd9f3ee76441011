#pragma once

#include <krchar/poset.hpp>
#include <krchar/repchar.hpp>

#include <map>
#include <string>
#include <tuple>
#include <vector>

namespace krchar {

struct GradedKey {
    Weight weight;
    MultiDegree degree;
    friend bool operator==(const GradedKey&, const GradedKey&) = default;
};

/// Canonical order (deg, weight, degree), shared by every serialised form.
struct CanonicalOrder {
    bool operator()(const GradedKey& a, const GradedKey& b) const
    {
        const int da = a.degree.deg(), db = b.degree.deg();
        return std::tie(da, a.weight, a.degree) < std::tie(db, b.weight, b.degree);
    }
};

/// gch V = sum [V : V(mu, r)] ch V(mu) t^r, stored isotypically.
class GradedChar {
public:
    using Map = std::map<GradedKey, Mult, CanonicalOrder>;

    GradedChar() = default;
    explicit GradedChar(int ell) : ell_(ell) {}

    int ell() const { return ell_; }
    void add(const Weight& mu, const MultiDegree& r, Mult m);
    Mult at(const Weight& mu, const MultiDegree& r) const;
    const Map& entries() const { return entries_; }
    std::size_t size() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }
    bool is_genuine() const;

    /// Multiplies by t^shift.
    GradedChar shifted(const MultiDegree& shift) const;
    GradedChar& operator+=(const GradedChar& o);
    GradedChar& operator-=(const GradedChar& o);
    GradedChar& operator*=(Mult k);
    friend bool operator==(const GradedChar& a, const GradedChar& b)
    {
        return a.ell_ == b.ell_ && a.entries_ == b.entries_;
    }

private:
    int ell_ = 0;
    Map entries_;
};

/// Integer Laurent polynomial in t_1..t_ell.
using LaurentPoly = std::map<MultiDegree, Mult>;

/// Square matrix over a GammaSet enumeration, entry (row, col) = ((mu,s),(lambda,r)).
struct MonomialMatrix {
    std::vector<LambdaPoint> index;
    std::vector<std::vector<LaurentPoly>> entries;

    std::size_t size() const { return index.size(); }
    bool is_lower_triangular() const;
    bool has_unit_diagonal() const;
};

struct CheckResult {
    bool ok = true;
    std::string detail;
    explicit operator bool() const { return ok; }
};

enum class PsiMode { fixed, per_weight };

/// dim Ext^j(V(lambda, r), V(mu, s)).
Mult ext_dim(const RootSystem& rs, const ModuleSpec& ms, const LambdaPoint& a, const LambdaPoint& b, int j);

MonomialMatrix matrix_E(const RootSystem& rs, const ModuleSpec& ms, const GammaSet& gamma);
MonomialMatrix matrix_A(const RootSystem& rs, const ModuleSpec& ms, const GammaSet& gamma);
/// A(t) E(-t) == Id, reporting the first failing entry.
CheckResult verify_AE_identity(const MonomialMatrix& a, const MonomialMatrix& e);
CheckResult verify_AE_identity(const RootSystem& rs, const ModuleSpec& ms, const GammaSet& gamma);

/// [P(lambda, r) : V(mu, s)] read off Sym-powers, restricted to gamma.
GradedChar gch_P_direct(const RootSystem& rs, const ModuleSpec& ms, const LambdaPoint& base, const GammaSet& gamma);

/// The same character obtained by solving the alternating Ext sum for its
/// leading term, with inner terms gch P(mu, 0)^{Gamma_Psi(mu, 0)} t^s computed
/// recursively.  PsiMode::per_weight re-derives Psi_mu for every inner weight.
GradedChar gch_P_recursive(const RootSystem& rs, const ModuleSpec& ms, const LambdaPoint& base, const GammaSet& gamma,
                           PsiMode mode = PsiMode::fixed);

/// gch N(lambda, 0) for the adjoint current algebra truncated in degree two.
GradedChar gch_N(const RootSystem& rs, const Weight& lambda, int ell, PsiMode mode = PsiMode::fixed);
/// Gamma_{Psi_lambda}(lambda, 0) with the certified Psi_lambda.
GammaSet kr_gamma(const RootSystem& rs, const Weight& lambda, int ell);

/// Collapses every multidegree r to (deg r).
GradedChar specialize_degree(const GradedChar& g);

using GradedWeightChar = std::map<std::pair<MultiDegree, Weight>, Mult>;
GradedWeightChar expand_to_weights(const RootSystem& rs, const GradedChar& g);

/// Checks ch V(lambda) (-t)^n = sum_{(mu,s)} (-1)^{deg s} c^{lambda,n}_{mu,s} gch P(mu,s)^Gamma
/// after expanding everything to weights.
CheckResult verify_alternating_sum(const RootSystem& rs, const ModuleSpec& ms, const LambdaPoint& base,
                                   const GammaSet& gamma);

/// c_ell(lambda, mu) = multiplicity of V(mu) in N(lambda, 0) as a g-module, ell = 1..ell_max.
std::vector<Mult> multiplicity_ell_profile(const RootSystem& rs, const Weight& lambda, const Weight& mu, int ell_max);

} // namespace krchar
