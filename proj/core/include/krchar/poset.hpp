#pragma once

#include <krchar/repchar.hpp>
#include <krchar/rootsys.hpp>

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace krchar {

/// A point (lambda, r) of P+ x Z^ell.
struct LambdaPoint {
    Weight weight;
    MultiDegree degree;

    friend bool operator==(const LambdaPoint&, const LambdaPoint&) = default;
    friend auto operator<=>(const LambdaPoint&, const LambdaPoint&) = default;
    std::string str() const { return "(" + weight.str() + "@" + degree.str() + ")"; }
};

/// A set of negated positive roots, optionally certified against the face
/// condition and the extra conditions needed for the graded-character results.
class PsiSet {
public:
    PsiSet() = default;
    /// Throws std::invalid_argument unless every element is -beta for a positive root beta.
    static PsiSet from_weights(const RootSystem& rs, std::vector<Weight> elements);

    const std::vector<Weight>& elements() const { return elements_; }
    bool empty() const { return elements_.empty(); }
    std::size_t size() const { return elements_.size(); }
    bool contains(const Weight& w) const;

    bool polytope_checked() const { return polytope_checked_; }
    bool extra_checked() const { return extra_checked_; }
    void mark_checked(bool polytope, bool extra)
    {
        polytope_checked_ = polytope;
        extra_checked_ = extra;
    }
    std::string key() const;

    friend bool operator==(const PsiSet& a, const PsiSet& b) { return a.elements_ == b.elements_; }

private:
    std::vector<Weight> elements_; ///< sorted, no duplicates
    bool polytope_checked_ = false;
    bool extra_checked_ = false;
};

/// Psi_i: negatives of the positive roots whose i-th simple-root coefficient is 2.
PsiSet psi_i(const RootSystem& rs, Node i);
/// Psi(mu) for the adjoint module: roots minimising (alpha, mu).
PsiSet psi_of_mu(const RootSystem& rs, const Weight& mu);
/// Largest non-spin node in the support of lambda, or node 1.
Node i_lambda(const RootSystem& rs, const Weight& lambda);
inline PsiSet psi_lambda(const RootSystem& rs, const Weight& lambda) { return psi_i(rs, i_lambda(rs, lambda)); }

/// True iff psi lies on a proper face of the convex hull of wt(V).
bool check_polytope_condition(std::span<const Weight> psi, const WeightChar& v_weights);
/// The three extra conditions: psi misses P+, finiteness (automatic for subsets
/// of -R+), and xi + alpha_i not in psi for dominant weights xi of V.
bool check_psi_extra(const RootSystem& rs, std::span<const Weight> psi, const WeightChar& v_weights);
/// Runs both checks and records the outcome on a copy of psi.
PsiSet certify(const RootSystem& rs, PsiSet psi, const WeightChar& v_weights);

/// Minimal number of psi elements summing to mu - lambda; nullopt when
/// mu - lambda is not in Z_+ psi.
std::optional<int> d_psi(const RootSystem& rs, const PsiSet& psi, const Weight& lambda, const Weight& mu);

/// True iff `upper` covers `lower`: upper.degree - lower.degree = e_j and
/// upper.weight - lower.weight is a weight of V_j.
bool covers(const RootSystem& rs, const ModuleSpec& ms, const LambdaPoint& upper, const LambdaPoint& lower);

/// (lambda, r) <=_Psi (mu, s).
bool leq_psi(const RootSystem& rs, const PsiSet& psi, const LambdaPoint& a, const LambdaPoint& b);

/// Gamma_Psi(base): every (mu, s) above base, ordered by (d, weight, degree).
class GammaSet {
public:
    const LambdaPoint& base() const { return base_; }
    const PsiSet& psi() const { return psi_; }
    const std::vector<LambdaPoint>& points() const { return points_; }
    const std::map<Weight, int>& distances() const { return d_of_; }
    std::size_t size() const { return points_.size(); }
    int ell() const { return base_.degree.ell(); }

    std::optional<std::size_t> index_of(const LambdaPoint& p) const;
    bool contains(const LambdaPoint& p) const { return index_of(p).has_value(); }
    /// Distinct weights in enumeration order.
    std::vector<Weight> weights() const;

private:
    friend GammaSet gamma_psi(const RootSystem&, const PsiSet&, const LambdaPoint&, bool);
    friend GammaSet make_gamma_set(LambdaPoint, PsiSet, std::vector<LambdaPoint>, std::map<Weight, int>);

    LambdaPoint base_;
    PsiSet psi_;
    std::vector<LambdaPoint> points_;
    std::map<Weight, int> d_of_;
    std::map<LambdaPoint, std::size_t> index_;
};

/// Throws std::invalid_argument when psi has not passed both checks and
/// allow_unchecked is false.  The ell of the set is base.degree.ell().
GammaSet gamma_psi(const RootSystem& rs, const PsiSet& psi, const LambdaPoint& base, bool allow_unchecked = false);

/// Assembles a GammaSet from already enumerated data (deserialisation).
GammaSet make_gamma_set(LambdaPoint base, PsiSet psi, std::vector<LambdaPoint> points, std::map<Weight, int> d_of);

/// The certified Psi_lambda for the adjoint module.
PsiSet adjoint_psi_lambda(const RootSystem& rs, const Weight& lambda);

} // namespace krchar
