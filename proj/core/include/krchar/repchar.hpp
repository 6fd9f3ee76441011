#pragma once

#include <krchar/rootsys.hpp>

#include <cstdint>
#include <map>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace krchar {

using Mult = std::int64_t;

/// Formal character sum_xi m(xi) e^xi with finite support.
///
/// Signed entries are allowed: alternating sums pass through virtual
/// characters.  Zero entries are never stored.
class WeightChar {
public:
    using Map = std::unordered_map<Weight, Mult, WeightHash>;

    WeightChar() = default;
    static WeightChar single(const Weight& w, Mult m = 1)
    {
        WeightChar c;
        c.add(w, m);
        return c;
    }

    void add(const Weight& w, Mult m);
    Mult operator[](const Weight& w) const;
    const Map& entries() const { return entries_; }
    std::size_t size() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }

    /// Sum of all multiplicities.
    Mult dimension() const;
    bool is_genuine() const;
    bool is_weyl_invariant(const RootSystem& rs) const;
    /// Entries sorted lexicographically by weight.
    std::vector<std::pair<Weight, Mult>> sorted() const;

    WeightChar& operator+=(const WeightChar& o);
    WeightChar& operator-=(const WeightChar& o);
    WeightChar& operator*=(Mult k);
    friend WeightChar operator+(WeightChar a, const WeightChar& b) { return a += b; }
    friend WeightChar operator-(WeightChar a, const WeightChar& b) { return a -= b; }
    friend WeightChar operator*(Mult k, WeightChar a) { return a *= k; }
    /// Character of the tensor product.
    friend WeightChar operator*(const WeightChar& a, const WeightChar& b);
    friend bool operator==(const WeightChar& a, const WeightChar& b) { return a.entries_ == b.entries_; }

private:
    Map entries_;
};

/// Isotypical decomposition: dominant weight -> multiplicity of V(mu).
class IsoChar {
public:
    IsoChar() = default;
    static IsoChar single(const Weight& w, Mult m = 1)
    {
        IsoChar c;
        c.add(w, m);
        return c;
    }

    void add(const Weight& w, Mult m);
    Mult operator[](const Weight& w) const;
    const std::map<Weight, Mult>& entries() const { return entries_; }
    std::size_t size() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }
    bool is_genuine() const;
    /// sum mult(mu) * weyl_dim(mu)
    Mult dimension(const RootSystem& rs) const;

    IsoChar& operator+=(const IsoChar& o);
    IsoChar& operator*=(Mult k);
    friend bool operator==(const IsoChar&, const IsoChar&) = default;

private:
    std::map<Weight, Mult> entries_;
};

/// The g-module V = V_1 + ... + V_ell making up the degree-one part of the
/// current algebra; each V_j is listed by the highest weights of its simple
/// summands.
class ModuleSpec {
public:
    explicit ModuleSpec(std::vector<std::vector<Weight>> components);
    /// Every V_j equal to the adjoint module.
    static ModuleSpec adjoint(const RootSystem& rs, int ell);

    int ell() const { return static_cast<int>(components_.size()); }
    const std::vector<std::vector<Weight>>& components() const { return components_; }
    /// True when all V_j coincide, so coefficients only depend on the multiset of degrees.
    bool uniform() const { return uniform_; }
    /// Canonical text form used as a cache key.
    const std::string& key() const { return key_; }

private:
    std::vector<std::vector<Weight>> components_;
    bool uniform_ = true;
    std::string key_;
};

/// Character of V(lambda) by the Freudenthal recursion.
WeightChar freudenthal(const RootSystem& rs, const Weight& lambda);
/// Multiplicities of the dominant weights of V(lambda).
std::map<Weight, Mult> dominant_multiplicities(const RootSystem& rs, const Weight& lambda);

/// V(lambda) (x) V(nu) by the Racah-Speiser algorithm.
IsoChar tensor_decompose(const RootSystem& rs, const Weight& lambda, const Weight& nu);

WeightChar ext_power(const WeightChar& ch, int k);
WeightChar sym_power(const WeightChar& ch, int k);

/// Isotypical decomposition of a Weyl-invariant character by peeling off
/// highest weights; throws std::invalid_argument for non-invariant input.
IsoChar iso_decompose(const RootSystem& rs, const WeightChar& ch);

/// Expands an isotypical decomposition back to a weight character.
WeightChar expand(const RootSystem& rs, const IsoChar& iso);

enum class PowerKind { exterior, symmetric };

/// ch V_j for the given ModuleSpec component (0-based j).
WeightChar component_character(const RootSystem& rs, const ModuleSpec& ms, int j);

/// Decomposition of (P^{k_1} V_1) (x) ... (x) (P^{k_ell} V_ell), P = exterior or symmetric power.
IsoChar power_decomposition(const RootSystem& rs, const ModuleSpec& ms, const std::vector<int>& k, PowerKind kind);

/// Decomposition of (P^{k_1} V_1 (x) ... (x) P^{k_ell} V_ell) (x) V(lambda).
IsoChar coefficient_row(const RootSystem& rs, const ModuleSpec& ms, const Weight& lambda, const std::vector<int>& k,
                        PowerKind kind);

/// dim Hom_g((wedge^{k_1} V_1 (x) ... ) (x) V(lambda), V(mu)).
Mult c_coefficient(const RootSystem& rs, const ModuleSpec& ms, const Weight& lambda, const Weight& mu,
                   const std::vector<int>& k);
/// dim Hom_g((Sym^{k_1} V_1 (x) ... ) (x) V(lambda), V(mu)).
Mult sym_coefficient(const RootSystem& rs, const ModuleSpec& ms, const Weight& lambda, const Weight& mu,
                     const std::vector<int>& k);

/// Process-wide memo tables behind the operations above.
namespace memo {

void set_capacity(std::size_t entries);
std::size_t capacity();
/// Drops every cached value (counters are kept).
void clear();
/// Number of tensor products actually evaluated (cache misses) so far.
std::uint64_t tensor_evaluations();

struct TensorEntry {
    LieType type;
    Weight lambda;
    Weight nu;
    IsoChar product;
};
std::vector<TensorEntry> tensor_snapshot();
void seed_tensor(const LieType& type, const Weight& lambda, const Weight& nu, IsoChar product);

} // namespace memo

} // namespace krchar
