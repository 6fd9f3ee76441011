#pragma once

#include <krchar/weight.hpp>

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace krchar {

using Rational = boost::multiprecision::cpp_rational;

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D' };

struct LieType {
    Family family = Family::A;
    int rank = 1;

    /// Parses "A3", "D5", ...; throws std::invalid_argument.
    static LieType parse(std::string_view text);
    /// Throws std::invalid_argument unless rank >= 1 (A), >= 2 (B, C), >= 4 (D).
    void validate() const;
    std::string name() const;

    friend bool operator==(const LieType&, const LieType&) = default;
    friend auto operator<=>(const LieType&, const LieType&) = default;
};

/// A Dynkin node in Bourbaki numbering, 1-based.
struct Node {
    int index = 1;
    friend bool operator==(const Node&, const Node&) = default;
};

struct Root {
    std::vector<int> simple_coords; ///< m_{beta,i}
    Weight weight;                  ///< fundamental-weight coordinates
    int height = 0;
};

/// Root datum of a classical simple Lie algebra, immutable once built.
///
/// Conventions: cartan[i][j] = <alpha_i, alpha_j^vee>, so row i is alpha_i in
/// fundamental-weight coordinates and the weight coordinates of a root are
/// cartan^T times its simple-root coordinates.  The symmetric form is scaled
/// so that short roots have squared length 2.
class RootSystem {
public:
    static RootSystem build(LieType type);

    const LieType& type() const { return type_; }
    int rank() const { return type_.rank; }
    const std::vector<std::vector<int>>& cartan() const { return cartan_; }
    const std::vector<Root>& positive_roots() const { return roots_; }
    const Root& highest_root() const { return roots_[highest_]; }
    std::size_t highest_root_index() const { return highest_; }

    /// Squared length (alpha_i, alpha_i) of the simple roots, i = 0..rank-1.
    const std::vector<int>& simple_lengths() const { return lengths_; }
    /// Gram matrix (omega_i, omega_j) of the fundamental weights.
    const std::vector<std::vector<Rational>>& symmetric_form() const { return form_; }

    Rational form(const Weight& a, const Weight& b) const;
    /// form(a, b) * form_scale(), an exact integer.
    std::int64_t scaled_form(const Weight& a, const Weight& b) const;
    std::int64_t form_scale() const { return form_scale_; }
    /// (xi, beta) for a positive root; always an integer under the normalisation.
    std::int64_t pair_with_root(const Weight& xi, std::size_t root_index) const;

    Weight simple_root(int i) const { return simple_roots_[static_cast<std::size_t>(i)]; }
    Weight fundamental(int i) const { return Weight::unit(rank(), i); }
    Weight rho() const;

    bool is_spin_node(Node n) const;

    /// Applies s_i in place.
    void reflect(Weight& xi, int i) const;

    /// Simple-root coordinates of xi multiplied by coord_denominator(); exact integers.
    std::vector<std::int64_t> scaled_root_coords(const Weight& xi) const;
    std::int64_t coord_denominator() const { return denom_; }
    /// True when xi lies in Q+ (all simple-root coordinates integral and >= 0).
    bool in_positive_cone(const Weight& xi) const;
    /// Index of beta in positive_roots() or -1.
    int positive_root_index(const Weight& beta) const;

private:
    RootSystem() = default;

    LieType type_;
    std::vector<std::vector<int>> cartan_;
    std::vector<int> lengths_;
    std::vector<Root> roots_;
    std::size_t highest_ = 0;
    std::vector<Weight> simple_roots_;
    std::vector<std::vector<Rational>> form_;
    std::vector<std::vector<std::int64_t>> scaled_form_;
    std::int64_t form_scale_ = 1;
    std::vector<std::vector<std::int64_t>> adj_; ///< denom * (cartan^T)^{-1}
    std::int64_t denom_ = 1;
    std::vector<std::vector<std::int64_t>> root_pairing_; ///< (omega_i, beta) per root
};

inline RootSystem build_root_system(LieType t) { return RootSystem::build(t); }

struct DominantConjugate {
    Weight dom;
    int parity = 1;        ///< (-1)^{length of the reflecting word}
    bool singular = false; ///< xi has a nontrivial stabiliser (dom lies on a wall)
};

/// Moves xi into the dominant chamber by simple reflections at negative coordinates.
DominantConjugate dominant_conjugate(const RootSystem& rs, Weight xi);

/// Weyl dimension formula; throws std::invalid_argument for non-dominant lambda.
std::int64_t weyl_dim(const RootSystem& rs, const Weight& lambda);

struct RootCoords {
    std::vector<Rational> coords;
    bool integral = true;
};

RootCoords root_coords(const RootSystem& rs, const Weight& xi);

/// The Weyl orbit of a dominant weight.
std::vector<Weight> weyl_orbit(const RootSystem& rs, const Weight& dominant);

/// Dominant weights mu with lambda - mu in Q+ (lambda dominant), lambda first.
std::vector<Weight> dominant_weights_below(const RootSystem& rs, const Weight& lambda);

} // namespace krchar
