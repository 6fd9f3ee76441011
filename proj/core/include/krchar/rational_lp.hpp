#pragma once

#include <krchar/rootsys.hpp>

#include <vector>

namespace krchar::lp {

using Matrix = std::vector<std::vector<Rational>>;

/// Basis of the right null space of m (columns returned as vectors).
std::vector<std::vector<Rational>> null_space(const Matrix& m, std::size_t cols);

/// Exact phase-one simplex: does some z in Q^k satisfy m z >= 1 componentwise?
/// Rows of m all have length k.  An empty system is feasible.
bool strictly_feasible(const Matrix& m, std::size_t k);

/// Is there a linear functional phi and constant c with phi(v) = c on `on_face`
/// and phi(v) > c on `off_face`?  Vectors are given in any fixed basis.
bool separable_face(const std::vector<std::vector<int>>& on_face, const std::vector<std::vector<int>>& off_face,
                    std::size_t dim);

} // namespace krchar::lp
