#pragma once

#include <krchar/graded.hpp>

#include <string>
#include <string_view>

namespace krchar {

// JSON layout:
//   {"algebra": "D5", "ell": 2,
//    "entries": [{"weight": [0,0,2,0,0], "degree": [0,0], "mult": 1}, ...]}
// with entries in canonical order.  Parsers throw std::invalid_argument.

std::string to_json(const LieType& type, const GradedChar& g, int indent = -1);

struct ParsedGradedChar {
    LieType type;
    GradedChar character;
};
ParsedGradedChar parse_graded_json(std::string_view text);

std::string to_json(const LieType& type, const GammaSet& gamma, int indent = -1);
GammaSet parse_gamma_json(std::string_view text, LieType* type_out = nullptr);

std::string to_json(const LieType& type, const IsoChar& iso, int indent = -1);

/// "\ch V(2\omega_3) + \ch V(\omega_1+\omega_3)\, t_2 + ..."
std::string to_latex(const GradedChar& g);
std::string latex_weight(const Weight& w);

/// One line per entry: "<mult>  V(<coords>)  t^(<degree>)".
std::string to_plain(const GradedChar& g);
std::string to_plain(const IsoChar& iso);

/// "coords"; the error message names the bad token and its offset.
Weight parse_weight(std::string_view text, int rank);
/// "coords@degree"; the degree part is required.
LambdaPoint parse_lambda_point(std::string_view text, int rank, int ell);

} // namespace krchar
