#pragma once

#include <krchar/graded.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace krchar {

enum class Suite { paper, identities, all };
Suite parse_suite(std::string_view name);

struct CheckReport {
    std::string name;
    bool passed = false;
    std::string detail;
    double seconds = 0;
};

/// Deterministic list of checks; a throwing check is reported as failed.
std::vector<CheckReport> run_suite(Suite suite);

struct MatrixCase {
    LieType type;
    Weight lambda;
    int ell;
};
/// {D4, D5} x {m omega_i : m <= 3, i not spin} u {2 omega_3} x {ell <= 3}.
std::vector<MatrixCase> identity_matrix();

/// Expected gch N(m omega_2, 0) = sum_{deg r <= m} ch V((m - deg r) omega_2) t^r.
GradedChar closed_form_m_omega2(int rank, int m, int ell);
/// Expected gch N(m omega_3, 0) = sum_{r <= m} ch V((m - r) omega_3 + r omega_1) t^r, ell = 1.
GradedChar closed_form_m_omega3(int rank, int m);
/// Expected gch N(2 omega_3, 0) for D5 at the given ell.
GradedChar closed_form_2omega3_d5(int ell);

} // namespace krchar
