#pragma once

#include <vector>

#include "sunit/field.hpp"

namespace sunit::detail {

struct FieldData {
    FieldDescriptor desc;
    int n = 1;
    int r1 = 1, r2 = 0;
    std::string label;

    // quadratic data: omega with omega^2 = t*omega + u
    Int quad_t = 0, quad_u = 0;
    Int disc = 1;

    // table data
    std::vector<std::vector<std::vector<Rat>>> table;  // [i][j] -> coords
    bool power_basis = false;
    std::vector<Rat> red_row0;  // b1^n in basis coords when power_basis
    std::vector<std::vector<Rat>> red_rows;  // b1^(n+k), k = 0..n-2
    std::vector<std::vector<std::vector<Int>>> autos;

    // cached handle for FieldElement::field()
    std::weak_ptr<const FieldData> self;

    std::vector<Rat> mul(const std::vector<Rat>& a,
                         const std::vector<Rat>& b) const;
    std::vector<Rat> mul_table_generic(const std::vector<Rat>& a,
                                       const std::vector<Rat>& b) const;
    Rat norm(const std::vector<Rat>& a) const;
    Rat trace(const std::vector<Rat>& a) const;
    std::vector<Rat> inverse(const std::vector<Rat>& a) const;
    std::vector<std::vector<Rat>> mul_matrix(const std::vector<Rat>& a) const;
    std::vector<Rat> apply_auto(size_t idx, const std::vector<Rat>& a) const;
};

// exact determinant of a rational matrix (Gauss)
Rat det_rat(std::vector<std::vector<Rat>> m);

// solve m x = rhs over Q; returns empty optional when singular
std::optional<std::vector<Rat>> solve_rat(std::vector<std::vector<Rat>> m,
                                          std::vector<Rat> rhs);

}  // namespace sunit::detail
