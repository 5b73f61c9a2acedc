#pragma once

#include "csdiv/core.hpp"
#include "csdiv/divisor.hpp"

#include <string>
#include <vector>

namespace csd {

class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : r_(rows), c_(cols), a_(rows * cols) {}
    static IntMatrix from_rows(const std::vector<std::vector<long>>& rows);

    std::size_t rows() const { return r_; }
    std::size_t cols() const { return c_; }
    Int& operator()(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
    const Int& operator()(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }
    bool is_symmetric() const;
    bool operator==(const IntMatrix&) const = default;
    std::string to_string() const;

private:
    std::size_t r_ = 0, c_ = 0;
    IntVec a_;
};

IntMatrix operator*(const IntMatrix& x, const IntMatrix& y);
IntVec operator*(const IntMatrix& x, const IntVec& v);

struct Signature {
    std::size_t b_plus = 0, b_minus = 0, b_zero = 0;
    bool operator==(const Signature&) const = default;
    bool negative_definite() const { return b_plus == 0 && b_zero == 0; }
};

struct AbelianGroup {
    std::size_t free_rank = 0;
    IntVec torsion;  // invariant factors, each >= 2, d1 | d2 | ...
    bool operator==(const AbelianGroup&) const = default;
    // order of the torsion part
    Int torsion_order() const;
    std::string to_string() const;
};

IntMatrix intersection_matrix(const Divisor& d);
// det(xI - m), coefficient of x^k at index k
IntVec characteristic_polynomial(const IntMatrix& m);
Int determinant(const IntMatrix& m);
std::size_t rank(const IntMatrix& m);
Signature signature(const IntMatrix& m);
Signature signature(const Divisor& d);
// invariant factors of m (nonzero diagonal of the Smith form, including 1s)
IntVec smith_diagonal(const IntMatrix& m);
// cokernel Z^rows / m Z^cols
AbelianGroup smith_normal_form(const IntMatrix& m);
AbelianGroup boundary_h1(const Divisor& d);

}  // namespace csd
