#pragma once

#include "csdiv/core.hpp"
#include "csdiv/divisor.hpp"

#include <string>
#include <vector>

namespace csd {

struct SL2 {
    Int a = 1, b = 0, c = 0, d = 1;

    static SL2 identity() { return {}; }
    static SL2 of(long a, long b, long c, long d);
    Int trace() const { return a + d; }
    Int det() const { return a * d - b * c; }
    SL2 inverse() const { return {d, -b, -c, a}; }
    SL2 operator-() const { return {-a, -b, -c, -d}; }
    bool operator==(const SL2&) const = default;
    std::string to_string() const;
};

SL2 operator*(const SL2& x, const SL2& y);
SL2 power(const SL2& x, long n);

const SL2& gen_R();  // [[1,1],[0,1]]
const SL2& gen_L();  // [[1,0],[1,1]]

enum class BundleKind { Elliptic, PositiveParabolic, NegativeParabolic, PositiveHyperbolic, NegativeHyperbolic };
const char* kind_name(BundleKind k);

struct BundleClass {
    BundleKind kind = BundleKind::Elliptic;
    int sign = 1;        // sign of the trace (elliptic: sign of the lower-left entry)
    Int n = 0;           // parabolic: representative sign*[[1,n],[0,1]]
    IntVec word;         // hyperbolic: exponents of R^x1 L^y1 ... R^xk L^yk, minimal even rotation
    std::string label;   // elliptic: order3+/order3-/order4+/order4-/order6+/order6-
    bool operator==(const BundleClass&) const = default;
    std::string to_string() const;
};

SL2 word_matrix(const std::vector<Int>& t);
SL2 monodromy(const Divisor& d);
BundleKind bundle_type(const SL2& m);

// SL(2,Z) conjugacy class; never inverts
BundleClass conjugacy_canon(const SL2& m);
// conjugacy class modulo A -> J A^{-1} J (base circle direction forgotten)
BundleClass oriented_canon(const SL2& m);
// class of -Y_D
BundleClass negative_boundary_class(const Divisor& d);
bool bundle_equal_oriented(const SL2& x, const SL2& y);
bool bundle_equal_oriented(const Divisor& x, const Divisor& y);

// P with P^{-1} m P = R^{x1} L^{y1} ... (hyperbolic, trace >= 3 after sign); exposed for tests
SL2 hyperbolic_reducer(const SL2& m);
// positive matrix -> R/L exponent list read left to right, starting with R, ending with L
IntVec rl_exponents(const SL2& positive);
SL2 word_from_exponents(const IntVec& ex);
// canonical oriented word of the reversed bundle
IntVec reverse_word(const IntVec& w);

}  // namespace csd
