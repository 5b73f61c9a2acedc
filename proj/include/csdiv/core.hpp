#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace csd {

using Int = mpz_class;
using Rat = mpq_class;
using IntVec = std::vector<Int>;

enum class ErrorKind {
    Parse,
    TooShort,
    IndexRange,
    NotExceptional,
    LengthTwo,
    NotZero,
    NotZeroPair,
    BudgetInvalid,
    WrongShape,
    NotConcave,
    NotSemidefinite,
    NotFillable,
    NotCuspShape,
    NotNegativeDefinite,
    Internal,
};

const char* error_name(ErrorKind k);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& msg, std::size_t pos = npos)
        : std::runtime_error(std::string(error_name(kind)) + ": " + msg), kind_(kind), pos_(pos) {}
    ErrorKind kind() const { return kind_; }
    // character offset for parse errors
    std::size_t position() const { return pos_; }
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

private:
    ErrorKind kind_;
    std::size_t pos_;
};

struct IntVecHash {
    std::size_t operator()(const IntVec& v) const noexcept {
        std::size_t h = 0xcbf29ce484222325ull ^ v.size();
        for (const Int& x : v) {
            std::size_t y = static_cast<std::size_t>(mpz_get_si(x.get_mpz_t()));
            h ^= y + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        }
        return h;
    }
};

inline long to_long(const Int& x) {
    if (!x.fits_slong_p()) throw Error(ErrorKind::IndexRange, "integer out of machine range: " + x.get_str());
    return x.get_si();
}

}  // namespace csd
