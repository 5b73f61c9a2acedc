#pragma once
#include "csdiv/divisor.hpp"
#include "oracles.hpp"

inline csd::Divisor to_div(const oracle::Seq& s) {
    csd::IntVec v;
    for (long x : s) v.emplace_back(x);
    return csd::Divisor(std::move(v));
}

inline oracle::Seq to_seq(const csd::Divisor& d) {
    oracle::Seq s;
    for (const csd::Int& x : d.entries()) s.push_back(x.get_si());
    return s;
}

inline csd::Divisor dn(std::size_t n) { return to_div(oracle::Seq(n, -2)); }

// random toric move on d (blow-up, or blow-down when a -1 is present and r >= 3)
inline csd::Move random_toric_move(const csd::Divisor& d, std::mt19937_64& rng) {
    std::vector<csd::Move> opts;
    for (std::size_t e = 0; e < d.length(); ++e) opts.push_back({csd::MoveKind::ToricBlowUp, e, 0});
    if (d.length() >= 3)
        for (std::size_t i = 0; i < d.length(); ++i)
            if (d[i] == -1) opts.push_back({csd::MoveKind::ToricBlowDown, i, 0});
    return opts[std::uniform_int_distribution<std::size_t>(0, opts.size() - 1)(rng)];
}

// all canonical cycles with length in [rmin, rmax] and entries in [lo, hi]
inline std::vector<oracle::Seq> all_canonical(std::size_t rmin, std::size_t rmax, long lo, long hi) {
    std::vector<oracle::Seq> out;
    for (std::size_t r = rmin; r <= rmax; ++r) {
        oracle::Seq v(r, lo);
        for (;;) {
            if (oracle::min_dihedral(v) == v) out.push_back(v);
            std::size_t i = r;
            while (i > 0 && v[i - 1] == hi) v[--i] = lo;
            if (i == 0) break;
            ++v[i - 1];
        }
    }
    return out;
}
