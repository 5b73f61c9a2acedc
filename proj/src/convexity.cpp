#include "csdiv/convexity.hpp"

namespace csd {

const char* trichotomy_name(Trichotomy t) {
    switch (t) {
        case Trichotomy::Concave: return "concave";
        case Trichotomy::Convex: return "convex";
        case Trichotomy::Neither: return "neither";
    }
    return "?";
}

std::optional<RatVec> feasible_point(const std::vector<RatVec>& G, const RatVec& h, RatVec* farkas) {
    // phase one: G y - s + a = h (rows sign-normalized), minimise sum a, Bland's rule
    const std::size_t m = G.size();
    const std::size_t n = m ? G[0].size() : 0;
    const std::size_t N = n + 2 * m;
    std::vector<RatVec> T(m, RatVec(N + 1));
    std::vector<int> sigma(m, 1);
    std::vector<std::size_t> basis(m);
    for (std::size_t i = 0; i < m; ++i) {
        sigma[i] = sgn(h[i]) < 0 ? -1 : 1;
        for (std::size_t j = 0; j < n; ++j) T[i][j] = sigma[i] * G[i][j];
        T[i][n + i] = -sigma[i];
        T[i][n + m + i] = 1;
        T[i][N] = sigma[i] * h[i];
        basis[i] = n + m + i;
    }
    RatVec cost(N);
    for (std::size_t i = 0; i < m; ++i) cost[n + m + i] = 1;
    RatVec red(N + 1);  // reduced costs; red[N] = -objective
    for (std::size_t j = 0; j <= N; ++j) {
        Rat v = j < N ? cost[j] : Rat(0);
        for (std::size_t i = 0; i < m; ++i) v -= T[i][j];
        red[j] = v;
    }
    for (;;) {
        std::size_t enter = N;
        for (std::size_t j = 0; j < N; ++j)
            if (sgn(red[j]) < 0) { enter = j; break; }
        if (enter == N) break;
        std::size_t leave = m;
        Rat best;
        for (std::size_t i = 0; i < m; ++i) {
            if (sgn(T[i][enter]) <= 0) continue;
            Rat ratio = T[i][N] / T[i][enter];
            if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
                leave = i;
                best = ratio;
            }
        }
        if (leave == m) break;  // unbounded cannot happen in phase one
        Rat piv = T[leave][enter];
        for (std::size_t j = 0; j <= N; ++j) T[leave][j] /= piv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == leave || sgn(T[i][enter]) == 0) continue;
            Rat f = T[i][enter];
            for (std::size_t j = 0; j <= N; ++j) T[i][j] -= f * T[leave][j];
        }
        Rat f = red[enter];
        for (std::size_t j = 0; j <= N; ++j) red[j] -= f * T[leave][j];
        basis[leave] = enter;
    }
    if (sgn(red[N]) == 0) {
        RatVec y(n);
        for (std::size_t i = 0; i < m; ++i)
            if (basis[i] < n) y[basis[i]] = T[i][N];
        return y;
    }
    if (farkas) {
        farkas->assign(m, Rat(0));
        for (std::size_t i = 0; i < m; ++i) (*farkas)[i] = sigma[i] * (Rat(1) - red[n + m + i]);
    }
    return std::nullopt;
}

GsSystem gs_system(const Divisor& d, GsMode mode) {
    const IntMatrix q = intersection_matrix(d);
    const std::size_t r = d.length();
    GsSystem s;
    s.G.assign(r, RatVec(r));
    s.h.assign(r, Rat(1));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) {
            if (mode == GsMode::Concave) {
                s.G[i][j] = q(i, j);
                s.h[i] -= q(i, j);
            } else {
                s.G[i][j] = -q(i, j);
            }
        }
    return s;
}

static RatVec times_q(const Divisor& d, const RatVec& z) {
    const IntMatrix q = intersection_matrix(d);
    RatVec a(z.size());
    for (std::size_t i = 0; i < z.size(); ++i)
        for (std::size_t j = 0; j < z.size(); ++j) a[i] += Rat(q(i, j)) * z[j];
    return a;
}

ConvexityVerdict gs_feasible(const Divisor& d, GsMode mode) {
    const GsSystem sys = gs_system(d, mode);
    ConvexityVerdict v;
    RatVec u;
    auto y = feasible_point(sys.G, sys.h, &u);
    if (y) {
        GsCertificate c;
        for (const Rat& x : *y) c.z.push_back(mode == GsMode::Concave ? Rat(x + 1) : Rat(-x));
        c.a = times_q(d, c.z);
        v.feasible = true;
        v.certificate = std::move(c);
    } else {
        v.witness = FarkasWitness{std::move(u)};
    }
    return v;
}

bool certificate_valid(const Divisor& d, GsMode mode, const GsCertificate& c) {
    if (c.z.size() != d.length() || c.a != times_q(d, c.z)) return false;
    for (std::size_t i = 0; i < c.z.size(); ++i) {
        if (sgn(c.a[i]) <= 0) return false;
        if (mode == GsMode::Concave && sgn(c.z[i]) <= 0) return false;
        if (mode == GsMode::Convex && sgn(c.z[i]) > 0) return false;
    }
    return true;
}

bool witness_valid(const Divisor& d, GsMode mode, const FarkasWitness& w) {
    const GsSystem sys = gs_system(d, mode);
    const std::size_t m = sys.G.size();
    if (w.u.size() != m) return false;
    Rat uh = 0;
    for (std::size_t i = 0; i < m; ++i) {
        if (sgn(w.u[i]) < 0) return false;
        uh += w.u[i] * sys.h[i];
    }
    if (sgn(uh) <= 0) return false;
    for (std::size_t j = 0; j < m; ++j) {
        Rat col = 0;
        for (std::size_t i = 0; i < m; ++i) col += w.u[i] * sys.G[i][j];
        if (sgn(col) > 0) return false;
    }
    return true;
}

Trichotomy trichotomy(const Signature& s) {
    if (s.b_plus >= 1) return Trichotomy::Concave;
    if (s.b_zero == 0) return Trichotomy::Convex;
    return Trichotomy::Neither;
}

Trichotomy trichotomy(const Divisor& d) { return trichotomy(signature(d)); }

std::optional<RatVec> solve_area(const Divisor& d, const RatVec& a) {
    const IntMatrix q = intersection_matrix(d);
    const std::size_t n = d.length();
    std::vector<RatVec> M(n, RatVec(n + 1));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) M[i][j] = q(i, j);
        M[i][n] = a[i];
    }
    std::vector<std::size_t> pivcol;
    std::size_t row = 0;
    for (std::size_t col = 0; col < n && row < n; ++col) {
        std::size_t p = row;
        while (p < n && sgn(M[p][col]) == 0) ++p;
        if (p == n) continue;
        std::swap(M[p], M[row]);
        Rat piv = M[row][col];
        for (auto& x : M[row]) x /= piv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == row || sgn(M[i][col]) == 0) continue;
            Rat f = M[i][col];
            for (std::size_t j = 0; j <= n; ++j) M[i][j] -= f * M[row][j];
        }
        pivcol.push_back(col);
        ++row;
    }
    for (std::size_t i = row; i < n; ++i)
        if (sgn(M[i][n]) != 0) return std::nullopt;
    RatVec z(n);
    for (std::size_t i = 0; i < pivcol.size(); ++i) z[pivcol[i]] = M[i][n];
    return z;
}

}  // namespace csd
