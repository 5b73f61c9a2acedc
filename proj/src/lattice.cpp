#include "csdiv/lattice.hpp"

#include <algorithm>
#include <sstream>

namespace csd {

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long>>& rows) {
    IntMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = rows[i][j];
    return m;
}

bool IntMatrix::is_symmetric() const {
    if (r_ != c_) return false;
    for (std::size_t i = 0; i < r_; ++i)
        for (std::size_t j = i + 1; j < c_; ++j)
            if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
}

std::string IntMatrix::to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < r_; ++i) {
        for (std::size_t j = 0; j < c_; ++j) os << (j ? " " : "") << (*this)(i, j).get_str();
        os << "\n";
    }
    return os.str();
}

IntMatrix operator*(const IntMatrix& x, const IntMatrix& y) {
    IntMatrix z(x.rows(), y.cols());
    for (std::size_t i = 0; i < x.rows(); ++i)
        for (std::size_t k = 0; k < x.cols(); ++k) {
            if (sgn(x(i, k)) == 0) continue;
            for (std::size_t j = 0; j < y.cols(); ++j) z(i, j) += x(i, k) * y(k, j);
        }
    return z;
}

IntVec operator*(const IntMatrix& x, const IntVec& v) {
    IntVec out(x.rows());
    for (std::size_t i = 0; i < x.rows(); ++i)
        for (std::size_t j = 0; j < x.cols(); ++j) out[i] += x(i, j) * v[j];
    return out;
}

Int AbelianGroup::torsion_order() const {
    Int o = 1;
    for (const Int& t : torsion) o *= t;
    return o;
}

std::string AbelianGroup::to_string() const {
    std::string s;
    auto add = [&](const std::string& part) { s += (s.empty() ? "" : " + ") + part; };
    if (free_rank > 0) add(free_rank == 1 ? "Z" : "Z^" + std::to_string(free_rank));
    for (const Int& t : torsion) add("Z/" + t.get_str());
    return s.empty() ? "0" : s;
}

IntMatrix intersection_matrix(const Divisor& d) {
    const std::size_t r = d.length();
    IntMatrix q(r, r);
    for (std::size_t i = 0; i < r; ++i) q(i, i) = d[i];
    if (r == 2) {
        q(0, 1) = q(1, 0) = 2;
        return q;
    }
    for (std::size_t i = 0; i < r; ++i) {
        std::size_t j = (i + 1) % r;
        q(i, j) = q(j, i) = 1;
    }
    return q;
}

IntVec characteristic_polynomial(const IntMatrix& a) {
    // Faddeev-LeVerrier; every division is exact over Z
    const std::size_t n = a.rows();
    IntVec c(n + 1);
    c[n] = 1;
    IntMatrix mk(n, n);
    for (std::size_t k = 1; k <= n; ++k) {
        IntMatrix next = a * mk;
        for (std::size_t i = 0; i < n; ++i) next(i, i) += c[n - k + 1];
        mk = std::move(next);
        IntMatrix am = a * mk;
        Int tr = 0;
        for (std::size_t i = 0; i < n; ++i) tr += am(i, i);
        Int kk(static_cast<unsigned long>(k));
        Int q;
        mpz_divexact(q.get_mpz_t(), tr.get_mpz_t(), kk.get_mpz_t());
        c[n - k] = -q;
    }
    return c;
}

Int determinant(const IntMatrix& m) {
    // Bareiss fraction-free elimination
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    IntMatrix a = m;
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (sgn(a(k, k)) == 0) {
            std::size_t p = k + 1;
            while (p < n && sgn(a(p, k)) == 0) ++p;
            if (p == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                Int t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
                mpz_divexact(a(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

std::size_t rank(const IntMatrix& m) {
    std::size_t n = 0;
    for (const Int& d : smith_diagonal(m)) n += sgn(d) != 0;
    return n;
}

static std::size_t sign_variations(const std::vector<int>& signs) {
    std::size_t v = 0;
    int last = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (last != 0 && s != last) ++v;
        last = s;
    }
    return v;
}

Signature signature(const IntMatrix& m) {
    if (!m.is_symmetric()) throw Error(ErrorKind::Internal, "signature needs a symmetric matrix");
    const IntVec p = characteristic_polynomial(m);
    const std::size_t n = m.rows();
    std::size_t zeros = 0;
    while (zeros < n && sgn(p[zeros]) == 0) ++zeros;
    // all roots are real, so Descartes' bound is exact
    std::vector<int> pos, neg;
    for (std::size_t k = zeros; k <= n; ++k) {
        int s = sgn(p[k]);
        pos.push_back(s);
        neg.push_back(((k % 2) == 1) ? -s : s);
    }
    Signature sg;
    sg.b_zero = zeros;
    sg.b_plus = sign_variations(pos);
    sg.b_minus = sign_variations(neg);
    if (sg.b_plus + sg.b_minus + sg.b_zero != n) throw Error(ErrorKind::Internal, "root count mismatch");
    return sg;
}

Signature signature(const Divisor& d) { return signature(intersection_matrix(d)); }

// nearest-integer quotient keeps |remainder| <= |p|/2
static Int round_div(const Int& x, const Int& p) {
    Int q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), x.get_mpz_t(), p.get_mpz_t());
    Int r2 = 2 * r;
    if (mpz_cmpabs(r2.get_mpz_t(), p.get_mpz_t()) > 0) q += 1;
    return q;
}

IntVec smith_diagonal(const IntMatrix& m) {
    IntMatrix a = m;
    const std::size_t R = a.rows(), C = a.cols();
    IntVec diag;
    for (std::size_t t = 0; t < R && t < C; ++t) {
        for (;;) {
            // pivot: smallest nonzero absolute value in the remaining block
            std::size_t pi = R, pj = C;
            for (std::size_t i = t; i < R; ++i)
                for (std::size_t j = t; j < C; ++j)
                    if (sgn(a(i, j)) != 0 &&
                        (pi == R || mpz_cmpabs(a(i, j).get_mpz_t(), a(pi, pj).get_mpz_t()) < 0)) {
                        pi = i;
                        pj = j;
                    }
            if (pi == R) return diag;
            for (std::size_t j = t; j < C; ++j) std::swap(a(t, j), a(pi, j));
            for (std::size_t i = t; i < R; ++i) std::swap(a(i, t), a(i, pj));
            const Int p = a(t, t);
            bool reduced = true;
            for (std::size_t i = t + 1; i < R; ++i) {
                if (sgn(a(i, t)) == 0) continue;
                const Int q = round_div(a(i, t), p);
                for (std::size_t j = t; j < C; ++j) a(i, j) -= q * a(t, j);
                if (sgn(a(i, t)) != 0) reduced = false;
            }
            for (std::size_t j = t + 1; j < C; ++j) {
                if (sgn(a(t, j)) == 0) continue;
                const Int q = round_div(a(t, j), p);
                for (std::size_t i = t; i < R; ++i) a(i, j) -= q * a(i, t);
                if (sgn(a(t, j)) != 0) reduced = false;
            }
            if (!reduced) continue;
            // divisibility: fold an offending row into the pivot row and go again
            bool divides = true;
            for (std::size_t i = t + 1; i < R && divides; ++i)
                for (std::size_t j = t + 1; j < C; ++j)
                    if (!mpz_divisible_p(a(i, j).get_mpz_t(), p.get_mpz_t())) {
                        for (std::size_t k = t; k < C; ++k) a(t, k) += a(i, k);
                        divides = false;
                        break;
                    }
            if (divides) break;
        }
        diag.push_back(abs(a(t, t)));
    }
    return diag;
}

AbelianGroup smith_normal_form(const IntMatrix& m) {
    AbelianGroup g;
    IntVec d = smith_diagonal(m);
    g.free_rank = m.rows() - d.size();
    for (const Int& x : d)
        if (x > 1) g.torsion.push_back(x);
    return g;
}

AbelianGroup boundary_h1(const Divisor& d) {
    AbelianGroup g = smith_normal_form(intersection_matrix(d));
    g.free_rank += 1;
    return g;
}

}  // namespace csd
