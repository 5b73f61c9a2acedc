#include "csdiv/sl2z.hpp"

#include <algorithm>

namespace csd {

SL2 SL2::of(long a, long b, long c, long d) { return {Int(a), Int(b), Int(c), Int(d)}; }

std::string SL2::to_string() const {
    return "[[" + a.get_str() + "," + b.get_str() + "],[" + c.get_str() + "," + d.get_str() + "]]";
}

SL2 operator*(const SL2& x, const SL2& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}

SL2 power(const SL2& x, long n) {
    SL2 base = n < 0 ? x.inverse() : x;
    unsigned long e = n < 0 ? static_cast<unsigned long>(-(n + 1)) + 1 : static_cast<unsigned long>(n);
    SL2 out;
    while (e) {
        if (e & 1) out = out * base;
        base = base * base;
        e >>= 1;
    }
    return out;
}

const SL2& gen_R() {
    static const SL2 r = SL2::of(1, 1, 0, 1);
    return r;
}
const SL2& gen_L() {
    static const SL2 l = SL2::of(1, 0, 1, 1);
    return l;
}

static SL2 R_pow(const Int& n) { return {Int(1), n, Int(0), Int(1)}; }
static SL2 L_pow(const Int& n) { return {Int(1), Int(0), n, Int(1)}; }

const char* kind_name(BundleKind k) {
    switch (k) {
        case BundleKind::Elliptic: return "elliptic";
        case BundleKind::PositiveParabolic: return "positive-parabolic";
        case BundleKind::NegativeParabolic: return "negative-parabolic";
        case BundleKind::PositiveHyperbolic: return "positive-hyperbolic";
        case BundleKind::NegativeHyperbolic: return "negative-hyperbolic";
    }
    return "?";
}

std::string BundleClass::to_string() const {
    std::string s = kind_name(kind);
    switch (kind) {
        case BundleKind::Elliptic: return s + " " + label;
        case BundleKind::PositiveParabolic:
        case BundleKind::NegativeParabolic: return s + " n=" + n.get_str();
        default: {
            s += " [";
            for (std::size_t i = 0; i < word.size(); ++i) s += (i ? "," : "") + word[i].get_str();
            return s + "]";
        }
    }
}

SL2 word_matrix(const std::vector<Int>& t) {
    SL2 a;
    for (const Int& x : t) a = SL2{x, Int(1), Int(-1), Int(0)} * a;
    return a;
}

SL2 monodromy(const Divisor& d) {
    IntVec t;
    for (const Int& s : d.entries()) t.push_back(-s);
    return word_matrix(t);
}

BundleKind bundle_type(const SL2& m) {
    Int t = m.trace();
    if (abs(t) < 2) return BundleKind::Elliptic;
    if (t == 2) return BundleKind::PositiveParabolic;
    if (t == -2) return BundleKind::NegativeParabolic;
    return sgn(t) > 0 ? BundleKind::PositiveHyperbolic : BundleKind::NegativeHyperbolic;
}

static Int parabolic_n(const SL2& u) {
    // u unipotent (trace 2)
    if (sgn(u.b) == 0 && sgn(u.c) == 0) return 0;
    Int v1, v2;
    if (sgn(u.a - 1) != 0 || sgn(u.b) != 0) { v1 = u.b; v2 = 1 - u.a; }
    else { v1 = u.d - 1; v2 = -u.c; }
    Int g = gcd(v1, v2);
    v1 /= g;
    v2 /= g;
    // w with v1*w2 - v2*w1 = 1
    Int s, t, gg;
    mpz_gcdext(gg.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), v1.get_mpz_t(), v2.get_mpz_t());
    // s*v1 + t*v2 = 1  =>  w = (-t, s)
    Int w1 = -t, w2 = s;
    Int x1 = u.a * w1 + u.b * w2 - w1;
    Int x2 = u.c * w1 + u.d * w2 - w2;
    // (x1,x2) = n * (v1,v2)
    return sgn(v1) != 0 ? Int(x1 / v1) : Int(x2 / v2);
}

SL2 hyperbolic_reducer(const SL2& m) {
    const Int t = m.trace();
    if (abs(t) <= 2) throw Error(ErrorKind::Internal, "not hyperbolic");
    const SL2 a = sgn(t) < 0 ? -m : m;
    const Int D = a.trace() * a.trace() - 4;
    Int s;
    mpz_sqrt(s.get_mpz_t(), D.get_mpz_t());
    // continued fraction of the fixed point (a - d + sqrt D) / 2c, state (P + sqrt D) / Q
    Int P = a.a - a.d, Q = 2 * a.c;
    SL2 C;
    std::size_t k = 0;
    auto reduced = [&] { return sgn(Q) > 0 && sgn(P) > 0 && P <= s && s - P + 1 <= Q && Q <= s + P; };
    while (!(reduced() && k % 2 == 0)) {
        Int num = P + s + (sgn(Q) < 0 ? 1 : 0), q;
        mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), Q.get_mpz_t());
        C = C * (k % 2 == 0 ? R_pow(q) : L_pow(q));
        Int P2 = q * Q - P;
        Int Q2 = (D - P2 * P2) / Q;
        P = P2;
        Q = Q2;
        ++k;
        if (k > 100000) throw Error(ErrorKind::Internal, "reduction did not terminate");
    }
    return C;
}

IntVec rl_exponents(const SL2& positive) {
    SL2 x = positive;
    std::vector<std::pair<char, Int>> runs;
    auto push = [&](char c, const Int& e) {
        if (!runs.empty() && runs.back().first == c) runs.back().second += e;
        else runs.emplace_back(c, e);
    };
    while (!(x == SL2::identity())) {
        if (sgn(x.a) < 0 || sgn(x.b) < 0 || sgn(x.c) < 0 || sgn(x.d) < 0)
            throw Error(ErrorKind::Internal, "matrix is not a positive word");
        if (x.a >= x.c && x.b >= x.d) {
            // peel R^k from the left
            Int k;
            if (sgn(x.c) == 0) k = x.b / x.d;
            else if (sgn(x.d) == 0) k = x.a / x.c;
            else k = std::min(Int(x.a / x.c), Int(x.b / x.d));
            if (sgn(k) == 0) throw Error(ErrorKind::Internal, "stalled peeling");
            x.a -= k * x.c;
            x.b -= k * x.d;
            push('R', k);
        } else {
            Int k;
            if (sgn(x.a) == 0) k = x.d / x.b;
            else if (sgn(x.b) == 0) k = x.c / x.a;
            else k = std::min(Int(x.c / x.a), Int(x.d / x.b));
            if (sgn(k) == 0) throw Error(ErrorKind::Internal, "stalled peeling");
            x.c -= k * x.a;
            x.d -= k * x.b;
            push('L', k);
        }
    }
    {
        SL2 check;
        for (auto& [c, e] : runs) check = check * (c == 'R' ? R_pow(e) : L_pow(e));
        if (!(check == positive)) throw Error(ErrorKind::Internal, "word reconstruction failed");
    }
    // rotate cyclically to start with R and end with L
    if (runs.size() > 1 && runs.front().first == runs.back().first) {
        runs.back().second += runs.front().second;
        runs.erase(runs.begin());
    }
    while (runs.front().first != 'R') std::rotate(runs.begin(), runs.begin() + 1, runs.end());
    IntVec ex;
    for (auto& [c, e] : runs) ex.push_back(e);
    return ex;
}

SL2 word_from_exponents(const IntVec& ex) {
    SL2 m;
    for (std::size_t i = 0; i < ex.size(); ++i) m = m * (i % 2 == 0 ? R_pow(ex[i]) : L_pow(ex[i]));
    return m;
}

static IntVec min_even_rotation(const IntVec& w) {
    IntVec best = w;
    for (std::size_t i = 2; i < w.size(); i += 2) {
        IntVec c(w.begin() + static_cast<std::ptrdiff_t>(i), w.end());
        c.insert(c.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i));
        if (c < best) best = c;
    }
    return best;
}

IntVec reverse_word(const IntVec& w) {
    IntVec r;
    r.push_back(w[0]);
    for (std::size_t i = w.size() - 1; i >= 1; --i) r.push_back(w[i]);
    return min_even_rotation(r);
}

BundleClass conjugacy_canon(const SL2& m) {
    if (m.det() != 1) throw Error(ErrorKind::Internal, "determinant is not 1");
    BundleClass bc;
    bc.kind = bundle_type(m);
    const Int t = m.trace();
    switch (bc.kind) {
        case BundleKind::Elliptic: {
            // sign of c decides the definiteness of c x^2 + (d-a) x y - b y^2, a conjugacy invariant
            bc.sign = sgn(m.c) > 0 ? 1 : -1;
            const char* order = t == 0 ? "order4" : (t == -1 ? "order3" : "order6");
            bc.label = std::string(order) + (bc.sign > 0 ? "+" : "-");
            return bc;
        }
        case BundleKind::PositiveParabolic:
        case BundleKind::NegativeParabolic: {
            bc.sign = sgn(t);
            bc.n = parabolic_n(bc.sign > 0 ? m : -m);
            return bc;
        }
        default: {
            bc.sign = sgn(t);
            const SL2 a = bc.sign < 0 ? -m : m;
            const SL2 c = hyperbolic_reducer(m);
            const SL2 b = c.inverse() * a * c;
            IntVec ex = rl_exponents(b);
            if (ex.size() % 2 != 0) throw Error(ErrorKind::Internal, "word reconstruction failed");
            bc.word = min_even_rotation(ex);
            return bc;
        }
    }
}

BundleClass oriented_canon(const SL2& m) {
    BundleClass bc = conjugacy_canon(m);
    if (!bc.word.empty()) bc.word = std::min(bc.word, reverse_word(bc.word));
    return bc;
}

BundleClass negative_boundary_class(const Divisor& d) { return oriented_canon(monodromy(d).inverse()); }

bool bundle_equal_oriented(const SL2& x, const SL2& y) { return oriented_canon(x) == oriented_canon(y); }

bool bundle_equal_oriented(const Divisor& x, const Divisor& y) {
    return bundle_equal_oriented(monodromy(x), monodromy(y));
}

}  // namespace csd
