#include "nq/scalars.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace nq {

RootOfUnity::RootOfUnity(std::int64_t k, std::int64_t n) {
    if (n <= 0) throw std::invalid_argument("root of unity: order must be positive");
    k %= n;
    if (k < 0) k += n;
    const std::int64_t g = std::gcd(k, n);
    if (k == 0) {
        num = 0;
        ord = 1;
    } else {
        num = k / g;
        ord = n / g;
    }
}

RootOfUnity operator*(RootOfUnity a, RootOfUnity b) {
    const std::int64_t n = std::lcm(a.ord, b.ord);
    return RootOfUnity(a.num * (n / a.ord) + b.num * (n / b.ord), n);
}

RootOfUnity inverse(RootOfUnity a) { return RootOfUnity(a.ord - a.num, a.ord); }

RootOfUnity pow(RootOfUnity a, std::int64_t e) {
    const std::int64_t r = ((a.num * (e % a.ord)) % a.ord + a.ord) % a.ord;
    return RootOfUnity(r, a.ord);
}

std::int64_t rou_order(RootOfUnity q) { return q.ord; }

std::string to_string(RootOfUnity q) {
    return std::to_string(q.num) + "/" + std::to_string(q.ord);
}

RootOfUnity parse_rou(const std::string& s) {
    const auto slash = s.find('/');
    if (slash == std::string::npos)
        throw std::invalid_argument("root of unity: expected \"k/n\", got " + s);
    const std::int64_t k = std::stoll(s.substr(0, slash));
    const std::int64_t n = std::stoll(s.substr(slash + 1));
    return RootOfUnity(k, n);
}

std::int64_t euler_phi(std::int64_t n) {
    std::int64_t result = n, m = n;
    for (std::int64_t p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            result -= result / p;
            while (m % p == 0) m /= p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

namespace {

using ZPoly = std::vector<std::int64_t>;

// Exact division of monic integer polynomials, low degree first.
ZPoly zdivide(ZPoly num, const ZPoly& den) {
    assert(den.back() == 1);
    ZPoly quot(num.size() - den.size() + 1, 0);
    for (std::int64_t d = (std::int64_t)num.size() - 1; d >= (std::int64_t)den.size() - 1; --d) {
        const std::int64_t c = num[d];
        if (c == 0) continue;
        const std::int64_t shift = d - ((std::int64_t)den.size() - 1);
        quot[shift] = c;
        for (std::size_t i = 0; i < den.size(); ++i) num[shift + i] -= c * den[i];
    }
    for (auto v : num) {
        (void)v;
        assert(v == 0);
    }
    return quot;
}

}  // namespace

const std::vector<std::int64_t>& cyclotomic_poly(std::int64_t n) {
    static std::map<std::int64_t, ZPoly> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    ZPoly poly(n + 1, 0);  // x^n - 1
    poly[0] = -1;
    poly[n] = 1;
    for (std::int64_t d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        auto sub = cache.find(d);
        assert(sub != cache.end() || d == n);
        if (sub == cache.end()) {
            // Fill lower divisors first (recursion would deadlock on the mutex).
            ZPoly dp(d + 1, 0);
            dp[0] = -1;
            dp[d] = 1;
            for (std::int64_t e = 1; e < d; ++e)
                if (d % e == 0) dp = zdivide(std::move(dp), cache.at(e));
            sub = cache.emplace(d, std::move(dp)).first;
        }
        poly = zdivide(std::move(poly), sub->second);
    }
    return cache.emplace(n, std::move(poly)).first->second;
}

namespace {

// Reduce a rational polynomial modulo Phi_n in place; returns phi(n) coefficients.
std::vector<Rational> reduce_mod_phi(std::vector<Rational> p, std::int64_t n) {
    const ZPoly& phi = cyclotomic_poly(n);
    const std::size_t deg = phi.size() - 1;  // = euler_phi(n)
    for (std::int64_t d = (std::int64_t)p.size() - 1; d >= (std::int64_t)deg; --d) {
        if (p[d] == 0) continue;
        const Rational c = p[d];
        const std::int64_t shift = d - (std::int64_t)deg;
        for (std::size_t i = 0; i < phi.size(); ++i)
            if (phi[i] != 0) p[shift + i] -= c * phi[i];
    }
    p.resize(deg, Rational(0));
    for (auto& x : p) x.canonicalize();
    return p;
}

}  // namespace

CycloNumber CycloNumber::zeta(std::int64_t n) {
    CycloNumber z;
    z.level = n;
    std::vector<Rational> p(2, Rational(0));
    p[1] = 1;
    z.c = reduce_mod_phi(std::move(p), n);
    return z;
}

CycloNumber CycloNumber::from(RootOfUnity q) {
    CycloNumber z;
    z.level = q.ord;
    std::vector<Rational> p(q.num + 1, Rational(0));
    p[q.num] = 1;
    z.c = reduce_mod_phi(std::move(p), q.ord);
    return z;
}

bool CycloNumber::is_zero() const {
    return std::all_of(c.begin(), c.end(), [](const Rational& x) { return x == 0; });
}

bool CycloNumber::is_rational() const {
    for (std::size_t i = 1; i < c.size(); ++i)
        if (c[i] != 0) return false;
    return true;
}

Rational CycloNumber::rational_part() const {
    if (!is_rational()) throw std::logic_error("cyclo: not a rational value");
    return c.empty() ? Rational(0) : c[0];
}

CycloNumber lift(const CycloNumber& a, std::int64_t level) {
    if (level == a.level) return a;
    assert(level % a.level == 0);
    const std::int64_t stride = level / a.level;
    std::vector<Rational> p((a.c.size() - 1) * stride + 1, Rational(0));
    for (std::size_t k = 0; k < a.c.size(); ++k) p[k * stride] = a.c[k];
    CycloNumber out;
    out.level = level;
    out.c = reduce_mod_phi(std::move(p), level);
    return out;
}

CycloNumber operator+(const CycloNumber& a, const CycloNumber& b) {
    const std::int64_t n = std::lcm(a.level, b.level);
    CycloNumber x = lift(a, n), y = lift(b, n);
    for (std::size_t i = 0; i < x.c.size(); ++i) x.c[i] += y.c[i];
    return x;
}

CycloNumber operator-(const CycloNumber& a, const CycloNumber& b) {
    const std::int64_t n = std::lcm(a.level, b.level);
    CycloNumber x = lift(a, n), y = lift(b, n);
    for (std::size_t i = 0; i < x.c.size(); ++i) x.c[i] -= y.c[i];
    return x;
}

CycloNumber operator-(const CycloNumber& a) {
    CycloNumber x = a;
    for (auto& v : x.c) v = -v;
    return x;
}

CycloNumber operator*(const CycloNumber& a, const CycloNumber& b) {
    const std::int64_t n = std::lcm(a.level, b.level);
    CycloNumber x = lift(a, n), y = lift(b, n);
    std::vector<Rational> p(x.c.size() + y.c.size() - 1, Rational(0));
    for (std::size_t i = 0; i < x.c.size(); ++i) {
        if (x.c[i] == 0) continue;
        for (std::size_t j = 0; j < y.c.size(); ++j)
            if (y.c[j] != 0) p[i + j] += x.c[i] * y.c[j];
    }
    CycloNumber out;
    out.level = n;
    out.c = reduce_mod_phi(std::move(p), n);
    return out;
}

namespace {

using QPoly = std::vector<Rational>;

std::size_t qdeg(const QPoly& p) {
    std::size_t d = p.size();
    while (d > 0 && p[d - 1] == 0) --d;
    return d;  // number of coefficients up to the leading one; 0 for the zero poly
}

}  // namespace

CycloNumber inverse(const CycloNumber& a) {
    if (a.is_zero()) throw std::domain_error("cyclo: division by zero");
    if (a.is_rational()) {
        CycloNumber out;
        out.level = a.level;
        out.c.assign(a.c.size(), Rational(0));
        out.c[0] = 1 / a.c[0];
        return out;
    }
    // Extended Euclid for (a, Phi_n) in Q[x]; Phi_n is irreducible so the gcd
    // is a nonzero constant.
    const ZPoly& phi_z = cyclotomic_poly(a.level);
    QPoly r0(phi_z.begin(), phi_z.end());
    QPoly r1 = a.c;
    QPoly u0{Rational(0)}, u1{Rational(1)};  // coefficients of `a` in the Bezout identity
    while (true) {
        const std::size_t d1 = qdeg(r1);
        assert(d1 > 0);
        if (d1 == 1) break;  // r1 is a nonzero constant
        const std::size_t d0 = qdeg(r0);
        assert(d0 >= d1);
        // r0 -= q * r1, u0 -= q * u1 with q a monomial step of the division.
        QPoly q(d0 - d1 + 1, Rational(0));
        QPoly rem = r0;
        for (std::int64_t d = (std::int64_t)d0 - 1; d >= (std::int64_t)d1 - 1; --d) {
            if (rem[d] == 0) continue;
            const Rational f = rem[d] / r1[d1 - 1];
            q[d - (d1 - 1)] = f;
            for (std::size_t i = 0; i < d1; ++i) rem[d - (d1 - 1) + i] -= f * r1[i];
        }
        QPoly nu(std::max(u0.size(), q.size() + u1.size()), Rational(0));
        for (std::size_t i = 0; i < u0.size(); ++i) nu[i] = u0[i];
        for (std::size_t i = 0; i < q.size(); ++i) {
            if (q[i] == 0) continue;
            for (std::size_t j = 0; j < u1.size(); ++j) nu[i + j] -= q[i] * u1[j];
        }
        r0 = std::move(r1);
        r1 = std::move(rem);
        u0 = std::move(u1);
        u1 = std::move(nu);
    }
    const Rational lead = r1[0];
    for (auto& v : u1) v /= lead;
    CycloNumber out;
    out.level = a.level;
    out.c = reduce_mod_phi(std::move(u1), a.level);
    return out;
}

bool operator==(const CycloNumber& a, const CycloNumber& b) {
    const std::int64_t n = std::lcm(a.level, b.level);
    return lift(a, n).c == lift(b, n).c;
}

CycloNumber pow(const CycloNumber& a, std::int64_t e) {
    if (e < 0) return pow(inverse(a), -e);
    CycloNumber r(Rational(1));
    CycloNumber base = a;
    while (e > 0) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

CycloNumber& operator+=(CycloNumber& a, const CycloNumber& b) { return a = a + b; }
CycloNumber& operator-=(CycloNumber& a, const CycloNumber& b) { return a = a - b; }
CycloNumber& operator*=(CycloNumber& a, const CycloNumber& b) { return a = a * b; }

std::string to_string(const CycloNumber& a) {
    std::ostringstream os;
    os << a.level << ":[";
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        if (i) os << ",";
        os << a.c[i].get_str();
    }
    os << "]";
    return os.str();
}

CycloNumber q_integer(std::int64_t L, RootOfUnity q) {
    if (q.is_one()) return CycloNumber(Rational(L));
    // Geometric sum; q != 1 so the denominator is invertible.
    const CycloNumber one(Rational(1));
    return (CycloNumber::from(pow(q, L)) - one) / (CycloNumber::from(q) - one);
}

CycloNumber q_integer(std::int64_t L, const CycloNumber& q) {
    CycloNumber sum(Rational(0));
    CycloNumber p(Rational(1));
    for (std::int64_t j = 0; j < L; ++j) {
        sum += p;
        p *= q;
    }
    return sum;
}

bool q_integer_is_zero(std::int64_t L, RootOfUnity q) {
    // (L)_q = 0 iff q != 1 and q^L = 1.
    return !q.is_one() && (L % q.ord == 0);
}

namespace {

// Count integers in [lo, hi] congruent to r mod N.
std::int64_t count_residue(std::int64_t lo, std::int64_t hi, std::int64_t r, std::int64_t N) {
    if (lo > hi) return 0;
    auto upto = [&](std::int64_t x) {  // count in [0, x]
        if (x < 0) return (std::int64_t)0;
        return x / N + (r <= x % N ? 1 : 0);
    };
    return upto(hi) - upto(lo - 1);
}

}  // namespace

CycloNumber q_binomial(std::int64_t n, std::int64_t k, RootOfUnity q) {
    assert(0 <= k && k <= n);
    if (k == 0 || k == n) return CycloNumber(Rational(1));
    const std::int64_t N = q.ord;
    // Numerator indices n-k+1..n, denominator 1..k. A q-integer (m)_q vanishes
    // iff N | m, and otherwise depends only on m mod N.
    std::vector<std::int64_t> num_zero, den_zero;
    for (std::int64_t m = ((n - k + 1 + N - 1) / N) * N; m <= n; m += N) num_zero.push_back(m);
    for (std::int64_t m = N; m <= k; m += N) den_zero.push_back(m);
    if (num_zero.size() > den_zero.size()) return CycloNumber(Rational(0));
    assert(num_zero.size() == den_zero.size());

    // Each vanishing pair (aN)_q / (bN)_q contributes a/b (l'Hopital at q).
    Rational rat(1);
    for (std::size_t i = 0; i < num_zero.size(); ++i)
        rat *= Rational(num_zero[i] / N, den_zero[i] / N);
    rat.canonicalize();

    CycloNumber out{rat};
    for (std::int64_t r = 1; r < N; ++r) {
        const std::int64_t net =
            count_residue(n - k + 1, n, r, N) - count_residue(1, k, r, N);
        if (net == 0) continue;
        const CycloNumber f = q_integer(r, q);
        out *= pow(f, net);
    }
    return out;
}

CycloNumber coef_hat(RootOfUnity r, RootOfUnity s, std::int64_t L) {
    CycloNumber sum(Rational(0));
    for (std::int64_t k = 0; k < L; ++k)
        sum += CycloNumber::from(pow(r, k)) * q_integer(k + 1, s);
    return sum;
}

CycloNumber coef_hat2(RootOfUnity r, RootOfUnity s, RootOfUnity t, std::int64_t L) {
    CycloNumber sum(Rational(0));
    for (std::int64_t k = 0; k < L; ++k)
        sum += CycloNumber::from(pow(r, k)) * q_integer(k + 1, s) * q_integer(k + 2, t);
    return sum;
}

}  // namespace nq
