#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace nq {

using Rational = mpq_class;

// e^(2 pi i k / n), kept reduced so `ord` is the exact multiplicative order.
struct RootOfUnity {
    std::int64_t num = 0;
    std::int64_t ord = 1;

    RootOfUnity() = default;
    RootOfUnity(std::int64_t k, std::int64_t n);

    bool is_one() const { return num == 0; }
    friend bool operator==(const RootOfUnity&, const RootOfUnity&) = default;
    friend auto operator<=>(const RootOfUnity&, const RootOfUnity&) = default;
};

RootOfUnity operator*(RootOfUnity a, RootOfUnity b);
RootOfUnity inverse(RootOfUnity a);
RootOfUnity pow(RootOfUnity a, std::int64_t e);
inline RootOfUnity operator/(RootOfUnity a, RootOfUnity b) { return a * inverse(b); }
inline RootOfUnity operator-(RootOfUnity a) { return RootOfUnity(1, 2) * a; }

std::int64_t rou_order(RootOfUnity q);

// "k/n" with the reduced exponent k over the order n.
std::string to_string(RootOfUnity q);
RootOfUnity parse_rou(const std::string& s);

std::int64_t euler_phi(std::int64_t n);
// Coefficients of Phi_n, low degree first; cached.
const std::vector<std::int64_t>& cyclotomic_poly(std::int64_t n);

// Element of Q(zeta_n) in the power basis 1, z, ..., z^(phi(n)-1) mod Phi_n.
// Arithmetic between different levels lifts both to the lcm; values are never
// descended to a smaller field, so equality is tested after a common lift.
struct CycloNumber {
    std::int64_t level = 1;
    std::vector<Rational> c = {Rational(0)};

    CycloNumber() = default;
    explicit CycloNumber(const Rational& r) : c{r} {}
    explicit CycloNumber(std::int64_t r) : c{Rational(r)} {}

    static CycloNumber zeta(std::int64_t n);
    static CycloNumber from(RootOfUnity q);

    bool is_zero() const;
    bool is_rational() const;
    Rational rational_part() const;
};

CycloNumber lift(const CycloNumber& a, std::int64_t level);

CycloNumber operator+(const CycloNumber& a, const CycloNumber& b);
CycloNumber operator-(const CycloNumber& a, const CycloNumber& b);
CycloNumber operator-(const CycloNumber& a);
CycloNumber operator*(const CycloNumber& a, const CycloNumber& b);
CycloNumber inverse(const CycloNumber& a);
inline CycloNumber operator/(const CycloNumber& a, const CycloNumber& b) { return a * inverse(b); }
bool operator==(const CycloNumber& a, const CycloNumber& b);
inline bool operator!=(const CycloNumber& a, const CycloNumber& b) { return !(a == b); }
CycloNumber pow(const CycloNumber& a, std::int64_t e);

CycloNumber& operator+=(CycloNumber& a, const CycloNumber& b);
CycloNumber& operator-=(CycloNumber& a, const CycloNumber& b);
CycloNumber& operator*=(CycloNumber& a, const CycloNumber& b);

std::string to_string(const CycloNumber& a);

// (L)_q = 1 + q + ... + q^(L-1).
CycloNumber q_integer(std::int64_t L, RootOfUnity q);
CycloNumber q_integer(std::int64_t L, const CycloNumber& q);
bool q_integer_is_zero(std::int64_t L, RootOfUnity q);

// Gaussian binomial at a root of unity. Zero q-integer factors of numerator
// and denominator are cancelled pairwise on their indices before anything is
// evaluated, so no division by zero ever happens.
CycloNumber q_binomial(std::int64_t n, std::int64_t k, RootOfUnity q);

// chat(r,s;L)   = sum_{k=0}^{L-1} r^k (k+1)_s
// chat2(r,s,t;L)= sum_{k=0}^{L-1} r^k (k+1)_s (k+2)_t
CycloNumber coef_hat(RootOfUnity r, RootOfUnity s, std::int64_t L);
CycloNumber coef_hat2(RootOfUnity r, RootOfUnity s, RootOfUnity t, std::int64_t L);

}  // namespace nq
