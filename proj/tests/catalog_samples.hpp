#pragma once

#include <nq/braiding.hpp>

#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

namespace nqtest {

inline std::mt19937& rng() {
    static std::mt19937 gen(0x5eed);
    return gen;
}

inline std::int64_t pick(const std::vector<std::int64_t>& xs) {
    return xs[std::uniform_int_distribution<std::size_t>(0, xs.size() - 1)(rng())];
}

inline nq::RootOfUnity primitive(std::int64_t n) {
    std::vector<std::int64_t> ks;
    for (std::int64_t k = 1; k < n; ++k)
        if (std::gcd(k, n) == 1) ks.push_back(k);
    if (n == 1) return nq::RootOfUnity();
    return nq::RootOfUnity(pick(ks), n);
}

inline nq::FamilySpec spec(nq::Family f, int theta) {
    nq::FamilySpec s;
    s.family = f;
    s.theta = theta;
    return s;
}

inline nq::FamilySpec spec(nq::Family f, int theta, nq::RootOfUnity q) {
    nq::FamilySpec s = spec(f, theta);
    s.q = q;
    return s;
}

// A spread of admissible parameter choices covering every family.
inline std::vector<nq::FamilySpec> catalog_samples() {
    using nq::Family;
    std::vector<nq::FamilySpec> out;
    auto add = [&](nq::FamilySpec s) { out.push_back(std::move(s)); };

    for (int th : {1, 2, 3, 4}) {
        auto s = spec(Family::A, th);
        s.q = primitive(pick({2, 3, 4, 5, 7}));
        add(s);
    }
    for (auto [th, j] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {3, 2}, {4, 2}}) {
        auto s = spec(Family::superA, th);
        s.q = primitive(pick({3, 4, 5, 7}));
        s.j = j;
        add(s);
    }
    for (int th : {2, 3, 4}) {
        auto s = spec(Family::B, th);
        s.q = primitive(pick({3, 4, 5, 7, 9}));
        add(s);
    }
    for (auto [th, j] : std::vector<std::pair<int, int>>{{2, 1}, {3, 2}, {4, 1}, {4, 3}}) {
        auto s = spec(Family::superB, th);
        s.q = primitive(pick({3, 5, 7, 9}));
        s.j = j;
        add(s);
    }
    for (auto [th, j] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {4, 2}}) {
        auto s = spec(Family::B_standard, th);
        s.zeta = primitive(3);
        s.j = j;
        add(s);
    }
    for (int th : {2, 3, 4}) {
        auto s = spec(Family::C, th);
        s.q = primitive(pick({3, 4, 5, 7, 9}));
        add(s);
    }
    for (int th : {3, 4, 5}) {
        auto s = spec(Family::D, th);
        s.q = primitive(pick({2, 3, 5, 7}));
        add(s);
    }
    for (auto [th, j] : std::vector<std::pair<int, int>>{{2, 1}, {3, 2}, {4, 1}, {4, 3}}) {
        auto s = spec(Family::superD, th);
        s.q = primitive(pick({3, 4, 5, 7}));
        s.j = j;
        add(s);
    }
    for (Family f : {Family::E6, Family::E7, Family::E8}) {
        auto s = spec(f, f == Family::E6 ? 6 : f == Family::E7 ? 7 : 8);
        s.q = primitive(pick({2, 3, 5}));
        add(s);
    }
    {
        auto s = spec(Family::F4, 4);
        s.q = primitive(pick({3, 4, 5, 7, 9}));
        add(s);
    }
    for (std::int64_t n : {4, 5, 6, 7}) {
        auto s = spec(Family::G2_cartan, 2);
        s.q = primitive(n);
        add(s);
    }
    for (char v : {'a', 'b', 'c'}) {
        auto s = spec(Family::G2_standard, 2);
        s.zeta = primitive(8);
        s.variant = v;
        add(s);
    }
    {
        auto s = spec(Family::D21alpha, 3);
        do {
            s.q = primitive(pick({2, 3, 4, 5}));
            s.r = primitive(pick({2, 3, 4, 5}));
        } while ((s.q * s.r).is_one());
        add(s);
    }
    {
        auto s = spec(Family::F4_super, 4);
        s.q = primitive(pick({4, 5, 7, 9}));
        add(s);
    }
    {
        auto s = spec(Family::G3_super, 3);
        s.q = primitive(pick({4, 5, 7, 9}));
        add(s);
    }
    for (std::int64_t n : {3, 4, 5, 8}) {
        auto s = spec(Family::wk4, 4);
        s.q = primitive(n);
        add(s);
    }
    for (char v : {'a', 'b'}) {
        auto s = spec(Family::br2, 2);
        s.zeta = primitive(3);
        s.q = primitive(pick({4, 5, 7, 8}));
        s.variant = v;
        add(s);
    }
    for (std::vector<std::int64_t> ns :
         {std::vector<std::int64_t>{2}, {2, 3}, {2, 3, 4}, {3, 3, 5, 2}}) {
        auto s = spec(Family::QLS, int(ns.size()));
        s.orders = ns;
        add(s);
    }
    return out;
}

}  // namespace nqtest
