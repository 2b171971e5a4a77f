#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <nq/rootdata.hpp>

#include <algorithm>
#include <set>
#include <stdexcept>
#include <vector>

#include "catalog_samples.hpp"

using namespace nq;

namespace {

Root root_of(std::vector<int> cs) { return Root(std::move(cs)); }

int expected_count(const FamilySpec& s) {
    const int th = s.theta;
    switch (s.family) {
        case Family::A:
        case Family::superA: return th * (th + 1) / 2;
        case Family::B:
        case Family::superB:
        case Family::B_standard:
        case Family::C: return th * th;
        case Family::superD: return th * th - s.j;
        case Family::D: return th * (th - 1);
        case Family::E6: return 36;
        case Family::E7: return 63;
        case Family::E8: return 120;
        case Family::F4: return 24;
        case Family::G2_cartan:
        case Family::G2_standard: return 6;
        case Family::D21alpha: return 7;
        case Family::F4_super: return 18;
        case Family::G3_super: return 13;
        case Family::wk4: return 15;
        case Family::br2: return 4;
        case Family::QLS: return th;
    }
    return -1;
}

// Reflection closure of the simple roots, kept independent of the catalog
// lists: saturate the full Weyl orbit, then keep the positive part.
std::vector<Root> orbit_positive_roots(const BraidingMatrix& q) {
    const auto c = cartan_matrix(q);
    const int th = q.theta;
    std::set<Root> seen;
    std::vector<Root> queue;
    for (int i = 0; i < th; ++i) {
        Root r = simple_root(th, i);
        seen.insert(r);
        queue.push_back(r);
    }
    while (!queue.empty()) {
        Root r = queue.back();
        queue.pop_back();
        for (int i = 0; i < th; ++i) {
            Root s = r;
            std::int64_t pairing = 0;
            for (int j = 0; j < th; ++j) pairing += std::int64_t(c[i][j]) * r.coords[j];
            s.coords[i] -= int(pairing);
            if (seen.insert(s).second) queue.push_back(s);
        }
    }
    std::vector<Root> out;
    for (const Root& r : seen)
        if (*std::min_element(r.coords.begin(), r.coords.end()) >= 0) out.push_back(r);
    return out;
}

std::vector<std::int64_t> order_vector(const RootSystemData& rs) { return rs.orders; }

}  // namespace

TEST_CASE("root arithmetic and printing") {
    Root a = root_of({1, 2, 1});
    CHECK(a.theta() == 3);
    CHECK(a.height() == 4);
    CHECK(to_string(a) == "12²3");
    CHECK(to_string(root_of({3, 2})) == "1³2²");
    CHECK(to_string(root_of({0, 1})) == "2");
    CHECK(to_string(root_of({12})) == "1¹²");
    CHECK(to_string(root_of({0, 0})) == "0");
    CHECK(simple_root(4, 2) == root_of({0, 0, 1, 0}));
    CHECK(root_of({1, 0}) + root_of({2, 1}) == root_of({3, 1}));
    CHECK(root_of({1, 0}) < root_of({1, 1}));
}

TEST_CASE("bicharacter restricted to simple roots is the braiding matrix") {
    for (const FamilySpec& spec : nqtest::catalog_samples()) {
        const BraidingMatrix q = family_matrix(spec);
        for (int i = 0; i < q.theta; ++i)
            for (int j = 0; j < q.theta; ++j)
                CHECK(q_bicharacter(q, simple_root(q.theta, i), simple_root(q.theta, j)) ==
                      q.at(i, j));
    }
}

TEST_CASE("bicharacter is multiplicative in both arguments") {
    auto& rng = nqtest::rng();
    std::uniform_int_distribution<int> coord(0, 3);
    const BraidingMatrix q = family_matrix(nqtest::spec(Family::C, 3, RootOfUnity(1, 8)));
    for (int trial = 0; trial < 30; ++trial) {
        auto rand_root = [&] {
            Root r(std::vector<int>(3, 0));
            for (int i = 0; i < 3; ++i) r.coords[i] = coord(rng);
            return r;
        };
        Root a = rand_root(), b = rand_root(), c = rand_root();
        CHECK(q_bicharacter(q, a + b, c) == q_bicharacter(q, a, c) * q_bicharacter(q, b, c));
        CHECK(q_bicharacter(q, a, b + c) == q_bicharacter(q, a, b) * q_bicharacter(q, a, c));
    }
}

TEST_CASE("catalog root systems: counts, uniqueness, simples, convexity") {
    for (const FamilySpec& spec : nqtest::catalog_samples()) {
        CAPTURE(family_name(spec.family));
        CAPTURE(spec.theta);
        const RootSystemData rs = positive_roots(spec);
        CHECK(rs.source == RootBackend::catalog);
        CHECK(rs.size() == expected_count(spec));
        const std::set<Root> uniq(rs.roots.begin(), rs.roots.end());
        CHECK(int(uniq.size()) == rs.size());
        for (int i = 0; i < rs.theta(); ++i)
            CHECK(rs.index_of(simple_root(rs.theta(), i)).has_value());
        CHECK(rs.roots.front() == simple_root(rs.theta(), 0));
        const ConvexityReport rep = check_convexity(rs);
        CAPTURE(rep.i);
        CAPTURE(rep.j);
        CHECK(rep.ok);
        for (std::size_t k = 0; k < rs.roots.size(); ++k) {
            CHECK(!rs.q_diag[k].is_one());
            CHECK(rs.orders[k] == rou_order(rs.q_diag[k]));
            CHECK(rs.q_diag[k] == q_bicharacter(rs.q, rs.roots[k], rs.roots[k]));
        }
    }
}

TEST_CASE("reflection closure reproduces the catalog lists of Cartan type") {
    std::vector<FamilySpec> specs;
    for (int th = 1; th <= 4; ++th) specs.push_back(nqtest::spec(Family::A, th, RootOfUnity(1, 5)));
    for (int th = 2; th <= 4; ++th) specs.push_back(nqtest::spec(Family::B, th, RootOfUnity(1, 7)));
    for (int th = 2; th <= 4; ++th) specs.push_back(nqtest::spec(Family::C, th, RootOfUnity(1, 8)));
    for (int th = 3; th <= 5; ++th) specs.push_back(nqtest::spec(Family::D, th, RootOfUnity(1, 5)));
    specs.push_back(nqtest::spec(Family::E6, 6, RootOfUnity(1, 4)));
    specs.push_back(nqtest::spec(Family::E7, 7, RootOfUnity(1, 4)));
    specs.push_back(nqtest::spec(Family::E8, 8, RootOfUnity(1, 4)));
    specs.push_back(nqtest::spec(Family::F4, 4, RootOfUnity(1, 3)));
    specs.push_back(nqtest::spec(Family::F4, 4, RootOfUnity(1, 5)));
    specs.push_back(nqtest::spec(Family::G2_cartan, 2, RootOfUnity(1, 4)));
    specs.push_back(nqtest::spec(Family::G2_cartan, 2, RootOfUnity(1, 7)));
    for (const FamilySpec& spec : specs) {
        CAPTURE(family_name(spec.family));
        CAPTURE(spec.theta);
        const RootSystemData rs = positive_roots(spec);
        std::vector<Root> expected = orbit_positive_roots(rs.q);
        std::vector<Root> got = rs.roots;
        std::sort(got.begin(), got.end());
        CHECK(got == expected);
    }
}

TEST_CASE("exact convex orders for the rank 2 and exceptional families") {
    CHECK(positive_roots(nqtest::spec(Family::G2_cartan, 2, RootOfUnity(1, 6))).roots ==
          std::vector<Root>{root_of({1, 0}), root_of({3, 1}), root_of({2, 1}), root_of({3, 2}),
                            root_of({1, 1}), root_of({0, 1})});
    FamilySpec br = nqtest::spec(Family::br2, 2, RootOfUnity(1, 5));
    br.zeta = RootOfUnity(1, 3);
    CHECK(positive_roots(br).roots == std::vector<Root>{root_of({1, 0}), root_of({2, 1}),
                                                        root_of({1, 1}), root_of({0, 1})});
    FamilySpec d21 = nqtest::spec(Family::D21alpha, 3, RootOfUnity(1, 5));
    d21.r = RootOfUnity(1, 7);
    CHECK(positive_roots(d21).roots ==
          std::vector<Root>{root_of({1, 0, 0}), root_of({1, 1, 0}), root_of({1, 1, 1}),
                            root_of({1, 2, 1}), root_of({0, 1, 0}), root_of({0, 1, 1}),
                            root_of({0, 0, 1})});
}

TEST_CASE("root vector orders across the catalog") {
    using V = std::vector<std::int64_t>;

    SUBCASE("type A parity rule with one fermionic point") {
        FamilySpec s = nqtest::spec(Family::superA, 3, RootOfUnity(1, 5));
        s.j = 1;
        CHECK(order_vector(positive_roots(s)) == V{5, 5, 2, 5, 2, 2});
    }
    SUBCASE("type B at an even order") {
        CHECK(order_vector(positive_roots(nqtest::spec(Family::B, 3, RootOfUnity(1, 8)))) ==
              V{4, 4, 8, 4, 4, 4, 8, 4, 8});
    }
    SUBCASE("type C at an even order") {
        CHECK(order_vector(positive_roots(nqtest::spec(Family::C, 3, RootOfUnity(1, 8)))) ==
              V{8, 8, 4, 8, 8, 8, 4, 8, 4});
    }
    SUBCASE("type D is uniform") {
        const auto v = order_vector(positive_roots(nqtest::spec(Family::D, 4, RootOfUnity(1, 5))));
        CHECK(v == V(12, 5));
    }
    SUBCASE("type D with one fermionic point") {
        FamilySpec s = nqtest::spec(Family::superD, 3, RootOfUnity(1, 5));
        s.j = 1;
        CHECK(order_vector(positive_roots(s)) == V{2, 2, 2, 2, 5, 5, 5, 5});
        s.j = 2;
        CHECK(order_vector(positive_roots(s)) == V{5, 2, 2, 5, 2, 2, 5});
    }
    SUBCASE("standard B at a third root of unity") {
        FamilySpec s = nqtest::spec(Family::B_standard, 3);
        s.zeta = RootOfUnity(1, 3);
        s.j = 2;
        CHECK(order_vector(positive_roots(s)) == V{6, 2, 3, 2, 6, 2, 3, 2, 3});
    }
    SUBCASE("G2 at order six and at order five") {
        CHECK(order_vector(positive_roots(nqtest::spec(Family::G2_cartan, 2, RootOfUnity(1, 6)))) ==
              V{6, 2, 6, 2, 6, 2});
        CHECK(order_vector(positive_roots(nqtest::spec(Family::G2_cartan, 2, RootOfUnity(1, 5)))) ==
              V(6, 5));
    }
    SUBCASE("rank 4 weak form") {
        CHECK(order_vector(positive_roots(nqtest::spec(Family::wk4, 4, RootOfUnity(1, 5)))) ==
              V{5, 2, 2, 10, 2, 2, 2, 2, 5, 5, 10, 2, 2, 2, 10});
    }
    SUBCASE("rank 2 braided family") {
        FamilySpec s = nqtest::spec(Family::br2, 2, RootOfUnity(1, 5));
        s.zeta = RootOfUnity(1, 3);
        s.variant = 'a';
        CHECK(order_vector(positive_roots(s)) == V{3, 15, 3, 5});
    }
    SUBCASE("rank 3 exceptional") {
        CHECK(order_vector(positive_roots(nqtest::spec(Family::G3_super, 3, RootOfUnity(1, 5)))) ==
              V{2, 2, 2, 10, 2, 2, 2, 5, 5, 5, 5, 5, 5});
    }
    SUBCASE("rank 4 exceptional") {
        CHECK(order_vector(positive_roots(nqtest::spec(Family::F4_super, 4, RootOfUnity(1, 5)))) ==
              V{5, 5, 5, 5, 5, 5, 5, 5, 5, 2, 2, 2, 2, 5, 2, 2, 2, 2});
    }
    SUBCASE("rank 3 with two parameters") {
        FamilySpec s = nqtest::spec(Family::D21alpha, 3, RootOfUnity(2, 5));
        s.r = RootOfUnity(3, 7);
        CHECK(order_vector(positive_roots(s)) == V{5, 2, 2, 35, 2, 2, 7});
    }
    SUBCASE("diagonal braidings keep the prescribed orders") {
        FamilySpec s;
        s.family = Family::QLS;
        s.theta = 3;
        s.orders = {2, 3, 4};
        CHECK(order_vector(positive_roots(s)) == V{2, 3, 4});
    }
}

TEST_CASE("height step functions") {
    CHECK(f_height(3, 0) == 0);
    CHECK(f_height(3, 1) == 1);
    CHECK(f_height(3, 2) == 3);
    CHECK(f_height(3, 3) == 4);
    CHECK(f_height(3, 4) == 6);
    CHECK(f_height(3, 5) == 7);
    CHECK(g_height(4, 1) == 1);
    CHECK(g_height(4, 2) == 3);
    CHECK(g_height(4, 3) == 1);
    CHECK(g_height(5, 6) == 4);
    for (std::int64_t N : {2, 3, 5})
        for (std::int64_t n = 1; n <= 8; ++n)
            CHECK(f_height(N, n) - f_height(N, n - 1) == g_height(N, n));
    CHECK_THROWS_AS(f_height(3, -1), std::invalid_argument);
    CHECK_THROWS_AS(g_height(3, 0), std::invalid_argument);

    const RootSystemData rs = positive_roots(nqtest::spec(Family::G2_cartan, 2, RootOfUnity(1, 6)));
    CHECK(f_height(rs, 1, 2) == 2);
    CHECK(f_height(rs, 0, 2) == 6);
    CHECK(g_height(rs, 0, 2) == 5);
}

TEST_CASE("convexity checker flags misordered lists") {
    BraidingMatrix q(2);
    q.at(0, 0) = RootOfUnity(1, 3);
    q.at(1, 1) = RootOfUnity(1, 3);
    q.at(0, 1) = RootOfUnity(2, 3);

    const std::vector<Root> bad = {root_of({1, 0}), root_of({0, 1}), root_of({1, 1})};
    const ConvexityReport rep = check_convexity(assemble_root_system(q, bad, RootBackend::catalog));
    CHECK(!rep.ok);
    CHECK(rep.i == 0);
    CHECK(rep.j == 1);

    const std::vector<Root> reversed = {root_of({0, 1}), root_of({1, 1}), root_of({1, 0})};
    CHECK(check_convexity(assemble_root_system(q, reversed, RootBackend::catalog)).ok);
}

TEST_CASE("assembly rejects degenerate diagonal values") {
    BraidingMatrix q(2);
    q.at(0, 0) = RootOfUnity(1, 2);
    q.at(1, 1) = RootOfUnity(1, 2);
    CHECK_THROWS_AS(
        assemble_root_system(q, {root_of({1, 0}), root_of({1, 1})}, RootBackend::catalog),
        std::invalid_argument);
}

TEST_CASE("recognition recovers every catalog braiding at the root system level") {
    for (const FamilySpec& spec : nqtest::catalog_samples()) {
        CAPTURE(family_name(spec.family));
        CAPTURE(spec.theta);
        const BraidingMatrix q = family_matrix(spec);
        const auto found = recognize(q);
        REQUIRE(found.has_value());
        const RootSystemData via_spec = positive_roots(spec);
        const RootSystemData via_matrix = positive_roots(q);
        CHECK(via_matrix.roots == via_spec.roots);
        CHECK(via_matrix.orders == via_spec.orders);
        CHECK(via_matrix.q == q);
    }
}

TEST_CASE("recognition ignores how off-diagonal entries are split") {
    const FamilySpec spec = nqtest::spec(Family::G2_cartan, 2, RootOfUnity(1, 6));
    const BraidingMatrix upper = family_matrix(spec);
    BraidingMatrix lower(2);
    lower.at(0, 0) = upper.at(0, 0);
    lower.at(1, 1) = upper.at(1, 1);
    lower.at(1, 0) = upper.at(0, 1) * upper.at(1, 0);
    const RootSystemData a = positive_roots(upper);
    const RootSystemData b = positive_roots(lower);
    CHECK(a.roots == b.roots);
    CHECK(a.orders == b.orders);
}

TEST_CASE("recognition labels plain and diagonal cases directly") {
    CHECK(recognize(family_matrix(nqtest::spec(Family::A, 3, RootOfUnity(1, 5))))->family ==
          Family::A);
    CHECK(recognize(family_matrix(nqtest::spec(Family::G2_cartan, 2, RootOfUnity(1, 7))))->family ==
          Family::G2_cartan);

    BraidingMatrix diag(2);
    diag.at(0, 0) = RootOfUnity(2, 3);
    diag.at(1, 1) = RootOfUnity(1, 4);
    diag.at(0, 1) = RootOfUnity(1, 7);
    diag.at(1, 0) = RootOfUnity(6, 7);
    const auto found = recognize(diag);
    REQUIRE(found.has_value());
    CHECK(found->family == Family::QLS);
    CHECK(found->orders == std::vector<std::int64_t>{3, 4});
    const RootSystemData rs = positive_roots(diag);
    CHECK(rs.q_diag[0] == RootOfUnity(2, 3));
    CHECK(rs.orders == std::vector<std::int64_t>{3, 4});
}

TEST_CASE("braidings outside the catalog are reported, not guessed") {
    BraidingMatrix q(2);
    q.at(0, 0) = RootOfUnity(9, 12);
    q.at(0, 1) = RootOfUnity(1, 12);
    q.at(1, 1) = RootOfUnity(1, 2);
    CHECK(!recognize(q).has_value());
    CHECK_THROWS_AS(positive_roots(q), std::invalid_argument);

    BraidingMatrix unit(1);
    CHECK(!recognize(unit).has_value());
}
