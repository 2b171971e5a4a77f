#pragma once

#include <nq/braiding.hpp>

#include <optional>

namespace nq {

// Nonzero element of N_0^theta, the degree of a root vector.
struct Root {
    std::vector<int> coords;

    Root() = default;
    explicit Root(std::vector<int> c) : coords(std::move(c)) {}

    int theta() const { return int(coords.size()); }
    int height() const;
    friend bool operator==(const Root&, const Root&) = default;
    friend auto operator<=>(const Root&, const Root&) = default;
};

Root operator+(const Root& a, const Root& b);
Root& operator+=(Root& a, const Root& b);
Root simple_root(int theta, int i);

// Compact rendering: 1-based vertex digits with superscript exponents,
// e.g. (1,2,2,1) -> "12²3²4".
std::string to_string(const Root& r);

// prod q_ij^(a_i b_j), extending the braiding to degrees.
RootOfUnity q_bicharacter(const BraidingMatrix& q, const Root& a, const Root& b);

enum class RootBackend { catalog, generic };

struct RootSystemData {
    BraidingMatrix q;
    std::vector<Root> roots;           // positive roots in a fixed convex order
    std::vector<RootOfUnity> q_diag;   // q_gamma,gamma
    std::vector<std::int64_t> orders;  // N_gamma = ord(q_gamma,gamma)
    RootBackend source = RootBackend::catalog;

    int theta() const { return q.theta; }
    int size() const { return int(roots.size()); }
    std::optional<int> index_of(const Root& r) const;
};

// Fills q_diag and orders from the braiding; rejects any root with
// q_gamma,gamma = 1 since no finite PBW order exists there.
RootSystemData assemble_root_system(const BraidingMatrix& q, std::vector<Root> roots,
                                    RootBackend source);

// Matches the Dynkin diagram of q against the stored families. The returned
// spec reproduces the diagram exactly (up to twist); families sharing a root
// list may alias, which is harmless downstream.
std::optional<FamilySpec> recognize(const BraidingMatrix& q);

// Catalog backend: recognized families with their stored convex orders.
// Generic backend: Kharchenko PBW roots in Lyndon order, degree-bounded.
RootSystemData positive_roots(const BraidingMatrix& q,
                              RootBackend backend = RootBackend::catalog,
                              int degree_bound = 0);
RootSystemData positive_roots(const FamilySpec& spec);

// f(2k) = N k, f(2k+1) = N k + 1 for N = N_delta: the letter heights along
// the power chain of the root vector x_delta.
std::int64_t f_height(std::int64_t N_delta, std::int64_t n);
std::int64_t f_height(const RootSystemData& rs, int root_index, std::int64_t n);
// g(n) = f(n) - f(n-1).
std::int64_t g_height(std::int64_t N_delta, std::int64_t n);
std::int64_t g_height(const RootSystemData& rs, int root_index, std::int64_t n);

struct ConvexityReport {
    bool ok = true;
    int i = -1, j = -1;  // first pair with roots[i] + roots[j] misplaced
};
ConvexityReport check_convexity(const RootSystemData& rs);

}  // namespace nq
