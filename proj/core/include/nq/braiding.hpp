#pragma once

#include <nq/scalars.hpp>

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace nq {

// Matrix (q_ij) of roots of unity defining a diagonal braiding
// c(x_i (x) x_j) = q_ij x_j (x) x_i on a vector space of rank theta.
struct BraidingMatrix {
    int theta = 0;
    std::vector<RootOfUnity> entries;

    BraidingMatrix() = default;
    explicit BraidingMatrix(int n) : theta(n), entries(std::size_t(n) * std::size_t(n)) {}

    RootOfUnity& at(int i, int j) { return entries[std::size_t(i) * theta + j]; }
    const RootOfUnity& at(int i, int j) const { return entries[std::size_t(i) * theta + j]; }

    RootOfUnity qtilde(int i, int j) const { return at(i, j) * at(j, i); }

    friend bool operator==(const BraidingMatrix&, const BraidingMatrix&) = default;
};

// Vertex i carries q_ii; an edge {i, j} carries q_ij q_ji and is present
// exactly when that product is not 1. Keys are normalized to i < j.
struct DynkinDiagram {
    std::vector<RootOfUnity> vertex;
    std::map<std::pair<int, int>, RootOfUnity> edge;

    int theta() const { return int(vertex.size()); }
    friend bool operator==(const DynkinDiagram&, const DynkinDiagram&) = default;
};

DynkinDiagram dynkin_diagram(const BraidingMatrix& q);

// Partition of {0, ..., theta-1}; components sorted, ordered by least vertex.
std::vector<std::vector<int>> connected_components(const DynkinDiagram& d);

// Equal Dynkin diagrams with the vertex numbering fixed. Throws
// std::invalid_argument on rank mismatch.
bool twist_equivalent(const BraidingMatrix& a, const BraidingMatrix& b);

enum class Family {
    A,
    superA,
    B,
    superB,
    B_standard,
    C,
    D,
    superD,
    E6,
    E7,
    E8,
    F4,
    G2_cartan,
    G2_standard,
    D21alpha,
    F4_super,
    G3_super,
    wk4,
    br2,
    QLS,
};

std::string family_name(Family f);
Family parse_family(const std::string& name);

struct FamilySpec {
    Family family = Family::A;
    int theta = 0;
    RootOfUnity q;                      // principal parameter
    RootOfUnity zeta;                   // order 3 for B_standard and br2, order 8 for G2_standard
    RootOfUnity r;                      // second vertex parameter of D21alpha
    int j = 0;                          // position of the -1 vertex in the super and standard series
    char variant = 'a';                 // diagram variant: G2_standard a/b/c, br2 a/b
    std::vector<std::int64_t> orders;   // diagonal orders for QLS
};

// Upper-triangular representative: q_ij = (edge label), q_ji = 1 for i < j.
// Throws std::invalid_argument on inadmissible parameters.
BraidingMatrix family_matrix(const FamilySpec& spec);

// c_ii = 2, c_ij = -min{m >= 0 : (m+1)_{q_ii} (q_ii^m q_ij q_ji - 1) = 0};
// throws std::runtime_error when no m up to 8 ord(q_ii) works.
std::vector<std::vector<int>> cartan_matrix(const BraidingMatrix& q);

// (rho_i q)_jk = q_jk q_ik^{-c_ij} q_ji^{-c_ik} q_ii^{c_ij c_ik}.
BraidingMatrix reflect(const BraidingMatrix& q, int i);

// Edge-list rendering with 1-based vertex numbers.
std::string to_string(const DynkinDiagram& d);

}  // namespace nq
