#include <nq/braiding.hpp>

#include <algorithm>
#include <stdexcept>

namespace nq {

namespace {

void require(bool ok, const std::string& msg) {
    if (!ok) throw std::invalid_argument("family_matrix: " + msg);
}

BraidingMatrix from_diagram(const std::vector<RootOfUnity>& vertex,
                            const std::vector<std::pair<std::pair<int, int>, RootOfUnity>>& edge) {
    BraidingMatrix m(int(vertex.size()));
    for (int i = 0; i < m.theta; ++i) m.at(i, i) = vertex[i];
    for (const auto& [ij, label] : edge) m.at(ij.first, ij.second) = label;
    return m;
}

BraidingMatrix from_chain(const std::vector<RootOfUnity>& vertex,
                          const std::vector<RootOfUnity>& edge) {
    std::vector<std::pair<std::pair<int, int>, RootOfUnity>> e;
    for (int i = 0; i + 1 < int(vertex.size()); ++i) e.push_back({{i, i + 1}, edge[i]});
    return from_diagram(vertex, e);
}

// Least m with (m+1)_{q_ii} (q_ii^m q_ij q_ji - 1) = 0, so -c_ij.
int cartan_entry(const BraidingMatrix& q, int i, int j) {
    const RootOfUnity qii = q.at(i, i);
    const RootOfUnity qt = q.qtilde(i, j);
    const std::int64_t n = rou_order(qii);
    for (std::int64_t m = 0; m <= 8 * n; ++m) {
        if (n > 1 && (m + 1) % n == 0) return int(m);
        if (pow(qii, m) * qt == RootOfUnity()) return int(m);
    }
    throw std::runtime_error("not of finite Cartan scheme type at vertex " +
                             std::to_string(i + 1));
}

}  // namespace

DynkinDiagram dynkin_diagram(const BraidingMatrix& q) {
    DynkinDiagram d;
    d.vertex.resize(q.theta);
    for (int i = 0; i < q.theta; ++i) d.vertex[i] = q.at(i, i);
    for (int i = 0; i < q.theta; ++i)
        for (int j = i + 1; j < q.theta; ++j)
            if (RootOfUnity t = q.qtilde(i, j); !t.is_one()) d.edge[{i, j}] = t;
    return d;
}

std::vector<std::vector<int>> connected_components(const DynkinDiagram& d) {
    std::vector<int> parent(d.theta());
    for (int i = 0; i < d.theta(); ++i) parent[i] = i;
    auto root = [&](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    for (const auto& [ij, label] : d.edge) {
        (void)label;
        parent[root(ij.first)] = root(ij.second);
    }
    std::vector<std::vector<int>> comps;
    std::vector<int> slot(d.theta(), -1);
    for (int v = 0; v < d.theta(); ++v) {
        int r = root(v);
        if (slot[r] < 0) {
            slot[r] = int(comps.size());
            comps.emplace_back();
        }
        comps[slot[r]].push_back(v);
    }
    return comps;
}

bool twist_equivalent(const BraidingMatrix& a, const BraidingMatrix& b) {
    if (a.theta != b.theta) throw std::invalid_argument("twist_equivalent: rank mismatch");
    return dynkin_diagram(a) == dynkin_diagram(b);
}

std::string family_name(Family f) {
    switch (f) {
        case Family::A: return "A";
        case Family::superA: return "superA";
        case Family::B: return "B";
        case Family::superB: return "superB";
        case Family::B_standard: return "B_standard";
        case Family::C: return "C";
        case Family::D: return "D";
        case Family::superD: return "superD";
        case Family::E6: return "E6";
        case Family::E7: return "E7";
        case Family::E8: return "E8";
        case Family::F4: return "F4";
        case Family::G2_cartan: return "G2_cartan";
        case Family::G2_standard: return "G2_standard";
        case Family::D21alpha: return "D21alpha";
        case Family::F4_super: return "F4_super";
        case Family::G3_super: return "G3_super";
        case Family::wk4: return "wk4";
        case Family::br2: return "br2";
        case Family::QLS: return "QLS";
    }
    throw std::invalid_argument("family_name: bad enum value");
}

Family parse_family(const std::string& name) {
    static const Family all[] = {
        Family::A,         Family::superA,      Family::B,        Family::superB,
        Family::B_standard, Family::C,          Family::D,        Family::superD,
        Family::E6,        Family::E7,          Family::E8,       Family::F4,
        Family::G2_cartan, Family::G2_standard, Family::D21alpha, Family::F4_super,
        Family::G3_super,  Family::wk4,         Family::br2,      Family::QLS,
    };
    for (Family f : all)
        if (family_name(f) == name) return f;
    throw std::invalid_argument("parse_family: unknown family '" + name + "'");
}

BraidingMatrix family_matrix(const FamilySpec& spec) {
    const int th = spec.theta;
    const RootOfUnity minus(1, 2);
    const RootOfUnity q = spec.q;
    const RootOfUnity z = spec.zeta;

    switch (spec.family) {
        case Family::A: {
            require(th >= 1, "A: theta >= 1 required");
            require(rou_order(q) >= 2, "A: q = 1 not admissible");
            return from_chain(std::vector<RootOfUnity>(th, q),
                              std::vector<RootOfUnity>(th, inverse(q)));
        }
        case Family::superA: {
            require(th >= 2, "superA: theta >= 2 required");
            require(spec.j >= 1 && spec.j <= th - 1, "superA: j in [1, theta-1] required");
            require(rou_order(q) >= 3, "superA: ord(q) >= 3 required");
            const int p = th - spec.j;  // index of the -1 vertex
            std::vector<RootOfUnity> v(th), e(th - 1);
            for (int i = 0; i < th; ++i) v[i] = i < p ? q : (i == p ? minus : inverse(q));
            for (int i = 0; i + 1 < th; ++i) e[i] = i < p ? inverse(q) : q;
            return from_chain(v, e);
        }
        case Family::B: {
            require(th >= 2, "B: theta >= 2 required");
            require(rou_order(q) >= 3, "B: ord(q) >= 3 required");
            std::vector<RootOfUnity> v(th, q * q);
            v[th - 1] = q;
            return from_chain(v, std::vector<RootOfUnity>(th, inverse(q * q)));
        }
        case Family::superB: {
            require(th >= 2, "superB: theta >= 2 required");
            require(spec.j >= 1 && spec.j <= th - 1, "superB: j in [1, theta-1] required");
            require(rou_order(q) >= 3, "superB: ord(q) >= 3 required");
            const int p = spec.j - 1;  // index of the -1 vertex
            std::vector<RootOfUnity> v(th), e(th - 1);
            for (int i = 0; i < th - 1; ++i)
                v[i] = i < p ? inverse(q * q) : (i == p ? minus : q * q);
            v[th - 1] = q;
            for (int i = 0; i + 1 < th; ++i) e[i] = i < p ? q * q : inverse(q * q);
            return from_chain(v, e);
        }
        case Family::B_standard: {
            require(th >= 2, "B_standard: theta >= 2 required");
            require(spec.j >= 1 && spec.j <= th - 1, "B_standard: j in [1, theta-1] required");
            require(rou_order(z) == 3, "B_standard: zeta of order 3 required");
            const int p = spec.j - 1;
            std::vector<RootOfUnity> v(th), e(th - 1);
            for (int i = 0; i < th - 1; ++i)
                v[i] = i < p ? -z : (i == p ? minus : -inverse(z));
            v[th - 1] = z;
            for (int i = 0; i + 1 < th; ++i) e[i] = i < p ? -inverse(z) : -z;
            return from_chain(v, e);
        }
        case Family::C: {
            require(th >= 2, "C: theta >= 2 required");
            require(rou_order(q) >= 3, "C: ord(q) >= 3 required");
            std::vector<RootOfUnity> v(th, q), e(th - 1, inverse(q));
            v[th - 1] = q * q;
            e[th - 2] = inverse(q * q);
            return from_chain(v, e);
        }
        case Family::D: {
            require(th >= 3, "D: theta >= 3 required");
            require(rou_order(q) >= 2, "D: q = 1 not admissible");
            std::vector<std::pair<std::pair<int, int>, RootOfUnity>> e;
            for (int i = 0; i + 2 < th; ++i) e.push_back({{i, i + 1}, inverse(q)});
            e.push_back({{th - 3, th - 1}, inverse(q)});
            return from_diagram(std::vector<RootOfUnity>(th, q), e);
        }
        case Family::superD: {
            require(th >= 2, "superD: theta >= 2 required");
            require(spec.j >= 1 && spec.j <= th - 1, "superD: j in [1, theta-1] required");
            require(rou_order(q) >= 3, "superD: ord(q) >= 3 required");
            const int p = spec.j - 1;
            std::vector<RootOfUnity> v(th), e(th - 1);
            for (int i = 0; i < th - 1; ++i) v[i] = i < p ? inverse(q) : (i == p ? minus : q);
            v[th - 1] = q * q;
            for (int i = 0; i + 2 < th; ++i) e[i] = i < p ? q : inverse(q);
            e[th - 2] = inverse(q * q);
            return from_chain(v, e);
        }
        case Family::E6:
        case Family::E7:
        case Family::E8: {
            const int rank = spec.family == Family::E6 ? 6 : spec.family == Family::E7 ? 7 : 8;
            require(th == rank, "E: theta must match the family rank");
            require(rou_order(q) >= 2, "E: q = 1 not admissible");
            std::vector<std::pair<std::pair<int, int>, RootOfUnity>> e;
            e.push_back({{0, 2}, inverse(q)});
            e.push_back({{1, 3}, inverse(q)});
            for (int i = 2; i + 1 < th; ++i) e.push_back({{i, i + 1}, inverse(q)});
            return from_diagram(std::vector<RootOfUnity>(th, q), e);
        }
        case Family::F4: {
            require(th == 4, "F4: theta = 4 required");
            require(rou_order(q) >= 3, "F4: ord(q) >= 3 required");
            return from_chain({q, q, q * q, q * q},
                              {inverse(q), inverse(q * q), inverse(q * q)});
        }
        case Family::G2_cartan: {
            require(th == 2, "G2_cartan: theta = 2 required");
            require(rou_order(q) >= 4, "G2_cartan: ord(q) >= 4 required");
            return from_chain({q, pow(q, 3)}, {pow(q, -3)});
        }
        case Family::G2_standard: {
            require(th == 2, "G2_standard: theta = 2 required");
            require(rou_order(z) == 8, "G2_standard: zeta of order 8 required");
            switch (spec.variant) {
                case 'a': return from_chain({z * z, inverse(z)}, {z});
                case 'b': return from_chain({z * z, minus}, {pow(z, 3)});
                case 'c': return from_chain({z, minus}, {pow(z, 5)});
                default: require(false, "G2_standard: variant must be a, b or c");
            }
            break;
        }
        case Family::D21alpha: {
            require(th == 3, "D21alpha: theta = 3 required");
            require(!q.is_one() && !spec.r.is_one() && !(q * spec.r).is_one(),
                    "D21alpha: q, r, (qr)^{-1} must all differ from 1");
            return from_chain({q, minus, spec.r}, {inverse(q), inverse(spec.r)});
        }
        case Family::F4_super: {
            require(th == 4, "F4_super: theta = 4 required");
            require(rou_order(q) >= 4, "F4_super: ord(q) >= 4 required");
            return from_chain({q * q, q * q, q, minus},
                              {inverse(q * q), inverse(q * q), inverse(q)});
        }
        case Family::G3_super: {
            require(th == 3, "G3_super: theta = 3 required");
            require(rou_order(q) >= 4, "G3_super: ord(q) >= 4 required");
            return from_chain({minus, q, pow(q, 3)}, {inverse(q), pow(q, -3)});
        }
        case Family::wk4: {
            require(th == 4, "wk4: theta = 4 required");
            require(rou_order(q) >= 3, "wk4: q != +-1 required");
            return from_chain({q, minus, minus, -inverse(q)}, {inverse(q), minus, -q});
        }
        case Family::br2: {
            require(th == 2, "br2: theta = 2 required");
            require(rou_order(z) == 3, "br2: zeta of order 3 required");
            require(rou_order(q) != 1 && rou_order(q) != 3, "br2: q not a cube root of 1");
            switch (spec.variant) {
                case 'a': return from_chain({z, q}, {inverse(q)});
                case 'b': return from_chain({z, z * inverse(q)}, {z * z * q});
                default: require(false, "br2: variant must be a or b");
            }
            break;
        }
        case Family::QLS: {
            require(int(spec.orders.size()) == th, "QLS: theta must match the orders list");
            require(th >= 1, "QLS: theta >= 1 required");
            std::vector<RootOfUnity> v(th);
            for (int i = 0; i < th; ++i) {
                require(spec.orders[i] >= 2, "QLS: every order must be >= 2");
                v[i] = RootOfUnity(1, spec.orders[i]);
            }
            return from_diagram(v, {});
        }
    }
    throw std::invalid_argument("family_matrix: bad family enum value");
}

std::vector<std::vector<int>> cartan_matrix(const BraidingMatrix& q) {
    std::vector<std::vector<int>> c(q.theta, std::vector<int>(q.theta, 0));
    for (int i = 0; i < q.theta; ++i) {
        c[i][i] = 2;
        for (int j = 0; j < q.theta; ++j)
            if (j != i) c[i][j] = -cartan_entry(q, i, j);
    }
    return c;
}

BraidingMatrix reflect(const BraidingMatrix& q, int i) {
    std::vector<std::int64_t> ci(q.theta, 2);
    for (int j = 0; j < q.theta; ++j)
        if (j != i) ci[j] = -cartan_entry(q, i, j);
    BraidingMatrix out(q.theta);
    for (int j = 0; j < q.theta; ++j)
        for (int k = 0; k < q.theta; ++k)
            out.at(j, k) = q.at(j, k) * pow(q.at(i, k), -ci[j]) * pow(q.at(j, i), -ci[k]) *
                           pow(q.at(i, i), ci[j] * ci[k]);
    return out;
}

std::string to_string(const DynkinDiagram& d) {
    std::string s = "vertices:";
    for (const RootOfUnity& v : d.vertex) s += " " + to_string(v);
    s += "; edges:";
    if (d.edge.empty()) s += " none";
    for (const auto& [ij, label] : d.edge)
        s += " (" + std::to_string(ij.first + 1) + "," + std::to_string(ij.second + 1) +
             ")=" + to_string(label);
    return s;
}

}  // namespace nq
