#include <nq/rootdata.hpp>

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace nq {

int Root::height() const { return std::accumulate(coords.begin(), coords.end(), 0); }

Root operator+(const Root& a, const Root& b) {
    Root out = a;
    out += b;
    return out;
}

Root& operator+=(Root& a, const Root& b) {
    for (std::size_t i = 0; i < a.coords.size(); ++i) a.coords[i] += b.coords[i];
    return a;
}

Root simple_root(int theta, int i) {
    Root r(std::vector<int>(theta, 0));
    r.coords[i] = 1;
    return r;
}

std::string to_string(const Root& r) {
    static const char* sup[] = {"⁰", "¹", "²", "³", "⁴",
                                "⁵", "⁶", "⁷", "⁸", "⁹"};
    std::string s;
    for (int i = 0; i < r.theta(); ++i) {
        const int e = r.coords[i];
        if (e == 0) continue;
        if (i + 1 <= 9) s += std::to_string(i + 1);
        else s += "(" + std::to_string(i + 1) + ")";
        if (e > 1)
            for (char c : std::to_string(e)) s += sup[c - '0'];
    }
    return s.empty() ? "0" : s;
}

RootOfUnity q_bicharacter(const BraidingMatrix& q, const Root& a, const Root& b) {
    RootOfUnity out;
    for (int i = 0; i < q.theta; ++i) {
        if (a.coords[i] == 0) continue;
        for (int j = 0; j < q.theta; ++j) {
            if (b.coords[j] == 0) continue;
            out = out * pow(q.at(i, j), std::int64_t(a.coords[i]) * b.coords[j]);
        }
    }
    return out;
}

std::optional<int> RootSystemData::index_of(const Root& r) const {
    auto it = std::find(roots.begin(), roots.end(), r);
    if (it == roots.end()) return std::nullopt;
    return int(it - roots.begin());
}

RootSystemData assemble_root_system(const BraidingMatrix& q, std::vector<Root> roots,
                                    RootBackend source) {
    RootSystemData rs;
    rs.q = q;
    rs.roots = std::move(roots);
    rs.source = source;
    rs.q_diag.reserve(rs.roots.size());
    rs.orders.reserve(rs.roots.size());
    for (const Root& r : rs.roots) {
        if (r.theta() != q.theta || r.height() == 0)
            throw std::invalid_argument("assemble_root_system: malformed root");
        RootOfUnity d = q_bicharacter(q, r, r);
        if (d.is_one())
            throw std::invalid_argument("assemble_root_system: q_gg = 1 at root " + to_string(r));
        rs.q_diag.push_back(d);
        rs.orders.push_back(rou_order(d));
    }
    return rs;
}

namespace {

// 1-based inclusive interval alpha_{i j}.
Root interval(int th, int i, int j) {
    Root r(std::vector<int>(th, 0));
    for (int k = i; k <= j; ++k) r.coords[k - 1] = 1;
    return r;
}

Root make_root(std::initializer_list<int> cs) { return Root(std::vector<int>(cs)); }

std::vector<Root> roots_A(int th) {
    std::vector<Root> out;
    for (int i = 1; i <= th; ++i)
        for (int j = i; j <= th; ++j) out.push_back(interval(th, i, j));
    return out;
}

std::vector<Root> roots_B(int th) {
    std::vector<Root> out;
    for (int i = 1; i <= th; ++i) {
        for (int k = i; k <= th; ++k) out.push_back(interval(th, i, k));
        for (int k = th; k >= i + 1; --k)
            out.push_back(interval(th, i, th) + interval(th, k, th));
    }
    return out;
}

std::vector<Root> roots_C(int th) {
    std::vector<Root> out;
    for (int i = 1; i <= th - 1; ++i) {
        for (int k = i; k <= th - 1; ++k) out.push_back(interval(th, i, k));
        out.push_back(interval(th, i, th) + interval(th, i, th - 1));
        out.push_back(interval(th, i, th));
        for (int j = th - 1; j >= i + 1; --j)
            out.push_back(interval(th, i, th) + interval(th, j, th - 1));
    }
    out.push_back(interval(th, th, th));
    return out;
}

std::vector<Root> roots_superD(int th, int jodd) {
    std::vector<Root> out;
    for (int i = 1; i <= th - 1; ++i) {
        for (int k = i; k <= th - 1; ++k) out.push_back(interval(th, i, k));
        if (i >= jodd + 1) out.push_back(interval(th, i, th) + interval(th, i, th - 1));
        out.push_back(interval(th, i, th));
        for (int k = th - 1; k >= i + 1; --k)
            out.push_back(interval(th, i, th) + interval(th, k, th - 1));
    }
    out.push_back(interval(th, th, th));
    return out;
}

std::vector<Root> roots_D(int th) {
    std::vector<Root> out;
    for (int i = 1; i <= th - 2; ++i) {
        for (int k = i; k <= th - 1; ++k) out.push_back(interval(th, i, k));
        out.push_back(interval(th, i, th - 2) + interval(th, th, th));
        out.push_back(interval(th, i, th));
        for (int j = th - 2; j >= i + 1; --j)
            out.push_back(interval(th, i, th) + interval(th, j, th - 2));
    }
    out.push_back(interval(th, th - 1, th - 1));
    out.push_back(interval(th, th, th));
    return out;
}

const int kE6[36][6] = {
    {1, 0, 0, 0, 0, 0}, {0, 1, 0, 0, 0, 0}, {1, 0, 1, 0, 0, 0}, {0, 0, 1, 0, 0, 0},
    {1, 1, 1, 1, 0, 0}, {1, 0, 1, 1, 0, 0}, {0, 1, 1, 1, 0, 0}, {0, 1, 0, 1, 0, 0},
    {0, 0, 1, 1, 0, 0}, {0, 0, 0, 1, 0, 0}, {1, 1, 2, 2, 1, 0}, {1, 1, 1, 2, 1, 0},
    {0, 1, 1, 2, 1, 0}, {1, 1, 1, 1, 1, 0}, {1, 0, 1, 1, 1, 0}, {0, 1, 1, 1, 1, 0},
    {0, 0, 1, 1, 1, 0}, {0, 1, 0, 1, 1, 0}, {0, 0, 0, 1, 1, 0}, {0, 0, 0, 0, 1, 0},
    {1, 2, 2, 3, 2, 1}, {1, 1, 2, 3, 2, 1}, {1, 1, 2, 2, 2, 1}, {1, 1, 2, 2, 1, 1},
    {1, 1, 1, 2, 2, 1}, {0, 1, 1, 2, 2, 1}, {1, 1, 1, 2, 1, 1}, {0, 1, 1, 2, 1, 1},
    {1, 1, 1, 1, 1, 1}, {0, 1, 1, 1, 1, 1}, {0, 1, 0, 1, 1, 1}, {1, 0, 1, 1, 1, 1},
    {0, 0, 1, 1, 1, 1}, {0, 0, 0, 1, 1, 1}, {0, 0, 0, 0, 1, 1}, {0, 0, 0, 0, 0, 1},
};

const int kE7new[27][7] = {
    {2, 2, 3, 4, 3, 2, 1}, {1, 2, 3, 4, 3, 2, 1}, {1, 2, 2, 4, 3, 2, 1},
    {1, 2, 2, 3, 3, 2, 1}, {1, 1, 2, 3, 3, 2, 1}, {1, 2, 2, 3, 2, 2, 1},
    {1, 2, 2, 3, 2, 1, 1}, {1, 1, 2, 3, 2, 2, 1}, {1, 1, 2, 3, 2, 1, 1},
    {1, 1, 2, 2, 2, 2, 1}, {1, 1, 2, 2, 2, 1, 1}, {1, 1, 2, 2, 1, 1, 1},
    {1, 1, 1, 2, 2, 2, 1}, {1, 1, 1, 2, 2, 1, 1}, {1, 1, 1, 2, 1, 1, 1},
    {1, 1, 1, 1, 1, 1, 1}, {1, 0, 1, 1, 1, 1, 1}, {0, 1, 1, 2, 2, 2, 1},
    {0, 1, 1, 2, 2, 1, 1}, {0, 1, 1, 2, 1, 1, 1}, {0, 1, 1, 1, 1, 1, 1},
    {0, 1, 0, 1, 1, 1, 1}, {0, 0, 1, 1, 1, 1, 1}, {0, 0, 0, 1, 1, 1, 1},
    {0, 0, 0, 0, 1, 1, 1}, {0, 0, 0, 0, 0, 1, 1}, {0, 0, 0, 0, 0, 0, 1},
};

const int kE8new[57][8] = {
    {2, 3, 4, 6, 5, 4, 3, 1}, {2, 3, 4, 6, 5, 4, 2, 1}, {2, 3, 4, 6, 5, 3, 2, 1},
    {2, 3, 4, 6, 4, 3, 2, 1}, {2, 3, 4, 5, 4, 3, 2, 1}, {2, 2, 4, 5, 4, 3, 2, 1},
    {2, 3, 3, 5, 4, 3, 2, 1}, {1, 3, 3, 5, 4, 3, 2, 1}, {2, 2, 3, 5, 4, 3, 2, 1},
    {1, 2, 3, 5, 4, 3, 2, 1}, {2, 2, 3, 4, 4, 3, 2, 1}, {1, 2, 3, 4, 4, 3, 2, 1},
    {1, 2, 2, 4, 4, 3, 2, 1}, {2, 2, 3, 4, 3, 3, 2, 1}, {1, 2, 3, 4, 3, 3, 2, 1},
    {1, 2, 2, 4, 3, 3, 2, 1}, {1, 2, 2, 3, 3, 3, 2, 1}, {1, 1, 2, 3, 3, 3, 2, 1},
    {2, 2, 3, 4, 3, 2, 2, 1}, {1, 2, 3, 4, 3, 2, 2, 1}, {1, 2, 2, 4, 3, 2, 2, 1},
    {1, 2, 2, 3, 3, 2, 2, 1}, {1, 2, 2, 3, 2, 2, 2, 1}, {1, 1, 2, 3, 3, 2, 2, 1},
    {1, 1, 2, 3, 2, 2, 2, 1}, {1, 1, 2, 2, 2, 2, 2, 1}, {1, 1, 1, 2, 2, 2, 2, 1},
    {0, 1, 1, 2, 2, 2, 2, 1}, {2, 3, 4, 6, 5, 4, 3, 2}, {2, 2, 3, 4, 3, 2, 1, 1},
    {1, 2, 3, 4, 3, 2, 1, 1}, {1, 2, 2, 4, 3, 2, 1, 1}, {1, 2, 2, 3, 3, 2, 1, 1},
    {1, 1, 2, 3, 3, 2, 1, 1}, {1, 2, 2, 3, 2, 2, 1, 1}, {1, 2, 2, 3, 2, 1, 1, 1},
    {1, 1, 2, 3, 2, 2, 1, 1}, {1, 1, 2, 3, 2, 1, 1, 1}, {1, 1, 2, 2, 2, 2, 1, 1},
    {1, 1, 2, 2, 2, 1, 1, 1}, {1, 1, 2, 2, 1, 1, 1, 1}, {1, 1, 1, 2, 2, 2, 1, 1},
    {1, 1, 1, 2, 2, 1, 1, 1}, {1, 1, 1, 2, 1, 1, 1, 1}, {1, 1, 1, 1, 1, 1, 1, 1},
    {1, 0, 1, 1, 1, 1, 1, 1}, {0, 1, 1, 2, 2, 2, 1, 1}, {0, 1, 1, 2, 2, 1, 1, 1},
    {0, 1, 1, 2, 1, 1, 1, 1}, {0, 1, 1, 1, 1, 1, 1, 1}, {0, 1, 0, 1, 1, 1, 1, 1},
    {0, 0, 1, 1, 1, 1, 1, 1}, {0, 0, 0, 1, 1, 1, 1, 1}, {0, 0, 0, 0, 1, 1, 1, 1},
    {0, 0, 0, 0, 0, 1, 1, 1}, {0, 0, 0, 0, 0, 0, 1, 1}, {0, 0, 0, 0, 0, 0, 0, 1},
};

template <std::size_t K, std::size_t W>
void append_table(std::vector<Root>& out, const int (&table)[K][W], int th) {
    for (std::size_t r = 0; r < K; ++r) {
        Root root(std::vector<int>(th, 0));
        for (std::size_t c = 0; c < W; ++c) root.coords[c] = table[r][c];
        out.push_back(std::move(root));
    }
}

std::vector<Root> roots_E(int th) {
    std::vector<Root> out;
    append_table(out, kE6, th);
    if (th >= 7) append_table(out, kE7new, th);
    if (th >= 8) append_table(out, kE8new, th);
    return out;
}

// beta_k = s_{w_1} ... s_{w_{k-1}}(alpha_{w_k}) for a reduced word of the
// longest element, read off the Cartan matrix of the braiding.
std::vector<Root> roots_from_word(const BraidingMatrix& q, const std::vector<int>& word) {
    const auto c = cartan_matrix(q);
    const int th = q.theta;
    std::vector<Root> out;
    for (std::size_t k = 0; k < word.size(); ++k) {
        Root v = simple_root(th, word[k]);
        for (std::size_t t = k; t-- > 0;) {
            const int i = word[t];
            std::int64_t pairing = 0;
            for (int j = 0; j < th; ++j) pairing += std::int64_t(c[i][j]) * v.coords[j];
            v.coords[i] -= int(pairing);
        }
        out.push_back(std::move(v));
    }
    std::set<Root> distinct(out.begin(), out.end());
    if (distinct.size() != out.size())
        throw std::runtime_error("roots_from_word: word is not reduced");
    for (const Root& r : out)
        if (*std::min_element(r.coords.begin(), r.coords.end()) < 0)
            throw std::runtime_error("roots_from_word: negative root produced");
    return out;
}

std::vector<Root> roots_F4(const FamilySpec& spec) {
    std::vector<int> word;
    for (int rep = 0; rep < 6; ++rep)
        for (int i = 0; i < 4; ++i) word.push_back(i);
    return roots_from_word(family_matrix(spec), word);
}

std::vector<Root> roots_G2() {
    return {make_root({1, 0}), make_root({3, 1}), make_root({2, 1}),
            make_root({3, 2}), make_root({1, 1}), make_root({0, 1})};
}

std::vector<Root> roots_D21alpha() {
    return {make_root({1, 0, 0}), make_root({1, 1, 0}), make_root({1, 1, 1}),
            make_root({1, 2, 1}), make_root({0, 1, 0}), make_root({0, 1, 1}),
            make_root({0, 0, 1})};
}

std::vector<Root> roots_F4_super() {
    return {make_root({1, 0, 0, 0}), make_root({1, 1, 0, 0}), make_root({1, 1, 1, 0}),
            make_root({1, 1, 2, 0}), make_root({1, 2, 2, 0}), make_root({0, 1, 0, 0}),
            make_root({0, 1, 1, 0}), make_root({0, 1, 2, 0}), make_root({0, 0, 1, 0}),
            make_root({1, 2, 3, 1}), make_root({1, 2, 2, 1}), make_root({1, 1, 2, 1}),
            make_root({0, 1, 2, 1}), make_root({1, 2, 3, 2}), make_root({1, 1, 1, 1}),
            make_root({0, 1, 1, 1}), make_root({0, 0, 1, 1}), make_root({0, 0, 0, 1})};
}

std::vector<Root> roots_G3_super() {
    return {make_root({1, 0, 0}), make_root({1, 1, 0}), make_root({1, 1, 1}),
            make_root({1, 2, 1}), make_root({1, 3, 1}), make_root({1, 3, 2}),
            make_root({1, 4, 2}), make_root({0, 1, 0}), make_root({0, 3, 1}),
            make_root({0, 2, 1}), make_root({0, 3, 2}), make_root({0, 1, 1}),
            make_root({0, 0, 1})};
}

std::vector<Root> roots_wk4() {
    return {make_root({1, 0, 0, 0}), make_root({1, 1, 0, 0}), make_root({0, 1, 0, 0}),
            make_root({1, 2, 1, 0}), make_root({1, 1, 1, 0}), make_root({0, 1, 1, 0}),
            make_root({0, 0, 1, 0}), make_root({1, 2, 2, 1}), make_root({1, 1, 2, 1}),
            make_root({0, 1, 2, 1}), make_root({1, 2, 1, 1}), make_root({1, 1, 1, 1}),
            make_root({0, 1, 1, 1}), make_root({0, 0, 1, 1}), make_root({0, 0, 0, 1})};
}

std::vector<Root> roots_br2() {
    return {make_root({1, 0}), make_root({2, 1}), make_root({1, 1}), make_root({0, 1})};
}

std::vector<Root> catalog_roots(const FamilySpec& spec) {
    switch (spec.family) {
        case Family::A:
        case Family::superA: return roots_A(spec.theta);
        case Family::B:
        case Family::superB:
        case Family::B_standard: return roots_B(spec.theta);
        case Family::C: return roots_C(spec.theta);
        case Family::D: return roots_D(spec.theta);
        case Family::superD: return roots_superD(spec.theta, spec.j);
        case Family::E6:
        case Family::E7:
        case Family::E8: return roots_E(spec.theta);
        case Family::F4: return roots_F4(spec);
        case Family::G2_cartan:
        case Family::G2_standard: return roots_G2();
        case Family::D21alpha: return roots_D21alpha();
        case Family::F4_super: return roots_F4_super();
        case Family::G3_super: return roots_G3_super();
        case Family::wk4: return roots_wk4();
        case Family::br2: return roots_br2();
        case Family::QLS: {
            std::vector<Root> out;
            for (int i = 0; i < spec.theta; ++i) out.push_back(simple_root(spec.theta, i));
            return out;
        }
    }
    throw std::invalid_argument("catalog_roots: bad family enum value");
}

std::vector<RootOfUnity> square_roots(RootOfUnity y) {
    return {RootOfUnity(y.num, 2 * y.ord), RootOfUnity(y.num + y.ord, 2 * y.ord)};
}

}  // namespace

std::optional<FamilySpec> recognize(const BraidingMatrix& q) {
    const DynkinDiagram d = dynkin_diagram(q);
    const int th = q.theta;
    const auto& v = d.vertex;

    if (d.edge.empty()) {
        FamilySpec s;
        s.family = Family::QLS;
        s.theta = th;
        for (const RootOfUnity& label : v) {
            if (label.is_one()) return std::nullopt;
            s.orders.push_back(rou_order(label));
        }
        return s;
    }

    auto matches = [&](const FamilySpec& s) {
        try {
            return dynkin_diagram(family_matrix(s)) == d;
        } catch (const std::invalid_argument&) {
            return false;
        }
    };
    std::vector<FamilySpec> candidates;
    auto cand = [&](Family f, auto&& fill) {
        FamilySpec s;
        s.family = f;
        s.theta = th;
        fill(s);
        candidates.push_back(std::move(s));
    };

    cand(Family::A, [&](FamilySpec& s) { s.q = v[0]; });
    for (int j = 1; j <= th - 1; ++j)
        cand(Family::superA, [&](FamilySpec& s) { s.q = v[0], s.j = j; });
    cand(Family::B, [&](FamilySpec& s) { s.q = v[th - 1]; });
    for (int j = 1; j <= th - 1; ++j)
        cand(Family::superB, [&](FamilySpec& s) { s.q = v[th - 1], s.j = j; });
    for (int j = 1; j <= th - 1; ++j)
        cand(Family::B_standard, [&](FamilySpec& s) { s.zeta = v[th - 1], s.j = j; });
    cand(Family::C, [&](FamilySpec& s) { s.q = v[0]; });
    cand(Family::D, [&](FamilySpec& s) { s.q = v[0]; });
    for (int j = 1; j <= th - 1; ++j) {
        std::vector<RootOfUnity> qs = {inverse(v[0])};
        qs.insert(qs.end(), v.begin(), v.end());
        auto sq = square_roots(v[th - 1]);
        qs.insert(qs.end(), sq.begin(), sq.end());
        for (const RootOfUnity& qq : qs)
            cand(Family::superD, [&](FamilySpec& s) { s.q = qq, s.j = j; });
    }
    if (th >= 6 && th <= 8) {
        const Family f = th == 6 ? Family::E6 : th == 7 ? Family::E7 : Family::E8;
        cand(f, [&](FamilySpec& s) { s.q = v[0]; });
    }
    if (th == 4) {
        cand(Family::F4, [&](FamilySpec& s) { s.q = v[0]; });
        cand(Family::F4_super, [&](FamilySpec& s) { s.q = v[2]; });
        cand(Family::wk4, [&](FamilySpec& s) { s.q = v[0]; });
    }
    if (th == 3) {
        cand(Family::G3_super, [&](FamilySpec& s) { s.q = v[1]; });
        cand(Family::D21alpha, [&](FamilySpec& s) { s.q = v[0], s.r = v[2]; });
    }
    if (th == 2) {
        cand(Family::G2_cartan, [&](FamilySpec& s) { s.q = v[0]; });
        for (std::int64_t k : {1, 3, 5, 7})
            for (char var : {'a', 'b', 'c'})
                cand(Family::G2_standard, [&](FamilySpec& s) {
                    s.zeta = RootOfUnity(k, 8), s.variant = var;
                });
        cand(Family::br2, [&](FamilySpec& s) { s.zeta = v[0], s.q = v[1], s.variant = 'a'; });
        cand(Family::br2,
             [&](FamilySpec& s) { s.zeta = v[0], s.q = v[0] * inverse(v[1]), s.variant = 'b'; });
    }

    for (const FamilySpec& s : candidates)
        if (matches(s)) return s;
    return std::nullopt;
}

RootSystemData positive_roots(const BraidingMatrix& q, RootBackend backend, int degree_bound) {
    if (backend == RootBackend::generic) {
        (void)degree_bound;
        throw std::runtime_error("positive_roots: generic backend not wired up yet");
    }
    auto spec = recognize(q);
    if (!spec)
        throw std::invalid_argument("positive_roots: braiding matrix not recognized by the catalog");
    return assemble_root_system(q, catalog_roots(*spec), RootBackend::catalog);
}

RootSystemData positive_roots(const FamilySpec& spec) {
    return assemble_root_system(family_matrix(spec), catalog_roots(spec), RootBackend::catalog);
}

std::int64_t f_height(std::int64_t N_delta, std::int64_t n) {
    if (n < 0) throw std::invalid_argument("f_height: negative argument");
    return N_delta * (n / 2) + n % 2;
}

std::int64_t f_height(const RootSystemData& rs, int root_index, std::int64_t n) {
    return f_height(rs.orders[root_index], n);
}

std::int64_t g_height(std::int64_t N_delta, std::int64_t n) {
    if (n < 1) throw std::invalid_argument("g_height: argument must be positive");
    return n % 2 == 1 ? 1 : N_delta - 1;
}

std::int64_t g_height(const RootSystemData& rs, int root_index, std::int64_t n) {
    return g_height(rs.orders[root_index], n);
}

ConvexityReport check_convexity(const RootSystemData& rs) {
    std::map<Root, int> pos;
    for (int i = 0; i < rs.size(); ++i) pos[rs.roots[i]] = i;
    for (int i = 0; i < rs.size(); ++i)
        for (int j = i + 1; j < rs.size(); ++j) {
            auto it = pos.find(rs.roots[i] + rs.roots[j]);
            if (it == pos.end()) continue;
            if (!(i < it->second && it->second < j)) return {false, i, j};
        }
    return {};
}

}  // namespace nq
