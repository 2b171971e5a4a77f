#include <nq/combinat.hpp>

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace nq {

namespace {

Root scaled(const Root& a, std::int64_t k) {
    Root r = a;
    for (auto& c : r.coords) c = int(k * c);
    return r;
}

std::optional<Root> root_diff(const Root& a, const Root& b) {
    if (a.theta() != b.theta()) return std::nullopt;
    Root r = a;
    bool nonzero = false;
    for (int c = 0; c < r.theta(); ++c) {
        r.coords[c] -= b.coords[c];
        if (r.coords[c] < 0) return std::nullopt;
        if (r.coords[c] > 0) nonzero = true;
    }
    if (!nonzero) return std::nullopt;
    return r;
}

// p >= 1 with s = p gamma, when it exists.
std::optional<std::int64_t> positive_multiple(const Root& s, const Root& gamma) {
    std::int64_t p = 0;
    for (int c = 0; c < gamma.theta(); ++c) {
        if (gamma.coords[c] == 0) {
            if (s.coords[c] != 0) return std::nullopt;
            continue;
        }
        if (s.coords[c] % gamma.coords[c] != 0) return std::nullopt;
        std::int64_t pc = s.coords[c] / gamma.coords[c];
        if (p == 0)
            p = pc;
        else if (p != pc)
            return std::nullopt;
    }
    if (p < 1) return std::nullopt;
    return p;
}

bool parallel(const Root& a, const Root& b) {
    for (int c = 0; c < a.theta(); ++c)
        for (int d = c + 1; d < a.theta(); ++d)
            if (std::int64_t(a.coords[c]) * b.coords[d] != std::int64_t(a.coords[d]) * b.coords[c])
                return false;
    return true;
}

RootOfUnity qt(const BraidingMatrix& q, const Root& a, const Root& b) {
    return q_bicharacter(q, a, b) * q_bicharacter(q, b, a);
}

RootOfUnity neg(RootOfUnity a) { return a * RootOfUnity(1, 2); }

struct FormContext {
    const ConstraintProblem& p;
    int idx_gamma;
    std::int64_t N;
    const std::vector<int>& mults;
    std::vector<int> below, above;  // support indices on each side of gamma
    int n_gamma = 0;

    const RootSystemData& rs() const { return p.rs; }
    const Root& root(int i) const { return p.rs.roots[i]; }
};

FormContext make_context(const ConstraintProblem& p, const std::vector<int>& mults) {
    auto idx = p.rs.index_of(p.gamma);
    if (!idx) throw std::invalid_argument("classify_solution: gamma is not a positive root");
    FormContext c{p, *idx, p.rs.orders[*idx], mults, {}, {}, 0};
    for (int i = 0; i < p.rs.size(); ++i) {
        if (mults[i] == 0) continue;
        if (i < c.idx_gamma)
            c.below.push_back(i);
        else if (i > c.idx_gamma)
            c.above.push_back(i);
        else
            c.n_gamma = mults[i];
    }
    return c;
}

bool unit_mults(const FormContext& c, const std::vector<int>& idxs) {
    return std::all_of(idxs.begin(), idxs.end(), [&](int i) { return c.mults[i] == 1; });
}

std::optional<int> index_between(const FormContext& c, const Root& r, int lo, int hi) {
    auto idx = c.rs().index_of(r);
    if (!idx || *idx <= lo || *idx >= hi) return std::nullopt;
    return idx;
}

std::optional<WitnessList> match_A(const FormContext& c) {
    if (c.below.size() != 1 || c.above.size() != 1) return std::nullopt;
    if (!unit_mults(c, c.below) || !unit_mults(c, c.above)) return std::nullopt;
    if (c.n_gamma != c.p.L - 1) return std::nullopt;
    const Root &a = c.root(c.below[0]), &b = c.root(c.above[0]);
    if (!(a + b == c.p.gamma)) return std::nullopt;
    return WitnessList{{"alpha", a}, {"gamma", c.p.gamma}, {"beta", b}};
}

std::optional<WitnessList> match_pair(const FormContext& c) {
    if (c.below.size() != 1 || c.above.size() != 1) return std::nullopt;
    if (!unit_mults(c, c.below) || !unit_mults(c, c.above)) return std::nullopt;
    if (c.n_gamma != c.p.hom_degree - 2) return std::nullopt;
    const Root &a = c.root(c.below[0]), &b = c.root(c.above[0]);
    if (!(a + b == scaled(c.p.gamma, c.N - 1))) return std::nullopt;
    return WitnessList{{"alpha", a}, {"gamma", c.p.gamma}, {"beta", b}};
}

std::optional<WitnessList> match_B(const FormContext& c) {
    if (c.below.size() != 1 || c.above.size() != 2) return std::nullopt;
    if (!unit_mults(c, c.below) || !unit_mults(c, c.above)) return std::nullopt;
    if (c.n_gamma != c.p.L - 2) return std::nullopt;
    int ia = c.below[0], ib = c.above[0], id = c.above[1];
    const Root &a = c.root(ia), &b = c.root(ib), &d = c.root(id);
    auto eta = root_diff(c.p.gamma, d);
    if (!eta || !index_between(c, *eta, ia, c.idx_gamma)) return std::nullopt;
    if (!(c.p.gamma + *eta == a + b)) return std::nullopt;
    return WitnessList{{"alpha", a}, {"beta", b}, {"delta", d}, {"eta", *eta}, {"gamma", c.p.gamma}};
}

std::optional<WitnessList> match_C(const FormContext& c) {
    if (c.below.size() != 1 || c.above.size() != 2) return std::nullopt;
    int ia = c.below[0], ib = c.above[0], id = c.above[1];
    if (c.mults[ia] != 2 || !unit_mults(c, c.above)) return std::nullopt;
    if (c.n_gamma != c.p.L - 3) return std::nullopt;
    if (c.rs().orders[ia] != 2) return std::nullopt;
    const Root &a = c.root(ia), &b = c.root(ib), &d = c.root(id);
    auto eta = root_diff(c.p.gamma, d);
    if (!eta || !index_between(c, *eta, ia, c.idx_gamma)) return std::nullopt;
    auto tau = root_diff(a + b, c.p.gamma);
    if (!tau || !index_between(c, *tau, c.idx_gamma, ib)) return std::nullopt;
    if (!(a + *tau == c.p.gamma + *eta)) return std::nullopt;
    if (!(*eta + b == scaled(*tau, 2))) return std::nullopt;
    return WitnessList{{"alpha", a}, {"beta", b},   {"delta", d},
                       {"eta", *eta}, {"tau", *tau}, {"gamma", c.p.gamma}};
}

std::optional<WitnessList> match_D(const FormContext& c) {
    if (c.below.size() != 2 || c.above.size() != 1) return std::nullopt;
    if (!unit_mults(c, c.below) || !unit_mults(c, c.above)) return std::nullopt;
    if (c.n_gamma != c.p.L - 2) return std::nullopt;
    int id = c.above[0];
    const Root &a = c.root(c.below[0]), &b = c.root(c.below[1]), &d = c.root(id);
    auto eta = root_diff(c.p.gamma, b);
    if (!eta) return std::nullopt;
    auto ie = index_between(c, *eta, c.idx_gamma, id);
    if (!ie) return std::nullopt;
    auto tau = root_diff(b + d, *eta);
    if (!tau || !index_between(c, *tau, c.idx_gamma, *ie)) return std::nullopt;
    if (!(a + d == c.p.gamma + *eta)) return std::nullopt;
    return WitnessList{{"alpha", a}, {"beta", b},   {"delta", d},
                       {"eta", *eta}, {"tau", *tau}, {"gamma", c.p.gamma}};
}

std::optional<WitnessList> match_E(const FormContext& c) {
    if (c.below.size() != 3 || c.above.size() != 1) return std::nullopt;
    if (!unit_mults(c, c.below) || !unit_mults(c, c.above)) return std::nullopt;
    if (c.n_gamma != c.p.L - 3) return std::nullopt;
    int ih = c.above[0];
    const Root &a = c.root(c.below[0]), &b = c.root(c.below[1]), &d = c.root(c.below[2]),
               &h = c.root(ih);
    auto tau = root_diff(c.p.gamma, b);
    if (!tau) return std::nullopt;
    auto it = index_between(c, *tau, c.idx_gamma, ih);
    if (!it) return std::nullopt;
    auto mu = root_diff(c.p.gamma, a);
    if (!mu || !index_between(c, *mu, *it, ih)) return std::nullopt;
    if (!(h + d == c.p.gamma + *tau + *mu)) return std::nullopt;
    return WitnessList{{"alpha", a}, {"beta", b},   {"delta", d},        {"tau", *tau},
                       {"mu", *mu},  {"eta", h},    {"gamma", c.p.gamma}};
}

std::optional<WitnessList> match_F(const FormContext& c) {
    if (c.below.size() != 1 || c.above.size() != 2) return std::nullopt;
    if (!unit_mults(c, c.below) || !unit_mults(c, c.above)) return std::nullopt;
    if (c.n_gamma != c.p.L - 2) return std::nullopt;
    int ia = c.below[0];
    const Root &a = c.root(ia), &b = c.root(c.above[0]), &d = c.root(c.above[1]);
    auto eta = root_diff(c.p.gamma, b);
    if (!eta || !index_between(c, *eta, ia, c.idx_gamma)) return std::nullopt;
    if (!(c.p.gamma + *eta == a + d)) return std::nullopt;
    return WitnessList{{"alpha", a}, {"beta", b}, {"delta", d}, {"eta", *eta}, {"gamma", c.p.gamma}};
}

std::optional<WitnessList> match_G(const FormContext& c) {
    if (c.below.size() != 2 || c.above.size() != 1) return std::nullopt;
    if (!unit_mults(c, c.below) || !unit_mults(c, c.above)) return std::nullopt;
    if (c.n_gamma != c.p.L - 2) return std::nullopt;
    int id = c.above[0];
    const Root &a = c.root(c.below[0]), &b = c.root(c.below[1]), &d = c.root(id);
    auto eta = root_diff(c.p.gamma, a);
    if (!eta || !index_between(c, *eta, c.idx_gamma, id)) return std::nullopt;
    if (!(c.p.gamma + *eta == b + d)) return std::nullopt;
    return WitnessList{{"alpha", a}, {"beta", b}, {"delta", d}, {"eta", *eta}, {"gamma", c.p.gamma}};
}

std::optional<WitnessList> match_H(const FormContext& c) {
    if (c.below.size() != 2 || c.above.size() != 1) return std::nullopt;
    if (!unit_mults(c, c.below) || !unit_mults(c, c.above)) return std::nullopt;
    if (c.n_gamma != c.p.L - 2) return std::nullopt;
    int ia = c.below[0], ib = c.below[1], id = c.above[0];
    const Root &a = c.root(ia), &b = c.root(ib), &d = c.root(id);
    auto nu = root_diff(c.p.gamma, a);
    if (!nu) return std::nullopt;
    auto in = index_between(c, *nu, c.idx_gamma, id);
    if (!in) return std::nullopt;
    if (!(b + d == *nu + c.p.gamma)) return std::nullopt;
    for (int ih = *in + 1; ih < id; ++ih) {
        const Root& h = c.root(ih);
        auto tau = root_diff(a + d, h);
        if (!tau || !index_between(c, *tau, ia, ib)) continue;
        auto mu = root_diff(b + h, c.p.gamma);
        if (!mu || !index_between(c, *mu, c.idx_gamma, *in)) continue;
        return WitnessList{{"alpha", a},   {"beta", b}, {"delta", d}, {"eta", h},
                           {"tau", *tau},  {"mu", *mu}, {"nu", *nu},  {"gamma", c.p.gamma}};
    }
    return std::nullopt;
}

std::optional<WitnessList> match_I(const FormContext& c) {
    if (c.below.size() != 2 || c.above.size() != 2) return std::nullopt;
    if (!unit_mults(c, c.below) || !unit_mults(c, c.above)) return std::nullopt;
    if (c.n_gamma != c.p.L - 3) return std::nullopt;
    int ib = c.below[1], id = c.above[0];
    const Root &a = c.root(c.below[0]), &b = c.root(ib), &d = c.root(id), &h = c.root(c.above[1]);
    auto mu = root_diff(c.p.gamma, a);
    if (!mu || !index_between(c, *mu, c.idx_gamma, id)) return std::nullopt;
    auto nu = root_diff(b + d, c.p.gamma);
    if (!nu || !index_between(c, *nu, ib, c.idx_gamma)) return std::nullopt;
    if (!(*nu + h == *mu + c.p.gamma)) return std::nullopt;
    return WitnessList{{"alpha", a}, {"beta", b}, {"nu", *nu},        {"mu", *mu},
                       {"delta", d}, {"eta", h},  {"gamma", c.p.gamma}};
}

std::optional<WitnessList> match_J(const FormContext& c) {
    if (c.below.size() != 3 || c.above.size() != 1) return std::nullopt;
    if (!unit_mults(c, c.below) || !unit_mults(c, c.above)) return std::nullopt;
    if (c.n_gamma != c.p.L - 3) return std::nullopt;
    int ih = c.above[0];
    const Root &a = c.root(c.below[0]), &b = c.root(c.below[1]), &d = c.root(c.below[2]),
               &h = c.root(ih);
    auto mu = root_diff(c.p.gamma, a);
    if (!mu) return std::nullopt;
    auto im = index_between(c, *mu, c.idx_gamma, ih);
    if (!im) return std::nullopt;
    auto nu = root_diff(b + h, c.p.gamma);
    if (!nu || !index_between(c, *nu, *im, ih)) return std::nullopt;
    if (!(d + *nu == *mu + c.p.gamma)) return std::nullopt;
    return WitnessList{{"alpha", a}, {"beta", b}, {"delta", d},        {"mu", *mu},
                       {"nu", *nu},  {"eta", h},  {"gamma", c.p.gamma}};
}

const Root& witness_root(const WitnessList& w, const std::string& name) {
    for (const auto& [n, r] : w)
        if (n == name) return r;
    throw std::invalid_argument("witness lacks root '" + name + "'");
}

std::size_t utf8_len(const std::string& s) {
    std::size_t n = 0;
    for (unsigned char b : s)
        if ((b & 0xC0) != 0x80) ++n;
    return n;
}

std::string pad(const std::string& s, std::size_t width) {
    std::string out = s;
    for (std::size_t k = utf8_len(s); k < width; ++k) out += ' ';
    return out;
}

std::string pair_cell(const std::vector<std::pair<Root, Root>>& pairs) {
    std::string out;
    for (const auto& [a, b] : pairs) {
        if (!out.empty()) out += ", ";
        out += to_string(a) + "+" + to_string(b);
    }
    return out.empty() ? "-" : out;
}

}  // namespace

std::string form_name(FormTag t) {
    switch (t) {
        case FormTag::A: return "A";
        case FormTag::B: return "B";
        case FormTag::C: return "C";
        case FormTag::D: return "D";
        case FormTag::E: return "E";
        case FormTag::F: return "F";
        case FormTag::G: return "G";
        case FormTag::H: return "H";
        case FormTag::I: return "I";
        case FormTag::J: return "J";
        case FormTag::PAIR: return "PAIR";
        case FormTag::unclassified: return "unclassified";
    }
    return "unclassified";
}

std::string criterion_name(Criterion c) {
    switch (c) {
        case Criterion::I: return "I";
        case Criterion::II: return "II";
        case Criterion::III: return "III";
        case Criterion::IV: return "IV";
        case Criterion::none: return "none";
    }
    return "none";
}

ConstraintProblem make_problem(const RootSystemData& rs, const Root& gamma, std::int64_t L) {
    auto idx = rs.index_of(gamma);
    if (!idx) throw std::invalid_argument("make_problem: gamma is not a positive root");
    std::int64_t N = rs.orders[*idx];
    if (L < 2 || L % N > 1)
        throw std::invalid_argument("make_problem: L must be a multiple of N_gamma or one more, L >= 2");
    ConstraintProblem p{rs, gamma, L, 0};
    p.hom_degree = 2 * (L / N) + L % N + 1;
    return p;
}

std::vector<ConstraintSolution> solve_constraints(const ConstraintProblem& p) {
    const auto& rs = p.rs;
    const int m = rs.size(), th = rs.theta();
    std::vector<std::int64_t> target(th);
    for (int c = 0; c < th; ++c) target[c] = p.L * p.gamma.coords[c];

    // covered[i][c]: some root at index >= i has coordinate c.
    std::vector<std::vector<char>> covered(m + 1, std::vector<char>(th, 0));
    for (int i = m - 1; i >= 0; --i)
        for (int c = 0; c < th; ++c)
            covered[i][c] = covered[i + 1][c] || rs.roots[i].coords[c] > 0;

    std::vector<int> mults(m, 0);
    std::vector<ConstraintSolution> out;

    auto rec = [&](auto&& self, int i, const std::vector<std::int64_t>& residual,
                   std::int64_t left) -> void {
        if (i == m) {
            if (left != 0) return;
            if (!std::all_of(residual.begin(), residual.end(), [](std::int64_t v) { return v == 0; }))
                return;
            ConstraintSolution s;
            s.multiplicities = mults;
            out.push_back(std::move(s));
            return;
        }
        for (int c = 0; c < th; ++c)
            if (residual[c] > 0 && !covered[i][c]) return;
        const auto& d = rs.roots[i].coords;
        std::int64_t cap = std::min<std::int64_t>(left, p.L + 1);
        for (std::int64_t n = 0; n <= cap; ++n) {
            std::int64_t w = f_height(rs.orders[i], n);
            std::vector<std::int64_t> next = residual;
            bool fits = true;
            for (int c = 0; c < th && fits; ++c) {
                next[c] -= w * d[c];
                if (next[c] < 0) fits = false;
            }
            if (!fits) break;
            mults[i] = int(n);
            self(self, i + 1, next, left - n);
        }
        mults[i] = 0;
    };
    rec(rec, 0, target, p.hom_degree);

    for (const auto& s : out) {
        std::int64_t total = 0;
        Root deg(std::vector<int>(th, 0));
        for (int i = 0; i < m; ++i) {
            total += s.multiplicities[i];
            deg += scaled(rs.roots[i], f_height(rs.orders[i], s.multiplicities[i]));
        }
        if (total != p.hom_degree || !(deg == scaled(p.gamma, p.L)))
            throw std::logic_error("solve_constraints: solution fails recheck");
    }
    return out;
}

ConstraintSolution classify_solution(const ConstraintSolution& sol, const ConstraintProblem& ctx,
                                     const RelationShapeHook& relations) {
    ConstraintSolution tagged = sol;
    tagged.form_tag = FormTag::unclassified;
    tagged.witness_roots.clear();
    tagged.matching_forms.clear();
    tagged.matching_witnesses.clear();
    tagged.pattern_only = !relations;

    FormContext c = make_context(ctx, sol.multiplicities);

    using Matcher = std::optional<WitnessList> (*)(const FormContext&);
    std::vector<std::pair<FormTag, Matcher>> candidates;
    if (c.N == 2)
        candidates = {{FormTag::A, match_A}, {FormTag::B, match_B}, {FormTag::C, match_C},
                      {FormTag::D, match_D}, {FormTag::E, match_E}, {FormTag::F, match_F},
                      {FormTag::G, match_G}, {FormTag::H, match_H}, {FormTag::I, match_I},
                      {FormTag::J, match_J}};
    else
        candidates = {{FormTag::PAIR, match_pair}};

    for (const auto& [tag, matcher] : candidates) {
        auto w = matcher(c);
        if (!w) continue;
        if (relations && !relations(form_name(tag), *w)) continue;
        tagged.matching_forms.push_back(tag);
        tagged.matching_witnesses.push_back(*w);
    }
    if (!tagged.matching_forms.empty()) {
        tagged.form_tag = tagged.matching_forms.front();
        tagged.witness_roots = tagged.matching_witnesses.front();
    }
    return tagged;
}

std::pair<Root, Root> witness_pair(const ConstraintSolution& sol) {
    return {witness_root(sol.witness_roots, "alpha"), witness_root(sol.witness_roots, "beta")};
}

ScalarCheck scalar_condition(FormTag form, const WitnessList& witness, std::int64_t L,
                             const BraidingMatrix& q) {
    const Root& g = witness_root(witness, "gamma");
    auto w = [&](const char* name) -> const Root& { return witness_root(witness, name); };

    ScalarCheck check;
    switch (form) {
        case FormTag::A: {
            RootOfUnity r = neg(q_bicharacter(q, w("alpha"), w("alpha")) *
                                inverse(q_bicharacter(q, w("beta"), w("beta"))));
            check.condition_id = "A:(L)_{-q_aa/q_bb}";
            check.value = q_integer(L, r);
            break;
        }
        case FormTag::B:
        case FormTag::D: {
            check.condition_id = form_name(form) + ":chat(a,b;g)";
            check.value = coef_hat(qt(q, w("alpha"), g), qt(q, w("beta"), g), L);
            break;
        }
        case FormTag::C: {
            check.condition_id = "C:(L)_{qt_ga qt_gb}+sum chat(a,t;g)";
            check.value = q_integer(L, qt(q, g, w("alpha")) * qt(q, g, w("beta")));
            for (std::int64_t j = 1; j < L; ++j)
                check.value += coef_hat(qt(q, w("alpha"), g), qt(q, w("tau"), g), j);
            break;
        }
        case FormTag::E: {
            check.condition_id = "E:chatchat(a,b,d;g)";
            check.value =
                coef_hat2(qt(q, w("delta"), g), qt(q, w("alpha"), g), qt(q, w("beta"), g), L);
            break;
        }
        case FormTag::F: {
            check.condition_id = "F:chat(a,d;g)";
            check.value = coef_hat(qt(q, w("alpha"), g), qt(q, w("delta"), g), L);
            break;
        }
        case FormTag::G:
        case FormTag::H: {
            check.condition_id = form_name(form) + ":chat(-d,a;g)";
            check.value = coef_hat(inverse(qt(q, w("delta"), g)), qt(q, w("alpha"), g), L);
            break;
        }
        case FormTag::I: {
            RootOfUnity ra = qt(q, w("alpha"), g);
            check.condition_id = "I:chatchat(a+b,d,a;g)";
            check.value = coef_hat2(ra, ra * qt(q, w("beta"), g), qt(q, w("delta"), g), L);
            break;
        }
        case FormTag::J: {
            check.condition_id = "J:chatchat(b,-n,a;g)";
            check.value = coef_hat2(qt(q, w("alpha"), g), qt(q, w("beta"), g),
                                    inverse(qt(q, w("nu"), g)), L);
            break;
        }
        case FormTag::PAIR: {
            RootOfUnity ratio =
                q_bicharacter(q, w("alpha"), g) * inverse(q_bicharacter(q, g, w("beta")));
            std::int64_t N = rou_order(q_bicharacter(q, g, g));
            check.condition_id = "PAIR:(q_ag/q_gb-1)(l)_{(q_ag/q_gb)^N}";
            check.value = (CycloNumber::from(ratio) - CycloNumber::from(RootOfUnity())) *
                          q_integer(L, pow(ratio, N));
            break;
        }
        case FormTag::unclassified:
            throw std::invalid_argument("scalar_condition: unclassified solution has no condition");
    }
    check.is_zero = check.value.is_zero();
    return check;
}

std::pair<int, int> compute_PQ(const RootSystemData& rs, const Root& gamma) {
    if (!rs.index_of(gamma)) throw std::invalid_argument("compute_PQ: gamma is not a positive root");
    const int m = rs.size();
    int P = 0, Q = 0;

    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            for (int k = j + 1; k < m; ++k)
                if (auto p = positive_multiple(rs.roots[i] + rs.roots[j] + rs.roots[k], gamma))
                    P = std::max<int>(P, int(*p));

    for (int i = 0; i < m; ++i) {
        const Root& a = rs.roots[i];
        bool a_parallel = parallel(a, gamma);
        for (int j = 0; j < m; ++j) {
            if (j == i) continue;
            const Root& b = rs.roots[j];
            if (a_parallel) {
                if (parallel(b, gamma))
                    throw std::runtime_error("compute_PQ: distinct roots parallel to gamma");
                continue;
            }
            int c1 = -1, c2 = -1;
            for (int c = 0; c < gamma.theta() && c2 < 0; ++c)
                for (int d = c + 1; d < gamma.theta() && c2 < 0; ++d)
                    if (std::int64_t(a.coords[c]) * gamma.coords[d] !=
                        std::int64_t(a.coords[d]) * gamma.coords[c]) {
                        c1 = c;
                        c2 = d;
                    }
            std::int64_t a1 = a.coords[c1], a2 = a.coords[c2];
            std::int64_t g1 = gamma.coords[c1], g2 = gamma.coords[c2];
            std::int64_t b1 = b.coords[c1], b2 = b.coords[c2];
            std::int64_t det = g1 * a2 - a1 * g2;
            std::int64_t tn = b1 * g2 - g1 * b2, qn = b1 * a2 - a1 * b2;
            if (tn % det != 0 || qn % det != 0) continue;
            std::int64_t t = tn / det, qq = qn / det;
            if (t < 1 || qq < 1) continue;
            bool valid = true;
            for (int c = 0; c < gamma.theta() && valid; ++c)
                valid = t * a.coords[c] + b.coords[c] == qq * gamma.coords[c];
            if (valid) Q = std::max<int>(Q, int(qq));
        }
    }
    return {P, Q};
}

std::int64_t candidate_L(const RootSystemData& rs, const Root& gamma, const BraidingMatrix& q) {
    auto idx = rs.index_of(gamma);
    if (!idx) throw std::invalid_argument("candidate_L: gamma is not a positive root");
    std::int64_t N = rs.orders[*idx];
    if (gamma.height() == 1) return N;

    const int m = rs.size();
    if (N == 2) {
        std::int64_t L = 2;
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j) {
                if (!(rs.roots[i] + rs.roots[j] == gamma)) continue;
                RootOfUnity r = neg(q_bicharacter(q, rs.roots[i], rs.roots[i]) *
                                    inverse(q_bicharacter(q, rs.roots[j], rs.roots[j])));
                L = std::lcm(L, rou_order(r));
            }
        return L;
    }
    Root top = scaled(gamma, N - 1);
    std::int64_t l = 1;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            if (!(rs.roots[i] + rs.roots[j] == top)) continue;
            RootOfUnity ratio = q_bicharacter(q, rs.roots[i], gamma) *
                                inverse(q_bicharacter(q, gamma, rs.roots[j]));
            l = std::lcm(l, rou_order(pow(ratio, N)));
        }
    return l;
}

std::vector<CriteriaReport> run_criteria(const RootSystemData& rs, const BraidingMatrix& q,
                                         const RelationShapeHook& relations) {
    const int m = rs.size();
    std::vector<CriteriaReport> out;
    out.reserve(m);

    for (int ig = 0; ig < m; ++ig) {
        const Root& gamma = rs.roots[ig];
        CriteriaReport rep;
        rep.gamma = gamma;
        rep.N_gamma = rs.orders[ig];
        auto [P, Q] = compute_PQ(rs, gamma);
        rep.P_gamma = P;
        rep.Q_gamma = Q;
        rep.relations_checked = bool(relations);

        Root top = scaled(gamma, rep.N_gamma - 1);
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j) {
                if (rs.roots[i] + rs.roots[j] == gamma)
                    rep.sum_pairs.emplace_back(rs.roots[i], rs.roots[j]);
                if (rs.roots[i] + rs.roots[j] == top)
                    rep.top_pairs.emplace_back(rs.roots[i], rs.roots[j]);
            }

        if (rep.N_gamma > P && rep.N_gamma > Q) {
            rep.criterion = Criterion::I;
            rep.exponent = rep.N_gamma;
            rep.degree = 2;
            out.push_back(std::move(rep));
            continue;
        }

        if (rep.N_gamma == 2) {
            Root twice = scaled(gamma, 2);
            bool ok = true;
            // no three distinct roots away from gamma summing to 2 gamma
            for (int i = 0; i < m && ok; ++i)
                for (int j = i + 1; j < m && ok; ++j)
                    for (int k = j + 1; k < m && ok; ++k) {
                        if (i == ig || j == ig || k == ig) continue;
                        if (rs.roots[i] + rs.roots[j] + rs.roots[k] == twice) ok = false;
                    }
            // no N_a a + b = 2 gamma over distinct roots
            for (int i = 0; i < m && ok; ++i)
                for (int j = 0; j < m && ok; ++j) {
                    if (i == j) continue;
                    if (scaled(rs.roots[i], rs.orders[i]) + rs.roots[j] == twice) ok = false;
                }
            for (const auto& [b, d] : rep.sum_pairs) {
                if (!ok) break;
                if (!(q_bicharacter(q, b, b) == q_bicharacter(q, d, d))) ok = false;
                if (ok && relations &&
                    !relations("q-commute", {{"beta", b}, {"gamma", gamma}, {"delta", d}}))
                    ok = false;
            }
            if (ok) {
                rep.criterion = Criterion::II;
                rep.L_gamma = 2;
                rep.exponent = 2;
                rep.degree = 2;
                out.push_back(std::move(rep));
                continue;
            }

            std::int64_t L = candidate_L(rs, gamma, q);
            rep.L_gamma = L;
            rep.exponent = L;
            rep.degree = L;
            auto problem = make_problem(rs, gamma, L);
            bool certified = true;
            for (const auto& sol : solve_constraints(problem)) {
                auto tagged = classify_solution(sol, problem, relations);
                bool sol_ok = false;
                for (std::size_t k = 0; k < tagged.matching_forms.size(); ++k) {
                    auto check = scalar_condition(tagged.matching_forms[k],
                                                  tagged.matching_witnesses[k], L, q);
                    if (check.is_zero) sol_ok = true;
                    rep.scalar_checks.push_back(std::move(check));
                }
                certified = certified && sol_ok;
                rep.solutions.push_back(std::move(tagged));
            }
            rep.criterion = certified ? Criterion::III : Criterion::none;
            out.push_back(std::move(rep));
            continue;
        }

        std::int64_t l = candidate_L(rs, gamma, q);
        rep.L_gamma = l;
        rep.exponent = l * rep.N_gamma;
        rep.degree = 2 * l;
        bool certified = true;
        for (const auto& [a, b] : rep.top_pairs) {
            if (relations && !relations("PAIR", {{"alpha", a}, {"gamma", gamma}, {"beta", b}}))
                certified = false;
            auto check =
                scalar_condition(FormTag::PAIR, {{"alpha", a}, {"gamma", gamma}, {"beta", b}}, l, q);
            if (!check.is_zero) certified = false;
            rep.scalar_checks.push_back(std::move(check));
        }
        auto problem = make_problem(rs, gamma, l * rep.N_gamma);
        for (const auto& sol : solve_constraints(problem)) {
            auto tagged = classify_solution(sol, problem, relations);
            if (tagged.form_tag != FormTag::PAIR) certified = false;
            rep.solutions.push_back(std::move(tagged));
        }
        rep.criterion = certified ? Criterion::IV : Criterion::none;
        out.push_back(std::move(rep));
    }
    return out;
}

std::string format_table(const std::vector<CriteriaReport>& reports, TableStyle style) {
    std::vector<std::vector<std::string>> rows;
    rows.push_back({"gamma", "N", "P", "Q", "pairs", "L", "criterion"});
    for (const auto& r : reports) {
        std::string L_cell;
        if (style == TableStyle::exponents)
            L_cell = std::to_string(r.exponent);
        else if (r.criterion == Criterion::I || r.criterion == Criterion::II)
            L_cell = "2";
        else if (r.L_gamma)
            L_cell = std::to_string(*r.L_gamma);
        else
            L_cell = "-";
        rows.push_back({to_string(r.gamma), std::to_string(r.N_gamma), std::to_string(r.P_gamma),
                        std::to_string(r.Q_gamma),
                        pair_cell(style == TableStyle::exponents ? r.sum_pairs : r.top_pairs),
                        L_cell, criterion_name(r.criterion)});
    }
    std::vector<std::size_t> widths(rows[0].size(), 0);
    for (const auto& row : rows)
        for (std::size_t c = 0; c < row.size(); ++c)
            widths[c] = std::max(widths[c], utf8_len(row[c]));
    std::ostringstream os;
    for (const auto& row : rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c) os << "  ";
            os << pad(row[c], widths[c]);
        }
        os << '\n';
    }
    return os.str();
}

}  // namespace nq
