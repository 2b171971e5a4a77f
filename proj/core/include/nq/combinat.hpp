#pragma once

#include <nq/rootdata.hpp>
#include <nq/scalars.hpp>

#include <functional>
#include <optional>
#include <utility>

namespace nq {

// Solution shapes of the degree-constraint system, in the order the
// certification statements list them; PAIR is the single shape available
// when N_gamma > 2.
enum class FormTag { A, B, C, D, E, F, G, H, I, J, PAIR, unclassified };

std::string form_name(FormTag t);

// Named roots realizing a form, e.g. {"alpha", ...}, {"gamma", ...};
// auxiliary roots (eta, tau, mu, nu) are included when the form uses them.
using WitnessList = std::vector<std::pair<std::string, Root>>;

// Callback into the algebra layer: verifies that the straightening
// relations among the witness roots have the shape the tagged hypothesis
// requires. Ids are the form names plus "q-commute" for the plain
// q-commutation pair check.
using RelationShapeHook =
    std::function<bool(const std::string& hypothesis_id, const WitnessList& witness)>;

struct ConstraintProblem {
    RootSystemData rs;
    Root gamma;
    std::int64_t L = 0;
    std::int64_t hom_degree = 0;
};

// Valid L are N_gamma multiples or one more than a multiple (the exponents
// for which x_gamma^L is a chain); hom_degree is one above the chain degree
// of x_gamma^L, so L+1 when N_gamma = 2 and 2l+1 when L = l N_gamma.
ConstraintProblem make_problem(const RootSystemData& rs, const Root& gamma, std::int64_t L);

struct ConstraintSolution {
    std::vector<int> multiplicities;  // n_delta, aligned with rs.roots
    FormTag form_tag = FormTag::unclassified;
    WitnessList witness_roots;
    std::vector<FormTag> matching_forms;          // every form that fits, in form order
    std::vector<WitnessList> matching_witnesses;  // aligned with matching_forms
    bool pattern_only = true;  // true when no relation shapes were verified
};

// All n with sum f_delta(n_delta) delta = L gamma and sum n_delta =
// hom_degree, in lexicographic order along the convex order.
std::vector<ConstraintSolution> solve_constraints(const ConstraintProblem& p);

// Tags the solution by matching root patterns (and relation shapes when a
// hook is supplied); unclassified is a valid outcome.
ConstraintSolution classify_solution(const ConstraintSolution& sol, const ConstraintProblem& ctx,
                                     const RelationShapeHook& relations = nullptr);

// The (alpha, beta) witnesses of a tagged solution.
std::pair<Root, Root> witness_pair(const ConstraintSolution& sol);

struct ScalarCheck {
    std::string condition_id;
    CycloNumber value;
    bool is_zero = false;
};

// The vanishing condition attached to a tagged solution. The length
// argument is the certifying statement's own parameter: L for the N = 2
// forms, l for PAIR.
ScalarCheck scalar_condition(FormTag form, const WitnessList& witness, std::int64_t L,
                             const BraidingMatrix& q);

// P: largest p with delta_1 + delta_2 + delta_3 = p gamma over distinct
// roots; Q: largest q with t delta_1 + delta_2 = q gamma over distinct
// roots and any t >= 1. Both 0 when no relation exists.
std::pair<int, int> compute_PQ(const RootSystemData& rs, const Root& gamma);

// The lcm recipes for the exponent candidate: N_gamma for simple roots;
// lcm({2} u {ord(-q_aa/q_bb) : gamma = a+b}) when N_gamma = 2; the
// multiplier l = lcm({1} u {ord((q_ag/q_gb)^N) : (N-1) gamma = a+b}) when
// N_gamma > 2 (the certified exponent is then l N_gamma).
std::int64_t candidate_L(const RootSystemData& rs, const Root& gamma, const BraidingMatrix& q);

// I: N_gamma exceeds P and Q. II: N_gamma = 2 with q-commuting
// decompositions and no interfering sums. III: N_gamma = 2, all solutions
// at L match a form with vanishing scalar. IV: N_gamma > 2 likewise via
// PAIR. NONE: certification failed; the report keeps the evidence.
enum class Criterion { I, II, III, IV, none };

std::string criterion_name(Criterion c);

struct CriteriaReport {
    Root gamma;
    std::int64_t N_gamma = 0;
    int P_gamma = 0;
    int Q_gamma = 0;
    Criterion criterion = Criterion::none;
    std::optional<std::int64_t> L_gamma;  // 2 under II, L under III, l under IV
    std::int64_t exponent = 0;            // power of x_gamma certified (or attempted)
    std::int64_t degree = 0;              // cohomological degree of that cochain
    std::vector<std::pair<Root, Root>> sum_pairs;  // gamma = a + b, a < b
    std::vector<std::pair<Root, Root>> top_pairs;  // (N_gamma - 1) gamma = a + b
    std::vector<ScalarCheck> scalar_checks;
    std::vector<ConstraintSolution> solutions;
    bool relations_checked = false;
};

// One report per positive root, applying criteria I, II, III/IV in order.
// Relation-shape hypotheses are verified only through the hook; without it
// criteria II/III/IV are certified on root patterns and scalars alone.
std::vector<CriteriaReport> run_criteria(const RootSystemData& rs, const BraidingMatrix& q,
                                         const RelationShapeHook& relations = nullptr);

// exponents: pair column lists gamma = a + b and L is the certified
// exponent. parameters: pair column lists (N_gamma - 1) gamma = a + b and
// L is the certifying statement's parameter (2 for the degree-2 criteria,
// L under III, l under IV).
enum class TableStyle { exponents, parameters };

std::string format_table(const std::vector<CriteriaReport>& reports,
                         TableStyle style = TableStyle::exponents);

}  // namespace nq
