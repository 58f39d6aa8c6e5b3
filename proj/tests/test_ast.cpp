#include <random>

#include <gtest/gtest.h>

#include "begriff/ast.hpp"
#include "support/generators.hpp"

using namespace begriff;

namespace {

Formula F(const char* v) { return pred("F", {Term::var(v)}); }
Formula R(const char* a, const char* b) { return pred("R", {Term::var(a), Term::var(b)}); }

}  // namespace

TEST(FreeVariables, PropositionHasNone) { EXPECT_TRUE(free_variables(prop("A")).empty()); }

TEST(FreeVariables, BoundVariableDisappears) { EXPECT_TRUE(free_variables(forall({"x"}, F("x"))).empty()); }

TEST(FreeVariables, OnlyUnboundRemain) {
    EXPECT_EQ(free_variables(forall({"x"}, R("x", "y"))), (std::set<std::string>{"y"}));
}

TEST(FreeVariables, GuardCountsAndIsBound) {
    // forall x [G(x, z)] . F(w): the guard contributes z, the block binds x.
    Formula g = pred("G", {Term::var("x"), Term::var("z")});
    EXPECT_EQ(free_variables(forall({"x"}, F("w"), g)), (std::set<std::string>{"w", "z"}));
}

TEST(FreeVariables, ConstantsAndApplications) {
    Formula f = compare(Term::apply("abs", {Term::apply("sub", {Term::var("x"), Term::var("x0")})}),
                        ComparisonOp::LT, Term::var("delta"));
    EXPECT_EQ(free_variables(f), (std::set<std::string>{"delta", "x", "x0"}));
    EXPECT_TRUE(free_variables(compare(Term::var("n"), ComparisonOp::IN, Term::constant("Nat"))).count("Nat") == 0);
}

TEST(StructuralEquality, Identity) {
    EXPECT_TRUE(structurally_equal(disjunction(prop("A"), prop("B")), disjunction(prop("A"), prop("B"))));
}

TEST(StructuralEquality, OrIsNotNormalized) {
    EXPECT_FALSE(structurally_equal(disjunction(prop("A"), prop("B")), disjunction(prop("B"), prop("A"))));
}

TEST(StructuralEquality, DoubleNegationIsDistinct) {
    EXPECT_FALSE(structurally_equal(negation(negation(prop("A"))), prop("A")));
}

TEST(StructuralEquality, NoAlphaEquivalence) { EXPECT_FALSE(structurally_equal(forall({"x"}, F("x")), forall({"y"}, F("y")))); }

TEST(StructuralEquality, GuardsAndVariableOrderMatter) {
    EXPECT_FALSE(structurally_equal(forall({"x", "y"}, R("x", "y")), forall({"y", "x"}, R("x", "y"))));
    EXPECT_FALSE(structurally_equal(forall({"x"}, F("x"), prop("A")), forall({"x"}, F("x"))));
    EXPECT_FALSE(structurally_equal(forall({"x"}, F("x")), exists({"x"}, F("x"))));
}

TEST(StructuralEquality, JudgmentFlag) {
    EXPECT_FALSE(structurally_equal(Judgment{true, prop("A")}, Judgment{false, prop("A")}));
    EXPECT_TRUE(structurally_equal(Judgment{true, prop("A")}, Judgment{true, prop("A")}));
}

TEST(Constructors, DuplicateBlockVariablesRejected) { EXPECT_THROW(forall({"x", "x"}, F("x")), Error); }

TEST(Constructors, EmptyBlockRejected) { EXPECT_THROW(forall({}, F("x")), Error); }

TEST(Constructors, WithChildrenChecksArity) {
    EXPECT_THROW(with_children(negation(prop("A")), {prop("A"), prop("B")}), Error);
}

TEST(NodeCounts, CountsEveryKind) {
    Formula f = conjunction(negation(prop("A")), exists({"x"}, disjunction(F("x"), conditional(prop("B"), prop("C")))));
    NodeCounts n = count_nodes(f);
    EXPECT_EQ(n.atoms, 4u);
    EXPECT_EQ(n.nots, 1u);
    EXPECT_EQ(n.conds, 1u);
    EXPECT_EQ(n.ands, 1u);
    EXPECT_EQ(n.ors, 1u);
    EXPECT_EQ(n.exists, 1u);
    EXPECT_EQ(n.foralls, 0u);
}

TEST(AstProperty, RebuildFromChildrenIsIdentity) {
    std::mt19937 rng(101);
    propgen::FormulaGen gen(rng, {});
    for (int i = 0; i < 500; ++i) {
        Formula f = gen.formula();
        std::vector<Formula> stack{f};
        while (!stack.empty()) {
            Formula g = stack.back();
            stack.pop_back();
            auto kids = children(g);
            ASSERT_TRUE(structurally_equal(with_children(g, kids), g));
            stack.insert(stack.end(), kids.begin(), kids.end());
        }
    }
}

TEST(AstProperty, FreeVariablesOfBlock) {
    std::mt19937 rng(102);
    propgen::GenOptions opts;
    opts.max_depth = 5;
    propgen::FormulaGen gen(rng, opts);
    int checked = 0;
    for (int i = 0; i < 2000 && checked < 300; ++i) {
        Formula f = gen.formula();
        const auto* q = as<Quant>(f);
        if (!q) continue;
        ++checked;
        std::set<std::string> expect = free_variables(q->body);
        if (q->block.guard) expect.merge(free_variables(*q->block.guard));
        for (const auto& v : q->block.vars) expect.erase(v);
        ASSERT_EQ(free_variables(f), expect);
    }
    EXPECT_GE(checked, 100);
}
