#include <random>

#include <gtest/gtest.h>

#include "begriff/kernel.hpp"
#include "begriff/modern.hpp"
#include "begriff/semantics.hpp"
#include "support/generators.hpp"

using namespace begriff;
using propgen::for_all_models;

namespace {

Formula A() { return prop("A"); }
Formula B() { return prop("B"); }
Formula C() { return prop("C"); }
Term v(const char* n) { return Term::var(n); }
Term k(const char* n) { return Term::constant(n); }
Formula F(const char* x) { return pred("F", {v(x)}); }
Formula R(const char* x, const char* y) { return pred("R", {v(x), v(y)}); }
Formula parse(const char* s) { return parse_modern(s).body; }

const char* kSecond =
    "forall n [n in Nat] . exists m, k [m >= n] . forall mu, l, eps [mu >= m & eps > 0] . exists L, S [S > 0] . "
    "forall x [x in X] . v(m,l,x) <= max(mul(eps,v(n,k,x)),mul(S,v(mu,L,x)))";

void expect_same_table(const Formula& a, const Formula& b) {
    TruthTable ta = truth_table(a), tb = truth_table(b);
    ASSERT_EQ(ta.variables, tb.variables);
    ASSERT_EQ(ta.rows.size(), tb.rows.size());
    for (std::size_t r = 0; r < ta.rows.size(); ++r) {
        ASSERT_EQ(ta.rows[r].assignment, tb.rows[r].assignment);
        ASSERT_EQ(ta.rows[r].output, tb.rows[r].output) << print_modern(a) << " vs " << print_modern(b);
    }
}

bool only_atomic_negations(const Formula& f) {
    if (const auto* n = as<Not>(f)) {
        const auto* a = as<AtomF>(n->body);
        return a && !std::holds_alternative<Compare>(a->atom);
    }
    if (const auto* q = as<Quant>(f)) return only_atomic_negations(q->body);  // guards are left as they are
    for (const auto& c : children(f))
        if (!only_atomic_negations(c)) return false;
    return true;
}

bool has_guarded_exists(const Formula& f) {
    if (const auto* q = as<Quant>(f); q && q->block.kind == QuantKind::EXISTS && q->block.guard) return true;
    for (const auto& c : children(f))
        if (has_guarded_exists(c)) return true;
    return false;
}

}  // namespace

TEST(Desugar, DisjunctionAndConjunctionForms) {
    for (auto mode : {EncodingMode::FAITHFUL, EncodingMode::CLASSICAL}) {
        EXPECT_EQ(desugar(disjunction(A(), B()), mode), conditional(negation(B()), A()));
        EXPECT_EQ(desugar(conjunction(A(), B()), mode), negation(conditional(B(), negation(A()))));
        EXPECT_EQ(desugar(exists({"x"}, F("x")), mode), negation(forall({"x"}, negation(F("x")))));
    }
}

TEST(Desugar, ComposedRules) {
    // A | (B & C): the inner & becomes ~(C -> ~B), then | wraps it in a negated condition.
    Formula expect = conditional(negation(negation(conditional(C(), negation(B())))), A());
    EXPECT_EQ(desugar(disjunction(A(), conjunction(B(), C())), EncodingMode::CLASSICAL), expect);
}

TEST(Desugar, GuardedExistentialDependsOnMode) {
    Formula f = parse("exists d [d > 0] . P(d)");
    Formula guard = compare(v("d"), ComparisonOp::GT, k("0"));
    Formula body = pred("P", {v("d")});
    EXPECT_EQ(desugar(f, EncodingMode::FAITHFUL), negation(forall({"d"}, negation(conditional(guard, body)))));
    EXPECT_EQ(desugar(f, EncodingMode::CLASSICAL),
              negation(forall({"d"}, negation(negation(conditional(body, negation(guard)))))));
}

TEST(Desugar, GuardedUniversalBecomesCondition) {
    Judgment j = desugar(parse_modern("|- forall x [F(x)] . exists y . R(x,y)"), EncodingMode::FAITHFUL);
    EXPECT_TRUE(j.asserted);
    EXPECT_EQ(j.body, forall({"x"}, conditional(F("x"), negation(forall({"y"}, negation(R("x", "y")))))));
}

TEST(Desugar, ConjunctiveGuardStacksUnderFaithful) {
    Formula f = parse("forall x [F(x) & G(x)] . P(x)");
    Formula g = pred("G", {v("x")}), p = pred("P", {v("x")});
    EXPECT_EQ(desugar(f, EncodingMode::FAITHFUL), forall({"x"}, conditional(g, conditional(F("x"), p))));
    EXPECT_EQ(desugar(f, EncodingMode::CLASSICAL),
              forall({"x"}, conditional(negation(conditional(g, negation(F("x")))), p)));
}

TEST(Desugar, BlockStyles) {
    Formula f = parse("forall m, k . P(m,k)");
    Formula body = pred("P", {v("m"), v("k")});
    EXPECT_EQ(desugar(f, EncodingMode::CLASSICAL, BlockStyle::NESTED), forall({"m"}, forall({"k"}, body)));
    EXPECT_EQ(desugar(f, EncodingMode::CLASSICAL, BlockStyle::GROUPED), forall({"m", "k"}, body));
    EXPECT_TRUE(is_kernel(forall({"m", "k"}, body), BlockStyle::GROUPED));
    EXPECT_FALSE(is_kernel(forall({"m", "k"}, body), BlockStyle::NESTED));
}

TEST(IsKernel, Examples) {
    EXPECT_TRUE(is_kernel(conditional(negation(B()), A())));
    EXPECT_FALSE(is_kernel(disjunction(A(), B())));
    EXPECT_FALSE(is_kernel(exists({"x"}, F("x"))));
    EXPECT_FALSE(is_kernel(forall({"x"}, F("x"), A())));
    EXPECT_FALSE(is_kernel(negation(conditional(A(), conjunction(A(), B())))));
}

TEST(Resugar, Examples) {
    EXPECT_EQ(resugar(conditional(negation(B()), A())), disjunction(A(), B()));
    EXPECT_EQ(resugar(negation(conditional(B(), A()))), conjunction(B(), negation(A())));
    EXPECT_EQ(resugar(negation(conditional(B(), negation(A())))), conjunction(A(), B()));
    EXPECT_EQ(resugar(negation(forall({"x"}, negation(F("x"))))), exists({"x"}, F("x")));
    EXPECT_EQ(resugar(A()), A());
    EXPECT_EQ(resugar(negation(negation(A()))), A());
}

TEST(Resugar, ExistentialTakesPriority) {
    // ~forall x . ~~F(x) is read as exists x . ~F(x) rather than a bare double negation.
    EXPECT_EQ(resugar(negation(forall({"x"}, negation(negation(F("x")))))), exists({"x"}, negation(F("x"))));
}

TEST(Resugar, RecoversGuards) {
    Formula f = parse("forall x [F(x)] . exists y [G(y)] . R(x,y)");
    EXPECT_EQ(resugar(desugar(f, EncodingMode::CLASSICAL), EncodingMode::CLASSICAL), f);
    EXPECT_EQ(resugar(desugar(f, EncodingMode::FAITHFUL), EncodingMode::FAITHFUL), f);
    Formula second = parse(kSecond);
    EXPECT_EQ(resugar(desugar(second, EncodingMode::FAITHFUL, BlockStyle::GROUPED), EncodingMode::FAITHFUL),
              second);
}

TEST(Negate, Examples) {
    EXPECT_EQ(negate(negation(negation(A()))), negation(A()));
    EXPECT_EQ(negate(negate(negation(negation(A())))), A());
    EXPECT_EQ(negate(negation(A())), A());
    EXPECT_EQ(negate(conjunction(A(), B())), disjunction(negation(A()), negation(B())));
    EXPECT_EQ(negate(disjunction(A(), B())), conjunction(negation(A()), negation(B())));
    EXPECT_EQ(negate(conditional(B(), A())), conjunction(B(), negation(A())));
    EXPECT_EQ(negate(conditional(negation(B()), A())), conjunction(negation(B()), negation(A())));
}

TEST(Negate, ComparisonsFlip) {
    Term lhs = Term::apply("v", {v("m"), v("l"), v("x")});
    Term rhs = Term::apply("max", {v("a"), v("b")});
    EXPECT_EQ(negate(compare(lhs, ComparisonOp::LE, rhs)), compare(lhs, ComparisonOp::GT, rhs));
    EXPECT_EQ(negate(compare(v("n"), ComparisonOp::IN, k("Nat"))), compare(v("n"), ComparisonOp::NOTIN, k("Nat")));
    for (auto op : {ComparisonOp::LT, ComparisonOp::LE, ComparisonOp::GT, ComparisonOp::GE, ComparisonOp::EQ,
                    ComparisonOp::NE, ComparisonOp::IN, ComparisonOp::NOTIN})
        EXPECT_EQ(complement(complement(op)), op);
}

TEST(Negate, QuantifiersFlipGuardsStay) {
    Formula negated = negate(parse(kSecond));
    Formula expect = parse(
        "exists n [n in Nat] . forall m, k [m >= n] . exists mu, l, eps [mu >= m & eps > 0] . forall L, S [S > 0] . "
        "exists x [x in X] . v(m,l,x) > max(mul(eps,v(n,k,x)),mul(S,v(mu,L,x)))");
    EXPECT_EQ(negated, expect);
}

TEST(KernelProperty, ClosureInBothModes) {
    std::mt19937 rng(401);
    propgen::FormulaGen gen(rng, {});
    for (int i = 0; i < 1000; ++i) {
        Formula f = gen.formula();
        for (auto mode : {EncodingMode::FAITHFUL, EncodingMode::CLASSICAL}) {
            ASSERT_TRUE(is_kernel(desugar(f, mode))) << print_modern(f);
            ASSERT_TRUE(is_kernel(desugar(f, mode, BlockStyle::GROUPED), BlockStyle::GROUPED));
        }
    }
}

TEST(KernelProperty, PropositionalSoundness) {
    std::mt19937 rng(402);
    for (int i = 0; i < 1000; ++i) {
        Formula f = propgen::random_propositional(rng);
        expect_same_table(f, desugar(f, EncodingMode::FAITHFUL));
        expect_same_table(f, desugar(f, EncodingMode::CLASSICAL));
        ASSERT_EQ(desugar(f, EncodingMode::FAITHFUL), desugar(f, EncodingMode::CLASSICAL));
    }
}

TEST(KernelProperty, FirstOrderSoundnessClassical) {
    std::mt19937 rng(403);
    propgen::QuantifiedGen gen(rng);
    for (int i = 0; i < 200; ++i) {
        Formula f = gen.formula();
        Formula d = desugar(f, EncodingMode::CLASSICAL);
        ASSERT_TRUE(for_all_models({f}, 3, [&](auto& I, auto& env) { return eval(f, I, env) == eval(d, I, env); }))
            << print_modern(f);
    }
}

TEST(KernelProperty, FaithfulAgreesWithoutGuardedExistentials) {
    std::mt19937 rng(404);
    propgen::QuantifiedGen gen(rng);
    int checked = 0;
    for (int i = 0; i < 600 && checked < 100; ++i) {
        Formula f = gen.formula();
        if (has_guarded_exists(f)) continue;
        ++checked;
        Formula d = desugar(f, EncodingMode::FAITHFUL);
        ASSERT_TRUE(for_all_models({f}, 2, [&](auto& I, auto& env) { return eval(f, I, env) == eval(d, I, env); }))
            << print_modern(f);
    }
    EXPECT_GE(checked, 50);
}

TEST(KernelProperty, ResugarAfterDesugarPreservesMeaning) {
    std::mt19937 rng(405);
    for (int i = 0; i < 500; ++i) {
        Formula f = propgen::random_propositional(rng);
        // Resugaring may read letters in a different order; compare meaning.
        ASSERT_TRUE(equivalent_propositional(f, resugar(desugar(f, EncodingMode::CLASSICAL)))) << print_modern(f);
    }
    propgen::QuantifiedGen gen(rng);
    for (int i = 0; i < 200; ++i) {
        Formula f = gen.formula();
        Formula r = resugar(desugar(f, EncodingMode::CLASSICAL), EncodingMode::CLASSICAL);
        ASSERT_TRUE(for_all_models({f}, 2, [&](auto& I, auto& env) { return eval(f, I, env) == eval(r, I, env); }))
            << print_modern(f) << " vs " << print_modern(r);
    }
}

TEST(KernelProperty, NegationSoundness) {
    std::mt19937 rng(406);
    for (int i = 0; i < 500; ++i) {
        Formula f = propgen::random_propositional(rng);
        Formula n = negate(f);
        for (const auto& a : assignments(proposition_letters(f)))
            ASSERT_NE(eval_propositional(n, a), eval_propositional(f, a)) << print_modern(f);
    }
    propgen::QuantifiedGen gen(rng);
    for (int i = 0; i < 200; ++i) {
        Formula f = gen.formula();
        Formula n = negate(f);
        // The oracle reads guards classically with the guards spelled out.
        Formula plain = propgen::unguard(f);
        ASSERT_TRUE(
            for_all_models({f}, 3, [&](auto& I, auto& env) { return eval(n, I, env) == !eval(plain, I, env); }))
            << print_modern(f);
    }
}

TEST(KernelProperty, NegationIsAnInvolutionUpToEquivalence) {
    std::mt19937 rng(407);
    for (int i = 0; i < 500; ++i) {
        Formula f = propgen::random_propositional(rng);
        ASSERT_TRUE(equivalent_propositional(resugar(negate(negate(f))), f)) << print_modern(f);
    }
    propgen::QuantifiedGen gen(rng);
    for (int i = 0; i < 200; ++i) {
        Formula f = gen.formula();
        Formula g = resugar(negate(negate(f)));
        ASSERT_TRUE(for_all_models({f}, 2, [&](auto& I, auto& env) { return eval(f, I, env) == eval(g, I, env); }));
    }
}

TEST(KernelProperty, NegationLeavesOnlyAtomicNots) {
    std::mt19937 rng(408);
    propgen::FormulaGen gen(rng, {});
    for (int i = 0; i < 1000; ++i) {
        Formula f = gen.formula();
        ASSERT_TRUE(only_atomic_negations(negate(f))) << print_modern(f) << " => " << print_modern(negate(f));
    }
}
