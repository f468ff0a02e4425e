#include <catch2/catch_amalgamated.hpp>
#include <random>
#include <string>
#include <vector>

#include "gen.hpp"
#include "lg/derivation.hpp"
#include "lg/parse.hpp"
#include "lg/prover.hpp"
#include "lg/render.hpp"
#include "oracle.hpp"

using namespace lg;

namespace {

Sequent seq(const std::string& s) { return parse_sequent(s); }

// Every formula over the single atom `a` with at most two connectives.
std::vector<FormulaPtr> small_single_atom_formulas() {
  std::vector<FormulaPtr> by_size[3];
  by_size[0].push_back(Formula::atom("a"));
  for (int size = 1; size <= 2; ++size)
    for (Conn op : kAllConns)
      for (int ls = 0; ls < size; ++ls)
        for (const FormulaPtr& l : by_size[ls])
          for (const FormulaPtr& r : by_size[size - 1 - ls])
            by_size[size].push_back(Formula::make(op, l, r));
  std::vector<FormulaPtr> all;
  for (auto& bucket : by_size)
    all.insert(all.end(), bucket.begin(), bucket.end());
  return all;
}

void require_proved(const ProveOutcome& out, const Sequent& goal) {
  REQUIRE(out.kind == ProveOutcome::Kind::Proved);
  REQUIRE(out.derivation.has_value());
  CHECK(equal(out.derivation->conclusion, goal));
  const CheckReport rep = check(*out.derivation, false);
  REQUIRE(rep.ok);
  CHECK(rep.cutCount == 0);
  CHECK(rep.logicalCount == census(goal).formulaTotal);
}

}  // namespace

TEST_CASE("axioms and leaf identities prove") {
  Sequent g = seq("p |- p");
  ProveOutcome out = prove(g);
  require_proved(out, g);
  CHECK(out.derivation->rule == RuleLabel::Ax);
  CHECK(out.derivation->premises.empty());

  g = seq("a * b |- a * b");
  require_proved(prove(g), g);
  g = seq("a .*. b |- a * b");
  require_proved(prove(g), g);
  g = seq("a \\ b |- a \\ b");
  require_proved(prove(g), g);
  g = seq("a (+) b |- a (+) b");
  require_proved(prove(g), g);
}

TEST_CASE("divided atom proves without Grishin budget") {
  const Sequent g = seq("p1 (/) (p1 (\\) p1) |- p1");
  ProveOutcome out = prove(g, {0, 12, kDefaultNodeMax}, {});
  require_proved(out, g);
  const CheckReport rep = check(*out.derivation, false);
  CHECK(rep.logicalCount == 2);
  CHECK(rep.grishinCount == 0);
}

TEST_CASE("underivable goals come back clean") {
  CHECK(prove(seq("a |- b")).kind == ProveOutcome::Kind::Unprovable);
  CHECK(prove(seq("a * b |- b * a")).kind == ProveOutcome::Kind::Unprovable);
  CHECK(prove(seq("a \\ b |- b / a")).kind == ProveOutcome::Kind::Unprovable);
  CHECK(prove(seq("a |- a * a")).kind == ProveOutcome::Kind::Unprovable);
  CHECK(prove(seq("(a (/) b) * b |- a")).kind ==
        ProveOutcome::Kind::Unprovable);
}

TEST_CASE("default budgets follow sequent length") {
  StatsReport st = stats(seq("p |- p"));
  CHECK(st.length == 0);
  CHECK(st.budgets.grishinMax == 0);
  CHECK(st.budgets.depthMax == 0);

  st = stats(seq("p1 (/) (p1 (\\) p1) |- p1"));
  CHECK(st.length == 2);
  CHECK(st.budgets.grishinMax == 1);
  CHECK(st.budgets.depthMax == 12);
  CHECK(st.counts.formulaTotal == 2);
  CHECK(st.counts.structuralTotal == 0);
}

TEST_CASE("depth budget trips honestly") {
  const Sequent g = seq("p1 (/) (p1 (\\) p1) |- p1");
  ProveOutcome out = prove(g, {0, 1, kDefaultNodeMax}, {});
  REQUIRE(out.kind == ProveOutcome::Kind::BudgetExceeded);
  CHECK(out.exceeded == "depth");
}

TEST_CASE("node budget trips honestly") {
  const Sequent g = seq("a * b |- a * b");
  ProveOutcome out = prove(g, {0, 100, 1}, {});
  REQUIRE(out.kind == ProveOutcome::Kind::BudgetExceeded);
  CHECK(out.exceeded == "node");
}

TEST_CASE("a product crossing a division needs Grishin interaction") {
  const Sequent g = seq("(p (/) (p (\\) p)) * q |- (p * q) (/) (p (\\) p)");
  ProveOutcome out = prove(g);
  require_proved(out, g);
  const CheckReport rep = check(*out.derivation, false);
  CHECK(rep.grishinCount >= 1);

  const Budgets defaults = Budgets::defaults_for(g);
  ProveOutcome no_grishin = prove(g, {0, defaults.depthMax, defaults.nodeMax}, {});
  REQUIRE(no_grishin.kind == ProveOutcome::Kind::BudgetExceeded);
  CHECK(no_grishin.exceeded == "grishin");
}

TEST_CASE("prove rejects ill-formed goals") {
  Sequent ill{Structure::make(Conn::Coprod, Structure::leaf(Formula::atom("a")),
                              Structure::leaf(Formula::atom("b"))),
              Structure::leaf(Formula::atom("c"))};
  CHECK_THROWS_AS(prove(ill), std::invalid_argument);
}

TEST_CASE("verdicts are stable under larger budgets") {
  std::mt19937 rng(31337);
  int proved = 0, unprovable = 0;
  for (int iter = 0; iter < 150; ++iter) {
    Sequent g = lgtest::random_sequent(rng, 1, iter % 2);
    if (iter % 3 == 0) {
      const FormulaPtr f = lgtest::random_formula(rng, 2);
      g = Sequent{Structure::leaf(f), Structure::leaf(f)};
    }
    const Budgets small = Budgets::defaults_for(g);
    const Budgets big{small.grishinMax * 2 + 1, small.depthMax * 2 + 4,
                      small.nodeMax};
    const ProveOutcome a = prove(g, small, {});
    const ProveOutcome b = prove(g, big, {});
    if (a.kind == ProveOutcome::Kind::Proved) {
      ++proved;
      REQUIRE(b.kind == ProveOutcome::Kind::Proved);
    } else if (a.kind == ProveOutcome::Kind::Unprovable) {
      ++unprovable;
      REQUIRE(b.kind == ProveOutcome::Kind::Unprovable);
    }
  }
  CHECK(proved > 10);
  CHECK(unprovable > 10);
}

TEST_CASE("memo and balance pruning do not change verdicts") {
  std::mt19937 rng(909090);
  for (int iter = 0; iter < 120; ++iter) {
    const Sequent g = lgtest::random_sequent(rng, 1, iter % 2);
    ProverOptions plain;
    ProverOptions no_memo;
    no_memo.use_memo = false;
    ProverOptions no_balance;
    no_balance.balance_prune = false;
    const auto a = prove(g, Budgets::defaults_for(g), plain);
    const auto b = prove(g, Budgets::defaults_for(g), no_memo);
    const auto c = prove(g, Budgets::defaults_for(g), no_balance);
    REQUIRE(a.kind == b.kind);
    REQUIRE(a.kind == c.kind);
  }
}

TEST_CASE("prover agrees with the derivability oracle") {
  lgtest::DerivOracle oracle;
  int proved = 0, unprovable = 0, inconclusive = 0;
  auto tally = [&](const Sequent& g) {
    const ProveOutcome out = prove(g);
    if (out.kind == ProveOutcome::Kind::Proved) {
      ++proved;
      if (!oracle.derivable(g)) FAIL("oracle rejects proved " << render(g));
    } else if (out.kind == ProveOutcome::Kind::Unprovable) {
      ++unprovable;
      if (oracle.derivable(g)) FAIL("oracle derives refuted " << render(g));
    } else {
      ++inconclusive;
    }
  };

  const std::vector<FormulaPtr> formulas = small_single_atom_formulas();
  REQUIRE(formulas.size() == 79);
  for (const FormulaPtr& l : formulas)
    for (const FormulaPtr& r : formulas)
      tally({Structure::leaf(l), Structure::leaf(r)});
  CHECK(proved >= 79);  // at least the identities
  CHECK(unprovable > 3000);
  CHECK(inconclusive == 0);

  std::mt19937 rng(246810);
  for (int iter = 0; iter < 200; ++iter)
    tally(lgtest::random_sequent(rng, 1, iter % 2));
}

TEST_CASE("search statistics are populated") {
  ProveOutcome out = prove(seq("a .*. b |- a * b"));
  CHECK(out.stats.classesExplored >= 2);
}
