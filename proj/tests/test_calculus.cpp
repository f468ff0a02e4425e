#include <algorithm>
#include <catch2/catch_amalgamated.hpp>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "gen.hpp"
#include "lg/derivation.hpp"
#include "lg/derivation_json.hpp"
#include "lg/display.hpp"
#include "lg/parse.hpp"
#include "lg/render.hpp"
#include "lg/rules.hpp"
#include "oracle.hpp"

using namespace lg;

namespace {

Sequent seq(const std::string& s) { return parse_sequent(s); }

std::vector<std::string> step_names(const std::vector<RuleInstance>& steps) {
  std::vector<std::string> names;
  for (const RuleInstance& s : steps) names.emplace_back(rule_name(s.rule));
  return names;
}

const RuleInstance* find_step(const std::vector<RuleInstance>& steps,
                              RuleLabel rule) {
  for (const RuleInstance& s : steps)
    if (s.rule == rule) return &s;
  return nullptr;
}

Derivation ax(const std::string& atom) {
  return {seq(atom + " |- " + atom), RuleLabel::Ax, {}};
}

// p1 (/) (p1 (\) p1) |- p1, built by hand from the schemas.
Derivation gadget_derivation() {
  Derivation ldiffr{seq("p1 .(\\). p1 |- p1 (\\) p1"),
                    RuleLabel::LDiffR,
                    {ax("p1"), ax("p1")}};
  Derivation dresldiff{seq("p1 |- p1 .(+). (p1 (\\) p1)"),
                       RuleLabel::DResLDiff,
                       {std::move(ldiffr)}};
  Derivation dresrdiffinv{seq("p1 .(/). (p1 (\\) p1) |- p1"),
                          RuleLabel::DResRDiffInv,
                          {std::move(dresldiff)}};
  return {seq("p1 (/) (p1 (\\) p1) |- p1"),
          RuleLabel::RDiffL,
          {std::move(dresrdiffinv)}};
}

}  // namespace

TEST_CASE("rule names round-trip") {
  std::set<std::string> seen;
  for (RuleLabel r : kAllRules) {
    const std::string name{rule_name(r)};
    CHECK(seen.insert(name).second);
    auto back = rule_from_name(name);
    REQUIRE(back.has_value());
    CHECK(*back == r);
    CHECK(rule_arity(r) >= 0);
    CHECK(rule_arity(r) <= 2);
  }
  CHECK(rule_arity(RuleLabel::Ax) == 0);
  CHECK(rule_arity(RuleLabel::Cut) == 2);
  CHECK(rule_arity(RuleLabel::GrishinLDiffUnder) == 1);
  CHECK(seen.size() == 26);
  CHECK_FALSE(rule_from_name("NotARule").has_value());
}

TEST_CASE("backward steps at an axiom goal") {
  auto steps = backward_steps(seq("p |- p"));
  REQUIRE(steps.size() == 1);
  CHECK(steps[0].rule == RuleLabel::Ax);
  CHECK(steps[0].premises.empty());

  CHECK(backward_steps(seq("a |- b")).empty());
}

TEST_CASE("backward steps at a product goal") {
  auto steps = backward_steps(seq("a .*. b |- a * b"));
  CHECK(step_names(steps) ==
        std::vector<std::string>{"TensorR", "ResOver", "ResUnder"});

  const RuleInstance* tr = find_step(steps, RuleLabel::TensorR);
  REQUIRE(tr != nullptr);
  REQUIRE(tr->premises.size() == 2);
  CHECK(render(tr->premises[0]) == "a |- a");
  CHECK(render(tr->premises[1]) == "b |- b");

  const RuleInstance* ro = find_step(steps, RuleLabel::ResOver);
  REQUIRE(ro != nullptr);
  CHECK(render(ro->premises[0]) == "a |- (a * b) ./. b");

  const RuleInstance* ru = find_step(steps, RuleLabel::ResUnder);
  REQUIRE(ru != nullptr);
  CHECK(render(ru->premises[0]) == "b |- a .\\. (a * b)");
}

TEST_CASE("backward steps where a Grishin move applies") {
  auto steps = backward_steps(seq("x .(/). q |- p ./. y"));
  CHECK(step_names(steps) == std::vector<std::string>{
                                 "ResOverInv", "DResRDiffInv",
                                 "GrishinRDiffOver"});
  const RuleInstance* g = find_step(steps, RuleLabel::GrishinRDiffOver);
  REQUIRE(g != nullptr);
  CHECK(render(g->premises[0]) == "x .*. y |- p .(+). q");

  const RuleInstance* roi = find_step(steps, RuleLabel::ResOverInv);
  REQUIRE(roi != nullptr);
  CHECK(render(roi->premises[0]) == "(x .(/). q) .*. y |- p");

  const RuleInstance* dri = find_step(steps, RuleLabel::DResRDiffInv);
  REQUIRE(dri != nullptr);
  CHECK(render(dri->premises[0]) == "x |- (p ./. y) .(+). q");
}

TEST_CASE("backward steps unfold formula leaves") {
  auto steps = backward_steps(seq("a * b |- c"));
  CHECK(step_names(steps) == std::vector<std::string>{"TensorL"});
  CHECK(render(steps[0].premises[0]) == "a .*. b |- c");

  steps = backward_steps(seq("x |- b \\ c"));
  CHECK(step_names(steps) == std::vector<std::string>{"UnderR"});
  CHECK(render(steps[0].premises[0]) == "x |- b .\\. c");

  steps = backward_steps(seq("a (\\) b |- y"));
  CHECK(step_names(steps) == std::vector<std::string>{"LDiffL"});
  CHECK(render(steps[0].premises[0]) == "a .(\\). b |- y");
}

TEST_CASE("apply_forward validates instances") {
  CHECK(!apply_forward(RuleLabel::Ax, {}, seq("p |- p")));
  CHECK(apply_forward(RuleLabel::Ax, {}, seq("a |- b")).has_value());
  CHECK(apply_forward(RuleLabel::Ax, {}, seq("a * b |- a * b")).has_value());

  CHECK(!apply_forward(RuleLabel::TensorL, {seq("a .*. b |- c")},
                       seq("a * b |- c")));
  CHECK(!apply_forward(RuleLabel::TensorR, {seq("a |- a"), seq("b |- b")},
                       seq("a .*. b |- a * b")));
  auto err = apply_forward(RuleLabel::TensorR, {seq("b |- b"), seq("a |- a")},
                           seq("a .*. b |- a * b"));
  REQUIRE(err.has_value());
  CHECK(err->find("mismatch") != std::string::npos);

  CHECK(apply_forward(RuleLabel::TensorL, {seq("a .*. b |- c")},
                      seq("b * a |- c"))
            .has_value());
  CHECK(apply_forward(RuleLabel::TensorR, {seq("a |- a")},
                      seq("a .*. b |- a * b"))
            .has_value());
}

TEST_CASE("forward Cut composes at a formula leaf") {
  detail::ForwardResult fr = detail::forward_conclusion(
      RuleLabel::Cut, {seq("a .*. b |- c"), seq("c |- d")});
  REQUIRE(fr.conclusion.has_value());
  CHECK(render(*fr.conclusion) == "a .*. b |- d");

  fr = detail::forward_conclusion(RuleLabel::Cut,
                                  {seq("a |- c ./. b"), seq("c |- d")});
  CHECK_FALSE(fr.conclusion.has_value());
}

TEST_CASE("display closure of a two-leaf product") {
  auto members = display_closure(seq("a .*. b |- c"));
  std::set<std::string> got;
  for (const Sequent& m : members) got.insert(render(m));
  CHECK(got == std::set<std::string>{"a .*. b |- c", "a |- c ./. b",
                                     "b |- a .\\. c"});
  CHECK(got == lgtest::closure_oracle(seq("a .*. b |- c")));
  CHECK(render(canonical(seq("b |- a .\\. c"))) == "a .*. b |- c");
}

TEST_CASE("display closure matches the reference rewriter") {
  std::mt19937 rng(20240811);
  for (int iter = 0; iter < 300; ++iter) {
    Sequent s = lgtest::random_sequent(rng, 1 + iter % 3, 1);
    auto members = display_closure(s);
    std::set<std::string> got;
    for (const Sequent& m : members) got.insert(render(m));
    REQUIRE(got.size() == members.size());
    REQUIRE(got == lgtest::closure_oracle(s));

    const std::string key = canonical_key(s);
    CHECK(key == *got.begin());
    for (const Sequent& m : members) {
      CHECK(canonical_key(m) == key);
    }
    CHECK(canonical_key(canonical(s)) == key);
  }
}

TEST_CASE("display closure paths replay through forward moves") {
  std::mt19937 rng(77);
  for (int iter = 0; iter < 100; ++iter) {
    Sequent s = lgtest::random_sequent(rng, 1 + iter % 3, 1);
    DisplayClosurePaths dc = display_closure_paths(s);
    REQUIRE(dc.members.size() == dc.parent.size());
    for (std::size_t i = 1; i < dc.members.size(); ++i) {
      REQUIRE(dc.parent[i] >= 0);
      REQUIRE(dc.parent[i] < static_cast<int>(i));
      CHECK(dc.depth[i] == dc.depth[dc.parent[i]] + 1);
      Sequent back = forward_display(dc.via[i], dc.members[i]);
      CHECK(equal(back, dc.members[dc.parent[i]]));
    }
  }
}

TEST_CASE("display moves invert each other") {
  std::mt19937 rng(4242);
  int exercised = 0;
  for (int iter = 0; iter < 300; ++iter) {
    Sequent s = lgtest::random_sequent(rng, 2, 1);
    for (const RuleInstance& inst : backward_display_steps(s)) {
      CHECK(display_inverse(display_inverse(inst.rule)) == inst.rule);
      auto inverse_steps = backward_display_steps(inst.premises[0]);
      const RuleInstance* back =
          find_step(inverse_steps, display_inverse(inst.rule));
      REQUIRE(back != nullptr);
      CHECK(equal(back->premises[0], s));
      ++exercised;
    }
  }
  CHECK(exercised > 500);
}

TEST_CASE("backward and forward directions agree") {
  std::mt19937 rng(987654);
  long checked = 0;
  for (int iter = 0; iter < 1000; ++iter) {
    Sequent goal = lgtest::random_sequent(rng, 1 + iter % 3, iter % 2 ? 2 : 1);
    for (const RuleInstance& inst : backward_steps(goal)) {
      REQUIRE(static_cast<int>(inst.premises.size()) ==
              rule_arity(inst.rule));
      for (const Sequent& p : inst.premises)
        REQUIRE_FALSE(validate(p).has_value());
      auto err = apply_forward(inst.rule, inst.premises, goal);
      if (err) FAIL("forward rejects backward step: " << *err);
      ++checked;
    }
  }
  CHECK(checked > 2000);
}

TEST_CASE("step census accounting") {
  std::mt19937 rng(555);
  long logical = 0, structural_only = 0;
  for (int iter = 0; iter < 600; ++iter) {
    Sequent goal = lgtest::random_sequent(rng, 1 + iter % 3, iter % 3);
    const ConnectiveCensus before = census(goal);
    for (const RuleInstance& inst : backward_steps(goal)) {
      ConnectiveCensus after{};
      for (const Sequent& p : inst.premises) {
        const ConnectiveCensus c = census(p);
        after.formulaTotal += c.formulaTotal;
        after.structuralTotal += c.structuralTotal;
        after.inputFamily += c.inputFamily;
        after.outputFamily += c.outputFamily;
      }
      switch (rule_class(inst.rule)) {
        case RuleClass::Display:
        case RuleClass::Grishin:
          CHECK(after.formulaTotal == before.formulaTotal);
          CHECK(after.structuralTotal == before.structuralTotal);
          CHECK(after.inputFamily == before.inputFamily);
          CHECK(after.outputFamily == before.outputFamily);
          ++structural_only;
          break;
        case RuleClass::Logical:
          CHECK(after.formulaTotal == before.formulaTotal - 1);
          // Unfolding moves a connective into the structure; a two-premise
          // rule instead consumes the structural connective it matched.
          CHECK(after.structuralTotal ==
                before.structuralTotal + (inst.premises.size() == 1 ? 1 : -1));
          ++logical;
          break;
        case RuleClass::Axiom:
          CHECK(inst.premises.empty());
          break;
        case RuleClass::CutRule:
          FAIL("Cut must not be enumerated backward");
      }
    }
  }
  CHECK(logical > 50);
  CHECK(structural_only > 1000);
}

TEST_CASE("checker accepts the divided-atom derivation") {
  Derivation d = gadget_derivation();
  CheckReport rep = check(d, false);
  REQUIRE(rep.ok);
  CHECK(rep.logicalCount == 2);
  CHECK(rep.displayCount == 2);
  CHECK(rep.grishinCount == 0);
  CHECK(rep.cutCount == 0);

  CHECK(check(ax("p"), false).ok);
}

TEST_CASE("checker rejects broken derivations") {
  Derivation d = gadget_derivation();
  d.premises[0].premises[0].premises[0].premises[0] = ax("q");
  CheckReport rep = check(d, false);
  REQUIRE_FALSE(rep.ok);
  REQUIRE(rep.firstError.has_value());
  CHECK(rep.firstError->find("0.0.0") != std::string::npos);

  Derivation bad_rule = gadget_derivation();
  bad_rule.rule = RuleLabel::TensorL;
  CHECK_FALSE(check(bad_rule, false).ok);

  // The parser refuses this shape, so build the ill-polarized goal directly.
  Sequent ill{Structure::make(Conn::Coprod, Structure::leaf(Formula::atom("a")),
                              Structure::leaf(Formula::atom("b"))),
              Structure::leaf(Formula::atom("c"))};
  Derivation bad_goal{ill, RuleLabel::Ax, {}};
  rep = check(bad_goal, false);
  REQUIRE_FALSE(rep.ok);
  CHECK(rep.firstError->find("ill-formed") != std::string::npos);
}

TEST_CASE("checker gates Cut") {
  Derivation cut{seq("a |- a"),
                 RuleLabel::Cut,
                 {ax("a"), ax("a")}};
  CheckReport rep = check(cut, true);
  REQUIRE(rep.ok);
  CHECK(rep.cutCount == 1);

  rep = check(cut, false);
  REQUIRE_FALSE(rep.ok);
  CHECK(rep.firstError->find("Cut") != std::string::npos);
}

TEST_CASE("derivation JSON round-trips") {
  Derivation d = gadget_derivation();
  nlohmann::json j = to_json(d);
  CHECK(j["rule"] == "RDiffL");
  CHECK(j["conclusion"] == "p1 (/) (p1 (\\) p1) |- p1");
  Derivation back = derivation_from_json(j);
  CHECK(equal(back.conclusion, d.conclusion));
  CHECK(to_json(back) == j);
  CHECK(check(back, false).ok);
}

TEST_CASE("derivation JSON rejects malformed input") {
  CHECK_THROWS_AS(derivation_from_json(nlohmann::json::parse(R"({"a":1})")),
                  DerivationFormatError);
  CHECK_THROWS_AS(
      derivation_from_json(nlohmann::json::parse(
          R"({"rule":"NoSuchRule","conclusion":"p |- p","premises":[]})")),
      DerivationFormatError);
  CHECK_THROWS_AS(
      derivation_from_json(nlohmann::json::parse(
          R"({"rule":"Ax","conclusion":"p |-","premises":[]})")),
      DerivationFormatError);
  CHECK_THROWS_AS(
      derivation_from_json(nlohmann::json::parse(
          R"({"rule":"Ax","conclusion":"p |- p","premises":{}})")),
      DerivationFormatError);
}

TEST_CASE("text and LaTeX rendering smoke") {
  Derivation d = gadget_derivation();
  const std::string text = to_text(d);
  CHECK(text.find("[Ax]") != std::string::npos);
  CHECK(text.find("[RDiffL]") != std::string::npos);
  CHECK(text.find("p1 (/) (p1 (\\) p1) |- p1") != std::string::npos);

  const std::string latex = to_latex(d);
  CHECK(latex.find("\\infer") != std::string::npos);
  CHECK(latex.find("\\vdash") != std::string::npos);
  CHECK(latex.find("p_{1}") != std::string::npos);
  CHECK(latex.find("\\oslash") != std::string::npos);
}

TEST_CASE("derivability oracle sanity") {
  lgtest::DerivOracle oracle;
  CHECK(oracle.derivable(seq("p |- p")));
  CHECK_FALSE(oracle.derivable(seq("a |- b")));
  CHECK(oracle.derivable(seq("p1 (/) (p1 (\\) p1) |- p1")));
  CHECK(oracle.derivable(seq("a * b |- a * b")));
  CHECK(oracle.derivable(seq("a / b |- a / b")));
  CHECK(oracle.derivable(seq("a (+) b |- a (+) b")));
  CHECK_FALSE(oracle.derivable(seq("a * b |- b * a")));
  CHECK(oracle.derivable(seq("a |- (a * b) / b")));
  CHECK(oracle.derivable(seq("(a / b) * b |- a")));
  CHECK(oracle.derivable(seq("a |- b / (a \\ b)")));
  CHECK_FALSE(oracle.derivable(seq("a \\ b |- b / a")));
  CHECK_FALSE(oracle.derivable(seq("a |- a * a")));
  CHECK(oracle.derivable(seq("a .*. b |- a * b")));
  CHECK_FALSE(oracle.derivable(seq("(a (/) b) * b |- a")));
  CHECK_FALSE(oracle.derivable(seq("a |- (a (/) b) * b")));
  CHECK(oracle.derivable(seq("a (/) b |- a (/) b")));
  CHECK(oracle.derivable(seq("b (\\) a |- b (\\) a")));
}
