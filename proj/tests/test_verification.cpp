#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "penta/constructions.hpp"
#include "penta/enumeration.hpp"
#include "penta/errors.hpp"
#include "penta/verification.hpp"

using namespace penta;

namespace {

std::vector<Embedding> embeddings(int n) {
  std::vector<Embedding> out;
  for (const auto& e : triangulation_corpus(n, {1})) out.push_back(e.embedding);
  return out;
}

}  // namespace

TEST_CASE("LemmaStats bookkeeping") {
  LemmaStats s;
  s.record(10, 4);
  s.record(10, 10);
  CHECK(s.checked == 2);
  CHECK(s.violations == 0);
  CHECK(*s.min_slack == 0);
  CHECK(*s.max_slack == 6);
  s.record(3, 5);
  CHECK(s.violations == 1);
  CHECK(*s.min_slack == -2);

  LemmaStats b;
  b.record(false);
  b.record(true);
  CHECK_FALSE(b.min_slack.has_value());
  s.merge(b);
  CHECK(s.checked == 5);
  CHECK(s.violations == 2);
  CHECK(*s.max_slack == 6);
}

TEST_CASE("lemma suites hold on small corpora") {
  for (int n = 4; n <= 9; ++n) {
    const auto graphs = embeddings(n);
    const LemmaReport r = verify_lemmas(graphs, 1);
    CHECK(r.violations() == 0);
    CHECK(r.lemma1.checked == graphs.size() * static_cast<std::size_t>(3 * n - 6));
    CHECK(r.lemma2 == verify_lemma2(graphs, 1));
    CHECK(r.lemma1 == verify_lemma1(graphs, 1));
    const auto l3 = verify_lemma3(graphs, 1);
    CHECK(r.lemma3 == l3.first);
    CHECK(r.lemma3_no_apex == l3.second);
    CHECK(r.lemma3.checked == graphs.size() * static_cast<std::size_t>(2 * n - 4));
  }
}

TEST_CASE("edge path bound is attained at n = 6") {
  // paths3 <= 2(k - 3) with equality somewhere in the n = 6 corpus.
  const LemmaReport r = verify_lemmas(embeddings(6), 1);
  CHECK(*r.lemma2.min_slack == 0);
}

TEST_CASE("edge-deleted variants") {
  const auto graphs = embeddings(8);
  const auto a = edge_deleted_variants(graphs, 40, 7);
  const auto b = edge_deleted_variants(graphs, 40, 7);
  REQUIRE(a.size() == 40);
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].rotations() == b[i].rotations());
    CHECK(a[i].graph().size() < 18);
  }
  const auto c = edge_deleted_variants(graphs, 40, 8);
  bool differs = false;
  for (std::size_t i = 0; i < a.size(); ++i) differs = differs || !(a[i].graph() == c[i].graph());
  CHECK(differs);
  CHECK(verify_lemmas(a, 1).violations() == 0);
  CHECK_THROWS_AS(edge_deleted_variants({}, 1, 0), UsageError);
}

TEST_CASE("expected maximum") {
  CHECK(expected_max_c5(5) == 6);
  CHECK(expected_max_c5(6) == 24);
  CHECK(expected_max_c5(7) == 41);
  CHECK(expected_max_c5(12) == 180);
  CHECK_THROWS_AS(expected_max_c5(4), UsageError);
}

TEST_CASE("theorem check for n = 5..10") {
  const Count second[] = {0, 18, 39, 58, 82, 110};
  for (int n = 5; n <= 10; ++n) {
    VerifyOptions o;
    o.workers = 1;
    o.variants = 20;
    const auto c = verify_theorem(n, o);
    CHECK(c.ok());
    CHECK(c.theorem_match);
    CHECK(c.max_c5 == expected_max_c5(n));
    CHECK(c.g_n == g_formula(n));
    CHECK(c.lemma_variants == 20);
    if (n == 5) {
      CHECK_FALSE(c.second_best.has_value());
    } else {
      CHECK(c.second_best == second[n - 5]);
    }
    std::multiset<std::string> families;
    for (const auto& x : c.extremal) families.insert(x.family);
    CHECK(families == (n == 8 ? std::multiset<std::string>{"A", "D"} : std::multiset<std::string>{"D"}));
  }
}

TEST_CASE("lemmas-only run and worker independence") {
  VerifyOptions o;
  o.theorem = false;
  o.variants = 30;
  o.workers = 1;
  const auto one = verify_theorem(9, o);
  CHECK_FALSE(one.theorem_checked);
  CHECK(one.lemmas_checked);
  CHECK(one.ok());
  o.workers = 4;
  CHECK(verify_theorem(9, o) == one);
}

TEST_CASE("order limits") {
  CHECK_THROWS_AS(verify_theorem(4), UsageError);
  CHECK_THROWS_AS(verify_theorem(13), UsageError);
  VerifyOptions o;
  o.allow_large = true;
  CHECK_THROWS_AS(verify_theorem(15, o), UsageError);
}

TEST_CASE("random triangulations") {
  std::mt19937_64 rng(61);
  for (int n = 4; n <= 30; ++n) {
    const Embedding e = random_triangulation(n, rng);
    CHECK(e.graph().order() == n);
    CHECK(is_triangulation(e));
    CHECK(e.graph().min_degree() >= 3);
  }
  CHECK_THROWS_AS(random_triangulation(3, rng), UsageError);
}

TEST_CASE("adding edges never lowers the count") {
  const auto r = verify_monotonicity(60, 5);
  CHECK(r.samples == 60);
  CHECK(r.additions_checked > 0);
  CHECK(r.pass);
  CHECK(r.counterexample.empty());
}
