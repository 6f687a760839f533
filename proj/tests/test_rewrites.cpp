#include "circal/rewrites.hpp"

#include <set>

#include "doctest.h"
#include "generators.hpp"
#include "oracles.hpp"

using namespace circal;

namespace {

SurfaceClass surf(const char* text) { return SurfaceClass::parse(text); }

// single stage F=(1,1), S=(3,1): two 1-handles, two 2-handles, width {5}
CircularDecomposition genus3_stage() {
  return CircularDecomposition::single_stage(Mode::exterior, surf("(1,1)"), surf("(3,1)"));
}

CircularDecomposition almost_fibered(int genus) {
  return CircularDecomposition::single_stage(
      Mode::exterior, SurfaceClass({{genus, 1}}), SurfaceClass({{genus + 1, 1}}));
}

bool has_reduction_with(const std::vector<WeakReduction>& list, const SurfaceClass& thick_a,
                        const SurfaceClass& thick_b, const SurfaceClass& between) {
  for (const auto& wr : list)
    if (wr.thick_a == thick_a && wr.thick_b == thick_b && wr.thin_between == between) return true;
  return false;
}

// exhaustive search over the whole rewrite graph; safety-capped
WidthMultiset exhaustive_minimum(const CircularDecomposition& d, int cap = 500) {
  std::set<std::string> seen;
  std::vector<CircularDecomposition> frontier{canonical_form(d)};
  seen.insert(serialize(frontier.front()));
  WidthMultiset best = width(d);
  while (!frontier.empty() && static_cast<int>(seen.size()) <= cap) {
    CircularDecomposition cur = frontier.back();
    frontier.pop_back();
    if (compare_width(width(cur), best) == std::strong_ordering::less) best = width(cur);
    for (int i = 0; i < cur.stage_count(); ++i) {
      for (const auto& wr : enumerate_weak_reductions(cur, i)) {
        auto child = canonical_form(apply_weak_reduction(cur, wr));
        if (seen.insert(serialize(child)).second) frontier.push_back(child);
      }
      auto views = compression_body_views(cur);
      if (views[static_cast<size_t>(i)].a_one_handles == 0 &&
          views[static_cast<size_t>(i)].b_two_handles == 0) {
        auto child = canonical_form(remove_trivial_stage(cur, i));
        if (seen.insert(serialize(child)).second) frontier.push_back(child);
      }
    }
  }
  REQUIRE(static_cast<int>(seen.size()) <= cap);
  return best;
}

}  // namespace

TEST_CASE("enumerate finds the nonsep pair on a genus-3 thick surface") {
  auto d = genus3_stage();
  auto reductions = enumerate_weak_reductions(d, 0);
  CHECK(has_reduction_with(reductions, surf("(2,1)"), surf("(2,1)"), surf("(1,1)")));
}

TEST_CASE("no same-component pair exists below genus 2") {
  // a connected thick surface of genus 1 admits only one compression, and a
  // pair needs genus 2; the stage is also too thin to split (n=0)
  CircularDecomposition d;
  d.mode = Mode::exterior;
  d.thin = {surf("(1,1)"), surf("(1,1)")};
  d.thick = {surf("(1,1)"), surf("(3,1)")};
  CHECK(enumerate_weak_reductions(d, 0).empty());
  CHECK_THROWS_AS(enumerate_weak_reductions(d, 2), DomainError);
}

TEST_CASE("cross-component reductions can leave a sphere piece") {
  CircularDecomposition d;
  d.mode = Mode::exterior;
  d.thin = {surf("(0,1) (1,0)"), surf("(1,1) (0,0)")};
  d.thick = {surf("(2,1) (1,0)"), surf("(2,1)")};
  REQUIRE(validate(d).valid());

  auto reductions = enumerate_weak_reductions(d, 0);
  CHECK(has_reduction_with(reductions, surf("(1,1) (1,0)"), surf("(2,1) (0,0)"),
                           surf("(1,1) (0,0)")));
}

TEST_CASE("stages with a single 1-handle or 2-handle admit no reduction") {
  // splitting such a stage would leave an empty handle block
  for (int g = 1; g <= 4; ++g) CHECK(enumerate_weak_reductions(almost_fibered(g), 0).empty());

  // same geometry with two handles on both sides does reduce
  CHECK_FALSE(enumerate_weak_reductions(genus3_stage(), 0).empty());
}

TEST_CASE("weak reductions strictly shrink the width") {
  auto d = genus3_stage();
  REQUIRE(width(d) == WidthMultiset({5}));
  auto reductions = enumerate_weak_reductions(d, 0);
  REQUIRE_FALSE(reductions.empty());
  for (const auto& wr : reductions) {
    auto next = apply_weak_reduction(d, wr);
    CHECK(validate(next).valid());
    CHECK(compare_width(width(next), width(d)) == std::strong_ordering::less);
    CHECK(complexity(wr.thick_a) < complexity(d.thick[0]));
    CHECK(complexity(wr.thick_b) < complexity(d.thick[0]));
    CHECK(complexity(wr.thin_between) <=
          std::min(complexity(wr.thick_a), complexity(wr.thick_b)));
  }
  auto first = apply_weak_reduction(d, reductions.front());
  CHECK(width(first) == WidthMultiset({3, 3}));
}

TEST_CASE("fabricated reductions are rejected") {
  auto d = genus3_stage();
  WeakReduction fake;
  fake.stage = 0;
  fake.move_a = CompressNonSep{0};
  fake.move_b = CompressNonSep{0};
  fake.thick_a = surf("(2,1)");
  fake.thick_b = surf("(2,1)");
  fake.thin_between = surf("(0,1)");  // wrong middle surface
  CHECK_THROWS_AS(apply_weak_reduction(d, fake), DomainError);

  WeakReduction out_of_range;
  out_of_range.stage = 3;
  CHECK_THROWS_AS(apply_weak_reduction(d, out_of_range), DomainError);
}

TEST_CASE("random decompositions: every enumerated reduction decreases width and validates") {
  gen::Rng rng(20250810);
  gen::DecompositionOptions opt;
  opt.min_stages = 1;
  int reductions_seen = 0;
  for (int trial = 0; trial < 150; ++trial) {
    auto d = gen::random_exterior_decomposition(rng, opt);
    for (int i = 0; i < d.stage_count(); ++i) {
      for (const auto& wr : enumerate_weak_reductions(d, i)) {
        ++reductions_seen;
        auto next = apply_weak_reduction(d, wr);
        CHECK(validate(next).valid());
        CHECK(compare_width(width(next), width(d)) == std::strong_ordering::less);
      }
    }
  }
  CHECK(reductions_seen > 100);
}

TEST_CASE("removing a trivial stage drops one width entry") {
  CircularDecomposition d;
  d.mode = Mode::exterior;
  d.thin = {surf("(1,1)"), surf("(1,1)")};
  d.thick = {surf("(1,1)"), surf("(2,1)")};  // stage 0 is trivial
  REQUIRE(validate(d).valid());

  auto out = remove_trivial_stage(d, 0);
  CHECK(validate(out).valid());
  CHECK(out.stage_count() == 1);
  CHECK(width(out) == WidthMultiset({3}));

  CHECK_THROWS_AS(remove_trivial_stage(d, 1), DomainError);  // has handles

  // round-trip: splicing the trivial stage back restores the width
  CircularDecomposition back = out;
  back.thin.insert(back.thin.begin(), surf("(1,1)"));
  back.thick.insert(back.thick.begin(), surf("(1,1)"));
  CHECK(validate(back).valid());
  auto entries = width(out).entries();
  entries.push_back(complexity(surf("(1,1)")));
  CHECK(width(back) == WidthMultiset(entries));
}

TEST_CASE("a one-stage trivial decomposition collapses to the fibered form") {
  CircularDecomposition d;
  d.mode = Mode::exterior;
  d.thin = {surf("(2,1)")};
  d.thick = {surf("(2,1)")};
  auto out = remove_trivial_stage(d, 0);
  CHECK(out.fibered_form());
  CHECK(out.base() == surf("(2,1)"));
}

TEST_CASE("parallel-region removal needs equal thin surfaces and an assertion") {
  CircularDecomposition d;
  d.mode = Mode::exterior;
  d.thin = {surf("(1,1)"), surf("(1,1)")};
  d.thick = {surf("(2,1)"), surf("(2,1)")};
  REQUIRE(validate(d).valid());

  auto out = remove_parallel_region(d, 0, 1, "seen isotopic in the ambient manifold");
  CHECK(validate(out).valid());
  CHECK(out.stage_count() == 1);
  CHECK(compare_width(width(out), width(d)) == std::strong_ordering::less);
  REQUIRE_FALSE(out.provenance.empty());
  CHECK(out.provenance.back().rfind("RP 0 1 ", 0) == 0);
  CHECK(out.provenance.back().find("asserted-isotopic") != std::string::npos);

  CHECK_THROWS_AS(remove_parallel_region(d, 0, 1, ""), DomainError);
  CHECK_THROWS_AS(remove_parallel_region(d, 0, 0, "x"), DomainError);

  CircularDecomposition different;
  different.mode = Mode::exterior;
  different.thin = {surf("(1,1)"), surf("(2,1)")};
  different.thick = {surf("(2,1)"), surf("(2,1)")};
  REQUIRE(validate(different).valid());
  CHECK_THROWS_AS(remove_parallel_region(different, 0, 1, "x"), DomainError);
}

TEST_CASE("parallel-region removal respects the chosen direction") {
  CircularDecomposition d;
  d.mode = Mode::exterior;
  d.thin = {surf("(1,1)"), surf("(2,1)"), surf("(1,1)"), surf("(3,1)")};
  d.thick = {surf("(2,1)"), surf("(2,1)"), surf("(3,1)"), surf("(3,1)")};
  REQUIRE(validate(d).valid());

  auto forward = remove_parallel_region(d, 0, 2, "token");  // drops stages 0,1
  CHECK(forward.stage_count() == 2);
  CHECK(width(forward) == WidthMultiset({5, 5}));

  auto backward = remove_parallel_region(d, 2, 0, "token");  // drops stages 2,3
  CHECK(backward.stage_count() == 2);
  CHECK(width(backward) == WidthMultiset({3, 3}));
}

TEST_CASE("thin search on the fibered form returns it unchanged") {
  auto d = CircularDecomposition::fibered(Mode::exterior, surf("(2,1)"));
  auto result = thin_search(d, 10);
  CHECK(result.best == d);
  CHECK(result.trace.empty());
  CHECK(result.exhausted);
  CHECK_THROWS_AS(thin_search(d, 0), DomainError);
}

TEST_CASE("thin search reaches {3,3} from the genus-3 stage") {
  auto result = thin_search(genus3_stage(), 100);
  CHECK(width(result.best) == WidthMultiset({3, 3}));
  CHECK(result.exhausted);
  REQUIRE_FALSE(result.trace.empty());
  CHECK(result.trace.front().rfind("WR 0 ", 0) == 0);
  CHECK(width(result.best) == exhaustive_minimum(genus3_stage()));
}

TEST_CASE("thin search is monotone and matches exhaustive search on small graphs") {
  gen::Rng rng(424242);
  gen::DecompositionOptions opt;
  opt.max_stages = 2;
  opt.level.max_genus = 3;
  opt.level.max_closed_components = 1;
  opt.max_extra_genus = 2;
  for (int trial = 0; trial < 40; ++trial) {
    auto d = gen::random_exterior_decomposition(rng, opt);
    auto result = thin_search(d, 2000);
    CHECK(compare_width(width(result.best), width(d)) != std::strong_ordering::greater);
    if (result.exhausted) CHECK(width(result.best) == exhaustive_minimum(d, 3000));
  }
}

TEST_CASE("thin search trace replays to the reported result") {
  auto d = genus3_stage();
  auto result = thin_search(d, 100);
  CircularDecomposition cur = canonical_form(d);
  for (const auto& step : result.trace) {
    bool applied = false;
    if (step.rfind("RT ", 0) == 0) {
      cur = canonical_form(remove_trivial_stage(cur, std::stoi(step.substr(3))));
      applied = true;
    } else if (step.rfind("WR ", 0) == 0) {
      int stage = std::stoi(step.substr(3));
      for (const auto& wr : enumerate_weak_reductions(cur, stage)) {
        if (to_string(wr) == step) {
          cur = canonical_form(apply_weak_reduction(cur, wr));
          applied = true;
          break;
        }
      }
    }
    CHECK(applied);
  }
  CHECK(cur == result.best);
}

TEST_CASE("classification of the main forms") {
  CHECK(classify(CircularDecomposition::fibered(Mode::exterior, surf("(1,1)"))).form ==
        DecompositionForm::fibered);
  CHECK(classify(almost_fibered(1)).form == DecompositionForm::almost_fibered);

  // two stages, one disconnected thin surface
  CircularDecomposition split_thin;
  split_thin.mode = Mode::exterior;
  split_thin.thin = {surf("(1,1)"), surf("(1,1) (1,0)")};
  split_thin.thick = {surf("(2,1)"), surf("(2,1)")};
  REQUIRE(validate(split_thin).valid());
  auto cs = classify(split_thin);
  CHECK(cs.form == DecompositionForm::multi_stage);
  CHECK(cs.closed_thin_component);
  CHECK_FALSE(cs.multiple_thin_surfaces);

  // two stages, all thin surfaces connected
  CircularDecomposition two_thins;
  two_thins.mode = Mode::exterior;
  two_thins.thin = {surf("(1,1)"), surf("(1,1)")};
  two_thins.thick = {surf("(2,1)"), surf("(2,1)")};
  auto ct = classify(two_thins);
  CHECK(ct.form == DecompositionForm::multi_stage);
  CHECK_FALSE(ct.closed_thin_component);
  CHECK(ct.multiple_thin_surfaces);

  CHECK_FALSE(classify(two_thins).locally_thin_asserted);
  CHECK(classify(two_thins, true).locally_thin_asserted);

  // rotation invariance
  for (int r = 0; r < 2; ++r) {
    CHECK(classify(rotate_stages(split_thin, r)) == classify(split_thin));
    CHECK(classify(rotate_stages(two_thins, r)) == classify(two_thins));
  }

  auto closed = CircularDecomposition::fibered(Mode::closed, surf("(2,0)"));
  CHECK_THROWS_AS(classify(closed), DomainError);
}
