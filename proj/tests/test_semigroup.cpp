#include <set>

#include "doctest.h"
#include "fixtures.hpp"
#include "invariants.hpp"
#include "semireg/apery.hpp"
#include "semireg/errors.hpp"
#include "semireg/layers.hpp"
#include "semireg/star_sequence.hpp"
#include "semireg/veronese.hpp"

using semireg::IntVec;
using semireg::ValidationRule;

namespace {

ValidationRule rule_of(const std::vector<IntVec>& raw, std::size_t d, std::int64_t alpha) {
  try {
    semireg::validate(raw, d, alpha);
  } catch (const semireg::ValidationError& e) {
    return e.rule();
  }
  FAIL("expected a validation error");
  return ValidationRule::Malformed;
}

std::set<IntVec> as_set(const std::vector<IntVec>& v) { return {v.begin(), v.end()}; }

}  // namespace

TEST_CASE("validate accepts standard form") {
  const auto p = fixtures::plane_quartic();
  CHECK(p.dimension() == 2);
  CHECK(p.alpha() == 4);
  CHECK(p.codim() == 2);
  CHECK(p.corners() == std::vector<IntVec>{{4, 0}, {0, 4}});
  CHECK(p.warnings().empty());
}

TEST_CASE("validate names the failing rule") {
  CHECK(rule_of({{4, 0}, {3, 1}}, 2, 4) == ValidationRule::MissingCorner);
  CHECK(rule_of({{4, 0}, {0, 4}, {3, 2}}, 2, 4) == ValidationRule::NonHomogeneous);
  CHECK(rule_of({{4, 0}, {0, 4}, {3, 1}, {3, 1}}, 2, 4) == ValidationRule::Duplicate);
  CHECK(rule_of({{4, 0}, {0, 4}}, 2, 4) == ValidationRule::EmptyInterior);
  CHECK(rule_of({{4, 0}, {0, 4}, {5, -1}}, 2, 4) == ValidationRule::NegativeCoordinate);
  CHECK(rule_of({{4, 0}, {0, 4}, {1, 1, 2}}, 2, 4) == ValidationRule::DimensionMismatch);
  CHECK(rule_of({{4, 0}}, 2, 0) == ValidationRule::BadParameters);
}

TEST_CASE("non-minimal alpha is a warning, not an error") {
  const auto p = semireg::validate({{4, 0}, {0, 4}, {2, 2}}, 2, 4);
  REQUIRE(p.warnings().size() == 1);
  CHECK(p.warnings()[0].find("factor 2") != std::string::npos);
}

TEST_CASE("layered membership") {
  const auto p = fixtures::plane_quartic();
  const auto layers = semireg::LayeredMembership::build(p, 3);
  CHECK(layers.layer(1).size() == p.dimension() + p.codim());
  CHECK(semireg::contains(p, layers, {6, 2}));
  CHECK_FALSE(semireg::contains(p, layers, {2, 2}));
  CHECK(semireg::contains(p, layers, {0, 0}));
  CHECK_FALSE(semireg::contains(p, layers, {1, 2}));
  CHECK_FALSE(semireg::contains(p, layers, {-4, 8}));
  CHECK_THROWS_AS(semireg::contains(p, layers, {16, 0}), std::out_of_range);

  for (std::int64_t n = 0; n <= 3; ++n)
    for (const auto& x : layers.layer(n)) CHECK(x.sum() == n * p.alpha());
  // layer n+1 is exactly layer n plus a generator
  for (std::int64_t n = 0; n < 3; ++n) {
    std::set<IntVec> sums;
    for (const auto& x : layers.layer(n))
      for (const auto& g : p.generators()) sums.insert(x + g);
    CHECK(sums == as_set(layers.layer(n + 1)));
  }
}

TEST_CASE("layer and degree caps") {
  const auto p = fixtures::plane_quartic();
  CHECK_THROWS_AS(semireg::LayeredMembership::build(p, 10, {.max_degree = 5, .max_layer = 1000}), semireg::CapExceeded);
  CHECK_THROWS_AS(semireg::LayeredMembership::build(p, 10, {.max_degree = 50, .max_layer = 8}), semireg::CapExceeded);
  CHECK_THROWS_AS(semireg::apery_set(fixtures::curve_40(), {.max_degree = 5, .max_layer = 1000}), semireg::CapExceeded);
}

TEST_CASE("Apery set of the plane quartic") {
  const auto apery = semireg::apery_set(fixtures::plane_quartic());
  CHECK(apery.elements() == std::vector<IntVec>{{0, 0}, {1, 3}, {2, 6}, {3, 1}, {6, 2}});
  REQUIRE(apery.class_count() == 4);
  const auto& big = apery.classes()[2];
  CHECK(big.members == std::vector<IntVec>{{2, 6}, {6, 2}});
  CHECK(big.shift == IntVec{2, 2});
  CHECK(big.shift_degree == 1);
  CHECK(apery.classes()[0].shift == IntVec{0, 0});
  CHECK(apery.classes()[1].shift == IntVec{1, 3});
  CHECK(apery.classes()[3].shift == IntVec{3, 1});
  CHECK(semireg::reduction_number(apery) == 2);
}

TEST_CASE("Apery set of B_{2,2}") {
  const auto apery = semireg::apery_set(semireg::veronese_presentation({2, 2}));
  CHECK(apery.elements() == std::vector<IntVec>{{0, 0}, {1, 1}});
  CHECK(apery.class_count() == 2);
  for (const auto& c : apery.classes()) CHECK(c.members.size() == 1);
}

TEST_CASE("Apery set of the cubic 3d example") {
  const auto apery = semireg::apery_set(fixtures::cubic_3d());
  const auto elements = as_set(apery.elements());
  CHECK(elements.contains(IntVec{4, 2, 0}));
  const auto t = apery.class_index({2, 2, 2});
  REQUIRE(t >= 0);
  CHECK(apery.classes()[static_cast<std::size_t>(t)].members == std::vector<IntVec>{{2, 2, 2}});
}

TEST_CASE("reduction numbers") {
  CHECK(semireg::reduction_number(fixtures::plane_quartic()) == 2);
  CHECK(semireg::reduction_number(fixtures::curve_40()) == 11);
  CHECK(semireg::reduction_number(semireg::veronese_presentation({3, 3})) == 2);
}

TEST_CASE("Apery classes: partition, shifts, and degree bound on the corpus") {
  auto corpus = fixtures::random_corpus(23, 60);
  for (auto& [name, p] : fixtures::named_examples()) corpus.push_back(p);
  for (const auto& p : corpus) {
    const auto apery = semireg::apery_set(p);
    const auto alpha = p.alpha();
    CHECK(apery.class_count() == semireg::class_count(p).get_ui());
    const auto f = static_cast<std::int64_t>(apery.class_count());
    CHECK(semireg::reduction_number(apery) <= f - static_cast<std::int64_t>(p.codim()));

    // the c + 1 elements 0, a_1..a_c sit in distinct classes
    std::set<std::ptrdiff_t> seen{apery.class_index(IntVec::zero(p.dimension()))};
    for (const auto& a : p.interior()) seen.insert(apery.class_index(a));
    CHECK(seen.size() == p.codim() + 1);

    for (std::size_t t = 0; t < apery.classes().size(); ++t) {
      const auto& c = apery.classes()[t];
      IntVec zero_min = c.members.front() - c.shift;
      for (const auto& x : c.members) {
        CHECK(semireg::equivalent(x, c.representative, alpha));
        CHECK(apery.class_index(x) == static_cast<std::ptrdiff_t>(t));
        const IntVec diff = x - c.shift;
        for (auto v : diff) CHECK((v >= 0 && v % alpha == 0));
        zero_min = semireg::componentwise_min(zero_min, diff);
      }
      CHECK(zero_min.is_zero());
    }
  }
}

TEST_CASE("Apery criterion against layer membership") {
  for (const auto& p : fixtures::random_corpus(29, 40)) {
    const auto apery = semireg::apery_set(p);
    const auto top = apery.max_degree() + 1;
    const auto layers = semireg::LayeredMembership::build(p, top);
    const auto elements = as_set(apery.elements());
    for (std::int64_t n = 0; n <= top; ++n)
      for (const auto& x : layers.layer(n)) {
        bool reducible = false;
        for (const auto& e : p.corners())
          if (semireg::componentwise_le(e, x) && semireg::contains(p, layers, x - e)) reducible = true;
        CHECK(elements.contains(x) == !reducible);
        CHECK(apery.contains(x));
      }
  }
}

TEST_CASE("star sequences") {
  const auto p = fixtures::plane_quartic();
  const auto layers = semireg::LayeredMembership::build(p, 3);

  const auto s = semireg::star_sequences(layers, {6, 2}, 100);
  REQUIRE(s.size() == 1);
  CHECK(s[0].steps == std::vector<IntVec>{{3, 1}, {3, 1}});
  CHECK(s[0].remainder(1) == IntVec{3, 1});

  const auto single = semireg::star_sequences(layers, {1, 3}, 100);
  REQUIRE(single.size() == 1);
  CHECK(single[0].steps == std::vector<IntVec>{{1, 3}});

  CHECK(semireg::star_sequences(layers, {0, 0}, 100).empty());
  CHECK_THROWS_AS(semireg::star_sequences(layers, {2, 2}, 100), std::invalid_argument);

  // (7,5) has several sequences; the limit is honored
  CHECK(semireg::star_sequences(layers, {7, 5}, 2).size() == 2);
}

TEST_CASE("star sequences of Apery elements stay in B_A and avoid corners") {
  auto corpus = fixtures::random_corpus(31, 30);
  corpus.push_back(fixtures::plane_quartic());
  corpus.push_back(fixtures::seminormal_4d());
  for (const auto& p : corpus) {
    const auto apery = semireg::apery_set(p);
    const auto layers = semireg::LayeredMembership::build(p, apery.max_degree());
    CHECK(invariants::star_sequence_structure(apery, layers, 100) == "");
  }
}
