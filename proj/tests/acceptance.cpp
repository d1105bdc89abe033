// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "fixtures.hpp"
#include "invariants.hpp"
#include "semireg/apery.hpp"
#include "semireg/betti.hpp"
#include "semireg/corpus.hpp"
#include "semireg/decompose.hpp"
#include "semireg/oracle.hpp"
#include "semireg/verify.hpp"
#include "semireg/veronese.hpp"

using semireg::IntVec;

namespace {

constexpr std::uint64_t kCorpusSeed = 20261015;
constexpr std::size_t kCorpusSize = 60;
constexpr std::size_t kIdealCount = 250;

struct Failure {
  std::string what;
};

void expect(bool ok, const std::string& what) {
  if (!ok) throw Failure{what};
}

template <class T>
std::string show(const T& v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

void expect_eq(std::int64_t got, std::int64_t want, const std::string& what) {
  expect(got == want, what + ": got " + show(got) + ", expected " + show(want));
}

std::vector<semireg::SemigroupPresentation> corpus() {
  auto out = fixtures::random_corpus(kCorpusSeed, kCorpusSize);
  for (auto& [name, p] : fixtures::named_examples()) out.push_back(p);
  return out;
}

int failures = 0;

void criterion(int id, const std::string& title, double limit_seconds, const std::function<std::string()>& body) {
  const auto start = std::chrono::steady_clock::now();
  std::string note;
  bool ok = true;
  try {
    note = body();
  } catch (const Failure& f) {
    ok = false;
    note = f.what;
  } catch (const std::exception& e) {
    ok = false;
    note = std::string("exception: ") + e.what();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (ok && secs >= limit_seconds) {
    ok = false;
    note = "runtime " + show(secs) + " s exceeds " + show(limit_seconds) + " s";
  }
  if (!ok) ++failures;
  std::printf("%s [%2d] %-44s %8.3f s  %s\n", ok ? "PASS" : "FAIL", id, title.c_str(), secs, note.c_str());
  std::fflush(stdout);
}

int cli_status(const std::string& args) {
  const std::string cmd = std::string(SEMIREG_CLI) + " " + args + " >/dev/null 2>&1";
  const int raw = std::system(cmd.c_str());
  return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
}

}  // namespace

int main() {
  criterion(1, "plane quartic end to end", 1.0, [] {
    const auto dec = semireg::decompose(fixtures::plane_quartic());
    const auto r = semireg::regularity_of_semigroup(dec);
    const auto elements = dec.apery().elements();
    expect(elements == std::vector<IntVec>{{0, 0}, {1, 3}, {2, 6}, {3, 1}, {6, 2}}, "B_A mismatch");
    bool class_ok = false;
    for (const auto& c : dec.classes())
      if (c.residue.members == std::vector<IntVec>{{2, 6}, {6, 2}})
        class_ok = c.residue.shift == IntVec{2, 2} && semireg::to_string(c.ideal) == "(y1, y2)";
    expect(class_ok, "class {(2,6),(6,2)} must have h=(2,2) and I=(y1, y2)");
    expect_eq(r.red, 2, "red");
    expect_eq(r.reg, 2, "reg");
    expect_eq(static_cast<std::int64_t>(r.f), 4, "f");
    expect_eq(static_cast<std::int64_t>(r.codim), 2, "codim");
    expect(!r.seminormal && !r.cohen_macaulay, "expected seminormal=false, CM=false");
    return std::string("reg=2 red=2 f=4 codim=2");
  });

  criterion(2, "monomial curve reg=13 > red=11", 10.0, [] {
    const auto r = semireg::regularity_of_semigroup(fixtures::curve_40());
    expect_eq(r.reg, 13, "reg");
    expect_eq(r.red, 11, "red");
    return "reg=" + show(r.reg) + " red=" + show(r.red);
  });

  criterion(3, "d=3 alpha=3 non-seminormal example", 1.0, [] {
    const auto dec = semireg::decompose(fixtures::cubic_3d());
    const auto r = semireg::regularity_of_semigroup(dec);
    expect_eq(r.reg, 2, "reg");
    expect(!r.seminormal, "expected seminormal=false");
    const auto elements = dec.apery().elements();
    expect(std::find(elements.begin(), elements.end(), IntVec{4, 2, 0}) != elements.end(), "(4,2,0) not in B_A");
    bool in_gamma = false;
    for (auto t : r.gamma_indices)
      if (dec.classes()[t].residue.members == std::vector<IntVec>{{2, 2, 2}}) in_gamma = true;
    expect(in_gamma, "class {(2,2,2)} not in Gamma(B)");
    return std::string("reg=2, {(2,2,2)} attains it");
  });

  criterion(4, "d=4 alpha=2 seminormal example", 1.0, [] {
    const auto dec = semireg::decompose(fixtures::seminormal_4d());
    const auto r = semireg::regularity_of_semigroup(dec);
    expect(r.seminormal, "expected seminormal=true");
    auto s = invariants::box_class_structure(dec.apery());
    expect(s.empty(), "box class structure: " + s);
    s = invariants::monomial_support_structure(dec);
    expect(s.empty(), "support structure: " + s);
    bool dim_ok = false, deg_ok = false;
    for (const auto& b : r.bound_checks) {
      if (b.name == "reg <= dim - 1") dim_ok = b.satisfied && b.rhs == 3;
      if (b.name == "reg <= deg - codim") deg_ok = b.satisfied;
    }
    expect(dim_ok && deg_ok, "bounds reg <= 3 and reg <= f - c not recorded as satisfied");
    return "reg=" + show(r.reg) + " f=" + show(r.f) + " c=" + show(r.codim);
  });

  criterion(5, "Veronese closed form vs pipeline", 60.0, [] {
    for (std::int64_t d = 2; d <= 4; ++d)
      for (std::int64_t a = 2; a <= 4; ++a) {
        const auto r = semireg::regularity_of_semigroup(semireg::veronese_presentation({d, a}));
        const auto tag = "B_{" + show(d) + "," + show(a) + "}";
        expect_eq(r.reg, d - (d + a - 1) / a, tag + " reg vs floor(d - d/alpha)");
        expect_eq(r.reg, semireg::veronese_regularity({d, a}), tag + " reg vs closed form");
        expect(semireg::BigInt(static_cast<long>(r.f)) == semireg::veronese_deg_codim({d, a}).degree,
               tag + " f vs alpha^(d-1)");
      }
    return std::string("9 pairs");
  });

  criterion(6, "B_{20,2} closed forms, pipeline refused", 10.0, [] {
    expect_eq(semireg::veronese_regularity({20, 2}), 10, "reg");
    const auto dc = semireg::veronese_deg_codim({20, 2});
    expect(dc.degree - dc.codim == 524098, "deg - codim = " + dc.degree.get_str());
    expect_eq(cli_status("veronese 20 2"), 0, "closed-form exit status");
    expect_eq(cli_status("veronese 20 2 --pipeline"), 3, "pipeline exit status");
    return std::string("reg=10 deg-codim=524098, pipeline exit 3");
  });

  criterion(7, "Betti engine goldens", 1.0, [] {
    using semireg::minimalize;
    expect_eq(semireg::regularity(minimalize(2, {{1, 0}, {0, 1}})), 1, "reg(y1,y2)");
    expect_eq(semireg::regularity(minimalize(4, {{1, 1, 0, 0}, {0, 0, 1, 1}})), 3, "reg(y1y2,y3y4)");
    expect_eq(semireg::regularity(minimalize(3, {{1, 1, 0}, {0, 0, 1}})), 2, "reg(ykyl,ym)");
    expect_eq(semireg::regularity(minimalize(3, {{1, 1, 0}, {1, 0, 1}, {0, 1, 1}})), 2, "reg(ykyl,ykym,ylym)");
    expect_eq(semireg::regularity(minimalize(3, {{0, 0, 0}})), 0, "reg(unit)");
    return std::string("5 goldens");
  });

  criterion(8, "oracle suite", 300.0, [] {
    const auto presentations = corpus();
    for (const auto& p : presentations) {
      const auto apery = semireg::apery_set(p);
      const auto elements = apery.elements();
      expect(semireg::oracle::apery_oracle(p) == std::set<IntVec>(elements.begin(), elements.end()),
             "apery oracle disagrees");
      expect_eq(semireg::oracle::reduction_oracle(p), semireg::reduction_number(apery), "reduction oracle");
      expect(semireg::oracle::normality_oracle(p) == semireg::is_normal(apery), "normality oracle disagrees");
    }
    std::mt19937_64 rng(kCorpusSeed);
    for (std::size_t k = 0; k < kIdealCount; ++k) {
      const auto ideal = semireg::random_monomial_ideal(rng);
      const auto outcome = semireg::verify_betti(ideal);
      expect(outcome.passed, "Betti oracle on " + semireg::to_string(ideal) + ": " + outcome.detail);
    }
    return show(presentations.size()) + " presentations, " + show(kIdealCount) + " ideals";
  });

  criterion(9, "property suite", 300.0, [] {
    std::size_t seminormal = 0, ideals = 0;
    for (const auto& p : corpus()) {
      const auto dec = semireg::decompose(p);
      const auto r = semireg::regularity_of_semigroup(dec);
      const auto fc = static_cast<std::int64_t>(r.f - r.codim);
      expect(r.red <= r.reg, "red > reg");
      expect(r.red <= fc, "red > f - c");
      for (std::size_t t = 0; t < dec.f(); ++t) {
        const auto& ideal = dec.classes()[t].ideal;
        if (ideal.is_unit()) continue;
        ++ideals;
        const auto bound = semireg::supp_and_var(ideal).var - static_cast<std::int64_t>(semireg::height(ideal)) + 1;
        expect(r.classes[t].ideal_regularity <= bound, "reg I_t > var - height + 1 on " + semireg::to_string(ideal));
      }
      if (!r.seminormal) continue;
      ++seminormal;
      const auto d = static_cast<std::int64_t>(r.dim);
      expect(r.reg <= std::min(d - 1, fc), "seminormal reg > min(d-1, f-c)");
      for (const auto& c : dec.classes()) {
        if (c.ideal.is_unit()) continue;
        expect(semireg::is_squarefree(c.ideal), "seminormal I_t not squarefree");
        expect(semireg::supp_and_var(c.ideal).var <= d - 1 - c.residue.shift_degree, "var(I_t) > d - 1 - deg h_t");
      }
      if (d <= 3) expect(r.cohen_macaulay, "seminormal d <= 3 but not CM");
      if (d <= 5) expect(r.reg == r.red, "seminormal d <= 5 but reg != red");
    }
    return show(ideals) + " proper ideals, " + show(seminormal) + " seminormal";
  });

  criterion(10, "star-sequence suite", 300.0, [] {
    std::size_t sequences = 0, pairs = 0;
    for (const auto& p : corpus()) {
      const auto apery = semireg::apery_set(p);
      const auto layers = semireg::LayeredMembership::build(p, apery.max_degree());
      const auto s = invariants::star_sequence_structure(apery, layers, 100, &sequences);
      expect(s.empty(), s);
    }
    const auto p = fixtures::seminormal_4d();
    const auto apery = semireg::apery_set(p);
    const auto layers = semireg::LayeredMembership::build(p, apery.max_degree());
    const auto w = invariants::alpha_coordinate_witness(apery, layers, &pairs);
    expect(w.empty(), w);
    expect(pairs > 0, "no coordinates equal to alpha in the d=4 example");
    return show(sequences) + " sequences, " + show(pairs) + " witnessed (x, J)";
  });

  std::printf("%s: %d criterion(s) failed\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}
