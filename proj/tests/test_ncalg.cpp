#include <catch2/catch_amalgamated.hpp>
#include <random>
#include <set>

#include "qalg/manin.hpp"

using namespace qalg;

namespace {

Poly x(const MatrixCtx& c, int i, int j) {
  return Poly::generator(c.id(i, j), LocScalar::one());
}

Poly random_poly(std::mt19937_64& rng, const MatrixCtx& ctx, int max_deg = 2,
                 int max_terms = 3) {
  std::uniform_int_distribution<int> nterms(1, max_terms);
  std::uniform_int_distribution<int> deg(0, max_deg);
  std::uniform_int_distribution<int> gen(0, ctx.count() - 1);
  std::uniform_int_distribution<long> coef(-3, 3);
  std::uniform_int_distribution<long> qexp(-1, 1);
  Poly p;
  int k = nterms(rng);
  for (int t = 0; t < k; ++t) {
    Word w;
    int d = deg(rng);
    for (int i = 0; i < d; ++i) w.push_back(static_cast<GenId>(gen(rng)));
    p.add_term(std::move(w),
               LocScalar(Laurent::monomial(Rat(coef(rng)), qexp(rng))));
  }
  return p;
}

// Enumerates all length-d words over g generators, calling f on each.
template <class F>
void for_all_words(int g, int d, F&& f) {
  Word w(static_cast<size_t>(d), 0);
  for (;;) {
    f(w);
    int i = d - 1;
    while (i >= 0 && w[i] == g - 1) w[i--] = 0;
    if (i < 0) return;
    ++w[i];
  }
}

size_t count_sorted_words(int g, int d) {
  // multisets of size d from g symbols
  Rat r = binomial(static_cast<unsigned long>(g + d - 1),
                   static_cast<unsigned long>(d));
  return static_cast<size_t>(r.get_num().get_si());
}

}  // namespace

TEST_CASE("manin presentation rule counts") {
  // Oracle: every unordered generator pair carries exactly one oriented rule.
  for (auto [m, n] : {std::pair{2, 2}, {1, 1}, {1, 2}, {3, 3}, {2, 3}}) {
    MatrixCtx ctx(m, n);
    size_t pairs = static_cast<size_t>(ctx.count()) * (ctx.count() - 1) / 2;
    CHECK(manin_presentation(ctx).rule_count() == pairs);
  }
  CHECK(manin_presentation(MatrixCtx(2, 2)).rule_count() == 6);
  CHECK(manin_presentation(MatrixCtx(1, 1)).rule_count() == 0);
}

TEST_CASE("manin relations orient as expected") {
  MatrixCtx ctx(1, 2);
  Pres pres = manin_presentation(ctx);
  REQUIRE(pres.rule_count() == 1);
  // x[1,2] x[1,1] -> q^-1 x[1,1] x[1,2]
  Poly expect;
  expect.add_term({ctx.id(1, 1), ctx.id(1, 2)}, ctx.qval(-1));
  CHECK(pres.normal_form(x(ctx, 1, 2) * x(ctx, 1, 1)) == expect);
}

TEST_CASE("normal forms in the 2x2 algebra") {
  MatrixCtx ctx(2, 2);
  Pres pres = manin_presentation(ctx);
  const LocScalar q = ctx.qval(1), qi = ctx.qval(-1);

  SECTION("row relation") {
    Poly got = pres.normal_form(x(ctx, 1, 2) * x(ctx, 1, 1));
    CHECK(got == (x(ctx, 1, 1) * x(ctx, 1, 2)).scaled(qi));
  }
  SECTION("diagonal relation") {
    Poly got = pres.normal_form(x(ctx, 2, 2) * x(ctx, 1, 1));
    Poly expect = x(ctx, 1, 1) * x(ctx, 2, 2) -
                  (x(ctx, 1, 2) * x(ctx, 2, 1)).scaled(q - qi);
    CHECK(got == expect);
  }
  SECTION("already normal") {
    CHECK(pres.normal_form(x(ctx, 1, 1)) == x(ctx, 1, 1));
  }
  SECTION("commutators") {
    CHECK(pres.commutator(x(ctx, 1, 1), x(ctx, 2, 2)) ==
          (x(ctx, 1, 2) * x(ctx, 2, 1)).scaled(q - qi));
    CHECK(pres.commutator(x(ctx, 1, 1), x(ctx, 2, 1)) ==
          (x(ctx, 1, 1) * x(ctx, 2, 1)).scaled(LocScalar::one() - qi));
    CHECK(pres.commutator(x(ctx, 1, 2), x(ctx, 1, 2)).is_zero());
  }
  SECTION("unit is neutral") {
    Poly one = Poly::scalar(LocScalar::one());
    Poly p = x(ctx, 2, 1) * x(ctx, 1, 2);
    CHECK(pres.nf_product(one, p) == pres.normal_form(p));
  }
}

TEST_CASE("confluence of the manin systems") {
  for (auto [m, n] :
       {std::pair{1, 1}, {1, 3}, {2, 2}, {2, 3}, {3, 2}, {3, 3}}) {
    MatrixCtx ctx(m, n);
    auto rep = manin_presentation(ctx).check_confluence();
    INFO("m=" << m << " n=" << n);
    CHECK(rep.ok());
    // Oracle: one overlap per strictly descending generator triple.
    size_t g = static_cast<size_t>(ctx.count());
    size_t triples = g * (g - 1) * (g - 2) / 6;
    CHECK(rep.overlaps_checked == triples);
  }
}

TEST_CASE("confluence under the inverted q convention") {
  auto rep = manin_presentation(MatrixCtx(3, 3, QConv::inverted))
                 .check_confluence();
  CHECK(rep.ok());
}

TEST_CASE("single-rule toy systems") {
  // xy -> yx + x on two generators x < y: orient as (y x) -> (x y) - x.
  Presentation<LocScalar> pres(2);
  Poly rep;
  rep.add_term({0, 1}, LocScalar::one());
  rep.add_term({0}, -LocScalar::one());
  pres.add_rule(1, 0, std::move(rep));
  auto r = pres.check_confluence();
  CHECK(r.ok());
  CHECK(r.overlaps_checked == 0);

  // A genuinely non-confluent system is reported, not patched.
  Presentation<LocScalar> bad(3);
  Poly toB;
  toB.add_term({1}, LocScalar::one());
  Poly toA;
  toA.add_term({0}, LocScalar::one());
  bad.add_rule(2, 1, toA);  // cb -> a ... paired with
  bad.add_rule(1, 0, toA);  // ba -> a
  bad.add_rule(2, 0, toB);  // ca -> b
  auto rb = bad.check_confluence();
  CHECK_FALSE(rb.ok());
}

TEST_CASE("PBW monomials at low degree") {
  for (auto [m, n] : {std::pair{2, 2}, {2, 3}, {3, 3}}) {
    MatrixCtx ctx(m, n);
    Pres pres = manin_presentation(ctx);
    int g = ctx.count();
    for (int d = 0; d <= 3; ++d) {
      std::set<Word> nf_monomials;
      for_all_words(g, d, [&](const Word& w) {
        Poly nf = pres.normal_form(Poly::word(w, LocScalar::one()));
        for (const auto& [t, c] : nf.terms()) {
          CHECK(is_sorted_word(t));
          if (t.size() == w.size()) nf_monomials.insert(t);
        }
      });
      // Every sorted word appears and nothing else: the count matches the
      // commutative monomial count.
      CHECK(nf_monomials.size() == count_sorted_words(g, d));
    }
  }
}

TEST_CASE("associativity spot check") {
  MatrixCtx ctx(2, 2);
  Pres pres = manin_presentation(ctx);
  std::mt19937_64 rng(424242);
  for (int trial = 0; trial < 40; ++trial) {
    Poly p = random_poly(rng, ctx), r = random_poly(rng, ctx),
         s = random_poly(rng, ctx);
    CHECK(pres.nf_product(pres.nf_product(p, r), s) ==
          pres.nf_product(p, pres.nf_product(r, s)));
  }
}

TEST_CASE("termination guard") {
  MatrixCtx ctx(3, 3);
  Pres pres = manin_presentation(ctx);
  Poly w = Poly::word({8, 7, 6, 5, 4, 3, 2, 1, 0}, LocScalar::one());
  CHECK_THROWS_AS(pres.normal_form(w, 3), StepBudgetExceeded);
  CHECK_NOTHROW(pres.normal_form(w));
}

TEST_CASE("chi coordinates") {
  MatrixCtx ctx = MatrixCtx::square(2);
  Pres manin = manin_presentation(ctx);

  SECTION("coordinate change round-trips") {
    std::mt19937_64 rng(5150);
    for (int trial = 0; trial < 50; ++trial) {
      Poly p = random_poly(rng, ctx);
      CHECK(x_to_chi(chi_to_x(p, ctx), ctx) == p);
      CHECK(chi_to_x(x_to_chi(p, ctx), ctx) == p);
    }
  }
  SECTION("derived chi rules") {
    Pres chi = chi_presentation(ctx, manin);
    CHECK(chi.rule_count() == 6);
    // chi12 chi11 -> q^-1 chi11 chi12 - q^-1 chi12, from
    // x11 x12 = q x12 x11 rewritten through x = delta + (q-1) chi.
    Poly got = chi.normal_form(
        Poly::word({ctx.id(1, 2), ctx.id(1, 1)}, LocScalar::one()));
    Poly expect;
    expect.add_term({ctx.id(1, 1), ctx.id(1, 2)}, ctx.qval(-1));
    expect.add_term({ctx.id(1, 2)}, -ctx.qval(-1));
    CHECK(got == expect);
  }
  SECTION("chi systems are confluent") {
    for (int n = 2; n <= 3; ++n) {
      MatrixCtx c = MatrixCtx::square(n);
      auto rep = chi_presentation(c, manin_presentation(c)).check_confluence();
      CHECK(rep.ok());
    }
  }
}
