#include <catch2/catch_amalgamated.hpp>

#include "gmsf/coeff.hpp"
#include "gmsf/json_io.hpp"

using namespace gmsf;

namespace {

std::vector<Rat> sample_point(std::mt19937_64& rng) {
  std::vector<Rat> a(static_cast<size_t>(Symbols::count()));
  for (auto& v : a) v = random_rat(rng);
  return a;
}

Cf random_coeff(std::mt19937_64& rng, int nterms = 3) {
  std::uniform_int_distribution<int> de(-2, 3);
  std::uniform_int_distribution<long> dc(-9, 9);
  auto rand_poly = [&] {
    Poly p;
    for (int i = 0; i < nterms; ++i) {
      Expvec e(4, 0);
      for (auto& x : e) x = de(rng);
      p.add_term(e, Rat(dc(rng)));
    }
    return p;
  };
  Poly den = rand_poly();
  while (den.is_zero()) den = rand_poly();
  return Cf(rand_poly(), den);
}

}  // namespace

TEST_CASE("graded-lex order") {
  Expvec a{1, 0}, b{0, 1}, c{2};
  GrlexLess lt;
  CHECK(lt(a, c));
  CHECK(lt(b, c));
  CHECK(lt(b, a));  // ties break lexicographically: earlier symbols rank higher
  CHECK_FALSE(lt(a, b));
  CHECK_FALSE(lt(a, a));
  Expvec neg{-1};
  CHECK(lt(neg, a));
  CHECK(lt(neg, Expvec{}));
}

TEST_CASE("polynomial ring basics") {
  Cf q = q_param(), t = t_param(), one(1L);
  CHECK((q - t) * (q + t) == q * q - t * t);
  CHECK((one - q).pow(2) == one - Cf(2L) * q + q * q);
  CHECK((q * t).pow(0) == one);
  CHECK(-(q - t) == t - q);
  CHECK((q - q).is_zero());
}

TEST_CASE("fraction field axioms at random values") {
  std::mt19937_64 rng(20260814);
  q_param();
  t_param();
  Cf::sym("u1");
  Cf::sym("u2");
  for (int it = 0; it < 20; ++it) {
    Cf x = random_coeff(rng), y = random_coeff(rng), z = random_coeff(rng);
    CHECK(x + y == y + x);
    CHECK((x + y) + z == x + (y + z));
    CHECK(x * (y + z) == x * y + x * z);
    if (!x.is_zero()) {
      CHECK(x * x.inv() == Cf(1L));
      CHECK((y / x) * x == y);
    }
  }
}

TEST_CASE("division by zero is rejected") {
  Cf q = q_param();
  CHECK_THROWS_AS(q / Cf(0L), DivisionByZero);
  CHECK_THROWS_AS(Cf(0L).inv(), DivisionByZero);
  CHECK_THROWS_AS(Cf(Poly::constant(1), Poly::zero()), DivisionByZero);
}

TEST_CASE("equality is cross-multiplied, not representational") {
  Cf q = q_param(), one(1L);
  Cf a = (one - q * q) / (one + q);
  CHECK(a == one - q);
  Cf b = (one - q).inv() - one;
  CHECK(b == q / (one - q));
}

TEST_CASE("lightweight reduction cancels monomials and unit denominators") {
  Cf q = q_param(), t = t_param();
  Cf r = (q * t) / (q * q);
  CHECK(r == t / q);
  CHECK(r.den().is_constant());  // q^2 is a unit in the Laurent ring
  Cf s = (q * q - q * t) / q;
  CHECK(s.den().is_constant());
  CHECK(s == q - t);
}

TEST_CASE("exact quotient collapse") {
  Cf q = q_param(), t = t_param(), one(1L);
  Cf r = ((one - q) * (one - t)) / (one - q);
  CHECK(r.den().is_constant());
  CHECK(r == one - t);
}

TEST_CASE("factored arithmetic cancels shared factors") {
  Cf q = q_param(), t = t_param(), one(1L);
  // built through arithmetic: shared factors cancel exactly, no expansion survives
  Cf reduced = ((one - q) * (one - t) * (one + q + t)) / ((one - q) * (one - q * t) * (one + q + t));
  CHECK(reduced == (one - t) / (one - q * t));
  // canonical expanded view signs the denominator's leading monomial positive
  CHECK(reduced.num() == (t - one).num());
  CHECK(reduced.den() == (q * t - one).num());
  // fed as opaque pre-expanded polynomials the value is still right
  Poly n = ((one - q) * (one - t) * (one + q + t)).num();
  Poly d = ((one - q) * (one - q * t) * (one + q + t)).num();
  CHECK(Cf(n, d) == (one - t) / (one - q * t));
}

TEST_CASE("evaluation commutes with arithmetic") {
  std::mt19937_64 rng(7);
  for (int it = 0; it < 12; ++it) {
    Cf x = random_coeff(rng), y = random_coeff(rng);
    auto pt = sample_point(rng);
    try {
      Rat lhs = (x * y + x).eval(pt);
      Rat rhs = x.eval(pt) * y.eval(pt) + x.eval(pt);
      CHECK(lhs == rhs);
    } catch (const EvaluationPole&) {
      // Random denominators may vanish at the sample; the policy sampler in verify
      // rejects such points, here we simply skip them.
    }
  }
}

TEST_CASE("evaluation pole detection") {
  Cf q = q_param(), one(1L);
  std::vector<Rat> pt(static_cast<size_t>(Symbols::count()), Rat(1));
  CHECK_THROWS_AS((one / (one - q)).eval(pt), EvaluationPole);
}

TEST_CASE("negative exponents evaluate as inverses") {
  Cf g = gamma_param();
  std::vector<Rat> pt(static_cast<size_t>(Symbols::count()), Rat(1));
  pt[static_cast<size_t>(Symbols::id("s_q"))] = Rat(2);
  pt[static_cast<size_t>(Symbols::id("s_t"))] = Rat(3);
  CHECK(g.eval(pt) == Rat(9, 4));
  CHECK(g.pow(-2).eval(pt) == Rat(16, 81));
}

TEST_CASE("parameter aliases") {
  CHECK(q1_param() * q2_param() * q3_param() == Cf(1L));
  CHECK(gamma_param() * gamma_param() == q3_param());
  CHECK(q1_param() == t_param().inv());
}

TEST_CASE("coefficient json round-trip") {
  Cf q = q_param(), t = t_param(), one(1L);
  Cf c = (one - q * t.pow(-1)) / (one + Cf(Rat(3, 7)) * q);
  Json j = coeff_to_json(c);
  std::vector<int> idmap;
  for (int i = 0; i < Symbols::count(); ++i) idmap.push_back(i);
  Cf back = coeff_from_json(j, idmap);
  CHECK(back == c);
  CHECK(j.at("num").is_array());
  CHECK(j.at("num")[0].back().is_string());
}

TEST_CASE("printing uses q and t for even square-root powers") {
  Cf q = q_param(), one(1L);
  CHECK((one - q).str() == "-q + 1");
  CHECK(gamma_param().str().find("s_t") != std::string::npos);
}

TEST_CASE("term budget aborts oversized products") {
  Cf q = q_param(), t = t_param(), one(1L);
  Poly big = (one + q + t + q * t + q * q).num();
  std::size_t old = term_budget().exchange(4);
  CHECK_THROWS_AS(big * big, BudgetExceeded);
  term_budget().store(old);
}
