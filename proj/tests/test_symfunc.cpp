#include <catch2/catch_amalgamated.hpp>

#include "gmsf/symfunc.hpp"

using namespace gmsf;

namespace {

Cf one() { return Cf(1L); }

SymFunc p1(int rank = 1, int D = 6) { return SymFunc::p(1, 1, rank, D); }

// Plain Hall pairing <p_la, p_mu> = delta z_la, enough to check the derivation adjoint.
Cf plain_hall(const SymFunc& f, const SymFunc& g) {
  Cf s(0L);
  for (const auto& [i, c] : f.terms()) {
    Cf d = g.coeff(i);
    if (!d.is_zero()) s += c * d * Cf(Rat(i.pows[0].z_order()));
  }
  return s;
}

}  // namespace

TEST_CASE("power sum ring arithmetic and truncation") {
  SymFunc a = p1() * p1();
  PowIndex i11{{Partition{1, 1}}};
  CHECK(a.coeff(i11) == Cf(1L));
  CHECK(a.terms().size() == 1);

  SymFunc s2 = SymFunc::p(1, 1, 2, 4) + SymFunc::p(1, 2, 2, 4);
  SymFunc sq = s2 * s2;
  CHECK(sq.coeff(PowIndex{{Partition{1, 1}, Partition{}}}) == Cf(1L));
  CHECK(sq.coeff(PowIndex{{Partition{1}, Partition{1}}}) == Cf(2L));
  CHECK(sq.coeff(PowIndex{{Partition{}, Partition{1, 1}}}) == Cf(1L));

  SymFunc p2 = SymFunc::p(2, 1, 1, 3);
  CHECK((p2 * p2).is_zero());
  SymFunc mix = (p1(1, 3) + p2) * (p1(1, 3) + p2);
  CHECK(mix.coeff(PowIndex{{Partition{2, 1}}}) == Cf(2L));
  CHECK(mix.coeff(PowIndex{{Partition{2, 2}}}).is_zero());

  CHECK(mix.with_degree(2).max_degree() == 2);
  CHECK((a - a).is_zero());
  CHECK(a.scaled(Cf(-3L)).coeff(i11) == Cf(-3L));
  CHECK(SymFunc::p(5, 1, 1, 4).is_zero());

  CHECK_THROWS_AS(p1() * SymFunc::one(2, 6), RankMismatch);
  CHECK_THROWS_AS(SymFunc::p(1, 3, 2, 4), RankMismatch);
}

TEST_CASE("partial derivatives of power sums") {
  SymFunc f = p1() * p1();
  CHECK(f.pderiv(1) == p1().scaled(Cf(2L)));
  CHECK(SymFunc::p(2, 1, 1, 6).pderiv(1).is_zero());

  SymFunc g = SymFunc::p(1, 1, 1, 6) * SymFunc::p(2, 1, 1, 6) * SymFunc::p(2, 1, 1, 6);
  SymFunc dg = g.pderiv(2);
  CHECK(dg.coeff(PowIndex{{Partition{2, 1}}}) == Cf(2L));
  CHECK(dg.terms().size() == 1);

  // alphabet selector
  SymFunc h = SymFunc::p(1, 1, 2, 6) * SymFunc::p(1, 2, 2, 6);
  CHECK(h.pderiv(1, 2) == SymFunc::p(1, 1, 2, 6));
  CHECK_THROWS_AS(h.pderiv(1, 3), RankMismatch);

  // <p_k f, g> = <f, k d/dp_k g> for the plain Hall pairing
  Cf q = q_pow(1), t = t_pow(1);
  std::vector<SymFunc> pool = {
      p1(), SymFunc::p(2, 1, 1, 6), p1() * p1(), p1().scaled(q) + SymFunc::p(3, 1, 1, 6).scaled(t),
      SymFunc::one(1, 6) + p1() * SymFunc::p(2, 1, 1, 6)};
  for (int k = 1; k <= 3; ++k)
    for (const SymFunc& f2 : pool)
      for (const SymFunc& g2 : pool) {
        SymFunc pkf = SymFunc::p(k, 1, 1, 6) * f2;
        CHECK(plain_hall(pkf, g2) == Cf(static_cast<long>(k)) * plain_hall(f2, g2.pderiv(k)));
      }
}

TEST_CASE("virtual alphabets supply power sums") {
  Cf y = Cf::sym("y");
  VirtualAlphabet single = VirtualAlphabet::single_letter(y);
  CHECK(single.pk(3) == y.pow(3));

  VirtualAlphabet two = VirtualAlphabet::letters({{one(), y}, {Cf(-2L), y.pow(2)}});
  CHECK(two.pk(2) == y.pow(2) - Cf(2L) * y.pow(4));
  CHECK(two.negated().pk(2) == Cf(2L) * y.pow(4) - y.pow(2));
  CHECK(two.scaled_letters(y).pk(2) == y.pow(4) - Cf(2L) * y.pow(6));
  CHECK((single + two.negated()).pk(5) == Cf(2L) * y.pow(10));

  VirtualAlphabet tail = VirtualAlphabet::from_tail([](int k) { return q_pow(k); }, 4);
  CHECK(tail.pk(4) == q_pow(4));
  CHECK_THROWS_AS(tail.pk(5), TailUndefined);
  CHECK(tail.negated().pk(2) == -q_pow(2));
  CHECK(tail.scaled_letters(y).pk(3) == y.pow(3) * q_pow(3));
  CHECK_THROWS_AS(single.pk(0), std::invalid_argument);
}

TEST_CASE("plethystic evaluation is a ring homomorphism") {
  Cf y = Cf::sym("y");
  VirtualAlphabet A = VirtualAlphabet::letters({{one(), y}, {q_pow(1), y.inv()}});
  VirtualAlphabet B = VirtualAlphabet::from_tail([](int k) { return t_pow(k) / (Cf(1L) - t_pow(k)); });

  // ceilings large enough that products are not truncated
  std::vector<SymFunc> pool = {
      p1(1, 8), SymFunc::p(2, 1, 1, 8), p1(1, 8) * p1(1, 8) + SymFunc::p(3, 1, 1, 8).scaled(q_pow(1)),
      SymFunc::one(1, 8).scaled(t_pow(1)) + SymFunc::p(4, 1, 1, 8)};
  for (const SymFunc& f : pool)
    for (const SymFunc& g : pool) {
      CHECK(plethystic_eval(f * g, {A}) == plethystic_eval(f, {A}) * plethystic_eval(g, {A}));
      CHECK(plethystic_eval(f + g, {B}) == plethystic_eval(f, {B}) + plethystic_eval(g, {B}));
    }

  SymFunc h = SymFunc::p(1, 1, 2, 4) * SymFunc::p(2, 2, 2, 4);
  CHECK(plethystic_eval(h, {A, B}) == A.pk(1) * B.pk(2));
  CHECK_THROWS_AS(plethystic_eval(h, {A}), RankMismatch);

  CHECK(plethystic_eval(SymFunc::one(1, 4), {A}) == one());
}

TEST_CASE("translation substitutes shifted power sums") {
  Cf c = Cf::sym("a");
  VirtualAlphabet A = VirtualAlphabet::single_letter(c);

  CHECK(translate(p1(), 1, A) == p1() + SymFunc::constant(1, 6, c));

  SymFunc p2 = SymFunc::p(2, 1, 1, 6);
  CHECK(translate(p2, 1, A) == p2 + SymFunc::constant(1, 6, c.pow(2)));

  // rank 2: only the chosen alphabet is shifted
  SymFunc h = SymFunc::p(1, 1, 2, 6) * SymFunc::p(1, 2, 2, 6);
  SymFunc ht = translate(h, 2, A);
  CHECK(ht == h + SymFunc::p(1, 1, 2, 6).scaled(c));

  // the shift produced by the annihilation half of a vertex operator:
  // p_k -> p_k - (1-q^k) z^{-k}
  Cf z = Cf::sym("z");
  VirtualAlphabet V = VirtualAlphabet::letters({{Cf(-1L), z.inv()}, {one(), q_pow(1) * z.inv()}});
  Cf a1 = -(one() - q_pow(1)) * z.inv();
  CHECK(V.pk(1) == a1);
  SymFunc f = p1() * p1();
  SymFunc expect = f + p1().scaled(Cf(2L) * a1) + SymFunc::constant(1, 6, a1 * a1);
  CHECK(translate(f, 1, V) == expect);

  // second-order expansion of exp(sum_k a_k d/dp_k) gives the same result
  SymFunc series = f + f.pderiv(1).scaled(a1) + f.pderiv(1).pderiv(1).scaled(a1 * a1 * Cf(Rat(1, 2)));
  CHECK(translate(f, 1, V) == series);

  // translation is multiplicative
  SymFunc g = p2 + p1();
  CHECK(translate(f * g, 1, V) == translate(f, 1, V) * translate(g, 1, V));
}

TEST_CASE("monomial basis transitions") {
  CHECK(m_to_p(Partition{}) == SymFunc::one(1, 0));
  CHECK(m_to_p(Partition{1}) == p1(1, 1));

  // m_11 = (p_1^2 - p_2)/2
  SymFunc m11 = m_to_p(Partition{1, 1});
  SymFunc expect = (p1(1, 2) * p1(1, 2) - SymFunc::p(2, 1, 1, 2)).scaled(Cf(Rat(1, 2)));
  CHECK(m11 == expect);

  CHECK(m_to_p(Partition{2}) == SymFunc::p(2, 1, 1, 2));
  CHECK(m_to_p(Partition{2, 1}) ==
        SymFunc::p(2, 1, 1, 3) * p1(1, 3) - SymFunc::p(3, 1, 1, 3));

  // p_1^2 = m_2 + 2 m_11
  auto back = p_to_m(p1(1, 2) * p1(1, 2), 2);
  CHECK(back.size() == 2);
  CHECK(back.at(Partition{2}) == one());
  CHECK(back.at(Partition{1, 1}) == Cf(2L));

  for (int d = 0; d <= 5; ++d)
    for (const Partition& la : partitions_of(d)) {
      auto m = p_to_m(m_to_p(la), d);
      REQUIRE(m.size() == 1);
      CHECK(m.begin()->first == la);
      CHECK(m.begin()->second == one());
    }

  CHECK_THROWS_AS(p_to_m(SymFunc::one(2, 2), 1), RankMismatch);
}

TEST_CASE("symmetric function JSON round trip") {
  Cf q = q_pow(1), t = t_pow(1);
  SymFunc f = SymFunc::p(1, 1, 2, 4).scaled(q / (one() - t)) +
              SymFunc::p(2, 2, 2, 4) * SymFunc::p(1, 1, 2, 4) + SymFunc::one(2, 4).scaled(Cf(-7L));
  Json j = symfunc_to_json(f);
  CHECK(j.at("rank") == 2);
  CHECK(j.at("degree") == 4);
  std::vector<int> idmap = idmap_from_json(symbols_json());
  SymFunc g = symfunc_from_json(j, idmap);
  CHECK(g == f);
  CHECK(g.degree() == f.degree());
}
