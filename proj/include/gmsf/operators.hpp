#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gmsf/macdonald.hpp"

// Linear operators on the truncated rings: Heisenberg modes and current modes of the
// horizontal Fock action, exponential multiplication/derivation blocks, the grading
// scaling, the alphabet twist, and closed-form matrix elements (vertex operators,
// vacuum transfer).

namespace gmsf {

// A linear map on SymFunc of a fixed rank.  `shift` is the definite change in total
// degree when the operator is graded; mixed-degree operators carry no shift.
// Composition multiplies maps and adds shifts.
class GradedOperator {
 public:
  using ApplyFn = std::function<SymFunc(const SymFunc&)>;

  GradedOperator(int rank, std::optional<int> shift, ApplyFn fn)
      : rank_(rank), shift_(shift), fn_(std::move(fn)) {
    if (rank_ < 1) throw RankMismatch("rank must be >= 1");
    if (!fn_) throw std::invalid_argument("operator needs an apply function");
  }

  static GradedOperator identity(int rank) {
    return GradedOperator(rank, 0, [](const SymFunc& f) { return f; });
  }
  static GradedOperator scalar(int rank, const Cf& c) {
    return GradedOperator(rank, 0, [c](const SymFunc& f) { return f.scaled(c); });
  }

  int rank() const { return rank_; }
  std::optional<int> shift() const { return shift_; }

  SymFunc operator()(const SymFunc& f) const {
    if (f.rank() != rank_) throw RankMismatch();
    return fn_(f);
  }

  GradedOperator scaled(const Cf& c) const {
    auto fn = fn_;
    return GradedOperator(rank_, shift_, [fn, c](const SymFunc& f) { return fn(f).scaled(c); });
  }

  // composition: a then-after b (b applies first)
  friend GradedOperator operator*(const GradedOperator& a, const GradedOperator& b) {
    if (a.rank_ != b.rank_) throw RankMismatch();
    std::optional<int> s;
    if (a.shift_ && b.shift_) s = *a.shift_ + *b.shift_;
    auto fa = a.fn_, fb = b.fn_;
    return GradedOperator(a.rank_, s, [fa, fb](const SymFunc& f) { return fa(fb(f)); });
  }

  friend GradedOperator operator+(const GradedOperator& a, const GradedOperator& b) {
    if (a.rank_ != b.rank_) throw RankMismatch();
    std::optional<int> s;
    if (a.shift_ && b.shift_ && *a.shift_ == *b.shift_) s = a.shift_;
    auto fa = a.fn_, fb = b.fn_;
    return GradedOperator(a.rank_, s, [fa, fb](const SymFunc& f) { return fa(f) + fb(f); });
  }
  friend GradedOperator operator-(const GradedOperator& a, const GradedOperator& b) {
    return a + b.scaled(Cf(-1L));
  }

 private:
  int rank_;
  std::optional<int> shift_;
  ApplyFn fn_;
};

inline GradedOperator commutator(const GradedOperator& a, const GradedOperator& b) {
  return a * b - b * a;
}

// Weights u_1..u_r attached to the alphabets; all entries nonzero.
class WeightVector {
 public:
  explicit WeightVector(std::vector<Cf> u) : u_(std::move(u)) {
    if (u_.empty()) throw RankMismatch("at least one weight");
    for (const auto& x : u_)
      if (x.is_zero()) throw std::invalid_argument("weights must be nonzero");
  }
  WeightVector(std::initializer_list<Cf> u) : WeightVector(std::vector<Cf>(u)) {}

  static WeightVector symbols(int r, const std::string& prefix = "u") {
    if (r < 1) throw RankMismatch("rank must be >= 1");
    std::vector<Cf> u;
    for (int a = 1; a <= r; ++a) u.push_back(Cf::sym(prefix + std::to_string(a)));
    return WeightVector(std::move(u));
  }

  int rank() const { return static_cast<int>(u_.size()); }
  const Cf& u(int alpha) const {
    if (alpha < 1 || alpha > rank()) throw RankMismatch("weight index out of range");
    return u_[static_cast<std::size_t>(alpha - 1)];
  }
  const std::vector<Cf>& entries() const { return u_; }

  // r = 2 shorthand u_1/u_2.
  Cf Q() const {
    if (rank() != 2) throw RankMismatch("Q is the two-alphabet weight ratio");
    return u_[0] / u_[1];
  }

  // some ratio u_alpha/u_beta equals q^a t^b with |a|,|b| <= degree
  bool resonant(int degree) const {
    for (int al = 1; al <= rank(); ++al)
      for (int be = al + 1; be <= rank(); ++be) {
        Cf ratio = u(al) / u(be);
        for (int a = -degree; a <= degree; ++a)
          for (int b = -degree; b <= degree; ++b)
            if (ratio == q_pow(a) * t_pow(b)) return true;
      }
    return false;
  }

 private:
  std::vector<Cf> u_;
};

// --- exponential building blocks ---------------------------------------------------------

// sum_{i>=0} L^i / i! truncated to ceiling D; L must have no constant term.
inline SymFunc exp_series(const SymFunc& L, int D) {
  if (!L.constant_term().is_zero())
    throw std::invalid_argument("exponential series needs a vanishing constant term");
  SymFunc l = L.with_degree(D);
  SymFunc r = SymFunc::one(L.rank(), D), term = SymFunc::one(L.rank(), D);
  for (int i = 1; i <= D; ++i) {
    term = Cf(Rat(1, i)) * (term * l);
    if (term.is_zero()) break;
    r = r + term;
  }
  return r;
}

// Multiplication by exp(sum_{k>=1,alpha} c(k,alpha) p_k^{(alpha)}); mixed degree.
inline GradedOperator exp_multiplication(int rank, std::function<Cf(int, int)> c) {
  return GradedOperator(rank, std::nullopt, [rank, c](const SymFunc& f) {
    const int D = f.degree();
    SymFunc L = SymFunc::zero(rank, D);
    for (int k = 1; k <= D; ++k)
      for (int a = 1; a <= rank; ++a) {
        Cf ck = c(k, a);
        if (!ck.is_zero()) L = L + ck * SymFunc::p(k, a, rank, D);
      }
    return exp_series(L, D) * f;
  });
}

// exp(sum_{k>=1,alpha} d(k,alpha) d/dp_k^{(alpha)}): translation p_k += d(k,alpha).
inline GradedOperator exp_derivation(int rank, std::function<Cf(int, int)> d) {
  return GradedOperator(rank, std::nullopt, [rank, d](const SymFunc& f) {
    SymFunc g = f;
    for (int a = 1; a <= rank; ++a)
      g = translate(g, a, VirtualAlphabet::from_tail([d, a](int k) { return d(k, a); }));
    return g;
  });
}

// Diagonal in total degree: f_d -> base^d f_d.
inline GradedOperator grading_scale(int rank, const Cf& base) {
  return GradedOperator(rank, 0, [base](const SymFunc& f) {
    SymFunc r = SymFunc::zero(f.rank(), f.degree());
    for (int d = 0; d <= f.max_degree(); ++d) r = r + f.homogeneous(d).scaled(base.pow(d));
    return r;
  });
}

// Ring substitution p_k^{(beta)} -> repl(k) on one alphabet.  Grading is preserved
// when repl(k) is homogeneous of degree k.
inline SymFunc substitute_pk(const SymFunc& f, int beta,
                             const std::function<SymFunc(int)>& repl) {
  if (beta < 1 || beta > f.rank()) throw RankMismatch("alphabet index out of range");
  SymFunc out = SymFunc::zero(f.rank(), f.degree());
  for (const auto& [i, c] : f.terms()) {
    PowIndex j = i;
    j.pows[static_cast<std::size_t>(beta - 1)] = Partition{};
    SymFunc acc = SymFunc::zero(f.rank(), f.degree());
    acc.add_term(j, c);
    for (int k : i.pows[static_cast<std::size_t>(beta - 1)].parts()) acc = acc * repl(k);
    out = out + acc;
  }
  return out;
}

// --- Heisenberg and current modes ---------------------------------------------------------

// c_k = -(1/k)(1-q1^k)(1-q2^k)(1-q3^k).
inline Cf c_factor(int k) {
  if (k < 1) throw std::invalid_argument("c_factor needs k >= 1");
  return Cf(Rat(-1, k)) * (Cf(1L) - q1_pow(k)) * (Cf(1L) - q2_pow(k)) * (Cf(1L) - q3_pow(k));
}

// Heisenberg modes on r alphabets: positive modes differentiate with q3^{(alpha-1)k}
// weights, negative modes multiply by sum_alpha p_k^{(alpha)}/k; on the truncated space
// [rep_a(k,r), rep_a(-k,r)] = (gamma^{rk} - gamma^{-rk}) c_k.
inline GradedOperator rep_a(int k, int r) {
  if (k == 0) throw std::invalid_argument("zero mode excluded");
  if (r < 1) throw RankMismatch("rank must be >= 1");
  if (k > 0) {
    Cf pre = -gamma_half_pow(-r * k) * (Cf(1L) - q2_pow(k)) * (Cf(1L) - q3_pow(k));
    return GradedOperator(r, -k, [k, r, pre](const SymFunc& f) {
      SymFunc s = SymFunc::zero(r, f.degree());
      for (int a = 1; a <= r; ++a) s = s + q3_pow((a - 1) * k) * f.pderiv(k, a);
      return s.scaled(pre);
    });
  }
  const int m = -k;
  Cf pre = Cf(Rat(-1, m)) * gamma_half_pow(-r * m) * (Cf(1L) - q1_pow(m)) * (Cf(1L) - q3_pow(m));
  return GradedOperator(r, m, [m, r, pre](const SymFunc& f) {
    SymFunc s = SymFunc::zero(r, f.degree());
    for (int a = 1; a <= r; ++a) s = s + SymFunc::p(m, a, r, f.degree()) * f;
    return s.scaled(pre);
  });
}

// One mode of the raising/lowering currents on r alphabets at weights u: the z^{-k}
// coefficient, assembled per alphabet as (creation degree m) x (annihilation degree n)
// over m - n = -k.  Total degree shifts by -k for either sign.
inline GradedOperator rep_x_mode(int sign, int k, int r, const WeightVector& u) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +1 or -1");
  if (u.rank() != r) throw RankMismatch("one weight per alphabet");
  return GradedOperator(r, -k, [sign, k, r, u](const SymFunc& f) {
    const int D = f.degree();
    SymFunc res = SymFunc::zero(r, D);
    const int dmax = std::min(f.max_degree(), D);
    for (int al = 1; al <= r; ++al) {
      // creation half: z-power equals p-degree, so exp(L) carries it in the grading
      SymFunc L = SymFunc::zero(r, D);
      for (int j = 1; j <= D; ++j) {
        if (sign > 0) {
          Cf base = Cf(Rat(1, j)) * (Cf(1L) - q1_pow(j));
          Cf low = base * (Cf(1L) - q3_pow(j));
          for (int be = 1; be < al; ++be) L = L + low * SymFunc::p(j, be, r, D);
          L = L + base * SymFunc::p(j, al, r, D);
        } else {
          Cf c = Cf(Rat(-1, j)) * gamma_pow(r * j) * (Cf(1L) - q1_pow(j)) *
                 q3_pow(-(al - 1) * j);
          L = L + c * SymFunc::p(j, al, r, D);
        }
      }
      SymFunc E = exp_series(L, D);
      // annihilation half: coefficient of d/dp_j^{(be)}
      auto dcoef = [sign, r, al](int j, int be) -> Cf {
        if (sign > 0) return be == al ? -(Cf(1L) - q2_pow(j)) : Cf(0L);
        if (be < al) return Cf(0L);
        Cf c = q3_pow(j) * gamma_pow(-r * j) * (Cf(1L) - q2_pow(j));
        if (be == al) return c * q3_pow((al - 1) * j);
        return c * (Cf(1L) - q3_pow(-j)) * q3_pow((be - 1) * j);
      };
      Cf uf = sign > 0 ? u.u(al) : u.u(al).inv();
      for (int d = 0; d <= dmax; ++d) {
        if (d - k < 0 || d - k > D) continue;
        SymFunc fd = f.homogeneous(d);
        if (fd.is_zero()) continue;
        // g = exp(sum dcoef d/dp) fd; its degree-(d-n) part is annihilation order n
        SymFunc g = fd, cur = fd;
        for (int it = 1; it <= d && !cur.is_zero(); ++it) {
          SymFunc nxt = SymFunc::zero(r, D);
          for (int j = 1; j <= d; ++j)
            for (int be = 1; be <= r; ++be) {
              Cf c = dcoef(j, be);
              if (!c.is_zero()) nxt = nxt + c * cur.pderiv(j, be);
            }
          cur = nxt.scaled(Cf(Rat(1, it)));
          g = g + cur;
        }
        for (int n = std::max(0, k); n <= d; ++n) {
          SymFunc gn = g.homogeneous(d - n);
          if (gn.is_zero()) continue;
          SymFunc Em = E.homogeneous(n - k);
          if (Em.is_zero()) continue;
          res = res + uf * (Em * gn);
        }
      }
    }
    return res;
  });
}

// E_1(x) = x, E_{k+1}(x_1..x_{k+1}) = E_k(x_1..x_k) - E_k(x_2..x_{k+1});
// closed form sum_l (-1)^{l-1} binom(k-1,l-1) x_l.
inline Cf ek_poly(int k, const std::vector<Cf>& contents) {
  if (k < 1 || static_cast<int>(contents.size()) != k)
    throw std::invalid_argument("need exactly k contents");
  Cf s(0L);
  mpz_class bin = 1;
  for (int l = 1; l <= k; ++l) {
    Cf term = Cf(Rat(bin)) * contents[static_cast<std::size_t>(l - 1)];
    s += (l % 2) ? term : -term;
    bin = bin * (k - l) / l;
  }
  return s;
}

// --- alphabet twist -----------------------------------------------------------------------

// exp(sum_k (1-q3^k) p_k^{(source)} d/dp_k^{(target)}) as the substitution
// p_k^{(target)} += (1-q3^k) p_k^{(source)}.
inline GradedOperator pair_twist(int rank, int source, int target) {
  if (source < 1 || source > rank || target < 1 || target > rank || source == target)
    throw RankMismatch("pair twist needs two distinct alphabets in range");
  return GradedOperator(rank, 0, [rank, source, target](const SymFunc& f) {
    return substitute_pk(f, target, [&](int k) {
      return SymFunc::p(k, target, rank, f.degree()) +
             (Cf(1L) - q3_pow(k)) * SymFunc::p(k, source, rank, f.degree());
    });
  });
}

// Ordered product of pairwise twists, target alphabets 2..r applied in turn; the
// pair twists sharing a target commute, so each stage is one merged substitution.
inline GradedOperator K_twist(int r) {
  if (r < 2) throw RankMismatch("twist needs at least two alphabets");
  return GradedOperator(r, 0, [r](const SymFunc& f) {
    SymFunc g = f;
    for (int target = 2; target <= r; ++target) {
      g = substitute_pk(g, target, [&](int k) {
        SymFunc s = SymFunc::p(k, target, r, f.degree());
        Cf c = Cf(1L) - q3_pow(k);
        for (int a = 1; a < target; ++a) s = s + c * SymFunc::p(k, a, r, f.degree());
        return s;
      });
    }
    return g;
  });
}

// Stages inverted in reverse order.
inline GradedOperator K_twist_inverse(int r) {
  if (r < 2) throw RankMismatch("twist needs at least two alphabets");
  return GradedOperator(r, 0, [r](const SymFunc& f) {
    SymFunc g = f;
    for (int target = r; target >= 2; --target) {
      g = substitute_pk(g, target, [&](int k) {
        SymFunc s = SymFunc::p(k, target, r, f.degree());
        Cf c = Cf(1L) - q3_pow(k);
        for (int a = 1; a < target; ++a) s = s - c * SymFunc::p(k, a, r, f.degree());
        return s;
      });
    }
    return g;
  });
}

// --- closed-form matrix elements ----------------------------------------------------------

enum class VertexKind { Phi, PhiStar };

// <P_nu| O |P_mu> under the q,t pairing for the level-one vertex operator labelled by
// la with weights (u,v) and lattice index n: prefactor times a sum over common
// subpartitions sigma of skew evaluations on the la-contents alphabets.  The sigma sum
// carries the norm <P_sigma, P_sigma> = 1/b_sigma; this is the weight consistent with
// the normal-ordered exponential form of the vertex operators.
inline Cf afs_matrix_element(const Partition& nu, const Partition& la, const Partition& mu,
                             VertexKind kind, int n, const Cf& u, const Cf& v) {
  Cf pre(1L);
  if (kind == VertexKind::Phi) {
    pre = (-(gamma_param() * u * v)).pow(la.size());
    for (const Box& b : la.boxes()) pre *= (v * content(b)).pow(-n - 1);
    pre *= v.pow(nu.size() - mu.size()) * q3_pow(-mu.size());
  } else {
    pre = (gamma_param() * u).pow(-la.size());
    for (const Box& b : la.boxes()) pre *= (v * content(b)).pow(n);
    pre *= (gamma_param() * v).pow(nu.size() - mu.size());
  }

  const bool star = kind == VertexKind::PhiStar;
  VirtualAlphabet Anu = star ? sp_alphabet(la).negated() : sp_alphabet(la);
  VirtualAlphabet Amu = star ? sp_alphabet_dual(la) : sp_alphabet_dual(la).negated();

  Cf sum(0L);
  for (int s = 0; s <= std::min(nu.size(), mu.size()); ++s)
    for (const Partition& sig : partitions_of(s)) {
      if (!nu.contains(sig) || !mu.contains(sig)) continue;
      Cf term = b_coeff(sig).inv();
      if (!star) term *= q3_pow(s);
      term *= plethystic_eval(skew_P(nu, sig), {Anu});
      term *= plethystic_eval(skew_P(mu, sig), {Amu});
      sum += term;
    }
  return pre * sum;
}

// Vacuum transfer-matrix element between the normalized eigenbases at weights v (bra
// side) and u (ket side) with spectral parameter w, bra norms divided out:
// q^{|mu|} w^{|la|-|mu|} prod b~_{la} x cross factors N~(gamma v/u) over the pair
// factors N~(v/v) (bra side, a > b) and N~(u/u) (ket side, a < b).
inline Cf mukade_element(const MultiPartition& la, const MultiPartition& mu,
                         const WeightVector& u, const WeightVector& v, const Cf& w) {
  const int r = la.rank();
  if (mu.rank() != r || u.rank() != r || v.rank() != r)
    throw RankMismatch("matching ranks required");
  Cf res = q_pow(mu.size()) * w.pow(la.size() - mu.size());
  for (int a = 1; a <= r; ++a) res *= b_tilde(la.comp(a));
  for (int a = 1; a <= r; ++a)
    for (int b = 1; b <= r; ++b)
      res *= nekrasov_tilde(la.comp(a), mu.comp(b), gamma_param() * v.u(a) / u.u(b));
  for (int a = 1; a <= r; ++a)
    for (int b = 1; b < a; ++b) {
      Cf nn = nekrasov_tilde(la.comp(a), la.comp(b), v.u(a) / v.u(b));
      if (nn.is_zero()) throw ResonanceError();
      res /= nn;
    }
  for (int a = 1; a <= r; ++a)
    for (int b = a + 1; b <= r; ++b) {
      Cf nn = nekrasov_tilde(mu.comp(a), mu.comp(b), u.u(a) / u.u(b));
      if (nn.is_zero()) throw ResonanceError();
      res /= nn;
    }
  return res;
}

}  // namespace gmsf
