#pragma once

#include <mutex>

#include "gmsf/symfunc.hpp"

// Macdonald polynomials over the q,t Hall pairing, the diagonal kernel, skew
// functions and the standard evaluation alphabets.

namespace gmsf {

// <p_la, p_mu> = delta * z_la * prod (1-q^k)/(1-t^k).  Rank 1 only.
inline Cf hall_qt_inner(const SymFunc& f, const SymFunc& g) {
  if (f.rank() != 1 || g.rank() != 1) throw RankMismatch("pairing is rank-1 only");
  Cf s(0L);
  for (const auto& [i, c] : f.terms()) {
    Cf d = g.coeff(i);
    if (d.is_zero()) continue;
    const Partition& la = i.pows[0];
    Cf w(Rat(la.z_order()));
    for (int k : la.parts()) w *= (Cf(1L) - q_pow(k)) / (Cf(1L) - t_pow(k));
    s += c * d * w;
  }
  return s;
}

// op with p_k replaced by its Hall adjoint k (1-q^k)/(1-t^k) d/dp_k, applied to f.
inline SymFunc hall_qt_adjoint_apply(const SymFunc& op, const SymFunc& f) {
  if (op.rank() != 1 || f.rank() != 1) throw RankMismatch("adjoint application is rank-1 only");
  SymFunc r = SymFunc::zero(1, f.degree());
  for (const auto& [i, c] : op.terms()) {
    SymFunc g = f;
    for (int k : i.pows[0].parts())
      g = (Cf(static_cast<long>(k)) * (Cf(1L) - q_pow(k)) / (Cf(1L) - t_pow(k))) * g.pderiv(k);
    r = r + c * g;
  }
  return r;
}

// la covers mu by a horizontal strip: la_i >= mu_i >= la_{i+1}.
inline bool horizontal_strip(const Partition& la, const Partition& mu) {
  for (int i = 1;; ++i) {
    if (la.part(i) < mu.part(i) || mu.part(i) < la.part(i + 1)) return false;
    if (la.part(i) == 0) return true;
  }
}

// psi_{la/mu} for a horizontal strip: over boxes of mu whose row meets the strip but
// whose column does not, the ratio of arm/leg factors b_mu(s)/b_la(s).
inline Cf psi_strip(const Partition& la, const Partition& mu) {
  Partition laT = la.transpose(), muT = mu.transpose();
  Cf r(1L);
  for (int i = 1; mu.part(i) > 0; ++i) {
    if (la.part(i) == mu.part(i)) continue;
    for (int j = 1; j <= mu.part(i); ++j) {
      if (laT.part(j) != muT.part(j)) continue;
      int am = mu.part(i) - j, al = la.part(i) - j, l = muT.part(j) - i;
      r *= (Cf(1L) - q_pow(am) * t_pow(l + 1)) * (Cf(1L) - q_pow(al + 1) * t_pow(l)) /
           ((Cf(1L) - q_pow(am + 1) * t_pow(l)) * (Cf(1L) - q_pow(al) * t_pow(l + 1)));
    }
  }
  return r;
}

namespace detail {

struct MacdonaldEntry {
  SymFunc P = SymFunc::zero(1, 0);
  Cf norm;  // <P,P> = 1/b_la
};

// Monomial expansion by the branching rule: the coefficient of m_mu in P_la is the sum
// over horizontal-strip chains from the empty partition to la with step sizes mu_i of
// the product of psi_strip factors.  Norms come from the closed arm/leg product.
inline const std::map<Partition, MacdonaldEntry>& macdonald_table(int d) {
  static std::map<int, std::map<Partition, MacdonaldEntry>> cache;
  static std::mutex guard;
  std::lock_guard<std::mutex> lock(guard);
  auto it = cache.find(d);
  if (it != cache.end()) return it->second;

  std::vector<std::vector<Partition>> lev;
  for (int k = 0; k <= d; ++k) lev.push_back(partitions_of(k));
  auto contained = [](const Partition& inner, const Partition& outer) {
    for (int i = 1; inner.part(i) > 0; ++i)
      if (inner.part(i) > outer.part(i)) return false;
    return true;
  };

  std::map<Partition, MacdonaldEntry> table;
  for (const Partition& la : lev[static_cast<size_t>(d)]) {
    MacdonaldEntry e;
    e.P = SymFunc::zero(1, d);
    for (const Partition& mu : lev[static_cast<size_t>(d)]) {
      std::map<Partition, Cf> w;
      w.emplace(Partition(std::vector<int>{}), Cf(1L));
      int acc = 0;
      for (int i = 1; mu.part(i) > 0 && !w.empty(); ++i) {
        acc += mu.part(i);
        std::map<Partition, Cf> nw;
        for (const Partition& nu : lev[static_cast<size_t>(acc)]) {
          if (!contained(nu, la)) continue;
          Cf tot(0L);
          for (const auto& [prev, wt] : w)
            if (horizontal_strip(nu, prev)) tot += wt * psi_strip(nu, prev);
          if (!tot.is_zero()) nw.emplace(nu, std::move(tot));
        }
        w = std::move(nw);
      }
      auto f = w.find(la);
      if (f != w.end()) e.P = e.P + f->second * m_to_p(mu);
    }
    e.norm = b_coeff(la).inv();
    table.emplace(la, std::move(e));
  }
  return cache.emplace(d, std::move(table)).first->second;
}

}  // namespace detail

// P_la in the power-sum basis (rank 1, ceiling |la|).
inline const SymFunc& macdonald_P(const Partition& la) {
  return detail::macdonald_table(la.size()).at(la).P;
}

// <P_la, P_la> = 1/b_la.
inline const Cf& macdonald_norm(const Partition& la) {
  return detail::macdonald_table(la.size()).at(la).norm;
}

// P_la / P_la(sp_empty): takes value 1 on the vacuum alphabet.
inline SymFunc macdonald_P_normalized(const Partition& la) {
  return macdonald_P(la).scaled(eval_P_at_sp_empty(la).inv());
}

// Diagonal kernel exp(sum_k (1/k) (1-t^k)/(1-q^k) p_k(x) p_k(y)) through per-alphabet
// degree D (total-degree ceiling 2D; every term has equal degree in x and y).
inline SymFunc kernel_Pi(int D) {
  SymFunc F = SymFunc::zero(2, 2 * D);
  for (int k = 1; k <= D; ++k) {
    Cf c = Cf(Rat(1, k)) * (Cf(1L) - t_pow(k)) / (Cf(1L) - q_pow(k));
    F = F + c * (SymFunc::p(k, 1, 2, 2 * D) * SymFunc::p(k, 2, 2, 2 * D));
  }
  SymFunc r = SymFunc::one(2, 2 * D), term = SymFunc::one(2, 2 * D);
  for (int j = 1; j <= D; ++j) {
    term = Cf(Rat(1, j)) * (term * F);
    r = r + term;
  }
  return r;
}

// P_{la/mu}, from P_la(x+y) = sum_mu P_mu(x) P_{la/mu}(y): equals b_mu Q_mu^perp P_la.
inline SymFunc skew_P(const Partition& la, const Partition& mu) {
  if (!la.contains(mu)) throw NotContained();
  SymFunc r = hall_qt_adjoint_apply(macdonald_P(mu), macdonald_P(la));
  return (b_coeff(mu) * r).with_degree(la.size() - mu.size());
}

// --- evaluation alphabets ---------------------------------------------------------------

// sp_lambda: p_k from the closed geometric form (defined for every k).
inline VirtualAlphabet sp_alphabet(const Partition& la,
                                   int valid_to = std::numeric_limits<int>::max()) {
  return VirtualAlphabet::from_tail([la](int k) { return pk_sp(la, k); }, valid_to);
}

inline VirtualAlphabet sp_alphabet_dual(const Partition& la,
                                        int valid_to = std::numeric_limits<int>::max()) {
  return VirtualAlphabet::from_tail([la](int k) { return pk_sp_dual(la, k); }, valid_to);
}

// xi_lambda: finitely many letters, p_k = 1 - (1-q1^k)(1-q2^k) sum_box chi^k.
inline VirtualAlphabet xi_alphabet(const Partition& la) {
  VirtualAlphabet a = VirtualAlphabet::single_letter(Cf(1L));
  for (const Box& b : la.boxes()) {
    Cf chi = content(b);
    a.add_letter(Cf(-1L), chi);
    a.add_letter(Cf(1L), q1_pow(1) * chi);
    a.add_letter(Cf(1L), q2_pow(1) * chi);
    a.add_letter(Cf(-1L), q1_pow(1) * q2_pow(1) * chi);
  }
  return a;
}

inline VirtualAlphabet xi_alphabet_dual(const Partition& la) {
  VirtualAlphabet a = VirtualAlphabet::single_letter(Cf(1L));
  for (const Box& b : la.boxes()) {
    Cf chi = content(b).inv();
    a.add_letter(Cf(-1L), chi);
    a.add_letter(Cf(1L), q1_pow(-1) * chi);
    a.add_letter(Cf(1L), q2_pow(-1) * chi);
    a.add_letter(Cf(-1L), q1_pow(-1) * q2_pow(-1) * chi);
  }
  return a;
}

}  // namespace gmsf
