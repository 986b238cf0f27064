#pragma once

#include <functional>
#include <limits>
#include <map>
#include <mutex>
#include <utility>
#include <vector>

#include "gmsf/partition.hpp"

// The graded ring Lambda^{(x) r} in the power-sum basis, with a hard truncation
// degree carried by every element, plus plethystic substitution and translation.

namespace gmsf {

// One power-sum monomial: a multiset of k-indices (stored as a partition) per alphabet.
struct PowIndex {
  std::vector<Partition> pows;

  int degree() const {
    int d = 0;
    for (const auto& p : pows) d += p.size();
    return d;
  }
  bool trivial() const {
    for (const auto& p : pows)
      if (!p.empty()) return false;
    return true;
  }
  static PowIndex unit(int rank) { return PowIndex{std::vector<Partition>(static_cast<std::size_t>(rank))}; }

  PowIndex merged(const PowIndex& o) const {
    PowIndex r;
    r.pows.reserve(pows.size());
    for (std::size_t a = 0; a < pows.size(); ++a) {
      std::vector<int> parts = pows[a].parts();
      const auto& op = o.pows[a].parts();
      parts.insert(parts.end(), op.begin(), op.end());
      std::sort(parts.begin(), parts.end(), std::greater<int>());
      r.pows.emplace_back(std::move(parts));
    }
    return r;
  }

  friend bool operator==(const PowIndex& a, const PowIndex& b) { return a.pows == b.pows; }
  friend bool operator<(const PowIndex& a, const PowIndex& b) {
    int da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    return a.pows < b.pows;
  }
};

class SymFunc {
 public:
  SymFunc(int rank, int degree) : rank_(rank), degree_(degree) {
    if (rank < 1) throw RankMismatch("rank must be >= 1");
  }

  static SymFunc zero(int rank, int degree) { return SymFunc(rank, degree); }
  static SymFunc constant(int rank, int degree, const Cf& c) {
    SymFunc f(rank, degree);
    if (!c.is_zero()) f.terms_.emplace(PowIndex::unit(rank), c);
    return f;
  }
  static SymFunc one(int rank, int degree) { return constant(rank, degree, Cf(1L)); }
  // p_k^{(alpha)}
  static SymFunc p(int k, int alpha, int rank, int degree) {
    if (k < 1) throw std::invalid_argument("power sum index must be >= 1");
    if (alpha < 1 || alpha > rank) throw RankMismatch("alphabet index out of range");
    SymFunc f(rank, degree);
    if (k <= degree) {
      PowIndex i = PowIndex::unit(rank);
      i.pows[static_cast<std::size_t>(alpha - 1)] = Partition{k};
      f.terms_.emplace(std::move(i), Cf(1L));
    }
    return f;
  }

  int rank() const { return rank_; }
  int degree() const { return degree_; }
  const std::map<PowIndex, Cf>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Cf coeff(const PowIndex& i) const {
    auto it = terms_.find(i);
    return it == terms_.end() ? Cf(0L) : it->second;
  }
  Cf constant_term() const { return coeff(PowIndex::unit(rank_)); }

  void add_term(const PowIndex& i, const Cf& c) {
    if (c.is_zero() || i.degree() > degree_) return;
    auto [it, fresh] = terms_.emplace(i, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  // Changing the ceiling drops any term that no longer fits; it never extends content.
  SymFunc with_degree(int degree) const {
    SymFunc r(rank_, degree);
    for (const auto& [i, c] : terms_)
      if (i.degree() <= degree) r.terms_.emplace(i, c);
    return r;
  }

  SymFunc operator-() const {
    SymFunc r(rank_, degree_);
    for (const auto& [i, c] : terms_) r.terms_.emplace(i, -c);
    return r;
  }

  SymFunc operator+(const SymFunc& o) const {
    require_same_rank(o);
    SymFunc r(rank_, std::min(degree_, o.degree_));
    for (const auto& [i, c] : terms_) r.add_term(i, c);
    for (const auto& [i, c] : o.terms_) r.add_term(i, c);
    return r;
  }
  SymFunc operator-(const SymFunc& o) const { return *this + (-o); }

  SymFunc operator*(const SymFunc& o) const {
    require_same_rank(o);
    SymFunc r(rank_, std::min(degree_, o.degree_));
    for (const auto& [i, c] : terms_) {
      if (i.degree() > r.degree_) continue;
      for (const auto& [j, d] : o.terms_) {
        if (i.degree() + j.degree() > r.degree_) continue;
        r.add_term(i.merged(j), c * d);
      }
    }
    return r;
  }

  SymFunc scaled(const Cf& c) const {
    SymFunc r(rank_, degree_);
    if (c.is_zero()) return r;
    for (const auto& [i, k] : terms_) r.terms_.emplace(i, k * c);
    return r;
  }

  bool operator==(const SymFunc& o) const { return rank_ == o.rank_ && terms_ == o.terms_; }
  bool operator!=(const SymFunc& o) const { return !(*this == o); }

  // d/dp_k on alphabet alpha (not multiplied by k).
  SymFunc pderiv(int k, int alpha = 1) const {
    if (k < 1) throw std::invalid_argument("power sum index must be >= 1");
    if (alpha < 1 || alpha > rank_) throw RankMismatch("alphabet index out of range");
    SymFunc r(rank_, degree_);
    for (const auto& [i, c] : terms_) {
      const auto& parts = i.pows[static_cast<std::size_t>(alpha - 1)].parts();
      long m = std::count(parts.begin(), parts.end(), k);
      if (!m) continue;
      PowIndex j = i;
      std::vector<int> np = parts;
      np.erase(std::find(np.begin(), np.end(), k));
      j.pows[static_cast<std::size_t>(alpha - 1)] = Partition(std::move(np));
      r.add_term(j, c * Cf(m));
    }
    return r;
  }

  // Homogeneous component of total degree d.
  SymFunc homogeneous(int d) const {
    SymFunc r(rank_, degree_);
    for (const auto& [i, c] : terms_)
      if (i.degree() == d) r.terms_.emplace(i, c);
    return r;
  }

  int max_degree() const {
    int d = 0;
    for (const auto& [i, c] : terms_) d = std::max(d, i.degree());
    return d;
  }

 private:
  void require_same_rank(const SymFunc& o) const {
    if (rank_ != o.rank_) throw RankMismatch();
  }

  int rank_;
  int degree_;
  std::map<PowIndex, Cf> terms_;
};

inline SymFunc operator*(const Cf& c, const SymFunc& f) { return f.scaled(c); }

// An alphabet given by finitely many weighted letters plus an optional closed-form
// tail supplying p_k beyond what letters encode (geometric tails of sp_lambda etc).
class VirtualAlphabet {
 public:
  VirtualAlphabet() = default;

  static VirtualAlphabet letters(std::vector<std::pair<Cf, Cf>> ls) {
    VirtualAlphabet a;
    a.letters_ = std::move(ls);
    return a;
  }
  static VirtualAlphabet single_letter(const Cf& x) { return letters({{Cf(1L), x}}); }
  static VirtualAlphabet from_tail(std::function<Cf(int)> pk,
                                   int valid_to = std::numeric_limits<int>::max()) {
    VirtualAlphabet a;
    a.tail_ = std::move(pk);
    a.tail_valid_to_ = valid_to;
    return a;
  }

  void add_letter(const Cf& coeff, const Cf& letter) { letters_.push_back({coeff, letter}); }

  Cf pk(int k) const {
    if (k < 1) throw std::invalid_argument("power sum index must be >= 1");
    Cf s(0L);
    for (const auto& [c, x] : letters_) s += c * x.pow(k);
    if (tail_) {
      if (k > tail_valid_to_) throw TailUndefined();
      s += tail_(k);
    }
    return s;
  }

  // lambda-ring minus: p_k -> -p_k.
  VirtualAlphabet negated() const {
    VirtualAlphabet a = *this;
    for (auto& [c, x] : a.letters_) c = -c;
    if (tail_) {
      auto t = tail_;
      a.tail_ = [t](int k) { return -t(k); };
    }
    return a;
  }

  // Multiplies every letter by the monomial m: p_k -> m^k p_k.
  VirtualAlphabet scaled_letters(const Cf& m) const {
    VirtualAlphabet a = *this;
    for (auto& [c, x] : a.letters_) x = x * m;
    if (tail_) {
      auto t = tail_;
      a.tail_ = [t, m](int k) { return m.pow(k) * t(k); };
    }
    return a;
  }

  VirtualAlphabet operator+(const VirtualAlphabet& o) const {
    VirtualAlphabet a = *this;
    a.letters_.insert(a.letters_.end(), o.letters_.begin(), o.letters_.end());
    if (o.tail_) {
      if (!a.tail_) {
        a.tail_ = o.tail_;
        a.tail_valid_to_ = o.tail_valid_to_;
      } else {
        auto t1 = a.tail_, t2 = o.tail_;
        a.tail_ = [t1, t2](int k) { return t1(k) + t2(k); };
        a.tail_valid_to_ = std::min(a.tail_valid_to_, o.tail_valid_to_);
      }
    }
    return a;
  }

 private:
  std::vector<std::pair<Cf, Cf>> letters_;
  std::function<Cf(int)> tail_;
  int tail_valid_to_ = std::numeric_limits<int>::max();
};

// Ring homomorphism Lambda^{(x) r} -> coefficients, p_k^{(alpha)} -> p_k(alphabet alpha).
inline Cf plethystic_eval(const SymFunc& f, const std::vector<VirtualAlphabet>& alphabets) {
  if (static_cast<int>(alphabets.size()) != f.rank()) throw RankMismatch("one alphabet per rank");
  Cf s(0L);
  for (const auto& [i, c] : f.terms()) {
    Cf t = c;
    for (std::size_t a = 0; a < i.pows.size(); ++a)
      for (int k : i.pows[a].parts()) t *= alphabets[a].pk(k);
    s += t;
  }
  return s;
}

// f(x + A) on alphabet alpha: the substitution p_k -> p_k + p_k(A), which is what
// exp(sum_k p_k(A) d/dp_k) implements.
inline SymFunc translate(const SymFunc& f, int alpha, const VirtualAlphabet& A) {
  if (alpha < 1 || alpha > f.rank()) throw RankMismatch("alphabet index out of range");
  SymFunc r(f.rank(), f.degree());
  for (const auto& [i, c] : f.terms()) {
    const auto& parts = i.pows[static_cast<std::size_t>(alpha - 1)].parts();
    // expand prod_k (p_k + a_k) over the multiset of parts
    std::vector<std::pair<std::vector<int>, Cf>> acc{{{}, c}};
    for (int k : parts) {
      std::vector<std::pair<std::vector<int>, Cf>> nxt;
      Cf ak = A.pk(k);
      for (auto& [kept, co] : acc) {
        std::vector<int> with = kept;
        with.push_back(k);
        nxt.push_back({std::move(with), co});
        if (!ak.is_zero()) nxt.push_back({kept, co * ak});
      }
      acc = std::move(nxt);
    }
    for (auto& [kept, co] : acc) {
      PowIndex j = i;
      std::sort(kept.begin(), kept.end(), std::greater<int>());
      j.pows[static_cast<std::size_t>(alpha - 1)] = Partition(std::move(kept));
      r.add_term(j, co);
    }
  }
  return r;
}

// --- monomial basis transitions (rank 1) -----------------------------------------------

namespace detail {

// Transition data at fixed degree d: order[] lists partitions of d (as produced by
// partitions_of), R[mu][la] = coefficient of m_la in p_mu, S = R^{-1}.
struct MPTransition {
  std::vector<Partition> order;
  std::vector<std::vector<Rat>> R, S;
};

inline const MPTransition& mp_transition(int d) {
  static std::map<int, MPTransition> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(d);
  if (it != cache.end()) return it->second;

  MPTransition t;
  t.order = partitions_of(d);
  const int n = static_cast<int>(t.order.size());
  std::map<Partition, int> pos;
  for (int i = 0; i < n; ++i) pos[t.order[static_cast<std::size_t>(i)]] = i;

  // expand p_mu in d variables and read off the coefficient of each x^lambda
  t.R.assign(static_cast<std::size_t>(n), std::vector<Rat>(static_cast<std::size_t>(n), Rat(0)));
  const int nv = std::max(d, 1);
  for (int mi = 0; mi < n; ++mi) {
    std::map<std::vector<int>, mpz_class> poly{{std::vector<int>(static_cast<std::size_t>(nv), 0), 1}};
    for (int k : t.order[static_cast<std::size_t>(mi)].parts()) {
      std::map<std::vector<int>, mpz_class> nxt;
      for (const auto& [e, c] : poly)
        for (int v = 0; v < nv; ++v) {
          std::vector<int> e2 = e;
          e2[static_cast<std::size_t>(v)] += k;
          nxt[e2] += c;
        }
      poly = std::move(nxt);
    }
    for (int li = 0; li < n; ++li) {
      std::vector<int> key(static_cast<std::size_t>(nv), 0);
      const auto& parts = t.order[static_cast<std::size_t>(li)].parts();
      for (std::size_t i = 0; i < parts.size(); ++i) key[i] = parts[i];
      auto itc = poly.find(key);
      if (itc != poly.end()) t.R[static_cast<std::size_t>(mi)][static_cast<std::size_t>(li)] = Rat(itc->second);
    }
  }

  // invert R by Gaussian elimination over Q
  auto A = t.R;
  t.S.assign(static_cast<std::size_t>(n), std::vector<Rat>(static_cast<std::size_t>(n), Rat(0)));
  for (int i = 0; i < n; ++i) t.S[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
  for (int col = 0; col < n; ++col) {
    int piv = col;
    while (A[static_cast<std::size_t>(piv)][static_cast<std::size_t>(col)] == 0) ++piv;
    std::swap(A[static_cast<std::size_t>(piv)], A[static_cast<std::size_t>(col)]);
    std::swap(t.S[static_cast<std::size_t>(piv)], t.S[static_cast<std::size_t>(col)]);
    Rat inv = 1 / A[static_cast<std::size_t>(col)][static_cast<std::size_t>(col)];
    for (int j = 0; j < n; ++j) {
      A[static_cast<std::size_t>(col)][static_cast<std::size_t>(j)] *= inv;
      t.S[static_cast<std::size_t>(col)][static_cast<std::size_t>(j)] *= inv;
    }
    for (int row = 0; row < n; ++row) {
      if (row == col) continue;
      Rat f = A[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)];
      if (f == 0) continue;
      for (int j = 0; j < n; ++j) {
        A[static_cast<std::size_t>(row)][static_cast<std::size_t>(j)] -=
            f * A[static_cast<std::size_t>(col)][static_cast<std::size_t>(j)];
        t.S[static_cast<std::size_t>(row)][static_cast<std::size_t>(j)] -=
            f * t.S[static_cast<std::size_t>(col)][static_cast<std::size_t>(j)];
      }
    }
  }
  return cache.emplace(d, std::move(t)).first->second;
}

}  // namespace detail

// m_lambda in the power-sum basis.
inline SymFunc m_to_p(const Partition& la) {
  int d = la.size();
  const auto& t = detail::mp_transition(d);
  SymFunc f(1, d);
  for (std::size_t i = 0; i < t.order.size(); ++i)
    if (t.order[i] == la) {
      for (std::size_t j = 0; j < t.order.size(); ++j) {
        if (t.S[i][j] == 0) continue;
        PowIndex idx{std::vector<Partition>{t.order[j]}};
        f.add_term(idx, Cf(t.S[i][j]));
      }
      return f;
    }
  return f;
}

// Degree-d homogeneous part of f in the monomial basis.
inline std::map<Partition, Cf> p_to_m(const SymFunc& f, int d) {
  if (f.rank() != 1) throw RankMismatch("monomial transition is rank-1 only");
  const auto& t = detail::mp_transition(d);
  std::map<Partition, int> pos;
  for (std::size_t i = 0; i < t.order.size(); ++i) pos[t.order[i]] = static_cast<int>(i);
  std::map<Partition, Cf> out;
  for (const auto& [i, c] : f.terms()) {
    if (i.degree() != d) continue;
    const auto mi = static_cast<std::size_t>(pos.at(i.pows[0]));
    for (std::size_t li = 0; li < t.order.size(); ++li) {
      if (t.R[mi][li] == 0) continue;
      auto [it, fresh] = out.emplace(t.order[li], c * Cf(t.R[mi][li]));
      if (!fresh) it->second += c * Cf(t.R[mi][li]);
    }
  }
  for (auto it = out.begin(); it != out.end();)
    it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

// --- JSON ------------------------------------------------------------------------------

inline Json symfunc_to_json(const SymFunc& f) {
  Json terms = Json::array();
  for (const auto& [i, c] : f.terms()) {
    Json pows = Json::array();
    for (const auto& p : i.pows) pows.push_back(partition_to_json(p));
    terms.push_back(Json{{"pows", pows}, {"coeff", coeff_to_json(c)}});
  }
  return Json{{"rank", f.rank()}, {"degree", f.degree()}, {"terms", terms}};
}

inline SymFunc symfunc_from_json(const Json& j, const std::vector<int>& idmap) {
  SymFunc f(j.at("rank").get<int>(), j.at("degree").get<int>());
  for (const auto& term : j.at("terms")) {
    PowIndex i;
    for (const auto& p : term.at("pows")) i.pows.push_back(partition_from_json(p));
    if (static_cast<int>(i.pows.size()) != f.rank()) throw RankMismatch("pows arity");
    f.add_term(i, coeff_from_json(term.at("coeff"), idmap));
  }
  return f;
}

}  // namespace gmsf
