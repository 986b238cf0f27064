#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "gmsf/errors.hpp"

namespace gmsf {

using Rat = mpq_class;

inline std::string rat_str(const Rat& r) { return r.get_str(); }

inline Rat rat_parse(const std::string& s) {
  Rat r;
  if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal: " + s);
  r.canonicalize();
  return r;
}

// Append-only interning of parameter names; ids are dense and stable for the process.
class Symbols {
 public:
  static int id(const std::string& name) {
    auto& s = self();
    std::lock_guard<std::mutex> lk(s.mu_);
    auto it = s.index_.find(name);
    if (it != s.index_.end()) return it->second;
    int i = static_cast<int>(s.names_.size());
    s.names_.push_back(name);
    s.index_.emplace(name, i);
    return i;
  }
  static std::string name(int id) {
    auto& s = self();
    std::lock_guard<std::mutex> lk(s.mu_);
    return s.names_.at(static_cast<size_t>(id));
  }
  static int count() {
    auto& s = self();
    std::lock_guard<std::mutex> lk(s.mu_);
    return static_cast<int>(s.names_.size());
  }
  static std::vector<std::string> all() {
    auto& s = self();
    std::lock_guard<std::mutex> lk(s.mu_);
    return s.names_;
  }

 private:
  static Symbols& self() {
    static Symbols s;
    return s;
  }
  std::mutex mu_;
  std::vector<std::string> names_;
  std::map<std::string, int> index_;
};

// Exponent vector indexed by symbol id; trailing zeros stripped so the map key is canonical.
using Expvec = std::vector<int>;

inline void expvec_trim(Expvec& e) {
  while (!e.empty() && e.back() == 0) e.pop_back();
}

inline long expvec_degree(const Expvec& e) {
  long d = 0;
  for (int x : e) d += x;
  return d;
}

inline Expvec expvec_add(const Expvec& a, const Expvec& b) {
  Expvec r(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  expvec_trim(r);
  return r;
}

inline Expvec expvec_sub(const Expvec& a, const Expvec& b) {
  Expvec r(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  expvec_trim(r);
  return r;
}

// Graded-lexicographic: total degree first, then lex on exponents by ascending symbol id.
struct GrlexLess {
  bool operator()(const Expvec& a, const Expvec& b) const {
    long da = expvec_degree(a), db = expvec_degree(b);
    if (da != db) return da < db;
    size_t n = std::max(a.size(), b.size());
    for (size_t i = 0; i < n; ++i) {
      int ai = i < a.size() ? a[i] : 0;
      int bi = i < b.size() ? b[i] : 0;
      if (ai != bi) return ai < bi;
    }
    return false;
  }
};

// Verification budget: hard ceiling on term counts produced by a single polynomial product.
inline std::atomic<std::size_t>& term_budget() {
  static std::atomic<std::size_t> b{2'000'000};
  return b;
}

// Sparse Laurent polynomial over Q in the registered symbols.
struct Poly {
  std::map<Expvec, Rat, GrlexLess> terms;

  static Poly zero() { return Poly{}; }
  static Poly constant(const Rat& c) {
    Poly p;
    if (c != 0) p.terms.emplace(Expvec{}, c);
    return p;
  }
  static Poly monomial(Expvec e, const Rat& c) {
    Poly p;
    expvec_trim(e);
    if (c != 0) p.terms.emplace(std::move(e), c);
    return p;
  }
  static Poly symbol(int id, int pow = 1) {
    Expvec e(static_cast<size_t>(id) + 1, 0);
    e[static_cast<size_t>(id)] = pow;
    return monomial(std::move(e), 1);
  }

  bool is_zero() const { return terms.empty(); }
  bool is_constant() const {
    return terms.empty() || (terms.size() == 1 && terms.begin()->first.empty());
  }
  bool is_monomial() const { return terms.size() == 1; }

  void add_term(const Expvec& e, const Rat& c) {
    if (c == 0) return;
    auto it = terms.find(e);
    if (it == terms.end()) {
      terms.emplace(e, c);
    } else {
      it->second += c;
      if (it->second == 0) terms.erase(it);
    }
  }

  Poly operator-() const {
    Poly r = *this;
    for (auto& [e, c] : r.terms) c = -c;
    return r;
  }
  Poly operator+(const Poly& o) const {
    Poly r = *this;
    for (const auto& [e, c] : o.terms) r.add_term(e, c);
    return r;
  }
  Poly operator-(const Poly& o) const {
    Poly r = *this;
    for (const auto& [e, c] : o.terms) r.add_term(e, -c);
    return r;
  }
  Poly operator*(const Poly& o) const {
    Poly r;
    if (is_zero() || o.is_zero()) return r;
    const std::size_t budget = term_budget().load();
    for (const auto& [ea, ca] : terms)
      for (const auto& [eb, cb] : o.terms) {
        r.add_term(expvec_add(ea, eb), ca * cb);
        if (r.terms.size() > budget) throw BudgetExceeded();
      }
    return r;
  }
  Poly mul_scalar(const Rat& c) const {
    Poly r;
    if (c == 0) return r;
    for (const auto& [e, k] : terms) r.terms.emplace(e, k * c);
    return r;
  }
  Poly mul_monomial(const Expvec& e0, const Rat& c) const {
    Poly r;
    if (c == 0) return r;
    for (const auto& [e, k] : terms) r.terms.emplace(expvec_add(e, e0), k * c);
    return r;
  }
  Poly pow(unsigned n) const {
    Poly r = constant(1), b = *this;
    while (n) {
      if (n & 1u) r = r * b;
      b = n > 1 ? b * b : b;
      n >>= 1u;
    }
    return r;
  }
  // Substitutes every symbol by its inverse; Laurent exponents make this an involution.
  Poly invert_vars() const {
    Poly r;
    for (const auto& [e, c] : terms) {
      Expvec ne(e.size());
      for (std::size_t i = 0; i < e.size(); ++i) ne[i] = -e[i];
      expvec_trim(ne);
      r.terms.emplace(std::move(ne), c);
    }
    return r;
  }
  bool operator==(const Poly& o) const { return terms == o.terms; }

  // Content c > 0 with poly/c integral and primitive; zero poly has content 1.
  Rat content() const {
    if (terms.empty()) return Rat(1);
    mpz_class g = 0, l = 1;
    for (const auto& [e, c] : terms) {
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num().get_mpz_t());
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
    }
    Rat r(g, l);
    r.canonicalize();
    return r;
  }

  const std::pair<const Expvec, Rat>& lead() const { return *terms.rbegin(); }

  // Exact division in the Laurent ring; nullopt when o does not divide. Quotient
  // monomials of an exact division lie grlex-between min(p)/min(o) and lead(p)/lead(o),
  // which bounds the descent (grlex alone is not a well-order on Laurent exponents).
  std::optional<Poly> divide_exact(const Poly& o, std::size_t max_steps = 500000,
                                   std::size_t max_rem_terms = SIZE_MAX) const {
    if (o.is_zero()) throw DivisionByZero();
    if (is_zero()) return Poly::zero();
    Poly rem = *this, q;
    const auto& [le, lc] = o.lead();
    const Expvec low = expvec_sub(terms.begin()->first, o.terms.begin()->first);
    std::size_t steps = 0;
    while (!rem.is_zero()) {
      const auto& [re, rc] = rem.lead();
      Expvec qe = expvec_sub(re, le);
      if (GrlexLess{}(qe, low) || ++steps > max_steps || rem.terms.size() > max_rem_terms)
        return std::nullopt;
      Rat qc = rc / lc;
      q.add_term(qe, qc);
      rem = rem - o.mul_monomial(qe, qc);
    }
    return q;
  }

  long degree_in(int id) const {
    long d = 0;
    for (const auto& [e, c] : terms)
      if (static_cast<size_t>(id) < e.size()) d = std::max<long>(d, e[static_cast<size_t>(id)]);
    return d;
  }

  Rat eval(const std::vector<Rat>& assign) const {
    Rat acc = 0;
    for (const auto& [e, c] : terms) {
      Rat m = c;
      for (size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (i >= assign.size()) throw EvaluationPole("symbol lacks an assignment: " + Symbols::name(static_cast<int>(i)));
        const Rat& v = assign[i];
        if (v == 0 && e[i] < 0) throw EvaluationPole("zero raised to a negative power");
        Rat p = 1;
        int k = e[i] > 0 ? e[i] : -e[i];
        Rat base = e[i] > 0 ? v : Rat(v.get_den(), v.get_num());
        if (e[i] < 0) base.canonicalize();
        for (int j = 0; j < k; ++j) p *= base;
        m *= p;
      }
      acc += m;
    }
    return acc;
  }
};

inline Expvec expvec_neg(const Expvec& a) {
  Expvec r = a;
  for (auto& x : r) x = -x;
  return r;
}

inline Expvec expvec_min(const Expvec& a, const Expvec& b) {
  Expvec r(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < r.size(); ++i)
    r[i] = std::min(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
  expvec_trim(r);
  return r;
}

inline Expvec expvec_scaled(const Expvec& a, int k) {
  if (k == 0) return {};
  Expvec r = a;
  for (auto& x : r) x *= k;
  return r;
}

inline Rat rat_pow(const Rat& b, int e) {
  if (e == 0) return Rat(1);
  Rat base = b;
  if (e < 0) {
    base = Rat(b.get_den(), b.get_num());
    base.canonicalize();
    e = -e;
  }
  Rat r(1);
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

// Fast sound rejection of "does g divide f": divisibility of primitive integer
// polynomials implies integer divisibility of their evaluations, so one failed sample
// refutes it.  "true" only means the trial division is worth running.
inline bool division_plausible(const Poly& f, const Poly& g) {
  if (f.is_zero()) return true;
  if (expvec_degree(f.lead().first) < expvec_degree(g.lead().first)) return false;
  size_t nsym = 0;
  for (const auto& [e, c] : f.terms) nsym = std::max(nsym, e.size());
  for (const auto& [e, c] : g.terms) nsym = std::max(nsym, e.size());
  static const long bases[2][8] = {{3, 5, 2, 7, 11, 13, 17, 19},
                                   {10, 3, 9, 4, 23, 6, 29, 31}};
  Rat fc = f.content(), gc = g.content();
  for (const auto& base : bases) {
    std::vector<Rat> pt(nsym);
    for (size_t i = 0; i < nsym; ++i) pt[i] = Rat(base[i % 8]);
    Rat vf = f.eval(pt) / fc, vg = g.eval(pt) / gc;
    if (vg == 0) continue;
    mpz_class r;
    mpz_tdiv_r(r.get_mpz_t(), vf.get_num().get_mpz_t(), vg.get_num().get_mpz_t());
    if (r != 0) return false;
  }
  return true;
}

// Total order on polynomials usable as a map key: term count, then termwise exponents
// and coefficients.
struct PolyLess {
  bool operator()(const Poly& a, const Poly& b) const {
    if (a.terms.size() != b.terms.size()) return a.terms.size() < b.terms.size();
    GrlexLess lt;
    auto ia = a.terms.begin(), ib = b.terms.begin();
    for (; ia != a.terms.end(); ++ia, ++ib) {
      if (lt(ia->first, ib->first)) return true;
      if (lt(ib->first, ia->first)) return false;
      if (ia->second != ib->second) return ia->second < ib->second;
    }
    return false;
  }
};

// Rational function kept in factored form: scale * x^mono * prod f_i^{e_i}, where every
// factor is a primitive, positive-lead, monomial-free polynomial and exponents are signed.
// Products, inverses and powers are pure bookkeeping; only addition expands, and it expands
// just the non-shared residual before re-extracting known factors.  That keeps arithmetic
// over nested binomial products (the only shape this library produces) from blowing up.
class Coefficient {
 public:
  using FactorMap = std::map<Poly, int, PolyLess>;

  Coefficient() : scale_(0) {}
  Coefficient(long v) : scale_(v) {}
  Coefficient(const Rat& v) : scale_(v) {}
  Coefficient(Poly n, Poly d) : scale_(1) {
    if (d.is_zero()) throw DivisionByZero();
    if (n.is_zero()) {
      scale_ = 0;
      return;
    }
    push(std::move(n), 1);
    push(std::move(d), -1);
  }

  static Coefficient from_poly(Poly p) {
    Coefficient c;
    if (p.is_zero()) return c;
    c.scale_ = 1;
    c.push(std::move(p), 1);
    return c;
  }
  static Coefficient sym(const std::string& name, int pow = 1) {
    Coefficient c;
    c.scale_ = 1;
    if (pow != 0) {
      size_t id = static_cast<size_t>(Symbols::id(name));
      c.mono_.assign(id + 1, 0);
      c.mono_[id] = pow;
    }
    return c;
  }

  // Expanded views. The denominator is a primitive positive-lead polynomial; the numerator
  // carries the scale and the (possibly Laurent) monomial part.
  Poly num() const {
    if (scale_ == 0) return Poly::zero();
    Poly p = Poly::monomial(mono_, scale_);
    for (const auto& [f, e] : fac_)
      if (e > 0) p = p * f.pow(static_cast<unsigned>(e));
    return p;
  }
  Poly den() const {
    Poly p = Poly::constant(1);
    for (const auto& [f, e] : fac_)
      if (e < 0) p = p * f.pow(static_cast<unsigned>(-e));
    return p;
  }

  bool is_zero() const { return scale_ == 0; }
  bool is_one() const {
    if (scale_ == 1 && mono_.empty() && fac_.empty()) return true;
    return *this == Coefficient(1L);
  }

  Coefficient operator-() const {
    Coefficient r = *this;
    r.scale_ = -r.scale_;
    return r;
  }
  Coefficient operator+(const Coefficient& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    Expvec shm = expvec_min(mono_, o.mono_);
    std::vector<const Poly*> keys;
    for (const auto& [f, e] : fac_) keys.push_back(&f);
    for (const auto& [f, e] : o.fac_)
      if (!fac_.count(f)) keys.push_back(&f);
    FactorMap shf;
    for (const Poly* f : keys) {
      auto ia = fac_.find(*f);
      auto ib = o.fac_.find(*f);
      int m = std::min(ia == fac_.end() ? 0 : ia->second, ib == o.fac_.end() ? 0 : ib->second);
      if (m != 0) shf.emplace(*f, m);
    }
    Poly s = residual(*this, shm, shf) + residual(o, shm, shf);
    Coefficient r;
    if (s.is_zero()) return r;
    r.scale_ = 1;
    r.mono_ = shm;
    r.fac_ = std::move(shf);
    // Sums routinely recreate factors of their operands; peel those off before the
    // leftover is frozen as a new opaque factor.
    for (const Poly* f : keys) {
      if (s.is_constant()) break;
      while (division_plausible(s, *f)) {
        auto q = s.divide_exact(*f, kDivSteps, div_cap(s));
        if (!q) break;
        s = std::move(*q);
        r.adjust(*f, 1);
        if (s.is_constant()) break;
      }
    }
    r.push(std::move(s), 1);
    return r;
  }
  Coefficient operator-(const Coefficient& o) const { return *this + (-o); }
  Coefficient operator*(const Coefficient& o) const {
    if (is_zero() || o.is_zero()) return Coefficient();
    Coefficient r = *this;
    r.scale_ *= o.scale_;
    r.mono_ = expvec_add(r.mono_, o.mono_);
    for (const auto& [f, e] : o.fac_) r.adjust(f, e);
    return r;
  }
  Coefficient operator/(const Coefficient& o) const {
    if (o.is_zero()) throw DivisionByZero();
    return *this * o.inv();
  }
  Coefficient inv() const {
    if (is_zero()) throw DivisionByZero();
    Coefficient r;
    r.scale_ = Rat(scale_.get_den(), scale_.get_num());
    r.scale_.canonicalize();
    r.mono_ = expvec_neg(mono_);
    for (const auto& [f, e] : fac_) r.fac_.emplace(f, -e);
    return r;
  }
  Coefficient pow(int n) const {
    if (n == 0) return Coefficient(1L);
    if (is_zero()) {
      if (n < 0) throw DivisionByZero();
      return Coefficient();
    }
    Coefficient r;
    r.scale_ = rat_pow(scale_, n);
    r.mono_ = expvec_scaled(mono_, n);
    for (const auto& [f, e] : fac_) r.fac_.emplace(f, e * n);
    return r;
  }
  Coefficient invert_vars() const {
    Coefficient r;
    if (is_zero()) return r;
    r.scale_ = scale_;
    r.mono_ = expvec_neg(mono_);
    for (const auto& [f, e] : fac_) r.push(f.invert_vars(), e);
    return r;
  }

  Coefficient& operator+=(const Coefficient& o) { return *this = *this + o; }
  Coefficient& operator-=(const Coefficient& o) { return *this = *this - o; }
  Coefficient& operator*=(const Coefficient& o) { return *this = *this * o; }
  Coefficient& operator/=(const Coefficient& o) { return *this = *this / o; }

  bool operator==(const Coefficient& o) const {
    if (scale_ == o.scale_ && mono_ == o.mono_ && fac_ == o.fac_) return true;
    return (*this - o).is_zero();
  }
  bool operator!=(const Coefficient& o) const { return !(*this == o); }

  Rat eval(const std::vector<Rat>& assign) const {
    if (scale_ == 0) return Rat(0);
    Rat r = scale_ * Poly::monomial(mono_, 1).eval(assign);
    for (const auto& [f, e] : fac_) {
      Rat v = f.eval(assign);
      if (v == 0 && e < 0) throw EvaluationPole("denominator vanishes at the sample point");
      r *= rat_pow(v, e);
    }
    return r;
  }

  // Constant value if the fraction is a rational number, else nullopt.
  std::optional<Rat> as_rat() const {
    if (scale_ == 0) return Rat(0);
    if (mono_.empty() && fac_.empty()) return scale_;
    return std::nullopt;
  }

  std::string str() const;

 private:
  static constexpr size_t kDivSteps = 4096;
  static size_t div_cap(const Poly& p) { return 4 * p.terms.size() + 256; }

  void adjust(const Poly& f, int delta) {
    if (delta == 0) return;
    auto it = fac_.find(f);
    if (it == fac_.end()) {
      fac_.emplace(f, delta);
    } else {
      it->second += delta;
      if (it->second == 0) fac_.erase(it);
    }
  }

  // Strips the common monomial, the rational content and the lead sign; what remains is
  // the canonical factor (or a constant).
  static Poly normalize_factor(Poly f, Rat& scale, Expvec& mono) {
    size_t nsym = 0;
    for (const auto& [e, c] : f.terms) nsym = std::max(nsym, e.size());
    mono.assign(nsym, 0);
    bool first = true;
    for (const auto& [e, c] : f.terms) {
      for (size_t i = 0; i < nsym; ++i) {
        int x = i < e.size() ? e[i] : 0;
        mono[i] = first ? x : std::min(mono[i], x);
      }
      first = false;
    }
    expvec_trim(mono);
    if (!mono.empty()) {
      Poly shifted;
      for (const auto& [e, c] : f.terms) shifted.terms.emplace(expvec_sub(e, mono), c);
      f = std::move(shifted);
    }
    Rat c = f.content();
    if (f.lead().second < 0) c = -c;
    if (c != 1) f = f.mul_scalar(Rat(1) / c);
    scale = c;
    return f;
  }

  void push(Poly f, int e) {
    if (e == 0 || f.is_zero()) return;
    Rat sc;
    Expvec mono;
    f = normalize_factor(std::move(f), sc, mono);
    scale_ *= rat_pow(sc, e);
    mono_ = expvec_add(mono_, expvec_scaled(mono, e));
    if (f.is_constant()) return;
    int s = e > 0 ? 1 : -1;
    for (int i = 0; i < (e > 0 ? e : -e); ++i) push_one(f, s);
  }

  // Inserts one power of a normalized factor, cancelling against opposite-sign factors
  // and splitting composites whenever divisibility is detected in either direction.
  void push_one(Poly f, int s) {
    for (;;) {
      Poly g;
      std::optional<Poly> q;
      bool split = false;
      for (const auto& [gf, eg] : fac_) {
        if ((eg > 0) == (s > 0)) continue;
        if (division_plausible(f, gf) && (q = f.divide_exact(gf, kDivSteps, div_cap(f)))) {
          g = gf;
          break;
        }
        if (division_plausible(gf, f) && (q = gf.divide_exact(f, kDivSteps, div_cap(gf)))) {
          g = gf;
          split = true;
          break;
        }
      }
      if (!q) break;
      if (!split) {
        // f = g * q: one g cancels, continue with the cofactor.
        adjust(g, s);
        Rat sc;
        Expvec mono;
        f = normalize_factor(std::move(*q), sc, mono);
        scale_ *= rat_pow(sc, s);
        mono_ = expvec_add(mono_, expvec_scaled(mono, s));
        if (f.is_constant()) return;
      } else {
        // g = f * q: replace one g by its parts; the f part cancels the incoming power.
        int gs = fac_.at(g) > 0 ? 1 : -1;
        adjust(g, -gs);
        Rat sc;
        Expvec mono;
        Poly h = normalize_factor(std::move(*q), sc, mono);
        scale_ *= rat_pow(sc, gs);
        mono_ = expvec_add(mono_, expvec_scaled(mono, gs));
        if (!h.is_constant()) push_one(std::move(h), gs);
        return;
      }
    }
    adjust(f, s);
  }

  // scale * x^(mono - shm) * prod f^(e - shf[f]), a true polynomial by choice of the mins.
  static Poly residual(const Coefficient& c, const Expvec& shm, const FactorMap& shf) {
    Poly p = Poly::monomial(expvec_sub(c.mono_, shm), c.scale_);
    for (const auto& [f, e] : c.fac_) {
      auto it = shf.find(f);
      int rexp = e - (it == shf.end() ? 0 : it->second);
      if (rexp > 0) p = p * f.pow(static_cast<unsigned>(rexp));
    }
    for (const auto& [f, m] : shf)
      if (m < 0 && !c.fac_.count(f)) p = p * f.pow(static_cast<unsigned>(-m));
    return p;
  }

  Rat scale_;
  Expvec mono_;
  FactorMap fac_;
};

using Cf = Coefficient;

// Canonical parameter builders. q and t are fourth powers of the stored symbols so
// that both gamma = sqrt(t/q) and sqrt(gamma) stay polynomial.
inline Cf sq() { return Cf::sym("s_q", 2); }
inline Cf st() { return Cf::sym("s_t", 2); }
inline Cf q_param() { return Cf::sym("s_q", 4); }
inline Cf t_param() { return Cf::sym("s_t", 4); }
inline Cf q1_param() { return Cf::sym("s_t", -4); }
inline Cf q2_param() { return Cf::sym("s_q", 4); }
inline Cf q3_param() { return Cf::sym("s_t", 4) * Cf::sym("s_q", -4); }
inline Cf gamma_param() { return Cf::sym("s_t", 2) * Cf::sym("s_q", -2); }

inline std::string monomial_str(const Expvec& e) {
  std::ostringstream os;
  bool any = false;
  for (size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    std::string nm = Symbols::name(static_cast<int>(i));
    int ex = e[i];
    if ((nm == "s_q" || nm == "s_t") && ex % 4 == 0) {
      nm = nm == "s_q" ? "q" : "t";
      ex /= 4;
    }
    if (any) os << "*";
    os << nm;
    if (ex != 1) os << "^" << ex;
    any = true;
  }
  if (!any) os << "1";
  return os.str();
}

inline std::string poly_str(const Poly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = p.terms.rbegin(); it != p.terms.rend(); ++it) {
    const auto& [e, c] = *it;
    Rat a = c;
    if (!first) {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    if (e.empty()) {
      os << rat_str(a);
    } else if (a == 1) {
      os << monomial_str(e);
    } else if (a == -1) {
      os << "-" << monomial_str(e);
    } else {
      os << rat_str(a) << "*" << monomial_str(e);
    }
  }
  return os.str();
}

inline std::string Coefficient::str() const {
  Poly n = num(), d = den();
  if (d.is_constant() && d.terms.begin()->second == 1) return poly_str(n);
  return "(" + poly_str(n) + ") / (" + poly_str(d) + ")";
}

// Uniform random rational p/r with p, r in [2, 2^16].
inline Rat random_rat(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> d(2, 65536);
  Rat r(d(rng), d(rng));
  r.canonicalize();
  return r;
}

}  // namespace gmsf
