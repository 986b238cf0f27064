#pragma once

#include <algorithm>
#include <initializer_list>
#include <string>
#include <vector>

#include "gmsf/errors.hpp"
#include "gmsf/json_io.hpp"

// Partition / multipartition combinatorics and the scalar factories built on box
// contents: Y and Psi functions, Nekrasov factors, Pieri coefficients and the
// normalization factors relating the different vertical bases.

namespace gmsf {

// Rows and columns are 1-based; alpha tags the alphabet when the box lives in a
// multipartition component (1 for plain partitions).
struct Box {
  int i = 1;
  int j = 1;
  int alpha = 1;

  friend bool operator==(const Box& a, const Box& b) {
    return a.i == b.i && a.j == b.j && a.alpha == b.alpha;
  }
  friend bool operator!=(const Box& a, const Box& b) { return !(a == b); }
  friend bool operator<(const Box& a, const Box& b) {
    if (a.alpha != b.alpha) return a.alpha < b.alpha;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  }
};

// Canonical form: weakly decreasing positive parts, trailing zeros stripped, so the
// empty partition is the unique size-0 value and values are stable container keys.
class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}
  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] <= 0 || (i + 1 < parts_.size() && parts_[i] < parts_[i + 1]))
        throw std::invalid_argument("parts must be weakly decreasing and positive");
    }
  }

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }

  // 1-based; rows beyond the length read as 0 so formulas can use lambda_i freely.
  int part(int i) const {
    return (i >= 1 && i <= length()) ? parts_[static_cast<std::size_t>(i - 1)] : 0;
  }

  int size() const {
    int s = 0;
    for (int p : parts_) s += p;
    return s;
  }

  Partition transpose() const {
    std::vector<int> t(parts_.empty() ? 0 : static_cast<std::size_t>(parts_[0]), 0);
    for (int j = 1; j <= (parts_.empty() ? 0 : parts_[0]); ++j)
      for (int p : parts_) t[static_cast<std::size_t>(j - 1)] += (p >= j) ? 1 : 0;
    return Partition(std::move(t));
  }

  // n(lambda) = sum_i (i-1) lambda_i.
  int n_stat() const {
    int s = 0;
    for (int i = 1; i <= length(); ++i) s += (i - 1) * part(i);
    return s;
  }

  // z_lambda = prod_k k^{m_k} m_k! over part multiplicities.
  mpz_class z_order() const {
    mpz_class z = 1;
    int i = 0;
    while (i < length()) {
      int k = parts_[static_cast<std::size_t>(i)], m = 0;
      while (i < length() && parts_[static_cast<std::size_t>(i)] == k) ++i, ++m;
      for (int c = 1; c <= m; ++c) z *= mpz_class(k) * c;
    }
    return z;
  }

  bool contains(const Partition& mu) const {
    for (int i = 1; i <= mu.length(); ++i)
      if (mu.part(i) > part(i)) return false;
    return true;
  }

  std::vector<Box> boxes() const {
    std::vector<Box> bs;
    for (int i = 1; i <= length(); ++i)
      for (int j = 1; j <= part(i); ++j) bs.push_back({i, j, 1});
    return bs;
  }

  // A(lambda): one box per distinct part size plus the new-row slot.
  std::vector<Box> addable_boxes() const {
    std::vector<Box> bs;
    for (int i = 1; i <= length() + 1; ++i)
      if (i == 1 || part(i) < part(i - 1)) bs.push_back({i, part(i) + 1, 1});
    return bs;
  }

  std::vector<Box> removable_boxes() const {
    std::vector<Box> bs;
    for (int i = 1; i <= length(); ++i)
      if (part(i) > part(i + 1)) bs.push_back({i, part(i), 1});
    return bs;
  }

  bool is_addable(const Box& b) const {
    return b.i >= 1 && b.j == part(b.i) + 1 && (b.i == 1 || part(b.i - 1) >= b.j);
  }
  bool is_removable(const Box& b) const {
    return b.i >= 1 && b.j >= 1 && b.j == part(b.i) && part(b.i + 1) < b.j;
  }

  Partition with_box(const Box& b) const {
    if (!is_addable(b)) throw InvalidBox();
    std::vector<int> p = parts_;
    if (b.i == length() + 1)
      p.push_back(1);
    else
      ++p[static_cast<std::size_t>(b.i - 1)];
    return Partition(std::move(p));
  }

  Partition without_box(const Box& b) const {
    if (!is_removable(b)) throw InvalidBox();
    std::vector<int> p = parts_;
    --p[static_cast<std::size_t>(b.i - 1)];
    return Partition(std::move(p));
  }

  std::string str() const {
    std::string s = "[";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(parts_[i]);
    }
    return s + "]";
  }

  friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
  friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }
  // Container order: weight first, then lex on parts.
  friend bool operator<(const Partition& a, const Partition& b) {
    int sa = a.size(), sb = b.size();
    if (sa != sb) return sa < sb;
    return a.parts_ < b.parts_;
  }

 private:
  std::vector<int> parts_;
};

inline std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int rest, int maxpart) -> void {
    if (rest == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(rest, maxpart); p >= 1; --p) {
      cur.push_back(p);
      self(self, rest - p, p);
      cur.pop_back();
    }
  };
  if (n >= 0) rec(rec, n, n == 0 ? 1 : n);
  return out;
}

class MultiPartition {
 public:
  MultiPartition() = default;
  MultiPartition(std::initializer_list<Partition> comps)
      : MultiPartition(std::vector<Partition>(comps)) {}
  explicit MultiPartition(std::vector<Partition> comps) : comps_(std::move(comps)) {
    if (comps_.empty()) throw RankMismatch("multipartition needs at least one component");
  }

  int rank() const { return static_cast<int>(comps_.size()); }
  const Partition& comp(int alpha) const {
    if (alpha < 1 || alpha > rank()) throw RankMismatch("component index out of range");
    return comps_[static_cast<std::size_t>(alpha - 1)];
  }
  const std::vector<Partition>& comps() const { return comps_; }

  int size() const {
    int s = 0;
    for (const auto& p : comps_) s += p.size();
    return s;
  }

  std::vector<Box> boxes() const {
    std::vector<Box> bs;
    for (int a = 1; a <= rank(); ++a)
      for (Box b : comp(a).boxes()) bs.push_back({b.i, b.j, a});
    return bs;
  }
  std::vector<Box> addable_boxes() const {
    std::vector<Box> bs;
    for (int a = 1; a <= rank(); ++a)
      for (Box b : comp(a).addable_boxes()) bs.push_back({b.i, b.j, a});
    return bs;
  }
  std::vector<Box> removable_boxes() const {
    std::vector<Box> bs;
    for (int a = 1; a <= rank(); ++a)
      for (Box b : comp(a).removable_boxes()) bs.push_back({b.i, b.j, a});
    return bs;
  }

  MultiPartition with_box(const Box& b) const {
    std::vector<Partition> c = comps_;
    if (b.alpha < 1 || b.alpha > rank()) throw InvalidBox("alphabet index out of range");
    c[static_cast<std::size_t>(b.alpha - 1)] = comp(b.alpha).with_box({b.i, b.j, 1});
    return MultiPartition(std::move(c));
  }
  MultiPartition without_box(const Box& b) const {
    std::vector<Partition> c = comps_;
    if (b.alpha < 1 || b.alpha > rank()) throw InvalidBox("alphabet index out of range");
    c[static_cast<std::size_t>(b.alpha - 1)] = comp(b.alpha).without_box({b.i, b.j, 1});
    return MultiPartition(std::move(c));
  }

  std::string str() const {
    std::string s = "(";
    for (int a = 1; a <= rank(); ++a) {
      if (a > 1) s += ",";
      s += comp(a).str();
    }
    return s + ")";
  }

  friend bool operator==(const MultiPartition& a, const MultiPartition& b) {
    return a.comps_ == b.comps_;
  }
  friend bool operator!=(const MultiPartition& a, const MultiPartition& b) { return !(a == b); }
  friend bool operator<(const MultiPartition& a, const MultiPartition& b) {
    return a.comps_ < b.comps_;
  }

 private:
  std::vector<Partition> comps_;
};

// --- parameter monomials -------------------------------------------------------------
// Internal storage is always s_q, s_t with q = s_q^4, t = s_t^4, q1 = t^{-1}, q2 = q,
// q3 = (q1 q2)^{-1} = t/q, gamma = (s_t/s_q)^2; half powers of gamma stay monomial.

inline Cf q_pow(int a) { return a ? Cf::sym("s_q", 4 * a) : Cf(1L); }
inline Cf t_pow(int a) { return a ? Cf::sym("s_t", 4 * a) : Cf(1L); }
inline Cf q1_pow(int a) { return t_pow(-a); }
inline Cf q2_pow(int a) { return q_pow(a); }
inline Cf q3_pow(int a) { return q_pow(-a) * t_pow(a); }
inline Cf gamma_pow(int a) { return a ? Cf::sym("s_t", 2 * a) * Cf::sym("s_q", -2 * a) : Cf(1L); }
// gamma^{a/2}
inline Cf gamma_half_pow(int a) { return a ? Cf::sym("s_t", a) * Cf::sym("s_q", -a) : Cf(1L); }

// chi = q1^{i-1} q2^{j-1}.
inline Cf content(const Box& b) { return q1_pow(b.i - 1) * q2_pow(b.j - 1); }
inline Cf content_pow(const Box& b, int k) { return q1_pow(k * (b.i - 1)) * q2_pow(k * (b.j - 1)); }

// sum over boxes of chi^k; k may be negative.
inline Cf pk_chi(const Partition& la, int k) {
  Cf s(0L);
  for (const Box& b : la.boxes()) s += content_pow(b, k);
  return s;
}

// g_lambda = prod chi = q1^{n(lambda)} q2^{n(lambda^T)}.
inline Cf g_monomial(const Partition& la) {
  return q1_pow(la.n_stat()) * q2_pow(la.transpose().n_stat());
}

// p_k(sp_lambda) = sum_{i<=l} q1^{ki}(q2^{k lambda_i} - 1) + q1^k/(1-q1^k), k >= 1.
inline Cf pk_sp(const Partition& la, int k) {
  if (k < 1) throw std::invalid_argument("pk_sp needs k >= 1");
  Cf s(0L);
  for (int i = 1; i <= la.length(); ++i) s += q1_pow(k * i) * (q2_pow(k * la.part(i)) - Cf(1L));
  return s + q1_pow(k) / (Cf(1L) - q1_pow(k));
}

// p_k(xi_lambda) = 1 - (1-q1^k)(1-q2^k) sum chi^k; for xi^vee use pk_xi_dual.
inline Cf pk_xi(const Partition& la, int k) {
  if (k < 1) throw std::invalid_argument("pk_xi needs k >= 1");
  return Cf(1L) - (Cf(1L) - q1_pow(k)) * (Cf(1L) - q2_pow(k)) * pk_chi(la, k);
}

inline Cf pk_xi_dual(const Partition& la, int k) { return pk_xi(la, k).invert_vars(); }
inline Cf pk_sp_dual(const Partition& la, int k) { return pk_sp(la, k).invert_vars(); }

// S(z) = (1-q1 z)(1-q2 z) / ((1-z)(1-q1 q2 z)).
inline Cf S_kernel(const Cf& z) {
  Cf d = (Cf(1L) - z) * (Cf(1L) - q3_pow(-1) * z);
  if (d.is_zero()) throw ArgumentPole("S(z) pole");
  return (Cf(1L) - q1_pow(1) * z) * (Cf(1L) - q2_pow(1) * z) / d;
}

// g(z) = prod_{a=1,2,3} (1-q_a z)/(1-q_a^{-1} z).
inline Cf g_kernel(const Cf& z) {
  Cf num(1L), den(1L);
  for (int a = 1; a <= 3; ++a) {
    Cf qa = (a == 1) ? q1_pow(1) : (a == 2) ? q2_pow(1) : q3_pow(1);
    Cf f = Cf(1L) - qa.inv() * z;
    if (f.is_zero()) throw ArgumentPole("g(z) pole");
    num *= Cf(1L) - qa * z;
    den *= f;
  }
  return num / den;
}

// Y_lambda(z) = prod_{A}(1 - chi/z) / prod_{R}(1 - chi/(q3 z)).
inline Cf calY(const Partition& la, const Cf& z) {
  if (z.is_zero()) throw ArgumentPole("calY at zero argument");
  Cf num(1L), den(1L);
  for (const Box& b : la.addable_boxes()) num *= Cf(1L) - content(b) / z;
  for (const Box& b : la.removable_boxes()) {
    Cf f = Cf(1L) - content(b) / (q3_pow(1) * z);
    if (f.is_zero()) throw ArgumentPole("calY pole");
    den *= f;
  }
  return num / den;
}

// Psi_lambda(z) = Y_lambda(q3^{-1} z)/Y_lambda(z), expanded over A and R so each pole
// factor is visible before dividing.
inline Cf calPsi(const Partition& la, const Cf& z) {
  if (z.is_zero()) throw ArgumentPole("calPsi at zero argument");
  Cf num(1L), den(1L);
  for (const Box& b : la.addable_boxes()) {
    Cf f = Cf(1L) - content(b) / z;
    if (f.is_zero()) throw ArgumentPole("calPsi pole");
    num *= Cf(1L) - q3_pow(1) * content(b) / z;
    den *= f;
  }
  for (const Box& b : la.removable_boxes()) {
    Cf f = Cf(1L) - content(b) / z;
    if (f.is_zero()) throw ArgumentPole("calPsi pole");
    num *= Cf(1L) - content(b) / (q3_pow(1) * z);
    den *= f;
  }
  return num / den;
}

// --- Pieri coefficients ----------------------------------------------------------------

// psi_lambda(i,j) over rows above the new box.
inline Cf pieri_psi(const Partition& la, const Box& b) {
  if (!la.is_addable(b)) throw InvalidBox();
  Cf r(1L);
  for (int ip = 1; ip < b.i; ++ip) {
    int lp = la.part(ip);
    r *= (Cf(1L) - q_pow(lp - b.j + 1) * t_pow(b.i - ip - 1)) *
         (Cf(1L) - q_pow(lp - b.j) * t_pow(b.i - ip + 1)) /
         ((Cf(1L) - q_pow(lp - b.j + 1) * t_pow(b.i - ip)) *
          (Cf(1L) - q_pow(lp - b.j) * t_pow(b.i - ip)));
  }
  return r;
}

// psi*_lambda(i,j) over columns left of the removed box.
inline Cf pieri_psi_star(const Partition& la, const Box& b) {
  if (!la.is_removable(b)) throw InvalidBox();
  Partition laT = la.transpose();
  Cf r(1L);
  for (int jp = 1; jp < b.j; ++jp) {
    int lp = laT.part(jp);
    r *= (Cf(1L) - q_pow(b.j - jp - 1) * t_pow(lp - b.i + 1)) *
         (Cf(1L) - q_pow(b.j - jp + 1) * t_pow(lp - b.i)) /
         ((Cf(1L) - q_pow(b.j - jp) * t_pow(lp - b.i + 1)) *
          (Cf(1L) - q_pow(b.j - jp) * t_pow(lp - b.i)));
  }
  return r;
}

// Residues of 1/Y at its simple poles: the vanishing factor of the product form is
// dropped and the rest evaluated at the pole, so no symbolic limit is needed.
inline Cf pieri_r(const Partition& la, const Box& b) {
  if (!la.is_addable(b)) throw InvalidBox();
  Cf chi = content(b), r(1L);
  for (const Box& c : la.removable_boxes()) r *= Cf(1L) - content(c) / (q3_pow(1) * chi);
  for (const Box& c : la.addable_boxes()) {
    if (c.i == b.i && c.j == b.j) continue;
    r /= Cf(1L) - content(c) / chi;
  }
  return r;
}

inline Cf pieri_r_star(const Partition& la, const Box& b) {
  if (!la.is_removable(b)) throw InvalidBox();
  Cf chi = content(b), r(1L);
  for (const Box& c : la.addable_boxes()) r *= Cf(1L) - q3_pow(1) * content(c) / chi;
  for (const Box& c : la.removable_boxes()) {
    if (c.i == b.i && c.j == b.j) continue;
    r /= Cf(1L) - content(c) / chi;
  }
  return r;
}

// --- Nekrasov factors -----------------------------------------------------------------

// Arm/leg form; polynomial in z.
inline Cf nekrasov(const Partition& la, const Partition& mu, const Cf& z) {
  Partition laT = la.transpose(), muT = mu.transpose();
  Cf r(1L);
  for (const Box& b : la.boxes())
    r *= Cf(1L) - z * q1_pow(laT.part(b.j) - b.i + 1) * q2_pow(b.j - mu.part(b.i));
  for (const Box& b : mu.boxes())
    r *= Cf(1L) - z * q1_pow(b.i - muT.part(b.j)) * q2_pow(la.part(b.i) - b.j + 1);
  return r;
}

// Double-product form over box contents; agrees with the arm/leg form for generic z.
// The S denominators telescope against numerators of neighbouring factors, so equal
// binomials are cancelled before anything is expanded.
inline Cf nekrasov_contents(const Partition& la, const Partition& mu, const Cf& z) {
  std::vector<Cf> num, den;
  for (const Box& b : la.boxes())
    for (const Box& c : mu.boxes()) {
      Cf w = z * content(b) / content(c);
      num.push_back(Cf(1L) - q1_pow(1) * w);
      num.push_back(Cf(1L) - q2_pow(1) * w);
      den.push_back(Cf(1L) - w);
      den.push_back(Cf(1L) - q3_pow(-1) * w);
    }
  for (const Box& b : la.boxes()) num.push_back(Cf(1L) - q3_pow(-1) * z * content(b));
  for (const Box& c : mu.boxes()) num.push_back(Cf(1L) - z / content(c));

  std::vector<bool> taken(num.size(), false);
  Cf r(1L);
  for (const Cf& d : den) {
    bool matched = false;
    for (std::size_t i = 0; i < num.size() && !matched; ++i)
      if (!taken[i] && num[i] == d) taken[i] = matched = true;
    if (!matched) {
      if (d.is_zero()) throw ArgumentPole("S(z) pole");
      r /= d;
    }
  }
  for (std::size_t i = 0; i < num.size(); ++i)
    if (!taken[i]) r *= num[i];
  return r;
}

// N~_{lambda,mu}(z) = N_{lambda,mu}(z) prod_{box in lambda} (-q3^{-1} z chi)^{-1};
// symmetric under (lambda,mu,z) -> (mu,lambda,q3/z).
inline Cf nekrasov_tilde(const Partition& la, const Partition& mu, const Cf& z) {
  Cf r = nekrasov(la, mu, z);
  for (const Box& b : la.boxes()) r /= -(q3_pow(-1) * z * content(b));
  return r;
}

// --- normalization factors --------------------------------------------------------------

// b_lambda = prod (1-q^{arm} t^{leg+1}) / (1-q^{arm+1} t^{leg}).
inline Cf b_coeff(const Partition& la) {
  Partition laT = la.transpose();
  Cf r(1L);
  for (const Box& b : la.boxes()) {
    int arm = la.part(b.i) - b.j, leg = laT.part(b.j) - b.i;
    r *= (Cf(1L) - q_pow(arm) * t_pow(leg + 1)) / (Cf(1L) - q_pow(arm + 1) * t_pow(leg));
  }
  return r;
}

// P_lambda evaluated on the vacuum alphabet sp_empty, as a closed product.
// Column factors carry the (1-q1^{i-i'} q2^{j-lambda_i'}) term on top: this is the
// orientation fixed by m_{11} = (p_1^2-p_2)/2 and by q^{-|lambda|}/N~_{lambda,lambda}(1).
inline Cf eval_P_at_sp_empty(const Partition& la) {
  Cf r = (la.size() % 2) ? Cf(-1L) : Cf(1L);
  for (const Box& b : la.boxes()) {
    r *= q1_pow(b.i - 1) * q2_pow(b.j - 1) / (Cf(1L) - q1_pow(-1) * q2_pow(b.j - 1));
    for (int ip = 1; ip < b.i; ++ip)
      r *= (Cf(1L) - q1_pow(b.i - ip) * q2_pow(b.j - la.part(ip))) /
           (Cf(1L) - q1_pow(1 + b.i - ip) * q2_pow(b.j - la.part(ip)));
  }
  return r;
}

// b~_lambda = b_lambda P_lambda(sp_empty)^2; also equals q^{-|lambda|}/N~_{lambda,lambda}(1).
inline Cf b_tilde(const Partition& la) {
  return b_coeff(la) * eval_P_at_sp_empty(la).pow(2);
}

// Spherical Pieri coefficients.
inline Cf pieri_tilde(const Partition& la, const Box& b) {
  return eval_P_at_sp_empty(la.with_box(b)) / eval_P_at_sp_empty(la) * pieri_psi(la, b);
}
inline Cf pieri_tilde_star(const Partition& la, const Box& b) {
  return eval_P_at_sp_empty(la.without_box(b)) / eval_P_at_sp_empty(la) * pieri_psi_star(la, b);
}

// --- multipartition extensions ---------------------------------------------------------

inline void check_weights(const MultiPartition& mla, const std::vector<Cf>& v) {
  if (static_cast<int>(v.size()) != mla.rank()) throw RankMismatch("one weight per component");
}

inline Cf calY_multi(const MultiPartition& mla, const Cf& z, const std::vector<Cf>& v) {
  check_weights(mla, v);
  Cf r(1L);
  for (int a = 1; a <= mla.rank(); ++a) r *= calY(mla.comp(a), z / v[static_cast<std::size_t>(a - 1)]);
  return r;
}

inline Cf calPsi_multi(const MultiPartition& mla, const Cf& z, const std::vector<Cf>& v) {
  check_weights(mla, v);
  Cf r(1L);
  for (int a = 1; a <= mla.rank(); ++a)
    r *= calPsi(mla.comp(a), z / v[static_cast<std::size_t>(a - 1)]);
  return r;
}

// r_(bold lambda)(box|v) = r_{lambda^(a)}(box) prod_{b != a} Y_{lambda^(b)}(v_a chi / v_b)^{-1}.
inline Cf pieri_r_multi(const MultiPartition& mla, const Box& b, const std::vector<Cf>& v) {
  check_weights(mla, v);
  Cf chi = content(Box{b.i, b.j, 1});
  Cf r = pieri_r(mla.comp(b.alpha), {b.i, b.j, 1});
  for (int be = 1; be <= mla.rank(); ++be) {
    if (be == b.alpha) continue;
    Cf y = calY(mla.comp(be), v[static_cast<std::size_t>(b.alpha - 1)] * chi /
                                  v[static_cast<std::size_t>(be - 1)]);
    if (y.is_zero()) throw ResonanceError();
    r /= y;
  }
  return r;
}

// r*_(bold lambda)(box|v) = r*_{lambda^(a)}(box) prod_{b != a} Y_{lambda^(b)}(q3^{-1} v_a chi / v_b).
inline Cf pieri_r_star_multi(const MultiPartition& mla, const Box& b, const std::vector<Cf>& v) {
  check_weights(mla, v);
  Cf chi = content(Box{b.i, b.j, 1});
  Cf r = pieri_r_star(mla.comp(b.alpha), {b.i, b.j, 1});
  for (int be = 1; be <= mla.rank(); ++be) {
    if (be == b.alpha) continue;
    r *= calY(mla.comp(be), q3_pow(-1) * v[static_cast<std::size_t>(b.alpha - 1)] * chi /
                                v[static_cast<std::size_t>(be - 1)]);
  }
  return r;
}

// G and G* compare vertical basis normalizations; resonant numeric weights make an
// N~ factor vanish and cannot be inverted.
inline Cf norm_G(const MultiPartition& mla, const std::vector<Cf>& v) {
  check_weights(mla, v);
  int g = 0;
  for (int a = 1; a <= mla.rank(); ++a) g += (a - 1) * mla.comp(a).size();
  Cf r = gamma_pow(g);
  for (int a = 1; a <= mla.rank(); ++a)
    for (int b = 1; b < a; ++b) {
      Cf nn = nekrasov_tilde(mla.comp(a), mla.comp(b),
                             v[static_cast<std::size_t>(a - 1)] / v[static_cast<std::size_t>(b - 1)]);
      if (nn.is_zero()) throw ResonanceError();
      r /= nn;
    }
  return r;
}

inline Cf norm_G_star(const MultiPartition& mla, const std::vector<Cf>& v) {
  check_weights(mla, v);
  int m = mla.rank(), g = 0;
  for (int a = 1; a <= m; ++a) g += (m - a) * mla.comp(a).size();
  Cf r = gamma_pow(g);
  for (int a = 1; a <= m; ++a)
    for (int b = a + 1; b <= m; ++b) {
      Cf nn = nekrasov_tilde(mla.comp(a), mla.comp(b),
                             v[static_cast<std::size_t>(a - 1)] / v[static_cast<std::size_t>(b - 1)]);
      if (nn.is_zero()) throw ResonanceError();
      r /= nn;
    }
  return r;
}

// --- JSON ------------------------------------------------------------------------------

inline Json partition_to_json(const Partition& la) {
  Json a = Json::array();
  for (int p : la.parts()) a.push_back(p);
  return a;
}

inline Partition partition_from_json(const Json& j) {
  std::vector<int> p;
  for (const auto& x : j) p.push_back(x.get<int>());
  return Partition(std::move(p));
}

inline Json multipartition_to_json(const MultiPartition& mla) {
  Json a = Json::array();
  for (const auto& p : mla.comps()) a.push_back(partition_to_json(p));
  return a;
}

inline MultiPartition multipartition_from_json(const Json& j) {
  std::vector<Partition> c;
  for (const auto& x : j) c.push_back(partition_from_json(x));
  return MultiPartition(std::move(c));
}

inline Json box_to_json(const Box& b) { return Json::array({b.alpha, b.i, b.j}); }

inline Box box_from_json(const Json& j) {
  return Box{j.at(1).get<int>(), j.at(2).get<int>(), j.at(0).get<int>()};
}

}  // namespace gmsf
