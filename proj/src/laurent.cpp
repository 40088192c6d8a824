#include "fflog/laurent.hpp"

#include <algorithm>
#include <sstream>

namespace fflog {

std::shared_ptr<const WorkingField> WorkingField::make(int p, int m, int s, long long e,
                                                       long long default_prec) {
  return make(FieldConfig::make(p, m, s), e, default_prec);
}

std::shared_ptr<const WorkingField> WorkingField::make(FieldConfig F, long long e,
                                                       long long default_prec) {
  if (e < 1) raise(err::FIELD_CONSTRAINT, "ramification index must be >= 1");
  if (default_prec < 1) raise(err::FIELD_CONSTRAINT, "default precision must be >= 1");
  auto W = std::make_shared<WorkingField>();
  W->F = std::move(F);
  W->e = e;
  W->default_prec = default_prec;
  return W;
}

void WElem::normalize() {
  if ((long long)c_.size() > 0 && prec_ < kExactPrec) {
    // drop digits at or beyond the precision horizon
    if (v_ >= prec_) {
      c_.clear();
    } else if (v_ + (long long)c_.size() > prec_) {
      c_.resize(prec_ - v_);
    }
  }
  std::size_t lead = 0;
  while (lead < c_.size() && c_[lead] == 0) ++lead;
  if (lead) {
    c_.erase(c_.begin(), c_.begin() + lead);
    v_ += (long long)lead;
  }
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
  if (c_.empty()) v_ = 0;
}

WElem WElem::zero(WFieldPtr W, long long prec) {
  WElem x;
  x.W_ = std::move(W);
  x.prec_ = prec;
  return x;
}

WElem WElem::one(const WFieldPtr& W) { return monomial(W, 1, 0); }

WElem WElem::monomial(WFieldPtr W, gf_t coeff, long long uval, long long prec) {
  WElem x;
  x.W_ = std::move(W);
  x.v_ = uval;
  x.prec_ = prec;
  if (coeff) x.c_ = {coeff};
  x.normalize();
  return x;
}

WElem WElem::theta(const WFieldPtr& W, long long power) {
  return monomial(W, 1, -W->e * power);
}

WElem WElem::from_digits(WFieldPtr W, long long v, std::vector<gf_t> digits,
                         long long prec) {
  WElem x;
  x.W_ = std::move(W);
  x.v_ = v;
  x.c_ = std::move(digits);
  x.prec_ = prec;
  x.normalize();
  return x;
}

WElem WElem::from_int(const WFieldPtr& W, long long n) {
  return monomial(W, W->F.Fqs().from_int(n), 0);
}

long long WElem::uval() const {
  if (c_.empty()) raise(err::INDETERMINATE, "valuation of an apparent zero");
  return v_;
}

long long WElem::uval_or(long long dflt) const { return c_.empty() ? dflt : v_; }

long long WElem::rel_prec() const {
  if (is_exact()) return kExactPrec;
  return prec_ - uval_or(prec_);
}

OrdValue WElem::ord_theta() const { return {uval(), W_->e}; }

std::optional<OrdValue> WElem::norm_exponent() const {
  if (c_.empty()) return std::nullopt;
  return OrdValue{v_, W_->e};
}

gf_t WElem::digit(long long k) const {
  if (k < v_ || k >= v_ + (long long)c_.size()) return 0;
  return c_[k - v_];
}

WElem WElem::operator+(const WElem& o) const {
  if (!W_ || !o.W_) raise(err::INDETERMINATE, "uninitialized operand");
  const GFTable& L = W_->F.Fqs();
  WElem r;
  r.W_ = W_;
  r.prec_ = std::min(prec_, o.prec_);
  if (c_.empty() && o.c_.empty()) return r;
  long long lo = std::min(c_.empty() ? o.v_ : v_, o.c_.empty() ? v_ : o.v_);
  long long hi = std::max(support_end(), o.support_end());
  if (r.prec_ < kExactPrec) hi = std::min(hi, r.prec_);
  if (hi <= lo) return r;
  r.v_ = lo;
  r.c_.assign(hi - lo, 0);
  for (long long k = lo; k < hi; ++k) r.c_[k - lo] = L.add(digit(k), o.digit(k));
  r.normalize();
  return r;
}

WElem WElem::operator-() const {
  WElem r = *this;
  const GFTable& L = W_->F.Fqs();
  for (auto& d : r.c_) d = L.neg(d);
  return r;
}

WElem WElem::operator-(const WElem& o) const { return *this + (-o); }

WElem WElem::operator*(const WElem& o) const {
  if (!W_ || !o.W_) raise(err::INDETERMINATE, "uninitialized operand");
  const GFTable& L = W_->F.Fqs();
  WElem r;
  r.W_ = W_;
  // N = min(N_a + v_b, N_b + v_a); an apparent zero contributes its precision
  // bound in place of a valuation.
  long long va = uval_or(prec_), vb = o.uval_or(o.prec_);
  r.prec_ = std::min(sat_add(prec_, vb), sat_add(o.prec_, va));
  if (c_.empty() || o.c_.empty()) return r;
  long long lo = v_ + o.v_;
  long long hi = support_end() + o.support_end() - 1;
  if (r.prec_ < kExactPrec) hi = std::min(hi, r.prec_);
  if (hi <= lo) return r;
  r.v_ = lo;
  r.c_.assign(hi - lo, 0);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (!c_[i]) continue;
    long long base = v_ + (long long)i + o.v_;
    if (base >= hi) break;
    std::size_t jmax = std::min(o.c_.size(), (std::size_t)(hi - base));
    for (std::size_t j = 0; j < jmax; ++j) {
      if (!o.c_[j]) continue;
      long long k = base + (long long)j - lo;
      r.c_[k] = L.add(r.c_[k], L.mul(c_[i], o.c_[j]));
    }
  }
  r.normalize();
  return r;
}

WElem WElem::mul_gf(gf_t c) const {
  const GFTable& L = W_->F.Fqs();
  if (!c) return zero(W_, c_.empty() ? prec_ : sat_add(prec_, 0));
  WElem r = *this;
  for (auto& d : r.c_) d = L.mul(d, c);
  r.normalize();
  return r;
}

WElem WElem::shifted(long long k) const {
  WElem r = *this;
  r.v_ += k;
  r.prec_ = sat_add(prec_, k);
  return r;
}

WElem WElem::inv(long long rel_digits) const {
  if (c_.empty()) raise(err::DIVIDE_BY_ZERO, "division by an apparent zero");
  const GFTable& L = W_->F.Fqs();
  long long len;
  if (is_exact()) {
    len = rel_digits > 0 ? rel_digits : W_->default_prec;
    if ((long long)c_.size() == 1) {
      // monomial: exact inverse
      return monomial(W_, L.inv(c_[0]), -v_);
    }
  } else {
    len = rel_prec();
    if (rel_digits > 0) len = std::min(len, rel_digits);
  }
  if (len <= 0) raise(err::PRECISION_EXHAUSTED, "no known digits for inversion");
  // schoolbook reciprocal of the unit part
  std::vector<gf_t> g((std::size_t)len, 0);
  gf_t b0i = L.inv(c_[0]);
  g[0] = b0i;
  for (long long k = 1; k < len; ++k) {
    gf_t acc = 0;
    long long jmax = std::min<long long>(k, (long long)c_.size() - 1);
    for (long long j = 1; j <= jmax; ++j)
      acc = L.add(acc, L.mul(c_[j], g[k - j]));
    g[k] = L.neg(L.mul(b0i, acc));
  }
  return from_digits(W_, -v_, std::move(g), -v_ + len);
}

WElem WElem::div(const WElem& o, long long rel_digits) const {
  return *this * o.inv(rel_digits);
}

WElem WElem::pow(long long k) const {
  if (k < 0) return inv().pow(-k);
  WElem r = one(W_), b = *this;
  while (k) {
    if (k & 1) r = r * b;
    if (k >>= 1) b = b * b;
  }
  return r;
}

WElem WElem::frobenius_twist(long long n) const {
  return frobenius_twist_clipped(n, kExactPrec);
}

WElem WElem::frobenius_twist_clipped(long long n, long long cap) const {
  if (n == 0) return cap >= prec_ ? *this : truncated(cap);
  const FieldConfig& F = W_->F;
  long long Q = 1;
  for (long long i = 0; i < (n < 0 ? -n : n); ++i) {
    Q *= F.q();
    if (Q > (1LL << 40)) raise(err::PRECISION_EXHAUSTED, "twist power overflow");
  }
  WElem r;
  r.W_ = W_;
  if (n > 0) {
    long long new_prec = prec_ >= kExactPrec ? kExactPrec : prec_ * Q;
    r.prec_ = std::min(new_prec, cap);
    if (c_.empty()) return r;
    long long lo = v_ * Q;
    long long hi = (support_end() - 1) * Q + 1;
    if (r.prec_ < kExactPrec) hi = std::min(hi, r.prec_);
    if (hi <= lo) return r;
    r.v_ = lo;
    r.c_.assign(hi - lo, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (!c_[i]) continue;
      long long k = (v_ + (long long)i) * Q;
      if (k >= hi) break;
      r.c_[k - lo] = F.frob_q_pow(c_[i], n);
    }
  } else {
    long long q_abs = Q;
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (!c_[i]) continue;
      if ((v_ + (long long)i) % q_abs != 0)
        raise(err::NOT_A_POWER,
              "known support not divisible by q^" + std::to_string(-n) +
                  " at u-exponent " + std::to_string(v_ + (long long)i));
    }
    long long new_prec = prec_ >= kExactPrec
                             ? kExactPrec
                             : (prec_ >= 0 ? (prec_ + q_abs - 1) / q_abs
                                           : -((-prec_) / q_abs));
    r.prec_ = std::min(new_prec, cap);
    if (c_.empty()) return r;
    long long lo = v_ / q_abs;
    long long hi = (support_end() - 1) / q_abs + 1;
    if (r.prec_ < kExactPrec) hi = std::min(hi, r.prec_);
    if (hi <= lo) return r;
    r.v_ = lo;
    r.c_.assign(hi - lo, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (!c_[i]) continue;
      long long k = (v_ + (long long)i) / q_abs;
      if (k >= hi) break;
      r.c_[k - lo] = F.frob_q_pow(c_[i], n);
    }
  }
  r.normalize();
  return r;
}

WElem WElem::truncated(long long new_prec) const {
  WElem r = *this;
  r.prec_ = std::min(prec_, new_prec);
  r.normalize();
  return r;
}

WElem WElem::with_prec(long long prec) const {
  WElem r = *this;
  r.prec_ = prec;
  r.normalize();
  return r;
}

WElem WElem::root_q_minus_1(const BranchPolicy& policy, long long rel_digits) const {
  if (c_.empty()) raise(err::INDETERMINATE, "(q-1)-st root of an apparent zero");
  const FieldConfig& F = W_->F;
  const GFTable& L = F.Fqs();
  long long qm1 = F.q() - 1;
  if (qm1 == 0) raise(err::FIELD_CONSTRAINT, "q must exceed 1");
  if (v_ % qm1 != 0)
    raise(err::VAL_NOT_DIVISIBLE, "valuation " + std::to_string(v_) +
                                      " not divisible by q-1 (enlarge e)");
  // residue equation zeta^(q-1) = leading coefficient
  std::optional<gf_t> zeta;
  for (int z = 1; z < L.size(); ++z) {
    if (L.pow((gf_t)z, qm1) != c_[0]) continue;
    if (policy.mode == BranchMode::KInfty && !F.in_Fq((gf_t)z)) continue;
    if (!zeta || L.lex_less((gf_t)z, *zeta)) zeta = (gf_t)z;
  }
  if (!zeta)
    raise(err::RESIDUE_UNSOLVABLE, "no (q-1)-st root in the residue field (enlarge s)");
  WElem y = monomial(W_, *zeta, v_ / qm1);
  if ((long long)c_.size() == 1 && is_exact()) return y;  // exact monomial root

  long long len = rel_digits > 0 ? rel_digits
                                 : (is_exact() ? W_->default_prec : rel_prec());
  long long y_target = v_ / qm1 + len;
  // Newton iteration for y^(q-1) = a; the derivative (q-1) y^(q-2) is a unit
  // since q-1 = -1 in F_p.  Step: y <- y - res * y / y^(q-1), res = a - y^(q-1).
  for (int it = 0; it < 200; ++it) {
    WElem res = *this - y.pow(qm1);
    if (res.is_apparent_zero() || res.uval() >= v_ + len) break;
    WElem delta = res * y * y.pow(qm1).mul_gf(L.neg(1)).inv(len + 4);
    y = (y + delta).truncated(y_target);
  }
  y = y.truncated(y_target);
  WElem check = *this - y.pow(qm1);
  if (!check.is_apparent_zero() && check.uval() < v_ + len - 2)
    raise(err::ITERATION_LIMIT, "(q-1)-st root iteration failed to converge");
  return y;
}

std::string WElem::to_string(long long max_digits) const {
  if (c_.empty()) return is_exact() ? "0" : "O(u^" + std::to_string(prec_) + ")";
  std::ostringstream os;
  long long shown = 0;
  bool first = true;
  for (std::size_t i = 0; i < c_.size() && shown < max_digits; ++i) {
    if (!c_[i]) continue;
    if (!first) os << " + ";
    first = false;
    os << (int)c_[i] << "*u^" << (v_ + (long long)i);
    ++shown;
  }
  if (shown == max_digits) os << " + ...";
  if (!is_exact()) os << " + O(u^" << prec_ << ")";
  return os.str();
}

bool is_kinfty_rational(const WElem& x) {
  const auto& W = x.field();
  for (long long k = x.support_begin(); k < x.support_end(); ++k) {
    gf_t d = x.digit(k);
    if (!d) continue;
    if (k % W->e != 0) return false;
    if (!W->F.in_Fq(d)) return false;
  }
  return true;
}

}  // namespace fflog
