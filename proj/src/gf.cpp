#include "fflog/gf.hpp"

#include <algorithm>
#include <cassert>

namespace fflog {

namespace {

// Plain polynomial arithmetic over F_p on int vectors, little-endian.
std::vector<int> poly_trim(std::vector<int> a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

std::vector<int> poly_mul_p(const std::vector<int>& a, const std::vector<int>& b, int p) {
  if (a.empty() || b.empty()) return {};
  std::vector<int> r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  }
  return poly_trim(std::move(r));
}

// a mod b, b monic
std::vector<int> poly_mod_p(std::vector<int> a, const std::vector<int>& b, int p) {
  a = poly_trim(std::move(a));
  const std::size_t db = b.size() - 1;
  while (a.size() > db) {
    int lead = a.back();
    if (lead) {
      std::size_t shift = a.size() - 1 - db;
      for (std::size_t j = 0; j < db; ++j)
        a[shift + j] = ((a[shift + j] - lead * b[j]) % p + p * p) % p;
    }
    a.pop_back();
    a = poly_trim(std::move(a));
    if (a.size() <= db) break;
  }
  return poly_trim(std::move(a));
}

bool poly_divides(const std::vector<int>& g, const std::vector<int>& f, int p) {
  // g monic; true when g | f
  return poly_mod_p(f, g, p).empty();
}

}  // namespace

GFTable::GFTable(int p, std::vector<int> modulus) : p_(p), mod_(std::move(modulus)) {
  if (p < 2) raise(err::FIELD_CONSTRAINT, "characteristic must be prime");
  for (int i = 2; i * i <= p; ++i)
    if (p % i == 0) raise(err::FIELD_CONSTRAINT, "characteristic must be prime");
  mod_ = poly_trim(std::move(mod_));
  if (mod_.size() < 2) raise(err::FIELD_CONSTRAINT, "modulus must have degree >= 1");
  if (mod_.back() != 1) raise(err::FIELD_CONSTRAINT, "modulus must be monic");
  if (!is_irreducible(p_, mod_)) raise(err::FIELD_CONSTRAINT, "modulus is reducible");
  d_ = (int)mod_.size() - 1;
  long long n = 1;
  for (int i = 0; i < d_; ++i) {
    n *= p_;
    if (n > 2048) raise(err::FIELD_CONSTRAINT, "residue field too large to tabulate (> 2048)");
  }
  n_ = (int)n;

  add_.resize((std::size_t)n_ * n_);
  mul_.resize((std::size_t)n_ * n_);
  neg_.resize(n_);
  inv_.assign(n_, 0);
  frob_.resize(n_);

  auto dec = [&](gf_t a) {
    std::vector<int> c(d_);
    for (int i = 0; i < d_; ++i) { c[i] = a % p_; a = gf_t(a / p_); }
    return c;
  };
  auto enc = [&](const std::vector<int>& c) {
    long long idx = 0, pw = 1;
    for (std::size_t i = 0; i < c.size() && i < (std::size_t)d_; ++i) { idx += c[i] * pw; pw *= p_; }
    return (gf_t)idx;
  };

  for (int a = 0; a < n_; ++a) {
    auto ca = dec((gf_t)a);
    std::vector<int> cn(d_);
    for (int i = 0; i < d_; ++i) cn[i] = (p_ - ca[i]) % p_;
    neg_[a] = enc(cn);
    for (int b = 0; b < n_; ++b) {
      auto cb = dec((gf_t)b);
      std::vector<int> cs(d_);
      for (int i = 0; i < d_; ++i) cs[i] = (ca[i] + cb[i]) % p_;
      add_[(std::size_t)a * n_ + b] = enc(cs);
      auto prod = poly_mod_p(poly_mul_p(ca, cb, p_), mod_, p_);
      prod.resize(d_, 0);
      mul_[(std::size_t)a * n_ + b] = enc(prod);
    }
  }
  for (int a = 1; a < n_; ++a) {
    if (inv_[a]) continue;
    for (int b = 1; b < n_; ++b)
      if (mul_[(std::size_t)a * n_ + b] == 1) { inv_[a] = (gf_t)b; inv_[b] = (gf_t)a; break; }
  }
  for (int a = 0; a < n_; ++a) frob_[a] = pow((gf_t)a, p_);
}

gf_t GFTable::inv(gf_t a) const {
  if (a == 0) raise(err::DIVIDE_BY_ZERO, "inverse of zero in residue field");
  return inv_[a];
}

gf_t GFTable::pow(gf_t a, long long e) const {
  if (e < 0) return pow(inv(a), -e);
  gf_t r = 1, b = a;
  while (e) {
    if (e & 1) r = mul(r, b);
    b = mul(b, b);
    e >>= 1;
  }
  return r;
}

gf_t GFTable::from_int(long long v) const {
  long long r = v % p_;
  if (r < 0) r += p_;
  return (gf_t)r;
}

std::vector<int> GFTable::coords(gf_t a) const {
  std::vector<int> c(d_);
  for (int i = 0; i < d_; ++i) { c[i] = a % p_; a = gf_t(a / p_); }
  return c;
}

gf_t GFTable::encode(const std::vector<int>& c) const {
  long long idx = 0, pw = 1;
  for (std::size_t i = 0; i < c.size() && i < (std::size_t)d_; ++i) {
    int v = ((c[i] % p_) + p_) % p_;
    idx += v * pw;
    pw *= p_;
  }
  return (gf_t)idx;
}

bool GFTable::lex_less(gf_t a, gf_t b) const {
  auto ca = coords(a), cb = coords(b);
  return std::lexicographical_compare(ca.begin(), ca.end(), cb.begin(), cb.end());
}

bool GFTable::is_irreducible(int p, const std::vector<int>& modulus) {
  auto f = poly_trim(modulus);
  if (f.size() < 2) return false;
  std::size_t d = f.size() - 1;
  if (d == 1) return true;
  // trial division by every monic polynomial of degree 1..d/2
  for (std::size_t dg = 1; 2 * dg <= d; ++dg) {
    std::vector<int> g(dg + 1, 0);
    g[dg] = 1;
    long long count = 1;
    for (std::size_t i = 0; i < dg; ++i) count *= p;
    for (long long k = 0; k < count; ++k) {
      long long t = k;
      for (std::size_t i = 0; i < dg; ++i) { g[i] = (int)(t % p); t /= p; }
      if (poly_divides(g, f, p)) return false;
    }
  }
  return true;
}

std::vector<int> GFTable::least_irreducible(int p, int d) {
  std::vector<int> f(d + 1, 0);
  f[d] = 1;
  long long count = 1;
  for (int i = 0; i < d; ++i) count *= p;
  // coordinate tuples (c_0,..,c_{d-1}) in lexicographic order, c_0 outermost
  for (long long k = 0; k < count; ++k) {
    long long divisor = count / p;
    for (int i = 0; i < d; ++i) {
      f[i] = (int)((k / divisor) % p);
      if (divisor > 1) divisor /= p;
    }
    f[d] = 1;
    if (is_irreducible(p, f)) return f;
  }
  raise(err::FIELD_CONSTRAINT, "no irreducible polynomial found");
}

FieldConfig FieldConfig::make(int p, int m, int s) {
  return make(p, m, s, GFTable::least_irreducible(p, m), GFTable::least_irreducible(p, m * s));
}

FieldConfig FieldConfig::make(int p, int m, int s, std::vector<int> modulus_q,
                              std::vector<int> modulus_qs) {
  FieldConfig F;
  F.p_ = p;
  F.m_ = m;
  F.s_ = s;
  if (m < 1 || s < 1) raise(err::FIELD_CONSTRAINT, "extension degrees must be >= 1");
  F.Fq_ = std::make_shared<const GFTable>(p, std::move(modulus_q));
  F.Fqs_ = std::make_shared<const GFTable>(p, std::move(modulus_qs));
  if (F.Fq_->deg() != m || F.Fqs_->deg() != m * s)
    raise(err::FIELD_CONSTRAINT, "modulus degrees do not match (p,m,s)");
  F.q_ = 1;
  for (int i = 0; i < m; ++i) F.q_ *= p;
  F.qs_ = 1;
  for (int i = 0; i < m * s; ++i) F.qs_ *= p;
  F.finish();
  return F;
}

void FieldConfig::finish() {
  const GFTable& L = *Fqs_;
  // embedding: smallest root of modulus_q inside F_{q^s}
  const auto& mq = Fq_->modulus();
  std::optional<gf_t> root;
  for (int z = 0; z < L.size(); ++z) {
    gf_t acc = 0;
    for (int i = (int)mq.size() - 1; i >= 0; --i)
      acc = L.add(L.mul(acc, (gf_t)z), L.from_int(mq[i]));
    if (acc == 0 && (!root || L.lex_less((gf_t)z, *root))) root = (gf_t)z;
  }
  if (!root) raise(err::FIELD_CONSTRAINT, "F_q modulus has no root in F_{q^s}");
  gen_image_ = *root;

  embed_.resize(Fq_->size());
  sub_index_.assign(L.size(), -1);
  for (int a = 0; a < Fq_->size(); ++a) {
    auto c = Fq_->coords((gf_t)a);
    gf_t img = 0, pw = 1;
    for (int i = 0; i < Fq_->deg(); ++i) {
      img = L.add(img, L.mul(L.from_int(c[i]), pw));
      pw = L.mul(pw, gen_image_);
    }
    embed_[a] = img;
    sub_index_[img] = a;
  }
  // embedding must commute with arithmetic on generators
  gf_t g = Fq_->gen();
  if (embed_[Fq_->mul(g, g)] != L.mul(embed_[g], embed_[g]) ||
      embed_[Fq_->add(g, Fq_->one())] != L.add(embed_[g], L.one()))
    raise(err::FIELD_CONSTRAINT, "embedding does not commute with arithmetic");

  frobq_.resize(L.size());
  frobqi_.resize(L.size());
  for (int a = 0; a < L.size(); ++a) {
    gf_t x = (gf_t)a;
    for (int i = 0; i < m_; ++i) x = L.frob_p(x);
    frobq_[a] = x;
  }
  for (int a = 0; a < L.size(); ++a) frobqi_[frobq_[a]] = (gf_t)a;
}

gf_t FieldConfig::to_Fq(gf_t a) const {
  int idx = sub_index_[a];
  if (idx < 0) raise(err::FIELD_CONSTRAINT, "element not in the embedded F_q");
  return (gf_t)idx;
}

gf_t FieldConfig::frob_q_pow(gf_t a, long long n) const {
  long long k = ((n % s_) + s_) % s_;
  gf_t x = a;
  for (long long i = 0; i < k; ++i) x = frobq_[x];
  return x;
}

gf_t FieldConfig::trace_to_Fq(gf_t a) const {
  const GFTable& L = *Fqs_;
  gf_t acc = 0, x = a;
  for (int i = 0; i < s_; ++i) {
    acc = L.add(acc, x);
    x = frobq_[x];
  }
  return acc;
}

std::optional<gf_t> residue_artin_schreier(const FieldConfig& F, gf_t a, gf_t c) {
  const GFTable& L = F.Fqs();
  const int p = L.p(), d = L.deg();
  // matrix of y -> y^q + a*y on the F_p coordinate basis, columns = images
  std::vector<std::vector<int>> M(d, std::vector<int>(d + 1, 0));
  for (int j = 0; j < d; ++j) {
    std::vector<int> e(d, 0);
    e[j] = 1;
    gf_t bj = L.encode(e);
    gf_t img = L.add(F.frob_q(bj), L.mul(a, bj));
    auto ic = L.coords(img);
    for (int i = 0; i < d; ++i) M[i][j] = ic[i];
  }
  auto cc = L.coords(c);
  for (int i = 0; i < d; ++i) M[i][d] = cc[i];

  // Gaussian elimination over F_p
  std::vector<int> pivot_col(d, -1);
  int row = 0;
  for (int col = 0; col < d && row < d; ++col) {
    int pr = -1;
    for (int r = row; r < d; ++r)
      if (M[r][col] % p != 0) { pr = r; break; }
    if (pr < 0) continue;
    std::swap(M[row], M[pr]);
    // scale pivot row to 1
    int piv = M[row][col] % p;
    int piv_inv = 1;
    for (int t = 1; t < p; ++t)
      if ((piv * t) % p == 1) { piv_inv = t; break; }
    for (int k = col; k <= d; ++k) M[row][k] = (M[row][k] * piv_inv) % p;
    for (int r = 0; r < d; ++r) {
      if (r == row || M[r][col] % p == 0) continue;
      int f = M[r][col] % p;
      for (int k = col; k <= d; ++k)
        M[r][k] = ((M[r][k] - f * M[row][k]) % p + p * p) % p;
    }
    pivot_col[row] = col;
    ++row;
  }
  for (int r = row; r < d; ++r)
    if (M[r][d] % p != 0) return std::nullopt;  // inconsistent

  std::vector<int> is_pivot(d, 0);
  std::vector<int> part(d, 0);
  for (int r = 0; r < row; ++r) {
    is_pivot[pivot_col[r]] = 1;
    part[pivot_col[r]] = M[r][d];
  }
  std::vector<int> free_cols;
  for (int c2 = 0; c2 < d; ++c2)
    if (!is_pivot[c2]) free_cols.push_back(c2);

  // kernel basis: one vector per free column
  std::vector<std::vector<int>> kernel;
  for (int fc : free_cols) {
    std::vector<int> v(d, 0);
    v[fc] = 1;
    for (int r = 0; r < row; ++r)
      v[pivot_col[r]] = ((-M[r][fc]) % p + p) % p;
    kernel.push_back(std::move(v));
  }

  // enumerate kernel combinations, keep the lexicographically least solution
  long long combos = 1;
  for (std::size_t i = 0; i < kernel.size(); ++i) combos *= p;
  std::optional<gf_t> best;
  for (long long k = 0; k < combos; ++k) {
    std::vector<int> sol = part;
    long long t = k;
    for (auto& kv : kernel) {
      int w = (int)(t % p);
      t /= p;
      if (w)
        for (int i = 0; i < d; ++i) sol[i] = (sol[i] + w * kv[i]) % p;
    }
    gf_t y = L.encode(sol);
    if (!best || L.lex_less(y, *best)) best = y;
  }
  return best;
}

CoeffPoly::CoeffPoly(std::shared_ptr<const GFTable> F, std::string var,
                     std::vector<gf_t> coeffs)
    : F_(std::move(F)), var_(std::move(var)), c_(std::move(coeffs)) {
  trim();
}

void CoeffPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

CoeffPoly CoeffPoly::operator+(const CoeffPoly& o) const {
  std::vector<gf_t> r(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = F_->add(coeff(i), o.coeff(i));
  return CoeffPoly(F_, var_, std::move(r));
}

CoeffPoly CoeffPoly::operator-(const CoeffPoly& o) const {
  std::vector<gf_t> r(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = F_->sub(coeff(i), o.coeff(i));
  return CoeffPoly(F_, var_, std::move(r));
}

CoeffPoly CoeffPoly::operator*(const CoeffPoly& o) const {
  if (is_zero() || o.is_zero()) return CoeffPoly(F_, var_);
  std::vector<gf_t> r(c_.size() + o.c_.size() - 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (!c_[i]) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j)
      r[i + j] = F_->add(r[i + j], F_->mul(c_[i], o.c_[j]));
  }
  return CoeffPoly(F_, var_, std::move(r));
}

gf_t CoeffPoly::eval(gf_t x) const {
  gf_t acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it)
    acc = F_->add(F_->mul(acc, x), *it);
  return acc;
}

std::string CoeffPoly::to_string() const {
  if (c_.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (!c_[i]) continue;
    if (!s.empty()) s += " + ";
    s += std::to_string(c_[i]);
    if (i >= 1) s += "*" + var_ + (i > 1 ? "^" + std::to_string(i) : "");
  }
  return s;
}

CoeffPoly CoeffPoly::monomial(std::shared_ptr<const GFTable> F, std::string var,
                              gf_t c, std::size_t k) {
  std::vector<gf_t> v(k + 1, 0);
  v[k] = c;
  return CoeffPoly(std::move(F), std::move(var), std::move(v));
}

}  // namespace fflog
