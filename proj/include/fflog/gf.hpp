// Exact arithmetic in F_p^d via lookup tables, the F_q inside F_{q^s}
// configuration with a declared embedding, and residue-field Artin-Schreier
// solving by F_p-linear algebra.
#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "fflog/errors.hpp"

namespace fflog {

using gf_t = std::uint16_t;  // element index: sum_i c_i p^i for coords (c_0,..)

// Tabulated finite field F_p[x]/(modulus).  Immutable after construction;
// safe to share across threads.
class GFTable {
public:
  GFTable(int p, std::vector<int> modulus);  // modulus little-endian, monic

  int p() const { return p_; }
  int deg() const { return d_; }
  int size() const { return n_; }
  const std::vector<int>& modulus() const { return mod_; }

  gf_t add(gf_t a, gf_t b) const { return add_[a * n_ + b]; }
  gf_t sub(gf_t a, gf_t b) const { return add_[a * n_ + neg_[b]]; }
  gf_t mul(gf_t a, gf_t b) const { return mul_[a * n_ + b]; }
  gf_t neg(gf_t a) const { return neg_[a]; }
  gf_t inv(gf_t a) const;
  gf_t div(gf_t a, gf_t b) const { return mul(a, inv(b)); }
  gf_t pow(gf_t a, long long e) const;
  gf_t frob_p(gf_t a) const { return frob_[a]; }  // a^p

  gf_t from_int(long long v) const;  // v mod p, as a prime-field element
  gf_t one() const { return 1; }
  gf_t gen() const { return d_ > 1 ? gf_t(p_) : gf_t(0); }  // class of x

  std::vector<int> coords(gf_t a) const;  // length d, entries in [0,p)
  gf_t encode(const std::vector<int>& c) const;

  // Compares coordinate tuples (c_0, c_1, ...) lexicographically.
  bool lex_less(gf_t a, gf_t b) const;

  static bool is_irreducible(int p, const std::vector<int>& modulus);
  // Smallest-coordinate-tuple monic irreducible of degree d over F_p.
  static std::vector<int> least_irreducible(int p, int d);

private:
  int p_, d_, n_;
  std::vector<int> mod_;
  std::vector<gf_t> add_, mul_, neg_, inv_, frob_;
};

// The pair F_q = F_p[x]/(modulus_q) inside F_{q^s} = F_p[x]/(modulus_qs),
// with the embedding pinned to the smallest root of modulus_q.
class FieldConfig {
public:
  static FieldConfig make(int p, int m, int s);
  static FieldConfig make(int p, int m, int s, std::vector<int> modulus_q,
                          std::vector<int> modulus_qs);

  int p() const { return p_; }
  int m() const { return m_; }
  int s() const { return s_; }
  long long q() const { return q_; }
  long long qs() const { return qs_; }

  const GFTable& Fq() const { return *Fq_; }
  const GFTable& Fqs() const { return *Fqs_; }
  std::shared_ptr<const GFTable> Fq_ptr() const { return Fq_; }
  std::shared_ptr<const GFTable> Fqs_ptr() const { return Fqs_; }

  gf_t embed(gf_t a) const { return embed_[a]; }
  bool in_Fq(gf_t a) const { return sub_index_[a] >= 0; }
  gf_t to_Fq(gf_t a) const;  // inverse of embed on its image

  gf_t frob_q(gf_t a) const { return frobq_[a]; }      // a^q in F_{q^s}
  gf_t frob_q_inv(gf_t a) const { return frobqi_[a]; }  // unique q-th root
  gf_t frob_q_pow(gf_t a, long long n) const;           // a^(q^n), any sign
  gf_t trace_to_Fq(gf_t a) const;  // sum of frob_q^i(a), i < s

private:
  int p_ = 0, m_ = 0, s_ = 0;
  long long q_ = 0, qs_ = 0;
  std::shared_ptr<const GFTable> Fq_, Fqs_;
  gf_t gen_image_ = 0;
  std::vector<gf_t> embed_, frobq_, frobqi_;
  std::vector<int> sub_index_;
  void finish();
};

// Solves y^q + a*y = c over F_{q^s} by Gaussian elimination on the matrix of
// the F_p-linear map y -> y^q + a*y.  Returns the lexicographically least
// solution, or nullopt when none exists (caller may enlarge s).
std::optional<gf_t> residue_artin_schreier(const FieldConfig& F, gf_t a, gf_t c);

// Dense univariate polynomial over a tabulated field; "var" is a display tag
// ("theta" or "t").
class CoeffPoly {
public:
  CoeffPoly() = default;
  CoeffPoly(std::shared_ptr<const GFTable> F, std::string var)
      : F_(std::move(F)), var_(std::move(var)) {}
  CoeffPoly(std::shared_ptr<const GFTable> F, std::string var,
            std::vector<gf_t> coeffs);

  bool is_zero() const { return c_.empty(); }
  long long degree() const { return (long long)c_.size() - 1; }  // -1 for 0
  gf_t coeff(std::size_t i) const { return i < c_.size() ? c_[i] : gf_t(0); }
  const std::vector<gf_t>& coeffs() const { return c_; }
  const std::string& var() const { return var_; }
  const std::shared_ptr<const GFTable>& table() const { return F_; }

  CoeffPoly operator+(const CoeffPoly& o) const;
  CoeffPoly operator-(const CoeffPoly& o) const;
  CoeffPoly operator*(const CoeffPoly& o) const;
  bool operator==(const CoeffPoly& o) const { return c_ == o.c_; }

  gf_t eval(gf_t x) const;
  std::string to_string() const;

  static CoeffPoly monomial(std::shared_ptr<const GFTable> F, std::string var,
                            gf_t c, std::size_t k);

private:
  std::shared_ptr<const GFTable> F_;
  std::string var_ = "t";
  std::vector<gf_t> c_;
  void trim();
};

}  // namespace fflog
