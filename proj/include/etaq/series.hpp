#pragma once

#include <gmpxx.h>

#include <optional>
#include <span>
#include <vector>

namespace etaq {

using Integer = mpz_class;
using Rational = mpq_class;

/// A sparse unit series 1 + sum coeff*q^exp (the constant 1 is implicit).
struct SparseTerm {
  int exp;
  int coeff;
};

/// Nonconstant terms of E(q^d) = prod (1 - q^{dn}) up to q^order, from the
/// pentagonal number theorem.
std::vector<SparseTerm> pentagonal_terms(int d, int order);

// ---------------------------------------------------------------------------
// UniSeries

/// Power series in q known exactly for q^0..q^order.
///
/// Binary arithmetic truncates to the smaller operand order; nothing ever
/// extends the order of a result beyond what its inputs determine.
class UniSeries {
 public:
  UniSeries() : UniSeries(0) {}
  explicit UniSeries(int order);
  /// Coefficients are zero-padded or cut to order + 1 entries.
  UniSeries(int order, std::vector<Integer> coeffs);

  static UniSeries one(int order);

  int order() const { return static_cast<int>(c_.size()) - 1; }
  const Integer& operator[](int n) const { return c_[static_cast<std::size_t>(n)]; }
  Integer& operator[](int n) { return c_[static_cast<std::size_t>(n)]; }
  std::span<const Integer> coeffs() const { return c_; }
  bool is_zero() const;

  UniSeries truncated(int order) const;

  UniSeries& operator+=(const UniSeries& o);
  UniSeries& operator-=(const UniSeries& o);
  UniSeries& operator*=(const UniSeries& o);
  UniSeries& operator*=(const Integer& k);

  /// *= (1 - sign*q^exp), exp >= 1.
  void mul_binomial(int exp, int sign = 1);
  /// /= (1 - sign*q^exp), exp >= 1.
  void div_binomial(int exp, int sign = 1);
  /// *= (1 + sum t.coeff q^t.exp).
  void mul_sparse(std::span<const SparseTerm> terms);
  /// /= (1 + sum t.coeff q^t.exp).
  void div_sparse(std::span<const SparseTerm> terms);

  friend bool operator==(const UniSeries&, const UniSeries&) = default;

 private:
  std::vector<Integer> c_;
};

UniSeries operator+(UniSeries a, const UniSeries& b);
UniSeries operator-(UniSeries a, const UniSeries& b);
UniSeries operator-(UniSeries a);
UniSeries operator*(const UniSeries& a, const UniSeries& b);

/// Multiplicative inverse; the constant term must be +1 or -1.
UniSeries reciprocal(const UniSeries& a);
/// a^e for any integer e (negative powers go through reciprocal).
UniSeries pow(const UniSeries& a, int e);
/// s(q) -> s(q^d) at the same order.
UniSeries dilate(const UniSeries& s, int d);

// ---------------------------------------------------------------------------
// LaurentPoly

/// Laurent polynomial in z with integer coefficients. Stored densely over
/// [lo, hi]; both end coefficients are nonzero unless the polynomial is zero.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(int lo, std::vector<Integer> coeffs);

  static LaurentPoly constant(const Integer& c);
  static LaurentPoly monomial(const Integer& c, int exp);
  /// 1 - sign*z^exp
  static LaurentPoly binomial(int exp, int sign = 1);

  bool is_zero() const { return c_.empty(); }
  /// Lowest and highest exponents present; a zero polynomial reports lo = 0, hi = -1.
  int lo() const { return lo_; }
  int hi() const { return lo_ + static_cast<int>(c_.size()) - 1; }
  Integer coeff(int e) const;
  std::span<const Integer> coeffs() const { return c_; }
  /// Value at z = 1.
  Integer sum() const;

  /// this += sign * z^shift * src
  void axpy(const LaurentPoly& src, int shift, int sign);
  /// this += a * b
  void add_product(const LaurentPoly& a, const LaurentPoly& b);

  LaurentPoly shifted(int k) const;
  /// Terms with zmin <= e <= zmax.
  LaurentPoly clipped(int zmin, int zmax) const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const Integer& k);

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

 private:
  friend class BiSeries;
  void trim();

  int lo_ = 0;
  std::vector<Integer> c_;
};

LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b);
LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b);
LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);

/// num / den when den divides num exactly in Z[z, 1/z], otherwise nullopt.
std::optional<LaurentPoly> divide_exact(const LaurentPoly& num, const LaurentPoly& den);

// ---------------------------------------------------------------------------
// TailBound

/// Lower bound on the smallest z-exponent of row n, holding for every n >= 0
/// including rows past the stored order. Substitutions that fold z into q
/// use it to decide how many output coefficients are fully determined.
class TailBound {
 public:
  /// lo(n) >= -ceil(num*n/den) - offset, with num >= 0, den >= 1.
  static TailBound linear(int num, int den, long offset);
  /// lo(n) >= -floor(sqrt(c*n)) - offset, with c >= 0.
  static TailBound radical(int c, long offset);

  long floor_at(long n) const;

  /// min over n > order of (n*m + r*floor_at(n)): the smallest q-exponent an
  /// unstored row can reach once z -> q^r, q -> q^m. Throws std::domain_error
  /// when that quantity is unbounded below.
  long first_exponent_beyond(int order, int r, int m) const;

  /// Bound for the series multiplied by z^k.
  TailBound shifted(int k) const;

  friend TailBound product_bound(const TailBound& a, const TailBound& b);
  friend TailBound sum_bound(const TailBound& a, const TailBound& b);

 private:
  enum class Kind { Linear, Radical };
  TailBound(Kind kind, int num, int den, long offset)
      : kind_(kind), num_(num), den_(den), offset_(offset) {}

  Kind kind_;
  int num_;  // slope numerator, or c for Radical
  int den_;  // slope denominator (Linear only)
  long offset_;
};

// ---------------------------------------------------------------------------
// BiSeries

struct ZWindow {
  int lo;
  int hi;

  friend bool operator==(const ZWindow&, const ZWindow&) = default;
};

/// Series in q whose coefficients are Laurent polynomials in z, known for
/// q^0..q^order.
///
/// An exact series stores every row completely. A windowed series (the
/// result of expanding a q^0 pole 1/(1 - z^e) geometrically) stores each
/// row completely below and clipped at window().hi; only exponents inside
/// the window are reported.
class BiSeries {
 public:
  explicit BiSeries(int order = 0);
  BiSeries(int order, std::vector<LaurentPoly> rows, std::optional<TailBound> tail = {});

  static BiSeries one(int order);
  static BiSeries from_uni(const UniSeries& s);

  int order() const { return static_cast<int>(rows_.size()) - 1; }
  const LaurentPoly& row(int n) const { return rows_[static_cast<std::size_t>(n)]; }
  LaurentPoly& row(int n) { return rows_[static_cast<std::size_t>(n)]; }
  std::span<const LaurentPoly> rows() const { return rows_; }
  Integer coeff(int n, int zexp) const;

  bool exact() const { return !window_; }
  const std::optional<ZWindow>& window() const { return window_; }
  /// Marks the series windowed and clips rows above w.hi.
  void set_window(ZWindow w);

  const std::optional<TailBound>& tail() const { return tail_; }
  void set_tail(std::optional<TailBound> t) { tail_ = t; }

  /// Extremes over all stored rows (0 when every row is zero).
  int min_zexp() const;
  int max_zexp() const;

  BiSeries truncated(int order) const;

  BiSeries& operator+=(const BiSeries& o);
  BiSeries& operator-=(const BiSeries& o);

  /// *= (1 - sign*z^zexp*q^qexp), qexp >= 1.
  void mul_binomial(int zexp, int qexp, int sign = 1);
  /// /= (1 - sign*z^zexp*q^qexp), qexp >= 1; geometric in the monomial.
  void div_binomial(int zexp, int qexp, int sign = 1);
  /// Multiplies every row by a q-free polynomial.
  void mul_poly(const LaurentPoly& p);
  void mul_sparse(std::span<const SparseTerm> terms);
  void div_sparse(std::span<const SparseTerm> terms);

  friend bool operator==(const BiSeries& a, const BiSeries& b) {
    return a.rows_ == b.rows_ && a.window_ == b.window_;
  }

 private:
  std::vector<LaurentPoly> rows_;
  std::optional<ZWindow> window_;
  std::optional<TailBound> tail_;
};

BiSeries operator+(BiSeries a, const BiSeries& b);
BiSeries operator-(BiSeries a, const BiSeries& b);
BiSeries operator*(const BiSeries& a, const BiSeries& b);
BiSeries operator*(const BiSeries& a, const UniSeries& b);

/// z^k * s
BiSeries times_zpow(BiSeries s, int k);

/// z -> q^r, q -> q^m (r, m >= 1). The output order is the largest one whose
/// coefficients cannot receive contributions from unstored rows, as
/// determined by the series' TailBound (required).
UniSeries substitute_z(const BiSeries& s, int r, int m);

/// z -> 1: each row summed.
UniSeries substitute_z_one(const BiSeries& s);

/// z-exponents folded into residues 0..a-1.
BiSeries reduce_mod_z_pow(const BiSeries& s, int a);

/// z -> zq: z^i q^n moves to z^i q^(n+i). Requires a TailBound; the result's
/// order is limited by how far negative exponents of unstored rows can fall.
BiSeries shift_z_to_zq(const BiSeries& s);

}  // namespace etaq
