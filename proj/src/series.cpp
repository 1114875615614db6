#include "etaq/series.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace etaq {

namespace {

void add_multiple(Integer& dst, const Integer& src, long k) {
  if (k == 1) {
    dst += src;
  } else if (k == -1) {
    dst -= src;
  } else if (k > 0) {
    mpz_addmul_ui(dst.get_mpz_t(), src.get_mpz_t(), static_cast<unsigned long>(k));
  } else if (k < 0) {
    mpz_submul_ui(dst.get_mpz_t(), src.get_mpz_t(), static_cast<unsigned long>(-k));
  }
}

long isqrt(long x) {
  if (x <= 0) return 0;
  auto r = static_cast<long>(std::sqrt(static_cast<long double>(x)));
  while (r * r > x) --r;
  while ((r + 1) * (r + 1) <= x) ++r;
  return r;
}

long ceil_div(long a, long b) {
  // b > 0
  return a >= 0 ? (a + b - 1) / b : -((-a) / b);
}

constexpr int kNoCap = std::numeric_limits<int>::max() / 4;

}  // namespace

std::vector<SparseTerm> pentagonal_terms(int d, int order) {
  if (d < 1) throw std::invalid_argument("pentagonal_terms: d must be >= 1");
  std::vector<SparseTerm> terms;
  for (long k = 1;; ++k) {
    const long g1 = k * (3 * k - 1) / 2;
    const long g2 = k * (3 * k + 1) / 2;
    if (g1 * d > order) break;
    const int sign = (k % 2 == 0) ? 1 : -1;
    terms.push_back({static_cast<int>(g1 * d), sign});
    if (g2 * d <= order) terms.push_back({static_cast<int>(g2 * d), sign});
  }
  return terms;
}

// ---------------------------------------------------------------------------
// UniSeries

UniSeries::UniSeries(int order) {
  if (order < 0) throw std::invalid_argument("UniSeries: negative order");
  c_.resize(static_cast<std::size_t>(order) + 1);
}

UniSeries::UniSeries(int order, std::vector<Integer> coeffs) : c_(std::move(coeffs)) {
  if (order < 0) throw std::invalid_argument("UniSeries: negative order");
  c_.resize(static_cast<std::size_t>(order) + 1);
}

UniSeries UniSeries::one(int order) {
  UniSeries s(order);
  s.c_[0] = 1;
  return s;
}

bool UniSeries::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Integer& x) { return sgn(x) == 0; });
}

UniSeries UniSeries::truncated(int order) const {
  if (order > this->order()) throw std::invalid_argument("UniSeries::truncated: cannot extend order");
  return UniSeries(order, std::vector<Integer>(c_.begin(), c_.begin() + order + 1));
}

UniSeries& UniSeries::operator+=(const UniSeries& o) {
  c_.resize(static_cast<std::size_t>(std::min(order(), o.order())) + 1);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

UniSeries& UniSeries::operator-=(const UniSeries& o) {
  c_.resize(static_cast<std::size_t>(std::min(order(), o.order())) + 1);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

UniSeries& UniSeries::operator*=(const UniSeries& o) { return *this = *this * o; }

UniSeries& UniSeries::operator*=(const Integer& k) {
  for (auto& x : c_) x *= k;
  return *this;
}

void UniSeries::mul_binomial(int exp, int sign) {
  if (exp < 1) throw std::invalid_argument("mul_binomial: exponent must be >= 1");
  for (int n = order(); n >= exp; --n) add_multiple(c_[n], c_[n - exp], -sign);
}

void UniSeries::div_binomial(int exp, int sign) {
  if (exp < 1) throw std::invalid_argument("div_binomial: exponent must be >= 1");
  for (int n = exp; n <= order(); ++n) add_multiple(c_[n], c_[n - exp], sign);
}

void UniSeries::mul_sparse(std::span<const SparseTerm> terms) {
  for (int n = order(); n >= 1; --n) {
    for (const auto& t : terms) {
      if (t.exp <= n) add_multiple(c_[n], c_[n - t.exp], t.coeff);
    }
  }
}

void UniSeries::div_sparse(std::span<const SparseTerm> terms) {
  for (int n = 1; n <= order(); ++n) {
    for (const auto& t : terms) {
      if (t.exp <= n) add_multiple(c_[n], c_[n - t.exp], -t.coeff);
    }
  }
}

UniSeries operator+(UniSeries a, const UniSeries& b) { return a += b; }
UniSeries operator-(UniSeries a, const UniSeries& b) { return a -= b; }

UniSeries operator-(UniSeries a) {
  a *= Integer(-1);
  return a;
}

UniSeries operator*(const UniSeries& a, const UniSeries& b) {
  const int order = std::min(a.order(), b.order());
  UniSeries r(order);
  for (int i = 0; i <= order; ++i) {
    if (sgn(a[i]) == 0) continue;
    for (int j = 0; i + j <= order; ++j) {
      if (sgn(b[j]) != 0) mpz_addmul(r[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    }
  }
  return r;
}

UniSeries reciprocal(const UniSeries& a) {
  const Integer& c0 = a[0];
  if (c0 != 1 && c0 != -1) {
    throw std::invalid_argument("reciprocal: constant term must be +1 or -1, got " + c0.get_str());
  }
  UniSeries r(a.order());
  r[0] = c0;
  Integer acc;
  for (int n = 1; n <= a.order(); ++n) {
    acc = 0;
    for (int k = 1; k <= n; ++k) {
      if (sgn(a[k]) != 0) mpz_addmul(acc.get_mpz_t(), a[k].get_mpz_t(), r[n - k].get_mpz_t());
    }
    r[n] = (c0 == 1) ? Integer(-acc) : acc;
  }
  return r;
}

UniSeries pow(const UniSeries& a, int e) {
  if (e < 0) return pow(reciprocal(a), -e);
  UniSeries result = UniSeries::one(a.order());
  UniSeries base = a;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

UniSeries dilate(const UniSeries& s, int d) {
  if (d < 1) throw std::invalid_argument("dilate: factor must be >= 1");
  UniSeries r(s.order());
  for (int n = 0; n * d <= s.order(); ++n) r[n * d] = s[n];
  return r;
}

// ---------------------------------------------------------------------------
// LaurentPoly

LaurentPoly::LaurentPoly(int lo, std::vector<Integer> coeffs) : lo_(lo), c_(std::move(coeffs)) {
  trim();
}

LaurentPoly LaurentPoly::constant(const Integer& c) { return LaurentPoly(0, {c}); }

LaurentPoly LaurentPoly::monomial(const Integer& c, int exp) { return LaurentPoly(exp, {c}); }

LaurentPoly LaurentPoly::binomial(int exp, int sign) {
  LaurentPoly p = constant(1);
  p.axpy(constant(1), exp, -sign);
  return p;
}

void LaurentPoly::trim() {
  std::size_t first = 0;
  while (first < c_.size() && sgn(c_[first]) == 0) ++first;
  if (first == c_.size()) {
    c_.clear();
    lo_ = 0;
    return;
  }
  std::size_t last = c_.size();
  while (sgn(c_[last - 1]) == 0) --last;
  c_.resize(last);
  if (first > 0) {
    c_.erase(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(first));
    lo_ += static_cast<int>(first);
  }
}

Integer LaurentPoly::coeff(int e) const {
  if (is_zero() || e < lo_ || e > hi()) return 0;
  return c_[static_cast<std::size_t>(e - lo_)];
}

Integer LaurentPoly::sum() const {
  Integer s = 0;
  for (const auto& x : c_) s += x;
  return s;
}

void LaurentPoly::axpy(const LaurentPoly& src, int shift, int sign) {
  if (src.is_zero() || sign == 0) return;
  const int slo = src.lo_ + shift;
  const int shi = src.hi() + shift;
  if (is_zero()) {
    lo_ = slo;
    c_ = src.c_;
    if (sign != 1) {
      for (auto& x : c_) x *= sign;
    }
    return;
  }
  if (slo < lo_) {
    c_.insert(c_.begin(), static_cast<std::size_t>(lo_ - slo), Integer(0));
    lo_ = slo;
  }
  if (shi > hi()) c_.resize(static_cast<std::size_t>(shi - lo_ + 1));
  const std::size_t off = static_cast<std::size_t>(slo - lo_);
  for (std::size_t i = 0; i < src.c_.size(); ++i) add_multiple(c_[off + i], src.c_[i], sign);
  trim();
}

void LaurentPoly::add_product(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return;
  const int plo = a.lo_ + b.lo_;
  const int phi = a.hi() + b.hi();
  if (is_zero()) {
    lo_ = plo;
    c_.assign(static_cast<std::size_t>(phi - plo + 1), Integer(0));
  } else {
    if (plo < lo_) {
      c_.insert(c_.begin(), static_cast<std::size_t>(lo_ - plo), Integer(0));
      lo_ = plo;
    }
    if (phi > hi()) c_.resize(static_cast<std::size_t>(phi - lo_ + 1));
  }
  const std::size_t off = static_cast<std::size_t>(plo - lo_);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (sgn(a.c_[i]) == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      mpz_addmul(c_[off + i + j].get_mpz_t(), a.c_[i].get_mpz_t(), b.c_[j].get_mpz_t());
    }
  }
  trim();
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly p = *this;
  if (!p.is_zero()) p.lo_ += k;
  return p;
}

LaurentPoly LaurentPoly::clipped(int zmin, int zmax) const {
  if (is_zero() || zmax < lo_ || zmin > hi() || zmin > zmax) return {};
  const int from = std::max(zmin, lo_);
  const int to = std::min(zmax, hi());
  return LaurentPoly(from, std::vector<Integer>(c_.begin() + (from - lo_), c_.begin() + (to - lo_ + 1)));
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  axpy(o, 0, 1);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  axpy(o, 0, -1);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const Integer& k) {
  for (auto& x : c_) x *= k;
  trim();
  return *this;
}

LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r;
  r.add_product(a, b);
  return r;
}

std::optional<LaurentPoly> divide_exact(const LaurentPoly& num, const LaurentPoly& den) {
  if (den.is_zero()) throw std::domain_error("divide_exact: division by the zero polynomial");
  if (num.is_zero()) return LaurentPoly{};
  const auto n = num.coeffs();
  const auto d = den.coeffs();
  if (n.size() < d.size()) return std::nullopt;
  std::vector<Integer> rem(n.begin(), n.end());
  std::vector<Integer> quot(n.size() - d.size() + 1);
  const Integer& lead = d.back();
  for (std::size_t k = quot.size(); k-- > 0;) {
    Integer& top = rem[k + d.size() - 1];
    if (sgn(top) == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t())) return std::nullopt;
    Integer q;
    mpz_divexact(q.get_mpz_t(), top.get_mpz_t(), lead.get_mpz_t());
    for (std::size_t j = 0; j < d.size(); ++j) {
      mpz_submul(rem[k + j].get_mpz_t(), q.get_mpz_t(), d[j].get_mpz_t());
    }
    quot[k] = std::move(q);
  }
  for (const auto& x : rem) {
    if (sgn(x) != 0) return std::nullopt;
  }
  return LaurentPoly(num.lo() - den.lo(), std::move(quot));
}

// ---------------------------------------------------------------------------
// TailBound

TailBound TailBound::linear(int num, int den, long offset) {
  if (num < 0 || den < 1) throw std::invalid_argument("TailBound::linear: need num >= 0, den >= 1");
  return TailBound(Kind::Linear, num, den, offset);
}

TailBound TailBound::radical(int c, long offset) {
  if (c < 0) throw std::invalid_argument("TailBound::radical: need c >= 0");
  return TailBound(Kind::Radical, c, 1, offset);
}

long TailBound::floor_at(long n) const {
  if (kind_ == Kind::Linear) return -ceil_div(static_cast<long>(num_) * n, den_) - offset_;
  return -isqrt(static_cast<long>(num_) * n) - offset_;
}

long TailBound::first_exponent_beyond(int order, int r, int m) const {
  if (r < 1 || m < 1) throw std::invalid_argument("first_exponent_beyond: r and m must be >= 1");
  auto value = [&](long n) { return n * m + static_cast<long>(r) * floor_at(n); };
  const long start = static_cast<long>(order) + 1;
  if (kind_ == Kind::Linear) {
    if (static_cast<long>(m) * den_ <= static_cast<long>(r) * num_) {
      throw std::domain_error("substitution does not converge: z-exponents fall as fast as q-exponents grow");
    }
    long best = value(start);
    for (long n = start + 1; n < start + den_; ++n) best = std::min(best, value(n));
    return best;
  }
  if (num_ == 0) return value(start);
  // value(n) >= g(n) = m n - r sqrt(c n) - r offset, increasing past r^2 c / (4 m^2).
  const long rr = static_cast<long>(r) * r;
  const long mm = static_cast<long>(m) * m;
  const long last = std::max(start, ceil_div(rr * num_, mm) + 1);
  long best = value(start);
  for (long n = start + 1; n <= last; ++n) best = std::min(best, value(n));
  const long double x = static_cast<long double>(last + 1);
  const long double g = m * x - r * std::sqrt(static_cast<long double>(num_) * x) - r * static_cast<long double>(offset_);
  const long tail = static_cast<long>(std::floor(g)) - 1;
  return std::min(best, tail);
}

TailBound TailBound::shifted(int k) const {
  TailBound t = *this;
  t.offset_ -= k;
  return t;
}

namespace {

// ceil(c / (4 num/den))
long radical_over_linear(int c, int num, int den) {
  return ceil_div(static_cast<long>(c) * den, 4L * num);
}

}  // namespace

TailBound product_bound(const TailBound& a, const TailBound& b) {
  using K = TailBound::Kind;
  if (a.kind_ == K::Linear && b.kind_ == K::Linear) {
    const bool a_steeper = static_cast<long>(a.num_) * b.den_ >= static_cast<long>(b.num_) * a.den_;
    const TailBound& s = a_steeper ? a : b;
    // ceil(x) + ceil(y) <= ceil(x + y) + 1, with no loss for integral slopes.
    return TailBound::linear(s.num_, s.den_, a.offset_ + b.offset_ + (s.den_ == 1 ? 0 : 1));
  }
  if (a.kind_ == K::Radical && b.kind_ == K::Radical) {
    return TailBound::radical(a.num_ + b.num_, a.offset_ + b.offset_);
  }
  const TailBound& rad = a.kind_ == K::Radical ? a : b;
  const TailBound& lin = a.kind_ == K::Radical ? b : a;
  if (lin.num_ == 0) return TailBound::radical(rad.num_, rad.offset_ + lin.offset_);
  return TailBound::linear(lin.num_, lin.den_,
                           rad.offset_ + lin.offset_ + 1 + radical_over_linear(rad.num_, lin.num_, lin.den_));
}

TailBound sum_bound(const TailBound& a, const TailBound& b) {
  using K = TailBound::Kind;
  if (a.kind_ == K::Linear && b.kind_ == K::Linear) {
    const bool a_steeper = static_cast<long>(a.num_) * b.den_ >= static_cast<long>(b.num_) * a.den_;
    const TailBound& s = a_steeper ? a : b;
    return TailBound::linear(s.num_, s.den_, std::max(a.offset_, b.offset_));
  }
  if (a.kind_ == K::Radical && b.kind_ == K::Radical) {
    return TailBound::radical(std::max(a.num_, b.num_), std::max(a.offset_, b.offset_));
  }
  const TailBound& rad = a.kind_ == K::Radical ? a : b;
  const TailBound& lin = a.kind_ == K::Radical ? b : a;
  if (lin.num_ == 0) return TailBound::radical(rad.num_, std::max(rad.offset_, lin.offset_));
  return TailBound::linear(lin.num_, lin.den_,
                           std::max(lin.offset_, rad.offset_ + radical_over_linear(rad.num_, lin.num_, lin.den_)));
}

// ---------------------------------------------------------------------------
// BiSeries

BiSeries::BiSeries(int order) {
  if (order < 0) throw std::invalid_argument("BiSeries: negative order");
  rows_.resize(static_cast<std::size_t>(order) + 1);
}

BiSeries::BiSeries(int order, std::vector<LaurentPoly> rows, std::optional<TailBound> tail)
    : rows_(std::move(rows)), tail_(tail) {
  if (order < 0) throw std::invalid_argument("BiSeries: negative order");
  rows_.resize(static_cast<std::size_t>(order) + 1);
}

BiSeries BiSeries::one(int order) {
  BiSeries s(order);
  s.rows_[0] = LaurentPoly::constant(1);
  s.tail_ = TailBound::linear(0, 1, 0);
  return s;
}

BiSeries BiSeries::from_uni(const UniSeries& u) {
  BiSeries s(u.order());
  for (int n = 0; n <= u.order(); ++n) s.rows_[n] = LaurentPoly::constant(u[n]);
  s.tail_ = TailBound::linear(0, 1, 0);
  return s;
}

Integer BiSeries::coeff(int n, int zexp) const {
  if (n < 0 || n > order()) throw std::out_of_range("BiSeries::coeff: q-exponent out of range");
  return row(n).coeff(zexp);
}

void BiSeries::set_window(ZWindow w) {
  if (w.lo > w.hi) throw std::invalid_argument("BiSeries::set_window: zmin > zmax");
  window_ = w;
  for (auto& r : rows_) {
    if (!r.is_zero() && r.hi() > w.hi) r = r.clipped(r.lo(), w.hi);
  }
}

int BiSeries::min_zexp() const {
  int m = kNoCap;
  for (const auto& r : rows_) {
    if (!r.is_zero()) m = std::min(m, r.lo());
  }
  return m == kNoCap ? 0 : m;
}

int BiSeries::max_zexp() const {
  int m = -kNoCap;
  for (const auto& r : rows_) {
    if (!r.is_zero()) m = std::max(m, r.hi());
  }
  return m == -kNoCap ? 0 : m;
}

BiSeries BiSeries::truncated(int order) const {
  if (order > this->order()) throw std::invalid_argument("BiSeries::truncated: cannot extend order");
  BiSeries s(order, std::vector<LaurentPoly>(rows_.begin(), rows_.begin() + order + 1), tail_);
  s.window_ = window_;
  return s;
}

namespace {

std::optional<ZWindow> combine_windows(const std::optional<ZWindow>& a, const std::optional<ZWindow>& b) {
  if (!a) return b;
  if (!b) return a;
  return ZWindow{std::max(a->lo, b->lo), std::min(a->hi, b->hi)};
}

std::optional<TailBound> combine_tails(const std::optional<TailBound>& a, const std::optional<TailBound>& b,
                                       bool product) {
  if (!a || !b) return std::nullopt;
  return product ? product_bound(*a, *b) : sum_bound(*a, *b);
}

}  // namespace

BiSeries& BiSeries::operator+=(const BiSeries& o) {
  rows_.resize(static_cast<std::size_t>(std::min(order(), o.order())) + 1);
  for (std::size_t n = 0; n < rows_.size(); ++n) rows_[n] += o.rows_[n];
  tail_ = combine_tails(tail_, o.tail_, false);
  if (auto w = combine_windows(window_, o.window_)) set_window(*w);
  return *this;
}

BiSeries& BiSeries::operator-=(const BiSeries& o) {
  rows_.resize(static_cast<std::size_t>(std::min(order(), o.order())) + 1);
  for (std::size_t n = 0; n < rows_.size(); ++n) rows_[n] -= o.rows_[n];
  tail_ = combine_tails(tail_, o.tail_, false);
  if (auto w = combine_windows(window_, o.window_)) set_window(*w);
  return *this;
}

void BiSeries::mul_binomial(int zexp, int qexp, int sign) {
  if (qexp < 1) throw std::invalid_argument("BiSeries::mul_binomial: q-exponent must be >= 1");
  if (window_ && zexp < 0) throw std::logic_error("negative z-shift on a windowed series");
  for (int n = order(); n >= qexp; --n) rows_[n].axpy(rows_[n - qexp], zexp, -sign);
  if (window_) set_window(*window_);
}

void BiSeries::div_binomial(int zexp, int qexp, int sign) {
  if (qexp < 1) throw std::invalid_argument("BiSeries::div_binomial: q-exponent must be >= 1");
  if (window_ && zexp < 0) throw std::logic_error("negative z-shift on a windowed series");
  for (int n = qexp; n <= order(); ++n) rows_[n].axpy(rows_[n - qexp], zexp, sign);
  if (window_) set_window(*window_);
}

void BiSeries::mul_poly(const LaurentPoly& p) {
  if (window_ && !p.is_zero() && p.lo() < 0) throw std::logic_error("negative z-shift on a windowed series");
  for (auto& r : rows_) r = r * p;
  if (window_) set_window(*window_);
}

void BiSeries::mul_sparse(std::span<const SparseTerm> terms) {
  for (int n = order(); n >= 1; --n) {
    for (const auto& t : terms) {
      if (t.exp <= n) rows_[n].axpy(rows_[n - t.exp], 0, t.coeff);
    }
  }
}

void BiSeries::div_sparse(std::span<const SparseTerm> terms) {
  for (int n = 1; n <= order(); ++n) {
    for (const auto& t : terms) {
      if (t.exp <= n) rows_[n].axpy(rows_[n - t.exp], 0, -t.coeff);
    }
  }
}

BiSeries operator+(BiSeries a, const BiSeries& b) { return a += b; }
BiSeries operator-(BiSeries a, const BiSeries& b) { return a -= b; }

BiSeries operator*(const BiSeries& a, const BiSeries& b) {
  const int order = std::min(a.order(), b.order());
  std::vector<LaurentPoly> rows(static_cast<std::size_t>(order) + 1);
  for (int i = 0; i <= order; ++i) {
    if (a.row(i).is_zero()) continue;
    for (int j = 0; i + j <= order; ++j) rows[i + j].add_product(a.row(i), b.row(j));
  }
  BiSeries r(order, std::move(rows), combine_tails(a.tail(), b.tail(), true));
  if (a.window() || b.window()) {
    // A windowed operand is complete only up to its window's hi; a product
    // coefficient at e needs operand terms up to e - (lowest exponent of the other).
    const long cap_a = a.window() ? static_cast<long>(a.window()->hi) + b.min_zexp() : kNoCap;
    const long cap_b = b.window() ? static_cast<long>(b.window()->hi) + a.min_zexp() : kNoCap;
    auto w = *combine_windows(a.window(), b.window());
    w.hi = static_cast<int>(std::min<long>({w.hi, cap_a, cap_b}));
    if (w.hi < w.lo) throw std::domain_error("product of windowed series has an empty exact window");
    r.set_window(w);
  }
  return r;
}

BiSeries operator*(const BiSeries& a, const UniSeries& b) {
  const int order = std::min(a.order(), b.order());
  std::vector<LaurentPoly> rows(static_cast<std::size_t>(order) + 1);
  for (int k = 0; k <= order; ++k) {
    if (sgn(b[k]) == 0) continue;
    const LaurentPoly scalar = LaurentPoly::constant(b[k]);
    for (int n = k; n <= order; ++n) rows[n].add_product(a.row(n - k), scalar);
  }
  BiSeries r(order, std::move(rows), a.tail());
  if (a.window()) r.set_window(*a.window());
  return r;
}

BiSeries times_zpow(BiSeries s, int k) {
  std::vector<LaurentPoly> rows;
  rows.reserve(s.rows().size());
  for (const auto& r : s.rows()) rows.push_back(r.shifted(k));
  BiSeries out(s.order(), std::move(rows), s.tail() ? std::optional(s.tail()->shifted(k)) : std::nullopt);
  if (s.window()) out.set_window({s.window()->lo + k, s.window()->hi + k});
  return out;
}

namespace {

void require_exact(const BiSeries& s, const char* what) {
  if (!s.exact()) throw std::invalid_argument(std::string(what) + ": requires an exact (unwindowed) series");
}

const TailBound& require_tail(const BiSeries& s, const char* what) {
  if (!s.tail()) {
    throw std::invalid_argument(std::string(what) + ": series carries no bound on its unstored rows");
  }
  return *s.tail();
}

}  // namespace

UniSeries substitute_z(const BiSeries& s, int r, int m) {
  if (r <= 0) throw std::invalid_argument("substitute_z: r must be positive");
  if (m <= 0) throw std::invalid_argument("substitute_z: m must be positive");
  require_exact(s, "substitute_z");
  const long beyond = require_tail(s, "substitute_z").first_exponent_beyond(s.order(), r, m);
  const long order = beyond - 1;
  if (order < 0) throw std::domain_error("substitute_z: stored rows determine no coefficient; expand further");
  UniSeries out(static_cast<int>(order));
  for (int n = 0; n <= s.order(); ++n) {
    const LaurentPoly& row = s.row(n);
    for (int i = row.lo(); i <= row.hi(); ++i) {
      const long e = static_cast<long>(n) * m + static_cast<long>(i) * r;
      if (e < 0) throw std::domain_error("substitute_z: substitution produces a negative q-exponent");
      if (e <= order) out[static_cast<int>(e)] += row.coeffs()[static_cast<std::size_t>(i - row.lo())];
    }
  }
  return out;
}

UniSeries substitute_z_one(const BiSeries& s) {
  require_exact(s, "substitute_z_one");
  UniSeries out(s.order());
  for (int n = 0; n <= s.order(); ++n) out[n] = s.row(n).sum();
  return out;
}

BiSeries reduce_mod_z_pow(const BiSeries& s, int a) {
  if (a < 1) throw std::invalid_argument("reduce_mod_z_pow: modulus must be >= 1");
  require_exact(s, "reduce_mod_z_pow");
  std::vector<LaurentPoly> rows;
  rows.reserve(s.rows().size());
  for (const auto& row : s.rows()) {
    std::vector<Integer> folded(static_cast<std::size_t>(a));
    for (int i = row.lo(); i <= row.hi(); ++i) {
      const int res = ((i % a) + a) % a;
      folded[static_cast<std::size_t>(res)] += row.coeffs()[static_cast<std::size_t>(i - row.lo())];
    }
    rows.emplace_back(0, std::move(folded));
  }
  return BiSeries(s.order(), std::move(rows), TailBound::linear(0, 1, 0));
}

BiSeries shift_z_to_zq(const BiSeries& s) {
  require_exact(s, "shift_z_to_zq");
  const long order = require_tail(s, "shift_z_to_zq").first_exponent_beyond(s.order(), 1, 1) - 1;
  if (order < 0) throw std::domain_error("shift_z_to_zq: stored rows determine no coefficient; expand further");
  std::vector<LaurentPoly> rows(static_cast<std::size_t>(order) + 1);
  for (int n = 0; n <= s.order(); ++n) {
    const LaurentPoly& row = s.row(n);
    for (int i = row.lo(); i <= row.hi(); ++i) {
      const long k = static_cast<long>(n) + i;
      if (k < 0) throw std::domain_error("shift_z_to_zq: result has a negative q-exponent");
      if (k <= order) {
        rows[static_cast<std::size_t>(k)].axpy(
            LaurentPoly::monomial(row.coeffs()[static_cast<std::size_t>(i - row.lo())], i), 0, 1);
      }
    }
  }
  return BiSeries(static_cast<int>(order), std::move(rows));
}

}  // namespace etaq
