#include "etaq/factors.hpp"

#include <map>
#include <stdexcept>
#include <string>

namespace etaq {

namespace {

std::string describe_q0(const LaurentPoly& p) {
  std::string s;
  for (int e = p.lo(); e <= p.hi(); ++e) {
    const Integer c = p.coeff(e);
    if (sgn(c) == 0) continue;
    if (!s.empty()) s += sgn(c) > 0 ? " + " : " - ";
    else if (sgn(c) < 0) s += "-";
    const Integer mag = abs(c);
    if (e == 0 || mag != 1) s += mag.get_str();
    if (e != 0) s += (e == 1) ? "z" : "z^" + std::to_string(e);
  }
  return s.empty() ? "0" : "(" + s + ")";
}

/// Splits off the q^0 factor (1 - sign z^e) of an atom with qshift == 0.
/// Returns the remaining atom, or nullopt if nothing remains.
std::optional<PochhammerAtom> peel(const PochhammerAtom& a) {
  PochhammerAtom rest = a;
  rest.qshift = a.qstep;
  if (rest.length) {
    if (*rest.length <= 1) return std::nullopt;
    --*rest.length;
  }
  return rest;
}

bool is_empty_atom(const PochhammerAtom& a) { return a.length && *a.length <= 0; }

struct Cancelled {
  FactorList list;
  std::vector<LaurentPoly> poles;  // q^0 denominators that divided nothing
};

Cancelled cancel_partial(const FactorList& f) {
  Cancelled out;
  out.list.euler = f.euler;
  out.list.polys = f.polys;
  for (const auto& a : f.numer) {
    if (is_empty_atom(a)) continue;
    if (a.qshift != 0) {
      out.list.numer.push_back(a);
      continue;
    }
    out.list.polys.push_back(LaurentPoly::binomial(a.zexp, a.sign));
    if (auto rest = peel(a)) out.list.numer.push_back(*rest);
  }
  std::vector<LaurentPoly> den_q0;
  for (const auto& a : f.denom) {
    if (is_empty_atom(a)) continue;
    if (a.qshift != 0) {
      out.list.denom.push_back(a);
      continue;
    }
    den_q0.push_back(LaurentPoly::binomial(a.zexp, a.sign));
    if (auto rest = peel(a)) out.list.denom.push_back(*rest);
  }
  for (const auto& d : den_q0) {
    if (d.is_zero()) throw std::domain_error("division by the zero factor (1 - q^0)");
    bool done = false;
    for (auto& p : out.list.polys) {
      if (auto q = divide_exact(p, d)) {
        p = std::move(*q);
        done = true;
        break;
      }
    }
    if (!done && out.list.polys.size() > 1) {
      LaurentPoly all = LaurentPoly::constant(1);
      for (const auto& p : out.list.polys) all = all * p;
      if (auto q = divide_exact(all, d)) {
        out.list.polys = {std::move(*q)};
        done = true;
      }
    }
    if (!done) out.poles.push_back(d);
  }
  std::erase_if(out.list.polys, [](const LaurentPoly& p) { return p == LaurentPoly::constant(1); });
  return out;
}

std::map<int, int> merged_euler(const std::vector<EulerTag>& tags) {
  std::map<int, int> m;
  for (const auto& t : tags) {
    if (t.d < 1) throw std::invalid_argument("EulerTag: d must be >= 1");
    m[t.d] += t.power;
  }
  return m;
}

void check_atom(const PochhammerAtom& a) {
  if (a.qshift < 0) throw std::invalid_argument("PochhammerAtom: negative q-shift");
  if (a.qstep < 1) throw std::invalid_argument("PochhammerAtom: q-step must be >= 1");
  if (a.sign != 1 && a.sign != -1) throw std::invalid_argument("PochhammerAtom: sign must be +1 or -1");
}

template <class Fn>
void for_each_factor(const PochhammerAtom& a, int order, Fn&& fn) {
  check_atom(a);
  for (long k = 0; !a.length || k < *a.length; ++k) {
    const long e = a.qshift + k * a.qstep;
    if (e > order) break;
    fn(static_cast<int>(e));
  }
}

}  // namespace

FactorList& FactorList::operator*=(const FactorList& o) {
  numer.insert(numer.end(), o.numer.begin(), o.numer.end());
  denom.insert(denom.end(), o.denom.begin(), o.denom.end());
  euler.insert(euler.end(), o.euler.begin(), o.euler.end());
  polys.insert(polys.end(), o.polys.begin(), o.polys.end());
  return *this;
}

FactorList& FactorList::operator/=(const FactorList& o) {
  if (!o.polys.empty()) throw std::invalid_argument("FactorList: cannot divide by polynomial cofactors");
  numer.insert(numer.end(), o.denom.begin(), o.denom.end());
  denom.insert(denom.end(), o.numer.begin(), o.numer.end());
  for (const auto& t : o.euler) euler.push_back({t.d, -t.power});
  return *this;
}

FactorList operator*(FactorList a, const FactorList& b) { return a *= b; }
FactorList operator/(FactorList a, const FactorList& b) { return a /= b; }

FactorList cancel_q0(const FactorList& numerator, const FactorList& denominator) {
  return cancel_q0(numerator / denominator);
}

FactorList cancel_q0(const FactorList& f) {
  Cancelled c = cancel_partial(f);
  if (!c.poles.empty()) {
    throw std::domain_error("non-cancellable q^0 denominator " + describe_q0(c.poles.front()) +
                            "; use windowed expansion");
  }
  return std::move(c.list);
}

TailBound tail_bound(const FactorList& f) {
  // Every monomial z^e q^s coming from an atom satisfies e >= -slope * s.
  long num = 0, den = 1, offset = 0;
  auto consider = [&](const PochhammerAtom& a, bool numerator) {
    if (a.zexp >= 0 || is_empty_atom(a)) return;
    long smallest = a.qshift;
    if (a.qshift == 0) {
      if (numerator) offset += -a.zexp;
      if (a.length && *a.length <= 1) return;
      smallest = a.qstep;
    }
    if (static_cast<long>(-a.zexp) * den > num * smallest) {
      num = -a.zexp;
      den = smallest;
    }
  };
  for (const auto& a : f.numer) consider(a, true);
  for (const auto& a : f.denom) consider(a, false);
  for (const auto& p : f.polys) {
    if (!p.is_zero() && p.lo() < 0) offset += -p.lo();
  }
  return TailBound::linear(static_cast<int>(num), static_cast<int>(den), offset);
}

BiSeries expand_factors(const FactorList& f, int order) {
  for (const auto& a : f.denom) {
    if (a.qshift == 0 && !is_empty_atom(a)) {
      throw std::domain_error("division by a q^0 z-factor " + describe_q0(LaurentPoly::binomial(a.zexp, a.sign)) +
                              "; cancel it first or expand windowed");
    }
  }
  BiSeries s = BiSeries::one(order);
  for (const auto& p : f.polys) s.mul_poly(p);
  for (const auto& a : f.numer) {
    for_each_factor(a, order, [&](int e) {
      if (e == 0) s.mul_poly(LaurentPoly::binomial(a.zexp, a.sign));
      else s.mul_binomial(a.zexp, e, a.sign);
    });
  }
  for (const auto& a : f.denom) {
    for_each_factor(a, order, [&](int e) { s.div_binomial(a.zexp, e, a.sign); });
  }
  for (const auto& [d, power] : merged_euler(f.euler)) {
    const auto terms = pentagonal_terms(d, order);
    for (int i = 0; i < power; ++i) s.mul_sparse(terms);
    for (int i = 0; i < -power; ++i) s.div_sparse(terms);
  }
  s.set_tail(tail_bound(f));
  return s;
}

BiSeries expand_windowed(const FactorList& f, int order, ZWindow window) {
  if (window.lo > window.hi) throw std::invalid_argument("expand_windowed: zmin > zmax");
  Cancelled c = cancel_partial(f);
  struct Pole {
    int e;
    int sign;
  };
  std::vector<Pole> poles;
  for (const auto& p : c.poles) {
    const bool binomial = !p.is_zero() && p.lo() == 0 && p.hi() >= 1 && p.coeff(0) == 1 &&
                          abs(p.coeff(p.hi())) == 1 && p.coeffs().size() >= 2 && [&] {
                            for (int e = 1; e < p.hi(); ++e)
                              if (sgn(p.coeff(e)) != 0) return false;
                            return true;
                          }();
    if (!binomial) {
      throw std::domain_error("expand_windowed: q^0 denominator " + describe_q0(p) + " is not of the form 1 - z^e");
    }
    poles.push_back({p.hi(), static_cast<int>(-p.coeff(p.hi()).get_si())});
  }
  const BiSeries base = expand_factors(c.list, order);
  std::vector<LaurentPoly> rows(static_cast<std::size_t>(order) + 1);
  for (int n = 0; n <= order; ++n) {
    const LaurentPoly& r = base.row(n);
    if (r.is_zero() || r.lo() > window.hi) continue;
    const int lo = r.lo();
    std::vector<Integer> dense(static_cast<std::size_t>(window.hi - lo + 1));
    for (int i = lo; i <= std::min(r.hi(), window.hi); ++i) dense[static_cast<std::size_t>(i - lo)] = r.coeff(i);
    // 1/(1 - sign z^e) = sum sign^k z^{ek}; coefficients at i only see i' <= i.
    for (const auto& p : poles) {
      for (std::size_t i = static_cast<std::size_t>(p.e); i < dense.size(); ++i) {
        if (p.sign == 1) dense[i] += dense[i - static_cast<std::size_t>(p.e)];
        else dense[i] -= dense[i - static_cast<std::size_t>(p.e)];
      }
    }
    rows[static_cast<std::size_t>(n)] = LaurentPoly(lo, std::move(dense));
  }
  BiSeries out(order, std::move(rows));
  out.set_window(window);
  return out;
}

UniSeries expand_univariate(const FactorList& f, int order) {
  UniSeries s = UniSeries::one(order);
  for (const auto& p : f.polys) {
    if (!p.is_zero() && (p.lo() != 0 || p.hi() != 0)) {
      throw std::invalid_argument("expand_univariate: polynomial cofactor depends on z");
    }
    s *= p.coeff(0);
  }
  auto require_z_free = [](const PochhammerAtom& a) {
    if (a.zexp != 0) throw std::invalid_argument("expand_univariate: atom depends on z");
  };
  for (const auto& a : f.numer) {
    require_z_free(a);
    for_each_factor(a, order, [&](int e) {
      if (e == 0) s *= Integer(1 - a.sign);
      else s.mul_binomial(e, a.sign);
    });
  }
  for (const auto& a : f.denom) {
    require_z_free(a);
    for_each_factor(a, order, [&](int e) {
      if (e == 0) throw std::domain_error("expand_univariate: denominator factor (1 - q^0) is not a unit");
      s.div_binomial(e, a.sign);
    });
  }
  for (const auto& [d, power] : merged_euler(f.euler)) {
    const auto terms = pentagonal_terms(d, order);
    for (int i = 0; i < power; ++i) s.mul_sparse(terms);
    for (int i = 0; i < -power; ++i) s.div_sparse(terms);
  }
  return s;
}

UniSeries substitute_z(const FactorList& f, int r, int m, int order) {
  if (r <= 0) throw std::invalid_argument("substitute_z: r must be positive");
  if (m <= 0) throw std::invalid_argument("substitute_z: m must be positive");
  auto map_atom = [&](const PochhammerAtom& a) {
    check_atom(a);
    PochhammerAtom b = a;
    const long shift = static_cast<long>(a.zexp) * r + static_cast<long>(a.qshift) * m;
    if (shift < 0) throw std::domain_error("substitute_z: substitution produces a negative q-exponent");
    b.zexp = 0;
    b.qshift = static_cast<int>(shift);
    b.qstep = a.qstep * m;
    return b;
  };
  FactorList g;
  for (const auto& a : f.numer) g.numer.push_back(map_atom(a));
  for (const auto& a : f.denom) g.denom.push_back(map_atom(a));
  for (const auto& t : f.euler) g.euler.push_back({t.d * m, t.power});
  UniSeries s = expand_univariate(g, order);
  for (const auto& p : f.polys) {
    if (p.is_zero()) return UniSeries(order);
    if (p.lo() < 0) throw std::domain_error("substitute_z: polynomial cofactor has negative z-exponents");
    UniSeries u(order);
    for (int i = p.lo(); i <= p.hi(); ++i) {
      const long e = static_cast<long>(i) * r;
      if (e <= order) u[static_cast<int>(e)] += p.coeff(i);
    }
    s = s * u;
  }
  return s;
}

FactorList shift_z_to_zq(const FactorList& f) {
  for (const auto& p : f.polys) {
    if (!p.is_zero() && (p.lo() != 0 || p.hi() != 0)) {
      throw std::invalid_argument("shift_z_to_zq: shift polynomial cofactors before cancelling them");
    }
  }
  auto shift_atom = [](PochhammerAtom a) {
    a.qshift += a.zexp;
    if (a.qshift < 0) throw std::domain_error("shift_z_to_zq: atom acquires a negative q-exponent");
    return a;
  };
  FactorList g = f;
  for (auto& a : g.numer) a = shift_atom(a);
  for (auto& a : g.denom) a = shift_atom(a);
  return g;
}

}  // namespace etaq
