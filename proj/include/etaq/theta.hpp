#pragma once

#include <span>
#include <vector>

#include "etaq/factors.hpp"
#include "etaq/series.hpp"

namespace etaq {

/// (n_0, ..., n_{a-1}) with coordinates summing to zero.
using LatticeVector = std::vector<int>;

/// Q_a(n) = (a/2) n.n + (0, 1, ..., a-1).n for a zero-sum vector of length a.
/// Integral because n.n and sum n_i have the same parity.
long qform(int a, std::span<const int> v);

/// Largest |n_i| any zero-sum vector with Q_a(n) <= bound can have:
/// floor(((a-1) + sqrt((a-1)^2 + 8 a bound)) / (2a)).
int coordinate_radius(int a, int bound);

/// Every zero-sum vector with Q_a(n) <= bound, in lexicographic order.
std::vector<LatticeVector> enumerate_lattice(int a, int bound);

/// sum over zero-sum n in Z^t of q^{Q_t(n)}.
UniSeries klyachko_theta(int t, int order);

/// Row bound for F_j and C_a: every z-exponent at q^n is >= -isqrt(2an) - (a-1).
TailBound theta_tail(int a);

/// F_0, ..., F_{a-1}:
///   F_j = sum z^{a n_j + j} q^{Q_a(n)}   (1 <= j <= a-1)
///   F_0 = sum z^{-a n_{a-1}} q^{Q_a(n)}
std::vector<BiSeries> theta_components(int a, int order);
BiSeries f_component(int a, int j, int order);

/// C_a(z;q) = F_0 + ... + F_{a-1}.
BiSeries c_series(int a, int order);

/// R_a(z;q) = E(q) E(q^a)^{a-2} [z^a;q^a]_inf / [z;q]_inf (uncancelled).
FactorList r_factors(int a);

/// D_a(z;q) = E(q^a)^{2a-2} [z^a;q^a]_inf / [z;q]_inf.
FactorList d_factors(int a);

/// D_a(q^r; q^m) = (E(q^{am})^a / E(q^m)) C_a(q^r; q^m), from the lattice sum.
UniSeries d_specialized(int a, int r, int m, int order);

// Reindexings that carry F_j(zq;q) onto z^{-(a-1)} F_{j-1}(z;q).

/// (n_1, ..., n_{a-1}, n_0) + e_{j-1} - e_{a-1}; Q changes by a n_j + j - sum n.
LatticeVector reindex_cyclic(std::span<const int> n, int j);
/// (-n_{a-2}, ..., -n_0, -n_{a-1}); Q changes by -a n_{a-1} - (a-2) sum n.
LatticeVector reindex_reflect_f0(std::span<const int> n);
/// (-n_0, -n_{a-1}, ..., -n_1) + e_0 - e_{a-1}; Q changes by a n_1 + 1 - a sum n.
LatticeVector reindex_reflect_f1(std::span<const int> n);

}  // namespace etaq
