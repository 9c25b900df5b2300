/*
   Copyright 2026 The cering authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "cering/invariants.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace cering {

std::string tri_str(Tri t) {
  switch (t) {
    case Tri::yes:
      return "yes";
    case Tri::no:
      return "no";
    default:
      return "unknown";
  }
}

// ---------------------------------------------------------------------------
// centers
// ---------------------------------------------------------------------------

Subspace center(const Algebra& a) {
  const int n = a.dim();
  Matrix g(a.field(), n, n * n);
  for (int s = 0; s < n; ++s) {
    ScalarVec bs = a.basis_element(s).coords();
    for (int i = 0; i < n; ++i) {
      ScalarVec diff = sub(a.mul_coords(bs, a.basis_element(i).coords()),
                           a.mul_coords(a.basis_element(i).coords(), bs));
      for (int k = 0; k < n; ++k) g.at(s, i * n + k) = diff[k];
    }
  }
  return echelonize(left_kernel(g));
}

ResidueModule center(const FiniteRing& r) {
  const int n = r.generator_count();
  IntMat f(n, IntVec(static_cast<std::size_t>(n) * n, 0));
  IntVec dst;
  dst.reserve(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) dst.push_back(r.moduli()[k]);
  for (int s = 0; s < n; ++s) {
    IntVec gs = r.generator(s).coords();
    for (int i = 0; i < n; ++i) {
      IntVec gi = r.generator(i).coords();
      IntVec ab = r.mul_coords(gs, gi);
      IntVec ba = r.mul_coords(gi, gs);
      for (int k = 0; k < n; ++k)
        f[s][static_cast<std::size_t>(i) * n + k] =
            mod_floor(ab[k] - ba[k], r.moduli()[k]);
    }
  }
  return kernel_mod(f, r.moduli(), dst);
}

// ---------------------------------------------------------------------------
// radical engines
// ---------------------------------------------------------------------------

namespace {

using LVec = std::vector<long>;
using LMat = std::vector<LVec>;

long modl(long x, long m) {
  long r = x % m;
  return r < 0 ? r + m : r;
}

long inv_modp(long a, long p) {
  long t = 0, nt = 1, r = p, nr = modl(a, p);
  while (nr != 0) {
    long q = r / nr;
    long tmp = t - q * nt;
    t = nt;
    nt = tmp;
    tmp = r - q * nr;
    r = nr;
    nr = tmp;
  }
  return modl(t, p);
}

std::vector<int> rref_modp(LMat& m, long p) {
  std::vector<int> pivots;
  if (m.empty()) return pivots;
  const int rows = static_cast<int>(m.size());
  const int cols = static_cast<int>(m[0].size());
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int piv = -1;
    for (int i = rank; i < rows; ++i)
      if (m[i][c] % p != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(m[piv], m[rank]);
    long inv = inv_modp(m[rank][c], p);
    for (int j = c; j < cols; ++j) m[rank][j] = modl(m[rank][j] * inv, p);
    for (int i = 0; i < rows; ++i) {
      if (i == rank) continue;
      long f = modl(m[i][c], p);
      if (!f) continue;
      for (int j = c; j < cols; ++j)
        m[i][j] = modl(m[i][j] - f * m[rank][j], p);
    }
    pivots.push_back(c);
    ++rank;
  }
  m.resize(rank);
  return pivots;
}

/// { x : x G = 0 } over F_p, canonical basis rows.
LMat left_kernel_modp(LMat g, long p) {
  if (g.empty()) return {};
  const int rows = static_cast<int>(g.size());
  const int cols = static_cast<int>(g[0].size());
  LMat gt(cols, LVec(rows, 0));
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) gt[j][i] = g[i][j];
  std::vector<int> pivots = rref_modp(gt, p);
  std::vector<bool> is_piv(rows, false);
  for (int c : pivots) is_piv[c] = true;
  LMat kernel;
  for (int fc = 0; fc < rows; ++fc) {
    if (is_piv[fc]) continue;
    LVec v(rows, 0);
    v[fc] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i)
      v[pivots[i]] = modl(-gt[i][fc], p);
    kernel.push_back(std::move(v));
  }
  return kernel;
}

struct FpAlgebraData {
  int n = 0;
  long p = 0;
  std::vector<std::vector<std::pair<int, long>>> products;  // (i*n+j) -> (k, c)
  const std::vector<std::pair<int, long>>& terms(int i, int j) const {
    return products[static_cast<std::size_t>(i) * n + j];
  }
};

FpAlgebraData fp_data(const Algebra& a) {
  FpAlgebraData d;
  d.n = a.dim();
  d.p = static_cast<long>(a.field().prime());
  d.products.assign(static_cast<std::size_t>(d.n) * d.n, {});
  for (const MulTerm& t : a.table()) {
    long c = modl(static_cast<long>(numerator(t.c.value()) % d.p), d.p);
    if (c) d.products[static_cast<std::size_t>(t.i) * d.n + t.j].emplace_back(t.k, c);
  }
  return d;
}

LVec fp_mul(const FpAlgebraData& d, const LVec& x, const LVec& y) {
  LVec r(d.n, 0);
  for (int i = 0; i < d.n; ++i) {
    if (!x[i]) continue;
    for (int j = 0; j < d.n; ++j) {
      if (!y[j]) continue;
      long xy = modl(x[i] * y[j], d.p);
      for (const auto& [k, c] : d.terms(i, j)) r[k] = modl(r[k] + xy * c, d.p);
    }
  }
  return r;
}

/// Left-multiplication matrix lifted to [0, p): M[i][j] = coeff of b_j in z b_i.
LMat fp_lmat(const FpAlgebraData& d, const LVec& z) {
  LMat m(d.n, LVec(d.n, 0));
  for (int k = 0; k < d.n; ++k) {
    if (!z[k]) continue;
    for (int i = 0; i < d.n; ++i)
      for (const auto& [col, c] : d.terms(k, i))
        m[i][col] = modl(m[i][col] + z[k] * c, d.p);
  }
  return m;
}

LMat lmat_mul_mod(const LMat& a, const LMat& b, long m) {
  const int n = static_cast<int>(a.size());
  LMat r(n, LVec(n, 0));
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      long aik = a[i][k];
      if (!aik) continue;
      for (int j = 0; j < n; ++j) r[i][j] += aik * b[k][j];
    }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) r[i][j] = modl(r[i][j], m);
  return r;
}

/// Tr(lift(M_z)^{p^level}) / p^level mod p, computed mod p^{level+1}.
long chain_value(const FpAlgebraData& d, const LVec& z, int level) {
  long m = 1;
  for (int i = 0; i <= level; ++i) m *= d.p;  // p^{level+1}
  LMat x = fp_lmat(d, z);                     // entries already in [0, p)
  // exponent p^level by repeated p-th powers via binary exponentiation
  long e = m / d.p;
  LMat acc;
  bool acc_set = false;
  LMat base = x;
  long rest = e;
  if (rest == 0) throw std::logic_error("chain_value: zero exponent");
  while (rest > 0) {
    if (rest & 1) {
      acc = acc_set ? lmat_mul_mod(acc, base, m) : base;
      acc_set = true;
    }
    rest >>= 1;
    if (rest) base = lmat_mul_mod(base, base, m);
  }
  long tr = 0;
  for (int i = 0; i < d.n; ++i) tr = modl(tr + acc[i][i], m);
  long pl = m / d.p;
  if (tr % pl != 0)
    throw RadicalUndecided("p-power trace not divisible as required at level " +
                           std::to_string(level));
  return modl(tr / pl, d.p);
}

/// The characteristic-p radical chain; returns an echelonized basis mod p in
/// ambient coordinates.
LMat fp_radical_chain(const FpAlgebraData& d) {
  LMat v(d.n, LVec(d.n, 0));
  for (int i = 0; i < d.n; ++i) v[i][i] = 1;
  int levels = 0;
  {
    long pl = 1;
    while (pl <= d.n / d.p) {
      pl *= d.p;
      ++levels;
    }  // p^levels <= n < p^{levels+1}
  }
  for (int level = 0; level <= levels; ++level) {
    const int dimv = static_cast<int>(v.size());
    if (dimv == 0) break;
    LMat g(dimv, LVec(dimv, 0));
    for (int s = 0; s < dimv; ++s)
      for (int t = 0; t < dimv; ++t)
        g[s][t] = chain_value(d, fp_mul(d, v[s], v[t]), level);
    LMat kernel = left_kernel_modp(g, d.p);
    LMat next;
    for (const LVec& coeff : kernel) {
      LVec w(d.n, 0);
      for (int s = 0; s < dimv; ++s) {
        if (!coeff[s]) continue;
        for (int j = 0; j < d.n; ++j) w[j] = modl(w[j] + coeff[s] * v[s][j], d.p);
      }
      next.push_back(std::move(w));
    }
    rref_modp(next, d.p);
    v = std::move(next);
  }
  return v;
}

Subspace trace_form_kernel(const Algebra& a) {
  const int n = a.dim();
  Matrix g(a.field(), n, n);
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t) {
      ScalarVec z = a.mul_coords(a.basis_element(s).coords(),
                                 a.basis_element(t).coords());
      // Tr(L_z) = sum_i coeff of b_i in z b_i
      Scalar tr = Scalar::zero(a.field());
      for (int i = 0; i < n; ++i) {
        ScalarVec zi = a.mul_coords(z, a.basis_element(i).coords());
        tr = tr + zi[i];
      }
      g.at(s, t) = tr;
    }
  return echelonize(left_kernel(g));
}

void verify_radical(const Algebra& a, const Subspace& j);

Subspace radical_unverified(const Algebra& a) {
  if (a.field().is_rationals()) return trace_form_kernel(a);
  const Int& p = a.field().prime();
  if (p > a.dim()) {
    // One level suffices: no p-th powers interfere below dimension p.
    return trace_form_kernel(a);
  }
  FpAlgebraData d = fp_data(a);
  LMat v = fp_radical_chain(d);
  std::vector<ScalarVec> rows;
  for (const LVec& r : v) {
    ScalarVec row;
    for (long x : r) row.push_back(Scalar::of_int(a.field(), x));
    rows.push_back(std::move(row));
  }
  return Subspace::span(a.field(), a.dim(), rows);
}

void verify_radical(const Algebra& a, const Subspace& j) {
  for (int i = 0; i < j.dim(); ++i) {
    if (!is_nilpotent_element(a, j.basis_row(i)))
      throw RadicalUndecided("radical candidate contains a non-nilpotent element");
    for (int b = 0; b < a.dim(); ++b) {
      ScalarVec rb = a.mul_coords(j.basis_row(i), a.basis_element(b).coords());
      ScalarVec br = a.mul_coords(a.basis_element(b).coords(), j.basis_row(i));
      if (!j.contains_vector(rb) || !j.contains_vector(br))
        throw RadicalUndecided("radical candidate is not a two-sided ideal");
    }
  }
  if (!j.is_zero()) {
    QuotientAlgebra q = quotient_by_ideal(a, j);
    Subspace jq = radical_unverified(q.algebra);
    if (!jq.is_zero())
      throw RadicalUndecided("quotient by the radical candidate still has radical");
  }
}

}  // namespace

Subspace radical(const Algebra& a) {
  Subspace j = radical_unverified(a);
  verify_radical(a, j);
  return j;
}

namespace {

std::map<Int, int> factor_positive(Int m) {
  std::map<Int, int> out;
  for (Int p = 2; p * p <= m && p < (1 << 20); ++p) {
    while (m % p == 0) {
      ++out[p];
      m /= p;
    }
  }
  if (m > 1) {
    if (!is_probable_prime(m))
      throw RadicalUndecided("cannot factor additive order " + m.str());
    ++out[m];
  }
  return out;
}

}  // namespace

ResidueModule radical(const FiniteRing& r) {
  const int n = r.generator_count();
  Int l = 1;
  for (const Int& m : r.moduli()) l = boost::multiprecision::lcm(l, m);
  if (l == 1) return ResidueModule::zero(r.moduli());
  std::map<Int, int> lfac = factor_positive(l);

  IntMat gens;
  for (const auto& [p, a_max] : lfac) {
    Int pa = 1;
    for (int i = 0; i < a_max; ++i) pa *= p;
    Int lprime = l / pa;
    Int ep = (lprime == 1) ? Int(1) : lprime * invert_mod(lprime % pa, pa);
    std::vector<int> block;
    for (int i = 0; i < n; ++i)
      if (r.moduli()[i] % p == 0) block.push_back(i);
    if (block.empty()) continue;
    const int bn = static_cast<int>(block.size());

    // R_p / p R_p on the generators h_i = E_p g_i, i in block
    FieldSpec fp = FieldSpec::prime_field(p);
    std::vector<MulTerm> table;
    std::vector<int> pos(n, -1);
    for (int s = 0; s < bn; ++s) pos[block[s]] = s;
    for (int s = 0; s < bn; ++s)
      for (int t = 0; t < bn; ++t)
        for (const auto& [k, c] : r.product_terms(block[s], block[t])) {
          if (pos[k] < 0) continue;  // component outside the p-block vanishes
          Int cc = mod_floor(ep * c, p);
          if (cc != 0)
            table.push_back({s, t, pos[k], Scalar::of_int(fp, cc)});
        }
    ScalarVec one_b;
    for (int s = 0; s < bn; ++s)
      one_b.push_back(Scalar::of_int(fp, mod_floor(r.one_coords()[block[s]], p)));
    std::vector<std::string> names;
    for (int s = 0; s < bn; ++s) names.push_back(r.names()[block[s]]);
    Algebra sp(fp, std::move(names), std::move(table), std::move(one_b));
    Subspace jbar = radical(sp);

    // lift the F_p basis and add p R_p
    for (int i = 0; i < jbar.dim(); ++i) {
      IntVec w(n, 0);
      for (int s = 0; s < bn; ++s) {
        Int c = numerator(jbar.basis().at(i, s).value());
        w[block[s]] = mod_floor(ep * c, r.moduli()[block[s]]);
      }
      gens.push_back(std::move(w));
    }
    for (int s = 0; s < bn; ++s) {
      IntVec w(n, 0);
      w[block[s]] = mod_floor(p * ep, r.moduli()[block[s]]);
      if (w[block[s]] != 0) gens.push_back(std::move(w));
    }
  }

  ResidueModule j = ResidueModule::howell(gens, r.moduli());
  // re-verify: nilpotent two-sided ideal
  for (const IntVec& row : j.rows()) {
    if (!is_nilpotent_element(r, row))
      throw RadicalUndecided("finite-ring radical candidate is not nil");
    for (int b = 0; b < n; ++b) {
      if (!j.contains_vector(r.mul_coords(row, r.generator(b).coords())) ||
          !j.contains_vector(r.mul_coords(r.generator(b).coords(), row)))
        throw RadicalUndecided("finite-ring radical candidate is not an ideal");
    }
  }
  return j;
}

// ---------------------------------------------------------------------------
// annihilators / socles
// ---------------------------------------------------------------------------

Subspace left_annihilator(const Algebra& a, const Subspace& s) {
  const int n = a.dim();
  if (s.is_zero()) return Subspace::full(a.field(), n);
  Matrix g(a.field(), n, n * s.dim());
  for (int src = 0; src < n; ++src) {
    ScalarVec b = a.basis_element(src).coords();
    for (int rI = 0; rI < s.dim(); ++rI) {
      ScalarVec prod = a.mul_coords(b, s.basis_row(rI));
      for (int k = 0; k < n; ++k) g.at(src, rI * n + k) = prod[k];
    }
  }
  return echelonize(left_kernel(g));
}

ResidueModule left_annihilator(const FiniteRing& r, const ResidueModule& s) {
  const int n = r.generator_count();
  if (s.is_zero()) return ResidueModule::full(r.moduli());
  IntMat f(n, IntVec(static_cast<std::size_t>(n) * s.row_count(), 0));
  IntVec dst;
  for (int rI = 0; rI < s.row_count(); ++rI)
    for (int k = 0; k < n; ++k) dst.push_back(r.moduli()[k]);
  for (int src = 0; src < n; ++src) {
    IntVec b = r.generator(src).coords();
    for (int rI = 0; rI < s.row_count(); ++rI) {
      IntVec prod = r.mul_coords(b, s.rows()[rI]);
      for (int k = 0; k < n; ++k)
        f[src][static_cast<std::size_t>(rI) * n + k] = prod[k];
    }
  }
  return kernel_mod(f, r.moduli(), dst);
}

Subspace socle_right(const Algebra& a, const Subspace& rad) {
  return left_annihilator(a, rad);
}

ResidueModule socle_right(const FiniteRing& r, const ResidueModule& rad) {
  return left_annihilator(r, rad);
}

Subspace socle_central(const Algebra& a, const Subspace& c, const Subspace& rad) {
  return left_annihilator(a, intersect(c, rad));
}

ResidueModule socle_central(const FiniteRing& r, const ResidueModule& c,
                            const ResidueModule& rad) {
  return left_annihilator(r, intersect(c, rad));
}

// ---------------------------------------------------------------------------
// flags
// ---------------------------------------------------------------------------

bool quotient_commutative(const Algebra& a, const Subspace& rad) {
  for (int i = 0; i < a.dim(); ++i)
    for (int j = i + 1; j < a.dim(); ++j) {
      ScalarVec c =
          sub(a.mul_coords(a.basis_element(i).coords(), a.basis_element(j).coords()),
              a.mul_coords(a.basis_element(j).coords(), a.basis_element(i).coords()));
      if (!rad.contains_vector(c)) return false;
    }
  return true;
}

bool quotient_commutative(const FiniteRing& r, const ResidueModule& rad) {
  for (int i = 0; i < r.generator_count(); ++i)
    for (int j = i + 1; j < r.generator_count(); ++j) {
      IntVec ij = r.mul_coords(r.generator(i).coords(), r.generator(j).coords());
      IntVec ji = r.mul_coords(r.generator(j).coords(), r.generator(i).coords());
      IntVec c(ij.size());
      for (std::size_t k = 0; k < c.size(); ++k)
        c[k] = mod_floor(ij[k] - ji[k], r.moduli()[k]);
      if (!rad.contains_vector(c)) return false;
    }
  return true;
}

bool is_nilpotent_element(const Algebra& a, const ScalarVec& x) {
  ScalarVec power = x;
  for (int i = 0; i <= a.dim(); ++i) {
    if (cering::is_zero(power)) return true;
    power = a.mul_coords(power, x);
  }
  return false;
}

bool is_nilpotent_element(const FiniteRing& r, const IntVec& x) {
  // composition length of the additive group bounds the nilpotency index
  long bound = 1;
  for (const Int& m : r.moduli()) {
    Int v = m;
    while (v > 1) {
      v /= 2;
      ++bound;
    }
  }
  IntVec power = x;
  auto zero = [](const IntVec& v) {
    return std::all_of(v.begin(), v.end(), [](const Int& c) { return c == 0; });
  };
  for (long i = 0; i <= bound; ++i) {
    if (zero(power)) return true;
    power = r.mul_coords(power, x);
  }
  return false;
}

namespace {

/// Minimal polynomial of x (monic, as the coefficient list c_0..c_d with
/// c_d = 1).
ScalarVec minimal_polynomial(const Algebra& a, const ScalarVec& x) {
  const FieldSpec& f = a.field();
  std::vector<ScalarVec> powers;
  ScalarVec cur = a.one_coords();
  for (int d = 0;; ++d) {
    Matrix pmat = powers.empty() ? Matrix(f, 0, a.dim())
                                 : Matrix::from_rows(f, powers);
    auto combo = solve_linear(pmat.transpose(), cur);
    if (combo.has_value()) {
      ScalarVec mu;
      for (const Scalar& c : *combo) mu.push_back(-c);
      mu.push_back(Scalar::one(f));
      return mu;  // X^d - sum c_t X^t
    }
    powers.push_back(cur);
    cur = a.mul_coords(cur, x);
    if (d > a.dim()) throw std::logic_error("minimal_polynomial: no dependence");
  }
}

Scalar eval_poly(const ScalarVec& mu, const Scalar& lambda) {
  Scalar acc = Scalar::zero(lambda.field());
  for (int i = static_cast<int>(mu.size()) - 1; i >= 0; --i)
    acc = acc * lambda + mu[static_cast<std::size_t>(i)];
  return acc;
}

/// All positive divisors, or nullopt if the number is too hard to factor.
std::optional<std::vector<Int>> divisors_of(Int m) {
  if (m < 0) m = -m;
  if (m == 0) return std::nullopt;
  std::map<Int, int> fac;
  Int rest = m;
  for (Int p = 2; p * p <= rest && p < (1 << 16); ++p)
    while (rest % p == 0) {
      ++fac[p];
      rest /= p;
    }
  if (rest > 1) {
    if (!is_probable_prime(rest)) return std::nullopt;
    ++fac[rest];
  }
  std::vector<Int> divs = {1};
  for (const auto& [p, e] : fac) {
    std::vector<Int> next;
    Int pk = 1;
    for (int i = 0; i <= e; ++i) {
      for (const Int& d : divs) next.push_back(d * pk);
      pk *= p;
    }
    divs = std::move(next);
  }
  return divs;
}

bool singular_left_mult(const Algebra& a, const ScalarVec& x) {
  Matrix m(a.field(), a.dim(), a.dim());
  for (int i = 0; i < a.dim(); ++i)
    m.set_row(i, a.mul_coords(x, a.basis_element(i).coords()));
  return rref(m).rank < a.dim();
}

/// Does the minimal polynomial of some basis element have a root in the
/// ground field while the element is not scalar? Then x - lambda is a zero
/// divisor of the (semisimple) quotient.
bool find_root_zero_divisor(const Algebra& q) {
  const FieldSpec& f = q.field();
  for (int i = 0; i < q.dim(); ++i) {
    ScalarVec mu = minimal_polynomial(q, q.basis_element(i).coords());
    const int deg = static_cast<int>(mu.size()) - 1;
    if (deg <= 1) continue;
    if (f.is_prime_field()) {
      if (f.prime() > 1000) continue;
      long p = static_cast<long>(f.prime());
      for (long lam = 0; lam < p; ++lam)
        if (eval_poly(mu, Scalar::of_int(f, lam)).is_zero()) return true;
    } else {
      // integer-clear and try the classical rational root candidates
      Int den_lcm = 1;
      for (const Scalar& c : mu)
        den_lcm = boost::multiprecision::lcm(den_lcm, denominator(c.value()));
      std::vector<Int> ic;
      for (const Scalar& c : mu)
        ic.push_back(numerator(c.value() * Rational(den_lcm)));
      if (ic.front() == 0) return true;  // root 0 with deg > 1
      auto dn = divisors_of(ic.front());
      auto dl = divisors_of(ic.back());
      if (!dn || !dl) continue;
      for (const Int& num : *dn)
        for (const Int& den : *dl)
          for (int sign : {1, -1}) {
            Scalar lam(f, Rational(sign * num) / Rational(den));
            if (eval_poly(mu, lam).is_zero()) return true;
          }
    }
  }
  return false;
}

}  // namespace

Tri is_local(const Algebra& a, const Subspace& rad, std::uint64_t scan_bound) {
  if (a.dim() - rad.dim() == 1) return Tri::yes;
  Algebra q = quotient_by_ideal(a, rad).algebra;

  // zero-divisor candidates: basis elements and pairwise sums/differences
  std::vector<ScalarVec> candidates;
  for (int i = 0; i < q.dim(); ++i) candidates.push_back(q.basis_element(i).coords());
  for (int i = 0; i < q.dim(); ++i)
    for (int j = i + 1; j < q.dim(); ++j) {
      candidates.push_back(add(q.basis_element(i).coords(), q.basis_element(j).coords()));
      candidates.push_back(sub(q.basis_element(i).coords(), q.basis_element(j).coords()));
    }
  for (const ScalarVec& x : candidates)
    if (!cering::is_zero(x) && singular_left_mult(q, x)) return Tri::no;

  if (is_commutative(q) && find_root_zero_divisor(q)) return Tri::no;

  if (q.field().is_prime_field()) {
    // exhaustive check of the quotient when it is small enough
    Int size = 1;
    bool fits = true;
    for (int i = 0; i < q.dim() && fits; ++i) {
      size *= q.field().prime();
      if (size > scan_bound || size > 4096) fits = false;
    }
    if (fits) {
      FiniteRing rq = as_finite_ring(q);
      bool all_units = true;
      for_each_element(rq, 4096, [&](const IntVec& v) {
        if (!all_units) return;
        bool zero = std::all_of(v.begin(), v.end(),
                                [](const Int& c) { return c == 0; });
        if (zero) return;
        ScalarVec x;
        for (const Int& c : v) x.push_back(Scalar::of_int(q.field(), c));
        if (singular_left_mult(q, x)) all_units = false;
      });
      return all_units ? Tri::yes : Tri::no;
    }
  }
  return Tri::unknown;
}

Tri is_local(const FiniteRing& r, const ResidueModule& rad,
             std::uint64_t scan_bound) {
  const int n = r.generator_count();
  // fast no: a generator pair multiplying into the radical while staying
  // outside it exhibits a zero divisor of R/J
  std::vector<int> outside;
  for (int i = 0; i < n; ++i)
    if (!rad.contains_vector(r.generator(i).coords())) outside.push_back(i);
  for (int i : outside)
    for (int j : outside)
      if (rad.contains_vector(
              r.mul_coords(r.generator(i).coords(), r.generator(j).coords())))
        return Tri::no;

  // fast yes: quotient of prime order is the prime field
  Int quotient_size = r.ring_order() / rad.element_count();
  if (is_probable_prime(quotient_size)) return Tri::yes;

  if (r.ring_order() <= scan_bound) {
    bool local = true;
    for_each_element(r, scan_bound, [&](const IntVec& v) {
      if (!local) return;
      if (rad.contains_vector(v)) return;
      // x outside J must be a unit: solve x y = 1
      IntMat f(n, IntVec(n, 0));
      for (int j = 0; j < n; ++j) {
        IntVec prod = r.mul_coords(v, r.generator(j).coords());
        for (int k = 0; k < n; ++k) f[j][k] = prod[k];
      }
      if (!solve_mod(f, r.moduli(), r.moduli(), r.one_coords()).has_value())
        local = false;
    });
    return local ? Tri::yes : Tri::no;
  }
  return Tri::unknown;
}

AlgebraInvariants compute_invariants(const Algebra& a, std::uint64_t scan_bound) {
  Subspace c = center(a);
  Subspace j = radical(a);
  Subspace cj = intersect(c, j);
  AlgebraInvariants inv{c,
                        j,
                        cj,
                        left_annihilator(a, j),
                        left_annihilator(a, cj),
                        quotient_commutative(a, j),
                        j.is_zero(),
                        Tri::unknown};
  inv.local = is_local(a, j, scan_bound);
  return inv;
}

RingInvariants compute_invariants(const FiniteRing& r, std::uint64_t scan_bound) {
  ResidueModule c = center(r);
  ResidueModule j = radical(r);
  ResidueModule cj = intersect(c, j);
  RingInvariants inv{c,
                     j,
                     cj,
                     left_annihilator(r, j),
                     left_annihilator(r, cj),
                     quotient_commutative(r, j),
                     j.is_zero(),
                     Tri::unknown};
  inv.local = is_local(r, j, scan_bound);
  return inv;
}

}  // namespace cering
