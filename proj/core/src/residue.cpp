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

#include "cering/residue.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace cering {

namespace {

int first_nonzero(const IntVec& v) {
  for (std::size_t j = 0; j < v.size(); ++j)
    if (v[j] != 0) return static_cast<int>(j);
  return -1;
}

void mod_row(IntVec& v, const Int& L) {
  for (Int& x : v) x = mod_floor(x, L);
}

/// A unit u mod L with u * d == gcd(d, L) (mod L), for d in [1, L).
Int unit_scale(const Int& d, const Int& g, const Int& L) {
  Int dg = d / g;
  Int Lg = L / g;
  if (Lg == 1) return 1;
  Int u = invert_mod(dg, Lg);
  if (u == 0) u = Lg;  // keep u nonzero when Lg small
  Int guard = g + 1;
  while (boost::multiprecision::gcd(u, L) != 1) {
    u += Lg;
    if (--guard < 0)
      throw std::logic_error("unit_scale: failed to lift to a unit");
  }
  return mod_floor(u, L);
}

Int lcm_of(const IntVec& moduli) {
  Int l = 1;
  for (const Int& m : moduli) {
    if (m <= 0)
      throw std::invalid_argument("ResidueModule: moduli must be positive");
    l = boost::multiprecision::lcm(l, m);
  }
  return l;
}

}  // namespace

HowellForm howell_mod(IntMat rows, const Int& modulus, int cols) {
  if (modulus <= 0) throw std::invalid_argument("howell_mod: modulus <= 0");
  HowellForm h;
  h.modulus = modulus;
  h.cols = cols;
  if (modulus == 1) return h;  // the zero module

  std::deque<IntVec> pending;
  for (IntVec& r : rows) {
    if (static_cast<int>(r.size()) != cols)
      throw std::invalid_argument("howell_mod: ragged rows");
    mod_row(r, modulus);
    if (first_nonzero(r) >= 0) pending.push_back(std::move(r));
  }

  for (int c = 0; c < cols; ++c) {
    // Collect the pending rows whose leading entry sits at column c.
    std::vector<IntVec> bucket;
    std::deque<IntVec> rest;
    for (IntVec& r : pending) {
      int fz = first_nonzero(r);
      if (fz == c)
        bucket.push_back(std::move(r));
      else if (fz > c)
        rest.push_back(std::move(r));
      // fz < c cannot happen: earlier columns were fully processed
    }
    pending = std::move(rest);
    if (bucket.empty()) continue;

    IntVec piv = std::move(bucket[0]);
    for (std::size_t t = 1; t < bucket.size(); ++t) {
      IntVec& r = bucket[t];
      ExtendedGcd e = extended_gcd(piv[c], r[c]);
      Int ap = piv[c] / e.g, bp = r[c] / e.g;
      IntVec merged(cols, 0), elim(cols, 0);
      for (int j = c; j < cols; ++j) {
        merged[j] = mod_floor(e.x * piv[j] + e.y * r[j], modulus);
        elim[j] = mod_floor(bp * piv[j] - ap * r[j], modulus);
      }
      piv = std::move(merged);
      if (first_nonzero(elim) >= 0) pending.push_back(std::move(elim));
    }

    Int g = boost::multiprecision::gcd(piv[c], modulus);
    Int u = unit_scale(piv[c], g, modulus);
    if (u != 1)
      for (int j = c; j < cols; ++j) piv[j] = mod_floor(u * piv[j], modulus);
    // piv[c] is now exactly g.

    Int ann = modulus / g;
    if (ann != 1) {
      IntVec extra(cols, 0);
      for (int j = c + 1; j < cols; ++j)
        extra[j] = mod_floor(ann * piv[j], modulus);
      if (first_nonzero(extra) >= 0) pending.push_back(std::move(extra));
    }

    h.pivot_cols.push_back(c);
    h.pivot_vals.push_back(g);
    h.rows.push_back(std::move(piv));
  }

  // Reduce entries above each pivot into [0, pivot).
  for (std::size_t i = 0; i < h.rows.size(); ++i) {
    int c = h.pivot_cols[i];
    const Int& d = h.pivot_vals[i];
    for (std::size_t k = 0; k < i; ++k) {
      Int q = h.rows[k][c] / d;
      if (q == 0) continue;
      for (int j = c; j < h.cols; ++j)
        h.rows[k][j] = mod_floor(h.rows[k][j] - q * h.rows[i][j], modulus);
    }
  }
  return h;
}

IntVec howell_reduce(const HowellForm& h, IntVec v) {
  if (static_cast<int>(v.size()) != h.cols)
    throw std::invalid_argument("howell_reduce: wrong length");
  if (h.modulus == 1) return IntVec(v.size(), 0);
  mod_row(v, h.modulus);
  for (std::size_t i = 0; i < h.rows.size(); ++i) {
    int c = h.pivot_cols[i];
    if (v[c] == 0) continue;
    Int q = v[c] / h.pivot_vals[i];
    if (q == 0) continue;
    for (int j = c; j < h.cols; ++j)
      v[j] = mod_floor(v[j] - q * h.rows[i][j], h.modulus);
  }
  return v;
}

ResidueModule::ResidueModule(IntVec moduli, IntMat rows, HowellForm scaled)
    : moduli_(std::move(moduli)),
      rows_(std::move(rows)),
      scaled_(std::move(scaled)) {
  lcm_ = lcm_of(moduli_);
  scale_.reserve(moduli_.size());
  for (const Int& m : moduli_) scale_.push_back(lcm_ / m);
}

ResidueModule ResidueModule::howell(const IntMat& gens, const IntVec& moduli) {
  Int L = lcm_of(moduli);
  const int n = static_cast<int>(moduli.size());
  IntMat scaled;
  scaled.reserve(gens.size());
  for (const IntVec& g : gens) {
    if (static_cast<int>(g.size()) != n)
      throw std::invalid_argument("ResidueModule::howell: ragged generators");
    IntVec s(n);
    for (int j = 0; j < n; ++j)
      s[j] = mod_floor(mod_floor(g[j], moduli[j]) * (L / moduli[j]), L);
    scaled.push_back(std::move(s));
  }
  HowellForm h = howell_mod(std::move(scaled), L, n);
  IntMat decoded;
  decoded.reserve(h.rows.size());
  for (const IntVec& r : h.rows) {
    IntVec d(n);
    for (int j = 0; j < n; ++j) {
      Int sj = L / moduli[j];
      if (r[j] % sj != 0)
        throw std::logic_error("ResidueModule: scaled row not decodable");
      d[j] = r[j] / sj;
    }
    decoded.push_back(std::move(d));
  }
  return ResidueModule(moduli, std::move(decoded), std::move(h));
}

ResidueModule ResidueModule::zero(const IntVec& moduli) {
  return howell(IntMat{}, moduli);
}

ResidueModule ResidueModule::full(const IntVec& moduli) {
  IntMat gens;
  const int n = static_cast<int>(moduli.size());
  for (int j = 0; j < n; ++j) {
    IntVec e(n, 0);
    e[j] = 1;
    gens.push_back(std::move(e));
  }
  return howell(gens, moduli);
}

Int ResidueModule::element_count() const {
  Int c = 1;
  for (const Int& d : scaled_.pivot_vals) c *= lcm_ / d;
  return c;
}

IntVec ResidueModule::reduce(const IntVec& v) const {
  const int n = ambient();
  if (static_cast<int>(v.size()) != n)
    throw std::invalid_argument("ResidueModule::reduce: wrong length");
  IntVec s(n);
  for (int j = 0; j < n; ++j)
    s[j] = mod_floor(mod_floor(v[j], moduli_[j]) * scale_[j], lcm_);
  IntVec r = howell_reduce(scaled_, std::move(s));
  IntVec d(n);
  for (int j = 0; j < n; ++j) {
    if (r[j] % scale_[j] != 0)
      throw std::logic_error("ResidueModule::reduce: residual not decodable");
    d[j] = r[j] / scale_[j];
  }
  return d;
}

bool ResidueModule::contains_vector(const IntVec& v) const {
  IntVec r = reduce(v);
  return std::all_of(r.begin(), r.end(), [](const Int& x) { return x == 0; });
}

std::optional<IntMat> ResidueModule::elements(std::uint64_t limit) const {
  Int total = element_count();
  if (total > limit) return std::nullopt;
  const int n = ambient();
  const int k = row_count();
  std::vector<std::uint64_t> radix(k);
  for (int i = 0; i < k; ++i)
    radix[i] = static_cast<std::uint64_t>(lcm_ / scaled_.pivot_vals[i]);
  IntMat out;
  out.reserve(static_cast<std::size_t>(total));
  std::vector<std::uint64_t> counter(k, 0);
  while (true) {
    IntVec v(n, 0);
    for (int i = 0; i < k; ++i) {
      if (counter[i] == 0) continue;
      for (int j = 0; j < n; ++j)
        v[j] = mod_floor(v[j] + Int(counter[i]) * rows_[i][j], moduli_[j]);
    }
    out.push_back(std::move(v));
    int pos = k - 1;
    while (pos >= 0) {
      if (++counter[pos] < radix[pos]) break;
      counter[pos] = 0;
      --pos;
    }
    if (pos < 0) break;
    if (k == 0) break;
  }
  return out;
}

ResidueModule intersect(const ResidueModule& u, const ResidueModule& v) {
  if (u.moduli_ != v.moduli_)
    throw std::invalid_argument("intersect: moduli mismatch");
  const int n = u.ambient();
  const Int& L = u.lcm_;
  // Zassenhaus over (Z/L)^{2n} on the scaled bases.
  IntMat big;
  for (const IntVec& r : u.scaled_.rows) {
    IntVec row(2 * n, 0);
    for (int j = 0; j < n; ++j) {
      row[j] = r[j];
      row[n + j] = r[j];
    }
    big.push_back(std::move(row));
  }
  for (const IntVec& r : v.scaled_.rows) {
    IntVec row(2 * n, 0);
    for (int j = 0; j < n; ++j) row[j] = r[j];
    big.push_back(std::move(row));
  }
  HowellForm h = howell_mod(std::move(big), L, 2 * n);
  IntMat gens;
  for (std::size_t i = 0; i < h.rows.size(); ++i) {
    if (h.pivot_cols[i] < n) continue;  // left half nonzero
    IntVec g(n);
    for (int j = 0; j < n; ++j) {
      if (h.rows[i][n + j] % u.scale_[j] != 0)
        throw std::logic_error("intersect: row not decodable");
      g[j] = h.rows[i][n + j] / u.scale_[j];
    }
    gens.push_back(std::move(g));
  }
  return ResidueModule::howell(gens, u.moduli_);
}

ResidueModule module_sum(const ResidueModule& u, const ResidueModule& v) {
  if (u.moduli_ != v.moduli_)
    throw std::invalid_argument("module_sum: moduli mismatch");
  IntMat gens = u.rows_;
  gens.insert(gens.end(), v.rows_.begin(), v.rows_.end());
  return ResidueModule::howell(gens, u.moduli_);
}

bool contains(const ResidueModule& u, const ResidueModule& v) {
  if (u.moduli_ != v.moduli_)
    throw std::invalid_argument("contains: moduli mismatch");
  for (const IntVec& r : v.rows_)
    if (!u.contains_vector(r)) return false;
  return true;
}

namespace {

void check_well_defined(const IntMat& f, const IntVec& src_moduli,
                        const IntVec& dst_moduli) {
  for (std::size_t j = 0; j < f.size(); ++j) {
    if (f[j].size() != dst_moduli.size())
      throw std::invalid_argument("kernel/solve: matrix width mismatch");
    for (std::size_t k = 0; k < dst_moduli.size(); ++k)
      if (mod_floor(src_moduli[j] * f[j][k], dst_moduli[k]) != 0)
        throw std::invalid_argument(
            "kernel/solve: map not well defined on the source moduli");
  }
}

struct GraphForm {
  Int L;
  int dst_n, src_n;
  HowellForm h;
  IntVec dst_scale, src_scale;
};

/// Howell form of the graph {(x F, x)} inside (Z/L)^{dst+src}.
GraphForm graph_form(const IntMat& f, const IntVec& src_moduli,
                     const IntVec& dst_moduli) {
  if (f.size() != src_moduli.size())
    throw std::invalid_argument("kernel/solve: row count != source rank");
  check_well_defined(f, src_moduli, dst_moduli);
  GraphForm g;
  g.dst_n = static_cast<int>(dst_moduli.size());
  g.src_n = static_cast<int>(src_moduli.size());
  IntVec all = dst_moduli;
  all.insert(all.end(), src_moduli.begin(), src_moduli.end());
  g.L = lcm_of(all);
  for (const Int& m : dst_moduli) g.dst_scale.push_back(g.L / m);
  for (const Int& m : src_moduli) g.src_scale.push_back(g.L / m);
  IntMat rows;
  for (int j = 0; j < g.src_n; ++j) {
    IntVec row(g.dst_n + g.src_n, 0);
    for (int k = 0; k < g.dst_n; ++k)
      row[k] = mod_floor(mod_floor(f[j][k], dst_moduli[k]) * g.dst_scale[k], g.L);
    row[g.dst_n + j] = mod_floor(g.src_scale[j], g.L);
    rows.push_back(std::move(row));
  }
  g.h = howell_mod(std::move(rows), g.L, g.dst_n + g.src_n);
  return g;
}

}  // namespace

ResidueModule kernel_mod(const IntMat& f, const IntVec& src_moduli,
                         const IntVec& dst_moduli) {
  GraphForm g = graph_form(f, src_moduli, dst_moduli);
  IntMat gens;
  for (std::size_t i = 0; i < g.h.rows.size(); ++i) {
    if (g.h.pivot_cols[i] < g.dst_n) continue;
    IntVec x(g.src_n);
    for (int j = 0; j < g.src_n; ++j) {
      const Int& w = g.h.rows[i][g.dst_n + j];
      if (w % g.src_scale[j] != 0)
        throw std::logic_error("kernel_mod: row not decodable");
      x[j] = w / g.src_scale[j];
    }
    gens.push_back(std::move(x));
  }
  return ResidueModule::howell(gens, src_moduli);
}

std::optional<IntVec> solve_mod(const IntMat& f, const IntVec& src_moduli,
                                const IntVec& dst_moduli, const IntVec& b) {
  if (b.size() != dst_moduli.size())
    throw std::invalid_argument("solve_mod: rhs length mismatch");
  GraphForm g = graph_form(f, src_moduli, dst_moduli);
  IntVec w(g.dst_n + g.src_n, 0);
  for (int k = 0; k < g.dst_n; ++k)
    w[k] = mod_floor(mod_floor(b[k], dst_moduli[k]) * g.dst_scale[k], g.L);
  w = howell_reduce(g.h, std::move(w));
  for (int k = 0; k < g.dst_n; ++k)
    if (w[k] != 0) return std::nullopt;
  IntVec x(g.src_n);
  for (int j = 0; j < g.src_n; ++j) {
    const Int& r = w[g.dst_n + j];
    if (r % g.src_scale[j] != 0)
      throw std::logic_error("solve_mod: residual not decodable");
    x[j] = mod_floor(-(r / g.src_scale[j]), src_moduli[j]);
  }
  return x;
}

}  // namespace cering
