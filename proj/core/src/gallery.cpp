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

#include "cering/gallery.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace cering {

std::vector<Violation> FiniteGroupTable::validate() const {
  std::vector<Violation> out;
  const int n = order;
  if (static_cast<int>(table.size()) != n)
    return {{"well-defined", {-1, -1, -1}, "table size != order"}};
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(table[i].size()) != n)
      return {{"well-defined", {i, -1, -1}, "row size != order"}};
    for (int j = 0; j < n; ++j)
      if (table[i][j] < 0 || table[i][j] >= n)
        return {{"well-defined", {i, j, -1}, "entry out of range"}};
  }
  for (int i = 0; i < n; ++i) {
    if (table[identity][i] != i || table[i][identity] != i)
      out.push_back({"identity", {i, -1, -1}, "identity law fails"});
    bool has_inverse = false;
    for (int j = 0; j < n; ++j)
      if (table[i][j] == identity && table[j][i] == identity) has_inverse = true;
    if (!has_inverse)
      out.push_back({"identity", {i, -1, -1}, "no two-sided inverse"});
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (table[table[i][j]][k] != table[i][table[j][k]])
          out.push_back({"associativity", {i, j, k}, "group triple fails"});
  return out;
}

FiniteGroupTable quaternion_group() {
  // symbols 0:1, 1:i, 2:j, 3:k; element index = 2*symbol + (negative ? 1 : 0)
  static const int sym[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int sgn[4][4] = {{+1, +1, +1, +1},
                                {+1, -1, +1, -1},
                                {+1, -1, -1, +1},
                                {+1, +1, -1, -1}};
  // sgn[a][b] and sym[a][b] encode (symbol a)*(symbol b): i*i = -1, i*j = k,
  // i*k = -j, j*i = -k, j*k = i, k*i = j, k*j = -i, k*k = -1.
  FiniteGroupTable g;
  g.order = 8;
  g.identity = 0;
  g.names = {"1", "-1", "i", "-i", "j", "-j", "k", "-k"};
  g.table.assign(8, std::vector<int>(8, 0));
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      int sa = a / 2, sb = b / 2;
      int negative = (a % 2) ^ (b % 2) ^ (sgn[sa][sb] < 0 ? 1 : 0);
      g.table[a][b] = 2 * sym[sa][sb] + negative;
    }
  return g;
}

FiniteGroupTable cyclic_group(int n) {
  if (n <= 0) throw std::invalid_argument("cyclic_group: order must be positive");
  FiniteGroupTable g;
  g.order = n;
  g.identity = 0;
  for (int i = 0; i < n; ++i) g.names.push_back("g" + std::to_string(i));
  g.names[0] = "1";
  g.table.assign(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g.table[i][j] = (i + j) % n;
  return g;
}

Algebra group_algebra(const FiniteGroupTable& g, const FieldSpec& field) {
  std::vector<MulTerm> table;
  for (int i = 0; i < g.order; ++i)
    for (int j = 0; j < g.order; ++j)
      table.push_back({i, j, g.table[i][j], Scalar::one(field)});
  ScalarVec one = zero_vector(field, g.order);
  one[g.identity] = Scalar::one(field);
  return Algebra(field, g.names, std::move(table), std::move(one));
}

namespace {

std::vector<int> mask_bits(unsigned mask) {
  std::vector<int> bits;
  for (int b = 0; mask >> b; ++b)
    if ((mask >> b) & 1u) bits.push_back(b);
  return bits;
}

std::string wedge_name(unsigned mask) {
  if (mask == 0) return "1";
  std::string s = "e";
  for (int b : mask_bits(mask)) s += std::to_string(b + 1);
  return s;
}

/// Parity of merging two disjoint increasing index sets: the number of pairs
/// (s, t) with s in S, t in T, s > t.
int merge_inversions(unsigned s, unsigned t) {
  int inv = 0;
  for (int sb : mask_bits(s))
    for (int tb : mask_bits(t))
      if (sb > tb) ++inv;
  return inv;
}

}  // namespace

Algebra grassmann(int n, const FieldSpec& field) {
  if (n < 1 || n > 20) throw std::invalid_argument("grassmann: n out of range");
  std::vector<unsigned> order;
  for (int deg = 0; deg <= n; ++deg) {
    std::vector<unsigned> level;
    for (unsigned m = 0; m < (1u << n); ++m)
      if (static_cast<int>(__builtin_popcount(m)) == deg) level.push_back(m);
    std::sort(level.begin(), level.end(), [](unsigned a, unsigned b) {
      return mask_bits(a) < mask_bits(b);  // lexicographic on index tuples
    });
    if (n == 3 && deg == 2) level = {0b011, 0b110, 0b101};  // e12, e23, e13
    order.insert(order.end(), level.begin(), level.end());
  }
  std::vector<int> index(1u << n, -1);
  for (std::size_t i = 0; i < order.size(); ++i) index[order[i]] = static_cast<int>(i);

  const int dim = 1 << n;
  std::vector<std::string> names;
  for (unsigned m : order) names.push_back(wedge_name(m));
  std::vector<MulTerm> table;
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) {
      unsigned s = order[i], t = order[j];
      if (s & t) continue;  // repeated generator
      int sign = merge_inversions(s, t) % 2;
      Scalar c = sign ? -Scalar::one(field) : Scalar::one(field);
      table.push_back({i, j, index[s | t], c});
    }
  ScalarVec one = zero_vector(field, dim);
  one[0] = Scalar::one(field);
  return Algebra(field, std::move(names), std::move(table), std::move(one));
}

Algebra rank3_algebra(Rank3Kind kind, const Rational& k) {
  const FieldSpec q = FieldSpec::rationals();
  const Scalar one = Scalar::one(q);
  auto ident = [&](int dim) {
    ScalarVec v = zero_vector(q, dim);
    v[0] = one;
    return v;
  };
  auto id_products = [&](int dim, std::vector<MulTerm>& t) {
    for (int i = 0; i < dim; ++i) {
      t.push_back({0, i, i, one});
      if (i) t.push_back({i, 0, i, one});
    }
  };
  switch (kind) {
    case Rank3Kind::K: {
      std::vector<MulTerm> t;
      id_products(2, t);
      return Algebra(q, {"1", "e13"}, std::move(t), ident(2));
    }
    case Rank3Kind::R: {
      std::vector<MulTerm> t;
      id_products(3, t);
      return Algebra(q, {"1", "e12", "e13"}, std::move(t), ident(3));
    }
    case Rank3Kind::S: {
      if (k == 0) throw std::invalid_argument("rank3_algebra: S needs k != 0");
      std::vector<MulTerm> t;
      id_products(3, t);
      // u = E12 + k E23, u^2 = k E13
      t.push_back({1, 1, 2, Scalar(q, k)});
      return Algebra(q, {"1", "u", "e13"}, std::move(t), ident(3));
    }
    case Rank3Kind::T: {
      std::vector<MulTerm> t;
      id_products(4, t);
      t.push_back({1, 3, 2, one});  // E12 * E23 = E13
      return Algebra(q, {"1", "e12", "e13", "e23"}, std::move(t), ident(4));
    }
  }
  throw std::logic_error("rank3_algebra: unreachable");
}

Int FiniteAbelianGroup::order() const {
  Int o = 1;
  for (const Summand& s : summands) {
    Int pk = 1;
    for (int i = 0; i < s.k; ++i) pk *= s.p;
    o *= pk;
  }
  return o;
}

bool FiniteAbelianGroup::all_components_cyclic() const {
  for (std::size_t i = 0; i < summands.size(); ++i)
    for (std::size_t j = i + 1; j < summands.size(); ++j)
      if (summands[i].p == summands[j].p) return false;
  return true;
}

std::string FiniteAbelianGroup::str() const {
  std::string s;
  for (std::size_t i = 0; i < summands.size(); ++i) {
    if (i) s += "+";
    Int pk = 1;
    for (int t = 0; t < summands[i].k; ++t) pk *= summands[i].p;
    s += "Z" + pk.str();
  }
  return s.empty() ? "0" : s;
}

FiniteAbelianGroup parse_group_spec(const std::string& spec) {
  FiniteAbelianGroup g;
  std::size_t pos = 0;
  while (pos < spec.size()) {
    std::size_t comma = spec.find(',', pos);
    std::string part = spec.substr(pos, comma == std::string::npos ? std::string::npos
                                                                   : comma - pos);
    std::size_t colon = part.find(':');
    if (colon == std::string::npos)
      throw std::invalid_argument("group spec: expected p:k, got '" + part + "'");
    Int p;
    int k;
    try {
      p = Int(part.substr(0, colon));
      k = std::stoi(part.substr(colon + 1));
    } catch (const std::exception&) {
      throw std::invalid_argument("group spec: bad part '" + part + "'");
    }
    if (!is_probable_prime(p))
      throw std::invalid_argument("group spec: " + p.str() + " is not prime");
    if (k < 1) throw std::invalid_argument("group spec: exponent must be >= 1");
    g.summands.push_back({p, k});
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (g.summands.empty())
    throw std::invalid_argument("group spec: empty");
  return g;
}

namespace {

Int int_pow(const Int& p, int e) {
  Int r = 1;
  for (int i = 0; i < e; ++i) r *= p;
  return r;
}

}  // namespace

int endomorphism_generator_index(const FiniteAbelianGroup& a, int i, int j) {
  int idx = 0;
  const int r = static_cast<int>(a.summands.size());
  for (int s = 0; s < r; ++s)
    for (int t = 0; t < r; ++t) {
      if (a.summands[s].p != a.summands[t].p) continue;
      if (s == i && t == j) return idx;
      ++idx;
    }
  return -1;
}

FiniteRing endomorphism_ring(const FiniteAbelianGroup& a,
                             std::uint64_t group_order_bound) {
  if (a.summands.empty())
    throw std::invalid_argument("endomorphism_ring: empty group");
  Int order = a.order();
  if (order > group_order_bound)
    throw BoundExceeded(
        "endomorphism_ring: group order " + order.str() + " exceeds bound",
        order);
  const int r = static_cast<int>(a.summands.size());
  // generators: pairs (i, j) with matching primes, h_ij : summand j -> i
  std::vector<std::pair<int, int>> gens;
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      if (a.summands[i].p == a.summands[j].p) gens.emplace_back(i, j);
  auto gen_index = [&](int i, int j) {
    for (std::size_t t = 0; t < gens.size(); ++t)
      if (gens[t].first == i && gens[t].second == j) return static_cast<int>(t);
    return -1;
  };

  IntVec moduli;
  std::vector<std::string> names;
  for (auto [i, j] : gens) {
    moduli.push_back(int_pow(a.summands[i].p, std::min(a.summands[i].k, a.summands[j].k)));
    names.push_back("a" + std::to_string(i) + std::to_string(j));
  }

  std::vector<RingMulTerm> table;
  for (std::size_t u = 0; u < gens.size(); ++u)
    for (std::size_t v = 0; v < gens.size(); ++v) {
      auto [i, j] = gens[u];
      auto [l, m] = gens[v];
      if (j != l) continue;               // maps do not compose
      if (a.summands[i].p != a.summands[m].p) continue;
      int ki = a.summands[i].k, kj = a.summands[j].k, km = a.summands[m].k;
      // h_ij . h_jm = p^e h_im with e from the divisibility factors
      int e = std::max(kj - km, 0) + std::max(ki - kj, 0) - std::max(ki - km, 0);
      int target = gen_index(i, m);
      table.push_back({static_cast<int>(u), static_cast<int>(v), target,
                       int_pow(a.summands[i].p, e)});
    }

  IntVec one(gens.size(), 0);
  for (int i = 0; i < r; ++i) one[gen_index(i, i)] = 1;
  return FiniteRing(std::move(moduli), std::move(names), std::move(table),
                    std::move(one));
}

namespace {

std::vector<std::vector<int>> partitions_of(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int rest, int max_part) {
    if (rest == 0) {
      out.push_back(cur);
      return;
    }
    for (int part = std::min(rest, max_part); part >= 1; --part) {
      cur.push_back(part);
      rec(rest - part, part);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

}  // namespace

std::vector<FiniteAbelianGroup> abelian_groups_up_to(long max_order) {
  std::vector<FiniteAbelianGroup> out;
  for (long n = 2; n <= max_order; ++n) {
    // factor n
    std::vector<std::pair<long, int>> factors;
    long m = n;
    for (long p = 2; p * p <= m; ++p)
      if (m % p == 0) {
        int e = 0;
        while (m % p == 0) {
          m /= p;
          ++e;
        }
        factors.emplace_back(p, e);
      }
    if (m > 1) factors.emplace_back(m, 1);

    std::vector<std::vector<std::vector<int>>> choices;
    for (auto [p, e] : factors) choices.push_back(partitions_of(e));
    std::vector<std::size_t> pick(choices.size(), 0);
    while (true) {
      FiniteAbelianGroup g;
      for (std::size_t f = 0; f < factors.size(); ++f)
        for (int part : choices[f][pick[f]])
          g.summands.push_back({Int(factors[f].first), part});
      out.push_back(std::move(g));
      int pos = static_cast<int>(choices.size()) - 1;
      while (pos >= 0) {
        if (++pick[pos] < choices[pos].size()) break;
        pick[pos] = 0;
        --pos;
      }
      if (pos < 0) break;
    }
  }
  return out;
}

IntPoly2::IntPoly2(Int constant) {
  if (constant != 0) coeffs_[{0, 0}] = std::move(constant);
}

IntPoly2 IntPoly2::monomial(int deg_x, int deg_y, Int coeff) {
  IntPoly2 p;
  if (deg_x < 0 || deg_y < 0)
    throw std::invalid_argument("IntPoly2: negative degree");
  if (coeff != 0) p.coeffs_[{deg_x, deg_y}] = std::move(coeff);
  return p;
}

bool IntPoly2::is_constant() const {
  return coeffs_.empty() ||
         (coeffs_.size() == 1 && coeffs_.begin()->first == std::pair<int, int>{0, 0});
}

void IntPoly2::prune() {
  for (auto it = coeffs_.begin(); it != coeffs_.end();)
    it = (it->second == 0) ? coeffs_.erase(it) : std::next(it);
}

IntPoly2 IntPoly2::operator+(const IntPoly2& o) const {
  IntPoly2 r = *this;
  for (const auto& [m, c] : o.coeffs_) r.coeffs_[m] += c;
  r.prune();
  return r;
}

IntPoly2 IntPoly2::operator-(const IntPoly2& o) const {
  IntPoly2 r = *this;
  for (const auto& [m, c] : o.coeffs_) r.coeffs_[m] -= c;
  r.prune();
  return r;
}

IntPoly2 IntPoly2::operator*(const IntPoly2& o) const {
  IntPoly2 r;
  for (const auto& [m1, c1] : coeffs_)
    for (const auto& [m2, c2] : o.coeffs_)
      r.coeffs_[{m1.first + m2.first, m1.second + m2.second}] += c1 * c2;
  r.prune();
  return r;
}

IntPoly2 IntPoly2::dx() const {
  IntPoly2 r;
  for (const auto& [m, c] : coeffs_)
    if (m.first > 0) r.coeffs_[{m.first - 1, m.second}] = c * m.first;
  r.prune();
  return r;
}

IntPoly2 IntPoly2::dy() const {
  IntPoly2 r;
  for (const auto& [m, c] : coeffs_)
    if (m.second > 0) r.coeffs_[{m.first, m.second - 1}] = c * m.second;
  r.prune();
  return r;
}

std::string IntPoly2::str() const {
  if (coeffs_.empty()) return "0";
  std::string s;
  for (const auto& [m, c] : coeffs_) {
    if (!s.empty() && c > 0) s += "+";
    bool unit = (c == 1 || c == -1) && (m.first || m.second);
    if (c == -1 && unit)
      s += "-";
    else if (!unit)
      s += c.str();
    if (m.first) s += "x" + (m.first > 1 ? "^" + std::to_string(m.first) : "");
    if (m.second) s += "y" + (m.second > 1 ? "^" + std::to_string(m.second) : "");
  }
  return s;
}

DerivationRingElement derivation_ring_mul(const DerivationRingElement& a,
                                          const DerivationRingElement& b) {
  // Matrix product of the displayed upper triangular shape: the diagonal
  // multiplies, the derivative entries follow by the Leibniz rule, and the
  // corner picks up the d1 x d2 cross term.
  return {a.f * b.f, a.f * b.g + a.f.dx() * b.f.dy() + a.g * b.f};
}

DerivationRingElement derivation_ring_add(const DerivationRingElement& a,
                                          const DerivationRingElement& b) {
  return {a.f + b.f, a.g + b.g};
}

DerivationRingElement derivation_ring_sub(const DerivationRingElement& a,
                                          const DerivationRingElement& b) {
  return {a.f - b.f, a.g - b.g};
}

DerivationRingElement derivation_ring_e13() { return {IntPoly2(), IntPoly2(Int(1))}; }

namespace {

IntPoly2 random_poly(std::mt19937_64& eng, int deg_bound, int coeff_bound) {
  std::uniform_int_distribution<int> coeff(-coeff_bound, coeff_bound);
  IntPoly2 p;
  for (int dx = 0; dx <= deg_bound; ++dx)
    for (int dy = 0; dy + dx <= deg_bound; ++dy) {
      int c = coeff(eng);
      if (c) p = p + IntPoly2::monomial(dx, dy, Int(c));
    }
  return p;
}

bool commutes_with(const DerivationRingElement& x,
                   const DerivationRingElement& probe) {
  DerivationRingElement lhs = derivation_ring_mul(x, probe);
  DerivationRingElement rhs = derivation_ring_mul(probe, x);
  return lhs == rhs;
}

}  // namespace

DerivationSampleReport derivation_ring_ce_sample(int trials, int deg_bound,
                                                 int coeff_bound,
                                                 std::uint64_t seed) {
  DerivationSampleReport rep;
  rep.trials = trials;
  rep.seed = seed;
  std::mt19937_64 eng(seed);
  DerivationRingElement ex{IntPoly2::var_x(), IntPoly2()};
  DerivationRingElement ey{IntPoly2::var_y(), IntPoly2()};
  DerivationRingElement e13 = derivation_ring_e13();
  for (int t = 0; t < trials; ++t) {
    DerivationRingElement a{random_poly(eng, deg_bound, coeff_bound),
                            random_poly(eng, deg_bound, coeff_bound)};
    std::vector<DerivationRingElement> probes = {
        ex,
        ey,
        {random_poly(eng, deg_bound, coeff_bound),
         random_poly(eng, deg_bound, coeff_bound)},
        {random_poly(eng, deg_bound, coeff_bound),
         random_poly(eng, deg_bound, coeff_bound)}};
    bool ok;
    if (a.f.is_zero()) {
      // zero diagonal: a lies in the corner ideal and must be central
      ok = true;
      for (const auto& pr : probes) ok = ok && commutes_with(a, pr);
    } else {
      DerivationRingElement y = derivation_ring_mul(a, e13);
      ok = !y.is_zero();
      for (const auto& pr : probes) ok = ok && commutes_with(y, pr);
      ok = ok && (y.f.is_zero());  // lands in the corner ideal
    }
    if (!ok) ++rep.failures;
  }
  return rep;
}

std::vector<GalleryInstance> standard_instances() {
  std::vector<GalleryInstance> out;
  const FieldSpec q = FieldSpec::rationals();
  const FieldSpec f2 = FieldSpec::prime_field(2);
  const FieldSpec f3 = FieldSpec::prime_field(3);

  out.push_back({"rank3-K", rank3_algebra(Rank3Kind::K)});
  out.push_back({"rank3-R", rank3_algebra(Rank3Kind::R)});
  out.push_back({"rank3-S(1)", rank3_algebra(Rank3Kind::S, Rational(1))});
  out.push_back({"rank3-S(-2)", rank3_algebra(Rank3Kind::S, Rational(-2))});
  out.push_back({"rank3-S(7/3)", rank3_algebra(Rank3Kind::S, Rational(7) / Rational(3))});
  out.push_back({"rank3-T", rank3_algebra(Rank3Kind::T)});

  for (int n = 1; n <= 5; ++n)
    out.push_back({"grassmann-Q-" + std::to_string(n), grassmann(n, q)});
  for (int n = 1; n <= 4; ++n)
    out.push_back({"grassmann-F3-" + std::to_string(n), grassmann(n, f3)});

  out.push_back({"group-algebra-F2[Q8]", group_algebra(quaternion_group(), f2)});
  out.push_back({"group-algebra-Q[Q8]", group_algebra(quaternion_group(), q)});
  out.push_back({"group-algebra-F2[C2]", group_algebra(cyclic_group(2), f2)});
  out.push_back({"group-algebra-Q[C2]", group_algebra(cyclic_group(2), q)});
  out.push_back({"group-algebra-F3[C3]", group_algebra(cyclic_group(3), f3)});

  auto endring = [](const std::string& spec) {
    return endomorphism_ring(parse_group_spec(spec));
  };
  out.push_back({"endring-2:1,2:1", endring("2:1,2:1")});  // Mat2(F2)
  out.push_back({"endring-2:1,2:2", endring("2:1,2:2")});
  out.push_back({"endring-2:2", endring("2:2")});
  out.push_back({"endring-3:2", endring("3:2")});
  out.push_back({"endring-2:1,3:1", endring("2:1,3:1")});
  out.push_back({"endring-2:1,2:1,2:1", endring("2:1,2:1,2:1")});
  out.push_back({"endring-3:1,3:1", endring("3:1,3:1")});
  return out;
}

}  // namespace cering
