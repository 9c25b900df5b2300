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

#include "cering/algebra.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace cering {

namespace {

void require_same_parent(const Element& a, const Element& b) {
  if (a.parent_ptr() != b.parent_ptr())
    throw std::invalid_argument("Element: operands belong to different algebras");
}

void require_same_parent(const RingElement& a, const RingElement& b) {
  if (a.parent_ptr() != b.parent_ptr())
    throw std::invalid_argument("RingElement: operands belong to different rings");
}

std::string coords_str(const ScalarVec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v[i].str();
  }
  return s + ")";
}

}  // namespace

Algebra::Algebra(FieldSpec field, std::vector<std::string> basis_names,
                 std::vector<MulTerm> table, ScalarVec one)
    : field_(std::move(field)),
      dim_(static_cast<int>(basis_names.size())),
      names_(std::move(basis_names)),
      one_(std::move(one)) {
  if (dim_ <= 0) throw std::invalid_argument("Algebra: dimension must be positive");
  if (static_cast<int>(one_.size()) != dim_)
    throw std::invalid_argument("Algebra: identity coordinate length != dim");
  for (const Scalar& c : one_)
    if (c.field() != field_)
      throw std::invalid_argument("Algebra: identity coordinates in wrong field");
  products_.assign(static_cast<std::size_t>(dim_) * dim_, {});
  std::map<std::array<int, 3>, Scalar> merged;
  for (const MulTerm& t : table) {
    if (t.i < 0 || t.i >= dim_ || t.j < 0 || t.j >= dim_ || t.k < 0 || t.k >= dim_)
      throw std::invalid_argument("Algebra: structure constant index out of range");
    if (t.c.field() != field_)
      throw std::invalid_argument("Algebra: structure constant in wrong field");
    auto key = std::array<int, 3>{t.i, t.j, t.k};
    auto it = merged.find(key);
    if (it == merged.end())
      merged.emplace(key, t.c);
    else
      it->second = it->second + t.c;
  }
  for (const auto& [key, c] : merged) {
    if (c.is_zero()) continue;
    products_[static_cast<std::size_t>(key[0]) * dim_ + key[1]].emplace_back(key[2], c);
  }
}

const std::vector<std::pair<int, Scalar>>& Algebra::product_terms(int i, int j) const {
  return products_[static_cast<std::size_t>(i) * dim_ + j];
}

std::vector<MulTerm> Algebra::table() const {
  std::vector<MulTerm> out;
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j)
      for (const auto& [k, c] : product_terms(i, j)) out.push_back({i, j, k, c});
  return out;
}

ScalarVec Algebra::mul_coords(const ScalarVec& x, const ScalarVec& y) const {
  if (static_cast<int>(x.size()) != dim_ || static_cast<int>(y.size()) != dim_)
    throw std::invalid_argument("Algebra::mul_coords: wrong coordinate length");
  ScalarVec r = zero_vector(field_, dim_);
  for (int i = 0; i < dim_; ++i) {
    if (x[i].is_zero()) continue;
    for (int j = 0; j < dim_; ++j) {
      if (y[j].is_zero()) continue;
      Scalar xy = x[i] * y[j];
      for (const auto& [k, c] : product_terms(i, j)) r[k] = r[k] + xy * c;
    }
  }
  return r;
}

Element Algebra::element(ScalarVec coords) const {
  if (static_cast<int>(coords.size()) != dim_)
    throw std::invalid_argument("Algebra::element: wrong coordinate length");
  for (const Scalar& c : coords)
    if (c.field() != field_)
      throw std::invalid_argument("Algebra::element: wrong field");
  return Element(this, std::move(coords));
}

Element Algebra::zero_element() const { return Element(this, zero_vector(field_, dim_)); }
Element Algebra::one_element() const { return Element(this, one_); }

Element Algebra::basis_element(int i) const {
  ScalarVec v = zero_vector(field_, dim_);
  v[static_cast<std::size_t>(i)] = Scalar::one(field_);
  return Element(this, std::move(v));
}

std::vector<Violation> Algebra::validate() const {
  std::vector<Violation> out;
  for (int i = 0; i < dim_; ++i) {
    ScalarVec bi = basis_element(i).coords();
    ScalarVec lhs = mul_coords(one_, bi);
    ScalarVec rhs = mul_coords(bi, one_);
    if (lhs != bi)
      out.push_back({"identity", {i, -1, -1},
                     "1*b" + std::to_string(i) + " = " + coords_str(lhs)});
    if (rhs != bi)
      out.push_back({"identity", {i, -1, -1},
                     "b" + std::to_string(i) + "*1 = " + coords_str(rhs)});
  }
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) {
      ScalarVec ij = mul_coords(basis_element(i).coords(), basis_element(j).coords());
      for (int k = 0; k < dim_; ++k) {
        ScalarVec lhs = mul_coords(ij, basis_element(k).coords());
        ScalarVec jk = mul_coords(basis_element(j).coords(), basis_element(k).coords());
        ScalarVec rhs = mul_coords(basis_element(i).coords(), jk);
        if (lhs != rhs)
          out.push_back({"associativity",
                         {i, j, k},
                         "(bi*bj)*bk = " + coords_str(lhs) +
                             " but bi*(bj*bk) = " + coords_str(rhs)});
      }
    }
  return out;
}

bool Algebra::operator==(const Algebra& o) const {
  return field_ == o.field_ && dim_ == o.dim_ && names_ == o.names_ &&
         one_ == o.one_ && products_ == o.products_;
}

Element mul(const Element& a, const Element& b) {
  require_same_parent(a, b);
  return Element(a.parent_ptr(), a.parent().mul_coords(a.coords(), b.coords()));
}

Element add(const Element& a, const Element& b) {
  require_same_parent(a, b);
  return Element(a.parent_ptr(), cering::add(a.coords(), b.coords()));
}

Element sub(const Element& a, const Element& b) {
  require_same_parent(a, b);
  return Element(a.parent_ptr(), cering::sub(a.coords(), b.coords()));
}

Element neg(const Element& a) {
  return Element(a.parent_ptr(),
                 scale(-Scalar::one(a.parent().field()), a.coords()));
}

Element scalar_mul(const Scalar& c, const Element& a) {
  return Element(a.parent_ptr(), scale(c, a.coords()));
}

Element commutator(const Element& a, const Element& b) {
  return sub(mul(a, b), mul(b, a));
}

bool is_commutative(const Algebra& a) {
  for (int i = 0; i < a.dim(); ++i)
    for (int j = i + 1; j < a.dim(); ++j) {
      ScalarVec ij = a.mul_coords(a.basis_element(i).coords(), a.basis_element(j).coords());
      ScalarVec ji = a.mul_coords(a.basis_element(j).coords(), a.basis_element(i).coords());
      if (ij != ji) return false;
    }
  return true;
}

Matrix regular_representation(const Algebra& a, const Element& x) {
  if (x.parent_ptr() != &a)
    throw std::invalid_argument("regular_representation: element of a different algebra");
  Matrix m(a.field(), a.dim(), a.dim());
  for (int i = 0; i < a.dim(); ++i) {
    ScalarVec row = a.mul_coords(x.coords(), a.basis_element(i).coords());
    m.set_row(i, row);
  }
  return m;
}

namespace {

Subspace ideal_closure(const Algebra& a, const Subspace& s, bool right) {
  if (s.ambient_dim() != a.dim() || s.field() != a.field())
    throw std::invalid_argument("ideal_closure: subspace not in the algebra's space");
  Subspace cur = s;
  while (true) {
    std::vector<ScalarVec> rows;
    for (int i = 0; i < cur.dim(); ++i) rows.push_back(cur.basis_row(i));
    for (int i = 0; i < cur.dim(); ++i)
      for (int j = 0; j < a.dim(); ++j) {
        ScalarVec prod =
            right ? a.mul_coords(cur.basis_row(i), a.basis_element(j).coords())
                  : a.mul_coords(a.basis_element(j).coords(), cur.basis_row(i));
        rows.push_back(std::move(prod));
      }
    Subspace next = Subspace::span(a.field(), a.dim(), rows);
    if (next == cur) return next;
    cur = next;
  }
}

}  // namespace

Subspace right_ideal_closure(const Algebra& a, const Subspace& s) {
  return ideal_closure(a, s, true);
}

Subspace left_ideal_closure(const Algebra& a, const Subspace& s) {
  return ideal_closure(a, s, false);
}

Algebra change_basis(const Algebra& a, const Matrix& p) {
  if (p.rows() != a.dim() || p.cols() != a.dim())
    throw std::invalid_argument("change_basis: matrix shape mismatch");
  auto pinv = inverse(p);
  if (!pinv) throw std::invalid_argument("change_basis: singular basis matrix");
  std::vector<MulTerm> table;
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j) {
      ScalarVec prod = a.mul_coords(p.row(i), p.row(j));
      ScalarVec in_new = mul_row(prod, *pinv);  // coords w.r.t. rows of p
      for (int k = 0; k < a.dim(); ++k)
        if (!in_new[k].is_zero()) table.push_back({i, j, k, in_new[k]});
    }
  ScalarVec one_new = mul_row(a.one_coords(), *pinv);
  std::vector<std::string> names;
  for (int i = 0; i < a.dim(); ++i) names.push_back("c" + std::to_string(i));
  return Algebra(a.field(), std::move(names), std::move(table), std::move(one_new));
}

ScalarVec QuotientAlgebra::project(const ScalarVec& x) const {
  ScalarVec residual = ideal.reduce(x);
  ScalarVec out;
  out.reserve(rep_cols.size());
  for (int c : rep_cols) out.push_back(residual[c]);
  return out;
}

QuotientAlgebra quotient_by_ideal(const Algebra& a, const Subspace& ideal) {
  if (ideal.ambient_dim() != a.dim() || ideal.field() != a.field())
    throw std::invalid_argument("quotient_by_ideal: ideal not in the algebra");
  std::vector<bool> is_pivot(a.dim(), false);
  for (int i = 0; i < ideal.dim(); ++i) {
    int pc = -1;
    for (int j = 0; j < a.dim(); ++j)
      if (!ideal.basis().at(i, j).is_zero()) {
        pc = j;
        break;
      }
    is_pivot[pc] = true;
  }
  std::vector<int> reps;
  for (int j = 0; j < a.dim(); ++j)
    if (!is_pivot[j]) reps.push_back(j);
  const int q = static_cast<int>(reps.size());
  if (q == 0)
    throw std::invalid_argument("quotient_by_ideal: ideal is the whole algebra");

  auto project = [&](const ScalarVec& x) {
    ScalarVec residual = ideal.reduce(x);
    ScalarVec v;
    v.reserve(q);
    for (int c : reps) v.push_back(residual[c]);
    return v;
  };

  std::vector<MulTerm> table;
  for (int s = 0; s < q; ++s)
    for (int t = 0; t < q; ++t) {
      ScalarVec prod = a.mul_coords(a.basis_element(reps[s]).coords(),
                                    a.basis_element(reps[t]).coords());
      ScalarVec v = project(prod);
      for (int k = 0; k < q; ++k)
        if (!v[k].is_zero()) table.push_back({s, t, k, v[k]});
    }
  std::vector<std::string> names;
  for (int s = 0; s < q; ++s) names.push_back(a.basis_names()[reps[s]] + "+I");
  ScalarVec one_q = project(a.one_coords());
  Algebra quotient(a.field(), std::move(names), std::move(table), std::move(one_q));
  return QuotientAlgebra{std::move(quotient), ideal, std::move(reps)};
}

FiniteRing::FiniteRing(IntVec moduli, std::vector<std::string> names,
                       std::vector<RingMulTerm> table, IntVec one)
    : moduli_(std::move(moduli)),
      n_(static_cast<int>(moduli_.size())),
      names_(std::move(names)),
      one_(std::move(one)) {
  if (n_ <= 0) throw std::invalid_argument("FiniteRing: needs at least one generator");
  for (const Int& m : moduli_)
    if (m <= 0) throw std::invalid_argument("FiniteRing: moduli must be positive");
  if (names_.empty())
    for (int i = 0; i < n_; ++i) names_.push_back("g" + std::to_string(i));
  if (static_cast<int>(names_.size()) != n_)
    throw std::invalid_argument("FiniteRing: name count != generator count");
  if (static_cast<int>(one_.size()) != n_)
    throw std::invalid_argument("FiniteRing: identity coordinate length mismatch");
  for (int i = 0; i < n_; ++i) one_[i] = mod_floor(one_[i], moduli_[i]);
  products_.assign(static_cast<std::size_t>(n_) * n_, {});
  std::map<std::array<int, 3>, Int> merged;
  for (const RingMulTerm& t : table) {
    if (t.i < 0 || t.i >= n_ || t.j < 0 || t.j >= n_ || t.k < 0 || t.k >= n_)
      throw std::invalid_argument("FiniteRing: structure constant index out of range");
    merged[{t.i, t.j, t.k}] += t.t;
  }
  for (const auto& [key, t] : merged) {
    Int r = mod_floor(t, moduli_[key[2]]);
    if (r == 0) continue;
    products_[static_cast<std::size_t>(key[0]) * n_ + key[1]].emplace_back(key[2], r);
  }
}

const std::vector<std::pair<int, Int>>& FiniteRing::product_terms(int i, int j) const {
  return products_[static_cast<std::size_t>(i) * n_ + j];
}

std::vector<RingMulTerm> FiniteRing::table() const {
  std::vector<RingMulTerm> out;
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      for (const auto& [k, t] : product_terms(i, j)) out.push_back({i, j, k, t});
  return out;
}

Int FiniteRing::ring_order() const {
  Int o = 1;
  for (const Int& m : moduli_) o *= m;
  return o;
}

IntVec FiniteRing::reduce_coords(IntVec x) const {
  for (int i = 0; i < n_; ++i) x[i] = mod_floor(x[i], moduli_[i]);
  return x;
}

IntVec FiniteRing::mul_coords(const IntVec& x, const IntVec& y) const {
  if (static_cast<int>(x.size()) != n_ || static_cast<int>(y.size()) != n_)
    throw std::invalid_argument("FiniteRing::mul_coords: wrong coordinate length");
  IntVec r(n_, 0);
  for (int i = 0; i < n_; ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < n_; ++j) {
      if (y[j] == 0) continue;
      Int xy = x[i] * y[j];
      for (const auto& [k, t] : product_terms(i, j))
        r[k] = mod_floor(r[k] + xy * t, moduli_[k]);
    }
  }
  return r;
}

RingElement FiniteRing::element(IntVec coords) const {
  if (static_cast<int>(coords.size()) != n_)
    throw std::invalid_argument("FiniteRing::element: wrong coordinate length");
  return RingElement(this, reduce_coords(std::move(coords)));
}

RingElement FiniteRing::zero_element() const { return RingElement(this, IntVec(n_, 0)); }
RingElement FiniteRing::one_element() const { return RingElement(this, one_); }

RingElement FiniteRing::generator(int i) const {
  IntVec v(n_, 0);
  v[static_cast<std::size_t>(i)] = 1;
  return RingElement(this, std::move(v));
}

std::vector<Violation> FiniteRing::validate() const {
  std::vector<Violation> out;
  // The table must respect the additive orders: m_i g_i = 0 forces
  // m_i (g_i g_j) = 0 and m_j (g_i g_j) = 0.
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      for (const auto& [k, t] : product_terms(i, j)) {
        if (mod_floor(moduli_[i] * t, moduli_[k]) != 0 ||
            mod_floor(moduli_[j] * t, moduli_[k]) != 0)
          out.push_back({"well-defined",
                         {i, j, k},
                         "t=" + t.str() + " incompatible with generator orders"});
      }
  if (!out.empty()) return out;  // products below would be meaningless

  auto gen = [&](int i) {
    IntVec v(n_, 0);
    v[i] = 1;
    return v;
  };
  for (int i = 0; i < n_; ++i) {
    IntVec lhs = mul_coords(one_, gen(i));
    IntVec rhs = mul_coords(gen(i), one_);
    if (lhs != gen(i))
      out.push_back({"identity", {i, -1, -1}, "1*g" + std::to_string(i) + " != g"});
    if (rhs != gen(i))
      out.push_back({"identity", {i, -1, -1}, "g" + std::to_string(i) + "*1 != g"});
  }
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) {
      IntVec ij = mul_coords(gen(i), gen(j));
      for (int k = 0; k < n_; ++k) {
        IntVec lhs = mul_coords(ij, gen(k));
        IntVec rhs = mul_coords(gen(i), mul_coords(gen(j), gen(k)));
        if (lhs != rhs)
          out.push_back({"associativity", {i, j, k}, "generator triple fails"});
      }
    }
  return out;
}

bool FiniteRing::operator==(const FiniteRing& o) const {
  return moduli_ == o.moduli_ && names_ == o.names_ && one_ == o.one_ &&
         products_ == o.products_;
}

RingElement mul(const RingElement& a, const RingElement& b) {
  require_same_parent(a, b);
  return RingElement(a.parent_ptr(), a.parent().mul_coords(a.coords(), b.coords()));
}

RingElement add(const RingElement& a, const RingElement& b) {
  require_same_parent(a, b);
  IntVec r(a.coords().size());
  for (std::size_t i = 0; i < r.size(); ++i)
    r[i] = mod_floor(a.coords()[i] + b.coords()[i], a.parent().moduli()[i]);
  return RingElement(a.parent_ptr(), std::move(r));
}

RingElement sub(const RingElement& a, const RingElement& b) {
  require_same_parent(a, b);
  IntVec r(a.coords().size());
  for (std::size_t i = 0; i < r.size(); ++i)
    r[i] = mod_floor(a.coords()[i] - b.coords()[i], a.parent().moduli()[i]);
  return RingElement(a.parent_ptr(), std::move(r));
}

RingElement commutator(const RingElement& a, const RingElement& b) {
  return sub(mul(a, b), mul(b, a));
}

bool is_commutative(const FiniteRing& r) {
  for (int i = 0; i < r.generator_count(); ++i)
    for (int j = i + 1; j < r.generator_count(); ++j) {
      IntVec ij = r.mul_coords(r.generator(i).coords(), r.generator(j).coords());
      IntVec ji = r.mul_coords(r.generator(j).coords(), r.generator(i).coords());
      if (ij != ji) return false;
    }
  return true;
}

IntVec element_by_index(const FiniteRing& r, std::uint64_t index) {
  const int n = r.generator_count();
  IntVec v(n, 0);
  for (int i = n - 1; i >= 0; --i) {
    std::uint64_t m = static_cast<std::uint64_t>(r.moduli()[i]);
    v[i] = Int(index % m);
    index /= m;
  }
  return v;
}

std::uint64_t index_of_element(const FiniteRing& r, const IntVec& coords) {
  std::uint64_t idx = 0;
  for (int i = 0; i < r.generator_count(); ++i) {
    idx *= static_cast<std::uint64_t>(r.moduli()[i]);
    idx += static_cast<std::uint64_t>(coords[i]);
  }
  return idx;
}

void for_each_element(const FiniteRing& r, std::uint64_t bound,
                      const std::function<void(const IntVec&)>& fn) {
  Int order = r.ring_order();
  if (order > bound)
    throw BoundExceeded("enumeration bound exceeded: ring has " + order.str() +
                            " elements",
                        order);
  for_each_element_in_range(r, 0, static_cast<std::uint64_t>(order), fn);
}

void for_each_element_in_range(const FiniteRing& r, std::uint64_t from,
                               std::uint64_t to,
                               const std::function<void(const IntVec&)>& fn) {
  if (from >= to) return;
  IntVec v = element_by_index(r, from);
  const int n = r.generator_count();
  for (std::uint64_t idx = from; idx < to; ++idx) {
    fn(v);
    // lexicographic odometer, last coordinate fastest
    for (int i = n - 1; i >= 0; --i) {
      v[i] += 1;
      if (v[i] < r.moduli()[i]) break;
      v[i] = 0;
    }
  }
}

FiniteRing as_finite_ring(const Algebra& a) {
  if (!a.field().is_prime_field())
    throw std::invalid_argument("as_finite_ring: algebra is not over a prime field");
  const Int& p = a.field().prime();
  IntVec moduli(a.dim(), p);
  std::vector<RingMulTerm> table;
  for (const MulTerm& t : a.table())
    table.push_back({t.i, t.j, t.k, numerator(t.c.value())});
  IntVec one;
  for (const Scalar& c : a.one_coords()) one.push_back(numerator(c.value()));
  return FiniteRing(std::move(moduli), a.basis_names(), std::move(table), std::move(one));
}

Algebra as_fp_algebra(const FiniteRing& r) {
  const Int& p = r.moduli()[0];
  for (const Int& m : r.moduli())
    if (m != p)
      throw std::invalid_argument("as_fp_algebra: moduli are not one single prime");
  FieldSpec f = FieldSpec::prime_field(p);
  std::vector<MulTerm> table;
  for (const RingMulTerm& t : r.table())
    table.push_back({t.i, t.j, t.k, Scalar::of_int(f, t.t)});
  ScalarVec one;
  for (const Int& c : r.one_coords()) one.push_back(Scalar::of_int(f, c));
  return Algebra(f, r.names(), std::move(table), std::move(one));
}

}  // namespace cering
