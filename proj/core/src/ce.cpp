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

#include "cering/ce.hpp"

#include <algorithm>
#include <atomic>
#include <thread>
#include <unordered_set>

namespace cering {

std::string ce_decision_str(CEDecision d) {
  switch (d) {
    case CEDecision::yes:
      return "true";
    case CEDecision::no:
      return "false";
    default:
      return "undecided";
  }
}

std::string ce_method_str(CEMethod m) {
  switch (m) {
    case CEMethod::subspace:
      return "subspace_criterion";
    case CEMethod::exhaustive:
      return "exhaustive";
    case CEMethod::both:
      return "both";
    default:
      return "none";
  }
}

InvariantSummary summarize(const Algebra& a, const AlgebraInvariants& inv) {
  InvariantSummary s;
  s.finite = false;
  s.ambient = a.dim();
  auto ms = [](const Subspace& sp) { return ModuleSummary{sp.dim(), ""}; };
  s.center = ms(inv.center);
  s.radical = ms(inv.radical);
  s.center_radical = ms(inv.center_radical);
  s.socle_right = ms(inv.socle_right);
  s.socle_central = ms(inv.socle_central);
  s.commutative = is_commutative(a);
  s.quotient_commutative = inv.quotient_commutative;
  s.semiprime = inv.semiprime;
  s.local = inv.local;
  if (a.field().is_prime_field()) {
    Int order = 1;
    for (int i = 0; i < a.dim(); ++i) order *= a.field().prime();
    s.ring_order = order.str();
  }
  return s;
}

InvariantSummary summarize(const FiniteRing& r, const RingInvariants& inv) {
  InvariantSummary s;
  s.finite = true;
  s.ambient = r.generator_count();
  s.ring_order = r.ring_order().str();
  auto ms = [](const ResidueModule& m) {
    return ModuleSummary{m.row_count(), m.element_count().str()};
  };
  s.center = ms(inv.center);
  s.radical = ms(inv.radical);
  s.center_radical = ms(inv.center_radical);
  s.socle_right = ms(inv.socle_right);
  s.socle_central = ms(inv.socle_central);
  s.commutative = is_commutative(r);
  s.quotient_commutative = inv.quotient_commutative;
  s.semiprime = inv.semiprime;
  s.local = inv.local;
  return s;
}

namespace {

Tri to_tri(bool b) { return b ? Tri::yes : Tri::no; }

template <typename RingT, typename InvT>
LocalRingCriteria fill_criteria(const RingT& ring, const InvT& inv) {
  LocalRingCriteria c;
  c.quotient_commutative = to_tri(inv.quotient_commutative);
  c.socles_equal = to_tri(inv.socle_right == inv.socle_central);
  c.socle_in_center = to_tri(contains(inv.center, inv.socle_central));
  if (inv.quotient_commutative) {
    // with R/J commutative, every minimal right ideal meeting the center
    // lies inside it, so the condition collapses to Soc(R_R) <= C
    c.min_ideals_meet_center = to_tri(contains(inv.center, inv.socle_right));
  } else {
    c.min_ideals_meet_center = Tri::unknown;
    c.note = "not decided: R/J(R) is noncommutative";
  }
  return c;
}

std::vector<std::string> coord_strings(const ScalarVec& v) {
  std::vector<std::string> out;
  for (const Scalar& c : v) out.push_back(c.str());
  return out;
}

std::vector<std::string> coord_strings(const IntVec& v) {
  std::vector<std::string> out;
  for (const Int& c : v) out.push_back(c.str());
  return out;
}

/// A witness for "not centrally essential" from the subspace data: an
/// element of a simple C-submodule outside C. Basis rows of Soc(R_C) that
/// avoid C are tried; a valid witness a has aC intersect C = 0.
std::optional<ScalarVec> subspace_witness(const Algebra& a,
                                          const AlgebraInvariants& inv) {
  for (int i = 0; i < inv.socle_central.dim(); ++i) {
    ScalarVec cand = inv.socle_central.basis_row(i);
    if (inv.center.contains_vector(cand)) continue;
    std::vector<ScalarVec> ac;
    for (int j = 0; j < inv.center.dim(); ++j)
      ac.push_back(a.mul_coords(cand, inv.center.basis_row(j)));
    Subspace acs = Subspace::span(a.field(), a.dim(), ac);
    if (intersect(acs, inv.center).is_zero()) return cand;
  }
  return std::nullopt;
}

std::optional<IntVec> subspace_witness(const FiniteRing& r,
                                       const RingInvariants& inv) {
  for (const IntVec& cand : inv.socle_central.rows()) {
    if (inv.center.contains_vector(cand)) continue;
    IntMat ac;
    for (const IntVec& c : inv.center.rows())
      ac.push_back(r.mul_coords(cand, c));
    ResidueModule acs = ResidueModule::howell(ac, r.moduli());
    if (intersect(acs, inv.center).is_zero()) return cand;
  }
  return std::nullopt;
}

}  // namespace

CEReport is_ce_subspace(const Algebra& a, std::uint64_t scan_bound) {
  CEReport rep;
  rep.method = CEMethod::subspace;
  try {
    AlgebraInvariants inv = compute_invariants(a, scan_bound);
    rep.invariants = summarize(a, inv);
    rep.criteria = fill_criteria(a, inv);
    bool ce = contains(inv.center, inv.socle_central);
    rep.decision = ce ? CEDecision::yes : CEDecision::no;
    if (!ce) {
      auto w = subspace_witness(a, inv);
      if (w) rep.witness_failure = coord_strings(*w);
    }
  } catch (const RadicalUndecided& e) {
    rep.decision = CEDecision::undecided;
    rep.undecided_reason = e.what();
  }
  return rep;
}

CEReport is_ce_subspace(const FiniteRing& r, std::uint64_t scan_bound) {
  CEReport rep;
  rep.method = CEMethod::subspace;
  try {
    RingInvariants inv = compute_invariants(r, scan_bound);
    rep.invariants = summarize(r, inv);
    rep.criteria = fill_criteria(r, inv);
    bool ce = contains(inv.center, inv.socle_central);
    rep.decision = ce ? CEDecision::yes : CEDecision::no;
    if (!ce) {
      auto w = subspace_witness(r, inv);
      if (w) rep.witness_failure = coord_strings(*w);
    }
  } catch (const RadicalUndecided& e) {
    rep.decision = CEDecision::undecided;
    rep.undecided_reason = e.what();
  }
  return rep;
}

// ---------------------------------------------------------------------------
// exhaustive decision
// ---------------------------------------------------------------------------

namespace {

struct FastRing {
  int n = 0;
  std::vector<long> moduli;
  std::vector<std::vector<std::pair<int, long>>> products;
  std::vector<long> one;

  const std::vector<std::pair<int, long>>& terms(int i, int j) const {
    return products[static_cast<std::size_t>(i) * n + j];
  }
};

FastRing fast_ring(const FiniteRing& r) {
  FastRing f;
  f.n = r.generator_count();
  f.moduli.reserve(f.n);
  for (const Int& m : r.moduli()) f.moduli.push_back(static_cast<long>(m));
  f.products.assign(static_cast<std::size_t>(f.n) * f.n, {});
  for (const RingMulTerm& t : r.table())
    f.products[static_cast<std::size_t>(t.i) * f.n + t.j].emplace_back(
        t.k, static_cast<long>(t.t));
  for (const Int& c : r.one_coords()) f.one.push_back(static_cast<long>(c));
  return f;
}

void fast_mul(const FastRing& f, const std::vector<long>& x,
              const std::vector<long>& y, std::vector<long>& out) {
  std::fill(out.begin(), out.end(), 0L);
  for (int i = 0; i < f.n; ++i) {
    if (!x[i]) continue;
    for (int j = 0; j < f.n; ++j) {
      if (!y[j]) continue;
      long xy = x[i] * y[j];
      for (const auto& [k, t] : f.terms(i, j))
        out[k] = (out[k] + (xy % f.moduli[k]) * t) % f.moduli[k];
    }
  }
}

std::uint64_t fast_index(const FastRing& f, const std::vector<long>& v) {
  std::uint64_t idx = 0;
  for (int i = 0; i < f.n; ++i)
    idx = idx * static_cast<std::uint64_t>(f.moduli[i]) +
          static_cast<std::uint64_t>(v[i]);
  return idx;
}

std::vector<long> fast_decode(const FastRing& f, std::uint64_t idx) {
  std::vector<long> v(f.n, 0);
  for (int i = f.n - 1; i >= 0; --i) {
    v[i] = static_cast<long>(idx % static_cast<std::uint64_t>(f.moduli[i]));
    idx /= static_cast<std::uint64_t>(f.moduli[i]);
  }
  return v;
}

bool fast_is_zero(const std::vector<long>& v) {
  return std::all_of(v.begin(), v.end(), [](long c) { return c == 0; });
}

/// Scan [from, to) for the first element a with a C intersect C = 0; the
/// center elements and their index set are shared read-only.
std::optional<std::uint64_t> scan_range(
    const FastRing& f, const std::vector<std::vector<long>>& center_elems,
    const std::unordered_set<std::uint64_t>& center_idx, std::uint64_t from,
    std::uint64_t to, const std::atomic<std::uint64_t>& best) {
  std::vector<long> a = fast_decode(f, from);
  std::vector<long> y(f.n, 0);
  for (std::uint64_t idx = from; idx < to; ++idx) {
    if (idx > best.load(std::memory_order_relaxed)) return std::nullopt;
    if (idx != 0) {
      bool found = false;
      for (const auto& x : center_elems) {
        fast_mul(f, a, x, y);
        if (!fast_is_zero(y) && center_idx.count(fast_index(f, y))) {
          found = true;
          break;
        }
      }
      if (!found) return idx;
    }
    // odometer
    for (int i = f.n - 1; i >= 0; --i) {
      if (++a[i] < f.moduli[i]) break;
      a[i] = 0;
    }
  }
  return std::nullopt;
}

}  // namespace

CEReport is_ce_exhaustive(const FiniteRing& r, std::uint64_t bound, int jobs) {
  CEReport rep;
  rep.method = CEMethod::exhaustive;
  Int order = r.ring_order();
  if (order > bound) {
    rep.decision = CEDecision::undecided;
    rep.undecided_reason = "ring order " + order.str() +
                           " exceeds the enumeration bound " +
                           std::to_string(bound);
    return rep;
  }
  const std::uint64_t n_elems = static_cast<std::uint64_t>(order);
  FastRing f = fast_ring(r);

  ResidueModule c = center(r);
  auto center_ints = c.elements(n_elems);
  if (!center_ints)
    throw std::logic_error("is_ce_exhaustive: center larger than the ring");
  std::vector<std::vector<long>> center_elems;
  std::unordered_set<std::uint64_t> center_idx;
  center_elems.reserve(center_ints->size());
  for (const IntVec& v : *center_ints) {
    std::vector<long> lv;
    lv.reserve(v.size());
    for (const Int& x : v) lv.push_back(static_cast<long>(x));
    center_idx.insert(fast_index(f, lv));
    if (!fast_is_zero(lv)) center_elems.push_back(std::move(lv));
  }
  // try the identity first: commutative elements succeed immediately
  std::vector<long> one = f.one;
  for (std::size_t i = 0; i < center_elems.size(); ++i)
    if (center_elems[i] == one) {
      std::swap(center_elems[0], center_elems[i]);
      break;
    }

  jobs = std::max(1, std::min(jobs, 64));
  std::atomic<std::uint64_t> best(UINT64_MAX);
  std::optional<std::uint64_t> witness_idx;
  if (jobs == 1 || n_elems < 1024) {
    witness_idx = scan_range(f, center_elems, center_idx, 0, n_elems, best);
  } else {
    std::vector<std::optional<std::uint64_t>> results(jobs);
    std::vector<std::thread> workers;
    std::uint64_t chunk = (n_elems + jobs - 1) / jobs;
    for (int w = 0; w < jobs; ++w) {
      std::uint64_t lo = w * chunk;
      std::uint64_t hi = std::min(n_elems, lo + chunk);
      workers.emplace_back([&, w, lo, hi]() {
        results[w] = scan_range(f, center_elems, center_idx, lo, hi, best);
        if (results[w]) {
          std::uint64_t cur = best.load();
          while (*results[w] < cur &&
                 !best.compare_exchange_weak(cur, *results[w])) {
          }
        }
      });
    }
    for (auto& t : workers) t.join();
    for (const auto& res : results)
      if (res && (!witness_idx || *res < *witness_idx)) witness_idx = res;
  }

  if (witness_idx) {
    rep.decision = CEDecision::no;
    rep.witness_failure = coord_strings(element_by_index(r, *witness_idx));
  } else {
    rep.decision = CEDecision::yes;
  }
  return rep;
}

// ---------------------------------------------------------------------------
// witnesses
// ---------------------------------------------------------------------------

std::optional<std::pair<Element, Element>> ce_witness(const Algebra& a,
                                                      const Element& x) {
  if (x.parent_ptr() != &a)
    throw std::invalid_argument("ce_witness: element of a different algebra");
  if (x.is_zero()) throw std::invalid_argument("ce_witness: a must be nonzero");
  Subspace c = center(a);
  if (c.contains_vector(x.coords()))
    return std::make_pair(a.one_element(), x);
  std::vector<ScalarVec> images;
  for (int i = 0; i < c.dim(); ++i)
    images.push_back(a.mul_coords(x.coords(), c.basis_row(i)));
  Subspace xc = Subspace::span(a.field(), a.dim(), images);
  Subspace meet = intersect(xc, c);
  if (meet.is_zero()) return std::nullopt;
  ScalarVec y = meet.basis_row(0);
  Matrix img = Matrix::from_rows(a.field(), images);
  auto lambda = solve_linear(img.transpose(), y);
  if (!lambda)
    throw std::logic_error("ce_witness: intersection element not reachable");
  ScalarVec xc_coords = zero_vector(a.field(), a.dim());
  for (int i = 0; i < c.dim(); ++i)
    xc_coords = add(xc_coords, scale((*lambda)[i], c.basis_row(i)));
  Element cx = a.element(xc_coords);
  Element yy = a.element(y);
  return std::make_pair(cx, yy);
}

std::optional<std::pair<RingElement, RingElement>> ce_witness(
    const FiniteRing& r, const RingElement& x) {
  if (x.parent_ptr() != &r)
    throw std::invalid_argument("ce_witness: element of a different ring");
  if (x.is_zero()) throw std::invalid_argument("ce_witness: a must be nonzero");
  ResidueModule c = center(r);
  if (c.contains_vector(x.coords()))
    return std::make_pair(r.one_element(), x);
  IntMat images;
  for (const IntVec& row : c.rows()) images.push_back(r.mul_coords(x.coords(), row));
  ResidueModule xc = ResidueModule::howell(images, r.moduli());
  ResidueModule meet = intersect(xc, c);
  if (meet.is_zero()) return std::nullopt;
  IntVec y = meet.rows()[0];
  // lambda . images = y over Z/L coefficients
  Int l = 1;
  for (const Int& m : r.moduli()) l = boost::multiprecision::lcm(l, m);
  IntVec src(images.size(), l);
  auto lambda = solve_mod(images, src, r.moduli(), y);
  if (!lambda)
    throw std::logic_error("ce_witness: intersection element not reachable");
  IntVec xc_coords(r.generator_count(), 0);
  for (std::size_t i = 0; i < images.size(); ++i)
    for (int k = 0; k < r.generator_count(); ++k)
      xc_coords[k] =
          mod_floor(xc_coords[k] + (*lambda)[i] * c.rows()[i][k], r.moduli()[k]);
  return std::make_pair(r.element(std::move(xc_coords)), r.element(std::move(y)));
}

// ---------------------------------------------------------------------------
// local-ring criteria
// ---------------------------------------------------------------------------

namespace {

template <typename RingT, typename InvT>
LocalRingCriteria criteria_checked(const RingT& ring, const InvT& inv) {
  if (inv.local != Tri::yes)
    throw std::invalid_argument(
        "local_ring_criteria: requires a ring certified local");
  LocalRingCriteria c = fill_criteria(ring, inv);
  bool ce = c.socle_in_center == Tri::yes;
  if (ce && !(c.quotient_commutative == Tri::yes &&
              c.min_ideals_meet_center == Tri::yes))
    throw std::logic_error(
        "local-ring criteria: a centrally essential local ring must satisfy "
        "(i) and (iii)");
  if (c.quotient_commutative == Tri::yes && c.socles_equal == Tri::yes &&
      c.min_ideals_meet_center == Tri::yes && !ce)
    throw std::logic_error(
        "local-ring criteria: (i)+(ii)+(iii) must force central essentiality");
  return c;
}

}  // namespace

LocalRingCriteria local_ring_criteria(const Algebra& a,
                                      const AlgebraInvariants& inv) {
  return criteria_checked(a, inv);
}

LocalRingCriteria local_ring_criteria(const FiniteRing& r,
                                      const RingInvariants& inv) {
  return criteria_checked(r, inv);
}

// ---------------------------------------------------------------------------
// combined reports
// ---------------------------------------------------------------------------

namespace {

void merge_exhaustive(CEReport& rep, const CEReport& ex) {
  if (ex.decision == CEDecision::undecided) return;
  if (rep.decision == CEDecision::undecided) {
    rep.decision = ex.decision;
    rep.method = CEMethod::exhaustive;
    rep.witness_failure = ex.witness_failure;
    rep.undecided_reason.clear();
    return;
  }
  if (rep.decision != ex.decision)
    throw std::logic_error(
        "ce_report: subspace criterion and exhaustive scan disagree");
  rep.method = CEMethod::both;
  if (ex.witness_failure) rep.witness_failure = ex.witness_failure;
}

}  // namespace

CEReport ce_report(const Algebra& a, const ReportOptions& opt) {
  CEReport rep = is_ce_subspace(a, opt.bound);
  if (a.field().is_prime_field()) {
    Int order = 1;
    bool fits = true;
    for (int i = 0; i < a.dim() && fits; ++i) {
      order *= a.field().prime();
      if (order > opt.bound) fits = false;
    }
    if (fits)
      merge_exhaustive(rep, is_ce_exhaustive(as_finite_ring(a), opt.bound, opt.jobs));
  }
  return rep;
}

CEReport ce_report(const FiniteRing& r, const ReportOptions& opt) {
  CEReport rep = is_ce_subspace(r, opt.bound);
  if (r.ring_order() <= opt.bound)
    merge_exhaustive(rep, is_ce_exhaustive(r, opt.bound, opt.jobs));
  return rep;
}

DecompositionReport decomposition_ce_check(const FiniteAbelianGroup& g,
                                           const ReportOptions& opt) {
  DecompositionReport rep;
  rep.fully_invariant = g.all_components_cyclic();
  rep.components_ce = true;
  for (const auto& s : g.summands) {
    FiniteAbelianGroup single{{s}};
    CEReport comp = ce_report(endomorphism_ring(single), opt);
    if (comp.decision != CEDecision::yes) rep.components_ce = false;
  }
  rep.verdict = rep.fully_invariant && rep.components_ce;
  CEReport direct = ce_report(endomorphism_ring(g), opt);
  rep.direct = direct.decision;
  rep.consistent = direct.decision == CEDecision::undecided ||
                   (direct.decision == CEDecision::yes) == rep.verdict;
  return rep;
}

}  // namespace cering
