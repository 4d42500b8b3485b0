#pragma once

#include <memory>
#include <span>
#include <vector>

#include "family.hpp"

namespace finconv {

/// Every violated axiom instance of a candidate limit table. Antitone
/// violations are reported for immediate pairs B = A ∖ {x} only; the
/// general case follows by transitivity.
inline std::vector<AxiomViolation> axiom_violations(unsigned n, const std::vector<mask_t>& table) {
  std::vector<AxiomViolation> out;
  const mask_t all = full_mask(n);
  if (table.size() != std::size_t{all} + 1) {
    out.push_back({"missing", 0, 0, 0});
    return out;
  }
  for (unsigned x = 0; x < n; ++x)
    if (!has_point(table[point_mask(x)], x)) out.push_back({"centered", x, point_mask(x), 0});
  for (mask_t a = 1; a <= all; ++a) {
    if (cardinality(a) < 2) continue;
    for_each_point(a, [&](unsigned x) {
      const mask_t b = a & ~point_mask(x);
      if (!subset_of(table[a], table[b])) out.push_back({"antitone", x, b, a});
    });
  }
  return out;
}

/// A convergence on a finite carrier, given by lim ↑A for every nonempty A.
class Convergence {
 public:
  Convergence(std::shared_ptr<const Carrier> carrier, std::vector<mask_t> table)
      : carrier_(std::move(carrier)), table_(std::move(table)) {
    if (table_.size() != std::size_t{full()} + 1)
      throw invalid_input("limit table must have one entry per subset (" +
                          std::to_string(std::size_t{full()} + 1) + "), got " +
                          std::to_string(table_.size()));
    for (mask_t l : table_) require_bits_fit(size(), l);
    table_[0] = 0;
    auto v = axiom_violations(size(), table_);
    if (!v.empty()) throw axiom_violation(std::move(v));
  }

  Convergence(const Carrier& carrier, std::vector<mask_t> table)
      : Convergence(std::make_shared<const Carrier>(carrier), std::move(table)) {}

  /// lim ↑A = {x : A ⊆ V_x}.
  static Convergence from_vicinities(std::shared_ptr<const Carrier> carrier, const std::vector<mask_t>& vicinity) {
    if (vicinity.size() != carrier->size()) throw invalid_input("one vicinity set per point required");
    std::vector<mask_t> t(std::size_t{carrier->full()} + 1, 0);
    for (mask_t a = 1; a <= carrier->full(); ++a)
      for (unsigned x = 0; x < carrier->size(); ++x)
        if (subset_of(a, vicinity[x])) t[a] |= point_mask(x);
    return {std::move(carrier), std::move(t)};
  }
  static Convergence from_vicinities(const Carrier& carrier, const std::vector<mask_t>& vicinity) {
    return from_vicinities(std::make_shared<const Carrier>(carrier), vicinity);
  }

  /// Only point filters converge, each to its point.
  static Convergence discrete(std::shared_ptr<const Carrier> carrier) {
    std::vector<mask_t> t(std::size_t{carrier->full()} + 1, 0);
    for (unsigned x = 0; x < carrier->size(); ++x) t[point_mask(x)] = point_mask(x);
    return {std::move(carrier), std::move(t)};
  }

  /// Every filter converges to every point.
  static Convergence indiscrete(std::shared_ptr<const Carrier> carrier) {
    std::vector<mask_t> t(std::size_t{carrier->full()} + 1, carrier->full());
    return {std::move(carrier), std::move(t)};
  }

  const Carrier& carrier() const { return *carrier_; }
  const std::shared_ptr<const Carrier>& carrier_ptr() const { return carrier_; }
  unsigned size() const { return carrier_->size(); }
  mask_t full() const { return carrier_->full(); }
  const std::vector<mask_t>& table() const { return table_; }

  /// lim ↑A for nonempty A.
  mask_t lim(mask_t a) const { return table_[a]; }

  bool operator==(const Convergence& o) const {
    return table_ == o.table_ && (carrier_ == o.carrier_ || *carrier_ == *o.carrier_);
  }

 private:
  std::shared_ptr<const Carrier> carrier_;
  std::vector<mask_t> table_;
};

inline void require_same_carrier(const Convergence& a, const Convergence& b) {
  require_same_width(a.size(), b.size());
}

inline Subset limit(const Convergence& c, const FiniteFilter& f) {
  require_same_width(c.size(), f.width());
  if (f.is_degenerate()) throw degenerate_filter();
  return {c.size(), c.lim(f.base())};
}

/// U(x) = ⋃{A : x ∈ lim ↑A}, the base of the vicinity filter, for every x.
inline std::vector<mask_t> vicinity_bases(const Convergence& c) {
  std::vector<mask_t> u(c.size(), 0);
  for (mask_t a = 1; a <= c.full(); ++a) for_each_point(c.lim(a), [&](unsigned x) { u[x] |= a; });
  return u;
}

/// O is open iff every principal filter with a limit in O contains O.
inline bool is_open(const Convergence& c, const Subset& o) {
  require_same_width(c.size(), o.width());
  for (mask_t a = 1; a <= c.full(); ++a)
    if (meets(o.bits(), c.lim(a)) && !subset_of(a, o.bits())) return false;
  return true;
}

inline bool is_closed(const Convergence& c, const Subset& s) { return is_open(c, s.complement()); }

/// Open sets as masks, ascending, found through vicinity bases: O is open
/// iff U(x) ⊆ O for every x ∈ O.
inline std::vector<mask_t> open_masks(const Convergence& c) {
  const auto u = vicinity_bases(c);
  std::vector<mask_t> out;
  for (mask_t o = 0;; ++o) {
    bool ok = true;
    for_each_point(o, [&](unsigned x) { ok = ok && subset_of(u[x], o); });
    if (ok) out.push_back(o);
    if (o == c.full()) break;
  }
  return out;
}

inline SetFamily open_sets(const Convergence& c) { return {c.size(), open_masks(c)}; }

inline std::vector<mask_t> closed_masks(const Convergence& c) {
  std::vector<mask_t> out;
  for (mask_t o : open_masks(c)) out.push_back(c.full() & ~o);
  std::sort(out.begin(), out.end());
  return out;
}

inline SetFamily closed_sets(const Convergence& c) { return {c.size(), closed_masks(c)}; }

/// adh 𝒜 = ⋃{lim ↑H : H meets every member of 𝒜}, scanning every H.
inline mask_t adherence_mask(const Convergence& c, const SetFamily& fam) {
  mask_t r = 0;
  for (mask_t h = 1; h <= c.full(); ++h)
    if (meets_all(h, fam)) r |= c.lim(h);
  return r;
}

inline Subset adherence(const Convergence& c, const SetFamily& fam) {
  require_same_width(c.size(), fam.width());
  return {c.size(), adherence_mask(c, fam)};
}

inline Subset adherence(const Convergence& c, const Subset& a) {
  return adherence(c, SetFamily(a.width(), {a.bits()}));
}

/// adh{A} for every A, indexed by mask. Uses adh{A} = ⋃_{a∈A} lim ↑{a},
/// which the antitone axiom makes equal to the direct scan.
inline std::vector<mask_t> adherence_table(const Convergence& c) {
  std::vector<mask_t> t(std::size_t{c.full()} + 1, 0);
  for (mask_t a = 1; a <= c.full(); ++a) {
    const mask_t low = a & (~a + 1);
    t[a] = t[a & ~low] | c.lim(low);
  }
  return t;
}

inline Subset inherence(const Convergence& c, const SetFamily& fam) {
  return adherence(c, complement_family(fam)).complement();
}

/// The three characterizations of "fam is a cover of A", computed independently.
struct CoverForms {
  bool by_filters;    // every ↑H with a limit in A contains a member of fam
  bool by_inherence;  // A ⊆ inh fam
  bool by_adherence;  // adh fam_c misses A
  bool agree() const { return by_filters == by_inherence && by_inherence == by_adherence; }
};

inline CoverForms cover_forms(const Convergence& c, const SetFamily& fam, const Subset& a) {
  require_same_width(c.size(), fam.width());
  require_same_width(c.size(), a.width());
  CoverForms r{true, false, false};
  for (mask_t h = 1; h <= c.full() && r.by_filters; ++h) {
    if (!meets(a.bits(), c.lim(h))) continue;
    bool contained = false;
    for (mask_t p : fam.members())
      if (subset_of(h, p)) {
        contained = true;
        break;
      }
    r.by_filters = contained;
  }
  r.by_inherence = a.subset_of(inherence(c, fam));
  r.by_adherence = !adherence(c, complement_family(fam)).meets(a);
  return r;
}

inline bool is_cover(const Convergence& c, const SetFamily& fam, const Subset& a) {
  const auto f = cover_forms(c, fam, a);
  check_internal(f.agree(), "cover characterizations");
  return f.by_filters;
}

/// Largest open subset of a: drop points whose vicinity base leaves the set.
inline mask_t interior_mask(const Convergence& c, mask_t a) {
  const auto u = vicinity_bases(c);
  for (bool changed = true; changed;) {
    changed = false;
    for_each_point(a, [&](unsigned x) {
      if (!subset_of(u[x], a)) {
        a &= ~point_mask(x);
        changed = true;
      }
    });
  }
  return a;
}

inline Subset interior(const Convergence& c, const Subset& a) {
  require_same_width(c.size(), a.width());
  return {c.size(), interior_mask(c, a.bits())};
}

inline mask_t closure_mask(const Convergence& c, mask_t a) {
  const auto adh = adherence_table(c);
  mask_t cur = a;
  while (adh[cur] != cur) cur = adh[cur];
  const mask_t dual = c.full() & ~interior_mask(c, c.full() & ~a);
  check_internal(cur == dual, "closure by adherence iteration vs interior of complement");
  return cur;
}

inline Subset closure(const Convergence& c, const Subset& a) {
  require_same_width(c.size(), a.width());
  return {c.size(), closure_mask(c, a.bits())};
}

/// ↑(⋂ open sets containing x).
inline FiniteFilter neighborhood_filter(const Convergence& c, unsigned x) {
  mask_t base = c.full();
  for (mask_t o : open_masks(c))
    if (has_point(o, x)) base &= o;
  return FiniteFilter::principal(c.size(), base);
}

/// ↑(⋃{A : x ∈ lim ↑A}), the coarsest filter converging to x.
inline FiniteFilter vicinity_filter(const Convergence& c, unsigned x) {
  if (x >= c.size()) throw invalid_input("point outside the carrier");
  return FiniteFilter::principal(c.size(), vicinity_bases(c)[x]);
}

/// ζ ≥ ξ: every lim_ζ ⊆ lim_ξ.
inline bool finer(const Convergence& zeta, const Convergence& xi) {
  require_same_carrier(zeta, xi);
  for (mask_t a = 1; a <= zeta.full(); ++a)
    if (!subset_of(zeta.lim(a), xi.lim(a))) return false;
  return true;
}

inline Convergence sup(std::span<const Convergence> cs) {
  if (cs.empty()) throw invalid_input("sup of an empty list");
  auto t = cs[0].table();
  for (const auto& c : cs.subspan(1)) {
    require_same_carrier(cs[0], c);
    for (mask_t a = 1; a <= c.full(); ++a) t[a] &= c.lim(a);
  }
  return {cs[0].carrier_ptr(), std::move(t)};
}

inline Convergence inf(std::span<const Convergence> cs) {
  if (cs.empty()) throw invalid_input("inf of an empty list");
  auto t = cs[0].table();
  for (const auto& c : cs.subspan(1)) {
    require_same_carrier(cs[0], c);
    for (mask_t a = 1; a <= c.full(); ++a) t[a] |= c.lim(a);
  }
  return {cs[0].carrier_ptr(), std::move(t)};
}

inline Convergence sup(const Convergence& a, const Convergence& b) {
  const Convergence both[] = {a, b};
  return sup(both);
}
inline Convergence inf(const Convergence& a, const Convergence& b) {
  const Convergence both[] = {a, b};
  return inf(both);
}

/// Point (i, j) of a product carrier has index i * m + j.
inline unsigned product_index(unsigned i, unsigned j, unsigned m) { return i * m + j; }

/// Projections of a subset of the product carrier of sizes n × m.
inline std::pair<mask_t, mask_t> project(mask_t c, unsigned m) {
  mask_t p1 = 0, p2 = 0;
  for_each_point(c, [&](unsigned k) {
    p1 |= point_mask(k / m);
    p2 |= point_mask(k % m);
  });
  return {p1, p2};
}

/// (x, y) ∈ lim ↑C iff x ∈ lim ↑p₁(C) and y ∈ lim ↑p₂(C). Labels are "x:y".
inline Convergence product(const Convergence& a, const Convergence& b) {
  const unsigned n = a.size(), m = b.size();
  if (n * m > max_carrier_size)
    throw size_cap_exceeded("product carrier has " + std::to_string(n * m) + " points; the cap is " +
                            std::to_string(max_carrier_size));
  std::vector<std::string> labels;
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < m; ++j) labels.push_back(a.carrier().label(i) + ":" + b.carrier().label(j));
  auto carrier = std::make_shared<const Carrier>(std::move(labels));
  std::vector<mask_t> t(std::size_t{carrier->full()} + 1, 0);
  for (mask_t c = 1; c <= carrier->full(); ++c) {
    const auto [p1, p2] = project(c, m);
    const mask_t l1 = a.lim(p1), l2 = b.lim(p2);
    for_each_point(l1, [&](unsigned i) {
      for_each_point(l2, [&](unsigned j) { t[c] |= point_mask(product_index(i, j, m)); });
    });
  }
  return {std::move(carrier), std::move(t)};
}

/// lim ↑A has at most one point for every A.
inline bool is_hausdorff(const Convergence& c) {
  for (mask_t a = 1; a <= c.full(); ++a)
    if (cardinality(c.lim(a)) > 1) return false;
  return true;
}

}  // namespace finconv
