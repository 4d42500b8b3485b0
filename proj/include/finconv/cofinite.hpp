#pragma once

// Cofinite filters on two countable exemplar carriers.
//
// FAN is {x_∞} ∪ ⋃ X_n with rows X_n = {(n,k) : k ∈ ℕ}; the point (n,0) is x_n.
// PRIME is {x_∞} ∪ ℕ, stored as FAN's row 0 alone.
// Subsets of ℕ are eventually periodic; a FAN set keeps finitely many
// explicit rows and one tail pattern shared by every later row.

#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "error.hpp"

namespace finconv::symbolic {

/// An eventually periodic subset of ℕ: n < |prefix| reads prefix[n], later
/// n reads cycle[(n - |prefix|) mod |cycle|]. Kept in canonical form.
class NatSet {
 public:
  NatSet() : cycle_{false} {}
  NatSet(std::vector<bool> prefix, std::vector<bool> cycle) : prefix_(std::move(prefix)), cycle_(std::move(cycle)) {
    if (cycle_.empty()) throw invalid_input("periodic pattern must be nonempty");
    canonicalize();
  }

  static NatSet all() { return {{}, {true}}; }
  static NatSet of(std::initializer_list<unsigned> points) {
    std::vector<bool> p;
    for (unsigned x : points) {
      if (p.size() <= x) p.resize(x + 1, false);
      p[x] = true;
    }
    return {p, {false}};
  }
  static NatSet all_but(std::initializer_list<unsigned> points) { return of(points).complement(); }
  static NatSet residue(unsigned r, unsigned m) {
    std::vector<bool> c(m, false);
    c.at(r) = true;
    return {{}, c};
  }

  bool contains(std::uint64_t n) const {
    if (n < prefix_.size()) return prefix_[n];
    return cycle_[(n - prefix_.size()) % cycle_.size()];
  }
  bool finite() const { return cycle_.size() == 1 && !cycle_[0]; }
  bool is_empty() const { return finite() && prefix_.empty(); }
  std::size_t prefix_length() const { return prefix_.size(); }
  std::size_t period() const { return cycle_.size(); }

  NatSet complement() const {
    return combine(*this, *this, [](bool a, bool) { return !a; });
  }
  NatSet operator|(const NatSet& o) const {
    return combine(*this, o, [](bool a, bool b) { return a || b; });
  }
  NatSet operator&(const NatSet& o) const {
    return combine(*this, o, [](bool a, bool b) { return a && b; });
  }
  NatSet operator-(const NatSet& o) const {
    return combine(*this, o, [](bool a, bool b) { return a && !b; });
  }
  bool subset_of(const NatSet& o) const { return (*this - o).is_empty(); }
  bool operator==(const NatSet&) const = default;

  /// A subset S with S and this ∖ S both infinite.
  NatSet split() const {
    if (finite()) throw invalid_input("cannot split a finite set");
    std::vector<bool> c(2 * cycle_.size(), false);
    std::size_t hits = 0;
    for (std::size_t i = 0; i < c.size(); ++i)
      if (cycle_[i % cycle_.size()] && hits++ % 2 == 0) c[i] = true;
    std::vector<bool> p(prefix_.size(), false);
    return NatSet(p, c) & *this;
  }

  std::string to_string() const {
    std::string s;
    for (bool b : prefix_) s += b ? '1' : '0';
    s += '(';
    for (bool b : cycle_) s += b ? '1' : '0';
    return s + ")";
  }

 private:
  template <class Op>
  static NatSet combine(const NatSet& a, const NatSet& b, Op op) {
    const std::size_t p = std::max(a.prefix_.size(), b.prefix_.size());
    const std::size_t l = std::lcm(a.cycle_.size(), b.cycle_.size());
    std::vector<bool> pre(p), cyc(l);
    for (std::size_t i = 0; i < p; ++i) pre[i] = op(a.contains(i), b.contains(i));
    for (std::size_t i = 0; i < l; ++i) cyc[i] = op(a.contains(p + i), b.contains(p + i));
    return {std::move(pre), std::move(cyc)};
  }

  void canonicalize() {
    const std::size_t l = cycle_.size();
    for (std::size_t d = 1; d < l; ++d) {
      if (l % d) continue;
      bool periodic = true;
      for (std::size_t i = d; i < l && periodic; ++i) periodic = cycle_[i] == cycle_[i - d];
      if (periodic) {
        cycle_.resize(d);
        break;
      }
    }
    while (!prefix_.empty() && prefix_.back() == cycle_.back()) {
      cycle_.insert(cycle_.begin(), prefix_.back());
      cycle_.pop_back();
      prefix_.pop_back();
    }
  }

  std::vector<bool> prefix_;
  std::vector<bool> cycle_;
};

enum class Exemplar { fan, prime };

inline std::string_view exemplar_name(Exemplar e) { return e == Exemplar::fan ? "fan" : "prime"; }

/// A representable subset of an exemplar carrier.
class SymbolicSet {
 public:
  static SymbolicSet empty(Exemplar e) { return {e, false, {}, {}}; }
  static SymbolicSet whole(Exemplar e) {
    return e == Exemplar::fan ? SymbolicSet{e, true, {}, NatSet::all()} : SymbolicSet{e, true, {NatSet::all()}, {}};
  }
  static SymbolicSet infinity_point(Exemplar e) { return {e, true, {}, {}}; }
  /// The point k of row n (PRIME: n = 0).
  static SymbolicSet point(Exemplar e, unsigned n, unsigned k) {
    std::vector<NatSet> rows(n + 1);
    rows[n] = NatSet::of({k});
    return {e, false, std::move(rows), {}};
  }
  /// Points of ℕ in PRIME, or of row n in FAN.
  static SymbolicSet in_row(Exemplar e, unsigned n, NatSet s) {
    std::vector<NatSet> rows(n + 1);
    rows[n] = std::move(s);
    return {e, false, std::move(rows), {}};
  }
  /// FAN rows X_n.
  static SymbolicSet row(unsigned n) { return in_row(Exemplar::fan, n, NatSet::all()); }
  /// FAN's X_∞ = {x_∞, x_0, x_1, ...}.
  static SymbolicSet spine() { return {Exemplar::fan, true, {}, NatSet::of({0})}; }
  static SymbolicSet from_parts(Exemplar e, bool infinity, std::vector<NatSet> rows, NatSet tail) {
    return {e, infinity, std::move(rows), std::move(tail)};
  }

  Exemplar carrier() const { return carrier_; }
  bool has_infinity() const { return infinity_; }
  const std::vector<NatSet>& explicit_rows() const { return rows_; }
  const NatSet& tail() const { return tail_; }
  const NatSet& row_part(std::size_t n) const { return n < rows_.size() ? rows_[n] : tail_; }
  bool contains(std::size_t n, std::uint64_t k) const { return row_part(n).contains(k); }

  bool is_empty() const {
    if (infinity_ || !tail_.is_empty()) return false;
    for (const auto& r : rows_)
      if (!r.is_empty()) return false;
    return true;
  }
  bool is_finite() const {
    if (!tail_.is_empty()) return false;
    for (const auto& r : rows_)
      if (!r.finite()) return false;
    return true;
  }

  SymbolicSet complement() const {
    std::vector<NatSet> rows;
    for (const auto& r : rows_) rows.push_back(r.complement());
    NatSet tail = carrier_ == Exemplar::fan ? tail_.complement() : NatSet{};
    if (carrier_ == Exemplar::prime && rows.empty()) rows.push_back(NatSet::all());
    return {carrier_, !infinity_, std::move(rows), std::move(tail)};
  }
  SymbolicSet operator|(const SymbolicSet& o) const {
    return combine(o, [](const NatSet& a, const NatSet& b) { return a | b; }, infinity_ || o.infinity_);
  }
  SymbolicSet operator&(const SymbolicSet& o) const {
    return combine(o, [](const NatSet& a, const NatSet& b) { return a & b; }, infinity_ && o.infinity_);
  }
  SymbolicSet operator-(const SymbolicSet& o) const {
    return combine(o, [](const NatSet& a, const NatSet& b) { return a - b; }, infinity_ && !o.infinity_);
  }
  bool subset_of(const SymbolicSet& o) const { return (*this - o).is_empty(); }
  bool operator==(const SymbolicSet&) const = default;

  /// Every row and position at or past this index behaves like the periodic
  /// part of the set.
  std::size_t shape_bound() const {
    std::size_t b = rows_.size();
    for (const auto& r : rows_) b = std::max(b, r.prefix_length());
    return std::max(b, tail_.prefix_length());
  }
  std::size_t period() const {
    std::size_t l = tail_.period();
    for (const auto& r : rows_) l = std::lcm(l, r.period());
    return l;
  }

  std::string to_string() const {
    std::string s = infinity_ ? "{inf}" : "{}";
    for (std::size_t n = 0; n < rows_.size(); ++n) s += " r" + std::to_string(n) + "=" + rows_[n].to_string();
    if (carrier_ == Exemplar::fan) s += " tail=" + tail_.to_string();
    return s;
  }

 private:
  SymbolicSet(Exemplar e, bool infinity, std::vector<NatSet> rows, NatSet tail)
      : carrier_(e), infinity_(infinity), rows_(std::move(rows)), tail_(std::move(tail)) {
    if (carrier_ == Exemplar::prime) {
      if (rows_.size() > 1 || !tail_.is_empty()) throw invalid_input("PRIME sets live in a single row");
    }
    while (!rows_.empty() && rows_.back() == tail_) rows_.pop_back();
  }

  template <class Op>
  SymbolicSet combine(const SymbolicSet& o, Op op, bool infinity) const {
    if (carrier_ != o.carrier_) throw carrier_mismatch("symbolic sets on different exemplars");
    const std::size_t k = std::max(rows_.size(), o.rows_.size());
    std::vector<NatSet> rows;
    for (std::size_t n = 0; n < k; ++n) rows.push_back(op(row_part(n), o.row_part(n)));
    return {carrier_, infinity, std::move(rows), op(tail_, o.tail_)};
  }

  Exemplar carrier_;
  bool infinity_;
  std::vector<NatSet> rows_;
  NatSet tail_;
};

/// The cofinite filter (B/A)₀ of B centered at A: all supersets of
/// A ∪ (B ∖ E) for finite E. Finite meets and joins of such filters are again
/// of this form, so one generator always suffices.
class CofiniteFilter {
 public:
  CofiniteFilter(SymbolicSet base, SymbolicSet center) : base_(base | center), center_(std::move(center)) {}

  static CofiniteFilter principal(const SymbolicSet& a) { return {a, a}; }
  static CofiniteFilter cofinite(const SymbolicSet& b) { return {b, SymbolicSet::empty(b.carrier())}; }
  static CofiniteFilter degenerate(Exemplar e) { return cofinite(SymbolicSet::empty(e)); }

  const SymbolicSet& base() const { return base_; }
  const SymbolicSet& center() const { return center_; }
  Exemplar carrier() const { return base_.carrier(); }

  bool is_degenerate() const { return center_.is_empty() && base_.is_finite(); }
  /// The intersection of all members is empty.
  bool is_free() const { return !is_degenerate() && center_.is_empty(); }
  bool is_principal() const { return (base_ - center_).is_finite(); }
  bool contains(const SymbolicSet& s) const { return center_.subset_of(s) && (base_ - s).is_finite(); }

  std::string to_string() const { return "(" + base_.to_string() + " / " + center_.to_string() + ")0"; }

 private:
  SymbolicSet base_;
  SymbolicSet center_;
};

/// Every member of f1 meets every member of f2.
inline bool mesh(const CofiniteFilter& f1, const CofiniteFilter& f2) {
  const auto &a1 = f1.center(), &a2 = f2.center(), &b1 = f1.base(), &b2 = f2.base();
  return !(a1 & a2).is_empty() || !(b1 & a2).is_finite() || !(a1 & b2).is_finite() || !(b1 & b2).is_finite();
}

/// f1 is coarser than f2 (every member of f1 belongs to f2).
inline bool leq(const CofiniteFilter& f1, const CofiniteFilter& f2) {
  return f2.center().subset_of(f1.center()) && (f2.base() - f1.base()).is_finite();
}

inline bool equivalent(const CofiniteFilter& f1, const CofiniteFilter& f2) { return leq(f1, f2) && leq(f2, f1); }

/// Members are unions of members.
inline CofiniteFilter meet(const CofiniteFilter& f1, const CofiniteFilter& f2) {
  return {f1.base() | f2.base(), f1.center() | f2.center()};
}

/// Members are intersections of members.
inline CofiniteFilter join(const CofiniteFilter& f1, const CofiniteFilter& f2) {
  return {f1.base() & f2.base(), f1.center() & f2.center()};
}

struct Decomposition {
  CofiniteFilter free_part;       // (B ∖ A)₀, degenerate when B ∖ A is finite
  CofiniteFilter principal_part;  // ↑A
};

inline Decomposition decompose(const CofiniteFilter& f) {
  return {CofiniteFilter::cofinite(f.base() - f.center()), CofiniteFilter::principal(f.center())};
}

/// Sequential filters are the cofinite filters of countable sets that are
/// not degenerate; the carriers here are countable.
inline bool is_sequential(const CofiniteFilter& f) { return !f.is_degenerate(); }

// ---------------------------------------------------------------------------
// Finite truncations: T_k keeps x_∞ and the points (n,j) with n, j ≤ k.
// Bit 0 is x_∞ and (n,j) is bit 1 + 7n + j, so k ≤ 6.

inline constexpr unsigned max_truncation = 6;

inline unsigned truncation_bit(std::size_t n, std::size_t j) {
  return 1 + 7 * static_cast<unsigned>(n) + static_cast<unsigned>(j);
}

inline std::uint64_t truncate(const SymbolicSet& s, unsigned k) {
  if (k > max_truncation) throw size_cap_exceeded("truncation is capped at 6");
  std::uint64_t out = s.has_infinity() ? 1 : 0;
  const unsigned rows = s.carrier() == Exemplar::fan ? k : 0;
  for (unsigned n = 0; n <= rows; ++n)
    for (unsigned j = 0; j <= k; ++j)
      if (s.contains(n, j)) out |= std::uint64_t{1} << truncation_bit(n, j);
  return out;
}

inline std::uint64_t truncation_universe(Exemplar e, unsigned k) { return truncate(SymbolicSet::whole(e), k); }

/// Points of T_6 at row or position index ≥ from; x_∞ excluded.
inline std::uint64_t truncation_band(Exemplar e, std::size_t from) {
  std::uint64_t out = 0;
  const unsigned rows = e == Exemplar::fan ? max_truncation : 0;
  for (unsigned n = 0; n <= rows; ++n)
    for (unsigned j = 0; j <= max_truncation; ++j)
      if (std::max<std::size_t>(n, j) >= from) out |= std::uint64_t{1} << truncation_bit(n, j);
  return out;
}

/// A query over these sets has a truncation-stable answer at T_6.
inline bool truncation_stable(std::initializer_list<const SymbolicSet*> sets) {
  std::size_t b = 0, l = 1;
  for (const auto* s : sets) {
    b = std::max(b, s->shape_bound());
    l = std::lcm(l, s->period());
  }
  return b + l <= max_truncation + 1;
}

inline std::size_t joint_bound(std::initializer_list<const SymbolicSet*> sets) {
  std::size_t b = 0;
  for (const auto* s : sets) b = std::max(b, s->shape_bound());
  return b;
}

/// Brute-force answers read off T_6 for stable queries.
namespace oracle {

inline bool is_finite(const SymbolicSet& s, std::size_t bound) {
  return (truncate(s, max_truncation) & truncation_band(s.carrier(), bound)) == 0;
}

inline bool subset(const SymbolicSet& a, const SymbolicSet& b) {
  const auto ta = truncate(a, max_truncation), tb = truncate(b, max_truncation);
  return (ta & ~tb) == 0;
}

inline bool mesh(const CofiniteFilter& f1, const CofiniteFilter& f2, std::size_t bound) {
  const auto band = truncation_band(f1.carrier(), bound);
  const auto a1 = truncate(f1.center(), max_truncation), a2 = truncate(f2.center(), max_truncation);
  const auto b1 = truncate(f1.base(), max_truncation) & band, b2 = truncate(f2.base(), max_truncation) & band;
  return ((a1 | b1) & (a2 | b2)) != 0;
}

inline bool leq(const CofiniteFilter& f1, const CofiniteFilter& f2, std::size_t bound) {
  const auto band = truncation_band(f1.carrier(), bound);
  return subset(f2.center(), f1.center()) &&
         (truncate(f2.base(), max_truncation) & ~truncate(f1.base(), max_truncation) & band) == 0;
}

inline bool contains(const CofiniteFilter& f, const SymbolicSet& s, std::size_t bound) {
  const auto band = truncation_band(f.carrier(), bound);
  return subset(f.center(), s) && (truncate(f.base(), max_truncation) & ~truncate(s, max_truncation) & band) == 0;
}

inline bool is_degenerate(const CofiniteFilter& f, std::size_t bound) {
  return truncate(f.center(), max_truncation) == 0 && is_finite(f.base(), bound);
}

}  // namespace oracle

/// A random set whose shape keeps every query over a few of them stable at T_6.
inline SymbolicSet random_set(Exemplar e, std::mt19937_64& rng) {
  auto nat = [&] {
    const unsigned kind = static_cast<unsigned>(rng() % 6);
    std::vector<bool> pre(rng() % 3);
    for (std::size_t i = 0; i < pre.size(); ++i) pre[i] = rng() & 1u;
    switch (kind) {
      case 0: return NatSet(pre, {false});
      case 1: return NatSet(pre, {true});
      case 2: return NatSet(pre, {true, false});
      case 3: return NatSet(pre, {false, true});
      case 4: return NatSet{};
      default: return NatSet::all();
    }
  };
  const bool inf = rng() & 1u;
  if (e == Exemplar::prime) return SymbolicSet::from_parts(e, inf, {nat()}, {});
  std::vector<NatSet> rows(rng() % 3);
  for (auto& r : rows) r = nat();
  return SymbolicSet::from_parts(e, inf, std::move(rows), nat());
}

struct TruncationReport {
  std::size_t queries = 0;
  std::size_t skipped = 0;  // answers not stable at T_6
  std::size_t disagreements = 0;
  std::string first_disagreement;
  bool passed() const { return disagreements == 0; }
};

/// Random round trips of the set algebra and the filter decisions against
/// brute-force answers on every truncation T_k, k ≤ 6.
inline TruncationReport truncation_crosscheck(std::uint64_t seed, std::size_t trials) {
  TruncationReport rep;
  std::mt19937_64 rng(seed);
  auto note = [&](bool agree, const std::string& what) {
    ++rep.queries;
    if (!agree && rep.disagreements++ == 0) rep.first_disagreement = what;
  };
  for (std::size_t t = 0; t < trials; ++t) {
    const Exemplar e = t % 2 ? Exemplar::prime : Exemplar::fan;
    const auto a = random_set(e, rng), b = random_set(e, rng), c = random_set(e, rng), d = random_set(e, rng);
    for (unsigned k = 0; k <= max_truncation; ++k) {
      const auto ta = truncate(a, k), tb = truncate(b, k), all = truncation_universe(e, k);
      note(truncate(a | b, k) == (ta | tb), "union at T_" + std::to_string(k) + " of " + a.to_string());
      note(truncate(a & b, k) == (ta & tb), "intersection at T_" + std::to_string(k) + " of " + a.to_string());
      note(truncate(a - b, k) == (ta & ~tb), "difference at T_" + std::to_string(k) + " of " + a.to_string());
      note(truncate(a.complement(), k) == (all & ~ta), "complement at T_" + std::to_string(k) + " of " + a.to_string());
    }
    if (!truncation_stable({&a, &b, &c, &d})) {
      ++rep.skipped;
      continue;
    }
    const std::size_t bound = joint_bound({&a, &b, &c, &d});
    note(a.is_finite() == oracle::is_finite(a, bound), "finiteness of " + a.to_string());
    note(a.subset_of(b) == oracle::subset(a, b), "inclusion of " + a.to_string() + " in " + b.to_string());
    const CofiniteFilter f1(a, b & a), f2(c, d & c);
    note(mesh(f1, f2) == oracle::mesh(f1, f2, bound), "mesh of " + f1.to_string() + " and " + f2.to_string());
    note(leq(f1, f2) == oracle::leq(f1, f2, bound), "order of " + f1.to_string() + " and " + f2.to_string());
    note(f1.contains(c) == oracle::contains(f1, c, bound), "membership in " + f1.to_string());
    note(f1.is_degenerate() == oracle::is_degenerate(f1, bound), "degeneracy of " + f1.to_string());
  }
  return rep;
}

// ---------------------------------------------------------------------------
// The two exemplar checks

struct CheckLine {
  std::string claim;
  bool holds = false;
  std::string detail;
};

struct ExemplarReport {
  std::string exemplar;
  std::vector<CheckLine> lines;
  bool passed() const {
    for (const auto& l : lines)
      if (!l.holds) return false;
    return true;
  }
};

/// Vicinity filter of the FAN pretopology at x_∞ (row = nullopt) or at (n,k).
inline CofiniteFilter fan_vicinity(std::optional<std::pair<unsigned, unsigned>> at) {
  const auto inf = SymbolicSet::infinity_point(Exemplar::fan);
  if (!at) return {SymbolicSet::spine(), inf};
  const auto [n, k] = *at;
  const auto p = SymbolicSet::point(Exemplar::fan, n, k);
  if (k == 0) return {SymbolicSet::row(n), p};
  return CofiniteFilter::principal(p);
}

/// O is open in the pretopology: O belongs to the vicinity filter of each of
/// its points. Non-spine points are isolated, so only x_∞ and the x_n matter.
inline bool fan_is_open(const SymbolicSet& o) {
  if (o.has_infinity() && !fan_vicinity(std::nullopt).contains(o)) return false;
  const std::size_t k = o.explicit_rows().size();
  for (std::size_t n = 0; n < k; ++n)
    if (o.contains(n, 0) && !fan_vicinity(std::pair{unsigned(n), 0u}).contains(o)) return false;
  // Rows past the explicit ones share the tail, so row k decides them all.
  if (o.tail().contains(0) && !fan_vicinity(std::pair{unsigned(k), 0u}).contains(o)) return false;
  return true;
}

/// The representable sets containing x_∞ with at most two explicit rows,
/// each row and the tail drawn from a fixed catalogue of shapes.
inline std::vector<SymbolicSet> fan_catalogue() {
  const std::vector<NatSet> shapes = {NatSet{},           NatSet::of({0}),       NatSet::of({1}),
                                      NatSet::of({0, 1}), NatSet::all(),         NatSet::all_but({0}),
                                      NatSet::all_but({1}), NatSet::all_but({0, 1}), NatSet::residue(0, 2),
                                      NatSet::residue(1, 2)};
  std::vector<SymbolicSet> out;
  for (unsigned k = 0; k <= 2; ++k) {
    std::size_t combos = 1;
    for (unsigned i = 0; i <= k; ++i) combos *= shapes.size();
    for (std::size_t c = 0; c < combos; ++c) {
      std::size_t r = c;
      std::vector<NatSet> rows(k);
      for (auto& row : rows) {
        row = shapes[r % shapes.size()];
        r /= shapes.size();
      }
      out.push_back(SymbolicSet::from_parts(Exemplar::fan, true, std::move(rows), shapes[r]));
    }
  }
  return out;
}

inline ExemplarReport fan_check() {
  ExemplarReport rep{"fan", {}};
  const auto spine = SymbolicSet::spine();
  const auto v_inf = fan_vicinity(std::nullopt);
  rep.lines.push_back({"X_inf belongs to the vicinity filter of x_inf", v_inf.contains(spine), ""});
  rep.lines.push_back({"X_inf is not open", !fan_is_open(spine),
                       "x_0 is in X_inf but X_inf meets row 0 only in x_0"});

  std::size_t opens = 0, tails = 0, inside = 0;
  for (const auto& o : fan_catalogue()) {
    if (!fan_is_open(o)) continue;
    ++opens;
    // Each spine point x_n of O forces a cofinite part of row n into O.
    bool shape = true, some_row = false;
    for (std::size_t n = 0; n <= o.explicit_rows().size(); ++n)
      if (o.contains(n, 0)) {
        const bool cof = o.row_part(n).complement().finite();
        shape = shape && cof;
        some_row = some_row || cof;
      }
    if (shape && some_row) ++tails;
    if (o.subset_of(spine)) ++inside;
  }
  rep.lines.push_back({"every open set in the catalogue containing x_inf has a cofinite row part at each of its "
                       "spine points",
                       opens > 0 && tails == opens,
                       std::to_string(opens) + " open sets, " + std::to_string(tails) + " with cofinite rows"});
  rep.lines.push_back({"no representable open O with x_inf in O and O inside X_inf", inside == 0,
                       "checked over " + std::to_string(fan_catalogue().size()) +
                           " catalogue sets containing x_inf (at most two explicit rows; rows and tail from 10 "
                           "shapes); the claim is bounded to this representable class"});
  rep.lines.push_back({"so X_inf is a vicinity of x_inf but not a neighborhood: the pretopology is not a topology",
                       rep.passed(), ""});
  return rep;
}

/// Limits of a cofinite filter in the PRIME convergence, as
/// (converges to x_∞, natural-number limit if any). Points of ℕ are isolated;
/// x_∞ is the limit of ↑{x_∞} and of every free ultrafilter, and no cofinite
/// filter is a free ultrafilter (its base splits into two infinite halves).
struct PrimeLimit {
  bool degenerate = false;
  bool infinity = false;
  std::optional<std::uint64_t> point;
  bool empty() const { return !degenerate && !infinity && !point; }
};

inline PrimeLimit prime_limit(const CofiniteFilter& f) {
  if (f.is_degenerate()) return {true, true, std::nullopt};
  const auto inf = SymbolicSet::infinity_point(Exemplar::prime);
  if (equivalent(f, CofiniteFilter::principal(inf))) return {false, true, std::nullopt};
  // A principal filter at a single natural point.
  if (f.is_principal() && !f.center().has_infinity() && f.center().row_part(0).finite()) {
    const auto& row = f.center().row_part(0);
    std::optional<std::uint64_t> only;
    std::size_t count = 0;
    for (std::size_t i = 0; i < row.prefix_length(); ++i)
      if (row.contains(i)) {
        only = i;
        ++count;
      }
    if (count == 1) return {false, false, only};
  }
  return {};
}

inline ExemplarReport prime_check() {
  ExemplarReport rep{"prime", {}};
  const auto whole = SymbolicSet::whole(Exemplar::prime);
  const CofiniteFilter x0 = CofiniteFilter::cofinite(whole);

  const auto evens = SymbolicSet::in_row(Exemplar::prime, 0, NatSet::residue(0, 2));
  rep.lines.push_back({"(X)0 is not an ultrafilter", !x0.contains(evens) && !x0.contains(evens.complement()),
                       "neither the even numbers nor their complement is cofinite"});
  const auto inf = SymbolicSet::infinity_point(Exemplar::prime);
  rep.lines.push_back({"(X)0 is not {x_inf}^", !equivalent(x0, CofiniteFilter::principal(inf)), ""});
  const PrimeLimit lim = prime_limit(x0);
  rep.lines.push_back({"lim (X)0 is empty", lim.empty(), ""});

  rep.lines.push_back({"(X)0 is free", x0.is_free(), "the intersection of all cofinite sets is empty"});
  bool cofinite_members = true;
  for (unsigned a = 0; a < 4; ++a)
    for (unsigned b = a; b < 4; ++b) {
      const auto s = SymbolicSet::in_row(Exemplar::prime, 0, NatSet::all_but({a, b}));
      cofinite_members = cofinite_members && x0.contains(s) && x0.contains(s | inf);
    }
  bool no_principal_above = !leq(x0, CofiniteFilter::principal(inf));
  for (unsigned p = 0; p <= max_truncation; ++p)
    no_principal_above = no_principal_above && !leq(x0, CofiniteFilter::principal(SymbolicSet::point(Exemplar::prime, 0, p)));
  rep.lines.push_back({"every ultrafilter finer than (X)0 is free", cofinite_members && no_principal_above,
                       "a free ultrafilter contains every cofinite set; (X)0 is finer than no principal "
                       "ultrafilter"});
  rep.lines.push_back({"x_inf is in the pseudotopological limit of (X)0", lim.empty() && rep.passed(),
                       "every free ultrafilter converges to x_inf, so the intersection over the ultrafilters "
                       "finer than (X)0 is {x_inf}"});
  rep.lines.push_back({"so the convergence is not a pseudotopology", rep.passed(), ""});
  return rep;
}

}  // namespace finconv::symbolic
