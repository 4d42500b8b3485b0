#pragma once

#include <algorithm>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bits.hpp"
#include "error.hpp"

namespace finconv {

/// A finite labeled ground set of 1 to 16 points.
class Carrier {
 public:
  explicit Carrier(std::vector<std::string> labels) : labels_(std::move(labels)) {
    if (labels_.empty()) throw invalid_input("carrier must have at least one point");
    if (labels_.size() > max_carrier_size)
      throw size_cap_exceeded("carrier has " + std::to_string(labels_.size()) +
                              " points; the cap is " + std::to_string(max_carrier_size));
    for (std::size_t i = 0; i < labels_.size(); ++i) {
      const auto& l = labels_[i];
      if (l.empty()) throw invalid_input("empty point label");
      if (l.find(',') != std::string::npos)
        throw invalid_input("point label '" + l + "' contains ','");
      for (std::size_t j = 0; j < i; ++j)
        if (labels_[j] == l) throw invalid_input("duplicate point label '" + l + "'");
    }
  }

  /// Points labeled a, b, c, ...
  static Carrier alphabetic(unsigned n) {
    std::vector<std::string> l;
    for (unsigned i = 0; i < n; ++i) l.emplace_back(1, static_cast<char>('a' + i));
    return Carrier(std::move(l));
  }

  /// Points labeled 0, 1, 2, ...
  static Carrier numbered(unsigned n) {
    std::vector<std::string> l;
    for (unsigned i = 0; i < n; ++i) l.push_back(std::to_string(i));
    return Carrier(std::move(l));
  }

  unsigned size() const { return static_cast<unsigned>(labels_.size()); }
  mask_t full() const { return full_mask(size()); }
  const std::string& label(unsigned i) const { return labels_.at(i); }
  const std::vector<std::string>& labels() const { return labels_; }

  std::optional<unsigned> find(std::string_view l) const {
    for (unsigned i = 0; i < labels_.size(); ++i)
      if (labels_[i] == l) return i;
    return std::nullopt;
  }

  bool operator==(const Carrier&) const = default;

 private:
  std::vector<std::string> labels_;
};

inline void require_same_width(unsigned a, unsigned b) {
  if (a != b)
    throw carrier_mismatch("carrier sizes differ (" + std::to_string(a) + " vs " +
                           std::to_string(b) + ")");
}

inline void require_width(unsigned width) {
  if (width == 0 || width > max_carrier_size)
    throw size_cap_exceeded("carrier size " + std::to_string(width) + " outside 1.." +
                            std::to_string(max_carrier_size));
}

inline void require_bits_fit(unsigned width, mask_t bits) {
  if (!subset_of(bits, full_mask(width)))
    throw invalid_input("subset has points outside a carrier of size " + std::to_string(width));
}

class Subset {
 public:
  Subset(unsigned width, mask_t bits) : width_(width), bits_(bits) {
    require_width(width);
    require_bits_fit(width, bits);
  }

  static Subset empty(unsigned width) { return {width, 0}; }
  static Subset whole(unsigned width) { return {width, full_mask(width)}; }
  static Subset point(unsigned width, unsigned i) { return {width, point_mask(i)}; }

  unsigned width() const { return width_; }
  mask_t bits() const { return bits_; }
  bool contains(unsigned i) const { return i < width_ && has_point(bits_, i); }
  bool is_empty() const { return bits_ == 0; }
  unsigned size() const { return cardinality(bits_); }
  Subset complement() const { return {width_, full_mask(width_) & ~bits_}; }

  bool subset_of(const Subset& o) const {
    require_same_width(width_, o.width_);
    return finconv::subset_of(bits_, o.bits_);
  }
  bool meets(const Subset& o) const {
    require_same_width(width_, o.width_);
    return finconv::meets(bits_, o.bits_);
  }

  friend Subset operator&(const Subset& a, const Subset& b) {
    require_same_width(a.width_, b.width_);
    return {a.width_, a.bits_ & b.bits_};
  }
  friend Subset operator|(const Subset& a, const Subset& b) {
    require_same_width(a.width_, b.width_);
    return {a.width_, a.bits_ | b.bits_};
  }

  bool operator==(const Subset&) const = default;
  auto operator<=>(const Subset&) const = default;

 private:
  unsigned width_;
  mask_t bits_;
};

/// An explicit finite set of subsets of one carrier, kept sorted by mask.
class SetFamily {
 public:
  explicit SetFamily(unsigned width) : width_(width) { require_width(width); }

  SetFamily(unsigned width, std::vector<mask_t> members) : width_(width), members_(std::move(members)) {
    require_width(width);
    for (mask_t m : members_) require_bits_fit(width, m);
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  }

  SetFamily(unsigned width, std::initializer_list<mask_t> members)
      : SetFamily(width, std::vector<mask_t>(members)) {}

  static SetFamily of(const std::vector<Subset>& sets, unsigned width) {
    std::vector<mask_t> m;
    for (const auto& s : sets) {
      require_same_width(s.width(), width);
      m.push_back(s.bits());
    }
    return {width, std::move(m)};
  }

  /// Every subset of the carrier, the empty set included.
  static SetFamily powerset(unsigned width) {
    require_width(width);
    std::vector<mask_t> m(std::size_t{1} << width);
    for (mask_t s = 0; s < m.size(); ++s) m[s] = s;
    return {width, std::move(m)};
  }

  unsigned width() const { return width_; }
  const std::vector<mask_t>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  bool contains(mask_t s) const { return std::binary_search(members_.begin(), members_.end(), s); }
  bool has_empty_member() const { return !members_.empty() && members_.front() == 0; }

  bool operator==(const SetFamily&) const = default;

 private:
  unsigned width_;
  std::vector<mask_t> members_;
};

/// True iff h meets every member of fam; the principal filter of h then meshes fam.
inline bool meets_all(mask_t h, const SetFamily& fam) {
  for (mask_t a : fam.members())
    if (!meets(h, a)) return false;
  return true;
}

/// A filter on a finite carrier, stored as its least member. The
/// degenerate filter (every subset, ∅ included) has base ∅.
class FiniteFilter {
 public:
  static FiniteFilter principal(const Subset& base) { return {base.width(), base.bits()}; }
  static FiniteFilter principal(unsigned width, mask_t base) {
    require_width(width);
    require_bits_fit(width, base);
    return {width, base};
  }
  static FiniteFilter degenerate(unsigned width) {
    require_width(width);
    return {width, 0};
  }

  /// Canonicalizes an explicit member list; throws unless it is a filter.
  static FiniteFilter from_members(const SetFamily& fam) {
    if (fam.empty()) throw invalid_input("a filter has at least one member");
    mask_t base = full_mask(fam.width());
    for (mask_t m : fam.members()) base &= m;
    FiniteFilter f{fam.width(), base};
    if (!(f.members() == fam)) throw invalid_input("family is not a filter");
    return f;
  }

  unsigned width() const { return width_; }
  mask_t base() const { return base_; }
  Subset base_set() const { return {width_, base_}; }
  bool is_degenerate() const { return base_ == 0; }
  bool contains(mask_t s) const { return subset_of(base_, s); }

  SetFamily members() const {
    std::vector<mask_t> m;
    const mask_t rest = full_mask(width_) & ~base_;
    for (mask_t s = rest;; s = (s - 1) & rest) {
      m.push_back(base_ | s);
      if (s == 0) break;
    }
    return {width_, std::move(m)};
  }

  /// {H : H ∩ base ≠ ∅}; empty for the degenerate filter.
  SetFamily grill() const {
    std::vector<mask_t> m;
    for (mask_t s = 1; s <= full_mask(width_); ++s)
      if (meets(s, base_)) m.push_back(s);
    return {width_, std::move(m)};
  }

  bool operator==(const FiniteFilter&) const = default;

 private:
  FiniteFilter(unsigned width, mask_t base) : width_(width), base_(base) {}
  unsigned width_;
  mask_t base_;
};

/// R ⊆ W × Z stored as the rows R(w).
class FiniteRelation {
 public:
  FiniteRelation(unsigned source_width, unsigned target_width, std::vector<mask_t> rows)
      : source_width_(source_width), target_width_(target_width), rows_(std::move(rows)) {
    require_width(source_width);
    require_width(target_width);
    if (rows_.size() != source_width) throw invalid_input("relation needs one row per source point");
    for (mask_t r : rows_) require_bits_fit(target_width, r);
  }

  static FiniteRelation identity(unsigned n) {
    std::vector<mask_t> rows(n);
    for (unsigned i = 0; i < n; ++i) rows[i] = point_mask(i);
    return {n, n, std::move(rows)};
  }

  unsigned source_width() const { return source_width_; }
  unsigned target_width() const { return target_width_; }
  mask_t row(unsigned w) const { return rows_.at(w); }
  const std::vector<mask_t>& rows() const { return rows_; }
  bool related(unsigned w, unsigned z) const { return has_point(rows_.at(w), z); }

  /// R(A) = ⋃_{w∈A} R(w).
  mask_t image(mask_t a) const {
    mask_t r = 0;
    for_each_point(a, [&](unsigned w) { r |= rows_[w]; });
    return r;
  }

  /// R⁻(B) = {w : R(w) ∩ B ≠ ∅}.
  mask_t preimage(mask_t b) const {
    mask_t r = 0;
    for (unsigned w = 0; w < source_width_; ++w)
      if (meets(rows_[w], b)) r |= point_mask(w);
    return r;
  }

  FiniteRelation inverse() const {
    std::vector<mask_t> rows(target_width_, 0);
    for (unsigned w = 0; w < source_width_; ++w)
      for_each_point(rows_[w], [&](unsigned z) { rows[z] |= point_mask(w); });
    return {target_width_, source_width_, std::move(rows)};
  }

  /// Distinct points have disjoint images.
  bool is_injective() const {
    mask_t seen = 0;
    for (mask_t r : rows_) {
      if (meets(seen, r)) return false;
      seen |= r;
    }
    return true;
  }

  bool is_surjective() const { return image(full_mask(source_width_)) == full_mask(target_width_); }

  /// A relation is a map iff its inverse is injective and surjective.
  bool is_map() const {
    const auto inv = inverse();
    return inv.is_injective() && inv.is_surjective();
  }

  bool operator==(const FiniteRelation&) const = default;

 private:
  unsigned source_width_;
  unsigned target_width_;
  std::vector<mask_t> rows_;
};

/// A total single-valued map between carriers.
class CarrierMap {
 public:
  CarrierMap(unsigned target_width, std::vector<unsigned> images)
      : target_width_(target_width), images_(std::move(images)) {
    require_width(target_width);
    require_width(static_cast<unsigned>(images_.size()));
    fibers_.assign(target_width, 0);
    for (unsigned x = 0; x < images_.size(); ++x) {
      if (images_[x] >= target_width) throw invalid_input("map image outside the target carrier");
      fibers_[images_[x]] |= point_mask(x);
    }
  }

  static CarrierMap identity(unsigned n) {
    std::vector<unsigned> im(n);
    for (unsigned i = 0; i < n; ++i) im[i] = i;
    return {n, std::move(im)};
  }

  static CarrierMap from_relation(const FiniteRelation& r) {
    if (!r.is_map()) throw invalid_input("relation is not a map: its inverse must be injective and surjective");
    std::vector<unsigned> im(r.source_width());
    for (unsigned w = 0; w < r.source_width(); ++w) im[w] = lowest_point(r.row(w));
    return {r.target_width(), std::move(im)};
  }

  unsigned source_width() const { return static_cast<unsigned>(images_.size()); }
  unsigned target_width() const { return target_width_; }
  unsigned operator()(unsigned x) const { return images_.at(x); }
  const std::vector<unsigned>& images() const { return images_; }
  mask_t fiber(unsigned y) const { return fibers_.at(y); }

  mask_t image(mask_t a) const {
    mask_t r = 0;
    for_each_point(a, [&](unsigned x) { r |= point_mask(images_[x]); });
    return r;
  }

  mask_t preimage(mask_t b) const {
    mask_t r = 0;
    for_each_point(b, [&](unsigned y) { r |= fibers_[y]; });
    return r;
  }

  /// f_#(P) = Y ∖ f(X ∖ P): the points whose whole fiber lies in P.
  mask_t small_image(mask_t p) const {
    return full_mask(target_width_) & ~image(full_mask(source_width()) & ~p);
  }

  bool is_surjective() const {
    return std::all_of(fibers_.begin(), fibers_.end(), [](mask_t m) { return m != 0; });
  }
  bool is_injective() const {
    return std::all_of(fibers_.begin(), fibers_.end(), [](mask_t m) { return cardinality(m) <= 1; });
  }

  FiniteRelation as_relation() const {
    std::vector<mask_t> rows;
    for (unsigned y : images_) rows.push_back(point_mask(y));
    return {source_width(), target_width_, std::move(rows)};
  }

  bool operator==(const CarrierMap& o) const {
    return target_width_ == o.target_width_ && images_ == o.images_;
  }

 private:
  unsigned target_width_;
  std::vector<unsigned> images_;
  std::vector<mask_t> fibers_;
};

/// ⋃_{A∈fam} {H : H ⊇ A}.
inline SetFamily isotonize(const SetFamily& fam) {
  std::vector<mask_t> out;
  const mask_t all = full_mask(fam.width());
  for (mask_t h = 0;; ++h) {
    for (mask_t a : fam.members())
      if (subset_of(a, h)) {
        out.push_back(h);
        break;
      }
    if (h == all) break;
  }
  return {fam.width(), std::move(out)};
}

/// {H : H meets every A ∈ fam}.
inline SetFamily grill(const SetFamily& fam) {
  std::vector<mask_t> out;
  const mask_t all = full_mask(fam.width());
  for (mask_t h = 0;; ++h) {
    if (meets_all(h, fam)) out.push_back(h);
    if (h == all) break;
  }
  return {fam.width(), std::move(out)};
}

inline bool mesh(const SetFamily& a, const SetFamily& b) {
  require_same_width(a.width(), b.width());
  for (mask_t x : a.members())
    for (mask_t y : b.members())
      if (!meets(x, y)) return false;
  return true;
}

/// fam1 ≤ fam2: every member of fam1 includes some member of fam2.
inline bool coarser(const SetFamily& fam1, const SetFamily& fam2) {
  require_same_width(fam1.width(), fam2.width());
  for (mask_t a : fam1.members()) {
    bool found = false;
    for (mask_t d : fam2.members())
      if (subset_of(d, a)) {
        found = true;
        break;
      }
    if (!found) return false;
  }
  return true;
}

inline SetFamily complement_family(const SetFamily& fam) {
  std::vector<mask_t> out;
  const mask_t all = full_mask(fam.width());
  for (mask_t a : fam.members()) out.push_back(all & ~a);
  return {fam.width(), std::move(out)};
}

inline SetFamily rel_image_family(const FiniteRelation& r, const SetFamily& fam) {
  require_same_width(r.source_width(), fam.width());
  std::vector<mask_t> out;
  for (mask_t a : fam.members()) out.push_back(r.image(a));
  return {r.target_width(), std::move(out)};
}

inline SetFamily rel_preimage_family(const FiniteRelation& r, const SetFamily& fam) {
  require_same_width(r.target_width(), fam.width());
  std::vector<mask_t> out;
  for (mask_t b : fam.members()) out.push_back(r.preimage(b));
  return {r.source_width(), std::move(out)};
}

inline SetFamily image_family(const CarrierMap& f, const SetFamily& fam) {
  require_same_width(f.source_width(), fam.width());
  std::vector<mask_t> out;
  for (mask_t a : fam.members()) out.push_back(f.image(a));
  return {f.target_width(), std::move(out)};
}

inline SetFamily preimage_family(const CarrierMap& f, const SetFamily& fam) {
  require_same_width(f.target_width(), fam.width());
  std::vector<mask_t> out;
  for (mask_t b : fam.members()) out.push_back(f.preimage(b));
  return {f.source_width(), std::move(out)};
}

inline FiniteFilter filter_meet(const FiniteFilter& a, const FiniteFilter& b) {
  require_same_width(a.width(), b.width());
  return FiniteFilter::principal(a.width(), a.base() | b.base());
}

inline FiniteFilter filter_join(const FiniteFilter& a, const FiniteFilter& b) {
  require_same_width(a.width(), b.width());
  return FiniteFilter::principal(a.width(), a.base() & b.base());
}

inline std::vector<FiniteFilter> ultrafilters_of(const FiniteFilter& f) {
  if (f.is_degenerate()) throw degenerate_filter();
  std::vector<FiniteFilter> out;
  for_each_point(f.base(), [&](unsigned x) { out.push_back(FiniteFilter::principal(f.width(), point_mask(x))); });
  return out;
}

/// One entry of a selection: an ultrafilter U ∈ βf and a chosen member of U.
struct UltrafilterChoice {
  FiniteFilter ultrafilter;
  Subset member;
};

struct SelectionWitness {
  std::vector<unsigned> points;  // the ultrafilters used, by their point
  Subset union_set;
};

/// Given F_U ∈ U for every U ∈ βf, returns a smallest sub-selection whose
/// union belongs to f. Ties go to the numerically first point set.
inline SelectionWitness check_ultrafilter_selection(const FiniteFilter& f,
                                                    const std::vector<UltrafilterChoice>& selection) {
  if (f.is_degenerate()) throw degenerate_filter();
  std::vector<mask_t> chosen(f.width(), 0);
  mask_t covered = 0;
  for (const auto& c : selection) {
    require_same_width(c.ultrafilter.width(), f.width());
    require_same_width(c.member.width(), f.width());
    const mask_t u = c.ultrafilter.base();
    if (cardinality(u) != 1 || !subset_of(u, f.base()))
      throw invalid_input("selection names a filter that is not an ultrafilter above f");
    if (meets(covered, u)) throw invalid_input("selection names an ultrafilter twice");
    if (!c.ultrafilter.contains(c.member.bits()))
      throw invalid_input("selected set does not belong to its ultrafilter");
    covered |= u;
    chosen[lowest_point(u)] = c.member.bits();
  }
  if (covered != f.base()) throw invalid_input("selection does not cover every ultrafilter above f");

  const unsigned k = cardinality(f.base());
  std::vector<unsigned> pts;
  for_each_point(f.base(), [&](unsigned x) { pts.push_back(x); });
  for (unsigned size = 1; size <= k; ++size) {
    for (mask_t pick = 0; pick < (mask_t{1} << k); ++pick) {
      if (cardinality(pick) != size) continue;
      mask_t u = 0;
      std::vector<unsigned> used;
      for_each_point(pick, [&](unsigned i) {
        u |= chosen[pts[i]];
        used.push_back(pts[i]);
      });
      if (f.contains(u)) return {std::move(used), Subset(f.width(), u)};
    }
  }
  throw std::logic_error("union of a full ultrafilter selection must belong to the filter");
}

}  // namespace finconv
