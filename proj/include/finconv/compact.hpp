#pragma once

#include <optional>

#include "maps.hpp"

namespace finconv {

/// 𝒜 is compact at ℬ: every class filter ↑F meshing 𝒜 has an adherence
/// meeting every member of ℬ. For the closed class, closedness is in `c`.
inline bool is_compact_at(const Convergence& c, const SetFamily& a, const SetFamily& b, FilterClass cls) {
  require_same_width(c.size(), a.width());
  require_same_width(c.size(), b.width());
  const auto adh = adherence_table(c);
  for (mask_t f : class_filter_bases(cls, c))
    if (meets_all(f, a) && !meets_all(adh[f], b)) return false;
  return true;
}

inline bool is_compact_at(const Convergence& c, const Subset& a, const Subset& b, FilterClass cls) {
  return is_compact_at(c, SetFamily(a.width(), {a.bits()}), SetFamily(b.width(), {b.bits()}), cls);
}

/// Compact at the whole carrier.
inline bool is_compactoid(const Convergence& c, const SetFamily& a, FilterClass cls) {
  return is_compact_at(c, a, SetFamily(c.size(), {c.full()}), cls);
}

/// R is compact from θ to σ: whenever w ∈ lim_θ ↑A, every class filter ↑J
/// on the target meshing R[↑A] has an adherence meeting R(w). When R(A) is
/// empty, R[↑A] contains ∅ and nothing meshes it.
inline bool is_relation_compact(const FiniteRelation& r, const Convergence& theta, const Convergence& sigma,
                                FilterClass cls) {
  require_same_width(r.source_width(), theta.size());
  require_same_width(r.target_width(), sigma.size());
  const auto adh = adherence_table(sigma);
  const auto bases = class_filter_bases(cls, sigma);
  for (mask_t a = 1; a <= theta.full(); ++a) {
    const mask_t ra = r.image(a);
    for (mask_t j : bases) {
      if (!meets(j, ra)) continue;
      const mask_t hits = r.preimage(adh[j]);  // points w with R(w) meeting adh J
      if (!subset_of(theta.lim(a), hits)) return false;
    }
  }
  return true;
}

/// χ_ξ: lim ↑A is the whole carrier if lim_ξ ↑A ≠ ∅, else empty.
inline Convergence characteristic(const Convergence& xi) {
  std::vector<mask_t> t(std::size_t{xi.full()} + 1, 0);
  for (mask_t a = 1; a <= xi.full(); ++a) t[a] = xi.lim(a) ? xi.full() : 0;
  return {xi.carrier_ptr(), std::move(t)};
}

struct ImageCompactCheck {
  bool relation_compact = false;
  bool family_compact = false;  // 𝒜 compact at B in θ
  bool image_compact = false;   // R[𝒜] compact at R(B) in σ
  std::optional<mask_t> counterexample;  // a class filter on the target witnessing failure
  bool holds() const { return !(relation_compact && family_compact) || image_compact; }
};

/// R compact and 𝒜 compact at B ⟹ R[𝒜] compact at R(B). The argument
/// pulls class filters back along R, so the class must be transferable.
inline ImageCompactCheck image_of_compact(const FiniteRelation& r, const Convergence& theta, const Convergence& sigma,
                                          const SetFamily& a, const Subset& b, FilterClass cls) {
  if (!transferable(cls))
    throw invalid_input("image_of_compact needs a transferable filter class, not " + std::string(class_name(cls)));
  require_same_width(r.source_width(), b.width());
  ImageCompactCheck out;
  out.relation_compact = is_relation_compact(r, theta, sigma, cls);
  out.family_compact = is_compact_at(theta, a, SetFamily(b.width(), {b.bits()}), cls);
  const SetFamily image = rel_image_family(r, a);
  const mask_t rb = r.image(b.bits());
  const auto adh = adherence_table(sigma);
  out.image_compact = true;
  for (mask_t j : class_filter_bases(cls, sigma))
    if (meets_all(j, image) && !meets(adh[j], rb)) {
      out.image_compact = false;
      out.counterexample = j;
      break;
    }
  return out;
}

/// The completeness number of a finite convergence. Finite convergences are
/// compact (every principal filter has nonempty adherence), so it is 0; the
/// compactness is checked rather than assumed.
inline unsigned completeness_number_finite(const Convergence& c) {
  const auto adh = adherence_table(c);
  for (mask_t h = 1; h <= c.full(); ++h) check_internal(adh[h] != 0, "finite convergence not compact");
  return 0;
}

}  // namespace finconv
