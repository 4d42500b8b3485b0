#pragma once

#include <array>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "convergence.hpp"

namespace finconv {

/// Which filters an adherence-determined reflector ranges over.
enum class FilterClass {
  closed_principal,  // principal filters of sets closed in the argument convergence
  principal,
  countably_based,
  all,
};

inline std::string_view class_name(FilterClass c) {
  switch (c) {
    case FilterClass::closed_principal: return "F0_CLOSED";
    case FilterClass::principal: return "F0";
    case FilterClass::countably_based: return "F1";
    case FilterClass::all: return "F_ALL";
  }
  return "?";
}

inline std::optional<FilterClass> parse_class(std::string_view s) {
  if (s == "F0_CLOSED") return FilterClass::closed_principal;
  if (s == "F0") return FilterClass::principal;
  if (s == "F1") return FilterClass::countably_based;
  if (s == "F" || s == "F_ALL") return FilterClass::all;
  return std::nullopt;
}

inline constexpr std::array<FilterClass, 4> all_classes = {
    FilterClass::closed_principal, FilterClass::principal, FilterClass::countably_based, FilterClass::all};

/// A class is transferable when images and preimages of class filters stay
/// in the class. Closed principal filters are not: a preimage of a closed
/// set need not be closed.
inline bool transferable(FilterClass c) { return c != FilterClass::closed_principal; }

namespace detail {

template <class Build>
const std::vector<mask_t>& memo_by_size(unsigned n, Build build) {
  require_width(n);
  static std::array<std::once_flag, max_carrier_size + 1> once;
  static std::array<std::vector<mask_t>, max_carrier_size + 1> cache;
  std::call_once(once[n], [&] { cache[n] = build(n); });
  return cache[n];
}

inline std::vector<mask_t> sorted_unique(std::vector<mask_t> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace detail

/// Bases of all non-degenerate principal filters: every nonempty subset.
inline const std::vector<mask_t>& principal_filter_bases(unsigned n) {
  return detail::memo_by_size(n, [](unsigned k) {
    std::vector<mask_t> v;
    for (mask_t a = 1; a <= full_mask(k); ++a) v.push_back(a);
    return v;
  });
}

/// Countably based filters, reached through cofinite filters (B/A)₀ =
/// {F ⊇ A : B ∖ F finite}. On a finite carrier B ∖ F is always finite, so
/// (B/A)₀ = ↑A and only the center survives.
inline const std::vector<mask_t>& countably_based_filter_bases(unsigned n) {
  static std::array<std::once_flag, max_carrier_size + 1> once;
  static std::array<std::vector<mask_t>, max_carrier_size + 1> cache;
  require_width(n);
  std::call_once(once[n], [n] {
    const mask_t all = full_mask(n);
    std::vector<bool> seen(std::size_t{all} + 1, false);
    for (mask_t b = 1; b <= all; ++b) for_each_nonempty_subset(b, [&](mask_t a) { seen[a] = true; });
    std::vector<mask_t> v;
    for (mask_t a = 1; a <= all; ++a)
      if (seen[a]) v.push_back(a);
    cache[n] = std::move(v);
  });
  return cache[n];
}

/// Every non-degenerate filter. Up to 4 points this scans all families of
/// subsets for the filter axioms; beyond that it takes finite meets of
/// point ultrafilters, since every filter is the meet of its ultrafilters.
inline const std::vector<mask_t>& all_filter_bases(unsigned n) {
  static std::array<std::once_flag, max_carrier_size + 1> once;
  static std::array<std::vector<mask_t>, max_carrier_size + 1> cache;
  require_width(n);
  std::call_once(once[n], [n] {
    std::vector<mask_t> v;
    const mask_t all = full_mask(n);
    if (n <= 4) {
      const unsigned subsets = 1u << n;
      const std::uint64_t families = std::uint64_t{1} << subsets;
      for (std::uint64_t fam = 1; fam < families; ++fam) {
        if (fam & 1u) continue;  // contains ∅
        bool ok = true;
        mask_t base = all;
        for (unsigned s = 0; s < subsets && ok; ++s) {
          if (!((fam >> s) & 1u)) continue;
          base &= s;
          for (unsigned p = 0; p < n && ok; ++p) ok = (fam >> (s | point_mask(p))) & 1u;
          for (unsigned t = 0; t < subsets && ok; ++t)
            if ((fam >> t) & 1u) ok = (fam >> (s & t)) & 1u;
        }
        if (ok) v.push_back(base);
      }
    } else {
      for (mask_t pick = 1; pick <= all; ++pick) {
        FiniteFilter meet = FiniteFilter::principal(n, point_mask(lowest_point(pick)));
        for_each_point(pick, [&](unsigned x) {
          meet = filter_meet(meet, FiniteFilter::principal(n, point_mask(x)));
        });
        v.push_back(meet.base());
      }
    }
    cache[n] = detail::sorted_unique(std::move(v));
  });
  return cache[n];
}

/// Class filter bases on the carrier of `context`. Only the closed class
/// depends on the convergence itself.
inline std::vector<mask_t> class_filter_bases(FilterClass cls, const Convergence& context) {
  switch (cls) {
    case FilterClass::closed_principal: {
      auto v = closed_masks(context);
      v.erase(std::remove(v.begin(), v.end(), mask_t{0}), v.end());
      return v;
    }
    case FilterClass::principal: return principal_filter_bases(context.size());
    case FilterClass::countably_based: return countably_based_filter_bases(context.size());
    case FilterClass::all: return all_filter_bases(context.size());
  }
  return {};
}

/// lim ↑F = ⋂{adh_θ H : H ∈ bases, H meets F}.
inline Convergence reflect_with(const std::vector<mask_t>& bases, const Convergence& theta) {
  const auto adh = adherence_table(theta);
  std::vector<mask_t> t(std::size_t{theta.full()} + 1, 0);
  for (mask_t f = 1; f <= theta.full(); ++f) {
    mask_t l = theta.full();
    for (mask_t h : bases)
      if (meets(h, f)) l &= adh[h];
    t[f] = l;
  }
  return {theta.carrier_ptr(), std::move(t)};
}

/// The reflector adherence-determined by a class. For the closed class the
/// class depends on the convergence, so the step repeats until the
/// convergence stops changing.
inline Convergence reflect(FilterClass cls, const Convergence& theta) {
  if (cls != FilterClass::closed_principal) return reflect_with(class_filter_bases(cls, theta), theta);
  Convergence cur = theta;
  for (unsigned round = 0;; ++round) {
    Convergence next = reflect_with(class_filter_bases(cls, cur), cur);
    if (next == cur) return cur;
    check_internal(round < 64, "closed-class reflection did not stabilize");
    cur = std::move(next);
  }
}

/// Tθ from the open sets: x ∈ lim ↑A iff every open set containing x includes A.
inline Convergence topologize(const Convergence& theta) {
  const auto opens = open_masks(theta);
  std::vector<mask_t> nbhd(theta.size(), theta.full());
  for (mask_t o : opens) for_each_point(o, [&](unsigned x) { nbhd[x] &= o; });
  return Convergence::from_vicinities(theta.carrier_ptr(), nbhd);
}

enum class Functor { T, S0, S1, S, I, Seq, I1, K };
enum class FunctorKind { reflector, coreflector, identity };

inline constexpr std::array<Functor, 8> all_functors = {Functor::T,   Functor::S0,  Functor::S1, Functor::S,
                                                        Functor::I,   Functor::Seq, Functor::I1, Functor::K};

inline FunctorKind kind(Functor f) {
  switch (f) {
    case Functor::T:
    case Functor::S0:
    case Functor::S1:
    case Functor::S: return FunctorKind::reflector;
    case Functor::I: return FunctorKind::identity;
    default: return FunctorKind::coreflector;
  }
}

inline std::string_view functor_name(Functor f) {
  switch (f) {
    case Functor::T: return "T";
    case Functor::S0: return "S0";
    case Functor::S1: return "S1";
    case Functor::S: return "S";
    case Functor::I: return "I";
    case Functor::Seq: return "Seq";
    case Functor::I1: return "I1";
    case Functor::K: return "K";
  }
  return "?";
}

inline std::optional<Functor> parse_functor(std::string_view s) {
  for (Functor f : all_functors)
    if (functor_name(f) == s) return f;
  return std::nullopt;
}

/// The filter class a reflector is adherence-determined by.
inline std::optional<FilterClass> reflector_class(Functor f) {
  switch (f) {
    case Functor::T: return FilterClass::closed_principal;
    case Functor::S0: return FilterClass::principal;
    case Functor::S1: return FilterClass::countably_based;
    case Functor::S: return FilterClass::all;
    default: return std::nullopt;
  }
}

inline Functor reflector_for(FilterClass c) {
  switch (c) {
    case FilterClass::closed_principal: return Functor::T;
    case FilterClass::principal: return Functor::S0;
    case FilterClass::countably_based: return Functor::S1;
    case FilterClass::all: return Functor::S;
  }
  return Functor::I;
}

/// ↑K is compactoid when every filter meshing K has nonempty adherence.
inline bool compactoid_set(const Convergence& c, const std::vector<mask_t>& adh, mask_t k) {
  for (mask_t h : all_filter_bases(c.size()))
    if (meets(h, k) && adh[h] == 0) return false;
  return true;
}

/// Coreflectors, each from its filter-class definition:
///  Seq: x ∈ lim ↑F iff some sequential filter coarser than ↑F converges to x;
///  I1:  the same with countably based filters;
///  K:   lim ↑F survives iff ↑F contains a compactoid set.
inline Convergence apply_coreflector(Functor e, const Convergence& theta) {
  if (kind(e) != FunctorKind::coreflector)
    throw invalid_input(std::string(functor_name(e)) + " is not a coreflector");
  std::vector<mask_t> t(std::size_t{theta.full()} + 1, 0);
  if (e == Functor::K) {
    const auto adh = adherence_table(theta);
    for (mask_t f = 1; f <= theta.full(); ++f) {
      bool local = false;
      const mask_t rest = theta.full() & ~f;
      for (mask_t s = rest;; s = (s - 1) & rest) {
        if (compactoid_set(theta, adh, f | s)) {
          local = true;
          break;
        }
        if (s == 0) break;
      }
      t[f] = local ? theta.lim(f) : (cardinality(f) == 1 ? f : 0);
    }
  } else {
    // Sequential filters on a finite carrier are the cofinite filters (B/A)₀,
    // which are exactly the countably based ones; both lists coincide.
    const auto& cls = countably_based_filter_bases(theta.size());
    for (mask_t f = 1; f <= theta.full(); ++f)
      for (mask_t g : cls)
        if (subset_of(f, g)) t[f] |= theta.lim(g);
  }
  return {theta.carrier_ptr(), std::move(t)};
}

inline Convergence apply(Functor h, const Convergence& theta) {
  switch (kind(h)) {
    case FunctorKind::identity: return theta;
    case FunctorKind::reflector: return reflect(*reflector_class(h), theta);
    case FunctorKind::coreflector: return apply_coreflector(h, theta);
  }
  return theta;
}

inline bool is_topology(const Convergence& c) { return reflect(FilterClass::closed_principal, c) == c; }
inline bool is_pretopology(const Convergence& c) { return reflect(FilterClass::principal, c) == c; }

/// Fixed by S, cross-checked against lim ↑A = ⋂_{a∈A} lim ↑{a}.
inline bool is_pseudotopology(const Convergence& c) {
  const bool fixed = reflect(FilterClass::all, c) == c;
  bool formula = true;
  for (mask_t a = 1; a <= c.full() && formula; ++a) {
    mask_t l = c.full();
    for_each_point(a, [&](unsigned x) { l &= c.lim(point_mask(x)); });
    formula = l == c.lim(a);
  }
  check_internal(fixed == formula, "pseudotopology by S-fixed point vs ultrafilter formula");
  return fixed;
}

/// f ∈ C(ξ, τ): f(lim_ξ ↑A) ⊆ lim_τ ↑f(A) for every nonempty A.
inline bool continuous(const CarrierMap& f, const Convergence& xi, const Convergence& tau) {
  require_same_width(f.source_width(), xi.size());
  require_same_width(f.target_width(), tau.size());
  for (mask_t a = 1; a <= xi.full(); ++a)
    if (!subset_of(f.image(xi.lim(a)), tau.lim(f.image(a)))) return false;
  return true;
}

struct LawCheck {
  std::string law;
  std::size_t instances = 0;
  std::size_t failures = 0;
  std::string first_failure;
};

struct LawReport {
  Functor functor;
  std::vector<LawCheck> checks;
  bool passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const LawCheck& c) { return c.failures == 0; });
  }
};

namespace detail {

inline std::string table_string(const Convergence& c) {
  std::string s = "[";
  for (mask_t a = 1; a <= c.full(); ++a) s += (a > 1 ? "," : "") + std::to_string(c.lim(a));
  return s + "]";
}

inline void record(LawCheck& check, bool ok, const std::string& what) {
  ++check.instances;
  if (!ok && check.failures++ == 0) check.first_failure = what;
}

/// Every map from an n-point to an m-point carrier, images in odometer order.
inline std::vector<CarrierMap> maps_between(unsigned n, unsigned m) {
  std::vector<CarrierMap> out;
  std::vector<unsigned> im(n, 0);
  for (;;) {
    out.emplace_back(m, im);
    unsigned i = n;
    while (i > 0 && ++im[i - 1] == m) im[--i] = 0;
    if (i == 0) break;
  }
  return out;
}

}  // namespace detail

/// Checks the laws of h on each pair (ζ, ξ): isotone when both share a
/// carrier, idempotent and contractive (reflectors) or expansive
/// (coreflectors) on each member, and functorial over every map |ζ| → |ξ|.
inline LawReport check_functor_laws(Functor h, std::span<const std::pair<Convergence, Convergence>> pairs) {
  LawReport rep{h, {{"isotone"}, {"idempotent"}, {kind(h) == FunctorKind::coreflector ? "expansive" : "contractive"}, {"functorial"}}};
  auto& iso = rep.checks[0];
  auto& idem = rep.checks[1];
  auto& order = rep.checks[2];
  auto& func = rep.checks[3];
  for (const auto& [zeta, xi] : pairs) {
    const Convergence hz = apply(h, zeta), hx = apply(h, xi);
    for (const auto* p : {&zeta, &xi}) {
      const Convergence& c = *p;
      const Convergence& hc = p == &zeta ? hz : hx;
      detail::record(idem, apply(h, hc) == hc, detail::table_string(c));
      const bool ok = kind(h) == FunctorKind::coreflector ? finer(hc, c) : finer(c, hc);
      detail::record(order, ok, detail::table_string(c));
    }
    if (zeta.size() == xi.size() && finer(zeta, xi))
      detail::record(iso, finer(hz, hx), detail::table_string(zeta) + " >= " + detail::table_string(xi));
    if (zeta.size() <= 4 && xi.size() <= 4) {
      for (const auto& f : detail::maps_between(zeta.size(), xi.size())) {
        if (!continuous(f, zeta, xi)) continue;
        detail::record(func, continuous(f, hz, hx),
                       detail::table_string(zeta) + " -> " + detail::table_string(xi));
      }
    }
  }
  return rep;
}

/// All ordered pairs of samples.
inline LawReport check_functor_laws(Functor h, std::span<const Convergence> samples) {
  std::vector<std::pair<Convergence, Convergence>> pairs;
  for (const auto& a : samples)
    for (const auto& b : samples) pairs.emplace_back(a, b);
  return check_functor_laws(h, std::span<const std::pair<Convergence, Convergence>>(pairs));
}

}  // namespace finconv
