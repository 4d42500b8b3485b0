#pragma once

#include <optional>
#include <string>
#include <vector>

#include "functor.hpp"

namespace finconv {

/// A map f : |ξ| → |τ| together with both convergences.
struct MapContext {
  CarrierMap map;
  Convergence source;
  Convergence target;

  MapContext(CarrierMap f, Convergence xi, Convergence tau)
      : map(std::move(f)), source(std::move(xi)), target(std::move(tau)) {
    require_same_width(map.source_width(), source.size());
    require_same_width(map.target_width(), target.size());
  }
};

inline bool continuous(const MapContext& ctx) { return continuous(ctx.map, ctx.source, ctx.target); }

/// f⁻τ on the source carrier: x ∈ lim ↑A iff f(x) ∈ lim_τ ↑f(A). Any map works.
inline Convergence initial_convergence(const CarrierMap& f, const Convergence& tau,
                                       std::shared_ptr<const Carrier> source_carrier) {
  require_same_width(f.target_width(), tau.size());
  require_same_width(f.source_width(), source_carrier->size());
  std::vector<mask_t> t(std::size_t{source_carrier->full()} + 1, 0);
  for (mask_t a = 1; a <= source_carrier->full(); ++a) t[a] = f.preimage(tau.lim(f.image(a)));
  return {std::move(source_carrier), std::move(t)};
}

inline Convergence initial_convergence(const MapContext& ctx) {
  return initial_convergence(ctx.map, ctx.target, ctx.source.carrier_ptr());
}

/// fξ, the finest convergence making f continuous. Each image f[↑A] = ↑f(A)
/// must converge to f(lim_ξ ↑A); the table is the least antitone table
/// meeting those demands: lim ↑B = ⋃{demand(C) : C ⊇ B}.
inline Convergence final_convergence(const CarrierMap& f, const Convergence& xi,
                                     std::shared_ptr<const Carrier> target_carrier) {
  require_same_width(f.source_width(), xi.size());
  require_same_width(f.target_width(), target_carrier->size());
  if (!f.is_surjective()) throw not_surjective();
  const unsigned m = target_carrier->size();
  std::vector<mask_t> t(std::size_t{target_carrier->full()} + 1, 0);
  for (mask_t a = 1; a <= xi.full(); ++a) t[f.image(a)] |= f.image(xi.lim(a));
  for (unsigned bit = 0; bit < m; ++bit)
    for (mask_t c = 1; c <= target_carrier->full(); ++c)
      if (!has_point(c, bit)) t[c] |= t[c | point_mask(bit)];
  t[0] = 0;
  return {std::move(target_carrier), std::move(t)};
}

inline Convergence final_convergence(const MapContext& ctx) {
  return final_convergence(ctx.map, ctx.source, ctx.target.carrier_ptr());
}

inline void require_surjective(const MapContext& ctx) {
  if (!ctx.map.is_surjective()) throw not_surjective();
}

namespace detail {

/// Quantities shared by the classification tests of one map.
struct MapTables {
  const MapContext& ctx;
  Convergence fxi;
  std::vector<mask_t> adh_source, adh_target;

  explicit MapTables(const MapContext& c)
      : ctx(c),
        fxi(final_convergence(c)),
        adh_source(adherence_table(c.source)),
        adh_target(adherence_table(c.target)) {}

  /// Class filters on the target for the quotient tests; closedness is taken in fξ.
  std::vector<mask_t> target_class(FilterClass cls) const { return class_filter_bases(cls, fxi); }

  /// Class filters on the source for the quotient cover test: for the closed
  /// class, the saturated ξ-closed sets f⁻(H) with H closed in fξ.
  std::vector<mask_t> saturated_source_class(FilterClass cls) const {
    if (cls != FilterClass::closed_principal) return class_filter_bases(cls, ctx.source);
    std::vector<mask_t> out;
    for (mask_t h : target_class(cls)) out.push_back(ctx.map.preimage(h));
    return out;
  }

  /// The first H violating adh_τ H ⊆ f(adh_ξ f⁻H), with the offending point.
  std::optional<std::pair<mask_t, unsigned>> quotient_violation(FilterClass cls) const {
    for (mask_t h : target_class(cls)) {
      const mask_t bad = adh_target[h] & ~ctx.map.image(adh_source[ctx.map.preimage(h)]);
      if (bad) return std::pair{h, lowest_point(bad)};
    }
    return std::nullopt;
  }

  bool quotient_by_reflector(FilterClass cls) const { return finer(ctx.target, reflect(cls, fxi)); }

  /// For 𝒬 = {Q : Q ∩ C = ∅} with 𝒬_c = ↑C in the class:
  /// f⁻(y) ⊆ inh_ξ 𝒬 ⟹ y ∈ inh_τ f[𝒬].
  bool quotient_by_covers(FilterClass cls) const {
    const unsigned n = ctx.source.size();
    for (mask_t c : saturated_source_class(cls)) {
      const mask_t rest = ctx.source.full() & ~c;
      std::vector<mask_t> q;
      for (mask_t s = rest;; s = (s - 1) & rest) {
        q.push_back(s);
        if (s == 0) break;
      }
      const SetFamily fam(n, std::move(q));
      const mask_t inh_src = inherence(ctx.source, fam).bits();
      const mask_t inh_tgt = inherence(ctx.target, image_family(ctx.map, fam)).bits();
      for (unsigned y = 0; y < ctx.target.size(); ++y)
        if (subset_of(ctx.map.fiber(y), inh_src) && !has_point(inh_tgt, y)) return false;
    }
    return true;
  }

  /// The first class set G violating adh_τ f(G) ⊆ f(adh_ξ G).
  std::optional<std::pair<mask_t, unsigned>> perfect_violation(FilterClass cls) const {
    for (mask_t g : class_filter_bases(cls, ctx.source)) {
      const mask_t bad = adh_target[ctx.map.image(g)] & ~ctx.map.image(adh_source[g]);
      if (bad) return std::pair{g, lowest_point(bad)};
    }
    return std::nullopt;
  }

  /// For 𝒫 = {P : P ∩ G = ∅} with 𝒫_c = ↑G in the class:
  /// f⁻(y) ⊆ inh_ξ 𝒫 ⟹ y ∈ inh_τ f_#[𝒫], where f_#(P) = Y ∖ f(X ∖ P).
  bool perfect_by_covers(FilterClass cls) const {
    const unsigned n = ctx.source.size(), m = ctx.target.size();
    for (mask_t g : class_filter_bases(cls, ctx.source)) {
      const mask_t rest = ctx.source.full() & ~g;
      std::vector<mask_t> p, small;
      for (mask_t s = rest;; s = (s - 1) & rest) {
        p.push_back(s);
        small.push_back(ctx.map.small_image(s));
        if (s == 0) break;
      }
      const mask_t inh_src = inherence(ctx.source, SetFamily(n, std::move(p))).bits();
      const mask_t inh_tgt = inherence(ctx.target, SetFamily(m, std::move(small))).bits();
      for (unsigned y = 0; y < m; ++y)
        if (subset_of(ctx.map.fiber(y), inh_src) && !has_point(inh_tgt, y)) return false;
    }
    return true;
  }

  /// reach[B] = ⋃{lim_ξ ↑A : f(A) = B}.
  std::vector<mask_t> reach() const {
    std::vector<mask_t> r(std::size_t{ctx.target.full()} + 1, 0);
    for (mask_t a = 1; a <= ctx.source.full(); ++a) r[ctx.map.image(a)] |= ctx.source.lim(a);
    return r;
  }
};

}  // namespace detail

/// The three characterizations of the quotient-like class of a filter class.
struct QuotientForms {
  bool adherence;  // adh_τ H ⊆ f(adh_ξ f⁻H) for class filters H on the target
  bool reflector;  // τ ≥ H(fξ)
  bool cover;      // images of covers, over class families on the source
  bool agree() const { return adherence == reflector && reflector == cover; }
};

inline QuotientForms quotient_forms(const MapContext& ctx, FilterClass cls) {
  require_surjective(ctx);
  const detail::MapTables t(ctx);
  return {!t.quotient_violation(cls), t.quotient_by_reflector(cls), t.quotient_by_covers(cls)};
}

inline bool is_quotient_like(const MapContext& ctx, FilterClass cls) {
  const auto f = quotient_forms(ctx, cls);
  check_internal(f.agree(), "quotient characterizations");
  return f.adherence;
}

struct PerfectForms {
  bool adherence;  // adh_τ f(G) ⊆ f(adh_ξ G) for class filters G on the source
  bool cover;      // small images of covers
  bool agree() const { return adherence == cover; }
};

inline PerfectForms perfect_forms(const MapContext& ctx, FilterClass cls) {
  require_surjective(ctx);
  const detail::MapTables t(ctx);
  return {!t.perfect_violation(cls), t.perfect_by_covers(cls)};
}

inline bool is_perfect_like(const MapContext& ctx, FilterClass cls) {
  const auto f = perfect_forms(ctx, cls);
  check_internal(f.agree(), "perfect characterizations");
  return f.adherence;
}

/// Filter form: for y ∈ lim_τ ↑B and every x ∈ f⁻(y) some A with f(A) = B has x ∈ lim_ξ ↑A.
inline bool is_open_map(const MapContext& ctx) {
  require_surjective(ctx);
  const auto reach = detail::MapTables(ctx).reach();
  for (mask_t b = 1; b <= ctx.target.full(); ++b) {
    bool ok = true;
    for_each_point(ctx.target.lim(b), [&](unsigned y) { ok = ok && subset_of(ctx.map.fiber(y), reach[b]); });
    if (!ok) return false;
  }
  return true;
}

/// Open-set form: f(O) is τ-open for every ξ-open O. Matches the filter
/// form when ξ is a topology.
inline bool maps_open_sets_to_open_sets(const MapContext& ctx) {
  for (mask_t o : open_masks(ctx.source))
    if (!is_open(ctx.target, Subset(ctx.target.size(), ctx.map.image(o)))) return false;
  return true;
}

/// Images of ξ-closed sets are τ-closed.
inline bool maps_closed_sets_to_closed_sets(const MapContext& ctx) {
  for (mask_t c : closed_masks(ctx.source))
    if (!is_closed(ctx.target, Subset(ctx.target.size(), ctx.map.image(c)))) return false;
  return true;
}

/// Filter form with "some x ∈ f⁻(y)"; cross-checked against τ ≥ fξ.
inline bool is_almost_open(const MapContext& ctx) {
  require_surjective(ctx);
  const detail::MapTables t(ctx);
  const auto reach = t.reach();
  bool ok = true;
  for (mask_t b = 1; b <= ctx.target.full() && ok; ++b)
    for_each_point(ctx.target.lim(b), [&](unsigned y) { ok = ok && meets(ctx.map.fiber(y), reach[b]); });
  check_internal(ok == finer(ctx.target, t.fxi), "almost open by filters vs tau >= f xi");
  return ok;
}

/// R is graph-closed at w: adh_σ R(A) ⊆ R(w) whenever w ∈ lim_θ ↑A.
inline bool graph_closed_at(const FiniteRelation& r, const Convergence& theta, const Convergence& sigma, unsigned w) {
  require_same_width(r.source_width(), theta.size());
  require_same_width(r.target_width(), sigma.size());
  const auto adh = adherence_table(sigma);
  for (mask_t a = 1; a <= theta.full(); ++a)
    if (has_point(theta.lim(a), w) && !subset_of(adh[r.image(a)], r.row(w))) return false;
  return true;
}

inline bool graph_closed(const FiniteRelation& r, const Convergence& theta, const Convergence& sigma) {
  for (unsigned w = 0; w < theta.size(); ++w)
    if (!graph_closed_at(r, theta, sigma, w)) return false;
  return true;
}

/// R as a subset of the product carrier, closed in the product convergence.
inline bool closed_in_product(const FiniteRelation& r, const Convergence& theta, const Convergence& sigma) {
  require_same_width(r.source_width(), theta.size());
  require_same_width(r.target_width(), sigma.size());
  const Convergence prod = product(theta, sigma);
  mask_t graph = 0;
  for (unsigned w = 0; w < theta.size(); ++w)
    for_each_point(r.row(w), [&](unsigned z) { graph |= point_mask(product_index(w, z, sigma.size())); });
  return is_closed(prod, Subset(prod.size(), graph));
}

struct ClassificationReport {
  bool continuous = false;
  bool open = false;
  bool almost_open = false;
  bool biquotient = false;
  bool countably_biquotient = false;
  bool hereditarily_quotient = false;
  bool quotient = false;
  bool perfect = false;
  bool countably_perfect = false;
  bool adherent = false;
  bool closed = false;
  bool graph_closed = false;

  bool operator==(const ClassificationReport&) const = default;
};

/// Field name and member pointer for every flag, in report order.
inline const std::vector<std::pair<std::string, bool ClassificationReport::*>>& report_fields() {
  using R = ClassificationReport;
  static const std::vector<std::pair<std::string, bool R::*>> f = {
      {"continuous", &R::continuous},
      {"open", &R::open},
      {"almost_open", &R::almost_open},
      {"biquotient", &R::biquotient},
      {"countably_biquotient", &R::countably_biquotient},
      {"hereditarily_quotient", &R::hereditarily_quotient},
      {"quotient", &R::quotient},
      {"perfect", &R::perfect},
      {"countably_perfect", &R::countably_perfect},
      {"adherent", &R::adherent},
      {"closed", &R::closed},
      {"graph_closed", &R::graph_closed},
  };
  return f;
}

struct Implication {
  std::string premise;
  std::string conclusion;
};

/// The arrows every report must satisfy: both ladders and the
/// perfect-like ⟹ quotient-like rungs.
inline const std::vector<Implication>& report_implications() {
  static const std::vector<Implication> arrows = {
      {"open", "almost_open"},
      {"almost_open", "biquotient"},
      {"biquotient", "countably_biquotient"},
      {"countably_biquotient", "hereditarily_quotient"},
      {"hereditarily_quotient", "quotient"},
      {"perfect", "countably_perfect"},
      {"countably_perfect", "adherent"},
      {"adherent", "closed"},
      {"perfect", "biquotient"},
      {"countably_perfect", "countably_biquotient"},
      {"adherent", "hereditarily_quotient"},
      {"closed", "quotient"},
  };
  return arrows;
}

inline bool report_flag(const ClassificationReport& r, const std::string& name) {
  for (const auto& [n, p] : report_fields())
    if (n == name) return r.*p;
  throw invalid_input("unknown report flag '" + name + "'");
}

inline std::vector<Implication> implication_violations(const ClassificationReport& r) {
  std::vector<Implication> out;
  for (const auto& i : report_implications())
    if (report_flag(r, i.premise) && !report_flag(r, i.conclusion)) out.push_back(i);
  return out;
}

/// The full flag vector. Every quotient and perfect flag is computed through
/// all of its characterizations, which must agree; the implication arrows
/// and the finite-carrier coincidences biquotient = countably biquotient =
/// hereditarily quotient and perfect = countably perfect = adherent are
/// asserted.
inline ClassificationReport classify(const MapContext& ctx) {
  require_surjective(ctx);
  const detail::MapTables t(ctx);
  auto quotient = [&](FilterClass cls) {
    const QuotientForms f{!t.quotient_violation(cls), t.quotient_by_reflector(cls), t.quotient_by_covers(cls)};
    check_internal(f.agree(), "quotient characterizations");
    return f.adherence;
  };
  auto perfect = [&](FilterClass cls) {
    const PerfectForms f{!t.perfect_violation(cls), t.perfect_by_covers(cls)};
    check_internal(f.agree(), "perfect characterizations");
    return f.adherence;
  };
  ClassificationReport r;
  r.continuous = continuous(ctx);
  r.open = is_open_map(ctx);
  r.almost_open = is_almost_open(ctx);
  r.biquotient = quotient(FilterClass::all);
  r.countably_biquotient = quotient(FilterClass::countably_based);
  r.hereditarily_quotient = quotient(FilterClass::principal);
  r.quotient = quotient(FilterClass::closed_principal);
  r.perfect = perfect(FilterClass::all);
  r.countably_perfect = perfect(FilterClass::countably_based);
  r.adherent = perfect(FilterClass::principal);
  r.closed = perfect(FilterClass::closed_principal);
  r.graph_closed = graph_closed(ctx.map.as_relation(), ctx.source, ctx.target);
  check_internal(implication_violations(r).empty(), "classification implication lattice");
  check_internal(r.biquotient == r.countably_biquotient && r.countably_biquotient == r.hereditarily_quotient,
                 "finite collapse of the biquotient ladder");
  check_internal(r.perfect == r.countably_perfect && r.countably_perfect == r.adherent,
                 "finite collapse of the perfect ladder");
  return r;
}

/// A violating instance for one false flag. Sets and points refer to the
/// carrier named by `side` ("source" or "target"); `point` lies on the
/// target unless noted by `source_point`.
struct MapWitness {
  std::string flag;
  std::string side;
  mask_t set = 0;
  std::optional<unsigned> target_point;
  std::optional<unsigned> source_point;
};

inline std::vector<MapWitness> find_witnesses(const MapContext& ctx, const ClassificationReport& r) {
  require_surjective(ctx);
  const detail::MapTables t(ctx);
  std::vector<MapWitness> out;
  if (!r.continuous)
    for (mask_t a = 1; a <= ctx.source.full(); ++a) {
      const mask_t bad = ctx.map.image(ctx.source.lim(a)) & ~ctx.target.lim(ctx.map.image(a));
      if (bad) {
        out.push_back({"continuous", "source", a, lowest_point(bad), std::nullopt});
        break;
      }
    }
  const auto reach = t.reach();
  auto filter_form = [&](const std::string& flag, bool every) {
    for (mask_t b = 1; b <= ctx.target.full(); ++b) {
      for (unsigned y = 0; y < ctx.target.size(); ++y) {
        if (!has_point(ctx.target.lim(b), y)) continue;
        const mask_t missing = ctx.map.fiber(y) & ~reach[b];
        if (every ? missing != 0 : missing == ctx.map.fiber(y)) {
          out.push_back({flag, "target", b, y, lowest_point(missing)});
          return;
        }
      }
    }
  };
  if (!r.open) filter_form("open", true);
  if (!r.almost_open) filter_form("almost_open", false);
  const std::pair<const char*, FilterClass> quotients[] = {{"biquotient", FilterClass::all},
                                                           {"countably_biquotient", FilterClass::countably_based},
                                                           {"hereditarily_quotient", FilterClass::principal},
                                                           {"quotient", FilterClass::closed_principal}};
  for (const auto& [flag, cls] : quotients)
    if (!report_flag(r, flag))
      if (auto v = t.quotient_violation(cls)) out.push_back({flag, "target", v->first, v->second, std::nullopt});
  const std::pair<const char*, FilterClass> perfects[] = {{"perfect", FilterClass::all},
                                                          {"countably_perfect", FilterClass::countably_based},
                                                          {"adherent", FilterClass::principal},
                                                          {"closed", FilterClass::closed_principal}};
  for (const auto& [flag, cls] : perfects)
    if (!report_flag(r, flag))
      if (auto v = t.perfect_violation(cls)) out.push_back({flag, "source", v->first, v->second, std::nullopt});
  if (!r.graph_closed) {
    const auto adh = adherence_table(ctx.target);
    [&] {
      for (unsigned w = 0; w < ctx.source.size(); ++w)
        for (mask_t a = 1; a <= ctx.source.full(); ++a) {
          const mask_t bad = adh[ctx.map.image(a)] & ~point_mask(ctx.map(w));
          if (has_point(ctx.source.lim(a), w) && bad) {
            out.push_back({"graph_closed", "source", a, lowest_point(bad), w});
            return;
          }
        }
    }();
  }
  return out;
}

/// ξ ≥ J(Eξ), cross-checked against "the identity Eξ → ξ is J-quotient".
inline bool is_JE(const Convergence& xi, Functor j, Functor e) {
  if (kind(j) == FunctorKind::coreflector) throw invalid_input(std::string(functor_name(j)) + " is not a reflector");
  if (kind(e) == FunctorKind::reflector) throw invalid_input(std::string(functor_name(e)) + " is not a coreflector");
  const Convergence ex = apply(e, xi);
  const bool by_inequality = finer(xi, apply(j, ex));
  const MapContext id(CarrierMap::identity(xi.size()), ex, xi);
  const bool by_quotient = kind(j) == FunctorKind::identity ? is_almost_open(id) : is_quotient_like(id, *reflector_class(j));
  check_internal(by_inequality == by_quotient, "JE inequality vs identity quotient");
  return by_inequality;
}

/// J-quotient for a reflector J; almost open for J = I.
inline bool is_J_quotient(const MapContext& ctx, Functor j) {
  if (kind(j) == FunctorKind::identity) return is_almost_open(ctx);
  if (kind(j) != FunctorKind::reflector) throw invalid_input(std::string(functor_name(j)) + " is not a reflector");
  return is_quotient_like(ctx, *reflector_class(j));
}

struct PreservationReport {
  bool source_JE = false;
  bool j_quotient = false;
  bool target_JE = false;
  bool holds() const { return !(source_JE && j_quotient) || target_JE; }
};

/// ξ JE and f a continuous J-quotient surjection ⟹ τ JE.
inline PreservationReport check_preservation(const MapContext& ctx, Functor j, Functor e) {
  require_surjective(ctx);
  if (!continuous(ctx)) throw invalid_input("preservation check needs a continuous map");
  return {is_JE(ctx.source, j, e), is_J_quotient(ctx, j), is_JE(ctx.target, j, e)};
}

struct ContinuityForms {
  bool by_reflection = false;  // f ∈ C(Jξ, Jτ)
  bool by_preimage = false;    // adh_ξ f⁻[ℋ] ⊆ f⁻(adh_τ ℋ) for class ℋ on the target
  bool by_image = false;       // f(adh_ξ 𝒢) ⊆ adh_τ f[𝒢] for class 𝒢 on the source
  bool agree() const { return by_reflection == by_preimage && by_preimage == by_image; }
};

/// Continuity between the J-reflections through three characterizations.
/// The closed class is read through closures: a closed principal filter is
/// its own adherence, so its adherence form says nothing.
inline ContinuityForms continuity_forms(const MapContext& ctx, FilterClass cls) {
  const auto& f = ctx.map;
  ContinuityForms out;
  out.by_reflection = continuous(f, reflect(cls, ctx.source), reflect(cls, ctx.target));
  out.by_preimage = out.by_image = true;
  if (cls == FilterClass::closed_principal) {
    for (mask_t b = 0; b <= ctx.target.full() && out.by_preimage; ++b)
      out.by_preimage = subset_of(closure_mask(ctx.source, f.preimage(b)), f.preimage(closure_mask(ctx.target, b)));
    for (mask_t a = 0; a <= ctx.source.full() && out.by_image; ++a)
      out.by_image = subset_of(f.image(closure_mask(ctx.source, a)), closure_mask(ctx.target, f.image(a)));
    return out;
  }
  const auto adh_xi = adherence_table(ctx.source), adh_tau = adherence_table(ctx.target);
  for (mask_t h : class_filter_bases(cls, ctx.target))
    if (!subset_of(adh_xi[f.preimage(h)], f.preimage(adh_tau[h]))) {
      out.by_preimage = false;
      break;
    }
  for (mask_t g : class_filter_bases(cls, ctx.source))
    if (!subset_of(f.image(adh_xi[g]), adh_tau[f.image(g)])) {
      out.by_image = false;
      break;
    }
  return out;
}

}  // namespace finconv
