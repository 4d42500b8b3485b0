#pragma once

// Exhaustive theorem sweeps over small carriers, and the two implication
// tables rebuilt from classification runs.

#include <chrono>
#include <map>
#include <set>
#include <sstream>

#include "cofinite.hpp"
#include "enumerate.hpp"

namespace finconv {

struct SuiteResult {
  std::string name;
  std::uint64_t instances = 0;
  std::uint64_t failures = 0;
  std::string first_failure;
  double seconds = 0;
  bool passed() const { return failures == 0; }

  void check(bool ok, const std::function<std::string()>& describe) {
    ++instances;
    if (!ok && failures++ == 0) first_failure = describe();
  }
  void absorb(const SuiteResult& o) {
    if (failures == 0 && o.failures > 0) first_failure = o.first_failure;
    instances += o.instances;
    failures += o.failures;
  }
};

namespace laws_detail {

inline std::string conv(const Convergence& c) { return detail::table_string(c); }

inline std::string map_string(const CarrierMap& f) {
  std::string s = "(";
  for (unsigned x = 0; x < f.source_width(); ++x) s += (x ? "," : "") + std::to_string(f(x));
  return s + ")";
}

inline std::string ctx_string(const MapContext& c) {
  return "f=" + map_string(c.map) + " xi=" + conv(c.source) + " tau=" + conv(c.target);
}

/// Splits [0,total) across workers and merges per-chunk results in chunk order.
template <class Body>
SuiteResult sweep(const std::string& name, std::size_t total, unsigned workers, Body body) {
  const auto start = std::chrono::steady_clock::now();
  std::map<std::size_t, SuiteResult> parts;
  std::mutex lock;
  parallel_chunks(total, workers, [&](std::size_t b, std::size_t e) {
    SuiteResult local{name};
    for (std::size_t i = b; i < e; ++i) body(i, local);
    std::lock_guard g(lock);
    parts[b] = std::move(local);
  });
  SuiteResult out{name};
  for (const auto& [b, r] : parts) out.absorb(r);
  out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

/// (source size, target size) pairs with 1 ≤ t ≤ s ≤ n.
inline std::vector<std::pair<unsigned, unsigned>> size_pairs(unsigned n) {
  std::vector<std::pair<unsigned, unsigned>> out;
  for (unsigned s = 1; s <= n; ++s)
    for (unsigned t = 1; t <= s; ++t) out.emplace_back(s, t);
  return out;
}

/// size_pairs without 3 → 3: its 7.5M convergence pairs are swept only by
/// the lean suites (compact maps, bijections).
inline std::vector<std::pair<unsigned, unsigned>> full_check_pairs(unsigned n) {
  auto out = size_pairs(n);
  std::erase_if(out, [](const auto& p) { return p.first == p.second && p.first >= 3; });
  return out;
}

/// Calls body(ctx) for every surjection s → t and every convergence pair.
/// Bijections onto an equal-size carrier are covered by the identity alone:
/// relabeling the source along a bijection preserves every property checked.
template <class Body>
SuiteResult map_sweep(const std::string& name, const std::vector<std::pair<unsigned, unsigned>>& sizes,
                      unsigned workers, Body body) {
  SuiteResult out{name};
  const auto start = std::chrono::steady_clock::now();
  for (const auto& [s, t] : sizes) {
    const auto maps = s == t ? std::vector<CarrierMap>{CarrierMap::identity(s)} : surjections(s, t);
    const auto& src = universe(s);
    const auto& tgt = universe(t);
    const std::size_t per_map = src.size() * tgt.size();
    out.absorb(sweep(name, maps.size() * per_map, workers, [&](std::size_t i, SuiteResult& r) {
      const std::size_t m = i / per_map, k = i % per_map;
      body(MapContext(maps[m], src[k / tgt.size()], tgt[k % tgt.size()]), r);
    }));
  }
  out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

/// Deterministic random pairs from a universe.
inline std::vector<std::pair<std::size_t, std::size_t>> sample_pairs(std::size_t universe_size, std::size_t count,
                                                                     std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, universe_size - 1);
  std::vector<std::pair<std::size_t, std::size_t>> out(count);
  for (auto& p : out) p = {pick(rng), pick(rng)};
  return out;
}

inline std::vector<SetFamily> all_families(unsigned n) {
  std::vector<SetFamily> out;
  const std::size_t subsets = full_mask(n);
  for (std::uint64_t code = 1; code < (std::uint64_t{1} << subsets); ++code) {
    std::vector<mask_t> m;
    for (std::size_t i = 0; i < subsets; ++i)
      if ((code >> i) & 1u) m.push_back(static_cast<mask_t>(i + 1));
    out.emplace_back(n, std::move(m));
  }
  return out;
}

inline std::vector<FiniteRelation> all_relations(unsigned n, unsigned m) {
  std::vector<FiniteRelation> out;
  const unsigned bits = n * m;
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << bits); ++code) {
    std::vector<mask_t> rows(n);
    for (unsigned w = 0; w < n; ++w) rows[w] = static_cast<mask_t>((code >> (w * m)) & full_mask(m));
    out.emplace_back(n, m, std::move(rows));
  }
  return out;
}

}  // namespace laws_detail

// ---------------------------------------------------------------------------
// Suites

/// sup and inf are convergences and form a lattice; lim of the sup is the
/// intersection of limits and lim of the inf the union. Triples are
/// exhaustive up to `exhaustive_n`; `samples` random triples at size 3.
inline SuiteResult suite_lattice(unsigned exhaustive_n, std::size_t samples, std::uint64_t seed, unsigned workers) {
  using laws_detail::conv;
  SuiteResult out{"lattice"};
  const auto start = std::chrono::steady_clock::now();
  auto body = [](const Convergence& a, const Convergence& b, const Convergence& c, SuiteResult& r) {
    const auto ab = sup(a, b), iab = inf(a, b);
    bool formula = true;
    for (mask_t s = 1; s <= a.full(); ++s)
      formula = formula && ab.lim(s) == (a.lim(s) & b.lim(s)) && iab.lim(s) == (a.lim(s) | b.lim(s));
    auto d = [&] { return conv(a) + " " + conv(b) + " " + conv(c); };
    r.check(formula, d);
    r.check(ab == sup(b, a) && iab == inf(b, a), d);
    r.check(sup(ab, c) == sup(a, sup(b, c)) && inf(iab, c) == inf(a, inf(b, c)), d);
    r.check(sup(a, inf(a, b)) == a && inf(a, sup(a, b)) == a, d);
    r.check(sup(a, a) == a && inf(a, a) == a, d);
    r.check(finer(ab, a) && finer(ab, b) && finer(a, iab) && finer(b, iab), d);
    const std::vector<Convergence> list{a, b, c};
    r.check(sup(std::span<const Convergence>(list)) == sup(ab, c), d);
  };
  for (unsigned n = 1; n <= std::min(exhaustive_n, 2u); ++n) {
    const auto& u = universe(n);
    const std::size_t k = u.size();
    out.absorb(laws_detail::sweep("lattice", k * k * k, workers, [&](std::size_t i, SuiteResult& r) {
      body(u[i / (k * k)], u[(i / k) % k], u[i % k], r);
    }));
  }
  if (samples > 0) {
    const auto& u = universe(3);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, u.size() - 1);
    std::vector<std::array<std::size_t, 3>> triples(samples);
    for (auto& t : triples) t = {pick(rng), pick(rng), pick(rng)};
    out.absorb(laws_detail::sweep("lattice", samples, workers, [&](std::size_t i, SuiteResult& r) {
      body(u[triples[i][0]], u[triples[i][1]], u[triples[i][2]], r);
    }));
  }
  out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

/// Grill involution on isotone families, mesh duality, principal round trips.
inline SuiteResult suite_family_algebra(unsigned n) {
  SuiteResult r{"family algebra"};
  for (unsigned k = 1; k <= std::min(n, 3u); ++k) {
    const auto fams = laws_detail::all_families(k);
    for (const auto& f : fams) {
      const auto iso = isotonize(f);
      r.check(grill(grill(iso)) == iso, [&] { return "grill involution, family of width " + std::to_string(k); });
    }
    for (const auto& a : fams)
      for (const auto& b : fams) {
        const bool m = mesh(a, b);
        r.check(m == coarser(b, grill(a)) && m == coarser(a, grill(b)),
                [&] { return "mesh duality, width " + std::to_string(k); });
      }
    for (mask_t base = 1; base <= full_mask(k); ++base) {
      const auto f = FiniteFilter::principal(k, base);
      r.check(FiniteFilter::from_members(f.members()).base() == base, [&] { return "principal round trip"; });
    }
  }
  return r;
}

/// f[𝒜] # ℬ ⟺ 𝒜 # f⁻[ℬ] for relations, and the map test for relations.
inline SuiteResult suite_relations(unsigned n) {
  SuiteResult r{"relations"};
  const unsigned k = std::min(n, 2u);
  for (unsigned s = 1; s <= k; ++s)
    for (unsigned t = 1; t <= k; ++t) {
      const auto fa = laws_detail::all_families(s), fb = laws_detail::all_families(t);
      for (const auto& rel : laws_detail::all_relations(s, t)) {
        for (const auto& a : fa)
          for (const auto& b : fb)
            r.check(mesh(rel_image_family(rel, a), b) == mesh(a, rel_preimage_family(rel, b)),
                    [&] { return "grill duality"; });
        bool is_function = true;
        for (unsigned w = 0; w < s; ++w) is_function = is_function && cardinality(rel.row(w)) == 1;
        r.check(rel.is_map() == is_function, [&] { return "relation map test"; });
        r.check(rel.inverse().inverse().row(0) == rel.row(0), [&] { return "double inverse"; });
      }
    }
  return r;
}

/// f⁻[f[𝒢]] ≤ 𝒢 and f[f⁻[ℋ]] = ℋ for surjections and principal filters.
inline SuiteResult suite_filter_images(unsigned n) {
  SuiteResult r{"filter images"};
  for (const auto& [s, t] : laws_detail::size_pairs(n))
    for (const auto& f : surjections(s, t)) {
      for (mask_t g = 1; g <= full_mask(s); ++g) {
        const SetFamily gf = FiniteFilter::principal(s, g).members();
        r.check(coarser(preimage_family(f, image_family(f, gf)), gf),
                [&] { return "f-f- on " + laws_detail::map_string(f); });
      }
      for (mask_t h = 1; h <= full_mask(t); ++h) {
        const SetFamily hf = FiniteFilter::principal(t, h).members();
        r.check(isotonize(image_family(f, preimage_family(f, hf))) == hf,
                [&] { return "ff- on " + laws_detail::map_string(f); });
      }
    }
  return r;
}

/// Three characterizations of covers agree.
inline SuiteResult suite_cover_duality(unsigned exhaustive_n, std::size_t samples, std::uint64_t seed,
                                       unsigned workers) {
  SuiteResult out{"cover duality"};
  auto body = [](const Convergence& c, const SetFamily& fam, mask_t a, SuiteResult& r) {
    r.check(cover_forms(c, fam, Subset(c.size(), a)).agree(),
            [&] { return laws_detail::conv(c) + " A=" + std::to_string(a); });
  };
  for (unsigned n = 1; n <= std::min(exhaustive_n, 2u); ++n) {
    const auto& u = universe(n);
    const auto fams = laws_detail::all_families(n);
    const std::size_t subsets = std::size_t{full_mask(n)} + 1;
    out.absorb(laws_detail::sweep("cover duality", u.size() * fams.size() * subsets, workers,
                                  [&](std::size_t i, SuiteResult& r) {
                                    body(u[i / (fams.size() * subsets)], fams[(i / subsets) % fams.size()],
                                         static_cast<mask_t>(i % subsets), r);
                                  }));
  }
  if (samples > 0) {
    const auto& u = universe(3);
    const auto fams = laws_detail::all_families(3);
    std::mt19937_64 rng(seed);
    for (std::size_t i = 0; i < samples; ++i) {
      const auto& c = u[rng() % u.size()];
      const auto& fam = fams[rng() % fams.size()];
      body(c, fam, static_cast<mask_t>(rng() % 8), out);
    }
  }
  return out;
}

/// Open sets of Tθ by the principal-filter test; adherence inside closure,
/// with equality for topologies.
inline SuiteResult suite_open_sets(unsigned n) {
  SuiteResult r{"open sets and closures"};
  for (unsigned k = 1; k <= n; ++k)
    for (const auto& c : universe(k)) {
      const auto t = topologize(c);
      const auto opens = open_masks(t);
      for (mask_t a = 0; a <= c.full(); ++a) {
        bool lemma = true;
        for (mask_t h = 1; h <= c.full(); ++h)
          if (meets(a, t.lim(h)) && !subset_of(h, a)) lemma = false;
        const bool listed = std::binary_search(opens.begin(), opens.end(), a);
        r.check(lemma == listed, [&] { return laws_detail::conv(c) + " A=" + std::to_string(a); });
      }
      const bool topo = is_topology(c);
      const auto adh = adherence_table(c);
      for (mask_t a = 1; a <= c.full(); ++a) {
        const mask_t cl = closure_mask(c, a);
        r.check(subset_of(adh[a], cl) && (!topo || adh[a] == cl),
                [&] { return laws_detail::conv(c) + " A=" + std::to_string(a); });
      }
    }
  return r;
}

/// The three filter classes reflect identically and the coreflectors are
/// identities on finite carriers.
inline SuiteResult suite_finite_collapse(unsigned n) {
  SuiteResult r{"finite collapse"};
  for (unsigned k = 1; k <= n; ++k)
    for (const auto& c : universe(k)) {
      const auto s0 = reflect(FilterClass::principal, c);
      r.check(s0 == reflect(FilterClass::countably_based, c) && s0 == reflect(FilterClass::all, c),
              [&] { return "reflectors " + laws_detail::conv(c); });
      r.check(apply(Functor::Seq, c) == c && apply(Functor::I1, c) == c && apply(Functor::K, c) == c,
              [&] { return "coreflectors " + laws_detail::conv(c); });
    }
  return r;
}

/// T ≤ S₀ ≤ S₁ ≤ S ≤ identity, topologize = closed-class reflection, and
/// class adherences are unchanged by the reflection.
inline SuiteResult suite_reflector_order(unsigned n) {
  SuiteResult r{"reflector order"};
  for (unsigned k = 1; k <= n; ++k)
    for (const auto& c : universe(k)) {
      const auto t = apply(Functor::T, c), s0 = apply(Functor::S0, c), s1 = apply(Functor::S1, c),
                 s = apply(Functor::S, c);
      auto d = [&] { return laws_detail::conv(c); };
      r.check(finer(s0, t) && finer(s1, s0) && finer(s, s1) && finer(c, s), d);
      r.check(topologize(c) == t, d);
      for (auto cls : all_classes) {
        const auto h = reflect(cls, c);
        const auto adh_c = adherence_table(c), adh_h = adherence_table(h);
        bool same = true;
        for (mask_t b : class_filter_bases(cls, c)) same = same && adh_c[b] == adh_h[b];
        r.check(same, d);
      }
    }
  return r;
}

/// Isotone, idempotent, contractive/expansive and functorial, for every
/// functor: all pairs up to `exhaustive_n` (capped at 2) and `samples` random
/// pairs at size 3.
inline SuiteResult suite_functor_laws(unsigned exhaustive_n, std::size_t samples, std::uint64_t seed,
                                      unsigned workers, std::span<const Functor> functors = all_functors) {
  SuiteResult out{"functor laws"};
  const auto start = std::chrono::steady_clock::now();
  for (Functor h : functors) {
    auto absorb = [&](const LawReport& rep) {
      for (const auto& c : rep.checks) {
        SuiteResult part{"functor laws"};
        part.instances = c.instances;
        part.failures = c.failures;
        if (c.failures) part.first_failure = std::string(functor_name(h)) + " " + c.law + ": " + c.first_failure;
        out.absorb(part);
      }
    };
    for (unsigned n = 1; n <= std::min(exhaustive_n, 2u); ++n) {
      const auto& u = universe(n);
      absorb(check_functor_laws(h, std::span<const Convergence>(u)));
    }
    if (samples > 0) {
      const auto& u = universe(3);
      const auto picks = laws_detail::sample_pairs(u.size(), samples, seed);
      std::map<std::size_t, LawReport> parts;
      std::mutex lock;
      parallel_chunks(picks.size(), workers, [&](std::size_t b, std::size_t e) {
        std::vector<std::pair<Convergence, Convergence>> pairs;
        for (std::size_t i = b; i < e; ++i) pairs.emplace_back(u[picks[i].first], u[picks[i].second]);
        auto rep = check_functor_laws(h, std::span<const std::pair<Convergence, Convergence>>(pairs));
        std::lock_guard g(lock);
        parts.emplace(b, std::move(rep));
      });
      for (const auto& [b, rep] : parts) absorb(rep);
    }
  }
  out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

/// Continuity of the J-reflections by reflection, preimage and image forms,
/// for every class; for topological pairs every transferable class gives
/// plain continuity.
inline SuiteResult suite_continuity(const std::vector<std::pair<unsigned, unsigned>>& sizes, unsigned workers) {
  return laws_detail::map_sweep("continuity", sizes, workers, [](const MapContext& ctx, SuiteResult& r) {
    for (auto cls : all_classes)
      r.check(continuity_forms(ctx, cls).agree(),
              [&] { return std::string(class_name(cls)) + " " + laws_detail::ctx_string(ctx); });
    if (is_topology(ctx.source) && is_topology(ctx.target)) {
      const bool plain = continuous(ctx);
      for (auto cls : all_classes)
        if (transferable(cls))
          r.check(continuity_forms(ctx, cls).by_preimage == plain,
                  [&] { return "topological " + laws_detail::ctx_string(ctx); });
    }
  });
}

/// Classification: the quotient and perfect characterizations agree, the
/// implication arrows hold, and bijections are J-quotient exactly when
/// J-perfect. For topologies, quotient and closed match their set forms.
inline SuiteResult suite_classification(const std::vector<std::pair<unsigned, unsigned>>& sizes, unsigned workers) {
  return laws_detail::map_sweep("classification", sizes, workers, [](const MapContext& ctx, SuiteResult& r) {
    auto d = [&] { return laws_detail::ctx_string(ctx); };
    for (auto cls : all_classes) {
      r.check(quotient_forms(ctx, cls).agree(), d);
      r.check(perfect_forms(ctx, cls).agree(), d);
    }
    const auto rep = classify(ctx);
    r.check(implication_violations(rep).empty(), d);
    if (ctx.map.is_injective()) {
      r.check(rep.quotient == rep.closed && rep.hereditarily_quotient == rep.adherent &&
                  rep.countably_biquotient == rep.countably_perfect && rep.biquotient == rep.perfect,
              d);
    }
    if (is_topology(ctx.source) && is_topology(ctx.target)) {
      bool quotient_sets = true;
      for (mask_t b = 0; b <= ctx.target.full(); ++b)
        if (is_closed(ctx.source, Subset(ctx.source.size(), ctx.map.preimage(b))) &&
            !is_closed(ctx.target, Subset(ctx.target.size(), b)))
          quotient_sets = false;
      r.check(rep.quotient == quotient_sets, d);
      r.check(rep.closed == maps_closed_sets_to_closed_sets(ctx), d);
      r.check(rep.closed == rep.adherent && rep.adherent == rep.countably_perfect && rep.countably_perfect == rep.perfect,
              d);
    }
  });
}

/// ξ JE and f a continuous J-quotient surjection ⟹ τ JE, for J ∈ {T, S₀,
/// S₁, S} and E ∈ {Seq, I₁, K}.
inline SuiteResult suite_preservation(const std::vector<std::pair<unsigned, unsigned>>& sizes, unsigned workers) {
  static constexpr Functor js[] = {Functor::T, Functor::S0, Functor::S1, Functor::S};
  static constexpr Functor es[] = {Functor::Seq, Functor::I1, Functor::K};
  // JE flags per convergence, indexed by size and position in the universe.
  std::map<unsigned, std::vector<std::array<bool, 12>>> je;
  for (const auto& [s, t] : sizes)
    for (unsigned k : {s, t}) {
      if (je.count(k)) continue;
      auto& v = je[k];
      for (const auto& c : universe(k)) {
        std::array<bool, 12> flags{};
        for (unsigned a = 0; a < 4; ++a)
          for (unsigned b = 0; b < 3; ++b) flags[a * 3 + b] = is_JE(c, js[a], es[b]);
        v.push_back(flags);
      }
    }
  SuiteResult out{"preservation"};
  const auto start = std::chrono::steady_clock::now();
  for (const auto& [s, t] : sizes) {
    const auto maps = s == t ? std::vector<CarrierMap>{CarrierMap::identity(s)} : surjections(s, t);
    const auto& src = universe(s);
    const auto& tgt = universe(t);
    const std::size_t per_map = src.size() * tgt.size();
    out.absorb(laws_detail::sweep("preservation", maps.size() * per_map, workers, [&](std::size_t i, SuiteResult& r) {
      const std::size_t m = i / per_map, xi = (i % per_map) / tgt.size(), tau = i % tgt.size();
      const MapContext ctx(maps[m], src[xi], tgt[tau]);
      if (!continuous(ctx)) return;
      for (unsigned a = 0; a < 4; ++a) {
        if (!is_J_quotient(ctx, js[a])) continue;
        for (unsigned b = 0; b < 3; ++b)
          r.check(!je[s][xi][a * 3 + b] || je[t][tau][a * 3 + b], [&] {
            return std::string(functor_name(js[a])) + std::string(functor_name(es[b])) + " " +
                   laws_detail::ctx_string(ctx);
          });
      }
    }));
  }
  out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

/// J-perfect ⟺ f⁻ J-compact from τ to ξ; J-quotient ⟺ f J-compact from
/// f⁻τ to fξ. Both sides use the adherence definitions directly; the other
/// characterizations are compared in the classification suite.
inline SuiteResult suite_compact_maps(const std::vector<std::pair<unsigned, unsigned>>& sizes, unsigned workers) {
  return laws_detail::map_sweep("compact maps", sizes, workers, [](const MapContext& ctx, SuiteResult& r) {
    const auto rel = ctx.map.as_relation();
    const auto inv = rel.inverse();
    const detail::MapTables t(ctx);
    const auto initial = initial_convergence(ctx);
    for (auto cls : all_classes) {
      r.check(!t.perfect_violation(cls) == is_relation_compact(inv, ctx.target, ctx.source, cls),
              [&] { return "perfect " + std::string(class_name(cls)) + " " + laws_detail::ctx_string(ctx); });
      r.check(!t.quotient_violation(cls) == is_relation_compact(rel, initial, t.fxi, cls),
              [&] { return "quotient " + std::string(class_name(cls)) + " " + laws_detail::ctx_string(ctx); });
    }
  });
}

/// Bijections are J-quotient exactly when J-perfect, for every class.
inline SuiteResult suite_bijections(unsigned n, unsigned workers) {
  std::vector<std::pair<unsigned, unsigned>> sizes;
  for (unsigned k = 1; k <= n; ++k) sizes.emplace_back(k, k);
  return laws_detail::map_sweep("bijections", sizes, workers, [](const MapContext& ctx, SuiteResult& r) {
    const detail::MapTables t(ctx);
    for (auto cls : all_classes)
      r.check(!t.quotient_violation(cls) == !t.perfect_violation(cls),
              [&] { return std::string(class_name(cls)) + " " + laws_detail::ctx_string(ctx); });
  });
}

/// Compactoid characterization through the characteristic convergence, and
/// the finite compactness facts.
inline SuiteResult suite_compactness(unsigned n) {
  SuiteResult r{"compactness"};
  for (unsigned k = 1; k <= n; ++k)
    for (const auto& c : universe(k)) {
      const auto chi = characteristic(c);
      auto d = [&] { return laws_detail::conv(c); };
      r.check(completeness_number_finite(c) == 0, d);
      const auto s = apply(Functor::S, c);
      for (mask_t h = 1; h <= c.full(); ++h) {
        const SetFamily fh(k, {h});
        for (auto cls : all_classes) {
          const Convergence jchi = apply(reflector_for(cls), chi);
          r.check(is_compactoid(c, fh, cls) == (jchi.lim(h) != 0), d);
        }
        if (c.lim(h)) r.check(is_compactoid(c, fh, FilterClass::all), d);
        r.check(is_compact_at(c, Subset(k, h), Subset(k, h), FilterClass::all), d);
        for (unsigned x = 0; x < k; ++x)
          r.check(has_point(s.lim(h), x) == is_compact_at(c, fh, SetFamily(k, {point_mask(x)}), FilterClass::all), d);
      }
      if (is_topology(c) && closed_masks(c).size() == (std::size_t{1} << k)) {  // T1: every set closed
        for (mask_t a = 1; a <= c.full(); ++a)
          for (mask_t b = 1; b <= c.full(); ++b)
            if (is_compact_at(c, Subset(k, a), Subset(k, b), FilterClass::principal)) r.check(subset_of(a, b), d);
      }
    }
  return r;
}

/// R J-compact and 𝒜 J-compact at B ⟹ R[𝒜] J-compact at R(B), over all
/// relations between 2-point carriers, for the transferable classes.
inline SuiteResult suite_image_of_compact(unsigned workers) {
  const auto& u = universe(2);
  const auto rels = laws_detail::all_relations(2, 2);
  const auto fams = laws_detail::all_families(2);
  const std::size_t per_rel = u.size() * u.size();
  return laws_detail::sweep("image of compact", rels.size() * per_rel, workers, [&](std::size_t i, SuiteResult& r) {
    const auto& rel = rels[i / per_rel];
    const auto& theta = u[(i % per_rel) / u.size()];
    const auto& sigma = u[i % u.size()];
    for (auto cls : all_classes) {
      if (!transferable(cls)) continue;
      for (const auto& a : fams)
        for (mask_t b = 0; b <= 3; ++b)
          r.check(image_of_compact(rel, theta, sigma, a, Subset(2, b), cls).holds(), [&] {
            return std::string(class_name(cls)) + " theta=" + laws_detail::conv(theta) +
                   " sigma=" + laws_detail::conv(sigma);
          });
    }
  });
}

/// Preimages of compact sets under perfect maps are compact.
inline SuiteResult suite_perfect_preimage(const std::vector<std::pair<unsigned, unsigned>>& sizes, unsigned workers) {
  return laws_detail::map_sweep("perfect preimages", sizes, workers, [](const MapContext& ctx, SuiteResult& r) {
    if (!is_perfect_like(ctx, FilterClass::all)) return;
    for (mask_t k = 1; k <= ctx.target.full(); ++k) {
      if (!is_compact_at(ctx.target, Subset(ctx.target.size(), k), Subset(ctx.target.size(), k), FilterClass::all))
        continue;
      const mask_t pre = ctx.map.preimage(k);
      r.check(is_compact_at(ctx.source, Subset(ctx.source.size(), pre), Subset(ctx.source.size(), pre),
                            FilterClass::all),
              [&] { return laws_detail::ctx_string(ctx); });
    }
  });
}

/// Graph-closed everywhere ⟺ closed in the product, and the same for R⁻.
inline SuiteResult suite_graph_closed(unsigned workers) {
  const auto& u = universe(2);
  const auto rels = laws_detail::all_relations(2, 2);
  const std::size_t per_rel = u.size() * u.size();
  return laws_detail::sweep("graph closedness", rels.size() * per_rel, workers, [&](std::size_t i, SuiteResult& r) {
    const auto& rel = rels[i / per_rel];
    const auto& theta = u[(i % per_rel) / u.size()];
    const auto& sigma = u[i % u.size()];
    const bool g = graph_closed(rel, theta, sigma);
    auto d = [&] { return "theta=" + laws_detail::conv(theta) + " sigma=" + laws_detail::conv(sigma); };
    r.check(g == closed_in_product(rel, theta, sigma), d);
    r.check(g == graph_closed(rel.inverse(), sigma, theta), d);
  });
}

/// Independent counts for the enumerated classes, and worker-count determinism.
inline SuiteResult suite_enumeration(unsigned n) {
  SuiteResult r{"enumeration"};
  // Convergences: every limit table on the carrier, filtered by the axioms.
  auto brute_convergences = [](unsigned k) {
    const std::size_t entries = full_mask(k);
    std::uint64_t count = 0;
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << (entries * k)); ++code) {
      std::vector<mask_t> t(entries + 1, 0);
      for (std::size_t a = 0; a < entries; ++a) t[a + 1] = static_cast<mask_t>((code >> (a * k)) & full_mask(k));
      if (axiom_violations(k, t).empty()) ++count;
    }
    return count;
  };
  // Topologies: families of subsets containing ∅ and X closed under ∪ and ∩.
  auto brute_topologies = [](unsigned k) {
    const std::size_t subsets = std::size_t{1} << k;
    std::uint64_t count = 0;
    for (std::uint64_t fam = 0; fam < (std::uint64_t{1} << subsets); ++fam) {
      if (!(fam & 1u) || !((fam >> (subsets - 1)) & 1u)) continue;
      bool ok = true;
      for (std::size_t a = 0; a < subsets && ok; ++a)
        for (std::size_t b = 0; b < subsets && ok; ++b)
          if (((fam >> a) & 1u) && ((fam >> b) & 1u)) ok = ((fam >> (a | b)) & 1u) && ((fam >> (a & b)) & 1u);
      if (ok) ++count;
    }
    return count;
  };
  for (unsigned k = 1; k <= std::min(n, 2u); ++k)
    r.check(universe(k).size() == brute_convergences(k), [&] { return "convergences on " + std::to_string(k); });
  for (unsigned k = 1; k <= std::min(n + 1, 4u); ++k) {
    r.check(enumerate({k, SpaceClass::pretopology}).size() == (std::size_t{1} << (k * (k - 1))),
            [&] { return "pretopologies on " + std::to_string(k); });
    r.check(enumerate({k, SpaceClass::topology}).size() == brute_topologies(k),
            [&] { return "topologies on " + std::to_string(k); });
  }
  for (auto cls : {SpaceClass::convergence, SpaceClass::pretopology, SpaceClass::topology, SpaceClass::pseudotopology}) {
    const unsigned k = std::min(n, 3u);
    const auto one = enumerate({k, cls}, 1), many = enumerate({k, cls}, 4);
    r.check(one == many, [&] { return "worker-count determinism for " + std::string(space_class_name(cls)); });
    for (const auto& c : one) {
      const bool member = cls == SpaceClass::convergence     ? true
                          : cls == SpaceClass::pretopology  ? is_pretopology(c)
                          : cls == SpaceClass::topology     ? is_topology(c)
                                                            : is_pseudotopology(c);
      r.check(member, [&] { return "class membership " + laws_detail::conv(c); });
    }
  }
  return r;
}

/// Symbolic cofinite filters: exemplar checks, decomposition identities and
/// the truncation cross-check.
inline SuiteResult suite_symbolic(std::size_t trials, std::uint64_t seed) {
  using namespace symbolic;
  SuiteResult r{"symbolic cofinite filters"};
  for (const auto& rep : {fan_check(), prime_check()})
    for (const auto& line : rep.lines) r.check(line.holds, [&] { return rep.exemplar + ": " + line.claim; });
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < trials; ++i) {
    const Exemplar e = i % 2 ? Exemplar::prime : Exemplar::fan;
    const auto b = random_set(e, rng), a = random_set(e, rng) & b;
    const CofiniteFilter f(b, a);
    const auto parts = decompose(f);
    r.check(join(parts.free_part, parts.principal_part).is_degenerate(), [&] { return "free join principal " + f.to_string(); });
    r.check(equivalent(meet(parts.free_part, parts.principal_part), f), [&] { return "free meet principal " + f.to_string(); });
  }
  const auto tr = truncation_crosscheck(seed, trials);
  SuiteResult part{"symbolic cofinite filters"};
  part.instances = tr.queries;
  part.failures = tr.disagreements;
  part.first_failure = tr.first_disagreement;
  r.absorb(part);
  return r;
}

// ---------------------------------------------------------------------------
// Tables

/// Reverse search for an arrow premise ⟹ conclusion: a map with the
/// conclusion but not the premise.
inline std::string reverse_predicate(const Implication& i) {
  static const std::map<std::pair<std::string, std::string>, std::string> names = {
      {{"open", "almost_open"}, "almost-open-not-open"},
      {{"almost_open", "biquotient"}, "biquotient-not-almost-open"},
      {{"biquotient", "countably_biquotient"}, "countably-biquotient-not-biquotient"},
      {{"countably_biquotient", "hereditarily_quotient"}, "hereditarily-quotient-not-countably-biquotient"},
      {{"hereditarily_quotient", "quotient"}, "quotient-not-hereditarily-quotient"},
      {{"perfect", "countably_perfect"}, "countably-perfect-not-perfect"},
      {{"countably_perfect", "adherent"}, "adherent-not-countably-perfect"},
      {{"adherent", "closed"}, "closed-not-adherent"},
      {{"perfect", "biquotient"}, "biquotient-not-perfect"},
      {{"countably_perfect", "countably_biquotient"}, "countably-biquotient-not-countably-perfect"},
      {{"adherent", "hereditarily_quotient"}, "hereditarily-quotient-not-adherent"},
      {{"closed", "quotient"}, "quotient-not-closed"},
  };
  return names.at({i.premise, i.conclusion});
}

/// Both ends in biquotient = countably biquotient = hereditarily quotient or
/// in perfect = countably perfect = adherent, which coincide on finite carriers.
inline bool collapses_on_finite_carriers(const Implication& i) {
  static const std::vector<std::set<std::string>> groups = {
      {"biquotient", "countably_biquotient", "hereditarily_quotient"},
      {"perfect", "countably_perfect", "adherent"}};
  for (const auto& g : groups)
    if (g.count(i.premise) && g.count(i.conclusion)) return true;
  return false;
}

struct ArrowRow {
  Implication arrow;
  std::uint64_t instances = 0;  // classified maps with the premise
  std::uint64_t violations = 0;
  std::string reverse;          // predicate name
  std::optional<MapContext> witness;
  bool collapses() const { return !witness; }
};

/// Every arrow of the perfect-like ⟹ quotient-like table and both ladders,
/// checked on all classified maps up to the given sizes, with the first
/// reverse witness in search order (or none: the arrow collapses at finite
/// scale within the searched sizes). Arrows with no surjective witness onto
/// a smaller carrier are searched again over identities on max_source points,
/// unless they collapse on finite carriers.
inline std::vector<ArrowRow> implication_table(unsigned max_source = 3, unsigned max_target = 2,
                                               unsigned workers = default_workers()) {
  const auto& arrows = report_implications();
  std::vector<ArrowRow> rows;
  for (const auto& a : arrows) rows.push_back({a, 0, 0, reverse_predicate(a), std::nullopt});
  for (unsigned s = 1; s <= max_source; ++s)
    for (unsigned t = 1; t <= std::min(s, max_target); ++t) {
      const auto maps = surjections(s, t);
      const auto& src = universe(s);
      const auto& tgt = universe(t);
      const std::size_t total = maps.size() * src.size() * tgt.size();
      std::map<std::size_t, std::vector<ArrowRow>> parts;
      std::mutex lock;
      parallel_chunks(total, workers, [&](std::size_t b, std::size_t e) {
        std::vector<ArrowRow> local;
        for (const auto& a : arrows) local.push_back({a, 0, 0, "", std::nullopt});
        for (std::size_t i = b; i < e; ++i) {
          const std::size_t o = i / tgt.size();
          const MapContext ctx(maps[o / src.size()], src[o % src.size()], tgt[i % tgt.size()]);
          const auto rep = classify(ctx);
          for (auto& row : local) {
            const bool p = report_flag(rep, row.arrow.premise), c = report_flag(rep, row.arrow.conclusion);
            if (p) {
              ++row.instances;
              if (!c) ++row.violations;
            } else if (c && !row.witness) {
              row.witness = ctx;
            }
          }
        }
        std::lock_guard g(lock);
        parts.emplace(b, std::move(local));
      });
      for (const auto& [b, local] : parts)
        for (std::size_t k = 0; k < rows.size(); ++k) {
          rows[k].instances += local[k].instances;
          rows[k].violations += local[k].violations;
          if (!rows[k].witness && local[k].witness) rows[k].witness = local[k].witness;
        }
    }
  for (auto& row : rows)
    if (!row.witness && !collapses_on_finite_carriers(row.arrow))
      row.witness = search({row.reverse, max_source, max_source, MapDomain::identity}, workers).witness;
  return rows;
}

/// One cell of the quotient-type / mixed-property table: continuous
/// surjections of the row's quotient type carry the column's property from
/// source to target.
struct PreservationCell {
  std::string quotient_type;
  std::string property;
  std::uint64_t instances = 0;  // maps of that type with the property at the source
  std::uint64_t violations = 0;
};

inline std::vector<PreservationCell> preservation_table(unsigned max_source = 3, unsigned max_target = 2,
                                                        unsigned workers = default_workers()) {
  struct Row {
    const char* quotient_type;
    Functor j;
    const char* property;
  };
  static const Row rows[] = {{"almost open", Functor::I, "countable character (I1)"},
                             {"biquotient", Functor::S, "bisequential (S I1)"},
                             {"countably biquotient", Functor::S1, "countably bisequential (S1 I1)"},
                             {"hereditarily quotient", Functor::S0, "Frechet (S0 I1)"},
                             {"quotient", Functor::T, "sequential (T I1)"}};
  constexpr std::size_t nrows = std::size(rows);
  auto has_property = [](const Convergence& c, Functor j) {
    return j == Functor::I ? finer(c, apply(Functor::I1, c)) : is_JE(c, j, Functor::I1);
  };
  std::vector<PreservationCell> cells;
  for (std::size_t q = 0; q < nrows; ++q)
    for (std::size_t p = q; p < nrows; ++p) cells.push_back({rows[q].quotient_type, rows[p].property, 0, 0});
  for (unsigned s = 1; s <= max_source; ++s)
    for (unsigned t = 1; t <= std::min(s, max_target); ++t) {
      const auto maps = surjections(s, t);
      const auto& src = universe(s);
      const auto& tgt = universe(t);
      std::vector<std::array<bool, nrows>> src_prop(src.size()), tgt_prop(tgt.size());
      for (std::size_t i = 0; i < src.size(); ++i)
        for (std::size_t p = 0; p < nrows; ++p) src_prop[i][p] = has_property(src[i], rows[p].j);
      for (std::size_t i = 0; i < tgt.size(); ++i)
        for (std::size_t p = 0; p < nrows; ++p) tgt_prop[i][p] = has_property(tgt[i], rows[p].j);
      const std::size_t total = maps.size() * src.size() * tgt.size();
      std::mutex lock;
      parallel_chunks(total, workers, [&](std::size_t b, std::size_t e) {
        std::vector<PreservationCell> local(cells.size());
        for (std::size_t i = b; i < e; ++i) {
          const std::size_t o = i / tgt.size(), xi = o % src.size(), tau = i % tgt.size();
          const MapContext ctx(maps[o / src.size()], src[xi], tgt[tau]);
          if (!continuous(ctx)) continue;
          std::size_t k = 0;
          for (std::size_t q = 0; q < nrows; ++q) {
            const bool quotient = is_J_quotient(ctx, rows[q].j);
            for (std::size_t p = q; p < nrows; ++p, ++k)
              if (quotient && src_prop[xi][p]) {
                ++local[k].instances;
                if (!tgt_prop[tau][p]) ++local[k].violations;
              }
          }
        }
        std::lock_guard g(lock);
        for (std::size_t k = 0; k < cells.size(); ++k) {
          cells[k].instances += local[k].instances;
          cells[k].violations += local[k].violations;
        }
      });
    }
  return cells;
}

// ---------------------------------------------------------------------------
// Runner

struct LawOptions {
  unsigned size = 2;           // largest carrier swept exhaustively
  std::size_t samples = 1000;  // random instances at size 3 where sweeps are sampled
  std::uint64_t seed = 1;
  unsigned workers = default_workers();
};

/// Every suite at the requested size. Map sweeps cover surjections between
/// carriers of at most `size` points; the 3 → 3 identity is swept by the
/// compact-map and bijection suites only.
inline std::vector<SuiteResult> run_laws(const LawOptions& o) {
  if (o.size == 0 || o.size > enumeration_cap(SpaceClass::convergence))
    throw size_cap_exceeded("law sweeps are capped at " + std::to_string(enumeration_cap(SpaceClass::convergence)) +
                            " points");
  const auto sizes = laws_detail::full_check_pairs(o.size);
  const auto all_sizes = laws_detail::size_pairs(o.size);
  std::vector<SuiteResult> out;
  auto timed = [&](auto&& fn) {
    const auto start = std::chrono::steady_clock::now();
    SuiteResult r = fn();
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    out.push_back(std::move(r));
  };
  const std::size_t sampled = o.size >= 3 ? o.samples : 0;
  timed([&] { return suite_lattice(o.size, sampled, o.seed, o.workers); });
  timed([&] { return suite_family_algebra(o.size); });
  timed([&] { return suite_relations(o.size); });
  timed([&] { return suite_filter_images(o.size); });
  timed([&] { return suite_cover_duality(o.size, sampled, o.seed, o.workers); });
  timed([&] { return suite_open_sets(o.size); });
  timed([&] { return suite_finite_collapse(o.size); });
  timed([&] { return suite_reflector_order(o.size); });
  timed([&] { return suite_functor_laws(o.size, sampled, o.seed, o.workers); });
  timed([&] { return suite_continuity(sizes, o.workers); });
  timed([&] { return suite_classification(sizes, o.workers); });
  timed([&] { return suite_preservation(sizes, o.workers); });
  timed([&] { return suite_compact_maps(all_sizes, o.workers); });
  timed([&] { return suite_bijections(o.size, o.workers); });
  timed([&] { return suite_compactness(o.size); });
  timed([&] { return suite_perfect_preimage(sizes, o.workers); });
  timed([&] { return suite_image_of_compact(o.workers); });
  timed([&] { return suite_graph_closed(o.workers); });
  timed([&] { return suite_enumeration(o.size); });
  timed([&] { return suite_symbolic(o.samples, o.seed); });
  return out;
}

/// Laws for user-supplied convergences: functor laws on every pair and the
/// single-space suites.
inline std::vector<SuiteResult> run_laws_on(std::span<const Convergence> spaces) {
  std::vector<SuiteResult> out;
  out.push_back(SuiteResult{"functor laws"});
  for (Functor h : all_functors) {
    const auto rep = check_functor_laws(h, spaces);
    for (const auto& c : rep.checks) {
      SuiteResult part{"functor laws"};
      part.instances = c.instances;
      part.failures = c.failures;
      if (c.failures) part.first_failure = std::string(functor_name(h)) + " " + c.law + ": " + c.first_failure;
      out.back().absorb(part);
    }
  }
  SuiteResult single{"space checks"};
  for (const auto& c : spaces) {
    auto d = [&] { return laws_detail::conv(c); };
    single.check(finer(apply(Functor::S0, c), apply(Functor::T, c)) && finer(c, apply(Functor::S, c)), d);
    single.check(topologize(c) == apply(Functor::T, c), d);
    const auto adh = adherence_table(c);
    for (mask_t a = 1; a <= c.full(); ++a) single.check(subset_of(adh[a], closure_mask(c, a)), d);
  }
  out.push_back(std::move(single));
  return out;
}

}  // namespace finconv
