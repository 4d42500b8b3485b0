#pragma once

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <functional>
#include <limits>
#include <map>
#include <mutex>
#include <optional>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "compact.hpp"

namespace finconv {

enum class SpaceClass { convergence, pseudotopology, pretopology, topology };

inline std::string_view space_class_name(SpaceClass c) {
  switch (c) {
    case SpaceClass::convergence: return "convergence";
    case SpaceClass::pseudotopology: return "pseudotopology";
    case SpaceClass::pretopology: return "pretopology";
    case SpaceClass::topology: return "topology";
  }
  return "?";
}

inline std::optional<SpaceClass> parse_space_class(std::string_view s) {
  for (auto c : {SpaceClass::convergence, SpaceClass::pseudotopology, SpaceClass::pretopology, SpaceClass::topology})
    if (space_class_name(c) == s) return c;
  return std::nullopt;
}

/// Largest carrier enumerated exhaustively for a class.
inline unsigned enumeration_cap(SpaceClass c) { return c == SpaceClass::convergence ? 3 : 4; }

struct EnumerationSpec {
  unsigned size = 1;
  SpaceClass cls = SpaceClass::convergence;
  std::optional<std::uint64_t> seed;  // set: draw `count` random members instead
  std::size_t count = 0;
};

/// Worker count from FINCONV_WORKERS, else the hardware concurrency.
inline unsigned default_workers() {
  if (const char* env = std::getenv("FINCONV_WORKERS")) {
    const int v = std::atoi(env);
    if (v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

/// Runs body(begin, end) over contiguous chunks of [0, total), one chunk per worker.
template <class Body>
void parallel_chunks(std::size_t total, unsigned workers, Body body) {
  workers = static_cast<unsigned>(std::min<std::size_t>(std::max(1u, workers), std::max<std::size_t>(total, 1)));
  if (workers <= 1) {
    body(std::size_t{0}, total);
    return;
  }
  std::vector<std::thread> pool;
  std::exception_ptr failure;
  std::mutex failure_lock;
  const std::size_t step = (total + workers - 1) / workers;
  for (unsigned w = 0; w < workers; ++w) {
    const std::size_t b = std::min(total, w * step), e = std::min(total, b + step);
    pool.emplace_back([&, b, e] {
      try {
        body(b, e);
      } catch (...) {
        std::lock_guard lock(failure_lock);
        if (!failure) failure = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

namespace detail {

/// Downward-closed families of nonempty subsets containing {x}, each as a
/// bitmask over subset indices, ascending.
inline std::vector<std::uint32_t> point_downsets(unsigned n, unsigned x) {
  const unsigned subsets = 1u << n;
  std::vector<std::uint32_t> out;
  for (std::uint64_t fam = 0; fam < (std::uint64_t{1} << subsets); ++fam) {
    if (fam & 1u) continue;
    if (!((fam >> point_mask(x)) & 1u)) continue;
    bool ok = true;
    for (unsigned s = 1; s < subsets && ok; ++s) {
      if (!((fam >> s) & 1u) || cardinality(s) < 2) continue;
      for_each_point(s, [&](unsigned p) { ok = ok && ((fam >> (s & ~point_mask(p))) & 1u); });
    }
    if (ok) out.push_back(static_cast<std::uint32_t>(fam));
  }
  return out;
}

/// Subsets containing x, ascending.
inline std::vector<mask_t> sets_containing(unsigned n, unsigned x) {
  std::vector<mask_t> out;
  for (mask_t v = 1; v <= full_mask(n); ++v)
    if (has_point(v, x)) out.push_back(v);
  return out;
}

/// Mixed-radix digits of i, point 0 most significant.
inline std::vector<std::size_t> digits(std::size_t i, unsigned n, const std::vector<std::size_t>& radix) {
  std::vector<std::size_t> d(n);
  for (unsigned k = n; k-- > 0;) {
    d[k] = i % radix[k];
    i /= radix[k];
  }
  return d;
}

inline std::vector<mask_t> table_from_downsets(unsigned n, const std::vector<std::uint32_t>& downs) {
  std::vector<mask_t> t(std::size_t{full_mask(n)} + 1, 0);
  for (mask_t a = 1; a <= full_mask(n); ++a)
    for (unsigned x = 0; x < n; ++x)
      if ((downs[x] >> a) & 1u) t[a] |= point_mask(x);
  return t;
}

/// lim ↑A = ⋂_{a∈A} L(a) from the point limits L(y) = lim ↑{y}.
inline std::vector<mask_t> table_from_point_limits(unsigned n, const std::vector<mask_t>& l) {
  std::vector<mask_t> t(std::size_t{full_mask(n)} + 1, 0);
  for (mask_t a = 1; a <= full_mask(n); ++a) {
    mask_t v = full_mask(n);
    for_each_point(a, [&](unsigned y) { v &= l[y]; });
    t[a] = v;
  }
  return t;
}

inline std::vector<mask_t> table_from_vicinities(unsigned n, const std::vector<mask_t>& vic) {
  std::vector<mask_t> t(std::size_t{full_mask(n)} + 1, 0);
  for (mask_t a = 1; a <= full_mask(n); ++a)
    for (unsigned x = 0; x < n; ++x)
      if (subset_of(a, vic[x])) t[a] |= point_mask(x);
  return t;
}

/// y ∈ V_x ⟹ V_y ⊆ V_x: the vicinities come from a preorder.
inline bool transitive_vicinities(const std::vector<mask_t>& vic) {
  for (unsigned x = 0; x < vic.size(); ++x) {
    bool ok = true;
    for_each_point(vic[x], [&](unsigned y) { ok = ok && subset_of(vic[y], vic[x]); });
    if (!ok) return false;
  }
  return true;
}

inline std::vector<Convergence> exhaustive(unsigned n, SpaceClass cls, unsigned workers) {
  if (n == 0 || n > enumeration_cap(cls))
    throw size_cap_exceeded("exhaustive " + std::string(space_class_name(cls)) + " enumeration is capped at " +
                            std::to_string(enumeration_cap(cls)) + " points; use sampling for larger carriers");
  auto carrier = std::make_shared<const Carrier>(Carrier::alphabetic(n));
  std::vector<std::vector<std::uint32_t>> downs;
  std::vector<std::vector<mask_t>> choices;
  std::vector<std::size_t> radix;
  for (unsigned x = 0; x < n; ++x) {
    if (cls == SpaceClass::convergence) {
      downs.push_back(point_downsets(n, x));
      radix.push_back(downs.back().size());
    } else {
      choices.push_back(sets_containing(n, x));
      radix.push_back(choices.back().size());
    }
  }
  std::size_t total = 1;
  for (auto r : radix) total *= r;

  std::vector<std::vector<Convergence>> parts(std::max(1u, workers));
  std::atomic<unsigned> next_part{0};
  std::vector<std::pair<std::size_t, unsigned>> order;
  std::mutex order_lock;
  parallel_chunks(total, workers, [&](std::size_t b, std::size_t e) {
    const unsigned part = next_part++;
    {
      std::lock_guard lock(order_lock);
      order.emplace_back(b, part);
    }
    auto& out = parts[part];
    for (std::size_t i = b; i < e; ++i) {
      const auto d = digits(i, n, radix);
      std::vector<mask_t> pick(n);
      std::vector<std::uint32_t> dpick(n);
      for (unsigned x = 0; x < n; ++x) {
        if (cls == SpaceClass::convergence)
          dpick[x] = downs[x][d[x]];
        else
          pick[x] = choices[x][d[x]];
      }
      switch (cls) {
        case SpaceClass::convergence: out.emplace_back(carrier, table_from_downsets(n, dpick)); break;
        case SpaceClass::pseudotopology: out.emplace_back(carrier, table_from_point_limits(n, pick)); break;
        case SpaceClass::pretopology: out.emplace_back(carrier, table_from_vicinities(n, pick)); break;
        case SpaceClass::topology:
          if (transitive_vicinities(pick)) out.emplace_back(carrier, table_from_vicinities(n, pick));
          break;
      }
    }
  });
  std::sort(order.begin(), order.end());
  std::vector<Convergence> all;
  all.reserve(total);
  for (const auto& [b, part] : order)
    for (auto& c : parts[part]) all.push_back(std::move(c));
  return all;
}

inline std::vector<Convergence> sampled(unsigned n, SpaceClass cls, std::uint64_t seed, std::size_t count) {
  require_width(n);
  auto carrier = std::make_shared<const Carrier>(Carrier::alphabetic(n));
  std::mt19937_64 rng(seed);
  const mask_t all = full_mask(n);
  std::uniform_int_distribution<mask_t> any_set(1, all);
  std::vector<Convergence> out;
  for (std::size_t k = 0; k < count; ++k) {
    std::vector<mask_t> pick(n);
    for (unsigned x = 0; x < n; ++x) pick[x] = any_set(rng) | point_mask(x);
    switch (cls) {
      case SpaceClass::convergence: {
        // Random generators per point, closed downward.
        std::vector<mask_t> t(std::size_t{all} + 1, 0);
        for (unsigned x = 0; x < n; ++x) {
          std::vector<bool> member(std::size_t{all} + 1, false);
          member[point_mask(x)] = true;
          const unsigned gens = static_cast<unsigned>(rng() % 4);
          for (unsigned g = 0; g < gens; ++g) member[any_set(rng)] = true;
          for (mask_t a = all; a >= 1; --a)
            if (member[a]) for_each_point(a, [&](unsigned p) {
                if (a != point_mask(p)) member[a & ~point_mask(p)] = true;
              });
          for (mask_t a = 1; a <= all; ++a)
            if (member[a]) t[a] |= point_mask(x);
        }
        out.emplace_back(carrier, std::move(t));
        break;
      }
      case SpaceClass::pseudotopology: out.emplace_back(carrier, table_from_point_limits(n, pick)); break;
      case SpaceClass::pretopology: out.emplace_back(carrier, table_from_vicinities(n, pick)); break;
      case SpaceClass::topology: {
        for (bool changed = true; changed;) {  // transitive closure of the vicinity relation
          changed = false;
          for (unsigned x = 0; x < n; ++x) {
            mask_t v = pick[x];
            for_each_point(pick[x], [&](unsigned y) { v |= pick[y]; });
            if (v != pick[x]) {
              pick[x] = v;
              changed = true;
            }
          }
        }
        out.emplace_back(carrier, table_from_vicinities(n, pick));
        break;
      }
    }
  }
  return out;
}

}  // namespace detail

/// All members of a class on n labeled points in canonical order (or a
/// seeded sample). The order does not depend on the worker count.
inline std::vector<Convergence> enumerate(const EnumerationSpec& spec, unsigned workers = default_workers()) {
  if (spec.seed) return detail::sampled(spec.size, spec.cls, *spec.seed, spec.count);
  return detail::exhaustive(spec.size, spec.cls, workers);
}

/// Cached exhaustive universe, shared by the theorem sweeps.
inline const std::vector<Convergence>& universe(unsigned n, SpaceClass cls = SpaceClass::convergence) {
  static std::mutex lock;
  static std::map<std::pair<unsigned, SpaceClass>, std::vector<Convergence>> cache;
  std::lock_guard guard(lock);
  auto it = cache.find({n, cls});
  if (it == cache.end()) it = cache.emplace(std::pair{n, cls}, enumerate({n, cls})).first;
  return it->second;
}

/// Every map from n to m points, images in odometer order (point 0 most significant).
inline std::vector<CarrierMap> all_maps(unsigned n, unsigned m) { return detail::maps_between(n, m); }

inline std::vector<CarrierMap> surjections(unsigned n, unsigned m) {
  std::vector<CarrierMap> out;
  for (auto& f : all_maps(n, m))
    if (f.is_surjective()) out.push_back(std::move(f));
  return out;
}

// ---------------------------------------------------------------------------
// Counterexample search

struct SearchPredicate {
  std::string name;
  std::string description;
  std::function<bool(const MapContext&)> test;
};

inline const std::vector<SearchPredicate>& predicate_registry() {
  using C = FilterClass;
  static const std::vector<SearchPredicate> registry = {
      {"quotient-not-hereditarily-quotient", "quotient map that is not hereditarily quotient",
       [](const MapContext& c) { return is_quotient_like(c, C::closed_principal) && !is_quotient_like(c, C::principal); }},
      {"hereditarily-quotient-not-biquotient", "hereditarily quotient map that is not biquotient",
       [](const MapContext& c) { return is_quotient_like(c, C::principal) && !is_quotient_like(c, C::all); }},
      {"countably-biquotient-not-biquotient", "countably biquotient map that is not biquotient",
       [](const MapContext& c) { return is_quotient_like(c, C::countably_based) && !is_quotient_like(c, C::all); }},
      {"hereditarily-quotient-not-countably-biquotient", "hereditarily quotient map that is not countably biquotient",
       [](const MapContext& c) {
         return is_quotient_like(c, C::principal) && !is_quotient_like(c, C::countably_based);
       }},
      {"biquotient-not-almost-open", "biquotient map that is not almost open",
       [](const MapContext& c) { return is_quotient_like(c, C::all) && !is_almost_open(c); }},
      {"almost-open-not-open", "almost open map that is not open",
       [](const MapContext& c) { return is_almost_open(c) && !is_open_map(c); }},
      {"open-not-almost-open", "open map that is not almost open",
       [](const MapContext& c) { return is_open_map(c) && !is_almost_open(c); }},
      {"closed-not-adherent", "closed map that is not adherent",
       [](const MapContext& c) { return is_perfect_like(c, C::closed_principal) && !is_perfect_like(c, C::principal); }},
      {"adherent-not-closed", "adherent map that is not closed",
       [](const MapContext& c) { return is_perfect_like(c, C::principal) && !is_perfect_like(c, C::closed_principal); }},
      {"adherent-not-perfect", "adherent map that is not perfect",
       [](const MapContext& c) { return is_perfect_like(c, C::principal) && !is_perfect_like(c, C::all); }},
      {"adherent-not-countably-perfect", "adherent map that is not countably perfect",
       [](const MapContext& c) {
         return is_perfect_like(c, C::principal) && !is_perfect_like(c, C::countably_based);
       }},
      {"countably-perfect-not-perfect", "countably perfect map that is not perfect",
       [](const MapContext& c) { return is_perfect_like(c, C::countably_based) && !is_perfect_like(c, C::all); }},
      {"perfect-not-closed", "perfect map that is not closed",
       [](const MapContext& c) { return is_perfect_like(c, C::all) && !is_perfect_like(c, C::closed_principal); }},
      {"biquotient-not-perfect", "biquotient map that is not perfect",
       [](const MapContext& c) { return is_quotient_like(c, C::all) && !is_perfect_like(c, C::all); }},
      {"countably-biquotient-not-countably-perfect", "countably biquotient map that is not countably perfect",
       [](const MapContext& c) {
         return is_quotient_like(c, C::countably_based) && !is_perfect_like(c, C::countably_based);
       }},
      {"hereditarily-quotient-not-adherent", "hereditarily quotient map that is not adherent",
       [](const MapContext& c) { return is_quotient_like(c, C::principal) && !is_perfect_like(c, C::principal); }},
      {"quotient-not-closed", "quotient map that is not closed",
       [](const MapContext& c) {
         return is_quotient_like(c, C::closed_principal) && !is_perfect_like(c, C::closed_principal);
       }},
      {"topology-final-not-topology", "source is a topology but the final convergence is not",
       [](const MapContext& c) { return is_topology(c.source) && !is_topology(final_convergence(c)); }},
      {"continuous-not-closed", "continuous map sending some closed set to a non-closed set",
       [](const MapContext& c) { return continuous(c) && !maps_closed_sets_to_closed_sets(c); }},
  };
  return registry;
}

inline const SearchPredicate& find_predicate(std::string_view name) {
  for (const auto& p : predicate_registry())
    if (p.name == name) return p;
  throw invalid_input("unknown predicate '" + std::string(name) + "'");
}

enum class MapDomain { surjection, identity };

struct SearchTask {
  std::string predicate;
  unsigned max_source = 3;
  unsigned max_target = 2;
  MapDomain domain = MapDomain::surjection;
};

struct SearchResult {
  std::optional<MapContext> witness;
  std::uint64_t examined = 0;  // triples up to and including the witness, or all of them
  bool found() const { return witness.has_value(); }
};

/// Scans (source size, target size, map, ξ, τ) in lexicographic order over
/// all convergences and returns the first triple satisfying the predicate.
inline SearchResult search(const SearchTask& task, unsigned workers = default_workers()) {
  const auto& pred = find_predicate(task.predicate);
  if (task.max_source > enumeration_cap(SpaceClass::convergence))
    throw size_cap_exceeded("search is capped at " + std::to_string(enumeration_cap(SpaceClass::convergence)) +
                            " source points");
  std::uint64_t before = 0;
  for (unsigned s = 1; s <= task.max_source; ++s) {
    for (unsigned t = 1; t <= std::min(s, task.max_target); ++t) {
      if (task.domain == MapDomain::identity && s != t) continue;
      const auto maps = task.domain == MapDomain::identity ? std::vector<CarrierMap>{CarrierMap::identity(s)}
                                                           : surjections(s, t);
      const auto& src = universe(s);
      const auto& tgt = universe(t);
      const std::size_t outer = maps.size() * src.size();
      std::atomic<std::uint64_t> best{std::numeric_limits<std::uint64_t>::max()};
      parallel_chunks(outer, workers, [&](std::size_t b, std::size_t e) {
        for (std::size_t o = b; o < e; ++o) {
          for (std::size_t k = 0; k < tgt.size(); ++k) {
            const std::uint64_t idx = std::uint64_t{o} * tgt.size() + k;
            if (idx >= best.load()) return;
            const MapContext ctx(maps[o / src.size()], src[o % src.size()], tgt[k]);
            if (pred.test(ctx)) {
              std::uint64_t cur = best.load();
              while (idx < cur && !best.compare_exchange_weak(cur, idx)) {
              }
              return;
            }
          }
        }
      });
      const std::uint64_t total = std::uint64_t{outer} * tgt.size();
      if (best.load() != std::numeric_limits<std::uint64_t>::max()) {
        const std::uint64_t idx = best.load();
        const std::size_t o = idx / tgt.size();
        return {MapContext(maps[o / src.size()], src[o % src.size()], tgt[idx % tgt.size()]), before + idx + 1};
      }
      before += total;
    }
  }
  return {std::nullopt, before};
}

}  // namespace finconv
