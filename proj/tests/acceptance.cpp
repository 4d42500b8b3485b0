// One PASS/FAIL line per acceptance criterion, each with its runtime.
// Exit status is 0 only when every line passes.

#include <chrono>
#include <filesystem>
#include <iomanip>
#include <iostream>
#include <set>

#include "finconv/finconv.hpp"

namespace {

using namespace finconv;

struct Outcome {
  bool ok = false;
  std::string detail;
};

int failures = 0;
const std::string data_dir = FINCONV_DATA_DIR;

template <class Fn>
void criterion(const std::string& name, double budget_seconds, Fn fn) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = fn();
  } catch (const std::exception& e) {
    o = {false, std::string("threw: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (budget_seconds > 0 && secs >= budget_seconds) {
    o.ok = false;
    o.detail += "; over the " + std::to_string(static_cast<int>(budget_seconds)) + " s budget";
  }
  if (!o.ok) ++failures;
  std::cout << (o.ok ? "PASS " : "FAIL ") << name << " [" << std::fixed << std::setprecision(2) << secs << " s] "
            << o.detail << std::endl;
}

Outcome from(const SuiteResult& s) {
  std::string d = std::to_string(s.instances) + " checks";
  if (!s.passed()) d += ", " + std::to_string(s.failures) + " failures; first: " + s.first_failure;
  return {s.passed() && s.instances > 0, d};
}

Outcome both(const Outcome& a, const Outcome& b) { return {a.ok && b.ok, a.detail + "; " + b.detail}; }

// Limit tables on n points passing the axioms, found by scanning every table.
std::set<std::vector<mask_t>> scanned_tables(unsigned n, bool pointwise_only) {
  const mask_t full = full_mask(n);
  std::set<std::vector<mask_t>> out;
  std::vector<mask_t> t(std::size_t{full} + 1, 0);
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << (n * full)); ++code) {
    for (mask_t a = 1; a <= full; ++a) t[a] = (code >> (n * (a - 1))) & full;
    bool ok = true;
    for (unsigned x = 0; x < n && ok; ++x) ok = has_point(t[point_mask(x)], x);
    for (mask_t a = 1; a <= full && ok; ++a)
      for (mask_t b = a + 1; b <= full && ok; ++b)
        if (subset_of(a, b)) ok = subset_of(t[b], t[a]);
    for (mask_t a = 1; a <= full && ok && pointwise_only; ++a) {
      mask_t l = full;
      for_each_point(a, [&](unsigned x) { l &= t[point_mask(x)]; });
      ok = l == t[a];
    }
    if (ok) out.insert(t);
  }
  return out;
}

// Reflexive transitive relations on n labeled points.
std::size_t preorders(unsigned n) {
  std::size_t count = 0;
  for (std::uint32_t r = 0; r < (1u << (n * n)); ++r) {
    auto rel = [&](unsigned i, unsigned j) { return (r >> (i * n + j)) & 1u; };
    bool ok = true;
    for (unsigned i = 0; i < n; ++i) ok = ok && rel(i, i);
    for (unsigned i = 0; i < n; ++i)
      for (unsigned j = 0; j < n; ++j)
        for (unsigned k = 0; k < n; ++k) ok = ok && (!(rel(i, j) && rel(j, k)) || rel(i, k));
    count += ok;
  }
  return count;
}

std::set<std::vector<mask_t>> tables_of(const std::vector<Convergence>& cs) {
  std::set<std::vector<mask_t>> out;
  for (const auto& c : cs) out.insert(c.table());
  return out;
}

}  // namespace

int main() {
  const unsigned workers = default_workers();
  const std::uint64_t seed = 20240601;
  const std::vector<std::pair<unsigned, unsigned>> onto_two = {{2, 2}, {3, 2}};

  criterion("lattice laws over all 9 convergences on 2 points", 1.0, [&] {
    const auto s = suite_lattice(2, 0, seed, workers);
    const bool nine = universe(2).size() == 9;
    return Outcome{s.passed() && nine, std::to_string(universe(2).size()) + " convergences; " + from(s).detail};
  });

  criterion("functor laws: 81 pairs on 2 points and 10000 sampled pairs on 3", 60.0, [&] {
    static constexpr Functor reflectors[] = {Functor::T, Functor::S0, Functor::S1, Functor::S};
    std::vector<std::pair<Convergence, Convergence>> pairs;
    for (const auto& p : universe(2))
      for (const auto& q : universe(2)) pairs.emplace_back(p, q);
    bool ok = pairs.size() == 81;
    for (Functor h : reflectors) ok = ok && check_functor_laws(h, pairs).passed();
    const auto s = suite_functor_laws(0, 10000, seed, workers, reflectors);
    return both({ok, std::to_string(pairs.size()) + " exhaustive pairs"}, from(s));
  });

  criterion("finite collapse of reflectors and coreflectors up to 3 points", 0, [&] {
    return from(suite_finite_collapse(3));
  });

  criterion("T <= S0 <= S1 <= S and topologize = closed-class reflection up to 3 points", 0, [&] {
    return from(suite_reflector_order(3));
  });

  criterion("continuity forms agree for every class, surjections 2->2 and 3->2", 0, [&] {
    return from(suite_continuity(onto_two, workers));
  });

  criterion("cover duality: exhaustive up to 2 points, 10000 random triples on 3", 0, [&] {
    return from(suite_cover_duality(2, 10000, seed, workers));
  });

  criterion("quotient (3 forms) and perfect (2 forms) characterizations agree", 0, [&] {
    return from(suite_classification(laws_detail::full_check_pairs(3), workers));
  });

  criterion("identity P3 -> T P3: continuous, quotient, closed; not hereditarily quotient, adherent, open", 0, [&] {
    const auto p3 = io::load_convergence(data_dir + "/p3.json");
    const MapContext id(CarrierMap::identity(3), p3, apply(Functor::T, p3));
    const auto r = classify(id);
    const bool ok = r.continuous && r.quotient && r.closed && !r.hereditarily_quotient && !r.adherent && !r.open;
    return Outcome{ok, io::to_json(r).dump()};
  });

  criterion("implication arrows hold; reverse witnesses stored; bijections quotient iff perfect", 0, [&] {
    const auto rows = implication_table(3, 2, workers);
    bool ok = true;
    std::size_t witnessed = 0, collapsed = 0, instances = 0;
    std::string detail;
    for (const auto& r : rows) {
      instances += r.instances;
      if (r.violations) {
        ok = false;
        detail += " violated: " + r.arrow.premise + "=>" + r.arrow.conclusion;
      }
      if (collapses_on_finite_carriers(r.arrow)) {
        ++collapsed;
        ok = ok && !r.witness;
        continue;
      }
      if (!r.witness) {
        ok = false;
        detail += " no witness for " + r.reverse;
        continue;
      }
      const auto path = data_dir + "/witnesses/" + r.reverse + ".json";
      if (!std::filesystem::exists(path) ||
          io::witness_to_json(r.reverse, *r.witness) != io::witness_to_json(r.reverse, io::witness_from_json(io::load(path)).second)) {
        ok = false;
        detail += " stored witness differs: " + path;
        continue;
      }
      ++witnessed;
    }
    const auto bij = suite_bijections(3, workers);
    return both({ok, std::to_string(instances) + " arrow instances, " + std::to_string(witnessed) +
                         " stored witnesses, " + std::to_string(collapsed) + " collapsing arrows" + detail},
                from(bij));
  });

  criterion("compactness: perfect/quotient maps vs compact relations up to 3 points; compactoid; images", 300.0, [&] {
    const auto maps = suite_compact_maps(laws_detail::size_pairs(3), workers);
    const auto comp = suite_compactness(3);
    const auto image = suite_image_of_compact(workers);
    return both(both(from(maps), from(comp)), from(image));
  });

  criterion("topological pairs up to 3 points: closed = adherent = countably perfect = perfect", 0, [&] {
    SuiteResult r{"topological perfect ladder"};
    for (unsigned s = 1; s <= 3; ++s)
      for (unsigned t = 1; t <= s; ++t)
        for (const auto& f : surjections(s, t))
          for (const auto& xi : universe(s, SpaceClass::topology))
            for (const auto& tau : universe(t, SpaceClass::topology)) {
              const auto rep = classify(MapContext(f, xi, tau));
              r.check(rep.closed == rep.adherent && rep.adherent == rep.countably_perfect &&
                          rep.countably_perfect == rep.perfect,
                      [&] { return laws_detail::ctx_string(MapContext(f, xi, tau)); });
            }
    return from(r);
  });

  criterion("JE preserved by continuous J-quotient surjections 3->2", 0, [&] {
    return from(suite_preservation({{3, 2}}, workers));
  });

  criterion("Sierpinski {0} is compact at itself and not closed", 0, [&] {
    const auto s = io::load_convergence(data_dir + "/sierpinski.json");
    const Subset zero(2, 0b01);
    bool compact = true;
    for (auto cls : all_classes) compact = compact && is_compact_at(s, zero, zero, cls);
    const bool closed = is_closed(s, zero);
    return Outcome{compact && !closed && s.lim(0b01) == 0b11,
                   std::string("compact ") + (compact ? "yes" : "no") + ", closed " + (closed ? "yes" : "no")};
  });

  criterion("enumeration counts match independent oracles and are deterministic", 0, [&] {
    const auto conv2 = enumerate({2, SpaceClass::convergence}, 1);
    const auto pre3 = enumerate({3, SpaceClass::pretopology}, 1);
    const auto top3 = enumerate({3, SpaceClass::topology}, 1);
    bool ok = conv2.size() == 9 && pre3.size() == 64 && top3.size() == 29;
    ok = ok && tables_of(conv2) == scanned_tables(2, false) && tables_of(pre3) == scanned_tables(3, true);
    ok = ok && top3.size() == preorders(3);
    for (unsigned w : {2u, 4u}) {
      ok = ok && enumerate({2, SpaceClass::convergence}, w) == conv2;
      ok = ok && enumerate({3, SpaceClass::pretopology}, w) == pre3;
      ok = ok && enumerate({3, SpaceClass::topology}, w) == top3;
    }
    const EnumerationSpec sample{3, SpaceClass::convergence, seed, 100};
    ok = ok && enumerate(sample, 1) == enumerate(sample, 4);
    return Outcome{ok, std::to_string(conv2.size()) + " convergences on 2, " + std::to_string(pre3.size()) +
                           " pretopologies and " + std::to_string(top3.size()) + " topologies on 3"};
  });

  criterion("fan and prime exemplars; symbolic decisions match truncations up to 6", 0, [&] {
    const auto fan = symbolic::fan_check(), prime = symbolic::prime_check();
    const auto tr = symbolic::truncation_crosscheck(seed, 20000);
    std::string d = std::to_string(fan.lines.size()) + " fan lines, " + std::to_string(prime.lines.size()) +
                    " prime lines, " + std::to_string(tr.queries) + " truncation queries";
    if (!tr.passed()) d += "; first disagreement: " + tr.first_disagreement;
    for (const auto* rep : {&fan, &prime})
      for (const auto& l : rep->lines)
        if (!l.holds) d += "; failed: " + l.claim;
    return Outcome{fan.passed() && prime.passed() && tr.passed(), d};
  });

  criterion("graph-closed everywhere iff closed in the product, and for the inverse, 2x2 relations", 0, [&] {
    return from(suite_graph_closed(workers));
  });

  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
  return failures == 0 ? 0 : 1;
}
