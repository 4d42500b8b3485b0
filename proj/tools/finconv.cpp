// finconv: command-line front end for the finite convergence library.
//
// Exit status: 0 success, 1 a checked law or property failed, 2 bad input.

#include <CLI11.hpp>

#include <filesystem>
#include <iomanip>
#include <iostream>

#include "finconv/io.hpp"
#include "finconv/laws.hpp"

namespace {

using namespace finconv;
using io::json;

constexpr int exit_ok = 0;
constexpr int exit_failed = 1;
constexpr int exit_input = 2;

std::string class_of(const Convergence& c) {
  if (is_topology(c)) return "topology";
  if (is_pretopology(c)) return "pretopology";
  if (is_pseudotopology(c)) return "pseudotopology";
  return "convergence";
}

void print(const json& j) { std::cout << j.dump(2) << "\n"; }

int cmd_validate(const std::vector<std::string>& files) {
  int status = exit_ok;
  for (const auto& f : files) {
    try {
      const auto c = io::load_convergence(f);
      std::cout << "ok " << f << " (" << c.size() << " points, " << class_of(c) << ")\n";
    } catch (const invalid_input& e) {
      std::cerr << e.what() << "\n";
      status = exit_input;
    }
  }
  return status;
}

int cmd_reflect(const std::string& functor, const std::string& file) {
  const auto h = parse_functor(functor);
  if (!h) throw invalid_input("unknown functor '" + functor + "' (T, S0, S1, S, I, Seq, I1, K)");
  print(io::to_json(apply(*h, io::load_convergence(file))));
  return exit_ok;
}

int cmd_classify(const std::string& map_file, const std::string& source, const std::string& target, bool witness) {
  auto xi = io::load_convergence(source);
  auto tau = io::load_convergence(target);
  const auto doc = io::load(map_file);
  auto f = io::map_from_json(doc, xi.carrier(), tau.carrier());
  if (!f.is_surjective()) doc.fail("map is not surjective", "map");
  const MapContext ctx(std::move(f), std::move(xi), std::move(tau));
  const auto rep = classify(ctx);
  json out;
  out["report"] = io::to_json(rep);
  if (witness) out["witnesses"] = io::to_json(ctx, find_witnesses(ctx, rep));
  print(out);
  return exit_ok;
}

int cmd_check_compact(const std::string& space, const std::string& family, const std::string& at,
                      const std::string& cls_name) {
  const auto c = io::load_convergence(space);
  const auto cls = parse_class(cls_name);
  if (!cls) throw invalid_input("unknown filter class '" + cls_name + "' (F0_CLOSED, F0, F1, F)");
  const auto a = io::family_from_json(io::load(family), c.carrier());
  const auto b = io::family_from_json(io::load(at), c.carrier());
  print(json{{"compact", is_compact_at(c, a, b, *cls)}, {"class", class_name(*cls)}});
  return exit_ok;
}

int cmd_enumerate(unsigned size, const std::string& cls_name, bool count_only, std::optional<std::uint64_t> seed,
                  std::size_t count) {
  const auto cls = parse_space_class(cls_name);
  if (!cls) throw invalid_input("unknown class '" + cls_name + "' (convergence, pseudotopology, pretopology, topology)");
  const auto all = enumerate({size, *cls, seed, count});
  if (count_only) {
    std::cout << all.size() << "\n";
    return exit_ok;
  }
  for (const auto& c : all) std::cout << io::to_json(c).dump() << "\n";
  return exit_ok;
}

int cmd_search(const std::string& predicate, unsigned source, unsigned target, const std::string& domain,
               const std::string& emit, bool list) {
  if (list) {
    for (const auto& p : predicate_registry()) std::cout << std::left << std::setw(48) << p.name << p.description << "\n";
    return exit_ok;
  }
  if (predicate.empty()) throw invalid_input("--predicate is required (see --list)");
  SearchTask task{predicate, source, target, MapDomain::surjection};
  if (domain == "identity")
    task.domain = MapDomain::identity;
  else if (domain != "surjection")
    throw invalid_input("unknown domain '" + domain + "' (surjection, identity)");
  const auto res = search(task);
  json out;
  out["predicate"] = predicate;
  out["examined"] = res.examined;
  if (!res.found()) {
    out["result"] = "exhausted";
    print(out);
    return exit_ok;
  }
  out["result"] = "found";
  const auto w = io::witness_to_json(predicate, *res.witness);
  out["witness"] = w;
  print(out);
  if (!emit.empty()) {
    std::ofstream f(emit);
    if (!f) throw invalid_input("cannot write '" + emit + "'");
    f << w.dump(2) << "\n";
  }
  return exit_ok;
}

void print_suites(const std::vector<SuiteResult>& suites) {
  for (const auto& s : suites) {
    std::cout << (s.passed() ? "pass " : "FAIL ") << std::left << std::setw(28) << s.name << std::right << std::setw(12)
              << s.instances << " instances";
    if (!s.passed()) std::cout << ", " << s.failures << " failures; first: " << s.first_failure;
    std::cout << "\n";
  }
}

int cmd_laws(unsigned size, std::size_t samples, std::uint64_t seed, const std::vector<std::string>& spaces) {
  std::vector<SuiteResult> suites;
  if (!spaces.empty()) {
    std::vector<Convergence> cs;
    for (const auto& f : spaces) cs.push_back(io::load_convergence(f));
    suites = run_laws_on(cs);
  } else {
    suites = run_laws({size, samples, seed, default_workers()});
    const auto cells = preservation_table(std::min(size, 3u), std::min(size, 2u));
    SuiteResult table{"quotient-type table cells"};
    for (const auto& c : cells) {
      SuiteResult part{table.name};
      part.instances = c.instances;
      part.failures = c.violations;
      if (c.violations) part.first_failure = c.quotient_type + " / " + c.property;
      table.absorb(part);
    }
    suites.push_back(table);
  }
  print_suites(suites);
  bool ok = true;
  for (const auto& s : suites) ok = ok && s.passed();
  std::cout << suites.size() << " suites, " << (ok ? "all passed" : "FAILED") << "\n";
  return ok ? exit_ok : exit_failed;
}

int cmd_tables(const std::string& format) {
  if (format != "json" && format != "table") throw invalid_input("unknown format '" + format + "' (json, table)");
  const auto arrows = implication_table();
  const auto cells = preservation_table();
  bool ok = true;
  json jarrows = json::array(), jcells = json::array();
  for (const auto& r : arrows) {
    ok = ok && r.violations == 0;
    json j{{"premise", r.arrow.premise},
           {"conclusion", r.arrow.conclusion},
           {"instances", r.instances},
           {"violations", r.violations},
           {"reverse_search", r.reverse}};
    if (r.witness)
      j["reverse"] = io::witness_to_json(r.reverse, *r.witness);
    else
      j["reverse"] = "collapses at finite scale";
    jarrows.push_back(std::move(j));
  }
  for (const auto& c : cells) {
    ok = ok && c.violations == 0;
    jcells.push_back(json{{"quotient_type", c.quotient_type},
                          {"property", c.property},
                          {"instances", c.instances},
                          {"violations", c.violations}});
  }
  if (format == "json") {
    print(json{{"implications", jarrows}, {"preservation", jcells}});
  } else {
    std::cout << "implications (surjections onto at most 2 points from at most 3; identities on 3 points for reverse searches)\n";
    for (const auto& r : arrows) {
      std::cout << "  " << std::left << std::setw(22) << r.arrow.premise << "=> " << std::setw(22) << r.arrow.conclusion
                << (r.violations ? "VIOLATED" : "holds   ") << std::right << std::setw(8) << r.instances << "  ";
      if (r.witness)
        std::cout << "not reversible: " << r.reverse << "\n";
      else
        std::cout << "collapses at finite scale\n";
    }
    std::cout << "preservation by continuous quotient-like maps\n";
    for (const auto& c : cells)
      std::cout << "  " << std::left << std::setw(24) << c.quotient_type << std::setw(34) << c.property
                << (c.violations ? "VIOLATED" : "holds   ") << std::right << std::setw(8) << c.instances << "\n";
  }
  return ok ? exit_ok : exit_failed;
}

int cmd_exemplar(const std::string& which, bool check) {
  if (which != "fan" && which != "prime") throw invalid_input("unknown exemplar '" + which + "' (fan, prime)");
  if (!check) {
    std::cout << (which == "fan" ? "fan: x_inf, rows X_n with spine points x_n; pretopology with cofinite vicinities\n"
                                 : "prime: N with x_inf; free ultrafilters and {x_inf}^ converge to x_inf\n");
    return exit_ok;
  }
  const auto rep = which == "fan" ? symbolic::fan_check() : symbolic::prime_check();
  for (const auto& l : rep.lines) {
    std::cout << (l.holds ? "ok   " : "FAIL ") << l.claim << "\n";
    if (!l.detail.empty()) std::cout << "     " << l.detail << "\n";
  }
  const auto tr = symbolic::truncation_crosscheck(7, 2000);
  std::cout << (tr.passed() ? "ok   " : "FAIL ") << "symbolic decisions match truncations T_0..T_6 (" << tr.queries
            << " queries)\n";
  if (!tr.passed()) std::cout << "     first disagreement: " << tr.first_disagreement << "\n";
  return rep.passed() && tr.passed() ? exit_ok : exit_failed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Convergences, reflectors and quotient-like maps on finite carriers"};
  app.require_subcommand(1);

  std::vector<std::string> files;
  auto* validate = app.add_subcommand("validate", "Check convergence files against the axioms");
  validate->add_option("files", files, "Convergence JSON files")->required();

  std::string functor, file;
  auto* reflect_cmd = app.add_subcommand("reflect", "Apply a reflector or coreflector");
  reflect_cmd->add_option("--functor", functor, "T, S0, S1, S, I, Seq, I1 or K")->required();
  reflect_cmd->add_option("file", file, "Convergence JSON file")->required();

  std::string map_file, source, target;
  bool witness = false;
  auto* classify_cmd = app.add_subcommand("classify-map", "Classify a surjection between two convergences");
  classify_cmd->add_option("--map", map_file)->required();
  classify_cmd->add_option("--source", source)->required();
  classify_cmd->add_option("--target", target)->required();
  classify_cmd->add_flag("--witness", witness, "Attach a violating instance for each false flag");

  std::string space, family, at, cls = "F";
  auto* compact_cmd = app.add_subcommand("check-compact", "Is a family compact at another family");
  compact_cmd->add_option("--space", space)->required();
  compact_cmd->add_option("--family", family)->required();
  compact_cmd->add_option("--at", at)->required();
  compact_cmd->add_option("--class", cls, "F0_CLOSED, F0, F1 or F");

  unsigned size = 2;
  std::string space_class = "convergence";
  bool count_only = false;
  std::optional<std::uint64_t> seed;
  std::size_t count = 10;
  auto* enumerate_cmd = app.add_subcommand("enumerate", "List every member of a class on labeled points");
  enumerate_cmd->add_option("--size", size)->required();
  enumerate_cmd->add_option("--class", space_class, "convergence, pseudotopology, pretopology or topology");
  enumerate_cmd->add_flag("--count-only", count_only);
  enumerate_cmd->add_option("--seed", seed, "Sample instead of enumerating");
  enumerate_cmd->add_option("--count", count, "Sample size with --seed");

  std::string predicate, domain = "surjection", emit;
  unsigned source_size = 3, target_size = 2;
  bool list = false;
  auto* search_cmd = app.add_subcommand("search", "Find the first map satisfying a predicate");
  search_cmd->add_option("--predicate", predicate);
  search_cmd->add_option("--source-size", source_size, "Largest source carrier");
  search_cmd->add_option("--target-size", target_size, "Largest target carrier");
  search_cmd->add_option("--domain", domain, "surjection or identity");
  search_cmd->add_option("--emit", emit, "Write the witness to this file");
  search_cmd->add_flag("--list", list, "List predicates");

  unsigned law_size = 2;
  std::size_t samples = 1000;
  std::uint64_t law_seed = 1;
  std::vector<std::string> law_spaces;
  auto* laws_cmd = app.add_subcommand("laws", "Run every theorem suite");
  laws_cmd->add_option("--size", law_size, "Largest carrier swept exhaustively (1-3)");
  laws_cmd->add_option("--samples", samples, "Random instances where sweeps sample");
  laws_cmd->add_option("--seed", law_seed);
  laws_cmd->add_option("--space", law_spaces, "Check these convergences instead of the enumerated ones");

  std::string format = "table";
  auto* tables_cmd = app.add_subcommand("tables", "Rebuild the implication and preservation tables");
  tables_cmd->add_option("--format", format, "json or table");

  std::string which;
  bool check = false;
  auto* exemplar_cmd = app.add_subcommand("exemplar", "Symbolic checks on the countable exemplars");
  exemplar_cmd->add_option("which", which, "fan or prime")->required();
  exemplar_cmd->add_flag("--check", check);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? exit_ok : exit_input;
  }

  try {
    if (*validate) return cmd_validate(files);
    if (*reflect_cmd) return cmd_reflect(functor, file);
    if (*classify_cmd) return cmd_classify(map_file, source, target, witness);
    if (*compact_cmd) return cmd_check_compact(space, family, at, cls);
    if (*enumerate_cmd) return cmd_enumerate(size, space_class, count_only, seed, count);
    if (*search_cmd) return cmd_search(predicate, source_size, target_size, domain, emit, list);
    if (*laws_cmd) return cmd_laws(law_size, samples, law_seed, law_spaces);
    if (*tables_cmd) return cmd_tables(format);
    if (*exemplar_cmd) return cmd_exemplar(which, check);
  } catch (const finconv::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_input;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_input;
  } catch (const std::logic_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_failed;
  }
  return exit_input;
}
