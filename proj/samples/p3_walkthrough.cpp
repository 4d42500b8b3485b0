// Walks through the three-point pretopology P3 and the identity onto its
// topological reflection.

#include <iostream>

#include "finconv/maps.hpp"
#include "finconv/spaces.hpp"

int main() {
  using namespace finconv;
  const auto p3 = spaces::p3();
  const auto& x = p3.carrier();
  auto show = [&](mask_t m) {
    std::string s = "{";
    for_each_point(m, [&](unsigned i) { s += (s.size() > 1 ? "," : "") + x.label(i); });
    return s + "}";
  };

  std::cout << "open sets:";
  for (mask_t o : open_masks(p3)) std::cout << " " << show(o);
  std::cout << "\nadh{c} = " << show(adherence(p3, Subset(3, 0b100)).bits())
            << ", adh{b,c} = " << show(adherence(p3, Subset(3, 0b110)).bits()) << "\n";

  const auto t = apply(Functor::T, p3);
  std::cout << "T-reflection: lim {c}^ = " << show(t.lim(0b100)) << "\n";

  const MapContext id(CarrierMap::identity(3), p3, t);
  const auto rep = classify(id);
  std::cout << "identity P3 -> T P3:\n";
  for (const auto& [name, field] : report_fields()) std::cout << "  " << name << ": " << (rep.*field ? "yes" : "no") << "\n";
}
