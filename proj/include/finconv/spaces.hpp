#pragma once

#include "convergence.hpp"

namespace finconv::spaces {

/// The pretopology on {a,b,c} with vicinities V_a = {a,b}, V_b = {b,c}, V_c = {c}.
/// It is not a topology: adh{b,c} = X while adh{c} = {b,c}.
inline Convergence p3() {
  return Convergence::from_vicinities(Carrier::alphabetic(3), {0b011, 0b110, 0b100});
}

/// Sierpiński space on {0,1} with open sets ∅, {0}, {0,1}.
inline Convergence sierpinski() {
  return Convergence::from_vicinities(Carrier::numbered(2), {0b01, 0b11});
}

inline Convergence discrete(unsigned n) {
  return Convergence::discrete(std::make_shared<const Carrier>(Carrier::alphabetic(n)));
}

inline Convergence indiscrete(unsigned n) {
  return Convergence::indiscrete(std::make_shared<const Carrier>(Carrier::alphabetic(n)));
}

}  // namespace finconv::spaces
