#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace finconv {

/// Base of every error the library reports about its inputs.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class carrier_mismatch : public error {
 public:
  carrier_mismatch() : error("operands live on different carriers") {}
  explicit carrier_mismatch(const std::string& what) : error(what) {}
};

class degenerate_filter : public error {
 public:
  degenerate_filter() : error("operation requires a non-degenerate filter") {}
};

class size_cap_exceeded : public error {
 public:
  using error::error;
};

class not_surjective : public error {
 public:
  not_surjective() : error("map is not surjective") {}
};

class invalid_input : public error {
 public:
  using error::error;
};

/// One violated convergence axiom instance. Subsets are bitmasks on the
/// carrier of the offending table.
struct AxiomViolation {
  std::string axiom;  // "centered", "antitone" or "missing"
  unsigned point = 0;
  std::uint32_t subset = 0;
  std::uint32_t superset = 0;  // antitone only: B = subset ⊆ superset = A
};

class axiom_violation : public error {
 public:
  explicit axiom_violation(std::vector<AxiomViolation> v)
      : error(describe(v)), violations_(std::move(v)) {}
  const std::vector<AxiomViolation>& violations() const { return violations_; }

 private:
  static std::string describe(const std::vector<AxiomViolation>& v) {
    std::string s = "convergence axioms violated (" + std::to_string(v.size()) + " instance";
    if (v.size() != 1) s += "s";
    s += ")";
    if (!v.empty()) s += ", first: " + v.front().axiom;
    return s;
  }
  std::vector<AxiomViolation> violations_;
};

/// Internal consistency check that stays on in release builds. Two
/// independent computations disagreeing is a library bug, not bad input.
inline void check_internal(bool ok, const char* what) {
  if (!ok) throw std::logic_error(std::string("internal disagreement: ") + what);
}

}  // namespace finconv
