// Exact piecewise-linear functions: the torus-knot Upsilon closed form and
// the homogenized Upsilon of a braid on its computable domain
// [0, min(2/(n-1), 1)]. No floating point anywhere; slope assertions
// downstream are exact equalities.

#pragma once

#include "braidwrench/braid.hpp"
#include "braidwrench/fdtc.hpp"
#include "braidwrench/rational.hpp"

#include <vector>

namespace braidwrench {

// Continuous piecewise-linear function on [0, t_K] with rational
// breakpoints t_0 = 0 < ... < t_K and values v_j, linear in between and
// v_0 = 0. Interior breakpoints with no slope change are dropped on
// construction, so equal functions compare equal.
class PLFunction {
  public:
    PLFunction(std::vector<Rat> breakpoints, std::vector<Rat> values);

    const std::vector<Rat>& breakpoints() const { return breakpoints_; }
    const std::vector<Rat>& values() const { return values_; }
    Rat domain_end() const { return breakpoints_.back(); }
    std::vector<Rat> slopes() const;

    bool operator==(const PLFunction&) const = default;

  private:
    std::vector<Rat> breakpoints_;
    std::vector<Rat> values_;
};

// Exact interpolation; DomainError outside [0, t_K].
Rat pl_eval(const PLFunction& f, const Rat& t);

// cf * f + cg * g on the common domain, breakpoints merged.
PLFunction pl_combine(const PLFunction& f, const PLFunction& g, const Rat& cf,
                      const Rat& cg);

// Slope just after t minus slope just before t (zero off the interior).
Rat slope_change_at(const PLFunction& f, const Rat& t);

// Upsilon of the torus knot T_{n,nk+1} restricted to [0, min(2/(n-1), 1)]:
// slope -n(n-1)k/2 up to 2/n, then the slope increases by nk.
PLFunction torus_upsilon(int n, int k);

// Homogenized Upsilon of an n-braid: slope -wr/2 on [0, 2/n], slope
// -wr/2 + n*omega on [2/n, min(2/(n-1), 1)]. For n = 2 the two pieces
// degenerate to a single line on [0, 1].
struct HUResult {
    PLFunction fn;
    long long writhe;
    Fdtc omega;
    Rat slope_change_at_two_over_n;  // n * omega
};

HUResult homogenized_upsilon(const BraidWord& b,
                             std::uint64_t budget = kDefaultBudget);

}  // namespace braidwrench
