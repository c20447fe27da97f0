#include "braidwrench/upsilon.hpp"

#include "braidwrench/errors.hpp"

#include <algorithm>

namespace braidwrench {

PLFunction::PLFunction(std::vector<Rat> breakpoints, std::vector<Rat> values) {
    if (breakpoints.empty() || breakpoints.size() != values.size())
        throw BadParams("PLFunction: breakpoint/value size mismatch");
    if (breakpoints.front() != 0 || values.front() != 0)
        throw BadParams("PLFunction: must start at (0, 0)");
    for (std::size_t j = 1; j < breakpoints.size(); ++j)
        if (!(breakpoints[j - 1] < breakpoints[j]))
            throw BadParams("PLFunction: breakpoints not ascending");

    breakpoints_.push_back(breakpoints.front());
    values_.push_back(values.front());
    for (std::size_t j = 1; j < breakpoints.size(); ++j) {
        // drop the previous point if it is collinear with its neighbors
        while (breakpoints_.size() >= 2) {
            const std::size_t a = breakpoints_.size() - 2;
            const std::size_t m = breakpoints_.size() - 1;
            const Rat left = (values_[m] - values_[a]) *
                             (breakpoints[j] - breakpoints_[m]);
            const Rat right = (values[j] - values_[m]) *
                              (breakpoints_[m] - breakpoints_[a]);
            if (left != right) break;
            breakpoints_.pop_back();
            values_.pop_back();
        }
        breakpoints_.push_back(breakpoints[j]);
        values_.push_back(values[j]);
    }
}

std::vector<Rat> PLFunction::slopes() const {
    std::vector<Rat> out;
    for (std::size_t j = 1; j < breakpoints_.size(); ++j)
        out.push_back((values_[j] - values_[j - 1]) /
                      (breakpoints_[j] - breakpoints_[j - 1]));
    return out;
}

Rat pl_eval(const PLFunction& f, const Rat& t) {
    const auto& bp = f.breakpoints();
    const auto& v = f.values();
    if (t < 0 || t > bp.back())
        throw DomainError("pl_eval: t = " + rat_str(t) + " outside [0, " +
                          rat_str(bp.back()) + "]");
    auto it = std::upper_bound(bp.begin(), bp.end(), t);
    if (it == bp.end()) return v.back();
    const std::size_t j = static_cast<std::size_t>(it - bp.begin());
    if (j == 0) return v.front();
    return v[j - 1] +
           (v[j] - v[j - 1]) * (t - bp[j - 1]) / (bp[j] - bp[j - 1]);
}

PLFunction pl_combine(const PLFunction& f, const PLFunction& g, const Rat& cf,
                      const Rat& cg) {
    const Rat end = std::min(f.domain_end(), g.domain_end());
    if (end <= 0) throw DomainError("pl_combine: empty common domain");
    std::vector<Rat> merged;
    for (const Rat& t : f.breakpoints())
        if (t <= end) merged.push_back(t);
    for (const Rat& t : g.breakpoints())
        if (t <= end) merged.push_back(t);
    merged.push_back(end);
    std::sort(merged.begin(), merged.end());
    merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
    std::vector<Rat> values;
    values.reserve(merged.size());
    for (const Rat& t : merged)
        values.push_back(cf * pl_eval(f, t) + cg * pl_eval(g, t));
    return PLFunction(std::move(merged), std::move(values));
}

Rat slope_change_at(const PLFunction& f, const Rat& t) {
    const auto& bp = f.breakpoints();
    const auto slopes = f.slopes();
    for (std::size_t j = 1; j + 1 < bp.size(); ++j)
        if (bp[j] == t) return slopes[j] - slopes[j - 1];
    return Rat(0);
}

PLFunction torus_upsilon(int n, int k) {
    if (n < 2 || k < 1) throw BadParams("torus_upsilon: need n >= 2, k >= 1");
    const Rat end = std::min(Rat(2, n - 1), Rat(1));
    const Rat knee(2, n);
    const Rat slope1 = Rat(-static_cast<long long>(n) * (n - 1) * k, 2);
    if (knee >= end)  // n = 2: the first piece covers the whole domain
        return PLFunction({Rat(0), end}, {Rat(0), slope1 * end});
    const Rat slope2 = slope1 + n * k;
    const Rat v1 = slope1 * knee;
    return PLFunction({Rat(0), knee, end},
                      {Rat(0), v1, v1 + slope2 * (end - knee)});
}

HUResult homogenized_upsilon(const BraidWord& b, std::uint64_t budget) {
    const int n = b.strands();
    if (n < 2) throw BadParams("homogenized_upsilon: need >= 2 strands");
    const long long wr = writhe(b);
    const Fdtc omega = fdtc(b, budget);
    const Rat end = std::min(Rat(2, n - 1), Rat(1));
    const Rat knee(2, n);
    const Rat slope1(-wr, 2);
    PLFunction fn = [&] {
        if (knee >= end)
            return PLFunction({Rat(0), end}, {Rat(0), slope1 * end});
        const Rat slope2 = slope1 + n * omega.value;
        const Rat v1 = slope1 * knee;
        return PLFunction({Rat(0), knee, end},
                          {Rat(0), v1, v1 + slope2 * (end - knee)});
    }();
    return HUResult{std::move(fn), wr, omega, n * omega.value};
}

}  // namespace braidwrench
