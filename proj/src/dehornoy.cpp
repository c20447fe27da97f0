#include "braidwrench/dehornoy.hpp"

#include "braidwrench/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace braidwrench {

namespace {

// Mutable word as a doubly-linked list over index-based arenas, so a handle
// rewrite splices its rewritten interior in O(interior length). Node ids
// stay valid across splices; freed ids are recycled.
class WordList {
  public:
    explicit WordList(const std::vector<Letter>& letters) {
        const int m = static_cast<int>(letters.size());
        letter_.assign(letters.begin(), letters.end());
        prev_.resize(m);
        next_.resize(m);
        for (int i = 0; i < m; ++i) {
            prev_[i] = i - 1;
            next_[i] = i + 1 < m ? i + 1 : kNone;
        }
        head_ = m > 0 ? 0 : kNone;
    }

    static constexpr int kNone = -1;

    int head() const { return head_; }
    int next(int u) const { return next_[u]; }
    int prev(int u) const { return prev_[u]; }
    Letter letter(int u) const { return letter_[u]; }

    // Replaces the segment [from..to] (inclusive) by `seg`; returns the id
    // of the first new node, or the node after `to` if `seg` is empty.
    int splice(int from, int to, const std::vector<Letter>& seg) {
        const int before = prev_[from];
        const int after = next_[to];
        for (int u = from;; u = next_[u]) {
            free_.push_back(u);
            if (u == to) break;
        }
        int prev_node = before;
        int first_new = kNone;
        for (Letter g : seg) {
            const int nn = alloc(g);
            prev_[nn] = prev_node;
            if (prev_node == kNone)
                head_ = nn;
            else
                next_[prev_node] = nn;
            if (first_new == kNone) first_new = nn;
            prev_node = nn;
        }
        if (prev_node == kNone)
            head_ = after;
        else
            next_[prev_node] = after;
        if (after != kNone) prev_[after] = prev_node;
        return first_new != kNone ? first_new : after;
    }

    std::vector<Letter> to_vector() const {
        std::vector<Letter> out;
        for (int u = head_; u != kNone; u = next_[u])
            out.push_back(letter_[u]);
        return out;
    }

  private:
    int alloc(Letter g) {
        if (!free_.empty()) {
            const int u = free_.back();
            free_.pop_back();
            letter_[u] = g;
            return u;
        }
        letter_.push_back(g);
        prev_.push_back(kNone);
        next_.push_back(kNone);
        return static_cast<int>(letter_.size()) - 1;
    }

    std::vector<Letter> letter_;
    std::vector<int> prev_, next_;
    std::vector<int> free_;
    int head_;
};

}  // namespace

ReductionReport handle_reduce(const BraidWord& w, std::uint64_t budget) {
    WordList list(w.letters());

    // Scan stack of candidate handle starts. Letters are pushed left to
    // right; an arriving letter of index i pops every entry of larger index
    // (those can no longer bracket a handle past i), replaces a same-index
    // same-sign entry, and closes a handle against a same-index
    // opposite-sign entry. Indices on the stack are strictly increasing
    // bottom to top, so the stack never exceeds n-1 entries.
    std::vector<int> stack;
    std::vector<Letter> seg;
    std::uint64_t steps = 0;
    int cur = list.head();
    while (cur != WordList::kNone) {
        const Letter g = list.letter(cur);
        const int i = std::abs(g);
        while (!stack.empty() && std::abs(list.letter(stack.back())) > i)
            stack.pop_back();
        if (!stack.empty() && std::abs(list.letter(stack.back())) == i) {
            const int p = stack.back();
            if (list.letter(p) == g) {
                stack.back() = cur;
                cur = list.next(cur);
                continue;
            }
            // Handle (p, cur): interior is handle-free because cur is the
            // leftmost position at which any handle closes.
            if (++steps > budget)
                throw BudgetExceeded("handle reduction exceeded " +
                                     std::to_string(budget) + " steps");
            const Letter e = list.letter(p) > 0 ? 1 : -1;
            seg.clear();
            for (int u = list.next(p); u != cur; u = list.next(u)) {
                const Letter d = list.letter(u);
                if (std::abs(d) == i + 1) {
                    seg.push_back(-(i + 1) * e);
                    seg.push_back(d > 0 ? i : -i);
                    seg.push_back((i + 1) * e);
                } else {
                    seg.push_back(d);
                }
            }
            const int before = list.prev(p);
            cur = list.splice(p, cur, seg);
            // The rewrite removed letters that had justified earlier pops,
            // so rebuild the stack for the unchanged prefix: walking left
            // from `before`, a letter is live iff its index is a strict
            // right-to-left minimum (nothing of index <= it follows it).
            stack.clear();
            int min_index = std::numeric_limits<int>::max();
            for (int u = before; u != WordList::kNone && min_index > 1;
                 u = list.prev(u)) {
                const int idx = std::abs(list.letter(u));
                if (idx < min_index) {
                    min_index = idx;
                    stack.push_back(u);
                }
            }
            std::reverse(stack.begin(), stack.end());
        } else {
            stack.push_back(cur);
            cur = list.next(cur);
        }
    }

    ReductionReport report{BraidWord(w.strands(), list.to_vector()), steps,
                           DehornoySign::Zero};
    if (!report.reduced.empty()) {
        int min_index = std::numeric_limits<int>::max();
        Letter min_letter = 0;
        for (Letter g : report.reduced.letters()) {
            if (std::abs(g) < min_index) {
                min_index = std::abs(g);
                min_letter = g;
            }
        }
        report.sign =
            min_letter > 0 ? DehornoySign::Positive : DehornoySign::Negative;
    }
    return report;
}

DehornoySign dehornoy_sign(const BraidWord& w, std::uint64_t budget) {
    return handle_reduce(w, budget).sign;
}

Ordering compare(const BraidWord& a, const BraidWord& b,
                 std::uint64_t budget) {
    if (a.strands() != b.strands())
        throw StrandMismatch("compare: strand counts differ");
    switch (dehornoy_sign(concat(inverse(a), b), budget)) {
        case DehornoySign::Positive: return Ordering::Less;
        case DehornoySign::Zero: return Ordering::Equal;
        default: return Ordering::Greater;
    }
}

long long dehornoy_floor(const BraidWord& b, std::uint64_t budget) {
    const int n = b.strands();
    if (n <= 1) return 0;

    // Occurrence window: with r_i / s_i counts of a_i^{+1} / a_i^{-1},
    // -s_i <= omega <= r_i for every i, and floor <= omega <= floor + 1.
    long long lo = std::numeric_limits<long long>::min();
    long long hi = std::numeric_limits<long long>::max();
    for (int i = 1; i < n; ++i) {
        long long r = 0, s = 0;
        for (Letter g : b.letters()) {
            if (g == i) ++r;
            if (g == -i) ++s;
        }
        lo = std::max(lo, -s);
        hi = std::min(hi, r);
    }
    const BraidWord twist = full_twist(n);
    auto twist_below = [&](long long m) {
        return compare(power(twist, m), b, budget) != Ordering::Greater;
    };
    // Largest m in [lo-1, hi] with Delta^{2m} <= b; both ends are valid
    // brackets by the occurrence window.
    long long lo_m = lo - 1, hi_m = hi;
    while (lo_m < hi_m) {
        const long long mid = lo_m + (hi_m - lo_m + 1) / 2;
        if (twist_below(mid))
            lo_m = mid;
        else
            hi_m = mid - 1;
    }
    return lo_m;
}

const char* to_string(DehornoySign s) {
    switch (s) {
        case DehornoySign::Negative: return "negative";
        case DehornoySign::Zero: return "zero";
        default: return "positive";
    }
}

const char* to_string(Ordering o) {
    switch (o) {
        case Ordering::Less: return "less";
        case Ordering::Equal: return "equal";
        default: return "greater";
    }
}

}  // namespace braidwrench
