#include "braidwrench/artin.hpp"

#include "braidwrench/errors.hpp"

#include <cmath>

namespace braidwrench {

FreeEndo FreeEndo::identity(int n) {
    FreeEndo e;
    e.images.resize(n);
    for (int j = 1; j <= n; ++j) e.images[j - 1].letters = {j};
    return e;
}

bool FreeEndo::is_identity() const {
    for (std::size_t j = 0; j < images.size(); ++j)
        if (images[j].letters != std::vector<std::int32_t>{
                static_cast<std::int32_t>(j) + 1})
            return false;
    return true;
}

std::size_t FreeEndo::total_letters() const {
    std::size_t total = 0;
    for (const FreeWord& w : images) total += w.letters.size();
    return total;
}

FreeWord free_reduce(const std::vector<std::int32_t>& letters) {
    FreeWord out;
    out.letters.reserve(letters.size());
    for (std::int32_t g : letters) {
        if (!out.letters.empty() && out.letters.back() == -g)
            out.letters.pop_back();
        else
            out.letters.push_back(g);
    }
    return out;
}

FreeWord endo_apply(const FreeEndo& endo, const FreeWord& w,
                    std::uint64_t budget) {
    FreeWord out;
    for (std::int32_t g : w.letters) {
        const FreeWord& img = endo.images[std::abs(g) - 1];
        auto push = [&](std::int32_t x) {
            if (!out.letters.empty() && out.letters.back() == -x)
                out.letters.pop_back();
            else
                out.letters.push_back(x);
        };
        if (g > 0)
            for (std::int32_t x : img.letters) push(x);
        else
            for (auto it = img.letters.rbegin(); it != img.letters.rend(); ++it)
                push(-*it);
        if (out.letters.size() > budget)
            throw OracleBudgetExceeded("free-group image exceeded " +
                                       std::to_string(budget) + " letters");
    }
    return out;
}

namespace {

// Generator image under a single braid letter.
FreeEndo letter_endo(int n, Letter g) {
    FreeEndo e = FreeEndo::identity(n);
    const std::int32_t i = std::abs(g);
    if (g > 0) {
        e.images[i - 1].letters = {i, i + 1, -i};
        e.images[i].letters = {i};
    } else {
        e.images[i - 1].letters = {i + 1};
        e.images[i].letters = {-(i + 1), i, i + 1};
    }
    return e;
}

}  // namespace

FreeEndo artin_action(const BraidWord& b, std::uint64_t budget) {
    const int n = b.strands();
    FreeEndo cur = FreeEndo::identity(n);
    for (Letter g : b.letters()) {
        const FreeEndo step = letter_endo(n, g);
        FreeEndo next;
        next.images.reserve(n);
        std::uint64_t total = 0;
        for (const FreeWord& img : cur.images) {
            next.images.push_back(endo_apply(step, img, budget));
            total += next.images.back().letters.size();
            if (total > budget)
                throw OracleBudgetExceeded(
                    "Artin action exceeded " + std::to_string(budget) +
                    " total image letters");
        }
        cur = std::move(next);
    }
    return cur;
}

bool artin_equal(const BraidWord& a, const BraidWord& b,
                 std::uint64_t budget) {
    if (a.strands() != b.strands())
        throw StrandMismatch("artin_equal: strand counts differ");
    return artin_action(a, budget) == artin_action(b, budget);
}

}  // namespace braidwrench
