#include "braidwrench/braid.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <string>

namespace braidwrench {

BraidWord::BraidWord(int strands, std::vector<Letter> letters)
    : strands_(strands), letters_(std::move(letters)) {
    if (strands < 1) throw BadParams("strand count must be >= 1");
    for (Letter g : letters_) {
        if (g == 0 || std::abs(g) > strands - 1)
            throw BadParams("letter " + std::to_string(g) +
                            " out of range for " + std::to_string(strands) +
                            " strands");
    }
}

Perm Perm::identity(int n) {
    Perm p;
    p.images.resize(n);
    std::iota(p.images.begin(), p.images.end(), 1);
    return p;
}

bool Perm::is_identity() const {
    for (std::size_t j = 0; j < images.size(); ++j)
        if (images[j] != static_cast<int>(j) + 1) return false;
    return true;
}

std::vector<int> Perm::cycle_ids() const {
    const int n = static_cast<int>(images.size());
    std::vector<int> id(n, -1);
    int next = 0;
    for (int s = 0; s < n; ++s) {
        if (id[s] >= 0) continue;
        int j = s;
        while (id[j] < 0) {
            id[j] = next;
            j = images[j] - 1;
        }
        ++next;
    }
    return id;
}

int Perm::cycle_count() const {
    auto ids = cycle_ids();
    return ids.empty() ? 0 : 1 + *std::max_element(ids.begin(), ids.end());
}

BraidWord concat(const BraidWord& a, const BraidWord& b) {
    if (a.strands() != b.strands())
        throw StrandMismatch("concat: " + std::to_string(a.strands()) +
                             " vs " + std::to_string(b.strands()) +
                             " strands");
    std::vector<Letter> w = a.letters();
    w.insert(w.end(), b.letters().begin(), b.letters().end());
    return BraidWord(a.strands(), std::move(w));
}

BraidWord inverse(const BraidWord& a) {
    std::vector<Letter> w(a.letters().rbegin(), a.letters().rend());
    for (Letter& g : w) g = -g;
    return BraidWord(a.strands(), std::move(w));
}

BraidWord power(const BraidWord& a, long long k) {
    const BraidWord& base = k >= 0 ? a : inverse(a);
    const long long reps = k >= 0 ? k : -k;
    std::vector<Letter> w;
    w.reserve(base.length() * static_cast<std::size_t>(reps));
    for (long long r = 0; r < reps; ++r)
        w.insert(w.end(), base.letters().begin(), base.letters().end());
    return BraidWord(a.strands(), std::move(w));
}

long long writhe(const BraidWord& a) {
    long long s = 0;
    for (Letter g : a.letters()) s += g > 0 ? 1 : -1;
    return s;
}

Perm perm_of(const BraidWord& a) {
    Perm p = Perm::identity(a.strands());
    for (Letter g : a.letters()) {
        const int i = std::abs(g);
        std::swap(p.images[i - 1], p.images[i]);
    }
    return p;
}

int closure_components(const BraidWord& a) {
    return perm_of(a).cycle_count();
}

BraidWord knotting_suffix(const BraidWord& a) {
    Perm p = perm_of(a);
    std::vector<Letter> eps;
    for (int i = 1; i < a.strands(); ++i) {
        auto ids = p.cycle_ids();
        if (ids[i - 1] != ids[i]) {
            eps.push_back(i);
            std::swap(p.images[i - 1], p.images[i]);
        }
    }
    return BraidWord(a.strands(), std::move(eps));
}

BraidWord disjoint_union(const std::vector<BraidWord>& parts) {
    if (parts.empty()) throw BadParams("disjoint_union: no parts");
    int n = 0;
    std::size_t len = 0;
    for (const BraidWord& p : parts) {
        n += p.strands();
        len += p.length();
    }
    std::vector<Letter> w;
    w.reserve(len);
    int shift = 0;
    for (const BraidWord& p : parts) {
        for (Letter g : p.letters())
            w.push_back(g > 0 ? g + shift : g - shift);
        shift += p.strands();
    }
    return BraidWord(n, std::move(w));
}

BraidWord delta(int n) {
    if (n < 1) throw BadParams("delta: n must be >= 1");
    std::vector<Letter> w;
    for (int i = 1; i < n; ++i) w.push_back(i);
    return BraidWord(n, std::move(w));
}

BraidWord delta_rev(int n) {
    if (n < 1) throw BadParams("delta_rev: n must be >= 1");
    std::vector<Letter> w;
    for (int i = n - 1; i >= 1; --i) w.push_back(i);
    return BraidWord(n, std::move(w));
}

BraidWord full_twist(int n) { return power(delta(n), n); }

BraidWord torus_braid(int p, long long q) { return power(delta(p), q); }

BraidWord beta_nm(int n, int m) {
    if (n < 1 || m < 1) throw BadParams("beta_nm: need n, m >= 1");
    BraidWord block = concat(delta(n), delta_rev(n));
    return concat(power(block, m - 1), delta(n));
}

BraidWord elrifai_K(int k) {
    if (k < 1) throw BadParams("elrifai_K: k must be >= 1");
    std::vector<Letter> w;
    for (int r = 0; r < 2 * k; ++r) w.insert(w.end(), {1, 2, 2, 1});
    w.push_back(1);
    for (int r = 0; r < 2 * k + 1; ++r) w.push_back(-2);
    return BraidWord(3, std::move(w));
}

BraidWord elrifai_L(int k) {
    if (k < 1) throw BadParams("elrifai_L: k must be >= 1");
    std::vector<Letter> w;
    for (int r = 0; r < 2 * k + 1; ++r) w.insert(w.end(), {1, 2, 2, 1});
    w.push_back(1);
    for (int r = 0; r < 2 * k - 1; ++r) w.push_back(-2);
    return BraidWord(3, std::move(w));
}

namespace {

BraidWord random_short_word(int strands, std::mt19937_64& rng) {
    if (strands < 2) return BraidWord::identity(strands);
    std::uniform_int_distribution<int> len_dist(1, 4);
    std::uniform_int_distribution<int> idx_dist(1, strands - 1);
    std::uniform_int_distribution<int> sign_dist(0, 1);
    std::vector<Letter> w;
    const int len = len_dist(rng);
    for (int j = 0; j < len; ++j) {
        const int i = idx_dist(rng);
        w.push_back(sign_dist(rng) ? i : -i);
    }
    return BraidWord(strands, std::move(w));
}

BraidWord apply_move(const BraidWord& w, const MarkovMove& move) {
    if (const auto* conj = std::get_if<ConjugateMove>(&move))
        return concat(concat(conj->by, w), inverse(conj->by));
    const auto& stab = std::get<StabilizeMove>(move);
    const int n = w.strands();
    std::vector<Letter> letters = w.letters();
    letters.push_back(stab.sign > 0 ? n : -n);
    return BraidWord(n + 1, std::move(letters));
}

}  // namespace

MarkovTrace markov_perturb(const BraidWord& a, int target_strands,
                           std::uint64_t seed) {
    if (target_strands < a.strands())
        throw BadParams("markov_perturb: target strand count below input");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> sign_dist(0, 1);

    MarkovTrace trace;
    trace.base = a;
    BraidWord cur = a;
    while (cur.strands() < target_strands) {
        ConjugateMove conj{random_short_word(cur.strands(), rng)};
        cur = apply_move(cur, conj);
        trace.moves.push_back(std::move(conj));
        StabilizeMove stab{sign_dist(rng) ? 1 : -1};
        cur = apply_move(cur, stab);
        trace.moves.push_back(stab);
    }
    ConjugateMove final_conj{random_short_word(cur.strands(), rng)};
    cur = apply_move(cur, final_conj);
    trace.moves.push_back(std::move(final_conj));
    trace.result = cur;
    return trace;
}

BraidWord markov_replay(const MarkovTrace& trace) {
    BraidWord cur = trace.base;
    for (const MarkovMove& move : trace.moves) cur = apply_move(cur, move);
    return cur;
}

}  // namespace braidwrench
