#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "accfn/measures.hpp"

// Deterministic random inputs for the property suites. Every generator is a
// pure function of its rng state, so suites replay exactly across runs.
namespace accfn::gen {

inline Universe universe(unsigned n) {
    static const char* names[] = {"a", "b", "c", "d", "e", "f", "g", "h",
                                  "i", "j", "k", "l", "m", "n", "o", "p"};
    std::vector<std::string> atoms(names, names + n);
    return Universe(atoms);
}

inline std::uint32_t nonempty_subset(std::mt19937_64& rng, std::uint32_t full) {
    std::uint32_t bits = 0;
    while (bits == 0) bits = static_cast<std::uint32_t>(rng() % (full + 1));
    return bits;
}

// Positive masses with small integer weights, normalized exactly to 1.
inline MassAssignment normalize(const Universe& u,
                                const std::vector<std::pair<std::uint32_t, unsigned>>& weights) {
    long long total = 0;
    for (const auto& [bits, w] : weights) total += w;
    MassAssignment mass{u, {}};
    for (const auto& [bits, w] : weights) {
        if (w == 0) continue;
        mass.focal[bits] += Rational(w, total);
    }
    return mass;
}

inline MassAssignment random_mass(std::mt19937_64& rng, const Universe& u, unsigned max_focals) {
    const std::uint32_t full = u.full_event().bits();
    const unsigned count = 1 + static_cast<unsigned>(rng() % max_focals);
    std::vector<std::pair<std::uint32_t, unsigned>> weights;
    for (unsigned i = 0; i < count; ++i) {
        weights.emplace_back(nonempty_subset(rng, full), 1 + static_cast<unsigned>(rng() % 8));
    }
    return normalize(u, weights);
}

// Every focal set contains a common nonempty core, and the core is focal.
inline MassAssignment random_core_mass(std::mt19937_64& rng, const Universe& u,
                                       unsigned max_focals) {
    const std::uint32_t full = u.full_event().bits();
    const std::uint32_t core = nonempty_subset(rng, full);
    std::vector<std::pair<std::uint32_t, unsigned>> weights;
    weights.emplace_back(core, 1 + static_cast<unsigned>(rng() % 8));
    const unsigned extras = static_cast<unsigned>(rng() % max_focals);
    for (unsigned i = 0; i < extras; ++i) {
        const std::uint32_t focal = core | static_cast<std::uint32_t>(rng() % (full + 1));
        weights.emplace_back(focal, 1 + static_cast<unsigned>(rng() % 8));
    }
    return normalize(u, weights);
}

// One singleton focal holds strictly more than half of the total weight.
inline MassAssignment random_majority_mass(std::mt19937_64& rng, const Universe& u,
                                           unsigned max_focals) {
    const std::uint32_t full = u.full_event().bits();
    const std::uint32_t atom = std::uint32_t{1} << (rng() % u.size());
    std::vector<std::pair<std::uint32_t, unsigned>> weights;
    unsigned rest = 0;
    const unsigned extras = static_cast<unsigned>(rng() % max_focals);
    for (unsigned i = 0; i < extras; ++i) {
        std::uint32_t focal = nonempty_subset(rng, full);
        if (focal == atom) focal = full;
        const unsigned w = 1 + static_cast<unsigned>(rng() % 8);
        rest += w;
        weights.emplace_back(focal, w);
    }
    weights.emplace_back(atom, rest + 1 + static_cast<unsigned>(rng() % 8));
    return normalize(u, weights);
}

// Exactly two singleton focals of equal mass; every other focal contains both.
inline MassAssignment random_twin_mass(std::mt19937_64& rng, const Universe& u,
                                       unsigned max_focals) {
    const std::uint32_t full = u.full_event().bits();
    const unsigned i = static_cast<unsigned>(rng() % u.size());
    unsigned j = static_cast<unsigned>(rng() % u.size());
    while (j == i) j = static_cast<unsigned>(rng() % u.size());
    const std::uint32_t pair = (std::uint32_t{1} << i) | (std::uint32_t{1} << j);
    const unsigned w = 1 + static_cast<unsigned>(rng() % 8);
    std::vector<std::pair<std::uint32_t, unsigned>> weights;
    weights.emplace_back(std::uint32_t{1} << i, w);
    weights.emplace_back(std::uint32_t{1} << j, w);
    const unsigned extras = static_cast<unsigned>(rng() % max_focals);
    for (unsigned k = 0; k < extras; ++k) {
        const std::uint32_t focal = pair | static_cast<std::uint32_t>(rng() % (full + 1));
        weights.emplace_back(focal, 1 + static_cast<unsigned>(rng() % 8));
    }
    return normalize(u, weights);
}

// Small integer weights normalized exactly; repeats make ties likely, and
// every eighth draw pins the largest atom to exactly one half.
inline ProbabilityDistribution random_prob(std::mt19937_64& rng, const Universe& u) {
    ProbabilityDistribution d{u, std::vector<Rational>(u.size())};
    std::vector<unsigned> w(u.size());
    long long total = 0;
    while (total == 0) {
        for (auto& x : w) {
            x = static_cast<unsigned>(rng() % 7);
            total += x;
        }
    }
    for (unsigned i = 0; i < u.size(); ++i) d.p[i] = Rational(w[i], total);
    if (rng() % 8 == 0 && u.size() >= 2) {
        unsigned top = 0;
        for (unsigned i = 1; i < u.size(); ++i) {
            if (d.p[i] > d.p[top]) top = i;
        }
        const Rational half(1, 2);
        Rational others = Rational(1) - d.p[top];
        if (!others.is_zero()) {
            for (unsigned i = 0; i < u.size(); ++i) {
                if (i != top) d.p[i] = d.p[i] / others * half;
            }
            d.p[top] = half;
        }
    }
    return d;
}

// Degrees from a small ladder, with at least one atom at 1.
inline PossibilityDistribution random_poss(std::mt19937_64& rng, const Universe& u) {
    PossibilityDistribution d{u, std::vector<Rational>(u.size())};
    for (unsigned i = 0; i < u.size(); ++i) {
        const unsigned num = static_cast<unsigned>(rng() % 9);
        d.pi[i] = Rational(num, 8);
    }
    d.pi[rng() % u.size()] = Rational(1);
    return d;
}

// Valid skeleton with a random kernel: upper chain monotone from g(K) up to
// 1, lower chain monotone from 0 up to g(K complement) < g(K).
inline Skeleton random_skeleton(std::mt19937_64& rng, const Universe& u) {
    const std::uint32_t full = u.full_event().bits();
    const std::uint32_t k = nonempty_subset(rng, full);
    const std::uint32_t co = full & ~k;

    const unsigned hi = 2 + static_cast<unsigned>(rng() % 7);           // g(K) = hi/8
    const unsigned lo = co == 0 ? 0 : static_cast<unsigned>(rng() % hi);  // g(co) < g(K)

    Skeleton s{u, u.event_from_bits(k), {}, {}, Rational(0)};
    for (std::uint32_t bits = 0; bits <= full; ++bits) {
        if ((bits & k) == k) {
            unsigned v = hi + static_cast<unsigned>(rng() % (8 - hi + 1));
            for (const auto& [sub, val] : s.upper) {
                if ((sub & bits) == sub && val > Rational(v, 8)) v = 8;
            }
            s.upper[bits] = bits == full ? Rational(1) : Rational(v, 8);
        } else if ((bits & co) == bits) {
            unsigned v = bits == 0 ? 0 : static_cast<unsigned>(rng() % (lo + 1));
            for (const auto& [sub, val] : s.lower) {
                if ((sub & bits) == sub && val > Rational(v, 8)) v = lo;
            }
            s.lower[bits] = bits == co ? Rational(lo, 8) : Rational(v, 8);
        }
    }
    const unsigned mid = lo + static_cast<unsigned>(rng() % (hi - lo + 1));
    s.k_level = Rational(mid, 8);
    return s;
}

}  // namespace accfn::gen
