#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "accfn/measures.hpp"
#include "accfn/set_function.hpp"

// Independent reimplementations for cross-checking: every routine here takes
// the obvious exponential form and shares no code with the library versions.
namespace accfn::oracle {

// m(A) = sum over B subset of A of (-1)^(|A|-|B|) f(B).
inline SignedMass moebius_naive(const SetFunction& f) {
    const Universe& u = f.universe();
    std::vector<Rational> m(u.table_size());
    for (std::uint32_t a = 0; a < u.table_size(); ++a) {
        const int card_a = __builtin_popcount(a);
        std::uint32_t b = a;
        while (true) {
            const int card_b = __builtin_popcount(b);
            if ((card_a - card_b) % 2 == 0) {
                m[a] += f.at_bits(b);
            } else {
                m[a] -= f.at_bits(b);
            }
            if (b == 0) break;
            b = (b - 1) & a;
        }
    }
    return SignedMass(u, std::move(m));
}

// Bel(A) by direct summation over focal subsets of A.
inline SetFunction bel_naive(const MassAssignment& mass) {
    const Universe& u = mass.universe;
    std::vector<Rational> table(u.table_size());
    for (std::uint32_t a = 0; a < u.table_size(); ++a) {
        for (const auto& [focal, value] : mass.focal) {
            if ((focal & a) == focal) table[a] += value;
        }
    }
    return SetFunction(u, std::move(table));
}

// Monotonicity over all subset pairs, not just covering ones.
inline bool monotone_naive(const SetFunction& f) {
    const std::uint32_t size = f.universe().table_size();
    for (std::uint32_t a = 0; a < size; ++a) {
        for (std::uint32_t b = 0; b < size; ++b) {
            if ((a & b) == a && f.at_bits(a) > f.at_bits(b)) return false;
        }
    }
    return true;
}

inline std::vector<std::uint32_t> accepted_naive(const SetFunction& f) {
    const std::uint32_t full = f.universe().full_event().bits();
    std::vector<std::uint32_t> out;
    for (std::uint32_t a = 0; a <= full; ++a) {
        if (f.at_bits(a) > f.at_bits(full & ~a)) out.push_back(a);
    }
    return out;
}

// Belief-set test on the accepted family: up-closed and meet-closed.
inline bool acceptance_naive(const SetFunction& f) {
    const std::uint32_t full = f.universe().full_event().bits();
    std::vector<std::uint32_t> acc = accepted_naive(f);
    std::vector<char> flag(full + 1, 0);
    for (std::uint32_t a : acc) flag[a] = 1;
    for (std::uint32_t a : acc) {
        for (std::uint32_t b = a; b <= full; ++b) {
            if ((a & b) == a && !flag[b]) return false;
        }
        for (std::uint32_t b : acc) {
            if (!flag[a & b]) return false;
        }
    }
    return true;
}

inline std::vector<std::uint32_t> conditioned_base_naive(const SetFunction& f,
                                                         std::uint32_t context) {
    const std::uint32_t full = f.universe().full_event().bits();
    std::vector<std::uint32_t> out;
    for (std::uint32_t a = 0; a <= full; ++a) {
        if (f.at_bits(a & context) > f.at_bits(context & full & ~a)) out.push_back(a);
    }
    return out;
}

}  // namespace accfn::oracle
