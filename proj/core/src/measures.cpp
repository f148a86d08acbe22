#include "accfn/measures.hpp"

#include <random>

#include "accfn/errors.hpp"

namespace accfn {

SetFunction from_probability(const ProbabilityDistribution& d) {
    const Universe& u = d.universe;
    if (d.p.size() != u.size()) {
        throw BadDistribution("distribution has " + std::to_string(d.p.size()) +
                              " entries for " + std::to_string(u.size()) + " atoms");
    }
    Rational sum;
    for (const Rational& value : d.p) {
        if (value.is_negative()) throw BadDistribution("negative probability");
        sum += value;
    }
    if (sum != Rational(1)) {
        throw BadDistribution("probabilities sum to " + sum.str() + ", expected 1");
    }
    std::vector<Rational> table(u.table_size());
    for (std::uint32_t bits = 1; bits < u.table_size(); ++bits) {
        const unsigned low = static_cast<unsigned>(__builtin_ctz(bits));
        table[bits] = table[bits & (bits - 1)] + d.p[low];
    }
    return {u, std::move(table)};
}

std::pair<SetFunction, SetFunction> from_mass(const MassAssignment& m) {
    const Universe& u = m.universe;
    Rational sum;
    std::vector<Rational> dense(u.table_size());
    for (const auto& [bits, value] : m.focal) {
        if (bits == 0) throw EmptyFocal("the empty event cannot carry mass");
        if (bits >= u.table_size()) throw BadMass("focal event outside the universe");
        if (value.is_negative() || value.is_zero()) {
            throw NonPositiveMass("mass " + value.str() + " on a focal event");
        }
        sum += value;
        dense[bits] = value;
    }
    if (sum != Rational(1)) {
        throw MassSumNotOne("masses sum to " + sum.str() + ", expected 1");
    }
    SetFunction bel = accumulate(SignedMass(u, std::move(dense)));
    SetFunction pl = dual(bel);
    return {std::move(bel), std::move(pl)};
}

std::pair<SetFunction, SetFunction> from_possibility(const PossibilityDistribution& d) {
    const Universe& u = d.universe;
    if (d.pi.size() != u.size()) {
        throw NotNormalized("distribution has " + std::to_string(d.pi.size()) +
                            " entries for " + std::to_string(u.size()) + " atoms");
    }
    const Rational one(1);
    Rational top;
    for (const Rational& value : d.pi) {
        if (value.is_negative() || value > one) {
            throw NotNormalized("possibility degree " + value.str() + " outside [0,1]");
        }
        if (value > top) top = value;
    }
    if (top != one) throw NotNormalized("max possibility is " + top.str() + ", expected 1");
    std::vector<Rational> table(u.table_size());
    for (std::uint32_t bits = 1; bits < u.table_size(); ++bits) {
        const unsigned low = static_cast<unsigned>(__builtin_ctz(bits));
        const Rational& rest = table[bits & (bits - 1)];
        table[bits] = rest > d.pi[low] ? rest : d.pi[low];
    }
    SetFunction pi(u, std::move(table));
    SetFunction n = dual(pi);
    return {std::move(pi), std::move(n)};
}

SetFunction build_from_skeleton(const Skeleton& s) {
    const Universe& u = s.universe;
    const std::uint32_t size = static_cast<std::uint32_t>(u.table_size());
    const std::uint32_t kernel = s.kernel.bits();
    const std::uint32_t co_kernel = (size - 1) & ~kernel;
    if (kernel == 0) throw SkeletonInconsistent("kernel is empty");

    auto domain_check = [&](const std::map<std::uint32_t, Rational>& given,
                            auto member, const char* side) {
        std::size_t expected = 0;
        for (std::uint32_t bits = 0; bits < size; ++bits) {
            if (!member(bits)) continue;
            ++expected;
            if (!given.count(bits)) {
                throw IncompleteCoverage(std::string(side) + " chain misses " +
                                         u.event_name(u.event_from_bits(bits)));
            }
        }
        if (given.size() != expected) {
            throw IncompleteCoverage(std::string(side) + " chain has entries outside its domain");
        }
    };
    domain_check(s.upper, [&](std::uint32_t b) { return (b & kernel) == kernel; }, "upper");
    domain_check(s.lower, [&](std::uint32_t b) { return (b & ~co_kernel) == 0; }, "lower");

    const Rational& at_kernel = s.upper.at(kernel);
    const Rational& at_co_kernel = s.lower.at(co_kernel);
    if (at_kernel <= at_co_kernel) {
        throw SkeletonInconsistent("value at kernel (" + at_kernel.str() +
                                   ") must exceed value at its complement (" +
                                   at_co_kernel.str() + ")");
    }
    if (s.upper.at(size - 1) != Rational(1)) {
        throw SkeletonInconsistent("upper chain must reach 1 at the full event");
    }
    if (s.lower.at(0) != Rational(0)) {
        throw SkeletonInconsistent("lower chain must start at 0 on the empty event");
    }
    for (const auto& [bits, value] : s.upper) {
        if (value < at_kernel) {
            throw SkeletonInconsistent("upper value at " + u.event_name(u.event_from_bits(bits)) +
                                       " drops below the kernel value");
        }
    }
    for (const auto& [bits, value] : s.lower) {
        if (value > at_co_kernel) {
            throw SkeletonInconsistent("lower value at " + u.event_name(u.event_from_bits(bits)) +
                                       " rises above the complement-of-kernel value");
        }
    }
    auto monotone_check = [&](const std::map<std::uint32_t, Rational>& chain, const char* side) {
        for (const auto& [bits, value] : chain) {
            for (unsigned i = 0; i < u.size(); ++i) {
                const std::uint32_t next = bits | (std::uint32_t{1} << i);
                auto it = chain.find(next);
                if (next == bits || it == chain.end()) continue;
                if (value > it->second) {
                    throw SkeletonInconsistent(std::string(side) + " chain not monotone at " +
                                               u.event_name(u.event_from_bits(bits)));
                }
            }
        }
    };
    monotone_check(s.upper, "upper");
    monotone_check(s.lower, "lower");

    const bool has_undecided = s.kernel.cardinality() >= 2;
    if (has_undecided && (s.k_level < at_co_kernel || s.k_level > at_kernel)) {
        throw SkeletonInconsistent("indifference level " + s.k_level.str() +
                                   " outside [" + at_co_kernel.str() + ", " +
                                   at_kernel.str() + "]");
    }

    std::vector<Rational> table(size, s.k_level);
    for (const auto& [bits, value] : s.upper) table[bits] = value;
    for (const auto& [bits, value] : s.lower) table[bits] = value;
    return {u, std::move(table)};
}

SetFunction random_confidence(const Universe& u, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const std::uint32_t size = static_cast<std::uint32_t>(u.table_size());
    std::vector<Rational> table(size);
    // Small denominators so ties actually happen.
    for (std::uint32_t bits = 1; bits + 1 < size; ++bits) {
        const std::uint64_t den = 1 + rng() % 8;
        const std::uint64_t num = rng() % (den + 1);
        table[bits] = Rational(static_cast<long long>(num), static_cast<long long>(den));
    }
    table[size - 1] = Rational(1);
    for (std::uint32_t bits = 1; bits < size; ++bits) {
        for (unsigned i = 0; i < u.size(); ++i) {
            const std::uint32_t atom = std::uint32_t{1} << i;
            if (!(bits & atom)) continue;
            const Rational& below = table[bits ^ atom];
            if (below > table[bits]) table[bits] = below;
        }
    }
    return {u, std::move(table)};
}

}  // namespace accfn
