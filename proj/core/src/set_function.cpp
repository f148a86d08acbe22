#include "accfn/set_function.hpp"

#include <algorithm>
#include <numeric>

#include "accfn/errors.hpp"

namespace accfn {

SetFunction::SetFunction(Universe universe, std::vector<Rational> table)
    : universe_(std::move(universe)), table_(std::move(table)) {
    if (table_.size() != universe_.table_size()) {
        throw IncompleteCoverage("table has " + std::to_string(table_.size()) +
                                 " entries, universe needs " +
                                 std::to_string(universe_.table_size()));
    }
}

SignedMass::SignedMass(Universe universe, std::vector<Rational> values)
    : universe_(std::move(universe)), values_(std::move(values)) {
    if (values_.size() != universe_.table_size()) {
        throw IncompleteCoverage("mass table has " + std::to_string(values_.size()) +
                                 " entries, universe needs " +
                                 std::to_string(universe_.table_size()));
    }
}

ValidationReport validate_confidence(const SetFunction& f) {
    ValidationReport report;
    const Universe& u = f.universe();
    const Rational zero;
    const Rational one(1);

    Event empty = u.empty_event();
    Event full = u.full_event();
    if (f.at(empty) != zero) {
        report.violations.push_back({"axiom-i", empty, empty, f.at(empty), zero});
    }
    if (f.at(full) != one) {
        report.violations.push_back({"axiom-ii", full, full, f.at(full), one});
    }
    // Covering pairs suffice for monotonicity: any violating A subset B chains
    // through some single-atom step that violates too.
    const std::uint32_t size = static_cast<std::uint32_t>(u.table_size());
    for (std::uint32_t bits = 0; bits < size; ++bits) {
        for (unsigned i = 0; i < u.size(); ++i) {
            const std::uint32_t atom = std::uint32_t{1} << i;
            if (bits & atom) continue;
            if (f.at_bits(bits) > f.at_bits(bits | atom)) {
                report.violations.push_back({"monotonicity", u.event_from_bits(bits),
                                             u.event_from_bits(bits | atom),
                                             f.at_bits(bits), f.at_bits(bits | atom)});
            }
        }
    }
    report.ok = report.violations.empty();
    return report;
}

SignedMass moebius(const SetFunction& f) {
    std::vector<Rational> m = f.table();
    const std::uint32_t size = static_cast<std::uint32_t>(m.size());
    for (unsigned i = 0; (std::uint32_t{1} << i) < size; ++i) {
        const std::uint32_t atom = std::uint32_t{1} << i;
        for (std::uint32_t bits = 0; bits < size; ++bits) {
            if (bits & atom) m[bits] -= m[bits ^ atom];
        }
    }
    return {f.universe(), std::move(m)};
}

SetFunction accumulate(const SignedMass& m) {
    std::vector<Rational> table = m.values();
    const std::uint32_t size = static_cast<std::uint32_t>(table.size());
    for (unsigned i = 0; (std::uint32_t{1} << i) < size; ++i) {
        const std::uint32_t atom = std::uint32_t{1} << i;
        for (std::uint32_t bits = 0; bits < size; ++bits) {
            if (bits & atom) table[bits] += table[bits ^ atom];
        }
    }
    return {m.universe(), std::move(table)};
}

BeliefCheck is_belief_function(const SetFunction& f) {
    if (!validate_confidence(f).ok) {
        throw NotAConfidenceMeasure("belief test needs a valid confidence measure");
    }
    SignedMass m = moebius(f);
    BeliefCheck result;
    result.is_belief = true;
    const std::uint32_t size = static_cast<std::uint32_t>(m.values().size());
    for (std::uint32_t bits = 0; bits < size; ++bits) {
        const Rational& value = m.at_bits(bits);
        if (value.is_negative() &&
            (result.is_belief || value < result.witness_mass)) {
            result.is_belief = false;
            result.witness = f.universe().event_from_bits(bits);
            result.witness_mass = value;
        }
    }
    return result;
}

SetFunction dual(const SetFunction& f) {
    const std::uint32_t size = static_cast<std::uint32_t>(f.table().size());
    const std::uint32_t full = size - 1;
    std::vector<Rational> table(size);
    const Rational one(1);
    for (std::uint32_t bits = 0; bits < size; ++bits) {
        table[bits] = one - f.at_bits(full & ~bits);
    }
    return {f.universe(), std::move(table)};
}

std::vector<std::uint32_t> dense_ranks(const SetFunction& f) {
    const std::uint32_t size = static_cast<std::uint32_t>(f.table().size());
    std::vector<std::uint32_t> order(size);
    std::iota(order.begin(), order.end(), 0u);
    std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
        if (f.at_bits(a) != f.at_bits(b)) return f.at_bits(a) < f.at_bits(b);
        return a < b;
    });
    std::vector<std::uint32_t> ranks(size);
    std::uint32_t rank = 0;
    for (std::uint32_t i = 0; i < size; ++i) {
        if (i > 0 && f.at_bits(order[i]) != f.at_bits(order[i - 1])) ++rank;
        ranks[order[i]] = rank;
    }
    return ranks;
}

}  // namespace accfn
