#include "accfn/conditioning.hpp"

#include <random>

#include "accfn/acceptance.hpp"
#include "accfn/errors.hpp"

namespace accfn {
namespace {

void require_confidence(const SetFunction& f) {
    if (!validate_confidence(f).ok) {
        throw NotAConfidenceMeasure("operation needs a valid confidence measure");
    }
}

void require_context(Event context) {
    if (context.empty()) throw EmptyContext("the empty context conditions nothing");
}

// Membership flags of the conditioned base.
std::vector<char> base_flags(const SetFunction& f, std::uint32_t context) {
    const std::uint32_t size = static_cast<std::uint32_t>(f.table().size());
    std::vector<char> flags(size, 0);
    for (std::uint32_t bits = 0; bits < size; ++bits) {
        flags[bits] = f.at_bits(bits & context) > f.at_bits(context & ~bits) ? 1 : 0;
    }
    return flags;
}

}  // namespace

std::vector<Event> conditioned_base(const SetFunction& f, Event context) {
    require_context(context);
    require_confidence(f);
    const std::vector<char> flags = base_flags(f, context.bits());
    std::vector<Event> out;
    for (std::uint32_t bits = 0; bits < flags.size(); ++bits) {
        if (flags[bits]) out.push_back(f.universe().event_from_bits(bits));
    }
    return out;
}

ConditionedReport is_conditioned_base_belief_set(const SetFunction& f, Event context) {
    if (f.universe().size() > 10) {
        throw UniverseTooLargeForOracle("pairwise closure check is capped at 10 atoms");
    }
    require_context(context);
    require_confidence(f);
    const std::vector<char> flags = base_flags(f, context.bits());
    std::vector<std::uint32_t> base;
    for (std::uint32_t bits = 0; bits < flags.size(); ++bits) {
        if (flags[bits]) base.push_back(bits);
    }
    ConditionedReport report;
    report.context = context;
    report.base_size = base.size();
    for (std::size_t i = 0; i < base.size() && report.is_belief_set; ++i) {
        for (std::size_t j = i + 1; j < base.size(); ++j) {
            if (!flags[base[i] & base[j]]) {
                report.is_belief_set = false;
                report.violation_witness = {f.universe().event_from_bits(base[i]),
                                            f.universe().event_from_bits(base[j])};
                break;
            }
        }
    }
    if (report.is_belief_set && !base.empty()) {
        std::uint32_t meet = static_cast<std::uint32_t>(flags.size()) - 1;
        for (std::uint32_t bits : base) meet &= bits;
        report.conditioned_kernel = f.universe().event_from_bits(meet);
    }
    return report;
}

PropertyReport check_property_A(const SetFunction& f, const SweepOptions& opts) {
    require_confidence(f);
    const Universe& u = f.universe();
    const unsigned cap = opts.max_exhaustive.value_or(8);
    PropertyReport report;
    report.property = 'A';

    const std::vector<std::uint32_t> rank = dense_ranks(f);
    auto violation_at = [&](std::uint32_t c, std::uint32_t s, std::uint32_t t) {
        // s, t are the traces S&C, T&C; complements are relative to C.
        const std::uint32_t co_s = c ^ s;
        const std::uint32_t co_t = c ^ t;
        return rank[s] > rank[co_s] && rank[t] > rank[co_t] &&
               rank[s & t] <= rank[co_s | co_t];
    };
    auto record = [&](std::uint32_t c, std::uint32_t s, std::uint32_t t) {
        report.holds = false;
        report.counterexample = {u.event_from_bits(c), u.event_from_bits(s),
                                 u.event_from_bits(t)};
        const std::uint32_t co_s = c ^ s;
        const std::uint32_t co_t = c ^ t;
        report.witness_values = {f.at_bits(s),     f.at_bits(co_s),
                                 f.at_bits(t),     f.at_bits(co_t),
                                 f.at_bits(s & t), f.at_bits(co_s | co_t)};
    };

    if (u.size() <= cap) {
        const std::uint32_t size = static_cast<std::uint32_t>(u.table_size());
        for (std::uint32_t c = 0; c < size; ++c) {
            // Premises and conclusion only see S&C and T&C, so sweeping the
            // subsets of C is complete.
            std::uint32_t s = 0;
            do {
                std::uint32_t t = 0;
                do {
                    ++report.cases_checked;
                    if (violation_at(c, s, t)) {
                        record(c, s, t);
                        return report;
                    }
                    t = (t - c) & c;
                } while (t != 0);
                s = (s - c) & c;
            } while (s != 0);
        }
        return report;
    }

    if (!opts.samples) {
        throw UniverseTooLargeForExhaustive(
            "property A sweep is capped at " + std::to_string(cap) +
            " atoms; pass a sample count for larger universes");
    }
    report.exhaustive = false;
    std::mt19937_64 rng(opts.seed);
    const std::uint32_t full = u.full_event().bits();
    for (std::uint64_t i = 0; i < *opts.samples; ++i) {
        const std::uint32_t c = static_cast<std::uint32_t>(rng()) & full;
        const std::uint32_t s = static_cast<std::uint32_t>(rng()) & c;
        const std::uint32_t t = static_cast<std::uint32_t>(rng()) & c;
        ++report.cases_checked;
        if (violation_at(c, s, t)) {
            record(c, s, t);
            return report;
        }
    }
    return report;
}

PropertyReport check_property_B(const SetFunction& f, const SweepOptions& opts) {
    require_confidence(f);
    const Universe& u = f.universe();
    const unsigned cap = opts.max_exhaustive.value_or(10);
    PropertyReport report;
    report.property = 'B';

    const std::vector<std::uint32_t> rank = dense_ranks(f);
    auto violation_at = [&](std::uint32_t a, std::uint32_t b, std::uint32_t e) {
        return rank[a | e] > rank[b] && rank[b | e] > rank[a] &&
               rank[e] <= rank[a | b];
    };
    auto record = [&](std::uint32_t a, std::uint32_t b, std::uint32_t e) {
        report.holds = false;
        report.counterexample = {u.event_from_bits(a), u.event_from_bits(b),
                                 u.event_from_bits(e)};
        report.witness_values = {f.at_bits(a | e), f.at_bits(b), f.at_bits(b | e),
                                 f.at_bits(a),     f.at_bits(e), f.at_bits(a | b)};
    };

    const std::uint32_t full = u.full_event().bits();
    if (u.size() <= cap) {
        for (std::uint32_t a = 0; a <= full; ++a) {
            const std::uint32_t rest_a = full & ~a;
            std::uint32_t b = 0;
            do {
                const std::uint32_t rest_ab = rest_a & ~b;
                std::uint32_t e = 0;
                do {
                    ++report.cases_checked;
                    if (violation_at(a, b, e)) {
                        record(a, b, e);
                        return report;
                    }
                    e = (e - rest_ab) & rest_ab;
                } while (e != 0);
                b = (b - rest_a) & rest_a;
            } while (b != 0);
        }
        return report;
    }

    if (!opts.samples) {
        throw UniverseTooLargeForExhaustive(
            "property B sweep is capped at " + std::to_string(cap) +
            " atoms; pass a sample count for larger universes");
    }
    report.exhaustive = false;
    std::mt19937_64 rng(opts.seed);
    for (std::uint64_t i = 0; i < *opts.samples; ++i) {
        const std::uint32_t a = static_cast<std::uint32_t>(rng()) & full;
        const std::uint32_t b = static_cast<std::uint32_t>(rng()) & full & ~a;
        const std::uint32_t e = static_cast<std::uint32_t>(rng()) & full & ~(a | b);
        ++report.cases_checked;
        if (violation_at(a, b, e)) {
            record(a, b, e);
            return report;
        }
    }
    return report;
}

std::pair<PropertyReport, PropertyReport> check_both_properties(const SetFunction& f,
                                                                const SweepOptions& opts) {
    PropertyReport a = check_property_A(f, opts);
    PropertyReport b = check_property_B(f, opts);
    b.agrees_with_property_a = (a.holds == b.holds);
    return {std::move(a), std::move(b)};
}

bool is_independent(const SetFunction& f, Event a, Event context) {
    require_context(context);
    require_confidence(f);
    const std::uint32_t full = f.universe().full_event().bits();
    const std::uint32_t bits = a.bits();
    const std::uint32_t c = context.bits();
    return f.at_bits(bits) > f.at_bits(full & ~bits) &&
           f.at_bits(bits & c) > f.at_bits(c & ~bits);
}

UpdateReport classify_update(const SetFunction& f, Event context) {
    require_context(context);
    AcceptanceReport acceptance = is_acceptance(f);
    if (!acceptance.is_acceptance) {
        throw NotAcceptanceFunction("expansion and revision need an acceptance function");
    }
    const std::uint32_t k = acceptance.kernel.bits();
    const std::uint32_t c = context.bits();
    UpdateReport report;
    if (c & k) {
        report.kind = UpdateClass::Expansion;
    } else if (!f.at_bits(c).is_zero()) {
        report.kind = UpdateClass::Revision;
    } else {
        report.kind = UpdateClass::Undefined;
    }
    if (f.at_bits(c & k) > f.at_bits(c & ~k)) {
        report.conditioned_kernel = f.universe().event_from_bits(c & k);
    }
    return report;
}

ProbabilityDistribution condition_probability(const ProbabilityDistribution& d, Event context) {
    SetFunction p = from_probability(d);
    require_context(context);
    const Rational& weight = p.at(context);
    if (weight.is_zero()) {
        throw ZeroProbabilityContext("context " + d.universe.event_name(context) +
                                     " has probability 0");
    }
    ProbabilityDistribution out{d.universe, std::vector<Rational>(d.p.size())};
    for (unsigned i = 0; i < d.universe.size(); ++i) {
        if (context.contains_atom(i)) out.p[i] = d.p[i] / weight;
    }
    return out;
}

std::pair<SetFunction, SetFunction> condition_possibility(const PossibilityDistribution& d,
                                                          Event context) {
    auto [pi, n] = from_possibility(d);
    require_context(context);
    const Rational& level = pi.at(context);
    if (level.is_zero()) {
        throw ZeroPossibilityContext("context " + d.universe.event_name(context) +
                                     " has possibility 0");
    }
    const std::uint32_t size = static_cast<std::uint32_t>(pi.table().size());
    const std::uint32_t c = context.bits();
    const Rational one(1);
    std::vector<Rational> table(size);
    for (std::uint32_t bits = 0; bits < size; ++bits) {
        const Rational& inside = pi.at_bits(bits & c);
        table[bits] = inside == level ? one : inside;
    }
    SetFunction conditioned(d.universe, std::move(table));
    SetFunction dual_n = dual(conditioned);
    return {std::move(conditioned), std::move(dual_n)};
}

PossibilityDistribution condition_possibility_distribution(const PossibilityDistribution& d,
                                                           Event context) {
    auto [pi, n] = from_possibility(d);
    require_context(context);
    const Rational& level = pi.at(context);
    if (level.is_zero()) {
        throw ZeroPossibilityContext("context " + d.universe.event_name(context) +
                                     " has possibility 0");
    }
    PossibilityDistribution out{d.universe, std::vector<Rational>(d.pi.size())};
    const Rational one(1);
    for (unsigned i = 0; i < d.universe.size(); ++i) {
        if (!context.contains_atom(i)) continue;
        out.pi[i] = d.pi[i] == level ? one : d.pi[i];
    }
    return out;
}

}  // namespace accfn
