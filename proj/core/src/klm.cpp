#include "accfn/klm.hpp"

#include <random>

#include "accfn/errors.hpp"

namespace accfn {
namespace {

void require_confidence(const SetFunction& f) {
    if (!validate_confidence(f).ok) {
        throw NotAConfidenceMeasure("operation needs a valid confidence measure");
    }
}

struct Sweeper {
    const SetFunction& f;
    std::vector<std::uint32_t> rank;
    std::uint32_t full;

    explicit Sweeper(const SetFunction& fn)
        : f(fn),
          rank(dense_ranks(fn)),
          full(fn.universe().full_event().bits()) {}

    bool entails(std::uint32_t a, std::uint32_t b) const {
        return rank[a & b] > rank[a & full & ~b];
    }
    Event event(std::uint32_t bits) const { return f.universe().event_from_bits(bits); }
    const Rational& value(std::uint32_t bits) const { return f.at_bits(bits); }
};

KlmEntry sweep_reflexivity(const Sweeper& s, const KlmOptions& opts, unsigned cap) {
    KlmEntry entry;
    entry.property = KlmProperty::Reflexivity;
    auto check = [&](std::uint32_t a) {
        ++entry.cases_checked;
        if (!s.value(a).is_zero() && !s.entails(a, a)) {
            entry.status = KlmEntry::Status::Fails;
            entry.counterexample = {s.event(a)};
            entry.witness_values = {s.value(a), s.value(0)};
            return true;
        }
        return false;
    };
    if (s.f.universe().size() <= cap) {
        for (std::uint32_t a = 0; a <= s.full; ++a) {
            if (check(a)) return entry;
        }
        return entry;
    }
    entry.status = KlmEntry::Status::NoCounterexample;
    std::mt19937_64 rng(opts.seed);
    for (std::uint64_t i = 0; i < opts.samples; ++i) {
        const std::uint32_t a = static_cast<std::uint32_t>(rng()) & s.full;
        if (check(a)) return entry;
    }
    return entry;
}

KlmEntry sweep_right_weakening(const Sweeper& s, const KlmOptions& opts, unsigned cap) {
    KlmEntry entry;
    entry.property = KlmProperty::RightWeakening;
    auto check = [&](std::uint32_t a, std::uint32_t b, std::uint32_t bigger) {
        ++entry.cases_checked;
        if (s.entails(a, b) && !s.entails(a, bigger)) {
            entry.status = KlmEntry::Status::Fails;
            entry.counterexample = {s.event(a), s.event(b), s.event(bigger)};
            entry.witness_values = {s.value(a & b), s.value(a & s.full & ~b),
                                    s.value(a & bigger), s.value(a & s.full & ~bigger)};
            return true;
        }
        return false;
    };
    if (s.f.universe().size() <= cap) {
        for (std::uint32_t a = 0; a <= s.full; ++a) {
            for (std::uint32_t b = 0; b <= s.full; ++b) {
                const std::uint32_t rest = s.full & ~b;
                std::uint32_t d = 0;
                do {
                    if (check(a, b, b | d)) return entry;
                    d = (d - rest) & rest;
                } while (d != 0);
            }
        }
        return entry;
    }
    entry.status = KlmEntry::Status::NoCounterexample;
    std::mt19937_64 rng(opts.seed);
    for (std::uint64_t i = 0; i < opts.samples; ++i) {
        const std::uint32_t a = static_cast<std::uint32_t>(rng()) & s.full;
        const std::uint32_t b = static_cast<std::uint32_t>(rng()) & s.full;
        const std::uint32_t d = static_cast<std::uint32_t>(rng()) & s.full & ~b;
        if (check(a, b, b | d)) return entry;
    }
    return entry;
}

// Shared shape of AND, OR, CM, CUT: a triple sweep with a property-specific
// violation test. AND restricts consequents to subsets of the context, which
// loses nothing since entailment only sees traces on the context.
KlmEntry sweep_triples(const Sweeper& s, const KlmOptions& opts, unsigned cap,
                       KlmProperty property) {
    KlmEntry entry;
    entry.property = property;
    auto violated = [&](std::uint32_t a, std::uint32_t b, std::uint32_t c) {
        switch (property) {
            case KlmProperty::Conjunction:
                return s.entails(a, b) && s.entails(a, c) && !s.entails(a, b & c);
            case KlmProperty::Disjunction:
                return s.entails(a, c) && s.entails(b, c) && !s.entails(a | b, c);
            case KlmProperty::CautiousMonotony:
                return s.entails(a, b) && s.entails(a, c) && !s.entails(a & b, c);
            case KlmProperty::Cut:
                return s.entails(a & b, c) && s.entails(a, b) && !s.entails(a, c);
            default:
                return false;
        }
    };
    auto record = [&](std::uint32_t a, std::uint32_t b, std::uint32_t c) {
        entry.status = KlmEntry::Status::Fails;
        entry.counterexample = {s.event(a), s.event(b), s.event(c)};
        const std::uint32_t no_b = s.full & ~b;
        const std::uint32_t no_c = s.full & ~c;
        switch (property) {
            case KlmProperty::Conjunction:
                entry.witness_values = {s.value(a & b),     s.value(a & no_b),
                                        s.value(a & c),     s.value(a & no_c),
                                        s.value(a & b & c), s.value(a & (no_b | no_c))};
                break;
            case KlmProperty::Disjunction:
                entry.witness_values = {s.value(a & c),       s.value(a & no_c),
                                        s.value(b & c),       s.value(b & no_c),
                                        s.value((a | b) & c), s.value((a | b) & no_c)};
                break;
            case KlmProperty::CautiousMonotony:
                entry.witness_values = {s.value(a & b),     s.value(a & no_b),
                                        s.value(a & c),     s.value(a & no_c),
                                        s.value(a & b & c), s.value(a & b & no_c)};
                break;
            case KlmProperty::Cut:
                entry.witness_values = {s.value(a & b & c), s.value(a & b & no_c),
                                        s.value(a & b),     s.value(a & no_b),
                                        s.value(a & c),     s.value(a & no_c)};
                break;
            default:
                break;
        }
    };

    const bool restrict_to_context = property == KlmProperty::Conjunction;
    if (s.f.universe().size() <= cap) {
        for (std::uint32_t a = 0; a <= s.full; ++a) {
            if (restrict_to_context) {
                std::uint32_t b = 0;
                do {
                    std::uint32_t c = 0;
                    do {
                        ++entry.cases_checked;
                        if (violated(a, b, c)) {
                            record(a, b, c);
                            return entry;
                        }
                        c = (c - a) & a;
                    } while (c != 0);
                    b = (b - a) & a;
                } while (b != 0);
            } else {
                for (std::uint32_t b = 0; b <= s.full; ++b) {
                    for (std::uint32_t c = 0; c <= s.full; ++c) {
                        ++entry.cases_checked;
                        if (violated(a, b, c)) {
                            record(a, b, c);
                            return entry;
                        }
                    }
                }
            }
        }
        return entry;
    }
    entry.status = KlmEntry::Status::NoCounterexample;
    std::mt19937_64 rng(opts.seed);
    for (std::uint64_t i = 0; i < opts.samples; ++i) {
        const std::uint32_t a = static_cast<std::uint32_t>(rng()) & s.full;
        std::uint32_t b = static_cast<std::uint32_t>(rng()) & s.full;
        std::uint32_t c = static_cast<std::uint32_t>(rng()) & s.full;
        if (restrict_to_context) {
            b &= a;
            c &= a;
        }
        ++entry.cases_checked;
        if (violated(a, b, c)) {
            record(a, b, c);
            return entry;
        }
    }
    return entry;
}

}  // namespace

const char* klm_id(KlmProperty p) {
    switch (p) {
        case KlmProperty::Reflexivity: return "REF";
        case KlmProperty::RightWeakening: return "RW";
        case KlmProperty::Conjunction: return "AND";
        case KlmProperty::Disjunction: return "OR";
        case KlmProperty::CautiousMonotony: return "CM";
        case KlmProperty::Cut: return "CUT";
    }
    return "?";
}

std::optional<KlmProperty> klm_from_id(std::string_view id) {
    for (KlmProperty p : all_klm_properties()) {
        std::string_view known = klm_id(p);
        if (id.size() != known.size()) continue;
        bool match = true;
        for (std::size_t i = 0; i < id.size(); ++i) {
            const char c = id[i] >= 'a' && id[i] <= 'z' ? static_cast<char>(id[i] - 32) : id[i];
            if (c != known[i]) {
                match = false;
                break;
            }
        }
        if (match) return p;
    }
    return std::nullopt;
}

std::vector<KlmProperty> all_klm_properties() {
    return {KlmProperty::Reflexivity,      KlmProperty::RightWeakening,
            KlmProperty::Conjunction,      KlmProperty::Disjunction,
            KlmProperty::CautiousMonotony, KlmProperty::Cut};
}

bool entails(const SetFunction& f, Event a, Event b) {
    require_confidence(f);
    const std::uint32_t full = f.universe().full_event().bits();
    return f.at_bits(a.bits() & b.bits()) > f.at_bits(a.bits() & full & ~b.bits());
}

KlmReport check_klm(const SetFunction& f, const std::vector<KlmProperty>& properties,
                    const KlmOptions& opts) {
    require_confidence(f);
    const unsigned cap = opts.max_exhaustive.value_or(6);
    Sweeper sweeper(f);
    KlmReport report;
    for (KlmProperty p : properties) {
        switch (p) {
            case KlmProperty::Reflexivity:
                report.entries.push_back(sweep_reflexivity(sweeper, opts, cap));
                break;
            case KlmProperty::RightWeakening:
                report.entries.push_back(sweep_right_weakening(sweeper, opts, cap));
                break;
            default:
                report.entries.push_back(sweep_triples(sweeper, opts, cap, p));
                break;
        }
    }
    return report;
}

}  // namespace accfn
