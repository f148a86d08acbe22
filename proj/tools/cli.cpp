#include "cli.hpp"

#include <fstream>
#include <functional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "accfn/acceptance.hpp"
#include "accfn/conditioning.hpp"
#include "accfn/errors.hpp"
#include "accfn/klm.hpp"
#include "accfn/measure_file.hpp"

namespace accfn::cli {
namespace {

using Json = nlohmann::ordered_json;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

MeasureSpec load(const std::string& path) { return parse_measure_file(read_file(path)); }

Event parse_event_literal(const Universe& u, const std::string& text) {
    std::size_t pos = 0;
    auto skip = [&] {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
    };
    auto fail = [&](const std::string& why) -> Error {
        return Error("bad event '" + text + "': " + why);
    };
    skip();
    if (pos >= text.size() || text[pos] != '{') throw fail("expected a set literal like {a,b}");
    ++pos;
    std::uint32_t bits = 0;
    skip();
    if (pos < text.size() && text[pos] == '}') {
        ++pos;
    } else {
        while (true) {
            skip();
            std::size_t begin = pos;
            while (pos < text.size() &&
                   (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_')) {
                ++pos;
            }
            if (pos == begin) throw fail("expected an atom name");
            std::string name = text.substr(begin, pos - begin);
            int idx = u.atom_index(name);
            if (idx < 0) throw fail("unknown atom '" + name + "'");
            bits |= std::uint32_t{1} << idx;
            skip();
            if (pos < text.size() && text[pos] == ',') {
                ++pos;
                continue;
            }
            if (pos < text.size() && text[pos] == '}') {
                ++pos;
                break;
            }
            throw fail("expected ',' or '}'");
        }
    }
    skip();
    if (pos != text.size()) throw fail("unexpected trailing text");
    return u.event_from_bits(bits);
}

std::string name_of(const Universe& u, Event e) { return u.event_name(e); }

// Premise pairs render as "lhs > rhs", the final pair as the failed "lhs <= rhs".
void render_inequalities(std::string& text, const std::vector<std::string>& labels,
                         const std::vector<Rational>& values) {
    for (std::size_t i = 0; i + 1 < values.size(); i += 2) {
        const bool conclusion = i + 2 >= values.size();
        text += "  " + labels[i] + " = " + values[i].str() + (conclusion ? " <= " : " > ") +
                labels[i + 1] + " = " + values[i + 1].str() + "\n";
    }
}

Json values_json(const std::vector<Rational>& values) {
    Json out = Json::array();
    for (const auto& v : values) out.push_back(v.str());
    return out;
}

CommandResult cmd_validate(const std::string& file) {
    MeasureSpec spec = load(file);
    ValidationReport report = validate_confidence(spec.primary());
    std::string text = "kind: " + std::string(kind_name(spec.kind)) + "\n";
    text += std::string("confidence measure: ") + (report.ok ? "yes" : "no") + "\n";
    Json j{{"command", "validate"}, {"kind", kind_name(spec.kind)}, {"ok", report.ok}};
    j["violations"] = Json::array();
    const Universe& u = spec.universe();
    for (const auto& v : report.violations) {
        if (v.rule == "monotonicity") {
            text += "  " + v.rule + ": f(" + name_of(u, v.a) + ") = " + v.value_a.str() +
                    " > f(" + name_of(u, v.b) + ") = " + v.value_b.str() + "\n";
        } else {
            text += "  " + v.rule + " at " + name_of(u, v.a) + ": got " + v.value_a.str() +
                    ", expected " + v.value_b.str() + "\n";
        }
        j["violations"].push_back({{"rule", v.rule},
                                   {"event", name_of(u, v.a)},
                                   {"other", name_of(u, v.b)},
                                   {"value", v.value_a.str()},
                                   {"other_value", v.value_b.str()}});
    }
    return {std::move(text), j.dump(2), false, report.ok ? 0 : 1};
}

CommandResult cmd_accept(const std::string& file) {
    MeasureSpec spec = load(file);
    SetFunction f = spec.primary();
    const Universe& u = f.universe();
    std::vector<Event> base = accepted_set(f);
    std::string text = "accepted events: " + std::to_string(base.size()) + "\n";
    Json events = Json::array();
    for (Event e : base) {
        const Rational& value = f.at(e);
        const Rational& co = f.at(e.complement());
        text += "  " + name_of(u, e) + "  " + value.str() + " > " + co.str() + "\n";
        events.push_back({{"event", name_of(u, e)},
                          {"value", value.str()},
                          {"complement_value", co.str()}});
    }
    Json j{{"command", "accept"},
           {"kind", kind_name(spec.kind)},
           {"count", base.size()},
           {"accepted", events}};
    return {std::move(text), j.dump(2), false, 0};
}

CommandResult cmd_kernel(const std::string& file) {
    MeasureSpec spec = load(file);
    SetFunction f = spec.primary();
    Event k = kernel(f);
    const bool accepted = f.at(k) > f.at(k.complement());
    std::string text = "kernel: " + name_of(f.universe(), k) + "\n";
    text += std::string("kernel accepted: ") + (accepted ? "yes" : "no") + "\n";
    Json j{{"command", "kernel"},
           {"kernel", name_of(f.universe(), k)},
           {"kernel_accepted", accepted}};
    return {std::move(text), j.dump(2), false, 0};
}

CommandResult cmd_classify(const std::string& file) {
    MeasureSpec spec = load(file);
    SetFunction f = spec.primary();
    const Universe& u = f.universe();
    AcceptanceReport report = is_acceptance(f);

    std::string text = std::string("acceptance: ") + (report.is_acceptance ? "yes" : "no") + "\n";
    text += "kernel: " + name_of(u, report.kernel) + "\n";
    text += "accepted events: " + std::to_string(report.accepted_count) + "\n";
    Json acc{{"is_acceptance", report.is_acceptance},
             {"kernel", name_of(u, report.kernel)},
             {"accepted_count", report.accepted_count}};
    acc["indifference_level"] = nullptr;
    acc["failure_witness"] = nullptr;
    if (report.indifference_level) {
        text += "indifference level: " + report.indifference_level->str() + "\n";
        acc["indifference_level"] = report.indifference_level->str();
    }
    if (report.failure_witness) {
        text += "witness: " + *report.failure_witness + "\n";
        acc["failure_witness"] = *report.failure_witness;
    }
    Json j{{"command", "classify"}, {"kind", kind_name(spec.kind)}, {"acceptance", acc}};

    if (spec.kind == MeasureKind::Mass) {
        BeliefClassification c = classify_belief(std::get<MassAssignment>(spec.value));
        Json cls;
        switch (c.kind) {
            case BeliefClassification::Kind::SingletonMajority:
                text += "class: singleton-majority " + name_of(u, c.subject) + "\n";
                cls = {{"kind", "singleton-majority"}, {"subject", name_of(u, c.subject)}};
                break;
            case BeliefClassification::Kind::FocalCore:
                text += "class: focal-core " + name_of(u, c.subject) + "\n";
                cls = {{"kind", "focal-core"}, {"subject", name_of(u, c.subject)}};
                break;
            case BeliefClassification::Kind::TwinSingletons:
                text += "class: twin-singletons " + name_of(u, c.subject) + "\n";
                cls = {{"kind", "twin-singletons"}, {"subject", name_of(u, c.subject)}};
                break;
            case BeliefClassification::Kind::NotAcceptance:
                text += "class: not-acceptance\n";
                cls = {{"kind", "not-acceptance"}};
                if (c.witness) {
                    text += "witness: " + name_of(u, c.witness->first) + " and " +
                            name_of(u, c.witness->second) +
                            " accepted, their intersection is not\n";
                    cls["witness"] =
                        Json::array({name_of(u, c.witness->first), name_of(u, c.witness->second)});
                }
                break;
        }
        j["class"] = cls;
    } else if (spec.kind == MeasureKind::Prob) {
        ProbClassification c = classify_probability(std::get<ProbabilityDistribution>(spec.value));
        Json cls;
        switch (c.kind) {
            case ProbClassification::Kind::MajorityAtom:
                text += "class: majority-atom " + u.atom_name(c.atom_a) + "\n";
                cls = {{"kind", "majority-atom"}, {"atom", u.atom_name(c.atom_a)}};
                break;
            case ProbClassification::Kind::HalfHalfPair:
                text += "class: half-half-pair " + u.atom_name(c.atom_a) + ", " +
                        u.atom_name(c.atom_b) + "\n";
                cls = {{"kind", "half-half-pair"},
                       {"atoms", Json::array({u.atom_name(c.atom_a), u.atom_name(c.atom_b)})}};
                break;
            case ProbClassification::Kind::NotAcceptance:
                text += "class: not-acceptance\n";
                cls = {{"kind", "not-acceptance"}};
                if (c.witness) {
                    text += "witness: " + name_of(u, c.witness->first) + " and " +
                            name_of(u, c.witness->second) +
                            " accepted, their intersection is not\n";
                    cls["witness"] =
                        Json::array({name_of(u, c.witness->first), name_of(u, c.witness->second)});
                }
                break;
        }
        j["class"] = cls;
    }
    return {std::move(text), j.dump(2), false, report.is_acceptance ? 0 : 1};
}

CommandResult cmd_moebius(const std::string& file, bool require_belief) {
    MeasureSpec spec = load(file);
    SetFunction f = spec.primary();
    const Universe& u = f.universe();
    SignedMass m = moebius(f);

    std::string text = "universe:";
    for (const auto& atom : u.atoms()) text += " " + atom;
    text += "\nkind: mass\n";
    Json entries = Json::array();
    bool negative = false;
    Rational most_negative;
    Event most_negative_event;
    for (std::uint32_t bits = 0; bits < u.table_size(); ++bits) {
        const Rational& value = m.at_bits(bits);
        if (value.is_zero()) continue;
        text += "m " + name_of(u, u.event_from_bits(bits)) + " = " + value.str() + "\n";
        entries.push_back({{"event", name_of(u, u.event_from_bits(bits))}, {"mass", value.str()}});
        if (value.is_negative() && (!negative || value < most_negative)) {
            negative = true;
            most_negative = value;
            most_negative_event = u.event_from_bits(bits);
        }
    }
    Json j{{"command", "moebius"}, {"entries", entries}, {"is_belief", !negative}};
    j["most_negative"] = nullptr;
    if (negative) {
        text += "# most negative entry: m " + name_of(u, most_negative_event) + " = " +
                most_negative.str() + "\n";
        j["most_negative"] = {{"event", name_of(u, most_negative_event)},
                              {"mass", most_negative.str()}};
    }
    const int exit_code = require_belief && negative ? 1 : 0;
    return {std::move(text), j.dump(2), false, exit_code};
}

CommandResult cmd_dual(const std::string& file) {
    MeasureSpec spec = load(file);
    std::string text = emit_measure_file(dual(spec.primary()));
    Json j{{"command", "dual"}, {"file", text}};
    return {std::move(text), j.dump(2), false, 0};
}

CommandResult cmd_condition(const std::string& file, const std::string& context_text,
                            const std::string& rule) {
    MeasureSpec spec = load(file);
    SetFunction f = spec.primary();
    const Universe& u = f.universe();
    Event context = parse_event_literal(u, context_text);
    if (rule == "bayes" && spec.kind != MeasureKind::Prob) {
        throw Error("--rule bayes needs a prob file, got kind " +
                    std::string(kind_name(spec.kind)));
    }
    if (rule == "possibilistic" && spec.kind != MeasureKind::Poss) {
        throw Error("--rule possibilistic needs a poss file, got kind " +
                    std::string(kind_name(spec.kind)));
    }

    std::vector<Event> base = conditioned_base(f, context);
    std::string text = "context: " + name_of(u, context) + "\n";
    text += "base size: " + std::to_string(base.size()) + "\n";
    Json j{{"command", "condition"}, {"rule", rule}, {"context", name_of(u, context)}};
    j["base_size"] = base.size();
    j["is_belief_set"] = nullptr;
    j["violation_witness"] = nullptr;
    j["conditioned_kernel"] = nullptr;
    if (u.size() <= 10) {
        ConditionedReport report = is_conditioned_base_belief_set(f, context);
        text += std::string("belief set: ") + (report.is_belief_set ? "yes" : "no") + "\n";
        j["is_belief_set"] = report.is_belief_set;
        if (report.violation_witness) {
            text += "witness: " + name_of(u, report.violation_witness->first) + " and " +
                    name_of(u, report.violation_witness->second) +
                    " in the base, their intersection is not\n";
            j["violation_witness"] = Json::array({name_of(u, report.violation_witness->first),
                                                  name_of(u, report.violation_witness->second)});
        }
        if (report.conditioned_kernel) {
            text += "conditioned kernel: " + name_of(u, *report.conditioned_kernel) + "\n";
            j["conditioned_kernel"] = name_of(u, *report.conditioned_kernel);
        }
    } else {
        text += "belief set: unchecked (universe too large for the pairwise check)\n";
    }
    text += "base events:\n";
    Json base_json = Json::array();
    for (Event e : base) {
        text += "  " + name_of(u, e) + "\n";
        base_json.push_back(name_of(u, e));
    }
    j["base"] = base_json;

    if (rule == "bayes") {
        ProbabilityDistribution conditioned =
            condition_probability(std::get<ProbabilityDistribution>(spec.value), context);
        std::string emitted = emit_measure_file(MeasureSpec{MeasureKind::Prob, conditioned});
        text += "conditioned measure:\n" + emitted;
        j["conditioned_file"] = emitted;
    } else if (rule == "possibilistic") {
        PossibilityDistribution conditioned = condition_possibility_distribution(
            std::get<PossibilityDistribution>(spec.value), context);
        std::string emitted = emit_measure_file(MeasureSpec{MeasureKind::Poss, conditioned});
        text += "conditioned measure:\n" + emitted;
        j["conditioned_file"] = emitted;
    }
    return {std::move(text), j.dump(2), false, 0};
}

const std::vector<std::string>& property_labels(char property) {
    static const std::vector<std::string> a{"f(S&C)",   "f(~S&C)", "f(T&C)",
                                            "f(~T&C)", "f(S&T&C)", "f((~S|~T)&C)"};
    static const std::vector<std::string> b{"f(A|E)", "f(B)", "f(B|E)",
                                            "f(A)",   "f(E)", "f(A|B)"};
    return property == 'A' ? a : b;
}

void render_property(std::string& text, Json& reports, const PropertyReport& report,
                     const Universe& u) {
    const std::string id(1, report.property);
    std::string verdict;
    if (!report.holds) {
        verdict = "fails";
    } else if (report.exhaustive) {
        verdict = "holds";
    } else {
        verdict = "no counterexample";
    }
    text += "property " + id + ": " + verdict + " (" +
            (report.exhaustive ? "exhaustive, " : "sampled, ") +
            std::to_string(report.cases_checked) + " cases)\n";
    Json entry{{"property", id},
               {"holds", report.holds},
               {"mode", report.exhaustive ? "exhaustive" : "sampled"},
               {"cases", report.cases_checked}};
    entry["counterexample"] = nullptr;
    if (report.counterexample) {
        static const char* const roles_a[] = {"C", "S", "T"};
        static const char* const roles_b[] = {"A", "B", "E"};
        const char* const* roles = report.property == 'A' ? roles_a : roles_b;
        text += "counterexample: ";
        Json events = Json::array();
        for (std::size_t i = 0; i < 3; ++i) {
            text += std::string(roles[i]) + " = " + name_of(u, (*report.counterexample)[i]) +
                    (i + 1 < 3 ? ", " : "\n");
            events.push_back(name_of(u, (*report.counterexample)[i]));
        }
        render_inequalities(text, property_labels(report.property), report.witness_values);
        entry["counterexample"] = {{"roles", Json::array({roles[0], roles[1], roles[2]})},
                                   {"events", events},
                                   {"values", values_json(report.witness_values)}};
    }
    if (report.agrees_with_property_a) {
        entry["agrees_with_property_a"] = *report.agrees_with_property_a;
    }
    reports.push_back(entry);
}

CommandResult cmd_tolerant(const std::string& file, const std::string& property,
                           std::optional<unsigned> max_exhaustive,
                           std::optional<std::uint64_t> samples) {
    MeasureSpec spec = load(file);
    SetFunction f = spec.primary();
    SweepOptions opts;
    opts.max_exhaustive = max_exhaustive;
    opts.samples = samples;

    std::string text;
    Json reports = Json::array();
    bool all_hold = true;
    if (property == "A" || property == "B") {
        PropertyReport report =
            property == "A" ? check_property_A(f, opts) : check_property_B(f, opts);
        all_hold = report.holds;
        render_property(text, reports, report, f.universe());
    } else {
        auto [a, b] = check_both_properties(f, opts);
        all_hold = a.holds && b.holds;
        render_property(text, reports, a, f.universe());
        render_property(text, reports, b, f.universe());
        text += std::string("agreement: ") + (a.holds == b.holds ? "yes" : "no") + "\n";
    }
    Json j{{"command", "tolerant"}, {"reports", reports}};
    return {std::move(text), j.dump(2), false, all_hold ? 0 : 1};
}

const std::vector<std::string>& klm_labels(KlmProperty p) {
    static const std::vector<std::string> ref{"f(A)", "f({})"};
    static const std::vector<std::string> rw{"f(A&B)", "f(A&~B)", "f(A&B')", "f(A&~B')"};
    static const std::vector<std::string> con{"f(A&B)",   "f(A&~B)", "f(A&C)",
                                              "f(A&~C)", "f(A&B&C)", "f(A&~(B&C))"};
    static const std::vector<std::string> dis{"f(A&C)",      "f(A&~C)", "f(B&C)",
                                              "f(B&~C)", "f((A|B)&C)", "f((A|B)&~C)"};
    static const std::vector<std::string> cm{"f(A&B)",   "f(A&~B)", "f(A&C)",
                                             "f(A&~C)", "f(A&B&C)", "f(A&B&~C)"};
    static const std::vector<std::string> cut{"f(A&B&C)", "f(A&B&~C)", "f(A&B)",
                                              "f(A&~B)",  "f(A&C)",    "f(A&~C)"};
    switch (p) {
        case KlmProperty::Reflexivity: return ref;
        case KlmProperty::RightWeakening: return rw;
        case KlmProperty::Conjunction: return con;
        case KlmProperty::Disjunction: return dis;
        case KlmProperty::CautiousMonotony: return cm;
        case KlmProperty::Cut: return cut;
    }
    return ref;
}

std::vector<std::string> klm_roles(KlmProperty p) {
    switch (p) {
        case KlmProperty::Reflexivity: return {"A"};
        case KlmProperty::RightWeakening: return {"A", "B", "B'"};
        default: return {"A", "B", "C"};
    }
}

CommandResult cmd_klm(const std::string& file, const std::string& props_text) {
    MeasureSpec spec = load(file);
    SetFunction f = spec.primary();
    const Universe& u = f.universe();

    std::vector<KlmProperty> props;
    if (props_text.empty()) {
        props = all_klm_properties();
    } else {
        std::size_t start = 0;
        while (start <= props_text.size()) {
            std::size_t end = props_text.find(',', start);
            if (end == std::string::npos) end = props_text.size();
            std::string id = props_text.substr(start, end - start);
            auto p = klm_from_id(id);
            if (!p) throw Error("unknown property '" + id + "' (use ref,rw,and,or,cm,cut)");
            props.push_back(*p);
            if (end == props_text.size()) break;
            start = end + 1;
        }
    }

    KlmReport report = check_klm(f, props);
    std::string text;
    Json entries = Json::array();
    for (const auto& entry : report.entries) {
        std::string status = entry.status == KlmEntry::Status::Holds ? "holds"
                             : entry.status == KlmEntry::Status::NoCounterexample
                                 ? "no counterexample"
                                 : "fails";
        const bool sampled = entry.status == KlmEntry::Status::NoCounterexample;
        text += std::string(klm_id(entry.property)) + ": " + status + " (" +
                (sampled ? "sampled, " : "exhaustive, ") + std::to_string(entry.cases_checked) +
                " cases)\n";
        Json e{{"property", klm_id(entry.property)},
               {"status", entry.status == KlmEntry::Status::Holds ? "holds"
                          : sampled ? "no-counterexample"
                                    : "fails"},
               {"cases", entry.cases_checked}};
        e["counterexample"] = nullptr;
        if (!entry.counterexample.empty()) {
            std::vector<std::string> roles = klm_roles(entry.property);
            text += "counterexample: ";
            Json events = Json::array();
            for (std::size_t i = 0; i < entry.counterexample.size(); ++i) {
                text += roles[i] + " = " + name_of(u, entry.counterexample[i]) +
                        (i + 1 < entry.counterexample.size() ? ", " : "\n");
                events.push_back(name_of(u, entry.counterexample[i]));
            }
            render_inequalities(text, klm_labels(entry.property), entry.witness_values);
            e["counterexample"] = {{"roles", roles},
                                   {"events", events},
                                   {"values", values_json(entry.witness_values)}};
        }
        entries.push_back(e);
    }
    Json j{{"command", "klm"}, {"entries", entries}};
    return {std::move(text), j.dump(2), false, report.all_hold() ? 0 : 1};
}

CommandResult cmd_independent(const std::string& file, const std::string& event_text,
                              const std::string& context_text) {
    MeasureSpec spec = load(file);
    SetFunction f = spec.primary();
    const Universe& u = f.universe();
    Event a = parse_event_literal(u, event_text);
    Event context = parse_event_literal(u, context_text);

    const std::uint32_t full = u.full_event().bits();
    const bool accepted = f.at(a) > f.at(a.complement());
    const bool in_context = f.at_bits(a.bits() & context.bits()) >
                            f.at_bits(context.bits() & full & ~a.bits());
    const bool independent = is_independent(f, a, context);

    std::string text = "event: " + name_of(u, a) + "\n";
    text += "context: " + name_of(u, context) + "\n";
    text += std::string("accepted: ") + (accepted ? "yes" : "no") + " (f = " + f.at(a).str() +
            ", complement " + f.at(a.complement()).str() + ")\n";
    text += std::string("accepted in context: ") + (in_context ? "yes" : "no") +
            " (f(A&C) = " + f.at_bits(a.bits() & context.bits()).str() + ", f(~A&C) = " +
            f.at_bits(context.bits() & full & ~a.bits()).str() + ")\n";
    text += std::string("independent: ") + (independent ? "yes" : "no") + "\n";
    Json j{{"command", "independent"}, {"event", name_of(u, a)},
           {"context", name_of(u, context)}, {"accepted", accepted},
           {"accepted_in_context", in_context}, {"independent", independent}};
    return {std::move(text), j.dump(2), false, independent ? 0 : 1};
}

CommandResult cmd_update(const std::string& file, const std::string& context_text) {
    MeasureSpec spec = load(file);
    SetFunction f = spec.primary();
    const Universe& u = f.universe();
    Event context = parse_event_literal(u, context_text);

    AcceptanceReport acceptance = is_acceptance(f);
    UpdateReport report = classify_update(f, context);
    const char* kind = report.kind == UpdateClass::Expansion   ? "expansion"
                       : report.kind == UpdateClass::Revision ? "revision"
                                                              : "undefined";
    std::string text = "context: " + name_of(u, context) + "\n";
    text += "kernel: " + name_of(u, acceptance.kernel) + "\n";
    text += std::string("class: ") + kind + "\n";
    Json j{{"command", "update"}, {"context", name_of(u, context)},
           {"kernel", name_of(u, acceptance.kernel)}, {"class", kind}};
    j["conditioned_kernel"] = nullptr;
    if (report.conditioned_kernel) {
        text += "conditioned kernel: " + name_of(u, *report.conditioned_kernel) + "\n";
        j["conditioned_kernel"] = name_of(u, *report.conditioned_kernel);
    }
    return {std::move(text), j.dump(2), false, 0};
}

}  // namespace

CommandResult run(const std::vector<std::string>& args) {
    CLI::App app{"acceptance analysis for confidence measures"};
    app.require_subcommand(1);
    bool json_mode = false;
    app.add_flag("--json", json_mode, "emit the machine readable payload");

    std::string file;
    std::string context_text;
    std::string event_text;
    std::string rule = "generic";
    std::string property;
    std::string props_text;
    unsigned max_exhaustive = 0;
    std::uint64_t samples = 0;
    bool require_belief = false;

    std::function<CommandResult()> action;

    auto subcommand = [&](const char* name, const char* description) {
        CLI::App* sub = app.add_subcommand(name, description);
        sub->fallthrough();
        sub->add_option("file", file, "measure file")->required();
        return sub;
    };

    CLI::App* validate = subcommand("validate", "check the confidence axioms");
    validate->callback([&] { action = [&] { return cmd_validate(file); }; });

    CLI::App* accept = subcommand("accept", "list the accepted events");
    accept->callback([&] { action = [&] { return cmd_accept(file); }; });

    CLI::App* kernel_cmd = subcommand("kernel", "intersection of the accepted events");
    kernel_cmd->callback([&] { action = [&] { return cmd_kernel(file); }; });

    CLI::App* classify = subcommand("classify", "acceptance decision and structural class");
    classify->callback([&] { action = [&] { return cmd_classify(file); }; });

    CLI::App* moebius_cmd = subcommand("moebius", "emit the signed mass");
    moebius_cmd->add_flag("--require-belief", require_belief,
                          "fail when any mass entry is negative");
    moebius_cmd->callback([&] { action = [&] { return cmd_moebius(file, require_belief); }; });

    CLI::App* dual_cmd = subcommand("dual", "emit the dual measure as a table file");
    dual_cmd->callback([&] { action = [&] { return cmd_dual(file); }; });

    CLI::App* condition = subcommand("condition", "conditioned belief base");
    condition->add_option("--context", context_text, "context event, e.g. \"{a,b}\"")->required();
    condition->add_option("--rule", rule, "generic, bayes, or possibilistic")
        ->check(CLI::IsMember({"generic", "bayes", "possibilistic"}));
    condition->callback(
        [&] { action = [&] { return cmd_condition(file, context_text, rule); }; });

    CLI::App* tolerant = subcommand("tolerant", "context tolerance properties");
    tolerant->add_option("--property", property, "A or B (default both)")
        ->check(CLI::IsMember({"A", "B"}));
    CLI::Option* max_opt = tolerant->add_option("--max-exhaustive", max_exhaustive,
                                                "exhaustive sweep cap (atoms)");
    CLI::Option* samples_opt =
        tolerant->add_option("--samples", samples, "sample count past the cap");
    tolerant->callback([&, max_opt, samples_opt] {
        action = [&, max_opt, samples_opt] {
            std::optional<unsigned> max;
            std::optional<std::uint64_t> n;
            if (max_opt->count()) max = max_exhaustive;
            if (samples_opt->count()) n = samples;
            return cmd_tolerant(file, property, max, n);
        };
    });

    CLI::App* klm_cmd = subcommand("klm", "consequence relation properties");
    klm_cmd->add_option("--props", props_text, "comma list of ref,rw,and,or,cm,cut");
    klm_cmd->callback([&] { action = [&] { return cmd_klm(file, props_text); }; });

    CLI::App* independent = subcommand("independent", "acceptance unaffected by the context");
    independent->add_option("--event", event_text, "event, e.g. \"{a}\"")->required();
    independent->add_option("--context", context_text, "context event")->required();
    independent->callback(
        [&] { action = [&] { return cmd_independent(file, event_text, context_text); }; });

    CLI::App* update = subcommand("update", "expansion or revision classification");
    update->add_option("--context", context_text, "context event")->required();
    update->callback([&] { action = [&] { return cmd_update(file, context_text); }; });

    std::vector<const char*> argv;
    argv.push_back("accfn");
    for (const auto& arg : args) argv.push_back(arg.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            return {app.help(), std::nullopt, json_mode, 0};
        }
        return {std::string(e.what()) + "\n", std::nullopt, json_mode, 2};
    }

    try {
        CommandResult result = action();
        result.json_mode = json_mode;
        return result;
    } catch (const Error& e) {
        return {std::string(e.what()) + "\n", std::nullopt, json_mode, 2};
    } catch (const std::exception& e) {
        return {std::string(e.what()) + "\n", std::nullopt, json_mode, 2};
    }
}

}  // namespace accfn::cli
