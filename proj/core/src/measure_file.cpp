#include "accfn/measure_file.hpp"

#include <cctype>
#include <map>

namespace accfn {
namespace {

bool ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

struct Line {
    std::size_t number = 0;
    std::string text;
};

std::vector<Line> content_lines(std::string_view text) {
    std::vector<Line> out;
    std::size_t number = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        ++number;
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view raw = text.substr(start, end - start);
        start = end + 1;
        if (std::size_t hash = raw.find('#'); hash != std::string_view::npos) {
            raw = raw.substr(0, hash);
        }
        while (!raw.empty() && (raw.back() == ' ' || raw.back() == '\t' || raw.back() == '\r')) {
            raw.remove_suffix(1);
        }
        bool blank = true;
        for (char c : raw) {
            if (c != ' ' && c != '\t') {
                blank = false;
                break;
            }
        }
        if (!blank) out.push_back({number, std::string(raw)});
        if (end == text.size()) break;
    }
    return out;
}

struct LineParser {
    const Line& line;
    std::size_t pos = 0;

    std::size_t column() const { return pos + 1; }
    bool done() const { return pos >= line.text.size(); }
    char peek() const { return line.text[pos]; }

    void skip_ws() {
        while (!done() && (peek() == ' ' || peek() == '\t')) ++pos;
    }

    std::string word() {
        skip_ws();
        std::size_t begin = pos;
        while (!done() && ident_char(peek())) ++pos;
        return line.text.substr(begin, pos - begin);
    }

    void expect(char c, const char* what) {
        skip_ws();
        if (done() || peek() != c) {
            throw ParseError(line.number, column(), std::string("expected ") + what);
        }
        ++pos;
    }

    // Reads "{a, b}" into a bit pattern over u's atoms.
    std::uint32_t set_literal(const Universe& u) {
        expect('{', "a set literal");
        std::uint32_t bits = 0;
        skip_ws();
        if (!done() && peek() == '}') {
            ++pos;
            return bits;
        }
        while (true) {
            skip_ws();
            const std::size_t at = column();
            std::string name = word();
            if (name.empty()) {
                throw ParseError(line.number, at, "expected an atom name");
            }
            int idx = u.atom_index(name);
            if (idx < 0) {
                throw UnknownAtom(line.number, at, "unknown atom '" + name + "'");
            }
            bits |= std::uint32_t{1} << idx;
            skip_ws();
            if (!done() && peek() == ',') {
                ++pos;
                continue;
            }
            expect('}', "',' or '}'");
            return bits;
        }
    }

    Rational value_to_end() {
        expect('=', "'='");
        skip_ws();
        const std::size_t at = column();
        std::string rest = line.text.substr(pos);
        if (rest.empty()) {
            throw ParseError(line.number, at, "missing value");
        }
        try {
            Rational value = Rational::parse(rest);
            pos = line.text.size();
            return value;
        } catch (const std::invalid_argument& e) {
            throw ParseError(line.number, at, e.what());
        }
    }

    void expect_tag(const char* tag) {
        skip_ws();
        const std::size_t at = column();
        std::string got = word();
        if (got != tag) {
            throw ParseError(line.number, at,
                             "expected '" + std::string(tag) + "' entry, got '" + got + "'");
        }
    }
};

Universe parse_universe(const Line& line) {
    LineParser p{line};
    p.skip_ws();
    const std::size_t start = p.column();
    if (p.word() != "universe") {
        throw ParseError(line.number, start, "expected a 'universe:' declaration");
    }
    p.expect(':', "':'");
    std::vector<std::string> atoms;
    while (true) {
        p.skip_ws();
        if (p.done()) break;
        const std::size_t at = p.column();
        std::string name = p.word();
        if (name.empty()) {
            throw ParseError(line.number, at, "expected an atom name");
        }
        atoms.push_back(std::move(name));
    }
    if (atoms.empty()) {
        throw ParseError(line.number, p.column(), "universe needs at least one atom");
    }
    return Universe(std::move(atoms));
}

MeasureKind parse_kind(const Line& line) {
    LineParser p{line};
    p.skip_ws();
    const std::size_t start = p.column();
    if (p.word() != "kind") {
        throw ParseError(line.number, start, "expected a 'kind:' declaration");
    }
    p.expect(':', "':'");
    p.skip_ws();
    const std::size_t at = p.column();
    std::string name = p.word();
    if (name == "table") return MeasureKind::Table;
    if (name == "mass") return MeasureKind::Mass;
    if (name == "prob") return MeasureKind::Prob;
    if (name == "poss") return MeasureKind::Poss;
    throw ParseError(line.number, at, "unknown kind '" + name + "'");
}

}  // namespace

const char* kind_name(MeasureKind kind) {
    switch (kind) {
        case MeasureKind::Table: return "table";
        case MeasureKind::Mass: return "mass";
        case MeasureKind::Prob: return "prob";
        case MeasureKind::Poss: return "poss";
    }
    return "?";
}

const Universe& MeasureSpec::universe() const {
    if (const auto* f = std::get_if<SetFunction>(&value)) return f->universe();
    if (const auto* m = std::get_if<MassAssignment>(&value)) return m->universe;
    if (const auto* p = std::get_if<ProbabilityDistribution>(&value)) return p->universe;
    return std::get<PossibilityDistribution>(value).universe;
}

SetFunction MeasureSpec::primary() const {
    switch (kind) {
        case MeasureKind::Table: return std::get<SetFunction>(value);
        case MeasureKind::Mass: return from_mass(std::get<MassAssignment>(value)).first;
        case MeasureKind::Prob: return from_probability(std::get<ProbabilityDistribution>(value));
        case MeasureKind::Poss: return from_possibility(std::get<PossibilityDistribution>(value)).first;
    }
    throw Error("unreachable measure kind");
}

MeasureSpec parse_measure_file(std::string_view text) {
    const std::vector<Line> lines = content_lines(text);
    if (lines.empty()) {
        throw ParseError(1, 1, "missing universe declaration");
    }
    Universe u = parse_universe(lines[0]);
    if (lines.size() < 2) {
        throw ParseError(0, 0, "missing kind declaration");
    }
    const MeasureKind kind = parse_kind(lines[1]);

    const char* tag = kind == MeasureKind::Table  ? "g"
                      : kind == MeasureKind::Mass ? "m"
                      : kind == MeasureKind::Prob ? "p"
                                                  : "pi";
    const bool set_valued = kind == MeasureKind::Table || kind == MeasureKind::Mass;
    std::map<std::uint32_t, Rational> entries;  // set bits, or atom index
    for (std::size_t i = 2; i < lines.size(); ++i) {
        LineParser p{lines[i]};
        p.expect_tag(tag);
        p.skip_ws();
        const std::size_t at = p.column();
        std::uint32_t key;
        if (set_valued) {
            key = p.set_literal(u);
        } else {
            std::string name = p.word();
            if (name.empty()) {
                throw ParseError(lines[i].number, at, "expected an atom name");
            }
            int idx = u.atom_index(name);
            if (idx < 0) {
                throw UnknownAtom(lines[i].number, at, "unknown atom '" + name + "'");
            }
            key = static_cast<std::uint32_t>(idx);
        }
        Rational value = p.value_to_end();
        p.skip_ws();
        if (!p.done()) {
            throw ParseError(lines[i].number, p.column(), "unexpected trailing text");
        }
        if (entries.count(key)) {
            std::string what = set_valued ? u.event_name(u.event_from_bits(key))
                                          : u.atom_name(key);
            throw DuplicateEntry(lines[i].number, at, "duplicate entry for " + what);
        }
        entries.emplace(key, std::move(value));
    }

    try {
        switch (kind) {
            case MeasureKind::Table: {
                const std::uint32_t full = u.full_event().bits();
                std::vector<Rational> table(u.table_size());
                table[full] = Rational(1);
                for (std::uint32_t bits = 1; bits < full; ++bits) {
                    auto it = entries.find(bits);
                    if (it == entries.end()) {
                        throw MissingEntry(0, 0, "missing table entry for " +
                                                     u.event_name(u.event_from_bits(bits)));
                    }
                    table[bits] = it->second;
                }
                if (auto it = entries.find(0); it != entries.end()) table[0] = it->second;
                if (auto it = entries.find(full); it != entries.end()) table[full] = it->second;
                return {kind, SetFunction(u, std::move(table))};
            }
            case MeasureKind::Mass: {
                MassAssignment m{u, std::move(entries)};
                from_mass(m);  // sum, positivity, nonempty focals
                return {kind, std::move(m)};
            }
            case MeasureKind::Prob: {
                ProbabilityDistribution d{u, std::vector<Rational>(u.size())};
                for (const auto& [idx, value] : entries) d.p[idx] = value;
                from_probability(d);
                return {kind, std::move(d)};
            }
            case MeasureKind::Poss: {
                PossibilityDistribution d{u, std::vector<Rational>(u.size())};
                for (const auto& [idx, value] : entries) d.pi[idx] = value;
                from_possibility(d);
                return {kind, std::move(d)};
            }
        }
    } catch (const ParseError&) {
        throw;
    } catch (const Error& e) {
        throw ValidationError(e.what());
    }
    throw Error("unreachable measure kind");
}

std::string emit_measure_file(const MeasureSpec& spec) {
    const Universe& u = spec.universe();
    std::string out = "universe:";
    for (const auto& atom : u.atoms()) {
        out += ' ';
        out += atom;
    }
    out += "\nkind: ";
    out += kind_name(spec.kind);
    out += '\n';

    auto set_line = [&](const char* tag, std::uint32_t bits, const Rational& value) {
        out += tag;
        out += ' ';
        out += u.event_name(u.event_from_bits(bits));
        out += " = ";
        out += value.str();
        out += '\n';
    };
    auto atom_line = [&](const char* tag, unsigned idx, const Rational& value) {
        out += tag;
        out += ' ';
        out += u.atom_name(idx);
        out += " = ";
        out += value.str();
        out += '\n';
    };

    switch (spec.kind) {
        case MeasureKind::Table: {
            const auto& f = std::get<SetFunction>(spec.value);
            const std::uint32_t full = u.full_event().bits();
            if (!f.at_bits(0).is_zero()) set_line("g", 0, f.at_bits(0));
            for (std::uint32_t bits = 1; bits < full; ++bits) set_line("g", bits, f.at_bits(bits));
            if (f.at_bits(full) != Rational(1)) set_line("g", full, f.at_bits(full));
            break;
        }
        case MeasureKind::Mass:
            for (const auto& [bits, value] : std::get<MassAssignment>(spec.value).focal) {
                set_line("m", bits, value);
            }
            break;
        case MeasureKind::Prob: {
            const auto& d = std::get<ProbabilityDistribution>(spec.value);
            for (unsigned i = 0; i < u.size(); ++i) {
                if (!d.p[i].is_zero()) atom_line("p", i, d.p[i]);
            }
            break;
        }
        case MeasureKind::Poss: {
            const auto& d = std::get<PossibilityDistribution>(spec.value);
            for (unsigned i = 0; i < u.size(); ++i) {
                if (!d.pi[i].is_zero()) atom_line("pi", i, d.pi[i]);
            }
            break;
        }
    }
    return out;
}

std::string emit_measure_file(const SetFunction& table) {
    return emit_measure_file(MeasureSpec{MeasureKind::Table, table});
}

}  // namespace accfn
