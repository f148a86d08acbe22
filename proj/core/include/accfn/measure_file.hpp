#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "accfn/errors.hpp"
#include "accfn/measures.hpp"
#include "accfn/set_function.hpp"

namespace accfn {

/// Grammar error with a 1-based location. Line 0 means "end of input".
class ParseError : public Error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& what)
        : Error(line == 0 ? what : "line " + std::to_string(line) + ", column " +
                                       std::to_string(column) + ": " + what),
          line_(line),
          column_(column) {}

    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

struct UnknownAtom : ParseError { using ParseError::ParseError; };
struct DuplicateEntry : ParseError { using ParseError::ParseError; };
struct MissingEntry : ParseError { using ParseError::ParseError; };

/// A parsed file whose kind-specific invariants do not hold (mass sum, etc).
struct ValidationError : Error { using Error::Error; };

enum class MeasureKind { Table, Mass, Prob, Poss };

const char* kind_name(MeasureKind kind);  // "table", "mass", "prob", "poss"

struct MeasureSpec {
    MeasureKind kind;
    std::variant<SetFunction, MassAssignment, ProbabilityDistribution, PossibilityDistribution>
        value;

    const Universe& universe() const;

    /// The set function the analysis commands run on: the table itself, Bel
    /// for a mass, P for a probability, Pi for a possibility.
    SetFunction primary() const;

    friend bool operator==(const MeasureSpec&, const MeasureSpec&) = default;
};

/// Line-based format: a `universe:` line, a `kind:` line, then one entry per
/// line ('#' comments, blank lines ignored). Entry shapes by kind:
///   table  g {a,b} = 3/5     every proper nonempty subset required; {} and
///                            the full set default to 0 and 1
///   mass   m {a} = 1/2       focal sets, positive, summing to 1
///   prob   p a = 1/2         missing atoms default to 0, sum 1
///   poss   pi a = 1          missing atoms default to 0, max 1
/// Values are p/q fractions or decimal literals, parsed exactly.
/// Throws ParseError, UnknownAtom, DuplicateEntry, MissingEntry (all with
/// location), ValidationError, and the universe construction errors.
MeasureSpec parse_measure_file(std::string_view text);

/// Canonical form: atoms in universe order, entries in ascending bit order,
/// values in lowest terms, default-valued entries omitted. Parsing the output
/// reproduces the input value exactly; emitting is idempotent.
std::string emit_measure_file(const MeasureSpec& spec);
std::string emit_measure_file(const SetFunction& table);

}  // namespace accfn
