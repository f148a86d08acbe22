#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace accfn {

class Universe;

/// An event: a subset of the universe's atoms, stored as a bit-set over atom
/// indices. Carries the universe size so complement is total.
class Event {
public:
    Event() = default;
    Event(std::uint32_t bits, unsigned universe_size)
        : bits_(bits), n_(static_cast<std::uint8_t>(universe_size)) {}

    std::uint32_t bits() const { return bits_; }
    unsigned universe_size() const { return n_; }
    std::uint32_t full_mask() const { return (std::uint32_t{1} << n_) - 1; }

    bool empty() const { return bits_ == 0; }
    bool full() const { return bits_ == full_mask(); }
    unsigned cardinality() const { return static_cast<unsigned>(__builtin_popcount(bits_)); }

    bool contains_atom(unsigned atom_index) const { return (bits_ >> atom_index) & 1u; }
    bool is_subset_of(Event other) const { return (bits_ & other.bits_) == bits_; }

    Event complement() const { return {~bits_ & full_mask(), n_}; }
    Event intersect(Event other) const { return {bits_ & other.bits_, n_}; }
    Event unite(Event other) const { return {bits_ | other.bits_, n_}; }
    Event minus(Event other) const { return {bits_ & ~other.bits_, n_}; }
    Event with_atom(unsigned atom_index) const { return {bits_ | (1u << atom_index), n_}; }

    friend bool operator==(Event lhs, Event rhs) = default;
    friend auto operator<=>(Event lhs, Event rhs) = default;

private:
    std::uint32_t bits_ = 0;
    std::uint8_t n_ = 0;
};

/// A finite universe of named atoms. At most 16 atoms so that full 2^n value
/// tables and exhaustive sweeps stay tractable.
class Universe {
public:
    static constexpr unsigned max_atoms = 16;

    /// Throws TooManyAtoms, DuplicateAtom, or BadAtomName. Atom order is
    /// preserved and indices are stable.
    explicit Universe(std::vector<std::string> atoms);

    unsigned size() const { return static_cast<unsigned>(atoms_.size()); }
    std::size_t table_size() const { return std::size_t{1} << size(); }
    std::span<const std::string> atoms() const { return atoms_; }
    const std::string& atom_name(unsigned index) const { return atoms_[index]; }

    /// Index of a named atom, or -1 if the name is unknown.
    int atom_index(std::string_view name) const;

    Event empty_event() const { return {0, size()}; }
    Event full_event() const { return {(std::uint32_t{1} << size()) - 1, size()}; }
    Event singleton(unsigned atom_index) const { return {std::uint32_t{1} << atom_index, size()}; }
    Event event_from_bits(std::uint32_t bits) const { return {bits, size()}; }

    /// Event from atom names; throws BadAtomName on an unknown one.
    Event event_of(std::span<const std::string> names) const;

    /// Renders an event as "{a,c}" in atom order; "{}" for the empty event.
    std::string event_name(Event e) const;

    friend bool operator==(const Universe& lhs, const Universe& rhs) = default;

private:
    std::vector<std::string> atoms_;
};

}  // namespace accfn
