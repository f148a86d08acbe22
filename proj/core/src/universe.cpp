#include "accfn/universe.hpp"

#include <cctype>

#include "accfn/errors.hpp"

namespace accfn {
namespace {

bool valid_atom_name(std::string_view name) {
    if (name.empty()) return false;
    for (char c : name) {
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    }
    return true;
}

}  // namespace

Universe::Universe(std::vector<std::string> atoms) : atoms_(std::move(atoms)) {
    if (atoms_.empty() || atoms_.size() > max_atoms) {
        throw TooManyAtoms("universe must have between 1 and 16 atoms, got " +
                           std::to_string(atoms_.size()));
    }
    for (std::size_t i = 0; i < atoms_.size(); ++i) {
        if (!valid_atom_name(atoms_[i])) {
            throw BadAtomName("bad atom name '" + atoms_[i] + "'");
        }
        for (std::size_t j = 0; j < i; ++j) {
            if (atoms_[j] == atoms_[i]) {
                throw DuplicateAtom("duplicate atom '" + atoms_[i] + "'");
            }
        }
    }
}

int Universe::atom_index(std::string_view name) const {
    for (std::size_t i = 0; i < atoms_.size(); ++i) {
        if (atoms_[i] == name) return static_cast<int>(i);
    }
    return -1;
}

Event Universe::event_of(std::span<const std::string> names) const {
    std::uint32_t bits = 0;
    for (const auto& name : names) {
        int idx = atom_index(name);
        if (idx < 0) throw BadAtomName("unknown atom '" + name + "'");
        bits |= std::uint32_t{1} << idx;
    }
    return {bits, size()};
}

std::string Universe::event_name(Event e) const {
    std::string out = "{";
    bool first = true;
    for (unsigned i = 0; i < size(); ++i) {
        if (!e.contains_atom(i)) continue;
        if (!first) out += ",";
        out += atoms_[i];
        first = false;
    }
    out += "}";
    return out;
}

}  // namespace accfn
