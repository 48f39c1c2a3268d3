#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "quandle/perm.hpp"

namespace quandle {

/// Outcome of one exhaustively checked property. When ok is false,
/// witness holds the lexicographically first violating tuple of elements
/// (variable order is documented per check).
struct Verdict {
    bool ok = true;
    std::vector<Elem> witness;
};

/// Named verdicts in insertion order, one entry per checked clause.
/// Every failed verdict carries a replayable witness.
class PropertyReport {
public:
    void record(std::string name, Verdict v) {
        entries_.emplace_back(std::move(name), std::move(v));
    }
    void pass(std::string name) { record(std::move(name), Verdict{}); }
    void fail(std::string name, std::vector<Elem> witness) {
        record(std::move(name), Verdict{false, std::move(witness)});
    }

    bool all_pass() const {
        for (const auto& [name, v] : entries_)
            if (!v.ok) return false;
        return true;
    }

    bool passed(std::string_view name) const { return at(name).ok; }

    /// Throws std::out_of_range for unknown names.
    const Verdict& at(std::string_view name) const;

    std::size_t size() const { return entries_.size(); }
    auto begin() const { return entries_.begin(); }
    auto end() const { return entries_.end(); }

private:
    std::vector<std::pair<std::string, Verdict>> entries_;
};

}  // namespace quandle
