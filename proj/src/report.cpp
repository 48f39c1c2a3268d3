#include "quandle/report.hpp"

#include <stdexcept>

namespace quandle {

const Verdict& PropertyReport::at(std::string_view name) const {
    for (const auto& [key, v] : entries_)
        if (key == name) return v;
    throw std::out_of_range("no verdict named '" + std::string(name) + "'");
}

}  // namespace quandle
