#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "tsw/core.hpp"

namespace tsw {

// A parsed instance file. Colors are present either for both tokens and
// vertices or for neither.
struct Instance {
    Graph graph;
    TokenPlacement placement;
    std::optional<std::vector<int>> token_colors;
    std::optional<std::vector<int>> vertex_colors;

    bool colored() const { return token_colors.has_value(); }
    ColoredInstance as_colored() const;
};

Instance parse_instance(const std::string& text);
std::string emit_instance(const Instance& inst);

Instance load_instance_file(const std::string& path);

SwapSequence parse_swap_sequence(const std::string& text);
std::string emit_swap_sequence(const SwapSequence& seq);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace tsw
