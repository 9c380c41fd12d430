#pragma once

#include "slicess/differentials.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace slicess {

struct ArrowStyle {
    std::string kind;
    std::string color;
    bool dashed = false;
};

// one entry per operation kind that can label a d1 block
const std::vector<ArrowStyle>& arrow_legend();
const ArrowStyle& arrow_style(const std::string& kind);

nlohmann::json region_json(const PageRegion& reg);
std::string render_ascii(const PageRegion& reg);
std::string render_svg(const PageRegion& reg);

}  // namespace slicess
