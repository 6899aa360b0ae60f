#pragma once

#include <slporbit/slp.hpp>
#include <slporbit/tableau.hpp>

#include <string>

namespace slporbit {

struct RenderSpec {
    enum class Format { Ascii, Svg } format = Format::Ascii;
    int unit = 28;  // svg horizontal spacing per point
};

std::string render_pattern_ascii(const SymmetricLinkPattern& l);
std::string render_pattern_svg(const SymmetricLinkPattern& l, int unit = 28);
std::string render_sdt_ascii(const TwoColumnSDT& t);

}  // namespace slporbit
