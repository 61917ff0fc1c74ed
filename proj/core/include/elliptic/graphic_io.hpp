#pragma once

#include <filesystem>
#include <string>

#include "elliptic/graphic.hpp"

namespace elliptic {

// "p/q" or "p"; throws GraphicError on malformed input.
Rational parse_rational(const std::string& text);
std::string format_rational(const Rational& r);

// JSON interchange format. Unknown keys are rejected.
Graphic parse_graphic_json(const std::string& text);
Graphic read_graphic_file(const std::filesystem::path& path);

// Stable output: two-space indent, LF line endings, trailing newline.
std::string write_graphic_json(const Graphic& g);

}  // namespace elliptic
