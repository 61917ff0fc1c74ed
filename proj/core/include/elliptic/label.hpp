#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace elliptic {

class LabelError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

enum class Letter : std::uint8_t { A, B, X, Y, a, b, x, y };

// The four letter classes, written in the sans-serif small caps of the labels:
// A and a both belong to class a, and so on.
enum class LetterClass : std::uint8_t { a, b, x, y };

LetterClass class_of(Letter l);
char to_char(Letter l);

// Region label: a subset of {A, B, X, Y, a, b, x, y}. A small a or b excludes
// A and B; a small x or y excludes X and Y.
class Label {
public:
    Label() = default;

    // Throws LabelError on unknown letters or malformed combinations.
    static Label parse(const std::string& text);

    bool empty() const { return bits_ == 0; }
    bool has(Letter l) const { return (bits_ >> static_cast<int>(l)) & 1U; }
    bool has_class(LetterClass c) const;
    bool has_small() const { return (bits_ & 0xF0U) != 0; }

    // Canonical spelling, letters in the order ABXYabxy.
    std::string to_string() const;

    bool operator==(const Label&) const = default;

private:
    std::uint8_t bits_ = 0;
};

}  // namespace elliptic
