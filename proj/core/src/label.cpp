#include "elliptic/label.hpp"

namespace elliptic {

namespace {

constexpr const char* kAlphabet = "ABXYabxy";

std::optional<Letter> letter_of(char c) {
    for (int i = 0; i < 8; ++i)
        if (kAlphabet[i] == c) return static_cast<Letter>(i);
    return std::nullopt;
}

}  // namespace

LetterClass class_of(Letter l) { return static_cast<LetterClass>(static_cast<int>(l) % 4); }

char to_char(Letter l) { return kAlphabet[static_cast<int>(l)]; }

Label Label::parse(const std::string& text) {
    Label label;
    for (char c : text) {
        auto l = letter_of(c);
        if (!l) throw LabelError(std::string("unknown label letter '") + c + "'");
        label.bits_ |= static_cast<std::uint8_t>(1U << static_cast<int>(*l));
    }
    bool small_ab = label.has(Letter::a) || label.has(Letter::b);
    bool small_xy = label.has(Letter::x) || label.has(Letter::y);
    if (small_ab && (label.has(Letter::A) || label.has(Letter::B)))
        throw LabelError("label '" + text + "' mixes a small a/b with A or B");
    if (small_xy && (label.has(Letter::X) || label.has(Letter::Y)))
        throw LabelError("label '" + text + "' mixes a small x/y with X or Y");
    return label;
}

bool Label::has_class(LetterClass c) const {
    int i = static_cast<int>(c);
    return has(static_cast<Letter>(i)) || has(static_cast<Letter>(i + 4));
}

std::string Label::to_string() const {
    std::string s;
    for (int i = 0; i < 8; ++i)
        if (has(static_cast<Letter>(i))) s += kAlphabet[i];
    return s;
}

}  // namespace elliptic
