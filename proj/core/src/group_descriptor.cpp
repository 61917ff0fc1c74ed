#include "elliptic/group_descriptor.hpp"

#include <cctype>
#include <stdexcept>

namespace elliptic {

namespace {

std::string subscript_char(char c) {
    switch (c) {
        case '0': return "₀";
        case '1': return "₁";
        case '2': return "₂";
        case '3': return "₃";
        case '4': return "₄";
        case '5': return "₅";
        case '6': return "₆";
        case '7': return "₇";
        case '8': return "₈";
        case '9': return "₉";
        case 'm': return "ₘ";
        case 'n': return "ₙ";
        default: throw std::invalid_argument(std::string("no subscript form for '") + c + "'");
    }
}

bool is_finite_atom(GroupDescriptor::Atom a) {
    using A = GroupDescriptor::Atom;
    return a == A::trivial || a == A::cyclic || a == A::points || a == A::dihedral || a == A::sym3;
}

}  // namespace

std::string subscript(const std::string& s, Notation notation) {
    if (notation == Notation::ascii) return "_" + s;
    std::string out;
    for (char c : s) out += subscript_char(c);
    return out;
}

std::size_t display_width(const std::string& utf8) {
    std::size_t width = 0;
    for (std::size_t i = 0; i < utf8.size();) {
        unsigned char c = static_cast<unsigned char>(utf8[i]);
        std::size_t len = c < 0x80 ? 1 : (c >> 5) == 0x6 ? 2 : (c >> 4) == 0xE ? 3 : 4;
        unsigned cp = 0;
        if (len == 1) cp = c;
        else if (len == 2) cp = ((c & 0x1F) << 6) | (utf8[i + 1] & 0x3F);
        else if (len == 3) cp = ((c & 0x0F) << 12) | ((utf8[i + 1] & 0x3F) << 6) | (utf8[i + 2] & 0x3F);
        else cp = 0x10000;
        if (!(cp >= 0x300 && cp <= 0x36F)) ++width;
        i += len;
    }
    return width;
}

std::optional<long> evaluate_index(const std::string& expr, std::optional<long> m, std::optional<long> n) {
    if (expr.empty()) return std::nullopt;
    std::size_t pos = 0;
    long coeff = 1;
    bool has_digits = false;
    while (pos < expr.size() && std::isdigit(static_cast<unsigned char>(expr[pos]))) {
        if (!has_digits) coeff = 0;
        has_digits = true;
        coeff = coeff * 10 + (expr[pos] - '0');
        ++pos;
    }
    if (pos == expr.size()) return has_digits ? std::optional<long>(coeff) : std::nullopt;
    if (pos + 1 != expr.size()) return std::nullopt;
    std::optional<long> var = expr[pos] == 'm' ? m : expr[pos] == 'n' ? n : std::nullopt;
    if (!var) return std::nullopt;
    return coeff * *var;
}

GroupDescriptor GroupDescriptor::atom(Atom a, std::string index) {
    GroupDescriptor d;
    d.op_ = Op::atom;
    d.atom_ = a;
    d.index_ = std::move(index);
    return d;
}

GroupDescriptor GroupDescriptor::product(std::vector<GroupDescriptor> factors) {
    if (factors.empty()) return trivial();
    if (factors.size() == 1) return factors.front();
    GroupDescriptor d;
    d.op_ = Op::product;
    for (auto& f : factors) {
        if (f.op_ == Op::product) d.children_.insert(d.children_.end(), f.children_.begin(), f.children_.end());
        else d.children_.push_back(std::move(f));
    }
    return d;
}

GroupDescriptor operator*(const GroupDescriptor& a, const GroupDescriptor& b) {
    return GroupDescriptor::product({a, b});
}

GroupDescriptor GroupDescriptor::central_product(GroupDescriptor left, GroupDescriptor right) {
    GroupDescriptor d;
    d.op_ = Op::central_product;
    d.children_ = {std::move(left), std::move(right)};
    return d;
}

GroupDescriptor GroupDescriptor::extension(GroupDescriptor base, long k) {
    GroupDescriptor d;
    d.op_ = Op::extension;
    d.index_ = std::to_string(k);
    d.children_ = {std::move(base)};
    return d;
}

std::string GroupDescriptor::render(Notation nt) const {
    bool u = nt == Notation::utf8;
    auto wrapped = [&](const GroupDescriptor& c) {
        std::string s = c.render(nt);
        return c.op_ == Op::atom ? s : "(" + s + ")";
    };
    switch (op_) {
        case Op::atom:
            switch (atom_) {
                case Atom::trivial: return "{1}";
                case Atom::cyclic: return "C" + subscript(index_, nt);
                case Atom::points: return "P" + subscript(index_, nt);
                case Atom::dihedral: return "D" + subscript(index_, nt);
                case Atom::sym3: return u ? "S₃" : "S_3";
                case Atom::circle: return u ? "S¹" : "S^1";
                case Atom::sphere3: return u ? "S³" : "S^3";
                case Atom::so2: return "SO(2)";
                case Atom::so3: return "SO(3)";
                case Atom::o2: return "O(2)";
                case Atom::o2_star: return "O(2)*";
                case Atom::o4: return "O(4)";
                case Atom::dih_torus: return u ? "Dih(S¹×S¹)" : "Dih(S^1xS^1)";
                case Atom::r_inf: return u ? "ℝ^∞" : "R^inf";
            }
            break;
        case Op::product: {
            std::string s;
            for (std::size_t i = 0; i < children_.size(); ++i) {
                if (i) s += u ? "×" : "x";
                const auto& c = children_[i];
                s += c.op_ == Op::product || c.op_ == Op::atom ? c.render(nt) : wrapped(c);
            }
            return s;
        }
        case Op::central_product:
            return wrapped(children_[0]) + (u ? "⋊̃" : "~x~") + wrapped(children_[1]);
        case Op::extension:
            return wrapped(children_[0]) + (u ? "∘" : "o") + "C" + subscript(index_, nt);
    }
    throw std::logic_error("unrenderable group descriptor");
}

std::optional<long> GroupDescriptor::component_count() const {
    switch (op_) {
        case Op::atom:
            switch (atom_) {
                case Atom::cyclic:
                case Atom::points:
                case Atom::dihedral: return evaluate_index(index_);
                case Atom::sym3: return 6;
                case Atom::o2:
                case Atom::o2_star:
                case Atom::o4:
                case Atom::dih_torus: return 2;
                default: return 1;
            }
        case Op::product:
        case Op::central_product: {
            long total = 1;
            for (const auto& c : children_) {
                auto k = c.component_count();
                if (!k) return std::nullopt;
                total *= *k;
            }
            return total;
        }
        case Op::extension: {
            auto k = children_[0].component_count();
            if (!k) return std::nullopt;
            return *k * std::stol(index_);
        }
    }
    return std::nullopt;
}

bool GroupDescriptor::is_finite() const {
    if (op_ == Op::atom) return is_finite_atom(atom_);
    if (op_ == Op::product) {
        for (const auto& c : children_)
            if (!c.is_finite()) return false;
        return true;
    }
    return false;
}

std::optional<long> GroupDescriptor::order() const {
    if (!is_finite()) return std::nullopt;
    return component_count();
}

GroupDescriptor GroupDescriptor::substitute(long m, long n) const {
    GroupDescriptor d = *this;
    if (op_ == Op::atom && !index_.empty()) {
        auto v = evaluate_index(index_, m, n);
        if (!v) throw std::invalid_argument("cannot evaluate index '" + index_ + "'");
        d.index_ = std::to_string(*v);
    }
    for (auto& c : d.children_) c = c.substitute(m, n);
    return d;
}

}  // namespace elliptic
