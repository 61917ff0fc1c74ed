#pragma once

#include <optional>
#include <string>
#include <vector>

namespace elliptic {

enum class Notation { utf8, ascii };

// Symbolic Lie group built from a small set of atoms.
class GroupDescriptor {
public:
    enum class Atom {
        trivial,    // {1}
        cyclic,     // C_k
        points,     // P_k, a discrete space with k points
        dihedral,   // D_k of order k
        sym3,       // S_3
        circle,     // S^1
        sphere3,    // S^3
        so2,
        so3,
        o2,
        o2_star,
        o4,
        dih_torus,  // Dih(S^1 x S^1)
        r_inf,      // R^infinity
    };
    enum class Op { atom, product, central_product, extension };

    static GroupDescriptor atom(Atom a, std::string index = {});
    static GroupDescriptor trivial() { return atom(Atom::trivial); }
    static GroupDescriptor cyclic(std::string k) { return atom(Atom::cyclic, std::move(k)); }
    static GroupDescriptor cyclic(long k) { return cyclic(std::to_string(k)); }
    static GroupDescriptor points(long k) { return atom(Atom::points, std::to_string(k)); }
    static GroupDescriptor dihedral(std::string k) { return atom(Atom::dihedral, std::move(k)); }

    static GroupDescriptor product(std::vector<GroupDescriptor> factors);
    // The twisted product written with a semidirect sign and a tilde.
    static GroupDescriptor central_product(GroupDescriptor left, GroupDescriptor right);
    // G o C_k: the group generated by G and an extra element of order k.
    static GroupDescriptor extension(GroupDescriptor base, long k);

    Op op() const { return op_; }
    Atom atom_kind() const { return atom_; }
    const std::string& index() const { return index_; }
    const std::vector<GroupDescriptor>& children() const { return children_; }

    std::string render(Notation notation = Notation::utf8) const;

    // Number of path components, or nullopt when an index is symbolic.
    std::optional<long> component_count() const;
    // Order of a finite group.
    std::optional<long> order() const;
    bool is_finite() const;

    // Evaluates symbolic indices such as "2m" or "n".
    GroupDescriptor substitute(long m, long n) const;

    bool operator==(const GroupDescriptor&) const = default;

private:
    Op op_ = Op::atom;
    Atom atom_ = Atom::trivial;
    std::string index_;
    std::vector<GroupDescriptor> children_;
};

GroupDescriptor operator*(const GroupDescriptor& a, const GroupDescriptor& b);

// Evaluates an index expression: optional integer coefficient followed by an
// optional variable m or n.
std::optional<long> evaluate_index(const std::string& expr, std::optional<long> m = {},
                                   std::optional<long> n = {});

std::string subscript(const std::string& s, Notation notation);

// Display width of UTF-8 text, ignoring combining marks.
std::size_t display_width(const std::string& utf8);

}  // namespace elliptic
