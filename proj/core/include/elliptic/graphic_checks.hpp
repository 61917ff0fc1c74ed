#pragma once

#include <string>
#include <vector>

#include "elliptic/graphic.hpp"

namespace elliptic {

struct Finding {
    std::string rule;
    std::vector<int> regions;
    std::vector<int> edges;
    std::vector<int> vertices;
    std::string message;
};

struct CheckReport {
    std::vector<Finding> violations;
    std::vector<Finding> precondition_failures;
    std::vector<Finding> out_of_scope;
    bool ok() const { return violations.empty(); }
    bool clean() const { return violations.empty() && precondition_failures.empty(); }
};

// True if one label has an a-class letter and the other a b-class letter, or
// likewise for x and y.
bool labels_opposed(const Label& p, const Label& q);
bool violates_rs1(const Label& l);

CheckReport validate_labels(const Graphic& g, bool strong_irreducible);

// letter_class accepts either case of the required letter; capital_only
// demands the capital letter.
enum class BorderMode { letter_class, capital_only };

CheckReport check_border_labels(const Graphic& g, const Rational& eps, BorderMode mode = BorderMode::letter_class);
CheckReport check_rs2(const Graphic& g);
CheckReport check_rs3(const Graphic& g);

}  // namespace elliptic
