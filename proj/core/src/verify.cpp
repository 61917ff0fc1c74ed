#include "elliptic/verify.hpp"

#include <cstdlib>
#include <numeric>

#include "elliptic/euler.hpp"
#include "elliptic/pi1.hpp"
#include "elliptic/quaternion_groups.hpp"
#include "elliptic/torus_curves.hpp"

namespace elliptic {

namespace {

std::string pair_name(long m, long n) { return "(" + std::to_string(m) + "," + std::to_string(n) + ")"; }

}  // namespace

SuiteReport verify_pi1_suite(int max) {
    SuiteReport r{"pi1", 0, {}};
    for (int m = 1; m <= max; ++m)
        for (int n = 1; n <= max; ++n) {
            ++r.cases;
            std::string at = pair_name(m, n) + ": ";
            auto group = construct_pi1(m, n);
            if (group.size() != static_cast<std::size_t>(4 * m * n))
                r.failures.push_back(at + "order " + std::to_string(group.size()));
            if (!check_relations(m, n).all()) r.failures.push_back(at + "relations fail");
            if (4 * m * n <= 600 && !(pi1_is_associative(m, n) && group.is_associative()))
                r.failures.push_back(at + "not associative");
            if (!check_quaternionic_isomorphism(m, n).ok()) r.failures.push_back(at + "no isomorphism");
        }
    return r;
}

SuiteReport verify_free_action_suite(int max) {
    SuiteReport r{"free-action", 0, {}};
    auto check = [&](const FiniteSubgroup& group, bool expect_free, const std::string& at) {
        ++r.cases;
        auto result = verify_free_action(group);
        if (result.free != expect_free) {
            r.failures.push_back(at + (expect_free ? "has a fixed point" : "acts freely"));
            return;
        }
        if (!result.free && (!result.witness || result.witness->element.is_identity() ||
                             witness_residual(*result.witness) > 1e-9))
            r.failures.push_back(at + "witness does not check");
    };
    for (int m = 1; m <= max; ++m)
        for (int n = 1; n <= max; ++n)
            check(construct_pi1(m, n), std::gcd(m, n) == 1, pair_name(m, n) + ": ");
    O2StarElement i(2, 1);
    check(FiniteSubgroup::generated_by({SO4Element(i, i)}), false, "<F(i,i)>: ");
    return r;
}

SuiteReport verify_longitude_suite(long max) {
    SuiteReport r{"longitude", 0, {}};
    long anomalies = 0;
    for (long m = 1; m <= max; ++m)
        for (long n = 1; n <= max; ++n) {
            ++r.cases;
            std::string at = pair_name(m, n) + ": ";
            try {
                auto report = longitudes_are_fibers_check(m, n);
                if (report.anomalous()) ++anomalies;
                if (report.anomalous() != (m == 1 && n == 1)) r.failures.push_back(at + "unexpected anomaly status");
            } catch (const std::logic_error& e) {
                r.failures.push_back(at + e.what());
            }
        }
    if (anomalies != 1) r.failures.push_back("anomaly count " + std::to_string(anomalies));
    return r;
}

SuiteReport verify_bilongitude_suite(long max) {
    SuiteReport r{"bilongitude", 0, {}};
    for (long m = 3; m <= max; ++m)
        for (long q = 1; 2 * q < m; ++q) {
            if (std::gcd(m, q) != 1) continue;
            ++r.cases;
            auto classes = bilongitude_classes(m, q);
            bool ok = q == 1 ? classes == std::vector<CurveClass>{{1, 0, Basis::lens_heegaard}} : classes.empty();
            if (!ok) r.failures.push_back("L" + pair_name(m, q) + ": " + std::to_string(classes.size()) + " classes");
        }
    return r;
}

SuiteReport verify_euler_suite(long max) {
    SuiteReport r{"euler", 0, {}};
    for (long m = 3; m <= max; ++m)
        for (long k1 = 1; k1 <= 10; ++k1)
            for (long k2 = 1; k2 <= 10; ++k2) {
                ++r.cases;
                if (spine_feasible({m, 0, k1, k2}).feasible)
                    r.failures.push_back("spine m=" + std::to_string(m) + " k1=" + std::to_string(k1) +
                                         " k2=" + std::to_string(k2) + " feasible");
            }
    ++r.cases;
    if (!spine_feasible({2, 0, 1, 1}).feasible) r.failures.push_back("spine m=2 k1=k2=1 infeasible");
    for (long m = 1; m <= 20; ++m)
        for (long n = 1; n <= 20; ++n)
            for (long rr = 1; rr <= 5; ++rr)
                for (long k = -5; k <= 5; ++k)
                    for (long l = -5; l <= 5; ++l) {
                        if (k == 0 || l == 0) continue;
                        ++r.cases;
                        bool expected = m == 1 && n == 1 && rr == 1 && std::labs(k) == 1 && std::labs(l) == 1 &&
                                        ((k == 1 && l == 1) || (k == -1 && l == -1));
                        if (circles_feasible({m, n, rr, k, l}).feasible != expected)
                            r.failures.push_back("circles " + pair_name(m, n) + " r=" + std::to_string(rr) +
                                                 " k=" + std::to_string(k) + " l=" + std::to_string(l));
                    }
    return r;
}

}  // namespace elliptic
