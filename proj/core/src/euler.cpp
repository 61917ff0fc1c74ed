#include "elliptic/euler.hpp"

#include <cstdlib>
#include <sstream>

namespace elliptic {

FeasibilityTrace spine_feasible(const SpineCount& c) {
    if (c.m < 2) throw EulerError("spine counts need m >= 2");
    if (c.k0 < 0 || c.k1 < 0 || c.k2 < 0) throw EulerError("disk counts must be non-negative");
    if (c.k1 + c.k2 < 1) throw EulerError("at least one meridian disk is required");

    FeasibilityTrace t;
    long chi = -c.k0 - 2 * c.k1 - 2 * c.k2;
    long binding = c.k0 + 2 * c.k1 * c.k2 * c.m;
    t.minimal_vertices = 2 * c.k0 + 4 * c.k1 * c.k2 * c.m;
    t.feasible = c.k1 + c.k2 >= c.k1 * c.k2 * c.m;

    std::ostringstream os;
    os << "chi = -k0 - 2k1 - 2k2 = " << chi;
    t.steps.push_back(os.str());
    os.str("");
    os << "V >= 2k0 + 4k1k2m = " << t.minimal_vertices;
    t.steps.push_back(os.str());
    os.str("");
    os << "chi <= -V/2 <= -(k0 + 2k1k2m) = " << -binding;
    t.steps.push_back(os.str());
    os.str("");
    os << "k1 + k2 = " << c.k1 + c.k2 << (t.feasible ? " >= " : " < ") << "k1k2m = " << c.k1 * c.k2 * c.m;
    t.steps.push_back(os.str());
    return t;
}

FeasibilityTrace circles_feasible(const CircleCount& c) {
    if (c.m < 1 || c.n < 1 || c.r < 1) throw EulerError("circle counts need m, n, r >= 1");
    if (c.k == 0 || c.l == 0) throw EulerError("the class a^k b^{2l} needs k and l nonzero");

    FeasibilityTrace t;
    long kl = std::labs(c.k * c.l);
    t.minimal_vertices = 4 * c.r * c.r * kl;
    bool inequality = c.r * kl <= 1;
    bool bounds_disk = (c.k == c.m && c.l == c.n) || (c.k == -c.m && c.l == -c.n);
    t.feasible = inequality && bounds_disk;

    std::ostringstream os;
    os << "V >= 4r^2|kl| = " << t.minimal_vertices;
    t.steps.push_back(os.str());
    os.str("");
    os << "2r = " << 2 * c.r << (2 * c.r >= t.minimal_vertices / 2 ? " >= " : " < ") << "V/2 >= 2r^2|kl| = "
       << 2 * c.r * c.r * kl;
    t.steps.push_back(os.str());
    os.str("");
    os << "r|kl| = " << c.r * kl << (inequality ? " <= 1" : " > 1");
    t.steps.push_back(os.str());
    os.str("");
    os << "class (" << c.k << "," << c.l << ") " << (bounds_disk ? "bounds" : "does not bound")
       << " a disk in R_u (meridian (" << c.m << "," << c.n << "))";
    t.steps.push_back(os.str());
    return t;
}

FaceAudit flattened_face_audit(long v, long e, const std::vector<long>& face_sizes) {
    if (v < 0 || e < 0) throw EulerError("vertex and edge counts must be non-negative");
    FaceAudit a;
    a.vertices = v;
    a.edges = e;
    a.faces = static_cast<long>(face_sizes.size());
    a.euler_characteristic = v - e + a.faces;
    a.edge_count_ok = e == 2 * v;
    a.face_bound_ok = 2 * a.faces <= v;
    long total = 0;
    for (std::size_t i = 0; i < face_sizes.size(); ++i) {
        long s = face_sizes[i];
        if (s < 1) throw EulerError("face sizes must be positive");
        total += s;
        if (s % 2 != 0) a.odd_faces.push_back(i);
        if (s == 2) a.bigons.push_back(i);
    }
    a.face_sum_ok = total == e;
    return a;
}

FlattenedFixture l21_flattened_fixture() {
    FlattenedFixture f;
    f.counts = {2, 0, 1, 1};
    f.vertices = 8;
    f.edges = 16;
    f.face_sizes = {4, 4, 4, 4};
    return f;
}

}  // namespace elliptic
