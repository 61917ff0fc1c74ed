#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace elliptic {

class EulerError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct SpineCount {
    long m = 2;
    long k0 = 0;  // boundary-parallel disks
    long k1 = 0;  // half the meridian disks in V
    long k2 = 0;  // half the meridian disks in W
};

struct CircleCount {
    long m = 1;
    long n = 1;
    long r = 1;  // 2r intersection circles
    long k = 1;  // common class a^k b^{2l}
    long l = 1;
};

struct FeasibilityTrace {
    bool feasible = false;
    long minimal_vertices = 0;
    std::vector<std::string> steps;
};

FeasibilityTrace spine_feasible(const SpineCount& c);
FeasibilityTrace circles_feasible(const CircleCount& c);

struct FaceAudit {
    long vertices = 0;
    long edges = 0;
    long faces = 0;
    long euler_characteristic = 0;
    bool edge_count_ok = false;   // E = 2V
    bool face_bound_ok = false;   // F <= V/2
    bool face_sum_ok = false;     // face sizes add up to E
    std::vector<std::size_t> odd_faces;
    std::vector<std::size_t> bigons;
    bool passes() const {
        return edge_count_ok && face_bound_ok && face_sum_ok && odd_faces.empty() && bigons.empty();
    }
};

// Audit of the flattened intersection complex, all vertices of valence 4.
FaceAudit flattened_face_audit(long v, long e, const std::vector<long>& face_sizes);

// The flattened torus in L(2,1): four squares, two meridian disks on each side.
// Reconstructed from the description; the exact gluing is not pinned down.
struct FlattenedFixture {
    SpineCount counts;
    long vertices = 0;
    long edges = 0;
    std::vector<long> face_sizes;
    bool reconstructed = true;
};

FlattenedFixture l21_flattened_fixture();

}  // namespace elliptic
