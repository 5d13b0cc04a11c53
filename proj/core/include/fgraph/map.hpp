#pragma once

#include <array>
#include <compare>
#include <stdexcept>
#include <string>
#include <vector>

namespace fg {

// One end of an edge sitting in a vertex rotation.
struct Dart {
    int vertex = -1;
    int slot = -1;
    auto operator<=>(const Dart&) const = default;
};

// A position in a vertex rotation: which edge end lies there and the label
// (companion vertex number, 1-based) carried by that intersection point.
struct Slot {
    int edge = -1;
    int end = 0;  // 0 = first end, 1 = second end
    int label = 0;
};

struct MapError : std::runtime_error {
    std::string kind;
    MapError(std::string k, const std::string& msg)
        : std::runtime_error(k + ": " + msg), kind(std::move(k)) {}
};

// Boundary circuit of the ribbon surface. Disk circuits are honest faces of
// the embedded graph; non-disk circuits are the two ends of an annulus
// complementary region (the graph need not fill the torus).
struct Face {
    std::vector<Dart> darts;  // edge sides in traversal order
    bool disk = true;
    int size() const { return static_cast<int>(darts.size()); }
};

struct FaceSet {
    std::vector<Face> faces;
    // face index containing each dart, indexed [vertex][slot]
    std::vector<std::vector<int>> face_of;
    int disk_count() const;
    int annulus_end_count() const;
};

// Labeled intersection graph on the torus as a rotation system with fat
// vertices. Rotations are stored in surface orientation order; the label
// word at a vertex of sign +1 reads 1..m forward, at sign -1 backward.
struct CombinatorialMap {
    int delta = 4;            // filling distance, 4 or 5
    int vertex_count = 0;     // n
    int companion_count = 0;  // m, labels range over 1..m
    std::vector<int> signs;   // +1 / -1 per vertex
    std::vector<std::vector<Slot>> rotation;  // delta*m slots per vertex
    // Darts marking boundary circuits that are annulus ends rather than disk
    // faces. Empty for graphs that fill the torus.
    std::vector<Dart> annulus_marks;

    int valence() const { return delta * companion_count; }
    int edge_count() const;
    const Slot& at(const Dart& d) const { return rotation[d.vertex][d.slot]; }

    // Darts of an edge indexed by end tag; edge ids must be 0..E-1.
    std::vector<std::array<Dart, 2>> edge_darts() const;

    bool edge_is_loop(int e) const;
    // +1 when the edge joins vertices of equal sign (loops included).
    int edge_sign(int e) const;
    int label_at(const Dart& d) const { return at(d).label; }
};

// Face traversal of the rotation system; next side of a face after dart d is
// the rotation successor of the opposite end of d. Marks disk/annulus status
// using the map's annulus designation.
FaceSet trace_faces(const CombinatorialMap& m);

// Full structural validation: rotation sizes, edge pairing, label word,
// torus condition (connected genus 1, or all components genus 0 with the
// annulus circuits designated), no disk monogon. Throws MapError.
void validate_map(const CombinatorialMap& m);

// Convenience: validate and return the face set.
FaceSet validate_and_faces(const CombinatorialMap& m);

// Number of subintervals from P to Q going around the vertex in the
// direction induced by the vertex sign (forward in rotation order for +,
// backward for -). d(P,P) = 0 and d(P,Q) + d(Q,P) = valence for P != Q.
int slot_distance(const CombinatorialMap& m, const Dart& p, const Dart& q);

int sign_sum(const CombinatorialMap& m);

// The cyclic label word at a vertex read in the direction induced by the
// vertex sign (forward in rotation order for +, backward for -).
std::vector<int> label_word(const CombinatorialMap& m, int vertex);

// True if word is some cyclic rotation of (1..m) repeated delta times.
bool is_standard_label_word(const std::vector<int>& word, int m, int delta);

}  // namespace fg
