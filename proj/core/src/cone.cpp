#include "fgraph/cone.hpp"

namespace fg {

std::vector<PiFraction> cone_angle_audit(const ReducedGraph& reduced) {
    const CombinatorialMap& m = reduced.skeleton;
    FaceSet fs = trace_faces(m);
    int chi = m.vertex_count - m.edge_count() + static_cast<int>(fs.faces.size());
    if (chi != 0)
        throw MapError("NonDiskFace", "reduced map does not fill the torus");
    for (const Face& f : fs.faces)
        if (!f.disk) throw MapError("NonDiskFace", "reduced map has an annulus end");

    // theta(v) = sum over incident corners of pi(1 - 2/|s|); accumulate over
    // the common denominator lcm of face sizes.
    std::vector<PiFraction> theta(m.vertex_count);
    for (int v = 0; v < m.vertex_count; ++v) {
        long long num = 0, den = 1;
        for (int k = 0; k < static_cast<int>(m.rotation[v].size()); ++k) {
            int s = fs.faces[fs.face_of[v][k]].size();
            // add (s - 2) / s
            num = num * s + static_cast<long long>(s - 2) * den;
            den *= s;
            long long g = std::gcd(num < 0 ? -num : num, den);
            if (g > 1) { num /= g; den /= g; }
        }
        theta[v] = {num, den};
        theta[v].normalize();
    }

    // sum of (2 - theta(v)/pi) must vanish
    long long num = 0, den = 1;
    for (const PiFraction& t : theta) {
        num = num * t.den + (2 * t.den - t.num) * den;
        den *= t.den;
        long long g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
    }
    if (num != 0)
        throw MapError("ConeAngleSum", "cone angle defect sum is not zero");
    return theta;
}

}  // namespace fg
