#pragma once

#include <algorithm>
#include <cmath>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "orthovol/errors.hpp"
#include "orthovol/linalg.hpp"
#include "orthovol/lp.hpp"
#include "orthovol/numeric.hpp"

namespace orthovol {

/// The dimension-n order simplex {1 >= x_1 >= ... >= x_n >= 0}, i.e. the
/// convex hull of the prefix-indicator points P_0..P_n where P_i has i
/// leading ones. All geometry in this library refers to this simplex.
struct Orthoscheme {
    int n;

    explicit Orthoscheme(int dim) : n(dim) {
        if (n < 1) throw InvalidInput("orthoscheme dimension must be >= 1");
    }

    /// P_i: the first i coordinates are 1, the rest 0.
    Vector vertex(int i) const {
        if (i < 0 || i > n) throw InvalidInput("vertex index out of range");
        Vector p(n, 0.0);
        for (int j = 0; j < i; ++j) p[j] = 1.0;
        return p;
    }
};

/// A k-face named by the strictly increasing vertex index set
/// {i_0 < ... < i_k} of the prefix points it contains.
class FaceIndex {
public:
    explicit FaceIndex(std::vector<int> indices) : indices_(std::move(indices)) {
        if (indices_.empty()) throw InvalidInput("face index set must be nonempty");
        if (indices_.front() < 0) throw InvalidInput("face indices must be nonnegative");
        for (std::size_t i = 1; i < indices_.size(); ++i)
            if (indices_[i] <= indices_[i - 1])
                throw InvalidInput("face indices must be strictly increasing");
    }

    const std::vector<int>& indices() const { return indices_; }
    int k() const { return static_cast<int>(indices_.size()) - 1; }
    int lowest() const { return indices_.front(); }
    int highest() const { return indices_.back(); }

    /// i_k - i_0, the total index span covered by the gaps.
    int span() const { return highest() - lowest(); }

    /// Consecutive index differences (l_1, ..., l_k).
    std::vector<int> gaps() const {
        std::vector<int> g;
        g.reserve(indices_.size() - 1);
        for (std::size_t i = 1; i < indices_.size(); ++i)
            g.push_back(indices_[i] - indices_[i - 1]);
        return g;
    }

    double gap_product() const {
        double p = 1.0;
        for (std::size_t i = 1; i < indices_.size(); ++i) p *= indices_[i] - indices_[i - 1];
        return p;
    }

    bool valid_for(int n) const { return highest() <= n; }

    void require_valid(int n) const {
        if (!valid_for(n)) throw InvalidInput("face index exceeds ambient dimension");
    }

    /// Comma-joined serialization, e.g. "0,2,4".
    std::string to_string() const {
        std::string s;
        for (std::size_t i = 0; i < indices_.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(indices_[i]);
        }
        return s;
    }

    auto operator<=>(const FaceIndex&) const = default;

private:
    std::vector<int> indices_;
};

/// {x : <normal, x> <= offset}
struct Halfspace {
    Vector normal;
    double offset;
};

/// The n+1 vertices P_0..P_n; P_i has the first i coordinates equal to 1.
/// For any v, <v, P_i> is the i-th prefix sum of v, which is what the
/// Monte Carlo samplers lean on.
inline std::vector<Vector> vertices(int n) {
    if (n < 1) throw InvalidInput("vertices: dimension must be >= 1");
    std::vector<Vector> pts(n + 1, Vector(n, 0.0));
    for (int i = 1; i <= n; ++i)
        for (int j = 0; j < i; ++j) pts[i][j] = 1.0;
    return pts;
}

/// k-volume of the face F_J: sqrt(l_1 * ... * l_k) / k!.
/// A vertex (k = 0) has volume 1, the weight it carries in the
/// face-measure sum.
inline double face_volume(int n, const FaceIndex& face) {
    face.require_valid(n);
    int k = face.k();
    if (k <= 150) return std::sqrt(face.gap_product()) / factorial(k);
    double log_gaps = 0.0;
    for (int g : face.gaps()) log_gaps += std::log(static_cast<double>(g));
    return std::exp(0.5 * log_gaps - log_factorial(k));
}

/// All C(n+1, k+1) k-faces in lexicographic order of their index sets.
/// The order is part of the output contract (reports are reproducible).
inline std::vector<FaceIndex> enumerate_faces(int n, int k) {
    if (n < 1) throw InvalidInput("enumerate_faces: dimension must be >= 1");
    if (k < 0 || k > n) throw InvalidInput("enumerate_faces: k out of range");
    std::vector<FaceIndex> out;
    std::vector<int> idx(k + 1);
    for (int i = 0; i <= k; ++i) idx[i] = i;
    for (;;) {
        out.emplace_back(idx);
        int pos = k;
        while (pos >= 0 && idx[pos] == n - (k - pos)) --pos;
        if (pos < 0) break;
        ++idx[pos];
        for (int i = pos + 1; i <= k; ++i) idx[i] = idx[i - 1] + 1;
    }
    return out;
}

/// H-description of the simplex: x_1 <= 1, x_{i+1} - x_i <= 0, -x_n <= 0.
/// Equivalent to the vertex description (each vertex checkable exactly:
/// entries are 0 or +-1).
inline std::vector<Halfspace> facet_halfspaces(int n) {
    if (n < 1) throw InvalidInput("facet_halfspaces: dimension must be >= 1");
    std::vector<Halfspace> hs;
    hs.reserve(n + 1);
    Vector top(n, 0.0);
    top[0] = 1.0;
    hs.push_back({top, 1.0});
    for (int i = 1; i <= n - 1; ++i) {
        Vector v(n, 0.0);
        v[i - 1] = -1.0;
        v[i] = 1.0;
        hs.push_back({v, 0.0});
    }
    Vector bottom(n, 0.0);
    bottom[n - 1] = -1.0;
    hs.push_back({bottom, 0.0});
    return hs;
}

/// Circumradius via the equidistance system <c, P_i> = |P_i|^2 / 2
/// (P_0 = 0 anchors the center). Solved rather than hard-coded; the known
/// closed form sqrt(n)/2 guards the numerics.
inline double circumradius(int n) {
    if (n < 1) throw InvalidInput("circumradius: dimension must be >= 1");
    Matrix a(n, n);
    Vector b(n);
    for (int i = 1; i <= n; ++i) {
        for (int j = 0; j < i; ++j) a(i - 1, j) = 1.0;  // <c, P_i> = prefix sum
        b[i - 1] = 0.5 * i;                             // |P_i|^2 = i
    }
    Vector center = solve_linear(a, b);
    double r = norm(center);
    double expected = 0.5 * std::sqrt(static_cast<double>(n));
    if (std::fabs(r - expected) > 1e-9 * expected)
        throw InternalError("circumradius solve disagrees with sqrt(n)/2");
    return r;
}

/// Chebyshev inradius: max rho s.t. <a_j, x> + rho |a_j| <= b_j over the
/// facet halfspaces, as an LP with x split into positive/negative parts.
inline double inradius(int n) {
    if (n < 1) throw InvalidInput("inradius: dimension must be >= 1");
    std::vector<Halfspace> hs = facet_halfspaces(n);
    const std::size_t m = hs.size();
    // variables: x+ (n), x- (n), rho
    Matrix a(m, 2 * n + 1);
    Vector b(m), c(2 * n + 1, 0.0);
    for (std::size_t j = 0; j < m; ++j) {
        for (int i = 0; i < n; ++i) {
            a(j, i) = hs[j].normal[i];
            a(j, n + i) = -hs[j].normal[i];
        }
        a(j, 2 * n) = norm(hs[j].normal);
        b[j] = hs[j].offset;
    }
    c[2 * n] = 1.0;
    LpSolution sol = simplex_maximize(a, b, c);
    if (sol.objective <= 0.0) throw InternalError("inradius LP returned nonpositive radius");
    return sol.objective;
}

/// Independent inradius route: r = n Vol_n / (sum of facet (n-1)-volumes),
/// with every volume taken from the face-volume formula.
inline double inradius_volume_identity(int n) {
    if (n < 1) throw InvalidInput("inradius_volume_identity: dimension must be >= 1");
    std::vector<int> all(n + 1);
    for (int i = 0; i <= n; ++i) all[i] = i;
    double vol = face_volume(n, FaceIndex(all));
    KahanSum surf;
    for (const FaceIndex& f : enumerate_faces(n, n - 1)) surf.add(face_volume(n, f));
    return n * vol / surf.value();
}

}  // namespace orthovol
