// Indexed triangle 2-manifold in R^n with halfedge adjacency and the intrinsic
// primitives (genus, angle sums, saddle vertices, density integration) the rest
// of the library consumes. Immutable after construction.
#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gcvt/geom.hpp"

namespace gcvt {

struct SurfacePoint {
    int face = -1;
    double b[3] = {0.0, 0.0, 0.0};
};

// Direction lives in the canonical 2D chart of base.face, see TriMesh::face_chart.
struct TangentVector {
    SurfacePoint base;
    Vec2 dir;          // unit unless mag == 0
    double mag = 0.0;  // nonnegative
};

class TriMesh {
public:
    // positions: flat array, dim coordinates per vertex. faces: vertex triples.
    // density: optional per-vertex rho (defaults to 1 everywhere).
    // Throws std::runtime_error on invariant violations (non-manifold edge,
    // degenerate or zero-area face, isolated vertex, inconsistent orientation).
    TriMesh(std::vector<double> positions, int dim, std::vector<std::array<int, 3>> faces,
            std::vector<double> density = {});

    int dim() const { return dim_; }
    int n_vertices() const { return static_cast<int>(positions_.size() / dim_); }
    int n_faces() const { return static_cast<int>(faces_.size()); }
    int n_edges() const { return static_cast<int>(edges_.size()); }

    std::span<const double> vertex(int v) const {
        return {positions_.data() + static_cast<std::size_t>(v) * dim_,
                static_cast<std::size_t>(dim_)};
    }
    const std::array<int, 3>& face(int f) const { return faces_[f]; }

    double density_at_vertex(int v) const { return density_.empty() ? 1.0 : density_[v]; }
    bool has_density() const { return !density_.empty(); }

    // Edges are unordered vertex pairs (a < b); boundary edges have face_b == -1.
    struct Edge {
        int a, b;
        int face_a = -1;
        int face_b = -1;
    };
    const Edge& edge(int e) const { return edges_[e]; }
    int edge_between(int a, int b) const;  // -1 if absent
    // The face on the other side of edge e, seen from face f (-1 on boundary).
    int face_across(int f, int e) const {
        const Edge& ed = edges_[e];
        return ed.face_a == f ? ed.face_b : ed.face_a;
    }
    // Edge ids of face f, edge k connects corners k and (k+1)%3.
    const std::array<int, 3>& face_edges(int f) const { return face_edges_[f]; }

    const std::vector<int>& vertex_faces(int v) const { return vertex_faces_[v]; }

    bool is_closed() const { return n_boundary_edges_ == 0; }
    int n_boundary_edges() const { return n_boundary_edges_; }
    int n_boundary_loops() const { return n_boundary_loops_; }

    // (2 - V + E - F) / 2 for closed meshes; throws if boundary is present or
    // the Euler characteristic is odd.
    int genus() const;

    double face_area(int f) const { return face_areas_[f]; }
    double total_area() const { return total_area_; }
    double bbox_diagonal() const { return bbox_diag_; }
    double mean_edge_length() const { return mean_edge_len_; }

    // Total incident angle at v over all incident faces.
    double vertex_angle_sum(int v) const;
    bool is_boundary_vertex(int v) const { return boundary_vertex_[v]; }

    // Interior vertices with angle sum > 2*pi + eps. Exactly-flat vertices are
    // excluded; their count is reported separately for diagnostics.
    std::vector<int> saddle_vertices(double eps = 1e-9) const;
    int count_flat_vertices(double eps = 1e-9) const;

    // Canonical 2D chart of face f: corner 0 at the origin, corner 1 on the
    // positive x-axis, corner 2 with y > 0.
    std::array<Vec2, 3> face_chart(int f) const;
    // Orthonormal chart basis as two R^n vectors (e1, e2), each of length dim().
    void face_basis(int f, std::vector<double>& e1, std::vector<double>& e2) const;

    // Position of a surface point in R^n.
    std::vector<double> position(const SurfacePoint& p) const;
    // Chart direction -> R^n direction in the face plane.
    std::vector<double> chart_dir_to_ambient(int f, const Vec2& d) const;

    // Mass and rho-weighted centroid over a face subset, 3-point midpoint rule
    // (exact for rho linear per face). Throws if subset empty or mass <= 0.
    struct MassResult {
        double mass;
        std::vector<double> centroid;
    };
    MassResult integrate_density(std::span<const int> face_subset) const;

    // Faces containing p: 1 for interior points, 2 when p lies on an edge, the
    // full fan when p sits on a vertex.
    std::vector<int> faces_containing(const SurfacePoint& p, double eps = 1e-9) const;

    // Nearest mesh vertex of p's face, by barycentric weight.
    int dominant_vertex(const SurfacePoint& p) const;

private:
    void build_adjacency();
    void validate();

    int dim_;
    std::vector<double> positions_;
    std::vector<std::array<int, 3>> faces_;
    std::vector<double> density_;

    std::vector<Edge> edges_;
    std::vector<std::array<int, 3>> face_edges_;
    std::vector<std::vector<int>> vertex_faces_;
    std::vector<bool> boundary_vertex_;
    std::vector<double> face_areas_;
    double total_area_ = 0.0;
    double bbox_diag_ = 0.0;
    double mean_edge_len_ = 0.0;
    int n_boundary_edges_ = 0;
    int n_boundary_loops_ = 0;
};

// Clamp tiny negative barycentrics and renormalize; throws if |sum - 1| > 1e-9
// or the face index is invalid.
SurfacePoint make_surface_point(const TriMesh& mesh, int face, double b0, double b1, double b2);

}  // namespace gcvt
