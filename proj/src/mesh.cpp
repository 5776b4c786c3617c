#include "gcvt/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <stdexcept>
#include <unordered_map>

namespace gcvt {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

TriMesh::TriMesh(std::vector<double> positions, int dim, std::vector<std::array<int, 3>> faces,
                 std::vector<double> density)
    : dim_(dim), positions_(std::move(positions)), faces_(std::move(faces)),
      density_(std::move(density)) {
    if (dim_ < 3) throw std::runtime_error("mesh: dimension must be >= 3");
    if (positions_.size() % dim_ != 0) throw std::runtime_error("mesh: ragged position array");
    if (!density_.empty() && density_.size() != positions_.size() / dim_)
        throw std::runtime_error("mesh: density size does not match vertex count");
    for (double r : density_)
        if (r < 0.0) throw std::runtime_error("mesh: negative density");
    build_adjacency();
    validate();
}

void TriMesh::build_adjacency() {
    const int nv = n_vertices();
    const int nf = n_faces();
    vertex_faces_.assign(nv, {});
    face_edges_.assign(nf, {-1, -1, -1});
    edges_.clear();

    std::map<std::pair<int, int>, int> edge_ids;
    // Directed edges seen so far; a repeat means two faces traverse the same
    // directed edge, i.e. inconsistent orientation or a non-manifold fan.
    std::map<std::pair<int, int>, int> directed;

    for (int f = 0; f < nf; ++f) {
        const auto& fc = faces_[f];
        for (int k = 0; k < 3; ++k) {
            int a = fc[k], b = fc[(k + 1) % 3];
            if (a < 0 || a >= nv || b < 0 || b >= nv)
                throw std::runtime_error("mesh: face references missing vertex");
            if (a == b) throw std::runtime_error("mesh: degenerate face (repeated vertex index)");
            auto key = std::minmax(a, b);
            auto it = edge_ids.find(key);
            int e;
            if (it == edge_ids.end()) {
                e = static_cast<int>(edges_.size());
                edges_.push_back({key.first, key.second, f, -1});
                edge_ids.emplace(key, e);
            } else {
                e = it->second;
                Edge& ed = edges_[e];
                if (ed.face_b != -1)
                    throw std::runtime_error("mesh: non-manifold edge (more than 2 incident faces)");
                ed.face_b = f;
            }
            face_edges_[f][k] = e;
            auto [dit, inserted] = directed.emplace(std::make_pair(a, b), f);
            if (!inserted)
                throw std::runtime_error("mesh: inconsistent face orientation on edge");
        }
        if (fc[0] == fc[1] || fc[1] == fc[2] || fc[0] == fc[2])
            throw std::runtime_error("mesh: degenerate face (repeated vertex index)");
        vertex_faces_[fc[0]].push_back(f);
        vertex_faces_[fc[1]].push_back(f);
        vertex_faces_[fc[2]].push_back(f);
    }

    n_boundary_edges_ = 0;
    boundary_vertex_.assign(nv, false);
    for (const Edge& e : edges_) {
        if (e.face_b == -1) {
            ++n_boundary_edges_;
            boundary_vertex_[e.a] = true;
            boundary_vertex_[e.b] = true;
        }
    }

    // Count boundary loops by walking boundary edges vertex to vertex.
    n_boundary_loops_ = 0;
    if (n_boundary_edges_ > 0) {
        std::unordered_map<int, std::vector<int>> bnext;  // vertex -> boundary edge ids
        for (int e = 0; e < static_cast<int>(edges_.size()); ++e) {
            if (edges_[e].face_b == -1) {
                bnext[edges_[e].a].push_back(e);
                bnext[edges_[e].b].push_back(e);
            }
        }
        std::vector<bool> used(edges_.size(), false);
        for (int e0 = 0; e0 < static_cast<int>(edges_.size()); ++e0) {
            if (edges_[e0].face_b != -1 || used[e0]) continue;
            ++n_boundary_loops_;
            int e = e0, v = edges_[e0].b;
            used[e0] = true;
            while (true) {
                int next = -1;
                for (int cand : bnext[v])
                    if (!used[cand]) { next = cand; break; }
                if (next == -1) break;
                used[next] = true;
                v = edges_[next].a == v ? edges_[next].b : edges_[next].a;
                e = next;
            }
        }
    }
}

void TriMesh::validate() {
    const int nv = n_vertices();
    for (int v = 0; v < nv; ++v)
        if (vertex_faces_[v].empty()) throw std::runtime_error("mesh: isolated vertex");

    face_areas_.resize(n_faces());
    total_area_ = 0.0;
    std::vector<double> lo(dim_, std::numeric_limits<double>::infinity());
    std::vector<double> hi(dim_, -std::numeric_limits<double>::infinity());
    for (int v = 0; v < nv; ++v) {
        auto p = vertex(v);
        for (int d = 0; d < dim_; ++d) {
            lo[d] = std::min(lo[d], p[d]);
            hi[d] = std::max(hi[d], p[d]);
        }
    }
    double diag2 = 0.0;
    for (int d = 0; d < dim_; ++d) diag2 += (hi[d] - lo[d]) * (hi[d] - lo[d]);
    bbox_diag_ = std::sqrt(diag2);

    double scale2 = std::max(1e-300, bbox_diag_ * bbox_diag_);
    for (int f = 0; f < n_faces(); ++f) {
        const auto& fc = faces_[f];
        double a = triangle_area_n(vertex(fc[0]), vertex(fc[1]), vertex(fc[2]));
        if (a <= 1e-14 * scale2) throw std::runtime_error("mesh: zero-area face");
        face_areas_[f] = a;
        total_area_ += a;
    }

    double sum = 0.0;
    for (const Edge& e : edges_) sum += dist_n(vertex(e.a), vertex(e.b));
    mean_edge_len_ = edges_.empty() ? 0.0 : sum / edges_.size();
}

int TriMesh::edge_between(int a, int b) const {
    if (a > b) std::swap(a, b);
    // Faces around a are few; scan their edges.
    for (int f : vertex_faces_[a])
        for (int e : face_edges_[f])
            if (edges_[e].a == a && edges_[e].b == b) return e;
    return -1;
}

int TriMesh::genus() const {
    if (!is_closed()) throw std::runtime_error("genus: mesh has boundary");
    int chi = n_vertices() - n_edges() + n_faces();
    int twice_g = 2 - chi;
    if (twice_g < 0 || twice_g % 2 != 0)
        throw std::runtime_error("genus: non-integer result, corrupt connectivity");
    return twice_g / 2;
}

double TriMesh::vertex_angle_sum(int v) const {
    double sum = 0.0;
    for (int f : vertex_faces_[v]) {
        const auto& fc = faces_[f];
        int k = fc[0] == v ? 0 : (fc[1] == v ? 1 : 2);
        sum += corner_angle_n(vertex(fc[k]), vertex(fc[(k + 1) % 3]), vertex(fc[(k + 2) % 3]));
    }
    return sum;
}

std::vector<int> TriMesh::saddle_vertices(double eps) const {
    std::vector<int> out;
    for (int v = 0; v < n_vertices(); ++v) {
        if (boundary_vertex_[v]) continue;
        if (vertex_angle_sum(v) > kTwoPi + eps) out.push_back(v);
    }
    return out;
}

int TriMesh::count_flat_vertices(double eps) const {
    int n = 0;
    for (int v = 0; v < n_vertices(); ++v) {
        if (boundary_vertex_[v]) continue;
        if (std::abs(vertex_angle_sum(v) - kTwoPi) <= eps) ++n;
    }
    return n;
}

std::array<Vec2, 3> TriMesh::face_chart(int f) const {
    const auto& fc = faces_[f];
    auto p0 = vertex(fc[0]);
    auto p1 = vertex(fc[1]);
    auto p2 = vertex(fc[2]);
    double uu = 0.0, vv = 0.0, uv = 0.0;
    for (int d = 0; d < dim_; ++d) {
        double u = p1[d] - p0[d];
        double v = p2[d] - p0[d];
        uu += u * u;
        vv += v * v;
        uv += u * v;
    }
    double l01 = std::sqrt(uu);
    double x2 = uv / l01;
    double y2sq = vv - x2 * x2;
    double y2 = y2sq > 0.0 ? std::sqrt(y2sq) : 0.0;
    return {Vec2{0.0, 0.0}, Vec2{l01, 0.0}, Vec2{x2, y2}};
}

void TriMesh::face_basis(int f, std::vector<double>& e1, std::vector<double>& e2) const {
    const auto& fc = faces_[f];
    auto p0 = vertex(fc[0]);
    auto p1 = vertex(fc[1]);
    auto p2 = vertex(fc[2]);
    auto chart = face_chart(f);
    e1.assign(dim_, 0.0);
    e2.assign(dim_, 0.0);
    double l01 = chart[1].x;
    for (int d = 0; d < dim_; ++d) e1[d] = (p1[d] - p0[d]) / l01;
    double y2 = chart[2].y;
    if (y2 > 0.0)
        for (int d = 0; d < dim_; ++d) e2[d] = (p2[d] - p0[d] - chart[2].x * e1[d]) / y2;
}

std::vector<double> TriMesh::position(const SurfacePoint& p) const {
    const auto& fc = faces_[p.face];
    std::vector<double> out(dim_, 0.0);
    for (int k = 0; k < 3; ++k) {
        auto v = vertex(fc[k]);
        for (int d = 0; d < dim_; ++d) out[d] += p.b[k] * v[d];
    }
    return out;
}

std::vector<double> TriMesh::chart_dir_to_ambient(int f, const Vec2& d) const {
    std::vector<double> e1, e2;
    face_basis(f, e1, e2);
    std::vector<double> out(dim_, 0.0);
    for (int i = 0; i < dim_; ++i) out[i] = d.x * e1[i] + d.y * e2[i];
    return out;
}

TriMesh::MassResult TriMesh::integrate_density(std::span<const int> face_subset) const {
    if (face_subset.empty()) throw std::runtime_error("integrate_density: empty subset");
    double mass = 0.0;
    std::vector<double> moment(dim_, 0.0);
    std::vector<double> mid(dim_);
    for (int f : face_subset) {
        const auto& fc = faces_[f];
        double area = face_areas_[f];
        for (int k = 0; k < 3; ++k) {
            // Midpoint of edge (k, k+1); the 3-point rule is exact for the
            // piecewise-linear rho.
            auto pa = vertex(fc[k]);
            auto pb = vertex(fc[(k + 1) % 3]);
            double rho = 0.5 * (density_at_vertex(fc[k]) + density_at_vertex(fc[(k + 1) % 3]));
            double w = area / 3.0 * rho;
            mass += w;
            for (int d = 0; d < dim_; ++d) moment[d] += w * 0.5 * (pa[d] + pb[d]);
        }
    }
    if (mass <= 0.0) throw std::runtime_error("integrate_density: total mass <= 0");
    for (int d = 0; d < dim_; ++d) moment[d] /= mass;
    return {mass, std::move(moment)};
}

std::vector<int> TriMesh::faces_containing(const SurfacePoint& p, double eps) const {
    int zeros = 0;
    for (double b : p.b)
        if (b <= eps) ++zeros;
    if (zeros == 0) return {p.face};
    const auto& fc = faces_[p.face];
    if (zeros >= 2) {
        // Sits on a vertex: the whole fan.
        int k = p.b[0] > eps ? 0 : (p.b[1] > eps ? 1 : 2);
        return vertex_faces_[fc[k]];
    }
    // On an edge: this face plus the twin.
    int zk = p.b[0] <= eps ? 0 : (p.b[1] <= eps ? 1 : 2);
    // Barycentric k vanishes on the edge opposite corner k, i.e. (k+1, k+2).
    int e = face_edges_[p.face][(zk + 1) % 3];
    int other = face_across(p.face, e);
    if (other == -1) return {p.face};
    return {p.face, other};
}

int TriMesh::dominant_vertex(const SurfacePoint& p) const {
    const auto& fc = faces_[p.face];
    int k = 0;
    if (p.b[1] > p.b[k]) k = 1;
    if (p.b[2] > p.b[k]) k = 2;
    return fc[k];
}

SurfacePoint make_surface_point(const TriMesh& mesh, int face, double b0, double b1, double b2) {
    if (face < 0 || face >= mesh.n_faces())
        throw std::runtime_error("surface point: invalid face index");
    double sum = b0 + b1 + b2;
    if (std::abs(sum - 1.0) > 1e-9)
        throw std::runtime_error("surface point: barycentric coordinates do not sum to 1");
    SurfacePoint p;
    p.face = face;
    p.b[0] = std::max(0.0, b0);
    p.b[1] = std::max(0.0, b1);
    p.b[2] = std::max(0.0, b2);
    double s = p.b[0] + p.b[1] + p.b[2];
    for (double& b : p.b) b /= s;
    return p;
}

}  // namespace gcvt
