#include "geocenter/spm.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <span>

namespace geocenter {

const char* to_string(VertexClass cls) {
    switch (cls) {
        case VertexClass::corner: return "corner";
        case VertexClass::boundary: return "boundary";
        case VertexClass::interior: return "interior";
    }
    return "unknown";
}

const char* to_string(ArcShape shape) {
    switch (shape) {
        case ArcShape::ray: return "ray";
        case ArcShape::line: return "line";
        case ArcShape::hyperbola: return "hyperbola";
    }
    return "unknown";
}

// ---------------------------------------------------------------------------
// Bisector

namespace {

constexpr double kRayRelTol = 1e-10;

}  // namespace

Bisector::Bisector(const SpmRoot& a, const SpmRoot& b) {
    const Point c = b.p - a.p;
    axis_len_ = norm(c);
    delta_ = b.weight - a.weight;
    if (axis_len_ == 0.0 || std::abs(delta_) > axis_len_ * (1.0 + kRayRelTol)) {
        exists_ = false;
        return;
    }
    if (axis_len_ - std::abs(delta_) <= kRayRelTol * axis_len_) {
        // The heavier root lies on a shortest path to the lighter one's shadow:
        // the locus is the ray leaving the heavier root away from the lighter.
        shape_ = ArcShape::ray;
        const Point u = (1.0 / axis_len_) * c;
        focus_ = delta_ > 0 ? b.p : a.p;
        axis_ = delta_ > 0 ? u : -1.0 * u;
        return;
    }
    shape_ = std::abs(delta_) <= 1e-12 * axis_len_ ? ArcShape::line : ArcShape::hyperbola;
    focus_ = a.p;
    axis_ = c;
}

double Bisector::param(Point x) const {
    const Point r = x - focus_;
    if (shape_ == ArcShape::ray) return dot(r, axis_);
    return std::atan2(cross(axis_, r), dot(axis_, r));
}

Point Bisector::at(double t) const {
    if (shape_ == ArcShape::ray) return focus_ + std::max(t, 0.0) * axis_;
    const Point u = (1.0 / axis_len_) * axis_;
    const double ct = std::cos(t);
    const double st = std::sin(t);
    const Point e{u.x * ct - u.y * st, u.x * st + u.y * ct};
    const double den = 2.0 * (axis_len_ * ct - delta_);
    if (!(den > 0.0)) return {std::numeric_limits<double>::quiet_NaN(), std::numeric_limits<double>::quiet_NaN()};
    return focus_ + ((axis_len_ - delta_) * (axis_len_ + delta_) / den) * e;
}

// ---------------------------------------------------------------------------
// Builder

namespace {

struct Vec3 {
    double x, y, t;
};

Vec3 operator+(Vec3 a, Vec3 b) { return {a.x + b.x, a.y + b.y, a.t + b.t}; }
Vec3 operator*(double s, Vec3 a) { return {s * a.x, s * a.y, s * a.t}; }
double dot3(Vec3 a, Vec3 b) { return a.x * b.x + a.y * b.y + a.t * b.t; }
Vec3 cross3(Vec3 a, Vec3 b) { return {a.y * b.t - a.t * b.y, a.t * b.x - a.x * b.t, a.x * b.y - a.y * b.x}; }
// Lorentzian form whose zero set is the cone |(x, y)| = t.
double cone_form(Vec3 a, Vec3 b) { return a.x * b.x + a.y * b.y - a.t * b.t; }

struct Plane {
    Vec3 n;
    double c;
};

// Points (x, y, t) on two planes and on the cone x^2 + y^2 = t^2 with t >= 0.
std::vector<Vec3> cone_meets_planes(const Plane& p1, const Plane& p2) {
    std::vector<Vec3> out;
    Vec3 dir = cross3(p1.n, p2.n);
    const double n1 = std::sqrt(dot3(p1.n, p1.n));
    const double n2 = std::sqrt(dot3(p2.n, p2.n));
    const double dlen = std::sqrt(dot3(dir, dir));
    if (dlen <= 1e-12 * n1 * n2) return out;
    dir = (1.0 / dlen) * dir;

    const double g11 = dot3(p1.n, p1.n);
    const double g12 = dot3(p1.n, p2.n);
    const double g22 = dot3(p2.n, p2.n);
    const double det = g11 * g22 - g12 * g12;
    const double m1 = (p1.c * g22 - p2.c * g12) / det;
    const double m2 = (p2.c * g11 - p1.c * g12) / det;
    const Vec3 z0 = m1 * p1.n + m2 * p2.n;

    const double a = cone_form(dir, dir);
    const double b = cone_form(z0, dir);
    const double c = cone_form(z0, z0);
    std::array<double, 2> lambdas{};
    int count = 0;
    const double scale = std::max({std::abs(b) * std::abs(b), std::abs(a * c), 1e-300});
    if (std::abs(a) <= 1e-12) {
        if (std::abs(b) > 1e-300) lambdas[count++] = -c / (2.0 * b);
    } else {
        double disc = b * b - a * c;
        if (disc < 0.0) {
            if (disc < -1e-10 * scale) return out;
            disc = 0.0;
        }
        const double sq = std::sqrt(disc);
        const double q = -(b + (b >= 0 ? sq : -sq));
        if (q != 0.0) {
            lambdas[count++] = q / a;
            lambdas[count++] = c / q;
        } else {
            lambdas[count++] = 0.0;
        }
    }
    for (int i = 0; i < count; ++i) {
        const Vec3 z = z0 + lambdas[i] * dir;
        out.push_back(z);
    }
    return out;
}

struct Candidate {
    Point x;
    double value;
};

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

}  // namespace

class SpmBuilder {
public:
    SpmBuilder(const Geodesics& geo, Point s, const SpmOptions& options)
        : geo_(geo), dom_(geo.domain()), options_(options) {
        dom_.require_inside(s);
        tree_ = geo.shortest_path_tree(s);
        const double diag = dom_.bbox().diagonal();
        tol_eq_ = 1e-8 * diag;
        merge_tol_ = 1e-7 * diag;
        spm_.dom_ = geo.domain_ptr();
        spm_.source_ = s;
        collect_roots();
    }

    ShortestPathMap run() {
        add_corner_vertices();
        add_boundary_vertices();
        add_interior_vertices();
        if (!options_.vertices_only) {
            build_arcs();
            build_pieces();
            build_cells();
        }
        return std::move(spm_);
    }

private:
    // -- roots ---------------------------------------------------------------

    void collect_roots() {
        auto& roots = spm_.roots_;
        roots.push_back({kSourceNode, spm_.source_, 0.0, {}});
        const auto& corners = dom_.corners();
        corner_root_.assign(corners.size(), kNone);
        for (std::size_t v = 0; v < corners.size(); ++v) {
            // Shortest paths bend only at reflex corners.
            if (!corners[v].reflex) continue;
            if (dist(corners[v].p, spm_.source_) <= dom_.tolerance().tau_abs) continue;
            corner_root_[v] = roots.size();
            roots.push_back({static_cast<long>(v), corners[v].p, tree_.dist[v], tree_.tied_parents[v]});
        }
        const std::size_t r = roots.size();
        bisectors_.reserve(r * r);
        for (std::size_t i = 0; i < r; ++i) {
            for (std::size_t j = 0; j < r; ++j) bisectors_.emplace_back(roots[i], roots[j]);
        }
    }

    const Bisector& bisector(std::size_t i, std::size_t j) const { return bisectors_[i * spm_.roots_.size() + j]; }

    double value(std::size_t r, Point x) const { return spm_.root_value(r, x); }

    bool sees(std::size_t r, Point x) const { return segment_in_domain(dom_, spm_.roots_[r].p, x); }

    // Bisector of the two boundary edges at a corner root, pointing away from
    // the domain.
    Point into_obstacle(std::size_t r) const {
        const Corner& c = dom_.corners()[static_cast<std::size_t>(spm_.roots_[r].corner)];
        const Point da = dom_.corners()[c.prev].p - c.p;
        const Point db = dom_.corners()[c.next].p - c.p;
        return (1.0 / norm(da)) * da + (1.0 / norm(db)) * db;
    }

    // A path ending ...parent -> v -> x can be shortest only if it wraps
    // around the obstacle at v.
    bool taut(std::size_t r, Point x) const {
        const SpmRoot& root = spm_.roots_[r];
        if (root.corner == kSourceNode) return true;
        const Point e = x - root.p;
        const double elen = norm(e);
        if (elen <= dom_.tolerance().tau_abs) return true;
        const Point m = into_obstacle(r);
        for (long parent : root.parents) {
            const Point pp = parent == kSourceNode ? spm_.source_ : dom_.corners()[static_cast<std::size_t>(parent)].p;
            const Point g = pp - root.p;
            const double glen = norm(g);
            const double s = cross(g, e) / (glen * elen);
            if (std::abs(s) <= 1e-8) {
                if (dot(g, e) < 0.0) return true;  // straight continuation
                continue;
            }
            if (cross(g, m) * s > 0.0 && cross(m, e) * s > 0.0) return true;
        }
        return false;
    }

    // Confirms that the roots in `claimed` all realize d(source, x) = value and
    // returns every root that does.
    std::optional<std::vector<std::size_t>> confirm(Point x, double d, std::span<const std::size_t> claimed) const {
        const double tol = tol_eq_ + dom_.tolerance().tau_rel * d;
        for (std::size_t r : claimed) {
            if (std::abs(value(r, x) - d) > tol) return std::nullopt;
            if (!taut(r, x)) return std::nullopt;
        }
        const BoundingBox& box = dom_.bbox();
        const double pad = merge_tol_;
        if (x.x < box.min_x - pad || x.x > box.max_x + pad || x.y < box.min_y - pad || x.y > box.max_y + pad) {
            return std::nullopt;
        }
        if (!dom_.in_domain(x)) return std::nullopt;
        for (std::size_t r : claimed) {
            if (!sees(r, x)) return std::nullopt;
        }
        std::vector<std::size_t> incident(claimed.begin(), claimed.end());
        for (std::size_t r = 0; r < spm_.roots_.size(); ++r) {
            if (std::find(claimed.begin(), claimed.end(), r) != claimed.end()) continue;
            const double v = value(r, x);
            if (v > d + tol) continue;
            const bool tie = v >= d - tol && std::all_of(claimed.begin(), claimed.end(), [&](std::size_t c) {
                return tied(c, r, x);
            });
            if (!tie && v >= d) continue;
            if (!sees(r, x)) continue;
            if (!tie) return std::nullopt;
            incident.push_back(r);
        }
        std::sort(incident.begin(), incident.end());
        return incident;
    }

    // Whether x lies on the bisector of roots a and r. Near a ray the two
    // values separate only quadratically, so equal values are not enough.
    bool tied(std::size_t a, std::size_t r, Point x) const {
        const Bisector& bis = bisector(a, r);
        if (!bis.exists()) return false;
        const Point on = bis.at(bis.param(x));
        return is_finite(on) && dist(on, x) <= merge_tol_;
    }

    // -- vertices ------------------------------------------------------------

    void add_vertex(SpmVertex v) {
        for (SpmVertex& old : spm_.vertices_) {
            if (dist(old.p, v.p) > merge_tol_) continue;
            std::vector<std::size_t> merged;
            std::set_union(old.roots.begin(), old.roots.end(), v.roots.begin(), v.roots.end(), std::back_inserter(merged));
            old.roots = std::move(merged);
            if (static_cast<int>(v.cls) < static_cast<int>(old.cls)) {
                old.cls = v.cls;
                old.p = v.p;
                old.corner = v.corner;
                old.boundary_edge = v.boundary_edge;
                old.distance = v.distance;
            }
            return;
        }
        spm_.vertices_.push_back(std::move(v));
    }

    void add_corner_vertices() {
        const auto& corners = dom_.corners();
        for (std::size_t c = 0; c < corners.size(); ++c) {
            const Point x = corners[c].p;
            const double d = tree_.dist[c];
            const double tol = tol_eq_ + dom_.tolerance().tau_rel * d;
            SpmVertex v;
            v.p = x;
            v.distance = d;
            v.cls = VertexClass::corner;
            v.corner = c;
            std::size_t own = corner_root_[c];
            if (own == kNone) own = best_root(x);
            for (std::size_t r = 0; r < spm_.roots_.size(); ++r) {
                if (r == own) {
                    v.roots.push_back(r);
                    continue;
                }
                if (std::abs(value(r, x) - d) > tol || !tied(own, r, x)) continue;
                if (sees(r, x)) v.roots.push_back(r);
            }
            spm_.vertices_.push_back(std::move(v));
        }
    }

    // Points of the (i, j) bisector on boundary edge e.
    std::vector<Candidate> bisector_on_edge(std::size_t i, std::size_t j, std::size_t e) const {
        std::vector<Candidate> out;
        const Bisector& bis = bisector(i, j);
        if (!bis.exists()) return out;
        const Point a = dom_.edge_start(e);
        const Point b = dom_.edge_end(e);
        const SpmRoot& ri = spm_.roots_[i];
        const SpmRoot& rj = spm_.roots_[j];
        if (bis.shape() == ArcShape::ray) {
            const bool i_heavy = ri.weight > rj.weight;
            const SpmRoot& heavy = i_heavy ? ri : rj;
            const SpmRoot& light = i_heavy ? rj : ri;
            const Point dir = (1.0 / dist(heavy.p, light.p)) * (heavy.p - light.p);
            const Point ab = b - a;
            const double den = cross(dir, ab);
            if (std::abs(den) <= 1e-14 * norm(ab)) return out;
            const double t = cross(a - heavy.p, ab) / den;
            if (t < -merge_tol_) return out;
            const Point x = heavy.p + t * dir;
            out.push_back({x, heavy.weight + std::max(t, 0.0)});
        } else {
            const Point q = rj.p - ri.p;
            const double u = rj.weight - ri.weight;
            const Plane pj{{2.0 * q.x, 2.0 * q.y, -2.0 * u}, dot(q, q) - u * u};
            const Point nrm{-(b - a).y, (b - a).x};
            const Plane pe{{nrm.x, nrm.y, 0.0}, dot(nrm, a - ri.p)};
            for (const Vec3& z : cone_meets_planes(pj, pe)) {
                if (z.t < -merge_tol_) continue;
                out.push_back({ri.p + Point{z.x, z.y}, ri.weight + z.t});
            }
        }
        // Keep points on the edge, away from its corners.
        std::erase_if(out, [&](const Candidate& cand) {
            const double s = project_param(cand.x, a, b);
            const double len = dist(a, b);
            return s * len < merge_tol_ || (1.0 - s) * len < merge_tol_ ||
                   distance_to_segment(cand.x, a, b) > merge_tol_;
        });
        for (Candidate& cand : out) cand.x = a + project_param(cand.x, a, b) * (b - a);
        return out;
    }

    void add_boundary_vertices() {
        const std::size_t r = spm_.roots_.size();
        for (std::size_t i = 0; i < r; ++i) {
            for (std::size_t j = i + 1; j < r; ++j) {
                if (!bisector(i, j).exists()) continue;
                for (std::size_t e = 0; e < dom_.edges().size(); ++e) {
                    for (const Candidate& cand : bisector_on_edge(i, j, e)) {
                        const std::array<std::size_t, 2> claimed{i, j};
                        const double d = value(i, cand.x);
                        auto roots = confirm(cand.x, d, claimed);
                        if (!roots) continue;
                        SpmVertex v;
                        v.p = cand.x;
                        v.distance = d;
                        v.roots = std::move(*roots);
                        v.cls = VertexClass::boundary;
                        v.boundary_edge = e;
                        add_vertex(std::move(v));
                    }
                }
            }
        }
    }

    // Points where roots i, j, k give the same total length.
    std::vector<Candidate> triple_points(std::size_t i, std::size_t j, std::size_t k) const {
        std::vector<Candidate> out;
        const std::array<std::array<std::size_t, 3>, 3> orders{{{i, j, k}, {i, k, j}, {j, k, i}}};
        for (const auto& [a, b, c] : orders) {
            const Bisector& bis = bisector(a, b);
            if (bis.shape() != ArcShape::ray || !bis.exists()) continue;
            const SpmRoot& ra = spm_.roots_[a];
            const SpmRoot& rb = spm_.roots_[b];
            const SpmRoot& heavy = ra.weight > rb.weight ? ra : rb;
            const SpmRoot& light = ra.weight > rb.weight ? rb : ra;
            const SpmRoot& third = spm_.roots_[c];
            const Point dir = (1.0 / dist(heavy.p, light.p)) * (heavy.p - light.p);
            const Point q = heavy.p - third.p;
            const double w = heavy.weight - third.weight;
            const double den = 2.0 * (dot(q, dir) - w);
            if (std::abs(den) <= 1e-14 * (norm(q) + std::abs(w))) return out;
            const double t = (w * w - dot(q, q)) / den;
            if (t < -merge_tol_) return out;
            out.push_back({heavy.p + t * dir, heavy.weight + std::max(t, 0.0)});
            return out;
        }
        const SpmRoot& ri = spm_.roots_[i];
        auto plane_for = [&ri](const SpmRoot& rj) {
            const Point q = rj.p - ri.p;
            const double u = rj.weight - ri.weight;
            return Plane{{2.0 * q.x, 2.0 * q.y, -2.0 * u}, dot(q, q) - u * u};
        };
        for (const Vec3& z : cone_meets_planes(plane_for(spm_.roots_[j]), plane_for(spm_.roots_[k]))) {
            if (z.t < -merge_tol_) continue;
            out.push_back({ri.p + Point{z.x, z.y}, ri.weight + z.t});
        }
        return out;
    }

    void add_interior_vertices() {
        const std::size_t r = spm_.roots_.size();
        for (std::size_t i = 0; i < r; ++i) {
            for (std::size_t j = i + 1; j < r; ++j) {
                if (!bisector(i, j).exists()) continue;
                for (std::size_t k = j + 1; k < r; ++k) {
                    if (!bisector(i, k).exists() || !bisector(j, k).exists()) continue;
                    for (const Candidate& cand : triple_points(i, j, k)) {
                        if (!taut(i, cand.x) || !taut(j, cand.x) || !taut(k, cand.x)) continue;
                        const std::array<std::size_t, 3> claimed{i, j, k};
                        auto roots = confirm(cand.x, cand.value, claimed);
                        if (!roots) continue;
                        if (dom_.contains(cand.x) == Location::boundary) continue;  // found via the edge pass
                        SpmVertex v;
                        v.p = cand.x;
                        v.distance = cand.value;
                        v.roots = std::move(*roots);
                        v.cls = VertexClass::interior;
                        add_vertex(std::move(v));
                    }
                }
            }
        }
    }

    // -- edges ---------------------------------------------------------------

    // Root minimizing w + |r - x| among roots that see x.
    std::size_t best_root(Point x) const {
        std::size_t best = kNone;
        double best_value = std::numeric_limits<double>::infinity();
        for (std::size_t r = 0; r < spm_.roots_.size(); ++r) {
            const double v = value(r, x);
            if (v < best_value && sees(r, x)) {
                best = r;
                best_value = v;
            }
        }
        return best;
    }

    bool on_map_edge(std::size_t a, std::size_t b, Point x) const {
        if (!dom_.in_domain(x)) return false;
        const double d = value(a, x);
        const double tol = tol_eq_ + dom_.tolerance().tau_rel * d;
        if (std::abs(value(b, x) - d) > tol) return false;
        if (!sees(a, x) || !sees(b, x)) return false;
        for (std::size_t r = 0; r < spm_.roots_.size(); ++r) {
            if (r == a || r == b) continue;
            const double v = value(r, x);
            if (v >= d || (v >= d - tol && tied(a, r, x) && tied(b, r, x))) continue;
            if (sees(r, x)) return false;
        }
        return true;
    }

    // Inserts curve points between pa and pb until every chord stays close
    // to the curve.
    void refine_chord(const Bisector& bis, double ta, Point pa, double tb, Point pb, int depth,
                      std::vector<Point>& out) const {
        const double tm = 0.5 * (ta + tb);
        const Point pm = bis.at(tm);
        if (depth >= 16 || dist(pm, 0.5 * (pa + pb)) <= 1e-6 * dom_.bbox().diagonal()) return;
        refine_chord(bis, ta, pa, tm, pm, depth + 1, out);
        out.push_back(pm);
        refine_chord(bis, tm, pm, tb, pb, depth + 1, out);
    }

    void build_arcs() {
        std::map<std::pair<std::size_t, std::size_t>, std::vector<std::size_t>> by_pair;
        const auto& verts = spm_.vertices_;
        for (std::size_t vi = 0; vi < verts.size(); ++vi) {
            const auto& rs = verts[vi].roots;
            for (std::size_t a = 0; a < rs.size(); ++a) {
                for (std::size_t b = a + 1; b < rs.size(); ++b) by_pair[{rs[a], rs[b]}].push_back(vi);
            }
        }
        for (auto& [pair, members] : by_pair) {
            if (members.size() < 2) continue;
            const auto [ra, rb] = pair;
            const Bisector& bis = bisector(ra, rb);
            if (!bis.exists()) continue;
            // Near a ray the two values separate only quadratically, so equal
            // values alone do not place a vertex on the curve.
            std::vector<std::pair<double, std::size_t>> along;
            for (std::size_t vi : members) {
                const double t = bis.param(verts[vi].p);
                if (dist(bis.at(t), verts[vi].p) <= merge_tol_) along.push_back({t, vi});
            }
            std::sort(along.begin(), along.end());
            for (std::size_t k = 0; k + 1 < along.size(); ++k) {
                const auto [t0, v0] = along[k];
                const auto [t1, v1] = along[k + 1];
                if (dist(verts[v0].p, verts[v1].p) <= merge_tol_) continue;
                if (!on_map_edge(ra, rb, bis.at(0.5 * (t0 + t1)))) continue;
                BisectorArc arc;
                arc.root_a = ra;
                arc.root_b = rb;
                arc.shape = bis.shape();
                arc.from = v0;
                arc.to = v1;
                const std::size_t samples = bis.shape() == ArcShape::hyperbola ? options_.arc_samples : 1;
                arc.polyline.push_back(verts[v0].p);
                double ta = t0;
                Point pa = verts[v0].p;
                for (std::size_t s = 1; s <= samples; ++s) {
                    const double tb = t0 + (t1 - t0) * static_cast<double>(s) / static_cast<double>(samples);
                    const Point pb = s == samples ? verts[v1].p : bis.at(tb);
                    if (bis.shape() == ArcShape::hyperbola) refine_chord(bis, ta, pa, tb, pb, 0, arc.polyline);
                    arc.polyline.push_back(pb);
                    ta = tb;
                    pa = pb;
                }
                spm_.arcs_.push_back(std::move(arc));
            }
        }
    }

    void build_pieces() {
        const auto& verts = spm_.vertices_;
        std::vector<std::vector<std::size_t>> on_edge(dom_.edges().size());
        std::vector<std::size_t> corner_vertex(dom_.corner_count(), kNone);
        for (std::size_t vi = 0; vi < verts.size(); ++vi) {
            if (verts[vi].corner) corner_vertex[*verts[vi].corner] = vi;
            if (verts[vi].cls == VertexClass::boundary) on_edge[*verts[vi].boundary_edge].push_back(vi);
        }
        for (std::size_t e = 0; e < dom_.edges().size(); ++e) {
            const Point a = dom_.edge_start(e);
            const Point b = dom_.edge_end(e);
            std::vector<std::pair<double, std::size_t>> along;
            along.push_back({0.0, corner_vertex[dom_.edges()[e].from]});
            along.push_back({1.0, corner_vertex[dom_.edges()[e].to]});
            for (std::size_t vi : on_edge[e]) along.push_back({project_param(verts[vi].p, a, b), vi});
            std::sort(along.begin(), along.end());
            for (std::size_t k = 0; k + 1 < along.size(); ++k) {
                BoundaryPiece piece;
                piece.edge = e;
                piece.from = along[k].second;
                piece.to = along[k + 1].second;
                const Point mid = 0.5 * (verts[piece.from].p + verts[piece.to].p);
                piece.root = best_root(mid);
                spm_.pieces_.push_back(piece);
            }
        }
    }

    // -- faces ---------------------------------------------------------------

    struct HalfEdge {
        std::size_t origin;
        std::size_t dest;
        std::vector<Point> pts;
        double angle;
        bool exterior;
        long arc;     // index into arcs, or -1
        long piece;   // index into pieces, or -1
    };

    std::size_t vote_root(const HalfEdge& h) const {
        if (h.piece >= 0) return spm_.pieces_[static_cast<std::size_t>(h.piece)].root;
        const BisectorArc& arc = spm_.arcs_[static_cast<std::size_t>(h.arc)];
        if (arc.shape == ArcShape::ray) {
            // The heavier root owns the side where its obstacle lies.
            const bool a_heavy = spm_.roots_[arc.root_a].weight > spm_.roots_[arc.root_b].weight;
            const std::size_t heavy = a_heavy ? arc.root_a : arc.root_b;
            const std::size_t light = a_heavy ? arc.root_b : arc.root_a;
            const Point d = h.pts.back() - h.pts.front();
            return cross(d, into_obstacle(heavy)) > 0.0 ? heavy : light;
        }
        // Probe beside a point that lies exactly on the curve.
        Point anchor = 0.5 * (h.pts.front() + h.pts.back());
        Point d = h.pts.back() - h.pts.front();
        if (h.pts.size() >= 3) {
            const std::size_t mid = h.pts.size() / 2;
            anchor = h.pts[mid];
            d = h.pts[mid + 1] - h.pts[mid - 1];
        }
        const Point left = (1.0 / norm(d)) * Point{-d.y, d.x};
        const Point probe = anchor + (1e-6 * dom_.bbox().diagonal()) * left;
        const bool a_sees = sees(arc.root_a, probe);
        const bool b_sees = sees(arc.root_b, probe);
        if (a_sees != b_sees) return a_sees ? arc.root_a : arc.root_b;
        return value(arc.root_a, probe) <= value(arc.root_b, probe) ? arc.root_a : arc.root_b;
    }

    void build_cells() {
        std::vector<HalfEdge> half;
        auto add_pair = [&half](std::size_t from, std::size_t to, const std::vector<Point>& pts, bool boundary, long arc,
                                long piece) {
            std::vector<Point> rev(pts.rbegin(), pts.rend());
            const Point df = pts[1] - pts[0];
            const Point db = rev[1] - rev[0];
            half.push_back({from, to, pts, std::atan2(df.y, df.x), false, arc, piece});
            half.push_back({to, from, std::move(rev), std::atan2(db.y, db.x), boundary, arc, piece});
        };
        for (std::size_t i = 0; i < spm_.arcs_.size(); ++i) {
            const BisectorArc& arc = spm_.arcs_[i];
            add_pair(arc.from, arc.to, arc.polyline, false, static_cast<long>(i), -1);
        }
        for (std::size_t i = 0; i < spm_.pieces_.size(); ++i) {
            const BoundaryPiece& piece = spm_.pieces_[i];
            add_pair(piece.from, piece.to, {spm_.vertices_[piece.from].p, spm_.vertices_[piece.to].p}, true, -1,
                     static_cast<long>(i));
        }

        std::vector<std::vector<std::size_t>> outgoing(spm_.vertices_.size());
        for (std::size_t h = 0; h < half.size(); ++h) outgoing[half[h].origin].push_back(h);
        std::vector<std::size_t> slot(half.size());
        for (auto& out : outgoing) {
            std::sort(out.begin(), out.end(), [&half](std::size_t x, std::size_t y) { return half[x].angle < half[y].angle; });
            for (std::size_t k = 0; k < out.size(); ++k) slot[out[k]] = k;
        }
        auto next_of = [&](std::size_t h) {
            const std::size_t twin = h ^ 1U;
            const auto& out = outgoing[half[h].dest];
            return out[(slot[twin] + out.size() - 1) % out.size()];
        };

        struct Loop {
            std::vector<Point> pts;
            std::map<std::size_t, std::size_t> votes;
            double area = 0.0;
            bool broken = false;
        };
        std::vector<Loop> outer;
        std::vector<Loop> inner;
        std::vector<char> seen(half.size(), 0);
        for (std::size_t start = 0; start < half.size(); ++start) {
            if (seen[start]) continue;
            std::vector<std::size_t> chain;
            std::size_t h = start;
            bool closed = false;
            for (std::size_t guard = 0; guard <= half.size(); ++guard) {
                seen[h] = 1;
                chain.push_back(h);
                h = next_of(h);
                if (h == start) {
                    closed = true;
                    break;
                }
            }
            const bool all_exterior =
                std::all_of(chain.begin(), chain.end(), [&half](std::size_t x) { return half[x].exterior; });
            if (all_exterior) continue;
            Loop loop;
            loop.broken = !closed;
            for (std::size_t x : chain) {
                if (half[x].exterior) loop.broken = true;
                const auto& pts = half[x].pts;
                loop.pts.insert(loop.pts.end(), pts.begin(), pts.end() - 1);
                ++loop.votes[vote_root(half[x])];
            }
            loop.area = signed_area(loop.pts);
            // Slivers between nearly coincident edges carry no area.
            if (std::abs(loop.area) <= merge_tol_ * dom_.bbox().diagonal()) continue;
            (loop.area > 0.0 ? outer : inner).push_back(std::move(loop));
        }

        // A clockwise loop bounds a hole or an island of other faces; it
        // belongs to the smallest face around it.
        const Tolerance& tol = dom_.tolerance();
        std::vector<std::vector<std::vector<Point>>> hole_loops(outer.size());
        for (Loop& in : inner) {
            std::size_t host = kNone;
            for (std::size_t o = 0; o < outer.size(); ++o) {
                if (outer[o].area <= std::abs(in.area)) continue;
                const bool inside = std::any_of(in.pts.begin(), in.pts.end(), [&](Point q) {
                    return locate_in_ring(q, outer[o].pts, tol) == Location::inside;
                });
                if (inside && (host == kNone || outer[o].area < outer[host].area)) host = o;
            }
            if (host == kNone) {
                ++spm_.malformed_;
                continue;
            }
            for (const auto& [root, count] : in.votes) outer[host].votes[root] += count;
            outer[host].broken = outer[host].broken || in.broken;
            outer[host].area += in.area;
            hole_loops[host].push_back(std::move(in.pts));
        }
        for (std::size_t o = 0; o < outer.size(); ++o) {
            Loop& loop = outer[o];
            SpmCell cell;
            cell.loop = std::move(loop.pts);
            cell.holes = std::move(hole_loops[o]);
            cell.area = loop.area;
            auto top = std::max_element(loop.votes.begin(), loop.votes.end(),
                                        [](const auto& x, const auto& y) { return x.second < y.second; });
            cell.root = top->first;
            if (loop.broken || loop.votes.size() > 1 || cell.area <= 0.0) ++spm_.malformed_;
            spm_.cells_.push_back(std::move(cell));
        }
    }

    const Geodesics& geo_;
    const PolygonalDomain& dom_;
    SpmOptions options_;
    ShortestPathTree tree_;
    ShortestPathMap spm_;
    std::vector<std::size_t> corner_root_;
    std::vector<Bisector> bisectors_;
    double tol_eq_ = 0.0;
    double merge_tol_ = 0.0;
};

ShortestPathMap build_spm(const Geodesics& geo, Point s, const SpmOptions& options) {
    return SpmBuilder(geo, s, options).run();
}

std::size_t locate(const ShortestPathMap& spm, Point x) {
    const PolygonalDomain& dom = spm.domain();
    dom.require_inside(x);
    std::vector<std::pair<double, std::size_t>> order;
    for (std::size_t r = 0; r < spm.roots().size(); ++r) order.push_back({spm.root_value(r, x), r});
    std::sort(order.begin(), order.end());
    for (const auto& [v, r] : order) {
        if (segment_in_domain(dom, spm.roots()[r].p, x)) return r;
    }
    return 0;
}

std::optional<std::size_t> cell_at(const ShortestPathMap& spm, Point x) {
    const Tolerance& tol = spm.domain().tolerance();
    for (std::size_t c = 0; c < spm.cells().size(); ++c) {
        const SpmCell& cell = spm.cells()[c];
        if (locate_in_ring(x, cell.loop, tol) == Location::outside) continue;
        const bool in_hole = std::any_of(cell.holes.begin(), cell.holes.end(),
                                         [&](const auto& h) { return locate_in_ring(x, h, tol) == Location::inside; });
        if (!in_hole) return c;
    }
    return std::nullopt;
}

FarthestNeighbors farthest_neighbors(const Geodesics& geo, Point p) {
    SpmOptions options;
    options.vertices_only = true;
    const ShortestPathMap spm = build_spm(geo, p, options);
    FarthestNeighbors out;
    for (const SpmVertex& v : spm.vertices()) out.phi = std::max(out.phi, v.distance);
    const double tol = geo.domain().tolerance().slack(out.phi);
    for (const SpmVertex& v : spm.vertices()) {
        if (v.distance >= out.phi - tol) out.witnesses.push_back(v);
    }
    return out;
}

double phi(const Geodesics& geo, Point p) { return farthest_neighbors(geo, p).phi; }

}  // namespace geocenter
