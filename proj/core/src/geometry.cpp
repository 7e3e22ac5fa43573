#include "tslab/geometry.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <sstream>
#include <stdexcept>

namespace tslab {

ExponentTriple operator+(const ExponentTriple& a, const ExponentTriple& b) {
  return {a.ip + b.ip, a.iq + b.iq, a.ir + b.ir};
}
ExponentTriple operator-(const ExponentTriple& a, const ExponentTriple& b) {
  return {a.ip - b.ip, a.iq - b.iq, a.ir - b.ir};
}
ExponentTriple operator*(const Rat& s, const ExponentTriple& a) {
  return {s * a.ip, s * a.iq, s * a.ir};
}

namespace {

using Vec3R = std::array<Rat, 3>;

Vec3R sub(const ExponentTriple& a, const ExponentTriple& b) {
  return {a.ip - b.ip, a.iq - b.iq, a.ir - b.ir};
}

Vec3R cross3(const Vec3R& a, const Vec3R& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

Rat dot3(const Vec3R& a, const Vec3R& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

bool vec_zero(const Vec3R& v) { return v[0].is_zero() && v[1].is_zero() && v[2].is_zero(); }

Vec3R coords(const ExponentTriple& p) { return {p.ip, p.iq, p.ir}; }

Rat plane_value(const PlaneKey& pl, const ExponentTriple& x) {
  Rat v = Rat(pl.n[0]) * x.ip + Rat(pl.n[1]) * x.iq + Rat(pl.n[2]) * x.ir;
  return v - Rat(pl.c);
}

// 2D exact cross product of (a - o) x (b - o).
Rat cross2(const std::pair<Rat, Rat>& o, const std::pair<Rat, Rat>& a, const std::pair<Rat, Rat>& b) {
  return (a.first - o.first) * (b.second - o.second) - (a.second - o.second) * (b.first - o.first);
}

// Monotone chain; returns indices into pts forming the hull counter-clockwise,
// collinear points dropped.
std::vector<int> hull2(const std::vector<std::pair<Rat, Rat>>& pts) {
  int n = static_cast<int>(pts.size());
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (pts[a].first != pts[b].first) return pts[a].first < pts[b].first;
    return pts[a].second < pts[b].second;
  });
  order.erase(std::unique(order.begin(), order.end(),
                          [&](int a, int b) { return pts[a] == pts[b]; }),
              order.end());
  n = static_cast<int>(order.size());
  if (n <= 2) return order;
  std::vector<int> h(2 * n);
  int k = 0;
  for (int idx = 0; idx < n; ++idx) {
    int i = order[idx];
    while (k >= 2 && cross2(pts[h[k - 2]], pts[h[k - 1]], pts[i]).sign() <= 0) --k;
    h[k++] = i;
  }
  int lower = k + 1;
  for (int idx = n - 2; idx >= 0; --idx) {
    int i = order[idx];
    while (k >= lower && cross2(pts[h[k - 2]], pts[h[k - 1]], pts[i]).sign() <= 0) --k;
    h[k++] = i;
  }
  h.resize(k - 1);
  return h;
}

int dominant_axis(const Vec3R& n) {
  int axis = 0;
  Rat best = abs(n[0]);
  for (int i = 1; i < 3; ++i) {
    Rat a = abs(n[i]);
    if (a > best) {
      best = a;
      axis = i;
    }
  }
  return axis;
}

std::pair<Rat, Rat> project(const ExponentTriple& p, int drop_axis) {
  Vec3R c = coords(p);
  switch (drop_axis) {
    case 0: return {c[1], c[2]};
    case 1: return {c[0], c[2]};
    default: return {c[0], c[1]};
  }
}

}  // namespace

bool operator<(const PlaneKey& a, const PlaneKey& b) {
  for (int i = 0; i < 3; ++i) {
    int c = cmp(a.n[i], b.n[i]);
    if (c != 0) return c < 0;
  }
  return cmp(a.c, b.c) < 0;
}

PlaneKey PlaneKey::unoriented() const {
  for (int i = 0; i < 3; ++i) {
    if (n[i] != 0) {
      if (n[i] < 0) return {{-n[0], -n[1], -n[2]}, -c};
      return *this;
    }
  }
  if (c < 0) return {{-n[0], -n[1], -n[2]}, -c};
  return *this;
}

PlaneKey canonical_plane(const std::array<Rat, 3>& normal, const Rat& offset) {
  mpz_class l = 1;
  for (const Rat& r : normal) {
    mpz_class d = r.den();
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
  }
  {
    mpz_class d = offset.den();
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
  }
  std::array<mpz_class, 3> n;
  for (int i = 0; i < 3; ++i) n[i] = normal[i].num() * (l / normal[i].den());
  mpz_class c = offset.num() * (l / offset.den());
  mpz_class g = 0;
  for (const auto& v : n) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  if (g > 1) {
    for (auto& v : n) v /= g;
    c /= g;
  }
  return {n, c};
}

Polytope3 hull3(const std::vector<ExponentTriple>& points) {
  if (points.empty()) throw std::invalid_argument("hull3: need at least one point");
  std::vector<ExponentTriple> pts = points;
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  const int n = static_cast<int>(pts.size());

  Polytope3 out;
  if (n == 1) {
    out.dim = 0;
    out.vertices = pts;
    return out;
  }

  // Affine dimension probe.
  int j1 = 1;  // pts sorted and deduped, so pts[1] != pts[0]
  Vec3R e1 = sub(pts[j1], pts[0]);
  int j2 = -1;
  Vec3R e2{};
  for (int i = 1; i < n; ++i) {
    Vec3R d = sub(pts[i], pts[0]);
    Vec3R c = cross3(e1, d);
    if (!vec_zero(c)) {
      j2 = i;
      e2 = d;
      break;
    }
  }
  if (j2 < 0) {
    out.dim = 1;
    out.vertices = {pts.front(), pts.back()};
    return out;
  }
  Vec3R nrm = cross3(e1, e2);
  int j3 = -1;
  for (int i = 1; i < n; ++i) {
    if (!dot3(nrm, sub(pts[i], pts[0])).is_zero()) {
      j3 = i;
      break;
    }
  }

  if (j3 < 0) {
    // Planar body: store the polygon as a single facet.
    out.dim = 2;
    std::array<Rat, 3> nr = {nrm[0], nrm[1], nrm[2]};
    Rat off = nrm[0] * pts[0].ip + nrm[1] * pts[0].iq + nrm[2] * pts[0].ir;
    PlaneKey plane = canonical_plane(nr, off).unoriented();
    int drop = dominant_axis(nrm);
    std::vector<std::pair<Rat, Rat>> proj(n);
    for (int i = 0; i < n; ++i) proj[i] = project(pts[i], drop);
    std::vector<int> poly = hull2(proj);
    std::vector<ExponentTriple> verts;
    verts.reserve(poly.size());
    for (int id : poly) verts.push_back(pts[id]);
    Facet f;
    f.plane = plane;
    std::vector<ExponentTriple> sorted = verts;
    std::sort(sorted.begin(), sorted.end());
    out.vertices = sorted;
    for (const ExponentTriple& v : verts) {
      auto it = std::lower_bound(sorted.begin(), sorted.end(), v);
      f.vertex_ids.push_back(static_cast<int>(it - sorted.begin()));
    }
    out.facets.push_back(std::move(f));
    return out;
  }

  // Full-dimensional: enumerate supporting planes over point triples.
  std::map<PlaneKey, std::vector<int>> facet_points;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      Vec3R ab = sub(pts[b], pts[a]);
      for (int c = b + 1; c < n; ++c) {
        Vec3R nv = cross3(ab, sub(pts[c], pts[a]));
        if (vec_zero(nv)) continue;
        Rat off = nv[0] * pts[a].ip + nv[1] * pts[a].iq + nv[2] * pts[a].ir;
        int pos = 0, neg = 0;
        for (int i = 0; i < n && (pos == 0 || neg == 0); ++i) {
          Rat v = nv[0] * pts[i].ip + nv[1] * pts[i].iq + nv[2] * pts[i].ir - off;
          int s = v.sign();
          if (s > 0) ++pos;
          else if (s < 0) ++neg;
        }
        if (pos > 0 && neg > 0) continue;
        std::array<Rat, 3> nr = {nv[0], nv[1], nv[2]};
        PlaneKey plane = (pos == 0) ? canonical_plane(nr, off)
                                    : canonical_plane({-nr[0], -nr[1], -nr[2]}, -off);
        if (facet_points.count(plane)) continue;
        std::vector<int> incident;
        for (int i = 0; i < n; ++i) {
          Rat v = Rat(plane.n[0]) * pts[i].ip + Rat(plane.n[1]) * pts[i].iq +
                  Rat(plane.n[2]) * pts[i].ir - Rat(plane.c);
          if (v.is_zero()) incident.push_back(i);
        }
        facet_points.emplace(plane, std::move(incident));
      }
    }
  }

  // Facet polygons; their corners are the extreme points.
  std::vector<char> extreme(n, 0);
  struct RawFacet {
    PlaneKey plane;
    std::vector<int> cycle;  // indices into pts
  };
  std::vector<RawFacet> raw;
  for (const auto& [plane, inc] : facet_points) {
    Vec3R nv = {Rat(plane.n[0]), Rat(plane.n[1]), Rat(plane.n[2])};
    int drop = dominant_axis(nv);
    std::vector<std::pair<Rat, Rat>> proj(inc.size());
    for (size_t i = 0; i < inc.size(); ++i) proj[i] = project(pts[inc[i]], drop);
    std::vector<int> poly = hull2(proj);
    std::vector<int> cycle(poly.size());
    for (size_t i = 0; i < poly.size(); ++i) cycle[i] = inc[poly[i]];
    if (cycle.size() >= 3) {
      Vec3R t = cross3(sub(pts[cycle[1]], pts[cycle[0]]), sub(pts[cycle[2]], pts[cycle[0]]));
      if (dot3(t, nv).sign() < 0) std::reverse(cycle.begin(), cycle.end());
    }
    for (int id : cycle) extreme[id] = 1;
    raw.push_back({plane, std::move(cycle)});
  }

  std::vector<ExponentTriple> verts;
  std::vector<int> remap(n, -1);
  for (int i = 0; i < n; ++i) {
    if (extreme[i]) {
      remap[i] = static_cast<int>(verts.size());
      verts.push_back(pts[i]);
    }
  }
  out.dim = 3;
  out.vertices = std::move(verts);
  for (RawFacet& rf : raw) {
    Facet f;
    f.plane = rf.plane;
    f.vertex_ids.reserve(rf.cycle.size());
    for (int id : rf.cycle) f.vertex_ids.push_back(remap[id]);
    // rotate so the smallest id leads, preserving orientation
    auto mn = std::min_element(f.vertex_ids.begin(), f.vertex_ids.end());
    std::rotate(f.vertex_ids.begin(), mn, f.vertex_ids.end());
    out.facets.push_back(std::move(f));
  }
  std::sort(out.facets.begin(), out.facets.end(),
            [](const Facet& a, const Facet& b) { return a.plane < b.plane; });
  return out;
}

Containment contains(const Polytope3& p, const ExponentTriple& x, bool strict) {
  if (strict && p.degenerate())
    throw std::domain_error("contains: strict classification needs a nondegenerate polytope");
  switch (p.dim) {
    case 0:
      return x == p.vertices[0] ? Containment::Boundary : Containment::Outside;
    case 1: {
      const ExponentTriple& a = p.vertices[0];
      const ExponentTriple& b = p.vertices[1];
      if (!vec_zero(cross3(sub(b, a), sub(x, a)))) return Containment::Outside;
      Rat t = dot3(sub(x, a), sub(b, a));
      Rat len = dot3(sub(b, a), sub(b, a));
      if (t < Rat(0) || t > len) return Containment::Outside;
      return Containment::Boundary;
    }
    case 2: {
      const Facet& f = p.facets[0];
      if (!plane_value(f.plane, x).is_zero()) return Containment::Outside;
      size_t m = f.vertex_ids.size();
      if (m == 2) {
        Polytope3 seg;
        seg.dim = 1;
        seg.vertices = {p.vertices[f.vertex_ids[0]], p.vertices[f.vertex_ids[1]]};
        return contains(seg, x, false);
      }
      for (size_t i = 0; i < m; ++i) {
        const ExponentTriple& a = p.vertices[f.vertex_ids[i]];
        const ExponentTriple& b = p.vertices[f.vertex_ids[(i + 1) % m]];
        Vec3R edge_n = cross3(sub(b, a), {Rat(f.plane.n[0]), Rat(f.plane.n[1]), Rat(f.plane.n[2])});
        if (dot3(edge_n, sub(x, a)).sign() > 0) return Containment::Outside;
      }
      return Containment::Boundary;
    }
    default: {
      bool boundary = false;
      for (const Facet& f : p.facets) {
        int s = plane_value(f.plane, x).sign();
        if (s > 0) return Containment::Outside;
        if (s == 0) boundary = true;
      }
      return boundary ? Containment::Boundary : Containment::Inside;
    }
  }
}

const char* containment_name(Containment c) {
  switch (c) {
    case Containment::Inside: return "inside";
    case Containment::Boundary: return "boundary";
    default: return "outside";
  }
}

std::vector<std::array<int, 3>> triangulate(const Polytope3& p) {
  if (p.degenerate()) throw std::domain_error("triangulate: degenerate polytope");
  std::vector<std::array<int, 3>> tris;
  for (const Facet& f : p.facets) {
    for (size_t k = 1; k + 1 < f.vertex_ids.size(); ++k)
      tris.push_back({f.vertex_ids[0], f.vertex_ids[k], f.vertex_ids[k + 1]});
  }
  return tris;
}

bool mesh_watertight(const std::vector<std::array<int, 3>>& tris) {
  std::map<std::pair<int, int>, int> directed;
  for (const auto& t : tris) {
    for (int e = 0; e < 3; ++e) {
      int a = t[e], b = t[(e + 1) % 3];
      if (a == b) return false;
      if (++directed[{a, b}] > 1) return false;
    }
  }
  for (const auto& [edge, cnt] : directed) {
    auto rev = directed.find({edge.second, edge.first});
    if (rev == directed.end() || rev->second != 1) return false;
  }
  return true;
}

std::string format_double(double v, int significant_digits) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*g", significant_digits, v);
  return buf;
}

std::string export_mesh(const Polytope3& p, MeshFormat format, int digits) {
  if (p.degenerate()) throw std::domain_error("export_mesh: degenerate polytope");
  auto tris = triangulate(p);
  std::ostringstream os;
  if (format == MeshFormat::OBJ) {
    os << "# typeset-lab polytope mesh\n";
    for (const ExponentTriple& v : p.vertices) {
      os << "v " << format_double(v.ip.to_double(), digits) << " "
         << format_double(v.iq.to_double(), digits) << " "
         << format_double(v.ir.to_double(), digits) << "\n";
    }
    for (const auto& t : tris) os << "f " << t[0] + 1 << " " << t[1] + 1 << " " << t[2] + 1 << "\n";
  } else {
    os << "ply\nformat ascii 1.0\ncomment typeset-lab polytope mesh\n";
    os << "element vertex " << p.vertices.size() << "\n";
    os << "property double x\nproperty double y\nproperty double z\n";
    os << "element face " << tris.size() << "\n";
    os << "property list uchar int vertex_indices\nend_header\n";
    for (const ExponentTriple& v : p.vertices) {
      os << format_double(v.ip.to_double(), digits) << " "
         << format_double(v.iq.to_double(), digits) << " "
         << format_double(v.ir.to_double(), digits) << "\n";
    }
    for (const auto& t : tris) os << "3 " << t[0] << " " << t[1] << " " << t[2] << "\n";
  }
  return os.str();
}

}  // namespace tslab
