#pragma once

#include <array>
#include <string>
#include <vector>

#include "tslab/rational.hpp"

namespace tslab {

// A point (1/p, 1/q, 1/r) in exponent space. r = infinity is encoded as
// ir = 0 and p = infinity as ip = 0.
struct ExponentTriple {
  Rat ip, iq, ir;

  friend bool operator==(const ExponentTriple& a, const ExponentTriple& b) {
    return a.ip == b.ip && a.iq == b.iq && a.ir == b.ir;
  }
  friend bool operator!=(const ExponentTriple& a, const ExponentTriple& b) { return !(a == b); }
  // Lexicographic; used only for deterministic ordering.
  friend bool operator<(const ExponentTriple& a, const ExponentTriple& b) {
    if (a.ip != b.ip) return a.ip < b.ip;
    if (a.iq != b.iq) return a.iq < b.iq;
    return a.ir < b.ir;
  }
  std::string str() const { return "(" + ip.str() + ", " + iq.str() + ", " + ir.str() + ")"; }
};

ExponentTriple operator+(const ExponentTriple& a, const ExponentTriple& b);
ExponentTriple operator-(const ExponentTriple& a, const ExponentTriple& b);
ExponentTriple operator*(const Rat& s, const ExponentTriple& a);

// Integer plane n.x <= c in canonical form: coefficients coprime. Oriented
// planes keep the outward sign; unoriented_key() flips the sign so the first
// nonzero entry of (n, c) is positive, for plane-set comparisons.
struct PlaneKey {
  std::array<mpz_class, 3> n;
  mpz_class c;

  friend bool operator==(const PlaneKey& a, const PlaneKey& b) {
    return a.n == b.n && a.c == b.c;
  }
  friend bool operator<(const PlaneKey& a, const PlaneKey& b);
  PlaneKey unoriented() const;
};

// Canonicalize a rational plane a.x <= d (gcd-reduced, orientation preserved).
PlaneKey canonical_plane(const std::array<Rat, 3>& normal, const Rat& offset);

struct Facet {
  PlaneKey plane;                // outward: plane.n . x <= plane.c inside
  std::vector<int> vertex_ids;   // cyclic, counter-clockwise seen from outside
};

// Convex body in exponent space. dim < 3 marks a degenerate (flagged) body:
// dim 2 stores the polygon as a single facet, dim <= 1 stores only vertices.
struct Polytope3 {
  int dim = 3;
  std::vector<ExponentTriple> vertices;
  std::vector<Facet> facets;

  bool degenerate() const { return dim < 3; }
};

// Exact convex hull. Duplicates allowed; degenerate input yields a flagged
// lower-dimensional body rather than an error.
Polytope3 hull3(const std::vector<ExponentTriple>& points);

enum class Containment { Inside, Boundary, Outside };

// Exact classification against the facet inequalities. strict requires a
// nondegenerate body and throws std::domain_error otherwise; for degenerate
// bodies (non-strict) membership classifies as Boundary.
Containment contains(const Polytope3& p, const ExponentTriple& x, bool strict = false);

const char* containment_name(Containment c);

// Fan triangulation of every facet; nondegenerate bodies only.
std::vector<std::array<int, 3>> triangulate(const Polytope3& p);

// Every undirected edge shared by exactly two triangles, in opposite directions.
bool mesh_watertight(const std::vector<std::array<int, 3>>& tris);

enum class MeshFormat { OBJ, PLY };

// ASCII mesh with vertices as decimals at `digits` significant digits and a
// deterministic vertex/facet order. Throws std::domain_error on degenerate bodies.
std::string export_mesh(const Polytope3& p, MeshFormat format, int digits = 12);

std::string format_double(double v, int significant_digits);

}  // namespace tslab
