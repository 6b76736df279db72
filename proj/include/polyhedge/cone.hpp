#pragma once

#include "polyhedge/polyhedron.hpp"

namespace polyhedge {

// A polyhedral convex cone: vertex set {0} plus rays. Conversions between
// the two cone representations skip the homogenization step since the polar
// swaps generators and inequality normals.
struct Cone {
  Polyhedron poly;

  int dim() const { return poly.dim; }
};

inline Cone cone_from_rays(RatMat rays, int dim) {
  RatMat gens;
  for (auto& g : rays) {
    if ((int)g.size() != dim) throw DimensionMismatch("cone_from_rays");
    if (!is_zero(g)) gens.push_back(primitive(g));
  }
  sort_dedup_rows(gens);
  // canonicalize: H-rep from polar, extreme rays back from it
  RatMat rows = cone_generators(gens, dim);
  RatMat minimal = cone_generators(rows, dim);
  sort_dedup_rows(minimal);
  sort_dedup_rows(rows);
  Polyhedron p;
  p.dim = dim;
  p.vrep = VPoly{{RatVec(dim, Rat(0))}, minimal, dim};
  HPoly h;
  h.dim = dim;
  for (auto& row : rows) {
    h.A.push_back(row);
    h.r.push_back(Rat(0));
  }
  p.hrep = std::move(h);
  Cone c;
  c.poly = std::move(p);
  return c;
}

inline Cone cone_from_rows(const RatMat& rows, int dim) {
  return cone_from_rays(cone_generators(rows, dim), dim);
}

inline const RatMat& cone_rays(const Cone& c) { return c.poly.vrep->rays; }

inline RatMat cone_rows(const Cone& c) { return c.poly.hrep->A; }

inline bool cone_contains(const Cone& c, const RatVec& x) { return contains(c.poly, x); }

// Positive polar C+ = {x : x.y >= 0 for all y in C}; an involution on
// closed convex cones.
inline Cone polar_dual(const Cone& c) {
  return cone_from_rays(cone_generators(cone_rays(c), c.dim()), c.dim());
}

// True iff C ∩ (-C) = {0}, decided exactly: the lineality space of
// {x : Mx >= 0} is the kernel of M.
inline bool is_line_free(const Cone& c) {
  RatMat rows = cone_rows(c);
  return kernel_basis(rows, c.dim()).empty();
}

// p + C for nonempty p: vertices kept, rays merged.
inline Polyhedron minkowski_sum_cone(const Polyhedron& p, const Cone& c) {
  if (p.dim != c.dim()) throw DimensionMismatch("minkowski_sum_cone");
  if (is_empty(p)) throw EmptyInput("minkowski_sum_cone: empty polyhedron");
  VPoly v = get_v(p);
  RatMat rays = v.rays;
  const RatMat& extra = cone_rays(c);
  rays.insert(rays.end(), extra.begin(), extra.end());
  sort_dedup_rows(rays);
  return dd_convert(from_v(v.verts, rays, p.dim));
}

inline Cone whole_space_cone(int dim) { return cone_from_rows({}, dim); }

inline Cone nonneg_orthant(int dim) {
  RatMat rays;
  for (int i = 0; i < dim; ++i) rays.push_back(unit_vec(dim, i));
  return cone_from_rays(rays, dim);
}

}  // namespace polyhedge
