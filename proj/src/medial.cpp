#include "sublat/medial.hpp"

#include "sublat/algebra.hpp"
#include "sublat/collineation.hpp"
#include "sublat/errors.hpp"

namespace sublat {

namespace {

Matrix require_invertible(const Matrix& v, std::size_t m, const char* name) {
  if (v.rows() != m || v.cols() != m)
    throw precondition_error(std::string(name) + " must be m x m");
  std::optional<Matrix> inv = v.inverse();
  if (!inv) throw precondition_error(std::string(name) + " must be invertible");
  return *inv;
}

// The exchange involution for the decomposition ambient = P (+) Q with
// bases p, q and coordinate map v (P-coords to Q-coords):
// x_p + x_q  |->  v x_p (in Q) + v^-1 x_q (in P).
Matrix exchange(const Matrix& p, const Matrix& q, const Matrix& v,
                const Matrix& vinv) {
  Matrix basis = Matrix::hstack(p, q);
  std::optional<Matrix> binv = basis.inverse();
  if (!binv) throw invariant_error("exchange parts do not decompose the space");
  return Matrix::hstack(q * v, p * vinv) * *binv;
}

}  // namespace

MedialRealization realize_double_triangle(std::size_t m, const Matrix& v3,
                                          const Matrix& v1) {
  if (m == 0) throw precondition_error("medial realization needs m >= 1");
  Matrix v3i = require_invertible(v3, m, "v3");
  Matrix v1i = require_invertible(v1, m, "v1");

  std::size_t n = 2 * m;
  Matrix top = Matrix::vstack(Matrix::identity(m), Matrix::zero(m, m));
  Matrix graph_v3 = Matrix::vstack(Matrix::identity(m), v3);

  MedialRealization r;
  r.m = m;
  r.m1 = Subspace(n, top);
  r.m2 = Subspace(n, graph_v3);
  r.m3 = Subspace(n, graph_v3 + top * v1);

  // With the natural graph bases the coordinate matrices of the three
  // connecting maps come out as (-I, -v1^-1, v1^-1); rescaling the bases
  // by v1^-1 v3^-1 and -(v1^-1 v3^-1 v1^-1) turns them into the inputs
  // and their product, which is the stored convention.
  r.c1 = top;
  r.c2 = graph_v3 * (v1i * v3i);
  r.c3 = -((graph_v3 + top * v1) * (v1i * v3i * v1i));
  r.v1 = v1;
  r.v3 = v3;
  r.v2 = v1 * v3;

  r.w1 = exchange(r.c2, r.c3, r.v1, v1i);
  r.w2 = exchange(r.c1, r.c3, r.v2, v3i * v1i);
  r.w3 = exchange(r.c1, r.c2, r.v3, v3i);

  verify_medial_relations(r);
  return r;
}

Subspace involution_fixed_space(const Matrix& w) {
  if (!w.is_square()) throw precondition_error("fixed space of non-square matrix");
  return Subspace(w.rows(), (Matrix::identity(w.rows()) - w).kernel());
}

void verify_medial_relations(const MedialRealization& r) {
  std::size_t n = 2 * r.m;
  auto fail = [](const char* what) { throw invariant_error(what); };

  if (!is_direct_sum(n, {r.m1, r.m2}) || !is_direct_sum(n, {r.m1, r.m3}) ||
      !is_direct_sum(n, {r.m2, r.m3}))
    fail("medial parts are not pairwise complementary");

  if (!(Subspace(n, r.c1) == r.m1) || !(Subspace(n, r.c2) == r.m2) ||
      !(Subspace(n, r.c3) == r.m3))
    fail("stored bases do not span the parts");

  // graph relations: M3 = {x + v3 x : x in M1}, M2 = {x + v2 x : x in M1},
  // M1 = {y + v1 y : y in M2}
  if (!(Subspace(n, r.c1 + r.c2 * r.v3) == r.m3)) fail("v3 graph relation broken");
  if (!(Subspace(n, r.c1 + r.c3 * r.v2) == r.m2)) fail("v2 graph relation broken");
  if (!(Subspace(n, r.c2 + r.c3 * r.v1) == r.m1)) fail("v1 graph relation broken");

  if (!(r.v2 == r.v1 * r.v3)) fail("v2 != v1 v3");

  Matrix id = Matrix::identity(n);
  if (!(r.w1 * r.w1 == id) || !(r.w2 * r.w2 == id) || !(r.w3 * r.w3 == id))
    fail("exchange operator is not an involution");

  if (!(involution_fixed_space(r.w1) == r.m1) ||
      !(involution_fixed_space(r.w2) == r.m2) ||
      !(involution_fixed_space(r.w3) == r.m3))
    fail("fixed space of an exchange operator is off");

  Matrix w12 = r.w1 * r.w2, w31 = r.w3 * r.w1, w23 = r.w2 * r.w3;
  Matrix w13 = r.w1 * r.w3, w21 = r.w2 * r.w1, w32 = r.w3 * r.w2;
  if (!(w12 == w31) || !(w12 == w23)) fail("w1w2 = w3w1 = w2w3 broken");
  if (!(w13 == w21) || !(w13 == w32)) fail("w1w3 = w2w1 = w3w2 broken");
}

SubspaceLattice medial_lattice(const MedialRealization& r, MedialKind kind) {
  std::vector<Subspace> nodes = {r.m1, r.m2};
  if (kind == MedialKind::double_triangle) nodes.push_back(r.m3);
  return SubspaceLattice::from_nodes(2 * r.m, nodes);
}

std::vector<Matrix> complement_group(const MedialRealization& r,
                                     MedialKind kind) {
  Matrix id = Matrix::identity(2 * r.m);
  if (kind == MedialKind::diamond) return {id, r.w3};
  return {id, r.w1, r.w2, r.w3, r.w1 * r.w2, r.w2 * r.w1};
}

MedialDecomposition medial_decompose(const MedialRealization& r,
                                     MedialKind kind, const Matrix& s) {
  SubspaceLattice l = medial_lattice(r, kind);
  std::vector<std::size_t> action = induced_automorphism(l, s);
  std::vector<Matrix> comp = complement_group(r, kind);
  for (std::size_t i = 0; i < comp.size(); ++i) {
    if (!(induced_automorphism(l, comp[i]) == action)) continue;
    Matrix a = s * *comp[i].inverse();
    if (!fixes_every_member(a, l.nodes()))
      throw invariant_error("decomposition residue does not fix the nodes");
    return {a, comp[i], i};
  }
  throw invariant_error("no complement element matches the induced action");
}

}  // namespace sublat
