#include "sublat/algebra.hpp"

#include <algorithm>

#include "sublat/errors.hpp"
#include "sublat/rng.hpp"

namespace sublat {

MatrixSpan::MatrixSpan(std::size_t n, const std::vector<Matrix>& generators)
    : n_(n) {
  Matrix stacked(0, 0);
  for (const auto& g : generators) {
    if (g.rows() != n || g.cols() != n)
      throw precondition_error("span generator shape mismatch");
    stacked = Matrix::vstack(stacked, g.flatten_row());
  }
  if (stacked.empty() && generators.empty()) stacked = Matrix(0, n * n);
  Rref rr = stacked.rref();
  Matrix reduced(rr.pivots.size(), n * n);
  for (std::size_t i = 0; i < rr.pivots.size(); ++i)
    for (std::size_t c = 0; c < n * n; ++c) reduced.at(i, c) = rr.mat.at(i, c);
  rref_rows_ = std::move(reduced);
  for (std::size_t i = 0; i < rref_rows_.rows(); ++i) {
    std::vector<GaussianRational> entries(n * n);
    for (std::size_t c = 0; c < n * n; ++c) entries[c] = rref_rows_.at(i, c);
    basis_.push_back(Matrix(n, n, std::move(entries)));
  }
}

bool MatrixSpan::contains(const Matrix& m) const {
  if (m.rows() != n_ || m.cols() != n_)
    throw precondition_error("span membership shape mismatch");
  if (rref_rows_.rows() == 0) return m.is_zero();
  // reduce the flattened matrix against the echelon rows
  std::vector<GaussianRational> v = m.flatten_row().entries();
  for (std::size_t i = 0; i < rref_rows_.rows(); ++i) {
    std::size_t piv = 0;
    while (piv < v.size() && rref_rows_.at(i, piv).is_zero()) ++piv;
    if (piv == v.size()) continue;
    const GaussianRational f = v[piv];  // copy: the loop below zeroes v[piv]
    if (f.is_zero()) continue;
    for (std::size_t c = piv; c < v.size(); ++c)
      v[c] -= f * rref_rows_.at(i, c);
  }
  return std::all_of(v.begin(), v.end(),
                     [](const GaussianRational& e) { return e.is_zero(); });
}

OperatorAlgebra::OperatorAlgebra(std::size_t ambient,
                                 const std::vector<Matrix>& basis)
    : n_(ambient), span_(ambient, basis) {
  if (!span_.contains(Matrix::identity(n_)))
    throw invariant_error("algebra is not unital");
  for (const auto& a : span_.basis())
    for (const auto& b : span_.basis())
      if (!span_.contains(a * b))
        throw invariant_error("algebra basis is not multiplicatively closed");
}

bool is_invariant(const Matrix& t, const Subspace& m) {
  if (t.rows() != m.ambient() || t.cols() != m.ambient())
    throw precondition_error("operator shape does not match ambient");
  for (std::size_t c = 0; c < m.dim(); ++c)
    if (!m.contains_vector(t * Matrix::column(m.basis().col(c))))
      return false;
  return true;
}

OperatorAlgebra alg_of_family(std::size_t ambient,
                              const std::vector<Subspace>& members) {
  std::size_t nn = ambient * ambient;
  // unknowns: T row-major; constraint per (xi, b): xi^T T b = 0, i.e.
  // sum_{i,j} xi_i b_j T_{ij} = 0
  std::vector<GaussianRational> rows;
  std::size_t n_rows = 0;
  for (const auto& m : members) {
    if (m.ambient() != ambient)
      throw precondition_error("family member ambient mismatch");
    Subspace ann = m.annihilator();
    for (std::size_t a = 0; a < ann.dim(); ++a) {
      std::vector<GaussianRational> xi = ann.basis().col(a);
      for (std::size_t b = 0; b < m.dim(); ++b) {
        std::vector<GaussianRational> bc = m.basis().col(b);
        for (std::size_t i = 0; i < ambient; ++i)
          for (std::size_t j = 0; j < ambient; ++j)
            rows.push_back(xi[i] * bc[j]);
        ++n_rows;
      }
    }
  }
  Matrix constraints(n_rows, nn, std::move(rows));
  Matrix null = n_rows ? constraints.kernel() : Matrix::identity(nn);
  std::vector<Matrix> basis;
  for (std::size_t c = 0; c < null.cols(); ++c)
    basis.push_back(Matrix(ambient, ambient, null.col(c)));
  return OperatorAlgebra(ambient, basis);
}

OperatorAlgebra commutant(std::size_t ambient,
                          const std::vector<Matrix>& generators) {
  std::size_t nn = ambient * ambient;
  std::vector<GaussianRational> rows;
  std::size_t n_rows = 0;
  for (const auto& g : generators) {
    if (g.rows() != ambient || g.cols() != ambient)
      throw precondition_error("commutant generator shape mismatch");
    // (T g - g T)_{rc} = sum_k T_{rk} g_{kc} - g_{rk} T_{kc} = 0
    for (std::size_t r = 0; r < ambient; ++r)
      for (std::size_t c = 0; c < ambient; ++c) {
        std::vector<GaussianRational> row(nn);
        for (std::size_t k = 0; k < ambient; ++k) {
          row[r * ambient + k] += g.at(k, c);
          row[k * ambient + c] -= g.at(r, k);
        }
        rows.insert(rows.end(), row.begin(), row.end());
        ++n_rows;
      }
  }
  Matrix constraints(n_rows, nn, std::move(rows));
  Matrix null = n_rows ? constraints.kernel() : Matrix::identity(nn);
  std::vector<Matrix> basis;
  for (std::size_t c = 0; c < null.cols(); ++c)
    basis.push_back(Matrix(ambient, ambient, null.col(c)));
  return OperatorAlgebra(ambient, basis);
}

OperatorAlgebra bicommutant(std::size_t ambient,
                            const std::vector<Matrix>& generators) {
  return commutant(ambient, commutant(ambient, generators).basis());
}

Subspace cyclic_subspace(const OperatorAlgebra& alg, const Matrix& x) {
  if (x.rows() != alg.ambient() || x.cols() != 1)
    throw precondition_error("cyclic vector must be an ambient column");
  Matrix columns(alg.ambient(), 0);
  for (const auto& b : alg.basis())
    columns = Matrix::hstack(columns, b * x);
  return Subspace(alg.ambient(), columns);
}

bool fixes_every_member(const Matrix& s, const std::vector<Subspace>& members) {
  if (!s.is_square() || !s.invertible())
    throw precondition_error("fixes_every_member needs an invertible operator");
  for (const auto& m : members) {
    if (s.rows() != m.ambient())
      throw precondition_error("operator shape does not match ambient");
    if (!(Subspace(m.ambient(), s * m.basis()) == m)) return false;
  }
  return true;
}

bool grp_membership(const OperatorAlgebra& alg, const Matrix& s) {
  if (s.rows() != alg.ambient() || s.cols() != alg.ambient())
    throw precondition_error("operator shape does not match ambient");
  std::optional<Matrix> si = s.inverse();
  if (!si) return false;
  return alg.contains(s) && alg.contains(*si);
}

namespace {

// Every line whose canonical basis column (leading entry 1) has real and
// imaginary parts of height <= h: the canonical form is enumerated
// directly, one column per line.
std::vector<Matrix> bounded_lines(std::size_t ambient, long h) {
  std::vector<Rational> vals;
  for (long q = 1; q <= h; ++q)
    for (long p = -h; p <= h; ++p) {
      Rational r(p, q);
      if (std::none_of(vals.begin(), vals.end(),
                       [&](const Rational& v) { return v == r; }))
        vals.push_back(r);
    }
  std::vector<GaussianRational> scalars;
  for (const auto& re : vals)
    for (const auto& im : vals) scalars.emplace_back(re, im);

  std::vector<Matrix> lines;
  for (std::size_t lead = 0; lead < ambient; ++lead) {
    std::size_t tail = ambient - lead - 1;
    std::vector<std::size_t> idx(tail, 0);
    for (;;) {
      std::vector<GaussianRational> cur(ambient);
      cur[lead] = GaussianRational(1);
      for (std::size_t i = 0; i < tail; ++i) cur[lead + 1 + i] = scalars[idx[i]];
      lines.push_back(Matrix::column(cur));
      std::size_t p = 0;
      while (p < tail && ++idx[p] == scalars.size()) idx[p++] = 0;
      if (p == tail) break;
    }
  }
  return lines;
}

}  // namespace

ReflexivityReport reflexivity_probe(const SubspaceLattice& l,
                                    std::size_t trials, std::uint64_t seed,
                                    const ReflexivityProbeOptions& opts) {
  ReflexivityReport report;
  report.seed = seed;
  report.trials = trials;
  OperatorAlgebra alg = alg_of_family(l.ambient(), l.nodes());
  Lcg64 rng(seed);

  auto note_witness = [&](const Subspace& s) {
    if (l.find(s)) return;
    if (std::none_of(report.witnesses.begin(), report.witnesses.end(),
                     [&](const Subspace& w) { return w == s; }))
      report.witnesses.push_back(s);
  };

  std::vector<Subspace> found;
  auto remember = [&](const Subspace& s) {
    if (std::none_of(found.begin(), found.end(),
                     [&](const Subspace& t) { return t == s; }))
      found.push_back(s);
  };

  for (std::size_t t = 0; t < trials; ++t) {
    Matrix x(l.ambient(), 1);
    bool nonzero = false;
    while (!nonzero) {
      for (std::size_t i = 0; i < l.ambient(); ++i) {
        x.at(i, 0) = GaussianRational(Rational(rng.range(-2, 2)),
                                      Rational(rng.range(-2, 2)));
        nonzero = nonzero || !x.at(i, 0).is_zero();
      }
    }
    Subspace cyc = cyclic_subspace(alg, x);
    note_witness(cyc);
    remember(cyc);
  }

  // close the found cyclic subspaces under meet/join; everything produced
  // stays invariant, so any element outside the lattice also refutes
  for (std::size_t k = 1; k < found.size() && found.size() <= opts.node_cap;
       ++k)
    for (std::size_t j = 0; j < k; ++j) {
      if (found.size() > opts.node_cap) break;
      Subspace mt = found[j].meet(found[k]);
      Subspace jn = found[j].join(found[k]);
      remember(mt);
      remember(jn);
      note_witness(mt);
      note_witness(jn);
    }

  if (opts.exhaustive_height > 0 && l.ambient() <= 3) {
    report.exhaustive_small = true;
    report.exhaustive_height = opts.exhaustive_height;
    std::vector<Matrix> lines = bounded_lines(l.ambient(), opts.exhaustive_height);
    auto invariant_under_alg = [&](const Subspace& s) {
      return std::all_of(alg.basis().begin(), alg.basis().end(),
                         [&](const Matrix& b) { return is_invariant(b, s); });
    };
    for (const auto& v : lines) {
      Subspace s(l.ambient(), v);
      if (invariant_under_alg(s)) note_witness(s);
      if (l.ambient() == 3) {
        // height-bounded 2-dimensional candidates, as annihilators of lines
        Subspace plane = Subspace(l.ambient(), v).annihilator();
        if (invariant_under_alg(plane)) note_witness(plane);
      }
    }
  }

  std::sort(report.witnesses.begin(), report.witnesses.end(),
            [](const Subspace& a, const Subspace& b) {
              return Subspace::order_cmp(a, b) < 0;
            });
  report.verdict =
      report.witnesses.empty() ? "no_counterexample" : "counterexample_found";
  return report;
}

}  // namespace sublat
