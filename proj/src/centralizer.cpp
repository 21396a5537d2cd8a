#include "matgeg/centralizer.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <tuple>

#include "matgeg/errors.hpp"

namespace matgeg {

DiffOp GenericOp::basis_op(std::size_t k) const {
  if (k >= unknowns()) throw DomainError("unknown index out of range");
  const std::size_t c = k % size;
  k /= size;
  const std::size_t r = k % size;
  k /= size;
  const std::size_t j = k % (degree_bound + 1);
  const std::size_t i = k / (degree_bound + 1);
  return DiffOp::term(static_cast<unsigned>(i), MatPoly::monomial(Mat::unit(size, r, c), static_cast<unsigned>(j)));
}

DiffOp GenericOp::combine(const std::vector<RatFunc>& values) const {
  if (values.size() != unknowns()) throw SizeMismatch("wrong number of unknown values");
  DiffOp out(size);
  for (std::size_t k = 0; k < values.size(); ++k)
    if (!values[k].is_zero()) out += basis_op(k).scaled(values[k]);
  return out;
}

namespace {

std::size_t weight(const RatFunc& f) { return f.term_count(); }
std::size_t weight(const Rat&) { return 0; }
bool zero(const RatFunc& f) { return f.is_zero(); }
bool zero(const Rat& q) { return q == 0; }

template <class F>
using SparseRow = std::map<std::size_t, F>;

// row -= c * piv
template <class F>
void axpy(SparseRow<F>& row, const F& c, const SparseRow<F>& piv) {
  for (const auto& [col, v] : piv) {
    auto it = row.find(col);
    if (it == row.end()) {
      row.emplace(col, -(c * v));
    } else {
      it->second -= c * v;
      if (zero(it->second)) row.erase(it);
    }
  }
}

template <class F>
std::size_t row_weight(const SparseRow<F>& row) {
  std::size_t t = 0;
  for (const auto& [col, v] : row) t += weight(v);
  return t;
}

// Gauss-Jordan on sparse rows. The next pivot row is the lightest remaining
// row and its pivot the lightest entry in it (ties: lowest index). This is
// deterministic and keeps the rational functions small.
template <class F>
std::vector<std::vector<F>> sparse_nullspace(std::vector<SparseRow<F>> rows, std::size_t ncols,
                                             std::size_t term_limit) {
  std::map<std::size_t, SparseRow<F>> piv;  // pivot column -> row, fully reduced
  std::erase_if(rows, [](const SparseRow<F>& r) { return r.empty(); });
  std::vector<std::size_t> wt(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) wt[i] = row_weight(rows[i]);
  while (!rows.empty()) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < rows.size(); ++i)
      if (std::make_pair(wt[i], rows[i].size()) < std::make_pair(wt[best], rows[best].size())) best = i;
    SparseRow<F> row = std::move(rows[best]);
    rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(best));
    wt.erase(wt.begin() + static_cast<std::ptrdiff_t>(best));
    auto pe = row.begin();
    for (auto it = row.begin(); it != row.end(); ++it)
      if (weight(it->second) < weight(pe->second)) pe = it;
    const std::size_t col = pe->first;
    const F inv = F(1) / pe->second;
    for (auto& [k, v] : row) v *= inv;
    auto eliminate = [&](SparseRow<F>& r) {
      auto hit = r.find(col);
      if (hit == r.end()) return false;
      const F c = hit->second;
      axpy(r, c, row);
      if (term_limit && row_weight(r) > term_limit)
        throw ResourceLimit("symbolic elimination exceeded " + std::to_string(term_limit) + " terms in one row");
      return true;
    };
    for (auto& [pc, pr] : piv) eliminate(pr);
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (eliminate(rows[i])) wt[i] = row_weight(rows[i]);
    for (std::size_t i = rows.size(); i-- > 0;)
      if (rows[i].empty()) {
        rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(i));
        wt.erase(wt.begin() + static_cast<std::ptrdiff_t>(i));
      }
    piv.emplace(col, std::move(row));
  }
  std::vector<std::vector<F>> out;
  for (std::size_t f = 0; f < ncols; ++f) {
    if (piv.count(f)) continue;
    std::vector<F> v(ncols, F(0));
    v[f] = F(1);
    for (const auto& [pc, row] : piv) {
      auto hit = row.find(f);
      if (hit != row.end()) v[pc] = -hit->second;
    }
    out.push_back(std::move(v));
  }
  return out;
}

template <class F>
std::vector<SparseRow<F>> to_sparse(const std::vector<std::vector<F>>& m) {
  std::vector<SparseRow<F>> rows;
  for (const auto& r : m) {
    SparseRow<F> s;
    for (std::size_t c = 0; c < r.size(); ++c)
      if (!zero(r[c])) s.emplace(c, r[c]);
    rows.push_back(std::move(s));
  }
  return rows;
}

using Key = std::tuple<std::size_t, std::size_t, std::size_t, std::size_t>;  // order, x-degree, r, c

void flatten(const DiffOp& d, std::map<Key, RatFunc>& out) {
  const std::size_t n = d.size();
  for (std::size_t i = 0; i < d.coeffs().size(); ++i) {
    const MatPoly& f = d.coeffs()[i];
    for (std::size_t j = 0; j < f.coeffs().size(); ++j)
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) {
          const RatFunc& v = f.coeffs()[j](r, c);
          if (!v.is_zero()) out[{i, j, r, c}] = v;
        }
  }
}

// One row per (target, monomial), one column per unknown.
std::vector<SparseRow<RatFunc>> commutation_system(const GenericOp& g, const std::vector<DiffOp>& targets) {
  std::map<std::pair<std::size_t, Key>, SparseRow<RatFunc>> rows;
  for (std::size_t k = 0; k < g.unknowns(); ++k) {
    const DiffOp e = g.basis_op(k);
    for (std::size_t t = 0; t < targets.size(); ++t) {
      std::map<Key, RatFunc> coords;
      flatten(commutator(e, targets[t]), coords);
      for (auto& [key, v] : coords) rows[{t, key}].emplace(k, std::move(v));
    }
  }
  std::vector<SparseRow<RatFunc>> out;
  out.reserve(rows.size());
  for (auto& [key, row] : rows) out.push_back(std::move(row));
  return out;
}

Bindings random_binding(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> nd(5, 41);
  std::uniform_int_distribution<long> den(1, 7);
  const long n = nd(rng);
  const long q = den(rng);
  // p = k / q strictly inside (0, n/2)
  std::uniform_int_distribution<long> kd(1, n * q / 2 - 1 > 0 ? n * q / 2 - 1 : 1);
  Rat p(kd(rng), q);
  p.canonicalize();
  return {{Var::p, p}, {Var::n, Rat(n)}};
}

}  // namespace

std::vector<std::vector<RatFunc>> nullspace(std::vector<std::vector<RatFunc>> m, std::size_t term_limit) {
  const std::size_t ncols = m.empty() ? 0 : m.front().size();
  return sparse_nullspace<RatFunc>(to_sparse(m), ncols, term_limit);
}

std::vector<std::vector<Rat>> nullspace(std::vector<std::vector<Rat>> m) {
  const std::size_t ncols = m.empty() ? 0 : m.front().size();
  return sparse_nullspace<Rat>(to_sparse(m), ncols, 0);
}

std::size_t rank(const std::vector<DiffOp>& ops) {
  // Columns are the operators; the nullspace dimension of the coordinate
  // matrix gives the rank by subtraction.
  std::map<Key, SparseRow<RatFunc>> rows;
  for (std::size_t k = 0; k < ops.size(); ++k) {
    std::map<Key, RatFunc> coords;
    flatten(ops[k], coords);
    for (auto& [key, v] : coords) rows[key].emplace(k, std::move(v));
  }
  std::vector<SparseRow<RatFunc>> r;
  for (auto& [key, row] : rows) r.push_back(std::move(row));
  return ops.size() - sparse_nullspace<RatFunc>(r, ops.size(), 0).size();
}

SolutionSpace centralizer_truncated(const std::vector<DiffOp>& targets, unsigned s, unsigned d,
                                    const CentralizerOptions& opt) {
  if (targets.empty()) throw DomainError("centralizer needs at least one target");
  const std::size_t size = targets.front().size();
  for (const auto& t : targets)
    if (t.size() != size) throw SizeMismatch("targets of different sizes");
  GenericOp g{s, d, size};
  const auto system = commutation_system(g, targets);

  SolutionSpace out;
  try {
    for (auto& v : sparse_nullspace<RatFunc>(system, g.unknowns(), opt.term_limit)) out.basis.push_back(g.combine(v));
    out.dimension = out.basis.size();
    return out;
  } catch (const ResourceLimit&) {
    if (!opt.allow_fallback) throw;
  }

  // Numeric specialisation at random admissible (p, n).
  out.numeric_specialized = true;
  std::mt19937_64 rng(opt.seed);
  unsigned done = 0;
  for (unsigned attempt = 0; done < opt.fallback_samples && attempt < 10 * opt.fallback_samples; ++attempt) {
    const Bindings b = random_binding(rng);
    std::vector<SparseRow<Rat>> rows;
    try {
      for (const auto& row : system) {
        SparseRow<Rat> r;
        for (const auto& [col, v] : row) {
          RatFunc e = v.evaluate(b);
          if (!e.is_constant()) throw DomainError("matrix entry involves variables besides p, n");
          if (!e.is_zero()) r.emplace(col, e.constant_value());
        }
        rows.push_back(std::move(r));
      }
    } catch (const DivisionByZero&) {
      continue;
    }
    auto ns = sparse_nullspace<Rat>(rows, g.unknowns(), 0);
    out.specialized_dims.push_back(ns.size());
    if (done == 0) {
      out.bindings = b;
      for (const auto& v : ns) {
        std::vector<RatFunc> rv(v.begin(), v.end());
        out.basis.push_back(g.combine(rv));
      }
      out.dimension = ns.size();
    }
    ++done;
  }
  if (done < opt.fallback_samples) throw ResourceLimit("could not find enough admissible specialisations");
  for (std::size_t dim : out.specialized_dims)
    if (dim != out.dimension)
      throw DecompositionFailure("specialised centralizer dimensions disagree across bindings");
  return out;
}

MembershipReport membership_cross_check(const DiffOp& d, unsigned wmax, const DWAlgebra& alg) {
  MembershipReport rep;
  rep.wmax = wmax;
  rep.decompose_member = alg.is_member(d);
  rep.commutes_with_center = commutator(d, alg.C1()).is_zero() && commutator(d, alg.C2()).is_zero();
  rep.eigen_member = true;
  for (unsigned w = 0; w <= wmax; ++w) {
    MatPoly q = monic_mop_closed(w).poly;
    if (!alg.bindings().empty()) q = q.evaluate(alg.bindings());
    if (!eigenvalue_if_eigenfunction(q, d)) {
      rep.eigen_member = false;
      rep.note = "Q_" + std::to_string(w) + " is not an eigenfunction";
      break;
    }
  }
  if (rep.eigen_member) rep.note = "eigenfunction property certified up to w = " + std::to_string(wmax);
  return rep;
}

}  // namespace matgeg
