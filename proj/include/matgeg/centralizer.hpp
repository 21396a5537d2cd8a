#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "matgeg/dwalgebra.hpp"

namespace matgeg {

// A DiffOp of order <= s with x-degree <= d in every coefficient, linear in
// one unknown per (i, j, r, c).
struct GenericOp {
  unsigned order_bound = 0;
  unsigned degree_bound = 0;
  std::size_t size = 2;

  std::size_t unknowns() const { return (order_bound + 1) * (degree_bound + 1) * size * size; }
  // d^i x^j E_rc for the k-th unknown.
  DiffOp basis_op(std::size_t k) const;
  // sum_k values[k] basis_op(k)
  DiffOp combine(const std::vector<RatFunc>& values) const;
};

struct SolutionSpace {
  std::vector<DiffOp> basis;
  std::size_t dimension = 0;
  // Empty when solved over Q(p, n); otherwise the bindings of the first
  // specialisation, which is also where the basis lives.
  Bindings bindings;
  bool numeric_specialized = false;
  std::vector<std::size_t> specialized_dims;  // one per binding tried
};

struct CentralizerOptions {
  // Abort the symbolic elimination once any pivot row carries more than
  // this many terms.
  std::size_t term_limit = 4000;
  bool allow_fallback = true;
  unsigned fallback_samples = 3;
  std::uint64_t seed = 20240;
};

// Operators of order <= s, degree <= d commuting with every target.
// Throws ResourceLimit when the symbolic run blows the guard and the
// fallback is disabled.
SolutionSpace centralizer_truncated(const std::vector<DiffOp>& targets, unsigned s, unsigned d,
                                    const CentralizerOptions& opt = {});

// Rank over the coefficient field of a list of operators.
std::size_t rank(const std::vector<DiffOp>& ops);

// Nullspace of a dense matrix over Q(p, n) by Gauss-Jordan with first-nonzero
// pivoting; exposed for tests.
std::vector<std::vector<RatFunc>> nullspace(std::vector<std::vector<RatFunc>> m, std::size_t term_limit = 0);
std::vector<std::vector<Rat>> nullspace(std::vector<std::vector<Rat>> m);

struct MembershipReport {
  bool decompose_member = false;
  bool commutes_with_center = false;
  bool eigen_member = false;  // certified up to wmax only
  unsigned wmax = 0;
  std::string note;
  bool agree() const { return decompose_member == commutes_with_center && commutes_with_center == eigen_member; }
};

MembershipReport membership_cross_check(const DiffOp& d, unsigned wmax = 12, const DWAlgebra& alg = symbolic_algebra());

}  // namespace matgeg
