#pragma once

#include <array>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "matgeg/gegenbauer.hpp"
#include "matgeg/unipoly.hpp"

namespace matgeg {

// D = const_term * I + sum table[(i, j)] * (D1 + D2)^i * D_j, j in 1..4.
struct SpanDecomp {
  RatFunc const_term;
  std::map<std::pair<unsigned, int>, RatFunc> table;

  bool operator==(const SpanDecomp&) const = default;
};

// D = p(C1) + q(C1) C2.
struct CenterDecomp {
  UniPoly p_poly;
  UniPoly q_poly;

  bool operator==(const CenterDecomp&) const = default;
};

struct BridgeCheck {
  std::string name;
  bool passed = false;
  DiffOp residual;  // zero operator when passed
};

struct BridgeReport {
  std::vector<BridgeCheck> checks;
  bool all_passed() const;
};

// The algebra D(W) for the Gegenbauer weight: generators, the second
// presentation A, B, the center and the decision procedures. With bindings
// every object is specialised at the given (p, n).
class DWAlgebra {
 public:
  explicit DWAlgebra(Bindings bindings = {});

  const Bindings& bindings() const { return bindings_; }
  const Generators& generators() const { return gens_; }
  const DiffOp& generator(int j) const { return gens_[j]; }
  // n - 2p
  const RatFunc& shift() const { return shift_; }
  const DiffOp& A() const { return a_; }
  const DiffOp& B() const { return b_; }
  const DiffOp& C1() const { return c1_; }
  const DiffOp& C2() const { return c2_; }
  const DiffOp& identity() const { return id_; }

  // Specialises a symbolic expression at this algebra's bindings.
  RatFunc bind(const RatFunc& f) const { return bindings_.empty() ? f : f.evaluate(bindings_); }

  // (D1 + D2)^i D_j, cached.
  DiffOp span_element(unsigned i, int j) const;

  // Strips leading coefficients with span elements until order 0. Throws
  // NonMember when the residual has the wrong shape.
  SpanDecomp decompose(const DiffOp& d) const;
  DiffOp reassemble(const SpanDecomp& s) const;
  bool is_member(const DiffOp& d) const;

  bool is_central(const DiffOp& d) const;
  CenterDecomp center_decompose(const DiffOp& d) const;
  DiffOp reassemble(const CenterDecomp& c) const;
  // Lambda_w(C1), Lambda_w(C2) as polynomials in w.
  const UniPoly& center_eigen1() const { return p1_; }
  const UniPoly& center_eigen2() const { return p2_; }

 private:
  Bindings bindings_;
  Generators gens_;
  RatFunc shift_;
  DiffOp id_, a_, b_, c1_, c2_;
  UniPoly p1_, p2_;

  struct SpanCache {
    std::mutex mu;
    std::vector<std::array<DiffOp, 4>> rows;
  };
  std::shared_ptr<SpanCache> cache_;
};

// Shared symbolic instance.
const DWAlgebra& symbolic_algebra();

struct ABPair {
  DiffOp A, B;
};
ABPair build_AB();

struct CenterPair {
  DiffOp C1, C2;
};
CenterPair build_center();

// Substitutes E = A - 2I/a^2, F = (4 + a^4) B + (4 - a^4)[B, A] into the two
// corrected Hermite-algebra relations, over Q(p, n, a).
BridgeReport hermite_bridge_check();

}  // namespace matgeg
