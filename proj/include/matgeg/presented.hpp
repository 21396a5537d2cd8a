#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "matgeg/dwalgebra.hpp"

namespace matgeg {

enum class Letter { alpha, beta };
using Word = std::vector<Letter>;

// Accepts A/B, a/b or the Greek letters; whitespace and '*' are skipped.
Word parse_word(std::string_view text);
std::string to_string(const Word& w);

// m1 I + m2 beta^2 + m3 beta + m4 beta alpha, each m_i a polynomial in alpha
// acting on the left.
struct AlgElem {
  std::array<UniPoly, 4> m;

  static AlgElem identity();
  static AlgElem basis(std::size_t k);  // 0: I, 1: beta^2, 2: beta, 3: beta alpha
  bool is_zero() const;

  AlgElem operator-() const;
  AlgElem& operator+=(const AlgElem& o);
  AlgElem& operator-=(const AlgElem& o);
  friend AlgElem operator+(AlgElem a, const AlgElem& b) { return a += b; }
  friend AlgElem operator-(AlgElem a, const AlgElem& b) { return a -= b; }
  // Left multiplication by a polynomial in alpha.
  AlgElem left_scaled(const UniPoly& c) const;

  bool operator==(const AlgElem&) const = default;
  std::string to_string() const;
};

// Which fourth relation closes the table. kPrinted uses
// beta^3 - 2 alpha^2 beta + alpha beta alpha = 0 as printed; kCubic uses
// beta^3 = alpha beta alpha, the cubic relation A and B actually satisfy.
enum class Presentation { kPrinted, kCubic };
const char* presentation_name(Presentation pr);

class PresentedAlgebra {
 public:
  explicit PresentedAlgebra(Presentation pr = Presentation::kPrinted) : pr_(pr) {}
  Presentation presentation() const { return pr_; }

  AlgElem times_letter(const AlgElem& x, Letter l) const;
  AlgElem normal_form(const Word& w) const;
  AlgElem mul(const AlgElem& x, const AlgElem& y) const;

  // Left-hand sides of the four defining relations, as words with coefficients.
  std::vector<std::pair<std::string, std::vector<std::pair<long, Word>>>> relations() const;

 private:
  Presentation pr_;
};

AlgElem normal_form(const Word& w, Presentation pr = Presentation::kPrinted);
AlgElem alg_mul(const AlgElem& x, const AlgElem& y, Presentation pr = Presentation::kPrinted);

// alpha -> A, beta -> B inside alg (symbolic or specialised).
DiffOp evaluate_concrete(const AlgElem& x, const DWAlgebra& alg = symbolic_algebra());
// Lambda_w(evaluate_concrete(x)) computed from Lambda_w(A), Lambda_w(B)
// directly. Lambda is faithful on D(W), so this decides equality of images
// without building high-order operators.
EigenPoly eigen_image(const AlgElem& x, const DWAlgebra& alg = symbolic_algebra());
// The product of A and B read off a word, composed left to right.
DiffOp evaluate_word(const Word& w, const DWAlgebra& alg = symbolic_algebra());

}  // namespace matgeg
