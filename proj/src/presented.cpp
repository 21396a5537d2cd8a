#include "matgeg/presented.hpp"

#include <sstream>

#include "matgeg/errors.hpp"

namespace matgeg {

Word parse_word(std::string_view text) {
  Word w;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char ch = text[i];
    if (ch == ' ' || ch == '*' || ch == '\t') continue;
    if (ch == 'A' || ch == 'a') {
      w.push_back(Letter::alpha);
    } else if (ch == 'B' || ch == 'b') {
      w.push_back(Letter::beta);
    } else if (text.substr(i, 2) == "\xce\xb1") {  // UTF-8 alpha
      w.push_back(Letter::alpha);
      ++i;
    } else if (text.substr(i, 2) == "\xce\xb2") {
      w.push_back(Letter::beta);
      ++i;
    } else {
      throw ParseError("unexpected character in word: '" + std::string(1, ch) + "'");
    }
  }
  return w;
}

std::string to_string(const Word& w) {
  if (w.empty()) return "1";
  std::string s;
  for (Letter l : w) s += l == Letter::alpha ? 'A' : 'B';
  return s;
}

AlgElem AlgElem::identity() { return basis(0); }

AlgElem AlgElem::basis(std::size_t k) {
  if (k > 3) throw DomainError("basis index must be 0..3");
  AlgElem e;
  e.m[k] = UniPoly(1);
  return e;
}

bool AlgElem::is_zero() const {
  for (const auto& c : m)
    if (!c.is_zero()) return false;
  return true;
}

AlgElem AlgElem::operator-() const {
  AlgElem r;
  for (std::size_t i = 0; i < 4; ++i) r.m[i] = -m[i];
  return r;
}

AlgElem& AlgElem::operator+=(const AlgElem& o) {
  for (std::size_t i = 0; i < 4; ++i) m[i] += o.m[i];
  return *this;
}

AlgElem& AlgElem::operator-=(const AlgElem& o) {
  for (std::size_t i = 0; i < 4; ++i) m[i] -= o.m[i];
  return *this;
}

AlgElem AlgElem::left_scaled(const UniPoly& c) const {
  AlgElem r;
  for (std::size_t i = 0; i < 4; ++i) r.m[i] = c * m[i];
  return r;
}

std::string AlgElem::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < 4; ++i) os << (i ? ", " : "") << m[i].to_string("A");
  os << ')';
  return os.str();
}

const char* presentation_name(Presentation pr) { return pr == Presentation::kPrinted ? "printed" : "cubic"; }

namespace {

const UniPoly& alpha_poly() {
  static const UniPoly t = UniPoly::t();
  return t;
}

UniPoly alpha_pow(unsigned k) { return UniPoly::monomial(RatFunc(1), k); }

}  // namespace

// Right multiplication of the basis elements by a single letter:
//   I.a = a I                  I.b = b
//   bb.a = a bb                bb.b = 2 a^2 b - a (ba)   (printed)
//                              bb.b = a (ba)             (cubic)
//   b.a = ba                   b.b = bb
//   ba.a = (1 - a^2) b + 2a (ba)
//   ba.b = 2a bb + (a - a^3) I
AlgElem PresentedAlgebra::times_letter(const AlgElem& x, Letter l) const {
  const UniPoly& a = alpha_poly();
  const auto& [m1, m2, m3, m4] = x.m;
  AlgElem r;
  if (l == Letter::alpha) {
    r.m[0] = m1 * a;
    r.m[1] = m2 * a;
    r.m[2] = m4 * (UniPoly(1) - alpha_pow(2));
    r.m[3] = m3 + m4 * a.scaled(RatFunc(2));
    return r;
  }
  r.m[0] = m4 * (a - alpha_pow(3));
  r.m[1] = m3 + m4 * a.scaled(RatFunc(2));
  r.m[2] = m1;
  if (pr_ == Presentation::kPrinted) {
    r.m[2] += m2 * alpha_pow(2).scaled(RatFunc(2));
    r.m[3] = -(m2 * a);
  } else {
    r.m[3] = m2 * a;
  }
  return r;
}

AlgElem PresentedAlgebra::normal_form(const Word& w) const {
  AlgElem x = AlgElem::identity();
  for (Letter l : w) x = times_letter(x, l);
  return x;
}

AlgElem PresentedAlgebra::mul(const AlgElem& x, const AlgElem& y) const {
  static const std::array<Word, 4> basis_words = {
      Word{}, Word{Letter::beta, Letter::beta}, Word{Letter::beta}, Word{Letter::beta, Letter::alpha}};
  AlgElem out;
  for (std::size_t j = 0; j < 4; ++j) {
    const UniPoly& c = y.m[j];
    if (c.is_zero()) continue;
    AlgElem xa = x;  // x alpha^k
    for (std::size_t k = 0; k < c.coeffs().size(); ++k) {
      if (k > 0) xa = times_letter(xa, Letter::alpha);
      if (c.coeffs()[k].is_zero()) continue;
      AlgElem t = xa;
      for (Letter l : basis_words[j]) t = times_letter(t, l);
      out += t.left_scaled(UniPoly(c.coeffs()[k]));
    }
  }
  return out;
}

std::vector<std::pair<std::string, std::vector<std::pair<long, Word>>>> PresentedAlgebra::relations() const {
  auto w = [](std::string_view s) { return parse_word(s); };
  std::vector<std::pair<std::string, std::vector<std::pair<long, Word>>>> r = {
      {"BBA - ABB", {{1, w("BBA")}, {-1, w("ABB")}}},
      {"BAA + AAB - 2ABA - B", {{1, w("BAA")}, {1, w("AAB")}, {-2, w("ABA")}, {-1, w("B")}}},
      {"BAB + AAA - 2ABB - A", {{1, w("BAB")}, {1, w("AAA")}, {-2, w("ABB")}, {-1, w("A")}}},
  };
  if (pr_ == Presentation::kPrinted)
    r.push_back({"BBB - 2AAB + ABA", {{1, w("BBB")}, {-2, w("AAB")}, {1, w("ABA")}}});
  else
    r.push_back({"BBB - ABA", {{1, w("BBB")}, {-1, w("ABA")}}});
  return r;
}

AlgElem normal_form(const Word& w, Presentation pr) { return PresentedAlgebra(pr).normal_form(w); }

AlgElem alg_mul(const AlgElem& x, const AlgElem& y, Presentation pr) { return PresentedAlgebra(pr).mul(x, y); }

DiffOp evaluate_concrete(const AlgElem& x, const DWAlgebra& alg) {
  const DiffOp& A = alg.A();
  const DiffOp& B = alg.B();
  const std::array<DiffOp, 4> images = {alg.identity(), B * B, B, B * A};
  DiffOp out(2);
  for (std::size_t j = 0; j < 4; ++j) {
    const auto& c = x.m[j].coeffs();
    if (c.empty()) continue;
    // Horner in A; the coefficients are specialised with the algebra.
    DiffOp r = alg.identity().scaled(alg.bind(c.back()));
    for (std::size_t k = c.size() - 1; k-- > 0;) r = r * A + alg.identity().scaled(alg.bind(c[k]));
    out += r * images[j];
  }
  return out;
}

EigenPoly eigen_image(const AlgElem& x, const DWAlgebra& alg) {
  const EigenPoly la = eigenvalue_map(alg.A());
  const EigenPoly lb = eigenvalue_map(alg.B());
  const std::array<EigenPoly, 4> images = {Mat::identity(2), lb * lb, lb, lb * la};
  EigenPoly out(2);
  for (std::size_t j = 0; j < 4; ++j) {
    const auto& c = x.m[j].coeffs();
    if (c.empty()) continue;
    EigenPoly r = Mat::scalar(2, alg.bind(c.back()));
    for (std::size_t k = c.size() - 1; k-- > 0;) r = r * la + Mat::scalar(2, alg.bind(c[k]));
    out += r * images[j];
  }
  return out;
}

DiffOp evaluate_word(const Word& w, const DWAlgebra& alg) {
  DiffOp r = alg.identity();
  for (Letter l : w) r = r * (l == Letter::alpha ? alg.A() : alg.B());
  return r;
}

}  // namespace matgeg
