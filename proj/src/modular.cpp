#include "trigmono/modular.hpp"

#include <sstream>

namespace trigmono {

ModularMatrix::ModularMatrix(Int a_, Int b_, Int c_, Int d_)
    : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {
  if (a * d - b * c != 1) throw std::invalid_argument("ModularMatrix: determinant must be 1");
}

ModularMatrix ModularMatrix::operator*(const ModularMatrix& o) const {
  ModularMatrix r;
  r.a = a * o.a + b * o.c;
  r.b = a * o.b + b * o.d;
  r.c = c * o.a + d * o.c;
  r.d = c * o.b + d * o.d;
  return r;
}

ModularMatrix ModularMatrix::neg() const {
  ModularMatrix r;
  r.a = -a;
  r.b = -b;
  r.c = -c;
  r.d = -d;
  return r;
}

ModularMatrix ModularMatrix::pow(int k) const {
  ModularMatrix base = k >= 0 ? *this : inverse();
  int e = k >= 0 ? k : -k;
  ModularMatrix r;
  while (e > 0) {
    if (e & 1) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

std::string ModularMatrix::str() const {
  std::ostringstream os;
  os << "[[" << a.get_str() << "," << b.get_str() << "],[" << c.get_str() << "," << d.get_str()
     << "]]";
  return os.str();
}

MatClass classify(const ModularMatrix& g) {
  if (g == ModularMatrix::identity()) return MatClass::identity;
  if (g.neg() == ModularMatrix::identity()) return MatClass::minus_identity;
  Int tr = g.trace();
  if (tr == 2) return MatClass::parabolic_unipotent;
  if (tr == -2) return MatClass::parabolic_negative;
  if (abs(tr) < 2) return MatClass::elliptic;
  return MatClass::hyperbolic;
}

bool congruenceMember(const ModularMatrix& g, int m, int n) {
  if (m < 1 || n < 1 || n % m != 0)
    throw std::invalid_argument("congruenceMember: need 1 <= m | n");
  auto div0 = [](const Int& v, int k) { return v % k == 0; };
  return div0(g.a - 1, n) && div0(g.d - 1, n) && div0(g.c, n) && div0(g.b, m);
}

bool congruenceMemberPSL(const ModularMatrix& g, int m, int n) {
  return congruenceMember(g, m, n) || congruenceMember(g.neg(), m, n);
}

Lattice2 imageLattice(const ModularMatrix& g) {
  return Lattice2::fromColumns({{g.a - 1, g.c}, {g.b, g.d - 1}});
}

std::string ModularWord::str() const {
  std::ostringstream os;
  if (sign < 0) os << "-";
  if (letters.empty()) os << "1";
  for (size_t i = 0; i < letters.size(); ++i) {
    if (i) os << ".";
    if (letters[i] == 0)
      os << "Y";
    else if (letters[i] == 1)
      os << "X";
    else
      os << "X^2";
  }
  return os.str();
}

ModularMatrix wordToMatrix(const ModularWord& w) {
  ModularMatrix r;
  for (int l : w.letters) {
    if (l == 0)
      r = r * ModularMatrix::Y();
    else
      r = r * ModularMatrix::X().pow(l);
  }
  return w.sign < 0 ? r.neg() : r;
}

namespace {

// Push x^e or y onto an alternating normal-form stack over C3 * C2.
void pushLetter(std::vector<int>& st, bool isY, int e) {
  if (isY) {
    if (!st.empty() && st.back() == 0)
      st.pop_back();
    else
      st.push_back(0);
    return;
  }
  e %= 3;
  if (e < 0) e += 3;
  if (e == 0) return;
  if (!st.empty() && st.back() != 0) {
    int ne = (st.back() + e) % 3;
    st.pop_back();
    if (ne != 0) st.push_back(ne);
    return;
  }
  st.push_back(e);
}

}  // namespace

ModularWord matrixToWord(const ModularMatrix& g) {
  // Continued-fraction descent: peel factors T^q * Y from the left until
  // the lower-left entry vanishes, then the matrix is +-T^b.
  std::vector<std::pair<char, long>> tokens;  // ('T', q) or ('Y', 1)
  ModularMatrix mm = g;
  while (mm.c != 0) {
    // q = nearest integer to a / c, so |a - q c| <= |c| / 2
    Int q = mm.a / mm.c;
    Int r = mm.a - q * mm.c;
    if (abs(2 * r) > abs(mm.c)) q += (r > 0) == (mm.c > 0) ? 1 : -1;
    if (!q.fits_slong_p()) throw std::overflow_error("matrixToWord: word too long");
    tokens.emplace_back('T', q.get_si());
    tokens.emplace_back('Y', 1);
    // mm <- Y^-1 T^-q mm
    ModularMatrix next;
    next.a = mm.c;
    next.b = mm.d;
    next.c = -(mm.a - q * mm.c);
    next.d = -(mm.b - q * mm.d);
    mm = next;
  }
  // now mm = +-[[1, b], [0, 1]]
  Int bent = mm.a == 1 ? mm.b : -mm.b;
  if (!bent.fits_slong_p()) throw std::overflow_error("matrixToWord: word too long");
  tokens.emplace_back('T', bent.get_si());

  std::vector<int> st;
  for (const auto& [kind, q] : tokens) {
    if (kind == 'Y') {
      pushLetter(st, true, 0);
    } else if (q >= 0) {
      for (long i = 0; i < q; ++i) {  // T = X Y
        pushLetter(st, false, 1);
        pushLetter(st, true, 0);
      }
    } else {
      for (long i = 0; i < -q; ++i) {  // T^-1 = Y^-1 X^-1 = Y X^2 in PSL
        pushLetter(st, true, 0);
        pushLetter(st, false, 2);
      }
    }
  }
  ModularWord w;
  w.letters = std::move(st);
  ModularMatrix p = wordToMatrix(w);
  if (p == g) return w;
  w.sign = -1;
  if (wordToMatrix(w) != g) throw std::logic_error("matrixToWord: descent failed");
  return w;
}

}  // namespace trigmono
