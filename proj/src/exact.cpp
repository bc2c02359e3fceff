#include "trigmono/exact.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace trigmono {

IntMat IntMat::identity(int n) {
  IntMat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMat IntMat::operator*(const IntMat& o) const {
  if (cols != o.rows) throw std::invalid_argument("IntMat: size mismatch");
  IntMat r(rows, o.cols);
  for (int i = 0; i < rows; ++i)
    for (int k = 0; k < cols; ++k) {
      const Int& v = at(i, k);
      if (v == 0) continue;
      for (int j = 0; j < o.cols; ++j) r.at(i, j) += v * o.at(k, j);
    }
  return r;
}

namespace {

void swapRows(IntMat& m, int i, int j) {
  for (int k = 0; k < m.cols; ++k) std::swap(m.at(i, k), m.at(j, k));
}

void swapCols(IntMat& m, int i, int j) {
  for (int k = 0; k < m.rows; ++k) std::swap(m.at(k, i), m.at(k, j));
}

// Location of the entry of minimal nonzero absolute value in m[s.., s..].
bool findPivot(const IntMat& m, int s, int& pi, int& pj) {
  bool found = false;
  Int best;
  for (int i = s; i < m.rows; ++i)
    for (int j = s; j < m.cols; ++j) {
      if (m.at(i, j) == 0) continue;
      Int v = abs(m.at(i, j));
      if (!found || v < best) {
        best = v;
        pi = i;
        pj = j;
        found = true;
      }
    }
  return found;
}

}  // namespace

std::vector<Int> smithNormalForm(IntMat m) {
  const int nmin = std::min(m.rows, m.cols);
  std::vector<Int> diag;
  for (int s = 0; s < nmin; ++s) {
    int pi, pj;
    if (!findPivot(m, s, pi, pj)) break;
    swapRows(m, s, pi);
    swapCols(m, s, pj);
    for (;;) {
      bool clean = true;
      for (int i = s + 1; i < m.rows; ++i) {
        if (m.at(i, s) == 0) continue;
        Int f = m.at(i, s) / m.at(s, s);
        for (int k = s; k < m.cols; ++k) m.at(i, k) -= f * m.at(s, k);
        if (m.at(i, s) != 0) {  // remainder smaller than pivot: swap up
          swapRows(m, s, i);
          clean = false;
        }
      }
      if (!clean) continue;
      for (int j = s + 1; j < m.cols; ++j) {
        if (m.at(s, j) == 0) continue;
        Int f = m.at(s, j) / m.at(s, s);
        for (int k = s; k < m.rows; ++k) m.at(k, j) -= f * m.at(k, s);
        if (m.at(s, j) != 0) {
          swapCols(m, s, j);
          clean = false;
        }
      }
      if (clean) break;
    }
    // pivot must divide the remaining block
    for (;;) {
      int bi = -1;
      for (int i = s + 1; i < m.rows && bi < 0; ++i)
        for (int j = s + 1; j < m.cols; ++j)
          if (m.at(i, j) % m.at(s, s) != 0) {
            bi = i;
            break;
          }
      if (bi < 0) break;
      for (int k = s; k < m.cols; ++k) m.at(s, k) += m.at(bi, k);
      // re-clear the row/column around the pivot
      for (;;) {
        bool clean = true;
        for (int j = s + 1; j < m.cols; ++j) {
          if (m.at(s, j) == 0) continue;
          Int f = m.at(s, j) / m.at(s, s);
          for (int k = s; k < m.rows; ++k) m.at(k, j) -= f * m.at(k, s);
          if (m.at(s, j) != 0) {
            swapCols(m, s, j);
            clean = false;
          }
        }
        for (int i = s + 1; i < m.rows; ++i) {
          if (m.at(i, s) == 0) continue;
          Int f = m.at(i, s) / m.at(s, s);
          for (int k = s; k < m.cols; ++k) m.at(i, k) -= f * m.at(s, k);
          if (m.at(i, s) != 0) {
            swapRows(m, s, i);
            clean = false;
          }
        }
        if (clean) break;
      }
    }
    diag.push_back(abs(m.at(s, s)));
  }
  return diag;
}

Int FinAbGroup::order() const {
  if (free_rank != 0) throw std::logic_error("FinAbGroup::order: infinite group");
  Int o = 1;
  for (const Int& d : invariant_factors) o *= d;
  return o;
}

std::string FinAbGroup::str() const {
  if (trivial()) return "0";
  std::ostringstream os;
  bool first = true;
  if (free_rank == 1) {
    os << "Z";
    first = false;
  } else if (free_rank > 1) {
    os << "Z^" << free_rank;
    first = false;
  }
  for (const Int& d : invariant_factors) {
    if (!first) os << "+";
    os << "Z/" << d.get_str();
    first = false;
  }
  return os.str();
}

FinAbGroup cokernel(const IntMat& relations, int ngens) {
  if (relations.cols != ngens && relations.rows != 0)
    throw std::invalid_argument("cokernel: column count mismatch");
  std::vector<Int> inv = smithNormalForm(relations);
  FinAbGroup g;
  g.free_rank = ngens - static_cast<int>(inv.size());
  for (Int& d : inv)
    if (d > 1) g.invariant_factors.push_back(d);
  return g;
}

Lattice2 Lattice2::full() {
  Lattice2 l;
  l.rank = 2;
  l.p = 1;
  l.q = 0;
  l.s = 1;
  return l;
}

Lattice2 Lattice2::fromColumns(const std::vector<std::pair<Int, Int>>& cols) {
  // column elimination to [[p, 0], [q, s]]
  std::vector<std::pair<Int, Int>> v;
  for (const auto& c : cols)
    if (c.first != 0 || c.second != 0) v.push_back(c);
  Lattice2 l;
  if (v.empty()) return l;

  // reduce first coordinates to a single nonzero one by gcd steps
  for (;;) {
    int k = -1;
    for (size_t i = 0; i < v.size(); ++i)
      if (v[i].first != 0 && (k < 0 || abs(v[i].first) < abs(v[k].first))) k = static_cast<int>(i);
    if (k < 0) break;
    bool done = true;
    for (size_t i = 0; i < v.size(); ++i) {
      if (static_cast<int>(i) == k || v[i].first == 0) continue;
      Int f = v[i].first / v[k].first;
      v[i].first -= f * v[k].first;
      v[i].second -= f * v[k].second;
      if (v[i].first != 0) done = false;
    }
    if (done) {
      std::swap(v[0], v[static_cast<size_t>(k)]);
      break;
    }
  }

  if (v[0].first == 0) {  // all first coordinates zero
    Int g = 0;
    for (const auto& c : v) g = gcd(g, c.second);
    l.rank = 1;
    l.p = 0;
    l.q = g;
    return l;
  }
  Int s = 0;
  for (size_t i = 1; i < v.size(); ++i) s = gcd(s, v[i].second);
  if (v[0].first < 0) {
    v[0].first = -v[0].first;
    v[0].second = -v[0].second;
  }
  if (s == 0) {
    l.rank = 1;
    l.p = v[0].first;
    l.q = v[0].second;
    return l;
  }
  l.rank = 2;
  l.p = v[0].first;
  l.s = abs(s);
  Int q = v[0].second % l.s;
  if (q < 0) q += l.s;
  l.q = q;
  return l;
}

bool Lattice2::contains(const Int& x, const Int& y) const {
  if (rank == 0) return x == 0 && y == 0;
  if (rank == 1) {
    if (p == 0) return x == 0 && q != 0 && y % q == 0;
    if (x % p != 0) return false;
    return y == (x / p) * q;
  }
  if (x % p != 0) return false;
  Int r = y - (x / p) * q;
  return r % s == 0;
}

Lattice2 latticeSum(const std::vector<Lattice2>& ls) {
  std::vector<std::pair<Int, Int>> cols;
  for (const Lattice2& l : ls) {
    if (l.rank >= 1) cols.emplace_back(l.p, l.q);
    if (l.rank == 2) cols.emplace_back(0, l.s);
  }
  return Lattice2::fromColumns(cols);
}

FinAbGroup quotientOf(const Lattice2& l) {
  IntMat m(2, l.rank);
  if (l.rank >= 1) {
    m.at(0, 0) = l.p;
    m.at(1, 0) = l.q;
  }
  if (l.rank == 2) {
    m.at(0, 1) = 0;
    m.at(1, 1) = l.s;
  }
  // columns generate the lattice; Smith form is transpose-invariant
  IntMat rows(l.rank, 2);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < l.rank; ++j) rows.at(j, i) = m.at(i, j);
  return cokernel(rows, 2);
}

LaurentPoly LaurentPoly::constant(Int v) {
  LaurentPoly p;
  if (v != 0) p.c[0] = std::move(v);
  return p;
}

LaurentPoly LaurentPoly::t(int exp, Int coeff) {
  LaurentPoly p;
  if (coeff != 0) p.c[exp] = std::move(coeff);
  return p;
}

Int LaurentPoly::coeff(int e) const {
  auto it = c.find(e);
  return it == c.end() ? Int(0) : it->second;
}

int LaurentPoly::lowExp() const { return c.empty() ? 0 : c.begin()->first; }
int LaurentPoly::highExp() const { return c.empty() ? 0 : c.rbegin()->first; }

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  for (const auto& [e, v] : o.c) {
    Int& slot = r.c[e];
    slot += v;
    if (slot == 0) r.c.erase(e);
  }
  return r;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r;
  for (const auto& [e, v] : c) r.c[e] = -v;
  return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const { return *this + (-o); }

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  LaurentPoly r;
  for (const auto& [e1, v1] : c)
    for (const auto& [e2, v2] : o.c) {
      Int& slot = r.c[e1 + e2];
      slot += v1 * v2;
      if (slot == 0) r.c.erase(e1 + e2);
    }
  return r;
}

Int LaurentPoly::evaluate(const Int& x) const {
  if (!c.empty() && lowExp() < 0 && x != 1 && x != -1)
    throw std::invalid_argument("LaurentPoly::evaluate: negative exponent");
  Int r = 0;
  for (const auto& [e, v] : c) {
    if (e >= 0) {
      Int p;
      mpz_pow_ui(p.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(e));
      r += v * p;
    } else {
      // x = +-1 here
      r += (x == -1 && (e % 2 != 0)) ? -v : v;
    }
  }
  return r;
}

LaurentPoly LaurentPoly::normalized() const {
  if (c.empty()) return {};
  LaurentPoly r;
  const int lo = lowExp();
  const bool flip = c.rbegin()->second < 0;
  for (const auto& [e, v] : c) r.c[e - lo] = flip ? -v : v;
  return r;
}

std::string LaurentPoly::str() const {
  if (c.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    const auto& [e, v] = *it;
    Int av = abs(v);
    if (first) {
      if (v < 0) os << "-";
      first = false;
    } else {
      os << (v < 0 ? "-" : "+");
    }
    if (av != 1 || e == 0) os << av.get_str();
    if (e != 0) {
      if (av != 1) os << "*";
      os << "t";
      if (e != 1) os << "^" << e;
    }
  }
  return os.str();
}

namespace {

Int content(const LaurentPoly& p) {
  Int g = 0;
  for (const auto& [e, v] : p.c) g = gcd(g, v);
  return g;
}

LaurentPoly primitivePart(const LaurentPoly& p) {
  if (p.isZero()) return p;
  Int g = content(p);
  LaurentPoly r;
  const int lo = p.lowExp();
  for (const auto& [e, v] : p.c) r.c[e - lo] = v / g;
  return r;
}

// Pseudo-remainder of a by b (leading coefficients, exponents >= 0 assumed).
LaurentPoly pseudoRem(LaurentPoly a, const LaurentPoly& b) {
  const int db = b.highExp();
  const Int lb = b.coeff(db);
  while (!a.isZero() && a.highExp() >= db) {
    const int da = a.highExp();
    const Int la = a.coeff(da);
    LaurentPoly scaled;
    for (const auto& [e, v] : a.c) scaled.c[e] = v * lb;
    LaurentPoly sub;
    for (const auto& [e, v] : b.c) {
      Int w = v * la;
      if (w != 0) sub.c[e + da - db] = std::move(w);
    }
    a = scaled - sub;
  }
  return a;
}

LaurentPoly gcd2(LaurentPoly a, LaurentPoly b) {
  a = primitivePart(a);
  b = primitivePart(b);
  if (a.isZero()) return b;
  if (b.isZero()) return a;
  while (!b.isZero()) {
    LaurentPoly r = primitivePart(pseudoRem(a, b));
    a = b;
    b = r;
  }
  return a;
}

}  // namespace

LaurentPoly laurentGcd(const std::vector<LaurentPoly>& ps) {
  if (ps.empty()) throw std::invalid_argument("laurentGcd: empty list");
  LaurentPoly g;
  for (const LaurentPoly& p : ps) g = gcd2(g, p);
  return g.normalized();
}

bool laurentDivides(const LaurentPoly& d, const LaurentPoly& p) {
  if (d.isZero()) throw std::invalid_argument("laurentDivides: zero divisor");
  if (p.isZero()) return true;
  return pseudoRem(primitivePart(p), primitivePart(d)).isZero();
}

LaurentPoly laurentExactDiv(const LaurentPoly& p, const LaurentPoly& d) {
  if (d.isZero()) throw std::invalid_argument("laurentExactDiv: zero divisor");
  if (p.isZero()) return {};
  // shift both to lowest exponent 0, divide as ordinary polynomials
  LaurentPoly rem, dn;
  for (const auto& [e, v] : p.c) rem.c[e - p.lowExp()] = v;
  for (const auto& [e, v] : d.c) dn.c[e - d.lowExp()] = v;
  const int dd = dn.highExp();
  const Int lead = dn.coeff(dd);
  LaurentPoly quot;
  while (!rem.isZero() && rem.highExp() >= dd) {
    const int e = rem.highExp();
    Int q = rem.coeff(e) / lead;
    if (q * lead != rem.coeff(e)) throw std::domain_error("laurentExactDiv: not divisible");
    LaurentPoly term = LaurentPoly::t(e - dd, q);
    quot = quot + term;
    rem = rem - term * dn;
  }
  if (!rem.isZero()) throw std::domain_error("laurentExactDiv: not divisible");
  return quot * LaurentPoly::t(p.lowExp() - d.lowExp());
}

LaurentPoly cyclotomic(int m) {
  if (m < 1) throw std::invalid_argument("cyclotomic: m >= 1 required");
  LaurentPoly num = LaurentPoly::t(m) - LaurentPoly::constant(1);
  for (int d = 1; d < m; ++d)
    if (m % d == 0) num = laurentExactDiv(num, cyclotomic(d));
  return num;
}

}  // namespace trigmono
