#include "trigmono/braid.hpp"

#include <deque>
#include <map>
#include <sstream>

namespace trigmono {

namespace {

void pushReduced(std::vector<int>& out, int letter) {
  if (!out.empty() && out.back() == -letter)
    out.pop_back();
  else
    out.push_back(letter);
}

std::vector<int> reduceLetters(const std::vector<int>& raw) {
  std::vector<int> out;
  out.reserve(raw.size());
  for (int l : raw) pushReduced(out, l);
  return out;
}

}  // namespace

FreeWord FreeWord::gen(int i, int exp) {
  if (i < 1 || i > 3) throw std::invalid_argument("FreeWord::gen: index 1..3");
  FreeWord w;
  for (int k = 0; k < (exp >= 0 ? exp : -exp); ++k) w.letters.push_back(exp >= 0 ? i : -i);
  return w;
}

FreeWord FreeWord::fromLetters(std::vector<int> raw) {
  FreeWord w;
  w.letters = reduceLetters(raw);
  return w;
}

FreeWord FreeWord::operator*(const FreeWord& o) const {
  FreeWord r = *this;
  for (int l : o.letters) pushReduced(r.letters, l);
  return r;
}

FreeWord FreeWord::inverse() const {
  FreeWord r;
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) r.letters.push_back(-*it);
  return r;
}

FreeWord FreeWord::pow(int k) const {
  FreeWord base = k >= 0 ? *this : inverse();
  FreeWord r;
  for (int i = 0; i < (k >= 0 ? k : -k); ++i) r = r * base;
  return r;
}

int FreeWord::degree() const {
  int d = 0;
  for (int l : letters) d += l > 0 ? 1 : -1;
  return d;
}

std::string FreeWord::str() const {
  if (letters.empty()) return "1";
  std::ostringstream os;
  size_t i = 0;
  bool first = true;
  while (i < letters.size()) {
    size_t j = i;
    while (j < letters.size() && letters[j] == letters[i]) ++j;
    if (!first) os << ".";
    first = false;
    int g = letters[i] > 0 ? letters[i] : -letters[i];
    long e = static_cast<long>(j - i) * (letters[i] > 0 ? 1 : -1);
    os << "a" << g;
    if (e != 1) os << "^" << e;
    i = j;
  }
  return os.str();
}

BraidWord BraidWord::gen(int i, int exp) {
  if (i < 1 || i > 2) throw std::invalid_argument("BraidWord::gen: index 1..2");
  BraidWord w;
  for (int k = 0; k < (exp >= 0 ? exp : -exp); ++k) w.letters.push_back(exp >= 0 ? i : -i);
  return w;
}

BraidWord BraidWord::operator*(const BraidWord& o) const {
  BraidWord r = *this;
  for (int l : o.letters) pushReduced(r.letters, l);
  return r;
}

BraidWord BraidWord::inverse() const {
  BraidWord r;
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) r.letters.push_back(-*it);
  return r;
}

BraidWord BraidWord::pow(int k) const {
  BraidWord base = k >= 0 ? *this : inverse();
  BraidWord r;
  for (int i = 0; i < (k >= 0 ? k : -k); ++i) r = r * base;
  return r;
}

BraidWord BraidWord::conjugatedBy(const BraidWord& mu) const { return mu.inverse() * *this * mu; }

std::string BraidWord::str() const {
  if (letters.empty()) return "1";
  std::ostringstream os;
  size_t i = 0;
  bool first = true;
  while (i < letters.size()) {
    size_t j = i;
    while (j < letters.size() && letters[j] == letters[i]) ++j;
    if (!first) os << ".";
    first = false;
    int g = letters[i] > 0 ? letters[i] : -letters[i];
    long e = static_cast<long>(j - i) * (letters[i] > 0 ? 1 : -1);
    os << "s" << g;
    if (e != 1) os << "^" << e;
    i = j;
  }
  return os.str();
}

namespace {

// Images of a1, a2, a3 under one Artin generator.
void applyLetter(int letter, std::array<FreeWord, 3>& img) {
  auto sub = [&img](const std::vector<int>& target) {
    FreeWord r;
    for (int l : target) {
      const FreeWord& g = img[static_cast<size_t>((l > 0 ? l : -l) - 1)];
      if (l > 0)
        for (int x : g.letters) pushReduced(r.letters, x);
      else
        for (auto it = g.letters.rbegin(); it != g.letters.rend(); ++it)
          pushReduced(r.letters, -*it);
    }
    return r;
  };
  switch (letter) {
    case 1: {  // s1: a1 -> a1 a2 a1^-1, a2 -> a1
      FreeWord n1 = sub({1, 2, -1});
      img[1] = img[0];
      img[0] = std::move(n1);
      break;
    }
    case -1: {  // a1 -> a2, a2 -> a2^-1 a1 a2
      FreeWord n2 = sub({-2, 1, 2});
      img[0] = img[1];
      img[1] = std::move(n2);
      break;
    }
    case 2: {  // s2: a2 -> a2 a3 a2^-1, a3 -> a2
      FreeWord n2 = sub({2, 3, -2});
      img[2] = img[1];
      img[1] = std::move(n2);
      break;
    }
    case -2: {  // a2 -> a3, a3 -> a3^-1 a2 a3
      FreeWord n3 = sub({-3, 2, 3});
      img[1] = img[2];
      img[2] = std::move(n3);
      break;
    }
    default:
      throw std::logic_error("applyLetter: bad letter");
  }
}

}  // namespace

std::array<FreeWord, 3> artinImages(const BraidWord& b) {
  std::array<FreeWord, 3> img = {FreeWord::gen(1), FreeWord::gen(2), FreeWord::gen(3)};
  // applyLetter composes its letter innermost, so the leftmost letter of
  // the word ends up acting last: (b c)(w) = b(c(w))
  for (int l : b.letters) applyLetter(l, img);
  return img;
}

FreeWord artinApply(const BraidWord& b, const FreeWord& w) {
  std::array<FreeWord, 3> img = artinImages(b);
  FreeWord r;
  for (int l : w.letters) {
    const FreeWord& g = img[static_cast<size_t>((l > 0 ? l : -l) - 1)];
    if (l > 0)
      for (int x : g.letters) pushReduced(r.letters, x);
    else
      for (auto it = g.letters.rbegin(); it != g.letters.rend(); ++it) pushReduced(r.letters, -*it);
  }
  return r;
}

bool braidEqual(const BraidWord& a, const BraidWord& b) {
  return artinImages(a) == artinImages(b);
}

ModularMatrix braidToSL2(const BraidWord& b) {
  static const ModularMatrix m1 = ModularMatrix::T();
  static const ModularMatrix m2{0, 1, -1, 2};
  ModularMatrix r;
  for (int l : b.letters) {
    switch (l) {
      case 1: r = r * m1; break;
      case -1: r = r * m1.inverse(); break;
      case 2: r = r * m2; break;
      case -2: r = r * m2.inverse(); break;
      default: throw std::logic_error("braidToSL2: bad letter");
    }
  }
  return r;
}

Mat2Laurent Mat2Laurent::identity() {
  Mat2Laurent m;
  m.e[0][0] = LaurentPoly::constant(1);
  m.e[1][1] = LaurentPoly::constant(1);
  return m;
}

Mat2Laurent Mat2Laurent::operator*(const Mat2Laurent& o) const {
  Mat2Laurent r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r.e[i][j] = e[i][0] * o.e[0][j] + e[i][1] * o.e[1][j];
  return r;
}

Mat2Laurent Mat2Laurent::operator-(const Mat2Laurent& o) const {
  Mat2Laurent r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r.e[i][j] = e[i][j] - o.e[i][j];
  return r;
}

bool Mat2Laurent::operator==(const Mat2Laurent& o) const {
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      if (!(e[i][j] == o.e[i][j])) return false;
  return true;
}

ModularMatrix Mat2Laurent::evaluateUnit(const Int& x) const {
  ModularMatrix r;
  r.a = e[0][0].evaluate(x);
  r.b = e[0][1].evaluate(x);
  r.c = e[1][0].evaluate(x);
  r.d = e[1][1].evaluate(x);
  return r;
}

Mat2Laurent burau(const BraidWord& b) {
  auto mk = [](int a00lo, Int a00, Int a01, Int a10, int a10e, Int a11, int a11e) {
    Mat2Laurent m;
    m.e[0][0] = LaurentPoly::t(a00lo, std::move(a00));
    m.e[0][1] = LaurentPoly::constant(std::move(a01));
    m.e[1][0] = LaurentPoly::t(a10e, std::move(a10));
    m.e[1][1] = LaurentPoly::t(a11e, std::move(a11));
    return m;
  };
  // s1 -> [[-t, 1], [0, 1]], s2 -> [[1, 0], [t, -t]], and inverses
  static const Mat2Laurent b1 = mk(1, -1, 1, 0, 0, 1, 0);
  static const Mat2Laurent b2 = mk(0, 1, 0, 1, 1, -1, 1);
  static const Mat2Laurent b1i = [] {
    Mat2Laurent m;
    m.e[0][0] = LaurentPoly::t(-1, -1);
    m.e[0][1] = LaurentPoly::t(-1, 1);
    m.e[1][1] = LaurentPoly::constant(1);
    return m;
  }();
  static const Mat2Laurent b2i = [] {
    Mat2Laurent m;
    m.e[0][0] = LaurentPoly::constant(1);
    m.e[1][0] = LaurentPoly::constant(1);
    m.e[1][1] = LaurentPoly::t(-1, -1);
    return m;
  }();
  Mat2Laurent r = Mat2Laurent::identity();
  for (int l : b.letters) {
    switch (l) {
      case 1: r = r * b1; break;
      case -1: r = r * b1i; break;
      case 2: r = r * b2; break;
      case -2: r = r * b2i; break;
      default: throw std::logic_error("burau: bad letter");
    }
  }
  return r;
}

FreeWord chainRelator(const FreeWord& x, const FreeWord& y, int m) {
  if (m < 1) throw std::invalid_argument("chainRelator: m >= 1");
  const int k = m / 2;
  FreeWord xy = x * y;
  FreeWord yx = y * x;
  if (m % 2 == 0) return xy.pow(k) * yx.pow(-k);
  return (xy.pow(k) * x) * (yx.pow(k) * y).inverse();
}

namespace {

std::string pairKey(const FreeWord& a, const FreeWord& b) {
  std::string k;
  k.reserve(a.letters.size() + b.letters.size() + 1);
  for (int l : a.letters) k.push_back(static_cast<char>(l + 8));
  k.push_back('|');
  for (int l : b.letters) k.push_back(static_cast<char>(l + 8));
  return k;
}

}  // namespace

std::optional<BraidWord> braidFromPair(const FreeWord& x, const FreeWord& y, int maxDepth) {
  struct Node {
    FreeWord i1, i2;
    BraidWord mu;
  };
  std::deque<Node> queue;
  std::map<std::string, bool> seen;
  Node start{FreeWord::gen(1), FreeWord::gen(2), {}};
  seen[pairKey(start.i1, start.i2)] = true;
  queue.push_back(start);
  while (!queue.empty()) {
    Node cur = std::move(queue.front());
    queue.pop_front();
    if (cur.i1 == x && cur.i2 == y) return cur.mu;
    if (static_cast<int>(cur.mu.letters.size()) >= maxDepth) continue;
    for (int g : {1, -1, 2, -2}) {
      // applyLetter composes innermost, so this extends mu' = mu . s
      std::array<FreeWord, 3> img = {cur.i1, cur.i2,
                                     (cur.i1 * cur.i2).inverse() * FreeWord::rho()};
      applyLetter(g, img);
      std::string key = pairKey(img[0], img[1]);
      if (seen.emplace(key, true).second) {
        BraidWord mu = cur.mu * BraidWord::gen(g > 0 ? g : -g, g > 0 ? 1 : -1);
        queue.push_back({img[0], img[1], std::move(mu)});
      }
    }
  }
  return std::nullopt;
}

std::optional<BraidWord> conjugatingBraid(const BraidWord& b, const BraidWord& target,
                                          int maxDepth) {
  // want mu with mu^-1 b mu = target
  const auto targetImg = artinImages(target);
  struct Node {
    BraidWord mu;
  };
  std::deque<BraidWord> queue;
  std::map<std::string, bool> seen;
  queue.push_back({});
  {
    auto img = artinImages(b);
    seen[pairKey(img[0], img[1])] = true;
    if (img == targetImg) return BraidWord{};
  }
  while (!queue.empty()) {
    BraidWord mu = std::move(queue.front());
    queue.pop_front();
    if (static_cast<int>(mu.letters.size()) >= maxDepth) continue;
    for (int g : {1, -1, 2, -2}) {
      BraidWord mu2 = mu * BraidWord::gen(g > 0 ? g : -g, g > 0 ? 1 : -1);
      auto img = artinImages(b.conjugatedBy(mu2));
      std::string key = pairKey(img[0], img[1]);
      if (!seen.emplace(key, true).second) continue;
      if (img == targetImg) return mu2;
      queue.push_back(std::move(mu2));
    }
  }
  return std::nullopt;
}

BraidWord nagataTwist(const BraidWord& b) { return b * infinityBraid(1); }

BraidWord infinityBraid(int d) {
  if (d < 0) throw std::invalid_argument("infinityBraid: d >= 0");
  return (BraidWord::s2() * BraidWord::s1()).pow(3 * d);
}

int depthOfPullback(int m, int n) {
  if (m < 1 || n < 1 || n % m != 0) throw std::invalid_argument("depthOfPullback: need m | n");
  return n <= 2 ? 1 : 2;
}

}  // namespace trigmono
