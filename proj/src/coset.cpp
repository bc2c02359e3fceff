#include "trigmono/coset.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <map>

namespace trigmono {

namespace {

// Canonical key of the coset g * G_m(n) in PSL: the matrix mod n with the
// second column reduced modulo multiples of m * (first column), minimized
// lexicographically over the admissible shifts and the global sign.
std::array<int, 4> cosetKey(std::array<int, 4> g, int m, int n) {
  auto normalize = [n](std::array<int, 4> v) {
    for (int& x : v) {
      x %= n;
      if (x < 0) x += n;
    }
    return v;
  };
  g = normalize(g);
  std::array<int, 4> best{n, n, n, n};
  for (int sign = 0; sign < 2; ++sign) {
    std::array<int, 4> h = g;
    if (sign) h = normalize({-g[0], -g[1], -g[2], -g[3]});
    for (int k = 0; k < n / m; ++k) {
      int beta = k * m;
      std::array<int, 4> cand = h;
      cand[1] = (h[1] + beta * h[0]) % n;
      cand[3] = (h[3] + beta * h[2]) % n;
      if (cand < best) best = cand;
    }
  }
  return best;
}

}  // namespace

ModularMatrix CongruenceTable::representative(int edge) const {
  std::vector<int> path;  // generators applied, innermost first
  for (int e = edge; parent[static_cast<size_t>(e)] >= 0; e = parent[static_cast<size_t>(e)])
    path.push_back(gen[static_cast<size_t>(e)]);
  ModularMatrix r;
  for (auto it = path.rbegin(); it != path.rend(); ++it)
    r = (*it == 0 ? ModularMatrix::X() : ModularMatrix::Y()) * r;
  return r;
}

CongruenceTable enumerateCongruence(int m, int n) {
  if (m < 1 || n < 1 || n % m != 0)
    throw std::invalid_argument("enumerateCongruence: need 1 <= m | n");
  CongruenceTable result;
  result.m = m;
  result.n = n;

  std::map<std::array<int, 4>, int> index;
  std::vector<std::array<int, 4>> reps;  // matrices mod n
  std::deque<int> queue;

  auto intern = [&](std::array<int, 4> mat, int par, int g) {
    auto key = cosetKey(mat, m, n);
    auto [it, fresh] = index.emplace(key, static_cast<int>(reps.size()));
    if (fresh) {
      for (int& x : mat) {
        x %= n;
        if (x < 0) x += n;
      }
      reps.push_back(mat);
      result.parent.push_back(par);
      result.gen.push_back(g);
      queue.push_back(it->second);
    }
    return it->second;
  };

  intern({1, 0, 0, 1}, -1, -1);
  std::vector<int> sX, sY;
  while (!queue.empty()) {
    int e = queue.front();
    queue.pop_front();
    const auto v = reps[static_cast<size_t>(e)];
    // X * v and Y * v with X = [[-1,1],[-1,0]], Y = [[0,-1],[1,0]]
    std::array<int, 4> xv{-v[0] + v[2], -v[1] + v[3], -v[0], -v[1]};
    std::array<int, 4> yv{-v[2], -v[3], v[0], v[1]};
    int ix = intern(xv, e, 0);
    int iy = intern(yv, e, 1);
    if (static_cast<int>(sX.size()) <= e) sX.resize(static_cast<size_t>(e) + 1, -1);
    if (static_cast<int>(sY.size()) <= e) sY.resize(static_cast<size_t>(e) + 1, -1);
    sX[static_cast<size_t>(e)] = ix;
    sY[static_cast<size_t>(e)] = iy;
  }
  result.table.size = static_cast<int>(reps.size());
  sX.resize(static_cast<size_t>(result.table.size), -1);
  sY.resize(static_cast<size_t>(result.table.size), -1);
  result.table.sX = std::move(sX);
  result.table.sY = std::move(sY);
  result.table.base = 0;
  return result;
}

namespace {

// Todd-Coxeter over <x, y | x^3, y^2>; columns 0: x, 1: x^-1, 2: y.
class ToddCoxeter {
 public:
  explicit ToddCoxeter(int budget) : budget_(budget) { newCoset(); }

  void run(const std::vector<std::vector<int>>& subgroupGens) {
    for (const auto& w : subgroupGens) scan(0, w);
    for (size_t c = 0; c < tab_.size(); ++c) {
      if (dead(static_cast<int>(c))) continue;
      scan(static_cast<int>(c), relX_);
      scan(static_cast<int>(c), relY_);
      processCoincidences();
    }
  }

  CosetTable extract() const {
    std::vector<int> live;
    std::vector<int> newIndex(tab_.size(), -1);
    for (size_t c = 0; c < tab_.size(); ++c)
      if (!dead(static_cast<int>(c))) {
        newIndex[c] = static_cast<int>(live.size());
        live.push_back(static_cast<int>(c));
      }
    CosetTable t;
    t.size = static_cast<int>(live.size());
    t.sX.resize(live.size());
    t.sY.resize(live.size());
    for (size_t i = 0; i < live.size(); ++i) {
      int c = live[i];
      int cx = tab_[static_cast<size_t>(c)][1];  // left action by X = right by x^-1
      int cy = tab_[static_cast<size_t>(c)][2];
      if (cx < 0 || cy < 0) throw std::logic_error("ToddCoxeter: incomplete table");
      t.sX[i] = newIndex[static_cast<size_t>(find(cx))];
      t.sY[i] = newIndex[static_cast<size_t>(find(cy))];
    }
    t.base = newIndex[static_cast<size_t>(find(0))];
    return t;
  }

 private:
  static constexpr int relX_[3] = {0, 0, 0};  // x x x
  static constexpr int relY_[2] = {2, 2};     // y y

  int budget_;
  std::vector<std::array<int, 3>> tab_;
  std::vector<int> parent_;
  std::deque<std::pair<int, int>> coincidences_;

  bool dead(int c) const { return parent_[static_cast<size_t>(c)] != c; }

  int find(int c) const {
    while (parent_[static_cast<size_t>(c)] != c) c = parent_[static_cast<size_t>(c)];
    return c;
  }

  int newCoset() {
    if (static_cast<int>(tab_.size()) >= budget_)
      throw BudgetExceeded("coset enumeration exceeded the coset budget");
    tab_.push_back({-1, -1, -1});
    parent_.push_back(static_cast<int>(tab_.size()) - 1);
    return static_cast<int>(tab_.size()) - 1;
  }

  static int inverseColumn(int col) { return col == 0 ? 1 : col == 1 ? 0 : 2; }

  int get(int c, int col) const {
    int v = tab_[static_cast<size_t>(c)][static_cast<size_t>(col)];
    return v < 0 ? -1 : find(v);
  }

  void set(int c, int col, int d) {
    int cur = get(c, col);
    if (cur >= 0) {
      if (cur != d) coincidences_.emplace_back(cur, d);
      return;
    }
    tab_[static_cast<size_t>(c)][static_cast<size_t>(col)] = d;
    int back = get(d, inverseColumn(col));
    if (back >= 0) {
      if (back != c) coincidences_.emplace_back(back, c);
    } else {
      tab_[static_cast<size_t>(d)][static_cast<size_t>(inverseColumn(col))] = c;
    }
  }

  void merge(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent_[static_cast<size_t>(b)] = a;
    for (int col = 0; col < 3; ++col) {
      int v = tab_[static_cast<size_t>(b)][static_cast<size_t>(col)];
      if (v >= 0) {
        int cur = get(a, col);
        int vf = find(v);
        if (cur >= 0 && cur != vf)
          coincidences_.emplace_back(cur, vf);
        else if (cur < 0)
          set(a, col, vf);
      }
    }
  }

  void processCoincidences() {
    while (!coincidences_.empty()) {
      auto [a, b] = coincidences_.front();
      coincidences_.pop_front();
      merge(a, b);
    }
  }

  // Scan the word (sequence of columns) at coset c, defining cosets as needed.
  template <typename Seq>
  void scan(int c, const Seq& word) {
    c = find(c);
    int cur = c;
    for (int col : word) {
      int nxt = get(cur, col);
      if (nxt < 0) {
        nxt = newCoset();
        set(cur, col, nxt);
      }
      cur = find(nxt);
    }
    if (cur != find(c)) {
      coincidences_.emplace_back(cur, find(c));
      processCoincidences();
    }
  }
};

std::vector<int> wordToColumns(const ModularWord& w) {
  std::vector<int> cols;
  for (int l : w.letters) {
    if (l == 0)
      cols.push_back(2);
    else if (l == 1)
      cols.push_back(0);
    else {  // X^2 = x^-1 in PSL
      cols.push_back(1);
    }
  }
  return cols;
}

}  // namespace

CosetTable enumerateSubgroup(const std::vector<ModularWord>& gens, int maxCosets) {
  if (maxCosets < 1) throw std::invalid_argument("enumerateSubgroup: budget >= 1");
  std::vector<std::vector<int>> colWords;
  colWords.reserve(gens.size());
  for (const auto& g : gens) colWords.push_back(wordToColumns(g));
  // iterate scanning until stable; relator scans may create cosets
  ToddCoxeter tc(maxCosets);
  tc.run(colWords);
  return tc.extract();
}

namespace {

// Canonical encoding by breadth-first relabeling from the given start edge.
std::vector<int> canonicalEncoding(const CosetTable& t, int start) {
  std::vector<int> label(static_cast<size_t>(t.size), -1);
  std::vector<int> order;
  order.reserve(static_cast<size_t>(t.size));
  label[static_cast<size_t>(start)] = 0;
  order.push_back(start);
  for (size_t i = 0; i < order.size(); ++i) {
    int e = order[i];
    for (int nxt : {t.sX[static_cast<size_t>(e)], t.sY[static_cast<size_t>(e)]}) {
      if (label[static_cast<size_t>(nxt)] < 0) {
        label[static_cast<size_t>(nxt)] = static_cast<int>(order.size());
        order.push_back(nxt);
      }
    }
  }
  std::vector<int> enc;
  enc.reserve(2 * order.size());
  for (int e : order) {
    enc.push_back(label[static_cast<size_t>(t.sX[static_cast<size_t>(e)])]);
    enc.push_back(label[static_cast<size_t>(t.sY[static_cast<size_t>(e)])]);
  }
  return enc;
}

}  // namespace

bool tablesIsomorphic(const CosetTable& a, const CosetTable& b) {
  if (a.size != b.size) return false;
  if (a.size == 0) return true;
  std::vector<int> encA = canonicalEncoding(a, a.base);
  for (int start = 0; start < b.size; ++start)
    if (canonicalEncoding(b, start) == encA) return true;
  return false;
}

std::vector<ModularMatrix> schreierGenerators(const CongruenceTable& t) {
  std::vector<ModularMatrix> gens;
  std::vector<ModularMatrix> reps;
  reps.reserve(static_cast<size_t>(t.table.size));
  for (int e = 0; e < t.table.size; ++e) reps.push_back(t.representative(e));
  for (int e = 0; e < t.table.size; ++e) {
    for (int g = 0; g < 2; ++g) {
      int img = g == 0 ? t.table.sX[static_cast<size_t>(e)] : t.table.sY[static_cast<size_t>(e)];
      ModularMatrix s = g == 0 ? ModularMatrix::X() : ModularMatrix::Y();
      ModularMatrix cand = reps[static_cast<size_t>(img)].inverse() * s * reps[static_cast<size_t>(e)];
      if (!congruenceMemberPSL(cand, t.m, t.n))
        throw std::logic_error("schreierGenerators: representative mismatch");
      if (!cand.equalsUpToSign(ModularMatrix::identity())) gens.push_back(cand);
    }
  }
  return gens;
}

std::vector<int> edgeAction(const CosetTable& t, const ModularWord& g) {
  std::vector<int> perm(static_cast<size_t>(t.size));
  for (int e = 0; e < t.size; ++e) perm[static_cast<size_t>(e)] = e;
  // leftmost letter acts last
  for (auto it = g.letters.rbegin(); it != g.letters.rend(); ++it) {
    int l = *it;
    for (int e = 0; e < t.size; ++e) {
      int& slot = perm[static_cast<size_t>(e)];
      if (l == 0)
        slot = t.sY[static_cast<size_t>(slot)];
      else if (l == 1)
        slot = t.sX[static_cast<size_t>(slot)];
      else
        slot = t.sX[static_cast<size_t>(t.sX[static_cast<size_t>(slot)])];
    }
  }
  return perm;
}

}  // namespace trigmono
