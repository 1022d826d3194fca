#include "lieck/root_system.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <limits>
#include <numeric>
#include <set>
#include <sstream>

namespace lieck {

std::string format_vec(const RootVec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + ")";
}

IntMatrix gram_matrix(const CartanType& t) {
  t.validate();
  const int l = t.rank;
  IntMatrix g(l, std::vector<int>(l, 0));
  auto link = [&](int i, int j, int v) { g[i][j] = g[j][i] = v; };
  switch (t.family) {
    case Family::A:
      for (int i = 0; i < l; ++i) g[i][i] = 2;
      for (int i = 0; i + 1 < l; ++i) link(i, i + 1, -1);
      break;
    case Family::B:
      for (int i = 0; i < l; ++i) g[i][i] = 4;
      g[l - 1][l - 1] = 2;
      for (int i = 0; i + 1 < l; ++i) link(i, i + 1, -2);
      break;
    case Family::C:
      for (int i = 0; i < l; ++i) g[i][i] = 2;
      g[l - 1][l - 1] = 4;
      for (int i = 0; i + 2 < l; ++i) link(i, i + 1, -1);
      link(l - 2, l - 1, -2);
      break;
    case Family::D:
      for (int i = 0; i < l; ++i) g[i][i] = 2;
      for (int i = 0; i + 2 < l; ++i) link(i, i + 1, -1);
      link(l - 3, l - 1, -1);
      break;
    case Family::E:
      for (int i = 0; i < l; ++i) g[i][i] = 2;
      // Bourbaki: chain 1-3-4-5-...-l, node 2 hangs off node 4
      link(0, 2, -1);
      link(1, 3, -1);
      for (int i = 2; i + 1 < l; ++i) link(i, i + 1, -1);
      break;
    case Family::F:
      g[0][0] = g[1][1] = 4;
      g[2][2] = g[3][3] = 2;
      link(0, 1, -2);
      link(1, 2, -2);
      link(2, 3, -1);
      break;
    case Family::G:
      g[0][0] = 2;
      g[1][1] = 6;
      link(0, 1, -3);
      break;
  }
  return g;
}

std::int64_t RootSystem::inner(const RootVec& x, const RootVec& y) const {
  std::int64_t s = 0;
  for (int i = 0; i < rank(); ++i) {
    if (!x[i]) continue;
    for (int j = 0; j < rank(); ++j) s += static_cast<std::int64_t>(x[i]) * gram[i][j] * y[j];
  }
  return s;
}

bool RootSystem::contains(const RootVec& v) const {
  return std::find(all_roots.begin(), all_roots.end(), v) != all_roots.end();
}

std::vector<RootVec> RootSystem::positive_roots() const {
  std::vector<RootVec> out;
  for (const auto& r : all_roots)
    if (std::all_of(r.begin(), r.end(), [](int c) { return c >= 0; })) out.push_back(r);
  return out;
}

int height(const RootVec& v) { return std::accumulate(v.begin(), v.end(), 0); }

bool dominates(const RootVec& x, const RootVec& y) {
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] < y[i]) return false;
  return true;
}

RootSystem build_root_system(const CartanType& t) {
  t.validate();
  RootSystem rs;
  rs.cartan_type = t;
  rs.gram = gram_matrix(t);
  const int l = t.rank;
  rs.cartan_matrix.assign(l, std::vector<int>(l, 0));
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j) rs.cartan_matrix[i][j] = 2 * rs.gram[i][j] / rs.gram[j][j];
  for (int i = 0; i < l; ++i) {
    RootVec e(l, 0);
    e[i] = 1;
    rs.simple_roots.push_back(e);
  }

  std::set<RootVec> seen(rs.simple_roots.begin(), rs.simple_roots.end());
  std::deque<RootVec> queue(rs.simple_roots.begin(), rs.simple_roots.end());
  while (!queue.empty()) {
    RootVec beta = queue.front();
    queue.pop_front();
    for (int i = 0; i < l; ++i) {
      std::int64_t pairing = 0;
      for (int j = 0; j < l; ++j) pairing += static_cast<std::int64_t>(beta[j]) * rs.gram[j][i];
      pairing = 2 * pairing / rs.gram[i][i];
      if (pairing == 0) continue;
      RootVec img = beta;
      img[i] -= static_cast<int>(pairing);
      if (seen.insert(img).second) queue.push_back(img);
    }
  }

  std::vector<RootVec> pos;
  for (const auto& r : seen) {
    bool all_nonneg = std::all_of(r.begin(), r.end(), [](int c) { return c >= 0; });
    bool all_nonpos = std::all_of(r.begin(), r.end(), [](int c) { return c <= 0; });
    if (!all_nonneg && !all_nonpos)
      throw InternalError("mixed-sign root " + format_vec(r) + " in " + t.to_string());
    if (all_nonneg) pos.push_back(r);
  }
  std::sort(pos.begin(), pos.end(), [](const RootVec& x, const RootVec& y) {
    int hx = height(x), hy = height(y);
    if (hx != hy) return hx < hy;
    return x > y;
  });
  rs.all_roots = pos;
  for (const auto& r : pos) {
    RootVec neg = r;
    for (int& c : neg) c = -c;
    rs.all_roots.push_back(neg);
  }
  if (rs.all_roots.size() != seen.size())
    throw InternalError("root closure of " + t.to_string() + " is not negation-closed");
  return rs;
}

RootVec highest_root(const RootSystem& rs) {
  const RootVec* best = &rs.all_roots.front();
  for (const auto& r : rs.all_roots)
    if (height(r) > height(*best)) best = &r;
  return *best;
}

std::vector<int> ExtendedDiagram::neighbours(int node) const {
  std::vector<int> out;
  for (const auto& b : adjacency) {
    if (b.i == node) out.push_back(b.j);
    if (b.j == node) out.push_back(b.i);
  }
  std::sort(out.begin(), out.end());
  return out;
}

ExtendedDiagram extended_diagram(const RootSystem& rs) {
  ExtendedDiagram d;
  d.base = rs;
  RootVec theta = highest_root(rs);
  d.lowest_root = theta;
  for (int& c : d.lowest_root) c = -c;
  d.marks.push_back(1);
  d.marks.insert(d.marks.end(), theta.begin(), theta.end());

  std::vector<RootVec> nodes{d.lowest_root};
  nodes.insert(nodes.end(), rs.simple_roots.begin(), rs.simple_roots.end());
  const int m = static_cast<int>(nodes.size());
  d.cartan_matrix.assign(m, std::vector<int>(m, 0));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      d.cartan_matrix[i][j] =
          static_cast<int>(2 * rs.inner(nodes[i], nodes[j]) / rs.inner(nodes[j], nodes[j]));
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      int mult = d.cartan_matrix[i][j] * d.cartan_matrix[j][i];
      if (mult) d.adjacency.push_back({i, j, mult});
    }
  return d;
}

std::string diagram_text(const ExtendedDiagram& d) {
  std::ostringstream os;
  os << "extended diagram of " << d.base.cartan_type.to_string() << "\n";
  for (int i = 0; i < d.node_count(); ++i) {
    os << "  node " << i << (i == 0 ? " (affine)" : "") << " mark " << d.marks[i];
    if (i > 0) os << " |alpha|^2 " << d.base.gram[i - 1][i - 1];
    os << "\n";
  }
  for (const auto& b : d.adjacency)
    os << "  " << b.i << " -- " << b.j << " multiplicity " << b.multiplicity << "\n";
  return os.str();
}

std::string diagram_dot(const ExtendedDiagram& d) {
  std::ostringstream os;
  os << "graph \"" << d.base.cartan_type.to_string() << "_ext\" {\n";
  for (int i = 0; i < d.node_count(); ++i)
    os << "  n" << i << " [label=\"" << (i == 0 ? "a0" : "a" + std::to_string(i)) << " ("
       << d.marks[i] << ")\"" << (i == 0 ? ", shape=box" : "") << "];\n";
  for (const auto& b : d.adjacency)
    os << "  n" << b.i << " -- n" << b.j << " [label=\"" << b.multiplicity << "\"];\n";
  os << "}\n";
  return os.str();
}

BigInt weyl_dim(const RootSystem& rs, const std::vector<int>& lambda) {
  const int l = rs.rank();
  if (static_cast<int>(lambda.size()) != l)
    throw InvalidArgument("weight has " + std::to_string(lambda.size()) + " coordinates, " +
                          rs.cartan_type.to_string() + " needs " + std::to_string(l));
  for (int c : lambda)
    if (c < 0) throw InvalidArgument("weight coordinates must be non-negative");
  BigInt num = 1, den = 1;
  for (const auto& alpha : rs.positive_roots()) {
    // (lambda+rho, alpha) and (rho, alpha), both scaled by 2
    std::int64_t a = 0, b = 0;
    for (int i = 0; i < l; ++i) {
      a += static_cast<std::int64_t>(lambda[i] + 1) * alpha[i] * rs.gram[i][i];
      b += static_cast<std::int64_t>(alpha[i]) * rs.gram[i][i];
    }
    num *= a;
    den *= b;
  }
  if (num % den != 0)
    throw InternalError("Weyl dimension quotient not integral for " + rs.cartan_type.to_string());
  return num / den;
}

BigInt weyl_dim(const CartanType& t, const std::vector<int>& lambda) {
  return weyl_dim(build_root_system(t), lambda);
}

RootData root_data(const RootSystem& rs) { return {rs.all_roots, rs.gram}; }

RootData direct_sum(const RootData& x, const RootData& y) {
  const int dx = x.dimension(), dy = y.dimension();
  RootData out;
  out.gram.assign(dx + dy, std::vector<int>(dx + dy, 0));
  for (int i = 0; i < dx; ++i)
    for (int j = 0; j < dx; ++j) out.gram[i][j] = x.gram[i][j];
  for (int i = 0; i < dy; ++i)
    for (int j = 0; j < dy; ++j) out.gram[dx + i][dx + j] = y.gram[i][j];
  for (const auto& r : x.roots) {
    RootVec v(r);
    v.resize(dx + dy, 0);
    out.roots.push_back(v);
  }
  for (const auto& r : y.roots) {
    RootVec v(dx, 0);
    v.insert(v.end(), r.begin(), r.end());
    out.roots.push_back(v);
  }
  return out;
}

namespace {

std::int64_t gram_inner(const IntMatrix& g, const RootVec& x, const RootVec& y) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < y.size(); ++j) s += static_cast<std::int64_t>(x[i]) * g[i][j] * y[j];
  return s;
}

}  // namespace

bool is_indecomposable(const RootData& rd) {
  const std::size_t n = rd.roots.size();
  if (n == 0) return false;
  std::vector<int> comp(n, -1);
  std::vector<std::size_t> stack{0};
  comp[0] = 0;
  std::size_t reached = 1;
  while (!stack.empty()) {
    std::size_t i = stack.back();
    stack.pop_back();
    for (std::size_t j = 0; j < n; ++j) {
      if (comp[j] >= 0 || gram_inner(rd.gram, rd.roots[i], rd.roots[j]) == 0) continue;
      comp[j] = 0;
      ++reached;
      stack.push_back(j);
    }
  }
  return reached == n;
}

int vector_rank(const std::vector<RootVec>& vs) {
  if (vs.empty()) return 0;
  std::vector<std::vector<std::int64_t>> m;
  for (const auto& v : vs) m.emplace_back(v.begin(), v.end());
  const std::size_t cols = m[0].size();
  int rank = 0;
  for (std::size_t c = 0; c < cols && rank < static_cast<int>(m.size()); ++c) {
    std::size_t piv = rank;
    while (piv < m.size() && m[piv][c] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[rank]);
    for (std::size_t r = rank + 1; r < m.size(); ++r) {
      if (m[r][c] == 0) continue;
      std::int64_t f = m[r][c], p = m[rank][c];
      std::int64_t g = 0;
      for (std::size_t k = 0; k < cols; ++k) {
        m[r][k] = m[r][k] * p - m[rank][k] * f;
        g = std::gcd(g, m[r][k]);
      }
      if (g > 1)
        for (auto& x : m[r]) x /= g;
    }
    ++rank;
  }
  return rank;
}

bool two_hyperplane_cover_check(const RootData& rd) {
  const int dim = rd.dimension();
  if (dim < 1 || rd.roots.empty()) throw InvalidArgument("empty root data");
  if (vector_rank(rd.roots) != dim)
    throw InvalidArgument("roots do not span the ambient space");
  if (!is_indecomposable(rd))
    throw InvalidArgument("decomposable root system: covering lemma hypotheses violated");
  if (dim == 1) return false;

  const std::size_t n = rd.roots.size();
  std::set<std::vector<bool>> visited;
  bool found = false;
  std::vector<RootVec> basis;

  // S = Delta cap span(T) for independent T with |T| <= dim-1
  std::function<void()> dfs = [&]() {
    if (found) return;
    std::vector<bool> in_span(n, false);
    std::vector<RootVec> complement;
    for (std::size_t i = 0; i < n; ++i) {
      auto probe = basis;
      probe.push_back(rd.roots[i]);
      in_span[i] = vector_rank(probe) == static_cast<int>(basis.size());
      if (!in_span[i]) complement.push_back(rd.roots[i]);
    }
    if (!visited.insert(in_span).second) return;
    if (vector_rank(complement) < dim) {
      found = true;
      return;
    }
    if (static_cast<int>(basis.size()) + 1 >= dim) return;
    for (std::size_t i = 0; i < n; ++i) {
      if (in_span[i]) continue;
      basis.push_back(rd.roots[i]);
      dfs();
      basis.pop_back();
      if (found) return;
    }
  };
  dfs();
  return found;
}

bool two_hyperplane_cover_check(const RootSystem& rs) {
  return two_hyperplane_cover_check(root_data(rs));
}

std::int64_t to_int64(const BigInt& v) {
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
    throw std::overflow_error("integer " + v.str() + " exceeds 64 bits");
  return static_cast<std::int64_t>(v);
}

std::int64_t to_int64(const Rational& q) {
  if (!is_integral(q)) throw std::domain_error("value " + to_string(q) + " is not integral");
  return to_int64(numerator(q));
}

}  // namespace lieck
