#include "khoform/oracle.hpp"

#include <algorithm>
#include <bit>
#include <boost/multiprecision/cpp_int.hpp>
#include <set>
#include <sstream>
#include <unordered_map>

#include "json.hpp"

namespace khoform {

using BigInt = boost::multiprecision::cpp_int;

std::size_t IndependenceComplex::face_count() const {
  std::size_t n = 0;
  for (const auto& f : faces) n += f.size();
  return n;
}

long long IndependenceComplex::reduced_euler_characteristic() const {
  long long chi = 0;
  for (std::size_t k = 0; k < faces.size(); ++k) {
    long long sign = (k % 2 == 0) ? -1 : 1;  // faces[k] has dimension k-1
    chi += sign * static_cast<long long>(faces[k].size());
  }
  return chi;
}

IndependenceComplex independence_complex(const Graph& g, std::size_t face_budget) {
  IndependenceComplex k;
  k.vertices = g.vertices();
  const std::size_t n = k.vertices.size();
  if (n > 64) throw BudgetExceeded("independence complex limited to 64 vertices");
  std::vector<std::uint64_t> non_adjacent(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::uint64_t mask = 0;
    for (std::size_t j = 0; j < n; ++j)
      if (j != i && !g.adjacent(k.vertices[i], k.vertices[j])) mask |= std::uint64_t{1} << j;
    if (g.has_loop(k.vertices[i])) mask = 0;
    non_adjacent[i] = mask;
  }
  std::uint64_t usable = 0;
  for (std::size_t i = 0; i < n; ++i)
    if (!g.has_loop(k.vertices[i])) usable |= std::uint64_t{1} << i;

  std::size_t count = 0;
  // iterative DFS over (face, candidates, size)
  struct Frame {
    std::uint64_t face, cand;
    int size;
  };
  std::vector<Frame> stack{{0, usable, 0}};
  while (!stack.empty()) {
    Frame f = stack.back();
    stack.pop_back();
    if (++count > face_budget)
      throw BudgetExceeded("independence complex exceeds " + std::to_string(face_budget) +
                           " faces");
    if (k.faces.size() <= static_cast<std::size_t>(f.size)) k.faces.resize(f.size + 1);
    k.faces[f.size].push_back(f.face);
    std::uint64_t cand = f.cand;
    while (cand) {
      int i = std::countr_zero(cand);
      cand &= cand - 1;
      std::uint64_t above = (i == 63) ? 0 : ~((std::uint64_t{2} << i) - 1);
      stack.push_back({f.face | (std::uint64_t{1} << i), f.cand & above & non_adjacent[i],
                       f.size + 1});
    }
  }
  for (auto& layer : k.faces) std::sort(layer.begin(), layer.end());
  return k;
}

namespace {

struct Overflow {};

long long checked_mul(long long a, long long b) {
  long long r;
  if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
  return r;
}
long long checked_sub(long long a, long long b) {
  long long r;
  if (__builtin_sub_overflow(a, b, &r)) throw Overflow{};
  return r;
}
BigInt checked_mul(const BigInt& a, const BigInt& b) { return a * b; }
BigInt checked_sub(const BigInt& a, const BigInt& b) { return a - b; }

BigInt to_big(long long v) { return BigInt(v); }
BigInt to_big(const BigInt& v) { return v; }

bool is_unit(long long v) { return v == 1 || v == -1; }
bool is_unit(const BigInt& v) { return v == 1 || v == -1; }

// Normalises a diagonal so each entry divides the next; drops units.
std::vector<std::string> normalise_diagonal(std::vector<BigInt> diag) {
  for (auto& d : diag)
    if (d < 0) d = -d;
  diag.erase(std::remove(diag.begin(), diag.end(), BigInt(0)), diag.end());
  for (std::size_t i = 0; i < diag.size(); ++i)
    for (std::size_t j = i + 1; j < diag.size(); ++j) {
      BigInt g = boost::multiprecision::gcd(diag[i], diag[j]);
      BigInt l = diag[i] / g * diag[j];
      diag[i] = g;
      diag[j] = l;
    }
  std::vector<std::string> out;
  for (const auto& d : diag) out.push_back(d.str());
  return out;
}

// Dense Smith diagonal over arbitrary precision integers.
std::vector<BigInt> dense_smith(std::vector<std::vector<BigInt>> m) {
  std::vector<BigInt> diag;
  std::size_t rows = m.size();
  std::size_t cols = rows ? m[0].size() : 0;
  std::size_t t = 0;
  while (t < rows && t < cols) {
    // smallest nonzero entry in the trailing block
    std::size_t pr = rows, pc = cols;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j)
        if (m[i][j] != 0 && (pr == rows || abs(m[i][j]) < abs(m[pr][pc]))) {
          pr = i;
          pc = j;
        }
    if (pr == rows) break;
    std::swap(m[t], m[pr]);
    for (auto& row : m) std::swap(row[t], row[pc]);
    bool clean = false;
    while (!clean) {
      clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (m[i][t] == 0) continue;
        BigInt q = m[i][t] / m[t][t];
        for (std::size_t j = t; j < cols; ++j) m[i][j] -= q * m[t][j];
        if (m[i][t] != 0) {
          std::swap(m[t], m[i]);
          clean = false;
        }
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (m[t][j] == 0) continue;
        BigInt q = m[t][j] / m[t][t];
        for (std::size_t i = t; i < rows; ++i) m[i][j] -= q * m[i][t];
        if (m[t][j] != 0) {
          for (auto& row : m) std::swap(row[t], row[j]);
          clean = false;
        }
      }
      if (clean) {
        // pivot must divide the rest of the block
        for (std::size_t i = t + 1; i < rows && clean; ++i)
          for (std::size_t j = t + 1; j < cols; ++j)
            if (m[i][j] % m[t][t] != 0) {
              for (std::size_t jj = t; jj < cols; ++jj) m[t][jj] += m[i][jj];
              clean = false;
              break;
            }
      }
    }
    diag.push_back(m[t][t]);
    ++t;
  }
  return diag;
}

// Sparse elimination with unit pivots (Schur complement), dense Smith on the
// remainder. Returns the full nonzero diagonal (units included).
template <class T>
std::vector<BigInt> sparse_smith(std::size_t nrows, std::size_t ncols,
                                 const std::vector<std::vector<std::pair<int, int>>>& cols_in) {
  std::vector<std::map<int, T>> rows(nrows);
  std::vector<std::set<int>> cols(ncols);
  for (std::size_t c = 0; c < ncols; ++c)
    for (auto [r, v] : cols_in[c]) {
      rows[static_cast<std::size_t>(r)][static_cast<int>(c)] = T(v);
      cols[c].insert(r);
    }
  std::vector<char> row_alive(nrows, 1), col_alive(ncols, 1);
  std::vector<BigInt> diag;
  bool progress = true;
  while (progress) {
    progress = false;
    for (std::size_t c = 0; c < ncols; ++c) {
      if (!col_alive[c] || cols[c].empty()) continue;
      int best = -1;
      for (int r : cols[c]) {
        if (!is_unit(rows[static_cast<std::size_t>(r)].at(static_cast<int>(c)))) continue;
        if (best < 0 || rows[static_cast<std::size_t>(r)].size() <
                            rows[static_cast<std::size_t>(best)].size())
          best = r;
      }
      if (best < 0) continue;
      progress = true;
      auto& prow = rows[static_cast<std::size_t>(best)];
      T p = prow.at(static_cast<int>(c));
      std::vector<int> targets(cols[c].begin(), cols[c].end());
      for (int r : targets) {
        if (r == best) continue;
        auto& row = rows[static_cast<std::size_t>(r)];
        T factor = checked_mul(row.at(static_cast<int>(c)), p);  // p == 1/p
        for (const auto& [j, v] : prow) {
          auto it = row.find(j);
          T cur = (it == row.end()) ? T(0) : it->second;
          T nv = checked_sub(cur, checked_mul(factor, v));
          if (nv == 0) {
            if (it != row.end()) row.erase(it);
            cols[static_cast<std::size_t>(j)].erase(r);
          } else {
            if (it == row.end()) {
              row.emplace(j, nv);
              cols[static_cast<std::size_t>(j)].insert(r);
            } else {
              it->second = nv;
            }
          }
        }
      }
      for (const auto& [j, v] : prow) cols[static_cast<std::size_t>(j)].erase(best);
      prow.clear();
      row_alive[static_cast<std::size_t>(best)] = 0;
      col_alive[c] = 0;
      diag.push_back(BigInt(1));
    }
  }
  std::vector<int> rem_rows, rem_cols;
  for (std::size_t r = 0; r < nrows; ++r)
    if (row_alive[r] && !rows[r].empty()) rem_rows.push_back(static_cast<int>(r));
  for (std::size_t c = 0; c < ncols; ++c)
    if (col_alive[c] && !cols[c].empty()) rem_cols.push_back(static_cast<int>(c));
  if (!rem_rows.empty() && !rem_cols.empty()) {
    std::unordered_map<int, std::size_t> col_index;
    for (std::size_t j = 0; j < rem_cols.size(); ++j) col_index[rem_cols[j]] = j;
    std::vector<std::vector<BigInt>> dense(rem_rows.size(),
                                           std::vector<BigInt>(rem_cols.size(), 0));
    for (std::size_t i = 0; i < rem_rows.size(); ++i)
      for (const auto& [j, v] : rows[static_cast<std::size_t>(rem_rows[i])])
        dense[i][col_index.at(j)] = to_big(v);
    auto rest = dense_smith(std::move(dense));
    diag.insert(diag.end(), rest.begin(), rest.end());
  }
  return diag;
}

std::vector<BigInt> smith_diagonal(std::size_t nrows, std::size_t ncols,
                                   const std::vector<std::vector<std::pair<int, int>>>& cols) {
  try {
    return sparse_smith<long long>(nrows, ncols, cols);
  } catch (const Overflow&) {
    return sparse_smith<BigInt>(nrows, ncols, cols);
  }
}

}  // namespace

std::vector<std::string> smith_invariants(const std::vector<std::vector<long long>>& rows) {
  std::size_t nrows = rows.size();
  std::size_t ncols = nrows ? rows[0].size() : 0;
  std::vector<std::vector<BigInt>> dense(nrows, std::vector<BigInt>(ncols));
  for (std::size_t i = 0; i < nrows; ++i)
    for (std::size_t j = 0; j < ncols; ++j) dense[i][j] = rows[i][j];
  auto diag = dense_smith(std::move(dense));
  std::vector<BigInt> full = diag;
  auto norm = normalise_diagonal(full);
  return norm;
}

bool HomologyProfile::has_torsion() const {
  for (const auto& [d, g] : groups)
    if (!g.torsion.empty()) return true;
  return false;
}

long long HomologyProfile::rank(int dim) const {
  auto it = groups.find(dim);
  return it == groups.end() ? 0 : it->second.rank;
}

std::string HomologyProfile::to_string() const {
  if (groups.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [d, g] : groups) {
    if (!first) os << ", ";
    first = false;
    os << "H" << d << "=";
    bool term = false;
    if (g.rank) {
      os << "Z";
      if (g.rank > 1) os << "^" << g.rank;
      term = true;
    }
    for (const auto& t : g.torsion) {
      if (term) os << "+";
      os << "Z/" << t;
      term = true;
    }
  }
  return os.str();
}

std::string HomologyProfile::to_json() const {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [d, g] : groups)
    j[std::to_string(d)] = {{"rank", g.rank}, {"torsion", g.torsion}};
  return j.dump();
}

HomologyProfile reduced_homology(const IndependenceComplex& k) {
  // boundary d_k : C_k -> C_{k-1} for faces[k] -> faces[k-1] (k >= 1)
  const std::size_t layers = k.faces.size();
  std::vector<long long> ranks(layers + 1, 0);  // ranks[k] = rank of d_k
  std::vector<std::vector<std::string>> torsion(layers + 1);
  for (std::size_t s = 1; s < layers; ++s) {
    const auto& lower = k.faces[s - 1];
    const auto& upper = k.faces[s];
    std::unordered_map<std::uint64_t, int> index;
    index.reserve(lower.size() * 2);
    for (std::size_t i = 0; i < lower.size(); ++i) index[lower[i]] = static_cast<int>(i);
    std::vector<std::vector<std::pair<int, int>>> cols(upper.size());
    for (std::size_t c = 0; c < upper.size(); ++c) {
      std::uint64_t f = upper[c];
      int j = 0;
      std::uint64_t bits = f;
      while (bits) {
        int b = std::countr_zero(bits);
        bits &= bits - 1;
        std::uint64_t face = f & ~(std::uint64_t{1} << b);
        cols[c].emplace_back(index.at(face), (j % 2 == 0) ? 1 : -1);
        ++j;
      }
    }
    auto diag = smith_diagonal(lower.size(), upper.size(), cols);
    ranks[s] = static_cast<long long>(diag.size());
    torsion[s] = normalise_diagonal(diag);
    // drop unit factors
    torsion[s].erase(std::remove(torsion[s].begin(), torsion[s].end(), "1"), torsion[s].end());
  }
  HomologyProfile p;
  for (std::size_t s = 0; s < layers; ++s) {
    int dim = static_cast<int>(s) - 1;
    long long free_rank =
        static_cast<long long>(k.faces[s].size()) - ranks[s] - ranks[s + 1];
    HomologyGroup g;
    g.rank = free_rank;
    g.torsion = torsion[s + 1];
    if (g.rank != 0 || !g.torsion.empty()) p.groups[dim] = g;
  }
  return p;
}

HomologyProfile expected_profile(const HomotopyType& h) {
  HomologyProfile p;
  for (int d : h.dims()) p.groups[d].rank += 1;
  return p;
}

HomologyProfile shift(const HomologyProfile& p, int k) {
  HomologyProfile out;
  for (const auto& [d, g] : p.groups) out.groups[d + k] = g;
  return out;
}

HomologyProfile add(const HomologyProfile& a, const HomologyProfile& b) {
  HomologyProfile out = a;
  for (const auto& [d, g] : b.groups) {
    auto& t = out.groups[d];
    t.rank += g.rank;
    t.torsion.insert(t.torsion.end(), g.torsion.begin(), g.torsion.end());
  }
  return out;
}

HomologyProfile oracle_profile(const Graph& g, std::size_t face_budget) {
  return reduced_homology(independence_complex(g, face_budget));
}

}  // namespace khoform
