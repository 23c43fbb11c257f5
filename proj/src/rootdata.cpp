#include "flc/rootdata.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <sstream>

#include "flc/error.hpp"
#include "flc/fq.hpp"

namespace flc {

const char* kind_name(Kind k) {
  switch (k) {
    case Kind::GL: return "GL";
    case Kind::SL: return "SL";
    case Kind::PGL: return "PGL";
  }
  return "?";
}

Kind parse_kind(const std::string& s) {
  if (s == "GL") return Kind::GL;
  if (s == "SL") return Kind::SL;
  if (s == "PGL") return Kind::PGL;
  fail(Err::ParseError, "unknown group kind '" + s + "'");
}

IntMat identity_mat(int n) {
  IntMat I(n, std::vector<long long>(n, 0));
  for (int i = 0; i < n; ++i) I[i][i] = 1;
  return I;
}

IntMat mat_mul(const IntMat& A, const IntMat& B) {
  if (A.empty()) return {};
  size_t n = A.size(), k = B.size(), m = B.empty() ? 0 : B[0].size();
  IntMat C(n, std::vector<long long>(m, 0));
  for (size_t i = 0; i < n; ++i)
    for (size_t l = 0; l < k; ++l)
      if (A[i][l])
        for (size_t j = 0; j < m; ++j) C[i][j] += A[i][l] * B[l][j];
  return C;
}

std::vector<long long> RootDatum::cochar_from_ambient(const std::vector<long long>& v) const {
  std::vector<long long> c(rank, 0);
  switch (kind) {
    case Kind::GL:
      for (int k = 0; k < n; ++k) c[k] = v[k];
      break;
    case Kind::SL: {
      long long acc = 0;
      for (int k = 0; k < n - 1; ++k) c[k] = (acc += v[k]);
      if (acc + v[n - 1] != 0) fail(Err::Inconsistent, "cocharacter of SL must have coordinate sum 0");
      break;
    }
    case Kind::PGL:
      for (int k = 0; k < n - 1; ++k) c[k] = v[k] - v[n - 1];
      break;
  }
  return c;
}

IntMat RootDatum::permutation_action(const std::vector<int>& perm) const {
  IntMat M(rank, std::vector<long long>(rank, 0));
  for (int k = 0; k < rank; ++k) {
    std::vector<long long> lift(n, 0);
    if (kind == Kind::SL) {
      lift[perm[k]] += 1;
      lift[perm[k + 1]] -= 1;
    } else {
      lift[perm[k]] = 1;
    }
    auto col = cochar_from_ambient(lift);
    for (int i = 0; i < rank; ++i) M[i][k] = col[i];
  }
  return M;
}

RootDatum build_root_datum(Kind kind, int n, unsigned p) {
  if (n < 1) fail(Err::Unsupported, "matrix size must be positive");
  if (!is_prime(p)) fail(Err::BadCharacteristic, "p must be prime");
  if (p <= unsigned(n)) fail(Err::BadCharacteristic, "p divides n!");
  RootDatum rd;
  rd.kind = kind;
  rd.n = n;
  rd.p = p;
  rd.rank = kind == Kind::GL ? n : n - 1;
  rd.weyl_order = 1;
  for (int k = 2; k <= n; ++k) rd.weyl_order *= k;
  for (int k = kind == Kind::GL ? 1 : 2; k <= n; ++k) rd.exponents.push_back(k);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      rd.root_index.push_back({i, j});
      std::vector<long long> amb(n, 0);
      amb[i] = 1;
      amb[j] = -1;
      rd.coroots.push_back(rd.cochar_from_ambient(amb));
      std::vector<long long> root(rd.rank, 0);
      if (kind == Kind::SL) {
        // Dual of the simple-coroot basis: <e_i* - e_j*, e_k - e_{k+1}>.
        for (int k = 0; k < n - 1; ++k)
          root[k] = (i == k) - (i == k + 1) - (j == k) + (j == k + 1);
      } else {
        for (int k = 0; k < rd.rank; ++k) root[k] = (i == k) - (j == k);
      }
      rd.roots.push_back(root);
    }
  return rd;
}

long long FinAbGroup::torsion_order() const {
  long long o = 1;
  for (auto d : torsion) o *= d;
  return o;
}

std::string FinAbGroup::str() const {
  std::ostringstream os;
  bool first = true;
  if (free_rank > 0) {
    os << "Z";
    if (free_rank > 1) os << "^" << free_rank;
    first = false;
  }
  for (auto d : torsion) {
    if (!first) os << " x ";
    os << "Z/" << d;
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

static Rat frac_part(Rat r) {
  long long fl = r.numerator() / r.denominator();
  if (r.numerator() < 0 && r.numerator() % r.denominator() != 0) --fl;
  return r - Rat(fl);
}

Rat Kappa::eval(const std::vector<long long>& x) const {
  Rat s(0);
  for (size_t i = 0; i < values.size() && i < x.size(); ++i) s += values[i] * Rat(x[i]);
  return frac_part(s);
}

Kappa make_kappa(const std::vector<Rat>& values) {
  Kappa k;
  long long ord = 1;
  for (auto v : values) {
    Rat f = frac_part(v);
    k.values.push_back(f);
    ord = std::lcm(ord, f.denominator());
  }
  if (ord > 4) fail(Err::UnsupportedOrder, "kappa has order " + std::to_string(ord) + " > 4");
  k.order = int(ord);
  return k;
}

EndoscopicDatum endoscopic_datum(const RootDatum& rd, const Kappa& kappa) {
  if (int(kappa.values.size()) != rd.rank) fail(Err::Inconsistent, "kappa length differs from rank");
  if (kappa.order > 4) fail(Err::UnsupportedOrder, "kappa order > 4");
  EndoscopicDatum ed;
  ed.parent = rd;
  ed.kappa = kappa;
  for (int a = 0; a < rd.num_roots(); ++a)
    if (kappa.eval(rd.coroots[a]) == Rat(0)) ed.sub_roots.push_back(a);
  // Blocks: i ~ j iff kappa(e_i - e_j) = 0.
  std::vector<int> cls(rd.n, -1);
  int nc = 0;
  for (int i = 0; i < rd.n; ++i) {
    if (cls[i] >= 0) continue;
    cls[i] = nc;
    for (int j = i + 1; j < rd.n; ++j) {
      std::vector<long long> amb(rd.n, 0);
      amb[i] = 1;
      amb[j] = -1;
      if (kappa.eval(rd.cochar_from_ambient(amb)) == Rat(0)) cls[j] = nc;
    }
    ++nc;
  }
  ed.blocks.assign(nc, 0);
  for (int i = 0; i < rd.n; ++i) ed.blocks[cls[i]]++;
  if (int(ed.sub_roots.size()) == rd.num_roots()) {
    ed.H_kind = "G";
  } else if (ed.sub_roots.empty()) {
    ed.H_kind = "torus";
  } else {
    std::ostringstream os;
    os << "levi:";
    for (int b = 0; b < nc; ++b) os << (b ? "," : "") << ed.blocks[b];
    ed.H_kind = os.str();
  }
  return ed;
}

long long resultant_degree_global(const EndoscopicDatum& ed, long long degD) {
  long long diff = ed.parent.num_roots() - (long long)ed.sub_roots.size();
  return diff * degD / 2;
}

SNF smith_normal_form(const IntMat& A) {
  int rows = int(A.size());
  int cols = rows ? int(A[0].size()) : 0;
  IntMat M = A;
  SNF res;
  res.U = identity_mat(rows);
  res.V = identity_mat(cols);
  auto row_add = [&](int dst, int src, long long f) {  // row dst += f * row src
    for (int j = 0; j < cols; ++j) M[dst][j] += f * M[src][j];
    for (int j = 0; j < rows; ++j) res.U[dst][j] += f * res.U[src][j];
  };
  auto col_add = [&](int dst, int src, long long f) {
    for (int i = 0; i < rows; ++i) M[i][dst] += f * M[i][src];
    for (int i = 0; i < cols; ++i) res.V[i][dst] += f * res.V[i][src];
  };
  auto row_swap = [&](int a, int b) {
    std::swap(M[a], M[b]);
    std::swap(res.U[a], res.U[b]);
  };
  auto col_swap = [&](int a, int b) {
    for (auto& r : M) std::swap(r[a], r[b]);
    for (auto& r : res.V) std::swap(r[a], r[b]);
  };
  int t = 0;
  for (; t < std::min(rows, cols); ++t) {
    for (;;) {
      int pi = -1, pj = -1;
      long long best = 0;
      for (int i = t; i < rows; ++i)
        for (int j = t; j < cols; ++j)
          if (M[i][j] && (pi < 0 || std::llabs(M[i][j]) < best)) {
            best = std::llabs(M[i][j]);
            pi = i;
            pj = j;
          }
      if (pi < 0) goto done;
      if (pi != t) row_swap(pi, t);
      if (pj != t) col_swap(pj, t);
      bool clean = true;
      for (int i = t + 1; i < rows; ++i)
        if (M[i][t]) {
          row_add(i, t, -(M[i][t] / M[t][t]));
          if (M[i][t]) clean = false;
        }
      for (int j = t + 1; j < cols; ++j)
        if (M[t][j]) {
          col_add(j, t, -(M[t][j] / M[t][t]));
          if (M[t][j]) clean = false;
        }
      if (!clean) continue;
      int bad = -1;
      for (int i = t + 1; i < rows && bad < 0; ++i)
        for (int j = t + 1; j < cols; ++j)
          if (M[i][j] % M[t][t]) {
            bad = i;
            break;
          }
      if (bad < 0) break;
      row_add(t, bad, 1);
    }
    if (M[t][t] < 0) {
      for (int j = 0; j < cols; ++j) M[t][j] = -M[t][j];
      for (int j = 0; j < rows; ++j) res.U[t][j] = -res.U[t][j];
    }
  }
done:
  res.diag.assign(std::min(rows, cols), 0);
  for (int i = 0; i < int(res.diag.size()); ++i) res.diag[i] = M[i][i];
  return res;
}

// Columns of the result span sum_w (w - 1) Z^r.
static IntMat relation_matrix(int r, const std::vector<IntMat>& gens) {
  IntMat R(r);
  for (const auto& w : gens)
    for (int j = 0; j < r; ++j)
      for (int i = 0; i < r; ++i) R[i].push_back(w[i][j] - (i == j));
  return R;
}

FinAbGroup coinvariants(int lattice_rank, const std::vector<IntMat>& generators) {
  FinAbGroup g;
  if (generators.empty() || lattice_rank == 0) {
    g.free_rank = lattice_rank;
    return g;
  }
  auto snf = smith_normal_form(relation_matrix(lattice_rank, generators));
  int nonzero = 0;
  for (auto d : snf.diag)
    if (d) {
      ++nonzero;
      if (d > 1) g.torsion.push_back(d);
    }
  g.free_rank = lattice_rank - nonzero;
  return g;
}

int invariant_rank(int lattice_rank, const std::vector<IntMat>& generators) {
  if (generators.empty()) return lattice_rank;
  IntMat S;
  for (const auto& w : generators)
    for (int i = 0; i < lattice_rank; ++i) {
      std::vector<long long> row(lattice_rank);
      for (int j = 0; j < lattice_rank; ++j) row[j] = w[i][j] - (i == j);
      S.push_back(row);
    }
  auto snf = smith_normal_form(S);
  int nonzero = 0;
  for (auto d : snf.diag) nonzero += d != 0;
  return lattice_rank - nonzero;
}

// Inverse of a unimodular matrix via Smith form of [A]: A = U^-1 D V^-1 with D = I.
static IntMat unimodular_inverse(const IntMat& A) {
  auto snf = smith_normal_form(A);
  for (auto d : snf.diag)
    if (d != 1) fail(Err::Inconsistent, "matrix is not unimodular");
  return mat_mul(snf.V, snf.U);
}

long long fixed_torsion_of_coinvariants(int lattice_rank, const std::vector<IntMat>& generators,
                                        const IntMat& sigma) {
  if (generators.empty() || lattice_rank == 0) return 1;
  auto snf = smith_normal_form(relation_matrix(lattice_rank, generators));
  IntMat Uinv = unimodular_inverse(snf.U);
  IntMat S = mat_mul(mat_mul(snf.U, sigma), Uinv);
  std::vector<long long> d(lattice_rank, 0);
  for (size_t i = 0; i < snf.diag.size(); ++i) d[i] = snf.diag[i];
  std::vector<int> tors;
  long long total = 1;
  for (int i = 0; i < lattice_rank; ++i)
    if (d[i] > 1) {
      tors.push_back(i);
      total *= d[i];
    }
  if (total > 2000000) fail(Err::CombinatorialBlowup, "torsion subgroup too large to enumerate");
  auto same_class = [&](const std::vector<long long>& a, const std::vector<long long>& b) {
    for (int i = 0; i < lattice_rank; ++i) {
      long long diff = a[i] - b[i];
      if (d[i] == 0 ? diff != 0 : diff % d[i] != 0) return false;
    }
    return true;
  };
  long long count = 0;
  std::vector<long long> x(lattice_rank, 0);
  for (long long idx = 0; idx < total; ++idx) {
    long long rem = idx;
    for (int i : tors) {
      x[i] = rem % d[i];
      rem /= d[i];
    }
    std::vector<long long> y(lattice_rank, 0);
    for (int i = 0; i < lattice_rank; ++i)
      for (int j = 0; j < lattice_rank; ++j) y[i] += S[i][j] * x[j];
    if (same_class(x, y)) ++count;
  }
  return count;
}

bool nonstandard_pair_check(const RootDatum& rd1, const RootDatum& rd2, unsigned p) {
  if (rd1.n != rd2.n) return false;
  long long fact = 1;
  for (int k = 2; k <= rd1.n; ++k) fact *= k;
  if (fact % p == 0) return false;
  if (rd1.kind == rd2.kind) return true;
  bool slpgl = (rd1.kind == Kind::SL && rd2.kind == Kind::PGL) || (rd1.kind == Kind::PGL && rd2.kind == Kind::SL);
  return slpgl && rd1.n % long(p) != 0;
}

}  // namespace flc
