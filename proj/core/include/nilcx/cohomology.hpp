#ifndef NILCX_COHOMOLOGY_HPP
#define NILCX_COHOMOLOGY_HPP

#include <algorithm>
#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "nilcx/complex_structure.hpp"

namespace nilcx {

inline std::size_t choose(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::size_t out = 1;
  for (std::size_t i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

/// Strictly increasing k-element index tuples from {0..n-1}, lexicographic.
inline std::vector<std::vector<std::size_t>> indexTuples(std::size_t n,
                                                         std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  if (k > n) return out;
  std::vector<std::size_t> cur(k);
  for (std::size_t i = 0; i < k; ++i) cur[i] = i;
  for (;;) {
    out.push_back(cur);
    if (k == 0) break;
    std::size_t pos = k;
    while (pos > 0 && cur[pos - 1] == n - k + pos - 1) --pos;
    if (pos == 0) break;
    ++cur[pos - 1];
    for (std::size_t i = pos; i < k; ++i) cur[i] = cur[i - 1] + 1;
  }
  return out;
}

/// Sorts an index tuple, returning the permutation parity, or nothing when an
/// index repeats (the wedge monomial vanishes).
inline bool sortWithParity(std::vector<std::size_t>& idx, int& sign) {
  sign = 1;
  for (std::size_t a = 1; a < idx.size(); ++a)
    for (std::size_t b = a; b > 0 && idx[b] < idx[b - 1]; --b) {
      std::swap(idx[b], idx[b - 1]);
      sign = -sign;
    }
  for (std::size_t a = 1; a < idx.size(); ++a)
    if (idx[a] == idx[a - 1]) return false;
  return true;
}

namespace detail {
inline void scaleRowContent(std::vector<std::pair<std::size_t, Rational>>& row) {
  mpz_class num(0), den(1);
  for (const auto& term : row) {
    num = gcd(num, term.second.get_num());
    den = lcm(den, term.second.get_den());
  }
  if (num == 0) return;
  Rational s(den, num);
  s.canonicalize();
  if (s == 1) return;
  for (auto& term : row) term.second *= s;
}
template <class F>
void scaleRowContent(std::vector<std::pair<std::size_t, F>>&) {}
}  // namespace detail

/// Row-oriented sparse matrix over an exact field with rank by Gaussian
/// elimination; pivots favour short rows and sparsely populated columns to
/// limit fill-in, and rows over Q are rescaled to integer content one.
template <class F>
class SparseMatrix {
 public:
  SparseMatrix(std::size_t rows, std::size_t cols) : cols_(cols), data_(rows) {}

  std::size_t rows() const { return data_.size(); }
  std::size_t cols() const { return cols_; }

  void add(std::size_t r, std::size_t c, const F& v) {
    if (r >= data_.size() || c >= cols_) throw DimensionMismatch("sparse add");
    data_[r].emplace_back(c, v);
  }

  std::size_t nonZeroCount() const {
    std::size_t n = 0;
    for (const auto& row : data_) n += row.size();
    return n;
  }

  std::size_t rank() const {
    std::vector<Row> rows = data_;
    std::vector<std::vector<std::size_t>> colRows(cols_);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      normalizeRow(rows[r]);
      for (const auto& term : rows[r]) colRows[term.first].push_back(r);
    }
    std::vector<bool> done(rows.size(), false);
    std::size_t rank = 0;
    for (;;) {
      std::size_t best = rows.size();
      for (std::size_t r = 0; r < rows.size(); ++r) {
        if (done[r] || rows[r].empty()) continue;
        if (best == rows.size() || rows[r].size() < rows[best].size()) best = r;
      }
      if (best == rows.size()) break;
      std::size_t pivCol = cols_;
      std::size_t pivLoad = 0;
      for (const auto& term : rows[best]) {
        std::size_t load = colRows[term.first].size();
        if (pivCol == cols_ || load < pivLoad) {
          pivCol = term.first;
          pivLoad = load;
        }
      }
      const F pivVal = valueAt(rows[best], pivCol);
      std::vector<std::size_t> users = std::move(colRows[pivCol]);
      colRows[pivCol].clear();
      for (std::size_t r : users) {
        if (r == best || done[r]) continue;
        const F* v = findTerm(rows[r], pivCol);
        if (!v) continue;
        F factor = F(*v / pivVal);
        subtractScaled(rows[r], factor, rows[best]);
        detail::scaleRowContent(rows[r]);
        for (const auto& term : rows[r]) {
          if (term.first != pivCol) colRows[term.first].push_back(r);
        }
      }
      done[best] = true;
      ++rank;
    }
    return rank;
  }

 private:
  using Term = std::pair<std::size_t, F>;
  using Row = std::vector<Term>;

  static void normalizeRow(Row& row) {
    std::sort(row.begin(), row.end(),
              [](const Term& a, const Term& b) { return a.first < b.first; });
    Row out;
    for (auto& term : row) {
      if (!out.empty() && out.back().first == term.first)
        out.back().second += term.second;
      else
        out.push_back(std::move(term));
    }
    row.clear();
    for (auto& term : out)
      if (!isZero(term.second)) row.push_back(std::move(term));
    detail::scaleRowContent(row);
  }

  static const F* findTerm(const Row& row, std::size_t col) {
    auto it = std::lower_bound(
        row.begin(), row.end(), col,
        [](const Term& t, std::size_t c) { return t.first < c; });
    if (it == row.end() || it->first != col) return nullptr;
    return &it->second;
  }

  static F valueAt(const Row& row, std::size_t col) {
    const F* v = findTerm(row, col);
    if (!v) throw Error("sparse pivot lookup");
    return *v;
  }

  /// row -= factor * other, merging sorted term lists.
  static void subtractScaled(Row& row, const F& factor, const Row& other) {
    Row out;
    out.reserve(row.size() + other.size());
    std::size_t a = 0, b = 0;
    while (a < row.size() || b < other.size()) {
      if (b == other.size() ||
          (a < row.size() && row[a].first < other[b].first)) {
        out.push_back(std::move(row[a++]));
      } else if (a == row.size() || other[b].first < row[a].first) {
        out.emplace_back(other[b].first, F(-F(factor * other[b].second)));
        ++b;
      } else {
        F v = F(row[a].second - F(factor * other[b].second));
        if (!isZero(v)) out.emplace_back(row[a].first, std::move(v));
        ++a;
        ++b;
      }
    }
    row = std::move(out);
  }

  std::size_t cols_;
  std::vector<Row> data_;
};

/// Terms of the exterior differential of a single wedge monomial:
/// d(e^{i_1..i_k}) expanded with the convention de^r = -sum a_{pq}^r e^{pq}
/// for [e_p, e_q] = sum a_{pq}^r e_r.
template <class F>
std::vector<std::pair<std::vector<std::size_t>, F>> differentialTerms(
    const LieAlgebra<F>& g, const std::vector<std::size_t>& cell) {
  const std::size_t n = g.dim();
  std::map<std::vector<std::size_t>, F> acc;
  for (std::size_t a = 0; a < cell.size(); ++a) {
    int posSign = (a % 2 == 0) ? 1 : -1;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) {
        F c = g.basisBracket(p, q)[cell[a]];
        if (isZero(c)) continue;
        std::vector<std::size_t> idx;
        idx.reserve(cell.size() + 1);
        for (std::size_t b = 0; b < cell.size(); ++b)
          if (b != a) idx.push_back(cell[b]);
        idx.push_back(p);
        idx.push_back(q);
        int sortSign = 1;
        if (!sortWithParity(idx, sortSign)) continue;
        // (-1)^{a} from the derivation rule times -1 from de^r, noting the
        // inserted pair starts at position a after removal.
        int parity = posSign * sortSign;
        F coeff = (parity > 0) ? F(-c) : c;
        auto it = acc.find(idx);
        if (it == acc.end())
          acc.emplace(std::move(idx), std::move(coeff));
        else
          it->second += coeff;
      }
  }
  std::vector<std::pair<std::vector<std::size_t>, F>> out;
  for (auto& kv : acc)
    if (!isZero(kv.second)) out.emplace_back(kv.first, std::move(kv.second));
  return out;
}

/// Invariant de Rham complex of a Lie algebra: wedge monomial bases, sparse
/// differentials and Betti numbers by exact rank.
template <class F>
class CeComplex {
 public:
  explicit CeComplex(const LieAlgebra<F>& g) : g_(g) {}

  std::size_t dim() const { return g_.dim(); }

  const std::vector<std::vector<std::size_t>>& cells(std::size_t k) const {
    ensureCells(k);
    return cells_.at(k);
  }

  std::size_t cellIndex(std::size_t k, const std::vector<std::size_t>& idx) const {
    ensureCells(k);
    const auto& index = cellIndex_.at(k);
    auto it = index.find(idx);
    if (it == index.end()) throw Error("unknown exterior basis cell");
    return it->second;
  }

  /// Matrix of d: Lambda^k -> Lambda^{k+1}; row r lists the image of cell r.
  SparseMatrix<F> differential(std::size_t k) const {
    const auto& src = cells(k);
    SparseMatrix<F> m(src.size(), cells(k + 1).size());
    for (std::size_t r = 0; r < src.size(); ++r)
      for (auto& term : differentialTerms(g_, src[r]))
        m.add(r, cellIndex(k + 1, term.first), term.second);
    return m;
  }

  std::size_t differentialRank(std::size_t k) const {
    if (k >= g_.dim()) return 0;
    auto it = rank_.find(k);
    if (it != rank_.end()) return it->second;
    std::size_t r = differential(k).rank();
    rank_.emplace(k, r);
    return r;
  }

  /// d(d(cell)) accumulates to zero for every k-cell.
  bool differentialSquaresToZero(std::size_t k) const {
    for (const auto& cell : cells(k)) {
      std::map<std::vector<std::size_t>, F> acc;
      for (auto& term : differentialTerms(g_, cell))
        for (auto& term2 : differentialTerms(g_, term.first)) {
          auto it = acc.find(term2.first);
          F add = F(term.second * term2.second);
          if (it == acc.end())
            acc.emplace(term2.first, std::move(add));
          else
            it->second += add;
        }
      for (const auto& kv : acc)
        if (!isZero(kv.second)) return false;
    }
    return true;
  }

  std::vector<std::size_t> bettiNumbers() const {
    const std::size_t n = g_.dim();
    std::vector<std::size_t> betti(n + 1);
    for (std::size_t k = 0; k <= n; ++k) {
      std::size_t below = (k == 0) ? 0 : differentialRank(k - 1);
      betti[k] = choose(n, k) - differentialRank(k) - below;
    }
    if (betti[1] + g_.derived().dim() != n)
      throw OracleDisagreement("first Betti number against derived dimension");
    return betti;
  }

 private:
  // Map storage keeps references returned by cells() stable while other
  // degrees are materialized lazily.
  void ensureCells(std::size_t k) const {
    if (cells_.contains(k)) return;
    auto& cell = cells_[k];
    auto& index = cellIndex_[k];
    if (choose(g_.dim(), k) == 0) return;
    cell = indexTuples(g_.dim(), k);
    for (std::size_t i = 0; i < cell.size(); ++i) index.emplace(cell[i], i);
  }

  LieAlgebra<F> g_;
  mutable std::map<std::size_t, std::vector<std::vector<std::size_t>>> cells_;
  mutable std::map<std::size_t, std::map<std::vector<std::size_t>, std::size_t>> cellIndex_;
  mutable std::map<std::size_t, std::size_t> rank_;
};

/// d restricted to 1-forms squares to zero exactly when the Jacobi identity
/// holds; used as the independent check on structure constants.
template <class F>
bool jacobiViaDifferential(const LieAlgebra<F>& g) {
  return CeComplex<F>(g).differentialSquaresToZero(1);
}

template <class F>
std::vector<std::size_t> deRhamBetti(const LieAlgebra<F>& g) {
  return CeComplex<F>(g).bettiNumbers();
}

/// Cohomology dimensions of a Lie algebra acting on a module via the
/// representation matrices rho[a] for the basis vectors.  Validates the
/// representation law and d^2 = 0 on the way.
template <class G>
std::vector<std::size_t> cohomologyWithCoefficients(
    const LieAlgebra<G>& h, const std::vector<Matrix<G>>& rho) {
  const std::size_t m = h.dim();
  if (rho.size() != m) throw DimensionMismatch("one action matrix per basis vector");
  const std::size_t w = rho.empty() ? 0 : rho[0].rows();
  for (const auto& r : rho)
    if (r.rows() != w || r.cols() != w)
      throw DimensionMismatch("action matrix shape");
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a + 1; b < m; ++b) {
      Matrix<G> lhs(w, w);
      Vec<G> br = h.basisBracket(a, b);
      for (std::size_t k = 0; k < m; ++k)
        if (!isZero(br[k])) lhs = lhs + rho[k].scaled(br[k]);
      if (lhs != rho[a] * rho[b] - rho[b] * rho[a])
        throw OracleDisagreement("module action does not represent the bracket");
    }
  CeComplex<G> ce(h);
  auto cellDim = [&](std::size_t q) { return w * choose(m, q); };
  // d(w x e^K) = sum_a rho_a(w) x e^a ^ e^K + w x d(e^K).
  auto differential = [&](std::size_t q) {
    const auto& src = ce.cells(q);
    const auto& dst = ce.cells(q + 1);
    Matrix<G> d(w * dst.size(), w * src.size());
    for (std::size_t s = 0; s < src.size(); ++s) {
      for (std::size_t a = 0; a < m; ++a) {
        std::vector<std::size_t> idx{a};
        idx.insert(idx.end(), src[s].begin(), src[s].end());
        int sign = 1;
        if (!sortWithParity(idx, sign)) continue;
        std::size_t t = ce.cellIndex(q + 1, idx);
        for (std::size_t r = 0; r < w; ++r)
          for (std::size_t c = 0; c < w; ++c) {
            const G& v = rho[a].at(r, c);
            if (isZero(v)) continue;
            G add = (sign > 0) ? v : G(-v);
            d.at(t * w + r, s * w + c) += add;
          }
      }
      for (auto& term : differentialTerms(h, src[s])) {
        std::size_t t = ce.cellIndex(q + 1, term.first);
        for (std::size_t r = 0; r < w; ++r) d.at(t * w + r, s * w + r) += term.second;
      }
    }
    return d;
  };
  std::vector<Matrix<G>> ds;
  for (std::size_t q = 0; q < m; ++q) ds.push_back(differential(q));
  for (std::size_t q = 0; q + 1 < m; ++q)
    if (!(ds[q + 1] * ds[q]).isZero())
      throw OracleDisagreement("valued differential does not square to zero");
  std::vector<std::size_t> dims(m + 1);
  std::vector<std::size_t> ranks(m + 1, 0);
  for (std::size_t q = 0; q < m; ++q) ranks[q] = ds[q].rank();
  for (std::size_t q = 0; q <= m; ++q) {
    std::size_t below = (q == 0) ? 0 : ranks[q - 1];
    dims[q] = cellDim(q) - ranks[q] - below;
  }
  return dims;
}

/// Invariant Dolbeault complex of an integrable structure: the complexified
/// algebra is rewritten in an adapted frame, the full differential is
/// bigraded, and ranks of the (0,1) component give the Hodge numbers.
template <class F>
class DolbeaultComplex {
 public:
  using C = typename FieldInfo<F>::Complexified;

  explicit DolbeaultComplex(ComplexStructure<F> cs)
      : cs_(std::move(cs)), m_(cs_.dim() / 2), frame_(cs_.adaptedFrame()),
        alg_(cs_.algebra().complexify().changeBasis(frame_, false)), ce_(alg_) {
    if (!cs_.isIntegrable()) throw NotIntegrable();
  }

  std::size_t m() const { return m_; }
  const LieAlgebra<C>& adaptedAlgebra() const { return alg_; }
  const Matrix<C>& frame() const { return frame_; }

  std::size_t bidegreeCellCount(std::size_t p, std::size_t q) const {
    return choose(m_, p) * choose(m_, q);
  }

  /// Cells of bidegree (p,q): tuples with p indices below m and q above.
  std::vector<std::vector<std::size_t>> bidegreeCells(std::size_t p,
                                                      std::size_t q) const {
    std::vector<std::vector<std::size_t>> out;
    for (const auto& left : indexTuples(m_, p))
      for (const auto& right : indexTuples(m_, q)) {
        std::vector<std::size_t> idx = left;
        for (std::size_t v : right) idx.push_back(m_ + v);
        out.push_back(std::move(idx));
      }
    return out;
  }

  std::size_t holomorphicDegree(const std::vector<std::size_t>& cell) const {
    std::size_t p = 0;
    for (std::size_t v : cell)
      if (v < m_) ++p;
    return p;
  }

  /// The (0,1) component of d on bidegree (p,q); rows index source cells.
  /// Also verifies that no component outside (p+1,q) and (p,q+1) appears.
  SparseMatrix<C> dbar(std::size_t p, std::size_t q) const {
    auto src = bidegreeCells(p, q);
    auto dst = bidegreeCells(p, q + 1);
    std::map<std::vector<std::size_t>, std::size_t> dstIndex;
    for (std::size_t i = 0; i < dst.size(); ++i) dstIndex.emplace(dst[i], i);
    SparseMatrix<C> out(src.size(), dst.size());
    for (std::size_t r = 0; r < src.size(); ++r)
      for (auto& term : differentialTerms(alg_, src[r])) {
        std::size_t tp = holomorphicDegree(term.first);
        if (tp == p) {
          out.add(r, dstIndex.at(term.first), term.second);
        } else if (tp != p + 1) {
          throw OracleDisagreement(
              "differential leaves the two admissible bidegrees");
        }
      }
    return out;
  }

  std::size_t dbarRank(std::size_t p, std::size_t q) const {
    if (q >= m_) return 0;
    auto key = std::make_pair(p, q);
    auto it = dbarRank_.find(key);
    if (it != dbarRank_.end()) return it->second;
    std::size_t r = dbar(p, q).rank();
    dbarRank_.emplace(key, r);
    return r;
  }

  /// Checks the (p,q) -> (p,q+2) composition cancels, term by term.
  bool dbarSquaresToZero(std::size_t p, std::size_t q) const {
    for (const auto& cell : bidegreeCells(p, q)) {
      std::map<std::vector<std::size_t>, C> acc;
      for (auto& term : differentialTerms(alg_, cell)) {
        if (holomorphicDegree(term.first) != p) continue;
        for (auto& term2 : differentialTerms(alg_, term.first)) {
          if (holomorphicDegree(term2.first) != p) continue;
          auto it = acc.find(term2.first);
          C add = C(term.second * term2.second);
          if (it == acc.end())
            acc.emplace(term2.first, std::move(add));
          else
            it->second += add;
        }
      }
      for (const auto& kv : acc)
        if (!isZero(kv.second)) return false;
    }
    return true;
  }

  std::size_t hodgeNumber(std::size_t p, std::size_t q) const {
    std::size_t below = (q == 0) ? 0 : dbarRank(p, q - 1);
    return bidegreeCellCount(p, q) - dbarRank(p, q) - below;
  }

  std::vector<std::vector<std::size_t>> hodgeTable() const {
    std::vector<std::vector<std::size_t>> t(m_ + 1,
                                            std::vector<std::size_t>(m_ + 1));
    for (std::size_t p = 0; p <= m_; ++p)
      for (std::size_t q = 0; q <= m_; ++q) t[p][q] = hodgeNumber(p, q);
    return t;
  }

  /// Space of closed forms in the span of the first m coframe vectors,
  /// computed three independent ways: kernel of the full differential, kernel
  /// of both bigraded components, and the annihilator of the J closure of the
  /// derived subalgebra.  All three must agree.
  Subspace<C> closedHolomorphicOneForms() const {
    const std::size_t n = 2 * m_;
    // Route 1: full d on combinations of the first m one-cells.
    auto twoCells = ce_.cells(2);
    Matrix<C> full(twoCells.size(), m_);
    for (std::size_t c = 0; c < m_; ++c)
      for (auto& term : differentialTerms(alg_, {c}))
        full.at(ce_.cellIndex(2, term.first), c) = term.second;
    auto routeKernel = Subspace<C>::span(m_, full.kernelBasis());
    // Route 2: both bigraded components vanish.
    auto cells20 = bidegreeCells(2, 0);
    auto cells11 = bidegreeCells(1, 1);
    std::map<std::vector<std::size_t>, std::size_t> row20, row11;
    for (std::size_t i = 0; i < cells20.size(); ++i) row20.emplace(cells20[i], i);
    for (std::size_t i = 0; i < cells11.size(); ++i) row11.emplace(cells11[i], i);
    Matrix<C> stacked(cells20.size() + cells11.size(), m_);
    for (std::size_t c = 0; c < m_; ++c)
      for (auto& term : differentialTerms(alg_, {c})) {
        auto it20 = row20.find(term.first);
        if (it20 != row20.end()) {
          stacked.at(it20->second, c) = term.second;
          continue;
        }
        stacked.at(cells20.size() + row11.at(term.first), c) = term.second;
      }
    auto routeBigraded = Subspace<C>::span(m_, stacked.kernelBasis());
    // Route 3: annihilator of the J closure of the derived subalgebra,
    // rewritten in the adapted frame.
    auto frameInv = frame_.inverse();
    if (!frameInv) throw Error("adapted frame is singular");
    Subspace<C> derivedJ =
        complexifySubspace(cs_.jClosure(cs_.algebra().derived()));
    std::vector<Vec<C>> mapped;
    for (const auto& b : derivedJ.basis()) mapped.push_back(frameInv->apply(b));
    auto target = Subspace<C>::span(n, mapped);
    std::vector<Vec<C>> firstDuals;
    for (std::size_t k = 0; k < m_; ++k) {
      Vec<C> e = zeroVec<C>(n);
      e[k] = scalarOne<C>();
      firstDuals.push_back(std::move(e));
    }
    auto holDuals = Subspace<C>::span(n, firstDuals);
    auto annih = annihilator(target).intersect(holDuals);
    std::vector<Vec<C>> truncated;
    for (const auto& b : annih.basis())
      truncated.emplace_back(b.begin(), b.begin() + static_cast<long>(m_));
    auto routeAnnihilator = Subspace<C>::span(m_, truncated);
    if (!(routeKernel == routeBigraded && routeBigraded == routeAnnihilator))
      throw OracleDisagreement("closed holomorphic one form routes disagree");
    return routeKernel;
  }

  /// Dimensions of the cohomology of the (0,1) subalgebra acting on the
  /// quotient by itself, for q = 0..m.
  std::vector<std::size_t> valuedDolbeaultDims() const {
    const std::size_t n = 2 * m_;
    std::vector<Vec<C>> antiBasis;
    for (std::size_t k = m_; k < n; ++k) antiBasis.push_back(alg_.basisVec(k));
    auto anti = Subspace<C>::span(n, antiBasis);
    LieAlgebra<C> h = alg_.restrictTo(anti);
    // The antiholomorphic part is a subalgebra but usually not an ideal, so
    // the module is the quotient vector space only: in the adapted frame it
    // is the leading coordinate block, and the action is the compressed
    // adjoint.  The representation law below holds exactly because the
    // subalgebra is closed under the bracket.
    Matrix<C> proj(m_, n);
    Matrix<C> incl(n, m_);
    for (std::size_t k = 0; k < m_; ++k) {
      proj.at(k, k) = scalarOne<C>();
      incl.at(k, k) = scalarOne<C>();
    }
    std::vector<Matrix<C>> rho;
    for (std::size_t a = 0; a < m_; ++a)
      rho.push_back(proj * alg_.adjoint(alg_.basisVec(m_ + a)) * incl);
    return cohomologyWithCoefficients(h, rho);
  }

 private:
  ComplexStructure<F> cs_;
  std::size_t m_;
  Matrix<C> frame_;
  LieAlgebra<C> alg_;
  CeComplex<C> ce_;
  mutable std::map<std::pair<std::size_t, std::size_t>, std::size_t> dbarRank_;
};

}  // namespace nilcx

#endif
