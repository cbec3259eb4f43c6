#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "dalg/errors.hpp"
#include "dalg/rational.hpp"
#include "dalg/sparse_poly.hpp"

namespace dalg {

/// Column order of a Macaulay layer. Pivots are taken at the first nonzero
/// column, so the pivot of a row is its leading monomial in this order.
enum class ColumnOrder {
  kGrevlex,
  /// Monomials with a non-target factor first (higher non-target degree
  /// first, then grevlex on the non-target part), target-only monomials
  /// last; ties broken by grevlex on the target part.
  kBlockElimination,
};

/// rows x columns cap per layer. Reads DALG_BUDGET when set.
std::size_t default_budget();

struct MacaulayOptions {
  ColumnOrder order = ColumnOrder::kGrevlex;
  /// Per variable position: whether it belongs to the target block.
  std::vector<bool> target;
  std::size_t budget = default_budget();
  /// Keep the reduction history of the current layer for certificates.
  bool record_history = false;
};

/// Number of degree-k monomials in v variables.
Integer monomial_count(std::size_t v, std::uint32_t k);

/// Incremental Macaulay matrices of a homogeneous ideal, one degree at a
/// time.
///
/// Rows of layer D are m * g_j with deg m = D - deg g_j, listed generator
/// by generator. A multiplier m is dropped when it is a leading monomial of
/// <g_0..g_{j-1}> in degree D - deg g_j: the row is then a combination of
/// rows already present, so the row span is still the full degree-D
/// component of every prefix ideal. Reduction is exact with monic pivots.
template <class Scalar>
class MacaulayEngine {
 public:
  using Poly = SparsePoly<Scalar>;
  using Key = std::string;  // dense exponent vector, one byte per variable

  struct Origin {
    std::uint32_t generator;
    Key multiplier;
  };

  struct LayerResult {
    std::uint32_t degree = 0;
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::size_t rank = 0;
    /// Rank of <g_0..g_j> in this degree, for every j.
    std::vector<std::size_t> prefix_rank;
  };

  MacaulayEngine(std::vector<VarId> vars, const std::vector<Poly>& generators, MacaulayOptions options = {})
      : vars_(std::move(vars)), options_(std::move(options)) {
    if (options_.order == ColumnOrder::kBlockElimination && options_.target.size() != vars_.size())
      throw DomainError("block elimination order needs one target flag per variable");
    for (std::size_t k = 0; k < vars_.size(); ++k) position_[vars_[k]] = k;
    for (const auto& g : generators) add_generator(g);
  }

  const std::vector<VarId>& variables() const { return vars_; }
  std::size_t generator_count() const { return gens_.size(); }
  std::uint32_t generator_degree(std::size_t j) const { return gens_[j].degree; }
  std::uint32_t next_degree() const { return static_cast<std::uint32_t>(creators_.size()); }

  /// Builds and reduces the next layer. Throws BudgetExceeded before any
  /// reduction work when rows x columns exceeds the budget.
  LayerResult step() {
    const auto D = next_degree();
    layer_ = Layer{};
    layer_.degree = D;

    std::vector<Origin> specs;
    for (std::uint32_t j = 0; j < gens_.size(); ++j) {
      const auto& g = gens_[j];
      if (g.degree > D) continue;
      const std::uint32_t e = D - g.degree;
      const auto& lead = creators_[e];
      for (const Key& m : monomials(e)) {
        auto it = lead.find(m);
        if (it != lead.end() && it->second < j) continue;
        specs.push_back({j, m});
      }
    }

    std::unordered_map<Key, std::uint32_t> col_of;
    for (const auto& s : specs)
      for (const auto& t : gens_[s.generator].terms) col_of.emplace(product(s.multiplier, t.first), 0);
    layer_.columns.reserve(col_of.size());
    for (const auto& [k, unused] : col_of) layer_.columns.push_back(k);
    const std::size_t rows = specs.size();
    const std::size_t cols = layer_.columns.size();
    if (cols != 0 && rows > options_.budget / cols) throw BudgetExceeded(D, rows, cols, options_.budget);
    std::sort(layer_.columns.begin(), layer_.columns.end(),
              [this](const Key& a, const Key& b) { return greater(a, b); });
    for (std::uint32_t c = 0; c < cols; ++c) col_of[layer_.columns[c]] = c;

    LayerResult result;
    result.degree = D;
    result.rows = rows;
    result.cols = cols;
    result.prefix_rank.assign(gens_.size(), 0);

    std::unordered_map<Key, std::uint32_t> creator;
    std::vector<Scalar> acc(cols);
    std::vector<std::int64_t> pivot_of(cols, -1);
    std::size_t next_spec = 0;
    for (std::uint32_t j = 0; j < gens_.size(); ++j) {
      for (; next_spec < specs.size() && specs[next_spec].generator == j; ++next_spec) {
        const Origin& s = specs[next_spec];
        std::size_t first = cols;
        for (const auto& [key, coef] : gens_[j].terms) {
          const std::uint32_t c = col_of[product(s.multiplier, key)];
          acc[c] = coef;
          first = std::min<std::size_t>(first, c);
        }
        std::vector<std::pair<std::uint32_t, Scalar>> history;
        std::size_t c = first;
        for (;; ++c) {
          while (c < cols && is_zero(acc[c])) ++c;
          if (c == cols) break;
          const std::int64_t p = pivot_of[c];
          if (p < 0) break;
          const Row& prow = layer_.pivots[static_cast<std::size_t>(p)];
          const Scalar f = acc[c];
          for (std::size_t k = 1; k < prow.cols.size(); ++k) acc[prow.cols[k]] -= f * prow.vals[k];
          acc[c] = Scalar();
          if (options_.record_history) history.emplace_back(static_cast<std::uint32_t>(p), f);
        }
        if (c == cols) continue;
        Row row;
        const Scalar inv = Scalar(1) / acc[c];
        for (std::size_t k = c; k < cols; ++k) {
          if (is_zero(acc[k])) continue;
          row.cols.push_back(static_cast<std::uint32_t>(k));
          row.vals.push_back(k == c ? Scalar(1) : acc[k] * inv);
          acc[k] = Scalar();
        }
        pivot_of[c] = static_cast<std::int64_t>(layer_.pivots.size());
        creator.emplace(layer_.columns[c], j);
        if (options_.record_history) {
          layer_.origins.push_back(s);
          layer_.scale.push_back(inv);
          layer_.history.push_back(std::move(history));
        }
        layer_.pivots.push_back(std::move(row));
      }
      result.prefix_rank[j] = layer_.pivots.size();
    }
    result.rank = layer_.pivots.size();
    creators_.push_back(std::move(creator));
    return result;
  }

  /// Pivot rows of the current layer whose leading column is target-only,
  /// smallest leading monomial first.
  std::vector<std::size_t> target_pivots() const {
    std::vector<std::size_t> out;
    for (std::size_t p = 0; p < layer_.pivots.size(); ++p)
      if (is_target_only(layer_.columns[layer_.pivots[p].cols.front()])) out.push_back(p);
    std::sort(out.begin(), out.end(), [this](std::size_t a, std::size_t b) {
      return layer_.pivots[a].cols.front() > layer_.pivots[b].cols.front();
    });
    return out;
  }

  /// Pivot row as a polynomial in the ring variables.
  Poly row_poly(std::size_t pivot) const {
    const Row& r = layer_.pivots.at(pivot);
    std::vector<typename Poly::Term> ts;
    for (std::size_t k = 0; k < r.cols.size(); ++k) ts.push_back({to_monomial(layer_.columns[r.cols[k]]), r.vals[k]});
    return Poly::from_terms(std::move(ts));
  }

  /// Expresses a pivot row of the current layer as sum of coefficient *
  /// multiplier * generator. Requires record_history.
  std::vector<std::pair<Origin, Scalar>> certificate(std::size_t pivot) const {
    if (!options_.record_history) throw DomainError("certificate requires record_history");
    std::vector<Scalar> w(pivot + 1);
    w[pivot] = Scalar(1);
    std::vector<std::pair<Origin, Scalar>> out;
    for (std::size_t p = pivot + 1; p-- > 0;) {
      if (is_zero(w[p])) continue;
      const Scalar wp = w[p] * layer_.scale[p];
      out.emplace_back(layer_.origins[p], wp);
      for (const auto& [q, f] : layer_.history[p]) w[q] -= wp * f;
    }
    return out;
  }

  Monomial to_monomial(const Key& key) const {
    std::vector<Monomial::Factor> fs;
    for (std::size_t k = 0; k < key.size(); ++k)
      if (key[k] != 0) fs.emplace_back(vars_[k], static_cast<unsigned char>(key[k]));
    return Monomial::from_factors(std::move(fs));
  }

 private:
  struct Generator {
    std::uint32_t degree = 0;
    std::vector<std::pair<Key, Scalar>> terms;
  };
  struct Row {
    std::vector<std::uint32_t> cols;
    std::vector<Scalar> vals;
  };
  struct Layer {
    std::uint32_t degree = 0;
    std::vector<Key> columns;
    std::vector<Row> pivots;
    std::vector<Origin> origins;
    std::vector<Scalar> scale;
    std::vector<std::vector<std::pair<std::uint32_t, Scalar>>> history;
  };

  void add_generator(const Poly& g) {
    if (g.is_zero_poly()) throw DomainError("Macaulay generators must be nonzero");
    Generator out;
    out.degree = g.total_degree();
    for (const auto& t : g.terms()) {
      if (t.mono.degree() != out.degree) throw DomainError("Macaulay generators must be homogeneous");
      Key k(vars_.size(), '\0');
      for (const auto& [v, e] : t.mono.factors()) {
        auto it = position_.find(v);
        if (it == position_.end()) throw DomainError("generator uses a variable outside the ring");
        if (e > 255) throw DomainError("exponent too large for a Macaulay layer");
        k[it->second] = static_cast<char>(e);
      }
      out.terms.emplace_back(std::move(k), t.coef);
    }
    gens_.push_back(std::move(out));
  }

  Key product(const Key& a, const Key& b) const {
    Key r = a;
    for (std::size_t k = 0; k < r.size(); ++k)
      r[k] = static_cast<char>(static_cast<unsigned char>(r[k]) + static_cast<unsigned char>(b[k]));
    return r;
  }

  bool is_target_only(const Key& k) const {
    if (options_.order != ColumnOrder::kBlockElimination) return false;
    for (std::size_t p = 0; p < k.size(); ++p)
      if (!options_.target[p] && k[p] != 0) return false;
    return true;
  }

  // Grevlex over the positions selected by `block`: on equal degree the
  // monomial with the smaller exponent at the lowest position is larger.
  int grevlex_part(const Key& a, const Key& b, int block) const {
    unsigned da = 0;
    unsigned db = 0;
    for (std::size_t p = 0; p < a.size(); ++p) {
      if (block >= 0 && options_.target[p] != (block == 1)) continue;
      da += static_cast<unsigned char>(a[p]);
      db += static_cast<unsigned char>(b[p]);
    }
    if (da != db) return da > db ? 1 : -1;
    for (std::size_t p = 0; p < a.size(); ++p) {
      if (block >= 0 && options_.target[p] != (block == 1)) continue;
      if (a[p] != b[p]) return static_cast<unsigned char>(a[p]) < static_cast<unsigned char>(b[p]) ? 1 : -1;
    }
    return 0;
  }

  bool greater(const Key& a, const Key& b) const {
    if (options_.order == ColumnOrder::kGrevlex) return grevlex_part(a, b, -1) > 0;
    const int nt = grevlex_part(a, b, 0);
    if (nt != 0) return nt > 0;
    return grevlex_part(a, b, 1) > 0;
  }

  // All monomials of degree e, cached per degree.
  const std::vector<Key>& monomials(std::uint32_t e) {
    if (e >= monomial_cache_.size()) monomial_cache_.resize(e + 1);
    auto& out = monomial_cache_[e];
    if (!out.empty() || vars_.empty()) return out;
    Key cur(vars_.size(), '\0');
    enumerate(cur, 0, e, out);
    return out;
  }

  void enumerate(Key& cur, std::size_t pos, std::uint32_t left, std::vector<Key>& out) const {
    if (pos + 1 == cur.size()) {
      cur[pos] = static_cast<char>(left);
      out.push_back(cur);
      cur[pos] = 0;
      return;
    }
    for (std::uint32_t e = 0; e <= left; ++e) {
      cur[pos] = static_cast<char>(e);
      enumerate(cur, pos + 1, left - e, out);
    }
    cur[pos] = 0;
  }

  std::vector<VarId> vars_;
  MacaulayOptions options_;
  std::unordered_map<VarId, std::size_t> position_;
  std::vector<Generator> gens_;
  std::vector<std::unordered_map<Key, std::uint32_t>> creators_;
  std::vector<std::vector<Key>> monomial_cache_;
  Layer layer_;
};

}  // namespace dalg
