#pragma once

#include <algorithm>
#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cherednik/field.hpp"

namespace cherednik {

/// Dense row-major matrix over a field.
template <class Field>
class Matrix {
 public:
  using Element = typename Field::Element;

  Matrix(std::shared_ptr<const Field> field, std::size_t rows, std::size_t cols)
      : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, field_->zero()) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Field& field() const { return *field_; }
  const std::shared_ptr<const Field>& field_ptr() const { return field_; }

  Element& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Element& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<Element> row(std::size_t r) const {
    return {data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
            data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
  }

 private:
  std::shared_ptr<const Field> field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Element> data_;
};

/// Reduced row echelon form: pivot entries are one, pivot columns are zero
/// elsewhere, pivots strictly increase (leftmost-pivot convention).
template <class Field>
struct Echelon {
  using Element = typename Field::Element;

  std::size_t cols = 0;
  std::vector<std::vector<Element>> rows;
  std::vector<std::size_t> pivots;

  std::size_t rank() const { return rows.size(); }

  bool same_as(const Echelon& other, const Field& F) const {
    if (cols != other.cols || pivots != other.pivots) return false;
    for (std::size_t r = 0; r < rows.size(); ++r)
      for (std::size_t c = 0; c < cols; ++c)
        if (!F.equal(rows[r][c], other.rows[r][c])) return false;
    return true;
  }
};

/// Gauss-Jordan elimination with plain field arithmetic.
template <class Field>
Echelon<Field> rref(const Matrix<Field>& m) {
  const Field& F = m.field();
  std::vector<std::vector<typename Field::Element>> a;
  a.reserve(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) a.push_back(m.row(r));
  Echelon<Field> out;
  out.cols = m.cols();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m.cols() && rank < a.size(); ++col) {
    std::size_t piv = rank;
    while (piv < a.size() && F.is_zero(a[piv][col])) ++piv;
    if (piv == a.size()) continue;
    std::swap(a[piv], a[rank]);
    const auto inv = F.inv(a[rank][col]);
    for (auto& x : a[rank]) x = F.mul(x, inv);
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == rank || F.is_zero(a[r][col])) continue;
      const auto f = a[r][col];
      for (std::size_t c = col; c < m.cols(); ++c)
        if (!F.is_zero(a[rank][c])) a[r][c] = F.sub(a[r][c], F.mul(f, a[rank][c]));
    }
    out.pivots.push_back(col);
    ++rank;
  }
  a.resize(rank);
  out.rows = std::move(a);
  return out;
}

/// Basis of the null space {v : M v = 0} of an echelon form, one vector per
/// free column (1 at the free column).
template <class Field>
std::vector<std::vector<typename Field::Element>> nullspace(const Echelon<Field>& e, const Field& F) {
  std::vector<bool> is_pivot(e.cols, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<std::vector<typename Field::Element>> basis;
  for (std::size_t f = 0; f < e.cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<typename Field::Element> v(e.cols, F.zero());
    v[f] = F.one();
    for (std::size_t r = 0; r < e.rows.size(); ++r) v[e.pivots[r]] = F.neg(e.rows[r][f]);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Canonical RREF of the null space of `e`.
template <class Field>
Echelon<Field> nullspace_rref(const Echelon<Field>& e, std::shared_ptr<const Field> field) {
  auto basis = nullspace(e, *field);
  Matrix<Field> m(field, basis.size(), e.cols);
  for (std::size_t r = 0; r < basis.size(); ++r)
    for (std::size_t c = 0; c < e.cols; ++c) m.at(r, c) = basis[r][c];
  return rref(m);
}

// ---------------------------------------------------------------------------

/// Incremental row-space builder. Rows are inserted one at a time and kept
/// in echelon form with pivot entry one; `insert` reports whether the row
/// enlarged the span.
template <class Field>
class RowReducer {
 public:
  using Element = typename Field::Element;
  /// Entry type used by callers when assembling rows.
  using Entry = Element;

  RowReducer(std::shared_ptr<const Field> field, std::size_t cols) : field_(std::move(field)), cols_(cols) {}

  const Field& field() const { return *field_; }
  std::size_t cols() const { return cols_; }
  std::size_t rank() const { return rows_.size(); }
  const std::vector<std::vector<Entry>>& rows() const { return rows_; }

  Element to_element(const Entry& e) const { return e; }
  Entry mul(const Entry& a, const Entry& b) const { return field_->mul(a, b); }
  Entry add(const Entry& a, const Entry& b) const { return field_->add(a, b); }
  bool is_zero(const Entry& a) const { return field_->is_zero(a); }
  Entry zero() const { return field_->zero(); }

  /// Reduces `v` against the current rows in place; returns the column of
  /// its leading nonzero entry or cols() when it reduces to zero.
  std::size_t reduce(std::vector<Entry>& v) const {
    const Field& F = *field_;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const std::size_t p = pivots_[r];
      if (F.is_zero(v[p])) continue;
      const auto f = v[p];
      const auto& row = rows_[r];
      for (std::size_t c = p; c < cols_; ++c)
        if (!F.is_zero(row[c])) v[c] = F.sub(v[c], F.mul(f, row[c]));
    }
    for (std::size_t c = 0; c < cols_; ++c)
      if (!F.is_zero(v[c])) return c;
    return cols_;
  }

  bool insert(std::vector<Entry> v) {
    if (v.size() != cols_) throw std::invalid_argument("row length mismatch");
    const std::size_t lead = reduce(v);
    if (lead == cols_) return false;
    const auto inv = field_->inv(v[lead]);
    for (std::size_t c = lead; c < cols_; ++c) v[c] = field_->mul(v[c], inv);
    auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), lead) - pivots_.begin();
    pivots_.insert(pivots_.begin() + pos, lead);
    rows_.insert(rows_.begin() + pos, std::move(v));
    return true;
  }

  bool insert_field_row(const std::vector<Element>& v) { return insert(v); }

  /// Canonical RREF of the span.
  Echelon<Field> echelon() const {
    Echelon<Field> out;
    out.cols = cols_;
    out.pivots = pivots_;
    out.rows = rows_;
    back_substitute(out, *field_);
    return out;
  }

 private:
  static void back_substitute(Echelon<Field>& e, const Field& F) {
    for (std::size_t r = e.rows.size(); r-- > 0;) {
      const std::size_t p = e.pivots[r];
      for (std::size_t u = 0; u < r; ++u) {
        if (F.is_zero(e.rows[u][p])) continue;
        const auto f = e.rows[u][p];
        for (std::size_t c = p; c < e.cols; ++c)
          if (!F.is_zero(e.rows[r][c])) e.rows[u][c] = F.sub(e.rows[u][c], F.mul(f, e.rows[r][c]));
      }
    }
  }

  std::shared_ptr<const Field> field_;
  std::size_t cols_;
  std::vector<std::vector<Entry>> rows_;
  std::vector<std::size_t> pivots_;
};

/// Fraction-free variant over F_p(c): rows are kept as primitive
/// polynomial vectors over F_p[c] (content removed after each insertion),
/// elimination uses cross-multiplication, and the field RREF is produced
/// only on request.
template <>
class RowReducer<RationalFunctionField> {
 public:
  using Field = RationalFunctionField;
  using Element = RationalFunction;
  using Entry = UPoly;

  RowReducer(std::shared_ptr<const Field> field, std::size_t cols)
      : field_(std::move(field)), cols_(cols), p_(field_->characteristic()) {}

  const Field& field() const { return *field_; }
  std::size_t cols() const { return cols_; }
  std::size_t rank() const { return rows_.size(); }
  const std::vector<std::vector<Entry>>& rows() const { return rows_; }

  Entry mul(const Entry& a, const Entry& b) const { return a * b; }
  Entry add(const Entry& a, const Entry& b) const { return a + b; }
  bool is_zero(const Entry& a) const { return a.is_zero(); }
  Entry zero() const { return UPoly(p_); }
  Element to_element(const Entry& e) const { return field_->embed(e); }

  /// Clears denominators of a field row into a polynomial row.
  std::vector<Entry> clear_denominators(const std::vector<Element>& v) const {
    UPoly l = UPoly::constant(p_, 1);
    for (const auto& x : v)
      if (!x.num.is_zero() && x.den.degree() > 0) l = l * x.den.exact_div(UPoly::gcd(l, x.den));
    std::vector<Entry> out;
    out.reserve(v.size());
    for (const auto& x : v) out.push_back(x.num.is_zero() ? UPoly(p_) : x.num * l.exact_div(x.den));
    return out;
  }

  std::size_t reduce(std::vector<Entry>& v) const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const std::size_t p = pivots_[r];
      if (v[p].is_zero()) continue;
      const UPoly& b = rows_[r][p];
      UPoly g = UPoly::gcd(b, v[p]);
      const UPoly sb = b.exact_div(g);     // multiplier for v
      const UPoly sv = v[p].exact_div(g);  // multiplier for the basis row
      const auto& row = rows_[r];
      for (std::size_t c = 0; c < cols_; ++c) {
        if (c < p && v[c].is_zero()) continue;
        if (row[c].is_zero()) {
          if (!v[c].is_zero() && !sb.is_one()) v[c] = v[c] * sb;
          continue;
        }
        v[c] = (sb.is_one() ? v[c] : v[c] * sb) - sv * row[c];
      }
      make_primitive(v);
    }
    for (std::size_t c = 0; c < cols_; ++c)
      if (!v[c].is_zero()) return c;
    return cols_;
  }

  bool insert(std::vector<Entry> v) {
    if (v.size() != cols_) throw std::invalid_argument("row length mismatch");
    const std::size_t lead = reduce(v);
    if (lead == cols_) return false;
    make_primitive(v);
    auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), lead) - pivots_.begin();
    pivots_.insert(pivots_.begin() + pos, lead);
    rows_.insert(rows_.begin() + pos, std::move(v));
    return true;
  }

  bool insert_field_row(const std::vector<Element>& v) { return insert(clear_denominators(v)); }

  /// Canonical RREF over F_p(c): normalize pivots, then back-substitute in
  /// the field.
  Echelon<Field> echelon() const {
    const Field& F = *field_;
    Echelon<Field> out;
    out.cols = cols_;
    out.pivots = pivots_;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const UPoly& piv = rows_[r][pivots_[r]];
      std::vector<Element> row;
      row.reserve(cols_);
      for (const auto& x : rows_[r]) row.push_back(x.is_zero() ? F.zero() : F.normalize(x, piv));
      out.rows.push_back(std::move(row));
    }
    for (std::size_t r = out.rows.size(); r-- > 0;) {
      const std::size_t p = out.pivots[r];
      for (std::size_t u = 0; u < r; ++u) {
        if (F.is_zero(out.rows[u][p])) continue;
        const auto f = out.rows[u][p];
        for (std::size_t c = p; c < cols_; ++c)
          if (!F.is_zero(out.rows[r][c])) out.rows[u][c] = F.sub(out.rows[u][c], F.mul(f, out.rows[r][c]));
      }
    }
    return out;
  }

 private:
  void make_primitive(std::vector<Entry>& v) const {
    UPoly g(p_);
    for (const auto& x : v) {
      if (x.is_zero()) continue;
      g = g.is_zero() ? x.monic() : UPoly::gcd(g, x);
      if (g.degree() == 0) break;
    }
    if (g.is_zero()) return;
    // Make the leading entry monic as well so rows are canonical up to a
    // unit of F_p.
    std::uint32_t lead_scale = 1;
    for (const auto& x : v)
      if (!x.is_zero()) {
        lead_scale = modp::inv(x.leading(), p_);  // g is monic
        break;
      }
    for (auto& x : v) {
      if (x.is_zero()) continue;
      if (g.degree() > 0) x = x.exact_div(g);
      if (lead_scale != 1) x = x.scaled(lead_scale);
    }
  }

  std::shared_ptr<const Field> field_;
  std::size_t cols_;
  std::uint32_t p_;
  std::vector<std::vector<Entry>> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace cherednik
