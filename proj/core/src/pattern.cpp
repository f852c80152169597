#include "netobs/pattern.hpp"

#include <cmath>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace netobs {

char to_char(Symbol s) {
  switch (s) {
    case Symbol::Zero: return '0';
    case Symbol::Star: return '*';
    case Symbol::Unknown: return '?';
  }
  throw std::logic_error("bad symbol");
}

Symbol symbol_from_char(char c) {
  switch (c) {
    case '0': return Symbol::Zero;
    case '*': return Symbol::Star;
    case '?': return Symbol::Unknown;
    default:
      throw std::invalid_argument(std::string("invalid pattern character '") +
                                  c + "'");
  }
}

PatternMatrix::PatternMatrix(int rows, int cols, Symbol fill)
    : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("negative dimension");
  data_.assign(static_cast<std::size_t>(rows) * cols, fill);
}

int PatternMatrix::idx(int i, int j) const {
  if (i < 0 || i >= rows_ || j < 0 || j >= cols_)
    throw std::out_of_range("pattern index out of range");
  return i * cols_ + j;
}

PatternMatrix PatternMatrix::transposed() const {
  PatternMatrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t.set(j, i, (*this)(i, j));
  return t;
}

std::string PatternMatrix::to_text() const {
  std::string out;
  out.reserve(static_cast<std::size_t>(rows_) * (cols_ + 1));
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) out.push_back(to_char((*this)(i, j)));
    out.push_back('\n');
  }
  return out;
}

PatternMatrix PatternMatrix::parse(const std::string& text) {
  std::vector<std::vector<Symbol>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<Symbol> row;
    for (char c : line) {
      if (c == ' ' || c == '\t' || c == ',' || c == '\r') continue;
      row.push_back(symbol_from_char(c));
    }
    if (row.empty()) continue;
    if (!rows.empty() && row.size() != rows.front().size())
      throw std::invalid_argument("ragged pattern rows");
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw std::invalid_argument("empty pattern text");
  PatternMatrix p(static_cast<int>(rows.size()),
                  static_cast<int>(rows.front().size()));
  for (int i = 0; i < p.rows(); ++i)
    for (int j = 0; j < p.cols(); ++j) p.set(i, j, rows[i][j]);
  return p;
}

PatternMatrix PatternMatrix::diagonal(int n, Symbol s) {
  PatternMatrix p(n, n);
  for (int i = 0; i < n; ++i) p.set(i, i, s);
  return p;
}

std::ostream& operator<<(std::ostream& os, const PatternMatrix& p) {
  return os << p.to_text();
}

bool pattern_membership(const RealMatrix& m, const PatternMatrix& p,
                        double star_tol) {
  if (m.rows() != p.rows() || m.cols() != p.cols())
    throw std::invalid_argument("pattern_membership: dimension mismatch");
  for (int i = 0; i < p.rows(); ++i) {
    for (int j = 0; j < p.cols(); ++j) {
      const double v = m(i, j);
      if (!std::isfinite(v))
        throw std::invalid_argument("pattern_membership: non-finite entry");
      switch (p(i, j)) {
        case Symbol::Zero:
          if (v != 0.0) return false;
          break;
        case Symbol::Star:
          if (std::abs(v) <= star_tol) return false;
          break;
        case Symbol::Unknown:
          break;
      }
    }
  }
  return true;
}

DirectedGraph graph_of(const PatternMatrix& m) {
  DirectedGraph g;
  g.node_count = std::max(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) {
      switch (m(i, j)) {
        case Symbol::Star: g.e_star.emplace_back(j, i); break;
        case Symbol::Unknown: g.e_unknown.emplace_back(j, i); break;
        case Symbol::Zero: break;
      }
    }
  }
  return g;
}

PatternMatrix pattern_of_graph(const DirectedGraph& g, int rows, int cols) {
  PatternMatrix p(rows, cols);
  for (auto [from, to] : g.e_star) p.set(to, from, Symbol::Star);
  for (auto [from, to] : g.e_unknown) p.set(to, from, Symbol::Unknown);
  return p;
}

double unknown_weight(UnknownCount u) {
  switch (u) {
    case UnknownCount::Zero: return 0.0;
    case UnknownCount::Half: return 0.5;
    case UnknownCount::Full: return 1.0;
  }
  throw std::logic_error("bad unknown count");
}

DegreeCosts degree_costs(const PatternMatrix& a, UnknownCount unknown) {
  if (!a.square())
    throw std::invalid_argument("degree_costs: pattern must be square");
  const double w = unknown_weight(unknown);
  const int n = a.rows();
  DegreeCosts d{RealVector::Zero(n), RealVector::Zero(n)};
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      double v = 0.0;
      if (a(i, j) == Symbol::Star) v = 1.0;
      else if (a(i, j) == Symbol::Unknown) v = w;
      d.c_out(i) += v;
      d.c_in(j) += v;
    }
  }
  return d;
}

}  // namespace netobs
