#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace netobs {

using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

/// Entry of a pattern matrix. Zero forces an exact zero, Star a nonzero,
/// Unknown is unconstrained. Ordering Zero < Star < Unknown is relied on
/// for canonical serialization.
enum class Symbol : std::uint8_t { Zero = 0, Star = 1, Unknown = 2 };

char to_char(Symbol s);
Symbol symbol_from_char(char c);

/// Dense rectangular grid of pattern symbols. Immutable in spirit: build it,
/// then share it freely (all operations on it are pure).
class PatternMatrix {
 public:
  PatternMatrix() = default;
  PatternMatrix(int rows, int cols, Symbol fill = Symbol::Zero);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Symbol operator()(int i, int j) const { return data_[idx(i, j)]; }
  void set(int i, int j, Symbol s) { data_[idx(i, j)] = s; }

  PatternMatrix transposed() const;

  bool operator==(const PatternMatrix& o) const = default;

  /// Canonical text form: one row per line, characters 0 * ?.
  std::string to_text() const;

  /// Parses the canonical text form; also accepts comma-separated cells
  /// (the CSV variant) and ignores blank lines and spaces.
  static PatternMatrix parse(const std::string& text);

  /// Builds a square pattern with the given diagonal symbol.
  static PatternMatrix diagonal(int n, Symbol s);

 private:
  int idx(int i, int j) const;

  int rows_ = 0;
  int cols_ = 0;
  std::vector<Symbol> data_;
};

std::ostream& operator<<(std::ostream& os, const PatternMatrix& p);

/// Directed graph of a pattern matrix: edge (j, i) is in e_star when
/// M(i,j) = * and in e_unknown when M(i,j) = ?.
struct DirectedGraph {
  int node_count = 0;
  std::vector<std::pair<int, int>> e_star;     // (from, to)
  std::vector<std::pair<int, int>> e_unknown;  // (from, to)
};

/// True iff M realizes the pattern P: zeros exact, stars nonzero beyond
/// `star_tol`, unknowns unconstrained. Throws on dimension mismatch or
/// non-finite entries.
bool pattern_membership(const RealMatrix& m, const PatternMatrix& p,
                        double star_tol = 1e-12);

/// Graph view of a pattern. Node count is max(rows, cols), so a combined
/// matrix with n_x rows and n_x+n_y columns yields n_x+n_y nodes.
DirectedGraph graph_of(const PatternMatrix& m);

/// Reconstructs the pattern of a graph produced by graph_of (inverse on
/// square-or-wider patterns given the original shape).
PatternMatrix pattern_of_graph(const DirectedGraph& g, int rows, int cols);

/// Weight given to Unknown entries in degree counts: a possible coupling
/// counts as half a certain one by default; Zero and Full are the boolean
/// alternatives.
enum class UnknownCount { Zero, Half, Full };

struct DegreeCosts {
  RealVector c_in;   // per-state column counts of A
  RealVector c_out;  // per-state row counts of A
};

/// Degree cost components of a square pattern. c_out(i) counts the non-Zero
/// entries in row i (the out-degree of node i in the graph of A^T), c_in(i)
/// those in column i; Unknown entries contribute per `unknown`.
DegreeCosts degree_costs(const PatternMatrix& a,
                         UnknownCount unknown = UnknownCount::Half);

double unknown_weight(UnknownCount u);

}  // namespace netobs
