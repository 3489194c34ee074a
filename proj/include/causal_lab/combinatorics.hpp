#ifndef CAUSAL_LAB_COMBINATORICS_HPP
#define CAUSAL_LAB_COMBINATORICS_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace causal_lab {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline constexpr int kMaxDiagramBoxes = 200;
inline constexpr std::size_t kMaxDiagramCount = 1'000'000;
inline constexpr std::size_t kMaxGroupings = 1'000'000;
// Above this many diagrams extremal_diagrams skips the exhaustive cross-check.
inline constexpr std::size_t kExtremalScanCap = 50'000;

/// Partition of N into non-increasing positive rows. Trailing zero rows are
/// accepted on input and dropped, so (2,2,0) == (2,2).
class YoungDiagram {
 public:
  YoungDiagram() = default;
  explicit YoungDiagram(std::vector<int> rows);

  const std::vector<int>& rows() const { return rows_; }
  int box_count() const { return boxes_; }
  int row_count() const { return static_cast<int>(rows_.size()); }
  // Row i (0-based); zero past the last row.
  int row(int i) const { return i < row_count() ? rows_[i] : 0; }
  int column_length(int j) const;

  std::string to_string() const;
  bool operator==(const YoungDiagram&) const = default;

 private:
  std::vector<int> rows_;
  int boxes_ = 0;
};

struct SchurWeylRecord {
  YoungDiagram diagram;
  int d = 0;
  BigInt hookProduct;
  BigInt repDim;        // dimension of the U(d) irrep
  BigInt multiplicity;  // dimension of the S_N irrep
  Rational measure;     // repDim * multiplicity / d^N
};

/// All diagrams with N boxes and at most d rows, descending lexicographic order.
std::vector<YoungDiagram> enumerate_diagrams(int N, int d);

BigInt hook_product(const YoungDiagram& lambda);
SchurWeylRecord schur_weyl_record(const YoungDiagram& lambda, int d);

/// d_lambda / m_lambda as an exact rational.
Rational dimension_ratio(const YoungDiagram& lambda, int d);

bool majorizes(const YoungDiagram& lambda, const YoungDiagram& mu);

/// Diagram with t = N mod d rows of length ceil(N/d) and d - t rows of length floor(N/d).
/// For d | N this is the rectangular diagram.
YoungDiagram balanced_diagram(int N, int d);

struct ExtremalDiagrams {
  YoungDiagram minRatio;
  YoungDiagram maxRatio;
  bool scanned = false;  // true when the exhaustive check was run
};

/// Minimizer and maximizer of d_lambda / m_lambda over Y_{N,d}. Throws
/// std::logic_error if the exhaustive scan contradicts the closed-form answer.
ExtremalDiagrams extremal_diagrams(int N, int d);

/// Sum of m_lambda over Y_{N,d}.
BigInt multiplicity_sum(int N, int d);

// A partition of {0..N-1} into blocks of size d, blocks sorted internally
// and ordered by their smallest element.
using Grouping = std::vector<std::vector<int>>;

struct GroupingCatalog {
  int N = 0;
  int d = 0;
  BigInt count;
  bool countOnly = false;  // set when count exceeds kMaxGroupings
  std::vector<Grouping> configurations;
};

/// N! / ((d!)^{N/d} (N/d)!).
BigInt grouping_count(int N, int d);
GroupingCatalog groupings(int N, int d);

/// Large-N estimate of m_lambda for the rectangular diagram, natural log.
double log_asymptotic_multiplicity(int N, int d);
double asymptotic_multiplicity(int N, int d);

struct CausePlan {
  std::int64_t k = 0;
  int d = 0;
  int N = 0;
  double errorBound = 0.0;
  double slack = 0.0;
};

CausePlan cause_exact_plan(std::int64_t k, int d);
CausePlan cause_approx_plan(std::int64_t k, int d, double slack);

BigInt factorial(int n);
BigInt binomial(int n, int k);
double to_double(const Rational& r);

}  // namespace causal_lab

#endif  // CAUSAL_LAB_COMBINATORICS_HPP
