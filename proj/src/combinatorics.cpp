#include "causal_lab/combinatorics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace causal_lab {

namespace {

void check_dim(int d) {
  if (d < 1) throw std::invalid_argument("d must be at least 1");
}

void partitions_into(int remaining, int maxPart, int rowsLeft, std::vector<int>& prefix,
                     std::vector<YoungDiagram>& out) {
  if (remaining == 0) {
    if (out.size() >= kMaxDiagramCount)
      throw std::length_error("diagram enumeration exceeds the count guardrail");
    out.emplace_back(prefix);
    return;
  }
  if (rowsLeft == 0) return;
  // The remaining rows can hold at most part * rowsLeft boxes.
  for (int part = std::min(remaining, maxPart); part >= 1; --part) {
    if (static_cast<long long>(part) * rowsLeft < remaining) break;
    prefix.push_back(part);
    partitions_into(remaining - part, part, rowsLeft - 1, prefix, out);
    prefix.pop_back();
  }
}

void groupings_into(std::vector<int>& unused, int d, Grouping& current, std::vector<Grouping>& out) {
  if (unused.empty()) {
    out.push_back(current);
    return;
  }
  const int first = unused.front();
  const std::vector<int> rest(unused.begin() + 1, unused.end());
  // choose d-1 companions from rest in lexicographic order
  std::vector<int> pick(d - 1);
  for (int i = 0; i < d - 1; ++i) pick[i] = i;
  const int n = static_cast<int>(rest.size());
  while (true) {
    std::vector<int> block{first};
    std::vector<bool> taken(n, false);
    for (int i : pick) {
      block.push_back(rest[i]);
      taken[i] = true;
    }
    std::vector<int> remaining;
    for (int i = 0; i < n; ++i)
      if (!taken[i]) remaining.push_back(rest[i]);
    current.push_back(block);
    groupings_into(remaining, d, current, out);
    current.pop_back();

    int i = d - 2;
    while (i >= 0 && pick[i] == n - (d - 1) + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < d - 1; ++j) pick[j] = pick[j - 1] + 1;
  }
}

}  // namespace

YoungDiagram::YoungDiagram(std::vector<int> rows) {
  while (!rows.empty() && rows.back() == 0) rows.pop_back();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i] < 0) throw std::invalid_argument("Young diagram rows must be non-negative");
    if (i > 0 && rows[i] > rows[i - 1]) throw std::invalid_argument("Young diagram rows must be non-increasing");
    boxes_ += rows[i];
  }
  rows_ = std::move(rows);
}

int YoungDiagram::column_length(int j) const {
  int c = 0;
  while (c < row_count() && rows_[c] > j) ++c;
  return c;
}

std::string YoungDiagram::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < rows_.size(); ++i) os << (i ? "," : "") << rows_[i];
  os << ')';
  return os.str();
}

BigInt factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial of a negative number");
  BigInt f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt c = 1;
  for (int i = 1; i <= k; ++i) c = c * (n - k + i) / i;
  return c;
}

double to_double(const Rational& r) {
  const BigInt num = boost::multiprecision::numerator(r);
  const BigInt den = boost::multiprecision::denominator(r);
  if (num == 0) return 0.0;
  const bool neg = num < 0;
  const BigInt a = neg ? BigInt(-num) : num;
  const long nb = static_cast<long>(boost::multiprecision::msb(a));
  const long db = static_cast<long>(boost::multiprecision::msb(den));
  // scale so the integer quotient carries about 64 significant bits
  const long shift = 64 - (nb - db);
  BigInt q = shift >= 0 ? BigInt((a << shift) / den) : BigInt(a / (den << -shift));
  const double v = std::ldexp(q.convert_to<double>(), static_cast<int>(-shift));
  return neg ? -v : v;
}

std::vector<YoungDiagram> enumerate_diagrams(int N, int d) {
  if (N < 0) throw std::invalid_argument("N must be non-negative");
  check_dim(d);
  if (N > kMaxDiagramBoxes) throw std::length_error("diagram enumeration limited to N <= 200");
  std::vector<YoungDiagram> out;
  std::vector<int> prefix;
  partitions_into(N, N, d, prefix, out);
  return out;
}

BigInt hook_product(const YoungDiagram& lambda) {
  BigInt p = 1;
  for (int i = 0; i < lambda.row_count(); ++i)
    for (int j = 0; j < lambda.row(i); ++j) {
      const int arm = lambda.row(i) - j - 1;
      const int leg = lambda.column_length(j) - i - 1;
      p *= arm + leg + 1;
    }
  return p;
}

SchurWeylRecord schur_weyl_record(const YoungDiagram& lambda, int d) {
  check_dim(d);
  if (lambda.row_count() > d)
    throw std::invalid_argument("diagram " + lambda.to_string() + " has more than d rows");
  SchurWeylRecord rec;
  rec.diagram = lambda;
  rec.d = d;
  rec.hookProduct = hook_product(lambda);
  BigInt content = 1;
  for (int i = 0; i < lambda.row_count(); ++i)
    for (int j = 0; j < lambda.row(i); ++j) content *= d - i + j;
  rec.repDim = content / rec.hookProduct;
  rec.multiplicity = factorial(lambda.box_count()) / rec.hookProduct;
  rec.measure = Rational(rec.repDim * rec.multiplicity, boost::multiprecision::pow(BigInt(d), lambda.box_count()));
  return rec;
}

Rational dimension_ratio(const YoungDiagram& lambda, int d) {
  const auto rec = schur_weyl_record(lambda, d);
  return Rational(rec.repDim, rec.multiplicity);
}

bool majorizes(const YoungDiagram& lambda, const YoungDiagram& mu) {
  if (lambda.box_count() != mu.box_count())
    throw std::invalid_argument("majorization needs diagrams with the same number of boxes");
  const int rows = std::max(lambda.row_count(), mu.row_count());
  int a = 0, b = 0;
  for (int s = 0; s < rows; ++s) {
    a += lambda.row(s);
    b += mu.row(s);
    if (a < b) return false;
  }
  return true;
}

YoungDiagram balanced_diagram(int N, int d) {
  if (N < 0) throw std::invalid_argument("N must be non-negative");
  check_dim(d);
  const int q = N / d;
  const int t = N - d * q;
  std::vector<int> rows(d, q);
  for (int i = 0; i < t; ++i) rows[i] = q + 1;
  return YoungDiagram(std::move(rows));
}

ExtremalDiagrams extremal_diagrams(int N, int d) {
  if (N < 1) throw std::invalid_argument("N must be at least 1");
  check_dim(d);
  ExtremalDiagrams ex{balanced_diagram(N, d), YoungDiagram({N}), false};
  const auto all = enumerate_diagrams(N, d);
  if (all.size() > kExtremalScanCap) return ex;
  const Rational lo = dimension_ratio(ex.minRatio, d);
  const Rational hi = dimension_ratio(ex.maxRatio, d);
  for (const auto& lambda : all) {
    const Rational r = dimension_ratio(lambda, d);
    if (r < lo || r > hi)
      throw std::logic_error("diagram " + lambda.to_string() + " beats the closed-form extremum");
  }
  ex.scanned = true;
  return ex;
}

BigInt multiplicity_sum(int N, int d) {
  BigInt s = 0;
  for (const auto& lambda : enumerate_diagrams(N, d)) s += schur_weyl_record(lambda, d).multiplicity;
  return s;
}

BigInt grouping_count(int N, int d) {
  check_dim(d);
  if (N < 0 || N % d != 0) throw std::invalid_argument("groupings need d to divide N");
  const int blocks = N / d;
  return factorial(N) / (boost::multiprecision::pow(factorial(d), blocks) * factorial(blocks));
}

GroupingCatalog groupings(int N, int d) {
  GroupingCatalog cat;
  cat.N = N;
  cat.d = d;
  cat.count = grouping_count(N, d);
  if (cat.count > kMaxGroupings) {
    cat.countOnly = true;
    return cat;
  }
  std::vector<int> unused(N);
  for (int i = 0; i < N; ++i) unused[i] = i;
  Grouping current;
  cat.configurations.reserve(cat.count.convert_to<std::size_t>());
  if (N == 0) {
    cat.configurations.push_back({});
    return cat;
  }
  groupings_into(unused, d, current, cat.configurations);
  return cat;
}

double log_asymptotic_multiplicity(int N, int d) {
  if (d < 2) throw std::invalid_argument("asymptotic multiplicity needs d >= 2");
  if (N < 1 || N % d != 0) throw std::invalid_argument("asymptotic multiplicity needs d to divide N");
  const double ld = std::log(static_cast<double>(d));
  double v = N * ld + 0.5 * d * d * ld;
  for (int i = 1; i <= d; ++i) v += std::lgamma(static_cast<double>(d - i + 1));
  v -= 0.5 * (d - 1) * std::log(2.0 * std::numbers::pi);
  v -= 0.5 * (d * d - 1) * std::log(static_cast<double>(N));
  return v;
}

double asymptotic_multiplicity(int N, int d) { return std::exp(log_asymptotic_multiplicity(N, d)); }

CausePlan cause_exact_plan(std::int64_t k, int d) {
  if (k < 1) throw std::invalid_argument("number of candidate causes must be at least 1");
  if (d < 2) throw std::invalid_argument("d must be at least 2");
  for (int N = 1; N <= kMaxDiagramBoxes; ++N)
    if (multiplicity_sum(N, d) >= k) return CausePlan{k, d, N, 0.0, 0.0};
  throw std::length_error("exact cause plan needs more than 200 queries");
}

CausePlan cause_approx_plan(std::int64_t k, int d, double slack) {
  if (k < 1) throw std::invalid_argument("number of candidate causes must be at least 1");
  if (d < 2) throw std::invalid_argument("d must be at least 2");
  if (!(slack >= 0.0)) throw std::invalid_argument("slack must be non-negative");
  const double logk = std::log(static_cast<double>(k)) / std::log(static_cast<double>(d));
  const int N = std::max(1, static_cast<int>(std::ceil((1.0 + slack) * logk / 2.0 - 1e-12)));
  if (N > kMaxDiagramBoxes) throw std::length_error("approximate cause plan needs more than 200 queries");
  const BigInt m = schur_weyl_record(balanced_diagram(N, d), d).multiplicity;
  const double bound = to_double(Rational(BigInt(k - 1), m * m));
  return CausePlan{k, d, N, std::min(1.0, bound), slack};
}

}  // namespace causal_lab
