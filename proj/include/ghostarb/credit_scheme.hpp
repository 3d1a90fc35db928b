#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace ghostarb {

inline constexpr double kDefaultTolerance = 1e-9;
inline constexpr int kDefaultMaxAuthors = 1000000;

// A rule splitting an article's credit across its ordered author list.
// total_credit(n) is the article's whole credit at n authors; for systems
// that award credit after publication (e.g. by citations) this is the
// expected value, so both functions return plain reals. position_share(i, n)
// is the i-th author's part, with positions counted 1..n.
class CreditScheme {
 public:
  CreditScheme(std::string name, std::function<double(int)> total,
               std::function<double(int, int)> share,
               int max_authors = kDefaultMaxAuthors);

  const std::string& name() const { return name_; }
  int max_authors() const { return max_authors_; }

  // Throws std::domain_error unless 1 <= n <= max_authors().
  double total_credit(int n) const;

  // Throws std::domain_error unless additionally 1 <= position <= n.
  double position_share(int position, int n) const;

 private:
  std::string name_;
  std::function<double(int)> total_;
  std::function<double(int, int)> share_;
  int max_authors_;
};

// Built-in schemes.
CreditScheme total_counting();       // total n, every share 1
CreditScheme fractional_counting();  // total 1, shares 1/n
CreditScheme first_author();         // total 1, whole unit to position 1
CreditScheme power_scheme(double alpha);  // total n^alpha, equal shares

// Parses "<name>" or "<name>:<real>", e.g. "power:0.5". Throws
// std::invalid_argument for unknown names or malformed parameters.
CreditScheme parse_scheme(const std::string& text);

struct SchemeInfo {
  std::string name;
  std::string summary;
};
std::vector<SchemeInfo> builtin_scheme_list();

// One counterexample to the single-paper disincentive: the author at
// `position` on an n-author paper does not strictly lose by landing at
// position + shift once one more author is added.
struct DisincentiveViolation {
  int position;
  int shift;  // >= 0
  int n;
};

struct SchemeAudit {
  std::string scheme_name;
  int n_max = 0;
  double tolerance = kDefaultTolerance;
  bool additivity_ok = true;
  std::vector<int> additivity_violations;  // n where shares fail to sum to total
  bool nonnegativity_ok = true;
  std::vector<std::pair<int, int>> nonnegativity_violations;  // (position, n)
  bool monotonicity_ok = true;
  std::vector<int> monotonicity_violations;  // n with total(n) >= total(n+1)
  bool disincentive_ok = true;
  std::vector<DisincentiveViolation> disincentive_violations;
};

// Exhaustive check of every property for n = 1..n_max. Additivity is compared
// within tol; total monotonicity and the disincentive are strict. Requires
// n_max >= 2. Deterministic.
SchemeAudit audit_scheme(const CreditScheme& scheme, int n_max,
                         double tol = kDefaultTolerance);

// Reports every (position, shift, n) with n < n_max where adding one author
// fails to strictly reduce the share. An empty result means one ghost author
// on one paper never pays under this scheme.
std::vector<DisincentiveViolation> check_single_paper_disincentive(
    const CreditScheme& scheme, int n_max);

}  // namespace ghostarb
