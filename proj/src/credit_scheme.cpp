#include "ghostarb/credit_scheme.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace ghostarb {

CreditScheme::CreditScheme(std::string name, std::function<double(int)> total,
                           std::function<double(int, int)> share,
                           int max_authors)
    : name_(std::move(name)),
      total_(std::move(total)),
      share_(std::move(share)),
      max_authors_(max_authors) {
  if (!total_ || !share_) {
    throw std::invalid_argument("credit scheme: total and share are required");
  }
  if (max_authors_ < 1) {
    throw std::invalid_argument("credit scheme: max_authors must be >= 1");
  }
}

double CreditScheme::total_credit(int n) const {
  if (n < 1 || n > max_authors_) {
    std::ostringstream msg;
    msg << "scheme '" << name_ << "': author count " << n
        << " outside 1.." << max_authors_;
    throw std::domain_error(msg.str());
  }
  return total_(n);
}

double CreditScheme::position_share(int position, int n) const {
  if (n < 1 || n > max_authors_) {
    std::ostringstream msg;
    msg << "scheme '" << name_ << "': author count " << n
        << " outside 1.." << max_authors_;
    throw std::domain_error(msg.str());
  }
  if (position < 1 || position > n) {
    std::ostringstream msg;
    msg << "scheme '" << name_ << "': position " << position
        << " outside 1.." << n;
    throw std::domain_error(msg.str());
  }
  return share_(position, n);
}

CreditScheme total_counting() {
  return CreditScheme(
      "total-counting", [](int n) { return static_cast<double>(n); },
      [](int, int) { return 1.0; });
}

CreditScheme fractional_counting() {
  return CreditScheme(
      "fractional-counting", [](int) { return 1.0; },
      [](int, int n) { return 1.0 / n; });
}

CreditScheme first_author() {
  return CreditScheme(
      "first-author", [](int) { return 1.0; },
      [](int position, int) { return position == 1 ? 1.0 : 0.0; });
}

CreditScheme power_scheme(double alpha) {
  if (!std::isfinite(alpha) || alpha < 0.0) {
    throw std::invalid_argument("power scheme: alpha must be finite and >= 0");
  }
  char name[40];
  std::snprintf(name, sizeof name, "power:%g", alpha);
  return CreditScheme(
      name, [alpha](int n) { return std::pow(n, alpha); },
      [alpha](int, int n) { return std::pow(n, alpha - 1.0); });
}

namespace {

double parse_real(const std::string& text, const std::string& what) {
  std::size_t consumed = 0;
  double value = 0.0;
  try {
    value = std::stod(text, &consumed);
  } catch (const std::exception&) {
    throw std::invalid_argument(what + ": '" + text + "' is not a number");
  }
  if (consumed != text.size() || !std::isfinite(value)) {
    throw std::invalid_argument(what + ": '" + text + "' is not a number");
  }
  return value;
}

}  // namespace

CreditScheme parse_scheme(const std::string& text) {
  std::string name = text;
  std::string param;
  bool has_param = false;
  if (auto colon = text.find(':'); colon != std::string::npos) {
    name = text.substr(0, colon);
    param = text.substr(colon + 1);
    has_param = true;
  }
  if (name == "power") {
    if (!has_param) {
      throw std::invalid_argument(
          "scheme 'power' needs a parameter, e.g. power:0.5");
    }
    return power_scheme(parse_real(param, "scheme 'power' parameter"));
  }
  if (has_param) {
    throw std::invalid_argument("scheme '" + name + "' takes no parameter");
  }
  if (name == "total-counting") return total_counting();
  if (name == "fractional-counting") return fractional_counting();
  if (name == "first-author") return first_author();
  throw std::invalid_argument(
      "unknown scheme '" + name +
      "'; known: total-counting, fractional-counting, first-author, "
      "power:<alpha>");
}

std::vector<SchemeInfo> builtin_scheme_list() {
  return {
      {"total-counting", "every author gets the full unit; article total n"},
      {"fractional-counting", "the unit is split equally; article total 1"},
      {"first-author", "the whole unit goes to position 1; article total 1"},
      {"power:<alpha>", "article total n^alpha, equal shares n^(alpha-1)"},
  };
}

SchemeAudit audit_scheme(const CreditScheme& scheme, int n_max, double tol) {
  if (n_max < 2) {
    throw std::invalid_argument("audit: n_max must be >= 2");
  }
  SchemeAudit audit;
  audit.scheme_name = scheme.name();
  audit.n_max = n_max;
  audit.tolerance = tol;
  for (int n = 1; n <= n_max; ++n) {
    double total = scheme.total_credit(n);
    double share_sum = 0.0;
    for (int position = 1; position <= n; ++position) {
      double share = scheme.position_share(position, n);
      if (share < 0.0) {
        audit.nonnegativity_violations.emplace_back(position, n);
      }
      share_sum += share;
    }
    if (std::abs(share_sum - total) > tol) {
      audit.additivity_violations.push_back(n);
    }
    if (n < n_max && total >= scheme.total_credit(n + 1)) {
      audit.monotonicity_violations.push_back(n);
    }
  }
  audit.disincentive_violations = check_single_paper_disincentive(scheme, n_max);
  audit.additivity_ok = audit.additivity_violations.empty();
  audit.nonnegativity_ok = audit.nonnegativity_violations.empty();
  audit.monotonicity_ok = audit.monotonicity_violations.empty();
  audit.disincentive_ok = audit.disincentive_violations.empty();
  return audit;
}

std::vector<DisincentiveViolation> check_single_paper_disincentive(
    const CreditScheme& scheme, int n_max) {
  if (n_max < 1) {
    throw std::invalid_argument("disincentive check: n_max must be >= 1");
  }
  std::vector<DisincentiveViolation> violations;
  for (int n = 1; n + 1 <= n_max; ++n) {
    for (int position = 1; position <= n; ++position) {
      double before = scheme.position_share(position, n);
      for (int shift = 0; position + shift <= n + 1; ++shift) {
        if (scheme.position_share(position + shift, n + 1) >= before) {
          violations.push_back({position, shift, n});
        }
      }
    }
  }
  return violations;
}

}  // namespace ghostarb
