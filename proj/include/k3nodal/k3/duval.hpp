#pragma once

#include <cctype>
#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "k3nodal/errors.hpp"

namespace k3nodal::k3 {

/// Maximal number of disjoint nodal curves on a K3 surface.
inline constexpr std::int64_t kMaxDisjointNodalCurves = 16;

enum class DynkinFamily { A, D, E };

/// A du Val singularity type A_n (n >= 1), D_n (n >= 4) or E_n (n = 6, 7, 8).
struct SingularityType {
  DynkinFamily family = DynkinFamily::A;
  int n = 1;

  [[nodiscard]] bool valid() const {
    switch (family) {
      case DynkinFamily::A:
        return n >= 1;
      case DynkinFamily::D:
        return n >= 4;
      case DynkinFamily::E:
        return n >= 6 && n <= 8;
    }
    return false;
  }

  [[nodiscard]] std::string label() const {
    const char letter = family == DynkinFamily::A ? 'A' : family == DynkinFamily::D ? 'D' : 'E';
    return std::string(1, letter) + std::to_string(n);
  }

  /// Disjoint nodal curves contributed by one singularity:
  /// [(n+1)/2] for A_n and E_n, [(n+2)/2] for D_n.
  [[nodiscard]] std::int64_t disjoint_curves() const {
    return family == DynkinFamily::D ? (n + 2) / 2 : (n + 1) / 2;
  }

  /// Milnor number, equal to the number of exceptional curves.
  [[nodiscard]] std::int64_t milnor() const { return n; }

  friend auto operator<=>(const SingularityType&, const SingularityType&) = default;
};

/// Multiset of du Val singularities: counts a_n, d_n, e_n.
class DuValConfig {
 public:
  DuValConfig() = default;

  void add(SingularityType t, std::int64_t count = 1) {
    if (!t.valid()) {
      throw argument_error("invalid singularity type " + t.label());
    }
    if (count < 0) {
      throw argument_error("negative count for " + t.label());
    }
    if (count == 0) {
      return;
    }
    auto& slot = counts_[t];
    if (__builtin_add_overflow(slot, count, &slot)) {
      throw argument_error("count overflow for " + t.label());
    }
  }

  [[nodiscard]] std::int64_t count(SingularityType t) const {
    const auto it = counts_.find(t);
    return it == counts_.end() ? 0 : it->second;
  }

  /// Types in canonical order (A, then D, then E; by n), nonzero counts only.
  [[nodiscard]] const std::map<SingularityType, std::int64_t>& counts() const noexcept { return counts_; }

  [[nodiscard]] bool empty() const noexcept { return counts_.empty(); }

  /// Disjoint union.
  friend DuValConfig operator+(DuValConfig a, const DuValConfig& b) {
    for (const auto& [t, c] : b.counts_) {
      a.add(t, c);
    }
    return a;
  }

  /// Canonical text form, e.g. "A1x16" or "A2,D4x2,E7"; "" for the empty configuration.
  [[nodiscard]] std::string to_string() const {
    std::string out;
    for (const auto& [t, c] : counts_) {
      if (!out.empty()) {
        out += ',';
      }
      out += t.label();
      if (c != 1) {
        out += 'x' + std::to_string(c);
      }
    }
    return out;
  }

  friend bool operator==(const DuValConfig&, const DuValConfig&) = default;

 private:
  std::map<SingularityType, std::int64_t> counts_;
};

namespace detail {

inline std::int64_t parse_number(std::string_view digits, std::string_view term, const char* what) {
  if (digits.empty() || digits.size() > 12) {
    throw argument_error("malformed term '" + std::string(term) + "': bad " + what);
  }
  std::int64_t v = 0;
  for (char ch : digits) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) {
      throw argument_error("malformed term '" + std::string(term) + "': bad " + what);
    }
    v = v * 10 + (ch - '0');
  }
  return v;
}

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

}  // namespace detail

/// Parses comma-separated terms `<T><n>[x<count>]`, case-insensitive,
/// e.g. "A1x16", "e8X4", "A2,D4x2,E7". Repeated types accumulate. The
/// empty string (or only whitespace) is the empty configuration.
inline DuValConfig parse_config(std::string_view text) {
  DuValConfig cfg;
  if (detail::trim(text).empty()) {
    return cfg;
  }
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = text.find(',', start);
    const std::size_t end = comma == std::string_view::npos ? text.size() : comma;
    const std::string_view term = detail::trim(text.substr(start, end - start));
    if (term.empty()) {
      throw argument_error("empty term in configuration '" + std::string(text) + "'");
    }
    SingularityType t;
    switch (std::toupper(static_cast<unsigned char>(term.front()))) {
      case 'A':
        t.family = DynkinFamily::A;
        break;
      case 'D':
        t.family = DynkinFamily::D;
        break;
      case 'E':
        t.family = DynkinFamily::E;
        break;
      default:
        throw argument_error("malformed term '" + std::string(term) + "': type must be A, D or E");
    }
    const std::string_view rest = term.substr(1);
    const std::size_t x = rest.find_first_of("xX");
    const std::int64_t n = detail::parse_number(rest.substr(0, x), term, "index");
    if (n > 1'000'000) {
      throw argument_error("malformed term '" + std::string(term) + "': index too large");
    }
    t.n = static_cast<int>(n);
    std::int64_t count = 1;
    if (x != std::string_view::npos) {
      count = detail::parse_number(rest.substr(x + 1), term, "count");
    }
    if (!t.valid()) {
      throw argument_error("malformed term '" + std::string(term) + "': " + t.label() +
                           " is not a du Val type (A_n n>=1, D_n n>=4, E_n n=6,7,8)");
    }
    cfg.add(t, count);
    if (comma == std::string_view::npos) {
      break;
    }
    start = comma + 1;
  }
  return cfg;
}

namespace detail {

inline std::int64_t checked_sum(const DuValConfig& cfg, std::int64_t (SingularityType::*per)() const) {
  std::int64_t total = 0;
  for (const auto& [t, c] : cfg.counts()) {
    std::int64_t term = 0;
    if (__builtin_mul_overflow((t.*per)(), c, &term) || __builtin_add_overflow(total, term, &total)) {
      throw argument_error("configuration too large: 64-bit overflow");
    }
  }
  return total;
}

}  // namespace detail

/// delta = sum (a_n + e_n) [(n+1)/2] + d_n [(n+2)/2], the number of disjoint
/// nodal curves on the minimal resolution.
inline std::int64_t delta(const DuValConfig& cfg) {
  return detail::checked_sum(cfg, &SingularityType::disjoint_curves);
}

/// mu = sum n (a_n + d_n + e_n).
inline std::int64_t milnor(const DuValConfig& cfg) { return detail::checked_sum(cfg, &SingularityType::milnor); }

struct TypeContribution {
  SingularityType type;
  std::int64_t count = 0;
  std::int64_t delta_each = 0;
  std::int64_t delta_total = 0;
  std::int64_t mu_total = 0;
};

struct AdmissibilityReport {
  std::string config;
  std::int64_t delta = 0;
  std::int64_t mu = 0;
  std::vector<TypeContribution> per_type;
  /// delta / mu in lowest terms; 0/1 for the empty configuration.
  std::int64_t ratio_num = 0;
  std::int64_t ratio_den = 1;
  bool admissible = true;
  std::vector<std::string> reasons;
};

/// A K3 surface resolving the configuration must have delta <= 16.
inline AdmissibilityReport admissible(const DuValConfig& cfg) {
  AdmissibilityReport r;
  r.config = cfg.to_string();
  r.delta = delta(cfg);
  r.mu = milnor(cfg);
  for (const auto& [t, c] : cfg.counts()) {
    r.per_type.push_back({t, c, t.disjoint_curves(), t.disjoint_curves() * c, t.milnor() * c});
  }
  if (r.mu != 0) {
    const std::int64_t g = std::gcd(r.delta, r.mu);
    r.ratio_num = r.delta / g;
    r.ratio_den = r.mu / g;
  }
  r.admissible = r.delta <= kMaxDisjointNodalCurves;
  if (!r.admissible) {
    r.reasons.push_back("delta = " + std::to_string(r.delta) + " exceeds " + std::to_string(kMaxDisjointNodalCurves) +
                        " disjoint nodal curves");
  }
  return r;
}

inline void to_json(nlohmann::json& j, const AdmissibilityReport& r) {
  j = nlohmann::json::object();
  j["config"] = r.config;
  j["delta"] = r.delta;
  j["mu"] = r.mu;
  j["ratio"] = {{"num", r.ratio_num}, {"den", r.ratio_den}};
  j["admissible"] = r.admissible;
  j["reasons"] = r.reasons;
  nlohmann::json types = nlohmann::json::array();
  for (const auto& c : r.per_type) {
    types.push_back({{"type", c.type.label()},
                     {"count", c.count},
                     {"delta_each", c.delta_each},
                     {"delta", c.delta_total},
                     {"mu", c.mu_total}});
  }
  j["types"] = std::move(types);
}

}  // namespace k3nodal::k3
