#ifndef CONESPEC_SPECTRUM_HPP
#define CONESPEC_SPECTRUM_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "conespec/error.hpp"
#include "conespec/fraction.hpp"

namespace conespec {

using Multiplicity = std::int64_t;

/// Finite-support map from a rational exponent to an integer multiplicity,
/// tagged with the number of variables of the germ it belongs to.
///
/// Zero multiplicities are never stored, so two vectors are equal exactly when
/// they describe the same spectrum. Multiplicities are signed: formula cells at
/// integer exponents may be negative.
class SpectrumVector {
public:
  using Entries = std::map<Fraction, Multiplicity>;

  explicit SpectrumVector(int ambient_dim = 1) : ambient_dim_(ambient_dim) {
    if (ambient_dim < 1) throw InputError("E_AMBIENT", "ambient dimension must be positive");
  }
  SpectrumVector(int ambient_dim, std::initializer_list<std::pair<Fraction, Multiplicity>> init)
      : SpectrumVector(ambient_dim) {
    for (const auto& [alpha, n] : init) add(alpha, n);
  }

  int ambient_dim() const noexcept { return ambient_dim_; }
  const Entries& entries() const noexcept { return entries_; }
  bool empty() const noexcept { return entries_.empty(); }
  std::size_t size() const noexcept { return entries_.size(); }

  Multiplicity at(const Fraction& alpha) const {
    auto it = entries_.find(alpha);
    return it == entries_.end() ? 0 : it->second;
  }

  // Adds n to the multiplicity of alpha, dropping the entry if it cancels.
  void add(const Fraction& alpha, Multiplicity n) {
    if (n == 0) return;
    auto [it, inserted] = entries_.try_emplace(alpha, n);
    if (!inserted) {
      it->second += n;
      if (it->second == 0) entries_.erase(it);
    }
  }

  Multiplicity total() const {
    Multiplicity t = 0;
    for (const auto& [alpha, n] : entries_) t += n;
    return t;
  }

  std::optional<Fraction> min_exponent() const {
    if (entries_.empty()) return std::nullopt;
    return entries_.begin()->first;
  }
  std::optional<Fraction> max_exponent() const {
    if (entries_.empty()) return std::nullopt;
    return entries_.rbegin()->first;
  }

  bool has_negative() const {
    for (const auto& [alpha, n] : entries_)
      if (n < 0) return true;
    return false;
  }

  friend bool operator==(const SpectrumVector& a, const SpectrumVector& b) {
    return a.ambient_dim_ == b.ambient_dim_ && a.entries_ == b.entries_;
  }

  /// Increasing exponents, "p/q:m" each, joined by ", ".
  std::string str() const {
    std::string out;
    for (const auto& [alpha, n] : entries_) {
      if (!out.empty()) out += ", ";
      out += alpha.str() + ":" + std::to_string(n);
    }
    return out;
  }

  /// Inverse of str(); also accepts whitespace or bare commas as separators.
  static SpectrumVector parse(std::string_view text, int ambient_dim) {
    SpectrumVector sv(ambient_dim);
    std::string token;
    auto flush = [&] {
      if (token.empty()) return;
      const auto colon = token.find(':');
      if (colon == std::string::npos)
        throw InputError("E_BAD_SPECTRUM", "spectrum entry '" + token + "' lacks ':'");
      const Fraction alpha = Fraction::parse(std::string_view(token).substr(0, colon));
      const std::string mult = token.substr(colon + 1);
      Multiplicity n = 0;
      try {
        std::size_t used = 0;
        n = std::stoll(mult, &used);
        if (used != mult.size()) throw std::invalid_argument(mult);
      } catch (const std::exception&) {
        throw InputError("E_BAD_SPECTRUM", "bad multiplicity in '" + token + "'");
      }
      sv.add(alpha, n);
      token.clear();
    };
    for (char c : text) {
      if (c == ',' || c == ' ' || c == '\t') {
        flush();
      } else {
        token += c;
      }
    }
    flush();
    return sv;
  }

private:
  int ambient_dim_;
  Entries entries_;
};

inline SpectrumVector sv_add(const SpectrumVector& a, const SpectrumVector& b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw InputError("E_AMBIENT_MISMATCH", "cannot add spectra of different ambient dimension");
  SpectrumVector out = a;
  for (const auto& [alpha, n] : b.entries()) out.add(alpha, n);
  return out;
}

// Thom-Sebastiani: spectral numbers of f(x) + g(y) are the pairwise sums.
inline SpectrumVector sv_product(const SpectrumVector& a, const SpectrumVector& b) {
  if (a.has_negative() || b.has_negative())
    throw InputError("E_NEGATIVE_MULTIPLICITY", "product needs genuine spectra with nonnegative multiplicities");
  SpectrumVector out(a.ambient_dim() + b.ambient_dim());
  for (const auto& [x, n] : a.entries())
    for (const auto& [y, m] : b.entries()) out.add(x + y, n * m);
  return out;
}

inline SpectrumVector sv_dual(const SpectrumVector& a) {
  SpectrumVector out(a.ambient_dim());
  const Fraction top(a.ambient_dim());
  for (const auto& [alpha, n] : a.entries()) out.add(top - alpha, n);
  return out;
}

// Every exponent with nonzero multiplicity lies in the open interval (0, d_X).
inline bool sv_support_check(const SpectrumVector& a) {
  if (a.empty()) return true;
  return *a.min_exponent() > Fraction(0) && *a.max_exponent() < Fraction(a.ambient_dim());
}

inline bool sv_symmetry_check(const SpectrumVector& a) { return sv_dual(a) == a; }

}  // namespace conespec

#endif  // CONESPEC_SPECTRUM_HPP
