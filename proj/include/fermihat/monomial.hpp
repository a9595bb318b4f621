#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace fermihat {

using ModeMask = std::uint64_t;

/// Largest supported number of fermion modes (bit 63 is kept free).
inline constexpr int kMaxModes = 63;

/// Bit for 1-based mode `j`.
constexpr ModeMask mode_bit(int j) { return ModeMask{1} << (j - 1); }

/// A single creation (`cd j`) or annihilation (`c j`) operator, 1-based mode.
struct FermiOp {
  int mode = 1;
  bool creator = false;

  static constexpr FermiOp create(int j) { return {j, true}; }
  static constexpr FermiOp annihilate(int j) { return {j, false}; }

  friend constexpr bool operator==(const FermiOp&, const FermiOp&) = default;
};

/**
 * Canonical normal-ordered word c†_{j1}...c†_{jp} c_{k1}...c_{kq} with
 * j1 < ... < jp and k1 < ... < kq, stored as two bitmasks over n modes.
 *
 * The empty monomial is the identity operator I.
 */
class FermiMonomial {
 public:
  FermiMonomial(int n_modes, ModeMask creators = 0, ModeMask annihilators = 0);

  static FermiMonomial identity(int n_modes) { return FermiMonomial(n_modes); }
  /// Builds from explicit 1-based index lists; throws on repeats or out-of-range.
  static FermiMonomial from_indices(int n_modes, const std::vector<int>& creators,
                                    const std::vector<int>& annihilators);

  int n_modes() const noexcept { return n_modes_; }
  ModeMask creators() const noexcept { return creators_; }
  ModeMask annihilators() const noexcept { return annihilators_; }

  int creator_count() const noexcept;
  int annihilator_count() const noexcept;
  /// Total number of operators in the word.
  int degree() const noexcept { return creator_count() + annihilator_count(); }
  bool is_identity() const noexcept { return creators_ == 0 && annihilators_ == 0; }

  std::vector<int> creator_indices() const;
  std::vector<int> annihilator_indices() const;

  /// The word as a left-to-right operator sequence.
  std::vector<FermiOp> word() const;

  /// e.g. "cd1.cd2.c1.c2"; the identity prints as "I".
  std::string to_string() const;

  /// Print order: degree, then creator mask, then annihilator mask.
  friend std::strong_ordering operator<=>(const FermiMonomial& a,
                                          const FermiMonomial& b) noexcept {
    if (auto c = a.degree() <=> b.degree(); c != 0) return c;
    if (auto c = a.creators_ <=> b.creators_; c != 0) return c;
    if (auto c = a.annihilators_ <=> b.annihilators_; c != 0) return c;
    return a.n_modes_ <=> b.n_modes_;
  }
  friend bool operator==(const FermiMonomial& a, const FermiMonomial& b) noexcept {
    return a.n_modes_ == b.n_modes_ && a.creators_ == b.creators_ &&
           a.annihilators_ == b.annihilators_;
  }

 private:
  int n_modes_;
  ModeMask creators_;
  ModeMask annihilators_;
};

}  // namespace fermihat
