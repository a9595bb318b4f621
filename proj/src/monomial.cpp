#include "fermihat/monomial.hpp"

#include <bit>

#include "fermihat/errors.hpp"

namespace fermihat {

namespace {

ModeMask full_mask(int n) {
  return n >= 64 ? ~ModeMask{0} : (ModeMask{1} << n) - 1;
}

std::vector<int> indices_of(ModeMask mask) {
  std::vector<int> out;
  while (mask != 0) {
    out.push_back(std::countr_zero(mask) + 1);
    mask &= mask - 1;
  }
  return out;
}

}  // namespace

FermiMonomial::FermiMonomial(int n_modes, ModeMask creators, ModeMask annihilators)
    : n_modes_(n_modes), creators_(creators), annihilators_(annihilators) {
  if (n_modes < 1 || n_modes > kMaxModes) {
    throw GuardError("mode count must lie in [1, 63], got " + std::to_string(n_modes));
  }
  const ModeMask allowed = full_mask(n_modes);
  if ((creators & ~allowed) != 0 || (annihilators & ~allowed) != 0) {
    throw GuardError("monomial index exceeds mode count " + std::to_string(n_modes));
  }
}

FermiMonomial FermiMonomial::from_indices(int n_modes, const std::vector<int>& creators,
                                          const std::vector<int>& annihilators) {
  auto to_mask = [n_modes](const std::vector<int>& idx) {
    ModeMask mask = 0;
    for (int j : idx) {
      if (j < 1 || j > n_modes) {
        throw GuardError("mode index " + std::to_string(j) + " outside 1.." +
                         std::to_string(n_modes));
      }
      if ((mask & mode_bit(j)) != 0) {
        throw GuardError("repeated mode index " + std::to_string(j) + " in monomial");
      }
      mask |= mode_bit(j);
    }
    return mask;
  };
  return FermiMonomial(n_modes, to_mask(creators), to_mask(annihilators));
}

int FermiMonomial::creator_count() const noexcept { return std::popcount(creators_); }

int FermiMonomial::annihilator_count() const noexcept { return std::popcount(annihilators_); }

std::vector<int> FermiMonomial::creator_indices() const { return indices_of(creators_); }

std::vector<int> FermiMonomial::annihilator_indices() const { return indices_of(annihilators_); }

std::vector<FermiOp> FermiMonomial::word() const {
  std::vector<FermiOp> w;
  for (int j : creator_indices()) w.push_back(FermiOp::create(j));
  for (int k : annihilator_indices()) w.push_back(FermiOp::annihilate(k));
  return w;
}

std::string FermiMonomial::to_string() const {
  if (is_identity()) return "I";
  std::string out;
  for (const FermiOp& op : word()) {
    if (!out.empty()) out += '.';
    out += op.creator ? "cd" : "c";
    out += std::to_string(op.mode);
  }
  return out;
}

}  // namespace fermihat
