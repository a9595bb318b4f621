#include "fermihat/operator_poly.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <utility>
#include <vector>

#include "fermihat/errors.hpp"

namespace fermihat {

namespace {

// Creators sort before annihilators; within each group by ascending mode.
bool out_of_order(const FermiOp& left, const FermiOp& right) {
  if (left.creator != right.creator) return !left.creator;
  return left.mode > right.mode;
}

std::string format_real(double x) {
  if (x == 0.0) x = 0.0;  // drop the sign of -0
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, ptr);
}

}  // namespace

OperatorPoly::OperatorPoly(int n_modes, ToleranceConfig tol) : n_modes_(n_modes), tol_(tol) {
  if (n_modes < 1 || n_modes > kMaxModes) {
    throw GuardError("mode count must lie in [1, 63], got " + std::to_string(n_modes));
  }
  tol_.validate();
}

OperatorPoly OperatorPoly::identity(int n_modes, ToleranceConfig tol) {
  return from_monomial(FermiMonomial::identity(n_modes), 1.0, tol);
}

OperatorPoly OperatorPoly::from_monomial(const FermiMonomial& m, Complex coeff,
                                         ToleranceConfig tol) {
  OperatorPoly p(m.n_modes(), tol);
  p.add_term(m, coeff);
  return p;
}

OperatorPoly OperatorPoly::creation(int n_modes, int j, ToleranceConfig tol) {
  return from_monomial(FermiMonomial::from_indices(n_modes, {j}, {}), 1.0, tol);
}

OperatorPoly OperatorPoly::annihilation(int n_modes, int j, ToleranceConfig tol) {
  return from_monomial(FermiMonomial::from_indices(n_modes, {}, {j}), 1.0, tol);
}

Complex OperatorPoly::coefficient(const FermiMonomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Complex{} : it->second;
}

void OperatorPoly::add_term(const FermiMonomial& m, Complex coeff) {
  if (m.n_modes() != n_modes_) {
    throw ModeMismatch("monomial has " + std::to_string(m.n_modes()) +
                       " modes, polynomial has " + std::to_string(n_modes_));
  }
  auto [it, inserted] = terms_.try_emplace(m, coeff);
  if (!inserted) it->second += coeff;
  if (std::abs(it->second) <= tol_.zero_threshold) terms_.erase(it);
}

bool OperatorPoly::conserves_particle_number() const noexcept {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& kv) {
    return kv.first.creator_count() == kv.first.annihilator_count();
  });
}

double OperatorPoly::max_abs_coefficient() const noexcept {
  double m = 0.0;
  for (const auto& [mono, c] : terms_) m = std::max(m, std::abs(c));
  return m;
}

std::string OperatorPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [mono, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += format_complex(c);
    out += '*';
    out += mono.to_string();
  }
  return out;
}

void OperatorPoly::require_same_modes(const OperatorPoly& other) const {
  if (other.n_modes_ != n_modes_) {
    throw ModeMismatch("operands act on " + std::to_string(n_modes_) + " and " +
                       std::to_string(other.n_modes_) + " modes");
  }
}

OperatorPoly& OperatorPoly::operator+=(const OperatorPoly& other) {
  require_same_modes(other);
  for (const auto& [mono, c] : other.terms_) add_term(mono, c);
  return *this;
}

OperatorPoly& OperatorPoly::operator-=(const OperatorPoly& other) {
  require_same_modes(other);
  for (const auto& [mono, c] : other.terms_) add_term(mono, -c);
  return *this;
}

OperatorPoly& OperatorPoly::operator*=(Complex scalar) {
  for (auto it = terms_.begin(); it != terms_.end();) {
    it->second *= scalar;
    if (std::abs(it->second) <= tol_.zero_threshold) {
      it = terms_.erase(it);
    } else {
      ++it;
    }
  }
  return *this;
}

OperatorPoly operator*(const OperatorPoly& a, const OperatorPoly& b) {
  a.require_same_modes(b);
  // Accumulate unpruned so that cancellations are resolved before thresholding.
  std::map<FermiMonomial, Complex> acc;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      ToleranceConfig exact = a.tol_;
      exact.zero_threshold = 0.0;
      OperatorPoly prod = monomial_mul(ma, mb, exact);
      for (const auto& [m, c] : prod.terms_) acc[m] += ca * cb * c;
    }
  }
  OperatorPoly out(a.n_modes_, a.tol_);
  for (const auto& [m, c] : acc) out.add_term(m, c);
  return out;
}

OperatorPoly normal_order(std::span<const FermiOp> word, int n_modes, Complex coeff,
                          ToleranceConfig tol) {
  OperatorPoly result(n_modes, tol);
  for (const FermiOp& op : word) {
    if (op.mode < 1 || op.mode > n_modes) {
      throw GuardError("operator mode " + std::to_string(op.mode) + " outside 1.." +
                       std::to_string(n_modes));
    }
  }

  std::vector<std::pair<Complex, std::vector<FermiOp>>> work;
  work.emplace_back(coeff, std::vector<FermiOp>(word.begin(), word.end()));

  while (!work.empty()) {
    auto [c, w] = std::move(work.back());
    work.pop_back();

    bool vanished = false;
    for (;;) {
      std::size_t i = 0;
      for (; i + 1 < w.size(); ++i) {
        if (w[i] == w[i + 1]) {
          vanished = true;  // c_j^2 = (c_j^dagger)^2 = 0
          break;
        }
        if (out_of_order(w[i], w[i + 1])) break;
      }
      if (vanished) break;
      if (i + 1 >= w.size()) {
        ModeMask creators = 0;
        ModeMask annihilators = 0;
        for (const FermiOp& op : w) (op.creator ? creators : annihilators) |= mode_bit(op.mode);
        result.add_term(FermiMonomial(n_modes, creators, annihilators), c);
        break;
      }
      // c_j c_j^dagger = I - c_j^dagger c_j; every other swap only flips the sign.
      if (!w[i].creator && w[i + 1].creator && w[i].mode == w[i + 1].mode) {
        std::vector<FermiOp> contracted;
        contracted.reserve(w.size() - 2);
        contracted.insert(contracted.end(), w.begin(), w.begin() + static_cast<long>(i));
        contracted.insert(contracted.end(), w.begin() + static_cast<long>(i) + 2, w.end());
        work.emplace_back(c, std::move(contracted));
      }
      std::swap(w[i], w[i + 1]);
      c = -c;
    }
  }
  return result;
}

OperatorPoly monomial_mul(const FermiMonomial& a, const FermiMonomial& b, ToleranceConfig tol) {
  if (a.n_modes() != b.n_modes()) {
    throw ModeMismatch("monomials act on " + std::to_string(a.n_modes()) + " and " +
                       std::to_string(b.n_modes()) + " modes");
  }
  std::vector<FermiOp> w = a.word();
  std::vector<FermiOp> wb = b.word();
  w.insert(w.end(), wb.begin(), wb.end());
  return normal_order(w, a.n_modes(), 1.0, tol);
}

OperatorPoly poly_add(const OperatorPoly& p, const OperatorPoly& q) { return p + q; }

OperatorPoly poly_scale(const OperatorPoly& p, Complex s) { return p * s; }

OperatorPoly poly_mul(const OperatorPoly& p, const OperatorPoly& q) { return p * q; }

OperatorPoly adjoint(const OperatorPoly& p) {
  OperatorPoly out(p.n_modes(), p.tolerance());
  for (const auto& [m, c] : p.terms()) {
    // Reversing p creators and q annihilators costs p(p-1)/2 + q(q-1)/2 swaps.
    const int np = m.creator_count();
    const int nq = m.annihilator_count();
    const int swaps = np * (np - 1) / 2 + nq * (nq - 1) / 2;
    const double sign = (swaps % 2 == 0) ? 1.0 : -1.0;
    out.add_term(FermiMonomial(m.n_modes(), m.annihilators(), m.creators()),
                 sign * std::conj(c));
  }
  return out;
}

OperatorPoly commutator(const OperatorPoly& p, const OperatorPoly& q) { return p * q - q * p; }

OperatorPoly anticommutator(const OperatorPoly& p, const OperatorPoly& q) {
  return p * q + q * p;
}

double max_coeff_diff(const OperatorPoly& p, const OperatorPoly& q) {
  if (p.n_modes() != q.n_modes()) {
    throw ModeMismatch("operands act on " + std::to_string(p.n_modes()) + " and " +
                       std::to_string(q.n_modes()) + " modes");
  }
  double diff = 0.0;
  for (const auto& [m, c] : p.terms()) diff = std::max(diff, std::abs(c - q.coefficient(m)));
  for (const auto& [m, c] : q.terms()) {
    if (p.terms().find(m) == p.terms().end()) diff = std::max(diff, std::abs(c));
  }
  return diff;
}

bool poly_equal(const OperatorPoly& p, const OperatorPoly& q, const ToleranceConfig& tol) {
  double bound = tol.check_tolerance;
  if (tol.mode == CompareMode::relative) {
    bound *= std::max({1.0, p.max_abs_coefficient(), q.max_abs_coefficient()});
  }
  return max_coeff_diff(p, q) <= bound;
}

std::string format_complex(Complex z) {
  std::string out = "(";
  out += format_real(z.real());
  const double im = z.imag();
  if (std::signbit(im) && im != 0.0) {
    out += '-';
    out += format_real(-im);
  } else {
    out += '+';
    out += format_real(im);
  }
  out += "i)";
  return out;
}

}  // namespace fermihat
