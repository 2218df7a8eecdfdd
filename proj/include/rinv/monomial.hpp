#ifndef RINV_MONOMIAL_HPP
#define RINV_MONOMIAL_HPP

#include <cstdint>
#include <numeric>
#include <vector>

namespace rinv {

// Dense exponent vector, one slot per variable of the owning table.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(size_t nvars) : e_(nvars, 0), deg_(0) {}
  explicit Monomial(std::vector<uint32_t> exps)
      : e_(std::move(exps)),
        deg_(std::accumulate(e_.begin(), e_.end(), uint64_t{0})) {}

  size_t size() const { return e_.size(); }
  uint32_t exp(size_t i) const { return e_[i]; }
  uint64_t degree() const { return deg_; }
  bool is_one() const { return deg_ == 0; }

  void set_exp(size_t i, uint32_t v) {
    deg_ = deg_ - e_[i] + v;
    e_[i] = v;
  }

  bool divides(const Monomial& m) const {
    if (deg_ > m.deg_) return false;
    for (size_t i = 0; i < e_.size(); ++i)
      if (e_[i] > m.e_[i]) return false;
    return true;
  }

  Monomial operator*(const Monomial& m) const {
    Monomial r(*this);
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] += m.e_[i];
    r.deg_ += m.deg_;
    return r;
  }

  // Requires m.divides(*this).
  Monomial operator/(const Monomial& m) const {
    Monomial r(*this);
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] -= m.e_[i];
    r.deg_ -= m.deg_;
    return r;
  }

  Monomial lcm(const Monomial& m) const {
    Monomial r(*this);
    r.deg_ = 0;
    for (size_t i = 0; i < e_.size(); ++i) {
      r.e_[i] = std::max(e_[i], m.e_[i]);
      r.deg_ += r.e_[i];
    }
    return r;
  }

  Monomial gcd(const Monomial& m) const {
    Monomial r(*this);
    r.deg_ = 0;
    for (size_t i = 0; i < e_.size(); ++i) {
      r.e_[i] = std::min(e_[i], m.e_[i]);
      r.deg_ += r.e_[i];
    }
    return r;
  }

  Monomial pow(uint32_t k) const {
    Monomial r(*this);
    for (auto& e : r.e_) e *= k;
    r.deg_ *= k;
    return r;
  }

  bool coprime_with(const Monomial& m) const {
    for (size_t i = 0; i < e_.size(); ++i)
      if (e_[i] > 0 && m.e_[i] > 0) return false;
    return true;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.e_ == b.e_;
  }
  friend bool operator!=(const Monomial& a, const Monomial& b) {
    return !(a == b);
  }

 private:
  std::vector<uint32_t> e_;
  uint64_t deg_ = 0;
};

}  // namespace rinv

#endif
