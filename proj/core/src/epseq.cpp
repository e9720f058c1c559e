#include "oscalg/epseq.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "oscalg/linalg.hpp"

namespace oscalg {

EpSeq::EpSeq(Polynomial tail) : tail_(std::move(tail)) {}

EpSeq::EpSeq(std::vector<Rational> prefix, Polynomial tail)
    : prefix_(std::move(prefix)), tail_(std::move(tail)) {
  canonicalize();
}

void EpSeq::canonicalize() {
  while (!prefix_.empty() &&
         prefix_.back() == tail_.eval(Rational(static_cast<long>(prefix_.size() - 1)))) {
    prefix_.pop_back();
  }
}

Rational EpSeq::at(std::size_t n) const {
  if (n < prefix_.size()) return prefix_[n];
  return tail_.eval(Rational(static_cast<long>(n)));
}

std::optional<Rational> EpSeq::as_constant() const {
  if (!prefix_.empty() || tail_.degree() > 0) return std::nullopt;
  return tail_.eval(Rational(0));
}

EpSeq EpSeq::difference() const {
  return at_offset(1) - *this;
}

EpSeq EpSeq::at_offset(long delta) const {
  if (delta == 0) return *this;
  if (delta > 0) {
    std::size_t d = static_cast<std::size_t>(delta);
    std::vector<Rational> pre;
    for (std::size_t n = d; n < prefix_.size(); ++n) pre.push_back(prefix_[n]);
    return EpSeq(std::move(pre), tail_.shifted_arg(delta));
  }
  std::size_t d = static_cast<std::size_t>(-delta);
  std::vector<Rational> pre;
  pre.reserve(d + prefix_.size());
  for (std::size_t n = 0; n < d; ++n) {
    pre.push_back(tail_.eval(Rational(static_cast<long>(n)) + Rational(delta)));
  }
  for (const auto& v : prefix_) pre.push_back(v);
  return EpSeq(std::move(pre), tail_.shifted_arg(delta));
}

EpSeq EpSeq::operator-() const {
  EpSeq r;
  r.tail_ = -tail_;
  r.prefix_ = prefix_;
  for (auto& v : r.prefix_) v = -v;
  return r;  // negation preserves canonical form
}

namespace {

template <typename Op>
EpSeq pointwise(const EpSeq& a, const EpSeq& b, Op op, Polynomial tail) {
  std::size_t n0 = std::max(a.prefix_size(), b.prefix_size());
  std::vector<Rational> pre(n0);
  for (std::size_t n = 0; n < n0; ++n) pre[n] = op(a.at(n), b.at(n));
  return EpSeq(std::move(pre), std::move(tail));
}

}  // namespace

EpSeq operator+(const EpSeq& a, const EpSeq& b) {
  return pointwise(a, b, [](const Rational& x, const Rational& y) { return x + y; },
                   a.tail_ + b.tail_);
}

EpSeq operator-(const EpSeq& a, const EpSeq& b) {
  return pointwise(a, b, [](const Rational& x, const Rational& y) { return x - y; },
                   a.tail_ - b.tail_);
}

EpSeq operator*(const EpSeq& a, const EpSeq& b) {
  return pointwise(a, b, [](const Rational& x, const Rational& y) { return x * y; },
                   a.tail_ * b.tail_);
}

EpSeq operator*(const Rational& c, const EpSeq& s) {
  std::vector<Rational> pre(s.prefix_);
  for (auto& v : pre) v *= c;
  return EpSeq(std::move(pre), c * s.tail_);
}

std::string EpSeq::to_string() const {
  if (prefix_.empty()) return tail_.to_string();
  std::ostringstream os;
  os << "[";
  for (std::size_t n = 0; n < prefix_.size(); ++n) {
    if (n) os << ", ";
    os << prefix_[n];
  }
  os << " | " << tail_.to_string() << "]";
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const EpSeq& s) {
  return os << s.to_string();
}

std::optional<std::vector<Rational>> linear_dependence(std::span<const EpSeq> seqs) {
  if (seqs.empty()) return std::nullopt;
  // Coordinates: values on the common exceptional window, then tail
  // coefficients. A combination vanishes everywhere iff all coordinates do.
  std::size_t n0 = 0;
  int deg = 0;
  for (const auto& s : seqs) {
    n0 = std::max(n0, s.prefix_size());
    deg = std::max(deg, s.tail().degree());
  }
  std::size_t coords = n0 + static_cast<std::size_t>(deg) + 1;
  RatMat m(coords, RatRow(seqs.size()));
  for (std::size_t j = 0; j < seqs.size(); ++j) {
    for (std::size_t n = 0; n < n0; ++n) m[n][j] = seqs[j].at(n);
    for (std::size_t d = 0; d <= static_cast<std::size_t>(deg); ++d) {
      m[n0 + d][j] = seqs[j].tail().coeff(d);
    }
  }
  return nullspace_vector(m);
}

}  // namespace oscalg
