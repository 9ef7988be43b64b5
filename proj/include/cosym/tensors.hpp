#pragma once

#include <map>
#include <vector>

#include "cosym/frame.hpp"
#include "cosym/scalar.hpp"

namespace cosym {

/// Degree-k alternating form with constant coefficients: sparse map from
/// strictly increasing index tuples to scalars. No zero coefficients are
/// stored.
class KForm {
 public:
  using Key = std::vector<int>;

  KForm(FramePtr frame, int degree, Ring ring)
      : frame_(std::move(frame)), degree_(degree), ring_(ring) {
    if (degree_ < 0 || degree_ > frame_->dim()) {
      fail(ErrorKind::DegreeError, "form degree out of range for frame");
    }
  }

  const FramePtr& frame() const { return frame_; }
  int degree() const { return degree_; }
  Ring ring() const { return ring_; }
  const std::map<Key, Scalar>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }

  Scalar coeff(const Key& key) const {
    auto it = coeffs_.find(key);
    return it == coeffs_.end() ? Scalar::zero(ring_) : it->second;
  }

  /// Adds c to the coefficient at key (key must be strictly increasing).
  void add_coeff(const Key& key, const Scalar& c) {
    if (static_cast<int>(key.size()) != degree_) {
      fail(ErrorKind::DegreeError, "coefficient key arity != form degree");
    }
    for (size_t i = 0; i + 1 < key.size(); ++i) {
      if (key[i] >= key[i + 1]) fail(ErrorKind::Precondition, "key not strictly increasing");
    }
    if (!key.empty() && (key.front() < 0 || key.back() >= frame_->dim())) {
      fail(ErrorKind::Precondition, "form index out of range");
    }
    if (c.ring() != ring_) fail(ErrorKind::RingMismatch, "coefficient ring mismatch");
    auto it = coeffs_.find(key);
    if (it == coeffs_.end()) {
      if (!c.is_zero()) coeffs_[key] = c;
    } else {
      it->second += c;
      if (it->second.is_zero()) coeffs_.erase(it);
    }
  }

  bool operator==(const KForm& o) const {
    return degree_ == o.degree_ && ring_ == o.ring_ && coeffs_ == o.coeffs_ &&
           (frame_.get() == o.frame_.get() || *frame_ == *o.frame_);
  }
  bool operator!=(const KForm& o) const { return !(*this == o); }

  std::string str() const;

 private:
  FramePtr frame_;
  int degree_;
  Ring ring_;
  std::map<Key, Scalar> coeffs_;
};

/// Constant-coefficient vector field.
class VectorField {
 public:
  VectorField(FramePtr frame, Ring ring)
      : frame_(std::move(frame)),
        ring_(ring),
        coeffs_(frame_->dim(), Scalar::zero(ring)) {}

  const FramePtr& frame() const { return frame_; }
  Ring ring() const { return ring_; }
  int dim() const { return static_cast<int>(coeffs_.size()); }

  const Scalar& operator[](int i) const { return coeffs_[i]; }
  void set(int i, Scalar c) {
    if (c.ring() != ring_) fail(ErrorKind::RingMismatch, "coefficient ring mismatch");
    coeffs_[i] = std::move(c);
  }

  bool is_zero() const {
    for (const auto& c : coeffs_) {
      if (!c.is_zero()) return false;
    }
    return true;
  }

  bool operator==(const VectorField& o) const {
    return ring_ == o.ring_ && coeffs_ == o.coeffs_ &&
           (frame_.get() == o.frame_.get() || *frame_ == *o.frame_);
  }
  bool operator!=(const VectorField& o) const { return !(*this == o); }

  std::string str() const;

 private:
  FramePtr frame_;
  Ring ring_;
  std::vector<Scalar> coeffs_;
};

/// Constant-coefficient endomorphism field; column j is the image of e_j.
class EndoField {
 public:
  EndoField(FramePtr frame, Ring ring)
      : frame_(std::move(frame)), ring_(ring) {
    int n = frame_->dim();
    mat_.assign(n, std::vector<Scalar>(n, Scalar::zero(ring)));
  }

  static EndoField identity(FramePtr frame, Ring ring) {
    EndoField e(std::move(frame), ring);
    for (int i = 0; i < e.dim(); ++i) e.mat_[i][i] = Scalar::one(ring);
    return e;
  }

  const FramePtr& frame() const { return frame_; }
  Ring ring() const { return ring_; }
  int dim() const { return static_cast<int>(mat_.size()); }

  const Scalar& at(int row, int col) const { return mat_[row][col]; }
  void set(int row, int col, Scalar c) {
    if (c.ring() != ring_) fail(ErrorKind::RingMismatch, "coefficient ring mismatch");
    mat_[row][col] = std::move(c);
  }

  VectorField apply(const VectorField& v) const;
  EndoField compose(const EndoField& inner) const;  // this after inner

  EndoField operator+(const EndoField& o) const;
  EndoField operator-(const EndoField& o) const;
  EndoField scaled(const Scalar& c) const;

  bool is_zero() const {
    for (const auto& row : mat_) {
      for (const auto& c : row) {
        if (!c.is_zero()) return false;
      }
    }
    return true;
  }

  bool operator==(const EndoField& o) const {
    return ring_ == o.ring_ && mat_ == o.mat_ &&
           (frame_.get() == o.frame_.get() || *frame_ == *o.frame_);
  }
  bool operator!=(const EndoField& o) const { return !(*this == o); }

 private:
  FramePtr frame_;
  Ring ring_;
  std::vector<std::vector<Scalar>> mat_;
};

}  // namespace cosym
