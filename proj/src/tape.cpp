#include "stem/tape.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace stem::autodiff {

Tape::Id Tape::push(Matrix value, std::function<void()> backprop) {
  nodes_.push_back(Node{std::move(value), Matrix(), std::move(backprop)});
  return static_cast<Id>(nodes_.size()) - 1;
}

Tape::Id Tape::input(Matrix value) { return push(std::move(value), {}); }

Tape::Id Tape::matmul(Id a, Id b) {
  const Matrix& va = nodes_[a].value;
  const Matrix& vb = nodes_[b].value;
  if (va.cols() != vb.rows()) throw ShapeMismatch("matmul shape mismatch");
  Id out = push(stem::matmul(va, vb), {});
  nodes_[out].backprop = [this, a, b, out] {
    // dA += G B^T ; dB += A^T G
    matmul_accum(nodes_[out].grad, transpose(nodes_[b].value), nodes_[a].grad);
    matmul_accum(transpose(nodes_[a].value), nodes_[out].grad, nodes_[b].grad);
  };
  return out;
}

Tape::Id Tape::add(Id a, Id b) {
  const Matrix& va = nodes_[a].value;
  const Matrix& vb = nodes_[b].value;
  if (!va.same_shape(vb)) throw ShapeMismatch("add shape mismatch");
  Matrix v = va;
  for (std::size_t i = 0; i < v.size(); ++i) v.data()[i] += vb.data()[i];
  Id out = push(std::move(v), {});
  nodes_[out].backprop = [this, a, b, out] {
    for (std::size_t i = 0; i < nodes_[out].grad.size(); ++i) {
      nodes_[a].grad.data()[i] += nodes_[out].grad.data()[i];
      nodes_[b].grad.data()[i] += nodes_[out].grad.data()[i];
    }
  };
  return out;
}

Tape::Id Tape::add_rowvec(Id a, Id row) {
  const Matrix& va = nodes_[a].value;
  const Matrix& vr = nodes_[row].value;
  if (vr.rows() != 1 || vr.cols() != va.cols())
    throw ShapeMismatch("add_rowvec shape mismatch");
  Matrix v = va;
  for (std::size_t r = 0; r < v.rows(); ++r)
    for (std::size_t c = 0; c < v.cols(); ++c) v(r, c) += vr(0, c);
  Id out = push(std::move(v), {});
  nodes_[out].backprop = [this, a, row, out] {
    const Matrix& g = nodes_[out].grad;
    for (std::size_t r = 0; r < g.rows(); ++r)
      for (std::size_t c = 0; c < g.cols(); ++c) {
        nodes_[a].grad(r, c) += g(r, c);
        nodes_[row].grad(0, c) += g(r, c);
      }
  };
  return out;
}

Tape::Id Tape::hadamard(Id a, Id b) {
  const Matrix& va = nodes_[a].value;
  const Matrix& vb = nodes_[b].value;
  if (!va.same_shape(vb)) throw ShapeMismatch("hadamard shape mismatch");
  Matrix v = va;
  for (std::size_t i = 0; i < v.size(); ++i) v.data()[i] *= vb.data()[i];
  Id out = push(std::move(v), {});
  nodes_[out].backprop = [this, a, b, out] {
    for (std::size_t i = 0; i < nodes_[out].grad.size(); ++i) {
      nodes_[a].grad.data()[i] +=
          nodes_[out].grad.data()[i] * nodes_[b].value.data()[i];
      nodes_[b].grad.data()[i] +=
          nodes_[out].grad.data()[i] * nodes_[a].value.data()[i];
    }
  };
  return out;
}

Tape::Id Tape::scale(Id a, double s) {
  Matrix v = nodes_[a].value;
  for (double& x : v.data()) x *= s;
  Id out = push(std::move(v), {});
  nodes_[out].backprop = [this, a, out, s] {
    for (std::size_t i = 0; i < nodes_[out].grad.size(); ++i)
      nodes_[a].grad.data()[i] += nodes_[out].grad.data()[i] * s;
  };
  return out;
}

Tape::Id Tape::leaky_relu(Id a, double negative_slope) {
  Matrix v = nodes_[a].value;
  for (double& x : v.data())
    if (x < 0) x *= negative_slope;
  Id out = push(std::move(v), {});
  nodes_[out].backprop = [this, a, out, negative_slope] {
    for (std::size_t i = 0; i < nodes_[out].grad.size(); ++i) {
      const double slope = nodes_[a].value.data()[i] < 0 ? negative_slope : 1.0;
      nodes_[a].grad.data()[i] += nodes_[out].grad.data()[i] * slope;
    }
  };
  return out;
}

Tape::Id Tape::elu(Id a) {
  Matrix v = nodes_[a].value;
  for (double& x : v.data())
    if (x < 0) x = std::expm1(x);
  Id out = push(std::move(v), {});
  nodes_[out].backprop = [this, a, out] {
    for (std::size_t i = 0; i < nodes_[out].grad.size(); ++i) {
      const double x = nodes_[a].value.data()[i];
      const double d = x < 0 ? std::exp(x) : 1.0;
      nodes_[a].grad.data()[i] += nodes_[out].grad.data()[i] * d;
    }
  };
  return out;
}

Tape::Id Tape::relu(Id a) {
  Matrix v = nodes_[a].value;
  for (double& x : v.data())
    if (x < 0) x = 0;
  Id out = push(std::move(v), {});
  nodes_[out].backprop = [this, a, out] {
    for (std::size_t i = 0; i < nodes_[out].grad.size(); ++i)
      if (nodes_[a].value.data()[i] > 0)
        nodes_[a].grad.data()[i] += nodes_[out].grad.data()[i];
  };
  return out;
}

Tape::Id Tape::concat_cols(Id a, Id b) {
  const Matrix& va = nodes_[a].value;
  const Matrix& vb = nodes_[b].value;
  if (va.rows() != vb.rows()) throw ShapeMismatch("concat_cols shape mismatch");
  Matrix v(va.rows(), va.cols() + vb.cols());
  for (std::size_t r = 0; r < va.rows(); ++r) {
    for (std::size_t c = 0; c < va.cols(); ++c) v(r, c) = va(r, c);
    for (std::size_t c = 0; c < vb.cols(); ++c) v(r, va.cols() + c) = vb(r, c);
  }
  Id out = push(std::move(v), {});
  nodes_[out].backprop = [this, a, b, out] {
    const Matrix& g = nodes_[out].grad;
    const std::size_t ca = nodes_[a].value.cols();
    for (std::size_t r = 0; r < g.rows(); ++r) {
      for (std::size_t c = 0; c < ca; ++c) nodes_[a].grad(r, c) += g(r, c);
      for (std::size_t c = 0; c < nodes_[b].value.cols(); ++c)
        nodes_[b].grad(r, c) += g(r, ca + c);
    }
  };
  return out;
}

Tape::Id Tape::concat_rows(const std::vector<Id>& parts) {
  if (parts.empty()) throw ShapeMismatch("concat_rows of nothing");
  const std::size_t cols = nodes_[parts[0]].value.cols();
  std::size_t rows = 0;
  for (Id p : parts) {
    if (nodes_[p].value.cols() != cols)
      throw ShapeMismatch("concat_rows column mismatch");
    rows += nodes_[p].value.rows();
  }
  Matrix v(rows, cols);
  std::size_t at = 0;
  for (Id p : parts) {
    const Matrix& vp = nodes_[p].value;
    for (std::size_t r = 0; r < vp.rows(); ++r, ++at)
      for (std::size_t c = 0; c < cols; ++c) v(at, c) = vp(r, c);
  }
  Id out = push(std::move(v), {});
  std::vector<Id> parts_copy = parts;
  nodes_[out].backprop = [this, parts_copy, out] {
    const Matrix& g = nodes_[out].grad;
    std::size_t at = 0;
    for (Id p : parts_copy) {
      Matrix& gp = nodes_[p].grad;
      for (std::size_t r = 0; r < gp.rows(); ++r, ++at)
        for (std::size_t c = 0; c < gp.cols(); ++c) gp(r, c) += g(at, c);
    }
  };
  return out;
}

Tape::Id Tape::gather_rows(Id a, std::vector<int> rows) {
  const Matrix& va = nodes_[a].value;
  Matrix v(rows.size(), va.cols());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < va.cols(); ++c)
      v(r, c) = va(static_cast<std::size_t>(rows[r]), c);
  Id out = push(std::move(v), {});
  nodes_[out].backprop = [this, a, out, rows = std::move(rows)] {
    const Matrix& g = nodes_[out].grad;
    for (std::size_t r = 0; r < rows.size(); ++r)
      for (std::size_t c = 0; c < g.cols(); ++c)
        nodes_[a].grad(static_cast<std::size_t>(rows[r]), c) += g(r, c);
  };
  return out;
}

Tape::Id Tape::scale_rows(Id a, Id colvec) {
  const Matrix& va = nodes_[a].value;
  const Matrix& vs = nodes_[colvec].value;
  if (vs.cols() != 1 || vs.rows() != va.rows())
    throw ShapeMismatch("scale_rows shape mismatch");
  Matrix v = va;
  for (std::size_t r = 0; r < v.rows(); ++r)
    for (std::size_t c = 0; c < v.cols(); ++c) v(r, c) *= vs(r, 0);
  Id out = push(std::move(v), {});
  nodes_[out].backprop = [this, a, colvec, out] {
    const Matrix& g = nodes_[out].grad;
    const Matrix& va = nodes_[a].value;
    const Matrix& vs = nodes_[colvec].value;
    for (std::size_t r = 0; r < g.rows(); ++r) {
      double dot = 0;
      for (std::size_t c = 0; c < g.cols(); ++c) {
        nodes_[a].grad(r, c) += g(r, c) * vs(r, 0);
        dot += g(r, c) * va(r, c);
      }
      nodes_[colvec].grad(r, 0) += dot;
    }
  };
  return out;
}

Tape::Id Tape::mul_const(Id a, Matrix mask) {
  const Matrix& va = nodes_[a].value;
  if (!va.same_shape(mask)) throw ShapeMismatch("mul_const shape mismatch");
  Matrix v = va;
  for (std::size_t i = 0; i < v.size(); ++i) v.data()[i] *= mask.data()[i];
  Id out = push(std::move(v), {});
  nodes_[out].backprop = [this, a, out, mask = std::move(mask)] {
    for (std::size_t i = 0; i < nodes_[out].grad.size(); ++i)
      nodes_[a].grad.data()[i] +=
          nodes_[out].grad.data()[i] * mask.data()[i];
  };
  return out;
}

Tape::Id Tape::segment_softmax(Id logits, std::vector<int> segment_of,
                               int n_segments) {
  const Matrix& vl = nodes_[logits].value;
  if (vl.cols() != 1 || vl.rows() != segment_of.size())
    throw ShapeMismatch("segment_softmax expects an Ex1 logit column");
  // max-subtraction per segment for numerical stability
  std::vector<double> seg_max(n_segments, -1e300);
  for (std::size_t e = 0; e < vl.rows(); ++e)
    seg_max[segment_of[e]] = std::max(seg_max[segment_of[e]], vl(e, 0));
  Matrix v(vl.rows(), 1);
  std::vector<double> seg_sum(n_segments, 0.0);
  for (std::size_t e = 0; e < vl.rows(); ++e) {
    v(e, 0) = std::exp(vl(e, 0) - seg_max[segment_of[e]]);
    seg_sum[segment_of[e]] += v(e, 0);
  }
  for (std::size_t e = 0; e < vl.rows(); ++e) v(e, 0) /= seg_sum[segment_of[e]];
  Id out = push(std::move(v), {});
  nodes_[out].backprop = [this, logits, out, n_segments,
                          segment_of = std::move(segment_of)] {
    const Matrix& y = nodes_[out].value;
    const Matrix& g = nodes_[out].grad;
    std::vector<double> seg_dot(n_segments, 0.0);
    for (std::size_t e = 0; e < y.rows(); ++e)
      seg_dot[segment_of[e]] += g(e, 0) * y(e, 0);
    for (std::size_t e = 0; e < y.rows(); ++e)
      nodes_[logits].grad(e, 0) +=
          y(e, 0) * (g(e, 0) - seg_dot[segment_of[e]]);
  };
  return out;
}

Tape::Id Tape::segment_sum(Id a, std::vector<int> segment_of, int n_segments) {
  const Matrix& va = nodes_[a].value;
  if (va.rows() != segment_of.size())
    throw ShapeMismatch("segment_sum row/segment mismatch");
  Matrix v(n_segments, va.cols(), 0.0);
  for (std::size_t e = 0; e < va.rows(); ++e)
    for (std::size_t c = 0; c < va.cols(); ++c)
      v(segment_of[e], c) += va(e, c);
  Id out = push(std::move(v), {});
  nodes_[out].backprop = [this, a, out, segment_of = std::move(segment_of)] {
    const Matrix& g = nodes_[out].grad;
    for (std::size_t e = 0; e < nodes_[a].value.rows(); ++e)
      for (std::size_t c = 0; c < g.cols(); ++c)
        nodes_[a].grad(e, c) += g(segment_of[e], c);
  };
  return out;
}

Tape::Id Tape::mean_rows(Id a) {
  const Matrix& va = nodes_[a].value;
  if (va.rows() == 0) throw ShapeMismatch("mean_rows of empty matrix");
  Matrix v(1, va.cols(), 0.0);
  for (std::size_t r = 0; r < va.rows(); ++r)
    for (std::size_t c = 0; c < va.cols(); ++c) v(0, c) += va(r, c);
  const double inv = 1.0 / static_cast<double>(va.rows());
  for (double& x : v.data()) x *= inv;
  Id out = push(std::move(v), {});
  nodes_[out].backprop = [this, a, out, inv] {
    const Matrix& g = nodes_[out].grad;
    for (std::size_t r = 0; r < nodes_[a].value.rows(); ++r)
      for (std::size_t c = 0; c < g.cols(); ++c)
        nodes_[a].grad(r, c) += g(0, c) * inv;
  };
  return out;
}

Tape::Id Tape::average(const std::vector<Id>& parts) {
  if (parts.empty()) throw ShapeMismatch("average of nothing");
  Matrix v = nodes_[parts[0]].value;
  for (std::size_t p = 1; p < parts.size(); ++p) {
    const Matrix& vp = nodes_[parts[p]].value;
    if (!vp.same_shape(v)) throw ShapeMismatch("average shape mismatch");
    for (std::size_t i = 0; i < v.size(); ++i) v.data()[i] += vp.data()[i];
  }
  const double inv = 1.0 / static_cast<double>(parts.size());
  for (double& x : v.data()) x *= inv;
  Id out = push(std::move(v), {});
  std::vector<Id> parts_copy = parts;
  nodes_[out].backprop = [this, parts_copy, out, inv] {
    const Matrix& g = nodes_[out].grad;
    for (Id p : parts_copy)
      for (std::size_t i = 0; i < g.size(); ++i)
        nodes_[p].grad.data()[i] += g.data()[i] * inv;
  };
  return out;
}

Tape::Id Tape::bce_with_logits(Id logits, std::vector<double> targets) {
  const Matrix& vz = nodes_[logits].value;
  if (vz.cols() != 1 || vz.rows() != targets.size())
    throw ShapeMismatch("bce_with_logits expects an nx1 logit column");
  double loss = 0.0;
  for (std::size_t i = 0; i < targets.size(); ++i) {
    const double z = vz(i, 0);
    loss += std::max(z, 0.0) - z * targets[i] + std::log1p(std::exp(-std::abs(z)));
  }
  Matrix v(1, 1, loss / static_cast<double>(targets.size()));
  Id out = push(std::move(v), {});
  nodes_[out].backprop = [this, logits, out, targets = std::move(targets)] {
    const double g = nodes_[out].grad(0, 0);
    const double inv = 1.0 / static_cast<double>(targets.size());
    for (std::size_t i = 0; i < targets.size(); ++i) {
      const double z = nodes_[logits].value(i, 0);
      const double p = 1.0 / (1.0 + std::exp(-z));
      nodes_[logits].grad(i, 0) += g * (p - targets[i]) * inv;
    }
  };
  return out;
}

void Tape::backward(Id out) {
  if (nodes_[out].value.rows() != 1 || nodes_[out].value.cols() != 1)
    throw ShapeMismatch("backward needs a scalar output");
  for (Node& n : nodes_)
    n.grad = Matrix(n.value.rows(), n.value.cols(), 0.0);
  nodes_[out].grad(0, 0) = 1.0;
  for (Id id = out; id >= 0; --id)
    if (nodes_[id].backprop) nodes_[id].backprop();
}

}  // namespace stem::autodiff
