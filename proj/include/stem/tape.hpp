#pragma once

#include <functional>
#include <vector>

#include "stem/error.hpp"
#include "stem/matrix.hpp"

namespace stem::autodiff {

// Minimal reverse-mode gradient engine: a define-by-run tape over dense
// matrix operations. Values are computed eagerly; each node records a
// closure that scatters its output gradient back to its parents. Nodes are
// created in topological order, so backward() just walks the tape in
// reverse. Per-op gradients are validated against central finite
// differences in the test suite.
class Tape {
 public:
  using Id = int;

  Id input(Matrix value);

  Id matmul(Id a, Id b);
  Id add(Id a, Id b);              // same shape
  Id add_rowvec(Id a, Id row);     // broadcast a 1xC row over all rows
  Id hadamard(Id a, Id b);
  Id scale(Id a, double s);
  Id leaky_relu(Id a, double negative_slope);
  Id elu(Id a);
  Id relu(Id a);
  Id concat_cols(Id a, Id b);
  Id concat_rows(const std::vector<Id>& parts);
  Id gather_rows(Id a, std::vector<int> rows);
  Id scale_rows(Id a, Id colvec);  // row r of a times colvec(r, 0)
  Id mul_const(Id a, Matrix mask);  // elementwise by a constant (dropout)
  Id segment_softmax(Id logits, std::vector<int> segment_of, int n_segments);
  Id segment_sum(Id a, std::vector<int> segment_of, int n_segments);
  Id mean_rows(Id a);              // RxC -> 1xC
  Id average(const std::vector<Id>& parts);

  // Numerically stable mean binary cross-entropy over logits (nx1).
  Id bce_with_logits(Id logits, std::vector<double> targets);

  const Matrix& value(Id id) const { return nodes_[id].value; }
  std::size_t size() const { return nodes_.size(); }

  // Seeds d(out)/d(out) = 1 (out must be 1x1) and accumulates gradients.
  void backward(Id out);
  const Matrix& grad(Id id) const { return nodes_[id].grad; }

 private:
  struct Node {
    Matrix value;
    Matrix grad;
    std::function<void()> backprop;  // empty for leaf inputs
  };

  Id push(Matrix value, std::function<void()> backprop);
  std::vector<Node> nodes_;
};

}  // namespace stem::autodiff
