#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "stem/chem.hpp"
#include "stem/error.hpp"
#include "stem/matrix.hpp"

namespace stem::gat {

struct GatConfig {
  int heads = 8;
  int hidden_size = 300;
  double dropout = 0.2;      // applied to attention weights while training
  int batch_size = 32;
  int epochs = 40;
  double learning_rate = 0.001;
  double leaky_slope = 0.2;
  int layers = 2;
};

// Ordered neighbor pairs (center, neighbor) including a self-loop per atom,
// grouped by center so softmax segments are contiguous.
struct EdgeList {
  std::vector<int> center;
  std::vector<int> nbr;
  std::size_t size() const { return center.size(); }
};

EdgeList build_edges(const chem::MolGraph& mol);

// Multi-head graph attention encoder with a linear+sigmoid training head.
// Heads are combined by elementwise average; node aggregation uses ELU.
struct GatModel {
  GatConfig config;
  int input_dim = 0;
  std::vector<std::vector<Matrix>> weights;    // [layer][head], d_in x hidden
  std::vector<std::vector<Matrix>> attention;  // [layer][head], 2*hidden x 1
  Matrix head_weight;                          // hidden x 1
  Matrix head_bias;                            // 1 x 1
  std::vector<double> epoch_loss;              // mean training loss per epoch
};

GatModel init_gat_model(int input_dim, const GatConfig& cfg,
                        std::uint64_t seed);

// Per-edge attention scores for one head of the first layer:
// LeakyReLU(a^T [W h_center || W h_neighbor]), aligned with build_edges.
std::vector<double> attention_logits(const GatModel& model,
                                     const chem::MolGraph& mol, int head);

// Softmax of the scores over each center's neighborhood (max-subtracted).
std::vector<double> attention_softmax(const std::vector<double>& logits,
                                      const EdgeList& edges, int n_atoms);

// One full first-layer update: per head ELU(sum alpha * W h_u), averaged
// across heads. Evaluation mode (no dropout).
Matrix node_update(const GatModel& model, const chem::MolGraph& mol);

// Mean over node states.
Matrix readout(const Matrix& node_states);

// Frozen-model embedding: readout after the last attention layer, before
// the classifier head. Evaluation mode.
std::vector<double> embed(const GatModel& model, const chem::MolGraph& mol);

double predict_logit(const GatModel& model, const chem::MolGraph& mol);

// Mini-batch Adam on BCE of the sigmoid classifier head. Deterministic for
// a fixed seed. Throws NonFiniteLoss if the loss leaves the reals.
GatModel train_gat(const std::vector<chem::MolGraph>& mols,
                   const std::vector<int>& labels, const GatConfig& cfg,
                   std::uint64_t seed);

// Evaluation-mode batch loss and parameter gradients, exposed so the test
// suite can check every analytic gradient against central differences.
struct GatGradients {
  std::vector<std::vector<Matrix>> weights;
  std::vector<std::vector<Matrix>> attention;
  Matrix head_weight;
  Matrix head_bias;
};

double batch_loss(const GatModel& model,
                  const std::vector<const chem::MolGraph*>& mols,
                  const std::vector<int>& labels);

GatGradients batch_gradients(const GatModel& model,
                             const std::vector<const chem::MolGraph*>& mols,
                             const std::vector<int>& labels);

}  // namespace stem::gat
