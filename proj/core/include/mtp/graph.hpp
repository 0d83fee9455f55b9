#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "mtp/tensor.hpp"

namespace mtp {

// Reverse-mode tape over TensorVal. Forward evaluation is eager: every builder
// computes its value immediately and records how to push gradients back.
// One graph instance is single-threaded; independent graphs may run on
// independent threads (heavy ops shard internally with deterministic results).
class Graph {
 public:
  using NodeId = int32_t;
  static constexpr NodeId kInvalid = -1;

  Graph() = default;
  Graph(const Graph&) = delete;
  Graph& operator=(const Graph&) = delete;

  // --- leaves ---
  NodeId input(TensorVal v);
  NodeId param(const TensorVal& p, std::string name);

  // --- elementwise ---
  NodeId add(NodeId a, NodeId b);
  NodeId sub(NodeId a, NodeId b);
  NodeId mul(NodeId a, NodeId b);
  NodeId scale(NodeId a, float c);
  NodeId add_scalar(NodeId a, float c);
  NodeId relu(NodeId a);
  NodeId gelu(NodeId a);
  NodeId tanh_op(NodeId a);
  NodeId sigmoid(NodeId a);
  NodeId exp_op(NodeId a);
  NodeId log_op(NodeId a);
  NodeId softplus(NodeId a);
  NodeId square(NodeId a);
  NodeId pow_scalar(NodeId a, float p);
  NodeId stop_grad(NodeId a);
  NodeId reshape(NodeId a, Shape s);

  // --- matrix ---
  NodeId matmul(NodeId a, NodeId b);           // (m,k)x(k,n)
  NodeId add_bias(NodeId x, NodeId b);         // rows of x + b
  NodeId linear(NodeId x, NodeId w, NodeId b); // matmul + bias

  // --- row/column structure (2-D view: rows = shape[0]) ---
  NodeId softmax_rows(NodeId a);
  NodeId log_softmax_rows(NodeId a);
  NodeId logsumexp_rows(NodeId a);             // (R,C) -> (R,1)
  NodeId row_sum(NodeId a);                    // (R,C) -> (R,1)
  NodeId row_mean(NodeId a);                   // (R,C) -> (R,1)
  NodeId sum_group_cols(NodeId a, int64_t group);  // (R,M*G) -> (R,M)
  NodeId concat_cols(const std::vector<NodeId>& xs);
  NodeId slice_cols(NodeId a, int64_t c0, int64_t c1);
  NodeId gather_rows(NodeId table, std::vector<int64_t> ids);
  NodeId gather_cols(NodeId a, std::vector<int64_t> ids);  // per-row pick -> (R,1)
  NodeId repeat_rows(NodeId a, int64_t reps);  // (B,C) -> (B*reps,C), blockwise
  // Interleave M same-shape (R,C) inputs into (R*M, C): out[r*M+m] = xs[m][r].
  NodeId interleave_rows(const std::vector<NodeId>& xs);
  NodeId sum_all(NodeId a);
  NodeId mean_all(NodeId a);
  NodeId dot(NodeId a, NodeId b);

  // --- normalization / conditioning ---
  NodeId layer_norm(NodeId x, NodeId gamma, NodeId beta);  // per row
  // Per-sample normalization over all of (C,H,W) with per-channel affine.
  NodeId sample_norm(NodeId x, NodeId gamma, NodeId beta);
  // y[b,c,*] = gamma[b,c] * x[b,c,*] + beta[b,c]  (FiLM core)
  NodeId channel_affine(NodeId x, NodeId gamma, NodeId beta);

  // --- nn ---
  NodeId conv2d(NodeId x, NodeId w, NodeId b, int stride, int pad);
  NodeId mean_pool_hw(NodeId x);  // (B,C,H,W) -> (B,C)
  // q,k,v: (batch*seq, heads*head_dim). mask: seq*seq row-major, nonzero means
  // "query i may attend key j". Every mask row must have an unmasked entry.
  NodeId attention(NodeId q, NodeId k, NodeId v, const std::vector<uint8_t>& mask,
                   int64_t batch, int64_t seq, int heads);

  // --- execution ---
  const TensorVal& val(NodeId id) const { return nodes_[id].val; }
  void backward(NodeId root);
  const TensorVal& grad(NodeId id) const;
  bool needs_grad(NodeId id) const { return nodes_[id].needs_grad; }
  const std::vector<std::pair<std::string, NodeId>>& param_nodes() const { return params_; }
  size_t node_count() const { return nodes_.size(); }

 private:
  struct Node {
    TensorVal val;
    TensorVal grad;
    bool needs_grad = false;
    bool grad_ready = false;
    std::function<void(Graph&, Node&)> bwd;
  };

  NodeId emplace(TensorVal val, bool needs_grad, std::function<void(Graph&, Node&)> bwd);
  TensorVal& ensure_grad(NodeId id);
  Node& node(NodeId id) { return nodes_[id]; }

  std::vector<Node> nodes_;
  std::vector<std::pair<std::string, NodeId>> params_;
};

// Softmax over masked logits for a single (seq,seq) attention table, exposed for
// oracle tests. Masked entries get exactly zero weight; a fully masked row is a
// contract violation.
TensorVal causal_attention(const TensorVal& q, const TensorVal& k, const TensorVal& v,
                           const std::vector<uint8_t>& mask);

// Deterministic fixed-shard GEMM helpers (row-major, f32).
void gemm_nn(const float* a, const float* b, float* c, int64_t m, int64_t k, int64_t n, bool accumulate);
void gemm_nt(const float* a, const float* b, float* c, int64_t m, int64_t k, int64_t n, bool accumulate);
void gemm_tn(const float* a, const float* b, float* c, int64_t m, int64_t k, int64_t n, bool accumulate);

}  // namespace mtp
