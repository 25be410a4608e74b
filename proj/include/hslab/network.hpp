#ifndef HSLAB_NETWORK_HPP
#define HSLAB_NETWORK_HPP

#include <Eigen/Core>
#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "hslab/losses.hpp"
#include "hslab/rng.hpp"

namespace hslab {

enum class ArchKind { FIXED_DEPTH, FIXED_WIDTH };

const char *arch_name(ArchKind kind);
ArchKind parse_arch(std::string_view name);

/*
  The two universal-approximator shapes. FIXED_DEPTH is a single ReLU
  hidden layer of width `units`. FIXED_WIDTH stacks `units` hidden
  layers of width input_dim + 3, each linear -> batch norm -> ReLU;
  after one plain layer (two when the layer count is even) the layers
  pair up into residual blocks whose input is added back before the
  closing ReLU.
*/
struct Architecture {
    ArchKind kind = ArchKind::FIXED_DEPTH;
    int input_dim = 0;
    int units = 1;       // hidden width m, or hidden layer count h
    int output_dim = 1;
    bool batch_norm = false;

    int hidden_layer_count() const {
        return kind == ArchKind::FIXED_DEPTH ? 1 : units;
    }
    int hidden_width() const {
        return kind == ArchKind::FIXED_DEPTH ? units : input_dim + 3;
    }
    int pre_residual_layers() const;
    int residual_blocks() const;

    // (rows, cols) of every linear layer, output layer last.
    std::vector<std::pair<int, int>> linear_shapes() const;
};

Architecture make_fixed_depth(int input_dim, int width, int output_dim = 1);
Architecture make_fixed_width(int input_dim, int layers, int output_dim = 1);

// Weights and biases of all linear layers; batch-norm parameters
// excluded by convention.
int64_t param_count(const Architecture &arch);

struct Parameters {
    std::vector<Eigen::MatrixXd> weights;  // per linear layer, out x in
    std::vector<Eigen::VectorXd> biases;
    // Per hidden layer when batch norm is enabled.
    std::vector<Eigen::VectorXd> bn_gamma;
    std::vector<Eigen::VectorXd> bn_beta;
    std::vector<Eigen::VectorXd> bn_running_mean;
    std::vector<Eigen::VectorXd> bn_running_var;
};

// He-scaled normal weights, zero biases, identity batch norm.
Parameters init_parameters(const Architecture &arch, Rng &rng);

// Configure batch norm layer `layer` to be an exact identity map in
// EVAL mode (gamma compensates the epsilon inside the variance term).
void set_batchnorm_passthrough(Parameters &params, int layer);

enum class Mode { TRAIN, EVAL };

struct BatchNormCache {
    Eigen::VectorXd mean;
    Eigen::VectorXd var;
    Eigen::VectorXd inv_std;
    Eigen::MatrixXd xhat;
};

struct LayerCache {
    Eigen::MatrixXd input;     // activation entering the linear layer
    Eigen::MatrixXd pre_relu;  // value entering the ReLU
    BatchNormCache bn;
};

struct ForwardCache {
    Mode mode = Mode::TRAIN;
    std::vector<LayerCache> layers;
    Eigen::MatrixXd last_hidden;
};

/*
  Forward pass on a input_dim x batch column-sample matrix. TRAIN mode
  normalizes with batch statistics (and fills `cache` for backward);
  EVAL mode uses running statistics and is a pure function of
  (params, input). Neither mode mutates params; running statistics are
  folded in separately via update_running_stats.
*/
Eigen::MatrixXd forward(const Architecture &arch, const Parameters &params,
                        const Eigen::MatrixXd &input, Mode mode,
                        ForwardCache *cache = nullptr);

// EVAL forward in fixed-size chunks, for sets too large for one pass.
Eigen::MatrixXd predict(const Architecture &arch, const Parameters &params,
                        const Eigen::MatrixXd &input, int chunk = 8192);

struct Gradients {
    std::vector<Eigen::MatrixXd> weights;
    std::vector<Eigen::VectorXd> biases;
    std::vector<Eigen::VectorXd> bn_gamma;
    std::vector<Eigen::VectorXd> bn_beta;
};

// Exact reverse-mode gradient given the forward cache and dLoss/dOutput.
Gradients backward(const Architecture &arch, const Parameters &params,
                   const ForwardCache &cache,
                   const Eigen::MatrixXd &output_grad);

// Fold the batch statistics recorded in `cache` into the running
// statistics: running = momentum * running + (1 - momentum) * batch.
void update_running_stats(const Architecture &arch, Parameters &params,
                          const ForwardCache &cache, double momentum);

// Forward + loss + backward in one call; returns the batch loss.
double loss_and_gradient(const Architecture &arch, const Parameters &params,
                         const Eigen::MatrixXd &input,
                         const Eigen::VectorXd &labels,
                         const LossConfig &loss, Mode mode, Gradients &grads);

/*
  Flat views over the trainable parameters (linear weights and biases
  plus batch-norm scale/shift; running statistics excluded). The
  traversal order is fixed so optimizer state lines up across calls.
*/
int64_t trainable_count(const Architecture &arch);
Eigen::VectorXd flatten_trainable(const Architecture &arch,
                                  const Parameters &params);
void unflatten_trainable(const Architecture &arch, const Eigen::VectorXd &flat,
                         Parameters &params);
Eigen::VectorXd flatten_gradients(const Architecture &arch,
                                  const Gradients &grads);

struct Checkpoint {
    Architecture arch;
    Parameters params;
    LossConfig loss;
    uint64_t seed = 0;
};

void save_checkpoint(const std::filesystem::path &path, const Checkpoint &ckpt);
Checkpoint load_checkpoint(const std::filesystem::path &path);

}

#endif
