#include "hslab/network.hpp"

#include <cmath>
#include <fstream>

#include "hslab/io_util.hpp"

namespace hslab {

namespace {
constexpr double bn_epsilon = 1e-5;
}

const char *arch_name(ArchKind kind) {
    return kind == ArchKind::FIXED_DEPTH ? "fixed-depth" : "fixed-width";
}

ArchKind parse_arch(std::string_view name) {
    if (name == "fixed-depth" || name == "fixed_depth")
        return ArchKind::FIXED_DEPTH;
    if (name == "fixed-width" || name == "fixed_width")
        return ArchKind::FIXED_WIDTH;
    throw Error(ErrorCode::USAGE_ERROR,
                "unknown architecture '" + std::string(name) + "'");
}

int Architecture::pre_residual_layers() const {
    if (kind == ArchKind::FIXED_DEPTH)
        return 1;
    return units % 2 == 1 ? 1 : 2;
}

int Architecture::residual_blocks() const {
    if (kind == ArchKind::FIXED_DEPTH)
        return 0;
    return (units - pre_residual_layers()) / 2;
}

std::vector<std::pair<int, int>> Architecture::linear_shapes() const {
    std::vector<std::pair<int, int>> shapes;
    int width = hidden_width();
    shapes.emplace_back(width, input_dim);
    for (int layer = 1; layer < hidden_layer_count(); ++layer)
        shapes.emplace_back(width, width);
    shapes.emplace_back(output_dim, width);
    return shapes;
}

Architecture make_fixed_depth(int input_dim, int width, int output_dim) {
    if (input_dim < 1 || width < 1 || output_dim < 1)
        throw Error(ErrorCode::USAGE_ERROR, "fixed-depth shape out of range");
    return {ArchKind::FIXED_DEPTH, input_dim, width, output_dim, false};
}

Architecture make_fixed_width(int input_dim, int layers, int output_dim) {
    if (input_dim < 1 || layers < 1 || output_dim < 1)
        throw Error(ErrorCode::USAGE_ERROR, "fixed-width shape out of range");
    return {ArchKind::FIXED_WIDTH, input_dim, layers, output_dim, true};
}

int64_t param_count(const Architecture &arch) {
    int64_t total = 0;
    for (auto [rows, cols] : arch.linear_shapes())
        total += int64_t(rows) * cols + rows;
    return total;
}

Parameters init_parameters(const Architecture &arch, Rng &rng) {
    Parameters params;
    for (auto [rows, cols] : arch.linear_shapes()) {
        Eigen::MatrixXd weight(rows, cols);
        double scale = std::sqrt(2.0 / double(cols));
        for (int r = 0; r < rows; ++r)
            for (int c = 0; c < cols; ++c)
                weight(r, c) = scale * rng.normal();
        params.weights.push_back(std::move(weight));
        params.biases.push_back(Eigen::VectorXd::Zero(rows));
    }
    if (arch.batch_norm) {
        int width = arch.hidden_width();
        for (int layer = 0; layer < arch.hidden_layer_count(); ++layer) {
            params.bn_gamma.push_back(Eigen::VectorXd::Ones(width));
            params.bn_beta.push_back(Eigen::VectorXd::Zero(width));
            params.bn_running_mean.push_back(Eigen::VectorXd::Zero(width));
            params.bn_running_var.push_back(Eigen::VectorXd::Ones(width));
        }
    }
    return params;
}

void set_batchnorm_passthrough(Parameters &params, int layer) {
    int width = int(params.bn_gamma.at(layer).size());
    // gamma cancels the epsilon folded into the variance term.
    params.bn_gamma[layer] =
        Eigen::VectorXd::Constant(width, std::sqrt(1.0 + bn_epsilon));
    params.bn_beta[layer].setZero();
    params.bn_running_mean[layer].setZero();
    params.bn_running_var[layer].setOnes();
}

namespace {

bool closes_block(const Architecture &arch, int layer) {
    int pre = arch.pre_residual_layers();
    return arch.kind == ArchKind::FIXED_WIDTH && layer >= pre &&
           (layer - pre) % 2 == 1;
}

Eigen::MatrixXd batch_norm_forward(const Parameters &params, int layer,
                                   const Eigen::MatrixXd &z, Mode mode,
                                   BatchNormCache *cache) {
    const Eigen::VectorXd &gamma = params.bn_gamma[layer];
    const Eigen::VectorXd &beta = params.bn_beta[layer];
    Eigen::VectorXd mean, var;
    if (mode == Mode::TRAIN) {
        mean = z.rowwise().mean();
        var = (z.colwise() - mean).array().square().rowwise().mean();
    } else {
        mean = params.bn_running_mean[layer];
        var = params.bn_running_var[layer];
    }
    Eigen::VectorXd inv_std = (var.array() + bn_epsilon).rsqrt();
    Eigen::MatrixXd xhat = z.colwise() - mean;
    xhat.array().colwise() *= inv_std.array();
    Eigen::MatrixXd out = xhat;
    out.array().colwise() *= gamma.array();
    out.colwise() += beta;
    if (cache) {
        cache->mean = std::move(mean);
        cache->var = std::move(var);
        cache->inv_std = std::move(inv_std);
        cache->xhat = std::move(xhat);
    }
    return out;
}

Eigen::MatrixXd batch_norm_backward(const Parameters &params, int layer,
                                    const BatchNormCache &bn, Mode mode,
                                    const Eigen::MatrixXd &dy,
                                    Eigen::VectorXd &dgamma,
                                    Eigen::VectorXd &dbeta) {
    const Eigen::VectorXd &gamma = params.bn_gamma[layer];
    dgamma = (dy.array() * bn.xhat.array()).rowwise().sum();
    dbeta = dy.rowwise().sum();
    Eigen::MatrixXd dxhat = dy;
    dxhat.array().colwise() *= gamma.array();
    if (mode == Mode::EVAL) {
        // Running statistics are constants in EVAL mode.
        dxhat.array().colwise() *= bn.inv_std.array();
        return dxhat;
    }
    double batch = double(dy.cols());
    Eigen::VectorXd sum_dxhat = dxhat.rowwise().sum();
    Eigen::VectorXd sum_dxhat_xhat =
        (dxhat.array() * bn.xhat.array()).rowwise().sum();
    Eigen::MatrixXd dz = batch * dxhat;
    dz.colwise() -= sum_dxhat;
    dz -= bn.xhat.array().colwise() * sum_dxhat_xhat.array();
    dz.array().colwise() *= bn.inv_std.array() / batch;
    return dz;
}

}

Eigen::MatrixXd forward(const Architecture &arch, const Parameters &params,
                        const Eigen::MatrixXd &input, Mode mode,
                        ForwardCache *cache) {
    if (input.rows() != arch.input_dim)
        throw Error(ErrorCode::SHAPE_MISMATCH,
                    "input rows do not match the architecture input_dim");
    if (input.cols() == 0)
        throw Error(ErrorCode::EMPTY_INPUT, "forward on an empty batch");

    int hidden = arch.hidden_layer_count();
    if (cache) {
        cache->mode = mode;
        cache->layers.assign(hidden, LayerCache{});
    }

    Eigen::MatrixXd activation = input;
    Eigen::MatrixXd block_input;
    for (int layer = 0; layer < hidden; ++layer) {
        if (closes_block(arch, layer + 1))
            block_input = activation;  // activation entering the block
        if (cache)
            cache->layers[layer].input = activation;
        Eigen::MatrixXd z =
            (params.weights[layer] * activation).colwise() + params.biases[layer];
        if (arch.batch_norm)
            z = batch_norm_forward(params, layer, z, mode,
                                   cache ? &cache->layers[layer].bn : nullptr);
        if (closes_block(arch, layer))
            z += block_input;
        if (cache)
            cache->layers[layer].pre_relu = z;
        activation = z.cwiseMax(0.0);
    }
    if (cache)
        cache->last_hidden = activation;
    int out_layer = hidden;
    return (params.weights[out_layer] * activation).colwise() +
           params.biases[out_layer];
}

Eigen::MatrixXd predict(const Architecture &arch, const Parameters &params,
                        const Eigen::MatrixXd &input, int chunk) {
    Eigen::MatrixXd output(arch.output_dim, input.cols());
    for (Eigen::Index begin = 0; begin < input.cols(); begin += chunk) {
        Eigen::Index width = std::min<Eigen::Index>(chunk, input.cols() - begin);
        output.middleCols(begin, width) =
            forward(arch, params, input.middleCols(begin, width), Mode::EVAL);
    }
    return output;
}

Gradients backward(const Architecture &arch, const Parameters &params,
                   const ForwardCache &cache,
                   const Eigen::MatrixXd &output_grad) {
    int hidden = arch.hidden_layer_count();
    Gradients grads;
    grads.weights.resize(hidden + 1);
    grads.biases.resize(hidden + 1);
    if (arch.batch_norm) {
        grads.bn_gamma.resize(hidden);
        grads.bn_beta.resize(hidden);
    }

    int out_layer = hidden;
    grads.weights[out_layer] = output_grad * cache.last_hidden.transpose();
    grads.biases[out_layer] = output_grad.rowwise().sum();
    Eigen::MatrixXd d_activation =
        params.weights[out_layer].transpose() * output_grad;

    Eigen::MatrixXd skip_grad;
    bool have_skip = false;
    for (int layer = hidden - 1; layer >= 0; --layer) {
        const LayerCache &lc = cache.layers[layer];
        Eigen::MatrixXd d_pre =
            (lc.pre_relu.array() > 0.0).select(d_activation, 0.0);
        if (closes_block(arch, layer)) {
            skip_grad = d_pre;
            have_skip = true;
        }
        Eigen::MatrixXd d_z;
        if (arch.batch_norm)
            d_z = batch_norm_backward(params, layer, lc.bn, cache.mode, d_pre,
                                      grads.bn_gamma[layer],
                                      grads.bn_beta[layer]);
        else
            d_z = std::move(d_pre);
        grads.weights[layer] = d_z * lc.input.transpose();
        grads.biases[layer] = d_z.rowwise().sum();
        d_activation = params.weights[layer].transpose() * d_z;
        if (have_skip && !closes_block(arch, layer)) {
            // The residual connection feeds the block input directly.
            d_activation += skip_grad;
            have_skip = false;
        }
    }
    return grads;
}

void update_running_stats(const Architecture &arch, Parameters &params,
                          const ForwardCache &cache, double momentum) {
    if (!arch.batch_norm)
        return;
    if (cache.mode != Mode::TRAIN)
        throw Error(ErrorCode::USAGE_ERROR,
                    "running statistics come from TRAIN-mode batches");
    for (int layer = 0; layer < arch.hidden_layer_count(); ++layer) {
        const BatchNormCache &bn = cache.layers[layer].bn;
        params.bn_running_mean[layer] =
            momentum * params.bn_running_mean[layer] + (1.0 - momentum) * bn.mean;
        params.bn_running_var[layer] =
            momentum * params.bn_running_var[layer] + (1.0 - momentum) * bn.var;
    }
}

double loss_and_gradient(const Architecture &arch, const Parameters &params,
                         const Eigen::MatrixXd &input,
                         const Eigen::VectorXd &labels,
                         const LossConfig &loss, Mode mode, Gradients &grads) {
    ForwardCache cache;
    Eigen::MatrixXd preds = forward(arch, params, input, mode, &cache);
    Eigen::MatrixXd output_grad;
    double value = loss_gradient(loss, preds, labels, output_grad);
    grads = backward(arch, params, cache, output_grad);
    return value;
}

int64_t trainable_count(const Architecture &arch) {
    int64_t total = param_count(arch);
    if (arch.batch_norm)
        total += int64_t(2) * arch.hidden_width() * arch.hidden_layer_count();
    return total;
}

Eigen::VectorXd flatten_trainable(const Architecture &arch,
                                  const Parameters &params) {
    Eigen::VectorXd flat(trainable_count(arch));
    Eigen::Index at = 0;
    for (size_t layer = 0; layer < params.weights.size(); ++layer) {
        const Eigen::MatrixXd &w = params.weights[layer];
        flat.segment(at, w.size()) =
            Eigen::Map<const Eigen::VectorXd>(w.data(), w.size());
        at += w.size();
        flat.segment(at, params.biases[layer].size()) = params.biases[layer];
        at += params.biases[layer].size();
    }
    for (size_t layer = 0; layer < params.bn_gamma.size(); ++layer) {
        flat.segment(at, params.bn_gamma[layer].size()) = params.bn_gamma[layer];
        at += params.bn_gamma[layer].size();
        flat.segment(at, params.bn_beta[layer].size()) = params.bn_beta[layer];
        at += params.bn_beta[layer].size();
    }
    return flat;
}

void unflatten_trainable(const Architecture &arch, const Eigen::VectorXd &flat,
                         Parameters &params) {
    if (flat.size() != trainable_count(arch))
        throw Error(ErrorCode::SHAPE_MISMATCH, "flat parameter size mismatch");
    Eigen::Index at = 0;
    for (size_t layer = 0; layer < params.weights.size(); ++layer) {
        Eigen::MatrixXd &w = params.weights[layer];
        Eigen::Map<Eigen::VectorXd>(w.data(), w.size()) =
            flat.segment(at, w.size());
        at += w.size();
        params.biases[layer] = flat.segment(at, params.biases[layer].size());
        at += params.biases[layer].size();
    }
    for (size_t layer = 0; layer < params.bn_gamma.size(); ++layer) {
        params.bn_gamma[layer] =
            flat.segment(at, params.bn_gamma[layer].size());
        at += params.bn_gamma[layer].size();
        params.bn_beta[layer] = flat.segment(at, params.bn_beta[layer].size());
        at += params.bn_beta[layer].size();
    }
}

Eigen::VectorXd flatten_gradients(const Architecture &arch,
                                  const Gradients &grads) {
    Parameters view;
    view.weights = grads.weights;
    view.biases = grads.biases;
    view.bn_gamma = grads.bn_gamma;
    view.bn_beta = grads.bn_beta;
    return flatten_trainable(arch, view);
}

void save_checkpoint(const std::filesystem::path &path, const Checkpoint &ckpt) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw Error(ErrorCode::IO_ERROR, "cannot open " + path.string());
    KvPairs header{
        {"arch", arch_name(ckpt.arch.kind)},
        {"input_dim", std::to_string(ckpt.arch.input_dim)},
        {"units", std::to_string(ckpt.arch.units)},
        {"output_dim", std::to_string(ckpt.arch.output_dim)},
        {"loss", loss_name(ckpt.loss.kind)},
        {"epsilon", format_double(ckpt.loss.epsilon)},
        {"c", format_double(ckpt.loss.c)},
        {"class_count", std::to_string(ckpt.loss.class_count)},
        {"seed", std::to_string(ckpt.seed)},
    };
    write_kv_header(out, "HSNN1", header);
    auto write_vec = [&out](const Eigen::VectorXd &v) {
        for (Eigen::Index i = 0; i < v.size(); ++i)
            write_f64_le(out, v[i]);
    };
    for (size_t layer = 0; layer < ckpt.params.weights.size(); ++layer) {
        const Eigen::MatrixXd &w = ckpt.params.weights[layer];
        write_vec(Eigen::Map<const Eigen::VectorXd>(w.data(), w.size()));
        write_vec(ckpt.params.biases[layer]);
    }
    for (size_t layer = 0; layer < ckpt.params.bn_gamma.size(); ++layer) {
        write_vec(ckpt.params.bn_gamma[layer]);
        write_vec(ckpt.params.bn_beta[layer]);
        write_vec(ckpt.params.bn_running_mean[layer]);
        write_vec(ckpt.params.bn_running_var[layer]);
    }
    if (!out)
        throw Error(ErrorCode::IO_ERROR, "write failed for " + path.string());
}

Checkpoint load_checkpoint(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error(ErrorCode::IO_ERROR, "cannot open " + path.string());
    KvPairs header = read_kv_header(in, "HSNN1");

    Checkpoint ckpt;
    ckpt.arch.kind = parse_arch(kv_get(header, "arch"));
    ckpt.arch.input_dim = std::stoi(kv_get(header, "input_dim"));
    ckpt.arch.units = std::stoi(kv_get(header, "units"));
    ckpt.arch.output_dim = std::stoi(kv_get(header, "output_dim"));
    ckpt.arch.batch_norm = ckpt.arch.kind == ArchKind::FIXED_WIDTH;
    ckpt.loss.kind = parse_loss(kv_get(header, "loss"));
    ckpt.loss.epsilon = std::strtod(kv_get(header, "epsilon").c_str(), nullptr);
    ckpt.loss.c = std::strtod(kv_get(header, "c").c_str(), nullptr);
    ckpt.loss.class_count = std::stoi(kv_get(header, "class_count"));
    ckpt.seed = std::stoull(kv_get(header, "seed"));

    auto read_vec = [&in](Eigen::VectorXd &v) {
        for (Eigen::Index i = 0; i < v.size(); ++i)
            v[i] = read_f64_le(in);
    };
    for (auto [rows, cols] : ckpt.arch.linear_shapes()) {
        Eigen::MatrixXd w(rows, cols);
        Eigen::VectorXd wflat(w.size());
        read_vec(wflat);
        Eigen::Map<Eigen::VectorXd>(w.data(), w.size()) = wflat;
        ckpt.params.weights.push_back(std::move(w));
        Eigen::VectorXd b(rows);
        read_vec(b);
        ckpt.params.biases.push_back(std::move(b));
    }
    if (ckpt.arch.batch_norm) {
        int width = ckpt.arch.hidden_width();
        for (int layer = 0; layer < ckpt.arch.hidden_layer_count(); ++layer) {
            Eigen::VectorXd gamma(width), beta(width), mean(width), var(width);
            read_vec(gamma);
            read_vec(beta);
            read_vec(mean);
            read_vec(var);
            ckpt.params.bn_gamma.push_back(std::move(gamma));
            ckpt.params.bn_beta.push_back(std::move(beta));
            ckpt.params.bn_running_mean.push_back(std::move(mean));
            ckpt.params.bn_running_var.push_back(std::move(var));
        }
    }
    if (in.peek() != EOF)
        throw Error(ErrorCode::FORMAT_ERROR, "trailing bytes in checkpoint");
    return ckpt;
}

}
