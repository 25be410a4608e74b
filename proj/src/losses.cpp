#include "hslab/losses.hpp"

#include <cmath>

namespace hslab {

const char *loss_name(LossKind kind) {
    switch (kind) {
    case LossKind::TRUE_L: return "l";
    case LossKind::L_EPS: return "l_eps";
    case LossKind::MSE: return "mse";
    case LossKind::CROSS_ENTROPY: return "cross-entropy";
    case LossKind::SCALED: return "scaled";
    }
    return "unknown";
}

LossKind parse_loss(std::string_view name) {
    if (name == "l" || name == "true")
        return LossKind::TRUE_L;
    if (name == "l_eps" || name == "l-eps" || name == "leps")
        return LossKind::L_EPS;
    if (name == "mse")
        return LossKind::MSE;
    if (name == "cross-entropy" || name == "ce")
        return LossKind::CROSS_ENTROPY;
    if (name == "scaled")
        return LossKind::SCALED;
    throw Error(ErrorCode::USAGE_ERROR,
                "unknown loss '" + std::string(name) + "'");
}

double stable_sigmoid(double z) {
    if (z >= 0.0)
        return 1.0 / (1.0 + std::exp(-z));
    double e = std::exp(z);
    return e / (1.0 + e);
}

double loss_eps_term(double x, double eps, double c) {
    double scaled = 2.0 * x / eps;
    return x * x * stable_sigmoid(c * (scaled * scaled - 1.0));
}

namespace {

void require_batch(Eigen::Index preds, Eigen::Index labels) {
    if (preds == 0 || labels == 0)
        throw Error(ErrorCode::EMPTY_INPUT, "loss over an empty batch");
    if (preds != labels)
        throw Error(ErrorCode::SHAPE_MISMATCH,
                    "predictions and labels differ in length");
}

}

double loss_true(const Eigen::VectorXd &preds, const Eigen::VectorXd &labels,
                 double eps) {
    require_batch(preds.size(), labels.size());
    Eigen::Index outside = 0;
    for (Eigen::Index i = 0; i < preds.size(); ++i)
        if (std::abs(preds[i] - labels[i]) >= eps / 2.0)
            ++outside;
    return double(outside) / double(preds.size());
}

double loss_eps(const Eigen::VectorXd &preds, const Eigen::VectorXd &labels,
                double eps, double c) {
    require_batch(preds.size(), labels.size());
    double total = 0.0;
    for (Eigen::Index i = 0; i < preds.size(); ++i)
        total += loss_eps_term(preds[i] - labels[i], eps, c);
    return total / double(preds.size());
}

double loss_mse(const Eigen::VectorXd &preds, const Eigen::VectorXd &labels) {
    require_batch(preds.size(), labels.size());
    return (preds - labels).squaredNorm() / double(preds.size());
}

double loss_scaled(const Eigen::VectorXd &preds, const Eigen::VectorXd &labels) {
    require_batch(preds.size(), labels.size());
    double total = 0.0;
    for (Eigen::Index i = 0; i < preds.size(); ++i) {
        if (labels[i] == 0.0)
            throw Error(ErrorCode::ZERO_LABEL,
                        "scaled loss evaluated on a zero label");
        double term = 1.0 - preds[i] / labels[i];
        total += term * term;
    }
    return total / double(preds.size());
}

int label_class_index(double label, double eps, int class_count) {
    double scaled = label / eps;
    long index = std::lround(scaled);
    if (std::abs(scaled - double(index)) > 1e-6 || index < 0 ||
        index >= class_count)
        throw Error(ErrorCode::LABEL_OFF_GRID,
                    "label " + std::to_string(label) +
                        " is not on the class grid");
    return int(index);
}

namespace {

// Column-wise softmax computed against the column max.
Eigen::MatrixXd softmax_columns(const Eigen::MatrixXd &logits) {
    Eigen::MatrixXd probs = logits;
    for (Eigen::Index col = 0; col < logits.cols(); ++col) {
        double peak = logits.col(col).maxCoeff();
        probs.col(col) = (logits.col(col).array() - peak).exp();
        probs.col(col) /= probs.col(col).sum();
    }
    return probs;
}

}

CrossEntropyResult loss_cross_entropy(const Eigen::MatrixXd &logits,
                                      const Eigen::VectorXd &labels,
                                      double eps, int class_count) {
    require_batch(logits.cols(), labels.size());
    if (logits.rows() != class_count)
        throw Error(ErrorCode::SHAPE_MISMATCH,
                    "logit rows do not match the class grid");
    Eigen::MatrixXd probs = softmax_columns(logits);
    CrossEntropyResult result;
    Eigen::Index correct = 0;
    for (Eigen::Index i = 0; i < labels.size(); ++i) {
        int truth = label_class_index(labels[i], eps, class_count);
        result.loss -= std::log(std::max(probs(truth, i), 1e-300));
        Eigen::Index argmax = 0;
        probs.col(i).maxCoeff(&argmax);
        if (int(argmax) == truth)
            ++correct;
    }
    result.loss /= double(labels.size());
    result.accuracy = double(correct) / double(labels.size());
    return result;
}

double loss_value(const LossConfig &config, const Eigen::MatrixXd &preds,
                  const Eigen::VectorXd &labels) {
    switch (config.kind) {
    case LossKind::TRUE_L:
        return loss_true(preds.row(0).transpose(), labels, config.epsilon);
    case LossKind::L_EPS:
        return loss_eps(preds.row(0).transpose(), labels, config.epsilon,
                        config.c);
    case LossKind::MSE:
        return loss_mse(preds.row(0).transpose(), labels);
    case LossKind::SCALED:
        return loss_scaled(preds.row(0).transpose(), labels);
    case LossKind::CROSS_ENTROPY:
        return loss_cross_entropy(preds, labels, config.epsilon,
                                  config.class_count)
            .loss;
    }
    throw Error(ErrorCode::USAGE_ERROR, "unhandled loss kind");
}

double criterion_metric(const LossConfig &config, const Eigen::MatrixXd &preds,
                        const Eigen::VectorXd &labels) {
    if (config.kind == LossKind::CROSS_ENTROPY)
        return loss_cross_entropy(preds, labels, config.epsilon,
                                  config.class_count)
            .accuracy;
    return loss_value(config, preds, labels);
}

double loss_gradient(const LossConfig &config, const Eigen::MatrixXd &preds,
                     const Eigen::VectorXd &labels, Eigen::MatrixXd &grad) {
    require_batch(preds.cols(), labels.size());
    double batch = double(preds.cols());
    grad.resize(preds.rows(), preds.cols());

    switch (config.kind) {
    case LossKind::TRUE_L:
        throw Error(ErrorCode::NONDIFFERENTIABLE_LOSS,
                    "the 0/1 loss has no usable gradient");

    case LossKind::L_EPS: {
        double eps = config.epsilon;
        double c = config.c;
        double total = 0.0;
        for (Eigen::Index i = 0; i < preds.cols(); ++i) {
            double x = preds(0, i) - labels[i];
            double scaled = 2.0 * x / eps;
            double s = stable_sigmoid(c * (scaled * scaled - 1.0));
            total += x * x * s;
            // d/dx [x^2 s(z(x))] with z = c((2x/eps)^2 - 1)
            double ds = s * (1.0 - s) * c * 8.0 * x / (eps * eps);
            grad(0, i) = (2.0 * x * s + x * x * ds) / batch;
        }
        return total / batch;
    }

    case LossKind::MSE: {
        double total = 0.0;
        for (Eigen::Index i = 0; i < preds.cols(); ++i) {
            double x = preds(0, i) - labels[i];
            total += x * x;
            grad(0, i) = 2.0 * x / batch;
        }
        return total / batch;
    }

    case LossKind::SCALED: {
        double total = 0.0;
        for (Eigen::Index i = 0; i < preds.cols(); ++i) {
            if (labels[i] == 0.0)
                throw Error(ErrorCode::ZERO_LABEL,
                            "scaled loss evaluated on a zero label");
            double term = 1.0 - preds(0, i) / labels[i];
            total += term * term;
            grad(0, i) = -2.0 * term / (labels[i] * batch);
        }
        return total / batch;
    }

    case LossKind::CROSS_ENTROPY: {
        if (preds.rows() != config.class_count)
            throw Error(ErrorCode::SHAPE_MISMATCH,
                        "logit rows do not match the class grid");
        double total = 0.0;
        for (Eigen::Index i = 0; i < preds.cols(); ++i) {
            int truth = label_class_index(labels[i], config.epsilon,
                                          config.class_count);
            double peak = preds.col(i).maxCoeff();
            Eigen::VectorXd ex = (preds.col(i).array() - peak).exp();
            double denom = ex.sum();
            total -= std::log(std::max(ex[truth] / denom, 1e-300));
            grad.col(i) = ex / denom / batch;
            grad(truth, i) -= 1.0 / batch;
        }
        return total / batch;
    }
    }
    throw Error(ErrorCode::USAGE_ERROR, "unhandled loss kind");
}

}
