#ifndef HSLAB_LOSSES_HPP
#define HSLAB_LOSSES_HPP

#include <Eigen/Core>
#include <string>
#include <string_view>

#include "hslab/error.hpp"

namespace hslab {

enum class LossKind { TRUE_L, L_EPS, MSE, CROSS_ENTROPY, SCALED };

const char *loss_name(LossKind kind);
LossKind parse_loss(std::string_view name);

/*
  Loss selection plus its hyperparameters. epsilon must equal the
  domain's minimum nonzero solution-cost gap; c controls the smoothness
  of the eps-bounded loss around the |x| = eps/2 boundary. For
  cross-entropy the label grid is the multiples of epsilon
  {0, eps, ..., (class_count-1)*eps}.
*/
struct LossConfig {
    LossKind kind = LossKind::L_EPS;
    double epsilon = 1.0;
    double c = 10.0;
    int class_count = 0;

    // Width of the network output this loss consumes.
    int output_dim() const {
        return kind == LossKind::CROSS_ENTROPY ? class_count : 1;
    }
};

// Overflow-free logistic function.
double stable_sigmoid(double z);

// Per-sample eps-bounded loss term x^2 * sigmoid(c((2x/eps)^2 - 1)).
double loss_eps_term(double x, double eps, double c);

/*
  Batch losses. Regression predictions and labels are parallel vectors;
  cross-entropy takes a class_count x batch logit matrix. All throw
  EMPTY_INPUT on empty batches.
*/

// Fraction of samples with |pred - label| >= eps/2 (the 0/1 loss).
double loss_true(const Eigen::VectorXd &preds, const Eigen::VectorXd &labels,
                 double eps);

double loss_eps(const Eigen::VectorXd &preds, const Eigen::VectorXd &labels,
                double eps, double c);

double loss_mse(const Eigen::VectorXd &preds, const Eigen::VectorXd &labels);

// Mean of (1 - pred/label)^2; labels must be nonzero.
double loss_scaled(const Eigen::VectorXd &preds, const Eigen::VectorXd &labels);

struct CrossEntropyResult {
    double loss = 0.0;
    double accuracy = 0.0;  // fraction of argmax-correct predictions
};

CrossEntropyResult loss_cross_entropy(const Eigen::MatrixXd &logits,
                                      const Eigen::VectorXd &labels,
                                      double eps, int class_count);

// Label value -> class index on the epsilon grid; LABEL_OFF_GRID if
// the label is not a grid multiple or falls outside the grid.
int label_class_index(double label, double eps, int class_count);

/*
  Loss value and gradient with respect to the network output, for the
  differentiable members of the family. `preds` is output_dim x batch;
  grad gets the same shape. TRUE_L is rejected: it has no usable
  gradient anywhere.
*/
double loss_gradient(const LossConfig &config, const Eigen::MatrixXd &preds,
                     const Eigen::VectorXd &labels, Eigen::MatrixXd &grad);

// Loss value only, same conventions as loss_gradient.
double loss_value(const LossConfig &config, const Eigen::MatrixXd &preds,
                  const Eigen::VectorXd &labels);

/*
  The scalar a fitting criterion compares against a threshold: the loss
  itself, except for cross-entropy where it is the accuracy.
*/
double criterion_metric(const LossConfig &config, const Eigen::MatrixXd &preds,
                        const Eigen::VectorXd &labels);

}

#endif
