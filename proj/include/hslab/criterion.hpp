#ifndef HSLAB_CRITERION_HPP
#define HSLAB_CRITERION_HPP

#include "hslab/losses.hpp"

namespace hslab {

enum class CriterionKind { EXACT_L0, THRESHOLD };

/*
  The pass rule declaring that a network has fit a training set:
  either the 0/1 loss reaches exactly zero, or a metric passes a
  threshold (loss at most T; accuracy at least T for cross-entropy).
*/
struct FitCriterion {
    CriterionKind kind = CriterionKind::EXACT_L0;
    double threshold = 0.0;
    LossConfig metric;  // TRUE_L for EXACT_L0

    bool higher_is_better() const {
        return metric.kind == LossKind::CROSS_ENTROPY;
    }

    bool satisfied(double value) const {
        if (kind == CriterionKind::EXACT_L0)
            return value == 0.0;
        return higher_is_better() ? value >= threshold : value <= threshold;
    }

    bool improves(double candidate, double incumbent) const {
        return higher_is_better() ? candidate > incumbent
                                  : candidate < incumbent;
    }

    double worst_value() const {
        return higher_is_better() ? -std::numeric_limits<double>::infinity()
                                  : std::numeric_limits<double>::infinity();
    }

    // Epoch budget tied to the criterion: exact fits get the long cap.
    int default_epoch_cap() const {
        return kind == CriterionKind::EXACT_L0 ? 3000 : 300;
    }

    static FitCriterion exact_l0(double epsilon) {
        FitCriterion criterion;
        criterion.kind = CriterionKind::EXACT_L0;
        criterion.metric = LossConfig{LossKind::TRUE_L, epsilon, 0.0, 0};
        return criterion;
    }

    static FitCriterion with_threshold(LossConfig metric, double threshold) {
        FitCriterion criterion;
        criterion.kind = CriterionKind::THRESHOLD;
        criterion.threshold = threshold;
        criterion.metric = metric;
        return criterion;
    }
};

}

#endif
