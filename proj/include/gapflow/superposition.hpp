#ifndef GAPFLOW_SUPERPOSITION_HPP_
#define GAPFLOW_SUPERPOSITION_HPP_

#include <functional>
#include <vector>

#include "gapflow/distributions.hpp"
#include "gapflow/residual.hpp"

namespace gapflow {

struct CdfPdf {
    double cdf;
    double pdf;
};

// Superposition of L independent renewal components.  Gaps are the
// inter-event times of the merged stream; their cdf/pdf are assembled
// from the component headway laws and their equilibrium residuals.
// Immutable after construction; evaluation is pure.
class SuperposedGapModel {
  public:
    explicit SuperposedGapModel(std::vector<HeadwayModel> components);

    std::size_t size() const { return components_.size(); }
    const std::vector<HeadwayModel>& components() const { return components_; }
    const HeadwayModel& component(std::size_t j) const {
        return components_.at(j);
    }

    // Total flow of the merged stream, sum_j 1/mu_j (events per second).
    double total_flow() const { return total_flow_; }
    // Mean gap, 1 / total_flow.
    double mean_gap() const { return 1.0 / total_flow_; }

    // Remaining time on the combined process at a stationary instant:
    // cdf = 1 - prod_j (1 - F_Yj),
    // pdf = sum_j (1/mu_j) S_Hj prod_{k != j} (1 - F_Yk).
    CdfPdf combined_residual(double y) const;

    // F_G(g) = 1 - sum_j S_Hj prod_{k != j} S_Yk * w_j,
    // with flow weights w_j = (1/mu_j) / sum_s (1/mu_s).
    double gap_cdf(double g) const;

    // f_G(g) = sum_j w_j [ f_Hj prod_{k != j} S_Yk
    //                      + S_Hj sum_{k != j} f_Yk prod_{m != j,k} S_Ym ].
    // Returns 0 (never NaN) where every survival factor has underflowed.
    double gap_pdf(double g) const;

    // Grid evaluation; component cdfs are computed once per point and
    // shared between the cdf and pdf assembly.
    std::vector<CdfPdf> gap_grid(const std::vector<double>& grid) const;

  private:
    std::vector<HeadwayModel> components_;
    std::vector<ResidualView> residuals_;
    std::vector<double> weights_;  // flow weights, sum to 1
    double total_flow_;
};

// Closed-form gap cdf for all-exponential components:
// F_G(g) = 1 - exp(-(sum_j lambda_j) g).
std::function<double(double)> exponential_gap_cdf(
    const std::vector<double>& rates);

}  // namespace gapflow

#endif  // GAPFLOW_SUPERPOSITION_HPP_
