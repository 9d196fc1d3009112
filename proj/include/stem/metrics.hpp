#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "stem/error.hpp"

namespace stem::metrics {

class NoPositives : public Error {
 public:
  using Error::Error;
};

struct ConfusionCounts {
  long tp = 0;
  long tn = 0;
  long fp = 0;
  long fn = 0;
  long total() const { return tp + tn + fp + fn; }
};

struct ThresholdMetrics {
  ConfusionCounts counts;
  double accuracy = 0;
  double precision = 0;  // 0 by convention when no predicted positives
  double recall = 0;     // 0 by convention when no actual positives
  double f1 = 0;
};

// Predicted positive iff score >= threshold.
ThresholdMetrics threshold_metrics(const std::vector<double>& scores,
                                   const std::vector<int>& labels,
                                   double threshold = 0.5);

// Mann-Whitney statistic: P(score+ > score-) + 0.5 P(tie), via one sorted
// sweep with average ranks for ties.
double auc_roc(const std::vector<double>& scores,
               const std::vector<int>& labels);

// Area under the precision-recall curve with step interpolation
// (precision held between recall points), ties grouped.
double auc_pr(const std::vector<double>& scores,
              const std::vector<int>& labels);

struct SeedMetrics {
  std::uint64_t seed = 0;
  double accuracy = 0, precision = 0, recall = 0, f1 = 0, auc = 0, aupr = 0;
};

struct EvalReport {
  std::vector<SeedMetrics> per_seed;
  SeedMetrics mean;    // seed field unused
  SeedMetrics stddev;  // sample standard deviation; 0 for a single seed
};

// Runs the supplied per-seed evaluation (an end-to-end pipeline run in
// practice) for every seed and aggregates mean and sample std.
EvalReport repeated_eval(
    const std::function<SeedMetrics(std::uint64_t)>& run_one,
    const std::vector<std::uint64_t>& seeds);

SeedMetrics summarize(const std::vector<double>& scores,
                      const std::vector<int>& labels, std::uint64_t seed,
                      double threshold = 0.5);

std::string format_report_table(const EvalReport& report);
std::string report_to_csv(const EvalReport& report);

}  // namespace stem::metrics
