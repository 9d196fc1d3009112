#include "stem/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace stem::metrics {

namespace {

void check_lengths(const std::vector<double>& scores,
                   const std::vector<int>& labels) {
  if (scores.size() != labels.size())
    throw LengthMismatch("scores and labels differ in length");
  if (scores.empty()) throw LengthMismatch("empty score vector");
}

}  // namespace

ThresholdMetrics threshold_metrics(const std::vector<double>& scores,
                                   const std::vector<int>& labels,
                                   double threshold) {
  check_lengths(scores, labels);
  ThresholdMetrics m;
  for (std::size_t i = 0; i < scores.size(); ++i) {
    const bool pred = scores[i] >= threshold;
    const bool truth = labels[i] != 0;
    if (pred && truth) ++m.counts.tp;
    else if (pred && !truth) ++m.counts.fp;
    else if (!pred && truth) ++m.counts.fn;
    else ++m.counts.tn;
  }
  const auto& c = m.counts;
  m.accuracy = static_cast<double>(c.tp + c.tn) / static_cast<double>(c.total());
  m.precision = (c.tp + c.fp) > 0
                    ? static_cast<double>(c.tp) / static_cast<double>(c.tp + c.fp)
                    : 0.0;
  m.recall = (c.tp + c.fn) > 0
                 ? static_cast<double>(c.tp) / static_cast<double>(c.tp + c.fn)
                 : 0.0;
  m.f1 = (m.precision + m.recall) > 0
             ? 2.0 * m.precision * m.recall / (m.precision + m.recall)
             : 0.0;
  return m;
}

double auc_roc(const std::vector<double>& scores,
               const std::vector<int>& labels) {
  check_lengths(scores, labels);
  const long n_pos = std::count_if(labels.begin(), labels.end(),
                                   [](int y) { return y != 0; });
  const long n_neg = static_cast<long>(labels.size()) - n_pos;
  if (n_pos == 0 || n_neg == 0)
    throw SingleClassError("auc_roc needs both classes");

  std::vector<std::size_t> order(scores.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return scores[a] < scores[b];
  });

  double rank_sum_pos = 0.0;
  std::size_t i = 0;
  while (i < order.size()) {
    std::size_t j = i;
    while (j < order.size() && scores[order[j]] == scores[order[i]]) ++j;
    // ranks i+1 .. j averaged across the tie group
    const double avg_rank = (static_cast<double>(i + 1) + static_cast<double>(j)) / 2.0;
    for (std::size_t k = i; k < j; ++k)
      if (labels[order[k]] != 0) rank_sum_pos += avg_rank;
    i = j;
  }
  const double np = static_cast<double>(n_pos);
  const double nn = static_cast<double>(n_neg);
  return (rank_sum_pos - np * (np + 1.0) / 2.0) / (np * nn);
}

double auc_pr(const std::vector<double>& scores,
              const std::vector<int>& labels) {
  check_lengths(scores, labels);
  const long n_pos = std::count_if(labels.begin(), labels.end(),
                                   [](int y) { return y != 0; });
  if (n_pos == 0) throw NoPositives("auc_pr needs at least one positive");

  std::vector<std::size_t> order(scores.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return scores[a] > scores[b];
  });

  double ap = 0.0;
  double prev_recall = 0.0;
  long tp = 0, fp = 0;
  std::size_t i = 0;
  while (i < order.size()) {
    std::size_t j = i;
    while (j < order.size() && scores[order[j]] == scores[order[i]]) ++j;
    for (std::size_t k = i; k < j; ++k) {
      if (labels[order[k]] != 0) ++tp;
      else ++fp;
    }
    const double precision = static_cast<double>(tp) / static_cast<double>(tp + fp);
    const double recall = static_cast<double>(tp) / static_cast<double>(n_pos);
    ap += (recall - prev_recall) * precision;
    prev_recall = recall;
    i = j;
  }
  return ap;
}

SeedMetrics summarize(const std::vector<double>& scores,
                      const std::vector<int>& labels, std::uint64_t seed,
                      double threshold) {
  ThresholdMetrics t = threshold_metrics(scores, labels, threshold);
  SeedMetrics m;
  m.seed = seed;
  m.accuracy = t.accuracy;
  m.precision = t.precision;
  m.recall = t.recall;
  m.f1 = t.f1;
  m.auc = auc_roc(scores, labels);
  m.aupr = auc_pr(scores, labels);
  return m;
}

EvalReport repeated_eval(
    const std::function<SeedMetrics(std::uint64_t)>& run_one,
    const std::vector<std::uint64_t>& seeds) {
  if (seeds.empty()) throw Error("repeated_eval needs at least one seed");
  EvalReport report;
  for (std::uint64_t seed : seeds) {
    SeedMetrics m = run_one(seed);
    m.seed = seed;
    report.per_seed.push_back(m);
  }
  const double n = static_cast<double>(report.per_seed.size());
  auto fields = {&SeedMetrics::accuracy, &SeedMetrics::precision,
                 &SeedMetrics::recall, &SeedMetrics::f1, &SeedMetrics::auc,
                 &SeedMetrics::aupr};
  for (auto field : fields) {
    double mean = 0;
    for (const auto& m : report.per_seed) mean += m.*field;
    mean /= n;
    double var = 0;
    for (const auto& m : report.per_seed) {
      const double d = m.*field - mean;
      var += d * d;
    }
    report.mean.*field = mean;
    report.stddev.*field = n > 1 ? std::sqrt(var / (n - 1.0)) : 0.0;
  }
  return report;
}

namespace {

std::string fmt(double v) {
  std::ostringstream out;
  out.precision(4);
  out << std::fixed << v;
  return out.str();
}

}  // namespace

std::string format_report_table(const EvalReport& report) {
  std::ostringstream out;
  out << "seed       accuracy  precision  recall    f1        auc       aupr\n";
  for (const auto& m : report.per_seed) {
    out << m.seed;
    for (std::size_t pad = std::to_string(m.seed).size(); pad < 11; ++pad)
      out << ' ';
    out << fmt(m.accuracy) << "    " << fmt(m.precision) << "     "
        << fmt(m.recall) << "    " << fmt(m.f1) << "    " << fmt(m.auc)
        << "    " << fmt(m.aupr) << "\n";
  }
  out << "mean       " << fmt(report.mean.accuracy) << "    "
      << fmt(report.mean.precision) << "     " << fmt(report.mean.recall)
      << "    " << fmt(report.mean.f1) << "    " << fmt(report.mean.auc)
      << "    " << fmt(report.mean.aupr) << "\n";
  out << "std        " << fmt(report.stddev.accuracy) << "    "
      << fmt(report.stddev.precision) << "     " << fmt(report.stddev.recall)
      << "    " << fmt(report.stddev.f1) << "    " << fmt(report.stddev.auc)
      << "    " << fmt(report.stddev.aupr) << "\n";
  return out.str();
}

std::string report_to_csv(const EvalReport& report) {
  std::ostringstream out;
  out.precision(17);
  out << "seed,accuracy,precision,recall,f1,auc,aupr\n";
  auto row = [&out](const std::string& tag, const SeedMetrics& m) {
    out << tag << ',' << m.accuracy << ',' << m.precision << ',' << m.recall
        << ',' << m.f1 << ',' << m.auc << ',' << m.aupr << '\n';
  };
  for (const auto& m : report.per_seed) row(std::to_string(m.seed), m);
  row("mean", report.mean);
  row("std", report.stddev);
  return out.str();
}

}  // namespace stem::metrics
