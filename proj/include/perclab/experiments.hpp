#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "perclab/expansion.hpp"
#include "perclab/locallimit.hpp"
#include "perclab/percolation.hpp"
#include "perclab/rational.hpp"

namespace perclab {

// --- Giant-component threshold locality on random regular graphs ----------

struct LocalityConfig {
  std::size_t d = 3;
  std::vector<std::size_t> n_list{1000, 10000};
  std::vector<double> p_grid{0.4, 0.6};
  double alpha = 0.05;
  std::size_t trials = 100;
  std::uint64_t seed = 1;
  double margin = 0.1;
  double fail_low = 0.1;
  double pass_high = 0.9;
};

enum class Verdict { pass, fail, vacuous };
std::string_view verdict_name(Verdict v);

struct LocalityCheck {
  double p = 0.0;
  double prob = 0.0;
  /// true: expected giant (p >= p_c + margin); false: expected none.
  bool expect_giant = false;
  bool ok = false;
};

struct LocalityRun {
  std::size_t n = 0;
  std::uint64_t graph_seed = 0;
  std::vector<ScanRow> rows;
  std::vector<LocalityCheck> checks;
  /// First grid p with prob > fail_low, first with prob >= pass_high.
  std::optional<double> window_low;
  std::optional<double> window_high;
  std::optional<double> window_width() const;
};

struct LocalityReport {
  LocalityConfig config;
  double p_c = 0.0;
  std::vector<LocalityRun> runs;
  bool windows_shrink = true;
  Verdict verdict = Verdict::vacuous;

  /// "n,p,alpha,prob,ci_low,ci_high,trials,seed" evidence table.
  std::string csv() const;
};

/// For each n: a random d-regular graph (seed splitmix_at(seed, index)) and a
/// threshold scan with percolation seed `seed`. PASS iff every grid point at
/// least `margin` below p_c = 1/(d-1) has prob <= fail_low, every point at
/// least `margin` above has prob >= pass_high, and the transition window
/// width does not grow with n. VACUOUS when no grid point is outside the
/// margin band. ValidationError for d < 3 (cycles have h -> 0).
LocalityReport verify_locality(const LocalityConfig& cfg);

// --- Constancy of p_c: expander vs non-expander --------------------------

struct ConstancyConfig {
  std::size_t positive_n = 100000;
  std::size_t negative_n = 10000;
  std::uint64_t seed = 1;
  std::uint32_t radius = 2;
  /// Claimed expansion constant and class mass fed to disjoint_class_flow.
  Rational c{1, 10};
  Rational p0{1, 2};
};

struct ClassMass {
  Certificate certificate;
  double mass = 0.0;
  /// Tree-ball degree when the class is a regular-tree ball (2 = path), else 0.
  std::size_t tree_degree = 0;
  /// 1/(d-1) for tree classes.
  std::optional<double> oracle_p_c;
};

struct ConstancyReport {
  ConstancyConfig config;

  // Random 3-regular graph.
  std::size_t positive_classes = 0;
  ClassMass positive_top;

  // bridged_pair.
  std::vector<ClassMass> negative_top;  // two heaviest classes
  ExpansionReport bridge_cut;           // cycle half as witness
  bool bridge_cut_is_two_over_n = false;
  ExpansionReport upper_search;
  std::size_t halves_flow = 0;          // edge-disjoint paths between the halves
  ClassFlowReport class_flow;

  std::string narrative() const;
};

ConstancyReport verify_constancy(const ConstancyConfig& cfg);

}  // namespace perclab
