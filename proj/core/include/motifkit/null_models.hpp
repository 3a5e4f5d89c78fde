#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "motifkit/census.hpp"
#include "motifkit/graph.hpp"
#include "motifkit/rng.hpp"

namespace motifkit {

enum class EnsembleKind { gnp, rewire, rewire_anneal };
std::string to_string(EnsembleKind kind);

struct AnnealConfig {
  double initial_temperature = 100.0;  // temperature at step 1
  double stop_energy = 1e-5;           // with integer counts this forces exact match
  std::int64_t max_steps = 1'000'000;  // temperature steps before giving up
  bool record_trace = false;           // keep per-attempt energy trace
};

struct EnsembleSpec {
  EnsembleKind kind = EnsembleKind::gnp;
  int replications = 1000;        // R
  int bootstrap = 100;            // B
  std::uint64_t master_seed = 0;
  std::int64_t rewire_steps = -1;  // successful switches; -1 -> 100 * m
  // Edge probability of the gnp ensemble; the observed density when unset.
  // Self-consistency studies pass the generating probability here.
  std::optional<double> gnp_p;
  AnnealConfig anneal;

  void validate() const;
  std::int64_t effective_rewire_steps(Count m) const {
    return rewire_steps >= 0 ? rewire_steps : 100 * m;
  }
};

/// Expected counts of the eight classes in G(n, p); non-nested mode applies
/// the (1-p)^(missing edges) factor per class.
struct GnpExpectedCounts {
  double three_star = 0, triangle = 0, four_star = 0, four_path = 0;
  double tadpole = 0, four_circle = 0, diamond = 0, four_complete = 0;
};
GnpExpectedCounts expected_counts_gnp(int n, double p, CountMode mode);

Graph sample_gnp(int n, double p, SplitMix64& rng);
/// Rejection-sample until connected; deterministic in the seed.
/// Throws after 10,000 consecutive disconnected draws.
Graph sample_gnp_connected(int n, double p, std::uint64_t seed);

struct RewireResult {
  Graph graph;
  std::int64_t applied = 0;  // successful switches
  bool exhausted = false;    // no valid switch existed at some point
};

/// Degree-preserving edge-switch chain: pick two edges (x1,y1), (x2,y2) in
/// canonical lo<hi orientation; the switch to (x1,y2), (x2,y1) applies only
/// when all four nodes are distinct and both replacement edges are absent.
/// Runs until `successful_switches` have been applied, or returns early with
/// `exhausted` after an exhaustive scan finds no valid switch at all.
RewireResult rewire_chain(const Graph& g, std::int64_t successful_switches, std::uint64_t seed);

struct AnnealTargets {
  Count nonnested_three_star = 0;
  Count triangles = 0;
};

/// |r - q| / (r + q) summed over the two tracked counts (0 when both zero).
double anneal_energy(const AnnealTargets& real, const AnnealTargets& randomized);

/// Temperature at step t >= 1 under psi(1) = initial, psi(t+1) = psi(t)/ln(t+1).
double anneal_temperature(std::int64_t t, double initial = 100.0);

struct AnnealStep {
  double energy_before = 0, energy_after = 0;
  bool improving = false;
  bool accepted = false;
};

struct AnnealResult {
  Graph graph;
  bool converged = false;
  double final_energy = 0;
  std::int64_t steps = 0;             // temperature steps consumed
  std::int64_t switches_applied = 0;  // accepted switches
  std::vector<AnnealStep> trace;      // filled when config.record_trace
};

/// Single-switch simulated annealing on an already degree-matched graph,
/// driving its (non-nested 3-star, triangle) counts to the targets. An
/// energy-reducing switch is always accepted, any other with probability
/// exp(-|dE|/psi(t)); one attempted switch per temperature step.
AnnealResult anneal_match(const Graph& g_rand, const AnnealTargets& targets,
                          const AnnealConfig& config, std::uint64_t seed);

struct ClassNullStats {
  std::string class_key;  // "M_3_3", "Mt_3_3", ...
  Count observed = 0;
  double mu = 0, sigma = 0;
  bool analytic_mu = false;
  std::vector<Count> samples;  // replication order; converged-only for anneal
  int discarded = 0;           // non-converged annealing replications
  bool rewire_exhausted = false;
};

/// R seeded replications of the chosen ensemble. For the G(n,p) kind the edge
/// probability is the observed density and the mean is analytic; the standard
/// deviation always comes from the sample.
std::vector<ClassNullStats> null_ensemble_stats(const Graph& g, const EnsembleSpec& spec);

struct ZP {
  double z = 0;
  double p_empirical = 0;  // add-one smoothed two-sided tail over the sample
  double p_bootstrap = 0;  // add-one smoothed fraction of resample |z*| >= |z|
  double z_boot_low = 0, z_boot_high = 0;  // 2.5% / 97.5% resample band
};

/// Throws InputError("degenerate null") when sigma is zero.
ZP z_and_pvalue(Count observed, double mu, double sigma, std::span<const Count> samples,
                int bootstrap, std::uint64_t seed);

enum class Verdict { motif, anti_motif, not_significant, degenerate };
std::string to_string(Verdict v);

struct ZScoreEntry {
  std::string class_key;
  Count observed = 0;
  double mu = 0, sigma = 0;
  std::optional<ZP> zp;  // empty when the null is degenerate for this class
  Verdict verdict = Verdict::not_significant;
};

struct ZScoreReport {
  std::vector<ZScoreEntry> entries;
  std::string ensemble;  // descriptor, e.g. "gnp(R=1000,p=0.2055)"
  std::uint64_t seed = 0;
  int discarded = 0;
  bool rewire_exhausted = false;
};

/// Motif inference per ensemble kind: gnp scans the nested/non-nested 3-star
/// and the triangle; rewire the non-nested 3-star and triangle; the annealing
/// ensemble the six non-nested 4-node classes. |z| > 2 marks a motif
/// (positive) or anti-motif (negative).
ZScoreReport motif_scan(const Graph& g, const EnsembleSpec& spec);

}  // namespace motifkit
