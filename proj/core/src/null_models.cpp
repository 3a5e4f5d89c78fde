#include "motifkit/null_models.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <optional>

#include "motifkit/parallel.hpp"

namespace motifkit {

std::string to_string(EnsembleKind kind) {
  switch (kind) {
    case EnsembleKind::gnp: return "gnp";
    case EnsembleKind::rewire: return "rewire";
    case EnsembleKind::rewire_anneal: return "rewire_anneal";
  }
  return "?";
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::motif: return "motif";
    case Verdict::anti_motif: return "anti-motif";
    case Verdict::not_significant: return "not-significant";
    case Verdict::degenerate: return "degenerate";
  }
  return "?";
}

void EnsembleSpec::validate() const {
  if (replications < 2) throw InputError("ensemble needs at least 2 replications");
  if (bootstrap < 1) throw InputError("bootstrap needs at least 1 replication");
  if (anneal.initial_temperature <= 0) throw InputError("initial temperature must be positive");
  if (anneal.stop_energy <= 0) throw InputError("stop energy must be positive");
}

GnpExpectedCounts expected_counts_gnp(int n, double p, CountMode mode) {
  if (n < 3) throw InputError("expected counts are defined for n >= 3");
  if (p < 0 || p > 1) throw InputError("edge probability outside [0,1]");
  const double c3 = static_cast<double>(binomial(n, 3));
  const double c4 = static_cast<double>(binomial(n, 4));
  GnpExpectedCounts e;
  e.three_star = 3 * c3 * std::pow(p, 2);
  e.triangle = c3 * std::pow(p, 3);
  e.four_star = 4 * c4 * std::pow(p, 3);
  e.four_path = 12 * c4 * std::pow(p, 3);
  e.tadpole = 3 * c3 * (n - 3) * std::pow(p, 4);
  e.four_circle = 3 * c4 * std::pow(p, 4);
  e.diamond = 6 * c4 * std::pow(p, 5);
  e.four_complete = c4 * std::pow(p, 6);
  if (mode == CountMode::non_nested) {
    const double q = 1 - p;
    e.three_star *= q;        // 3 possible edges, 2 present
    e.four_star *= q * q * q;
    e.four_path *= q * q * q;
    e.tadpole *= q * q;
    e.four_circle *= q * q;
    e.diamond *= q;
    // triangle and 4-complete have no missing edges
  }
  return e;
}

Graph sample_gnp(int n, double p, SplitMix64& rng) {
  if (n < 1) throw InputError("G(n,p) needs n >= 1");
  if (p < 0 || p > 1) throw InputError("edge probability outside [0,1]");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (rng.next_bernoulli(p)) edges.emplace_back(i, j);
  return Graph::from_index_edges(n, edges);
}

Graph sample_gnp_connected(int n, double p, std::uint64_t seed) {
  if (p <= 0 || p > 1) throw InputError("connected G(n,p) sampling needs p in (0,1]");
  SplitMix64 rng(seed);
  for (int attempt = 0; attempt < 10'000; ++attempt) {
    Graph g = sample_gnp(n, p, rng);
    if (g.connected()) return g;
  }
  throw InputError("10,000 consecutive disconnected G(n,p) draws; increase p");
}

namespace {

// Working copy of the adjacency for switch chains; converts back to an
// immutable Graph when the chain is done.
class SwitchState {
 public:
  explicit SwitchState(const Graph& g)
      : n_(g.node_count()), words_(g.row_words()), edges_(g.edges()) {
    adj_.assign(static_cast<std::size_t>(n_) * words_, 0);
    for (auto [i, j] : edges_) set(i, j, true);
  }

  int edge_counti() const { return static_cast<int>(edges_.size()); }
  std::pair<int, int> edge(int e) const { return edges_[e]; }

  bool has(int i, int j) const {
    return (adj_[static_cast<std::size_t>(i) * words_ + (j >> 6)] >> (j & 63)) & 1u;
  }

  // Replacement edges for switching stored edges e1, e2. The `cross` pairing
  // is (x1,y2),(x2,y1) on the stored lo<hi orientations; the other pairing,
  // (x1,x2),(y1,y2), corresponds to flipping one edge's orientation first.
  // Empty when nodes collide or a replacement edge already exists.
  std::optional<std::array<std::pair<int, int>, 2>> candidate(int e1, int e2, bool cross) const {
    const auto [x1, y1] = edges_[e1];
    const auto [x2, y2] = edges_[e2];
    if (x1 == x2 || x1 == y2 || y1 == x2 || y1 == y2) return std::nullopt;
    const auto f1 = cross ? ordered(x1, y2) : ordered(x1, x2);
    const auto f2 = cross ? ordered(x2, y1) : ordered(y1, y2);
    if (has(f1.first, f1.second) || has(f2.first, f2.second)) return std::nullopt;
    return std::array<std::pair<int, int>, 2>{f1, f2};
  }

  bool valid_switch(int e1, int e2) const { return candidate(e1, e2, true).has_value(); }

  void apply_move(int e1, int e2, std::pair<int, int> f1, std::pair<int, int> f2) {
    const auto [x1, y1] = edges_[e1];
    const auto [x2, y2] = edges_[e2];
    set(x1, y1, false);
    set(x2, y2, false);
    set(f1.first, f1.second, true);
    set(f2.first, f2.second, true);
    edges_[e1] = f1;
    edges_[e2] = f2;
  }

  bool any_valid_switch(bool both_pairings = false) const {
    const int m = edge_counti();
    for (int a = 0; a < m; ++a)
      for (int b = a + 1; b < m; ++b) {
        if (candidate(a, b, true)) return true;
        if (both_pairings && candidate(a, b, false)) return true;
      }
    return false;
  }

  int common_neighbors(int i, int j) const {
    const std::uint64_t* a = adj_.data() + static_cast<std::size_t>(i) * words_;
    const std::uint64_t* b = adj_.data() + static_cast<std::size_t>(j) * words_;
    int c = 0;
    for (std::size_t w = 0; w < words_; ++w) c += __builtin_popcountll(a[w] & b[w]);
    return c;
  }

  Graph to_graph(const std::vector<std::string>& labels) const {
    return Graph::from_index_edges(n_, edges_, labels);
  }

 private:
  static std::pair<int, int> ordered(int i, int j) { return i < j ? std::pair{i, j} : std::pair{j, i}; }
  void set(int i, int j, bool on) {
    auto bit = [&](int a, int b) -> std::uint64_t& {
      return adj_[static_cast<std::size_t>(a) * words_ + (b >> 6)];
    };
    if (on) {
      bit(i, j) |= std::uint64_t{1} << (j & 63);
      bit(j, i) |= std::uint64_t{1} << (i & 63);
    } else {
      bit(i, j) &= ~(std::uint64_t{1} << (j & 63));
      bit(j, i) &= ~(std::uint64_t{1} << (i & 63));
    }
  }

  int n_;
  std::size_t words_;
  std::vector<std::uint64_t> adj_;
  std::vector<std::pair<int, int>> edges_;
};

}  // namespace

RewireResult rewire_chain(const Graph& g, std::int64_t successful_switches, std::uint64_t seed) {
  SwitchState state(g);
  SplitMix64 rng(seed);
  const int m = state.edge_counti();
  RewireResult result{g, 0, false};
  if (successful_switches <= 0) return result;
  if (m < 2) {
    result.exhausted = true;
    return result;
  }
  const std::int64_t stall_limit = std::max<std::int64_t>(10'000, 20LL * m);
  std::int64_t stalled = 0;
  while (result.applied < successful_switches) {
    const int e1 = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(m)));
    const int e2 = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(m)));
    if (e1 != e2) {
      if (const auto move = state.candidate(e1, e2, true)) {
        state.apply_move(e1, e2, (*move)[0], (*move)[1]);
        ++result.applied;
        stalled = 0;
        continue;
      }
    }
    if (++stalled >= stall_limit) {
      if (!state.any_valid_switch()) {
        result.exhausted = true;
        break;
      }
      stalled = 0;
    }
  }
  result.graph = state.to_graph(g.labels());
  return result;
}

double anneal_energy(const AnnealTargets& real, const AnnealTargets& randomized) {
  auto term = [](Count r, Count q) {
    const double sum = static_cast<double>(r) + static_cast<double>(q);
    if (sum == 0) return 0.0;
    return std::abs(static_cast<double>(r) - static_cast<double>(q)) / sum;
  };
  return term(real.nonnested_three_star, randomized.nonnested_three_star) +
         term(real.triangles, randomized.triangles);
}

double anneal_temperature(std::int64_t t, double initial) {
  if (t < 1) throw InputError("temperature steps start at 1");
  double psi = initial;
  for (std::int64_t s = 1; s < t; ++s) psi /= std::log(static_cast<double>(s + 1));
  return psi;
}

AnnealResult anneal_match(const Graph& g_rand, const AnnealTargets& targets,
                          const AnnealConfig& config, std::uint64_t seed) {
  SwitchState state(g_rand);
  SplitMix64 rng(seed);
  const int m = state.edge_counti();

  // Degree-preserving switches keep the nested 3-star count fixed, so the
  // non-nested 3-star count is tracked through the triangle count alone.
  Count three_star = 0;
  for (int i = 0; i < g_rand.node_count(); ++i)
    three_star = checked_add(three_star, binomial(g_rand.degree(i), 2));
  Count triangles3 = 0;
  for (auto [i, j] : g_rand.edges()) triangles3 += state.common_neighbors(i, j);
  Count triangles = exact_div(triangles3, 3, "anneal triangle count");

  auto current_energy = [&](Count tri) {
    return anneal_energy(targets, AnnealTargets{three_star - 3 * tri, tri});
  };

  AnnealResult result{g_rand, false, current_energy(triangles), 0, 0, {}};
  double psi = config.initial_temperature;
  const std::int64_t stall_limit = std::max<std::int64_t>(10'000, 20LL * m);

  for (std::int64_t t = 1; t <= config.max_steps; ++t) {
    if (result.final_energy < config.stop_energy) {
      result.converged = true;
      break;
    }
    // Draw a structurally valid switch; invalid draws do not consume a step.
    // Both replacement pairings are available here (the edge orientations in
    // the selection are themselves random), which keeps the move set ergodic
    // enough to reach the targets.
    int e1 = -1, e2 = -1;
    std::array<std::pair<int, int>, 2> move{};
    std::int64_t stalled = 0;
    bool found = false;
    while (!found) {
      if (m >= 2) {
        e1 = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(m)));
        e2 = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(m)));
        const bool cross = rng.next() & 1;
        if (e1 != e2) {
          if (const auto cand = state.candidate(e1, e2, cross)) {
            move = *cand;
            found = true;
          }
        }
      }
      if (!found && (m < 2 || ++stalled >= stall_limit)) {
        if (m < 2 || !state.any_valid_switch(true)) {
          result.graph = state.to_graph(g_rand.labels());
          result.converged = result.final_energy < config.stop_energy;
          return result;
        }
        stalled = 0;
      }
    }

    // Tentatively apply and evaluate, rolling back on rejection.
    // Removed-edge triangle losses are exact on the old state and added-edge
    // gains on the new one: within each pair the edges share no node, so the
    // two updates cannot perturb each other's common neighborhoods.
    const auto old1 = state.edge(e1);
    const auto old2 = state.edge(e2);
    Count tri = triangles;
    tri -= state.common_neighbors(old1.first, old1.second);
    tri -= state.common_neighbors(old2.first, old2.second);
    state.apply_move(e1, e2, move[0], move[1]);
    tri += state.common_neighbors(move[0].first, move[0].second);
    tri += state.common_neighbors(move[1].first, move[1].second);
    const double before = result.final_energy;
    const double after = current_energy(tri);
    const double delta = after - before;
    const bool improving = delta < 0;
    const bool accepted = delta <= 0 || rng.next_double() < std::exp(-delta / psi);
    if (accepted) {
      triangles = tri;
      result.final_energy = after;
      ++result.switches_applied;
    } else {
      state.apply_move(e1, e2, old1, old2);  // exact rollback
    }
    if (config.record_trace)
      result.trace.push_back({before, accepted ? after : before, improving, accepted});
    result.steps = t;
    psi /= std::log(static_cast<double>(t + 1));
  }
  if (!result.converged) result.converged = result.final_energy < config.stop_energy;
  result.graph = state.to_graph(g_rand.labels());
  return result;
}

namespace {

struct ClassSelector {
  const char* key;
  Count (*get)(const NestedCensus&, const NonNestedCensus&);
  double (*expected)(const GnpExpectedCounts& nested, const GnpExpectedCounts& nonnested);
};

const ClassSelector kNestedThreeStar{
    "M_3_3", [](const NestedCensus& c, const NonNestedCensus&) { return c.three_star; },
    [](const GnpExpectedCounts& e, const GnpExpectedCounts&) { return e.three_star; }};
const ClassSelector kNonNestedThreeStar{
    "Mt_3_3", [](const NestedCensus&, const NonNestedCensus& c) { return c.three_star; },
    [](const GnpExpectedCounts&, const GnpExpectedCounts& e) { return e.three_star; }};
const ClassSelector kTriangle{
    "M_7_3", [](const NestedCensus& c, const NonNestedCensus&) { return c.triangle; },
    [](const GnpExpectedCounts& e, const GnpExpectedCounts&) { return e.triangle; }};
const ClassSelector kNonNestedFourStar{
    "Mt_11_4", [](const NestedCensus&, const NonNestedCensus& c) { return c.four_star; },
    [](const GnpExpectedCounts&, const GnpExpectedCounts& e) { return e.four_star; }};
const ClassSelector kNonNestedFourPath{
    "Mt_13_4", [](const NestedCensus&, const NonNestedCensus& c) { return c.four_path; },
    [](const GnpExpectedCounts&, const GnpExpectedCounts& e) { return e.four_path; }};
const ClassSelector kNonNestedTadpole{
    "Mt_15_4", [](const NestedCensus&, const NonNestedCensus& c) { return c.tadpole; },
    [](const GnpExpectedCounts&, const GnpExpectedCounts& e) { return e.tadpole; }};
const ClassSelector kNonNestedFourCircle{
    "Mt_30_4", [](const NestedCensus&, const NonNestedCensus& c) { return c.four_circle; },
    [](const GnpExpectedCounts&, const GnpExpectedCounts& e) { return e.four_circle; }};
const ClassSelector kNonNestedDiamond{
    "Mt_31_4", [](const NestedCensus&, const NonNestedCensus& c) { return c.diamond; },
    [](const GnpExpectedCounts&, const GnpExpectedCounts& e) { return e.diamond; }};
const ClassSelector kFourComplete{
    "M_63_4", [](const NestedCensus& c, const NonNestedCensus&) { return c.four_complete; },
    [](const GnpExpectedCounts& e, const GnpExpectedCounts&) { return e.four_complete; }};

std::vector<ClassSelector> selectors_for(EnsembleKind kind) {
  switch (kind) {
    case EnsembleKind::gnp:
      return {kNestedThreeStar, kNonNestedThreeStar, kTriangle};
    case EnsembleKind::rewire:
      return {kNonNestedThreeStar, kTriangle};
    case EnsembleKind::rewire_anneal:
      return {kNonNestedFourStar, kNonNestedFourPath, kNonNestedTadpole, kNonNestedFourCircle,
              kNonNestedDiamond, kFourComplete};
  }
  return {};
}

}  // namespace

std::vector<ClassNullStats> null_ensemble_stats(const Graph& g, const EnsembleSpec& spec) {
  spec.validate();
  const double gnp_probability = spec.gnp_p.value_or(g.density());
  const auto selectors = selectors_for(spec.kind);
  const NestedCensus observed_nested = nested_census(g);
  const NonNestedCensus observed_nonnested = nonnested_census(observed_nested);
  const int r_total = spec.replications;
  const std::int64_t steps = spec.effective_rewire_steps(g.edge_count());

  AnnealTargets targets{observed_nonnested.three_star, observed_nested.triangle};
  AnnealConfig anneal_cfg = spec.anneal;
  anneal_cfg.record_trace = false;

  struct RepResult {
    std::vector<Count> counts;
    bool valid = true;
    bool exhausted = false;
  };
  std::vector<RepResult> reps(r_total);

  parallel_for(r_total, [&](int r) {
    const std::uint64_t seed_r = stream_seed(spec.master_seed, static_cast<std::uint64_t>(r));
    RepResult& out = reps[r];
    Graph sample = g;
    switch (spec.kind) {
      case EnsembleKind::gnp:
        sample = sample_gnp_connected(g.node_count(), gnp_probability, seed_r);
        break;
      case EnsembleKind::rewire: {
        RewireResult rw = rewire_chain(g, steps, seed_r);
        out.exhausted = rw.exhausted;
        sample = std::move(rw.graph);
        break;
      }
      case EnsembleKind::rewire_anneal: {
        RewireResult rw = rewire_chain(g, steps, SplitMix64::mix(seed_r));
        out.exhausted = rw.exhausted;
        AnnealResult an = anneal_match(rw.graph, targets, anneal_cfg, SplitMix64::mix(seed_r + 1));
        if (!an.converged) {
          out.valid = false;
          return;
        }
        sample = std::move(an.graph);
        break;
      }
    }
    const NestedCensus nested = nested_census(sample);
    const NonNestedCensus nonnested = nonnested_census(nested);
    out.counts.reserve(selectors.size());
    for (const auto& sel : selectors) out.counts.push_back(sel.get(nested, nonnested));
  });

  int discarded = 0;
  bool exhausted = false;
  for (const auto& rep : reps) {
    if (!rep.valid) ++discarded;
    exhausted = exhausted || rep.exhausted;
  }

  GnpExpectedCounts exp_nested{}, exp_nonnested{};
  if (spec.kind == EnsembleKind::gnp) {
    exp_nested = expected_counts_gnp(g.node_count(), gnp_probability, CountMode::nested);
    exp_nonnested = expected_counts_gnp(g.node_count(), gnp_probability, CountMode::non_nested);
  }

  std::vector<ClassNullStats> stats;
  stats.reserve(selectors.size());
  for (std::size_t c = 0; c < selectors.size(); ++c) {
    ClassNullStats cs;
    cs.class_key = selectors[c].key;
    cs.observed = selectors[c].get(observed_nested, observed_nonnested);
    cs.discarded = discarded;
    cs.rewire_exhausted = exhausted;
    for (const auto& rep : reps)
      if (rep.valid) cs.samples.push_back(rep.counts[c]);
    if (cs.samples.size() < 2) throw InputError("fewer than 2 usable null replications");
    double mean = 0;
    for (Count s : cs.samples) mean += static_cast<double>(s);
    mean /= static_cast<double>(cs.samples.size());
    double ss = 0;
    for (Count s : cs.samples) {
      const double d = static_cast<double>(s) - mean;
      ss += d * d;
    }
    cs.sigma = std::sqrt(ss / static_cast<double>(cs.samples.size() - 1));
    if (spec.kind == EnsembleKind::gnp) {
      cs.mu = selectors[c].expected(exp_nested, exp_nonnested);
      cs.analytic_mu = true;
    } else {
      cs.mu = mean;
    }
    stats.push_back(std::move(cs));
  }
  return stats;
}

ZP z_and_pvalue(Count observed, double mu, double sigma, std::span<const Count> samples,
                int bootstrap, std::uint64_t seed) {
  if (sigma <= 0) throw InputError("degenerate null");
  if (samples.size() < 2) throw InputError("need at least 2 null samples");
  ZP out;
  out.z = (static_cast<double>(observed) - mu) / sigma;

  const double obs_dev = std::abs(static_cast<double>(observed) - mu);
  std::size_t tail = 0;
  for (Count s : samples)
    if (std::abs(static_cast<double>(s) - mu) >= obs_dev) ++tail;
  out.p_empirical =
      static_cast<double>(1 + tail) / static_cast<double>(samples.size() + 1);

  const std::size_t r = samples.size();
  std::vector<double> zs;
  zs.reserve(bootstrap);
  std::size_t exceed = 0;
  for (int b = 0; b < bootstrap; ++b) {
    SplitMix64 rng = stream_for(seed, static_cast<std::uint64_t>(b));
    double sum = 0, sumsq = 0;
    for (std::size_t i = 0; i < r; ++i) {
      const double v = static_cast<double>(samples[rng.next_below(r)]);
      sum += v;
      sumsq += v * v;
    }
    const double mean = sum / static_cast<double>(r);
    const double var = std::max(0.0, (sumsq - sum * mean) / static_cast<double>(r - 1));
    const double sd = std::sqrt(var);
    if (sd == 0) {
      ++exceed;  // infinitely extreme resample z counts against significance
      continue;
    }
    const double zb = (static_cast<double>(observed) - mean) / sd;
    if (std::abs(zb) >= std::abs(out.z)) ++exceed;
    zs.push_back(zb);
  }
  out.p_bootstrap = static_cast<double>(1 + exceed) / static_cast<double>(bootstrap + 1);
  if (!zs.empty()) {
    std::sort(zs.begin(), zs.end());
    auto quantile = [&](double q) {
      const double pos = q * static_cast<double>(zs.size() - 1);
      const std::size_t lo = static_cast<std::size_t>(pos);
      const std::size_t hi = std::min(lo + 1, zs.size() - 1);
      const double frac = pos - static_cast<double>(lo);
      return zs[lo] * (1 - frac) + zs[hi] * frac;
    };
    out.z_boot_low = quantile(0.025);
    out.z_boot_high = quantile(0.975);
  } else {
    out.z_boot_low = out.z_boot_high = 0;
  }
  return out;
}

ZScoreReport motif_scan(const Graph& g, const EnsembleSpec& spec) {
  if (!g.connected()) throw InputError("motif scan expects a connected graph");
  auto stats = null_ensemble_stats(g, spec);
  ZScoreReport report;
  report.seed = spec.master_seed;
  report.discarded = stats.empty() ? 0 : stats.front().discarded;
  report.rewire_exhausted = !stats.empty() && stats.front().rewire_exhausted;
  {
    char buf[160];
    if (spec.kind == EnsembleKind::gnp)
      std::snprintf(buf, sizeof buf, "gnp(R=%d,p=%.6g)", spec.replications,
                    spec.gnp_p.value_or(g.density()));
    else
      std::snprintf(buf, sizeof buf, "%s(R=%d,steps=%lld)", to_string(spec.kind).c_str(),
                    spec.replications,
                    static_cast<long long>(spec.effective_rewire_steps(g.edge_count())));
    report.ensemble = buf;
  }
  for (std::size_t c = 0; c < stats.size(); ++c) {
    const auto& cs = stats[c];
    ZScoreEntry entry;
    entry.class_key = cs.class_key;
    entry.observed = cs.observed;
    entry.mu = cs.mu;
    entry.sigma = cs.sigma;
    if (cs.sigma > 0) {
      entry.zp = z_and_pvalue(cs.observed, cs.mu, cs.sigma, cs.samples, spec.bootstrap,
                              stream_seed(spec.master_seed, 0x5A5A0000u + c));
      entry.verdict = entry.zp->z > 2    ? Verdict::motif
                      : entry.zp->z < -2 ? Verdict::anti_motif
                                         : Verdict::not_significant;
    } else {
      entry.verdict = Verdict::degenerate;
    }
    report.entries.push_back(std::move(entry));
  }
  return report;
}

}  // namespace motifkit
