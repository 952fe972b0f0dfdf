#include "versal/verifier.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "versal/families.hpp"
#include "versal/isolation.hpp"
#include "versal/versals.hpp"

namespace versal {

std::string to_string(Claim c) {
  switch (c) {
    case Claim::main_theorem: return "main-theorem";
    case Claim::theorem2: return "theorem2";
    case Claim::bounds: return "bounds";
    case Claim::lifting: return "lifting";
    case Claim::lemma1: return "lemma1";
    case Claim::lemma3: return "lemma3";
    case Claim::lemma4: return "lemma4";
    case Claim::lemma5: return "lemma5";
    case Claim::lemma6: return "lemma6";
    case Claim::theorem7: return "theorem7";
    case Claim::properties: return "properties";
    case Claim::isolation: return "isolation";
  }
  return "";
}

std::optional<Claim> claim_from_string(const std::string& s) {
  static const std::vector<Claim> all = {
      Claim::main_theorem, Claim::theorem2, Claim::bounds, Claim::lifting,
      Claim::lemma1,       Claim::lemma3,   Claim::lemma4, Claim::lemma5,
      Claim::lemma6,       Claim::theorem7, Claim::properties,
      Claim::isolation};
  for (Claim c : all)
    if (to_string(c) == s) return c;
  return std::nullopt;
}

std::string to_string(Outcome o) {
  switch (o) {
    case Outcome::pass: return "pass";
    case Outcome::exception_as_predicted: return "exception_as_predicted";
    case Outcome::counterexample: return "counterexample";
    case Outcome::not_applicable: return "not_applicable";
  }
  return "";
}

namespace {

Verdict na(const std::string& reason) {
  Verdict v;
  v.outcome = Outcome::not_applicable;
  v.reason = reason;
  return v;
}

Verdict fail(const std::string& reason) {
  Verdict v;
  v.outcome = Outcome::counterexample;
  v.reason = reason;
  return v;
}

}  // namespace

Verdict check_main_theorem(const Hypergraph& h) {
  const int n = h.n();
  const int m = h.edge_count();
  if (m == 0) return na("no edges");
  Verdict v;
  if (m == 1) {
    // the defining inequality is vacuous: every subset is a versal
    v.z = 1LL << n;
    v.vacuous = true;
    return v;
  }
  v.z = all_versals(h).total;
  if (v.z >= n + 1) return v;
  const FamilyTag tag = classify(h);
  const bool predicted =
      tag.kind == FamilyKind::singletons ||
      tag.kind == FamilyKind::co_singletons ||
      (tag.kind == FamilyKind::binary_star && tag.rank == 2 &&
       tag.star_size == 2 && n == 4);
  if (predicted && v.z == n) {
    v.outcome = Outcome::exception_as_predicted;
    v.reason = tag.kind == FamilyKind::binary_star ? "c4" : to_string(tag.kind);
    return v;
  }
  v.outcome = Outcome::counterexample;
  v.reason = "|Z| = " + std::to_string(v.z) + " < n+1 without a predicted family";
  return v;
}

Verdict check_theorem2(const Hypergraph& h) {
  const int n = h.n();
  const int m = h.edge_count();
  if (m < 2) return na("requires m > 1");
  if (!h.is_uniform()) return na("requires a uniform hypergraph");
  const int r = h.rank();
  if (2 * r > n) return na("requires 2r <= n");
  Verdict v;
  v.zprime = null_versals(h).null_total;
  if (v.zprime >= n + 1) return v;
  const FamilyTag tag = classify(h);
  if (tag.kind == FamilyKind::singletons && v.zprime == n) {
    v.outcome = Outcome::exception_as_predicted;
    v.reason = "singletons";
    return v;
  }
  if (tag.kind == FamilyKind::star && is_spanning_star(h) && v.zprime == m) {
    v.outcome = Outcome::exception_as_predicted;
    v.reason = "spanning_star";
    return v;
  }
  if (tag.kind == FamilyKind::binary_star && tag.star_size == r && n == 2 * r &&
      v.zprime == n) {
    v.outcome = Outcome::exception_as_predicted;
    v.reason = "binary_star";
    return v;
  }
  v.outcome = Outcome::counterexample;
  v.reason = "|Z'| = " + std::to_string(v.zprime) +
             " <= n without a predicted family (" + to_string(tag.kind) + ")";
  return v;
}

Verdict check_bounds(const Hypergraph& h) {
  const int n = h.n();
  const int m = h.edge_count();
  if (m < 2 || !h.is_uniform()) return na("requires uniform with m > 1");
  const int r = h.rank();
  long long bound = 0;
  std::string regime;
  if (n > 2 * r && m <= n - r) {
    bound = static_cast<long long>(m) << (n - m - r + 1);
    regime = "m*2^(n-m-r+1)";
  } else if (n == 2 * r && m < r) {
    bound = static_cast<long long>(m) << (r - m + 1);
    regime = "m*2^(r-m+1)";
  } else {
    return na("neither bound hypothesis holds");
  }
  Verdict v;
  v.zprime = null_versals(h).null_total;
  if (v.zprime >= bound) return v;
  return [&] {
    Verdict f = fail("|Z'| = " + std::to_string(v.zprime) + " < " + regime +
                     " = " + std::to_string(bound));
    f.zprime = v.zprime;
    return f;
  }();
}

Verdict check_lifting(const Hypergraph& h) {
  const int n = h.n();
  if (h.edge_count() == 0) return na("no edges");
  const int rho = h.min_rank();
  const auto idx = h.min_layer_indices();
  Verdict v;
  if (static_cast<int>(idx.size()) == h.edge_count()) return v;  // uniform
  const Hypergraph layer = h.min_layer();
  if (n >= 2 * rho) {
    const VersalCensus nulls = null_versals(layer, /*materialize=*/true);
    for (const VersalRecord& rec : nulls.records) {
      if (!is_versal(h, idx[static_cast<size_t>(rec.edge_index)], rec.set))
        return fail("null versal " + rec.set.to_string() +
                    " of the minimum layer is not a versal of edge " +
                    std::to_string(idx[static_cast<size_t>(rec.edge_index)]));
    }
  } else {
    const Hypergraph reflected = layer.reflect();
    const VersalCensus nulls = null_versals(reflected, /*materialize=*/true);
    for (const VersalRecord& rec : nulls.records) {
      const VertexSet s = rec.set.complement(n);
      if (!is_versal(h, idx[static_cast<size_t>(rec.edge_index)], s))
        return fail("complement " + s.to_string() +
                    " of a reflected null versal is not a versal of edge " +
                    std::to_string(idx[static_cast<size_t>(rec.edge_index)]));
    }
  }
  return v;
}

Verdict check_lemma1(const Hypergraph& h) {
  if (h.edge_count() == 0) return na("no edges");
  if (!h.is_uniform()) return na("requires a uniform hypergraph");
  if (h.rank() == h.n()) return na("an edge equals the vertex set");
  const Hypergraph reflected = h.reflect();
  const auto owner_h = owner_map(h);
  const auto owner_r = owner_map(reflected);
  const std::uint32_t full = VertexSet::full(h.n()).bits();
  Verdict v;
  v.z = 0;
  for (std::size_t sb = 0; sb < owner_h.size(); ++sb) {
    if (owner_h[sb] >= 0) ++v.z;
    if (owner_h[sb] != owner_r[full ^ std::uint32_t(sb)])
      return fail("complementation does not map the versals of edge " +
                  std::to_string(std::max(owner_h[sb],
                                          owner_r[full ^ std::uint32_t(sb)])) +
                  " onto the reflection's (set " +
                  VertexSet::from_bits(std::uint32_t(sb)).to_string() + ")");
  }
  return v;
}

Verdict check_lemma3(const Hypergraph& h) {
  if (h.edge_count() == 0) return na("no edges");
  const int rho = h.min_rank();
  for (int e : h.min_layer_indices()) {
    const VertexSet comp = h.edge(e).complement(h.n());
    for (int vtx : comp.members()) {
      if (edge_free(h, e, vtx)) continue;
      bool found = false;
      for (int j = 0; j < h.edge_count() && !found; ++j) {
        const VertexSet f = h.edge(j);
        if (f.cardinality() == rho && (f & comp) == VertexSet::of({vtx}))
          found = true;
      }
      if (!found)
        return fail("vertex " + std::to_string(vtx) +
                    " is not free for edge " + std::to_string(e) +
                    " yet no minimum edge meets its complement only there");
    }
  }
  return {};
}

Verdict check_lemma4(const Hypergraph& h) {
  const int m = h.edge_count();
  if (m == 0) return na("no edges");
  const int rho = h.min_rank();
  std::vector<int> deg(static_cast<size_t>(h.n()), 0);
  for (VertexSet e : h.edges())
    for (int v : e.members()) ++deg[static_cast<size_t>(v)];

  // memoized conclusion per edge g: does some vertex free for g exist?
  std::vector<int> has_free(static_cast<size_t>(m), -1);
  auto free_exists = [&](int g) {
    int& memo = has_free[static_cast<size_t>(g)];
    if (memo < 0) {
      memo = 0;
      for (int v : h.edge(g).complement(h.n()).members())
        if (edge_free(h, g, v)) { memo = 1; break; }
    }
    return memo == 1;
  };

  for (int f = 0; f < m; ++f) {
    for (int u : h.edge(f).members()) {
      if (deg[static_cast<size_t>(u)] != 1) continue;
      const VertexSet rest = h.edge(f).without(u);
      for (int e = 0; e < m; ++e) {
        if (e == f || !rest.subset_of(h.edge(e))) continue;
        for (int g = 0; g < m; ++g) {
          if (h.edge(g).cardinality() != rho) continue;
          if ((h.edge(f) & h.edge(g)).cardinality() >= rho - 1) continue;
          if (!free_exists(g))
            return fail("no free vertex for edge " + std::to_string(g) +
                        " despite e=" + std::to_string(e) +
                        " f=" + std::to_string(f) + " u=" + std::to_string(u));
        }
      }
    }
  }
  return {};
}

Verdict check_lemma5(const Hypergraph& h) {
  if (h.edge_count() == 0) return na("no edges");
  if (!h.is_uniform()) return na("requires a uniform hypergraph");
  const int n = h.n();
  const int r = h.rank();
  const int m = h.edge_count();
  if (m != n - r + 1) return na("requires m = n - r + 1");
  const int pole_count = static_cast<int>(poles(h).size());
  const bool more_than_one = pole_count > 1;
  const bool star = is_star_family(h);
  const bool all_poles = pole_count == m;
  if (more_than_one == star && star == all_poles) return {};
  return fail("pole statements disagree: poles=" + std::to_string(pole_count) +
              " star=" + std::to_string(star) +
              " all_poles=" + std::to_string(all_poles));
}

Verdict check_lemma6(const Hypergraph& h) {
  if (h.edge_count() == 0) return na("no edges");
  if (!h.is_uniform()) return na("requires a uniform hypergraph");
  const int n = h.n();
  const int r = h.rank();
  const int m = h.edge_count();
  if (n < 2 * r) return na("requires n >= 2r");
  if (m < n - r + 1 || m > n) return na("requires n-r+1 <= m <= n");
  const bool all_poles =
      static_cast<int>(poles(h).size()) == m;
  const FamilyTag tag = classify(h);
  const bool spanning_star = is_spanning_star(h) && m == n - r + 1;
  const bool binary = tag.kind == FamilyKind::binary_star &&
                      tag.star_size == r && m == n && n == 2 * r;
  if (all_poles == (spanning_star || binary)) return {};
  return fail(std::string("all-poles is ") + (all_poles ? "true" : "false") +
              " but the predicted shapes say otherwise (" +
              to_string(tag.kind) + ")");
}

Verdict check_theorem7(const Hypergraph& h) {
  if (!is_spanning_star(h)) return na("spanning stars only");
  const int n = h.n();
  const int r = h.rank();
  const int m = h.edge_count();
  Verdict v;
  v.z = all_versals(h).total;
  const long long expected = (1LL << (r - 1)) * m;
  if (v.z != expected) {
    Verdict f = fail("|Z| = " + std::to_string(v.z) + " but 2^(r-1)*m = " +
                     std::to_string(expected));
    f.z = v.z;
    return f;
  }
  if (r >= 2 && n >= 3 && v.z < n + 1) {
    Verdict f = fail("|Z| = " + std::to_string(v.z) + " < n+1");
    f.z = v.z;
    return f;
  }
  return v;
}

Verdict check_properties(const Hypergraph& h) {
  const int n = h.n();
  const int m = h.edge_count();
  if (m == 0) return na("no edges");
  const auto owner = owner_map(h);
  const VersalCensus census = all_versals(h);
  const VersalCensus nulls = null_versals(h);
  Verdict v;
  v.z = census.total;
  v.zprime = census.null_total;

  // dual route: complement-submask null counting vs owner-map null counting
  if (nulls.null_total != census.null_total ||
      nulls.null_per_edge != census.null_per_edge)
    return fail("null-versal counts disagree between enumeration routes");

  long long per_edge_sum = 0;
  for (long long c : census.per_edge) per_edge_sum += c;
  if (per_edge_sum != census.total)
    return fail("census total does not equal the per-edge sum");

  const bool uniform = h.is_uniform();
  for (std::uint32_t sb = 0; sb < (std::uint32_t{1} << n); ++sb) {
    const VertexSet s = VertexSet::from_bits(sb);
    int cnt = 0, who = -1;
    for (int e = 0; e < m && cnt < 2; ++e) {
      const bool general = is_versal(h, e, s);
      if (uniform && general != is_versal_uniform(h, e, s))
        return fail("uniform simplification disagrees with the general test"
                    " for edge " + std::to_string(e) + ", set " + s.to_string());
      if (general) {
        ++cnt;
        who = e;
      }
    }
    if (cnt > 1)
      return fail("set " + s.to_string() + " is a versal for two edges");
    if (cnt == 1 && owner[sb] != who)
      return fail("owner map misses a versal for " + s.to_string());
    if (cnt == 0 && owner[sb] != -1)
      return fail("owner map claims a versal for non-versal " + s.to_string());

    if (owner[sb] >= 0) {
      const int e = owner[sb];
      const VertexSet covered = s | h.edge(e);
      // upward closure: adding any outside vertex keeps the versal
      for (int vtx : covered.complement(n).members())
        if (owner[s.with(vtx).bits()] != e)
          return fail("upward closure fails at " + s.to_string() + " + " +
                      std::to_string(vtx));
      // |L(e)| >= 2^p where p counts the free vertices outside S u e
      const int p = n - covered.cardinality();
      if (census.per_edge[static_cast<size_t>(e)] < (1LL << p))
        return fail("power bound fails at edge " + std::to_string(e));
    }
  }

  if (uniform && m > 1) {
    v.q = free_pairs(h);
    if (m + v.q > census.null_total) {
      Verdict f = fail("counting floor fails: m + q = " +
                       std::to_string(m + v.q) + " > |Z'| = " +
                       std::to_string(census.null_total));
      f.z = v.z; f.zprime = v.zprime; f.q = v.q;
      return f;
    }
  }
  return v;
}

Verdict check_isolation_roundtrip(const Hypergraph& h) {
  const int n = h.n();
  if (h.edge_count() == 0) return na("no edges");
  const auto owner = owner_map(h);
  Weighting w;
  w.values.assign(static_cast<size_t>(n), 1);
  for (std::uint32_t sb = 0; sb < (std::uint32_t{1} << n); ++sb) {
    for (int vtx = 0; vtx < n; ++vtx)
      w.values[static_cast<size_t>(vtx)] = ((sb >> vtx) & 1u) ? 2 : 1;
    const auto um = unique_min_edge(h, w);
    const int expected = owner[sb];
    if ((um ? *um : -1) != expected)
      return fail("weighting round trip fails for " +
                  VertexSet::from_bits(sb).to_string());
  }
  return {};
}

Verdict check_claim(Claim c, const Hypergraph& h) {
  switch (c) {
    case Claim::main_theorem: return check_main_theorem(h);
    case Claim::theorem2: return check_theorem2(h);
    case Claim::bounds: return check_bounds(h);
    case Claim::lifting: return check_lifting(h);
    case Claim::lemma1: return check_lemma1(h);
    case Claim::lemma3: return check_lemma3(h);
    case Claim::lemma4: return check_lemma4(h);
    case Claim::lemma5: return check_lemma5(h);
    case Claim::lemma6: return check_lemma6(h);
    case Claim::theorem7: return check_theorem7(h);
    case Claim::properties: return check_properties(h);
    case Claim::isolation: return check_isolation_roundtrip(h);
  }
  throw std::logic_error("unknown claim");
}

AntichainSource::AntichainSource(int n) : n_(n), all_(enum_antichains(n)) {
  const long long expected = kDedekind[n] - 2;
  if (static_cast<long long>(all_.size()) != expected)
    throw std::logic_error("antichain enumeration does not match the Dedekind count");
}

long long AntichainSource::size() const {
  return static_cast<long long>(all_.size());
}

Hypergraph AntichainSource::instance(long long index) const {
  return all_[static_cast<size_t>(index)];
}

std::string AntichainSource::scope() const {
  return "antichains n=" + std::to_string(n_) + " exhaustive";
}

UniformSource::UniformSource(int n, int r, int m_min, int m_max)
    : space_(n, r, m_min, m_max) {}

long long UniformSource::size() const { return space_.size(); }

Hypergraph UniformSource::instance(long long index) const {
  return space_.instance(index);
}

std::string UniformSource::scope() const {
  return "uniform n=" + std::to_string(space_.n()) + " r=" +
         std::to_string(space_.r()) + " m=" + std::to_string(space_.m_min()) +
         ".." + std::to_string(space_.m_max()) + " exhaustive";
}

RandomAntichainSource::RandomAntichainSource(int n, long long samples,
                                             std::uint64_t seed)
    : n_(n), samples_(samples), seed_(seed) {
  if (samples < 1) throw std::invalid_argument("samples must be >= 1");
}

long long RandomAntichainSource::size() const { return samples_; }

Hypergraph RandomAntichainSource::instance(long long index) const {
  return random_antichain(n_, seed_, static_cast<std::uint64_t>(index));
}

std::string RandomAntichainSource::scope() const {
  return "random-antichains n=" + std::to_string(n_) + " samples=" +
         std::to_string(samples_) + " seed=" + std::to_string(seed_);
}

RandomUniformSource::RandomUniformSource(int n_max, long long samples,
                                         std::uint64_t seed)
    : n_max_(n_max), samples_(samples), seed_(seed) {
  if (samples < 1) throw std::invalid_argument("samples must be >= 1");
}

long long RandomUniformSource::size() const { return samples_; }

Hypergraph RandomUniformSource::instance(long long index) const {
  return random_uniform(n_max_, seed_, static_cast<std::uint64_t>(index));
}

std::string RandomUniformSource::scope() const {
  return "random-uniform n<=" + std::to_string(n_max_) + " samples=" +
         std::to_string(samples_) + " seed=" + std::to_string(seed_);
}

StarParamSource::StarParamSource(int r_min, int r_max, int m_min, int m_max)
    : r_min_(r_min), r_max_(r_max), m_min_(m_min), m_max_(m_max) {
  if (r_min < 1 || m_min < 2 || r_max < r_min || m_max < m_min)
    throw std::invalid_argument("StarParamSource: bad parameter grid");
  if (r_max - 1 + m_max > kMaxUniverse)
    throw std::invalid_argument("StarParamSource: universe exceeds cap");
}

long long StarParamSource::size() const {
  return static_cast<long long>(r_max_ - r_min_ + 1) * (m_max_ - m_min_ + 1);
}

Hypergraph StarParamSource::instance(long long index) const {
  const int m_span = m_max_ - m_min_ + 1;
  const int r = r_min_ + static_cast<int>(index / m_span);
  const int m = m_min_ + static_cast<int>(index % m_span);
  return gen_star(r, m);
}

std::string StarParamSource::scope() const {
  return "stars r=" + std::to_string(r_min_) + ".." + std::to_string(r_max_) +
         " m=" + std::to_string(m_min_) + ".." + std::to_string(m_max_);
}

FileSource::FileSource(Hypergraph h, std::string label)
    : h_(std::move(h)), label_(std::move(label)) {}

long long FileSource::size() const { return 1; }

Hypergraph FileSource::instance(long long) const { return h_; }

std::string FileSource::scope() const { return "file " + label_; }

namespace {

struct PartialResult {
  long long pass = 0, vacuous = 0, not_applicable = 0;
  long long exception_total = 0, counterexample_total = 0;
  std::vector<WitnessEntry> exceptions, counterexamples;
};

WitnessEntry make_entry(long long index, const Hypergraph& h,
                        const Verdict& v) {
  WitnessEntry e;
  e.index = index;
  e.hg = h.to_hg();
  e.n = h.n();
  e.m = h.edge_count();
  e.r = h.edge_count() > 0 ? h.rank() : 0;
  e.reason = v.reason;
  e.z = v.z;
  e.zprime = v.zprime;
  e.q = v.q;
  return e;
}

void run_range(Claim claim, const InstanceSource& source, long long begin,
               long long end, PartialResult& out) {
  for (long long i = begin; i < end; ++i) {
    const Hypergraph h = source.instance(i);
    const Verdict v = check_claim(claim, h);
    switch (v.outcome) {
      case Outcome::pass:
        ++out.pass;
        if (v.vacuous) ++out.vacuous;
        break;
      case Outcome::not_applicable:
        ++out.not_applicable;
        break;
      case Outcome::exception_as_predicted:
        ++out.exception_total;
        out.exceptions.push_back(make_entry(i, h, v));
        break;
      case Outcome::counterexample:
        ++out.counterexample_total;
        out.counterexamples.push_back(make_entry(i, h, v));
        break;
    }
  }
}

}  // namespace

Report run_suite(const SuiteConfig& config, const InstanceSource& source) {
  const auto started = std::chrono::steady_clock::now();
  Report report;
  report.claim = to_string(config.claim);
  report.scope = source.scope();
  report.instances = source.size();

  const int jobs = std::max(1, config.jobs);
  std::vector<PartialResult> parts(static_cast<size_t>(jobs));
  if (jobs == 1) {
    run_range(config.claim, source, 0, report.instances, parts[0]);
  } else {
    std::vector<std::thread> workers;
    for (int t = 0; t < jobs; ++t) {
      const long long begin = report.instances * t / jobs;
      const long long end = report.instances * (t + 1) / jobs;
      workers.emplace_back([&, t, begin, end] {
        run_range(config.claim, source, begin, end,
                  parts[static_cast<size_t>(t)]);
      });
    }
    for (auto& w : workers) w.join();
  }

  for (const PartialResult& p : parts) {
    report.pass_count += p.pass;
    report.vacuous += p.vacuous;
    report.not_applicable += p.not_applicable;
    report.exception_total += p.exception_total;
    report.counterexample_total += p.counterexample_total;
    for (const WitnessEntry& e : p.exceptions)
      if (static_cast<long long>(report.exceptions.size()) < config.witness_cap)
        report.exceptions.push_back(e);
    for (const WitnessEntry& e : p.counterexamples)
      if (static_cast<long long>(report.counterexamples.size()) <
          config.witness_cap)
        report.counterexamples.push_back(e);
  }

  report.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started)
          .count();
  return report;
}

namespace {

nlohmann::ordered_json entry_to_json(const WitnessEntry& e) {
  nlohmann::ordered_json j;
  j["index"] = e.index;
  j["n"] = e.n;
  j["m"] = e.m;
  j["r"] = e.r;
  if (e.z >= 0) j["z"] = e.z;
  if (e.zprime >= 0) j["zprime"] = e.zprime;
  if (e.q >= 0) j["q"] = e.q;
  j["reason"] = e.reason;
  j["hg"] = e.hg;
  return j;
}

}  // namespace

std::string report_to_json(const Report& report, bool with_timing,
                           int indent) {
  nlohmann::ordered_json j;
  j["claim"] = report.claim;
  j["scope"] = report.scope;
  j["instances"] = report.instances;
  j["pass"] = report.pass_count;
  j["vacuous"] = report.vacuous;
  j["not_applicable"] = report.not_applicable;
  j["exceptions_total"] = report.exception_total;
  j["counterexamples_total"] = report.counterexample_total;
  j["exceptions"] = nlohmann::ordered_json::array();
  for (const WitnessEntry& e : report.exceptions)
    j["exceptions"].push_back(entry_to_json(e));
  j["counterexamples"] = nlohmann::ordered_json::array();
  for (const WitnessEntry& e : report.counterexamples)
    j["counterexamples"].push_back(entry_to_json(e));
  if (with_timing) j["seconds"] = report.seconds;
  return j.dump(indent);
}

}  // namespace versal
