#ifndef VERSAL_VERIFIER_HPP
#define VERSAL_VERIFIER_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "versal/enumerate.hpp"
#include "versal/hypergraph.hpp"

namespace versal {

// Executable verdicts for the library's claims: each check evaluates one
// statement on one instance and either passes, matches a predicted
// exceptional family, or produces a counterexample with a replayable
// witness. Suites fold checks over exhaustive or seeded-random scopes.

enum class Claim {
  main_theorem,  // |Z(H)| >= n+1 unless singletons / co-singletons / C4
  theorem2,      // uniform, 2r <= n, m > 1: |Z'(H)| >= n+1 unless predicted
  bounds,        // |Z'| >= m*2^(n-m-r+1) resp. m*2^(r-m+1) in their regimes
  lifting,       // null versals of the minimum layer lift to versals of H
  lemma1,        // reflection preserves Z via S -> complement(S)
  lemma3,        // non-free vertices force a minimum-size witness edge
  lemma4,        // degree-1 containment pattern forces a free vertex
  lemma5,        // m = n-r+1: >1 pole / star / all-poles are equivalent
  lemma6,        // all-poles iff spanning star or 2r-binary star
  theorem7,      // spanning star: |Z| = 2^(r-1) * m
  properties,    // versal-engine invariants (disjointness, closure, ...)
  isolation,     // versal <-> unique-min {1,2}-weighting round trip
};

std::string to_string(Claim c);
std::optional<Claim> claim_from_string(const std::string& s);

enum class Outcome { pass, exception_as_predicted, counterexample, not_applicable };

std::string to_string(Outcome o);

struct Verdict {
  Outcome outcome = Outcome::pass;
  std::string reason;   // exception family / failure description / NA cause
  bool vacuous = false; // e.g. m = 1, where every subset is a versal
  long long z = -1;     // |Z(H)| when computed
  long long zprime = -1;
  long long q = -1;     // free pairs when computed
};

Verdict check_main_theorem(const Hypergraph& h);
Verdict check_theorem2(const Hypergraph& h);
Verdict check_bounds(const Hypergraph& h);
Verdict check_lifting(const Hypergraph& h);
Verdict check_lemma1(const Hypergraph& h);
Verdict check_lemma3(const Hypergraph& h);
Verdict check_lemma4(const Hypergraph& h);
Verdict check_lemma5(const Hypergraph& h);
Verdict check_lemma6(const Hypergraph& h);
Verdict check_theorem7(const Hypergraph& h);  // spanning stars only
Verdict check_properties(const Hypergraph& h);
Verdict check_isolation_roundtrip(const Hypergraph& h);

Verdict check_claim(Claim c, const Hypergraph& h);

// Candidate streams, random-access so chunks can be partitioned over
// workers deterministically.
class InstanceSource {
 public:
  virtual ~InstanceSource() = default;
  virtual long long size() const = 0;
  virtual Hypergraph instance(long long index) const = 0;
  virtual std::string scope() const = 0;
};

class AntichainSource : public InstanceSource {
 public:
  explicit AntichainSource(int n);  // cross-checked against Dedekind counts
  long long size() const override;
  Hypergraph instance(long long index) const override;
  std::string scope() const override;

 private:
  int n_;
  std::vector<Hypergraph> all_;
};

class UniformSource : public InstanceSource {
 public:
  UniformSource(int n, int r, int m_min, int m_max);
  long long size() const override;
  Hypergraph instance(long long index) const override;
  std::string scope() const override;
  const UniformSpace& space() const { return space_; }

 private:
  UniformSpace space_;
};

class RandomAntichainSource : public InstanceSource {
 public:
  RandomAntichainSource(int n, long long samples, std::uint64_t seed);
  long long size() const override;
  Hypergraph instance(long long index) const override;
  std::string scope() const override;

 private:
  int n_;
  long long samples_;
  std::uint64_t seed_;
};

class RandomUniformSource : public InstanceSource {
 public:
  RandomUniformSource(int n_max, long long samples, std::uint64_t seed);
  long long size() const override;
  Hypergraph instance(long long index) const override;
  std::string scope() const override;

 private:
  int n_max_;
  long long samples_;
  std::uint64_t seed_;
};

// Spanning stars over a parameter grid, for the star counting formula.
class StarParamSource : public InstanceSource {
 public:
  StarParamSource(int r_min, int r_max, int m_min, int m_max);
  long long size() const override;
  Hypergraph instance(long long index) const override;
  std::string scope() const override;

 private:
  int r_min_, r_max_, m_min_, m_max_;
};

class FileSource : public InstanceSource {
 public:
  FileSource(Hypergraph h, std::string label);
  long long size() const override;
  Hypergraph instance(long long index) const override;
  std::string scope() const override;

 private:
  Hypergraph h_;
  std::string label_;
};

struct WitnessEntry {
  long long index = 0;
  std::string hg;  // the instance in .hg form, replayable in isolation
  int n = 0, m = 0, r = 0;
  std::string reason;
  long long z = -1, zprime = -1, q = -1;
};

struct Report {
  std::string claim;
  std::string scope;
  long long instances = 0;
  long long pass_count = 0;
  long long vacuous = 0;
  long long not_applicable = 0;
  long long exception_total = 0;
  long long counterexample_total = 0;
  std::vector<WitnessEntry> exceptions;        // capped at witness_cap
  std::vector<WitnessEntry> counterexamples;   // capped at witness_cap
  double seconds = 0;
};

struct SuiteConfig {
  Claim claim = Claim::main_theorem;
  int jobs = 1;
  long long witness_cap = 1000;
};

// Splits [0, size) into one contiguous chunk per worker; aggregation merges
// chunk results in index order, so the report is independent of the worker
// count. Witness lists are truncated to the cap after merging.
Report run_suite(const SuiteConfig& config, const InstanceSource& source);

// Stable field order; "seconds" is emitted only when with_timing is set so
// that default reports are byte-comparable across runs and worker counts.
std::string report_to_json(const Report& report, bool with_timing = false,
                           int indent = 2);

}  // namespace versal

#endif  // VERSAL_VERIFIER_HPP
