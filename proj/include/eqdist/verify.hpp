#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "eqdist/exact.hpp"
#include "eqdist/reductions.hpp"

namespace eqdist {

struct PropertyResult {
  std::string name;
  std::size_t cases = 0;
  std::size_t failed = 0;
  std::size_t inconclusive = 0;
  std::vector<std::string> failures;  // first few, human readable

  bool ok() const noexcept { return cases > 0 && failed == 0 && inconclusive == 0; }
  void fail(std::string what);
};

struct VerifyOptions {
  std::size_t count = 50;     // random graphs per suite
  std::uint64_t seed = 1;
  std::size_t max_n = 7;
  ExactOptions exact;
  unsigned threads = 0;
};

/// Random connected non-split graphs with 4 <= n <= max_n (deterministic in seed).
std::vector<Graph> random_nonsplit_corpus(std::size_t count, std::size_t max_n, std::uint64_t seed);
/// Random connected graphs with 2 <= n <= max_n.
std::vector<Graph> random_connected_corpus(std::size_t count, std::size_t max_n, std::uint64_t seed);

/// Odd (t = 3, 5), even (t = 2, 4) and join identities over a random non-split
/// corpus. Every individual check is appended to `reports` when non-null.
std::vector<PropertyResult> verify_gadgets(const VerifyOptions& opt, std::vector<ReductionReport>* reports = nullptr);
/// Gadget identities on a caller-supplied corpus.
std::vector<PropertyResult> verify_gadgets(const std::vector<Graph>& corpus, const VerifyOptions& opt,
                                           std::vector<ReductionReport>* reports = nullptr);

/// Chain inequality, diameter equality, eq_1 = omega, and witness validity.
std::vector<PropertyResult> verify_relations(const VerifyOptions& opt);

/// Closed-form t = 3 and t = 4 ratio bounds against exact values on J(n,3), n = 7..12, and J(n,4), n = 9..12.
std::vector<PropertyResult> verify_johnson(const VerifyOptions& opt);

/// Every applicable bound >= the exact value, over named graphs and random graphs.
std::vector<PropertyResult> verify_soundness(const VerifyOptions& opt);

/// Runs one suite ("gadgets", "relations", "johnson", "soundness" or "all"),
/// writes JSON lines to out, returns 0 when everything passed, 2 otherwise.
int cmd_verify(const std::string& which, const VerifyOptions& opt, std::ostream& out);

}  // namespace eqdist
