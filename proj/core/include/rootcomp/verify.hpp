#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <vector>

#include "rootcomp/gko.hpp"
#include "rootcomp/tensor.hpp"
#include "rootcomp/wahl.hpp"

namespace rootcomp {

// Outcome of one executable claim check. failures empty <=> pass; entries in
// `inconclusive` mark instances the truncation window could not decide (a
// first-class status distinct from failure).
struct VerificationReport {
  std::string claim;
  long long instances_checked = 0;

  struct Failure {
    std::string input;
    std::string expected;
    std::string got;
  };
  std::vector<Failure> failures;
  std::vector<std::string> inconclusive;
  std::vector<std::string> notes;

  std::chrono::milliseconds elapsed{0};
  std::string window;  // human-readable bound description

  bool passed() const { return failures.empty() && inconclusive.empty(); }
  // 0 pass, 1 hard failure, 3 inconclusive-only.
  int exit_status() const;
};

// Root-component sweep: every enumerated Wahl triple must give
// m_{lambda,mu}^{lambda+mu-beta} >= 1. Triples whose beta exceeds the depth
// window are reported inconclusive, never failed.
VerificationReport verify_theorem_main(std::shared_ptr<const CartanData> cd,
                                       long long max_level, long long max_k,
                                       long long coord_bound, long long depth,
                                       int parallelism = 1);

// Regenerates the exceptional-component table by exhaustive scan and compares
// it with the published rows (parameterized families instantiated at the
// given rank); A/D/E types must come out empty.
VerificationReport verify_table1(std::shared_ptr<const CartanData> cd);

// Checks the PRV component V(v.lambda + w.mu): the witness weight must be
// dominant (else an explicit precondition-unmet status) and the multiplicity
// must be >= 1.
VerificationReport verify_prv(std::shared_ptr<const CartanData> cd, const Weight& lambda,
                              const Weight& mu, const WeylWord& vword, const WeylWord& wword,
                              long long depth);

enum class WahlCaseKind {
  Imaginary,
  FinitePositive,
  NoDoubleDescent,
  MuPairingOne,
  UniqueDoubleDescent,
  Exceptional,
};

std::string wahl_case_name(WahlCaseKind k);

struct WahlCase {
  WahlCaseKind kind = WahlCaseKind::Imaginary;
  int descent_index = -1;     // UniqueDoubleDescent / Exceptional
  bool f_sets_equal = false;  // UniqueDoubleDescent: F_beta == F_{beta-alpha_i}
  std::optional<ExceptionalRow> table_row;
};

// Routes a Wahl triple to the case its existence proof goes through.
WahlCase classify_wahl_case(const CartanData& cd, const Weight& lambda, const Weight& mu,
                            const Root& beta);

// Dimension of the parabolic Hom space attached to (lambda, mu, theta, S) for
// S-regular lambda, mu: 0 unless theta = lambda+mu-beta with beta in
// Phi^+(S) u {0}; 1 for beta = 0; for real beta 1 iff S subset F_beta;
// l - |S| for imaginary beta.
long long hom_dim_prediction(const CartanData& cd, const Weight& lambda, const Weight& mu,
                             const Weight& theta, const IndexSet& s);

// Finds the delta-maximal components of V(lambda) (x) V(mu) in the window and
// checks the predicted multiplicity pattern of each delta-string against the
// computed table.
VerificationReport delta_series_report(std::shared_ptr<const CartanData> cd,
                                       const Weight& lambda, const Weight& mu,
                                       long long depth);

}  // namespace rootcomp
