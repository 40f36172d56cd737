#pragma once

// Machine checks of the identities satisfied by W_X on a concrete digraph.
// Every check compares exact expansions; failures carry both sides.

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rbnc/digraph.hpp"

namespace rbnc {

enum class CheckStatus { Pass, Fail, Skipped };

std::string_view to_string(CheckStatus status);

struct VerificationReport {
  std::string check;
  std::string instance;
  CheckStatus status = CheckStatus::Skipped;
  /// Witness on failure (never empty), reason when skipped, otherwise empty.
  std::string detail;

  bool passed() const noexcept { return status == CheckStatus::Pass; }
  bool failed() const noexcept { return status == CheckStatus::Fail; }
};

struct VerifyOptions {
  /// Label used in reports; describe(x) when empty.
  std::string instance;
  /// Right-hand factors for the product check. Empty means D_1, P_2, C_3.
  std::vector<Digraph> product_partners;
  /// subset-decomposition sums over 2^|E| subgraphs.
  int max_subset_edges = 10;
  /// counting-lemma visits n^n colorings times 3^|E| subset pairs.
  int max_lemma_edges = 10;
  int max_lemma_vertices = 4;
};

/// Names accepted by check_identities, in execution order.
const std::vector<std::string>& check_names();

/// Runs the named checks ("all" expands to every check). Throws
/// PreconditionError on an unknown name.
std::vector<VerificationReport> check_identities(const Digraph& x, std::span<const std::string> checks,
                                                 const VerifyOptions& options = {});

/// W_{X·Y} == W_X · W_Y.
VerificationReport check_product(const Digraph& x, const Digraph& y, const std::string& instance = "");

/// W_X == W_{X∖e} − W_{X/e}↑ after relabeling e to (v_{n-1}, v_n).
VerificationReport check_deletion_contraction_at(const Digraph& x, Edge e, const std::string& instance = "");

}  // namespace rbnc
