#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "softdx/fuzzify.hpp"

namespace softdx {

// A published membership value (two-decimal print) for one table cell.
struct PrintedMembership {
  std::string id;
  std::string variable;
  std::string term;
  std::string printed;  // as printed, e.g. "0.75"
  double value = 0.0;
};

struct MembershipDiscrepancy {
  PrintedMembership entry;
  double computed = 0.0;
};

inline constexpr double kPrintedTolerance = 0.01;

/// CSV with header `id,variable,term,printed`.
std::vector<PrintedMembership> load_printed_memberships(const std::filesystem::path& path);

/// Entries whose printed value differs from the computed membership by more
/// than `tolerance`, in fixture order. Unknown cells raise Error(Config).
std::vector<MembershipDiscrepancy> compare_printed(const FuzzyTable& table, std::span<const PrintedMembership> printed,
                                                   double tolerance = kPrintedTolerance);

/// Discrepancy list file: `id,variable,term,printed,computed`.
std::string format_discrepancies(std::span<const MembershipDiscrepancy> list);
std::vector<PrintedMembership> load_discrepancy_keys(const std::filesystem::path& path);

}  // namespace softdx
