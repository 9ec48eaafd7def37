#include "softdx/reference.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "softdx/error.hpp"

namespace softdx {
namespace {

std::vector<std::vector<std::string>> read_rows(const std::filesystem::path& path, std::size_t min_fields) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Io, "cannot open '" + path.string() + "'");
  std::vector<std::vector<std::string>> rows;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (lineno == 1) continue;  // header
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string f;
    while (std::getline(ss, f, ',')) fields.push_back(f);
    if (fields.size() < min_fields)
      throw Error(ErrorKind::Parse, path.string() + ":" + std::to_string(lineno) + ": expected " +
                                        std::to_string(min_fields) + " fields");
    rows.push_back(std::move(fields));
  }
  return rows;
}

PrintedMembership to_entry(const std::vector<std::string>& f, const std::filesystem::path& path) {
  PrintedMembership e{f[0], f[1], f[2], f[3], 0.0};
  try {
    std::size_t used = 0;
    e.value = std::stod(e.printed, &used);
    if (used != e.printed.size()) throw std::invalid_argument("trailing");
  } catch (const std::exception&) {
    throw Error(ErrorKind::Parse, path.string() + ": printed value '" + e.printed + "' is not a number");
  }
  return e;
}

}  // namespace

std::vector<PrintedMembership> load_printed_memberships(const std::filesystem::path& path) {
  std::vector<PrintedMembership> out;
  for (const auto& f : read_rows(path, 4)) out.push_back(to_entry(f, path));
  return out;
}

std::vector<MembershipDiscrepancy> compare_printed(const FuzzyTable& table, std::span<const PrintedMembership> printed,
                                                   double tolerance) {
  // slack absorbs binary representation of the printed decimal
  constexpr double kSlack = 1e-9;
  std::vector<MembershipDiscrepancy> out;
  for (const auto& e : printed) {
    const double computed = table.at(e.id, e.variable, e.term);
    if (std::abs(computed - e.value) > tolerance + kSlack) out.push_back({e, computed});
  }
  return out;
}

std::string format_discrepancies(std::span<const MembershipDiscrepancy> list) {
  std::ostringstream out;
  out << "id,variable,term,printed,computed\n";
  out.setf(std::ios::fixed);
  out.precision(4);
  for (const auto& d : list)
    out << d.entry.id << ',' << d.entry.variable << ',' << d.entry.term << ',' << d.entry.printed << ',' << d.computed
        << '\n';
  return out.str();
}

std::vector<PrintedMembership> load_discrepancy_keys(const std::filesystem::path& path) {
  std::vector<PrintedMembership> out;
  for (const auto& f : read_rows(path, 4)) out.push_back(to_entry(f, path));
  return out;
}

}  // namespace softdx
