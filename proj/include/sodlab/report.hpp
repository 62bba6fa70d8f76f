#ifndef SODLAB_REPORT_HPP
#define SODLAB_REPORT_HPP

#include <string>
#include <vector>

#include "json.hpp"
#include "sodlab/assembler.hpp"
#include "sodlab/cyclic.hpp"
#include "sodlab/idealcheck.hpp"
#include "sodlab/ledger.hpp"

namespace sodlab {

using Json = nlohmann::ordered_json;

enum class OutputFormat { Json, Text };

Json to_json(const GenericityReport& report);
Json to_json(const DecompReport& report);
Json to_json(const LedgerVerdict& verdict);
Json to_json(const CyclicProjectiveReport& report);
Json to_json(const std::vector<CyclicPiece>& pieces);
Json to_json(const CurveDecomposition& decomposition);

std::string to_text(const GenericityReport& report);
std::string to_text(const DecompReport& report);
std::string to_text(const LedgerVerdict& verdict);
std::string to_text(const CyclicProjectiveReport& report);
std::string to_text(const std::vector<CyclicPiece>& pieces);
std::string to_text(const CurveDecomposition& decomposition);

/// Left-aligned columns separated by two spaces.
std::string format_table(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows);

}  // namespace sodlab

#endif  // SODLAB_REPORT_HPP
