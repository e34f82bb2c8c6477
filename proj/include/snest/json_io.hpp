#pragma once

// JSON formats:
//   state:  {"dA":2,"dB":4,"matrix":[[[re,im],...],...]}          row-major
//   POVM:   {"d":..,"N":..,"M":..,"t":..,"x":..,"effects":[matrix,...]}
//           each effect uses the state's matrix layout, alpha-major order
//   report: every CriterionReport field, baselines keyed by name
// Writers emit 17 significant digits.

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include "snest/criteria.hpp"
#include "snest/povm.hpp"
#include "snest/states.hpp"

namespace snest {

std::string format_double(double v);

struct RawState {
  int dA = 0;
  int dB = 0;
  ComplexMatrix matrix;
};

void write_state_json(std::ostream& os, int dA, int dB, const ComplexMatrix& mat);
void write_state_json(std::ostream& os, const DensityMatrix& rho);

/// Parses without validating the density-matrix invariants.
RawState parse_state_json(std::string_view text);
RawState load_state_file(const std::filesystem::path& path);

void write_povm_json(std::ostream& os, const SymmetricPovm& p);
SymmetricPovm parse_povm_json(std::string_view text);
SymmetricPovm load_povm_file(const std::filesystem::path& path);

void write_report_json(std::ostream& os, const CriterionReport& rep);

std::string read_text_file(const std::filesystem::path& path);

}  // namespace snest
