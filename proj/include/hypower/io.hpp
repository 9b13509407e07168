#pragma once

#include <string>
#include <string_view>

#include "hypower/hypergraph.hpp"
#include "hypower/spectrum.hpp"

namespace hypower {

// Eigenpair file: header "k n_total", then "lambda_re lambda_im", then
// n_total lines "re im". '#' comments allowed.
struct EigenpairFile {
  int k = 0;
  TensorEigenpair pair;
};

EigenpairFile read_eigenpair(std::string_view text);
std::string write_eigenpair(int k, const TensorEigenpair& pair);

// 12 significant digits, -0.0 normalized to 0.
std::string format_number(double v);

std::string report_to_json(const SpectrumReport& report);
std::string report_to_text(const SpectrumReport& report);

}  // namespace hypower
