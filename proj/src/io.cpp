#include "hypower/io.hpp"

#include <cstdio>
#include <sstream>

#include <json.hpp>

namespace hypower {

namespace {

// Reads all whitespace-separated numeric tokens, comments stripped.
std::vector<double> numeric_tokens(std::string_view text) {
  std::vector<double> out;
  std::istringstream all{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(all, line)) {
    ++line_no;
    if (size_t hash = line.find('#'); hash != std::string::npos)
      line = line.substr(0, hash);
    std::istringstream iss{line};
    std::string tok;
    while (iss >> tok) {
      try {
        size_t used = 0;
        double v = std::stod(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        out.push_back(v);
      } catch (const std::exception&) {
        throw ParseError("line " + std::to_string(line_no) +
                         ": expected number, got '" + tok + "'");
      }
    }
  }
  return out;
}

double clean(double v) { return v == 0.0 ? 0.0 : v; }

nlohmann::json rounded(double v) {
  // Round-trip through the 12-digit text form so JSON and text output agree.
  return std::stod(format_number(v));
}

}  // namespace

std::string format_number(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", clean(v));
  return buf;
}

EigenpairFile read_eigenpair(std::string_view text) {
  auto nums = numeric_tokens(text);
  if (nums.size() < 4)
    throw ParseError("eigenpair file: expected 'k n_total', lambda, entries");
  int k = static_cast<int>(nums[0]);
  int n_total = static_cast<int>(nums[1]);
  if (k < 3 || n_total < 1)
    throw ParseError("eigenpair file: bad header values");
  if (nums.size() != 4 + 2 * static_cast<size_t>(n_total))
    throw ParseError("eigenpair file: expected " + std::to_string(n_total) +
                     " coordinate lines");
  EigenpairFile out;
  out.k = k;
  out.pair.lambda = Complex{nums[2], nums[3]};
  for (int i = 0; i < n_total; ++i)
    out.pair.x.push_back(Complex{nums[4 + 2 * i], nums[5 + 2 * i]});
  return out;
}

std::string write_eigenpair(int k, const TensorEigenpair& pair) {
  std::ostringstream out;
  out << k << " " << pair.x.size() << "\n";
  out << format_number(pair.lambda.real()) << " "
      << format_number(pair.lambda.imag()) << "\n";
  for (Complex v : pair.x)
    out << format_number(v.real()) << " " << format_number(v.imag()) << "\n";
  return out.str();
}

std::string report_to_json(const SpectrumReport& report) {
  nlohmann::ordered_json j;
  j["k"] = report.k;
  j["n"] = report.graph.n;
  j["m"] = report.graph.m();
  j["totalVertices"] = report.total_vertices;
  j["entries"] = nlohmann::ordered_json::array();
  for (const auto& e : report.entries) {
    nlohmann::ordered_json je;
    je["lambda"] = {{"re", rounded(e.lambda.real())},
                    {"im", rounded(e.lambda.imag())}};
    je["canonical"] = e.canonical;
    je["beta"] = rounded(e.beta);
    je["residual"] = rounded(e.residual);
    nlohmann::ordered_json prov;
    prov["vertices"] = e.provenance.vertices;
    prov["edges"] = nlohmann::ordered_json::array();
    for (const auto& ed : e.provenance.edges)
      prov["edges"].push_back({ed[0], ed[1], ed[2]});
    je["provenance"] = std::move(prov);
    je["statement1Only"] = e.statement1_only;
    j["entries"].push_back(std::move(je));
  }
  return j.dump(2) + "\n";
}

std::string report_to_text(const SpectrumReport& report) {
  std::ostringstream out;
  out << "k = " << report.k << ", n = " << report.graph.n << ", m = "
      << report.graph.m() << ", |V(G^(k))| = " << report.total_vertices << "\n";
  out << report.entries.size() << " distinct eigenvalues\n";
  for (const auto& e : report.entries) {
    out << "  lambda = " << format_number(e.lambda.real());
    if (e.lambda.imag() != 0.0)
      out << (e.lambda.imag() > 0 ? " + " : " - ")
          << format_number(std::abs(e.lambda.imag())) << "i";
    out << (e.canonical ? "  [canonical]" : "")
        << (e.statement1_only ? " [signed-only]" : "") << "  beta = "
        << format_number(e.beta) << "  residual = " << format_number(e.residual)
        << "\n    from {";
    for (size_t i = 0; i < e.provenance.edges.size(); ++i) {
      const auto& ed = e.provenance.edges[i];
      out << (i ? ", " : "") << (ed[2] < 0 ? "-" : "+") << "{" << ed[0] << ","
          << ed[1] << "}";
    }
    if (e.provenance.edges.empty()) {
      out << "K1 on";
      for (int v : e.provenance.vertices) out << " " << v;
    }
    out << "}\n";
  }
  return out.str();
}

}  // namespace hypower
