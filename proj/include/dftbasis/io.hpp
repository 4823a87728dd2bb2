#pragma once

// JSON and CSV documents emitted by the command-line tool. Complex matrices are
// stored as separate real and imaginary arrays; doubles are written in
// shortest round-trip form so parsing a document back is bit-exact.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dftbasis/cyclotomic.hpp"
#include "dftbasis/oscillator.hpp"
#include "dftbasis/verify.hpp"

namespace dftbasis::io {

inline constexpr std::string_view kToolVersion = "0.1.0";

enum class Format { Json, Csv };

// Accepts "json" or "csv"; std::nullopt otherwise.
std::optional<Format> parse_format(std::string_view name);

// Shortest decimal that parses back to the same double.
std::string format_double(double v);

struct BasisDocument {
  Residue p = 0;
  Residue generator = 0;
  std::string tool_version;
  CMatrix theta;  // column x is phi_x
  std::vector<cplx> dft_eigenvalues;
  std::vector<cplx> torus_eigenvalues;
};

BasisDocument to_document(const OscillatorBasis& basis);

std::string write_basis(const BasisDocument& doc, Format format);

// Throws std::runtime_error on malformed input.
BasisDocument read_basis(std::string_view text, Format format);

std::string write_reports(const std::vector<VerificationReport>& reports,
                          std::uint64_t seed, Format format);

struct BenchRow {
  Residue p = 0;
  Residue generator = 0;
  std::vector<double> build_basis_seconds;
  std::vector<double> projector_seconds;
};

double median(std::vector<double> values);

std::string write_bench(const std::vector<BenchRow>& rows, std::string_view backend,
                        Format format);

}  // namespace dftbasis::io
