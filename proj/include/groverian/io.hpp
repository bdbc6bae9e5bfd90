#pragma once

#include <iosfwd>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "groverian/grover.hpp"
#include "groverian/state.hpp"

namespace groverian::io {

/// File could not be opened, read, or written.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parsed "name:key=value,..." family description. A leading bare value
/// (as in "ghz:3") is stored under "n".
struct FamilySpec {
  std::string name;
  std::map<std::string, std::string> params;

  bool has(const std::string& key) const { return params.count(key) != 0; }
  int get_int(const std::string& key) const;
  double get_double(const std::string& key) const;
};

FamilySpec parse_family(const std::string& text);

/// Builds the named state: ghz:n, gghz:n,a=..|a2=.., w:n, dicke:n,k=..,
/// basis:n,x=.., uniform:n.
PureState make_family(const FamilySpec& spec);

/// {"n": <int>, "amplitudes": [[re, im], ...]} with 2^n entries.
/// Malformed JSON or a wrong length raises InvalidArgument; a squared norm
/// off by more than 1e-8 raises NormalizationError unless `normalize` is set.
PureState read_state_json(std::istream& in, bool normalize = false);
PureState read_state_file(const std::string& path, bool normalize = false);
void write_state_json(std::ostream& out, const PureState& psi);

inline constexpr double kFileNormTolerance = 1e-8;

/// printf("%#.12g"): 12 significant digits with trailing zeros kept.
std::string format_sig12(double value);
/// value rounded to 12 significant digits.
double round_sig12(double value);

inline constexpr const char* kTraceCsvHeader = "iteration,success_probability,pmax,groverian";

void write_trace_csv(std::ostream& out, const std::vector<grover::TraceRow>& rows);
void write_trace_csv_file(const std::string& path, const std::vector<grover::TraceRow>& rows);

}  // namespace groverian::io
