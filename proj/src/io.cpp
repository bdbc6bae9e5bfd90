#include "groverian/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <set>

#include "json.hpp"

namespace groverian::io {

namespace {

void require_keys(const FamilySpec& spec, std::set<std::string> allowed) {
  for (const auto& [key, value] : spec.params) {
    if (!allowed.count(key)) {
      throw InvalidArgument("family '" + spec.name + "': unknown parameter '" + key + "'");
    }
  }
}

}  // namespace

int FamilySpec::get_int(const std::string& key) const {
  const auto it = params.find(key);
  if (it == params.end()) throw InvalidArgument("family '" + name + "': missing parameter '" + key + "'");
  try {
    std::size_t used = 0;
    const long long v = std::stoll(it->second, &used);
    if (used != it->second.size()) throw std::invalid_argument("trailing");
    if (v < -(1LL << 31) || v > (1LL << 31)) throw std::out_of_range("int");
    return static_cast<int>(v);
  } catch (const std::logic_error&) {
    throw InvalidArgument("family '" + name + "': parameter '" + key + "' is not an integer: '" +
                          it->second + "'");
  }
}

double FamilySpec::get_double(const std::string& key) const {
  const auto it = params.find(key);
  if (it == params.end()) throw InvalidArgument("family '" + name + "': missing parameter '" + key + "'");
  try {
    std::size_t used = 0;
    const double v = std::stod(it->second, &used);
    if (used != it->second.size()) throw std::invalid_argument("trailing");
    return v;
  } catch (const std::logic_error&) {
    throw InvalidArgument("family '" + name + "': parameter '" + key + "' is not a number: '" +
                          it->second + "'");
  }
}

FamilySpec parse_family(const std::string& text) {
  FamilySpec spec;
  const auto colon = text.find(':');
  spec.name = text.substr(0, colon);
  if (spec.name.empty()) throw InvalidArgument("family: empty name in '" + text + "'");
  if (colon == std::string::npos) return spec;

  const std::string rest = text.substr(colon + 1);
  std::size_t pos = 0;
  bool first = true;
  while (pos <= rest.size()) {
    const auto comma = rest.find(',', pos);
    const std::string item = rest.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    if (item.empty()) throw InvalidArgument("family: empty item in '" + text + "'");
    const auto eq = item.find('=');
    std::string key, value;
    if (eq == std::string::npos) {
      if (!first) throw InvalidArgument("family: expected key=value, got '" + item + "'");
      key = "n";
      value = item;
    } else {
      key = item.substr(0, eq);
      value = item.substr(eq + 1);
      if (key.empty() || value.empty()) throw InvalidArgument("family: malformed item '" + item + "'");
    }
    if (!spec.params.emplace(key, value).second) {
      throw InvalidArgument("family: duplicate parameter '" + key + "'");
    }
    first = false;
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return spec;
}

PureState make_family(const FamilySpec& spec) {
  const std::string& f = spec.name;
  if (f == "ghz") {
    require_keys(spec, {"n"});
    return make_ghz(spec.get_int("n"));
  }
  if (f == "gghz") {
    require_keys(spec, {"n", "a", "a2"});
    if (spec.has("a") == spec.has("a2")) {
      throw InvalidArgument("family 'gghz': give exactly one of a= or a2=");
    }
    double a = 0.0;
    if (spec.has("a")) {
      a = spec.get_double("a");
    } else {
      const double a2 = spec.get_double("a2");
      if (!(a2 >= 0.0 && a2 <= 1.0)) throw InvalidArgument("family 'gghz': a2 must be in [0, 1]");
      a = std::sqrt(a2);
    }
    return make_gghz(spec.get_int("n"), a);
  }
  if (f == "w") {
    require_keys(spec, {"n"});
    return make_w(spec.get_int("n"));
  }
  if (f == "dicke") {
    require_keys(spec, {"n", "k"});
    return make_dicke(spec.get_int("n"), spec.get_int("k"));
  }
  if (f == "basis") {
    require_keys(spec, {"n", "x"});
    const int x = spec.get_int("x");
    if (x < 0) throw InvalidArgument("family 'basis': x must be >= 0");
    return make_basis(spec.get_int("n"), static_cast<std::size_t>(x));
  }
  if (f == "uniform") {
    require_keys(spec, {"n"});
    return make_uniform(spec.get_int("n"));
  }
  throw InvalidArgument("unknown family '" + f + "'");
}

PureState read_state_json(std::istream& in, bool normalize) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("state file: malformed JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("amplitudes")) {
    throw InvalidArgument("state file: expected an object with 'n' and 'amplitudes'");
  }
  if (!doc["n"].is_number_integer()) throw InvalidArgument("state file: 'n' must be an integer");
  const int n = doc["n"].get<int>();
  if (n < 1 || n > 30) throw InvalidArgument("state file: 'n' must be in [1, 30]");
  const auto& arr = doc["amplitudes"];
  if (!arr.is_array()) throw InvalidArgument("state file: 'amplitudes' must be an array");
  if (arr.size() != (std::size_t{1} << n)) {
    throw InvalidArgument("state file: expected " + std::to_string(std::size_t{1} << n) +
                          " amplitudes, got " + std::to_string(arr.size()));
  }
  std::vector<Complex> amps;
  amps.reserve(arr.size());
  for (const auto& pair : arr) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() || !pair[1].is_number()) {
      throw InvalidArgument("state file: each amplitude must be [re, im]");
    }
    amps.emplace_back(pair[0].get<double>(), pair[1].get<double>());
  }
  // validate at file tolerance, then rescale so the in-memory state meets
  // the tighter construction tolerance
  PureState checked(n, std::move(amps), normalize, kFileNormTolerance);
  if (std::abs(checked.squared_norm() - 1.0) <= kConstructionNormTolerance) return checked;
  return PureState(n, {checked.amplitudes().begin(), checked.amplitudes().end()}, true);
}

PureState read_state_file(const std::string& path, bool normalize) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open state file '" + path + "'");
  return read_state_json(in, normalize);
}

void write_state_json(std::ostream& out, const PureState& psi) {
  nlohmann::json doc;
  doc["n"] = psi.n_qubits();
  auto& arr = doc["amplitudes"] = nlohmann::json::array();
  for (const auto& a : psi.amplitudes()) arr.push_back({a.real(), a.imag()});
  out << doc.dump() << '\n';
}

std::string format_sig12(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%#.12g", value);
  return buf;
}

double round_sig12(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return std::strtod(buf, nullptr);
}

void write_trace_csv(std::ostream& out, const std::vector<grover::TraceRow>& rows) {
  out << kTraceCsvHeader << '\n';
  for (const auto& r : rows) {
    out << r.iteration << ',' << format_sig12(r.success_probability) << ','
        << format_sig12(r.pmax) << ',' << format_sig12(r.groverian) << '\n';
  }
}

void write_trace_csv_file(const std::string& path, const std::vector<grover::TraceRow>& rows) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  write_trace_csv(out, rows);
  out.flush();
  if (!out) throw IoError("failed writing '" + path + "'");
}

}  // namespace groverian::io
