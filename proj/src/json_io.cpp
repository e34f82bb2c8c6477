#include "snest/json_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "snest/error.hpp"

namespace snest {

namespace {

using nlohmann::json;

void write_matrix(std::ostream& os, const ComplexMatrix& m) {
  os << '[';
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    if (i) os << ',';
    os << '[';
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (j) os << ',';
      os << '[' << format_double(m(i, j).real()) << ',' << format_double(m(i, j).imag()) << ']';
    }
    os << ']';
  }
  os << ']';
}

ComplexMatrix read_matrix(const json& j, Eigen::Index n, const char* what) {
  if (!j.is_array() || Eigen::Index(j.size()) != n) {
    throw Error(ErrorKind::dimension_mismatch,
                std::string(what) + ": expected " + std::to_string(n) + " rows");
  }
  ComplexMatrix m(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const json& row = j[std::size_t(i)];
    if (!row.is_array() || Eigen::Index(row.size()) != n) {
      throw Error(ErrorKind::dimension_mismatch,
                  std::string(what) + ": row " + std::to_string(i) + " has wrong length");
    }
    for (Eigen::Index k = 0; k < n; ++k) {
      const json& e = row[std::size_t(k)];
      if (!e.is_array() || e.size() != 2) {
        throw Error(ErrorKind::parse_error, std::string(what) + ": entries must be [re, im]");
      }
      m(i, k) = Complex(e[0].get<double>(), e[1].get<double>());
    }
  }
  return m;
}

json parse_or_throw(std::string_view text, const char* what) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::parse_error, std::string(what) + ": " + e.what());
  }
}

}  // namespace

std::string format_double(double v) {
  if (!std::isfinite(v)) return "null";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_state_json(std::ostream& os, int dA, int dB, const ComplexMatrix& mat) {
  os << "{\"dA\":" << dA << ",\"dB\":" << dB << ",\"matrix\":";
  write_matrix(os, mat);
  os << "}\n";
}

void write_state_json(std::ostream& os, const DensityMatrix& rho) {
  write_state_json(os, rho.dA(), rho.dB(), rho.matrix());
}

RawState parse_state_json(std::string_view text) {
  const json j = parse_or_throw(text, "state file");
  try {
    RawState s;
    s.dA = j.at("dA").get<int>();
    s.dB = j.at("dB").get<int>();
    if (s.dA < 1 || s.dB < 1) throw Error(ErrorKind::parse_error, "state file: dA, dB must be >= 1");
    s.matrix = read_matrix(j.at("matrix"), Eigen::Index(s.dA) * s.dB, "state matrix");
    return s;
  } catch (const json::exception& e) {
    throw Error(ErrorKind::parse_error, std::string("state file: ") + e.what());
  }
}

RawState load_state_file(const std::filesystem::path& path) {
  return parse_state_json(read_text_file(path));
}

void write_povm_json(std::ostream& os, const SymmetricPovm& p) {
  os << "{\"d\":" << p.d() << ",\"N\":" << p.N() << ",\"M\":" << p.M()
     << ",\"t\":" << format_double(p.t()) << ",\"x\":" << format_double(p.x())
     << ",\"effects\":[";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) os << ',';
    write_matrix(os, p.effects()[i]);
  }
  os << "]}\n";
}

SymmetricPovm parse_povm_json(std::string_view text) {
  const json j = parse_or_throw(text, "POVM file");
  try {
    const int d = j.at("d").get<int>();
    const int N = j.at("N").get<int>();
    const int M = j.at("M").get<int>();
    const json& t = j.at("t");
    const double x = j.at("x").get<double>();
    const json& eff = j.at("effects");
    if (d < 1 || !eff.is_array()) throw Error(ErrorKind::parse_error, "POVM file: bad header");
    std::vector<ComplexMatrix> effects;
    for (const auto& e : eff) effects.push_back(read_matrix(e, d, "POVM effect"));
    return SymmetricPovm(d, N, M, t.is_null() ? std::nan("") : t.get<double>(), x,
                         std::move(effects));
  } catch (const json::exception& e) {
    throw Error(ErrorKind::parse_error, std::string("POVM file: ") + e.what());
  }
}

SymmetricPovm load_povm_file(const std::filesystem::path& path) {
  return parse_povm_json(read_text_file(path));
}

void write_report_json(std::ostream& os, const CriterionReport& rep) {
  const auto& c = rep.constants;
  os << "{\n"
     << "  \"trace_norm\": " << format_double(rep.trace_norm) << ",\n"
     << "  \"constants\": {\"K\": " << format_double(c.K) << ", \"L\": " << format_double(c.L)
     << ", \"R\": " << format_double(c.R) << ", \"dA\": " << c.a.d << ", \"MA\": " << c.a.M
     << ", \"xA\": " << format_double(c.a.x) << ", \"dB\": " << c.b.d << ", \"MB\": " << c.b.M
     << ", \"xB\": " << format_double(c.b.x) << "},\n"
     << "  \"separability_bound\": " << format_double(rep.separability_bound) << ",\n"
     << "  \"sn_real_lb\": " << format_double(rep.sn_real_lb) << ",\n"
     << "  \"sn_int_lb\": " << rep.sn_int_lb << ",\n"
     << "  \"entangled\": " << (rep.entangled ? "true" : "false") << ",\n"
     << "  \"concurrence_lb\": " << format_double(rep.concurrence_lb) << ",\n"
     << "  \"baselines\": {";
  bool first = true;
  for (const auto& [name, value] : rep.baselines) {
    os << (first ? "" : ", ") << '"' << name << "\": " << format_double(value);
    first = false;
  }
  os << "}\n}\n";
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::parse_error, "cannot open " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace snest
