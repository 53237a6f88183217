#pragma once

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include "alglift/io/json.hpp"

namespace alglift::cli {

using nlohmann::json;

enum class Status { Ok, NotIntegrable, Error };

inline const char* to_string(Status s) {
  switch (s) {
    case Status::Ok: return "ok";
    case Status::NotIntegrable: return "not-integrable";
    case Status::Error: return "error";
  }
  return "error";
}

inline const std::vector<std::string>& commands() {
  static const std::vector<std::string> all{"homology", "integrability", "lift-am", "lift-dr", "verify", "equivariant"};
  return all;
}

struct Job {
  std::string command;
  std::string input_path;
  std::optional<std::string> output_path;
  std::map<std::string, std::string> options;
};

struct Report {
  std::string command;
  Status status = Status::Error;
  json result = json::object();
  std::string error_code;
  std::string error_message;
  double timing_ms = 0;
};

inline int exit_code(const Report& r) {
  switch (r.status) {
    case Status::Ok: return 0;
    case Status::NotIntegrable: return 2;
    case Status::Error: return 1;
  }
  return 1;
}

/// Timing is left out unless asked for, so reports are byte-stable.
inline json to_json(const Report& r, bool with_timing = false) {
  json j = {{"command", r.command}, {"status", to_string(r.status)}};
  if (r.status == Status::Error)
    j["error"] = {{"code", r.error_code}, {"message", r.error_message}};
  else
    j["result"] = r.result;
  if (with_timing) j["timing_ms"] = r.timing_ms;
  return j;
}

inline std::string render(const Report& r, bool pretty, bool with_timing = false) {
  return to_json(r, with_timing).dump(pretty ? 2 : -1) + "\n";
}

// logging

enum class LogLevel { Quiet = 0, Error, Warn, Info, Debug };

inline LogLevel log_level() {
  const char* env = std::getenv("TOOL_LOG");
  if (!env) return LogLevel::Warn;
  std::string v = env;
  if (v == "quiet" || v == "off" || v == "0") return LogLevel::Quiet;
  if (v == "error" || v == "1") return LogLevel::Error;
  if (v == "warn" || v == "2") return LogLevel::Warn;
  if (v == "info" || v == "3") return LogLevel::Info;
  if (v == "debug" || v == "4") return LogLevel::Debug;
  return LogLevel::Warn;
}

inline void log(LogLevel level, const std::string& msg) {
  static const char* names[] = {"", "error", "warn", "info", "debug"};
  if (level <= log_level()) std::cerr << "[" << names[static_cast<int>(level)] << "] " << msg << "\n";
}

// commands

namespace detail {

inline json homology_command(const json& in) {
  ChainComplex c = io::decode_complex(in.contains("complex") ? in["complex"] : in);
  json degrees = json::array();
  json betti = json::array();
  long euler = 0;
  for (const auto& h : homology_all(c)) {
    degrees.push_back(io::encode(h));
    betti.push_back(h.betti);
    euler += (h.degree % 2 ? -1L : 1L) * static_cast<long>(h.betti);
  }
  return {{"dims", c.dims()}, {"betti", betti}, {"euler_characteristic", euler}, {"homology", degrees}};
}

inline json integrability_command(const json& in, Status& status) {
  AlgebroidPresentation p = io::decode_presentation(in);
  MonodromyReport m = is_integrable(p);
  log(LogLevel::Info, "free rank " + std::to_string(m.free_rank) + ", real span " + std::to_string(m.real_span_dim));
  if (!m.discrete) status = Status::NotIntegrable;
  json out = io::encode(m, p.symbols());
  out["symbols"] = io::encode(p.symbols());
  return out;
}

inline json lift_command(const json& in, LiftKind kind) {
  AlgebroidPresentation p = io::decode_presentation(in);
  LiftResult lr = kind == LiftKind::AlmeidaMolino ? almeida_molino_lift(p) : derham_lift(p);
  if (!verify_lift(lr)) throw Error(ErrorCode::VerificationFailed, "constructed lift failed verification");
  return io::encode(lr);
}

/*
 * Either a lift report (as written by lift-am / lift-dr) or a bare morphism
 * {"base", "total", "fiber_map"}.
 */
inline json verify_command(const json& in) {
  const json& body = in.contains("result") && in["result"].is_object() ? in["result"] : in;
  json out;
  bool ok;
  if (body.contains("construction")) {
    LiftResult lr = io::decode_lift(body);
    bool functorial = verify_morphism_functoriality(lr.total, lr.base, lr.fiber_map);
    ok = verify_lift(lr);
    out = {{"functorial", functorial}, {"lift_verified", ok}};
  } else {
    AlgebroidPresentation base = io::decode_presentation(io::require(body, "base"));
    AlgebroidPresentation total = io::decode_presentation(io::require(body, "total"));
    KMatrix f = io::decode_kmatrix(io::require(body, "fiber_map"), base.symbols(), total.ell());
    ok = verify_morphism_functoriality(total, base, f);
    out = {{"functorial", ok}};
  }
  if (!ok) throw Error(ErrorCode::VerificationFailed, "morphism does not intertwine the periods");
  return out;
}

inline json equivariant_command(const json& in) {
  GroupAction a = io::decode_group_action(in);
  SymbolBasis symbols = io::decode_symbols(in);
  FormSubspace e = io::decode_forms(in, a.complex(), symbols);
  HomologyResult h = homology(a.complex(), 2);
  EquivariantCertificate cert = equivariant_derham_certificate(a, e, h);
  bool equivariant = check_equivariance(a, e, cert.theta);
  json out = io::encode(cert.report, symbols);
  out["assumptions"] = true;
  out["periods"] = io::encode(cert.periods, symbols);
  out["theta"] = io::encode(cert.theta.values, symbols);
  out["theta_equivariant"] = equivariant;
  out["group_order"] = a.order();
  out["symbols"] = io::encode(symbols);
  return out;
}

}  // namespace detail

/// Runs a command on an already parsed input document.
inline Report run_json(const std::string& command, const json& input) {
  Report r;
  r.command = command;
  r.status = Status::Ok;
  auto start = std::chrono::steady_clock::now();
  try {
    if (command == "homology")
      r.result = detail::homology_command(input);
    else if (command == "integrability")
      r.result = detail::integrability_command(input, r.status);
    else if (command == "lift-am")
      r.result = detail::lift_command(input, LiftKind::AlmeidaMolino);
    else if (command == "lift-dr")
      r.result = detail::lift_command(input, LiftKind::DeRham);
    else if (command == "verify")
      r.result = detail::verify_command(input);
    else if (command == "equivariant")
      r.result = detail::equivariant_command(input);
    else
      throw Error(ErrorCode::SchemaError, "unknown command '" + command + "'");
  } catch (const Error& e) {
    r.status = Status::Error;
    r.error_code = std::string(to_string(e.code()));
    r.error_message = e.what();
  } catch (const json::exception& e) {
    r.status = Status::Error;
    r.error_code = std::string(to_string(ErrorCode::SchemaError));
    r.error_message = e.what();
  }
  if (r.status == Status::NotIntegrable && command != "integrability") r.status = Status::Ok;
  if (r.status == Status::Error) log(LogLevel::Error, r.error_code + ": " + r.error_message);
  r.timing_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  log(LogLevel::Info, command + " took " + std::to_string(r.timing_ms) + " ms");
  return r;
}

inline Report error_report(const std::string& command, ErrorCode code, const std::string& message) {
  Report r;
  r.command = command;
  r.error_code = std::string(to_string(code));
  r.error_message = message;
  log(LogLevel::Error, r.error_code + ": " + message);
  return r;
}

inline Report run(const Job& job) {
  log(LogLevel::Debug, "reading " + job.input_path);
  std::ifstream file(job.input_path, std::ios::binary);
  if (!file) return error_report(job.command, ErrorCode::IoError, "cannot open '" + job.input_path + "'");
  std::stringstream buffer;
  buffer << file.rdbuf();
  json input;
  try {
    input = json::parse(buffer.str());
  } catch (const json::parse_error& e) {
    return error_report(job.command, ErrorCode::ParseError, e.what());
  }
  return run_json(job.command, input);
}

}  // namespace alglift::cli
