// Command layer behind the m04 CLI. Every command returns a CommandResult;
// exceptions from the library become status=error with a diagnostic.

#pragma once

#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "m04/json_io.hpp"
#include "m04/verify.hpp"

namespace m04 {

struct CommandResult {
  bool ok = true;
  json payload;  // null when !ok
  std::vector<std::string> diagnostics;

  static CommandResult success(json payload) { return {true, std::move(payload), {}}; }
  static CommandResult failure(std::string message) { return {false, nullptr, {std::move(message)}}; }

  int exit_code() const { return ok ? 0 : 1; }
};

namespace detail {

inline CommandResult guarded(const std::function<json()>& body) {
  try {
    return CommandResult::success(body());
  } catch (const ParseError& e) {
    return CommandResult::failure(std::string("parse error: ") + e.what());
  } catch (const std::exception& e) {
    return CommandResult::failure(e.what());
  }
}

}  // namespace detail

inline CommandResult cmd_classify(const std::string& word_text) {
  return detail::guarded([&] { return classification_json(parse_word(word_text)); });
}

enum class RepKind { Universal, Skein, Geometric, GeometricTilde, Homology, Level };

inline std::optional<RepKind> parse_rep_kind(const std::string& s) {
  if (s == "universal") return RepKind::Universal;
  if (s == "skein") return RepKind::Skein;
  if (s == "geometric") return RepKind::Geometric;
  if (s == "geometric-tilde") return RepKind::GeometricTilde;
  if (s == "homology") return RepKind::Homology;
  if (s == "level") return RepKind::Level;
  return std::nullopt;
}

struct RepParams {
  std::optional<int> n;
  std::optional<int> k;
};

inline CommandResult cmd_rep(const std::string& kind_text, const std::string& word_text, const RepParams& params) {
  return detail::guarded([&]() -> json {
    const auto kind = parse_rep_kind(kind_text);
    if (!kind) throw std::invalid_argument("unknown representation kind '" + kind_text + "'");
    const MappingWord w = parse_word(word_text);
    json out{{"word", render(w)}, {"kind", kind_text}};
    switch (*kind) {
      case RepKind::Universal:
        out["matrix"] = matrix_json(universal_rep(w));
        break;
      case RepKind::Skein:
        out["matrix"] = matrix_json(skein_rep(w));
        break;
      case RepKind::Homology:
        out["matrix"] = matrix_json(homology_matrix(w));
        break;
      case RepKind::Geometric:
      case RepKind::GeometricTilde: {
        if (!params.n || !params.k) throw std::invalid_argument("geometric representation needs --n and --k");
        const QuantumLevel level(*params.n, *params.k);
        const auto g = *kind == RepKind::Geometric ? GeometricKind::Rescaled : GeometricKind::Tilde;
        out["n"] = level.n;
        out["k"] = level.k;
        out["matrix"] = matrix_json(geometric_rep(level, w, g));
        break;
      }
      case RepKind::Level: {
        if (!params.k) throw std::invalid_argument("level representation needs --k");
        const RootSchedulePoint root = root_schedule(*params.k);
        out["k"] = root.k;
        out["ell"] = root.ell;
        out["root"] = complex_json(root.value);
        out["matrix"] = matrix_json(level_matrix(w, root.k));
        break;
      }
    }
    return out;
  });
}

struct ConvergeOptions {
  int k_min = 10;
  int k_max = 2000;
  int step = 10;
  std::optional<std::string> output_path;
  std::ostream* csv_stream = nullptr;  // CSV to an already-open stream
};

inline CommandResult cmd_converge(const std::string& word_text, const ConvergeOptions& options) {
  return detail::guarded([&]() -> json {
    const MappingWord w = parse_word(word_text);
    if (options.k_min < 1) throw std::invalid_argument("k_min must be >= 1");
    const auto rows = trace_convergence(w, options.k_min, options.k_max, options.step);
    if (options.output_path) {
      std::ofstream file(*options.output_path);
      if (!file) throw std::runtime_error("cannot write " + *options.output_path);
      write_convergence_csv(file, rows);
      if (!file) throw std::runtime_error("write failed for " + *options.output_path);
    }
    if (options.csv_stream) write_convergence_csv(*options.csv_stream, rows);
    const NTClass c = nt_classify(w);
    return {{"word", render(w)},
            {"k_min", options.k_min},
            {"k_max", options.k_max},
            {"step", options.step},
            {"rows", rows.size()},
            {"first", convergence_row_json(rows.front())},
            {"last", convergence_row_json(rows.back())},
            {"homology_trace_abs", integer_json(c.trace_abs)},
            {"homology_stretch", float_json(c.stretch)},
            {"output", options.output_path ? json(*options.output_path) : json(nullptr)}};
  });
}

inline CommandResult cmd_traintrack(const std::string& word_text) {
  return detail::guarded([&] {
    const MappingWord w = parse_word(word_text);
    if (!is_track_preserving(w)) {
      throw NotTrackPreserving("word " + render(w) + " uses letters outside w1^-1, w2, w3^-1");
    }
    return traintrack_json(w);
  });
}

inline CommandResult cmd_verify(const VerifyOptions& options = {}) {
  return detail::guarded([&] {
    const auto items = run_verify_suite(options);
    json list = json::array();
    int failed = 0;
    for (const auto& item : items) {
      list.push_back({{"name", item.name}, {"passed", item.passed}, {"detail", item.detail}});
      if (!item.passed) ++failed;
    }
    return json{{"items", list}, {"total", items.size()}, {"failed", failed}, {"corrupt", options.corrupt}};
  });
}

inline CommandResult cmd_reconstruct(const std::string& word_text, std::optional<int> samples) {
  return detail::guarded([&] {
    const MappingWord w = parse_word(word_text);
    const int count = samples.value_or(2 * static_cast<int>(w.size()) + 1);
    const RingMat2 m = reconstruct_skein(w, count);
    return json{{"word", render(w)},
                {"samples", count},
                {"matrix", matrix_json(m)},
                {"matches_skein", m == skein_rep(w)}};
  });
}

}  // namespace m04
