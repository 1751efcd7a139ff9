#pragma once

// Bridge to the external espeak (phoneme generation) and mbrola (audio)
// executables. Nothing else in the library needs them.

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "emotif/error.hpp"
#include "emotif/pho.hpp"

namespace emotif {

inline constexpr const char* kEspeakEnv = "EMOTIF_ESPEAK_BIN";
inline constexpr const char* kMbrolaEnv = "EMOTIF_MBROLA_BIN";
inline constexpr const char* kVoiceDbEnv = "EMOTIF_VOICE_DB";

struct SynthConfig {
  std::optional<std::filesystem::path> espeak_path;
  std::optional<std::filesystem::path> mbrola_path;
  std::string voice_name = "mb-id1";
  std::optional<std::filesystem::path> voice_db_path;
  // espeak arguments; "{voice}" is substituted. The sentence goes to stdin.
  std::vector<std::string> espeak_args = {"-v", "{voice}", "-q", "--pho"};
  // Search PATH when neither the config nor the environment names a binary.
  bool search_path = true;
};

class SynthError : public Error {
 public:
  enum class Kind { BinaryNotFound, NonZeroExit, ParseFailure, EmptyOutput };

  SynthError(Kind kind, const std::string& what, int exit_code = 0, std::string stderr_text = {})
      : Error(what), kind_(kind), exit_code_(exit_code), stderr_(std::move(stderr_text)) {}

  Kind kind() const { return kind_; }
  int exit_code() const { return exit_code_; }
  const std::string& stderr_text() const { return stderr_; }

 private:
  Kind kind_;
  int exit_code_;
  std::string stderr_;
};

struct ProcessResult {
  int exit_code = 0;
  std::string stdout_text;
  std::string stderr_text;
};

// Runs `exe args...`, feeding `input` on stdin and capturing both streams.
ProcessResult run_process(const std::filesystem::path& exe, const std::vector<std::string>& args,
                          const std::string& input);

// Precedence: explicit config path, then environment variable, then PATH.
std::filesystem::path resolve_espeak(const SynthConfig& config);
std::filesystem::path resolve_mbrola(const SynthConfig& config);
std::filesystem::path resolve_voice_db(const SynthConfig& config);

PhoDocument generate_standard_pho(const std::string& text, const SynthConfig& config);

// Writes emit_pho(doc) to a temporary .pho and runs `mbrola voice_db in.pho
// out_path`. The temporary file is removed on success and kept (its path is
// in the error message) on failure.
void render_wav(const PhoDocument& doc, const SynthConfig& config,
                const std::filesystem::path& out_path);

}  // namespace emotif
