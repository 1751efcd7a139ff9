#include "emotif/synth.hpp"

#include <atomic>
#include <cstdlib>
#include <future>
#include <random>

#include <boost/asio.hpp>
#include <boost/process.hpp>

#include "emotif/io.hpp"

namespace emotif {

namespace bp = boost::process;
namespace fs = std::filesystem;

namespace {

std::optional<fs::path> from_env(const char* name) {
  if (const char* v = std::getenv(name); v && *v) return fs::path(v);
  return std::nullopt;
}

fs::path resolve_binary(const std::optional<fs::path>& configured, const char* env_name,
                        std::initializer_list<const char*> path_names, bool search_path,
                        const char* what) {
  std::optional<fs::path> candidate = configured ? configured : from_env(env_name);
  if (candidate) {
    std::error_code ec;
    if (!fs::is_regular_file(*candidate, ec)) {
      throw SynthError(SynthError::Kind::BinaryNotFound,
                       std::string(what) + " not found at " + candidate->string());
    }
    return *candidate;
  }
  if (search_path) {
    for (const char* name : path_names) {
      const auto found = bp::search_path(name);
      if (!found.empty()) return fs::path(found.string());
    }
  }
  throw SynthError(SynthError::Kind::BinaryNotFound,
                   std::string(what) + " not configured: pass its path or set " + env_name);
}

std::string substitute(std::string arg, const SynthConfig& config) {
  const std::string key = "{voice}";
  for (auto pos = arg.find(key); pos != std::string::npos; pos = arg.find(key, pos)) {
    arg.replace(pos, key.size(), config.voice_name);
    pos += config.voice_name.size();
  }
  return arg;
}

fs::path unique_temp_path(const std::string& suffix) {
  static std::atomic<unsigned> counter{0};
  std::random_device rd;
  const auto name = "emotif-" + std::to_string(rd()) + "-" + std::to_string(counter++) + suffix;
  return fs::temp_directory_path() / name;
}

}  // namespace

ProcessResult run_process(const fs::path& exe, const std::vector<std::string>& args,
                          const std::string& input) {
  boost::asio::io_context io;
  std::future<std::string> out;
  std::future<std::string> err;
  ProcessResult result;
  try {
    bp::child child(bp::exe = exe.string(), bp::args = args,
                    bp::std_in < boost::asio::buffer(input), bp::std_out > out, bp::std_err > err,
                    io);
    io.run();
    child.wait();
    result.exit_code = child.exit_code();
  } catch (const bp::process_error& e) {
    throw SynthError(SynthError::Kind::NonZeroExit,
                     "failed to run " + exe.string() + ": " + e.what(), -1);
  }
  result.stdout_text = out.get();
  result.stderr_text = err.get();
  return result;
}

fs::path resolve_espeak(const SynthConfig& config) {
  return resolve_binary(config.espeak_path, kEspeakEnv, {"espeak-ng", "espeak"}, config.search_path,
                        "espeak");
}

fs::path resolve_mbrola(const SynthConfig& config) {
  return resolve_binary(config.mbrola_path, kMbrolaEnv, {"mbrola"}, config.search_path, "mbrola");
}

fs::path resolve_voice_db(const SynthConfig& config) {
  if (config.voice_db_path) return *config.voice_db_path;
  if (auto env = from_env(kVoiceDbEnv)) return *env;
  // espeak's default install location for MBROLA voices.
  std::string voice = config.voice_name;
  if (voice.rfind("mb-", 0) == 0) voice.erase(0, 3);
  return fs::path("/usr/share/mbrola") / voice / voice;
}

PhoDocument generate_standard_pho(const std::string& text, const SynthConfig& config) {
  const auto exe = resolve_espeak(config);
  std::vector<std::string> args;
  for (const auto& a : config.espeak_args) args.push_back(substitute(a, config));

  const auto result = run_process(exe, args, text + "\n");
  if (result.exit_code != 0) {
    throw SynthError(SynthError::Kind::NonZeroExit,
                     exe.string() + " exited with status " + std::to_string(result.exit_code) +
                         ": " + result.stderr_text,
                     result.exit_code, result.stderr_text);
  }
  try {
    return parse_pho(result.stdout_text);
  } catch (const PhoParseError& e) {
    throw SynthError(SynthError::Kind::ParseFailure,
                     "could not parse phonemes from " + exe.string() + ": " + e.what(), 0,
                     result.stderr_text);
  }
}

void render_wav(const PhoDocument& doc, const SynthConfig& config, const fs::path& out_path) {
  const auto exe = resolve_mbrola(config);
  const auto voice_db = resolve_voice_db(config);
  const auto pho_path = unique_temp_path(".pho");
  write_text_file(pho_path, emit_pho(doc));

  const auto result = run_process(exe, {voice_db.string(), pho_path.string(), out_path.string()}, "");
  if (result.exit_code != 0) {
    throw SynthError(SynthError::Kind::NonZeroExit,
                     exe.string() + " exited with status " + std::to_string(result.exit_code) +
                         " (input kept at " + pho_path.string() + "): " + result.stderr_text,
                     result.exit_code, result.stderr_text);
  }
  std::error_code ec;
  const auto size = fs::file_size(out_path, ec);
  if (ec || size == 0) {
    throw SynthError(SynthError::Kind::EmptyOutput,
                     exe.string() + " produced no audio at " + out_path.string() +
                         " (input kept at " + pho_path.string() + ")",
                     0, result.stderr_text);
  }
  fs::remove(pho_path, ec);
}

}  // namespace emotif
