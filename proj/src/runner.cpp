#include "focq/runner.hpp"

#include <fcntl.h>
#include <signal.h>
#include <spawn.h>
#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <fstream>
#include <map>
#include <mutex>
#include <set>
#include <thread>

#include "focq/errors.hpp"
#include "focq/store.hpp"
#include "focq/tptp.hpp"

extern char** environ;

namespace focq::runner {

void RunnerConfig::validate() const {
  if (!(timeout_seconds > 0)) throw Error("ConfigError", "timeout must be positive");
  if (max_parallel < 1) throw Error("ConfigError", "jobs must be at least 1");
  if (backend == Backend::External) {
    if (command_template.find("{problem}") == std::string::npos ||
        command_template.find("{timeout}") == std::string::npos)
      throw Error("ConfigError", "prover command must contain {problem} and {timeout}");
  }
}

namespace {

std::string shell_quote(const std::string& s) {
  std::string out = "'";
  for (char c : s) {
    if (c == '\'') out += "'\\''";
    else out += c;
  }
  return out + "'";
}

void replace_all(std::string& s, const std::string& from, const std::string& to) {
  for (std::size_t pos = 0; (pos = s.find(from, pos)) != std::string::npos; pos += to.size()) s.replace(pos, from.size(), to);
}

double seconds_since(std::chrono::steady_clock::time_point t) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t).count();
}

std::filesystem::path output_path(const RunnerConfig& cfg, const std::string& cq_id) {
  return cfg.output_dir / (cq_id + ".out");
}

// Spawned process accounting shared by the worker threads.
struct Accounting {
  std::atomic<int> alive{0};
  std::atomic<int> peak{0};

  void enter() {
    const int now = ++alive;
    int p = peak.load();
    while (now > p && !peak.compare_exchange_weak(p, now)) {
    }
  }
  void leave() { --alive; }
};

ProverResult run_external(const ProblemFile& problem, const RunnerConfig& cfg, Accounting* acct) {
  ProverResult result;
  const auto out_path = output_path(cfg, problem.cq_id);
  std::filesystem::create_directories(cfg.output_dir);
  result.raw_output_path = out_path.string();
  const std::string command = expand_command(cfg.command_template, problem.path, cfg.timeout_seconds);

  posix_spawn_file_actions_t actions;
  posix_spawnattr_t attr;
  posix_spawn_file_actions_init(&actions);
  posix_spawnattr_init(&attr);
  posix_spawn_file_actions_addopen(&actions, STDIN_FILENO, "/dev/null", O_RDONLY, 0);
  posix_spawn_file_actions_addopen(&actions, STDOUT_FILENO, out_path.c_str(), O_WRONLY | O_CREAT | O_TRUNC, 0644);
  posix_spawn_file_actions_adddup2(&actions, STDOUT_FILENO, STDERR_FILENO);
  // Own process group, so a timeout kill takes the whole tree down.
  posix_spawnattr_setflags(&attr, POSIX_SPAWN_SETPGROUP);
  posix_spawnattr_setpgroup(&attr, 0);

  const char* argv[] = {"/bin/sh", "-c", command.c_str(), nullptr};
  pid_t pid = -1;
  const auto start = std::chrono::steady_clock::now();
  const int rc = posix_spawn(&pid, "/bin/sh", &actions, &attr, const_cast<char* const*>(argv), environ);
  posix_spawn_file_actions_destroy(&actions);
  posix_spawnattr_destroy(&attr);
  if (rc != 0) {
    result.szs = SzsStatus::Error;
    result.wall_seconds = seconds_since(start);
    return result;
  }
  if (acct) acct->enter();

  const auto deadline = start + std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                                    std::chrono::duration<double>(cfg.timeout_seconds));
  int status = 0;
  bool killed = false;
  while (true) {
    const pid_t r = waitpid(pid, &status, WNOHANG);
    if (r == pid) break;
    if (r < 0 && errno != EINTR) break;
    if (std::chrono::steady_clock::now() >= deadline) {
      kill(-pid, SIGKILL);
      waitpid(pid, &status, 0);
      killed = true;
      break;
    }
    std::this_thread::sleep_for(std::chrono::milliseconds(5));
  }
  result.wall_seconds = seconds_since(start);
  if (acct) acct->leave();
  // Stray children of the shell must not outlive the run either.
  kill(-pid, SIGKILL);

  std::string output;
  try {
    output = store::read_text(out_path);
  } catch (const IoError&) {
  }
  auto parsed = tptp::parse_szs(output, {problem.cq_id});
  result.prover_seconds = parsed.prover_seconds;
  if (killed) {
    result.szs = SzsStatus::Timeout;
    return result;
  }
  result.szs = parsed.szs;
  result.used_axioms = parsed.used_axioms;
  const bool exited = WIFEXITED(status);
  const int code = exited ? WEXITSTATUS(status) : -1;
  if (result.szs == SzsStatus::NoStatus && (!exited || code != 0)) result.szs = SzsStatus::Error;
  if (exited && code == 127) result.szs = SzsStatus::Error;  // command not found
  return result;
}

ProverResult run_builtin(const ProblemFile& problem, const RunnerConfig& cfg, Accounting* acct) {
  ProverResult result;
  const auto out_path = output_path(cfg, problem.cq_id);
  result.raw_output_path = out_path.string();
  const auto start = std::chrono::steady_clock::now();
  if (acct) acct->enter();
  std::string transcript;
  try {
    auto options = cfg.builtin;
    options.limit_seconds = cfg.timeout_seconds;
    auto attempt = microprover::prove_statements(tptp::load_file(problem.path), options);
    transcript = attempt.transcript;
  } catch (const std::exception& e) {
    transcript = std::string("% SZS status Error for ") + problem.cq_id + "\n% " + e.what() + "\n";
  }
  if (acct) acct->leave();
  result.wall_seconds = seconds_since(start);
  store::write_atomic(out_path, transcript);
  auto parsed = tptp::parse_szs(transcript, {problem.cq_id});
  result.szs = parsed.szs;
  result.prover_seconds = parsed.prover_seconds;
  result.used_axioms = parsed.used_axioms;
  return result;
}

ProverResult dispatch(const ProblemFile& problem, const RunnerConfig& cfg, Accounting* acct) {
  return cfg.backend == RunnerConfig::Backend::Builtin ? run_builtin(problem, cfg, acct)
                                                        : run_external(problem, cfg, acct);
}

// Appends one record per write(2) so concurrent or interrupted runs never
// interleave partial lines.
class Journal {
 public:
  explicit Journal(const std::filesystem::path& path) {
    if (path.empty()) return;
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    drop_torn_tail(path);
    fd_ = ::open(path.c_str(), O_WRONLY | O_CREAT | O_APPEND, 0644);
    if (fd_ < 0) throw IoError("cannot open journal " + path.string());
  }
  ~Journal() {
    if (fd_ >= 0) ::close(fd_);
  }
  Journal(const Journal&) = delete;
  Journal& operator=(const Journal&) = delete;

  void append(const RunRecord& rec) {
    if (fd_ < 0) return;
    const std::string line = to_json(rec).dump() + "\n";
    std::lock_guard lock(mu_);
    const char* p = line.data();
    std::size_t left = line.size();
    while (left > 0) {
      const ssize_t n = ::write(fd_, p, left);
      if (n < 0) {
        if (errno == EINTR) continue;
        throw IoError("journal write failed");
      }
      p += n;
      left -= static_cast<std::size_t>(n);
    }
  }

 private:
  // A crash mid-append leaves a line without its newline; appending after it
  // would glue the next record onto the fragment.
  static void drop_torn_tail(const std::filesystem::path& path) {
    std::error_code ec;
    const auto size = std::filesystem::file_size(path, ec);
    if (ec || size == 0) return;
    const std::string text = store::read_text(path);
    if (text.back() == '\n') return;
    const auto keep = text.find_last_of('\n');
    std::filesystem::resize_file(path, keep == std::string::npos ? 0 : keep + 1);
  }

  int fd_ = -1;
  std::mutex mu_;
};

}  // namespace

std::string expand_command(const std::string& command_template, const std::filesystem::path& problem,
                           double timeout_seconds) {
  std::string cmd = command_template;
  replace_all(cmd, "{problem}", shell_quote(problem.string()));
  replace_all(cmd, "{timeout}", std::to_string(static_cast<long>(std::ceil(timeout_seconds))));
  return cmd;
}

nlohmann::json to_json(const RunRecord& r) {
  nlohmann::json j;
  j["schema_version"] = store::kSchemaVersion;
  j["cq_id"] = r.cq_id;
  j["szs"] = std::string(to_string(r.result.szs));
  j["wall_seconds"] = r.result.wall_seconds;
  j["prover_seconds"] = r.result.prover_seconds ? nlohmann::json(*r.result.prover_seconds) : nlohmann::json();
  j["used_axioms"] = r.result.used_axioms;
  j["output_file"] = r.result.raw_output_path;
  return j;
}

RunRecord record_from_json(const nlohmann::json& j) {
  RunRecord r;
  r.cq_id = j.at("cq_id").get<std::string>();
  r.result.szs = szs_from_string(j.at("szs").get<std::string>());
  r.result.wall_seconds = j.at("wall_seconds").get<double>();
  if (j.contains("prover_seconds") && !j["prover_seconds"].is_null())
    r.result.prover_seconds = j["prover_seconds"].get<double>();
  r.result.used_axioms = j.value("used_axioms", std::vector<std::string>{});
  r.result.raw_output_path = j.value("output_file", std::string{});
  return r;
}

std::vector<RunRecord> read_journal(const std::filesystem::path& path) {
  std::vector<RunRecord> out;
  if (!std::filesystem::exists(path)) return out;
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);)
    if (!line.empty()) lines.push_back(std::move(line));
  for (std::size_t i = 0; i < lines.size(); ++i) {
    try {
      auto j = nlohmann::json::parse(lines[i]);
      if (j.value("schema_version", 0) != store::kSchemaVersion)
        throw MalformedLine(path.string(), static_cast<long>(i + 1), "unsupported schema_version");
      out.push_back(record_from_json(j));
    } catch (const MalformedLine&) {
      throw;
    } catch (const std::exception& e) {
      if (i + 1 == lines.size()) break;  // torn final write
      throw MalformedLine(path.string(), static_cast<long>(i + 1), e.what());
    }
  }
  return out;
}

std::vector<ProblemFile> discover(const std::filesystem::path& dir) {
  std::vector<ProblemFile> out;
  if (!std::filesystem::is_directory(dir)) throw IoError("not a directory: " + dir.string());
  for (const auto& e : std::filesystem::directory_iterator(dir))
    if (e.is_regular_file() && e.path().extension() == ".p") out.push_back(ProblemFile{e.path().stem().string(), e.path()});
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.cq_id < b.cq_id; });
  return out;
}

ProverResult run_one(const ProblemFile& problem, const RunnerConfig& config) {
  config.validate();
  return dispatch(problem, config, nullptr);
}

RunSummary run_corpus(std::span<const ProblemFile> problems, const RunnerConfig& config) {
  config.validate();
  RunSummary summary;

  std::map<std::string, ProverResult> results;
  if (!config.journal.empty()) {
    for (auto& rec : read_journal(config.journal)) results.emplace(rec.cq_id, std::move(rec.result));
  }
  std::set<std::string> wanted;
  std::vector<const ProblemFile*> todo;
  for (const auto& p : problems) {
    if (!wanted.insert(p.cq_id).second) continue;
    if (results.count(p.cq_id)) {
      ++summary.skipped;
      continue;
    }
    todo.push_back(&p);
  }
  std::sort(todo.begin(), todo.end(), [](const auto* a, const auto* b) { return a->cq_id < b->cq_id; });

  Journal journal(config.journal);
  Accounting acct;
  std::mutex mu;
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    while (true) {
      const std::size_t i = next++;
      if (i >= todo.size()) return;
      RunRecord rec{todo[i]->cq_id, dispatch(*todo[i], config, &acct)};
      journal.append(rec);
      std::lock_guard lock(mu);
      results[rec.cq_id] = std::move(rec.result);
    }
  };
  const int n = std::min<int>(config.max_parallel, static_cast<int>(std::max<std::size_t>(todo.size(), 1)));
  std::vector<std::thread> pool;
  for (int i = 0; i < n; ++i) pool.emplace_back(worker);
  for (auto& t : pool) t.join();

  summary.executed = static_cast<long>(todo.size());
  summary.peak_parallel = acct.peak.load();
  for (auto& [id, r] : results)
    if (wanted.count(id)) summary.results.push_back(RunRecord{id, std::move(r)});
  return summary;
}

}  // namespace focq::runner
