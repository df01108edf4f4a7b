#include <fcntl.h>
#include <poll.h>
#include <signal.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cerrno>
#include <cstring>
#include <filesystem>
#include <fstream>

#include "samplecheck/error.hpp"
#include "samplecheck/samplers.hpp"

namespace samplecheck {

namespace {

namespace fs = std::filesystem;

class ScratchDir {
 public:
  ScratchDir() {
    std::string tmpl = (fs::temp_directory_path() / "samplecheck-XXXXXX").string();
    if (::mkdtemp(tmpl.data()) == nullptr)
      throw ProcessError(std::string("mkdtemp failed: ") + std::strerror(errno));
    path_ = tmpl;
  }
  ScratchDir(const ScratchDir&) = delete;
  ScratchDir& operator=(const ScratchDir&) = delete;
  ~ScratchDir() {
    std::error_code ec;
    fs::remove_all(path_, ec);
  }
  const fs::path& path() const noexcept { return path_; }

 private:
  fs::path path_;
};

class Fd {
 public:
  explicit Fd(int fd = -1) noexcept : fd_(fd) {}
  Fd(const Fd&) = delete;
  Fd& operator=(const Fd&) = delete;
  ~Fd() { reset(); }
  int get() const noexcept { return fd_; }
  void reset() noexcept {
    if (fd_ >= 0) ::close(fd_);
    fd_ = -1;
  }

 private:
  int fd_;
};

// Runs argv with stdout captured and stdin from /dev/null. The child leads its
// own process group so a timeout can kill everything it spawned.
std::string run_capture(const std::vector<std::string>& argv, std::chrono::milliseconds timeout) {
  int fds[2];
  if (::pipe(fds) != 0) throw ProcessError(std::string("pipe failed: ") + std::strerror(errno));
  Fd read_end(fds[0]), write_end(fds[1]);

  std::vector<char*> cargv;
  for (const auto& a : argv) cargv.push_back(const_cast<char*>(a.c_str()));
  cargv.push_back(nullptr);

  const pid_t pid = ::fork();
  if (pid < 0) throw ProcessError(std::string("fork failed: ") + std::strerror(errno));
  if (pid == 0) {
    ::setpgid(0, 0);
    int devnull = ::open("/dev/null", O_RDONLY);
    if (devnull >= 0) ::dup2(devnull, STDIN_FILENO);
    ::dup2(fds[1], STDOUT_FILENO);
    ::close(fds[0]);
    ::close(fds[1]);
    ::execv(cargv[0], cargv.data());
    ::_exit(127);
  }
  ::setpgid(pid, pid);
  write_end.reset();

  auto kill_child = [&] {
    ::kill(-pid, SIGKILL);
    ::kill(pid, SIGKILL);
    int st = 0;
    ::waitpid(pid, &st, 0);
  };

  std::string out;
  const auto deadline = std::chrono::steady_clock::now() + timeout;
  char buf[65536];
  for (;;) {
    auto left = std::chrono::duration_cast<std::chrono::milliseconds>(
        deadline - std::chrono::steady_clock::now());
    if (left.count() <= 0) {
      kill_child();
      throw ProcessError("sampler timed out after " + std::to_string(timeout.count()) + " ms");
    }
    pollfd p{read_end.get(), POLLIN, 0};
    int r = ::poll(&p, 1, static_cast<int>(std::min<long long>(left.count(), 1 << 30)));
    if (r < 0) {
      if (errno == EINTR) continue;
      kill_child();
      throw ProcessError(std::string("poll failed: ") + std::strerror(errno));
    }
    if (r == 0) continue;
    ssize_t n = ::read(read_end.get(), buf, sizeof buf);
    if (n < 0) {
      if (errno == EINTR || errno == EAGAIN) continue;
      kill_child();
      throw ProcessError(std::string("read failed: ") + std::strerror(errno));
    }
    if (n == 0) break;
    out.append(buf, static_cast<std::size_t>(n));
  }

  int status = 0;
  while (::waitpid(pid, &status, 0) < 0) {
    if (errno != EINTR) throw ProcessError(std::string("waitpid failed: ") + std::strerror(errno));
  }
  if (WIFSIGNALED(status))
    throw ProcessError("sampler killed by signal " + std::to_string(WTERMSIG(status)));
  if (!WIFEXITED(status) || WEXITSTATUS(status) != 0)
    throw ProcessError("sampler exited with status " + std::to_string(WEXITSTATUS(status)));
  return out;
}

}  // namespace

SampleBatch external_sample(const std::string& command, const SamplerRequest& req,
                            std::chrono::milliseconds timeout) {
  req.validate();
  ScratchDir dir;
  const auto cnf_path = (dir.path() / "input.cnf").string();
  const auto wts_path = (dir.path() / "input.weights").string();

  CnfFormula f = req.formula;
  f.sampling_set = req.sampling_set;
  write_dimacs_file(cnf_path, f);
  {
    // Sampling-set weights are written explicitly so a non-0.5 default
    // survives the file format.
    WeightMap explicit_w({}, 0.5);
    for (auto [v, w] : req.weights.entries()) explicit_w.set(v, w);
    for (Var v : req.sampling_set) explicit_w.set(v, req.weights.weight(v));
    std::ofstream out(wts_path);
    out << emit_weights(explicit_w);
    if (!out) throw ProcessError("cannot write " + wts_path);
  }

  const std::vector<std::string> argv{"/bin/sh",   "-c",       command + " \"$@\"",
                                      "sh",        "--input",  cnf_path,
                                      "--weights", wts_path,   "--samples",
                                      std::to_string(req.count), "--seed",
                                      std::to_string(req.seed)};
  const std::string out = run_capture(argv, timeout);

  std::vector<std::string_view> lines;
  std::string_view rest = out;
  while (!rest.empty()) {
    auto nl = rest.find('\n');
    auto line = rest.substr(0, nl);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    if (nl == std::string_view::npos) break;
    rest.remove_prefix(nl + 1);
  }
  if (lines.size() != req.count)
    throw ProtocolError("sampler returned " + std::to_string(lines.size()) + " lines, expected " +
                        std::to_string(req.count));

  SampleBatch batch;
  batch.samples.reserve(lines.size());
  for (std::size_t i = 0; i < lines.size(); ++i) {
    try {
      batch.samples.push_back(parse_sample_line(lines[i], req.sampling_set));
    } catch (const ProtocolError& e) {
      throw ProtocolError("sample " + std::to_string(i + 1) + ": " + e.what());
    }
  }
  return batch;
}

}  // namespace samplecheck
