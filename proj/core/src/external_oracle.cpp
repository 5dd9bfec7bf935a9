#include "biosimp/external_oracle.hpp"

#include <fcntl.h>
#include <poll.h>
#include <signal.h>
#include <sys/wait.h>
#include <unistd.h>

#include <atomic>
#include <cerrno>
#include <csignal>
#include <cstring>
#include <iostream>

#include "biosimp/errors.hpp"

namespace biosimp {

struct ExternalOracle::Slot {
  std::mutex mutex;
  pid_t pid = -1;
  int to_child = -1;    // our write end
  int from_child = -1;  // our read end
  std::string buffer;   // partial reply line

  void close_fds() {
    if (to_child >= 0) ::close(to_child);
    if (from_child >= 0) ::close(from_child);
    to_child = from_child = -1;
  }

  void terminate() {
    close_fds();
    if (pid > 0) {
      // Closing stdin usually suffices; escalate if the child lingers.
      for (int i = 0; i < 50; ++i) {
        if (::waitpid(pid, nullptr, WNOHANG) != 0) {
          pid = -1;
          return;
        }
        ::usleep(2000);
      }
      ::kill(pid, SIGKILL);
      ::waitpid(pid, nullptr, 0);
      pid = -1;
    }
  }
};

void ExternalOracle::spawn_child(const std::string& command, Slot& slot) {
  int in_pipe[2] = {-1, -1};   // parent -> child
  int out_pipe[2] = {-1, -1};  // child -> parent
  int err_pipe[2] = {-1, -1};  // exec failure report, CLOEXEC

  if (::pipe(in_pipe) != 0 || ::pipe(out_pipe) != 0 || ::pipe(err_pipe) != 0) {
    throw OracleSpawnError(std::string("pipe: ") + std::strerror(errno));
  }
  ::fcntl(err_pipe[1], F_SETFD, FD_CLOEXEC);

  pid_t pid = ::fork();
  if (pid < 0) {
    throw OracleSpawnError(std::string("fork: ") + std::strerror(errno));
  }
  if (pid == 0) {
    ::dup2(in_pipe[0], STDIN_FILENO);
    ::dup2(out_pipe[1], STDOUT_FILENO);
    ::close(in_pipe[0]);
    ::close(in_pipe[1]);
    ::close(out_pipe[0]);
    ::close(out_pipe[1]);
    ::close(err_pipe[0]);
    ::execl("/bin/sh", "sh", "-c", command.c_str(), static_cast<char*>(nullptr));
    int err = errno;
    ssize_t ignored = ::write(err_pipe[1], &err, sizeof(err));
    (void)ignored;
    ::_exit(127);
  }

  ::close(in_pipe[0]);
  ::close(out_pipe[1]);
  ::close(err_pipe[1]);

  int exec_errno = 0;
  ssize_t n = ::read(err_pipe[0], &exec_errno, sizeof(exec_errno));
  ::close(err_pipe[0]);
  if (n > 0) {
    ::close(in_pipe[1]);
    ::close(out_pipe[0]);
    ::waitpid(pid, nullptr, 0);
    throw OracleSpawnError("exec '" + command + "': " + std::strerror(exec_errno));
  }

  slot.pid = pid;
  slot.to_child = in_pipe[1];
  slot.from_child = out_pipe[0];
  slot.buffer.clear();
}

ExternalOracle::ExternalOracle(std::string command, int pool_size,
                               std::chrono::milliseconds timeout, WarnFn warn)
    : command_(std::move(command)), timeout_(timeout), warn_(std::move(warn)) {
  // write() to a dead child must surface as EPIPE, not kill the process.
  ::signal(SIGPIPE, SIG_IGN);
  if (pool_size < 1) pool_size = 1;
  for (int i = 0; i < pool_size; ++i) {
    auto slot = std::make_unique<Slot>();
    spawn_child(command_, *slot);
    slots_.push_back(std::move(slot));
  }
}

ExternalOracle::~ExternalOracle() {
  for (auto& slot : slots_) slot->terminate();
}

void ExternalOracle::warn(const std::string& message) {
  std::lock_guard<std::mutex> lock(warn_mutex_);
  if (warn_) warn_(message);
  else std::cerr << "biosimp: oracle warning: " << message << "\n";
}

Verdict ExternalOracle::judge(const std::string& text) {
  Slot& slot = *slots_[next_slot_.fetch_add(1) % slots_.size()];
  std::lock_guard<std::mutex> lock(slot.mutex);

  if (slot.pid < 0) {
    // Previous query killed this slot; bring it back.
    spawn_child(command_, slot);
  }

  std::string query = text;
  for (char& c : query) {
    if (c == '\n' || c == '\r') c = ' ';
  }
  query.push_back('\n');

  std::size_t written = 0;
  while (written < query.size()) {
    ssize_t n = ::write(slot.to_child, query.data() + written, query.size() - written);
    if (n < 0) {
      if (errno == EINTR) continue;
      warn("write to oracle failed (" + std::string(std::strerror(errno)) +
           "); treating as not a sentence");
      slot.terminate();
      return Verdict::kNotSentence;
    }
    written += static_cast<std::size_t>(n);
  }

  const auto deadline =
      std::chrono::steady_clock::now() + timeout_;
  while (true) {
    std::size_t nl = slot.buffer.find('\n');
    if (nl != std::string::npos) {
      std::string line = slot.buffer.substr(0, nl);
      slot.buffer.erase(0, nl + 1);
      while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
      if (line == "1") return Verdict::kSentence;
      if (line == "0") return Verdict::kNotSentence;
      warn("oracle replied '" + line + "' (expected 0 or 1); treating as not a sentence");
      return Verdict::kNotSentence;
    }

    auto remaining = std::chrono::duration_cast<std::chrono::milliseconds>(
        deadline - std::chrono::steady_clock::now());
    if (remaining.count() <= 0) {
      warn("oracle timed out after " + std::to_string(timeout_.count()) +
           " ms; treating as not a sentence");
      slot.terminate();
      return Verdict::kNotSentence;
    }

    struct pollfd pfd = {slot.from_child, POLLIN, 0};
    int rc = ::poll(&pfd, 1, static_cast<int>(remaining.count()));
    if (rc < 0) {
      if (errno == EINTR) continue;
      warn("poll on oracle failed (" + std::string(std::strerror(errno)) +
           "); treating as not a sentence");
      slot.terminate();
      return Verdict::kNotSentence;
    }
    if (rc == 0) continue;  // re-check deadline

    char chunk[256];
    ssize_t n = ::read(slot.from_child, chunk, sizeof(chunk));
    if (n < 0) {
      if (errno == EINTR) continue;
      warn("read from oracle failed (" + std::string(std::strerror(errno)) +
           "); treating as not a sentence");
      slot.terminate();
      return Verdict::kNotSentence;
    }
    if (n == 0) {
      warn("oracle closed its output; treating as not a sentence");
      slot.terminate();
      return Verdict::kNotSentence;
    }
    slot.buffer.append(chunk, static_cast<std::size_t>(n));
  }
}

}  // namespace biosimp
