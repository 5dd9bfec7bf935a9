#pragma once

#include <atomic>
#include <chrono>
#include <functional>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "biosimp/clause_split.hpp"

namespace biosimp {

// Runs the configured shell command once per pool slot and speaks a line
// protocol: one candidate text in, one reply line out, "1" for sentence and
// "0" for anything else. A timeout or malformed reply counts as not-a-sentence
// and is reported through the warning sink; the slot's process is restarted
// afterwards. Construction throws OracleSpawnError when the command cannot
// start. judge() is safe to call from multiple threads.
class ExternalOracle : public ClausehoodOracle {
 public:
  using WarnFn = std::function<void(const std::string&)>;

  ExternalOracle(std::string command, int pool_size,
                 std::chrono::milliseconds timeout, WarnFn warn = {});
  ~ExternalOracle() override;

  ExternalOracle(const ExternalOracle&) = delete;
  ExternalOracle& operator=(const ExternalOracle&) = delete;

  Verdict judge(const std::string& text) override;

 private:
  struct Slot;

  static void spawn_child(const std::string& command, Slot& slot);
  void warn(const std::string& message);

  std::string command_;
  std::chrono::milliseconds timeout_;
  WarnFn warn_;
  std::mutex warn_mutex_;
  std::vector<std::unique_ptr<Slot>> slots_;
  std::atomic<std::size_t> next_slot_{0};
};

}  // namespace biosimp
