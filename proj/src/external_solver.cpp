// SPDX-License-Identifier: Apache-2.0
//
// Hands a CNF to an external DIMACS solver: the clauses are written to a
// temporary file, `<solver> <file>` is executed, and the verdict is read
// from the conventional "s ..."/"v ..." output lines.

#include <fcntl.h>
#include <poll.h>
#include <signal.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cerrno>
#include <chrono>
#include <cstdlib>
#include <cstring>
#include <sstream>
#include <string>
#include <vector>

#include "inductor/checker.hpp"
#include "inductor/diagnostics.hpp"

namespace inductor {

namespace {

// Owns the temporary DIMACS file for the duration of one query.
struct TempFile {
  std::string path;

  explicit TempFile(const std::string& contents) {
    char name[] = "/tmp/dimacs_XXXXXX";
    int fd = mkstemp(name);
    if (fd < 0) throw IoError("cannot create temporary DIMACS file");
    path = name;
    const char* data = contents.data();
    std::size_t left = contents.size();
    while (left > 0) {
      ssize_t n = write(fd, data, left);
      if (n < 0) {
        close(fd);
        throw IoError("cannot write temporary DIMACS file");
      }
      data += n;
      left -= static_cast<std::size_t>(n);
    }
    close(fd);
  }
  ~TempFile() { unlink(path.c_str()); }
  TempFile(const TempFile&) = delete;
  TempFile& operator=(const TempFile&) = delete;
};

// Kills the solver and anything it spawned (the child runs in its own
// process group so stray grandchildren cannot outlive the query and keep
// inherited descriptors open).
void kill_solver(pid_t pid) {
  kill(-pid, SIGKILL);
  kill(pid, SIGKILL);
}

// Reads the child's stdout until EOF or the deadline; on deadline the child
// is killed. Returns false on timeout.
bool drain_child(int fd, pid_t pid,
                 std::chrono::steady_clock::time_point deadline,
                 std::string& output) {
  char buf[4096];
  for (;;) {
    auto now = std::chrono::steady_clock::now();
    if (now >= deadline) {
      kill_solver(pid);
      return false;
    }
    auto left = std::chrono::duration_cast<std::chrono::milliseconds>(
                    deadline - now)
                    .count();
    struct pollfd pfd = {fd, POLLIN, 0};
    int ready = poll(&pfd, 1, static_cast<int>(left) + 1);
    if (ready < 0) {
      if (errno == EINTR) continue;
      kill_solver(pid);
      throw IoError("poll failed while reading solver output");
    }
    if (ready == 0) continue;  // re-check the deadline
    ssize_t n = read(fd, buf, sizeof buf);
    if (n < 0) {
      if (errno == EINTR) continue;
      kill_solver(pid);
      throw IoError("cannot read solver output");
    }
    if (n == 0) return true;  // EOF: solver closed its end
    output.append(buf, static_cast<std::size_t>(n));
  }
}

}  // namespace

SolveResult solve_external(const Cnf& cnf, const std::string& path,
                           double timeout_secs) {
  TempFile file(to_dimacs(cnf));
  auto deadline = std::chrono::steady_clock::now() +
                  std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                      std::chrono::duration<double>(timeout_secs));

  int pipefd[2];
  if (pipe(pipefd) != 0) throw IoError("cannot create pipe");
  pid_t pid = fork();
  if (pid < 0) {
    close(pipefd[0]);
    close(pipefd[1]);
    throw IoError("cannot fork solver process");
  }
  if (pid == 0) {
    setpgid(0, 0);  // own group, so a timeout can reap helper processes too
    dup2(pipefd[1], STDOUT_FILENO);
    close(pipefd[0]);
    close(pipefd[1]);
    execl(path.c_str(), path.c_str(), file.path.c_str(),
          static_cast<char*>(nullptr));
    _exit(127);
  }
  setpgid(pid, pid);  // mirror the child's call; whichever runs first wins
  close(pipefd[1]);

  std::string output;
  bool finished = drain_child(pipefd[0], pid, deadline, output);
  close(pipefd[0]);
  int status = 0;
  waitpid(pid, &status, 0);

  if (!finished) return {SatStatus::Timeout, {}};
  if (WIFSIGNALED(status))
    throw SolverCrash("killed by signal " +
                      std::to_string(WTERMSIG(status)));

  // Scan the status and value lines.
  std::istringstream lines(output);
  std::string line;
  std::string verdict;
  std::vector<int> lits;
  while (std::getline(lines, line)) {
    if (line.rfind("s ", 0) == 0) {
      verdict = line.substr(2);
      while (!verdict.empty() && (verdict.back() == '\r' || verdict.back() == ' '))
        verdict.pop_back();
    } else if (line.rfind("v ", 0) == 0) {
      std::istringstream vs(line.substr(2));
      int lit = 0;
      while (vs >> lit)
        if (lit != 0) lits.push_back(lit);
    }
  }

  if (verdict == "UNSATISFIABLE") return {SatStatus::Unsat, {}};
  if (verdict == "UNKNOWN") return {SatStatus::Timeout, {}};
  if (verdict == "SATISFIABLE") {
    SolveResult out;
    out.status = SatStatus::Sat;
    out.model.assign(std::size_t(cnf.num_vars) + 1, false);
    for (int lit : lits) {
      int v = std::abs(lit);
      if (v <= cnf.num_vars) out.model[std::size_t(v)] = lit > 0;
    }
    return out;
  }
  if (WIFEXITED(status) && WEXITSTATUS(status) != 0)
    throw SolverCrash("exit code " + std::to_string(WEXITSTATUS(status)));
  throw SolverCrash("no status line in solver output");
}

}  // namespace inductor
