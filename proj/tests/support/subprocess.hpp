#pragma once

#include <sys/wait.h>

#include <cstdio>
#include <string>

namespace testsupport {

struct RunResult {
    int exit_code = -1;
    std::string output;
};

// Runs a shell command and captures its stdout. Append "2>&1" to the
// command to fold stderr in, or "2>/dev/null" to drop it.
inline RunResult run_command(const std::string& cmd) {
    RunResult res;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return res;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) res.output.append(buf, n);
    int status = pclose(pipe);
    if (WIFEXITED(status)) res.exit_code = WEXITSTATUS(status);
    return res;
}

}  // namespace testsupport
