#pragma once

#include <artin/io.hpp>
#include <artin/presenter.hpp>

#include <cstdio>
#include <random>
#include <stdexcept>
#include <string>
#include <sys/wait.h>
#include <unistd.h>

namespace testsupport {

inline artin::Word W(int rank, const std::string& text) {
    return artin::parse_word(text, rank);
}

inline artin::Presentation P(const std::string& text) {
    return artin::parse_presentation(text);
}

inline artin::FramedTwistTree T(const std::string& text) {
    return artin::parse_framed_tree(text);
}

// Seeded so failures replay exactly.
inline artin::Word random_word(std::mt19937_64& rng, int rank, int max_len) {
    int len = static_cast<int>(rng() % static_cast<unsigned long long>(max_len + 1));
    std::vector<artin::Letter> raw;
    raw.reserve(static_cast<std::size_t>(len));
    for (int i = 0; i < len; ++i) {
        int g = 1 + static_cast<int>(rng() % static_cast<unsigned long long>(rank));
        raw.push_back(rng() % 2 ? g : -g);
    }
    return artin::Word(rank, raw);
}

inline artin::Presentation random_tree_presentation(std::mt19937_64& rng,
                                                    const artin::TreeGenConfig& cfg = {}) {
    return artin::relators_from_tree(artin::random_framed_tree(rng, cfg));
}

struct CliResult {
    int status = -1;       // exit code, or -1 if the child died abnormally
    std::string out;
};

// Runs the installed-from-build CLI through /bin/sh. stdin_text is fed via a
// temp file; env_prefix is prepended verbatim ("VAR=val "). stderr is
// discarded unless merge_stderr.
inline CliResult run_cli(const std::string& args, const std::string& stdin_text = "",
                         const std::string& env_prefix = "", bool merge_stderr = false) {
    static int counter = 0;
    std::string in_path = "/tmp/artin_cli_in_" + std::to_string(::getpid()) + "_" +
                          std::to_string(counter++);
    {
        std::FILE* f = std::fopen(in_path.c_str(), "wb");
        if (!f) throw std::runtime_error("cannot create " + in_path);
        if (!stdin_text.empty())
            std::fwrite(stdin_text.data(), 1, stdin_text.size(), f);
        std::fclose(f);
    }
    std::string cmd = env_prefix + "'" + ARTIN_CLI_PATH + "' " + args + " < " + in_path +
                      (merge_stderr ? " 2>&1" : " 2>/dev/null");
    CliResult r;
    std::FILE* pipe = ::popen(cmd.c_str(), "r");
    if (!pipe) {
        std::remove(in_path.c_str());
        throw std::runtime_error("popen failed: " + cmd);
    }
    char buf[4096];
    std::size_t got;
    while ((got = std::fread(buf, 1, sizeof buf, pipe)) > 0)
        r.out.append(buf, got);
    int raw = ::pclose(pipe);
    std::remove(in_path.c_str());
    if (raw >= 0 && WIFEXITED(raw)) r.status = WEXITSTATUS(raw);
    return r;
}

} // namespace testsupport
