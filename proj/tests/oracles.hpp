#pragma once

// Test-only reference implementations. They share no code with the library
// paths they check: machines are taken as raw base-(4n+2) digit vectors and
// run on a fixed-size array tape.

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace oracle {

struct Run {
    bool halted = false;
    std::string output;
    std::uint64_t steps = 0;
};

/// Digits of machine `index`, entry (1,0) first.
inline std::vector<int> digits(int n, std::uint64_t index) {
    const std::uint64_t base = 4 * static_cast<std::uint64_t>(n) + 2;
    std::vector<int> d(2 * static_cast<std::size_t>(n));
    for (std::size_t i = d.size(); i-- > 0;) {
        d[i] = static_cast<int>(index % base);
        index /= base;
    }
    return d;
}

inline Run run(const std::vector<int>& d, int bound, int blank) {
    std::vector<int> tape(2 * static_cast<std::size_t>(bound) + 3, blank);
    int pos = bound + 1, lo = pos, hi = pos, q = 0;
    Run r;
    for (int step = 1; step <= bound; ++step) {
        const int dg = d[static_cast<std::size_t>(q * 2 + tape[pos])];
        if (dg < 2) {
            tape[pos] = dg;
            r.halted = true;
            r.steps = static_cast<std::uint64_t>(step);
            for (int i = lo; i <= hi; ++i) r.output += static_cast<char>('0' + tape[i]);
            return r;
        }
        const int e = dg - 2;
        tape[pos] = e % 2;
        pos += (e / 2) % 2 == 0 ? -1 : 1;
        q = e / 4;
        lo = std::min(lo, pos);
        hi = std::max(hi, pos);
    }
    return r;
}

/// Exhaustive distribution over both blank colours, plus the longest halting run.
inline std::map<std::string, std::uint64_t> distribution(int n, int bound, std::uint64_t* max_steps = nullptr) {
    std::uint64_t space = 1;
    for (int i = 0; i < 2 * n; ++i) space *= 4 * static_cast<std::uint64_t>(n) + 2;
    std::map<std::string, std::uint64_t> counts;
    std::uint64_t longest = 0;
    for (std::uint64_t idx = 0; idx < space; ++idx) {
        const auto d = digits(n, idx);
        for (int blank : {0, 1}) {
            const Run r = run(d, bound, blank);
            if (r.halted) {
                ++counts[r.output];
                longest = std::max(longest, r.steps);
            }
        }
    }
    if (max_steps) *max_steps = longest;
    return counts;
}

/// Naive CA step on a wide zero-padded row; returns rows 0..steps.
inline std::vector<std::string> ca_rows(unsigned rule, int steps, int pad, char background, char seed) {
    const int width = 2 * pad + 1;
    std::string row(static_cast<std::size_t>(width), background);
    row[static_cast<std::size_t>(pad)] = seed;
    std::vector<std::string> rows{row};
    for (int t = 0; t < steps; ++t) {
        std::string next(row.size(), background);
        for (int x = 2; x + 1 < width; ++x) {
            const unsigned nb = static_cast<unsigned>((row[x - 2] - '0') * 8 + (row[x - 1] - '0') * 4 +
                                                      (row[x] - '0') * 2 + (row[x + 1] - '0'));
            next[static_cast<std::size_t>(x)] = static_cast<char>('0' + ((rule >> nb) & 1u));
        }
        row = next;
        rows.push_back(row);
    }
    return rows;
}

} // namespace oracle
