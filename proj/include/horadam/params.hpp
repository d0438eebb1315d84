#pragma once

#include <cstdint>

namespace horadam {

using Letter = std::uint8_t;

// The triple (a, b, n) selecting a Horadam cube: words of length n over
// the alphabet {0, ..., a+b-1} in which letters >= a may only follow a 0.
struct Params {
    int a = 1;
    int b = 1;
    int n = 0;

    int alphabet_size() const { return a + b; }
    int top_letter() const { return a + b - 1; }

    bool operator==(const Params&) const = default;
};

// Throws parameter_error unless a >= 1, b >= 1, n >= 0 and the alphabet
// fits the letter type.
void validate(const Params& p);

} // namespace horadam
