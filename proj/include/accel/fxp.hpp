#pragma once

#include <cstdint>

#include "accel/archspec.hpp"

namespace accel {

// Accumulators are 48 bits wide, matching DSP-slice accumulators. Wide
// enough for 2^16-term dot products of 16-bit operands.
inline constexpr int kAccumBits = 48;
inline constexpr std::int64_t kAccumMax = (std::int64_t{1} << (kAccumBits - 1)) - 1;
inline constexpr std::int64_t kAccumMin = -(std::int64_t{1} << (kAccumBits - 1));

// One fixed-point value: raw two's-complement integer plus its format.
// Real value = raw * 2^-binary_point.
struct FxVal {
  std::int32_t raw = 0;
  FixedFormat fmt;
};

// Saturate a wide value to the representable range of `fmt`.
std::int32_t saturate_raw(std::int64_t v, const FixedFormat& fmt);

// Arithmetic shift right by `shift` with the format's rounding rule.
// NearestEven resolves halfway cases toward the even neighbour; Truncate
// rounds down (plain arithmetic shift). shift == 0 is the identity.
std::int64_t shift_round(std::int64_t v, int shift, Rounding rounding);

// Convert a finite float to fixed point: round per fmt.rounding, then
// saturate. NaN/inf are rejected with ParseError.
FxVal to_fixed(double x, const FixedFormat& fmt);
std::int32_t to_fixed_raw(double x, const FixedFormat& fmt);

// Exact: raw * 2^-binary_point.
double from_fixed(const FxVal& v);
double from_fixed_raw(std::int32_t raw, const FixedFormat& fmt);

// acc + raw(a)*raw(b) in the wide accumulator, no intermediate rounding.
// Overflow past 48 bits throws AccumOverflow: that is a scheduling bug
// surfacing, never silently wrapped.
std::int64_t mac_raw(std::int64_t acc, std::int32_t a, std::int32_t b);
std::int64_t mac(std::int64_t acc, const FxVal& a, const FxVal& b);

// Scale an accumulator back to the datapath format: shift right by
// binary_point (+ extra_shift), round per fmt, saturate. extra_shift covers
// power-of-two divisions fused into the readout (e.g. mean pooling).
std::int32_t requantize_raw(std::int64_t acc, const FixedFormat& fmt, int extra_shift = 0);
FxVal requantize(std::int64_t acc, const FixedFormat& fmt, int extra_shift = 0);

}  // namespace accel
