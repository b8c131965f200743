#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "accel/errors.hpp"

namespace accel {

enum class Rounding { NearestEven, Truncate };

const char* rounding_name(Rounding r);
Rounding parse_rounding(const std::string& s);

// Fixed-point datapath format. Values are signed, `width_bits` wide, with
// `binary_point` fractional bits (e.g. 16/8 is Q8.8).
struct FixedFormat {
  int width_bits = 16;
  int binary_point = 8;
  Rounding rounding = Rounding::NearestEven;

  std::int64_t raw_min() const { return -(std::int64_t{1} << (width_bits - 1)); }
  std::int64_t raw_max() const { return (std::int64_t{1} << (width_bits - 1)) - 1; }
  double resolution() const;

  // Throws ParseError if the format breaks its invariants
  // (width in {8,16,32}, 0 < binary_point < width).
  void check() const;

  bool operator==(const FixedFormat&) const = default;
};

// Full parameter set of one accelerator instance. Immutable in practice:
// construct, check(), then share freely.
struct ArchConfig {
  int array_rows = 32;
  int array_cols = 32;
  FixedFormat fmt;
  std::int64_t local_mem_kv = 16;  // local scratchpad size, kilovectors
  std::int64_t accum_kv = 4;       // accumulator memory size, kilovectors
  int accel_port_bits = 128;       // accelerator-side DRAM port width
  int host_port_bits = 128;        // host-side DRAM port width
  std::int64_t accel_clock_hz = 100'000'000;
  std::int64_t host_clock_hz = 100'000'000;
  int dram_ports = 2;
  bool local_in_uram = false;  // map local memory to URAM instead of BRAM

  int vector_bytes() const { return array_cols * fmt.width_bits / 8; }
  std::int64_t local_vectors() const { return local_mem_kv * 1024; }
  std::int64_t accum_vectors() const { return accum_kv * 1024; }

  void check() const;  // throws ParseError on any invariant violation

  // Stable 64-bit hash of every field; programs are stamped with it so a
  // program compiled for one architecture cannot run on another.
  std::uint64_t fingerprint() const;

  std::string to_json() const;
  static ArchConfig from_json(const std::string& text);
  static ArchConfig load(const std::string& path);
  void save(const std::string& path) const;

  bool operator==(const ArchConfig&) const = default;
};

// Bytes held by `kv` kilovectors under this config (1 KV = 1024 vectors of
// array_cols elements).
std::int64_t kv_bytes(const ArchConfig& cfg, std::int64_t kv);

// Built-in configurations: "baseline", "dualclock", "uram", "uram_strategy".
// uram and uram_strategy share one architecture; the difference between the
// two lives in the compiler strategy, not here.
ArchConfig preset(const std::string& name);
const std::vector<std::string>& preset_names();

// FPGA device resource capacities plus the (fitted, not derived) constants
// the resource estimator uses.
struct DeviceProfile {
  std::string name = "xczu7ev";
  std::int64_t bram36_blocks = 312;
  std::int64_t uram_blocks = 96;
  std::int64_t dsp_slices = 1728;
  std::int64_t luts = 230400;
  std::int64_t bram36_bytes = 4608;   // 36 Kbit block
  std::int64_t uram_bytes = 36864;    // 288 Kbit block
  // Estimator calibration constants. Fitted against a known build of the
  // 32x32 array, not derived from first principles.
  std::int64_t dsp_overhead = 30;
  std::int64_t lut_per_pe = 160;
  std::int64_t lut_fixed = 20000;
  int bram_port_dup = 1;  // 2 models true-dual-port block duplication

  void check() const;
  std::string to_json() const;
  static DeviceProfile from_json(const std::string& text);
  static DeviceProfile load(const std::string& path);
};

// The ZCU104's XCZU7EV part, per vendor data sheet.
DeviceProfile xczu7ev();

// Empty iff the estimated resource demand of `cfg` fits `dev`.
// Violations are data, not errors. Implemented next to the estimator.
std::vector<std::string> validate(const ArchConfig& cfg, const DeviceProfile& dev);

}  // namespace accel
