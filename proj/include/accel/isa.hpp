#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "accel/archspec.hpp"
#include "accel/nnir.hpp"

namespace accel {

// Instruction set. A layer compiles into load-compute-save blocks:
// LoadWeights / LoadActivations bring vectors on chip, Matmul runs array
// passes into the accumulators, Simd post-processes accumulator contents,
// SaveActivations requantizes accumulators out. Config programs the
// activation loader's window descriptor.
enum class Opcode : std::uint8_t {
  Config = 0,
  LoadWeights = 1,
  LoadActivations = 2,
  Matmul = 3,
  Simd = 4,
  SaveActivations = 5,
};

enum class SimdOp : std::uint8_t { Identity = 0, Relu = 1, Add = 2, Max = 3 };

enum class LoadMode : std::uint8_t { Linear = 0, Im2col = 1, PoolPlane = 2 };

enum class Space : std::uint8_t { Dram0 = 0, Dram1 = 1, Local = 2, Accum = 3 };

const char* opcode_name(Opcode op);

// Flag bits.
inline constexpr std::uint8_t kFlagAccumulate = 0x01;  // matmul: add into acc
inline constexpr std::uint8_t kFlagAppendOne = 0x02;   // loader: synthesize unit bias lane
inline constexpr std::uint8_t kFlagSrcShift = 2;       // bits 2-3: source space
inline constexpr std::uint8_t kFlagDstShift = 4;       // bits 4-5: destination space

// Fixed-width instruction record. Field roles by opcode:
//
//  Config          a=in_h b=in_w c=in_c count=(k_h<<8|k_w)
//                  stride=(stride<<8|pad) aux=out_w
//                  sub=(LoadMode) shift=bias flag  (window descriptor)
//  LoadWeights     a=dram1 vector base, b=local dst base, count=vectors
//  LoadActivations a=src tensor vector base, b=local dst base,
//                  c=window first src vector, count=output pixels (im2col /
//                  planes) or vectors (linear), stride=k_stream|c_vecs,
//                  aux=first output pixel, shift=plane index (planes mode),
//                  dram_vectors=source window vectors
//  Matmul          a=local weight row base, b=local stream base (+pass),
//                  c=acc base, count=m vectors, stride=stream stride,
//                  aux=k rows this pass
//  Simd            a=acc dst base, b=src base (acc or local per flags),
//                  count=vectors, sub=SimdOp
//  SaveActivations a=acc src base, b=dst tensor vector base,
//                  count=vectors, stride=dst stride between vectors,
//                  shift=extra right shift on requantize,
//                  dram_vectors=vectors hitting DRAM (0 if local dst)
struct Instruction {
  Opcode op = Opcode::Config;
  std::uint8_t flags = 0;
  std::uint8_t sub = 0;
  std::uint8_t shift = 0;
  std::uint64_t a = 0;
  std::uint64_t b = 0;
  std::uint64_t c = 0;
  std::uint32_t count = 0;
  std::uint32_t stride = 0;
  std::uint32_t aux = 0;
  std::uint32_t dram_vectors = 0;

  Space src_space() const { return static_cast<Space>((flags >> kFlagSrcShift) & 3); }
  Space dst_space() const { return static_cast<Space>((flags >> kFlagDstShift) & 3); }
  void set_src_space(Space s) {
    flags = static_cast<std::uint8_t>((flags & ~(3 << kFlagSrcShift)) |
                                      (static_cast<std::uint8_t>(s) << kFlagSrcShift));
  }
  void set_dst_space(Space s) {
    flags = static_cast<std::uint8_t>((flags & ~(3 << kFlagDstShift)) |
                                      (static_cast<std::uint8_t>(s) << kFlagDstShift));
  }
  bool accumulate() const { return flags & kFlagAccumulate; }
  bool append_one() const { return flags & kFlagAppendOne; }

  bool operator==(const Instruction&) const = default;
};

struct LayerMarker {
  int layer_id = 0;
  Op op = Op::Relu;
  std::string name;
  std::uint64_t first_instruction = 0;
  std::uint64_t instruction_count = 0;
};

struct TensorDesc {
  std::uint64_t base_vector = 0;
  TensorShape shape;
  Space space = Space::Dram0;
};

struct Program {
  std::uint64_t fingerprint = 0;
  ArchConfig cfg;
  std::vector<Instruction> instructions;
  std::vector<LayerMarker> layers;
  std::uint64_t dram0_vectors = 0;
  std::uint64_t dram1_vectors = 0;
  std::uint64_t pinned_vectors = 0;  // local arena reserved for resident tensors
  TensorDesc input;
  TensorDesc output;
};

// Versioned little-endian binary serialization, fixed-width records.
std::vector<std::uint8_t> serialize_program(const Program& p);
Program parse_program(const std::vector<std::uint8_t>& bytes);
void save_program(const Program& p, const std::string& path);
Program load_program(const std::string& path);

std::string disassemble(const Program& p);

}  // namespace accel
