#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "accel/archspec.hpp"
#include "accel/nnir.hpp"

namespace accel {

// Dataflow strategy.
//  WeightStationary: streaming default. Weights are resident per stage;
//    input windows are re-streamed from DRAM once per stage.
//  InputStationary: streaming dual. Input windows are resident per
//    partition; weight slices are re-streamed once per partition.
//  LocalResident: whole-layer residence. Inter-layer activations are
//    pinned in local memory; only the graph input, the graph output and
//    weights touch DRAM.
enum class Strategy { WeightStationary, InputStationary, LocalResident };

const char* strategy_name(Strategy s);
Strategy parse_strategy(const std::string& s);

// Matmul view of a conv2d/dense layer.
//   m: output rows (one per output pixel),
//   k: reduction vectors per output row group, ceil(k_h*k_w*in_c / cols),
//   n: output channels.
struct MatmulShape {
  std::int64_t m = 0;
  int k = 0;
  int n = 0;
};

// Geometry the activation loader needs to build reduction streams.
struct ConvWindow {
  int in_h = 1, in_w = 1, in_c = 1;
  int k_h = 1, k_w = 1;
  int stride = 1, pad = 0;
  int out_h = 1, out_w = 1;
  int k_elems = 1;   // k_h*k_w*in_c
  int k_stream = 1;  // reduction vectors per output pixel incl. bias lane
  bool bias = false;
};

MatmulShape lower_to_matmul(const LayerNode& layer, const Graph& g, int array_cols);

// One systolic pass: k reduction rows (<= array_rows) against n output
// channels (<= array_cols) streamed over m output vectors.
struct Tile {
  std::int64_t m = 0;
  int k = 0;
  int n = 0;
};

// The weight subset resident during one stage: a run of whole column
// tiles, or a run of reduction-row groups of a single oversized tile.
struct WeightSlice {
  int tile_begin = 0, tile_end = 0;  // column tiles [begin,end)
  int row_begin = 0, row_end = 0;    // reduction rows [begin,end)
  std::int64_t vectors = 0;          // local vectors the slice occupies
};

// Largest run of output pixels whose streams fit the per-partition local
// regions and whose output window fits the accumulators.
struct Partition {
  std::int64_t pix_begin = 0, pix_end = 0;  // output pixel range
  int out_row_begin = 0, out_row_end = 0;   // output image rows (spatial ops)
  int in_row_begin = 0, in_row_end = 0;     // input rows the window covers
  std::int64_t input_window_vectors = 0;    // primary operand, tensor form
  std::int64_t operand_window_vectors = 0;  // secondary operand (binary ops)
  std::int64_t local_vectors_used = 0;
  std::int64_t accum_vectors_used = 0;
  std::vector<Tile> tiles;
};

struct TrafficStats {
  std::int64_t weight_bytes_loaded = 0;
  std::int64_t input_bytes_loaded = 0;
  std::int64_t output_bytes_stored = 0;
  std::int64_t stage_count = 0;
  std::int64_t partition_count = 0;

  TrafficStats& operator+=(const TrafficStats& o);
};

struct Stage {
  WeightSlice weights;
  std::vector<Partition> partitions;
};

struct LayerSchedule {
  int layer_id = 0;
  Op op = Op::Relu;
  std::string name;
  bool fused_into_producer = false;  // relu folded into conv/dense/add
  bool matmul_backed = false;
  bool accumulate_across_stages = false;  // stages split reduction rows
  MatmulShape mm;
  ConvWindow window;
  std::vector<Stage> stages;
  TrafficStats traffic;

  std::int64_t stage_count() const { return static_cast<std::int64_t>(stages.size()); }
  std::int64_t partition_count() const {
    return stages.empty() ? 0 : static_cast<std::int64_t>(stages.front().partitions.size());
  }
};

// Per-partition quotas of local memory under the streaming strategies.
// The streaming planner assumes the model is far larger than local memory,
// so it never sizes regions from the layer at hand: local memory is split
// into four fixed regions (weight slice / reduction stream / secondary
// operand / output staging), each a quarter of the vector capacity. The
// resident strategy is the adaptive one and ignores these quotas.
std::int64_t streaming_region_vectors(const ArchConfig& cfg);

LayerSchedule schedule_layer(const LayerNode& layer, const Graph& g, const ArchConfig& cfg,
                             Strategy strategy);

// Schedules every node, topological order preserved. Under LocalResident
// this also verifies that pinned activations plus each layer's transient
// working set fit local memory, and raises InfeasibleError naming the
// first failing layer otherwise.
std::vector<LayerSchedule> schedule_graph(const Graph& g, const ArchConfig& cfg,
                                          Strategy strategy);

TrafficStats traffic_totals(const std::vector<LayerSchedule>& schedules);

// Human-readable stage/partition tree with vector budgets and byte
// counters, one block per layer.
std::string schedule_report(const std::vector<LayerSchedule>& schedules, const ArchConfig& cfg);
// Machine-readable counters for the benchmark harness.
std::string schedule_counters_json(const std::vector<LayerSchedule>& schedules);

// Vector-aligned tensor layout shared by the scheduler, the emitter and
// the machine: each pixel occupies ceil(c / array_cols) vectors.
std::int64_t tensor_c_vectors(const TensorShape& s, int array_cols);
std::int64_t tensor_vectors(const TensorShape& s, int array_cols);
std::int64_t tensor_bytes(const TensorShape& s, const ArchConfig& cfg);

}  // namespace accel
