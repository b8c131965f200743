#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "accel/errors.hpp"

namespace accel {

// Tensor extents, NHWC. Dense feature vectors are 1x1x1xC.
struct TensorShape {
  int n = 1, h = 1, w = 1, c = 1;

  std::int64_t elems() const {
    return std::int64_t{n} * h * w * c;
  }
  std::int64_t pixels() const { return std::int64_t{n} * h * w; }
  bool operator==(const TensorShape&) const = default;
};

std::string shape_str(const TensorShape& s);

enum class Op { Conv2d, Dense, Relu, Add, MaxPool, AvgPoolGlobal, Pad };

const char* op_name(Op op);
Op parse_op(const std::string& name);

// Reference into the flat little-endian float32 weight blob.
struct WeightRef {
  int tensor_id = 0;
  std::vector<int> dims;        // conv: [kh,kw,in_c,out_c]; dense: [in,out]; bias: [out]
  std::int64_t offset = 0;      // bytes into the blob
  std::string dtype = "float32";

  std::int64_t elems() const;
  std::int64_t byte_size() const { return elems() * 4; }
};

// One graph node. `inputs` holds node ids; id 0 is reserved for the graph
// input tensor.
struct LayerNode {
  int id = 0;
  Op op = Op::Relu;
  // conv2d / maxpool / pad attributes
  int kernel_h = 0, kernel_w = 0;
  int stride = 1;
  int pad = 0;
  int out_channels = 0;
  // dense
  int units = 0;
  std::vector<int> inputs;
  TensorShape out_shape;
  std::optional<WeightRef> weights;
  std::optional<WeightRef> bias;
  std::string name;
};

constexpr int kGraphInputId = 0;

struct Graph {
  std::vector<LayerNode> nodes;  // topologically ordered, ids 1..N
  TensorShape input_shape;
  int input_id = kGraphInputId;
  int output_id = 0;

  const LayerNode& node(int id) const;
  TensorShape shape_of(int id) const;  // id 0 -> input_shape
  // Throws ParseError unless nodes are topologically ordered, acyclic,
  // and reference only known ids.
  void check() const;
};

// Output shape of one node given its input shapes. Conv rule:
// out = floor((in + 2*pad - k)/stride) + 1 per spatial dim.
TensorShape infer_node_shape(const LayerNode& node, const std::vector<TensorShape>& ins);

// Returns a copy of `g` with every out_shape populated (idempotent).
// Throws ParseError on inconsistent shapes, e.g. add with mismatched
// operands.
Graph infer_shapes(const Graph& g, const TensorShape& input);

// CIFAR-scale residual network: 3x3x16 stem, three groups of three
// residual blocks at 16/32/64 channels with stride-2 transitions
// (1x1 projection on the skip path), global average pool, dense head.
// Batch size 1; batch norm is assumed folded into conv weights upstream.
Graph build_resnet20(int num_classes);

struct Model {
  Graph graph;
  std::vector<float> blob;  // flat float32 weight storage
};

// Model manifest (JSON) + raw weight blob I/O. The manifest is versioned
// and carries explicit byte offsets; every ref is bounds-checked on load.
Model load_model(const std::string& manifest_path, const std::string& blob_path);
void save_model(const Model& m, const std::string& manifest_path, const std::string& blob_path);
std::string manifest_json(const Graph& g);
Graph graph_from_manifest(const std::string& text);

// Deterministic random-weight model generator (He-style init). Identical
// seed -> byte-identical manifest and blob on every platform.
Model make_random_resnet20(int num_classes, std::uint64_t seed);

// Exact float32 inference, NHWC, deterministic accumulation order.
// This is the reference the fixed-point path is compared against.
std::vector<float> reference_forward(const Model& m, const std::vector<float>& input);
// Same, but also returns every node's output (indexed by node id).
std::vector<std::vector<float>> reference_forward_trace(const Model& m,
                                                        const std::vector<float>& input);

// Brute-force multiply count over conv/dense nodes:
// sum of out_h*out_w*out_c*k_h*k_w*in_c (dense: in*out). Shapes must be
// inferred.
std::int64_t total_macs(const Graph& g);

// CIFAR-10 binary records: 1 label byte + 3072 pixel bytes (planar RGB).
struct LabeledImage {
  int label = 0;
  std::vector<float> pixels;  // 32x32x3 NHWC, scaled to [0,1]
};

std::vector<LabeledImage> parse_cifar_records(const std::vector<std::uint8_t>& bytes);
std::vector<LabeledImage> load_cifar_file(const std::string& path, std::int64_t max_images = -1);
std::vector<LabeledImage> load_cifar_dir(const std::string& dir, std::int64_t max_images = -1);

// Deterministic RNG used by generators and tests; mt19937_64 for uniform
// bits and a hand-rolled Box-Muller for normals, so streams are identical
// across standard libraries.
struct Rng {
  explicit Rng(std::uint64_t seed);
  double uniform();  // [0,1)
  double normal();   // standard normal
  std::uint64_t bits();

 private:
  std::uint64_t state_[4];
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace accel
