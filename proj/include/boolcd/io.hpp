#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "boolcd/bool_matrix.hpp"
#include "boolcd/bool_tensor.hpp"
#include "boolcd/real_matrix.hpp"

namespace boolcd {

/// One threshold per feature column; a raw value passes when value >= threshold
/// (boundary inclusive).
struct ThresholdSpec {
  std::vector<double> thresholds;
};

/// Binarize raw feature values: out[i,j] = 1 iff raw[i,j] >= thresholds[j].
/// Non-finite raw cells are rejected with the offending cell named.
BoolMatrix binarize(const RealMatrix& raw, const ThresholdSpec& thresholds);

/// CSV of 0/1 integers, uniform row width. An optional header row is detected
/// by a non-numeric first line. LF and CRLF both accepted.
BoolMatrix load_slot_csv(const std::filesystem::path& path);
void save_slot_csv(const BoolMatrix& m, const std::filesystem::path& path);

/// Sparse text tensor format: header `btt 1 <O> <F> <T>`, then one zero-based
/// `o f t` triple per line for each 1-cell. Order is free and duplicate
/// triples are idempotent; unlisted cells are 0. Written with LF.
BoolTensor3 load_tensor_btt(const std::filesystem::path& path);
void save_tensor_btt(const BoolTensor3& x, const std::filesystem::path& path);

/// Real-valued CSV (no header), fixed formatting; used for covariance output.
void save_real_csv(const RealMatrix& m, const std::filesystem::path& path);
RealMatrix load_real_csv(const std::filesystem::path& path);

/// Deterministic shortest-ish formatting used by every CSV writer.
std::string format_double(double v);

}  // namespace boolcd
