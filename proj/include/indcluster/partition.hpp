#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace indcluster {

// Weakly decreasing positive parts; the empty partition has no parts.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);  // trailing zeros dropped; InvalidArgument otherwise
  static Partition rectangle(int rows, int width);

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int width() const { return parts_.empty() ? 0 : parts_.front(); }
  int size() const;
  int part(int i) const { return i < length() ? parts_[static_cast<std::size_t>(i)] : 0; }  // 0-based
  bool empty() const { return parts_.empty(); }
  // Number of boxes on the main diagonal.
  int durfee() const;
  Partition conjugate() const;
  bool fits(int rows, int cols) const { return length() <= rows && width() <= cols; }
  bool is_rectangle() const;

  // "(3,2)", "()" for the empty partition.
  std::string to_string() const;
  // Variable name "d[3,2]", "d[]" for the empty partition.
  std::string label_name() const;

  auto operator<=>(const Partition&) const = default;

 private:
  std::vector<int> parts_;
};

// Accepts "[3,2]", "(3,2)", "()", "[]" and the Frobenius form "(2,0|1,0)".
Partition parse_partition(std::string_view text);

std::vector<Partition> partitions_of(int n);
std::vector<Partition> partitions_up_to(int max_size);
std::vector<Partition> partitions_in_box(int rows, int cols);

// a_i = lambda_i - i + charge for i >= 1; only the head that differs from the tail rule is stored.
struct MayaSeq {
  int charge = 0;
  std::vector<int> head;

  int at(int i) const;  // 1-based
  // Smallest j with a_k = charge - k for all k >= j.
  int rank() const { return static_cast<int>(head.size()) + 1; }
  bool operator==(const MayaSeq&) const = default;
};

MayaSeq partition_to_maya(const Partition& p, int charge = 0);
Partition maya_to_partition(const MayaSeq& a);

// Elements of the charge-0 Maya set of p that are >= floor, in decreasing order; needs floor <= -length.
std::vector<int> maya_elements(const Partition& p, int floor);
// Inverse of maya_elements: a decreasing list that contains every integer in [floor, min).
Partition partition_from_maya_elements(const std::vector<int>& decreasing, int floor);

struct Frobenius {
  std::vector<int> arms;  // strictly decreasing, nonnegative
  std::vector<int> legs;  // strictly decreasing, nonnegative, same length
  bool operator==(const Frobenius&) const = default;
};

Frobenius partition_to_frobenius(const Partition& p);
Partition frobenius_to_partition(const Frobenius& f);
std::string frobenius_to_string(const Frobenius& f);

// Increasing column indices (l_1 < ... < l_m) in [-m, n-1]; DoesNotFitBox if p is not in m x n.
std::vector<int> finite_label(const Partition& p, int rows, int cols);
// Inverse of finite_label for an m-subset of [-m, infinity), given in any order.
Partition partition_from_finite_label(std::vector<int> columns, int rows);

}  // namespace indcluster
