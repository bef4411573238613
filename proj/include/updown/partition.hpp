#ifndef UPDOWN_PARTITION_HPP
#define UPDOWN_PARTITION_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace updown {

// A strict partition: a finite decreasing sequence of distinct positive
// integers.  Identified with its shifted diagram, in which row i
// (1-indexed) occupies columns i, i+1, ..., i + lambda_i - 1, so the box in
// row i and column j has content c = j - i ranging over 0..lambda_i-1.
class StrictPartition {
 public:
  StrictPartition() = default;  // the empty diagram
  explicit StrictPartition(std::vector<std::int64_t> parts);

  const std::vector<std::int64_t>& parts() const { return parts_; }
  std::int64_t weight() const { return weight_; }          // total number of boxes
  std::size_t length() const { return parts_.size(); }     // number of rows
  bool empty() const { return parts_.empty(); }
  std::int64_t part(std::size_t i) const { return parts_[i]; }  // 0-indexed

  // Diagram containment: every row of mu fits inside the same row of *this.
  bool contains(const StrictPartition& mu) const;

  bool operator==(const StrictPartition& o) const { return parts_ == o.parts_; }
  std::strong_ordering operator<=>(const StrictPartition& o) const {
    return parts_ <=> o.parts_;
  }

  std::string to_string() const;  // "[6,5,1]", "[]" for the empty diagram

 private:
  std::vector<std::int64_t> parts_;
  std::int64_t weight_ = 0;
};

// Interlacing coordinates of a shifted diagram: X = contents of the addable
// boxes, Y = contents of the removable boxes, both ascending.  Always
// |X \ {0}| = |Y|, and the two sets interlace (see interlacing_valid).
struct KerovCoordinates {
  std::vector<std::int64_t> X;
  std::vector<std::int64_t> Y;
};

// The doubled description of a shifted diagram: Frobenius-style coordinates
// of the ordinary (doubled) diagram.  For a strict partition with rows
// lambda_1 > ... > lambda_l the doubled arm/leg half-lengths are
// a_i = lambda_i + 1/2 and b_i = lambda_i - 1/2; this struct stores twice
// those values so everything stays integral.
struct FrobeniusDouble {
  std::vector<std::int64_t> twice_a;  // 2*lambda_i + 1
  std::vector<std::int64_t> twice_b;  // 2*lambda_i - 1
};

// All strict partitions of n, in decreasing lexicographic order of the part
// vectors (e.g. for n=5: [5], [4,1], [3,2]).  n=0 yields the empty diagram.
std::vector<StrictPartition> enumerate_strict(std::int64_t n);

// Number of strict partitions of n.
std::uint64_t count_strict(std::int64_t n);

// Contents of the boxes that can be added to / removed from the shifted
// diagram keeping it a shifted diagram, ascending.  An addable box in row i
// has content lambda_i; a new single-box row has content 0; a removable box
// in row i has content lambda_i - 1.
std::vector<std::int64_t> addable_contents(const StrictPartition& la);
std::vector<std::int64_t> removable_contents(const StrictPartition& la);

// Add/remove the box with the given content.  Throws std::domain_error
// naming the offending content if no such box is addable/removable.
StrictPartition add_box(const StrictPartition& la, std::int64_t content);
StrictPartition remove_box(const StrictPartition& la, std::int64_t content);

KerovCoordinates kerov_coordinates(const StrictPartition& la);

// Rebuild the diagram from interlacing coordinates.  Validates the
// interlacing pattern and throws std::invalid_argument if it is broken.
StrictPartition from_kerov(const KerovCoordinates& kc);

// True iff (X, Y) is a valid interlacing pattern:
//   either 0 = y_1 < x_1 < y_2 < ... < y_d < x_d   (diagram with a one-box row)
//   or     0 = x_0 < y_1 < x_1 < ... < y_d < x_d   (no one-box row),
// with X and Y ascending and duplicate-free.
bool interlacing_valid(const KerovCoordinates& kc);

// Multiplicity of the oriented edge mu -> la in the branching graph of
// shifted diagrams: 2 if la is mu plus a box and the number of rows stays
// the same, 1 if the box starts a new row, 0 if la does not cover mu.
int edge_multiplicity(const StrictPartition& mu, const StrictPartition& la);

FrobeniusDouble double_diagram(const StrictPartition& la);

}  // namespace updown

#endif  // UPDOWN_PARTITION_HPP
