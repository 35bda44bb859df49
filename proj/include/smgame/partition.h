#ifndef SMGAME_PARTITION_H_
#define SMGAME_PARTITION_H_

#include <cstddef>
#include <span>
#include <vector>

namespace smgame {

// Splits the joint parameter vector w into per-player slices w_i.
class ParameterPartition {
 public:
  ParameterPartition() = default;
  // Throws ArgumentError on an empty list or a zero dimension.
  explicit ParameterPartition(std::vector<std::size_t> player_dims);

  // n one-dimensional players.
  static ParameterPartition Scalars(std::size_t num_players);

  std::size_t num_players() const { return dims_.size(); }
  std::size_t total_dim() const { return total_; }
  std::size_t dim(std::size_t player) const { return dims_.at(player); }
  std::size_t offset(std::size_t player) const { return offsets_.at(player); }
  const std::vector<std::size_t>& player_dims() const { return dims_; }
  const std::vector<std::size_t>& offsets() const { return offsets_; }

  // Player index owning joint coordinate `coordinate`.
  std::size_t OwnerOf(std::size_t coordinate) const;

  std::span<const double> Slice(std::span<const double> w,
                                std::size_t player) const {
    return w.subspan(offsets_.at(player), dims_.at(player));
  }
  std::span<double> Slice(std::span<double> w, std::size_t player) const {
    return w.subspan(offsets_.at(player), dims_.at(player));
  }

  bool operator==(const ParameterPartition&) const = default;

 private:
  std::vector<std::size_t> dims_;
  std::vector<std::size_t> offsets_;
  std::size_t total_ = 0;
};

}  // namespace smgame

#endif  // SMGAME_PARTITION_H_
