#include "smgame/partition.h"

#include <algorithm>
#include <string>

#include "smgame/errors.h"

namespace smgame {

ParameterPartition::ParameterPartition(std::vector<std::size_t> player_dims)
    : dims_(std::move(player_dims)) {
  if (dims_.empty()) throw ArgumentError("partition needs at least one player");
  offsets_.reserve(dims_.size());
  for (std::size_t i = 0; i < dims_.size(); ++i) {
    if (dims_[i] == 0) {
      throw ArgumentError("player " + std::to_string(i) + " has dimension 0");
    }
    offsets_.push_back(total_);
    total_ += dims_[i];
  }
}

ParameterPartition ParameterPartition::Scalars(std::size_t num_players) {
  return ParameterPartition(std::vector<std::size_t>(num_players, 1));
}

std::size_t ParameterPartition::OwnerOf(std::size_t coordinate) const {
  if (coordinate >= total_) throw ArgumentError("coordinate out of range");
  const auto it =
      std::upper_bound(offsets_.begin(), offsets_.end(), coordinate);
  return static_cast<std::size_t>(it - offsets_.begin()) - 1;
}

}  // namespace smgame
