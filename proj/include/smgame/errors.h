#ifndef SMGAME_ERRORS_H_
#define SMGAME_ERRORS_H_

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace smgame {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad shapes, out-of-range parameters, unknown catalog keys.
class ArgumentError : public Error {
 public:
  using Error::Error;
};

// A query the game's representation cannot answer, e.g. a profit of a
// gradient-only game.
class UnsupportedQuery : public Error {
 public:
  using Error::Error;
};

// Non-finite values produced by an oracle. Carries the player (for gradient
// evaluation) or the joint coordinate (for Jacobian probing) when known.
class NumericError : public Error {
 public:
  NumericError(const std::string& what, std::optional<std::size_t> player,
               std::optional<std::size_t> coordinate)
      : Error(what), player_(player), coordinate_(coordinate) {}

  std::optional<std::size_t> player() const { return player_; }
  std::optional<std::size_t> coordinate() const { return coordinate_; }

 private:
  std::optional<std::size_t> player_;
  std::optional<std::size_t> coordinate_;
};

}  // namespace smgame

#endif  // SMGAME_ERRORS_H_
