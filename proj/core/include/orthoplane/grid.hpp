#pragma once

#include <cassert>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "orthoplane/errors.hpp"

namespace orthoplane {

/// Dense row-major raster with interleaved channels: index (y, x, c).
/// Used for images (c=1 or 3), per-plane stacks (c=N) and masks.
template <typename T>
class Grid {
 public:
  Grid() = default;

  Grid(int height, int width, int channels = 1, T fill = T{})
      : height_(height), width_(width), channels_(channels) {
    if (height < 0 || width < 0 || channels < 1)
      throw ShapeMismatchError("Grid: non-positive shape");
    data_.assign(static_cast<std::size_t>(height) * width * channels, fill);
  }

  int height() const { return height_; }
  int width() const { return width_; }
  int channels() const { return channels_; }
  bool empty() const { return data_.empty(); }
  std::size_t size() const { return data_.size(); }

  std::size_t index(int y, int x, int c = 0) const {
    assert(y >= 0 && y < height_ && x >= 0 && x < width_ && c >= 0 && c < channels_);
    return (static_cast<std::size_t>(y) * width_ + x) * channels_ + c;
  }

  T& at(int y, int x, int c = 0) { return data_[index(y, x, c)]; }
  const T& at(int y, int x, int c = 0) const { return data_[index(y, x, c)]; }

  /// Pointer to the channel vector of one pixel.
  T* pixel(int y, int x) { return data_.data() + index(y, x, 0); }
  const T* pixel(int y, int x) const { return data_.data() + index(y, x, 0); }

  std::vector<T>& data() { return data_; }
  const std::vector<T>& data() const { return data_; }

  bool same_shape(const Grid& other) const {
    return height_ == other.height_ && width_ == other.width_ &&
           channels_ == other.channels_;
  }

  void fill(T value) { data_.assign(data_.size(), value); }

 private:
  int height_ = 0;
  int width_ = 0;
  int channels_ = 0;
  std::vector<T> data_;
};

using Map = Grid<double>;
using Mask = Grid<std::uint8_t>;  // nonzero = valid

inline void require_same_shape(const Map& a, const Map& b, const char* where) {
  if (!a.same_shape(b)) throw ShapeMismatchError(std::string(where) + ": shape mismatch");
}

/// Mirror a grid about the vertical axis (x -> width-1-x), all channels.
template <typename T>
Grid<T> flip_horizontal(const Grid<T>& g) {
  Grid<T> out(g.height(), g.width(), g.channels());
  for (int y = 0; y < g.height(); ++y)
    for (int x = 0; x < g.width(); ++x)
      for (int c = 0; c < g.channels(); ++c)
        out.at(y, x, c) = g.at(y, g.width() - 1 - x, c);
  return out;
}

}  // namespace orthoplane
