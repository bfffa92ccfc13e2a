#pragma once

#include <cstddef>
#include <vector>

namespace iswe {

/// Dense 2D array addressed by signed cell indices with a ghost margin.
/// Valid indices are i in [-ng, nx+ng] and j in [-ng, ny+ng]; the extra
/// slot on the high side holds the last face of a face-centred array.
template <class T>
class Array2 {
public:
    Array2() = default;
    Array2(int nx, int ny, int ng, const T& init = T{})
        : nx_(nx), ny_(ny), ng_(ng), sx_(nx + 2 * ng + 1),
          data_(static_cast<std::size_t>(sx_) * (ny + 2 * ng + 1), init) {}

    T& operator()(int i, int j) { return data_[index(i, j)]; }
    const T& operator()(int i, int j) const { return data_[index(i, j)]; }

    int nx() const { return nx_; }
    int ny() const { return ny_; }
    int ng() const { return ng_; }
    void fill(const T& v) { data_.assign(data_.size(), v); }

private:
    std::size_t index(int i, int j) const {
        return static_cast<std::size_t>(j + ng_) * sx_ + static_cast<std::size_t>(i + ng_);
    }

    int nx_ = 0, ny_ = 0, ng_ = 0, sx_ = 0;
    std::vector<T> data_;
};

/// Cell field with `nc` components stored as separate planes.
class Field {
public:
    Field() = default;
    Field(int nc, int nx, int ny, int ng) : planes_(nc, Array2<double>(nx, ny, ng, 0.0)) {}

    int components() const { return static_cast<int>(planes_.size()); }
    int nx() const { return planes_.front().nx(); }
    int ny() const { return planes_.front().ny(); }
    int ng() const { return planes_.front().ng(); }

    double& operator()(int c, int i, int j) { return planes_[c](i, j); }
    double operator()(int c, int i, int j) const { return planes_[c](i, j); }
    Array2<double>& plane(int c) { return planes_[c]; }
    const Array2<double>& plane(int c) const { return planes_[c]; }

private:
    std::vector<Array2<double>> planes_;
};

}  // namespace iswe
