#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace qgrass {

struct Arrow {
  std::size_t source;
  std::size_t target;
  std::string label;

  friend bool operator==(const Arrow&, const Arrow&) = default;
};

// Finite quiver on vertices 0..vertex_count()-1.
class Quiver {
 public:
  Quiver() = default;
  // Throws PreconditionError when an arrow endpoint is out of range.
  Quiver(std::size_t vertex_count, std::vector<Arrow> arrows);

  std::size_t vertex_count() const noexcept { return vertex_count_; }
  std::size_t arrow_count() const noexcept { return arrows_.size(); }
  const std::vector<Arrow>& arrows() const noexcept { return arrows_; }
  const Arrow& arrow(std::size_t a) const { return arrows_.at(a); }

  bool is_acyclic() const;
  // Vertices such that every arrow points forward; throws if cyclic.
  std::vector<std::size_t> topological_order() const;
  std::size_t arrows_between(std::size_t from, std::size_t to) const;

  friend bool operator==(const Quiver&, const Quiver&) = default;

 private:
  std::size_t vertex_count_ = 0;
  std::vector<Arrow> arrows_;
};

// Per-vertex dimensions.
struct DimVector {
  std::vector<std::size_t> entries;

  DimVector() = default;
  explicit DimVector(std::vector<std::size_t> e) : entries(std::move(e)) {}
  static DimVector zero(std::size_t vertices) { return DimVector(std::vector<std::size_t>(vertices, 0)); }
  static DimVector unit(std::size_t vertices, std::size_t i);

  std::size_t size() const noexcept { return entries.size(); }
  std::size_t operator[](std::size_t i) const { return entries[i]; }
  std::size_t total() const;
  bool is_thin() const;
  bool is_zero() const { return total() == 0; }
  // Componentwise <=.
  bool fits_in(const DimVector& other) const;

  std::string to_string() const;

  friend DimVector operator+(const DimVector& a, const DimVector& b);
  friend DimVector operator-(const DimVector& a, const DimVector& b);
  friend bool operator==(const DimVector&, const DimVector&) = default;
  friend auto operator<=>(const DimVector&, const DimVector&) = default;
};

// Hereditary Euler form <d, e> = sum_i d_i e_i - sum_{a: i -> j} d_i e_j.
long euler_form(const Quiver& q, const DimVector& d, const DimVector& e);

}  // namespace qgrass
