#include "qgrass/quiver.hpp"

#include <numeric>
#include <sstream>

#include "qgrass/errors.hpp"

namespace qgrass {

Quiver::Quiver(std::size_t vertex_count, std::vector<Arrow> arrows)
    : vertex_count_(vertex_count), arrows_(std::move(arrows)) {
  for (const auto& a : arrows_) {
    if (a.source >= vertex_count_ || a.target >= vertex_count_) {
      throw PreconditionError("arrow '" + a.label + "' has an endpoint outside 0.." +
                              std::to_string(vertex_count_ - 1));
    }
  }
}

std::vector<std::size_t> Quiver::topological_order() const {
  std::vector<std::size_t> indegree(vertex_count_, 0);
  for (const auto& a : arrows_) ++indegree[a.target];
  std::vector<std::size_t> order;
  std::vector<bool> done(vertex_count_, false);
  // Smallest ready vertex first, so the order is deterministic.
  while (order.size() < vertex_count_) {
    std::size_t next = vertex_count_;
    for (std::size_t v = 0; v < vertex_count_; ++v) {
      if (!done[v] && indegree[v] == 0) {
        next = v;
        break;
      }
    }
    if (next == vertex_count_) throw PreconditionError("quiver has an oriented cycle");
    done[next] = true;
    order.push_back(next);
    for (const auto& a : arrows_) {
      if (a.source == next) --indegree[a.target];
    }
  }
  return order;
}

bool Quiver::is_acyclic() const {
  try {
    topological_order();
    return true;
  } catch (const PreconditionError&) {
    return false;
  }
}

std::size_t Quiver::arrows_between(std::size_t from, std::size_t to) const {
  std::size_t c = 0;
  for (const auto& a : arrows_) c += (a.source == from && a.target == to) ? 1 : 0;
  return c;
}

DimVector DimVector::unit(std::size_t vertices, std::size_t i) {
  DimVector d = zero(vertices);
  d.entries.at(i) = 1;
  return d;
}

std::size_t DimVector::total() const { return std::accumulate(entries.begin(), entries.end(), std::size_t{0}); }

bool DimVector::is_thin() const {
  for (auto v : entries) {
    if (v > 1) return false;
  }
  return true;
}

bool DimVector::fits_in(const DimVector& other) const {
  if (size() != other.size()) return false;
  for (std::size_t i = 0; i < size(); ++i) {
    if (entries[i] > other.entries[i]) return false;
  }
  return true;
}

std::string DimVector::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < entries.size(); ++i) os << (i ? "," : "") << entries[i];
  os << ')';
  return os.str();
}

DimVector operator+(const DimVector& a, const DimVector& b) {
  if (a.size() != b.size()) throw DimensionMismatch("dimension vectors of different length");
  DimVector s = a;
  for (std::size_t i = 0; i < a.size(); ++i) s.entries[i] += b.entries[i];
  return s;
}

DimVector operator-(const DimVector& a, const DimVector& b) {
  if (!b.fits_in(a)) throw DimensionMismatch("dimension vector difference would be negative");
  DimVector s = a;
  for (std::size_t i = 0; i < a.size(); ++i) s.entries[i] -= b.entries[i];
  return s;
}

long euler_form(const Quiver& q, const DimVector& d, const DimVector& e) {
  if (d.size() != q.vertex_count() || e.size() != q.vertex_count()) {
    throw DimensionMismatch("euler_form: dimension vector length does not match quiver");
  }
  long value = 0;
  for (std::size_t i = 0; i < q.vertex_count(); ++i) value += static_cast<long>(d[i] * e[i]);
  for (const auto& a : q.arrows()) value -= static_cast<long>(d[a.source] * e[a.target]);
  return value;
}

}  // namespace qgrass
