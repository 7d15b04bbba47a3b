#pragma once

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace sr {

class ShapeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Arrow {
  std::string name, src, dst;
  bool operator==(const Arrow&) const = default;
};

/// Two paths asserted equal. A path lists arrow names in the order they are
/// applied: {"a","b"} means a first, then b. An empty side is the identity.
struct Relation {
  std::vector<std::string> lhs, rhs;
  bool operator==(const Relation&) const = default;
};

/// A finitely presented category: objects, generating arrows, relations.
class Shape {
 public:
  Shape() = default;
  Shape(std::vector<std::string> objects, std::vector<Arrow> arrows, std::vector<Relation> relations = {});

  const std::vector<std::string>& objects() const { return objects_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  const std::vector<Relation>& relations() const { return relations_; }
  std::size_t num_objects() const { return objects_.size(); }
  std::size_t num_arrows() const { return arrows_.size(); }

  std::size_t object_index(const std::string& name) const;
  std::size_t arrow_index(const std::string& name) const;
  bool has_object(const std::string& name) const { return obj_idx_.count(name) > 0; }
  bool has_arrow(const std::string& name) const { return arr_idx_.count(name) > 0; }
  std::size_t src(std::size_t arrow) const { return src_[arrow]; }
  std::size_t dst(std::size_t arrow) const { return dst_[arrow]; }
  const std::vector<std::size_t>& out_arrows(std::size_t obj) const { return out_[obj]; }
  const std::vector<std::size_t>& in_arrows(std::size_t obj) const { return in_[obj]; }
  /// Arrow indices of a path, checked for composability.
  std::vector<std::size_t> path_indices(const std::vector<std::string>& path) const;

  bool is_source(std::size_t obj) const { return in_[obj].empty(); }
  bool is_sink(std::size_t obj) const { return out_[obj].empty(); }
  /// True when the generating arrows contain no directed cycle.
  bool is_acyclic() const;
  /// reach[v][w]: there is a directed path (possibly empty) from v to w.
  std::vector<std::vector<bool>> reachability() const;
  /// Number of directed paths from v to w (capped at 2).
  std::vector<std::vector<int>> path_counts() const;

  bool operator==(const Shape& o) const {
    return objects_ == o.objects_ && arrows_ == o.arrows_ && relations_ == o.relations_;
  }
  bool operator!=(const Shape& o) const { return !(*this == o); }

 private:
  std::vector<std::string> objects_;
  std::vector<Arrow> arrows_;
  std::vector<Relation> relations_;
  std::map<std::string, std::size_t> obj_idx_, arr_idx_;
  std::vector<std::size_t> src_, dst_;
  std::vector<std::vector<std::size_t>> out_, in_;
};

namespace shapes {

/// A_n on objects "1".."n"; orient[i] true means arrow i -> i+1, false i+1 -> i.
Shape linear(const std::vector<bool>& orient);
Shape linear(std::size_t n);  // all arrows to the right
Shape loop();                 // one object "v", one arrow "phi"
/// Star with center "c" and arms "a1".."an"; inward[i] true means ai -> c.
Shape star(const std::vector<bool>& inward);
Shape star(std::size_t n, bool inward);
/// Cycle Ã_n on objects "0".."n"; clockwise[i] true means i -> i+1 (mod n+1).
Shape atilde(const std::vector<bool>& clockwise);
/// D̃4 with two arrows into the center and two out of it:
/// in1 -> c, in2 -> c, c -> out1, c -> out2.
Shape d4tilde_two_two();
/// E6 with arms a1-a2-c, b1-b2-c (length two) and s-c (length one).
/// out[i] is true when arrow i points away from the center; order of arrows:
/// (a2,a1), (c,a2), (b2,b1), (c,b2), (c,s) as undirected edges.
Shape e6(const std::vector<bool>& out);
/// Rows x cols grid poset, objects "r,c" (1-based), arrows right and up,
/// with commutativity relations on every square.
Shape grid(std::size_t rows, std::size_t cols);

}  // namespace shapes

}  // namespace sr
