#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace qh {

using DimVector = std::vector<long long>;

struct Edge {
  std::string out;
  std::string in;
};

class Quiver {
public:
  Quiver() = default;
  Quiver(std::vector<std::string> vertices, std::vector<Edge> edges);

  std::size_t size() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<std::string> &vertices() const { return vertices_; }
  const std::vector<Edge> &edges() const { return edges_; }

  std::size_t index(const std::string &v) const;
  bool has_vertex(const std::string &v) const;
  std::size_t out(std::size_t h) const { return tail_[h]; }
  std::size_t in(std::size_t h) const { return head_[h]; }
  bool has_loop() const;

  DimVector simple(std::size_t i) const;
  DimVector zero() const { return DimVector(size(), 0); }

  friend bool operator==(const Quiver &a, const Quiver &b);

private:
  std::vector<std::string> vertices_;
  std::vector<Edge> edges_;
  std::vector<std::size_t> tail_, head_;
};

Quiver parse_quiver(const std::string &json_text);
std::string quiver_to_json(const Quiver &q);

// Lattice forms.
long long euler_form(const Quiver &q, const DimVector &a, const DimVector &b);
int euler_cocycle(const Quiver &q, const DimVector &a, const DimVector &b);
long long cartan_pairing(const Quiver &q, const DimVector &a, const DimVector &b);
std::vector<std::vector<long long>> cartan_matrix(const Quiver &q);

DimVector reflect(const Quiver &q, const std::string &i, const DimVector &a);

// Affine data. delta() is the primitive positive radical vector.
DimVector first_imaginary_root(const Quiver &q);
std::vector<std::string> extending_vertices(const Quiver &q);
long long defect(const Quiver &q, const DimVector &a);

bool is_sink(const Quiver &q, std::size_t i);
bool is_source(const Quiver &q, std::size_t i);
bool is_admissible(const Quiver &q, const std::string &i);
Quiver reflect_quiver(const Quiver &q, const std::string &i);

// Letters are applied right to left: the last letter acts first.
using WeylWord = std::vector<std::string>;
WeylWord coxeter_element(const Quiver &q);
DimVector apply_word(const Quiver &q, const WeylWord &w, const DimVector &a);
DimVector coxeter_transform(const Quiver &q, const DimVector &a);

enum class DynkinKind { FiniteIrreducible, FiniteReducible, Affine, Jordan, Other };

struct DynkinClass {
  DynkinKind kind = DynkinKind::Other;
  std::string type;                    // "A_3", "D(1)_4", "C_1", ...
  std::vector<std::string> components; // reducible finite case
  bool kronecker = false;
  std::size_t cyclic = 0; // N when the affine A-type carries the cyclic orientation

  bool finite() const {
    return kind == DynkinKind::FiniteIrreducible || kind == DynkinKind::FiniteReducible;
  }
  bool affine() const { return kind == DynkinKind::Affine; }
  bool affine_a() const { return affine() && type.rfind("A(1)_", 0) == 0; }
  std::string describe() const;
};

DynkinClass classify(const Quiver &q);

// Names a connected finite or affine simply-laced graph by its shape.
std::string shape_name(const Quiver &q, bool affine);

} // namespace qh
