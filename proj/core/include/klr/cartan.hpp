#ifndef KLR_CARTAN_HPP
#define KLR_CARTAN_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "klr/errors.hpp"

namespace klr {

enum class IndexClass { Re, Im, Iso };  // Iso is the a_ii = 0 subcase of Im

/// Validated Borcherds-Cartan datum over a finite index set. Indices are
/// opaque string identifiers; their input order fixes the total order used
/// for canonical sorting everywhere downstream. Immutable after validation.
class CartanDatum {
 public:
  CartanDatum(std::vector<std::string> ids, std::vector<std::vector<int>> cartan,
              std::vector<int> symmetrizer,
              std::vector<std::pair<int, int>> orientation_overrides = {});

  int size() const { return static_cast<int>(ids_.size()); }
  const std::vector<std::string>& ids() const { return ids_; }
  const std::string& id(int i) const { return ids_.at(i); }
  int index_of(const std::string& id) const;

  int a(int i, int j) const { return cartan_[i][j]; }
  int r(int i) const { return sym_[i]; }

  bool is_real(int i) const { return cartan_[i][i] == 2; }
  bool is_imaginary(int i) const { return cartan_[i][i] <= 0; }
  bool is_isotropic(int i) const { return cartan_[i][i] == 0; }
  IndexClass index_class(int i) const;

  /// (alpha_i, alpha_j) = r_i a_ij = r_j a_ji.
  int form(int i, int j) const { return sym_[i] * cartan_[i][j]; }

  /// Orientation of the edge {i,j} of the graph Lambda (i != j and
  /// (alpha_i,alpha_j) != 0), for the modified relation preset.
  /// Default: i -> j iff i precedes j in the index order.
  bool edge_oriented_from(int i, int j) const;

  std::string describe() const;

 private:
  std::vector<std::string> ids_;
  std::vector<std::vector<int>> cartan_;
  std::vector<int> sym_;
  std::map<std::pair<int, int>, bool> orient_;  // (min,max) -> min->max?
};

/// Element of the root lattice written on the datum's index basis.
/// Nonnegative coordinates identify it with N[I].
class RootWeight {
 public:
  RootWeight() = default;
  explicit RootWeight(int n) : c_(n, 0) {}
  explicit RootWeight(std::vector<int> coords) : c_(std::move(coords)) {}

  static RootWeight alpha(const CartanDatum& d, int i);

  int size() const { return static_cast<int>(c_.size()); }
  int operator[](int i) const { return c_.at(i); }
  int& operator[](int i) { return c_.at(i); }
  const std::vector<int>& coords() const { return c_; }

  int ht() const;
  bool is_nonnegative() const;

  RootWeight operator+(const RootWeight& o) const;
  RootWeight operator-(const RootWeight& o) const;
  bool operator==(const RootWeight& o) const { return c_ == o.c_; }
  bool operator!=(const RootWeight& o) const { return c_ != o.c_; }
  bool operator<(const RootWeight& o) const { return c_ < o.c_; }

  std::string to_string(const CartanDatum& d) const;

 private:
  std::vector<int> c_;
};

/// Dominant integral weight, stored through its values lambda_i = lambda(h_i).
class DominantWeight {
 public:
  DominantWeight() = default;
  explicit DominantWeight(std::vector<int> values);
  int operator[](int i) const { return v_.at(i); }
  int size() const { return static_cast<int>(v_.size()); }
  const std::vector<int>& values() const { return v_; }

 private:
  std::vector<int> v_;
};

struct ValidationIssue {
  std::string code;  // OddDiagonal | PositiveDiagonal | PositiveOffDiagonal | NotSymmetrizable | BadSymmetrizer
  std::string detail;
};

struct RawDatum {
  std::vector<std::string> ids;
  std::vector<std::vector<int>> cartan;
  std::vector<int> symmetrizer;
  std::vector<std::pair<std::string, std::string>> orientation;  // optional edges "from -> to"
};

/// Checks the three defining conditions and collects every violation.
std::vector<ValidationIssue> validate_datum(const RawDatum& raw);
/// Validates and constructs; throws DatumError listing all issues on failure.
CartanDatum make_datum(const RawDatum& raw);

/// Bilinear extension of (alpha_i, alpha_j) = r_i a_ij.
long root_form(const CartanDatum& d, const RootWeight& nu, const RootWeight& mu);
/// mu(h_i) for mu in the root lattice.
long weight_pairing(const CartanDatum& d, const RootWeight& mu, int i);
/// (lambda - nu)(h_i) for a dominant lambda and root-lattice nu.
long weight_pairing(const CartanDatum& d, const DominantWeight& lambda, const RootWeight& nu, int i);

/// JSON I/O. Datum files: {"indices":[{"id":"i","r":1},...],"cartan":[[...]],
/// "orientation":[["i","j"],...]} (orientation optional).
RawDatum parse_datum_json(const std::string& text);
std::string datum_to_json(const CartanDatum& d);
/// Weight files: {"i":2,"j":0}; every index of the datum must be present or
/// defaults to 0, negative entries are rejected.
DominantWeight parse_weight_json(const CartanDatum& d, const std::string& text);

}  // namespace klr

#endif
