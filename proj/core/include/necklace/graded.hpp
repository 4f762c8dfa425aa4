#pragma once

#include "necklace/error.hpp"
#include "necklace/rational.hpp"

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace necklace {

/// Finite-dimensional Z-graded vector space with named generators.
/// Generators are addressed by stable integer index; names are presentation
/// only. `shift` records an applied degree shift [k], with space[k]^i = space^{i+k}:
/// a generator of base degree deg sits in shifted degree deg - shift.
class GradedSpace {
  public:
    GradedSpace(std::vector<std::pair<std::string, int>> generators, int shift = 0);

    std::size_t dim() const { return degrees_.size(); }
    int degree(std::size_t i) const { return degrees_.at(i) - shift_; }
    int base_degree(std::size_t i) const { return degrees_.at(i); }
    const std::string& name(std::size_t i) const { return names_.at(i); }
    int shift() const { return shift_; }
    std::size_t index_of(const std::string& name) const;

    GradedSpace shifted(int k) const;
    bool same_as(const GradedSpace& other) const;

  private:
    std::vector<std::string> names_;
    std::vector<int> degrees_; // base degrees, before shift
    int shift_ = 0;
};

using SpacePtr = std::shared_ptr<const GradedSpace>;

inline SpacePtr make_graded_space(std::vector<std::pair<std::string, int>> generators)
{
    return std::make_shared<GradedSpace>(std::move(generators));
}

/// Degree-n graded-symmetric bilinear form on a GradedSpace. Degeneracy is
/// permitted; is_nondegenerate() reports invertibility of the Gram matrix.
///
/// Constraints enforced at construction:
///   (a,b) != 0 only if deg a + deg b = n,
///   (a,b) = (-1)^{deg a * deg b} (b,a)   (conflicting input is rejected).
class InnerProduct {
  public:
    InnerProduct(SpacePtr base, int form_degree,
                 std::vector<std::tuple<std::size_t, std::size_t, Rational>> entries);

    const GradedSpace& space() const { return *base_; }
    const SpacePtr& space_ptr() const { return base_; }
    int form_degree() const { return degree_; }

    Rational value(std::size_t i, std::size_t j) const;
    bool is_nondegenerate() const;

    /// Inverse Gram matrix; requires nondegeneracy.
    std::vector<std::vector<Rational>> inverse_gram() const;

    bool same_as(const InnerProduct& other) const;

  private:
    SpacePtr base_;
    int degree_;
    std::map<std::pair<std::size_t, std::size_t>, Rational> entries_;
};

using FormPtr = std::shared_ptr<const InnerProduct>;

FormPtr make_form(SpacePtr space, int n,
                  std::vector<std::tuple<std::size_t, std::size_t, Rational>> entries);

/// Graded associative algebra with an invariant pairing. The multiplication
/// table holds structure constants: mult[{i,j}] = sum_k c_{ij}^k e_k.
/// Construction verifies, exhaustively over basis triples:
///   grading   deg(e_i e_j) = deg e_i + deg e_j,
///   associativity  (e_i e_j) e_k = e_i (e_j e_k),
///   invariance     (e_i e_j, e_k) = (e_i, e_j e_k).
class FrobeniusAlgebra {
  public:
    FrobeniusAlgebra(SpacePtr space, FormPtr form,
                     std::map<std::pair<std::size_t, std::size_t>,
                              std::vector<std::pair<std::size_t, Rational>>>
                         mult);

    const GradedSpace& space() const { return *space_; }
    const SpacePtr& space_ptr() const { return space_; }
    const InnerProduct& form() const { return *form_; }
    const FormPtr& form_ptr() const { return form_; }

    /// Coefficient of e_k in e_i * e_j.
    Rational mult(std::size_t i, std::size_t j, std::size_t k) const;

    /// Dense product of basis vectors: e_i * e_j as a coefficient vector.
    std::vector<Rational> product(std::size_t i, std::size_t j) const;

  private:
    SpacePtr space_;
    FormPtr form_;
    std::map<std::pair<std::size_t, std::size_t>, std::vector<Rational>> table_;
};

using FrobeniusPtr = std::shared_ptr<const FrobeniusAlgebra>;

FrobeniusPtr frobenius_from_table(SpacePtr space, FormPtr form,
                                  std::map<std::pair<std::size_t, std::size_t>,
                                           std::vector<std::pair<std::size_t, Rational>>>
                                      mult);

} // namespace necklace
