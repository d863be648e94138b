#pragma once

#include "vdt/exppoly.hpp"
#include "vdt/poly.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace vdt {

/// Exact Wronskian det(h_j^{(i)}) by division-free expansion over column
/// subsets; identically zero iff the inputs are linearly dependent.
ExpPoly wronskian(const std::vector<ExpPoly>& h);

/// Prop-2.1-style scaling identity W(g h_0, ..., g h_n) = g^{n+1} W(h),
/// verified as an exact symbolic equality.
bool wronskian_scaling_check(const std::vector<ExpPoly>& h, const ExpPoly& g);

/// Subsets are encoded as bitmasks over {0..M}; helpers for deterministic
/// enumeration in lexicographic order of the index lists.
std::vector<std::uint32_t> subsets_of_size(int m_plus_1, int size);
std::vector<int> subset_indices(std::uint32_t mask);

/// Derived curve F_{V,p}: all (p+1)-subset Wronskians of the basis-composed
/// components v_i(F), plus the machinery shared across levels.
class DerivedCurveSet {
public:
    DerivedCurveSet(const CurveRep& F, const QuotientBasis& B);

    int M() const { return M_; }
    const CurveRep& base() const { return F_; }
    const QuotientBasis& basis() const { return B_; }
    const std::vector<ExpPoly>& composed() const { return vF_; }

    /// W_z(v_{i_0}(F), ..., v_{i_p}(F)) for the sorted subset in `mask`.
    const ExpPoly& subset_wronskian(std::uint32_t mask) const;

    /// |F_{V,p}|(z); stable log form, -inf on the degeneracy locus.
    double log_norm(int p, const CDouble& z) const;

    /// Nondegeneracy certificate: the top Wronskian is not identically zero.
    bool nondegenerate() const;
    /// When degenerate: exact coordinates c with sum c_i v_i(F) == 0, a
    /// hypersurface witness of degeneracy over I_d(V).
    std::vector<GaussRat> degeneracy_witness() const;

private:
    CurveRep F_;
    QuotientBasis B_;
    int M_;
    std::vector<ExpPoly> vF_;
    std::map<std::uint32_t, ExpPoly> minors_; // all levels, keyed by subset mask
};

/// Level-p slice of a DerivedCurveSet.
struct DerivedCurve {
    const DerivedCurveSet* set = nullptr;
    int p = 0;

    std::vector<std::uint32_t> component_masks() const {
        return subsets_of_size(set->M() + 1, p + 1);
    }
    const ExpPoly& component(std::uint32_t mask) const { return set->subset_wronskian(mask); }
    double log_norm(const CDouble& z) const { return set->log_norm(p, z); }
};

/// Interior product F_{V,p}(Q): one ExpPoly per p-subset J,
///   sum_{l not in J} a_l W_z(v_l(F), v_{J_1}(F), ..., v_{J_p}(F)),
/// with a the exact basis coordinates of [Q].
struct InteriorProduct {
    int p = 0;
    std::vector<std::uint32_t> masks; // p-subsets
    std::vector<ExpPoly> components;
    double norm_factor = 1.0; // sqrt(sum |a_i|^2), for unit normalization

    /// log |F_{V,p}(Q)|(z) of the unit-normalized Q.
    double log_norm(const CDouble& z) const;
};

InteriorProduct interior_product_against(const DerivedCurveSet& D, int p,
                                         const std::vector<GaussRat>& a);
InteriorProduct interior_product_against(const DerivedCurveSet& D, int p,
                                         const HomogeneousPolynomial& Q);

struct ContactValue {
    int p = 0;
    double value = 0.0;    // phi_{V,p}(Q)(z) in [0,1] for unit-normalized Q
    bool degenerate = false; // |F_{V,p}|(z) == 0: excluded point
};

/// phi_{V,p}(Q)(z) = |F_{V,p}(Q)| / |F_{V,p}|, unit-normalized in the basis
/// coordinates of Q.
ContactValue contact_function(const DerivedCurveSet& D, int p, const InteriorProduct& ip,
                              const CDouble& z);

} // namespace vdt
