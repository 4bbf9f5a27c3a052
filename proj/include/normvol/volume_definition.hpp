#pragma once

#include "normvol/body.hpp"

#include <array>
#include <string>
#include <string_view>

namespace normvol {

enum class VolumeId { busemann, holmes_thompson, mass, mass_star, ivanov, dual_ivanov };

/// A definition of volume, identified by its functional B -> V(B) on unit balls.
///
/// The six named definitions are closed under duality, so "dual:<id>" always
/// resolves to one of them.
class VolumeDefinition {
  public:
    constexpr VolumeDefinition(VolumeId id = VolumeId::busemann) : id_(id) {}

    /// Accepts busemann | holmes-thompson | mass | mass-star | ivanov |
    /// dual-ivanov | dual:<id>; throws InputError otherwise.
    static VolumeDefinition parse(std::string_view text);
    static std::array<VolumeDefinition, 6> all();

    VolumeId id() const { return id_; }
    std::string_view name() const;
    VolumeDefinition dual() const;
    /// Whether the induced (n-1)-density is a norm: busemann,
    /// holmes-thompson, mass-star and ivanov are; mass and dual-ivanov are not.
    bool is_convex() const;

    friend bool operator==(VolumeDefinition, VolumeDefinition) = default;

  private:
    VolumeId id_;
};

VolumeDefinition dual_def(VolumeDefinition def);

/// V(K) for a symmetric convex body K of dimension 1..3.
///
/// busemann: omega_k; holmes-thompson: vp(K)/omega_k; mass: (2^k/k!) L(K)/max L(C)
/// over inscribed cross-polytopes; mass-star: 2^k L(K)/min L(P) over
/// circumscribed parallelotopes; ivanov / dual-ivanov: omega_k L(K)/L(E) with
/// E the John / Loewner ellipsoid. Every definition gives 2 in dimension 1.
double eval_V(VolumeDefinition def, const ConvexBody& body);

/// V(K) / L(K), the measure of the definition per unit Lebesgue volume.
double volume_ratio(VolumeDefinition def, const ConvexBody& body);

/// Volume product L(K) L(K polar).
double volume_product(const ConvexBody& body);

/// L(K polar), computed without building a canonical polytope in 2D.
double polar_volume(const ConvexBody& body);

/// The dual functional evaluated through its definition vp(K) / V(K polar),
/// without resolving the dual symbolically.
double eval_dual_generic(VolumeDefinition def, const ConvexBody& body);

/// mu-area per Euclidean area on the hyperplane with unit normal `normal`,
/// for the norm induced from the unit ball b: V(b cap W) / L(b cap W).
double density_factor(VolumeDefinition def, const ConvexBody& b, const Vec& normal);

/// mu-area per Euclidean area on p^perp for the quotient norm V/<p>:
/// V(shadow(b, p)) / L(shadow(b, p)).
double quotient_density_factor(VolumeDefinition def, const ConvexBody& b, const Vec& p);

}  // namespace normvol
