#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "staircase/diagram.hpp"
#include "staircase/lattice.hpp"

namespace staircase {

enum class ShiftDir { W, Z };

/// Whether a windowed answer is backed by a symbolic description (exact on
/// all of Z^2) or only by the finite point set visible in the window.
enum class Soundness { Exact, WindowLimited };

struct Flagged {
    bool value = false;
    Soundness soundness = Soundness::WindowLimited;
    explicit operator bool() const { return value; }
};

/// Monomial twist w^a z^b applied to a diagram: the symbolic description of a
/// subspace spanned by monomials.
struct Symbolic {
    Diagram diagram;
    LatticePoint twist{0, 0};

    Diagram effective() const { return diagram.translated(twist); }
};

/// Exact model of a subspace spanned by monomials w^i z^j: a set of lattice
/// points inside a window.  Shifts act by translating points, so invariance,
/// kernels and Wold splittings are pure set combinatorics.
class MonomialSubspace {
  public:
    static MonomialSubspace from_diagram(const Diagram& d, const Window& w,
                                         LatticePoint twist = {0, 0});
    static MonomialSubspace from_points(PointSet pts, const Window& w);

    const PointSet& points() const { return points_; }
    const Window& window() const { return window_; }
    const std::optional<Symbolic>& symbolic() const { return symbolic_; }
    bool empty() const { return points_.empty(); }

    /// Membership in the modeled subspace.  With a symbolic description this
    /// is exact for any lattice point; otherwise it is the literal point set.
    bool member(LatticePoint p) const;

  private:
    PointSet points_;
    Window window_;
    std::optional<Symbolic> symbolic_;
};

/// Points of M translated k steps in the given direction, clipped to the
/// extended window.  k beyond the margin is refused rather than truncated.
PointSet shift_image(const MonomialSubspace& m, ShiftDir dir, int k);

Flagged is_invariant(const MonomialSubspace& m, ShiftDir dir);

/// Wandering set of the restricted shift: points of M whose backward step
/// leaves the subspace.
PointSet kernel_of_adjoint(const MonomialSubspace& m, ShiftDir dir);

struct WoldSplit {
    PointSet unitary_part;
    std::vector<PointSet> shift_layers;  // layer k = points with backward run length k
    Soundness soundness = Soundness::WindowLimited;
};

WoldSplit wold_single(const MonomialSubspace& m, ShiftDir dir);

struct CommuteWitness {
    LatticePoint point;
    std::string identity;
    std::optional<LatticePoint> lhs;  // nullopt encodes the zero vector
    std::optional<LatticePoint> rhs;
    double defect_norm = 0.0;
};

struct CommuteCheck {
    bool ok = true;
    std::optional<CommuteWitness> witness;
};

/// Compare the two mixed shift/adjoint compositions on every basis point.
/// In the monomial model each side is a basis point or zero, so the defect
/// norm at a failing point is exactly 1.
CommuteCheck doubly_commute_check(const MonomialSubspace& m);

/// Whether the projections onto the ranges of the m-th w-power and n-th
/// z-power commute.  Both ranges are coordinate subspaces here, so this is a
/// set-algebra identity; it is evaluated literally.
bool range_projection_commutator(const MonomialSubspace& m, int pw, int pz);

struct ExactPairReport {
    Flagged invariant_w, invariant_z;
    bool doubly_commuting = false;
    std::pair<int, int> compatible_checked_up_to{0, 0};
    PointSet uu, us, su, ss;  // (w,z) unitary/shift split, in that order
};

/// Split M into the four reducing parts cut out by the one-variable Wold
/// splittings in each direction.  Requires the pair to doubly commute on M.
ExactPairReport fourfold_decompose(const MonomialSubspace& m);

struct RecoveredDiagram {
    enum class Status { Ok, Inconclusive };
    Status status = Status::Inconclusive;
    LatticePoint twist{0, 0};
    std::optional<Diagram> diagram;
    Soundness soundness = Soundness::WindowLimited;
    std::string note;
};

/// Rebuild a finite description from the visible points: a quadrant or corner
/// staircase from minimal points, or a periodic candidate when the column
/// bottom profile repeats with a drop.  Never returns a diagram that
/// disagrees with M on the window.
RecoveredDiagram recover_diagram(const MonomialSubspace& m);

/// First index k in `seq` for which applying the backward z-power and forward
/// w-power of order (m_k, n_k) annihilates a vector supported on `x_support`
/// (Hardy-side convention: the backward z-shift kills rows below 0).
/// Returns nullopt if no entry annihilates it.
std::optional<int> vanish_check(const MonomialSubspace& m, const PointSet& x_support,
                                const std::vector<std::pair<int, int>>& seq);

}  // namespace staircase
