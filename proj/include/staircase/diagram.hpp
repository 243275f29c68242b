#pragma once

#include <optional>
#include <vector>

#include "staircase/lattice.hpp"

namespace staircase {

enum class DiagramForm { FullPlane, Quadrant, HalfPlaneRows, HalfPlaneCols, FiniteCorner, Periodic };

/// One period cell of a periodic staircase: columns 0..m-1 with bottom rows
/// `bottoms`, the whole set repeating under translation by (m,-n).
/// Validity: bottoms non-increasing and bottoms[m-1] >= bottoms[0] - n, which
/// is exactly closure of the glued set under +(1,0).
struct PeriodCell {
    int m = 1;
    int n = 1;
    std::vector<int> bottoms;
};

/// A staircase subset J of Z^2 closed under adding (1,0) and (0,1), in one of
/// the finitely describable forms.  `anchor` translates the whole set, so
/// translation is always O(1) and never changes the form.
class Diagram {
  public:
    static Diagram full_plane();
    static Diagram quadrant(LatticePoint anchor = {0, 0});
    static Diagram half_plane_rows(LatticePoint anchor = {0, 0});  // Z x Z_+ shape
    static Diagram half_plane_cols(LatticePoint anchor = {0, 0});  // Z_+ x Z shape
    static Diagram finite_corner(std::vector<LatticePoint> corners, LatticePoint anchor = {0, 0});
    static Diagram periodic(PeriodCell cell, LatticePoint anchor = {0, 0});

    DiagramForm form() const { return form_; }
    LatticePoint anchor() const { return anchor_; }
    const PeriodCell& cell() const;

    /// Exact membership, no window involved.
    bool contains(LatticePoint p) const;

    Diagram translated(LatticePoint v) const;

    /// Minimal points: p in J with p-(1,0) and p-(0,1) both outside J.
    /// Absolute coordinates, sorted by increasing i.  For the periodic form,
    /// the corners of one period cell.  Forms without a usable corner set are
    /// rejected.
    std::vector<LatticePoint> corners() const;

    friend bool operator==(const Diagram&, const Diagram&) = default;

  private:
    Diagram() = default;

    DiagramForm form_ = DiagramForm::Quadrant;
    LatticePoint anchor_{0, 0};
    std::vector<LatticePoint> corners_;  // relative to anchor, FiniteCorner only
    PeriodCell cell_;                    // Periodic only
};

struct DiagramClass {
    enum class Tag { Simple, Periodic, Irregular };
    enum class SimpleKind { FullPlane, Quadrant, RowsHalfPlane, ColsHalfPlane };

    Tag tag = Tag::Irregular;
    SimpleKind kind = SimpleKind::Quadrant;  // meaningful for Simple
    int period_m = 0, period_n = 0;          // minimal pair, meaningful for Periodic

    friend bool operator==(const DiagramClass&, const DiagramClass&) = default;
};

/// Simple / Periodic(minimal m,n) / Irregular.  Translation invariant.
DiagramClass classify(const Diagram& d);

/// Rewrite a periodic diagram over the l-fold period cell; the point set is
/// unchanged, the parameters become (l*m, l*n).
Diagram period_normalize(const Diagram& d, int l);

PointSet restrict_to_window(const Diagram& d, const Window& w);

}  // namespace staircase
