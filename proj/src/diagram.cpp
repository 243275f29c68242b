#include "staircase/diagram.hpp"

#include <algorithm>
#include <numeric>

namespace staircase {

namespace {

int floor_div(int a, int b) {
    int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

void validate_cell(const PeriodCell& c) {
    if (c.m < 1 || c.n < 1) throw std::invalid_argument("period parameters must be positive");
    if (static_cast<int>(c.bottoms.size()) != c.m)
        throw std::invalid_argument("period cell needs one bottom per column");
    for (int t = 1; t < c.m; ++t)
        if (c.bottoms[t] > c.bottoms[t - 1])
            throw std::invalid_argument("period cell bottoms must be non-increasing");
    if (c.bottoms.back() < c.bottoms.front() - c.n)
        throw std::invalid_argument("period cell wrap exceeds n: not closed under +(1,0)");
}

// Bottom row of column i for the anchored-at-origin periodic set.
long cell_bottom(const PeriodCell& c, int i) {
    int k = floor_div(i, c.m);
    int t = i - k * c.m;
    return static_cast<long>(c.bottoms[t]) - static_cast<long>(k) * c.n;
}

}  // namespace

Diagram Diagram::full_plane() {
    Diagram d;
    d.form_ = DiagramForm::FullPlane;
    return d;
}

Diagram Diagram::quadrant(LatticePoint anchor) {
    Diagram d;
    d.form_ = DiagramForm::Quadrant;
    d.anchor_ = anchor;
    return d;
}

Diagram Diagram::half_plane_rows(LatticePoint anchor) {
    Diagram d;
    d.form_ = DiagramForm::HalfPlaneRows;
    d.anchor_ = anchor;
    return d;
}

Diagram Diagram::half_plane_cols(LatticePoint anchor) {
    Diagram d;
    d.form_ = DiagramForm::HalfPlaneCols;
    d.anchor_ = anchor;
    return d;
}

Diagram Diagram::finite_corner(std::vector<LatticePoint> corners, LatticePoint anchor) {
    if (corners.empty()) throw std::invalid_argument("finite corner set must be nonempty");
    std::sort(corners.begin(), corners.end());
    for (size_t a = 1; a < corners.size(); ++a) {
        if (corners[a].i <= corners[a - 1].i || corners[a].j >= corners[a - 1].j)
            throw std::invalid_argument(
                "corners must strictly increase in i and strictly decrease in j");
    }
    Diagram d;
    d.form_ = DiagramForm::FiniteCorner;
    d.anchor_ = anchor;
    d.corners_ = std::move(corners);
    return d;
}

Diagram Diagram::periodic(PeriodCell cell, LatticePoint anchor) {
    validate_cell(cell);
    Diagram d;
    d.form_ = DiagramForm::Periodic;
    d.anchor_ = anchor;
    d.cell_ = std::move(cell);
    return d;
}

const PeriodCell& Diagram::cell() const {
    if (form_ != DiagramForm::Periodic) throw std::logic_error("diagram is not periodic");
    return cell_;
}

bool Diagram::contains(LatticePoint p) const {
    const int u = p.i - anchor_.i;
    const int v = p.j - anchor_.j;
    switch (form_) {
        case DiagramForm::FullPlane: return true;
        case DiagramForm::Quadrant: return u >= 0 && v >= 0;
        case DiagramForm::HalfPlaneRows: return v >= 0;
        case DiagramForm::HalfPlaneCols: return u >= 0;
        case DiagramForm::FiniteCorner:
            for (const auto& c : corners_)
                if (u >= c.i && v >= c.j) return true;
            return false;
        case DiagramForm::Periodic: return v >= cell_bottom(cell_, u);
    }
    return false;
}

Diagram Diagram::translated(LatticePoint v) const {
    Diagram d = *this;
    d.anchor_ = anchor_ + v;
    return d;
}

std::vector<LatticePoint> Diagram::corners() const {
    switch (form_) {
        case DiagramForm::FullPlane: throw std::domain_error("no corner set");
        case DiagramForm::HalfPlaneRows:
        case DiagramForm::HalfPlaneCols: throw std::domain_error("infinite corner set");
        case DiagramForm::Quadrant: return {anchor_};
        case DiagramForm::FiniteCorner: {
            std::vector<LatticePoint> out;
            out.reserve(corners_.size());
            for (const auto& c : corners_) out.push_back(anchor_ + c);
            return out;
        }
        case DiagramForm::Periodic: {
            std::vector<LatticePoint> out;
            for (int t = 0; t < cell_.m; ++t) {
                long left = (t == 0) ? cell_.bottoms[cell_.m - 1] + cell_.n : cell_.bottoms[t - 1];
                if (left > cell_.bottoms[t])
                    out.push_back(anchor_ + LatticePoint{t, cell_.bottoms[t]});
            }
            return out;
        }
    }
    return {};
}

DiagramClass classify(const Diagram& d) {
    DiagramClass c;
    switch (d.form()) {
        case DiagramForm::FullPlane:
            c.tag = DiagramClass::Tag::Simple;
            c.kind = DiagramClass::SimpleKind::FullPlane;
            return c;
        case DiagramForm::Quadrant:
            c.tag = DiagramClass::Tag::Simple;
            c.kind = DiagramClass::SimpleKind::Quadrant;
            return c;
        case DiagramForm::HalfPlaneRows:
            c.tag = DiagramClass::Tag::Simple;
            c.kind = DiagramClass::SimpleKind::RowsHalfPlane;
            return c;
        case DiagramForm::HalfPlaneCols:
            c.tag = DiagramClass::Tag::Simple;
            c.kind = DiagramClass::SimpleKind::ColsHalfPlane;
            return c;
        case DiagramForm::FiniteCorner:
            if (d.corners().size() == 1) {
                c.tag = DiagramClass::Tag::Simple;
                c.kind = DiagramClass::SimpleKind::Quadrant;
            } else {
                // A finite corner set of size >= 2 admits no invariance vector
                // (m,-n), and is equivalent to none of the four simple sets.
                c.tag = DiagramClass::Tag::Irregular;
            }
            return c;
        case DiagramForm::Periodic: {
            // Invariance vectors of a periodic staircase form a rank-one
            // semigroup; the minimal pair divides (m,n) componentwise.
            const PeriodCell& cell = d.cell();
            int g = std::gcd(cell.m, cell.n);
            c.tag = DiagramClass::Tag::Periodic;
            c.period_m = cell.m;
            c.period_n = cell.n;
            for (int t = g; t >= 2; --t) {
                if (cell.m % t != 0 || cell.n % t != 0) continue;
                int mp = cell.m / t, np = cell.n / t;
                bool ok = true;
                for (int i = 0; i < cell.m && ok; ++i)
                    ok = cell_bottom(cell, i + mp) == cell_bottom(cell, i) - np;
                if (ok) {
                    c.period_m = mp;
                    c.period_n = np;
                    break;
                }
            }
            return c;
        }
    }
    return c;
}

Diagram period_normalize(const Diagram& d, int l) {
    if (d.form() != DiagramForm::Periodic)
        throw std::invalid_argument("period_normalize requires a periodic diagram");
    if (l < 1) throw std::invalid_argument("multiplier must be positive");
    const PeriodCell& cell = d.cell();
    PeriodCell big;
    big.m = cell.m * l;
    big.n = cell.n * l;
    big.bottoms.resize(big.m);
    for (int i = 0; i < big.m; ++i) big.bottoms[i] = static_cast<int>(cell_bottom(cell, i));
    return Diagram::periodic(std::move(big), d.anchor());
}

PointSet restrict_to_window(const Diagram& d, const Window& w) {
    PointSet out;
    for (int i = w.i_min; i <= w.i_max; ++i)
        for (int j = w.j_min; j <= w.j_max; ++j)
            if (d.contains({i, j})) out.insert(out.end(), {i, j});
    return out;
}

}  // namespace staircase
