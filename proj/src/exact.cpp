#include "staircase/exact.hpp"

#include <algorithm>
#include <map>

namespace staircase {

namespace {

LatticePoint step(ShiftDir dir) { return dir == ShiftDir::W ? LatticePoint{1, 0} : LatticePoint{0, 1}; }

/// Whether every point of the diagram has an infinite backward orbit in the
/// given direction.  Decidable per form: only the plane and the matching
/// half-plane are backward-complete.
bool backward_infinite(const Diagram& d, ShiftDir dir) {
    switch (d.form()) {
        case DiagramForm::FullPlane: return true;
        case DiagramForm::HalfPlaneRows: return dir == ShiftDir::W;
        case DiagramForm::HalfPlaneCols: return dir == ShiftDir::Z;
        default: return false;
    }
}

void require_invariant(const MonomialSubspace& m, ShiftDir dir, const char* who) {
    if (!is_invariant(m, dir).value)
        throw std::invalid_argument(std::string(who) + ": subspace not invariant under " +
                                    (dir == ShiftDir::W ? "w" : "z") + "-shift");
}

}  // namespace

MonomialSubspace MonomialSubspace::from_diagram(const Diagram& d, const Window& w,
                                                LatticePoint twist) {
    if (w.wrap_j) throw std::invalid_argument("monomial model does not use wrapped windows");
    MonomialSubspace m;
    m.window_ = w;
    m.symbolic_ = Symbolic{d, twist};
    m.points_ = restrict_to_window(m.symbolic_->effective(), w);
    return m;
}

MonomialSubspace MonomialSubspace::from_points(PointSet pts, const Window& w) {
    if (w.wrap_j) throw std::invalid_argument("monomial model does not use wrapped windows");
    for (const auto& p : pts)
        if (!w.contains(p)) throw std::invalid_argument("point " + to_string(p) + " outside window");
    MonomialSubspace m;
    m.window_ = w;
    m.points_ = std::move(pts);
    return m;
}

bool MonomialSubspace::member(LatticePoint p) const {
    if (symbolic_) return symbolic_->effective().contains(p);
    return points_.count(p) > 0;
}

PointSet shift_image(const MonomialSubspace& m, ShiftDir dir, int k) {
    if (k < 1) throw std::invalid_argument("shift power must be positive");
    if (k > m.window().margin)
        throw std::runtime_error("margin exhausted: power " + std::to_string(k) + " exceeds margin " +
                                 std::to_string(m.window().margin));
    const LatticePoint delta{dir == ShiftDir::W ? k : 0, dir == ShiftDir::Z ? k : 0};
    PointSet out;
    for (const auto& p : m.points()) {
        LatticePoint q = p + delta;
        if (m.window().contains_extended(q)) out.insert(out.end(), q);
    }
    return out;
}

Flagged is_invariant(const MonomialSubspace& m, ShiftDir dir) {
    if (m.symbolic()) return {true, Soundness::Exact};
    const LatticePoint e = step(dir);
    for (const auto& p : m.points()) {
        LatticePoint q = p + e;
        if (m.window().contains(q) && !m.points().count(q)) return {false, Soundness::WindowLimited};
    }
    return {true, Soundness::WindowLimited};
}

PointSet kernel_of_adjoint(const MonomialSubspace& m, ShiftDir dir) {
    require_invariant(m, dir, "kernel_of_adjoint");
    const LatticePoint e = step(dir);
    PointSet out;
    for (const auto& p : m.points())
        if (!m.member(p - e)) out.insert(out.end(), p);
    return out;
}

WoldSplit wold_single(const MonomialSubspace& m, ShiftDir dir) {
    require_invariant(m, dir, "wold_single");
    const LatticePoint e = step(dir);
    WoldSplit split;
    split.soundness = m.symbolic() ? Soundness::Exact : Soundness::WindowLimited;

    const bool symbolic_unitary = m.symbolic() && backward_infinite(m.symbolic()->effective(), dir);
    std::map<int, PointSet> layers;
    for (const auto& p : m.points()) {
        if (symbolic_unitary) {
            split.unitary_part.insert(p);
            continue;
        }
        int run = 0;
        LatticePoint q = p - e;
        while (m.member(q)) {
            ++run;
            q = q - e;
            if (!m.symbolic() && run >= m.window().margin) break;
        }
        if (!m.symbolic() && run >= m.window().margin && m.window().margin > 0) {
            // Backward orbit longer than the margin on a pure point set:
            // under-approximate decision, reported as window-limited.
            split.unitary_part.insert(p);
        } else {
            layers[run].insert(p);
        }
    }
    if (!layers.empty()) {
        split.shift_layers.resize(layers.rbegin()->first + 1);
        for (auto& [run, pts] : layers) split.shift_layers[run] = std::move(pts);
    }
    return split;
}

CommuteCheck doubly_commute_check(const MonomialSubspace& m) {
    require_invariant(m, ShiftDir::W, "doubly_commute_check");
    require_invariant(m, ShiftDir::Z, "doubly_commute_check");

    auto mul = [&](std::optional<LatticePoint> p, ShiftDir d) -> std::optional<LatticePoint> {
        if (!p) return std::nullopt;
        LatticePoint q = *p + step(d);
        return m.member(q) ? std::optional(q) : std::nullopt;
    };
    auto adj = [&](std::optional<LatticePoint> p, ShiftDir d) -> std::optional<LatticePoint> {
        if (!p) return std::nullopt;
        LatticePoint q = *p - step(d);
        return m.member(q) ? std::optional(q) : std::nullopt;
    };

    std::vector<LatticePoint> pts(m.points().begin(), m.points().end());
    std::sort(pts.begin(), pts.end(),
              [](LatticePoint a, LatticePoint b) { return std::pair(a.j, a.i) < std::pair(b.j, b.i); });

    for (const auto& p : pts) {
        // S_z S_w* p  vs  S_w* S_z p
        auto lhs = mul(adj(p, ShiftDir::W), ShiftDir::Z);
        auto rhs = adj(mul(p, ShiftDir::Z), ShiftDir::W);
        if (lhs != rhs)
            return {false, CommuteWitness{p, "S_z S_w* vs S_w* S_z", lhs, rhs, 1.0}};
        // S_w S_z* p  vs  S_z* S_w p
        lhs = mul(adj(p, ShiftDir::Z), ShiftDir::W);
        rhs = adj(mul(p, ShiftDir::W), ShiftDir::Z);
        if (lhs != rhs)
            return {false, CommuteWitness{p, "S_w S_z* vs S_z* S_w", lhs, rhs, 1.0}};
    }
    return {true, std::nullopt};
}

bool range_projection_commutator(const MonomialSubspace& m, int pw, int pz) {
    require_invariant(m, ShiftDir::W, "range_projection_commutator");
    require_invariant(m, ShiftDir::Z, "range_projection_commutator");
    if (pw < 1 || pz < 1) throw std::invalid_argument("powers must be positive");
    if (pw > m.window().margin || pz > m.window().margin)
        throw std::runtime_error("margin exhausted: range powers exceed window margin");

    PointSet ran_w, ran_z;
    for (const auto& p : m.points()) {
        if (m.member(p - LatticePoint{pw, 0})) ran_w.insert(ran_w.end(), p);
        if (m.member(p - LatticePoint{0, pz})) ran_z.insert(ran_z.end(), p);
    }
    PointSet both;
    std::set_intersection(ran_w.begin(), ran_w.end(), ran_z.begin(), ran_z.end(),
                          std::inserter(both, both.end()));
    // Coordinate projections compose by indicator products; verify the
    // identity P_A P_B = P_{A and B} = P_B P_A pointwise.
    for (const auto& p : m.points()) {
        bool ab = ran_z.count(p) && ran_w.count(p);
        bool ba = ran_w.count(p) && ran_z.count(p);
        bool meet = both.count(p) > 0;
        if (ab != meet || ba != meet) return false;
    }
    return true;
}

ExactPairReport fourfold_decompose(const MonomialSubspace& m) {
    auto dc = doubly_commute_check(m);
    if (!dc.ok)
        throw std::invalid_argument("fourfold_decompose: pair does not doubly commute; witness " +
                                    to_string(dc.witness->point));

    ExactPairReport report;
    report.invariant_w = is_invariant(m, ShiftDir::W);
    report.invariant_z = is_invariant(m, ShiftDir::Z);
    report.doubly_commuting = true;

    const int mn = std::max(1, m.window().margin);
    bool compatible = true;
    for (int a = 1; a <= m.window().margin && compatible; ++a)
        for (int b = 1; b <= m.window().margin && compatible; ++b)
            compatible = range_projection_commutator(m, a, b);
    report.compatible_checked_up_to = {m.window().margin > 0 ? mn : 0,
                                       m.window().margin > 0 ? mn : 0};
    if (!compatible) throw std::logic_error("coordinate projections failed to commute");

    WoldSplit ww = wold_single(m, ShiftDir::W);
    WoldSplit wz = wold_single(m, ShiftDir::Z);
    for (const auto& p : m.points()) {
        bool uw = ww.unitary_part.count(p) > 0;
        bool uz = wz.unitary_part.count(p) > 0;
        PointSet& part = uw ? (uz ? report.uu : report.us) : (uz ? report.su : report.ss);
        part.insert(part.end(), p);
    }

    // Each part must be invariant under both shifts wherever the window can
    // see the image point.
    const PointSet* parts[] = {&report.uu, &report.us, &report.su, &report.ss};
    for (const PointSet* part : parts) {
        for (const auto& p : *part) {
            for (ShiftDir dir : {ShiftDir::W, ShiftDir::Z}) {
                LatticePoint q = p + step(dir);
                if (m.points().count(q) && !part->count(q))
                    throw std::logic_error("wold part not shift invariant at " + to_string(p));
            }
        }
    }
    return report;
}

RecoveredDiagram recover_diagram(const MonomialSubspace& m) {
    if (m.empty()) throw std::invalid_argument("recover_diagram: empty subspace");
    require_invariant(m, ShiftDir::W, "recover_diagram");
    require_invariant(m, ShiftDir::Z, "recover_diagram");

    const Window& w = m.window();
    RecoveredDiagram out;

    if (static_cast<long>(m.points().size()) == w.size()) {
        out.status = RecoveredDiagram::Status::Ok;
        out.diagram = Diagram::full_plane();
        out.soundness = Soundness::WindowLimited;
        out.note = "all window points present";
        return out;
    }

    // Column bottom profile.  Nonempty columns form a right ray.
    std::map<int, int> bottom;
    for (const auto& p : m.points()) {
        auto it = bottom.find(p.i);
        if (it == bottom.end() || p.j < it->second) bottom[p.i] = p.j;
    }
    const int first_col = bottom.begin()->first;
    const int ncols = static_cast<int>(bottom.size());

    // Periodic candidate: bottoms repeat with a uniform drop c >= 1 at lag a.
    for (int a = 1; a <= ncols / 2; ++a) {
        std::optional<int> drop;
        bool consistent = true;
        for (int i = first_col; i + a <= first_col + ncols - 1 && consistent; ++i) {
            int d = bottom[i] - bottom[i + a];
            if (!drop) drop = d;
            consistent = (*drop == d);
        }
        if (!consistent || !drop || *drop < 1) continue;
        PeriodCell cell;
        cell.m = a;
        cell.n = *drop;
        for (int t = 0; t < a; ++t) cell.bottoms.push_back(bottom[first_col + t]);
        try {
            Diagram cand = Diagram::periodic(std::move(cell), {first_col, 0});
            if (restrict_to_window(cand, w) == m.points()) {
                out.status = RecoveredDiagram::Status::Ok;
                out.diagram = cand;
                out.soundness = Soundness::WindowLimited;
                out.note = "periodic candidate from windowed bottom profile";
                return out;
            }
        } catch (const std::invalid_argument&) {
            // lag does not form a valid cell; keep scanning
        }
    }

    // Corner staircase from minimal points.
    std::vector<LatticePoint> mins;
    for (const auto& p : m.points())
        if (!m.points().count(p - LatticePoint{1, 0}) && !m.points().count(p - LatticePoint{0, 1}))
            mins.push_back(p);
    std::sort(mins.begin(), mins.end());

    Diagram cand = mins.size() == 1 ? Diagram::quadrant(mins.front())
                                    : Diagram::finite_corner(mins);
    if (restrict_to_window(cand, w) != m.points()) {
        out.status = RecoveredDiagram::Status::Inconclusive;
        out.note = "minimal points do not regenerate the window";
        return out;
    }
    bool interior = std::all_of(mins.begin(), mins.end(), [&](LatticePoint p) {
        return p.i > w.i_min && p.j > w.j_min;
    });
    out.status = RecoveredDiagram::Status::Ok;
    out.diagram = cand;
    out.soundness = interior ? Soundness::Exact : Soundness::WindowLimited;
    if (!interior) out.note = "corner set touches the window edge";
    return out;
}

std::optional<int> vanish_check(const MonomialSubspace& m, const PointSet& x_support,
                                const std::vector<std::pair<int, int>>& seq) {
    for (const auto& p : x_support) {
        if (p.i < 0 || p.j < 0 || !m.window().contains(p))
            throw std::invalid_argument("vanish_check: support must lie in the quadrant window");
    }
    for (size_t k = 1; k < seq.size(); ++k) {
        bool geq = seq[k].first >= seq[k - 1].first && seq[k].second >= seq[k - 1].second;
        if (!geq || seq[k] == seq[k - 1])
            throw std::invalid_argument("vanish_check: sequence not strictly increasing");
    }
    int max_j = 0;
    for (const auto& p : x_support) max_j = std::max(max_j, p.j);
    for (size_t k = 0; k < seq.size(); ++k) {
        const auto [mw, nz] = seq[k];
        if (mw < 0 || nz < 0) throw std::invalid_argument("vanish_check: negative powers");
        if (mw > m.window().margin)
            throw std::runtime_error("margin exhausted: forward power " + std::to_string(mw));
        if (!x_support.empty() && nz > max_j) return static_cast<int>(k);
    }
    return std::nullopt;
}

}  // namespace staircase
