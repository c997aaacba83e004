#include "solvlie/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>

namespace solvlie {

namespace {

using fpk::PackedAlgebra;
using fpk::RowSpan;
using fpk::SubspaceIndex;

PackedAlgebra pack_or_throw(const LieAlgebra& L) {
    if (!L.field().is_finite()) throw infinite_field("oracle enumeration requires a finite field");
    if (!fpk::packable(L.field()))
        throw budget_exceeded("field order exceeds the packed-kernel limit: " +
                              L.field().describe());
    return PackedAlgebra::build(L);
}

struct WallClock {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    std::uint64_t cap_ms;
    explicit WallClock(const EnumBudget& b) : cap_ms(b.wall_ms) {}
    void check(const char* what) const {
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - start)
                      .count();
        if (static_cast<std::uint64_t>(ms) > cap_ms)
            throw budget_exceeded(std::string("wall-clock budget exhausted during ") + what);
    }
};

// all subspace indices passing pred, in canonical enumeration order
std::vector<Subspace> collect_subspaces(const PackedAlgebra& A, const EnumBudget& b,
                                        const std::function<bool(const RowSpan&)>& pred) {
    SubspaceIndex si = SubspaceIndex::build(A.F.q, A.n);
    if (si.total > b.max_subspaces)
        throw budget_exceeded("subspace lattice has " + std::to_string(si.total) +
                              " elements, budget " + std::to_string(b.max_subspaces));
    auto hits = fpk::scan_collect(si.total, [&](std::uint64_t idx) {
        RowSpan s(A.F, A.n);
        si.decode(idx, s);
        return pred(s);
    });
    std::vector<Subspace> out;
    out.reserve(hits.size());
    RowSpan s(A.F, A.n);
    for (std::uint64_t idx : hits) {
        si.decode(idx, s);
        out.push_back(fpk::unpack_span(A, s));
    }
    return out;
}

std::vector<SubalgebraHandle> to_handles(std::vector<Subspace> subs) {
    std::vector<SubalgebraHandle> out;
    out.reserve(subs.size());
    for (auto& s : subs) out.push_back(SubalgebraHandle{std::move(s)});
    return out;
}

// keep only elements that are maximal among the (proper) list
std::vector<SubalgebraHandle> filter_maximal(const LieAlgebra& L,
                                             const std::vector<Subspace>& all) {
    std::vector<SubalgebraHandle> out;
    for (const auto& s : all) {
        if (s.dim() == L.dim()) continue;  // proper only
        bool maximal = true;
        for (const auto& t : all) {
            if (t.dim() == L.dim() || t.dim() <= s.dim()) continue;
            if (t.contains(s) && !(t == s)) { maximal = false; break; }
        }
        if (maximal) out.push_back(SubalgebraHandle{s});
    }
    return out;
}

}  // namespace

std::vector<Subspace> enum_subspaces(const LieAlgebra& L, const EnumBudget& b) {
    PackedAlgebra A = pack_or_throw(L);
    return collect_subspaces(A, b, [](const RowSpan&) { return true; });
}

std::vector<SubalgebraHandle> enum_subalgebras(const LieAlgebra& L, const EnumBudget& b) {
    PackedAlgebra A = pack_or_throw(L);
    return to_handles(
        collect_subspaces(A, b, [&](const RowSpan& s) { return fpk::span_is_subalgebra(A, s); }));
}

std::vector<IdealHandle> enum_ideals(const LieAlgebra& L, const EnumBudget& b) {
    PackedAlgebra A = pack_or_throw(L);
    auto subs = collect_subspaces(A, b, [&](const RowSpan& s) { return fpk::span_is_ideal(A, s); });
    std::vector<IdealHandle> out;
    out.reserve(subs.size());
    for (auto& s : subs) out.push_back(IdealHandle{std::move(s)});
    return out;
}

std::vector<SubalgebraHandle> enum_nilpotent_subalgebras(const LieAlgebra& L, const EnumBudget& b) {
    PackedAlgebra A = pack_or_throw(L);
    return to_handles(collect_subspaces(A, b, [&](const RowSpan& s) {
        return fpk::span_is_subalgebra(A, s) && fpk::span_is_nilpotent(A, s);
    }));
}

std::vector<SubalgebraHandle> maximal_subalgebras(const LieAlgebra& L, const EnumBudget& b) {
    PackedAlgebra A = pack_or_throw(L);
    auto all = collect_subspaces(A, b, [&](const RowSpan& s) { return fpk::span_is_subalgebra(A, s); });
    return filter_maximal(L, all);
}

std::vector<SubalgebraHandle> maximal_nilpotent_subalgebras(const LieAlgebra& L,
                                                            const EnumBudget& b) {
    PackedAlgebra A = pack_or_throw(L);
    auto all = collect_subspaces(A, b, [&](const RowSpan& s) {
        return fpk::span_is_subalgebra(A, s) && fpk::span_is_nilpotent(A, s);
    });
    // maximal among nilpotent subalgebras (L itself included when nilpotent)
    std::vector<SubalgebraHandle> out;
    for (const auto& s : all) {
        bool maximal = true;
        for (const auto& t : all)
            if (t.dim() > s.dim() && t.contains(s)) { maximal = false; break; }
        if (maximal) out.push_back(SubalgebraHandle{s});
    }
    return out;
}

OracleAVerdict oracle_is_A(const LieAlgebra& L, const EnumBudget& b) {
    PackedAlgebra A = pack_or_throw(L);
    const int n = A.n;
    if (n < 2) return OracleAVerdict{true, std::nullopt, 0};
    SubspaceIndex si = SubspaceIndex::build_rank(A.F.q, n, 2);
    if (si.total > b.max_pairs)
        throw budget_exceeded("pair scan needs " + std::to_string(si.total) +
                              " planes, budget " + std::to_string(b.max_pairs));
    const bool ambient_nilpotent = is_nilpotent(L);
    const std::uint32_t q = A.F.q;

    // The scan is grouped by the plane's first canonical basis vector u:
    // ad u and its n-th power are built once per group, so the common case
    // (the bracket [u,v] survives ad u forever, hence the closure cannot be
    // nilpotent) costs two mat-vec products per plane.
    struct Unit {
        std::uint64_t base;   // global index of the unit's first plane
        std::uint64_t inner;  // planes in the unit (row-1 assignments)
        size_t shape;
        std::uint64_t row0;   // row-0 digit index
    };
    std::vector<Unit> units;
    for (size_t sh = 0; sh < si.shapes.size(); ++sh) {
        const auto& shape = si.shapes[sh];
        const int p1 = shape.pivots[1];
        std::uint64_t inner = 1;
        for (int j = p1 + 1; j < n; ++j) inner *= q;
        const std::uint64_t outer = shape.count / inner;
        for (std::uint64_t r0 = 0; r0 < outer; ++r0)
            units.push_back(Unit{shape.offset + r0 * inner, inner, sh, r0});
    }

    // first bad plane inside one unit, or UINT64_MAX
    auto scan_unit = [&](const Unit& unit) -> std::uint64_t {
        const auto& shape = si.shapes[unit.shape];
        const int p0 = shape.pivots[0], p1 = shape.pivots[1];
        std::vector<std::uint32_t> u(n, 0), v(n, 0), w(n), e(n);
        u[p0] = A.F.one;
        {
            std::uint64_t rem = unit.row0;
            // row-0 free columns, last one fastest
            std::vector<int> cols;
            for (int j = p0 + 1; j < n; ++j)
                if (j != p1) cols.push_back(j);
            for (size_t k = cols.size(); k-- > 0;) {
                u[cols[k]] = static_cast<std::uint32_t>(rem % q);
                rem /= q;
            }
        }
        // ad u and its stable power
        std::vector<std::uint32_t> adu(static_cast<size_t>(n) * n);
        for (int i = 0; i < n; ++i) {
            e.assign(n, 0);
            e[i] = A.F.one;
            A.bracket(e.data(), u.data(), adu.data() + static_cast<size_t>(i) * n);
        }
        std::vector<std::uint32_t> pw(adu), nx(static_cast<size_t>(n) * n);
        for (int step = 1; step < n; ++step) {
            std::fill(nx.begin(), nx.end(), 0u);
            for (int i = 0; i < n; ++i)
                for (int k = 0; k < n; ++k) {
                    const std::uint32_t a = pw[static_cast<size_t>(i) * n + k];
                    if (!a) continue;
                    const std::uint32_t* mr = adu.data() + static_cast<size_t>(k) * n;
                    std::uint32_t* outr = nx.data() + static_cast<size_t>(i) * n;
                    for (int j = 0; j < n; ++j)
                        if (mr[j]) outr[j] = A.F.add(outr[j], A.F.mul(a, mr[j]));
                }
            pw.swap(nx);
        }
        auto matvec = [&](const std::vector<std::uint32_t>& m, const std::uint32_t* x,
                          std::uint32_t* out) {
            std::fill(out, out + n, 0u);
            for (int i = 0; i < n; ++i) {
                if (!x[i]) continue;
                const std::uint32_t* mr = m.data() + static_cast<size_t>(i) * n;
                for (int j = 0; j < n; ++j)
                    if (mr[j]) out[j] = A.F.add(out[j], A.F.mul(x[i], mr[j]));
            }
        };
        std::vector<std::uint32_t> t(n);
        for (std::uint64_t r1 = 0; r1 < unit.inner; ++r1) {
            std::fill(v.begin(), v.end(), 0u);
            v[p1] = A.F.one;
            std::uint64_t rem = r1;
            for (int j = n - 1; j > p1; --j) {
                v[j] = static_cast<std::uint32_t>(rem % q);
                rem /= q;
            }
            // w = [v, u] (sign-free tests)
            matvec(adu, v.data(), w.data());
            bool zero = true;
            for (int j = 0; j < n && zero; ++j) zero = w[j] == 0;
            if (zero) continue;
            // nilpotent closures must kill w under (ad u)^n
            matvec(pw, w.data(), t.data());
            bool killed = true;
            for (int j = 0; j < n && killed; ++j) killed = t[j] == 0;
            if (!killed) continue;
            RowSpan span(A.F, n);
            {
                std::vector<std::uint32_t> cu = u, cv = v;
                span.insert(cu.data());
                span.insert(cv.data());
            }
            RowSpan closure = fpk::span_closure(A, span);
            bool bad = closure.rank() == n ? ambient_nilpotent
                                           : fpk::span_is_nilpotent(A, closure);
            if (bad) return unit.base + r1;
        }
        return UINT64_MAX;
    };

    std::uint64_t hit = UINT64_MAX;
    {
        std::atomic<std::uint64_t> best{UINT64_MAX};
        if (fpk::parallel_scans_enabled()) {
#pragma omp parallel for schedule(dynamic, 16)
            for (std::int64_t ui = 0; ui < static_cast<std::int64_t>(units.size()); ++ui) {
                if (units[ui].base >= best.load(std::memory_order_relaxed)) continue;
                std::uint64_t h = scan_unit(units[ui]);
                if (h != UINT64_MAX) {
                    std::uint64_t cur = best.load();
                    while (h < cur && !best.compare_exchange_weak(cur, h)) {
                    }
                }
            }
        } else {
            for (const Unit& unit : units) {
                std::uint64_t h = scan_unit(unit);
                if (h != UINT64_MAX) {
                    best.store(h);
                    break;
                }
            }
        }
        hit = best.load();
    }

    OracleAVerdict v;
    v.scanned = si.total;
    if (hit == UINT64_MAX) return v;
    RowSpan s(A.F, n);
    si.decode(hit, s);
    v.is_A = false;
    v.witness = std::make_pair(fpk::unpack_vec(A, s.row(0)), fpk::unpack_vec(A, s.row(1)));
    return v;
}

OracleAVerdict oracle_is_A_by_inventory(const LieAlgebra& L, const EnumBudget& b) {
    PackedAlgebra A = pack_or_throw(L);
    auto nilpotents = collect_subspaces(A, b, [&](const RowSpan& s) {
        return fpk::span_is_subalgebra(A, s) && fpk::span_is_nilpotent(A, s) &&
               !fpk::span_is_abelian(A, s);
    });
    OracleAVerdict v;
    v.scanned = nilpotents.size();
    if (nilpotents.empty()) return v;
    v.is_A = false;
    const Subspace& u = nilpotents.front();
    for (int i = 0; i < u.dim() && !v.witness; ++i)
        for (int j = i + 1; j < u.dim() && !v.witness; ++j)
            if (!vec_is_zero(L.bracket(u.basis_row(i), u.basis_row(j))))
                v.witness = std::make_pair(u.basis_row(i), u.basis_row(j));
    return v;
}

Subspace oracle_nilradical(const LieAlgebra& L, const EnumBudget& b) {
    WallClock wall(b);
    auto ideals = enum_ideals(L, b);
    Subspace acc = L.zero_space();
    for (const auto& ideal : ideals) {
        wall.check("nilradical ideal sweep");
        if (is_nilpotent_subalgebra(L, ideal.space)) acc = sum(acc, ideal.space);
    }
    // the sum of nilpotent ideals is nilpotent; keep the check loud anyway
    if (!is_nilpotent_subalgebra(L, acc))
        throw verification_failed("sum of nilpotent ideals failed the nilpotency re-check");
    return acc;
}

Subspace oracle_frattini(const LieAlgebra& L, const EnumBudget& b) {
    auto maximals = maximal_subalgebras(L, b);
    Subspace acc = L.full_space();
    for (const auto& m : maximals) acc = intersect(acc, m.space);
    return ideal_core(L, acc);
}

std::vector<Subspace> oracle_minimal_ideals(const LieAlgebra& L, const EnumBudget& b) {
    auto ideals = enum_ideals(L, b);
    std::vector<Subspace> out;
    for (const auto& ideal : ideals) {
        if (ideal.space.is_zero()) continue;
        bool minimal = true;
        for (const auto& other : ideals) {
            if (other.space.is_zero() || other.space == ideal.space) continue;
            if (ideal.space.contains(other.space)) { minimal = false; break; }
        }
        if (minimal) out.push_back(ideal.space);
    }
    return out;
}

bool oracle_is_elementary(const LieAlgebra& L, const EnumBudget& b) {
    WallClock wall(b);
    auto subs = enum_subalgebras(L, b);
    for (const auto& h : subs) {
        wall.check("elementary sweep");
        if (h.space.dim() <= 1) continue;  // phi of a <=1-dimensional algebra is zero
        InducedAlgebra ind = induced_algebra(L, h);
        if (!oracle_frattini(ind.alg, b).is_zero()) return false;
    }
    return true;
}

}  // namespace solvlie
