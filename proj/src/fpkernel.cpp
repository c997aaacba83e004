#include "solvlie/fpkernel.hpp"

#include <algorithm>
#include <atomic>
#include <cstring>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace solvlie::fpk {

bool packable(const FieldSpec& f) {
    if (!f.is_finite()) return false;
    return f.order() <= kMaxPackedOrder;
}

PackedField PackedField::build(const FieldSpec& f) {
    if (!packable(f)) throw method_inapplicable("field is not packable: " + f.describe());
    PackedField pf;
    pf.q = static_cast<std::uint32_t>(f.order());
    std::vector<Scalar> elems = enumerate_field(f);
    pf.one = static_cast<std::uint32_t>(scalar_index(Scalar::one(f)));
    pf.add_t.resize(static_cast<size_t>(pf.q) * pf.q);
    pf.mul_t.resize(static_cast<size_t>(pf.q) * pf.q);
    pf.neg_t.resize(pf.q);
    pf.inv_t.resize(pf.q, 0);
    for (std::uint32_t a = 0; a < pf.q; ++a) {
        pf.neg_t[a] = static_cast<std::uint32_t>(scalar_index(-elems[a]));
        if (a) pf.inv_t[a] = static_cast<std::uint32_t>(scalar_index(solvlie::inv(elems[a])));
        for (std::uint32_t b = 0; b < pf.q; ++b) {
            pf.add_t[a * pf.q + b] = static_cast<std::uint32_t>(scalar_index(elems[a] + elems[b]));
            pf.mul_t[a * pf.q + b] = static_cast<std::uint32_t>(scalar_index(elems[a] * elems[b]));
        }
    }
    return pf;
}

PackedAlgebra PackedAlgebra::build(const LieAlgebra& L) {
    PackedAlgebra A;
    A.F = PackedField::build(L.field());
    A.field = L.field();
    A.n = L.dim();
    const int n = A.n;
    A.c.assign(static_cast<size_t>(n) * n * n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            Vec v = L.bracket_basis(i, j);
            for (int k = 0; k < n; ++k)
                A.c[(static_cast<size_t>(i) * n + j) * n + k] =
                    static_cast<std::uint32_t>(scalar_index(v[k]));
        }
    return A;
}

void PackedAlgebra::bracket(const std::uint32_t* x, const std::uint32_t* y,
                            std::uint32_t* out) const {
    std::fill(out, out + n, 0u);
    for (int i = 0; i < n; ++i) {
        if (x[i] == 0 && y[i] == 0) continue;
        for (int j = i + 1; j < n; ++j) {
            const std::uint32_t coef = F.sub(F.mul(x[i], y[j]), F.mul(x[j], y[i]));
            if (coef == 0) continue;
            const std::uint32_t* cij = c.data() + (static_cast<size_t>(i) * n + j) * n;
            for (int k = 0; k < n; ++k)
                if (cij[k]) out[k] = F.add(out[k], F.mul(coef, cij[k]));
        }
    }
}

bool PackedAlgebra::bracket_is_zero(const std::uint32_t* x, const std::uint32_t* y) const {
    std::vector<std::uint32_t> tmp(n);
    bracket(x, y, tmp.data());
    return std::all_of(tmp.begin(), tmp.end(), [](std::uint32_t v) { return v == 0; });
}

bool RowSpan::reduce(std::uint32_t* v) const {
    for (int i = 0; i < rank(); ++i) {
        const int p = pivots[i];
        if (v[p] == 0) continue;
        const std::uint32_t f = v[p];
        const std::uint32_t* r = row(i);
        for (int j = p; j < n; ++j)
            if (r[j]) v[j] = F->sub(v[j], F->mul(f, r[j]));
    }
    for (int j = 0; j < n; ++j)
        if (v[j]) return false;
    return true;
}

bool RowSpan::contains(const std::uint32_t* v) const {
    std::vector<std::uint32_t> tmp(v, v + n);
    return reduce(tmp.data());
}

bool RowSpan::insert(std::uint32_t* v) {
    if (reduce(v)) return false;
    int p = 0;
    while (v[p] == 0) ++p;
    const std::uint32_t s = F->inv(v[p]);
    for (int j = p; j < n; ++j) v[j] = F->mul(v[j], s);
    // back-eliminate the new pivot from existing rows
    for (int i = 0; i < rank(); ++i) {
        std::uint32_t* r = rows.data() + static_cast<size_t>(i) * n;
        if (r[p] == 0) continue;
        const std::uint32_t f = r[p];
        for (int j = p; j < n; ++j)
            if (v[j]) r[j] = F->sub(r[j], F->mul(f, v[j]));
    }
    // insert keeping pivots increasing
    int pos = 0;
    while (pos < rank() && pivots[pos] < p) ++pos;
    pivots.insert(pivots.begin() + pos, p);
    rows.insert(rows.begin() + static_cast<size_t>(pos) * n, v, v + n);
    return true;
}

PackedVec pack_vec(const PackedAlgebra& A, const Vec& v) {
    PackedVec out(A.n);
    for (int i = 0; i < A.n; ++i) out[i] = static_cast<std::uint32_t>(scalar_index(v[i]));
    return out;
}

Vec unpack_vec(const PackedAlgebra& A, const std::uint32_t* v) {
    Vec out;
    out.reserve(A.n);
    for (int i = 0; i < A.n; ++i) out.push_back(scalar_from_index(A.field, v[i]));
    return out;
}

RowSpan pack_subspace(const PackedAlgebra& A, const Subspace& s) {
    RowSpan r(A.F, A.n);
    for (int i = 0; i < s.dim(); ++i) {
        PackedVec v = pack_vec(A, s.basis_row(i));
        r.insert(v.data());
    }
    return r;
}

Subspace unpack_span(const PackedAlgebra& A, const RowSpan& s) {
    std::vector<Vec> rows;
    for (int i = 0; i < s.rank(); ++i) rows.push_back(unpack_vec(A, s.row(i)));
    return Subspace::span(A.field, A.n, rows);
}

bool span_is_subalgebra(const PackedAlgebra& A, const RowSpan& s) {
    std::vector<std::uint32_t> tmp(A.n);
    for (int i = 0; i < s.rank(); ++i)
        for (int j = i + 1; j < s.rank(); ++j) {
            A.bracket(s.row(i), s.row(j), tmp.data());
            if (!s.contains(tmp.data())) return false;
        }
    return true;
}

bool span_is_ideal(const PackedAlgebra& A, const RowSpan& s) {
    std::vector<std::uint32_t> e(A.n, 0), tmp(A.n);
    for (int i = 0; i < A.n; ++i) {
        e.assign(A.n, 0);
        e[i] = A.F.one;
        for (int j = 0; j < s.rank(); ++j) {
            A.bracket(e.data(), s.row(j), tmp.data());
            if (!s.contains(tmp.data())) return false;
        }
    }
    return true;
}

bool span_is_abelian(const PackedAlgebra& A, const RowSpan& s) {
    for (int i = 0; i < s.rank(); ++i)
        for (int j = i + 1; j < s.rank(); ++j)
            if (!A.bracket_is_zero(s.row(i), s.row(j))) return false;
    return true;
}

bool span_is_nilpotent(const PackedAlgebra& A, const RowSpan& s) {
    // lower central series of the span inside ambient coordinates
    RowSpan cur = s;
    std::vector<std::uint32_t> tmp(A.n);
    for (int step = 0; step <= A.n + 1; ++step) {
        if (cur.rank() == 0) return true;
        RowSpan next(A.F, A.n);
        for (int i = 0; i < cur.rank(); ++i)
            for (int j = 0; j < s.rank(); ++j) {
                A.bracket(cur.row(i), s.row(j), tmp.data());
                next.insert(tmp.data());
            }
        if (next.equals(cur)) return false;  // stabilized above zero
        cur = std::move(next);
    }
    return false;
}

RowSpan span_closure(const PackedAlgebra& A, RowSpan s) {
    std::vector<std::uint32_t> tmp(A.n);
    bool grew = true;
    while (grew) {
        grew = false;
        const int r = s.rank();
        for (int i = 0; i < r && !grew; ++i)
            for (int j = i + 1; j < r && !grew; ++j) {
                A.bracket(s.row(i), s.row(j), tmp.data());
                if (s.insert(tmp.data())) grew = true;
            }
    }
    return s;
}

void fitting_of_ad(const PackedAlgebra& A, const std::uint32_t* x, RowSpan& null_part,
                   RowSpan& image_part) {
    const int n = A.n;
    // ad x as a packed matrix: row i = [e_i, x]
    std::vector<std::uint32_t> m(static_cast<size_t>(n) * n), e(n), tmp(n);
    for (int i = 0; i < n; ++i) {
        e.assign(n, 0);
        e[i] = A.F.one;
        A.bracket(e.data(), x, m.data() + static_cast<size_t>(i) * n);
    }
    // m^n
    std::vector<std::uint32_t> pw(m), nx(static_cast<size_t>(n) * n);
    for (int step = 1; step < n; ++step) {
        std::fill(nx.begin(), nx.end(), 0u);
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < n; ++k) {
                const std::uint32_t a = pw[static_cast<size_t>(i) * n + k];
                if (!a) continue;
                const std::uint32_t* mr = m.data() + static_cast<size_t>(k) * n;
                std::uint32_t* out = nx.data() + static_cast<size_t>(i) * n;
                for (int j = 0; j < n; ++j)
                    if (mr[j]) out[j] = A.F.add(out[j], A.F.mul(a, mr[j]));
            }
        pw.swap(nx);
    }
    // image: row space of pw; null: left kernel of pw
    image_part = RowSpan(A.F, n);
    for (int i = 0; i < n; ++i) {
        tmp.assign(pw.begin() + static_cast<size_t>(i) * n, pw.begin() + static_cast<size_t>(i + 1) * n);
        image_part.insert(tmp.data());
    }
    // left kernel: eliminate rows of [pw | I]; rows whose pw-part vanished
    // carry kernel combinations in the identity part
    const int w = 2 * n;
    std::vector<std::uint32_t> aug(static_cast<size_t>(n) * w, 0);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug[static_cast<size_t>(i) * w + j] = pw[static_cast<size_t>(i) * n + j];
        aug[static_cast<size_t>(i) * w + n + i] = A.F.one;
    }
    int r = 0;
    for (int col = 0; col < n && r < n; ++col) {
        int piv = -1;
        for (int i = r; i < n; ++i)
            if (aug[static_cast<size_t>(i) * w + col]) { piv = i; break; }
        if (piv < 0) continue;
        if (piv != r)
            for (int j = 0; j < w; ++j)
                std::swap(aug[static_cast<size_t>(piv) * w + j], aug[static_cast<size_t>(r) * w + j]);
        const std::uint32_t s = A.F.inv(aug[static_cast<size_t>(r) * w + col]);
        for (int j = 0; j < w; ++j)
            aug[static_cast<size_t>(r) * w + j] = A.F.mul(aug[static_cast<size_t>(r) * w + j], s);
        for (int i = 0; i < n; ++i) {
            if (i == r) continue;
            const std::uint32_t f = aug[static_cast<size_t>(i) * w + col];
            if (!f) continue;
            for (int j = 0; j < w; ++j)
                aug[static_cast<size_t>(i) * w + j] =
                    A.F.sub(aug[static_cast<size_t>(i) * w + j], A.F.mul(f, aug[static_cast<size_t>(r) * w + j]));
        }
        ++r;
    }
    null_part = RowSpan(A.F, n);
    for (int i = r; i < n; ++i) {
        tmp.assign(aug.begin() + static_cast<size_t>(i) * w + n, aug.begin() + static_cast<size_t>(i) * w + w);
        null_part.insert(tmp.data());
    }
}

std::uint64_t vector_space_size(std::uint32_t q, int n) {
    std::uint64_t total = 1;
    for (int i = 0; i < n; ++i) {
        if (total > (1ull << 62) / q) return UINT64_MAX;
        total *= q;
    }
    return total;
}

void vector_from_index(std::uint64_t idx, std::uint32_t q, int n, std::uint32_t* out) {
    for (int i = n; i-- > 0;) {
        out[i] = static_cast<std::uint32_t>(idx % q);
        idx /= q;
    }
}

namespace {
void build_shapes(SubspaceIndex& si, int rank) {
    const int n = si.n;
    // iterate pivot-column combinations of the given rank in lex order
    std::vector<int> comb(rank);
    for (int i = 0; i < rank; ++i) comb[i] = i;
    auto emit = [&](const std::vector<int>& pivots) {
        SubspaceIndex::Shape sh;
        sh.pivots = pivots;
        for (int i = 0; i < rank; ++i)
            for (int j = pivots[i] + 1; j < n; ++j) {
                bool is_pivot = std::find(pivots.begin(), pivots.end(), j) != pivots.end();
                if (!is_pivot) sh.free_pos.emplace_back(i, j);
            }
        std::uint64_t cnt = 1;
        for (size_t k = 0; k < sh.free_pos.size(); ++k) {
            if (cnt > (1ull << 62) / si.q) throw budget_exceeded("subspace shape count overflow");
            cnt *= si.q;
        }
        sh.count = cnt;
        sh.offset = si.total;
        si.total += cnt;
        si.shapes.push_back(std::move(sh));
    };
    if (rank == 0) {
        emit({});
        return;
    }
    for (;;) {
        emit(comb);
        int i = rank - 1;
        while (i >= 0 && comb[i] == n - rank + i) --i;
        if (i < 0) break;
        ++comb[i];
        for (int j = i + 1; j < rank; ++j) comb[j] = comb[j - 1] + 1;
    }
}
}  // namespace

SubspaceIndex SubspaceIndex::build(std::uint32_t q, int n) {
    SubspaceIndex si;
    si.q = q;
    si.n = n;
    for (int rank = 0; rank <= n; ++rank) build_shapes(si, rank);
    return si;
}

SubspaceIndex SubspaceIndex::build_rank(std::uint32_t q, int n, int rank) {
    SubspaceIndex si;
    si.q = q;
    si.n = n;
    build_shapes(si, rank);
    return si;
}

void SubspaceIndex::decode(std::uint64_t idx, RowSpan& out) const {
    // locate the shape block
    size_t lo = 0, hi = shapes.size();
    while (lo + 1 < hi) {
        size_t mid = (lo + hi) / 2;
        if (shapes[mid].offset <= idx)
            lo = mid;
        else
            hi = mid;
    }
    const Shape& sh = shapes[lo];
    std::uint64_t rem = idx - sh.offset;
    const int rank = static_cast<int>(sh.pivots.size());
    out.rows.assign(static_cast<size_t>(rank) * n, 0);
    out.pivots = sh.pivots;
    for (int i = 0; i < rank; ++i) out.rows[static_cast<size_t>(i) * n + sh.pivots[i]] = out.F->one;
    // odometer digits, last free position fastest
    for (size_t k = sh.free_pos.size(); k-- > 0;) {
        auto [ri, cj] = sh.free_pos[k];
        out.rows[static_cast<size_t>(ri) * n + cj] = static_cast<std::uint32_t>(rem % q);
        rem /= q;
    }
}

// --------------------------------------------------------------- scans

namespace {
std::atomic<bool> g_parallel{true};
constexpr std::uint64_t kChunk = 1024;
}  // namespace

void set_parallel_scans(bool on) { g_parallel.store(on); }
bool parallel_scans_enabled() { return g_parallel.load(); }

std::uint64_t scan_min_index_serial(std::uint64_t total,
                                    const std::function<bool(std::uint64_t)>& pred) {
    for (std::uint64_t i = 0; i < total; ++i)
        if (pred(i)) return i;
    return UINT64_MAX;
}

std::uint64_t scan_min_index(std::uint64_t total, const std::function<bool(std::uint64_t)>& pred) {
    if (!g_parallel.load()) return scan_min_index_serial(total, pred);
    std::atomic<std::uint64_t> best{UINT64_MAX};
    const std::uint64_t chunks = (total + kChunk - 1) / kChunk;
#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t ci = 0; ci < static_cast<std::int64_t>(chunks); ++ci) {
        const std::uint64_t start = static_cast<std::uint64_t>(ci) * kChunk;
        if (start >= best.load(std::memory_order_relaxed)) continue;  // prune: cannot improve
        const std::uint64_t end = std::min(total, start + kChunk);
        for (std::uint64_t i = start; i < end; ++i) {
            if (i >= best.load(std::memory_order_relaxed)) break;
            if (pred(i)) {
                std::uint64_t cur = best.load();
                while (i < cur && !best.compare_exchange_weak(cur, i)) {
                }
                break;
            }
        }
    }
    return best.load();
}

std::vector<std::uint64_t> scan_collect_serial(std::uint64_t total,
                                               const std::function<bool(std::uint64_t)>& pred) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t i = 0; i < total; ++i)
        if (pred(i)) out.push_back(i);
    return out;
}

std::vector<std::uint64_t> scan_collect(std::uint64_t total,
                                        const std::function<bool(std::uint64_t)>& pred) {
    if (!g_parallel.load()) return scan_collect_serial(total, pred);
    const std::uint64_t chunks = (total + kChunk - 1) / kChunk;
    std::vector<std::vector<std::uint64_t>> per_chunk(chunks);
#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t ci = 0; ci < static_cast<std::int64_t>(chunks); ++ci) {
        const std::uint64_t start = static_cast<std::uint64_t>(ci) * kChunk;
        const std::uint64_t end = std::min(total, start + kChunk);
        for (std::uint64_t i = start; i < end; ++i)
            if (pred(i)) per_chunk[ci].push_back(i);
    }
    std::vector<std::uint64_t> out;
    for (auto& v : per_chunk) out.insert(out.end(), v.begin(), v.end());
    return out;
}

}  // namespace solvlie::fpk
