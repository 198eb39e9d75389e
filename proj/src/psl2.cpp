#include "trinity/psl2.hpp"

#include <algorithm>
#include <cassert>

#include "trinity/errors.hpp"

namespace trinity {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

} // namespace

std::size_t ProjKeyHash::operator()(const ProjKey& k) const noexcept {
    std::uint64_t h = 0x2545f4914f6cdd1dULL;
    for (std::uint64_t v : k) h = splitmix64(h ^ v);
    return static_cast<std::size_t>(h);
}

Mat2 mat_identity(const FieldCtx& ctx) {
    return {ctx.one(), ctx.zero(), ctx.zero(), ctx.one()};
}

Mat2 mat_mul(const FieldCtx& ctx, const Mat2& m, const Mat2& n) {
    return {ctx.add(ctx.mul(m.a, n.a), ctx.mul(m.b, n.c)),
            ctx.add(ctx.mul(m.a, n.b), ctx.mul(m.b, n.d)),
            ctx.add(ctx.mul(m.c, n.a), ctx.mul(m.d, n.c)),
            ctx.add(ctx.mul(m.c, n.b), ctx.mul(m.d, n.d))};
}

FieldElem mat_det(const FieldCtx& ctx, const Mat2& m) {
    return ctx.sub(ctx.mul(m.a, m.d), ctx.mul(m.b, m.c));
}

Mat2 mat_inv(const FieldCtx& ctx, const Mat2& m) {
    FieldElem di = ctx.inv(mat_det(ctx, m));
    return {ctx.mul(m.d, di), ctx.mul(ctx.neg(m.b), di), ctx.mul(ctx.neg(m.c), di),
            ctx.mul(m.a, di)};
}

bool mat_is_scalar(const FieldCtx& ctx, const Mat2& m) {
    return ctx.is_zero(m.b) && ctx.is_zero(m.c) && m.a == m.d && !ctx.is_zero(m.a);
}

Mat2 proj_canon(const FieldCtx& ctx, const Mat2& m) {
    const FieldElem* entries[4] = {&m.a, &m.b, &m.c, &m.d};
    for (const FieldElem* e : entries) {
        if (!ctx.is_zero(*e)) {
            FieldElem s = ctx.inv(*e);
            return {ctx.mul(m.a, s), ctx.mul(m.b, s), ctx.mul(m.c, s), ctx.mul(m.d, s)};
        }
    }
    throw input_error("proj_canon: zero matrix");
}

ProjKey proj_key(const FieldCtx& ctx, const Mat2& m) {
    Mat2 c = proj_canon(ctx, m);
    return {c.a.a0, c.a.a1, c.b.a0, c.b.a1, c.c.a0, c.c.a1, c.d.a0, c.d.a1};
}

bool proj_equal(const FieldCtx& ctx, const Mat2& m, const Mat2& n) {
    return proj_key(ctx, m) == proj_key(ctx, n);
}

unsigned long proj_order(const FieldCtx& ctx, const Mat2& m) {
    if (ctx.is_zero(mat_det(ctx, m))) throw input_error("proj_order: singular matrix");
    Mat2 acc = m;
    unsigned long n = 1;
    // element orders in PGL(2,q) are bounded by q + 1
    BigInt guard = ctx.order() + 2;
    while (!mat_is_scalar(ctx, acc)) {
        acc = mat_mul(ctx, acc, m);
        ++n;
        if (BigInt(n) > guard)
            throw verification_error("proj_order", "order exceeds the PGL(2,q) bound");
    }
    return n;
}

Generators build_generators(const FieldCtx& ctx, unsigned long k, const FieldElem& zeta,
                            const FieldElem& xi) {
    if (!(ctx.mul(xi, xi) == zeta))
        throw verification_error("build_generators", "xi^2 != zeta");
    const FieldElem xinv = ctx.inv(xi);
    const FieldElem zinv = ctx.inv(zeta);
    const FieldElem trace = ctx.add(xi, xinv); // xi + xi^-1

    // D = zeta + zeta^-1 counted for both the vertex and face root (l = k)
    FieldElem D = ctx.mul(ctx.from_int(2), ctx.add(zeta, zinv));
    if (ctx.is_zero(D)) throw verification_error("build_generators", "D = 0");
    // By the defining relation, zeta + zeta^-1 = -2/3, so D = -4/3.
    FieldElem expected = ctx.neg(ctx.mul(ctx.from_int(4), ctx.inv(ctx.from_int(3))));
    if (!(D == expected))
        throw verification_error("build_generators", "D != -4/3; defining relation broken");

    Mat2 R{xi, ctx.zero(), ctx.zero(), xinv};
    FieldElem pref = ctx.inv(ctx.sub(xi, xinv));
    Mat2 S{ctx.mul(pref, ctx.neg(ctx.mul(trace, xinv))), ctx.mul(pref, ctx.neg(D)),
           pref, ctx.mul(pref, ctx.mul(trace, xi))};
    if (!(mat_det(ctx, S) == ctx.one()) || !(mat_det(ctx, R) == ctx.one()))
        throw verification_error("build_generators", "generator determinant is not 1");
    (void)k;
    return {R, S, D};
}

namespace {

GroupTable finish_table(const FieldCtx& ctx, std::vector<Mat2>&& elems) {
    GroupTable t;
    t.ctx = ctx;
    t.elems = std::move(elems);
    std::sort(t.elems.begin(), t.elems.end(), [&](const Mat2& m, const Mat2& n) {
        return proj_key(ctx, m) < proj_key(ctx, n);
    });
    t.index.reserve(t.elems.size() * 2);
    for (std::uint32_t i = 0; i < t.elems.size(); ++i)
        t.index.emplace(proj_key(ctx, t.elems[i]), i);
    t.identity = t.at(mat_identity(ctx));
    return t;
}

void check_group_order(const FieldCtx& ctx, std::uint64_t n) {
    if (n == 60)
        throw verification_error("enumerate_group",
                                 "closure has order 60 (exceptional A5 pair)");
    BigInt p(static_cast<unsigned long>(ctx.p()));
    if (BigInt(n) != psl2_order(p))
        throw verification_error("enumerate_group",
                                 "closure order " + std::to_string(n) + " != p(p^2-1)/2");
}

template <bool Parallel>
GroupTable enumerate_impl(const FieldCtx& ctx, const Mat2& R, const Mat2& S, std::uint64_t cap) {
    std::unordered_map<ProjKey, std::uint32_t, ProjKeyHash> seen;
    std::vector<Mat2> elems;
    std::vector<Mat2> frontier{proj_canon(ctx, mat_identity(ctx))};
    seen.emplace(proj_key(ctx, frontier[0]), 0);
    elems.push_back(frontier[0]);

    std::vector<Mat2> products;
    while (!frontier.empty()) {
        products.assign(frontier.size() * 2, Mat2{});
        const std::int64_t fsz = static_cast<std::int64_t>(frontier.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (Parallel && fsz > 64)
#endif
        for (std::int64_t i = 0; i < fsz; ++i) {
            products[2 * i] = proj_canon(ctx, mat_mul(ctx, frontier[i], R));
            products[2 * i + 1] = proj_canon(ctx, mat_mul(ctx, frontier[i], S));
        }
        std::vector<Mat2> next;
        for (const Mat2& m : products) {
            ProjKey key = proj_key(ctx, m);
            if (seen.emplace(key, static_cast<std::uint32_t>(elems.size())).second) {
                elems.push_back(m);
                next.push_back(m);
                if (elems.size() > cap)
                    throw resource_error("enumerate_group: closure exceeds cap " +
                                         std::to_string(cap));
            }
        }
        frontier = std::move(next);
    }
    check_group_order(ctx, elems.size());
    return finish_table(ctx, std::move(elems));
}

} // namespace

GroupTable enumerate_group(const FieldCtx& ctx, const Mat2& R, const Mat2& S, std::uint64_t cap) {
    return enumerate_impl<true>(ctx, R, S, cap);
}

GroupTable enumerate_group_serial(const FieldCtx& ctx, const Mat2& R, const Mat2& S,
                                  std::uint64_t cap) {
    return enumerate_impl<false>(ctx, R, S, cap);
}

BigInt psl2_order(const BigInt& p) { return p * (p * p - 1) / 2; }

std::uint32_t GroupTable::at(const Mat2& m) const {
    auto it = index.find(proj_key(ctx, m));
    if (it == index.end())
        throw verification_error("GroupTable", "element not in the enumerated group");
    return it->second;
}

namespace {

// Gaussian elimination nullspace of an m x 4 system over the context field.
std::vector<std::array<FieldElem, 4>> nullspace4(const FieldCtx& ctx,
                                                 std::vector<std::array<FieldElem, 4>> rows) {
    const std::size_t ncols = 4;
    std::size_t rank = 0;
    std::vector<std::size_t> pivot_col;
    for (std::size_t col = 0; col < ncols && rank < rows.size(); ++col) {
        std::size_t piv = rank;
        while (piv < rows.size() && ctx.is_zero(rows[piv][col])) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[rank], rows[piv]);
        FieldElem s = ctx.inv(rows[rank][col]);
        for (auto& v : rows[rank]) v = ctx.mul(v, s);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || ctx.is_zero(rows[r][col])) continue;
            FieldElem f = rows[r][col];
            for (std::size_t c = 0; c < ncols; ++c)
                rows[r][c] = ctx.sub(rows[r][c], ctx.mul(f, rows[rank][c]));
        }
        pivot_col.push_back(col);
        ++rank;
    }
    std::vector<std::array<FieldElem, 4>> basis;
    for (std::size_t col = 0; col < ncols; ++col) {
        if (std::find(pivot_col.begin(), pivot_col.end(), col) != pivot_col.end()) continue;
        std::array<FieldElem, 4> v{ctx.zero(), ctx.zero(), ctx.zero(), ctx.zero()};
        v[col] = ctx.one();
        for (std::size_t r = 0; r < rank; ++r) v[pivot_col[r]] = ctx.neg(rows[r][col]);
        basis.push_back(v);
    }
    return basis;
}

// Rows of the linear system T*M = sign * N*T in the four unknowns
// (T.a, T.b, T.c, T.d).
void append_conj_rows(const FieldCtx& ctx, std::vector<std::array<FieldElem, 4>>& rows,
                      const Mat2& M, const Mat2& N, int sign) {
    const Mat2 Ns = sign > 0 ? N : Mat2{ctx.neg(N.a), ctx.neg(N.b), ctx.neg(N.c), ctx.neg(N.d)};
    // T*M - Ns*T = 0, entrywise; unknown order (a, b, c, d) of T
    rows.push_back({ctx.sub(M.a, Ns.a), M.c, ctx.neg(Ns.b), ctx.zero()});
    rows.push_back({M.b, ctx.sub(M.d, Ns.a), ctx.zero(), ctx.neg(Ns.b)});
    rows.push_back({ctx.neg(Ns.c), ctx.zero(), ctx.sub(M.a, Ns.d), M.c});
    rows.push_back({ctx.zero(), ctx.neg(Ns.c), M.b, ctx.sub(M.d, Ns.d)});
}

Mat2 from_vec(const std::array<FieldElem, 4>& v) { return {v[0], v[1], v[2], v[3]}; }

} // namespace

Reflection find_reflection(const FieldCtx& ctx, const Mat2& R, const Mat2& S,
                           const FieldElem& D) {
    const Mat2 Rinv = mat_inv(ctx, R), Sinv = mat_inv(ctx, S);
    for (int sR : {+1, -1}) {
        for (int sS : {+1, -1}) {
            std::vector<std::array<FieldElem, 4>> rows;
            append_conj_rows(ctx, rows, R, Rinv, sR);
            append_conj_rows(ctx, rows, S, Sinv, sS);
            for (const auto& v : nullspace4(ctx, rows)) {
                Mat2 Z = from_vec(v);
                FieldElem det = mat_det(ctx, Z);
                if (ctx.is_zero(det) || !ctx.is_square(det)) continue;
                if (!mat_is_scalar(ctx, mat_mul(ctx, Z, Z))) continue;
                // re-check the defining conjugations projectively
                Mat2 Zi = mat_inv(ctx, Z);
                if (!proj_equal(ctx, mat_mul(ctx, mat_mul(ctx, Z, R), Zi), Rinv)) continue;
                if (!proj_equal(ctx, mat_mul(ctx, mat_mul(ctx, Z, S), Zi), Sinv)) continue;

                Reflection out;
                out.Z = proj_canon(ctx, Z);
                out.sign_R = sR;
                out.sign_S = sS;
                // independent orientability witness: -D must be a square in GF(p)
                FieldElem negD = ctx.neg(D);
                if (!ctx.in_prime_field(negD))
                    throw verification_error("find_reflection", "-D is not in the prime field");
                out.neg_D_square = legendre(negD.a0, ctx.p()) == 1;
                if (!out.neg_D_square)
                    throw verification_error("find_reflection",
                                             "-D is a nonsquare yet a reflection exists");
                return out;
            }
        }
    }
    throw verification_error("find_reflection",
                             "no reflection found (map would be orientable or p inadmissible)");
}

InvolutionTriple involution_triple(const FieldCtx& ctx, const Mat2& R, const Mat2& S,
                                   const Mat2& Z) {
    InvolutionTriple t;
    t.x = proj_canon(ctx, mat_mul(ctx, Z, S));
    t.y = proj_canon(ctx, mat_mul(ctx, R, Z));
    t.z = proj_canon(ctx, Z);

    auto require_involution = [&](const Mat2& m, const char* name) {
        if (!mat_is_scalar(ctx, mat_mul(ctx, m, m)))
            throw verification_error("involution_triple",
                                     std::string(name) + "^2 is not scalar");
    };
    require_involution(t.x, "x");
    require_involution(t.y, "y");
    require_involution(t.z, "z");
    require_involution(mat_mul(ctx, t.x, t.y), "xy");

    if (!proj_equal(ctx, mat_mul(ctx, t.y, t.z), R))
        throw verification_error("involution_triple", "yz != R");
    if (!proj_equal(ctx, mat_mul(ctx, t.z, t.x), S))
        throw verification_error("involution_triple", "zx != S");
    ProjKey kx = proj_key(ctx, t.x), ky = proj_key(ctx, t.y), kz = proj_key(ctx, t.z);
    if (kx == ky || ky == kz || kx == kz)
        throw verification_error("involution_triple", "x, y, z are not pairwise distinct");
    return t;
}

std::optional<Mat2> find_conjugator(const FieldCtx& ctx, const InvolutionTriple& from,
                                    const InvolutionTriple& to) {
    for (int sx : {+1, -1}) {
        for (int sy : {+1, -1}) {
            for (int sz : {+1, -1}) {
                std::vector<std::array<FieldElem, 4>> rows;
                append_conj_rows(ctx, rows, from.x, to.x, sx);
                append_conj_rows(ctx, rows, from.y, to.y, sy);
                append_conj_rows(ctx, rows, from.z, to.z, sz);
                for (const auto& v : nullspace4(ctx, rows)) {
                    Mat2 T = from_vec(v);
                    if (ctx.is_zero(mat_det(ctx, T))) continue;
                    Mat2 Ti = mat_inv(ctx, T);
                    auto conj = [&](const Mat2& m) {
                        return mat_mul(ctx, mat_mul(ctx, T, m), Ti);
                    };
                    if (!proj_equal(ctx, conj(from.x), to.x)) continue;
                    if (!proj_equal(ctx, conj(from.y), to.y)) continue;
                    if (!proj_equal(ctx, conj(from.z), to.z)) continue;
                    return proj_canon(ctx, T);
                }
            }
        }
    }
    return std::nullopt;
}

} // namespace trinity
