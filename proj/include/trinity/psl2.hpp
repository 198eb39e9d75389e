#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "trinity/gf.hpp"

namespace trinity {

/// 2x2 matrix [[a,b],[c,d]] over the context field.
struct Mat2 {
    FieldElem a, b, c, d;

    bool operator==(const Mat2&) const = default;
};

/// Canonical key of the projective class of a matrix: entries scaled so the
/// first nonzero entry in row-major order is 1.
using ProjKey = std::array<std::uint64_t, 8>;

struct ProjKeyHash {
    std::size_t operator()(const ProjKey& k) const noexcept;
};

Mat2 mat_identity(const FieldCtx& ctx);
Mat2 mat_mul(const FieldCtx& ctx, const Mat2& m, const Mat2& n);
FieldElem mat_det(const FieldCtx& ctx, const Mat2& m);
Mat2 mat_inv(const FieldCtx& ctx, const Mat2& m);
bool mat_is_scalar(const FieldCtx& ctx, const Mat2& m);

/// Projective canonicalization (first nonzero entry scaled to 1).
Mat2 proj_canon(const FieldCtx& ctx, const Mat2& m);
ProjKey proj_key(const FieldCtx& ctx, const Mat2& m);
/// Equal as elements of PGL (one is a scalar multiple of the other)?
bool proj_equal(const FieldCtx& ctx, const Mat2& m, const Mat2& n);

/// Least n >= 1 with m^n scalar.
unsigned long proj_order(const FieldCtx& ctx, const Mat2& m);

/// Generator matrices for the self-dual-type construction (face length equal
/// to the valency k):  R = diag(xi, xi^-1) and
/// S = (xi - xi^-1)^-1 * [[-(xi + xi^-1) xi^-1, -D], [1, (xi + xi^-1) xi]]
/// with D = 2(zeta + zeta^-1) = -4/3, asserted nonzero.
struct Generators {
    Mat2 R, S;
    FieldElem D;
};
Generators build_generators(const FieldCtx& ctx, unsigned long k, const FieldElem& zeta,
                            const FieldElem& xi);

/// Closed multiplication table of <R,S> as projective elements, canonically
/// sorted.  index maps each canonical key to its position in elems.
struct GroupTable {
    FieldCtx ctx;
    std::vector<Mat2> elems; // canonical representatives, sorted by key
    std::unordered_map<ProjKey, std::uint32_t, ProjKeyHash> index;
    std::uint32_t identity = 0;

    std::uint64_t order() const { return elems.size(); }
    std::uint32_t at(const Mat2& m) const;
};

/// BFS closure of <R,S> under right multiplication.  Throws resource_error
/// when the closure exceeds cap, verification_error when the final order is
/// not p(p^2-1)/2 or equals 60 (the exceptional A5 pairs).  The parallel
/// flavor shards each BFS frontier across OpenMP threads; both produce the
/// same canonically sorted table.
GroupTable enumerate_group(const FieldCtx& ctx, const Mat2& R, const Mat2& S, std::uint64_t cap);
GroupTable enumerate_group_serial(const FieldCtx& ctx, const Mat2& R, const Mat2& S,
                                  std::uint64_t cap);

/// Expected order p(p^2 - 1)/2 of PSL(2,p).
BigInt psl2_order(const BigInt& p);

struct Reflection {
    Mat2 Z;
    int sign_R = 0, sign_S = 0; // the sign combination the solution came from
    bool neg_D_square = false;  // independent orientability witness
};

/// Solves Z R = +-R^-1 Z and Z S = +-S^-1 Z for a nonsingular Z with square
/// determinant (membership in PSL) and Z^2 scalar; re-checks the conjugation
/// relations and that -D is a square in GF(p).  Throws verification_error
/// when no such Z exists.
Reflection find_reflection(const FieldCtx& ctx, const Mat2& R, const Mat2& S,
                           const FieldElem& D);

struct InvolutionTriple {
    Mat2 x, y, z;
};

/// x = ZS, y = RZ, z = Z; verifies that all of x, y, z, xy square to scalars,
/// that yz = R and zx = S projectively, and pairwise distinctness.
InvolutionTriple involution_triple(const FieldCtx& ctx, const Mat2& R, const Mat2& S,
                                   const Mat2& Z);

/// A matrix T with T from.x T^-1 = +-to.x (and likewise y, z), i.e. a PGL
/// element realizing the triple map, found by intersecting nullspaces over
/// the 8 sign combinations.  Absence is a legitimate negative answer.
std::optional<Mat2> find_conjugator(const FieldCtx& ctx, const InvolutionTriple& from,
                                    const InvolutionTriple& to);

/// Everything the matrix-level pipeline produces for one valency.
struct MapSeed {
    unsigned long k = 0;
    BigInt p;
    FieldCtx ctx;
    int epsilon = 0;
    int e = 1; // extension exponent of the classification; always 1 here
    FieldElem zeta, xi, D;
    Mat2 R, S, Z;
    InvolutionTriple triple;
    Reflection reflection;
};

} // namespace trinity
