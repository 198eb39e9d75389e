#include "trinity/flagmap.hpp"

#include <algorithm>
#include <atomic>
#include <ostream>
#include <queue>

#include "trinity/errors.hpp"

namespace trinity {

namespace {

void check_involution(const std::vector<std::uint32_t>& p, const char* name) {
    for (std::uint32_t i = 0; i < p.size(); ++i) {
        if (p[i] >= p.size() || p[p[i]] != i)
            throw input_error(std::string("flag permutation ") + name + " is not an involution");
        if (p[i] == i)
            throw input_error(std::string("flag permutation ") + name + " has a fixed point");
    }
}

} // namespace

RegularMap map_from_perms(std::vector<std::uint32_t> px, std::vector<std::uint32_t> py,
                          std::vector<std::uint32_t> pz, std::uint32_t base, bool certified) {
    const std::size_t n = px.size();
    if (n == 0 || py.size() != n || pz.size() != n || base >= n)
        throw input_error("map_from_perms: inconsistent sizes");
    if (n % 4 != 0) throw input_error("map_from_perms: flag count must be divisible by 4");
    check_involution(px, "x");
    check_involution(py, "y");
    check_involution(pz, "z");
    for (std::uint32_t i = 0; i < n; ++i)
        if (px[py[i]] != py[px[i]])
            throw input_error("map_from_perms: x and y do not commute");

    // connectivity of the flag graph
    std::vector<bool> seen(n, false);
    std::vector<std::uint32_t> stack{0};
    seen[0] = true;
    std::size_t cnt = 1;
    while (!stack.empty()) {
        std::uint32_t f = stack.back();
        stack.pop_back();
        for (const auto* p : {&px, &py, &pz}) {
            std::uint32_t g = (*p)[f];
            if (!seen[g]) {
                seen[g] = true;
                ++cnt;
                stack.push_back(g);
            }
        }
    }
    if (cnt != n) throw input_error("map_from_perms: flag graph is not connected");

    RegularMap m;
    m.perm_x = std::move(px);
    m.perm_y = std::move(py);
    m.perm_z = std::move(pz);
    m.base_flag = base;
    m.regular_certified = certified;
    return m;
}

namespace {

template <bool Parallel>
RegularMap from_group_triple_impl(const GroupTable& table, const InvolutionTriple& t) {
    const std::int64_t n = static_cast<std::int64_t>(table.order());
    // x, y, z must lie in <R,S>; at() throws otherwise, which doubles as the
    // non-orientability confirmation.
    (void)table.at(t.x);
    (void)table.at(t.y);
    (void)table.at(t.z);

    std::vector<std::uint32_t> px(n), py(n), pz(n);
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (Parallel && n > 256)
#endif
    for (std::int64_t i = 0; i < n; ++i) {
        const Mat2& g = table.elems[static_cast<std::size_t>(i)];
        px[i] = table.at(mat_mul(table.ctx, g, t.x));
        py[i] = table.at(mat_mul(table.ctx, g, t.y));
        pz[i] = table.at(mat_mul(table.ctx, g, t.z));
    }
    return map_from_perms(std::move(px), std::move(py), std::move(pz), table.identity, true);
}

} // namespace

RegularMap from_group_triple(const GroupTable& table, const InvolutionTriple& t) {
    return from_group_triple_impl<true>(table, t);
}

RegularMap from_group_triple_serial(const GroupTable& table, const InvolutionTriple& t) {
    return from_group_triple_impl<false>(table, t);
}

namespace {

std::uint64_t orbit_count(const std::vector<std::uint32_t>& p, const std::vector<std::uint32_t>& q) {
    const std::size_t n = p.size();
    std::vector<bool> seen(n, false);
    std::uint64_t orbits = 0;
    std::vector<std::uint32_t> stack;
    for (std::uint32_t s = 0; s < n; ++s) {
        if (seen[s]) continue;
        ++orbits;
        seen[s] = true;
        stack.assign(1, s);
        while (!stack.empty()) {
            std::uint32_t f = stack.back();
            stack.pop_back();
            for (std::uint32_t g : {p[f], q[f]}) {
                if (!seen[g]) {
                    seen[g] = true;
                    stack.push_back(g);
                }
            }
        }
    }
    return orbits;
}

// Common cycle length of a word permutation; regular maps have homogeneous
// cycle structure, which is asserted here.
std::uint64_t uniform_cycle_length(const RegularMap& m,
                                   const std::vector<const std::vector<std::uint32_t>*>& word,
                                   const char* name) {
    const std::size_t n = m.size();
    auto step = [&](std::uint32_t f) {
        for (const auto* p : word) f = (*p)[f];
        return f;
    };
    std::uint64_t len = 0;
    std::vector<bool> seen(n, false);
    for (std::uint32_t s = 0; s < n; ++s) {
        if (seen[s]) continue;
        std::uint64_t l = 0;
        std::uint32_t f = s;
        do {
            seen[f] = true;
            f = step(f);
            ++l;
        } while (f != s);
        if (len == 0) len = l;
        if (l != len)
            throw verification_error("invariants",
                                     std::string("word ") + name + " has mixed cycle lengths");
    }
    return len;
}

bool is_bipartite(const RegularMap& m) {
    const std::size_t n = m.size();
    std::vector<int> color(n, -1);
    std::vector<std::uint32_t> stack{0};
    color[0] = 0;
    while (!stack.empty()) {
        std::uint32_t f = stack.back();
        stack.pop_back();
        for (const auto* p : {&m.perm_x, &m.perm_y, &m.perm_z}) {
            std::uint32_t g = (*p)[f];
            if (color[g] == -1) {
                color[g] = 1 - color[f];
                stack.push_back(g);
            } else if (color[g] == color[f]) {
                return false;
            }
        }
    }
    return true;
}

} // namespace

MapInvariants invariants(const RegularMap& m) {
    MapInvariants inv;
    inv.V = orbit_count(m.perm_y, m.perm_z);
    inv.E = orbit_count(m.perm_x, m.perm_y);
    inv.F = orbit_count(m.perm_z, m.perm_x);
    inv.chi = static_cast<std::int64_t>(inv.V) - static_cast<std::int64_t>(inv.E) +
              static_cast<std::int64_t>(inv.F);
    inv.type_k = uniform_cycle_length(m, {&m.perm_y, &m.perm_z}, "yz");
    inv.type_l = uniform_cycle_length(m, {&m.perm_z, &m.perm_x}, "zx");
    inv.petrie_len = uniform_cycle_length(m, {&m.perm_x, &m.perm_y, &m.perm_z}, "xyz");
    inv.orientable = is_bipartite(m);
    return inv;
}

RegularMap dual(const RegularMap& m) {
    RegularMap d = m;
    std::swap(d.perm_x, d.perm_y);
    return d;
}

RegularMap petrie(const RegularMap& m) {
    RegularMap p = m;
    for (std::uint32_t i = 0; i < m.size(); ++i) p.perm_x[i] = m.perm_y[m.perm_x[i]];
    return p;
}

namespace {

// Color-respecting propagation base1 -> start2; returns false on conflict.
bool propagate(const RegularMap& m1, const RegularMap& m2, std::uint32_t start2) {
    const std::size_t n = m1.size();
    std::vector<std::uint32_t> img(n, UINT32_MAX);
    img[m1.base_flag] = start2;
    std::vector<std::uint32_t> stack{m1.base_flag};
    const std::vector<std::uint32_t>* p1[3] = {&m1.perm_x, &m1.perm_y, &m1.perm_z};
    const std::vector<std::uint32_t>* p2[3] = {&m2.perm_x, &m2.perm_y, &m2.perm_z};
    while (!stack.empty()) {
        std::uint32_t f = stack.back();
        stack.pop_back();
        for (int c = 0; c < 3; ++c) {
            std::uint32_t f1 = (*p1[c])[f];
            std::uint32_t f2 = (*p2[c])[img[f]];
            if (img[f1] == UINT32_MAX) {
                img[f1] = f2;
                stack.push_back(f1);
            } else if (img[f1] != f2) {
                return false;
            }
        }
    }
    return true;
}

template <bool Parallel>
bool verify_regularity_impl(const RegularMap& m) {
    const std::int64_t n = static_cast<std::int64_t>(m.size());
    std::atomic<bool> ok{true};
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 16) if (Parallel && n > 64)
#endif
    for (std::int64_t f = 0; f < n; ++f) {
        if (!ok.load(std::memory_order_relaxed)) continue;
        if (!propagate(m, m, static_cast<std::uint32_t>(f)))
            ok.store(false, std::memory_order_relaxed);
    }
    return ok.load();
}

void require_regular(const RegularMap& m, const char* who) {
    if (m.regular_certified) return;
    if (!verify_regularity(m))
        throw input_error(std::string(who) + ": input map is not regular");
}

} // namespace

bool verify_regularity(const RegularMap& m) { return verify_regularity_impl<true>(m); }

bool verify_regularity_serial(const RegularMap& m) { return verify_regularity_impl<false>(m); }

bool is_isomorphic_pointed(const RegularMap& m1, const RegularMap& m2) {
    require_regular(m1, "is_isomorphic_pointed");
    require_regular(m2, "is_isomorphic_pointed");
    if (m1.size() != m2.size()) return false;
    return propagate(m1, m2, m2.base_flag);
}

std::pair<bool, bool> trinity_check(const RegularMap& m) {
    return {is_isomorphic_pointed(m, dual(m)), is_isomorphic_pointed(m, petrie(m))};
}

void write_flag_graph_dot(const RegularMap& m, std::ostream& os) {
    os << "graph flags {\n";
    const char* names[3] = {"x", "y", "z"};
    const std::vector<std::uint32_t>* perms[3] = {&m.perm_x, &m.perm_y, &m.perm_z};
    for (int c = 0; c < 3; ++c) {
        for (std::uint32_t i = 0; i < m.size(); ++i) {
            std::uint32_t j = (*perms[c])[i];
            if (i < j) os << "  f" << i << " -- f" << j << " [color=\"" << names[c] << "\"];\n";
        }
    }
    os << "}\n";
}

} // namespace trinity
