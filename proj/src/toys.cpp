#include "trinity/toys.hpp"

#include <algorithm>
#include <array>
#include <map>

#include "trinity/errors.hpp"

namespace trinity {

RegularMap toy_z2cube() {
    // flags = bitmasks over {x,y,z} = bits 0,1,2; right multiplication = xor
    const std::uint32_t n = 8;
    std::vector<std::uint32_t> px(n), py(n), pz(n);
    for (std::uint32_t g = 0; g < n; ++g) {
        px[g] = g ^ 1u;
        py[g] = g ^ 2u;
        pz[g] = g ^ 4u;
    }
    return map_from_perms(std::move(px), std::move(py), std::move(pz), 0, true);
}

namespace {

using Perm4 = std::array<std::uint8_t, 4>;

Perm4 compose(const Perm4& f, const Perm4& g) { // (f*g)(i) = f(g(i))
    return {f[g[0]], f[g[1]], f[g[2]], f[g[3]]};
}

} // namespace

RegularMap toy_tetrahedron() {
    // S4 generated by the commuting pair x=(1 2), y=(3 4) and z=(2 3):
    // (xy)^2 = 1, yz and zx of order 3.
    const Perm4 id{0, 1, 2, 3};
    const Perm4 x{1, 0, 2, 3}, y{0, 1, 3, 2}, z{0, 2, 1, 3};

    std::vector<Perm4> elems{id};
    std::map<Perm4, std::uint32_t> index{{id, 0}};
    for (std::size_t head = 0; head < elems.size(); ++head) {
        for (const Perm4& gen : {x, y, z}) {
            Perm4 m = compose(elems[head], gen);
            if (index.emplace(m, static_cast<std::uint32_t>(elems.size())).second)
                elems.push_back(m);
        }
    }

    const std::uint32_t n = static_cast<std::uint32_t>(elems.size());
    std::vector<std::uint32_t> px(n), py(n), pz(n);
    for (std::uint32_t i = 0; i < n; ++i) {
        px[i] = index.at(compose(elems[i], x));
        py[i] = index.at(compose(elems[i], y));
        pz[i] = index.at(compose(elems[i], z));
    }
    return map_from_perms(std::move(px), std::move(py), std::move(pz), index.at(id), true);
}

RegularMap toy_by_name(const std::string& name) {
    if (name == "z2cube") return toy_z2cube();
    if (name == "tetrahedron") return toy_tetrahedron();
    throw input_error("unknown toy map: " + name + " (known: z2cube, tetrahedron)");
}

} // namespace trinity
