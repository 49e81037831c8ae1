#include "cayley/ledger.hpp"

#include <cstdint>

namespace cayley {

const std::string& convention_ledger() {
    static const std::string text =
        "orientation: vol = dx_1 ^ ... ^ dx_n; star(dx_I) = sign * dx_{I^c} fixed by "
        "dx_I ^ star(dx_I) = vol\n"
        "inner product: basis k-forms orthonormal; pairing bilinear, no conjugation\n"
        "cyclotomic basis: 1, z, z^2, z^3 with z^4 = z^2 - 1; i = z^3; w = z^2 - 1; "
        "sqrt3 = 2z - z^3\n"
        "cross normalization: (x ** y)(u) = star(y ^ star(x ^ u)) + (2/3) <x,y> u\n"
        "bracket: r-part [r1,r2] + x1**y2 - x2**y1; x-part r1.x2 - r2.x1 + star(y1 ^ y2); "
        "y-part -r1^T.y2 + r2^T.y1 - star(x1 ^ x2)\n"
        "killing normalization: 60 (tr(r1 r2) + <x1,y2> + <x2,y1>)\n"
        "canonical basis order: E_ij row-major, H_d = E_dd - E_{d+1,d+1}, 3-forms "
        "lexicographic, x block before y block\n"
        "compact basis order: F_ij = E_ij - E_ji, G_ij = i(E_ij + E_ji), D_d = i H_d, "
        "then (0, f, -f), then (0, i f, i f)\n"
        "clifford sign: gamma_i gamma_j + gamma_j gamma_i = -2 delta_ij\n"
        "gamma blocks: gamma_i = [[0, -L_i^T], [L_i, 0]] with L_i left octonion "
        "multiplication by e_i\n"
        "octonions: Cayley-Dickson doubling, (a,b)(c,d) = (ac - conj(d) b, d a + b conj(c))\n"
        "cayley form: the standard 14-term expression in coordinates dx_1..dx_8\n"
        "unit spinor: first positive-chirality coordinate vector when compatible with the "
        "stabilizer kernel, otherwise solved from the kernel equations\n"
        "symbol maps: dirac symbol c(xi) restricted S- -> S+; deformation symbol "
        "a -> (<xi,a>, pi_7(xi ^ a)) in the frozen eigenbasis of L\n";
    return text;
}

std::string convention_ledger_hash() {
    static const std::string hash = [] {
        // FNV-1a, 64-bit.
        std::uint64_t h = 1469598103934665603ull;
        for (unsigned char c : convention_ledger()) {
            h ^= c;
            h *= 1099511628211ull;
        }
        static const char* digits = "0123456789abcdef";
        std::string out(16, '0');
        for (int k = 15; k >= 0; --k) {
            out[static_cast<std::size_t>(k)] = digits[h & 0xf];
            h >>= 4;
        }
        return out;
    }();
    return hash;
}

} // namespace cayley
