#pragma once

#include <complex>
#include <optional>
#include <utility>

#include "zxw/diagram.hpp"

namespace zxw {

// r = 2^n cos(beta) e^{i theta}; gamma = arccos(2^-n)
struct ParamEncoding {
    int n = 0;
    double beta = 0.0;
    double gamma = 0.0;
    double theta = 0.0;
};

ParamEncoding encode_param(std::complex<double> r);

// encoding of r1 + r2 through theta3 = arg(r1 + r2) and a complex lambda with
// 2^n e^{i theta3} cos(lambda) = r1 + r2
struct SumEncoding {
    int n = 0;
    double theta3 = 0.0;
    std::complex<double> lambda;
};

SumEncoding encode_sum(std::complex<double> r1, std::complex<double> r2);

struct GnInverse {
    int n = 0;
    double beta = 0.0;
    Diagram diagram;
};

// I(alpha) with [[I(alpha)]] (1 + e^{i alpha}) = 1; exact on the pi/4 grid
GnInverse gn_inverse(const Phase& alpha);

// number of wires carrying the w-register in ZW images
inline constexpr int kRegister = 2;

// ZX pi/4 diagram n->m to a ZW-half diagram n+2 -> m+2; the last two wires carry w
Diagram zx_to_zw(const Diagram& d);
// ZW-half diagram to ZX; with keep_triangles the target is ZX_T
Diagram zw_to_zx(const Diagram& d, bool keep_triangles = false);
// (id x v) o [[d]_W]_X o (id x u), same interpretation as d
Diagram round_trip(const Diagram& d);
// the register preparation and readout used by round_trip
Diagram register_state();
Diagram register_effect();

// ZX image of the ZW white node r with n inputs and m outputs
Diagram white_zx(std::complex<double> r, int n, int m, bool keep_triangles = false);
// white node rebuilt from the sum encoding of r1 + r2
Diagram white_from_sum(const SumEncoding& e, int n, int m);

// Triangle nodes replaced by pi/4 decompositions; throws std::domain_error when
// require_exact is set and some parameter has no exact decomposition
Diagram expand_triangle(const Diagram& d, bool require_exact = false);
// decomposition of one triangle, ZX (no triangle nodes)
Diagram triangle_decomposition(const Param& r, bool require_exact = false);

// merge o (T_r^T x T_s^T) o copy  and  T_{r+s}^T o |0><0|
std::pair<Diagram, Diagram> parallel_triangles(const Param& r, const Param& s);

// s = n (e^{i theta} + e^{-i theta}) e^{i alpha}, as a chain of 2n unit triangles
struct TriangleSplit {
    int n = 1;
    double theta = 0.0;
    double alpha = 0.0;
    Diagram chain;
};
TriangleSplit split_triangle(std::complex<double> s);

} // namespace zxw
