#pragma once

namespace bpl {

// Exponential integral E1(z) = \int_z^\infty e^{-s}/s ds, z > 0.
// Power series for z <= 1, modified Lentz continued fraction beyond.
double expint_e1(double z);

}  // namespace bpl
