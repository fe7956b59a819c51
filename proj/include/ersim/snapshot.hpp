#pragma once

#include <string>

#include "ersim/field.hpp"

namespace ersim {

// Binary field snapshot format "ERSF":
//   magic "ERSF", u32 version, u32 n, u32 m, u8 representation flag,
//   then little-endian float64 values row major (physical) or interleaved
//   re/im (spectral). Components of vector/tensor fields are stored
//   consecutively; the component count is recovered from the payload size.
// Version 2 carries a time axis (u32 slice count, f64 slice dt after the
// representation flag) and is used for exponent-field series.

void write_snapshot(const std::string& path, const ScalarField& f);
void write_snapshot(const std::string& path, const VectorField& f);

ScalarField read_scalar_snapshot(const std::string& path);
VectorField read_vector_snapshot(const std::string& path);

} // namespace ersim
