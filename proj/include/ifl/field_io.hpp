#pragma once

#include <string>

#include "ifl/field.hpp"
#include "ifl/heat_kernel.hpp"

namespace ifl {

// Fixed %.17g formatting; every serialized number goes through this so
// identical runs produce byte-identical files.
std::string format_double(double v);

void ensure_directory(const std::string& dir);

// One node per row, coordinates then value: "x,y,value" in 2D.
void write_field_csv(const std::string& path, const SampledField& f);

// Profile table: "r,F" rows over [0, r_max].
void write_kernel_csv(const std::string& path, const Kernel1D& k);

void write_text(const std::string& path, const std::string& content);

}  // namespace ifl
