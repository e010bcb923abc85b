#!/usr/bin/env python3
"""Regenerate src/cie_tables.cpp from the colour-science package.

Colour matching functions are the CIE 1 nm tabulations. CIE D65 is taken
from the 5 nm tabulation and linearly interpolated to 1 nm, as recommended
by CIE 15 for the daylight illuminants.
"""
import sys

import colour
import numpy as np

START, END = 360, 720


def rows(values, per_line=6):
    out = []
    for i in range(0, len(values), per_line):
        out.append("    " + ", ".join(f"{v:.9g}" for v in values[i:i + per_line]) + ",")
    return "\n".join(out)


def main(path):
    wl = np.arange(START, END + 1)
    cmf2 = colour.MSDS_CMFS["CIE 1931 2 Degree Standard Observer"]
    cmf10 = colour.MSDS_CMFS["CIE 1964 10 Degree Standard Observer"]
    d65 = colour.SDS_ILLUMINANTS["D65"]
    d65_1nm = np.interp(wl, d65.wavelengths, d65.values)

    tables = {}
    for name, cmf in (("kCie1931", cmf2), ("kCie1964", cmf10)):
        arr = np.array([cmf[w] for w in wl])
        for k, axis in enumerate("XYZ"):
            # The 10 deg z-bar tail carries float noise around 1e-21, some of it negative.
            col = arr[:, k].copy()
            col[np.abs(col) < 1e-15] = 0.0
            tables[f"{name}{axis}"] = col
    tables["kD65"] = d65_1nm

    with open(path, "w") as f:
        f.write("// Generated by tools/gen_cie_tables.py; do not edit.\n")
        f.write(f"// Source: colour-science {colour.__version__}.\n")
        f.write("//   CIE 1931 2 deg and CIE 1964 10 deg colour matching functions, CIE 1 nm tables.\n")
        f.write("//   CIE D65 relative SPD, 5 nm table linearly interpolated to 1 nm.\n")
        f.write(f"// Range {START}..{END} nm, 1 nm step.\n\n")
        f.write('#include "cie_tables.hpp"\n\nnamespace ovt::data {\n\n')
        for name, values in tables.items():
            f.write(f"const std::array<double, kTableSize> {name} = {{\n{rows(values)}\n}};\n\n")
        f.write("}  // namespace ovt::data\n")


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "src/cie_tables.cpp")
