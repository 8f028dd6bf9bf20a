from __future__ import annotations
from typing import Optional

# Default settings

# Catalog file with extra knots, in JSON, YAML or TOML.
# Default if None: $KNOTCOMM_CATALOG, then only the built-in knots
CATALOG: Optional[str] = None

# Target radius of certified results (angles, logarithms, τ, ρ)
RADIUS: float = 1e-12

# Largest cover degree looked at by the orientation analysis
N_MAX: int = 480

# Largest cover degree looked at by ratio scans
SCAN_N_MAX: int = 24

# Default length of homology growth sequences
GROWTH_K_MAX: int = 2000

# A certified difference that contains 0 passes if its radius is below this,
# and is inconclusive otherwise
PASS_TOLERANCE: float = 1e-4

# Significant digits used to render decimals in CSV output
CSV_DIGITS: int = 15

# Largest coefficient tried when looking for integer relations; at most 100
PROBE_MAX_COEFF: int = 10
