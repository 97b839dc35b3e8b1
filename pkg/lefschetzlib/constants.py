from __future__ import annotations

# See lefschetzlib/default_config.yml
from lefschetzlib.config import lefschetz_config


# Comparison tolerances for floating point twists
TWIST_TOLERANCE: float = float(lefschetz_config.tolerances.twist)
UNIT_CIRCLE_TOLERANCE: float = float(lefschetz_config.tolerances.unit_circle)

