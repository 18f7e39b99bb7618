import os

from hypothesis import HealthCheck, settings

settings.register_profile("ci", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("dev", deadline=None, max_examples=25)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "ci"))

EXAMPLE_22 = "0 <-> A + B; 2A + B -> 3A + 2B"
NOT_MSS_EXAMPLE = "2B <-> A + B; 3A -> 2A + B"
ZIGZAG_EXAMPLE = "A -> B; 2A + B -> 3A"
EXAMPLE_52 = "2C + 2D <-> A + B + C + D; 2A + 2B + C + D -> 3A + 3B"
EXAMPLE_53 = "2C + 2D <-> A + B + C + D; 2A + C + D -> 3A + B"
SLOPE_MINUS_ONE = "0 <-> A + B; 2A -> 3A + B"
