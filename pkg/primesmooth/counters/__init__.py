from .intervals import ResidueInterval, ResidueSet, interval_hits, window_weights
from .queries import (
    Query, PowerBoxQuery, PowerDiffQuery, ProductIntervalQuery, SetIntervalQuery,
    HyperbolaBoxQuery)
from .fast import (
    count, count_J, count_J1, count_J2, count_J3, count_J4, power_box_count,
    power_diff_count, product_interval_count, set_interval_count, hyperbola_box_count)
from .brute import brute_count, guard_volume
