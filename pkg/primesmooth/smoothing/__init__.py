from .params import (
    SmoothingParams, choose_params_thm1, choose_params_thm2, choose_params_thm3,
    choose_params_thm4, choose_params_thm5)
from .sandwich import (
    SandwichCounts, smoothed_counts_thm1, smoothed_counts_thm2, smoothed_counts_thm3,
    smoothed_counts_thm4, smoothed_counts_thm5, smoothed_main_term, normalize, choose_params,
    bracket, SMOOTHERS)
from .oracle import brute_smoothed
