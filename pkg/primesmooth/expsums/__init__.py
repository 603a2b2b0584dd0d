from .roots import roots_of_unity, compensated_sum
from .interval import (
    interval_sum, direct_interval_sum, interval_sums, interval_sum_l1, parseval_defect)
from .spectrum import SpectrumSummary, set_spectrum, max_nontrivial_spectrum
from .bilinear import BilinearWeights, vinogradov_double_sum
from .kloosterman import kloosterman, kloosterman_row
from .fourier import fourier_count, fourier_count_J, fourier_count_J3
