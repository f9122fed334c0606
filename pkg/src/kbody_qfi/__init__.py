"""Exact maximal QFI for k-body diagonal generators on N parties."""
from .case_two import Case2Report, DichotomyCell, case2_optimal, case2_sector_eigenvalue, dichotomy_map
from .combinat import BinomialCache, SectorSpectrum, binom, n0, sector_eigenvalue, sector_orders, sector_spectrum
from .fit import FitConfig, FitResult, loglog_fit, scaling_fit, scaling_points, student_t_quantile
from .highdim import HighDimReport, LocalExtremes, Scenario, classify_scenario, extremal_assignment, optimal_probe_highdim
from .probes import Classification, ProbeState, TieRule, classify_probe, optimal_probe, product_window
from .qfi_optimal import QfiReport, asymptotic_qfi, optimal_qfi, optimal_qfi_closed_k2, scaling_ratio
from .qfi_product import sp_qfi_at, sp_qfi_hypergeom, sp_qfi_max, sp_qfi_max_closed_k2, sp_qfi_max_closed_k3

__version__ = "0.1.0"
