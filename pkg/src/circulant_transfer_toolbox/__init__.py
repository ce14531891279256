from __future__ import absolute_import

from .circulant_transfer_toolbox import StructuralError, ResourceCapExceeded, VerificationMismatch, \
    UnsupportedSpecError, CirculantSpec, cycle_spec, ClosedKernel, closed_kernel, StateSet, enumerate_states, \
    is_independent, minkowski_difference, compatible, ExplicitGraph, build_strong_stack, KernelSpectrum, \
    fourier_of_kernel, residues_to_mask, mask_to_residues, popcount

from .exact_arith import IntPolynomial, PolyMatrix, PrimeFieldPoly, poly_arith, poly_square_root, \
    charpoly_exact, charpoly_leverrier, charpoly_mod_p, factor_mod_p, degree_pattern

from .cyclotomic import CyclotomicElement, CyclotomicPolynomial, omega, mu, real_trace, cyclotomic_arith, \
    charpoly_cyclotomic

from .transfer import TransferMatrix, WeightedTransfer, IndependencePolynomial, build_transfer, \
    build_weighted_transfer, strip_polynomial, torus_polynomial, power_iteration, spectral_report, summary_table, \
    ConvergenceError, DOCUMENTED_C7_TORUS_D3, check_documented_c7

from .symmetry import DihedralElement, dihedral_group, orbit_decompose, orbit_transfer, sign_sector_matrix, \
    fourier_block, rotation_orbit_matrix, sector_traces, multiplicity_accounting, check_equivariance

from .spectral_factor import FactorizationReport, assemble_factorization, factorization_for_spec, \
    irreducibility_sieve, quartic_galois, modp_diagnostics, small_primes_table, check_documented_factorization

from .oracle import brute_independence_polynomial, layered_equivalence_check

__all__ = ['StructuralError', 'ResourceCapExceeded', 'VerificationMismatch', 'UnsupportedSpecError',
    'CirculantSpec', 'cycle_spec', 'ClosedKernel', 'closed_kernel', 'StateSet', 'enumerate_states',
    'is_independent', 'minkowski_difference', 'compatible', 'ExplicitGraph', 'build_strong_stack', 'KernelSpectrum',
    'fourier_of_kernel', 'residues_to_mask', 'mask_to_residues', 'popcount', 'IntPolynomial', 'PolyMatrix',
    'PrimeFieldPoly', 'poly_arith', 'poly_square_root', 'charpoly_exact', 'charpoly_leverrier', 'charpoly_mod_p',
    'factor_mod_p', 'degree_pattern', 'CyclotomicElement', 'CyclotomicPolynomial', 'omega', 'mu', 'real_trace',
    'cyclotomic_arith', 'charpoly_cyclotomic', 'TransferMatrix', 'WeightedTransfer', 'IndependencePolynomial',
    'build_transfer', 'build_weighted_transfer', 'strip_polynomial', 'torus_polynomial', 'power_iteration',
    'spectral_report', 'summary_table', 'ConvergenceError', 'DOCUMENTED_C7_TORUS_D3', 'check_documented_c7',
    'DihedralElement',
    'dihedral_group', 'orbit_decompose', 'orbit_transfer', 'sign_sector_matrix', 'fourier_block',
    'rotation_orbit_matrix', 'sector_traces', 'multiplicity_accounting', 'check_equivariance',
    'FactorizationReport', 'assemble_factorization', 'factorization_for_spec', 'irreducibility_sieve',
    'quartic_galois', 'modp_diagnostics', 'small_primes_table', 'check_documented_factorization',
    'brute_independence_polynomial',
    'layered_equivalence_check']
