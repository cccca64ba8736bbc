"""Exact-arithmetic verification of truncated hypergeometric supercongruences."""
from .bernoulli import b13_via_lehmer, bernoulli_numbers_mod_p, bernoulli_poly_at
from .checks import REGISTRY, PrimeContext, check_lemma, check_theorem
from .gamma import gamma_p, gamma_reflection_check
from .harmonic import HarmonicFamily, harmonic_value, reflection_check, wolstenholme_check
from .hyperseries import SPECS, inner_weight_sum, pochhammer_padic, truncated_sum
from .identities import IdentityId, identity_eval, identity_verify
from .padic import PadicNum, legendre_symbol, mod_inverse, padic_add, padic_inv, padic_mul, padic_of_rational
from .report import CheckReport
from .suite import SuiteConfig, emit_report, run_suite

__version__ = "0.1.0"
