"""Identity registry: matrix builders, closed forms, structural
verifiers, and the randomized verification engine."""

from .base import (IdentityRecord, Resample, Trial, UnknownIdentityError,
                   VerifyReport, build_matrix, closed_form, get_record,
                   registry_ids, trial_rng, verify_identity)
from . import classical  # noqa: F401  (registers records on import)
from . import multiblock  # noqa: F401
from . import qbinomial  # noqa: F401
from . import binomsum  # noqa: F401
from . import factratio  # noqa: F401
from . import lattice  # noqa: F401
from . import sequences  # noqa: F401
from . import structured  # noqa: F401
from .structured import (verify_goulden_jackson, verify_group_determinant,
                         verify_izergin_korepin, verify_nc_suite,
                         verify_okada, verify_strehl_wilf, verify_turnbull)
from .methods import (condensation_recurrence_check, identification_workflow_mrr,
                      lu_vandermonde_check, ode_method_check)

__all__ = [
    "IdentityRecord", "Resample", "Trial", "UnknownIdentityError",
    "VerifyReport", "build_matrix", "closed_form", "get_record",
    "registry_ids", "trial_rng", "verify_identity",
    "verify_goulden_jackson", "verify_group_determinant",
    "verify_izergin_korepin", "verify_nc_suite", "verify_okada",
    "verify_strehl_wilf", "verify_turnbull",
    "condensation_recurrence_check", "identification_workflow_mrr",
    "lu_vandermonde_check", "ode_method_check",
]
