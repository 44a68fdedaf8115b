"""RO(C_n)-graded cohomology of projective spaces with exact arithmetic.

Every function returns plain Python data decoded from the same JSON the
``eqcoh --json`` command line tool prints.
"""

import functools
import json

from . import _core
from ._core import DomainError, ParseError, SectorError

__all__ = [
    "DomainError",
    "ParseError",
    "SectorError",
    "basis_monomial",
    "cellular_pi",
    "certify_slice",
    "coeff",
    "cohomology",
    "conj_ring",
    "decompose",
    "injectivity_profile",
    "obstruction_check",
    "parse_degree",
    "q0",
    "series_terms",
    "verify_relation",
]


def _decoded(fn):
    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        return json.loads(fn(*args, **kwargs))

    return wrapper


parse_degree = _decoded(_core.parse_degree)
coeff = _decoded(_core.coeff)
cellular_pi = _decoded(_core.cellular_pi)
decompose = _decoded(_core.decompose)
cohomology = _decoded(_core.cohomology)
certify_slice = _decoded(_core.certify_slice)
q0 = _decoded(_core.q0)
verify_relation = _decoded(_core.verify_relation)
series_terms = _decoded(_core.series_terms)
injectivity_profile = _decoded(_core.injectivity_profile)
basis_monomial = _decoded(_core.basis_monomial)
conj_ring = _decoded(_core.conj_ring)
obstruction_check = _decoded(_core.obstruction_check)
