"""
Property checklist for simplicial complexes
Runs the pure, flag, balanced, pencil, shifted and order-ideal checks in one pass
"""

import logging
from typing import List

from .complexes import dimension, f_vector, is_pure, minimal_nonfaces
from .graphical import COLORING_LIMIT, find_balanced_coloring, is_flag, is_pencil
from .models import PropertyCheck, SimplicialComplex
from .shifted import SEARCH_LIMIT, find_shifted_labeling, is_order_ideal

logger = logging.getLogger(__name__)


class ComplexValidator:
    """Validate a complex against the properties the harness cares about"""

    def __init__(self, coloring_limit: int = COLORING_LIMIT, labeling_limit: int = SEARCH_LIMIT):
        self.coloring_limit = coloring_limit
        self.labeling_limit = labeling_limit

    def validate_complex(self, K: SimplicialComplex) -> PropertyCheck:
        """Run all property checks on a complex"""
        n = K.vertex_count
        coloring = find_balanced_coloring(K) if n <= self.coloring_limit else None
        labeling = find_shifted_labeling(K) if n <= self.labeling_limit else None

        checks = PropertyCheck(
            vertex_count=n,
            dimension=dimension(K),
            f_vector=list(f_vector(K)),
            minimal_nonfaces=minimal_nonfaces(K),
            ghost_vertices=list(K.ghost_vertices),
            is_pure=is_pure(K),
            is_flag=is_flag(K),
            is_balanced=coloring is not None if n <= self.coloring_limit else None,
            is_pencil=is_pencil(K),
            is_shifted=labeling is not None if n <= self.labeling_limit else None,
            is_order_ideal=self._check_order_ideal(K),
            shifted_labeling=labeling,
            balanced_coloring=coloring,
        )

        checks.issues = self._generate_issues(checks)
        logger.debug("validated %s: %s", K.describe(), checks.satisfied)

        return checks

    def _check_order_ideal(self, K: SimplicialComplex) -> bool:
        """Order ideal under the identity labeling"""
        return is_order_ideal(K)

    def _generate_issues(self, checks: PropertyCheck) -> List[str]:
        """Explain every property that fails or was skipped"""
        issues = []

        if not checks.is_pure:
            issues.append("Not pure: facets have different dimensions")

        if not checks.is_flag:
            wide = [f for f in checks.minimal_nonfaces if len(f) != 2]
            issues.append(f"Not flag: minimal nonfaces of size != 2, e.g. {list(wide[0])}")

        if checks.is_balanced is None:
            issues.append(
                f"Balanced check skipped: n={checks.vertex_count} exceeds {self.coloring_limit}"
            )
        elif not checks.is_balanced:
            issues.append(
                f"Not balanced: 1-skeleton needs more than {checks.dimension + 1} colors"
            )

        if not checks.is_pencil:
            issues.append("Not a pencil of simplices")

        if checks.is_shifted is None:
            issues.append(
                f"Shifted check skipped: n={checks.vertex_count} exceeds {self.labeling_limit}"
            )
        elif not checks.is_shifted:
            issues.append("Not shiftable: no vertex labeling makes the complex shifted")

        if not checks.is_order_ideal:
            issues.append("Not an order ideal under the identity labeling")

        if checks.ghost_vertices:
            issues.append(f"Ghost vertices (not faces): {checks.ghost_vertices}")

        return issues
