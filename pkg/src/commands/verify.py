"""Identity suite: factorization of Z, the Penrose identity and the tree-graph bound."""
import logging
from dataclasses import dataclass
from typing import Callable, Dict, List, Optional

import numpy as np
from pubsub import pub  # type: ignore[import-untyped]

from src.combinatorics import EdgeWeights, tree_graph_bound, ursell_sum, ursell_sum_penrose
from src.config import TOLERANCES, VERIFY_DEFAULTS, RunConfig
from src.expansion import factorization_check
from src.polymers import ActivityTable, activity_table
from .base import EXIT_FAILURE, EXIT_OK, BaseCommandMixin, render_json

logger = logging.getLogger(__name__)

VERIFY_TOPIC = 'verify.check'

ActivityHook = Callable[[ActivityTable], ActivityTable]


@dataclass(frozen=True)
class CheckResult:
    """Outcome of one identity check"""
    name: str
    passed: bool
    detail: str = ''


def reversed_labels(n: int) -> Dict[int, int]:
    """Labeling that reverses the vertex order"""
    return {v: n + 1 - v for v in range(1, n + 1)}


def relative_gap(first: complex, second: complex) -> float:
    """|first - second| relative to the larger magnitude, absolute below 1"""
    return abs(first - second) / max(abs(first), abs(second), 1.0)


class VerifyCommands(BaseCommandMixin):
    """Runs every exact identity and publishes each verdict on the verify.check topic"""

    def __init__(self, config: RunConfig, activity_hook: Optional[ActivityHook] = None):
        super().__init__(config)
        self.activity_hook = activity_hook
        self.results: List[CheckResult] = []

    def on_check(self, result: CheckResult):
        """verify.check listener"""
        self.results.append(result)
        if not result.passed:
            logger.warning("Check %s failed: %s", result.name, result.detail)

    def _publish(self, name: str, passed: bool, detail: str = ''):
        pub.sendMessage(VERIFY_TOPIC, result=CheckResult(name, bool(passed), detail))

    def check_factorization(self):
        """Z against single_site_weight^|Lambda| * Xi on the configured volume"""
        system, volume = self.build_system(), self.build_volume()
        table = activity_table(system, volume, len(volume))
        if self.activity_hook is not None:
            table = self.activity_hook(table)
        result = factorization_check(system, volume, table)
        self._publish('factorization', result.passed,
                      f"Z={result.lhs!r} w^n*Xi={result.rhs!r} rel_err={result.rel_err:.3g}")

    def check_penrose(self, rng: np.random.Generator):
        """Connected-graph sum against its tree form, for every root and two labelings"""
        scale = VERIFY_DEFAULTS['weight_scale']
        for n in range(2, VERIFY_DEFAULTS['max_n'] + 1):
            worst = 0.0
            for _ in range(self.config.samples):
                weights = EdgeWeights(n, tuple(rng.uniform(-scale, scale, n * (n - 1) // 2)))
                direct = ursell_sum(n, weights)
                for labels in (None, reversed_labels(n)):
                    for root in range(1, n + 1):
                        tree_form = ursell_sum_penrose(n, weights, labels, root)
                        worst = max(worst, relative_gap(direct, tree_form))
            self._publish(f"penrose[n={n}]", worst <= TOLERANCES['identity_rel'],
                          f"worst relative gap {worst:.3g}")

    def check_tree_graph_bound(self, rng: np.random.Generator):
        """|connected-graph sum| <= e^{Bn} sum_tau prod (1 - e^{-|v|}) on random weights"""
        scale = VERIFY_DEFAULTS['weight_scale']
        for n in range(2, VERIFY_DEFAULTS['max_n'] + 1):
            violations = 0
            for _ in range(self.config.samples):
                weights = EdgeWeights(n, tuple(rng.uniform(-scale, scale, n * (n - 1) // 2)))
                lhs, rhs = tree_graph_bound(n, weights, weights.stability_constant())
                if lhs > rhs * (1 + TOLERANCES['identity_rel']):
                    violations += 1
            self._publish(f"tree_graph_bound[n={n}]", violations == 0,
                          f"{violations} of {self.config.samples} instances violate the bound")

    def cmd_verify(self) -> int:
        """Run the identity suite; exit 0 iff every check passes"""
        self.results = []
        pub.subscribe(self.on_check, VERIFY_TOPIC)
        try:
            rng = np.random.default_rng(self.config.seed)
            self.check_factorization()
            self.check_penrose(rng)
            self.check_tree_graph_bound(rng)
        finally:
            pub.unsubscribe(self.on_check, VERIFY_TOPIC)

        failed = [r for r in self.results if not r.passed]
        report = {
            'passed': not failed,
            'checks': [{'name': r.name, 'passed': r.passed, 'detail': r.detail}
                       for r in self.results],
        }
        self.emit(render_json(report))
        if failed:
            logger.error("Verification failed at %s", failed[0].name)
            return EXIT_FAILURE
        logger.info("All %d checks passed", len(self.results))
        return EXIT_OK
