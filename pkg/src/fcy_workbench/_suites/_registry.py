"""Registry of named verification suites."""

from .._errors import unknown_suite
from ._base import Suite


class SuiteRegistry:
    """Registry for named suites, in registration order."""

    def __init__(self):
        self._suites: dict[str, Suite] = {}

    def register(self, suite: Suite) -> None:
        """Register a suite under its own name, replacing any earlier one."""
        self._suites[suite.name] = suite

    def get(self, name: str) -> Suite:
        """Look up a suite by name."""
        if name not in self._suites:
            raise unknown_suite(name)
        return self._suites[name]

    def list_suites(self) -> list[str]:
        """List registered suite names."""
        return list(self._suites.keys())

    def has_suite(self, name: str) -> bool:
        """Check if a suite name is registered."""
        return name in self._suites


def default_registry() -> SuiteRegistry:
    """All built-in suites."""
    from . import _dynkin, _kronecker, _torsion, _tube, _twist, _wpl

    registry = SuiteRegistry()
    for module in (_dynkin, _tube, _kronecker, _wpl, _twist, _torsion):
        registry.register(module.suite)
    return registry
