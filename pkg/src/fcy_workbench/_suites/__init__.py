"""Verification suites, one module per suite."""

from ._base import Suite, SuiteContext, Task, make_case
from ._registry import SuiteRegistry, default_registry

__all__ = ["Suite", "SuiteContext", "SuiteRegistry", "Task", "default_registry", "make_case"]
